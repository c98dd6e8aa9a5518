//! Closed-form sizes the greedy algorithm is guaranteed to reach.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::certificate::{ratio_str, Rational};
use crate::error::{Error, Result};

/// Which formula produced a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundCase {
    /// `d = 4`, `k = 3`.
    D4K3,
    /// `d = 5`, `k = 3`.
    D5K3,
    /// `d >= 6`, `k = 3`.
    D6K3,
    /// `d = 5`, `k = 4`.
    D5K4,
    /// `d >= 6`, `k = 4`.
    D6K4,
    /// `d >= 6`, `k >= 5`: one removal per `k + 1` edges.
    EdgeCount,
    /// Planar, `m = 3n - 6`.
    Planar,
    /// Every face of length at least `g`.
    Girth,
}

impl fmt::Display for BoundCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundCase::D4K3 => "d=4,k=3",
            BoundCase::D5K3 => "d=5,k=3",
            BoundCase::D6K3 => "d>=6,k=3",
            BoundCase::D5K4 => "d=5,k=4",
            BoundCase::D6K4 => "d>=6,k=4",
            BoundCase::EdgeCount => "d>=6,k>=5",
            BoundCase::Planar => "planar",
            BoundCase::Girth => "girth",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub k: usize,
    pub g: Option<usize>,
    #[serde(with = "ratio_str")]
    pub value: Rational,
    pub case_id: BoundCase,
}

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// Bound for a graph with `n` vertices, `m` edges and maximum degree `d`.
///
/// With `girth`, `m` and `d` are ignored and the edge count of a planar graph
/// whose faces all have length at least `g` is used instead.
pub fn bound_calculator(n: usize, m: usize, d: usize, k: usize, girth: Option<usize>) -> Result<BoundReport> {
    let none = || Error::NoCaseApplies { n, m, d, k };
    let (ni, mi, ki) = (n as i64, m as i64, k as i64);
    let report = |value, case_id| BoundReport { n, m, d, k, g: girth, value, case_id };
    if let Some(g) = girth {
        if g < 3 || k < 3 {
            return Err(none());
        }
        let g = g as i64;
        let value = match k {
            3 => Rational::new((25 * g - 60) * ni - 14 * g + 48, 39 * (g - 2)),
            4 => Rational::new((45 * g - 108) * ni - 17 * g + 70, 59 * (g - 2)),
            _ => Rational::new((g * ki - 2 * ki - 2) * ni + 2 * g, (g - 2) * (ki + 1)),
        };
        return Ok(report(value, BoundCase::Girth));
    }
    if d < 4 || k < 3 || k >= d {
        return Err(none());
    }
    let n_ = Rational::from_integer(ni);
    let m_ = Rational::from_integer(mi);
    let (value, case) = match (d, k) {
        (4, 3) => (r(7, 11) * n_ - r(24, 11), BoundCase::D4K3),
        (5, 3) => (r(35, 78) * n_ - r(8, 13), BoundCase::D5K3),
        (_, 3) => (r(10, 13) * n_ - r(5, 39) * m_ - r(8, 13), BoundCase::D6K3),
        (5, 4) => (r(9, 14) * n_ - r(1, 2), BoundCase::D5K4),
        (_, 4) => (r(54, 59) * n_ - r(9, 59) * m_ - r(35, 59), BoundCase::D6K4),
        _ => (n_ - m_ / (ki + 1), BoundCase::EdgeCount),
    };
    Ok(report(value, case))
}

/// Bound for planar graphs on `n` vertices.
pub fn planar_corollary(n: usize, k: usize) -> Result<BoundReport> {
    if k < 3 {
        return Err(Error::KTooSmall(k));
    }
    let (ni, ki) = (n as i64, k as i64);
    let value = match k {
        3 => r(5, 13) * ni + r(2, 13),
        4 => r(27, 59) * ni + r(19, 59),
        _ => r(ki - 2, ki + 1) * ni + r(6, ki + 1),
    };
    Ok(BoundReport { n, m: (3 * n).saturating_sub(6), d: 0, k, g: None, value, case_id: BoundCase::Planar })
}
