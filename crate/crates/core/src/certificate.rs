//! Solver output: a k-stable set together with the size it was promised to reach.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{degree_in, Graph, VertexSet};

/// Exact rational used for every bound.
pub type Rational = num_rational::Ratio<i64>;

/// Which construction produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    OuterpathLB,
    Outerplanar3LB,
    OuterplanarKLB,
    GreedyRemoval,
    ExactOracle,
}

/// A k-stable set and the lower bound it must meet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub k: usize,
    pub set: VertexSet,
    pub algorithm: Algorithm,
    #[serde(with = "ratio_str")]
    pub guaranteed_size: Rational,
    pub achieved_size: usize,
}

/// Smallest integer not below `r`.
pub fn ceil(r: Rational) -> i64 {
    r.ceil().to_integer()
}

/// `p/q` in lowest terms, `p` alone when `q = 1`.
pub fn format_ratio(r: Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_ratio(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: i64 = p.parse().map_err(|_| bad())?;
    let q: i64 = q.parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub(crate) mod ratio_str {
    use super::{format_ratio, parse_ratio, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_ratio(*r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_ratio(&s).map_err(serde::de::Error::custom)
    }
}

/// Why a certificate does not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OutOfRange(usize),
    SizeMismatch { recorded: usize, actual: usize },
    NotKStable { vertex: usize, degree: usize },
    BelowGuarantee { achieved: usize, required: i64 },
}

impl Certificate {
    /// Packages `set`, failing unless it is k-stable in `g` and meets `guaranteed`.
    pub fn new(
        g: &Graph,
        k: usize,
        set: VertexSet,
        algorithm: Algorithm,
        guaranteed: Rational,
    ) -> Result<Self> {
        let c = Certificate {
            k,
            achieved_size: set.len(),
            set,
            algorithm,
            guaranteed_size: guaranteed,
        };
        match c.violation(g) {
            None => Ok(c),
            Some(v) => Err(Error::Certificate(format!("{v:?}"))),
        }
    }

    /// First broken invariant, checked in the order range, size, degree, guarantee.
    pub fn violation(&self, g: &Graph) -> Option<Violation> {
        if let Some(v) = self.set.max().filter(|&v| v >= g.n()) {
            return Some(Violation::OutOfRange(v));
        }
        if self.set.len() != self.achieved_size {
            return Some(Violation::SizeMismatch {
                recorded: self.achieved_size,
                actual: self.set.len(),
            });
        }
        for v in self.set.iter() {
            let d = degree_in(g, &self.set, v);
            if d > self.k {
                return Some(Violation::NotKStable { vertex: v, degree: d });
            }
        }
        let required = ceil(self.guaranteed_size);
        if (self.achieved_size as i64) < required {
            return Some(Violation::BelowGuarantee { achieved: self.achieved_size, required });
        }
        None
    }

    /// `achieved / n`, or 1 for the empty graph.
    pub fn ratio(&self, n: usize) -> Rational {
        if n == 0 {
            Rational::from_integer(1)
        } else {
            Rational::new(self.achieved_size as i64, n as i64)
        }
    }
}

/// `max(r, 0)`.
pub fn clamp_nonneg(r: Rational) -> Rational {
    if r.is_negative() {
        Rational::zero()
    } else {
        r
    }
}
