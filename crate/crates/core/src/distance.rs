//! Minimum distance by weight-ordered search, and column-based bounds.
//!
//! The distance is the smallest weight of a Pauli that commutes with every
//! stabilizer (zero syndrome) but is not itself a stabilizer. The search
//! walks weights upward in the fixed enumeration order, so the reported
//! witness is reproducible.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::StabilizerCode;
use crate::degeneracy::{
    classify_with, max_independence_order, ClassifyOptions, ScanMode, Verdict,
};
use crate::enumerate::ErrorEnumerator;
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Exact(usize),
    /// No logical operator of weight up to the search limit.
    ExceedsSearchLimit,
}

impl Distance {
    pub fn value(self) -> Option<usize> {
        match self {
            Distance::Exact(d) => Some(d),
            Distance::ExceedsSearchLimit => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::ExceedsSearchLimit => write!(f, "exceeds_search_limit"),
        }
    }
}

const EXCEEDS: &str = "exceeds_search_limit";

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Exact(d) => s.serialize_u64(*d as u64),
            Distance::ExceedsSearchLimit => s.serialize_str(EXCEEDS),
        }
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(Distance::Exact(n)),
            Raw::Str(s) if s == EXCEEDS => Ok(Distance::ExceedsSearchLimit),
            Raw::Str(s) => Err(serde::de::Error::custom(format!(
                "unexpected distance {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub d: Distance,
    /// A logical operator of weight `d`.
    pub witness: Option<PauliOperator>,
    pub search_limit: usize,
}

/// Exact minimum distance, searching weights `1..=search_limit`.
///
/// A code with `k = 0` has no logical operators: its normalizer equals the
/// stabilizer, so the result is [`Distance::ExceedsSearchLimit`] at once.
pub fn min_distance(code: &StabilizerCode, search_limit: usize) -> Result<DistanceResult> {
    let n = code.n();
    if search_limit > n {
        return Err(Error::OutOfRange {
            name: "search_limit",
            value: search_limit,
            min: 0,
            max: n,
        });
    }
    if code.k() > 0 {
        for w in 1..=search_limit {
            for e in ErrorEnumerator::exact_weight(n, w) {
                if code.syndrome_unchecked(&e).is_zero() && !code.in_stabilizer(&e)? {
                    return Ok(DistanceResult {
                        d: Distance::Exact(w),
                        witness: Some(e),
                        search_limit,
                    });
                }
            }
        }
    }
    Ok(DistanceResult {
        d: Distance::ExceedsSearchLimit,
        witness: None,
        search_limit,
    })
}

/// Distance bounds read off column independence of the check matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnBounds {
    pub t: usize,
    /// Largest `M` with every `M` columns of `[H_X | H_Z]` independent.
    pub max_independence_order: usize,
    /// `2·floor(M/4) + 1`.
    pub lower: usize,
    /// `4t + 1`, attached only when the code is nondegenerate at `t`.
    pub upper: Option<usize>,
    /// `2t + 1` for a CSS code that is nondegenerate at `t` and whose blocks
    /// have every `2t` columns independent but some `2t + 1` dependent.
    pub css_exact: Option<usize>,
}

/// Column-criterion bounds on the distance.
///
/// Every Pauli with zero syndrome picks out a dependent set of at most
/// `2·weight` columns, so if every `M` columns are independent then every
/// normalizer element has weight above `M/2`. The reported lower bound uses
/// the coarser `2·floor(M/4) + 1`, which is `2t + 1` exactly when `M = 4t`.
pub fn column_bounds(code: &StabilizerCode, t: usize, budget: u64) -> Result<ColumnBounds> {
    let h = code.check_matrix();
    let order = max_independence_order(&h.matrix(), budget)?;
    let opts = ClassifyOptions {
        mode: ScanMode::FirstCollision,
        run_criteria: false,
        budget,
    };
    let nondegenerate = classify_with(code, t, &opts)?.verdict == Verdict::Nondegenerate;
    let css_exact = match code.is_css() {
        Some(split) if nondegenerate => {
            let mx = max_independence_order(&split.x_block, budget)?;
            let mz = max_independence_order(&split.z_block, budget)?;
            (mx.min(mz) == 2 * t).then_some(2 * t + 1)
        }
        _ => None,
    };
    Ok(ColumnBounds {
        t,
        max_independence_order: order,
        lower: 2 * (order / 4) + 1,
        upper: nondegenerate.then_some(4 * t + 1),
        css_exact,
    })
}
