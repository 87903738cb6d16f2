//! Closed-form word lengths under both generating sets.
//!
//! With `m`, `l` the number of lit bulbs on the positive and nonpositive
//! sides, `i_m` the rightmost positive bulb, `-j_l` the leftmost
//! nonpositive bulb and `r` the cursor:
//!
//! ```text
//! wreath:   m + l + min{ 2 j_l + i_m + |r - i_m|,  2 i_m + j_l + |r + j_l| }
//! automata: i_m + |r - i_m|                                   (l = 0)
//!           min{ 2 (j_l+1) + i_m + |r - i_m|,  2 i_m + (j_l+1) + |r + j_l + 1| }
//! ```
//!
//! An empty side contributes `0` to its extreme. Under the automata
//! generators every toggle of bulb `p` happens while the cursor crosses the
//! edge `(p-1, p)`, which is why the left extreme moves one further out.

mod geodesic;

pub use geodesic::{
    build_geodesic, canonical_trajectory, check_left_light, count_geodesics, GeodesicCountReport,
    Trajectory, DEFAULT_COUNT_BUDGET,
};

use serde::{Deserialize, Serialize};

use crate::element::GroupElement;
use crate::error::Result;
use crate::generator::GenSet;

/// Which sweep realizes the minimum in the length formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// Visit the rightmost bulb first, then the left extreme, then the cursor.
    RightFirst,
    /// Visit the left extreme first.
    LeftFirst,
    /// Both sweeps have the same length.
    Both,
    /// Nothing to light at or left of the origin (automata set only): a single sweep.
    SingleSide,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthReport {
    pub value: u64,
    pub branch: Branch,
    pub genset: GenSet,
    /// Length of the left-first sweep, when the formula has two terms.
    pub left_first: Option<u64>,
    /// Length of the right-first sweep, when the formula has two terms.
    pub right_first: Option<u64>,
}

impl LengthReport {
    fn two_terms(genset: GenSet, left_first: i64, right_first: i64) -> Self {
        let branch = match left_first.cmp(&right_first) {
            std::cmp::Ordering::Less => Branch::LeftFirst,
            std::cmp::Ordering::Greater => Branch::RightFirst,
            std::cmp::Ordering::Equal => Branch::Both,
        };
        LengthReport {
            value: left_first.min(right_first) as u64,
            branch,
            genset,
            left_first: Some(left_first as u64),
            right_first: Some(right_first as u64),
        }
    }
}

/// Word length with respect to `{a, t}`.
pub fn wreath_length(e: &GroupElement) -> LengthReport {
    let toggles = (e.positive_count() + e.nonpositive_count()) as i64;
    let right = e.rightmost().unwrap_or(0);
    let left = e.leftmost_depth().unwrap_or(0);
    let r = e.cursor();
    LengthReport::two_terms(
        GenSet::Wreath,
        toggles + 2 * left + right + (r - right).abs(),
        toggles + 2 * right + left + (r + left).abs(),
    )
}

/// Word length with respect to `{t, ta}`.
pub fn automata_length(e: &GroupElement) -> LengthReport {
    let right = e.rightmost().unwrap_or(0);
    let r = e.cursor();
    match e.leftmost_depth() {
        None => LengthReport {
            value: (right + (r - right).abs()) as u64,
            branch: Branch::SingleSide,
            genset: GenSet::Automata,
            left_first: None,
            right_first: None,
        },
        Some(depth) => {
            // the cursor has to reach -(j_l + 1) to toggle the bulb at -j_l
            let left = depth + 1;
            LengthReport::two_terms(
                GenSet::Automata,
                2 * left + right + (r - right).abs(),
                2 * right + left + (r + left).abs(),
            )
        }
    }
}

pub fn length_report(e: &GroupElement, genset: GenSet) -> LengthReport {
    match genset {
        GenSet::Wreath => wreath_length(e),
        GenSet::Automata => automata_length(e),
    }
}

pub fn length(e: &GroupElement, genset: GenSet) -> u64 {
    length_report(e, genset).value
}

/// Word metric `d(x, y) = |x⁻¹ y|`.
pub fn distance(x: &GroupElement, y: &GroupElement, genset: GenSet) -> u64 {
    length(&x.inverse().multiply(y), genset)
}

/// Anything that can report word lengths: the closed forms or an exhaustive ball.
pub trait WordMetric {
    fn genset(&self) -> GenSet;

    fn length(&self, e: &GroupElement) -> Result<u64>;
}

/// The closed-form metric for one generating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedForm(pub GenSet);

impl WordMetric for ClosedForm {
    fn genset(&self) -> GenSet {
        self.0
    }

    fn length(&self, e: &GroupElement) -> Result<u64> {
        Ok(length(e, self.0))
    }
}
