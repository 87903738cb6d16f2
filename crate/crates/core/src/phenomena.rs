//! Dead ends, their depth, seesaw elements and the seesaw-like family `w_k`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::generator::{GenSet, Generator};
use crate::metrics::{self, ClosedForm, WordMetric};
use crate::oracle::{escape_depth, BallLimits, BallTable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeadEndReport {
    pub is_dead_end: bool,
    pub length: u64,
    pub depth: u64,
    /// `2·min(i_m, j_l + 1)` for automata elements with the cursor at the
    /// origin and bulbs on both sides.
    pub closed_form_depth: Option<u64>,
}

/// No single generator moves `e` farther from the identity.
pub fn is_dead_end(e: &GroupElement, genset: GenSet) -> bool {
    let n = metrics::length(e, genset);
    genset.letters().iter().all(|&g| metrics::length(&e.apply(g), genset) <= n)
}

/// Automata elements with the cursor at the origin and lit bulbs on both
/// sides are exactly the dead ends; their depth is twice the distance to the
/// nearer extreme.
pub fn characterized_depth(e: &GroupElement, genset: GenSet) -> Option<u64> {
    if genset != GenSet::Automata || e.cursor() != 0 {
        return None;
    }
    let right = e.rightmost()?;
    let left = e.leftmost_depth()? + 1;
    Some(2 * right.min(left) as u64)
}

pub fn dead_end_depth(e: &GroupElement, genset: GenSet) -> DeadEndReport {
    DeadEndReport {
        is_dead_end: is_dead_end(e, genset),
        length: metrics::length(e, genset),
        depth: escape_depth(e, genset),
        closed_form_depth: characterized_depth(e, genset),
    }
}

/// `d_m`: bulbs at `m` and `-m+1`, any pattern strictly between, cursor at 0.
pub fn make_dm(m: i64, pattern: &BTreeSet<i64>) -> Result<GroupElement> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!("d_m needs m >= 1, got {m}")));
    }
    let (low, high) = (1 - m, m);
    if let Some(&position) = pattern.iter().find(|&&p| p <= low || p >= high) {
        return Err(Error::PatternOutOfRange { position, low, high });
    }
    GroupElement::new([low, high].into_iter().chain(pattern.iter().copied()), 0)
}

/// `d_m` with every intermediate bulb lit.
pub fn make_dm_full(m: i64) -> Result<GroupElement> {
    make_dm(m, &(2 - m..m).collect())
}

/// `w_k = a_k a_{-k+1}`.
pub fn make_wk(k: i64) -> Result<GroupElement> {
    make_dm(k, &BTreeSet::new())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeesawReport {
    pub element: GroupElement,
    pub generator: Generator,
    pub swing: u32,
    pub holds: bool,
    pub failing_condition: Option<u8>,
}

fn power(e: &GroupElement, g: Generator, times: u32) -> GroupElement {
    let mut x = e.clone();
    for _ in 0..times {
        x.apply_in_place(g);
    }
    x
}

/// Checks the seesaw conditions for swing `k` with lengths from `metric`.
///
/// Quantifiers range over letters of `X ∪ X⁻¹`: condition 1 excludes `g` and
/// `g⁻¹`, condition 2 excludes only `g`, condition 3 excludes only `g⁻¹`.
pub fn is_seesaw_with<M: WordMetric + ?Sized>(
    metric: &M,
    e: &GroupElement,
    g: Generator,
    k: u32,
) -> Result<SeesawReport> {
    let genset = metric.genset();
    if k == 0 {
        return Err(Error::InvalidParameter("seesaw swing must be at least 1".into()));
    }
    if !g.belongs_to(genset) {
        return Err(Error::ForeignGenerator {
            letter: g.symbol(),
            genset,
        });
    }
    let verdict = |failing: Option<u8>| SeesawReport {
        element: e.clone(),
        generator: g,
        swing: k,
        holds: failing.is_none(),
        failing_condition: failing,
    };

    let n = metric.length(e)?;
    let cond1 = {
        let mut ok = metric.length(&e.apply(g))? + 1 == n && metric.length(&e.apply(g.inverse()))? + 1 == n;
        for &h in genset.letters() {
            if ok && h != g && h != g.inverse() {
                ok = metric.length(&e.apply(h))? >= n;
            }
        }
        ok
    };
    if !cond1 {
        return Ok(verdict(Some(1)));
    }
    for (cond, dir) in [(2u8, g), (3u8, g.inverse())] {
        let mut prev = e.clone();
        let mut prev_len = n;
        for l in 1..=k {
            let cur = prev.apply(dir);
            let cur_len = metric.length(&cur)?;
            if cur_len + 1 != prev_len {
                return Ok(verdict(Some(cond)));
            }
            if l < k {
                for &h in genset.letters() {
                    if h != dir && metric.length(&cur.apply(h))? < cur_len {
                        return Ok(verdict(Some(cond)));
                    }
                }
            }
            prev = cur;
            prev_len = cur_len;
        }
    }
    Ok(verdict(None))
}

/// Seesaw check against the closed-form metric.
pub fn is_seesaw(e: &GroupElement, g: Generator, k: u32, genset: GenSet) -> Result<SeesawReport> {
    is_seesaw_with(&ClosedForm(genset), e, g, k)
}

/// Every (element, letter) pair in the ball that is a seesaw of swing at
/// least `min_swing`, with the swing maximized. Only non-involutive letters are
/// tried; for an involution `g` and `g⁻¹` are the same suffix.
pub fn seesaw_scan(
    genset: GenSet,
    radius: u32,
    min_swing: u32,
    limits: &BallLimits,
) -> Result<Vec<SeesawReport>> {
    let ball = BallTable::build(genset, radius, limits)?;
    let mut found = Vec::new();
    for (e, _) in ball.iter() {
        for &g in genset.letters().iter().filter(|g| !g.is_involution()) {
            let mut best = is_seesaw(&e, g, min_swing, genset)?;
            if !best.holds {
                continue;
            }
            // the descent can't outlast the length itself
            for k in min_swing + 1..=metrics::length(&e, genset) as u32 {
                let next = is_seesaw(&e, g, k, genset)?;
                if !next.holds {
                    break;
                }
                best = next;
            }
            found.push(best);
        }
    }
    Ok(found)
}

/// Lengths seen after `step` moves in one family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepTrace {
    pub step: u32,
    pub sequences: u64,
    pub min_length: u64,
    pub max_length: u64,
    /// Whether one more move from the opposite family raises the length by one
    /// for every sequence. `None` on the last step, where nothing is required.
    pub backtrack_raises: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeesawLikeReport {
    pub k: u32,
    pub element: GroupElement,
    pub length: u64,
    pub condition1: bool,
    pub condition2: bool,
    pub condition3: bool,
    pub right_trace: Vec<StepTrace>,
    pub left_trace: Vec<StepTrace>,
    /// `(s, d(w_k tˢ, w_k t⁻ˢ))` for `1 ≤ s ≤ k`.
    pub divergence: Vec<(u32, u64)>,
}

impl SeesawLikeReport {
    pub fn holds(&self) -> bool {
        self.condition1 && self.condition2 && self.condition3
    }

    pub fn divergence_holds(&self) -> bool {
        self.divergence.iter().all(|&(s, d)| d == 2 * s as u64)
    }
}

pub const MAX_SEESAW_LIKE_K: u32 = 20;

/// Walks every sequence of `k` moves from `family`, checking the descent and,
/// below depth `k`, that each move from `opposite` goes back up.
fn family_descent(
    start: &GroupElement,
    family: [Generator; 2],
    opposite: [Generator; 2],
    k: u32,
) -> (bool, Vec<StepTrace>) {
    let gs = GenSet::Automata;
    let n = metrics::length(start, gs);
    let mut ok = true;
    let mut traces = Vec::with_capacity(k as usize);
    let mut layer = vec![start.clone()];
    for step in 1..=k {
        let next: Vec<GroupElement> = layer
            .iter()
            .flat_map(|x| family.iter().map(move |&g| x.apply(g)))
            .collect();
        let lengths: Vec<u64> = next.iter().map(|x| metrics::length(x, gs)).collect();
        let expected = n - step as u64;
        ok &= lengths.iter().all(|&len| len == expected);
        let backtrack_raises = (step < k).then(|| {
            next.iter()
                .zip(&lengths)
                .all(|(x, &len)| opposite.iter().all(|&h| metrics::length(&x.apply(h), gs) == len + 1))
        });
        ok &= backtrack_raises.unwrap_or(true);
        traces.push(StepTrace {
            step,
            sequences: next.len() as u64,
            min_length: lengths.iter().copied().min().unwrap_or(0),
            max_length: lengths.iter().copied().max().unwrap_or(0),
            backtrack_raises,
        });
        layer = next;
    }
    (ok, traces)
}

/// Exhaustively verifies the seesaw-like behaviour of `w_k` over all `2^l`
/// move sequences from each family.
pub fn seesaw_like_check(k: u32) -> Result<SeesawLikeReport> {
    if k == 0 || k > MAX_SEESAW_LIKE_K {
        return Err(Error::InvalidParameter(format!(
            "k must lie in 1..={MAX_SEESAW_LIKE_K}, got {k}"
        )));
    }
    let gs = GenSet::Automata;
    let w = make_wk(k as i64)?;
    let n = metrics::length(&w, gs);
    let right = [Generator::T, Generator::TA];
    let left = [Generator::TInv, Generator::TAInv];

    let condition1 = gs.letters().iter().all(|&g| metrics::length(&w.apply(g), gs) + 1 == n);
    let (condition2, right_trace) = family_descent(&w, right, left, k);
    let (condition3, left_trace) = family_descent(&w, left, right, k);
    let divergence = (1..=k)
        .map(|s| {
            let ahead = power(&w, Generator::T, s);
            let behind = power(&w, Generator::TInv, s);
            (s, metrics::distance(&ahead, &behind, gs))
        })
        .collect();

    Ok(SeesawLikeReport {
        k,
        element: w,
        length: n,
        condition1,
        condition2,
        condition3,
        right_trace,
        left_trace,
        divergence,
    })
}
