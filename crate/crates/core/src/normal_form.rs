//! Right-first and left-first normal forms over the wreath generators.
//!
//! Both flavors carry the same index data; they differ only in the order the
//! conjugates `a_k = tᵏ a t⁻ᵏ` are written. The bulb at the origin is grouped
//! with the nonpositive side.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::generator::{GenSet, Generator};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    /// `a_{i_1} … a_{i_m} a_{-j_1} … a_{-j_l} tʳ`
    RightFirst,
    /// `a_{-j_1} … a_{-j_l} a_{i_1} … a_{i_m} tʳ`
    LeftFirst,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    /// `0 < i_1 < … < i_m`
    pub pos: Vec<i64>,
    /// `0 ≤ j_1 < … < j_l`, encoding bulbs at `-j`.
    pub nonpos: Vec<i64>,
    pub r: i64,
    pub flavor: Flavor,
}

fn strictly_increasing(xs: &[i64], min: i64) -> bool {
    xs.first().is_none_or(|&x| x >= min) && xs.windows(2).all(|w| w[0] < w[1])
}

impl NormalForm {
    pub fn new(pos: Vec<i64>, nonpos: Vec<i64>, r: i64, flavor: Flavor) -> Result<Self> {
        if !strictly_increasing(&pos, 1) {
            return Err(Error::BadIndexSequence(pos));
        }
        if !strictly_increasing(&nonpos, 0) {
            return Err(Error::BadIndexSequence(nonpos));
        }
        let nf = NormalForm { pos, nonpos, r, flavor };
        // range check happens through the element constructor
        nf.to_element()?;
        Ok(nf)
    }

    pub fn of(e: &GroupElement, flavor: Flavor) -> Self {
        NormalForm {
            pos: e.bulbs().range(1..).copied().collect(),
            nonpos: e.bulbs().range(..=0).rev().map(|p| -p).collect(),
            r: e.cursor(),
            flavor,
        }
    }

    pub fn to_element(&self) -> Result<GroupElement> {
        let bulbs = self.pos.iter().copied().chain(self.nonpos.iter().map(|j| -j));
        GroupElement::new(bulbs, self.r)
    }

    pub fn m(&self) -> usize {
        self.pos.len()
    }

    pub fn l(&self) -> usize {
        self.nonpos.len()
    }

    /// Conjugate indices `k` of the factors `a_k`, in the order this flavor writes them.
    pub fn factor_indices(&self) -> Vec<i64> {
        let right = self.pos.iter().copied();
        let left = self.nonpos.iter().map(|j| -j);
        match self.flavor {
            Flavor::RightFirst => right.chain(left).collect(),
            Flavor::LeftFirst => left.chain(right).collect(),
        }
    }

    /// The literal wreath word `a_k … tʳ` with each `a_k` expanded as `tᵏ a t⁻ᵏ`.
    ///
    /// Not geodesic in general; useful as an independent route to the element.
    pub fn to_wreath_word(&self) -> Word {
        let mut letters = Vec::new();
        let power = |letters: &mut Vec<Generator>, k: i64| {
            let g = if k >= 0 { Generator::T } else { Generator::TInv };
            letters.extend(std::iter::repeat_n(g, k.unsigned_abs() as usize));
        };
        for k in self.factor_indices() {
            power(&mut letters, k);
            letters.push(Generator::A);
            power(&mut letters, -k);
        }
        power(&mut letters, self.r);
        Word::new(GenSet::Wreath, letters).expect("wreath letters only")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factor_indices().iter().map(|k| format!("a_{k}")).collect();
        if self.r != 0 || parts.is_empty() {
            parts.push(format!("t^{}", self.r));
        }
        f.write_str(&parts.join(" "))
    }
}
