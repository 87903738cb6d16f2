//! Group elements as lamp configurations plus a cursor.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::generator::Generator;
use crate::MAX_POSITION;

/// An element of `Z₂ ≀ Z`: a finite set of lit bulbs and the cursor position.
///
/// The canonical literal is `bulbs=<p1,p2,...|none>;cursor=<c>` with bulbs
/// listed in increasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    bulbs: BTreeSet<i64>,
    cursor: i64,
}

fn check_position(p: i64) -> Result<i64> {
    if p.unsigned_abs() > MAX_POSITION as u64 {
        Err(Error::PositionOutOfRange(p))
    } else {
        Ok(p)
    }
}

impl GroupElement {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds an element from distinct bulb positions and a cursor.
    pub fn new(bulbs: impl IntoIterator<Item = i64>, cursor: i64) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in bulbs {
            if !set.insert(check_position(p)?) {
                return Err(Error::DuplicateBulb(p));
            }
        }
        Ok(GroupElement {
            bulbs: set,
            cursor: check_position(cursor)?,
        })
    }

    /// The conjugate `a_k = tᵏ a t⁻ᵏ`: a single lit bulb at `k`, cursor at the origin.
    pub fn lamp(k: i64) -> Self {
        GroupElement {
            bulbs: BTreeSet::from([k]),
            cursor: 0,
        }
    }

    /// Pure cursor translation `tʳ`.
    pub fn shift(r: i64) -> Self {
        GroupElement {
            bulbs: BTreeSet::new(),
            cursor: r,
        }
    }

    pub fn bulbs(&self) -> &BTreeSet<i64> {
        &self.bulbs
    }

    pub fn cursor(&self) -> i64 {
        self.cursor
    }

    pub fn is_lit(&self, p: i64) -> bool {
        self.bulbs.contains(&p)
    }

    pub fn is_identity(&self) -> bool {
        self.cursor == 0 && self.bulbs.is_empty()
    }

    /// Number of lit bulbs at positive positions (`m`).
    pub fn positive_count(&self) -> usize {
        self.bulbs.range(1..).count()
    }

    /// Number of lit bulbs at positions `≤ 0` (`l`).
    pub fn nonpositive_count(&self) -> usize {
        self.bulbs.range(..=0).count()
    }

    /// Rightmost lit positive position (`i_m`), if any.
    pub fn rightmost(&self) -> Option<i64> {
        self.bulbs.last().copied().filter(|&p| p > 0)
    }

    /// Depth `j_l` of the leftmost lit bulb at or left of the origin, i.e. the bulb sits at `-j_l`.
    pub fn leftmost_depth(&self) -> Option<i64> {
        self.bulbs.first().copied().filter(|&p| p <= 0).map(|p| -p)
    }

    /// Flips the bulb at `p`.
    pub fn toggle(&mut self, p: i64) {
        if !self.bulbs.remove(&p) {
            self.bulbs.insert(p);
        }
    }

    /// Right multiplication by a single generator.
    pub fn apply(&self, g: Generator) -> GroupElement {
        let mut next = self.clone();
        next.apply_in_place(g);
        next
    }

    pub fn apply_in_place(&mut self, g: Generator) {
        match g {
            Generator::A => self.toggle(self.cursor),
            Generator::T => self.cursor += 1,
            Generator::TInv => self.cursor -= 1,
            Generator::TA => {
                self.cursor += 1;
                self.toggle(self.cursor);
            }
            Generator::TAInv => {
                self.toggle(self.cursor);
                self.cursor -= 1;
            }
        }
    }

    /// Group product `self · other`: the lamps of `other` are read relative to our cursor.
    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        let mut bulbs = self.bulbs.clone();
        for &p in &other.bulbs {
            let q = p + self.cursor;
            if !bulbs.remove(&q) {
                bulbs.insert(q);
            }
        }
        GroupElement {
            bulbs,
            cursor: self.cursor + other.cursor,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            bulbs: self.bulbs.iter().map(|p| p - self.cursor).collect(),
            cursor: -self.cursor,
        }
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: &GroupElement) -> GroupElement {
        self.multiply(rhs)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("bulbs=")?;
        if self.bulbs.is_empty() {
            f.write_str("none")?;
        } else {
            for (i, p) in self.bulbs.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
        }
        write!(f, ";cursor={}", self.cursor)
    }
}

/// Parses a comma-separated bulb list; `none` or an empty string is the empty set.
pub fn parse_bulb_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() || s.eq_ignore_ascii_case("none") {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|e| Error::parse("bulb list", s, format!("{tok:?}: {e}")))
        })
        .collect()
}

impl FromStr for GroupElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bulbs = None;
        let mut cursor = None;
        for part in s.split(';') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::parse("element", s, "expected `key=value` fields"))?;
            match key.trim() {
                "bulbs" if bulbs.is_none() => bulbs = Some(parse_bulb_list(value)?),
                "cursor" if cursor.is_none() => {
                    cursor = Some(value.trim().parse::<i64>().map_err(|e| {
                        Error::parse("element", s, format!("cursor: {e}"))
                    })?)
                }
                other => return Err(Error::parse("element", s, format!("unexpected field {other:?}"))),
            }
        }
        match (bulbs, cursor) {
            (Some(b), Some(c)) => GroupElement::new(b, c),
            _ => Err(Error::parse("element", s, "both `bulbs` and `cursor` are required")),
        }
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(bulbs: &[i64], cursor: i64) -> GroupElement {
        GroupElement::new(bulbs.iter().copied(), cursor).unwrap()
    }

    #[test]
    fn generator_actions() {
        let id = GroupElement::identity();
        assert_eq!(id.apply(Generator::T), el(&[], 1));
        assert_eq!(id.apply(Generator::TA), el(&[1], 1));
        assert_eq!(id.apply(Generator::TAInv), el(&[0], -1));
        assert_eq!(id.apply(Generator::A), el(&[0], 0));
    }

    #[test]
    fn multiply_examples() {
        let x = el(&[4, 5, 6, -1, -6], -2);
        assert_eq!(x.multiply(&GroupElement::identity()), x);
        let a = el(&[0], 0);
        assert!(a.multiply(&a).is_identity());
        let ta = el(&[1], 1);
        assert_eq!(&ta * &ta, el(&[1, 2], 2));
    }

    #[test]
    fn inverse_examples() {
        assert!(GroupElement::identity().inverse().is_identity());
        assert_eq!(el(&[1], 1).inverse(), el(&[0], -1));
        let x = el(&[4, 5, 6, -1, -6], -2);
        assert_eq!(x.inverse(), el(&[6, 7, 8, 1, -4], 2));
        assert!(x.multiply(&x.inverse()).is_identity());
    }

    #[test]
    fn extents() {
        let x = el(&[4, 5, 6, -1, -6], -2);
        assert_eq!(x.positive_count(), 3);
        assert_eq!(x.nonpositive_count(), 2);
        assert_eq!(x.rightmost(), Some(6));
        assert_eq!(x.leftmost_depth(), Some(6));
        let a = el(&[0], 0);
        assert_eq!(a.rightmost(), None);
        assert_eq!(a.leftmost_depth(), Some(0));
        assert_eq!(el(&[3], 0).leftmost_depth(), None);
    }

    #[test]
    fn literal_round_trip() {
        let x = el(&[4, 5, 6, -1, -6], -2);
        let s = x.to_string();
        assert_eq!(s, "bulbs=-6,-1,4,5,6;cursor=-2");
        assert_eq!(s.parse::<GroupElement>().unwrap(), x);
        assert_eq!(GroupElement::identity().to_string(), "bulbs=none;cursor=0");
        assert_eq!("bulbs=none;cursor=0".parse::<GroupElement>().unwrap(), GroupElement::identity());
        assert_eq!(" cursor = 3 ; bulbs = 2, -1".parse::<GroupElement>().unwrap(), el(&[-1, 2], 3));
    }

    #[test]
    fn literal_errors() {
        assert!("bulbs=1,1;cursor=0".parse::<GroupElement>().is_err());
        assert!("bulbs=1".parse::<GroupElement>().is_err());
        assert!("bulbs=x;cursor=0".parse::<GroupElement>().is_err());
        assert!("bulbs=1;cursor=0;cursor=1".parse::<GroupElement>().is_err());
        assert!(matches!(
            GroupElement::new([1 << 31], 0),
            Err(Error::PositionOutOfRange(_))
        ));
    }
}
