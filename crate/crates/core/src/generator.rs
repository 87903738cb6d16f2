//! The two generating sets of the lamplighter group and their letters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which generating set a word or metric refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenSet {
    /// `{a, t}`: toggles and cursor moves are separate letters.
    Wreath,
    /// `{t, ta}`: every letter moves the cursor, `ta` also toggles.
    Automata,
}

impl GenSet {
    pub const ALL: [GenSet; 2] = [GenSet::Wreath, GenSet::Automata];

    /// The generating set `X` itself, without inverses.
    pub fn basis(self) -> &'static [Generator] {
        match self {
            GenSet::Wreath => &[Generator::A, Generator::T],
            GenSet::Automata => &[Generator::T, Generator::TA],
        }
    }

    /// `X ∪ X⁻¹` as distinct letters. `a` is an involution and appears once.
    pub fn letters(self) -> &'static [Generator] {
        match self {
            GenSet::Wreath => &[Generator::A, Generator::T, Generator::TInv],
            GenSet::Automata => &[Generator::T, Generator::TInv, Generator::TA, Generator::TAInv],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GenSet::Wreath => "wreath",
            GenSet::Automata => "automata",
        }
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "wreath" | "at" | "standard" => Ok(GenSet::Wreath),
            "automata" | "automaton" | "tta" => Ok(GenSet::Automata),
            _ => Err(Error::parse("generating set", s, "expected `wreath` or `automata`")),
        }
    }
}

/// A single letter over either generating set.
///
/// The compact alphabet is `a`, `t`, `T` (= t⁻¹), `r` (= ta) and `R` (= (ta)⁻¹).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    A,
    T,
    TInv,
    TA,
    TAInv,
}

impl Generator {
    pub fn inverse(self) -> Generator {
        match self {
            Generator::A => Generator::A,
            Generator::T => Generator::TInv,
            Generator::TInv => Generator::T,
            Generator::TA => Generator::TAInv,
            Generator::TAInv => Generator::TA,
        }
    }

    pub fn is_involution(self) -> bool {
        self == self.inverse()
    }

    pub fn belongs_to(self, genset: GenSet) -> bool {
        genset.letters().contains(&self)
    }

    /// Signed cursor displacement of this letter.
    pub fn step(self) -> i64 {
        match self {
            Generator::A => 0,
            Generator::T | Generator::TA => 1,
            Generator::TInv | Generator::TAInv => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::T => 't',
            Generator::TInv => 'T',
            Generator::TA => 'r',
            Generator::TAInv => 'R',
        }
    }

    pub fn from_symbol(c: char) -> Option<Generator> {
        Some(match c {
            'a' => Generator::A,
            't' => Generator::T,
            'T' => Generator::TInv,
            'r' => Generator::TA,
            'R' => Generator::TAInv,
            _ => return None,
        })
    }

    /// Base name without exponent, used when rendering powers.
    pub(crate) fn base_name(self) -> (&'static str, i64) {
        match self {
            Generator::A => ("a", 1),
            Generator::T => ("t", 1),
            Generator::TInv => ("t", -1),
            Generator::TA => ("(ta)", 1),
            Generator::TAInv => ("(ta)", -1),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Generator::A => "a",
            Generator::T => "t",
            Generator::TInv => "t^-1",
            Generator::TA => "ta",
            Generator::TAInv => "(ta)^-1",
        };
        f.write_str(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_pair_up() {
        for g in [Generator::A, Generator::T, Generator::TInv, Generator::TA, Generator::TAInv] {
            assert_eq!(g.inverse().inverse(), g);
            assert_eq!(g.step(), -g.inverse().step());
        }
        assert!(Generator::A.is_involution());
        assert!(!Generator::TA.is_involution());
    }

    #[test]
    fn letters_are_closed_under_inverse() {
        for gs in GenSet::ALL {
            for g in gs.letters() {
                assert!(g.inverse().belongs_to(gs));
            }
        }
        assert!(!Generator::A.belongs_to(GenSet::Automata));
        assert!(!Generator::TA.belongs_to(GenSet::Wreath));
    }

    #[test]
    fn symbols_round_trip() {
        for g in [Generator::A, Generator::T, Generator::TInv, Generator::TA, Generator::TAInv] {
            assert_eq!(Generator::from_symbol(g.symbol()), Some(g));
        }
        assert_eq!(Generator::from_symbol('x'), None);
    }

    #[test]
    fn genset_parses() {
        assert_eq!("automata".parse::<GenSet>().unwrap(), GenSet::Automata);
        assert_eq!("Wreath".parse::<GenSet>().unwrap(), GenSet::Wreath);
        assert!("free".parse::<GenSet>().is_err());
    }
}
