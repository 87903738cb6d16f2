//! Words over a generating set and their evaluation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::generator::{GenSet, Generator};
use crate::MAX_POSITION;

/// A finite word in the letters of one generating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    genset: GenSet,
    letters: Vec<Generator>,
}

impl Word {
    pub fn empty(genset: GenSet) -> Self {
        Word {
            genset,
            letters: Vec::new(),
        }
    }

    pub fn new(genset: GenSet, letters: Vec<Generator>) -> Result<Self> {
        if letters.len() > MAX_POSITION as usize {
            return Err(Error::WordTooLong(letters.len()));
        }
        if let Some(&g) = letters.iter().find(|g| !g.belongs_to(genset)) {
            return Err(Error::ForeignGenerator {
                letter: g.symbol(),
                genset,
            });
        }
        Ok(Word { genset, letters })
    }

    /// Parses the compact alphabet (`a t T` or `t T r R`); whitespace is ignored.
    pub fn parse(genset: GenSet, s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                Generator::from_symbol(c)
                    .ok_or_else(|| Error::parse("word", s, format!("unknown letter {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(genset, letters)
    }

    pub fn genset(&self) -> GenSet {
        self.genset
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, g: Generator) -> Result<()> {
        if !g.belongs_to(self.genset) {
            return Err(Error::ForeignGenerator {
                letter: g.symbol(),
                genset: self.genset,
            });
        }
        self.letters.push(g);
        Ok(())
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::new(self.genset, letters)
    }

    pub fn inverse(&self) -> Word {
        Word {
            genset: self.genset,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// Left-to-right fold of the generator actions starting at the identity.
    pub fn evaluate(&self) -> GroupElement {
        let mut e = GroupElement::identity();
        for &g in &self.letters {
            e.apply_in_place(g);
        }
        e
    }

    /// Total exponent sum of the cursor-moving letters.
    pub fn cursor(&self) -> i64 {
        self.letters.iter().map(|g| g.step()).sum()
    }

    /// The `len + 1` states reached after each prefix, starting with the identity.
    pub fn prefix_states(&self) -> Vec<GroupElement> {
        let mut states = Vec::with_capacity(self.letters.len() + 1);
        let mut e = GroupElement::identity();
        states.push(e.clone());
        for &g in &self.letters {
            e.apply_in_place(g);
            states.push(e.clone());
        }
        states
    }

    /// Renders runs of equal letters as powers, e.g. `t^3 (ta)^3 t^-7`.
    pub fn to_power_notation(&self) -> String {
        if self.letters.is_empty() {
            return "e".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut run: Option<(&str, i64)> = None;
        let flush = |run: Option<(&str, i64)>, parts: &mut Vec<String>| {
            if let Some((name, exp)) = run {
                parts.push(if exp == 1 { name.to_string() } else { format!("{name}^{exp}") });
            }
        };
        for &g in &self.letters {
            let (name, sign) = g.base_name();
            run = match run {
                // `a` is an involution so a run never merges into a power of it
                Some((n, e)) if n == name && name != "a" && e.signum() == sign => Some((n, e + sign)),
                other => {
                    flush(other, &mut parts);
                    Some((name, sign))
                }
            };
        }
        flush(run, &mut parts);
        parts.join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.letters {
            write!(f, "{}", g.symbol())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn auto(s: &str) -> Word {
        Word::parse(GenSet::Automata, s).unwrap()
    }

    fn el(bulbs: &[i64], cursor: i64) -> GroupElement {
        GroupElement::new(bulbs.iter().copied(), cursor).unwrap()
    }

    // t^3 (ta)^3 t^-7 (ta)^-1 t^-4 (ta)^-1 t^5
    const SAMPLE_WORD: &str = "tttrrrTTTTTTTRTTTTRttttt";

    #[test]
    fn evaluate_examples() {
        assert!(Word::empty(GenSet::Automata).evaluate().is_identity());
        assert_eq!(auto("Tr").evaluate(), el(&[0], 0));
        assert_eq!(auto("Rt").evaluate(), el(&[0], 0));
        assert_eq!(auto(SAMPLE_WORD).evaluate(), el(&[4, 5, 6, -1, -6], -2));
        assert_eq!(auto(SAMPLE_WORD).len(), 24);
    }

    #[test]
    fn cursor_examples() {
        assert_eq!(Word::empty(GenSet::Wreath).cursor(), 0);
        assert_eq!(auto("tttrrrTTTTTTT").cursor(), -1);
        assert_eq!(auto("Tr").cursor(), 0);
        let w = auto(SAMPLE_WORD);
        assert_eq!(w.cursor(), w.evaluate().cursor());
    }

    #[test]
    fn prefix_state_examples() {
        assert_eq!(Word::empty(GenSet::Automata).prefix_states(), vec![GroupElement::identity()]);
        assert_eq!(
            auto("Tr").prefix_states(),
            vec![GroupElement::identity(), el(&[], -1), el(&[0], 0)]
        );
        assert_eq!(auto(SAMPLE_WORD).prefix_states().len(), 25);
    }

    #[test]
    fn rejects_foreign_letters() {
        assert!(matches!(
            Word::parse(GenSet::Automata, "ta"),
            Err(Error::ForeignGenerator { letter: 'a', .. })
        ));
        assert!(Word::parse(GenSet::Wreath, "tr").is_err());
        assert!(Word::parse(GenSet::Wreath, "t?").is_err());
        let mut w = Word::empty(GenSet::Wreath);
        assert!(w.push(Generator::TA).is_err());
        assert!(w.push(Generator::A).is_ok());
    }

    #[test]
    fn power_notation() {
        assert_eq!(auto(SAMPLE_WORD).to_power_notation(), "t^3 (ta)^3 t^-7 (ta)^-1 t^-4 (ta)^-1 t^5");
        assert_eq!(Word::parse(GenSet::Wreath, "aatTa").unwrap().to_power_notation(), "a a t t^-1 a");
        assert_eq!(Word::empty(GenSet::Wreath).to_power_notation(), "e");
    }

    #[test]
    fn inverse_word_evaluates_to_inverse() {
        let w = auto(SAMPLE_WORD);
        assert_eq!(w.inverse().evaluate(), w.evaluate().inverse());
        assert!(w.concat(&w.inverse()).unwrap().evaluate().is_identity());
    }
}
