//! The lamplighter group `L = Z₂ ≀ Z` under the wreath generators `{a, t}`
//! and the automata generators `{t, ta}`.
//!
//! Elements are lamp configurations with a cursor ([`GroupElement`]). The
//! [`metrics`] module gives closed-form word lengths, canonical geodesics and
//! exact geodesic counts; [`oracle`] certifies them by exhaustive BFS over the
//! Cayley graphs; [`phenomena`] covers dead ends, their depth, and seesaw
//! behaviour.
//!
//! ```
//! use lamplighter::{GenSet, GroupElement, metrics};
//!
//! let e: GroupElement = "bulbs=4,5,6,-1,-6;cursor=-2".parse().unwrap();
//! assert_eq!(metrics::length(&e, GenSet::Automata), 24);
//! assert_eq!(metrics::length(&e, GenSet::Wreath), 27);
//! let word = metrics::build_geodesic(&e, GenSet::Automata);
//! assert_eq!(word.evaluate(), e);
//! ```

pub mod element;
pub mod error;
pub mod generator;
pub mod metrics;
pub mod normal_form;
pub mod oracle;
pub mod phenomena;
pub mod word;

pub use element::GroupElement;
pub use error::{Error, Result};
pub use generator::{GenSet, Generator};
pub use metrics::{Branch, ClosedForm, GeodesicCountReport, LengthReport, WordMetric};
pub use normal_form::{Flavor, NormalForm};
pub use oracle::{BallLimits, BallTable};
pub use word::Word;

/// Bulb positions, cursors and word lengths are supported up to this magnitude.
pub const MAX_POSITION: i64 = 1 << 30;
