use thiserror::Error;

use crate::generator::GenSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("position {0} is outside the supported range ±{max}", max = crate::MAX_POSITION)]
    PositionOutOfRange(i64),

    #[error("word of {0} letters exceeds the supported length {max}", max = crate::MAX_POSITION)]
    WordTooLong(usize),

    #[error("bulb {0} is listed more than once")]
    DuplicateBulb(i64),

    #[error("normal form index sequence {0:?} is not strictly increasing or has the wrong sign")]
    BadIndexSequence(Vec<i64>),

    #[error("generator {letter} does not belong to the {genset} generating set")]
    ForeignGenerator { letter: char, genset: GenSet },

    #[error("element of length {length} exceeds the geodesic counting budget {budget}")]
    BudgetExceeded { length: u64, budget: u64 },

    #[error("radius {radius} exceeds the configured maximum {max}")]
    RadiusTooLarge { radius: u32, max: u32 },

    #[error("ball exceeds the configured cap of {max} entries")]
    BallTooLarge { max: usize },

    #[error("element {0} lies outside the ball of radius {1}")]
    OutOfBall(String, u32),

    #[error("pattern position {position} is not strictly between {low} and {high}")]
    PatternOutOfRange { position: i64, low: i64, high: i64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// True for failures caused by configured resource limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::RadiusTooLarge { .. } | Error::BallTooLarge { .. }
        )
    }

    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
