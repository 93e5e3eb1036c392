//! Crate-wide error type and exit-code mapping.

use thiserror::Error;

/// Everything that can go wrong between reading a vote file and writing a ranking.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input data, with the 1-based line it was found on.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A raw vote code outside the 0–9 range.
    #[error("invalid vote code {0}: expected an integer in 0..=9")]
    InvalidVoteCode(u32),

    /// Two vectors or a vector/matrix pair whose lengths do not agree.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// An operation that needs more members than the input provides.
    #[error("need at least {min} members, got {got}")]
    InsufficientMembers { got: usize, min: usize },

    /// A structurally invalid matrix handed to a constructor.
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    /// Filter threshold outside (0.5, 1.0].
    #[error("filter threshold {0} is outside (0.5, 1.0]")]
    InvalidThreshold(f64),

    /// Synthetic-data flip probability outside [0, 0.5).
    #[error("flip probability {0} is outside [0, 0.5)")]
    InvalidFlipProbability(f64),

    /// Synthetic-data size parameter that must be at least 1.
    #[error("{what} must be at least 1")]
    EmptySyntheticDimension { what: &'static str },

    /// An anchor index that does not address any member.
    #[error("anchor index {index} is out of range for {n} members")]
    AnchorIndexOutOfRange { index: usize, n: usize },

    /// Fewer than two anchors.
    #[error("an anchor set needs at least two entries")]
    TooFewAnchors,

    /// An anchor set without both a positive and a negative score.
    #[error("anchor scores must include at least one positive and one negative value")]
    DegenerateAnchors,

    /// An anchor score outside [-1, +1].
    #[error("anchor score {0} is outside [-1, +1]")]
    AnchorScoreOutOfRange(f64),

    /// The same member anchored twice.
    #[error("duplicate anchor for member {0}")]
    DuplicateAnchor(String),

    /// An anchor query that resolves to no roster member.
    #[error("no member matches '{query}'{}", suggestions_suffix(.suggestions))]
    AnchorNotFound {
        query: String,
        suggestions: Vec<String>,
    },

    /// An anchor query that resolves to more than one roster member.
    #[error("'{query}' is ambiguous (matches {}); anchor by id instead", .matches.join(", "))]
    AmbiguousAnchor { query: String, matches: Vec<String> },

    /// A malformed `NAME_OR_ID=SCORE` anchor argument.
    #[error("invalid anchor spec '{0}': expected NAME_OR_ID=SCORE with SCORE in [-1, +1]")]
    InvalidAnchorSpec(String),

    /// Orientation member that is not part of the least-similar pair.
    #[error("orientation member {requested} is not in the least-similar pair ({a}, {b})")]
    OrientationNotInPair {
        requested: usize,
        a: usize,
        b: usize,
    },

    /// The unlabeled block of the Laplacian could not be solved.
    #[error(
        "singular system while solving for unlabeled scores{}: check that every \
         unlabeled member has positive total weight to the rest of the graph",
        detail_suffix(.detail)
    )]
    SingularSystem { detail: String },

    /// Two rankings over different member sets.
    #[error("rankings cover different member sets and cannot be compared")]
    MemberSetMismatch,

    /// A rank correlation whose denominator vanishes (all scores tied).
    #[error("rank correlation is undefined: {0}")]
    CorrelationUndefined(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn suggestions_suffix(suggestions: &[String]) -> String {
    if suggestions.is_empty() {
        String::new()
    } else {
        format!(" (closest: {})", suggestions.join(", "))
    }
}

fn detail_suffix(detail: &str) -> String {
    if detail.is_empty() {
        String::new()
    } else {
        format!(" ({detail})")
    }
}

impl Error {
    /// Process exit code for the CLI: 2 for parse/validation trouble,
    /// 3 for numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SingularSystem { .. } | Error::CorrelationUndefined(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_split_validation_from_numerics() {
        let parse = Error::Parse {
            line: 3,
            msg: "bad".into(),
        };
        assert_eq!(parse.exit_code(), 2);
        let singular = Error::SingularSystem {
            detail: String::new(),
        };
        assert_eq!(singular.exit_code(), 3);
    }

    #[test]
    fn not_found_error_lists_suggestions() {
        let err = Error::AnchorNotFound {
            query: "FINEGOLD".into(),
            suggestions: vec!["FEINGOLD".into()],
        };
        let msg = err.to_string();
        assert!(msg.contains("FINEGOLD"));
        assert!(msg.contains("FEINGOLD"));
    }
}
