use thiserror::Error;

use crate::landmark::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid trajectory: {}", join_violations(.0))]
    InvalidTrajectory(Vec<Violation>),

    #[error("degenerate hand scale: mean wrist to index-MCP distance {scale} px is below {epsilon} px")]
    DegenerateHandScale { scale: f64, epsilon: f64 },

    #[error("empty after trim: no detected frames in [{start}, {end})")]
    EmptyAfterTrim { start: String, end: String },

    #[error("invalid trim window: start {start} must be below end {end}")]
    InvalidTrim { start: u64, end: u64 },

    #[error("window must be at least 2 frames, got {0}")]
    InvalidWindow(usize),

    #[error("duplication factor must be at least 1")]
    InvalidDuplication,

    #[error("invalid transform: {0}")]
    InvalidTransform(String),

    #[error("selfcheck needs at least one trial")]
    NoTrials,
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// A landmark-file format error, located by 1-based line number.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("input is not valid UTF-8")]
    InvalidUtf8,
    #[error("missing HLS1 header")]
    MissingHeader,
    #[error("bad magic: expected `HLS1`, found `{0}`")]
    BadMagic(String),
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("missing header field `{0}`")]
    MissingField(&'static str),
    #[error("expected 21 landmarks (42 coordinates), found {0} coordinate fields")]
    LandmarkCount(usize),
    #[error("record is missing the {0} field")]
    TruncatedRecord(&'static str),
    #[error("invalid {field} `{value}`")]
    BadNumber { field: &'static str, value: String },
    #[error("detected flag must be 0 or 1, found `{0}`")]
    BadDetectedFlag(String),
    #[error("non-finite coordinate `{0}`")]
    NonFinite(String),
    #[error("confidence {0} outside [0, 1]")]
    ConfidenceOutOfRange(f64),
    #[error("undetected frame has non-zero confidence {0}")]
    UndetectedWithConfidence(f64),
    #[error("non-monotone frame_index: {current} follows {previous}")]
    NonMonotone { previous: u64, current: u64 },
    #[error("no detected frames")]
    NoDetectedFrames,
}
