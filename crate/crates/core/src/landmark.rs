//! Landmark trajectory data model.
//!
//! Coordinates are pixels with the origin at the top-left corner of the
//! frame: `x` grows rightward, `y` grows downward. Each frame stores all 21
//! hand landmarks in the MediaPipe Hands numbering, although the movement
//! metrics only read the wrist (0) and the index-finger MCP joint (5).

use std::fmt;

use serde::Serialize;

/// Number of landmarks in one detected hand.
pub const LANDMARK_COUNT: usize = 21;

/// Landmark index of the wrist.
pub const WRIST: usize = 0;

/// Landmark index of the index-finger MCP joint.
pub const INDEX_MCP: usize = 5;

/// A single landmark position in pixel coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct LandmarkPoint {
    pub x: f64,
    pub y: f64,
}

impl LandmarkPoint {
    pub const ORIGIN: LandmarkPoint = LandmarkPoint { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Euclidean distance in pixels.
    pub fn distance_to(&self, other: &LandmarkPoint) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (dx * dx + dy * dy).sqrt()
    }
}

/// One video frame's hand detection.
///
/// When `detected` is false the landmark values are placeholders and no
/// metric reads them.
#[derive(Debug, Clone, PartialEq)]
pub struct LandmarkFrame {
    pub frame_index: u64,
    pub landmarks: [LandmarkPoint; LANDMARK_COUNT],
    pub detected: bool,
    pub confidence: f64,
}

impl LandmarkFrame {
    pub fn detected(frame_index: u64, landmarks: [LandmarkPoint; LANDMARK_COUNT], confidence: f64) -> Self {
        Self {
            frame_index,
            landmarks,
            detected: true,
            confidence,
        }
    }

    /// An undetected frame with all-zero placeholder landmarks.
    pub fn missing(frame_index: u64) -> Self {
        Self {
            frame_index,
            landmarks: [LandmarkPoint::ORIGIN; LANDMARK_COUNT],
            detected: false,
            confidence: 0.0,
        }
    }

    pub fn wrist(&self) -> LandmarkPoint {
        self.landmarks[WRIST]
    }

    pub fn index_mcp(&self) -> LandmarkPoint {
        self.landmarks[INDEX_MCP]
    }
}

/// The landmark series of one hand in one video take.
///
/// `source_width`, `source_height` and `fps` are metadata; metrics never
/// read them.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub frames: Vec<LandmarkFrame>,
    pub source_width: u32,
    pub source_height: u32,
    pub fps: f64,
    pub label: String,
}

/// A broken trajectory invariant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Violation {
    NonMonotoneFrameIndex {
        position: usize,
        previous: u64,
        current: u64,
    },
    NoDetectedFrames,
    NonFiniteCoordinate {
        frame_index: u64,
        landmark: usize,
    },
    ConfidenceOutOfRange {
        frame_index: u64,
        confidence: f64,
    },
    UndetectedWithConfidence {
        frame_index: u64,
        confidence: f64,
    },
    NonPositiveDimensions {
        width: u32,
        height: u32,
    },
    InvalidFps(f64),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonMonotoneFrameIndex {
                position,
                previous,
                current,
            } => write!(
                f,
                "non-monotone frame_index at position {position}: {current} follows {previous}"
            ),
            Violation::NoDetectedFrames => f.write_str("no detected frames"),
            Violation::NonFiniteCoordinate { frame_index, landmark } => {
                write!(f, "non-finite coordinate in frame {frame_index}, landmark {landmark}")
            }
            Violation::ConfidenceOutOfRange {
                frame_index,
                confidence,
            } => write!(f, "confidence {confidence} outside [0, 1] in frame {frame_index}"),
            Violation::UndetectedWithConfidence {
                frame_index,
                confidence,
            } => write!(f, "undetected frame {frame_index} has non-zero confidence {confidence}"),
            Violation::NonPositiveDimensions { width, height } => {
                write!(f, "source dimensions must be positive, got {width}x{height}")
            }
            Violation::InvalidFps(fps) => write!(f, "fps must be positive and finite, got {fps}"),
        }
    }
}

/// Outcome of [`validate_trajectory`]: every violation found, in scan order.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<(), crate::Error> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(crate::Error::InvalidTrajectory(self.violations))
        }
    }
}

/// Checks every trajectory invariant without stopping at the first failure.
pub fn validate_trajectory(t: &Trajectory) -> Validation {
    let mut violations = Vec::new();

    if t.source_width == 0 || t.source_height == 0 {
        violations.push(Violation::NonPositiveDimensions {
            width: t.source_width,
            height: t.source_height,
        });
    }
    if !(t.fps.is_finite() && t.fps > 0.0) {
        violations.push(Violation::InvalidFps(t.fps));
    }

    for (position, pair) in t.frames.windows(2).enumerate() {
        if pair[1].frame_index <= pair[0].frame_index {
            violations.push(Violation::NonMonotoneFrameIndex {
                position: position + 1,
                previous: pair[0].frame_index,
                current: pair[1].frame_index,
            });
        }
    }

    for frame in &t.frames {
        for (landmark, p) in frame.landmarks.iter().enumerate() {
            if !p.is_finite() {
                violations.push(Violation::NonFiniteCoordinate {
                    frame_index: frame.frame_index,
                    landmark,
                });
            }
        }
        if !(0.0..=1.0).contains(&frame.confidence) {
            violations.push(Violation::ConfidenceOutOfRange {
                frame_index: frame.frame_index,
                confidence: frame.confidence,
            });
        } else if !frame.detected && frame.confidence != 0.0 {
            violations.push(Violation::UndetectedWithConfidence {
                frame_index: frame.frame_index,
                confidence: frame.confidence,
            });
        }
    }

    if !t.frames.iter().any(|f| f.detected) {
        violations.push(Violation::NoDetectedFrames);
    }

    Validation { violations }
}

/// Frames with a detected hand, in order. This is the sample every metric
/// averages over.
pub fn detected_frames(t: &Trajectory) -> Vec<&LandmarkFrame> {
    t.frames.iter().filter(|f| f.detected).collect()
}

impl Trajectory {
    pub fn validate(&self) -> Validation {
        validate_trajectory(self)
    }

    pub fn detected_frames(&self) -> Vec<&LandmarkFrame> {
        detected_frames(self)
    }

    pub fn detected_count(&self) -> usize {
        self.frames.iter().filter(|f| f.detected).count()
    }

    /// Detected frames over total frames; 0 for an empty trajectory.
    pub fn detection_rate(&self) -> f64 {
        if self.frames.is_empty() {
            0.0
        } else {
            self.detected_count() as f64 / self.frames.len() as f64
        }
    }
}
