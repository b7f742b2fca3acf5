//! Hand movement analysis over 2D hand-landmark time series.
//!
//! A [`Trajectory`] is the per-frame landmark series of one hand in one
//! video take, in pixel coordinates. From it the crate computes two
//! summary scores of wrist movement that do not change when the footage is
//! rescaled, rotated, mirrored, shifted or resampled:
//!
//! * the L2 norm: mean distance of the wrist from its mean position, and
//! * the combined dispersion `sqrt(sigma_x^2 + sigma_y^2)`,
//!
//! both divided by the hand scale (mean wrist to index-MCP distance).
//!
//! ```
//! use handmotion_core::{ingest, metrics};
//!
//! let mut text = String::from("HLS1 width=1280 height=720 fps=30 label=\"demo\"\n");
//! for (i, x) in [0.0, 2.0].iter().enumerate() {
//!     text.push_str(&format!("{i} 1 0.9"));
//!     for k in 0..21 {
//!         let lx = if k == 5 { x + 1.0 } else { *x };
//!         text.push_str(&format!(" {lx} 0"));
//!     }
//!     text.push('\n');
//! }
//! let t = ingest::parse_landmark_file(text.as_bytes()).unwrap();
//! let summary = metrics::summarize(&t).unwrap();
//! assert_eq!(summary.l2_norm, 1.0);
//! assert_eq!(summary.sigma_combined, 1.0);
//! ```

pub mod error;
pub mod ingest;
pub mod invariance;
pub mod landmark;
pub mod metrics;
pub mod report;
pub mod synth;
pub mod transforms;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use ingest::{parse_landmark_file, serialize_trajectory, trim, TrimSpec};
pub use invariance::{run_selfcheck, Property, SelfCheckOptions, SelfCheckReport};
pub use landmark::{
    detected_frames, validate_trajectory, LandmarkFrame, LandmarkPoint, Trajectory, Validation, Violation, INDEX_MCP,
    LANDMARK_COUNT, WRIST,
};
pub use metrics::{
    analyze, distance_series, hand_scale, l2_norm_metric, mean_position, sd_metric, summarize, windowed_sd_series,
    AxisDeviation, HandScale, MeanPosition, MetricsConfig, MovementReport, MovementSummary, SeriesPoint,
};
pub use report::{AnalysisRecord, OutputFormat};
pub use transforms::{apply_transform, resample_duplicate, PlanarTransform};
