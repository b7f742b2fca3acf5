//! Hand movement metrics over the wrist trajectory.
//!
//! Every metric reads only detected frames. Distances are divided by the
//! hand scale `s`, the mean wrist to index-MCP distance, which makes the
//! results independent of resolution and zoom. The dispersion score
//! `sqrt(sigma_x^2 + sigma_y^2)` is the squared-deviation sum in both axes,
//! which a rotation leaves unchanged even though `sigma_x` and `sigma_y`
//! individually move.
//!
//! Means are accumulated relative to the first sample, so a constant series
//! yields exactly zero dispersion.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::landmark::{LandmarkFrame, LandmarkPoint, Trajectory};

/// Hand scales below this many pixels are treated as degenerate.
pub const DEFAULT_SCALE_EPSILON: f64 = 1e-6;

/// Frames per window in the windowed dispersion series.
pub const DEFAULT_WINDOW: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsConfig {
    pub scale_epsilon: f64,
    pub window: usize,
}

impl Default for MetricsConfig {
    fn default() -> Self {
        Self {
            scale_epsilon: DEFAULT_SCALE_EPSILON,
            window: DEFAULT_WINDOW,
        }
    }
}

/// Normalization constant `s` in pixels, with the number of frames it
/// averages over.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HandScale {
    pub s: f64,
    pub frames_used: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeanPosition {
    pub x_bar: f64,
    pub y_bar: f64,
}

/// Per-axis population standard deviations, already divided by `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AxisDeviation {
    pub sigma_x: f64,
    pub sigma_y: f64,
    pub sigma_combined: f64,
}

impl AxisDeviation {
    fn from_axes(sigma_x: f64, sigma_y: f64) -> Self {
        Self {
            sigma_x,
            sigma_y,
            sigma_combined: combine(sigma_x, sigma_y),
        }
    }
}

/// `sqrt(sigma_x^2 + sigma_y^2)`, the rotation-invariant combination.
pub fn combine(sigma_x: f64, sigma_y: f64) -> f64 {
    (sigma_x * sigma_x + sigma_y * sigma_y).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesPoint {
    pub frame_index: u64,
    pub value: f64,
}

/// Whole-trajectory summary: one row of a comparison table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MovementSummary {
    pub l2_norm: f64,
    pub sigma_x: f64,
    pub sigma_y: f64,
    pub sigma_combined: f64,
    pub hand_scale: HandScale,
    pub n_frames: usize,
}

/// Summary plus the plot-ready series.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MovementReport {
    pub summary: MovementSummary,
    pub distance_series: Vec<SeriesPoint>,
    pub window: usize,
    pub window_series: Vec<SeriesPoint>,
}

fn checked_detected(t: &Trajectory) -> Result<Vec<&LandmarkFrame>> {
    t.validate().into_result()?;
    Ok(t.detected_frames())
}

fn scale_of(frames: &[&LandmarkFrame], epsilon: f64) -> Result<HandScale> {
    let total: f64 = frames.iter().map(|f| f.wrist().distance_to(&f.index_mcp())).sum();
    let s = total / frames.len() as f64;
    if s.is_nan() || s < epsilon {
        return Err(Error::DegenerateHandScale { scale: s, epsilon });
    }
    Ok(HandScale {
        s,
        frames_used: frames.len(),
    })
}

fn mean_of<'a>(frames: impl IntoIterator<Item = &'a &'a LandmarkFrame>) -> MeanPosition {
    let mut iter = frames.into_iter().map(|f| f.wrist());
    let Some(origin) = iter.next() else {
        return MeanPosition { x_bar: 0.0, y_bar: 0.0 };
    };
    let (mut dx, mut dy, mut n) = (0.0, 0.0, 1usize);
    for p in iter {
        dx += p.x - origin.x;
        dy += p.y - origin.y;
        n += 1;
    }
    MeanPosition {
        x_bar: origin.x + dx / n as f64,
        y_bar: origin.y + dy / n as f64,
    }
}

/// Normalized population standard deviations of the wrist over `frames`.
fn deviation_of(frames: &[&LandmarkFrame], s: f64) -> AxisDeviation {
    let mean = mean_of(frames);
    let (mut sxx, mut syy) = (0.0, 0.0);
    for f in frames {
        let p = f.wrist();
        sxx += (p.x - mean.x_bar) * (p.x - mean.x_bar);
        syy += (p.y - mean.y_bar) * (p.y - mean.y_bar);
    }
    let n = frames.len() as f64;
    AxisDeviation::from_axes((sxx / n).sqrt() / s, (syy / n).sqrt() / s)
}

fn distances_of(frames: &[&LandmarkFrame], s: f64) -> Vec<SeriesPoint> {
    let mean = mean_of(frames);
    let centre = LandmarkPoint::new(mean.x_bar, mean.y_bar);
    frames
        .iter()
        .map(|f| SeriesPoint {
            frame_index: f.frame_index,
            value: f.wrist().distance_to(&centre) / s,
        })
        .collect()
}

fn mean_value(series: &[SeriesPoint]) -> f64 {
    series.iter().map(|p| p.value).sum::<f64>() / series.len() as f64
}

fn windows_of(frames: &[&LandmarkFrame], s: f64, window: usize) -> Result<Vec<SeriesPoint>> {
    if window < 2 {
        return Err(Error::InvalidWindow(window));
    }
    Ok(frames
        .chunks(window)
        .filter(|chunk| chunk.len() >= 2)
        .map(|chunk| SeriesPoint {
            frame_index: chunk[0].frame_index,
            value: deviation_of(chunk, s).sigma_combined,
        })
        .collect())
}

/// Hand scale with the default degeneracy threshold.
pub fn hand_scale(t: &Trajectory) -> Result<HandScale> {
    hand_scale_with_epsilon(t, DEFAULT_SCALE_EPSILON)
}

pub fn hand_scale_with_epsilon(t: &Trajectory, epsilon: f64) -> Result<HandScale> {
    scale_of(&checked_detected(t)?, epsilon)
}

/// Mean wrist position over detected frames, in pixels.
pub fn mean_position(t: &Trajectory) -> Result<MeanPosition> {
    Ok(mean_of(&checked_detected(t)?))
}

/// Mean normalized distance of the wrist from its mean position.
pub fn l2_norm_metric(t: &Trajectory) -> Result<f64> {
    Ok(mean_value(&distance_series(t)?))
}

/// Normalized population standard deviations of the wrist and their
/// rotation-invariant combination.
pub fn sd_metric(t: &Trajectory) -> Result<AxisDeviation> {
    let frames = checked_detected(t)?;
    let s = scale_of(&frames, DEFAULT_SCALE_EPSILON)?.s;
    Ok(deviation_of(&frames, s))
}

/// Per-frame normalized wrist distance from the mean position.
pub fn distance_series(t: &Trajectory) -> Result<Vec<SeriesPoint>> {
    let frames = checked_detected(t)?;
    let s = scale_of(&frames, DEFAULT_SCALE_EPSILON)?.s;
    Ok(distances_of(&frames, s))
}

/// Combined dispersion over consecutive non-overlapping windows of
/// detected frames, normalized by the whole-trajectory hand scale.
///
/// A trailing window with fewer than two frames is dropped. Each point is
/// labelled with the frame index that opens its window.
pub fn windowed_sd_series(t: &Trajectory, window: usize) -> Result<Vec<SeriesPoint>> {
    if window < 2 {
        return Err(Error::InvalidWindow(window));
    }
    let frames = checked_detected(t)?;
    let s = scale_of(&frames, DEFAULT_SCALE_EPSILON)?.s;
    windows_of(&frames, s, window)
}

/// Whole-trajectory summary with the default configuration.
pub fn summarize(t: &Trajectory) -> Result<MovementSummary> {
    Ok(analyze(t, &MetricsConfig::default())?.summary)
}

/// Computes the summary and both series in one pass over the validated
/// trajectory.
pub fn analyze(t: &Trajectory, config: &MetricsConfig) -> Result<MovementReport> {
    if config.window < 2 {
        return Err(Error::InvalidWindow(config.window));
    }
    let frames = checked_detected(t)?;
    let hand_scale = scale_of(&frames, config.scale_epsilon)?;
    let s = hand_scale.s;

    let distance_series = distances_of(&frames, s);
    let deviation = deviation_of(&frames, s);
    let window_series = windows_of(&frames, s, config.window)?;

    Ok(MovementReport {
        summary: MovementSummary {
            l2_norm: mean_value(&distance_series),
            sigma_x: deviation.sigma_x,
            sigma_y: deviation.sigma_y,
            sigma_combined: deviation.sigma_combined,
            hand_scale,
            n_frames: frames.len(),
        },
        distance_series,
        window: config.window,
        window_series,
    })
}
