//! Independent reference implementations of the movement metrics.
//!
//! Straight transcriptions of the formulas: plain sums divided by `n`,
//! no shifted accumulation, nothing shared with `handmotion_core::metrics`.

#![allow(dead_code)]

use handmotion_core::Trajectory;

pub struct Naive {
    pub s: f64,
    pub x_bar: f64,
    pub y_bar: f64,
    pub l2: f64,
    pub sigma_x: f64,
    pub sigma_y: f64,
    pub sigma_combined: f64,
    pub distances: Vec<(u64, f64)>,
}

/// Frame index, wrist (landmark 0), index MCP (landmark 5).
pub type Sample = (u64, (f64, f64), (f64, f64));

/// One sample per detected frame.
pub fn samples(t: &Trajectory) -> Vec<Sample> {
    let mut out = Vec::new();
    for f in &t.frames {
        if f.detected {
            out.push((
                f.frame_index,
                (f.landmarks[0].x, f.landmarks[0].y),
                (f.landmarks[5].x, f.landmarks[5].y),
            ));
        }
    }
    out
}

pub fn naive_hand_scale(t: &Trajectory) -> f64 {
    let data = samples(t);
    let n = data.len() as f64;
    let mut total = 0.0;
    for (_, (x0, y0), (x5, y5)) in &data {
        total += ((x0 - x5).powi(2) + (y0 - y5).powi(2)).sqrt();
    }
    total / n
}

pub fn naive_mean(points: &[(f64, f64)]) -> (f64, f64) {
    let n = points.len() as f64;
    let mut sx = 0.0;
    let mut sy = 0.0;
    for (x, y) in points {
        sx += x;
        sy += y;
    }
    (sx / n, sy / n)
}

/// Combined population sigma of `points`, divided by `s`.
pub fn naive_sigma(points: &[(f64, f64)], s: f64) -> (f64, f64, f64) {
    let n = points.len() as f64;
    let (x_bar, y_bar) = naive_mean(points);
    let mut vx = 0.0;
    let mut vy = 0.0;
    for (x, y) in points {
        vx += (x - x_bar).powi(2);
        vy += (y - y_bar).powi(2);
    }
    let sigma_x = (vx / n).sqrt() / s;
    let sigma_y = (vy / n).sqrt() / s;
    (sigma_x, sigma_y, (sigma_x.powi(2) + sigma_y.powi(2)).sqrt())
}

pub fn naive(t: &Trajectory) -> Naive {
    let data = samples(t);
    let s = naive_hand_scale(t);
    let wrists: Vec<(f64, f64)> = data.iter().map(|d| d.1).collect();
    let n = wrists.len() as f64;
    let (x_bar, y_bar) = naive_mean(&wrists);

    let mut raw_total = 0.0;
    let mut distances = Vec::new();
    for (idx, (x, y), _) in &data {
        let raw = ((x - x_bar).powi(2) + (y - y_bar).powi(2)).sqrt();
        raw_total += raw;
        distances.push((*idx, raw / s));
    }
    let l2 = raw_total / (n * s);
    let (sigma_x, sigma_y, sigma_combined) = naive_sigma(&wrists, s);

    Naive {
        s,
        x_bar,
        y_bar,
        l2,
        sigma_x,
        sigma_y,
        sigma_combined,
        distances,
    }
}

/// Windowed combined sigma: consecutive blocks of `window` detected
/// frames, trailing block kept only with at least two frames.
pub fn naive_windows(t: &Trajectory, window: usize) -> Vec<(u64, f64)> {
    let data = samples(t);
    let s = naive_hand_scale(t);
    let mut out = Vec::new();
    let mut start = 0;
    while start < data.len() {
        let end = (start + window).min(data.len());
        if end - start >= 2 {
            let pts: Vec<(f64, f64)> = data[start..end].iter().map(|d| d.1).collect();
            out.push((data[start].0, naive_sigma(&pts, s).2));
        }
        start = end;
    }
    out
}

/// Expected number of windows for `n` detected frames.
pub fn expected_window_count(n: usize, window: usize) -> usize {
    n / window + usize::from(n % window >= 2)
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}
