//! Seeded synthetic hand trajectories for tests, benchmarks and fixtures.
//!
//! The generated hand is a rigid 21-point template that drifts, wobbles and
//! breathes in size over time, with per-landmark jitter and random
//! detection dropouts.

use std::f64::consts::TAU;

use rand::Rng;

use crate::landmark::{LandmarkFrame, LandmarkPoint, Trajectory, LANDMARK_COUNT};

/// Landmark offsets in hand-size units, wrist at the origin and the index
/// MCP at (1, 0).
const TEMPLATE: [(f64, f64); LANDMARK_COUNT] = [
    (0.0, 0.0),
    (0.35, 0.45),
    (0.65, 0.75),
    (0.9, 0.95),
    (1.1, 1.1),
    (1.0, 0.0),
    (1.45, 0.0),
    (1.75, 0.0),
    (2.0, 0.0),
    (0.95, -0.25),
    (1.45, -0.3),
    (1.8, -0.32),
    (2.05, -0.34),
    (0.85, -0.5),
    (1.3, -0.58),
    (1.6, -0.62),
    (1.82, -0.66),
    (0.72, -0.72),
    (1.05, -0.85),
    (1.27, -0.93),
    (1.45, -1.0),
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthOptions {
    pub frames: usize,
    pub width: u32,
    pub height: u32,
    pub fps: f64,
    /// Probability that a frame after the first two is undetected.
    pub dropout: f64,
}

impl Default for SynthOptions {
    fn default() -> Self {
        Self {
            frames: 300,
            width: 1280,
            height: 720,
            fps: 30.0,
            dropout: 0.05,
        }
    }
}

/// Generates a valid trajectory with at least two detected frames.
pub fn random_trajectory<R: Rng + ?Sized>(rng: &mut R, opts: &SynthOptions) -> Trajectory {
    let (w, h) = (opts.width as f64, opts.height as f64);
    let centre = (rng.random_range(0.3..0.7) * w, rng.random_range(0.3..0.7) * h);
    let hand_size = rng.random_range(0.08..0.25) * h;
    let heading = rng.random_range(0.0..TAU);

    // A few low-frequency sinusoids per axis give a smooth, non-periodic path.
    let waves: Vec<(f64, f64, f64, f64)> = (0..3)
        .map(|_| {
            (
                rng.random_range(0.2..1.2) * hand_size,
                rng.random_range(0.2..1.2) * hand_size,
                rng.random_range(0.005..0.15),
                rng.random_range(0.0..TAU),
            )
        })
        .collect();
    let wobble = rng.random_range(0.05..0.6);
    let breathe = rng.random_range(0.0..0.15);
    let jitter = rng.random_range(0.001..0.02) * hand_size;

    let mut frames = Vec::with_capacity(opts.frames);
    let mut index = rng.random_range(0..50u64);
    for i in 0..opts.frames {
        index += if rng.random_bool(0.9) {
            1
        } else {
            rng.random_range(2..5)
        };
        if i >= 2 && rng.random_bool(opts.dropout.clamp(0.0, 1.0)) {
            frames.push(LandmarkFrame::missing(index));
            continue;
        }
        let t = i as f64;
        let (mut x, mut y) = centre;
        for &(ax, ay, freq, phase) in &waves {
            x += ax * (freq * t + phase).sin();
            y += ay * (1.3 * freq * t + phase).cos();
        }
        let angle = heading + wobble * (0.03 * t).sin();
        let size = hand_size * (1.0 + breathe * (0.02 * t + 1.0).sin());
        let (sin, cos) = angle.sin_cos();
        let landmarks = TEMPLATE.map(|(u, v)| {
            LandmarkPoint::new(
                x + size * (cos * u - sin * v) + rng.random_range(-jitter..jitter),
                y + size * (sin * u + cos * v) + rng.random_range(-jitter..jitter),
            )
        });
        frames.push(LandmarkFrame::detected(index, landmarks, rng.random_range(0.5..1.0)));
    }

    Trajectory {
        frames,
        source_width: opts.width,
        source_height: opts.height,
        fps: opts.fps,
        label: format!("synthetic-{}", opts.frames),
    }
}
