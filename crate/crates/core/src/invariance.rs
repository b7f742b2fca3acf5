//! Randomized invariance self-check.
//!
//! Applies seeded random similarity transforms and frame duplications to a
//! trajectory and measures how far the summary metrics move. The whole
//! suite passes when every property's worst relative deviation stays
//! within the tolerance.

use std::f64::consts::PI;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::landmark::{LandmarkPoint, Trajectory};
use crate::metrics::{summarize, MovementSummary};
use crate::transforms::{apply_transform, resample_duplicate, PlanarTransform};

pub const DEFAULT_TRIALS: usize = 25;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_SEED: u64 = 20_220_214;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelfCheckOptions {
    pub trials: usize,
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for SelfCheckOptions {
    fn default() -> Self {
        Self {
            trials: DEFAULT_TRIALS,
            tolerance: DEFAULT_TOLERANCE,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Scale,
    Rotation,
    Translation,
    Reflection,
    Duplication,
    CauchySchwarz,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Scale,
        Property::Rotation,
        Property::Translation,
        Property::Reflection,
        Property::Duplication,
        Property::CauchySchwarz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Scale => "scale",
            Property::Rotation => "rotation",
            Property::Translation => "translation",
            Property::Reflection => "reflection",
            Property::Duplication => "duplication",
            Property::CauchySchwarz => "cauchy_schwarz",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PropertyResult {
    pub property: Property,
    pub max_deviation: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelfCheckReport {
    pub seed: u64,
    pub trials: usize,
    pub tolerance: f64,
    pub baseline: MovementSummary,
    pub properties: Vec<PropertyResult>,
}

impl SelfCheckReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    pub fn get(&self, property: Property) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.property == property)
    }
}

/// `|a - b| / max(|a|, |b|)`, and 0 when `a == b`.
pub fn relative_deviation(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

/// Worst relative change of either summary metric.
fn summary_deviation(base: &MovementSummary, other: &MovementSummary) -> f64 {
    relative_deviation(base.l2_norm, other.l2_norm).max(relative_deviation(base.sigma_combined, other.sigma_combined))
}

/// How far `l2_norm` exceeds `sigma_combined`, relative; 0 when ordered.
fn ordering_violation(s: &MovementSummary) -> f64 {
    if s.l2_norm <= s.sigma_combined {
        0.0
    } else {
        relative_deviation(s.l2_norm, s.sigma_combined)
    }
}

pub fn run_selfcheck(t: &Trajectory, opts: &SelfCheckOptions) -> Result<SelfCheckReport> {
    if opts.trials == 0 {
        return Err(Error::NoTrials);
    }
    let baseline = summarize(t)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (w, h) = (t.source_width as f64, t.source_height as f64);

    let mut worst = [0.0f64; 6];
    let mut ordering = ordering_violation(&baseline);

    for _ in 0..opts.trials {
        let k = rng.random_range(0.25f64.ln()..4.0f64.ln()).exp();
        let theta = rng.random_range(-PI..PI);
        let pivot = LandmarkPoint::new(rng.random_range(0.0..w), rng.random_range(0.0..h));
        let shift = (rng.random_range(-w..w), rng.random_range(-h..h));
        let mirror_at = rng.random_range(0.0..2.0 * w);
        let m = rng.random_range(2..=6usize);

        let variants = [
            (Property::Scale, apply_transform(t, &PlanarTransform::scaling(k)?)?),
            (
                Property::Rotation,
                apply_transform(t, &PlanarTransform::rotation_about(theta, pivot)?)?,
            ),
            (
                Property::Translation,
                apply_transform(t, &PlanarTransform::translation(shift.0, shift.1)?)?,
            ),
            (
                Property::Reflection,
                apply_transform(t, &PlanarTransform::new(0.0, 1.0, mirror_at, 0.0, true)?)?,
            ),
            (Property::Duplication, resample_duplicate(t, m)?),
        ];

        for (property, variant) in variants {
            let summary = summarize(&variant)?;
            let slot = &mut worst[property as usize];
            *slot = slot.max(summary_deviation(&baseline, &summary));
            ordering = ordering.max(ordering_violation(&summary));
        }
    }
    worst[Property::CauchySchwarz as usize] = ordering;

    let properties = Property::ALL
        .iter()
        .map(|&property| {
            let max_deviation = worst[property as usize];
            PropertyResult {
                property,
                max_deviation,
                passed: max_deviation <= opts.tolerance,
            }
        })
        .collect();

    Ok(SelfCheckReport {
        seed: opts.seed,
        trials: opts.trials,
        tolerance: opts.tolerance,
        baseline,
        properties,
    })
}
