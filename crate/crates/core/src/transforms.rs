//! Planar similarity transforms and frame duplication over trajectories.
//!
//! A [`PlanarTransform`] maps each point by, in order: optional mirror
//! across the vertical axis (`x -> -x`), uniform scaling, rotation by
//! `theta` about the origin, translation.

use crate::error::{Error, Result};
use crate::landmark::{LandmarkFrame, LandmarkPoint, Trajectory};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarTransform {
    theta: f64,
    scale: f64,
    translate_x: f64,
    translate_y: f64,
    reflect_x: bool,
}

impl Default for PlanarTransform {
    fn default() -> Self {
        Self::identity()
    }
}

impl PlanarTransform {
    pub const fn identity() -> Self {
        Self {
            theta: 0.0,
            scale: 1.0,
            translate_x: 0.0,
            translate_y: 0.0,
            reflect_x: false,
        }
    }

    pub fn new(theta: f64, scale: f64, translate_x: f64, translate_y: f64, reflect_x: bool) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::InvalidTransform(format!(
                "rotation angle must be finite, got {theta}"
            )));
        }
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::InvalidTransform(format!(
                "scale must be positive and finite, got {scale}"
            )));
        }
        if !(translate_x.is_finite() && translate_y.is_finite()) {
            return Err(Error::InvalidTransform("translation must be finite".into()));
        }
        Ok(Self {
            theta,
            scale,
            translate_x,
            translate_y,
            reflect_x,
        })
    }

    pub fn rotation(theta: f64) -> Result<Self> {
        Self::new(theta, 1.0, 0.0, 0.0, false)
    }

    /// Rotation by `theta` about `pivot` instead of the origin.
    pub fn rotation_about(theta: f64, pivot: LandmarkPoint) -> Result<Self> {
        let (sin, cos) = theta.sin_cos();
        let tx = pivot.x - (cos * pivot.x - sin * pivot.y);
        let ty = pivot.y - (sin * pivot.x + cos * pivot.y);
        Self::new(theta, 1.0, tx, ty, false)
    }

    pub fn scaling(scale: f64) -> Result<Self> {
        Self::new(0.0, scale, 0.0, 0.0, false)
    }

    pub fn translation(dx: f64, dy: f64) -> Result<Self> {
        Self::new(0.0, 1.0, dx, dy, false)
    }

    pub fn reflection() -> Self {
        Self {
            reflect_x: true,
            ..Self::identity()
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn translate(&self) -> (f64, f64) {
        (self.translate_x, self.translate_y)
    }

    pub fn reflect_x(&self) -> bool {
        self.reflect_x
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn apply_point(&self, p: LandmarkPoint) -> LandmarkPoint {
        let x = if self.reflect_x { -p.x } else { p.x };
        let (x, y) = (x * self.scale, p.y * self.scale);
        let (x, y) = if self.theta == 0.0 {
            (x, y)
        } else {
            let (sin, cos) = self.theta.sin_cos();
            (cos * x - sin * y, sin * x + cos * y)
        };
        LandmarkPoint::new(x + self.translate_x, y + self.translate_y)
    }
}

/// Maps every landmark of every frame, undetected placeholders included.
/// Frame indices, detection flags and metadata are unchanged.
pub fn apply_transform(t: &Trajectory, xf: &PlanarTransform) -> Result<Trajectory> {
    t.validate().into_result()?;
    let frames = t
        .frames
        .iter()
        .map(|f| LandmarkFrame {
            landmarks: f.landmarks.map(|p| xf.apply_point(p)),
            ..f.clone()
        })
        .collect();
    Ok(Trajectory {
        frames,
        label: t.label.clone(),
        ..*t
    })
}

/// Repeats each frame `m` times in place and renumbers frames `0..n*m`;
/// `fps` is multiplied by `m`.
pub fn resample_duplicate(t: &Trajectory, m: usize) -> Result<Trajectory> {
    if m == 0 {
        return Err(Error::InvalidDuplication);
    }
    t.validate().into_result()?;
    let frames = t
        .frames
        .iter()
        .flat_map(|f| std::iter::repeat_n(f, m))
        .enumerate()
        .map(|(i, f)| LandmarkFrame {
            frame_index: i as u64,
            ..f.clone()
        })
        .collect();
    Ok(Trajectory {
        frames,
        fps: t.fps * m as f64,
        label: t.label.clone(),
        ..*t
    })
}
