//! Regenerates the HLS1 fixtures under `fixtures/` at the workspace root.
//!
//!     cargo run -p handmotion-core --example make_fixtures

use std::fs;
use std::path::Path;

use handmotion_core::landmark::{LandmarkFrame, LandmarkPoint, Trajectory, INDEX_MCP, LANDMARK_COUNT};
use handmotion_core::serialize_trajectory;
use handmotion_core::synth::{random_trajectory, SynthOptions};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn constant_wrist() -> Trajectory {
    let frames = (0..40u64)
        .map(|i| {
            let mut lm = [LandmarkPoint::new(412.25, 300.5); LANDMARK_COUNT];
            let a = i as f64 * 0.2;
            lm[INDEX_MCP] = LandmarkPoint::new(412.25 + 90.0 * a.cos(), 300.5 + 90.0 * a.sin());
            if i % 9 == 4 {
                LandmarkFrame::missing(i)
            } else {
                LandmarkFrame::detected(i, lm, 0.9)
            }
        })
        .collect();
    Trajectory {
        frames,
        source_width: 1280,
        source_height: 720,
        fps: 30.0,
        label: "constant wrist".into(),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    fs::create_dir_all(&dir)?;

    let mut take = random_trajectory(
        &mut ChaCha8Rng::seed_from_u64(1),
        &SynthOptions {
            frames: 300,
            ..Default::default()
        },
    );
    take.label = "synthetic take 720p".into();

    let mut gappy = random_trajectory(
        &mut ChaCha8Rng::seed_from_u64(2),
        &SynthOptions {
            frames: 200,
            width: 1920,
            height: 1080,
            fps: 60.0,
            dropout: 0.12,
        },
    );
    gappy.label = "gappy 200 frames 1080p".into();

    for (name, t) in [
        ("synthetic_take.hls1", &take),
        ("gappy_200.hls1", &gappy),
        ("constant_wrist.hls1", &constant_wrist()),
    ] {
        fs::write(dir.join(name), serialize_trajectory(t)?)?;
        println!("wrote {name}");
    }
    Ok(())
}
