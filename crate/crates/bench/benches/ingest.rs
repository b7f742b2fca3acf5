use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion, Throughput};
use handmotion_core::synth::{random_trajectory, SynthOptions};
use handmotion_core::{parse_landmark_file, serialize_trajectory};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bench_ingest(c: &mut Criterion) {
    let t = random_trajectory(
        &mut ChaCha8Rng::seed_from_u64(7),
        &SynthOptions {
            frames: 2000,
            ..Default::default()
        },
    );
    let text = serialize_trajectory(&t).unwrap();

    let mut group = c.benchmark_group("hls1 2000 frames");
    group.throughput(Throughput::Bytes(text.len() as u64));
    group.bench_function("parse", |b| {
        b.iter(|| parse_landmark_file(black_box(text.as_bytes())).unwrap())
    });
    group.bench_function("serialize", |b| b.iter(|| serialize_trajectory(black_box(&t)).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_ingest);
criterion_main!(benches);
