//! Hand-crafted malformed HLS1 inputs, each paired with the line the
//! parser must blame.

#![allow(dead_code)]

const HEADER: &str = "HLS1 width=1280 height=720 fps=30 label=\"bad\"";

fn coords(n: usize) -> String {
    (0..n).map(|k| format!(" {}.25", k * 3)).collect()
}

fn rec(idx: u64) -> String {
    format!("{idx} 1 0.9{}", coords(42))
}

fn with_records(records: &[String]) -> Vec<u8> {
    let mut s = format!("{HEADER}\n");
    for r in records {
        s.push_str(r);
        s.push('\n');
    }
    s.into_bytes()
}

pub fn corpus() -> Vec<(&'static str, Vec<u8>, usize)> {
    vec![
        ("empty input", Vec::new(), 1),
        ("only comments", b"# nothing\n\n# here\n".to_vec(), 1),
        (
            "wrong magic",
            format!("HLS9 width=1 height=1 fps=1 label=\"x\"\n{}\n", rec(0)).into_bytes(),
            1,
        ),
        (
            "missing label",
            format!("HLS1 width=1 height=1 fps=1\n{}\n", rec(0)).into_bytes(),
            1,
        ),
        (
            "unquoted label",
            format!("HLS1 width=1 height=1 fps=1 label=x\n{}\n", rec(0)).into_bytes(),
            1,
        ),
        (
            "unterminated label",
            b"HLS1 width=1 height=1 fps=1 label=\"x\n".to_vec(),
            1,
        ),
        (
            "zero width",
            format!("HLS1 width=0 height=1 fps=1 label=\"x\"\n{}\n", rec(0)).into_bytes(),
            1,
        ),
        (
            "negative fps",
            format!("HLS1 width=1 height=1 fps=-30 label=\"x\"\n{}\n", rec(0)).into_bytes(),
            1,
        ),
        (
            "non-numeric height",
            format!("HLS1 width=1 height=tall fps=1 label=\"x\"\n{}\n", rec(0)).into_bytes(),
            1,
        ),
        (
            "duplicate field",
            format!("HLS1 width=1 width=2 height=1 fps=1 label=\"x\"\n{}\n", rec(0)).into_bytes(),
            1,
        ),
        (
            "unknown field",
            format!("HLS1 width=1 height=1 fps=1 depth=3 label=\"x\"\n{}\n", rec(0)).into_bytes(),
            1,
        ),
        ("20 landmarks", with_records(&[format!("0 1 0.9{}", coords(40))]), 2),
        (
            "odd coordinate count",
            with_records(&[rec(0), format!("1 1 0.9{}", coords(43))]),
            3,
        ),
        (
            "bad detected flag",
            with_records(&[format!("0 2 0.9{}", coords(42))]),
            2,
        ),
        (
            "negative frame index",
            with_records(&[format!("-1 1 0.9{}", coords(42))]),
            2,
        ),
        (
            "NaN coordinate",
            with_records(&[rec(0).replacen(" 3.25", " NaN", 1)]),
            2,
        ),
        (
            "infinite coordinate",
            with_records(&[rec(0), rec(1).replacen(" 6.25", " -inf", 1)]),
            3,
        ),
        ("repeated frame index", with_records(&[rec(0), rec(1), rec(1)]), 4),
        (
            "confidence above one",
            with_records(&[format!("0 1 1.5{}", coords(42))]),
            2,
        ),
        (
            "no detected frames",
            with_records(&[format!("0 0 0{}", coords(42)), format!("1 0 0{}", coords(42))]),
            3,
        ),
    ]
}
