//! HLS1 landmark-series files and frame-range trimming.
//!
//! ```text
//! HLS1 width=1280 height=720 fps=30 label="take 1"
//! # frame detected confidence x0 y0 x1 y1 ... x20 y20
//! 0 1 0.97 612.5 401.25 ...
//! 1 0 0 0 0 ...
//! ```
//!
//! Records are sorted by frame index. Blank lines and lines starting with
//! `#` are ignored anywhere in the file. Coordinates are written with the
//! shortest decimal form that re-parses to the same `f64`, so a
//! serialize/parse cycle is bit-exact.

use std::fmt::Write as _;
use std::io;
use std::str::FromStr;

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::landmark::{LandmarkFrame, LandmarkPoint, Trajectory, LANDMARK_COUNT};

pub const MAGIC: &str = "HLS1";

const COORDINATE_FIELDS: usize = 2 * LANDMARK_COUNT;

/// Parses an HLS1 byte stream into a validated trajectory.
pub fn parse_landmark_file(bytes: &[u8]) -> Result<Trajectory, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let line = bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1;
        ParseError {
            line,
            kind: ParseErrorKind::InvalidUtf8,
        }
    })?;

    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError {
        line: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let header = parse_header(header).map_err(|kind| ParseError {
        line: header_line,
        kind,
    })?;

    let mut frames: Vec<LandmarkFrame> = Vec::new();
    let mut last_line = header_line;
    for (line, record) in lines {
        last_line = line;
        let frame = parse_record(record).map_err(|kind| ParseError { line, kind })?;
        if let Some(prev) = frames.last() {
            if frame.frame_index <= prev.frame_index {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::NonMonotone {
                        previous: prev.frame_index,
                        current: frame.frame_index,
                    },
                });
            }
        }
        frames.push(frame);
    }

    if !frames.iter().any(|f| f.detected) {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::NoDetectedFrames,
        });
    }

    Ok(Trajectory {
        frames,
        source_width: header.width,
        source_height: header.height,
        fps: header.fps,
        label: header.label,
    })
}

/// Reads and parses an HLS1 file from any reader.
pub fn read_trajectory<R: io::Read>(mut reader: R) -> Result<Trajectory, ReadError> {
    let mut buf = Vec::new();
    reader.read_to_end(&mut buf)?;
    Ok(parse_landmark_file(&buf)?)
}

#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Serializes a trajectory in canonical HLS1 form. The trajectory is
/// validated first; invalid trajectories are never written.
pub fn serialize_trajectory(t: &Trajectory) -> Result<String> {
    t.validate().into_result()?;

    let mut out = String::with_capacity(64 + t.frames.len() * 24 * COORDINATE_FIELDS / 2);
    // Writing into a String cannot fail.
    let _ = writeln!(
        out,
        "{MAGIC} width={} height={} fps={} label={}",
        t.source_width,
        t.source_height,
        t.fps,
        quote(&t.label)
    );
    for f in &t.frames {
        let _ = write!(out, "{} {} {}", f.frame_index, u8::from(f.detected), f.confidence);
        for p in &f.landmarks {
            let _ = write!(out, " {} {}", p.x, p.y);
        }
        out.push('\n');
    }
    Ok(out)
}

/// Writes the canonical HLS1 form of `t` to `writer`.
pub fn write_trajectory<W: io::Write>(t: &Trajectory, mut writer: W) -> Result<(), WriteError> {
    let text = serialize_trajectory(t)?;
    writer.write_all(text.as_bytes())?;
    Ok(())
}

#[derive(Debug, thiserror::Error)]
pub enum WriteError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Invalid(#[from] Error),
}

struct Header {
    width: u32,
    height: u32,
    fps: f64,
    label: String,
}

fn parse_header(line: &str) -> Result<Header, ParseErrorKind> {
    let (magic, mut rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
    if magic != MAGIC {
        return Err(ParseErrorKind::BadMagic(magic.to_string()));
    }

    let mut width = None;
    let mut height = None;
    let mut fps = None;
    let mut label = None;

    loop {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        let (key, after_eq) = rest
            .split_once('=')
            .ok_or_else(|| ParseErrorKind::MalformedHeader(format!("expected key=value near `{rest}`")))?;
        if key.is_empty() || key.contains(char::is_whitespace) {
            return Err(ParseErrorKind::MalformedHeader(format!("bad key `{key}`")));
        }
        let (value, tail) = if key == "label" {
            let (s, tail) = unquote(after_eq)?;
            (s, tail)
        } else {
            let end = after_eq.find(char::is_whitespace).unwrap_or(after_eq.len());
            (after_eq[..end].to_string(), &after_eq[end..])
        };
        rest = tail;

        let duplicate = || ParseErrorKind::MalformedHeader(format!("duplicate field `{key}`"));
        match key {
            "width" => {
                if width.replace(parse_dimension("width", &value)?).is_some() {
                    return Err(duplicate());
                }
            }
            "height" => {
                if height.replace(parse_dimension("height", &value)?).is_some() {
                    return Err(duplicate());
                }
            }
            "fps" => {
                let v: f64 = value.parse().map_err(|_| ParseErrorKind::BadNumber {
                    field: "fps",
                    value: value.clone(),
                })?;
                if !(v.is_finite() && v > 0.0) {
                    return Err(ParseErrorKind::MalformedHeader(format!(
                        "fps must be positive and finite, got `{value}`"
                    )));
                }
                if fps.replace(v).is_some() {
                    return Err(duplicate());
                }
            }
            "label" => {
                if label.replace(value).is_some() {
                    return Err(duplicate());
                }
            }
            other => {
                return Err(ParseErrorKind::MalformedHeader(format!("unknown field `{other}`")));
            }
        }
    }

    Ok(Header {
        width: width.ok_or(ParseErrorKind::MissingField("width"))?,
        height: height.ok_or(ParseErrorKind::MissingField("height"))?,
        fps: fps.ok_or(ParseErrorKind::MissingField("fps"))?,
        label: label.ok_or(ParseErrorKind::MissingField("label"))?,
    })
}

fn parse_dimension(field: &'static str, value: &str) -> Result<u32, ParseErrorKind> {
    let v: u32 = value.parse().map_err(|_| ParseErrorKind::BadNumber {
        field,
        value: value.to_string(),
    })?;
    if v == 0 {
        return Err(ParseErrorKind::MalformedHeader(format!("{field} must be positive")));
    }
    Ok(v)
}

fn quote(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Reads a quoted string from the start of `s`, returning it and the rest.
fn unquote(s: &str) -> Result<(String, &str), ParseErrorKind> {
    let mut chars = s.char_indices();
    if !matches!(chars.next(), Some((_, '"'))) {
        return Err(ParseErrorKind::MalformedHeader("label must be a quoted string".into()));
    }
    let mut out = String::new();
    while let Some((i, c)) = chars.next() {
        match c {
            '"' => {
                let tail = &s[i + 1..];
                if !(tail.is_empty() || tail.starts_with(char::is_whitespace)) {
                    return Err(ParseErrorKind::MalformedHeader(
                        "unexpected text after closing quote".into(),
                    ));
                }
                return Ok((out, tail));
            }
            '\\' => match chars.next() {
                Some((_, '"')) => out.push('"'),
                Some((_, '\\')) => out.push('\\'),
                Some((_, 'n')) => out.push('\n'),
                Some((_, 'r')) => out.push('\r'),
                Some((_, 't')) => out.push('\t'),
                Some((_, other)) => return Err(ParseErrorKind::MalformedHeader(format!("unknown escape `\\{other}`"))),
                None => break,
            },
            c => out.push(c),
        }
    }
    Err(ParseErrorKind::MalformedHeader("unterminated label string".into()))
}

fn parse_record(line: &str) -> Result<LandmarkFrame, ParseErrorKind> {
    let mut fields = line.split_ascii_whitespace();

    let index_str = fields.next().ok_or(ParseErrorKind::TruncatedRecord("frame_index"))?;
    let frame_index: u64 = index_str.parse().map_err(|_| ParseErrorKind::BadNumber {
        field: "frame_index",
        value: index_str.to_string(),
    })?;

    let detected = match fields.next().ok_or(ParseErrorKind::TruncatedRecord("detected"))? {
        "0" => false,
        "1" => true,
        other => return Err(ParseErrorKind::BadDetectedFlag(other.to_string())),
    };

    let conf_str = fields.next().ok_or(ParseErrorKind::TruncatedRecord("confidence"))?;
    let confidence = parse_real("confidence", conf_str)?;
    if !(0.0..=1.0).contains(&confidence) {
        return Err(ParseErrorKind::ConfidenceOutOfRange(confidence));
    }
    if !detected && confidence != 0.0 {
        return Err(ParseErrorKind::UndetectedWithConfidence(confidence));
    }

    let coords: Vec<&str> = fields.collect();
    if coords.len() != COORDINATE_FIELDS {
        return Err(ParseErrorKind::LandmarkCount(coords.len()));
    }
    let mut landmarks = [LandmarkPoint::ORIGIN; LANDMARK_COUNT];
    for (slot, pair) in landmarks.iter_mut().zip(coords.chunks_exact(2)) {
        *slot = LandmarkPoint::new(parse_real("coordinate", pair[0])?, parse_real("coordinate", pair[1])?);
    }

    Ok(LandmarkFrame {
        frame_index,
        landmarks,
        detected,
        confidence,
    })
}

fn parse_real(field: &'static str, s: &str) -> Result<f64, ParseErrorKind> {
    let v: f64 = s.parse().map_err(|_| ParseErrorKind::BadNumber {
        field,
        value: s.to_string(),
    })?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(ParseErrorKind::NonFinite(s.to_string()))
    }
}

/// A half-open frame-index window `[start, end)`; a missing bound is open.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TrimSpec {
    start: Option<u64>,
    end: Option<u64>,
}

impl TrimSpec {
    pub fn new(start: Option<u64>, end: Option<u64>) -> Result<Self> {
        if let (Some(s), Some(e)) = (start, end) {
            if s >= e {
                return Err(Error::InvalidTrim { start: s, end: e });
            }
        }
        Ok(Self { start, end })
    }

    pub fn all() -> Self {
        Self::default()
    }

    pub fn start(&self) -> Option<u64> {
        self.start
    }

    pub fn end(&self) -> Option<u64> {
        self.end
    }

    pub fn contains(&self, frame_index: u64) -> bool {
        self.start.is_none_or(|s| frame_index >= s) && self.end.is_none_or(|e| frame_index < e)
    }
}

/// Parses `<start>:<end>` where either side may be empty.
impl FromStr for TrimSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| format!("expected <start>:<end>, got `{s}`"))?;
        let bound = |v: &str| -> std::result::Result<Option<u64>, String> {
            let v = v.trim();
            if v.is_empty() {
                Ok(None)
            } else {
                v.parse().map(Some).map_err(|_| format!("invalid frame index `{v}`"))
            }
        };
        TrimSpec::new(bound(a)?, bound(b)?).map_err(|e| e.to_string())
    }
}

/// Keeps only frames whose index falls inside `spec`.
pub fn trim(t: &Trajectory, spec: &TrimSpec) -> Result<Trajectory> {
    t.validate().into_result()?;
    let frames: Vec<LandmarkFrame> = t
        .frames
        .iter()
        .filter(|f| spec.contains(f.frame_index))
        .cloned()
        .collect();
    if !frames.iter().any(|f| f.detected) {
        let show = |b: Option<u64>, open: &str| b.map_or_else(|| open.to_string(), |v| v.to_string());
        return Err(Error::EmptyAfterTrim {
            start: show(spec.start, "0"),
            end: show(spec.end, "inf"),
        });
    }
    Ok(Trajectory {
        frames,
        label: t.label.clone(),
        ..*t
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::landmark::LandmarkFrame;

    fn record(idx: u64, detected: bool, coords: usize) -> String {
        let mut s = format!("{idx} {} {}", u8::from(detected), if detected { "0.9" } else { "0" });
        for k in 0..coords {
            s.push_str(&format!(" {}.5", k));
        }
        s
    }

    fn file(records: &[String]) -> String {
        let mut s = String::from("HLS1 width=1280 height=720 fps=29.97 label=\"demo take\"\n");
        for r in records {
            s.push_str(r);
            s.push('\n');
        }
        s
    }

    #[test]
    fn minimal_file_parses() {
        let t = parse_landmark_file(file(&[record(0, true, 42)]).as_bytes()).unwrap();
        assert_eq!(t.frames.len(), 1);
        assert_eq!((t.source_width, t.source_height, t.fps), (1280, 720, 29.97));
        assert_eq!(t.label, "demo take");
        assert_eq!(t.frames[0].landmarks[20], LandmarkPoint::new(40.5, 41.5));
        assert!(t.validate().is_ok());
    }

    #[test]
    fn twenty_landmarks_rejected() {
        let err = parse_landmark_file(file(&[record(0, true, 40)]).as_bytes()).unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::LandmarkCount(40));
        assert!(err.to_string().contains("expected 21 landmarks"));
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = format!(
            "# produced by hand\n\n{}\n# mid\n\n{}\n",
            file(&[record(0, true, 42)]).trim_end(),
            record(4, false, 42)
        );
        let t = parse_landmark_file(text.as_bytes()).unwrap();
        assert_eq!(t.frames.len(), 2);
        assert!(!t.frames[1].detected);
    }

    #[test]
    fn non_monotone_reports_line() {
        let err = parse_landmark_file(file(&[record(3, true, 42), record(3, true, 42)]).as_bytes()).unwrap_err();
        assert_eq!(err.line, 3);
        assert!(matches!(
            err.kind,
            ParseErrorKind::NonMonotone {
                previous: 3,
                current: 3
            }
        ));
    }

    #[test]
    fn nan_and_inf_rejected() {
        for bad in ["NaN", "inf", "-infinity"] {
            let r = record(0, true, 42).replacen("3.5", bad, 1);
            let err = parse_landmark_file(file(&[r]).as_bytes()).unwrap_err();
            assert_eq!(err.kind, ParseErrorKind::NonFinite(bad.to_string()));
        }
    }

    #[test]
    fn header_errors_carry_line_number() {
        let err = parse_landmark_file(b"# c\nHLS2 width=1 height=1 fps=1 label=\"x\"\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(err.kind, ParseErrorKind::BadMagic("HLS2".into()));

        let err = parse_landmark_file(b"HLS1 width=1 fps=1 label=\"x\"\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingField("height"));
    }

    #[test]
    fn label_escapes_round_trip() {
        let mut t = parse_landmark_file(file(&[record(0, true, 42)]).as_bytes()).unwrap();
        t.label = "quote \" back\\slash\nnew line".into();
        let text = serialize_trajectory(&t).unwrap();
        assert_eq!(parse_landmark_file(text.as_bytes()).unwrap(), t);
    }

    #[test]
    fn serialize_is_canonical() {
        let t = parse_landmark_file(file(&[record(0, true, 42), record(7, false, 42)]).as_bytes()).unwrap();
        let text = serialize_trajectory(&t).unwrap();
        assert!(text.starts_with("HLS1 width=1280 height=720 fps=29.97 label=\"demo take\"\n0 1 0.9 0.5 1.5"));
        assert_eq!(text.lines().count(), 3);
        assert_eq!(
            serialize_trajectory(&parse_landmark_file(text.as_bytes()).unwrap()).unwrap(),
            text
        );
    }

    #[test]
    fn serialize_rejects_invalid() {
        let mut t = parse_landmark_file(file(&[record(0, true, 42)]).as_bytes()).unwrap();
        t.frames.clear();
        assert!(matches!(serialize_trajectory(&t), Err(Error::InvalidTrajectory(_))));
    }

    fn ten_frames() -> Trajectory {
        let records: Vec<String> = (0..10).map(|i| record(i, i != 7, 42)).collect();
        parse_landmark_file(file(&records).as_bytes()).unwrap()
    }

    #[test]
    fn trim_interval_semantics() {
        let t = ten_frames();
        assert_eq!(trim(&t, &TrimSpec::all()).unwrap(), t);
        let cut = trim(&t, &"2:5".parse().unwrap()).unwrap();
        let idx: Vec<u64> = cut.frames.iter().map(|f| f.frame_index).collect();
        assert_eq!(idx, vec![2, 3, 4]);
        assert_eq!(cut.label, t.label);
        assert_eq!(cut.fps, t.fps);
    }

    #[test]
    fn trim_to_undetected_only_fails() {
        let t = ten_frames();
        let err = trim(&t, &"7:8".parse().unwrap()).unwrap_err();
        assert!(matches!(err, Error::EmptyAfterTrim { .. }));
        assert!(trim(&t, &"20:".parse().unwrap()).is_err());
    }

    #[test]
    fn trim_spec_parsing() {
        assert_eq!("5:".parse::<TrimSpec>().unwrap(), TrimSpec::new(Some(5), None).unwrap());
        assert_eq!(":9".parse::<TrimSpec>().unwrap(), TrimSpec::new(None, Some(9)).unwrap());
        assert_eq!(":".parse::<TrimSpec>().unwrap(), TrimSpec::all());
        assert!("5:5".parse::<TrimSpec>().is_err());
        assert!("9:2".parse::<TrimSpec>().is_err());
        assert!("abc".parse::<TrimSpec>().is_err());
        assert!("-1:4".parse::<TrimSpec>().is_err());
    }

    #[test]
    fn trim_is_idempotent() {
        let t = ten_frames();
        let w: TrimSpec = "1:6".parse().unwrap();
        let once = trim(&t, &w).unwrap();
        assert_eq!(trim(&once, &w).unwrap(), once);
    }

    #[test]
    fn missing_frame_placeholder() {
        let f = LandmarkFrame::missing(3);
        assert!(!f.detected);
        assert_eq!(f.confidence, 0.0);
    }
}
