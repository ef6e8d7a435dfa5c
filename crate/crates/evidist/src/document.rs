//! A line-oriented text format for frames and named BPAs.
//!
//! ```text
//! # anything after a hash is a comment
//! frame: 1@1 2@2 3@3 4@4 5@5 6@6 7@7
//!
//! bpa m1:
//!   0.05 : { 2, 3, 4 }
//!   0.05 : { 7 }
//!   0.1  : { 1, 2, 3, 4, 5, 6, 7 }
//!   0.8  : { 1 }
//!
//! bpa m2:
//!   1 : { 1, 2, 3, 4, 5 }
//! ```
//!
//! The `@position` suffixes are optional but all-or-nothing: either
//! every element carries one (an embedded frame) or none does. Masses
//! are decimal literals or fractions like `1/3`. Parse errors carry the
//! 1-based line they occurred on.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::bpa::Bpa;
use crate::error::{Error, Result};
use crate::frame::{FocalSet, Frame};

/// Characters with grammatical meaning; they cannot appear in element
/// labels, and a label cannot contain whitespace either.
const RESERVED: [char; 6] = ['{', '}', ',', ':', '#', '@'];

/// A parsed document: one frame and its named BPAs in declaration
/// order.
#[derive(Clone, Debug, PartialEq)]
pub struct BpaDocument {
    frame: Frame,
    bpas: Vec<(String, Bpa)>,
}

impl BpaDocument {
    /// Assembles a document from parts. Every BPA must live on `frame`
    /// and names must be unique. Whether the frame's labels are
    /// writable in the grammar is checked by [`BpaDocument::emit`],
    /// not here.
    pub fn new<I, S>(frame: Frame, bpas: I) -> Result<BpaDocument>
    where
        I: IntoIterator<Item = (S, Bpa)>,
        S: Into<String>,
    {
        let mut named: Vec<(String, Bpa)> = Vec::new();
        for (name, bpa) in bpas {
            let name = name.into();
            if bpa.frame() != &frame {
                return Err(Error::FrameMismatch);
            }
            if named.iter().any(|(n, _)| *n == name) {
                return Err(Error::DuplicateBpa(name));
            }
            named.push((name, bpa));
        }
        Ok(BpaDocument { frame, bpas: named })
    }

    /// Parses the text format. Errors are annotated with the 1-based
    /// line number: syntax problems as [`Error::Syntax`], domain errors
    /// (unknown elements, bad masses) wrapped in [`Error::AtLine`].
    /// BPA-level violations (bad sum, duplicate focal set) point at the
    /// `bpa` header line of the offending block.
    pub fn parse(text: &str) -> Result<BpaDocument> {
        let mut frame: Option<Frame> = None;
        let mut bpas: Vec<(String, Bpa)> = Vec::new();
        let mut open: Option<OpenBlock> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }

            if let Some(rest) = line.strip_prefix("frame:") {
                if frame.is_some() {
                    return Err(syntax(line_no, "duplicate frame declaration"));
                }
                frame = Some(parse_frame_decl(rest, line_no)?);
                continue;
            }

            if let Some(rest) = header_rest(line) {
                let Some(frame) = frame.as_ref() else {
                    return Err(syntax(line_no, "frame must be declared before any bpa"));
                };
                flush(&mut open, frame, &mut bpas)?;
                let Some(name) = rest.trim().strip_suffix(':') else {
                    return Err(syntax(line_no, "bpa header must end with `:`"));
                };
                let name = name.trim();
                check_name(name).map_err(|e| e.at_line(line_no))?;
                if bpas.iter().any(|(n, _)| n == name) {
                    return Err(Error::DuplicateBpa(name.to_string()).at_line(line_no));
                }
                open = Some(OpenBlock {
                    name: name.to_string(),
                    header_line: line_no,
                    entries: Vec::new(),
                });
                continue;
            }

            let Some((mass_text, set_text)) = line.split_once(':') else {
                return Err(syntax(
                    line_no,
                    "expected `frame:`, `bpa <name>:`, or `<mass> : { <elements> }`",
                ));
            };
            let Some(block) = open.as_mut() else {
                return Err(syntax(line_no, "mass line outside a bpa block"));
            };
            let mass = parse_mass(mass_text.trim(), line_no)?;
            let set = parse_set(set_text.trim(), frame.as_ref().unwrap(), line_no)?;
            block.entries.push((set, mass));
        }

        let Some(frame) = frame else {
            return Err(syntax(1, "missing frame declaration"));
        };
        flush(&mut open, &frame, &mut bpas)?;
        Ok(BpaDocument { frame, bpas })
    }

    /// Renders the document in the same grammar [`BpaDocument::parse`]
    /// reads, such that parsing the output reproduces the document
    /// exactly (masses and positions are written in shortest
    /// round-trip decimal form). Fails with [`Error::Unrepresentable`]
    /// if a label or name contains reserved characters.
    pub fn emit(&self) -> Result<String> {
        let mut out = String::from("frame:");
        for (i, label) in self.frame.labels().iter().enumerate() {
            check_label(label).map_err(|_| Error::Unrepresentable(label.clone()))?;
            match self.frame.positions() {
                Some(positions) => write!(out, " {label}@{}", positions[i]).unwrap(),
                None => write!(out, " {label}").unwrap(),
            }
        }
        out.push('\n');
        for (name, bpa) in &self.bpas {
            check_name(name).map_err(|_| Error::Unrepresentable(name.clone()))?;
            out.push('\n');
            writeln!(out, "bpa {name}:").unwrap();
            for (set, mass) in bpa.iter() {
                let labels: Vec<&str> = set.member_labels().collect();
                for label in &labels {
                    check_label(label).map_err(|_| Error::Unrepresentable(label.to_string()))?;
                }
                writeln!(out, "  {mass} : {{ {} }}", labels.join(", ")).unwrap();
            }
        }
        Ok(out)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// BPA names in declaration order.
    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.bpas.iter().map(|(n, _)| n.as_str())
    }

    pub fn get(&self, name: &str) -> Option<&Bpa> {
        self.bpas
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, bpa)| bpa)
    }

    /// Like [`BpaDocument::get`] but failing with [`Error::UnknownBpa`].
    pub fn require(&self, name: &str) -> Result<&Bpa> {
        self.get(name)
            .ok_or_else(|| Error::UnknownBpa(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Bpa)> {
        self.bpas.iter().map(|(n, bpa)| (n.as_str(), bpa))
    }

    pub fn len(&self) -> usize {
        self.bpas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bpas.is_empty()
    }
}

impl FromStr for BpaDocument {
    type Err = Error;

    fn from_str(s: &str) -> Result<BpaDocument> {
        BpaDocument::parse(s)
    }
}

struct OpenBlock {
    name: String,
    header_line: usize,
    entries: Vec<(FocalSet, f64)>,
}

fn syntax(line: usize, message: &str) -> Error {
    Error::Syntax {
        line,
        message: message.to_string(),
    }
}

/// The part after the `bpa` keyword, if this line is a block header.
fn header_rest(line: &str) -> Option<&str> {
    let rest = line.strip_prefix("bpa")?;
    rest.starts_with(char::is_whitespace).then_some(rest)
}

fn flush(open: &mut Option<OpenBlock>, frame: &Frame, bpas: &mut Vec<(String, Bpa)>) -> Result<()> {
    if let Some(block) = open.take() {
        let bpa = Bpa::new(frame, block.entries).map_err(|e| e.at_line(block.header_line))?;
        bpas.push((block.name, bpa));
    }
    Ok(())
}

fn check_label(label: &str) -> Result<()> {
    if label.is_empty()
        || label.contains(RESERVED)
        || label.contains(char::is_whitespace)
        || label.contains(char::is_control)
    {
        return Err(syntax(0, "bad label"));
    }
    Ok(())
}

/// Names are laxer than labels: inner spaces and `@` are fine, but the
/// structural characters, control characters, and outer whitespace are
/// not.
fn check_name(name: &str) -> Result<()> {
    if name.is_empty()
        || name.contains(['{', '}', ':', '#'])
        || name.contains(char::is_control)
        || name.trim() != name
    {
        return Err(syntax(0, "bad name"));
    }
    Ok(())
}

fn parse_frame_decl(rest: &str, line: usize) -> Result<Frame> {
    let mut labels: Vec<String> = Vec::new();
    let mut positions: Vec<f64> = Vec::new();
    for token in rest.split_whitespace() {
        let (label, position) = match token.split_once('@') {
            Some((label, pos_text)) => {
                let position: f64 = pos_text.parse().map_err(|_| {
                    syntax(line, &format!("invalid position `{pos_text}`"))
                })?;
                (label, Some(position))
            }
            None => (token, None),
        };
        check_label(label)
            .map_err(|_| syntax(line, &format!("invalid element label `{label}`")))?;
        let all_positioned_so_far = positions.len() == labels.len();
        if !labels.is_empty() && position.is_some() != all_positioned_so_far {
            return Err(syntax(
                line,
                "positions must be given for all elements or none",
            ));
        }
        labels.push(label.to_string());
        if let Some(p) = position {
            positions.push(p);
        }
    }
    if labels.is_empty() {
        return Err(syntax(line, "frame declaration has no elements"));
    }
    let frame = if positions.is_empty() {
        Frame::new(labels)
    } else {
        Frame::embedded(labels, positions)
    };
    frame.map_err(|e| e.at_line(line))
}

fn parse_mass(text: &str, line: usize) -> Result<f64> {
    let number = |t: &str| -> Result<f64> {
        t.parse()
            .map_err(|_| syntax(line, &format!("invalid mass `{text}`")))
    };
    let value = match text.split_once('/') {
        Some((num, den)) => number(num.trim())? / number(den.trim())?,
        None => number(text)?,
    };
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::MassOutOfRange(value).at_line(line));
    }
    Ok(value)
}

fn parse_set(text: &str, frame: &Frame, line: usize) -> Result<FocalSet> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| syntax(line, "focal set must be written as { a, b, c }"))?;
    let mut labels = Vec::new();
    for part in inner.split(',') {
        let label = part.trim();
        if label.is_empty() {
            return Err(syntax(line, "empty element label in focal set"));
        }
        labels.push(label);
    }
    frame.subset(labels).map_err(|e| e.at_line(line))
}
