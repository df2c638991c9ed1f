//! Text formats: elements as little-endian coefficient lists over the prime
//! field (`[1,1]` is `1 + w` in GF(4)), points as `(a_0:...:a_m)`, and word
//! files made of a descriptor JSON header line followed by one symbol per
//! line, `?` marking an erasure.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use liftcode::codes::Descriptor;
use liftcode::{CodeKind, Elem, FiniteField, MonomialCode, ProjectivePoint, Support};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub fn format_elem(f: &FiniteField, e: Elem) -> String {
    let p = f.characteristic();
    let mut x = e.index() as u32;
    let mut out = String::from("[");
    for i in 0..f.degree() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{}", x % p).expect("string write");
        x /= p;
    }
    out.push(']');
    out
}

/// Accepts the coefficient list form or a bare element index.
pub fn parse_elem(f: &FiniteField, s: &str) -> CliResult<Elem> {
    let s = s.trim();
    let bad = || CliError::usage(format!("malformed field element {s:?} for GF({})", f.order()));
    let index = if let Some(body) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let digits: Vec<u32> = body
            .split(',')
            .map(|d| d.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<CliResult<_>>()?;
        let p = f.characteristic();
        if digits.len() != f.degree() as usize || digits.iter().any(|&d| d >= p) {
            return Err(bad());
        }
        digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
    } else {
        s.parse::<u32>().map_err(|_| bad())?
    };
    Ok(f.elem(index)?)
}

pub fn format_point(f: &FiniteField, coords: &[Elem]) -> String {
    let parts: Vec<String> = coords.iter().map(|&c| format_elem(f, c)).collect();
    format!("({})", parts.join(":"))
}

/// Parses `(a_0:...:a_m)` for any nonzero vector and returns its support
/// position.
pub fn parse_point(f: &FiniteField, support: &Support, s: &str) -> CliResult<usize> {
    let body = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| CliError::usage(format!("malformed point {s:?}, expected (a_0:...:a_m)")))?;
    let coords: Vec<Elem> = body.split(':').map(|c| parse_elem(f, c)).collect::<CliResult<_>>()?;
    if coords.len() != support.width() {
        return Err(CliError::usage(format!(
            "point {s:?} has {} coordinates, expected {}",
            coords.len(),
            support.width()
        )));
    }
    match support.space() {
        liftcode::Space::Projective => Ok(support.locate(f, &coords)?.0),
        liftcode::Space::Affine => support
            .index_of(&coords)
            .ok_or_else(|| CliError::usage(format!("{s:?} is not a point of the support"))),
    }
}

pub fn point_string(code: &MonomialCode, i: usize) -> String {
    format_point(code.field(), code.support().point(i))
}

pub fn projective_point(code: &MonomialCode, i: usize) -> ProjectivePoint {
    code.support().projective_point(i)
}

/// Code descriptor as stored in word-file headers and reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorJson {
    pub kind: String,
    pub q: u32,
    pub m: usize,
    pub k: u32,
    pub v: Option<u32>,
    pub dim: usize,
    pub length: usize,
}

impl From<Descriptor> for DescriptorJson {
    fn from(d: Descriptor) -> Self {
        DescriptorJson {
            kind: d.kind.name().to_string(),
            q: d.q,
            m: d.m,
            k: d.k,
            v: d.v,
            dim: d.dim,
            length: d.length,
        }
    }
}

impl DescriptorJson {
    /// Rebuilds the code and checks that the stored shape matches.
    pub fn build(&self) -> CliResult<MonomialCode> {
        let kind: CodeKind = self.kind.parse()?;
        let code = MonomialCode::with_order(self.q, kind, self.m, self.k)?;
        let d = DescriptorJson::from(code.descriptor());
        if &d != self {
            return Err(CliError::usage(format!(
                "descriptor {} does not match the code it names ({})",
                serde_json::to_string(self).expect("serializable"),
                serde_json::to_string(&d).expect("serializable")
            )));
        }
        Ok(code)
    }
}

/// A received word together with the code it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordFile {
    pub descriptor: DescriptorJson,
    pub symbols: Vec<Option<Elem>>,
}

impl WordFile {
    pub fn render(&self, f: &FiniteField) -> String {
        let mut out = serde_json::to_string(&self.descriptor).expect("serializable");
        out.push('\n');
        for s in &self.symbols {
            match s {
                Some(e) => out.push_str(&format_elem(f, *e)),
                None => out.push('?'),
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> CliResult<(WordFile, MonomialCode)> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| CliError::usage("empty word file: missing descriptor header"))?;
        let descriptor: DescriptorJson = serde_json::from_str(header)
            .map_err(|e| CliError::usage(format!("bad descriptor header: {e}")))?;
        let code = descriptor.build()?;
        let f = code.field();
        let symbols: Vec<Option<Elem>> = lines
            .map(|l| match l.trim() {
                "?" => Ok(None),
                s => parse_elem(f, s).map(Some),
            })
            .collect::<CliResult<_>>()?;
        if symbols.len() != code.len() {
            return Err(CliError::usage(format!(
                "word has {} symbols, code length is {}",
                symbols.len(),
                code.len()
            )));
        }
        Ok((WordFile { descriptor, symbols }, code))
    }

    pub fn read(path: &Path) -> CliResult<(WordFile, MonomialCode)> {
        WordFile::parse(&read_text(path)?)
    }
}

/// One element per nonblank line.
pub fn parse_message(f: &FiniteField, text: &str) -> CliResult<Vec<Elem>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_elem(f, l))
        .collect()
}

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}
