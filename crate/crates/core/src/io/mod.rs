// zxopt - quantum circuit optimisation with the ZX-calculus
// Copyright (C) 2026 The zxopt developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Circuit file formats: QASM, QC/TFC and Quipper ASCII in; QASM and TikZ
//! out. [`load`] picks the format from the file extension, falling back to
//! the content.

mod qasm;
mod qc;
mod quipper;
mod tikz;

pub use qasm::{emit_qasm, parse_qasm};
pub use qc::parse_qc;
pub use quipper::parse_quipper;
pub use tikz::emit_tikz;

use crate::circuit::{Circuit, CircuitError};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceFormat {
    Qasm,
    /// QC and TFC.
    Qc,
    Quipper,
}

impl SourceFormat {
    pub fn from_extension(path: &Path) -> Option<SourceFormat> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "qasm" => Some(SourceFormat::Qasm),
            "qc" | "tfc" => Some(SourceFormat::Qc),
            "quipper" => Some(SourceFormat::Quipper),
            _ => None,
        }
    }

    /// Looks at the first meaningful line.
    pub fn sniff(text: &str) -> Option<SourceFormat> {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with("//") && !l.starts_with('#'))?;
        if line.starts_with("OPENQASM") || line.starts_with("qreg") || line.starts_with("include") {
            Some(SourceFormat::Qasm)
        } else if line.starts_with(".v") {
            Some(SourceFormat::Qc)
        } else if line.starts_with("Inputs:") {
            Some(SourceFormat::Quipper)
        } else {
            None
        }
    }

    pub fn parse(self, text: &str) -> Result<Circuit, ParseError> {
        match self {
            SourceFormat::Qasm => parse_qasm(text),
            SourceFormat::Qc => parse_qc(text),
            SourceFormat::Quipper => parse_quipper(text),
        }
    }
}

impl std::str::FromStr for SourceFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "qasm" => Ok(SourceFormat::Qasm),
            "qc" | "tfc" => Ok(SourceFormat::Qc),
            "quipper" => Ok(SourceFormat::Quipper),
            _ => Err(format!("unknown format {s:?}; expected qasm, qc, tfc or quipper")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }

    pub(crate) fn circuit(line: usize, col: usize, e: CircuitError) -> ParseError {
        ParseError::new(line, col, e.to_string())
    }
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("cannot tell the file format; use a .qasm, .qc, .tfc or .quipper extension")]
    UnknownFormat,
    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// Parses circuit text, detecting the format from its content.
pub fn parse(text: &str) -> Result<Circuit, LoadError> {
    let f = SourceFormat::sniff(text).ok_or(LoadError::UnknownFormat)?;
    Ok(f.parse(text)?)
}

/// Reads a circuit file. The circuit is named after the file stem.
pub fn load(path: &Path) -> Result<Circuit, LoadError> {
    load_as(path, None)
}

/// As [`load`], with an optional format that overrides detection.
pub fn load_as(path: &Path, format: Option<SourceFormat>) -> Result<Circuit, LoadError> {
    let text = std::fs::read_to_string(path)?;
    let f = format
        .or_else(|| SourceFormat::from_extension(path))
        .or_else(|| SourceFormat::sniff(&text))
        .ok_or(LoadError::UnknownFormat)?;
    let mut c = f.parse(&text)?;
    c.name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sniffing() {
        assert_eq!(
            SourceFormat::sniff("OPENQASM 2.0;\nqreg q[1];"),
            Some(SourceFormat::Qasm)
        );
        assert_eq!(SourceFormat::sniff("# c\n.v a b\nBEGIN\nEND"), Some(SourceFormat::Qc));
        assert_eq!(SourceFormat::sniff("Inputs: 0:Qbit"), Some(SourceFormat::Quipper));
        assert!(matches!(parse(""), Err(LoadError::UnknownFormat)));
        assert!(matches!(parse("hello world"), Err(LoadError::UnknownFormat)));
    }

    #[test]
    fn extension_and_content_agree() {
        let dir = std::env::temp_dir().join(format!("zxopt-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let text = ".v a b\nBEGIN\ncnot a b\nEND\n";
        let with_ext = dir.join("x.qc");
        let without = dir.join("x.txt");
        std::fs::write(&with_ext, text).unwrap();
        std::fs::write(&without, text).unwrap();
        let a = load(&with_ext).unwrap();
        let b = load(&without).unwrap();
        assert_eq!(a.gates, b.gates);
        assert_eq!(a.name, "x");
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
