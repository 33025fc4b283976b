//! Text formats for check matrices.
//!
//! Two formats are accepted. Both ignore blank lines and treat `#` as the
//! start of a comment; `# name: <label>` and `# distance: <d>` comments set
//! metadata.
//!
//! `pauli_strings`: one generator per line over `I`, `X`, `Y`, `Z`, with an
//! optional leading phase (`+`, `-`, `i`, `-i`) that is discarded.
//!
//! ```text
//! # name: steane
//! # distance: 3
//! IIIXXXX
//! ...
//! ```
//!
//! `binary_matrix`: a header `n=<n> rows=<n-k>` followed by one line per
//! generator holding `2n` space-separated bits `x_1 … x_n z_1 … z_n`.
//!
//! ```text
//! n=2 rows=1
//! 1 0 0 1
//! ```

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::code::StabilizerCode;
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::pauli::{PauliLetter, PauliOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeFormat {
    PauliStrings,
    BinaryMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub format: CodeFormat,
    pub label: Option<String>,
    pub designed_distance: Option<usize>,
    pub n: usize,
    pub generators: Vec<PauliOperator>,
}

impl CodeFile {
    /// Validates the generators and attaches the metadata.
    pub fn into_code(self) -> Result<StabilizerCode> {
        let mut code = StabilizerCode::from_generators(&self.generators)?;
        if let Some(l) = self.label {
            code = code.with_label(l);
        }
        if let Some(d) = self.designed_distance {
            code = code.with_designed_distance(d);
        }
        Ok(code)
    }

    pub fn from_code(code: &StabilizerCode, format: CodeFormat) -> Self {
        Self {
            format,
            label: code.label().map(str::to_owned),
            designed_distance: code.designed_distance(),
            n: code.n(),
            generators: code.check_matrix().generators(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(l) = &self.label {
            let _ = writeln!(out, "# name: {l}");
        }
        if let Some(d) = self.designed_distance {
            let _ = writeln!(out, "# distance: {d}");
        }
        match self.format {
            CodeFormat::PauliStrings => {
                for g in &self.generators {
                    let _ = writeln!(out, "{g}");
                }
            }
            CodeFormat::BinaryMatrix => {
                let _ = writeln!(out, "n={} rows={}", self.n, self.generators.len());
                for g in &self.generators {
                    let bits: Vec<String> = g
                        .x()
                        .iter()
                        .chain(g.z().iter())
                        .map(|b| u8::from(b).to_string())
                        .collect();
                    let _ = writeln!(out, "{}", bits.join(" "));
                }
            }
        }
        out
    }
}

fn file_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::CodeFile {
        line,
        column,
        message: message.into(),
    }
}

/// A content line: 1-based line number, column offset of the first
/// non-blank char, and the trimmed text.
struct Content<'a> {
    line: usize,
    col0: usize,
    text: &'a str,
}

pub fn parse_code_text(text: &str) -> Result<CodeFile> {
    let mut label = None;
    let mut designed_distance = None;
    let mut content = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            if let Some((key, value)) = c.split_once(':') {
                let value = value.trim();
                match key.trim().to_ascii_lowercase().as_str() {
                    "name" | "label" => label = Some(value.to_owned()),
                    "distance" | "d" => {
                        let d = value.parse::<usize>().map_err(|_| {
                            file_error(line, raw.find(value).unwrap_or(0) + 1, "invalid distance")
                        })?;
                        designed_distance = Some(d);
                    }
                    _ => {}
                }
            }
        }
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col0 = body.len() - body.trim_start().len();
        content.push(Content {
            line,
            col0,
            text: trimmed,
        });
    }
    let Some(first) = content.first() else {
        return Err(file_error(1, 1, "no generators"));
    };
    let (format, n, generators) = if first.text.starts_with("n=") {
        parse_binary(&content)?
    } else {
        parse_pauli_lines(&content)?
    };
    Ok(CodeFile {
        format,
        label,
        designed_distance,
        n,
        generators,
    })
}

fn parse_pauli_lines(content: &[Content]) -> Result<(CodeFormat, usize, Vec<PauliOperator>)> {
    let mut gens = Vec::with_capacity(content.len());
    for c in content {
        let p = c.text.parse::<PauliOperator>().map_err(|e| match e {
            Error::PauliParse { position, found } => file_error(
                c.line,
                c.col0 + position,
                format!("invalid Pauli character {found:?}"),
            ),
            other => file_error(c.line, c.col0 + 1, other.to_string()),
        })?;
        gens.push(p);
    }
    let n = gens[0].n();
    Ok((CodeFormat::PauliStrings, n, gens))
}

fn parse_header(c: &Content) -> Result<(usize, usize)> {
    let mut n = None;
    let mut rows = None;
    for tok in c.text.split_whitespace() {
        let col = c.col0 + c.text.find(tok).unwrap_or(0) + 1;
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| file_error(c.line, col, format!("expected key=value, found {tok:?}")))?;
        let v = value
            .parse::<usize>()
            .map_err(|_| file_error(c.line, col, format!("invalid number {value:?}")))?;
        match key {
            "n" => n = Some(v),
            "rows" => rows = Some(v),
            _ => {
                return Err(file_error(
                    c.line,
                    col,
                    format!("unknown header key {key:?}"),
                ))
            }
        }
    }
    match (n, rows) {
        (Some(n), Some(r)) if n > 0 => Ok((n, r)),
        (Some(0), _) => Err(file_error(c.line, c.col0 + 1, "n must be positive")),
        _ => Err(file_error(
            c.line,
            c.col0 + 1,
            "header must be \"n=<n> rows=<rows>\"",
        )),
    }
}

fn parse_binary(content: &[Content]) -> Result<(CodeFormat, usize, Vec<PauliOperator>)> {
    let (n, rows) = parse_header(&content[0])?;
    let body = &content[1..];
    if body.len() != rows {
        let (line, col) = body.get(rows).map_or_else(
            || (content.last().map_or(1, |c| c.line), 1),
            |c| (c.line, c.col0 + 1),
        );
        return Err(file_error(
            line,
            col,
            format!("expected {rows} rows, found {}", body.len()),
        ));
    }
    let mut gens = Vec::with_capacity(rows);
    for c in body {
        let mut bits = Vec::with_capacity(2 * n);
        let mut offset = 0;
        for tok in c.text.split_whitespace() {
            let at = offset + c.text[offset..].find(tok).unwrap_or(0);
            offset = at + tok.len();
            let col = c.col0 + at + 1;
            match tok {
                "0" => bits.push(false),
                "1" => bits.push(true),
                _ => return Err(file_error(c.line, col, format!("invalid bit {tok:?}"))),
            }
        }
        if bits.len() != 2 * n {
            return Err(file_error(
                c.line,
                c.col0 + 1,
                format!("expected {} bits, found {}", 2 * n, bits.len()),
            ));
        }
        let letters: Vec<PauliLetter> = (0..n)
            .map(|j| PauliLetter::from_bits(bits[j], bits[n + j]))
            .collect();
        gens.push(PauliOperator::from_letters(&letters));
    }
    Ok((CodeFormat::BinaryMatrix, n, gens))
}

/// Parses and validates a code from text.
pub fn parse_code(text: &str) -> Result<StabilizerCode> {
    parse_code_text(text)?.into_code()
}

pub fn parse_code_file(path: impl AsRef<Path>) -> Result<StabilizerCode> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_code(&text)
}

/// Bits of a symplectic row, `x_1 … x_n z_1 … z_n`.
pub fn row_bits(p: &PauliOperator) -> BitVector {
    p.symplectic().concatenated()
}
