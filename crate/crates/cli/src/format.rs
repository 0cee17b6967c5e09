//! The `.trap` text format.
//!
//! ```text
//! 2
//! 1 2 1 2
//! 3 4 3 4
//! ```
//!
//! The first line is `n`, then one line `a b c d` per trapezoid: base-10
//! integers separated by single spaces. Every line ends with `\n`. There are
//! no comments, blank lines or trailing data, so `parse(serialize(d)) == d`
//! and `serialize(parse(s)) == s` for every accepted `s`.

use std::fmt::Write as _;

use thiserror::Error;
use trapgraph_core::{Trapezoid, TrapezoidDiagram, ValidationError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn number(field: &str, line: usize) -> Result<usize, FormatError> {
    if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(
            line,
            format!("expected a base-10 integer, found {field:?}"),
        ));
    }
    if field.len() > 1 && field.starts_with('0') {
        return Err(syntax(line, format!("leading zero in {field:?}")));
    }
    field
        .parse()
        .map_err(|_| syntax(line, format!("integer {field} is too large")))
}

pub fn parse(text: &str) -> Result<TrapezoidDiagram, FormatError> {
    let Some(body) = text.strip_suffix('\n') else {
        return Err(syntax(text.lines().count().max(1), "missing final newline"));
    };
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or_default();
    let n = number(header, 1)?;
    let mut trapezoids = Vec::with_capacity(n.min(1 << 20));
    for (k, line) in lines.enumerate() {
        let line_no = k + 2;
        if k >= n {
            return Err(syntax(line_no, format!("more than {n} trapezoid lines")));
        }
        let fields: Vec<&str> = line.split(' ').collect();
        if fields.len() != 4 {
            return Err(syntax(
                line_no,
                format!("expected 4 space-separated fields, found {}", fields.len()),
            ));
        }
        let v = fields
            .iter()
            .map(|f| number(f, line_no))
            .collect::<Result<Vec<_>, _>>()?;
        trapezoids.push(Trapezoid::new(v[0], v[1], v[2], v[3]));
    }
    if trapezoids.len() != n {
        return Err(syntax(
            trapezoids.len() + 2,
            format!("expected {n} trapezoid lines, found {}", trapezoids.len()),
        ));
    }
    Ok(TrapezoidDiagram::new(trapezoids)?)
}

pub fn serialize(d: &TrapezoidDiagram) -> String {
    let mut out = String::with_capacity(16 * (d.n() + 1));
    writeln!(out, "{}", d.n()).unwrap();
    for t in d.trapezoids() {
        writeln!(out, "{} {} {} {}", t.a, t.b, t.c, t.d).unwrap();
    }
    out
}
