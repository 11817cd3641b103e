//! Plain-text file formats for groups, algebras and Frobenius algebras.
//!
//! Blank lines and anything after `#` are ignored in every format.
//!
//! Group table:
//! ```text
//! order 2
//! 0 1
//! 1 0
//! name Z2          # optional
//! ```
//! Permutation generators (images of `0..d-1`, one generator per line):
//! ```text
//! perm degree 3
//! 1 0 2
//! 1 2 0
//! ```
//! Algebra, with rationals written `p/q` or as integers and omitted
//! structure constants equal to zero; a Frobenius algebra adds a `counit` line:
//! ```text
//! dim 2
//! unit 1 0
//! c 0 0 0 1
//! c 0 1 1 1
//! c 1 0 1 1
//! counit 0 1
//! ```

use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError};
use crate::frobenius::{FrobeniusAlgebra, FrobeniusError};
use crate::group::{FiniteGroup, GroupError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("ParseError: line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("MissingCounit: a Frobenius file needs a `counit` line")]
    MissingCounit,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Frobenius(#[from] FrobeniusError),
}

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Parse { line, message: message.into() })
}

// (1-based line number, tokens) for every non-empty line
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let r = Rational::from_str(s.trim()).ok()?;
    Some(r)
}

fn parse_index(tok: &str, line: usize) -> Result<usize, FormatError> {
    tok.parse().or_else(|_| parse_err(line, format!("expected a non-negative integer, found `{tok}`")))
}

fn parse_rationals(tokens: &[&str], line: usize) -> Result<Vec<Rational>, FormatError> {
    tokens
        .iter()
        .map(|t| parse_rational(t).map_or_else(|| parse_err(line, format!("expected a rational, found `{t}`")), Ok))
        .collect()
}

/// Which kind of object a text file describes, judged by its first keyword.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    GroupTable,
    Permutations,
    Algebra,
}

pub fn detect_kind(text: &str) -> Option<FileKind> {
    let (_, first) = content_lines(text).next()?;
    match first[0] {
        "order" => Some(FileKind::GroupTable),
        "perm" => Some(FileKind::Permutations),
        "dim" => Some(FileKind::Algebra),
        _ => None,
    }
}

/// Parses either group format.
pub fn parse_group(text: &str) -> Result<FiniteGroup, FormatError> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return parse_err(1, "empty group file");
    };
    let mut name = None;
    let group = match header.as_slice() {
        ["order", n] => {
            let n = parse_index(n, line)?;
            let mut rows = Vec::with_capacity(n);
            for (line, toks) in lines {
                if toks[0] == "name" {
                    name = Some(toks[1..].join(" "));
                    continue;
                }
                if rows.len() == n {
                    return parse_err(line, "more table rows than the declared order");
                }
                rows.push(toks.iter().map(|t| parse_index(t, line)).collect::<Result<Vec<_>, _>>()?);
            }
            if rows.len() != n {
                return parse_err(line, format!("expected {n} table rows, found {}", rows.len()));
            }
            FiniteGroup::from_table(rows)?
        }
        ["perm", "degree", d] => {
            let degree = parse_index(d, line)?;
            let mut gens = Vec::new();
            for (line, toks) in lines {
                if toks[0] == "name" {
                    name = Some(toks[1..].join(" "));
                    continue;
                }
                gens.push(toks.iter().map(|t| parse_index(t, line)).collect::<Result<Vec<_>, _>>()?);
            }
            FiniteGroup::from_permutations(degree, &gens)?
        }
        _ => return parse_err(line, "expected `order n` or `perm degree d`"),
    };
    Ok(match name {
        Some(n) => group.with_name(n),
        None => group,
    })
}

/// Parses an algebra file; the counit is returned when present.
pub fn parse_algebra(text: &str) -> Result<(Algebra<Rational>, Option<Vec<Rational>>), FormatError> {
    let mut lines = content_lines(text);
    let dim = match lines.next() {
        Some((line, toks)) => match toks.as_slice() {
            ["dim", n] => parse_index(n, line)?,
            _ => return parse_err(line, "expected `dim n`"),
        },
        None => return parse_err(1, "empty algebra file"),
    };
    if dim == 0 {
        return parse_err(1, "dimension must be positive");
    }
    let mut unit = None;
    let mut counit = None;
    let mut structure = vec![Rational::from_integer(0.into()); dim * dim * dim];
    for (line, toks) in lines {
        match toks[0] {
            "unit" | "counit" => {
                let v = parse_rationals(&toks[1..], line)?;
                if v.len() != dim {
                    return parse_err(line, format!("`{}` needs {dim} entries, found {}", toks[0], v.len()));
                }
                if toks[0] == "unit" { unit = Some(v) } else { counit = Some(v) }
            }
            "c" => {
                let [_, i, j, k, value] = toks.as_slice() else {
                    return parse_err(line, "expected `c i j k value`");
                };
                let (i, j, k) = (parse_index(i, line)?, parse_index(j, line)?, parse_index(k, line)?);
                if i >= dim || j >= dim || k >= dim {
                    return parse_err(line, format!("index out of range for dimension {dim}"));
                }
                structure[(i * dim + j) * dim + k] = parse_rationals(&[value], line)?.remove(0);
            }
            other => return parse_err(line, format!("unknown keyword `{other}`")),
        }
    }
    let Some(unit) = unit else {
        return parse_err(1, "missing `unit` line");
    };
    Ok((Algebra::from_flat(dim, structure, unit)?, counit))
}

pub fn parse_frobenius(text: &str) -> Result<FrobeniusAlgebra<Rational>, FormatError> {
    let (algebra, counit) = parse_algebra(text)?;
    let counit = counit.ok_or(FormatError::MissingCounit)?;
    Ok(FrobeniusAlgebra::from_counit(algebra, counit)?)
}

/// Writes an algebra (and optional counit) in the format read by [`parse_algebra`].
pub fn format_algebra(algebra: &Algebra<Rational>, counit: Option<&[Rational]>) -> String {
    let n = algebra.dim();
    let join = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let mut out = format!("dim {n}\nunit {}\n", join(algebra.unit().coords()));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = algebra.constant(i, j, k);
                if *c != Rational::from_integer(0.into()) {
                    out.push_str(&format!("c {i} {j} {k} {c}\n"));
                }
            }
        }
    }
    if let Some(c) = counit {
        out.push_str(&format!("counit {}\n", join(c)));
    }
    out
}
