//! Line-oriented algebra-definition format.
//!
//! ```text
//! # comment
//! dim 3
//! [3,2] = 1*Z1
//! ```
//!
//! A `dim <n>` header is followed by bracket lines
//! `[<i>,<j>] = <c1>*Z<k1> + <c2>*Z<k2> ...` with exact rational
//! coefficients (`-3/2`), bare `Z<k>` meaning coefficient 1, and `0` for an
//! explicitly zero bracket. Omitted brackets are zero; `[j,i]` lines are
//! accepted and negated; conflicting duplicates are rejected. Indices `Z<k>`
//! always refer to basis positions, independent of display names.

use num_traits::Zero;

use crate::error::Error;
use crate::lie::{BracketRelation, Functional, LieAlgebra};
use crate::rational::{format_combination, parse_rational, parse_rational_csv, Rational};

/// Keep the structure-constant tensor from absurd allocations on hostile
/// input; everything this crate targets is far below this.
pub const MAX_DIM: usize = 64;

/// Location of a construct in the source text, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub line: usize,
    pub col: usize,
}

/// One parsed bracket line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketLine {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<Rational>,
    pub span: SourceSpan,
}

/// Syntax-checked algebra file, prior to algebraic validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub declared_dim: usize,
    pub bracket_lines: Vec<BracketLine>,
}

fn parse_err(line: usize, col: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        message: message.into(),
    }
}

/// Character scanner with 1-based column tracking.
struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    base_col: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str, line: usize, base_col: usize) -> Self {
        Scanner {
            bytes: text.as_bytes(),
            pos: 0,
            line,
            base_col,
        }
    }

    fn col(&self) -> usize {
        self.base_col + self.pos
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: u8) -> Result<(), Error> {
        match self.peek() {
            Some(b) if b == want => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(parse_err(
                self.line,
                self.col(),
                format!("expected `{}`", want as char),
            )),
        }
    }

    fn parse_usize(&mut self, what: &str) -> Result<usize, Error> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(parse_err(
                self.line,
                self.base_col + start,
                format!("expected {what}"),
            ));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| parse_err(self.line, self.base_col + start, format!("invalid {what}")))
    }

    /// `Z<k>` with 1 <= k <= n.
    fn parse_basis_ref(&mut self, n: usize) -> Result<usize, Error> {
        let col = self.col();
        self.expect(b'Z')
            .map_err(|_| parse_err(self.line, col, "expected basis vector `Z<k>`"))?;
        let k = self.parse_usize("basis index")?;
        if k < 1 || k > n {
            return Err(parse_err(
                self.line,
                col,
                format!("basis index {k} out of range 1..={n}"),
            ));
        }
        Ok(k)
    }

    /// A rational literal up to the next `*`.
    fn parse_coefficient(&mut self) -> Result<Rational, Error> {
        let start = self.pos;
        while matches!(
            self.peek(),
            Some(b'0'..=b'9') | Some(b'/') | Some(b'-') | Some(b'+')
        ) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        parse_rational(text).map_err(|msg| parse_err(self.line, self.base_col + start, msg))
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }
}

/// Parse the linear combination after `=` into a coefficient vector.
fn parse_combination(scanner: &mut Scanner, n: usize) -> Result<Vec<Rational>, Error> {
    let mut coeffs = vec![Rational::zero(); n];
    scanner.skip_ws();
    // Explicit zero bracket.
    if scanner.peek() == Some(b'0') {
        let save = scanner.pos;
        scanner.pos += 1;
        if scanner.at_end() {
            return Ok(coeffs);
        }
        scanner.pos = save;
    }
    let mut negative = false;
    if scanner.peek() == Some(b'-') {
        negative = true;
        scanner.pos += 1;
    } else if scanner.peek() == Some(b'+') {
        scanner.pos += 1;
    }
    loop {
        scanner.skip_ws();
        let (coeff, k) = if scanner.peek() == Some(b'Z') {
            (Rational::from_integer(1.into()), scanner.parse_basis_ref(n)?)
        } else {
            let coeff = scanner.parse_coefficient()?;
            scanner.skip_ws();
            scanner.expect(b'*')?;
            scanner.skip_ws();
            (coeff, scanner.parse_basis_ref(n)?)
        };
        if negative {
            coeffs[k - 1] -= coeff;
        } else {
            coeffs[k - 1] += coeff;
        }
        scanner.skip_ws();
        match scanner.peek() {
            None => return Ok(coeffs),
            Some(b'+') => {
                negative = false;
                scanner.pos += 1;
            }
            Some(b'-') => {
                negative = true;
                scanner.pos += 1;
            }
            Some(_) => {
                return Err(parse_err(
                    scanner.line,
                    scanner.col(),
                    "expected `+`, `-`, or end of line",
                ))
            }
        }
    }
}

fn parse_bracket_line(
    trimmed: &str,
    line: usize,
    base_col: usize,
    n: usize,
) -> Result<BracketLine, Error> {
    let span = SourceSpan { line, col: base_col };
    let mut scanner = Scanner::new(trimmed, line, base_col);
    scanner
        .expect(b'[')
        .map_err(|_| parse_err(line, base_col, "expected a bracket line `[i,j] = ...`"))?;
    scanner.skip_ws();
    let i = scanner.parse_usize("basis index")?;
    scanner.skip_ws();
    scanner.expect(b',')?;
    scanner.skip_ws();
    let j = scanner.parse_usize("basis index")?;
    scanner.skip_ws();
    scanner.expect(b']')?;
    for idx in [i, j] {
        if idx < 1 || idx > n {
            return Err(parse_err(
                line,
                base_col,
                format!("basis index {idx} out of range 1..={n}"),
            ));
        }
    }
    scanner.skip_ws();
    scanner.expect(b'=')?;
    let coeffs = parse_combination(&mut scanner, n)?;
    Ok(BracketLine { i, j, coeffs, span })
}

/// Syntax pass: check the grammar and collect bracket lines.
pub fn parse_document(text: &str) -> Result<AlgebraDocument, Error> {
    let mut declared_dim: Option<usize> = None;
    let mut bracket_lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or_default();
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let base_col = content.len() - content.trim_start().len() + 1;
        match declared_dim {
            None => {
                let rest = trimmed.strip_prefix("dim").filter(|r| {
                    r.starts_with(|c: char| c.is_whitespace())
                });
                let Some(rest) = rest else {
                    return Err(parse_err(line, base_col, "expected `dim <n>` header"));
                };
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(line, base_col + 4, "invalid dimension"))?;
                if n == 0 {
                    return Err(parse_err(line, base_col + 4, "dimension must be at least 1"));
                }
                if n > MAX_DIM {
                    return Err(parse_err(
                        line,
                        base_col + 4,
                        format!("dimension {n} exceeds the supported limit {MAX_DIM}"),
                    ));
                }
                declared_dim = Some(n);
            }
            Some(n) => {
                bracket_lines.push(parse_bracket_line(trimmed, line, base_col, n)?);
            }
        }
    }
    let Some(declared_dim) = declared_dim else {
        return Err(parse_err(1, 1, "missing `dim <n>` header"));
    };
    Ok(AlgebraDocument {
        declared_dim,
        bracket_lines,
    })
}

impl AlgebraDocument {
    /// Run the full algebraic validation and build the algebra.
    pub fn build(&self) -> Result<LieAlgebra, Error> {
        let relations: Vec<BracketRelation> = self
            .bracket_lines
            .iter()
            .map(|b| (b.i, b.j, b.coeffs.clone()))
            .collect();
        LieAlgebra::new(self.declared_dim, &relations)
    }

    /// Best-effort source location for a validation error that references
    /// bracket indices: the last matching line for duplicate conflicts, the
    /// first line touching the triple for Jacobi failures.
    pub fn span_for_error(&self, error: &Error) -> Option<SourceSpan> {
        let find_pair = |a: usize, b: usize, last: bool| {
            let mut hits = self
                .bracket_lines
                .iter()
                .filter(|l| (l.i, l.j) == (a, b) || (l.i, l.j) == (b, a));
            if last {
                hits.last().map(|l| l.span)
            } else {
                hits.next().map(|l| l.span)
            }
        };
        match error {
            Error::AntisymmetryConflict { i, j } => find_pair(*i, *j, true),
            Error::MalcevViolation { i, j, .. } => find_pair(*i, *j, false),
            Error::JacobiViolation { i, j, k, .. } => find_pair(*i, *j, false)
                .or_else(|| find_pair(*j, *k, false))
                .or_else(|| find_pair(*i, *k, false)),
            _ => None,
        }
    }
}

/// Parse and validate in one step.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra, Error> {
    parse_document(text)?.build()
}

/// Parse a comma-separated functional of length n.
pub fn parse_functional(text: &str, n: usize) -> Result<Functional, Error> {
    Ok(Functional::new(parse_rational_csv(text, n)?))
}

/// Serialize an algebra back to the file format. Deterministic; emits each
/// nonzero bracket once, oriented so its first coefficient is positive, and
/// records non-default display names in a comment.
pub fn emit_algebra(g: &LieAlgebra) -> String {
    let n = g.n();
    let canonical: Vec<String> = (1..=n).map(|k| format!("Z{k}")).collect();
    let mut out = String::new();
    if g.basis_names() != canonical.as_slice() {
        out.push_str("# basis: ");
        out.push_str(&g.basis_names().join(" "));
        out.push('\n');
    }
    out.push_str(&format!("dim {n}\n"));
    for i in 1..=n {
        for j in i + 1..=n {
            let coeffs = g.bracket_basis(i, j);
            let Some(first) = coeffs.iter().find(|c| !c.is_zero()) else {
                continue;
            };
            use num_traits::Signed;
            if first.is_positive() {
                out.push_str(&format!(
                    "[{i},{j}] = {}\n",
                    format_combination(coeffs, &canonical)
                ));
            } else {
                out.push_str(&format!(
                    "[{j},{i}] = {}\n",
                    format_combination(g.bracket_basis(j, i), &canonical)
                ));
            }
        }
    }
    out
}
