//! Plain-text algebra files.
//!
//! ```text
//! semiring          # kind: semiring | semigroup | semilattice
//! order 2
//! add
//! 0 1
//! 1 1
//! mul
//! 0 0
//! 0 1
//! ```
//!
//! Semigroups have a single `op` block; semilattices a `join` block followed
//! by `top <i>`. `#` comments run to the end of the line and blank lines are
//! ignored. Entries are 0-based element indices.

use std::fmt::Write as _;

use crate::algebra::FiniteSemiring;
use crate::constructions::{FiniteSemigroup, FiniteSemilattice};
use crate::error::{Error, Result};
use crate::table::Table;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraFile {
    Semiring { add: Table, mul: Table },
    Semigroup { op: Table },
    Semilattice { join: Table, top: usize },
}

impl AlgebraFile {
    pub fn kind(&self) -> &'static str {
        match self {
            AlgebraFile::Semiring { .. } => "semiring",
            AlgebraFile::Semigroup { .. } => "semigroup",
            AlgebraFile::Semilattice { .. } => "semilattice",
        }
    }

    pub fn order(&self) -> usize {
        match self {
            AlgebraFile::Semiring { add, .. } => add.order(),
            AlgebraFile::Semigroup { op } => op.order(),
            AlgebraFile::Semilattice { join, .. } => join.order(),
        }
    }

    pub fn into_semiring(self) -> Result<FiniteSemiring> {
        match self {
            AlgebraFile::Semiring { add, mul } => FiniteSemiring::new(add, mul),
            other => Err(Error::Precondition(format!(
                "expected a semiring file, found a {}",
                other.kind()
            ))),
        }
    }

    pub fn into_semigroup(self) -> Result<FiniteSemigroup> {
        match self {
            AlgebraFile::Semigroup { op } => FiniteSemigroup::new(op),
            other => Err(Error::Precondition(format!(
                "expected a semigroup file, found a {}",
                other.kind()
            ))),
        }
    }

    pub fn into_semilattice(self) -> Result<FiniteSemilattice> {
        match self {
            AlgebraFile::Semilattice { join, top } => FiniteSemilattice::new(join, top),
            other => Err(Error::Precondition(format!(
                "expected a semilattice file, found a {}",
                other.kind()
            ))),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\norder {}\n", self.kind(), self.order());
        let mut block = |name: &str, t: &Table| {
            out.push_str(name);
            out.push('\n');
            for row in t.rows() {
                let line: Vec<String> = row.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "{}", line.join(" "));
            }
        };
        match self {
            AlgebraFile::Semiring { add, mul } => {
                block("add", add);
                block("mul", mul);
            }
            AlgebraFile::Semigroup { op } => block("op", op),
            AlgebraFile::Semilattice { join, top } => {
                block("join", join);
                let _ = writeln!(out, "top {top}");
            }
        }
        out
    }
}

impl From<&FiniteSemiring> for AlgebraFile {
    fn from(s: &FiniteSemiring) -> Self {
        AlgebraFile::Semiring {
            add: s.add_table().clone(),
            mul: s.mul_table().clone(),
        }
    }
}

impl From<&FiniteSemigroup> for AlgebraFile {
    fn from(g: &FiniteSemigroup) -> Self {
        AlgebraFile::Semigroup {
            op: g.table().clone(),
        }
    }
}

impl From<&FiniteSemilattice> for AlgebraFile {
    fn from(l: &FiniteSemilattice) -> Self {
        AlgebraFile::Semilattice {
            join: l.table().clone(),
            top: l.top(),
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    end_column: usize,
    tokens: Vec<Token<'a>>,
}

fn significant_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in content.char_indices().chain([(content.len(), ' ')]) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            text: &content[s..pos],
                            column: content[..s].chars().count() + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then(|| Line {
                number: i + 1,
                end_column: content.trim_end().chars().count() + 1,
                tokens,
            })
        })
        .collect()
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    next: usize,
    last_line: usize,
}

impl<'a> Parser<'a> {
    fn parse_error(line: usize, column: usize, expected: &str, found: &str) -> Error {
        Error::Parse {
            line,
            column,
            expected: expected.into(),
            found: found.into(),
        }
    }

    fn line(&mut self, expected: &str) -> Result<&Line<'a>> {
        match self.lines.get(self.next) {
            Some(_) => {
                self.next += 1;
                Ok(&self.lines[self.next - 1])
            }
            None => Err(Self::parse_error(
                self.last_line + 1,
                1,
                expected,
                "end of file",
            )),
        }
    }

    fn keyword(&mut self, words: &[&str]) -> Result<(&'a str, usize)> {
        let expected = words.join(" or ");
        let line = self.line(&expected)?;
        let first = &line.tokens[0];
        if !words.contains(&first.text) {
            return Err(Self::parse_error(
                line.number,
                first.column,
                &expected,
                first.text,
            ));
        }
        Ok((first.text, line.number))
    }

    /// A line `keyword <integer>`.
    fn keyword_value(&mut self, word: &str) -> Result<(usize, usize)> {
        let line = self.line(word)?;
        let first = &line.tokens[0];
        if first.text != word {
            return Err(Self::parse_error(
                line.number,
                first.column,
                word,
                first.text,
            ));
        }
        let value = match line.tokens.get(1) {
            Some(t) => t.text.parse::<usize>().map_err(|_| {
                Self::parse_error(line.number, t.column, "non-negative integer", t.text)
            })?,
            None => {
                return Err(Self::parse_error(
                    line.number,
                    line.end_column,
                    "non-negative integer",
                    "end of line",
                ))
            }
        };
        if let Some(extra) = line.tokens.get(2) {
            return Err(Self::parse_error(
                line.number,
                extra.column,
                "end of line",
                extra.text,
            ));
        }
        Ok((value, line.number))
    }

    fn block(&mut self, name: &str, n: usize) -> Result<Table> {
        let (_, header) = self.keyword(&[name])?;
        let line = &self.lines[self.next - 1];
        if let Some(extra) = line.tokens.get(1) {
            return Err(Self::parse_error(
                header,
                extra.column,
                "end of line",
                extra.text,
            ));
        }
        let mut cells = Vec::with_capacity(n * n);
        for _ in 0..n {
            let line = self.line("table row")?;
            for (k, tok) in line.tokens.iter().enumerate() {
                if k >= n {
                    return Err(Self::parse_error(
                        line.number,
                        tok.column,
                        "end of row",
                        tok.text,
                    ));
                }
                let v = tok.text.parse::<usize>().map_err(|_| {
                    Self::parse_error(line.number, tok.column, "non-negative integer", tok.text)
                })?;
                if v >= n {
                    return Err(Error::Semantic {
                        line: line.number,
                        message: format!("entry {v} out of range for order {n}"),
                    });
                }
                cells.push(v);
            }
            if line.tokens.len() < n {
                return Err(Self::parse_error(
                    line.number,
                    line.end_column,
                    "non-negative integer",
                    "end of line",
                ));
            }
        }
        Table::from_cells(n, cells)
    }

    fn finish(&mut self) -> Result<()> {
        if let Some(line) = self.lines.get(self.next) {
            let t = &line.tokens[0];
            return Err(Self::parse_error(
                line.number,
                t.column,
                "end of file",
                t.text,
            ));
        }
        Ok(())
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    let lines = significant_lines(text);
    let last_line = text.lines().count();
    let mut p = Parser {
        lines,
        next: 0,
        last_line,
    };
    let (kind, _) = p.keyword(&["semiring", "semigroup", "semilattice"])?;
    let (n, order_line) = p.keyword_value("order")?;
    if n == 0 {
        return Err(Error::Semantic {
            line: order_line,
            message: "order must be positive".into(),
        });
    }
    let file = match kind {
        "semiring" => {
            let add = p.block("add", n)?;
            let mul = p.block("mul", n)?;
            AlgebraFile::Semiring { add, mul }
        }
        "semigroup" => AlgebraFile::Semigroup {
            op: p.block("op", n)?,
        },
        _ => {
            let join = p.block("join", n)?;
            let (top, line) = p.keyword_value("top")?;
            if top >= n {
                return Err(Error::Semantic {
                    line,
                    message: format!("top {top} out of range for order {n}"),
                });
            }
            AlgebraFile::Semilattice { join, top }
        }
    };
    p.finish()?;
    Ok(file)
}
