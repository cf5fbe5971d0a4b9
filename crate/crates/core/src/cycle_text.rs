//! Disjoint cycle notation.
//!
//! Input grammar:
//!
//! ```text
//! perm  := "()" | cycle+
//! cycle := "(" point (sep point)* ")"
//! sep   := "," | whitespace
//! point := decimal nonnegative integer
//! ```
//!
//! Whitespace is allowed around cycles and separators. Cycles are applied
//! left to right as in [`Perm::from_cycles`] and need not be disjoint;
//! 1-cycles are accepted and contribute nothing. Output is canonical: cycles
//! rotated to their smallest point, sorted, space separated, and `()` for the
//! identity.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Perm, Point};

/// Parses cycle text into a perm.
pub fn parse(text: &str) -> Result<Perm> {
    let cycles = parse_cycles(text)?;
    Perm::from_cycles(&cycles)
}

/// Parses cycle text into its literal list of cycles, without composing them.
///
/// Repeated points inside one cycle are reported as
/// [`Error::MalformedCycle`].
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<Point>>> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.eat_exact(b"()") {
        p.skip_ws();
        return if p.at_end() {
            Ok(Vec::new())
        } else {
            Err(p.error("unexpected input after identity \"()\""))
        };
    }
    let mut cycles = Vec::new();
    loop {
        cycles.push(p.cycle()?);
        p.skip_ws();
        if p.at_end() {
            break;
        }
    }
    Ok(cycles)
}

/// Canonical cycle text of `p`.
pub fn format(p: &Perm) -> String {
    p.to_string()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.pos, message: message.into() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn eat_exact(&mut self, s: &[u8]) -> bool {
        if self.bytes[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn cycle(&mut self) -> Result<Vec<Point>> {
        if self.peek() != Some(b'(') {
            return Err(self.error("expected '('"));
        }
        self.pos += 1;
        self.skip_ws();
        if self.peek() == Some(b')') {
            return Err(self.error("empty cycle"));
        }
        let mut points = vec![self.point()?];
        loop {
            let had_ws = self.skip_ws();
            match self.peek() {
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                Some(b',') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(_) if had_ws => {}
                Some(_) => return Err(self.error("expected separator or ')'")),
                None => return Err(self.error("unclosed cycle")),
            }
            points.push(self.point()?);
        }
        let mut sorted = points.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedCycle { point: w[0] });
        }
        Ok(points)
    }

    fn point(&mut self) -> Result<Point> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a nonnegative integer"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits.parse::<Point>().map_err(|_| Error::Parse {
            position: start,
            message: format!("point {digits} is too large"),
        })
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("()");
        }
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (i, pt) in cycle.points().iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{pt}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}
