//! Cycle notation for permutations of `[n]^k`.
//!
//! Grammar: one or more parenthesized cycles, each a comma-separated list of
//! parenthesized k-tuples of integers. Whitespace is insignificant. `()` is
//! the identity. Examples: `((1,1),(1,2))((2,1),(2,2))`, `((1),(2),(3))`.
//!
//! Formatting is canonical: fixed points omitted, each cycle rotated to start
//! at its smallest code, cycles sorted by that code, no whitespace. The
//! identity formats as `()`.

use crate::error::{Error, Result};
use crate::multi_index::{degree, MultiIndex};
use crate::perm::Permutation;

/// A validated list of disjoint cycles over `[n]^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSpec {
    n: usize,
    k: usize,
    cycles: Vec<Vec<MultiIndex>>,
}

impl CycleSpec {
    /// Validates disjointness and cycle lengths; all indices must share `(n, k)`.
    pub fn new(n: usize, k: usize, cycles: Vec<Vec<MultiIndex>>) -> Result<Self> {
        let d = degree(n, k)?;
        let mut seen = vec![false; d];
        for cycle in &cycles {
            if cycle.len() < 2 {
                return Err(Error::ShortCycle { len: cycle.len() });
            }
            for m in cycle {
                if m.n() != n || m.len() != k {
                    return Err(Error::ShapeMismatch {
                        expected_n: n,
                        expected_k: k,
                        found_n: m.n(),
                        found_k: m.len(),
                    });
                }
                let c = m.rank();
                if seen[c] {
                    return Err(Error::DuplicatePoint {
                        point: m.to_string(),
                    });
                }
                seen[c] = true;
            }
        }
        Ok(CycleSpec { n, k, cycles })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cycles(&self) -> &[Vec<MultiIndex>] {
        &self.cycles
    }

    /// Each multi-index maps to its cyclic successor.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let d = degree(self.n, self.k)?;
        let mut image: Vec<usize> = (0..d).collect();
        for cycle in &self.cycles {
            for (i, m) in cycle.iter().enumerate() {
                let next = &cycle[(i + 1) % cycle.len()];
                image[m.rank()] = next.rank();
            }
        }
        Permutation::from_image(self.n, self.k, image)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    n: usize,
    k: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            found => Err(self.syntax(match found {
                Some(b) => format!("expected '{}', found '{}'", byte as char, b as char),
                None => format!("expected '{}', found end of input", byte as char),
            })),
        }
    }

    fn syntax(&self, message: String) -> Error {
        Error::Syntax {
            position: self.pos,
            message,
        }
    }

    fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Syntax {
                position: start,
                message: "expected an integer".into(),
            });
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Syntax {
                position: start,
                message: "integer too large".into(),
            })
    }

    fn tuple(&mut self) -> Result<MultiIndex> {
        self.expect(b'(')?;
        let mut letters = Vec::with_capacity(self.k);
        loop {
            letters.push(self.integer()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                Some(b) => {
                    return Err(self.syntax(format!(
                        "expected ',' or ')' in multi-index, found '{}'",
                        b as char
                    )))
                }
                None => return Err(self.syntax("unterminated multi-index".into())),
            }
        }
        if letters.len() != self.k {
            return Err(self.syntax(format!(
                "expected {} letters in multi-index, found {}",
                self.k,
                letters.len()
            )));
        }
        MultiIndex::new(self.n, letters)
    }

    /// One parenthesized cycle; `None` for the empty cycle `()`.
    fn cycle(&mut self) -> Result<Option<Vec<MultiIndex>>> {
        self.expect(b'(')?;
        if self.peek() == Some(b')') {
            self.pos += 1;
            return Ok(None);
        }
        let mut cycle = Vec::new();
        loop {
            cycle.push(self.tuple()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                Some(b) => {
                    return Err(self.syntax(format!(
                        "expected ',' or ')' in cycle, found '{}'",
                        b as char
                    )))
                }
                None => return Err(self.syntax("unterminated cycle".into())),
            }
        }
        Ok(Some(cycle))
    }
}

/// Parses cycle notation over `[n]^k`, validating letters, arity,
/// disjointness, and cycle lengths.
pub fn parse_cycles(text: &str, n: usize, k: usize) -> Result<CycleSpec> {
    degree(n, k)?;
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        n,
        k,
    };
    let mut cycles = Vec::new();
    if parser.peek().is_none() {
        return Err(parser.syntax("expected at least one cycle".into()));
    }
    while parser.peek().is_some() {
        if let Some(cycle) = parser.cycle()? {
            cycles.push(cycle);
        }
    }
    CycleSpec::new(n, k, cycles)
}

/// Canonical cycle-notation string for a permutation.
pub fn format_cycles(p: &Permutation) -> String {
    let mut visited = vec![false; p.degree()];
    let mut out = String::new();
    for start in 0..p.degree() {
        if visited[start] || p.apply_code(start) == start {
            visited[start] = true;
            continue;
        }
        out.push('(');
        let mut code = start;
        let mut first = true;
        while !visited[code] {
            visited[code] = true;
            if !first {
                out.push(',');
            }
            first = false;
            // unrank cannot fail inside the degree range
            let m = MultiIndex::from_rank(code, p.n(), p.k()).expect("code in range");
            out.push_str(&m.to_string());
            code = p.apply_code(code);
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
