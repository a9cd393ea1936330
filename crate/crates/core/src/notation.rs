// SPDX-License-Identifier: Apache-2.0

//! Structure-equation notation: `de^1, …, de^n` separated by commas.
//!
//! ```text
//! 0,0,e^{12}
//! 2/3e^{14},2/3e^{24},4/3e^{34}+e^{12},0
//! ```
//!
//! Terms are `[±][p[/q]][*]e^{ij}`. With more than nine basis vectors the
//! index pair is written with a comma inside the braces, e.g. `e^{1,12}`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactla::Scalar;
use crate::liealg::LieAlgebra;
use crate::structures::TwoForm;
use crate::{Error, Result};

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Splits on commas outside braces; returns `(byte offset, text)` pieces.
fn split_entries(text: &str) -> Result<Vec<(usize, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (pos, ch) in text.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| perr(pos, "unbalanced '}'"))?;
            }
            ',' if depth == 0 => {
                out.push((start, &text[start..pos]));
                start = pos + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(perr(text.len(), "unclosed '{'"));
    }
    out.push((start, &text[start..]));
    Ok(out)
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    base: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn at(&self) -> usize {
        self.base + self.pos
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| core::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

/// One `de^k` entry as `((i, j), coefficient)` with `i < j`, 0-based.
fn parse_entry(text: &str, base: usize, dim: usize) -> Result<Vec<((usize, usize), Scalar)>> {
    let mut cur = Cursor {
        s: text.as_bytes(),
        pos: 0,
        base,
    };
    cur.skip_ws();
    let mut terms: Vec<((usize, usize), Scalar)> = Vec::new();
    if cur.peek() == Some(b'0') {
        let save = cur.pos;
        cur.pos += 1;
        cur.skip_ws();
        if cur.peek().is_none() {
            return Ok(terms);
        }
        cur.pos = save;
    }
    if cur.peek().is_none() {
        return Err(perr(cur.at(), "empty entry (use 0)"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
        let mut sign = Scalar::one();
        if cur.eat(b'-') {
            sign = -sign;
        } else if !cur.eat(b'+') && !first {
            return Err(perr(cur.at(), "expected '+' or '-' between terms"));
        }
        first = false;
        cur.skip_ws();
        let mut coeff = Scalar::one();
        if let Some(num) = cur.digits() {
            let num: BigInt = num.parse().unwrap();
            let den: BigInt = if cur.eat(b'/') {
                let at = cur.at();
                let d = cur
                    .digits()
                    .ok_or_else(|| perr(at, "expected denominator"))?;
                d.parse().unwrap()
            } else {
                BigInt::one()
            };
            if den.is_zero() {
                return Err(perr(cur.at(), "zero denominator"));
            }
            coeff = Scalar::new(num, den);
            cur.skip_ws();
            cur.eat(b'*');
            cur.skip_ws();
        }
        let at = cur.at();
        if !(cur.eat(b'e') && cur.eat(b'^')) {
            return Err(perr(at, "expected e^{..}"));
        }
        let idx_at = cur.at();
        let indices: Vec<usize> = if cur.eat(b'{') {
            let start = cur.pos;
            while cur.peek().is_some_and(|c| c != b'}') {
                cur.pos += 1;
            }
            let inner = core::str::from_utf8(&cur.s[start..cur.pos]).unwrap();
            if !cur.eat(b'}') {
                return Err(perr(cur.at(), "expected '}'"));
            }
            parse_indices(inner, idx_at, dim)?
        } else {
            let d = cur
                .digits()
                .ok_or_else(|| perr(idx_at, "expected indices"))?;
            parse_indices(d, idx_at, dim)?
        };
        let [a, b] = indices[..] else {
            return Err(perr(idx_at, "expected exactly two indices"));
        };
        for &x in &[a, b] {
            if x == 0 || x > dim {
                return Err(Error::IndexOutOfRange { index: x, dim });
            }
        }
        if a == b {
            return Err(perr(idx_at, "repeated index"));
        }
        let (i, j, s) = if a < b {
            (a - 1, b - 1, sign)
        } else {
            (b - 1, a - 1, -sign)
        };
        let value = coeff * s;
        match terms.iter_mut().find(|(p, _)| *p == (i, j)) {
            Some((_, v)) => *v += value,
            None => terms.push(((i, j), value)),
        }
    }
    Ok(terms)
}

fn parse_indices(inner: &str, pos: usize, dim: usize) -> Result<Vec<usize>> {
    let inner = inner.trim();
    if inner.contains(',') {
        inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| perr(pos, "bad index"))
            })
            .collect()
    } else if dim > 9 {
        Err(perr(
            pos,
            "with more than nine basis vectors separate indices by ','",
        ))
    } else {
        inner
            .bytes()
            .map(|c| {
                if c.is_ascii_digit() {
                    Ok(usize::from(c - b'0'))
                } else {
                    Err(perr(pos, "bad index digit"))
                }
            })
            .collect()
    }
}

/// Parses structure equations; verifies the Jacobi identity.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    let entries = split_entries(text)?;
    let dim = entries.len();
    let mut g = LieAlgebra::abelian(dim);
    let mut brackets: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); dim]; dim * dim];
    for (k, (base, entry)) in entries.iter().enumerate() {
        for ((i, j), coeff) in parse_entry(entry, *base, dim)? {
            brackets[i * dim + j][k] -= coeff;
        }
    }
    for i in 0..dim {
        for j in i + 1..dim {
            let v = &brackets[i * dim + j];
            if v.iter().any(|x| !x.is_zero()) {
                g.set_bracket(i, j, v);
            }
        }
    }
    g.validate()?;
    Ok(g)
}

/// Parses a 2-form such as `e^{12}+4/3e^{34}` on a `dim`-dimensional algebra.
pub fn parse_two_form(text: &str, dim: usize) -> Result<TwoForm> {
    let terms = parse_entry(text.trim(), 0, dim)?;
    let terms: Vec<(usize, usize, Scalar)> =
        terms.into_iter().map(|((i, j), c)| (i, j, c)).collect();
    Ok(TwoForm::from_terms(dim, &terms))
}

fn format_index_pair(i: usize, j: usize, dim: usize) -> String {
    if dim > 9 {
        format!("e^{{{},{}}}", i + 1, j + 1)
    } else {
        format!("e^{{{}{}}}", i + 1, j + 1)
    }
}

/// Prints `de^k` for every `k`, terms in lexicographic order of `(i, j)`.
pub fn format_algebra(g: &LieAlgebra) -> String {
    let n = g.dim();
    let mut entries = Vec::with_capacity(n);
    for k in 0..n {
        let mut s = String::new();
        for i in 0..n {
            for j in i + 1..n {
                let coeff = -g.c(i, j, k).clone();
                if coeff.is_zero() {
                    continue;
                }
                let negative = coeff.is_negative();
                let mag = coeff.abs();
                if negative {
                    s.push('-');
                } else if !s.is_empty() {
                    s.push('+');
                }
                if !mag.is_one() {
                    s.push_str(&mag.to_string());
                }
                s.push_str(&format_index_pair(i, j, n));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        entries.push(s);
    }
    entries.join(",")
}
