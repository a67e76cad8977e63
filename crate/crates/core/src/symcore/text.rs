//! Text form of polynomials, forms and vector fields.
//!
//! Coordinates are named `x y z w` on charts of dimension at most four and
//! `x1 .. xn` otherwise. A basis form is a `^`-separated list of `d<var>`.
//! Printing then parsing is the identity on canonical values.
//!
//! ```text
//! form    := sign? term (('+' | '-') term)*
//! term    := product ('*'? basis)? | basis
//! product := factor ('*' factor)*
//! factor  := number | var ('^' int)? | '(' poly ')'
//! basis   := dvar ('^' dvar)*
//! number  := int ('/' int)?
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::form::{mask_indices, merge_sign, Form};
use super::poly::{Monomial, Poly, Rational};
use super::vector_field::VectorField;
use crate::error::{Error, Result};

/// Name of coordinate `i` on an `n`-dimensional chart.
pub fn var_name(n: usize, i: usize) -> String {
    if n <= 4 {
        ["x", "y", "z", "w"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

fn var_index(n: usize, name: &str) -> Option<usize> {
    (0..n).find(|&i| var_name(n, i) == name)
}

fn monomial_string(n: usize, m: Monomial) -> String {
    let mut parts = Vec::new();
    for i in 0..n {
        match m.exponent(i) {
            0 => {}
            1 => parts.push(var_name(n, i)),
            e => parts.push(format!("{}^{}", var_name(n, i), e)),
        }
    }
    parts.join("*")
}

/// A signed summand with its unsigned body.
fn poly_summands(p: &Poly) -> Vec<(bool, String)> {
    let n = p.nvars();
    p.display_terms()
        .into_iter()
        .map(|(m, c)| {
            let neg = c.is_negative();
            let a = c.abs();
            let body = if m == Monomial::ONE {
                a.to_string()
            } else if a.is_one() {
                monomial_string(n, m)
            } else {
                format!("{}*{}", a, monomial_string(n, m))
            };
            (neg, body)
        })
        .collect()
}

fn join_summands(s: &[(bool, String)]) -> String {
    if s.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (neg, body)) in s.iter().enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(body);
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_summands(&poly_summands(self)))
    }
}

fn basis_string(n: usize, mask: u32) -> String {
    mask_indices(mask).into_iter().map(|i| format!("d{}", var_name(n, i))).collect::<Vec<_>>().join("^")
}

fn form_summands(form: &Form) -> Vec<(bool, String)> {
    let n = form.chart_dim();
    let mut comps: Vec<(u32, &Poly)> = form.components().collect();
    comps.sort_by_key(|(m, _)| (m.count_ones(), mask_indices(*m)));
    let mut out = Vec::new();
    for (mask, p) in comps {
        if mask == 0 {
            out.extend(poly_summands(p));
            continue;
        }
        let b = basis_string(n, mask);
        if p.num_terms() == 1 {
            let (neg, body) = poly_summands(p).remove(0);
            if body == "1" {
                out.push((neg, b));
            } else {
                out.push((neg, format!("{body} {b}")));
            }
        } else if p.leading_negative() {
            out.push((true, format!("({}) {b}", -p)));
        } else {
            out.push((false, format!("({p}) {b}")));
        }
    }
    out
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_summands(&form_summands(self)))
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.chart_dim();
        let mut s = Vec::new();
        for i in 0..n {
            let p = self.component(i);
            if p.is_zero() {
                continue;
            }
            let d = format!("d/d{}", var_name(n, i));
            if p.num_terms() == 1 {
                let (neg, body) = poly_summands(p).remove(0);
                if body == "1" {
                    s.push((neg, d));
                } else {
                    s.push((neg, format!("{body} {d}")));
                }
            } else {
                s.push((false, format!("({p}) {d}")));
            }
        }
        f.write_str(&join_summands(&s))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Basis(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse { column, message: message.into() }
}

fn tokenize(n: usize, src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().expect("digits parse")), col));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if let Some(v) = var_index(n, &word) {
                out.push((Tok::Var(v), col));
            } else if let Some(v) = word.strip_prefix('d').and_then(|w| var_index(n, w)) {
                out.push((Tok::Basis(v), col));
            } else {
                return Err(err(col, format!("unknown symbol `{word}` on a chart of dimension {n}")));
            }
            continue;
        }
        return Err(err(col, format!("unexpected character `{c}`")));
    }
    Ok(out)
}

struct Parser {
    n: usize,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect_int(&mut self) -> Result<BigInt> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Num(v)) => Ok(v),
            _ => Err(err(col, "expected an integer")),
        }
    }

    fn form(&mut self, allow_basis: bool) -> Result<Form> {
        let mut total = Form::zero(self.n);
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.bump();
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        loop {
            let t = self.term(allow_basis)?;
            if negate {
                total -= &t;
            } else {
                total += &t;
            }
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => break,
            }
            self.bump();
        }
        Ok(total)
    }

    fn term(&mut self, allow_basis: bool) -> Result<Form> {
        let coeff = if matches!(self.peek(), Some(Tok::Basis(_))) {
            Poly::one(self.n)
        } else {
            let mut p = self.factor()?;
            while self.peek() == Some(&Tok::Star) {
                self.bump();
                if matches!(self.peek(), Some(Tok::Basis(_))) {
                    break;
                }
                p = &p * &self.factor()?;
            }
            p
        };
        if let Some(Tok::Basis(_)) = self.peek() {
            if !allow_basis {
                return Err(err(self.col(), "basis forms are not allowed here"));
            }
            let mut mask = 0u32;
            let mut s = 1;
            loop {
                let col = self.col();
                let Some(Tok::Basis(i)) = self.bump() else {
                    return Err(err(col, "expected a basis form such as dx"));
                };
                s *= merge_sign(mask, 1 << i);
                mask |= 1 << i;
                if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                } else {
                    break;
                }
            }
            let f = Form::term(coeff, mask);
            return Ok(match s {
                0 => Form::zero(self.n),
                1 => f,
                _ => -f,
            });
        }
        Ok(Form::function(coeff))
    }

    fn factor(&mut self) -> Result<Poly> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Num(v)) => {
                let mut q = Rational::from_integer(v);
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dcol = self.col();
                    let d = self.expect_int()?;
                    if d.is_zero() {
                        return Err(err(dcol, "division by zero"));
                    }
                    q /= Rational::from_integer(d);
                }
                Ok(Poly::constant(self.n, q))
            }
            Some(Tok::Var(i)) => {
                let mut e = 1u32;
                if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    let ecol = self.col();
                    let v = self.expect_int()?;
                    e = u32::try_from(v).ok().filter(|e| *e < 256).ok_or_else(|| err(ecol, "exponent too large"))?;
                }
                let mut exps = vec![0; self.n];
                exps[i] = e;
                Ok(Poly::monomial(self.n, Monomial::from_exponents(&exps), Rational::one()))
            }
            Some(Tok::LParen) => {
                let inner = self.form(false)?;
                let rcol = self.col();
                if self.bump() != Some(Tok::RParen) {
                    return Err(err(rcol, "expected `)`"));
                }
                Ok(inner.function_part())
            }
            _ => Err(err(col, "expected a number, a coordinate or `(`")),
        }
    }
}

fn parse_with(n: usize, src: &str, allow_basis: bool) -> Result<Form> {
    let toks = tokenize(n, src)?;
    if toks.is_empty() {
        return Err(err(1, "empty expression"));
    }
    let mut p = Parser { n, toks, pos: 0, end_col: src.chars().count() + 1 };
    let f = p.form(allow_basis)?;
    if p.pos < p.toks.len() {
        return Err(err(p.col(), "unexpected trailing input"));
    }
    Ok(f)
}

/// Parse a form literal such as `(x + y) dx^dz - 3/2*z`.
pub fn parse_form(n: usize, src: &str) -> Result<Form> {
    parse_with(n, src, true)
}

/// Parse a polynomial literal such as `x^2*y - 1/3`.
pub fn parse_poly(n: usize, src: &str) -> Result<Poly> {
    Ok(parse_with(n, src, false)?.function_part())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::poly::ratio;

    #[test]
    fn prints_canonical_text() {
        let f = parse_form(3, "x^2*y dx^dy").unwrap();
        assert_eq!(f.to_string(), "x^2*y dx^dy");
        let g = parse_form(3, "(x + y) dx^dz - 3/2*z").unwrap();
        assert_eq!(g.to_string(), "-3/2*z + (x + y) dx^dz");
    }

    #[test]
    fn reordered_basis_picks_up_a_sign() {
        assert_eq!(parse_form(2, "dy^dx").unwrap(), -Form::basis(2, 0b11));
        assert!(parse_form(2, "dx^dx").unwrap().is_zero());
    }

    #[test]
    fn rational_coefficients() {
        assert_eq!(parse_poly(1, "1/2 + 0*x").unwrap(), Poly::constant(1, ratio(1, 2)));
    }

    #[test]
    fn large_charts_use_indexed_names() {
        let f = parse_form(5, "x5 dx1^dx3").unwrap();
        assert_eq!(f.to_string(), "x5 dx1^dx3");
    }

    #[test]
    fn errors_carry_columns() {
        assert_eq!(
            parse_form(2, "x + q dx"),
            Err(Error::Parse { column: 5, message: "unknown symbol `q` on a chart of dimension 2".into() })
        );
        assert!(matches!(parse_form(2, "(x + y dx"), Err(Error::Parse { column: 8, .. })));
        assert!(matches!(parse_poly(2, "x dx"), Err(Error::Parse { column: 3, .. })));
    }

    #[test]
    fn documented_literals() {
        for (n, src) in [(3, "x*z dx^dy"), (3, "(1/2 + y^2) dz"), (5, "3 dx1^dx4 - x2 dx5"), (2, "x^2*y")] {
            let f = parse_form(n, src).unwrap();
            assert_eq!(parse_form(n, &f.to_string()).unwrap(), f, "{src}");
        }
        assert_eq!(parse_form(3, "y*x dz^dx").unwrap().to_string(), "-x*y dx^dz");
        assert_eq!(parse_form(3, " x  dz ^ dx ").unwrap(), parse_form(3, "-x dx^dz").unwrap());
        assert!(parse_form(2, "y dx^dx").unwrap().is_zero());
    }
}
