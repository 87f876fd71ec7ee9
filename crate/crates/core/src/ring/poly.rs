//! Homogeneous-aware polynomials with exact coefficients, kept in canonical
//! form: terms sorted descending in grevlex, no zero coefficients, no
//! duplicate monomials.

use super::field::{Field, FieldElem};
use super::monomial::Monomial;
use super::Ring;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::cmp::Ordering;

pub type Term = (Monomial, FieldElem);

/// A polynomial in canonical sorted form. All arithmetic goes through the
/// owning [`Ring`], which supplies the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPoly {
    pub terms: Vec<Term>,
}

impl GradedPoly {
    pub fn zero() -> Self {
        GradedPoly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Total degree of the leading term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// All terms share one total degree (vacuously true for zero).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }
}

impl Ring {
    pub fn poly_zero(&self) -> GradedPoly {
        GradedPoly::zero()
    }

    pub fn poly_one(&self) -> GradedPoly {
        GradedPoly {
            terms: vec![(Monomial::one(self.nvars()), self.field().one())],
        }
    }

    pub fn poly_var(&self, idx: usize) -> GradedPoly {
        GradedPoly {
            terms: vec![(Monomial::var(self.nvars(), idx), self.field().one())],
        }
    }

    pub fn poly_const(&self, c: FieldElem) -> GradedPoly {
        if self.field().is_zero(&c) {
            GradedPoly::zero()
        } else {
            GradedPoly {
                terms: vec![(Monomial::one(self.nvars()), c)],
            }
        }
    }

    pub fn poly_monomial(&self, m: Monomial, c: FieldElem) -> GradedPoly {
        if self.field().is_zero(&c) {
            GradedPoly::zero()
        } else {
            GradedPoly { terms: vec![(m, c)] }
        }
    }

    /// Canonicalizes an arbitrary term list: sorts, merges, drops zeros.
    pub fn poly_from_terms(&self, mut terms: Vec<Term>) -> GradedPoly {
        terms.sort_by(|(a, _), (b, _)| b.cmp_grevlex(a));
        let field = self.field();
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            if let Some((last_m, last_c)) = out.last_mut() {
                if *last_m == m {
                    *last_c = field.add(last_c, &c);
                    if field.is_zero(last_c) {
                        out.pop();
                    }
                    continue;
                }
            }
            if !field.is_zero(&c) {
                out.push((m, c));
            }
        }
        GradedPoly { terms: out }
    }

    pub fn poly_add(&self, a: &GradedPoly, b: &GradedPoly) -> GradedPoly {
        let field = self.field();
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match a.terms[i].0.cmp_grevlex(&b.terms[j].0) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&a.terms[i].1, &b.terms[j].1);
                    if !field.is_zero(&c) {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        GradedPoly { terms: out }
    }

    pub fn poly_neg(&self, a: &GradedPoly) -> GradedPoly {
        let field = self.field();
        GradedPoly {
            terms: a
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn poly_sub(&self, a: &GradedPoly, b: &GradedPoly) -> GradedPoly {
        self.poly_add(a, &self.poly_neg(b))
    }

    pub fn poly_scale(&self, c: &FieldElem, a: &GradedPoly) -> GradedPoly {
        let field = self.field();
        if field.is_zero(c) {
            return GradedPoly::zero();
        }
        GradedPoly {
            terms: a
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), field.mul(c, x)))
                .collect(),
        }
    }

    /// Multiply by a single term; preserves canonical order.
    pub fn poly_mul_term(&self, m: &Monomial, c: &FieldElem, a: &GradedPoly) -> GradedPoly {
        let field = self.field();
        if field.is_zero(c) {
            return GradedPoly::zero();
        }
        GradedPoly {
            terms: a
                .terms
                .iter()
                .map(|(am, ac)| (m.mul(am), field.mul(c, ac)))
                .collect(),
        }
    }

    pub fn poly_mul(&self, a: &GradedPoly, b: &GradedPoly) -> GradedPoly {
        let mut acc = GradedPoly::zero();
        for (m, c) in &a.terms {
            acc = self.poly_add(&acc, &self.poly_mul_term(m, c, b));
        }
        acc
    }

    pub fn poly_format(&self, a: &GradedPoly) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let field = self.field();
        let mut s = String::new();
        for (i, (m, c)) in a.terms.iter().enumerate() {
            let neg = field.is_negative_rep(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coeff_str = field.format(&abs);
            let mono_str = self.monomial_format(m);
            if m.is_one() {
                s.push_str(&coeff_str);
            } else if field.is_one(&abs) {
                s.push_str(&mono_str);
            } else {
                s.push_str(&coeff_str);
                s.push('*');
                s.push_str(&mono_str);
            }
        }
        s
    }

    pub fn monomial_format(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exps.iter().enumerate() {
            if e == 1 {
                parts.push(self.vars()[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.vars()[i], e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Parses the textual polynomial grammar:
    /// `poly := ["-"] term (("+"|"-") term)*`,
    /// `term := [coeff "*"] var ("^" nat)? ("*" var ("^" nat)?)* | coeff`,
    /// where `coeff` is an integer or `int/int` over ℚ.
    pub fn parse_poly(&self, text: &str) -> Result<GradedPoly> {
        Parser {
            ring: self,
            bytes: text.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn parse(&mut self) -> Result<GradedPoly> {
        let mut terms: Vec<Term> = Vec::new();
        self.skip_ws();
        let mut sign = if self.eat(b'-') {
            -1i64
        } else {
            self.eat(b'+');
            1
        };
        loop {
            self.skip_ws();
            let (m, c) = self.term()?;
            let c = if sign < 0 {
                self.ring.field().neg(&c)
            } else {
                c
            };
            terms.push((m, c));
            self.skip_ws();
            if self.pos >= self.bytes.len() {
                break;
            }
            sign = match self.bytes[self.pos] {
                b'+' => 1,
                b'-' => -1,
                other => {
                    return Err(Error::Parse {
                        pos: self.pos,
                        msg: format!("expected '+' or '-', found {:?}", other as char),
                    })
                }
            };
            self.pos += 1;
        }
        Ok(self.ring.poly_from_terms(terms))
    }

    fn term(&mut self) -> Result<Term> {
        let field = self.ring.field();
        let mut coeff = field.one();
        let mut mono = Monomial::one(self.ring.nvars());
        if self.peek_digit() {
            coeff = self.coeff()?;
            self.skip_ws();
            if !self.eat(b'*') {
                return Ok((mono, coeff));
            }
        }
        loop {
            self.skip_ws();
            let start = self.pos;
            let name = self.ident()?;
            let var = self
                .ring
                .vars()
                .iter()
                .position(|v| v == &name)
                .ok_or(Error::UnknownVariable {
                    name: name.clone(),
                    pos: start,
                })?;
            let mut exp = 1u32;
            self.skip_ws();
            if self.eat(b'^') {
                self.skip_ws();
                exp = self.nat()?;
            }
            mono.exps[var] += exp;
            self.skip_ws();
            if !self.eat(b'*') {
                break;
            }
            self.skip_ws();
            if self.peek_digit() {
                // integer factor inside a term (e.g. "x0*2"): accept and fold
                let c = self.coeff()?;
                coeff = field.mul(&coeff, &c);
                self.skip_ws();
                if !self.eat(b'*') {
                    break;
                }
            }
        }
        Ok((mono, coeff))
    }

    fn coeff(&mut self) -> Result<FieldElem> {
        let n = self.int()?;
        self.skip_ws();
        if self.ring.field() == Field::Q && self.peek(b'/') {
            self.pos += 1;
            self.skip_ws();
            let d = self.int()?;
            let num = self.ring.field().from_bigint(&n);
            let den = self.ring.field().from_bigint(&d);
            if self.ring.field().is_zero(&den) {
                return Err(Error::Parse {
                    pos: self.pos,
                    msg: "zero denominator".into(),
                });
            }
            return Ok(self.ring.field().div(&num, &den));
        }
        Ok(self.ring.field().from_bigint(&n))
    }

    fn int(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse {
                pos: start,
                msg: "expected integer".into(),
            });
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn nat(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.int()?;
        u32::try_from(n).map_err(|_| Error::Parse {
            pos: start,
            msg: "exponent too large".into(),
        })
    }

    fn ident(&mut self) -> Result<String> {
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse {
                pos: start,
                msg: "expected variable name".into(),
            });
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .to_string())
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn peek(&self, b: u8) -> bool {
        self.pos < self.bytes.len() && self.bytes[self.pos] == b
    }

    fn peek_digit(&self) -> bool {
        self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit()
    }
}
