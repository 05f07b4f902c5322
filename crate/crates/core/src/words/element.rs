//! Finitely supported linear combinations of words with Laurent polynomial
//! coefficients: the elements of the ambient vector space.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde_json::{json, Value};

use crate::coeff::{parse_scalar_factor, LaurentInt};
use crate::parse::{Lexer, ParseError, Tok};
use crate::words::word::{Letter, Word};

/// Which end of a word a truncation operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// An element of the free algebra: a finite map from words to nonzero
/// coefficients. Terms are kept in graded lexicographic word order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FreeElement {
    terms: BTreeMap<Word, LaurentInt>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement::default()
    }

    /// The trivial word with coefficient 1.
    pub fn one() -> Self {
        FreeElement::from_word(Word::trivial())
    }

    pub fn from_word(w: Word) -> Self {
        FreeElement::from_term(w, LaurentInt::one())
    }

    pub fn from_term(w: Word, c: LaurentInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        FreeElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a word (zero if absent).
    pub fn coeff(&self, w: &Word) -> LaurentInt {
        self.terms.get(w).cloned().unwrap_or_else(LaurentInt::zero)
    }

    /// Terms in graded lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub(crate) fn add_term(&mut self, w: Word, c: &LaurentInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                *existing = &*existing + c;
                if existing.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub(crate) fn add_assign(&mut self, other: &FreeElement) {
        for (&w, c) in &other.terms {
            self.add_term(w, c);
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &LaurentInt) -> FreeElement {
        if c.is_zero() {
            return FreeElement::zero();
        }
        let mut out = FreeElement::zero();
        for (&w, coeff) in &self.terms {
            out.add_term(w, &(coeff * c));
        }
        out
    }

    /// Multiply every coefficient by the monomial `q^k`.
    pub fn scale_q_power(&self, k: i64) -> FreeElement {
        if k == 0 {
            return self.clone();
        }
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(&w, c)| (w, c.mul_q_power(k)))
                .collect(),
        }
    }

    /// Linear extension of a partial map on words; words mapped to `None`
    /// are killed.
    pub fn map_words(&self, f: impl Fn(Word) -> Option<Word>) -> FreeElement {
        let mut out = FreeElement::zero();
        for (&w, c) in &self.terms {
            if let Some(w2) = f(w) {
                out.add_term(w2, c);
            }
        }
        out
    }

    /// `l · v`, each word prepended, coefficients scaled by `q^qexp`.
    pub(crate) fn prepended_scaled(&self, l: Letter, qexp: i64) -> FreeElement {
        // Prepending a fixed letter preserves graded-lex order, so the
        // rebuilt map is collected from an already-sorted iterator.
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(&w, c)| (w.prepended(l), c.mul_q_power(qexp)))
                .collect(),
        }
    }

    /// `v · l`, each word appended, coefficients scaled by `q^qexp`.
    /// Only exercised by the right-peel cross-check in tests.
    #[cfg_attr(not(test), allow(dead_code))]
    pub(crate) fn appended_scaled(&self, l: Letter, qexp: i64) -> FreeElement {
        let mut out = FreeElement::zero();
        for (&w, c) in &self.terms {
            out.add_term(w.appended(l), &c.mul_q_power(qexp));
        }
        out
    }

    /// Concatenation product, extended bilinearly.
    pub fn free_mul(&self, other: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), &(ca * cb));
            }
        }
        out
    }

    /// The bilinear form for which the words are orthonormal:
    /// sum over words of the product of the two coefficients.
    pub fn bilinear_form(&self, other: &FreeElement) -> LaurentInt {
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = LaurentInt::zero();
        for (w, c) in &small.terms {
            if let Some(d) = big.terms.get(w) {
                out = &out + &(c * d);
            }
        }
        out
    }

    /// Truncation operator: strips `letter` from the given end of every
    /// support word, killing mismatching words and the trivial word.
    pub fn truncate(&self, side: Side, letter: Letter) -> FreeElement {
        match side {
            Side::Left => self.map_words(|w| w.strip_left(letter)),
            Side::Right => self.map_words(|w| w.strip_right(letter)),
        }
    }

    /// `Some((a, b))` if every support word has `a` x's and `b` y's;
    /// `None` for mixed elements and for zero.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let first = it.next()?.bidegree();
        it.all(|w| w.bidegree() == first).then_some(first)
    }

    /// JSON form: `{"terms": [{"word": "xxy", "coeff": "1 + q^2"}, ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "terms": self
                .terms
                .iter()
                .map(|(w, c)| json!({"word": w.to_string(), "coeff": c.to_string()}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<FreeElement, ParseError> {
        let arr = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| ParseError::new(0, "JSON value", "an object with a 'terms' array"))?;
        let mut out = FreeElement::zero();
        for t in arr {
            let word = t.get("word").and_then(Value::as_str).unwrap_or_default();
            let coeff = t.get("coeff").and_then(Value::as_str).unwrap_or_default();
            out.add_term(word.parse()?, &coeff.parse()?);
        }
        Ok(out)
    }
}

impl Add for &FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &FreeElement) -> FreeElement {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        out.add_assign(small);
        out
    }
}

impl Sub for &FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (&w, c) in &rhs.terms {
            out.add_term(w, &(-c));
        }
        out
    }
}

impl Neg for &FreeElement {
    type Output = FreeElement;
    fn neg(self) -> FreeElement {
        FreeElement {
            terms: self.terms.iter().map(|(&w, c)| (w, -c)).collect(),
        }
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            // All-negative coefficients join with a minus sign; mixed signs
            // keep the coefficient verbatim (parenthesized below).
            let negative = c.is_all_negative();
            let mag = if negative { -c } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let needs_parens = mag.num_terms() > 1;
            if w.is_trivial() {
                if needs_parens {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else if needs_parens {
                write!(f, "({mag})*{w}")?;
            } else {
                write!(f, "{mag}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FreeElement {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<FreeElement, ParseError> {
        let mut lex = Lexer::new(s)?;
        let value = parse_element(&mut lex)?;
        lex.expect(&Tok::End, "end of input")?;
        Ok(value)
    }
}

/// element := ['-'] term (('+' | '-') term)*
/// term    := factor ('*' factor)*   with at most one word factor
/// factor  := word | scalar factor (integer, q-power, parenthesized scalar)
fn parse_element(lex: &mut Lexer) -> Result<FreeElement, ParseError> {
    let mut out = FreeElement::zero();
    let mut negate = false;
    if lex.peek() == &Tok::Minus {
        lex.bump();
        negate = true;
    }
    loop {
        let term = parse_element_term(lex)?;
        let term = if negate { -&term } else { term };
        out.add_assign(&term);
        match lex.peek() {
            Tok::Plus => {
                lex.bump();
                negate = false;
            }
            Tok::Minus => {
                lex.bump();
                negate = true;
            }
            _ => return Ok(out),
        }
    }
}

fn parse_element_term(lex: &mut Lexer) -> Result<FreeElement, ParseError> {
    let mut coeff = LaurentInt::one();
    let mut word: Option<Word> = None;
    loop {
        match lex.peek().clone() {
            Tok::Letters(s) => {
                if word.is_some() {
                    return Err(lex.unexpected("at most one word per term"));
                }
                let pos = lex.pos();
                lex.bump();
                word = Some(
                    s.parse()
                        .map_err(|e: ParseError| ParseError::new(pos, e.found, e.expected))?,
                );
                if lex.peek() == &Tok::Caret {
                    return Err(lex.unexpected("no exponent on words"));
                }
            }
            _ => {
                coeff = &coeff * &parse_scalar_factor(lex)?;
            }
        }
        if lex.peek() == &Tok::Star {
            lex.bump();
        } else {
            break;
        }
    }
    Ok(FreeElement::from_term(
        word.unwrap_or_else(Word::trivial),
        coeff,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::word::wlit;

    fn el(s: &str) -> FreeElement {
        s.parse().unwrap()
    }

    #[test]
    fn free_mul_examples() {
        assert_eq!(el("xy").free_mul(&el("yx")), el("xyyx"));
        let v = el("(1 + q^2)*xxy + xyx");
        assert_eq!(FreeElement::one().free_mul(&v), v);
        assert_eq!(el("xy + q*yx").free_mul(&el("x")), el("xyx + q*yxx"));
    }

    #[test]
    fn bilinear_form_examples() {
        assert_eq!(el("xy").bilinear_form(&el("xy")), LaurentInt::one());
        assert!(el("xy").bilinear_form(&el("yx")).is_zero());
        assert_eq!(
            el("(1 + q)*xy").bilinear_form(&el("xy")),
            "1 + q".parse().unwrap()
        );
    }

    #[test]
    fn truncate_examples() {
        assert_eq!(el("xy").truncate(Side::Left, Letter::X), el("y"));
        assert!(el("yx").truncate(Side::Left, Letter::X).is_zero());
        assert!(FreeElement::one().truncate(Side::Left, Letter::X).is_zero());
        assert_eq!(el("xy + q*xx").truncate(Side::Right, Letter::Y), el("x"));
    }

    #[test]
    fn display_matches_grammar() {
        // Coefficients render in decreasing exponent order.
        let v = el("(1 + q^2)*xxy + xyx");
        assert_eq!(v.to_string(), "(q^2 + 1)*xxy + xyx");
        assert_eq!(el("q^-2*yx + xy").to_string(), "xy + q^-2*yx");
        assert_eq!(el("1").to_string(), "1");
        assert_eq!(el("0*x").to_string(), "0");
        assert_eq!(el("-x - q*y").to_string(), "-x - q*y");
        assert_eq!(el("(q^2 - 1)*x").to_string(), "(q^2 - 1)*x");
        assert_eq!(el("(1 - q^2)*x").to_string(), "(-q^2 + 1)*x");
        assert_eq!(el("-(q + q^-1)*x").to_string(), "-(q + q^-1)*x");
    }

    #[test]
    fn json_round_trip() {
        let v = el("(1 + q^2)*xxy + xyx - q^-1*y");
        let j = v.to_json();
        assert_eq!(FreeElement::from_json(&j).unwrap(), v);
        let rendered = serde_json::to_string(&j).unwrap();
        assert!(rendered.contains("\"word\":\"xxy\""));
    }

    #[test]
    fn coefficient_only_terms_are_trivial_word_multiples() {
        let v = el("(1 + q^2) + xyx");
        assert_eq!(v.coeff(&Word::trivial()), "1 + q^2".parse().unwrap());
        assert_eq!(v.coeff(&wlit("xyx")), LaurentInt::one());
    }

    #[test]
    fn bidegree_queries() {
        assert_eq!(el("xxy + xyx").bidegree(), Some((2, 1)));
        assert_eq!(el("xxy + xy").bidegree(), None);
        assert_eq!(el("0*x").bidegree(), None);
    }
}
