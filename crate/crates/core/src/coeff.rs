//! The scalar ring `Z[q, q^-1]`: Laurent polynomials in `q` with arbitrary
//! precision integer coefficients.
//!
//! Values are kept in canonical form (no zero coefficients), so equality is
//! structural. Exponents are machine integers; coefficients are `BigInt`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::parse::{Lexer, ParseError, Tok};

/// A Laurent polynomial in `q` over the integers, e.g. `q^2 + 1 + q^-2`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    /// exponent -> coefficient; invariant: no coefficient is zero.
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentInt {
    pub fn zero() -> Self {
        LaurentInt::default()
    }

    pub fn one() -> Self {
        LaurentInt::q_power(0)
    }

    /// The monomial `q^k`.
    pub fn q_power(k: i64) -> Self {
        LaurentInt::monomial(BigInt::one(), k)
    }

    /// The monomial `c * q^k`.
    pub fn monomial(c: BigInt, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentInt { terms }
    }

    pub fn from_int(n: i64) -> Self {
        LaurentInt::monomial(BigInt::from(n), 0)
    }

    /// The q-integer `[n] = (q^n - q^-n) / (q - q^-1)`, expanded:
    /// `q^(n-1) + q^(n-3) + ... + q^(1-n)` for n > 0, zero for n = 0,
    /// and `-[-n]` for n < 0.
    pub fn q_int(n: i64) -> Self {
        if n == 0 {
            return LaurentInt::zero();
        }
        if n < 0 {
            return -&LaurentInt::q_int(-n);
        }
        let mut terms = BTreeMap::new();
        let mut k = 1 - n;
        while k <= n - 1 {
            terms.insert(k, BigInt::one());
            k += 2;
        }
        LaurentInt { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^k` (zero if absent).
    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Term iterator in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    fn add_term(&mut self, k: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    /// Multiply by the monomial `q^k` (exponent shift).
    pub fn mul_q_power(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        LaurentInt {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Multiply by a plain integer.
    pub fn mul_int(&self, n: i64) -> Self {
        if n == 0 {
            return LaurentInt::zero();
        }
        let big = BigInt::from(n);
        LaurentInt {
            terms: self.terms.iter().map(|(&e, c)| (e, c * &big)).collect(),
        }
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentInt::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Value of the polynomial at `q = 1`: the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// True for nonzero polynomials all of whose coefficients are negative.
    pub fn is_all_negative(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|c| c.is_negative())
    }

    /// If this is `±q^k`, return `(negative, k)`.
    fn as_unit_monomial(&self) -> Option<(bool, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&k, c) = self.terms.iter().next().unwrap();
        if c.is_one() {
            Some((false, k))
        } else if (-c).is_one() {
            Some((true, k))
        } else {
            None
        }
    }
}

impl Add for &LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &LaurentInt) -> LaurentInt {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (&k, c) in &small.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub for &LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, &(-c));
        }
        out
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        LaurentInt {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = LaurentInt::zero();
        for (&ka, ca) in &self.terms {
            for (&kb, cb) in &rhs.terms {
                out.add_term(ka + kb, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // All-negative polynomials with several terms print factored,
        // e.g. `-(q + q^-1)`.
        if self.terms.len() > 1 && self.is_all_negative() {
            return write!(f, "-({})", -self);
        }
        // Terms in decreasing exponent order.
        for (i, (&k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
        Ok(())
    }
}

// Debug defers to Display so test failures stay readable.
impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LaurentInt {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut lex = Lexer::new(s)?;
        let value = parse_scalar_expr(&mut lex)?;
        lex.expect(&Tok::End, "end of input")?;
        Ok(value)
    }
}

/// Parse a scalar expression: sums/differences of products of powers of
/// integers, `q`, and parenthesized subexpressions. Negative exponents are
/// allowed on invertible factors (`±q^k`) only.
pub(crate) fn parse_scalar_expr(lex: &mut Lexer) -> Result<LaurentInt, ParseError> {
    let mut acc = parse_scalar_term(lex)?;
    loop {
        match lex.peek() {
            Tok::Plus => {
                lex.bump();
                acc = &acc + &parse_scalar_term(lex)?;
            }
            Tok::Minus => {
                lex.bump();
                acc = &acc - &parse_scalar_term(lex)?;
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_scalar_term(lex: &mut Lexer) -> Result<LaurentInt, ParseError> {
    let mut acc = parse_scalar_factor(lex)?;
    while lex.peek() == &Tok::Star {
        lex.bump();
        acc = &acc * &parse_scalar_factor(lex)?;
    }
    Ok(acc)
}

pub(crate) fn parse_scalar_factor(lex: &mut Lexer) -> Result<LaurentInt, ParseError> {
    let base = match lex.peek().clone() {
        Tok::Minus => {
            lex.bump();
            return Ok(-&parse_scalar_factor(lex)?);
        }
        Tok::Int(n) => {
            lex.bump();
            LaurentInt::monomial(n, 0)
        }
        Tok::Q => {
            lex.bump();
            LaurentInt::q_power(1)
        }
        Tok::LParen => {
            lex.bump();
            let inner = parse_scalar_expr(lex)?;
            lex.expect(&Tok::RParen, "')'")?;
            inner
        }
        _ => return Err(lex.unexpected("a number, 'q', or '('")),
    };
    if lex.peek() != &Tok::Caret {
        return Ok(base);
    }
    lex.bump();
    let exp = parse_exponent(lex)?;
    if exp >= 0 {
        Ok(base.pow(exp as u32))
    } else {
        // Only ±q^k is invertible in Z[q, q^-1].
        match base.as_unit_monomial() {
            Some((neg, k)) => {
                let inv = LaurentInt::q_power(-k);
                let inv = if neg { -&inv } else { inv };
                Ok(inv.pow((-exp) as u32))
            }
            None => Err(lex.unexpected("a non-negative exponent (base is not invertible)")),
        }
    }
}

fn parse_exponent(lex: &mut Lexer) -> Result<i64, ParseError> {
    let negative = if lex.peek() == &Tok::Minus {
        lex.bump();
        true
    } else {
        false
    };
    match lex.peek().clone() {
        Tok::Int(n) => {
            lex.bump();
            let n: i64 = (&n)
                .try_into()
                .map_err(|_| lex.unexpected("a machine-sized exponent"))?;
            Ok(if negative { -n } else { n })
        }
        _ => Err(lex.unexpected("an integer exponent")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> LaurentInt {
        LaurentInt::q_power(1)
    }

    #[test]
    fn q_power_examples() {
        assert_eq!(LaurentInt::q_power(0), LaurentInt::one());
        assert_eq!(LaurentInt::q_power(2).to_string(), "q^2");
        assert_eq!(LaurentInt::q_power(-2).to_string(), "q^-2");
    }

    #[test]
    fn q_int_examples() {
        assert!(LaurentInt::q_int(0).is_zero());
        assert_eq!(LaurentInt::q_int(1), LaurentInt::one());
        assert_eq!(LaurentInt::q_int(3).to_string(), "q^2 + 1 + q^-2");
        assert_eq!(LaurentInt::q_int(-2).to_string(), "-(q + q^-1)");
    }

    #[test]
    fn q_int_against_defining_identity() {
        // [n] * (q - q^-1) = q^n - q^-n, the defining property.
        let denom = &q() - &LaurentInt::q_power(-1);
        for n in -10..=10 {
            let lhs = &LaurentInt::q_int(n) * &denom;
            let rhs = &LaurentInt::q_power(n) - &LaurentInt::q_power(-n);
            assert_eq!(lhs, rhs, "n = {n}");
            assert_eq!(LaurentInt::q_int(n).eval_at_one(), BigInt::from(n));
        }
    }

    #[test]
    fn ring_op_examples() {
        assert!((&LaurentInt::q_power(2) + &(-&LaurentInt::q_power(2))).is_zero());
        let lhs = &(&q() + &LaurentInt::q_power(-1)) * &(&q() - &LaurentInt::q_power(-1));
        assert_eq!(lhs, &LaurentInt::q_power(2) - &LaurentInt::q_power(-2));
        assert_eq!(
            &LaurentInt::one() * &LaurentInt::q_power(5),
            LaurentInt::q_power(5)
        );
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(LaurentInt::q_int(3).eval_at_one(), BigInt::from(3));
        assert_eq!(LaurentInt::zero().eval_at_one(), BigInt::from(0));
        let diff = &LaurentInt::q_power(2) - &LaurentInt::q_power(-2);
        assert_eq!(diff.eval_at_one(), BigInt::from(0));
    }

    #[test]
    fn parse_examples() {
        let p: LaurentInt = "q^2 + 1 + q^-2".parse().unwrap();
        assert_eq!(p, LaurentInt::q_int(3));
        let m: LaurentInt = "-(q + q^-1)".parse().unwrap();
        assert_eq!(m, LaurentInt::q_int(-2));
        let prod: LaurentInt = "(1 + q^2) * (1 + q^2 + q^4)".parse().unwrap();
        assert_eq!(prod, &LaurentInt::q_int(2).mul_q_power(1) * &LaurentInt::q_int(3).mul_q_power(2));
        assert_eq!("3*q".parse::<LaurentInt>().unwrap().to_string(), "3*q");
        assert!("q^(2)".parse::<LaurentInt>().is_err());
        assert!("(q + 1)^-1".parse::<LaurentInt>().is_err());
    }

    #[test]
    fn parse_error_reports_position() {
        let err = "q^2 + )".parse::<LaurentInt>().unwrap_err();
        assert_eq!(err.pos, 6);
        assert!(err.found.contains(')'));
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentInt> {
        proptest::collection::vec((-8i64..=8, -9i64..=9), 0..6).prop_map(|terms| {
            let mut p = LaurentInt::zero();
            for (k, c) in terms {
                p.add_term(k, &BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn cancellation_is_canonical(a in arb_laurent()) {
            let z = &a + &(-&a);
            prop_assert!(z.is_zero());
            prop_assert_eq!(z.num_terms(), 0);
        }

        #[test]
        fn display_parse_round_trip(a in arb_laurent()) {
            let shown = a.to_string();
            let back: LaurentInt = shown.parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
