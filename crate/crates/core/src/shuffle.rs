//! The q-shuffle product, its interleaving-enumeration oracle, and
//! q^k-commutators.
//!
//! The product is defined by the recursive peel-off rules: the trivial word
//! is a two-sided identity, `u ⋆ v = uv + vu q^<u,v>` on letters, and for
//! nontrivial words the first letter of either factor is peeled off with a
//! weight collecting `<first of v, letter of u>` over all letters of u.
//! The oracle instead sums over all interleavings of the two words, each
//! weighted by `q` to the sum of `<u_i, v_j>` over crossing pairs; the two
//! routes share no code.

use std::collections::HashMap;
use std::rc::Rc;

use crate::coeff::LaurentInt;
use crate::words::{FreeElement, Letter, Word};

/// The symmetric letter pairing: `<x,x> = <y,y> = 2`, `<x,y> = <y,x> = -2`.
pub fn pairing(a: Letter, b: Letter) -> i64 {
    if a == b {
        2
    } else {
        -2
    }
}

/// Sum of `<l, w_i>` over all letters of `w`.
fn pairing_sum(l: Letter, w: Word) -> i64 {
    let matches = w.count(l) as i64;
    let len = w.len() as i64;
    2 * matches - 2 * (len - matches)
}

/// q-shuffle product of two words.
pub fn shuffle_words(u: Word, v: Word) -> FreeElement {
    let mut memo: HashMap<(Word, Word), Rc<FreeElement>> = HashMap::new();
    shuffle_rec(u, v, &mut memo).as_ref().clone()
}

fn shuffle_rec(
    u: Word,
    v: Word,
    memo: &mut HashMap<(Word, Word), Rc<FreeElement>>,
) -> Rc<FreeElement> {
    if u.is_trivial() {
        return Rc::new(FreeElement::from_word(v));
    }
    if v.is_trivial() {
        return Rc::new(FreeElement::from_word(u));
    }
    if let Some(hit) = memo.get(&(u, v)) {
        return Rc::clone(hit);
    }
    let (u1, u_tail) = u.split_first().unwrap();
    let (v1, v_tail) = v.split_first().unwrap();
    let mut combined = shuffle_rec(u_tail, v, memo).prepended_scaled(u1, 0);
    let weight = pairing_sum(v1, u);
    combined.add_assign(&shuffle_rec(u, v_tail, memo).prepended_scaled(v1, weight));
    let result = Rc::new(combined);
    memo.insert((u, v), Rc::clone(&result));
    result
}

/// q-shuffle product, extended bilinearly to elements.
pub fn shuffle(u: &FreeElement, v: &FreeElement) -> FreeElement {
    let mut memo: HashMap<(Word, Word), Rc<FreeElement>> = HashMap::new();
    let mut out = FreeElement::zero();
    for (&wu, cu) in u.terms() {
        for (&wv, cv) in v.terms() {
            let prod = shuffle_rec(wu, wv, &mut memo);
            out.add_assign(&prod.scale(&(cu * cv)));
        }
    }
    out
}

/// Independent oracle: enumerate all `C(|u|+|v|, |u|)` interleavings of the
/// two words. Each interleaving contributes its merged word with weight
/// `q^E`, where `E` sums `<u_i, v_j>` over pairs placed with `v_j` before
/// `u_i`. Implemented by direct subset enumeration, no recursion shared
/// with [`shuffle`].
pub fn shuffle_oracle(u: Word, v: Word) -> FreeElement {
    let r = u.len();
    let s = v.len();
    let n = r + s;
    assert!(n < 63, "oracle supports total length < 63");
    let mut out = FreeElement::zero();
    if n == 0 {
        return FreeElement::one();
    }
    let u_letters: Vec<Letter> = u.letters().collect();
    let v_letters: Vec<Letter> = v.letters().collect();
    // Masks with r bits set mark the positions receiving u's letters.
    let mut mask: u64 = (1u64 << r) - 1;
    let limit: u64 = 1u64 << n;
    loop {
        if r > 0 && mask >= limit {
            break;
        }
        // Positions of u's and v's letters under this interleaving.
        let mut pos_u = Vec::with_capacity(r);
        let mut pos_v = Vec::with_capacity(s);
        let mut letters = Vec::with_capacity(n);
        for p in 0..n {
            if (mask >> p) & 1 == 1 {
                letters.push(u_letters[pos_u.len()]);
                pos_u.push(p);
            } else {
                letters.push(v_letters[pos_v.len()]);
                pos_v.push(p);
            }
        }
        let mut weight = 0i64;
        for (i, &pu) in pos_u.iter().enumerate() {
            for (j, &pv) in pos_v.iter().enumerate() {
                if pv < pu {
                    weight += pairing(u_letters[i], v_letters[j]);
                }
            }
        }
        out.add_term(Word::from_letters(&letters), &LaurentInt::q_power(weight));
        if r == 0 {
            break;
        }
        // Gosper's hack: next subset of the same size.
        let c = mask & mask.wrapping_neg();
        let rr = mask + c;
        if rr >= limit || c == 0 {
            break;
        }
        mask = (((rr ^ mask) >> 2) / c) | rr;
    }
    out
}

/// `q^k (a ⋆ b) - q^-k (b ⋆ a)`; `k = 0` is the plain commutator and
/// `k = 1` the q-commutator.
pub fn commutator_qk(a: &FreeElement, b: &FreeElement, k: i64) -> FreeElement {
    let ab = shuffle(a, b).scale_q_power(k);
    let ba = shuffle(b, a).scale_q_power(-k);
    &ab - &ba
}

/// Iterated q-shuffle power; zero factors give the trivial word.
pub fn star_power(a: &FreeElement, n: usize) -> FreeElement {
    let mut out = FreeElement::one();
    for _ in 0..n {
        out = shuffle(&out, a);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::wlit;
    use proptest::prelude::*;

    fn el(s: &str) -> FreeElement {
        s.parse().unwrap()
    }

    #[test]
    fn letter_rule_examples() {
        assert_eq!(shuffle_words(wlit("x"), wlit("y")), el("xy + q^-2*yx"));
        assert_eq!(shuffle_words(wlit("x"), wlit("x")), el("(1 + q^2)*xx"));
        assert_eq!(
            shuffle_words(wlit("x"), wlit("xy")),
            el("(1 + q^2)*xxy + xyx")
        );
    }

    #[test]
    fn trivial_word_is_identity() {
        let v = el("(1 + q^2)*xxy + q^-1*xyx");
        assert_eq!(shuffle(&FreeElement::one(), &v), v);
        assert_eq!(shuffle(&v, &FreeElement::one()), v);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(shuffle_oracle(wlit("x"), wlit("y")), el("xy + q^-2*yx"));
        assert_eq!(
            shuffle_oracle(wlit("x"), wlit("xy")),
            el("(1 + q^2)*xxy + xyx")
        );
        let w = wlit("xyx");
        assert_eq!(shuffle_oracle(Word::trivial(), w), FreeElement::from_word(w));
        assert_eq!(shuffle_oracle(w, Word::trivial()), FreeElement::from_word(w));
    }

    #[test]
    fn star_power_examples() {
        let x = el("x");
        assert_eq!(star_power(&x, 0), FreeElement::one());
        assert_eq!(star_power(&x, 2), el("(1 + q^2)*xx"));
        // (1 + q^2)(1 + q^2 + q^4) = 1 + 2q^2 + 2q^4 + q^6
        assert_eq!(
            star_power(&x, 3),
            el("(1 + 2*q^2 + 2*q^4 + q^6)*xxx")
        );
    }

    #[test]
    fn commutator_examples() {
        let v = el("(1 + q^2)*xxy + xyx");
        assert!(commutator_qk(&v, &v, 0).is_zero());
        assert_eq!(
            commutator_qk(&FreeElement::one(), &el("x"), 2),
            el("(q^2 - q^-2)*x")
        );
        // q(x ⋆ y) - q^-1(y ⋆ x): the yx terms cancel exactly.
        assert_eq!(commutator_qk(&el("x"), &el("y"), 1), el("(q - q^-3)*xy"));
    }

    #[test]
    fn q_serre_relations_hold() {
        let x = el("x");
        let y = el("y");
        let three = LaurentInt::q_int(3);
        for (a, b) in [(&x, &y), (&y, &x)] {
            let t1 = shuffle(&star_power(a, 3), b);
            let t2 = shuffle(&shuffle(&star_power(a, 2), b), a);
            let t3 = shuffle(&shuffle(a, b), &star_power(a, 2));
            let t4 = shuffle(b, &star_power(a, 3));
            let total = &(&t1 - &t2.scale(&three)) + &(&t3.scale(&three) - &t4);
            assert!(total.is_zero());
        }
    }

    /// Right-peel form of the recursion, used only to cross-check the
    /// left-peel implementation.
    fn shuffle_right_peel(u: Word, v: Word) -> FreeElement {
        if u.is_trivial() {
            return FreeElement::from_word(v);
        }
        if v.is_trivial() {
            return FreeElement::from_word(u);
        }
        let (u_head, u_last) = {
            let l = u.last().unwrap();
            (u.strip_right(l).unwrap(), l)
        };
        let (v_head, v_last) = {
            let l = v.last().unwrap();
            (v.strip_right(l).unwrap(), l)
        };
        let left = shuffle_right_peel(u, v_head).appended_scaled(v_last, 0);
        let weight: i64 = v.letters().map(|vl| pairing(u_last, vl)).sum();
        let right = shuffle_right_peel(u_head, v).appended_scaled(u_last, weight);
        &left + &right
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(proptest::bool::ANY, 0..=max_len).prop_map(|bits| {
            let letters: Vec<Letter> = bits
                .into_iter()
                .map(|b| if b { Letter::Y } else { Letter::X })
                .collect();
            Word::from_letters(&letters)
        })
    }

    proptest! {
        #[test]
        fn oracle_agrees_on_random_pairs(u in arb_word(5), v in arb_word(5)) {
            prop_assert_eq!(shuffle_words(u, v), shuffle_oracle(u, v));
        }

        #[test]
        fn right_peel_agrees(u in arb_word(5), v in arb_word(5)) {
            prop_assert_eq!(shuffle_words(u, v), shuffle_right_peel(u, v));
        }

        #[test]
        fn associativity_on_short_words(a in arb_word(4), b in arb_word(4), c in arb_word(4)) {
            let (ea, eb, ec) = (
                FreeElement::from_word(a),
                FreeElement::from_word(b),
                FreeElement::from_word(c),
            );
            prop_assert_eq!(
                shuffle(&shuffle(&ea, &eb), &ec),
                shuffle(&ea, &shuffle(&eb, &ec))
            );
        }

        #[test]
        fn shuffle_is_bigraded(u in arb_word(5), v in arb_word(5)) {
            let (a1, b1) = u.bidegree();
            let (a2, b2) = v.bidegree();
            let prod = shuffle_words(u, v);
            for (w, _) in prod.terms() {
                prop_assert_eq!(w.bidegree(), (a1 + a2, b1 + b2));
            }
        }

        #[test]
        fn classical_specialization_counts_interleavings(u in arb_word(5), v in arb_word(5)) {
            let prod = shuffle_words(u, v);
            let total: num_bigint::BigInt =
                prod.terms().map(|(_, c)| c.eval_at_one()).sum();
            prop_assert_eq!(total, binomial(u.len() + v.len(), u.len()));
        }
    }

    fn binomial(n: usize, k: usize) -> num_bigint::BigInt {
        let mut out = num_bigint::BigInt::from(1);
        for i in 0..k {
            out = out * num_bigint::BigInt::from(n - i) / num_bigint::BigInt::from(i + 1);
        }
        out
    }
}
