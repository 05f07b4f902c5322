//! The full table of identity families.
//!
//! Ids follow the section layout: `serre.*`, `P4.*` (letter/doubly
//! alternating commutators), `P5.*` (convolutions and corollaries), `A.*`
//! (known alternating-word relations), `B.*` (doubly alternating
//! commutators), `C.*` (alternating-word forms of the convolutions).
//! Displayed equality chains `A = B = C` are split into two entries with
//! `a`/`b` suffixes, and identities with inverted scalar prefactors are
//! stored denominator-cleared.

use std::sync::OnceLock;

use super::{Arity, RelationFamily, Source};
use crate::coeff::LaurentInt;
use crate::shuffle::{commutator_qk, shuffle, shuffle_words};
use crate::words::{w_word, wlit, FreeElement, Letter, Word};

const fn src(section: &'static str, item: &'static str, position: &'static str) -> Source {
    Source {
        section,
        item,
        position,
        note: None,
    }
}

const fn src_note(
    section: &'static str,
    item: &'static str,
    position: &'static str,
    note: &'static str,
) -> Source {
    Source {
        section,
        item,
        position,
        note: Some(note),
    }
}

fn fam0(
    id: &'static str,
    source: Source,
    f: impl Fn() -> (FreeElement, FreeElement) + Send + Sync + 'static,
) -> RelationFamily {
    RelationFamily::new(id, Arity::None, source, Box::new(move |_| f()))
}

fn fam1(
    id: &'static str,
    source: Source,
    f: impl Fn(usize) -> (FreeElement, FreeElement) + Send + Sync + 'static,
) -> RelationFamily {
    RelationFamily::new(id, Arity::One, source, Box::new(move |p| f(p[0])))
}

fn fam2(
    id: &'static str,
    source: Source,
    f: impl Fn(usize, usize) -> (FreeElement, FreeElement) + Send + Sync + 'static,
) -> RelationFamily {
    RelationFamily::new(id, Arity::Two, source, Box::new(move |p| f(p[0], p[1])))
}

/// Symmetric-swap family `[a(i), b(j)]_{q^c} = [a(j), b(i)]_{q^c}`.
fn fam2_swap(
    id: &'static str,
    source: Source,
    c: i64,
    a: impl Fn(usize) -> Word + Send + Sync + 'static,
    b: impl Fn(usize) -> Word + Send + Sync + 'static,
) -> RelationFamily {
    fam2(id, source, move |i, j| {
        (comm(a(i), b(j), c), comm(a(j), b(i), c))
    })
}

// --- small expression helpers -------------------------------------------

fn fe(w: Word) -> FreeElement {
    FreeElement::from_word(w)
}

/// `prefix · block^n · suffix` as a word.
pub(crate) fn bw(pre: &str, block: &str, n: usize, post: &str) -> Word {
    let mut w = if pre.is_empty() { Word::trivial() } else { wlit(pre) };
    w = w.concat(&wlit(block).repeated(n));
    if post.is_empty() {
        w
    } else {
        w.concat(&wlit(post))
    }
}

/// `Ghat_k = (xy)^k`.
fn gh(k: usize) -> Word {
    bw("", "xy", k, "")
}

/// `G_k = (yx)^k`.
fn gg(k: usize) -> Word {
    bw("", "yx", k, "")
}

fn sc(s: &str) -> LaurentInt {
    s.parse().expect("valid scalar literal")
}

/// `(-1)^sign_idx * q^qpow * [2]^two_exp`.
pub(crate) fn coef(sign_idx: usize, qpow: i64, two_exp: usize) -> LaurentInt {
    let c = LaurentInt::q_int(2).pow(two_exp as u32).mul_q_power(qpow);
    if sign_idx % 2 == 0 {
        c
    } else {
        -&c
    }
}

fn comm(a: Word, b: Word, k: i64) -> FreeElement {
    commutator_qk(&fe(a), &fe(b), k)
}

/// `Σ_{k=0}^{upper} (-1)^k a_k ⋆ b_k`.
fn alt_conv(upper: usize, f: impl Fn(usize) -> (Word, Word)) -> FreeElement {
    let mut out = FreeElement::zero();
    for k in 0..=upper {
        let (a, b) = f(k);
        let term = shuffle_words(a, b);
        if k % 2 == 0 {
            out.add_assign(&term);
        } else {
            out = &out - &term;
        }
    }
    out
}

/// `Σ_{k=0}^{upper} (-1)^k [a_k, b_k]_{q^c}`.
fn alt_conv_comm(upper: usize, c: i64, f: impl Fn(usize) -> (Word, Word)) -> FreeElement {
    let mut out = FreeElement::zero();
    for k in 0..=upper {
        let (a, b) = f(k);
        let term = comm(a, b, c);
        if k % 2 == 0 {
            out.add_assign(&term);
        } else {
            out = &out - &term;
        }
    }
    out
}

/// `a_1 ⋆ a_2 ⋆ ... ⋆ a_m` over single letters.
fn star_chain(letters: &str) -> FreeElement {
    letters.chars().fold(FreeElement::one(), |acc, c| {
        let l = Letter::from_char(c).expect("letter");
        shuffle(&acc, &fe(Word::letter_word(l)))
    })
}

/// The q-Serre combination `a³b - [3] a²ba + [3] aba² - ba³` with respect
/// to the q-shuffle product, written with `a` and `b` letter patterns.
fn serre_lhs(p1: &str, p2: &str, p3: &str, p4: &str) -> FreeElement {
    let three = LaurentInt::q_int(3);
    let t = |pat: &str| star_chain(pat);
    &(&t(p1) - &t(p2).scale(&three)) + &(&t(p3).scale(&three) - &t(p4))
}

// --- the catalog ----------------------------------------------------------

/// The full registry of exact identity families, built once.
pub fn catalog() -> &'static [RelationFamily] {
    static CATALOG: OnceLock<Vec<RelationFamily>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

fn build() -> Vec<RelationFamily> {
    let mut v: Vec<RelationFamily> = Vec::with_capacity(160);

    // Section 2: the q-Serre relations satisfied by the letters.
    v.push(fam0("serre.x", src("2", "q-Serre", "x"), || {
        (serre_lhs("xxxy", "xxyx", "xyxx", "yxxx"), FreeElement::zero())
    }));
    v.push(fam0("serre.y", src("2", "q-Serre", "y"), || {
        (serre_lhs("yyyx", "yyxy", "yxyy", "xyyy"), FreeElement::zero())
    }));

    section4(&mut v);
    section5(&mut v);
    appendix_a(&mut v);
    appendix_b(&mut v);
    appendix_c(&mut v);

    v
}

/// Commutator of one letter with one doubly alternating word: eight
/// propositions of four relations each.
fn section4(v: &mut Vec<RelationFamily>) {
    let x = wlit("x");
    let y = wlit("y");

    // [( xxyy)^n, x]_{q^2} and friends.
    v.push(fam1("P4.xcomm1.1", src("4", "xcomm1", "1"), move |n| {
        (
            comm(bw("", "xxyy", n, ""), x, 2),
            fe(bw("", "xxyy", n, "x")).scale(&sc("q^2 - q^-2")),
        )
    }));
    v.push(fam1("P4.xcomm1.2", src("4", "xcomm1", "2"), move |n| {
        (
            comm(x, bw("", "yyxx", n, ""), 2),
            fe(bw("x", "yyxx", n, "")).scale(&sc("q^2 - q^-2")),
        )
    }));
    v.push(fam1("P4.xcomm1.3", src("4", "xcomm1", "3"), move |n| {
        (comm(x, bw("", "xxyy", n, "xx"), 0), FreeElement::zero())
    }));
    v.push(fam1("P4.xcomm1.4", src("4", "xcomm1", "4"), move |n| {
        (
            comm(bw("", "yyxx", n, "yy"), x, 0),
            (&fe(bw("", "yyxx", n, "yyx")) - &fe(bw("xyy", "xxyy", n, ""))).scale(&sc("1 - q^-4")),
        )
    }));

    v.push(fam1("P4.ycomm1.1", src("4", "ycomm1", "1"), move |n| {
        (
            comm(y, bw("", "xxyy", n, ""), 2),
            fe(bw("y", "xxyy", n, "")).scale(&sc("q^2 - q^-2")),
        )
    }));
    v.push(fam1("P4.ycomm1.2", src("4", "ycomm1", "2"), move |n| {
        (
            comm(bw("", "yyxx", n, ""), y, 2),
            fe(bw("", "yyxx", n, "y")).scale(&sc("q^2 - q^-2")),
        )
    }));
    v.push(fam1("P4.ycomm1.3", src("4", "ycomm1", "3"), move |n| {
        (
            comm(y, bw("", "xxyy", n, "xx"), 0),
            (&fe(bw("yxx", "yyxx", n, "")) - &fe(bw("", "xxyy", n, "xxy"))).scale(&sc("1 - q^-4")),
        )
    }));
    v.push(fam1("P4.ycomm1.4", src("4", "ycomm1", "4"), move |n| {
        (comm(bw("", "yyxx", n, "yy"), y, 0), FreeElement::zero())
    }));

    v.push(fam1("P4.xcomm2.1", src("4", "xcomm2", "1"), move |n| {
        (
            comm(bw("xyy", "xxyy", n, ""), x, 1),
            (&fe(bw("xyy", "xxyy", n, "x")) - &fe(bw("", "xxyy", n + 1, "")))
                .scale(&sc("q - q^-3")),
        )
    }));
    v.push(fam1("P4.xcomm2.2", src("4", "xcomm2", "2"), move |n| {
        (comm(x, bw("yxx", "yyxx", n, ""), 1), FreeElement::zero())
    }));
    v.push(fam1("P4.xcomm2.3", src("4", "xcomm2", "3"), move |n| {
        (
            comm(x, bw("x", "yyxx", n, ""), 1),
            fe(bw("", "xxyy", n, "xx")).scale(&sc("q^3 - q^-1")),
        )
    }));
    v.push(fam1("P4.xcomm2.4", src("4", "xcomm2", "4"), move |n| {
        (
            comm(bw("y", "xxyy", n, ""), x, 1),
            fe(bw("y", "xxyy", n, "x")).scale(&sc("q - q^-3")),
        )
    }));

    // The printed form has the commutator arguments swapped; at n = 0 it
    // expands to a nonzero element, while this order vanishes and mirrors
    // the x-letter sibling relation.
    v.push(fam1(
        "P4.ycomm2.1",
        src_note(
            "4",
            "ycomm2",
            "1",
            "corrected to [y, xyy(xxyy)^n]_q; the printed argument order is nonzero at n = 0",
        ),
        move |n| (comm(y, bw("xyy", "xxyy", n, ""), 1), FreeElement::zero()),
    ));
    v.push(fam1("P4.ycomm2.2", src("4", "ycomm2", "2"), move |n| {
        (
            comm(bw("yxx", "yyxx", n, ""), y, 1),
            (&fe(bw("yxx", "yyxx", n, "y")) - &fe(bw("", "yyxx", n + 1, "")))
                .scale(&sc("q - q^-3")),
        )
    }));
    v.push(fam1("P4.ycomm2.3", src("4", "ycomm2", "3"), move |n| {
        (
            comm(bw("x", "yyxx", n, ""), y, 1),
            fe(bw("x", "yyxx", n, "y")).scale(&sc("q - q^-3")),
        )
    }));
    v.push(fam1("P4.ycomm2.4", src("4", "ycomm2", "4"), move |n| {
        (
            comm(y, bw("y", "xxyy", n, ""), 1),
            fe(bw("", "yyxx", n, "yy")).scale(&sc("q^3 - q^-1")),
        )
    }));

    v.push(fam1("P4.xcomm3.1", src("4", "xcomm3", "1"), move |n| {
        (comm(bw("", "xxyy", n, "xxy"), x, 1), FreeElement::zero())
    }));
    v.push(fam1("P4.xcomm3.2", src("4", "xcomm3", "2"), move |n| {
        (
            comm(x, bw("", "yyxx", n, "yyx"), 1),
            (&fe(bw("xyy", "xxyy", n, "x")) - &fe(bw("", "yyxx", n + 1, "")))
                .scale(&sc("q - q^-3")),
        )
    }));
    v.push(fam1("P4.xcomm3.3", src("4", "xcomm3", "3"), move |n| {
        (
            comm(bw("", "xxyy", n, "x"), x, 1),
            fe(bw("", "xxyy", n, "xx")).scale(&sc("q^3 - q^-1")),
        )
    }));
    v.push(fam1("P4.xcomm3.4", src("4", "xcomm3", "4"), move |n| {
        (
            comm(x, bw("", "yyxx", n, "y"), 1),
            fe(bw("x", "yyxx", n, "y")).scale(&sc("q - q^-3")),
        )
    }));

    v.push(fam1("P4.ycomm3.1", src("4", "ycomm3", "1"), move |n| {
        (
            comm(y, bw("", "xxyy", n, "xxy"), 1),
            (&fe(bw("yxx", "yyxx", n, "y")) - &fe(bw("", "xxyy", n + 1, "")))
                .scale(&sc("q - q^-3")),
        )
    }));
    v.push(fam1("P4.ycomm3.2", src("4", "ycomm3", "2"), move |n| {
        (comm(bw("", "yyxx", n, "yyx"), y, 1), FreeElement::zero())
    }));
    v.push(fam1("P4.ycomm3.3", src("4", "ycomm3", "3"), move |n| {
        (
            comm(y, bw("", "xxyy", n, "x"), 1),
            fe(bw("y", "xxyy", n, "x")).scale(&sc("q - q^-3")),
        )
    }));
    v.push(fam1("P4.ycomm3.4", src("4", "ycomm3", "4"), move |n| {
        (
            comm(bw("", "yyxx", n, "y"), y, 1),
            fe(bw("", "yyxx", n, "yy")).scale(&sc("q^3 - q^-1")),
        )
    }));

    v.push(fam1("P4.xcomm4.1", src("4", "xcomm4", "1"), move |n| {
        (
            comm(x, bw("x", "yyxx", n, "y"), 0),
            fe(bw("", "xxyy", n, "xxy")).scale(&sc("q^2 - q^-2")),
        )
    }));
    v.push(fam1("P4.xcomm4.2", src("4", "xcomm4", "2"), move |n| {
        (
            comm(bw("y", "xxyy", n, "x"), x, 0),
            fe(bw("yxx", "yyxx", n, "")).scale(&sc("q^2 - q^-2")),
        )
    }));
    v.push(fam1("P4.xcomm4.3", src("4", "xcomm4", "3"), move |n| {
        (
            comm(x, bw("xyy", "xxyy", n, "x"), 0),
            (&fe(bw("", "xxyy", n + 1, "x")) - &fe(bw("x", "yyxx", n + 1, "")))
                .scale(&sc("q^2 - q^-2")),
        )
    }));
    v.push(fam1("P4.xcomm4.4", src("4", "xcomm4", "4"), move |n| {
        (comm(x, bw("yxx", "yyxx", n, "y"), 0), FreeElement::zero())
    }));

    v.push(fam1("P4.ycomm4.1", src("4", "ycomm4", "1"), move |n| {
        (
            comm(bw("x", "yyxx", n, "y"), y, 0),
            fe(bw("xyy", "xxyy", n, "")).scale(&sc("q^2 - q^-2")),
        )
    }));
    v.push(fam1("P4.ycomm4.2", src("4", "ycomm4", "2"), move |n| {
        (
            comm(y, bw("y", "xxyy", n, "x"), 0),
            fe(bw("", "yyxx", n, "yyx")).scale(&sc("q^2 - q^-2")),
        )
    }));
    v.push(fam1("P4.ycomm4.3", src("4", "ycomm4", "3"), move |n| {
        (comm(bw("xyy", "xxyy", n, "x"), y, 0), FreeElement::zero())
    }));
    v.push(fam1("P4.ycomm4.4", src("4", "ycomm4", "4"), move |n| {
        (
            comm(bw("yxx", "yyxx", n, "y"), y, 0),
            (&fe(bw("y", "xxyy", n + 1, "")) - &fe(bw("", "yyxx", n + 1, "y")))
                .scale(&sc("q^2 - q^-2")),
        )
    }));
}

/// Convolution identities expressing each doubly alternating word as a
/// polynomial in the alternating words, plus the two corollaries in
/// denominator-cleared form. Equality chains split into `a`/`b` halves.
fn section5(v: &mut Vec<RelationFamily>) {
    // Even/odd alternating-sum self-convolutions.
    v.push(fam1("P5.conv1.1", src("5", "conv1", "1"), |n| {
        (
            alt_conv(2 * n, |k| (gh(k), gh(2 * n - k))),
            fe(bw("", "xxyy", n, "")).scale(&coef(n, 0, 2 * n)),
        )
    }));
    v.push(fam1("P5.conv1.2", src("5", "conv1", "2"), |n| {
        (
            alt_conv(2 * n, |k| (gg(k), gg(2 * n - k))),
            fe(bw("", "yyxx", n, "")).scale(&coef(n, 0, 2 * n)),
        )
    }));
    v.push(fam1("P5.conv1.3", src("5", "conv1", "3"), |n| {
        (
            alt_conv(2 * n, |k| (w_word(-(k as i64)), w_word(k as i64 - 2 * n as i64))),
            fe(bw("", "xxyy", n, "xx")).scale(&coef(n, 1, 2 * n + 1)),
        )
    }));
    v.push(fam1("P5.conv1.4", src("5", "conv1", "4"), |n| {
        (
            alt_conv(2 * n, |k| (w_word(k as i64 + 1), w_word(2 * n as i64 + 1 - k as i64))),
            fe(bw("", "yyxx", n, "yy")).scale(&coef(n, 1, 2 * n + 1)),
        )
    }));

    v.push(fam1("P5.conv1odd.1", src("5", "conv1odd", "1"), |n| {
        (
            alt_conv(2 * n + 1, |k| (gh(k), gh(2 * n + 1 - k))),
            FreeElement::zero(),
        )
    }));
    v.push(fam1("P5.conv1odd.2", src("5", "conv1odd", "2"), |n| {
        (
            alt_conv(2 * n + 1, |k| (gg(k), gg(2 * n + 1 - k))),
            FreeElement::zero(),
        )
    }));
    v.push(fam1("P5.conv1odd.3", src("5", "conv1odd", "3"), |n| {
        (
            alt_conv(2 * n + 1, |k| {
                (w_word(-(k as i64)), w_word(k as i64 - 2 * n as i64 - 1))
            }),
            FreeElement::zero(),
        )
    }));
    v.push(fam1("P5.conv1odd.4", src("5", "conv1odd", "4"), |n| {
        (
            alt_conv(2 * n + 1, |k| {
                (w_word(k as i64 + 1), w_word(2 * n as i64 + 2 - k as i64))
            }),
            FreeElement::zero(),
        )
    }));

    // W- against Ghat.
    v.push(fam1("P5.WmtG.1a", src("5", "W-*Ghat", "even, lhs"), |n| {
        (
            alt_conv(2 * n, |k| (w_word(-(k as i64)), gh(2 * n - k))),
            fe(bw("", "xxyy", n, "x")).scale(&coef(n, 0, 2 * n)),
        )
    }));
    v.push(fam1("P5.WmtG.1b", src("5", "W-*Ghat", "even, rhs"), |n| {
        (
            fe(bw("", "xxyy", n, "x")).scale(&coef(n, 0, 2 * n)),
            alt_conv(2 * n, |k| (gh(2 * n - k), w_word(-(k as i64)))),
        )
    }));
    v.push(fam1("P5.WmtG.2a", src("5", "W-*Ghat", "odd, lhs"), |n| {
        (
            alt_conv(2 * n + 1, |k| (w_word(-(k as i64)), gh(2 * n + 1 - k))).scale_q_power(-1),
            fe(bw("", "xxyy", n, "xxy")).scale(&coef(n, 0, 2 * n + 1)),
        )
    }));
    v.push(fam1("P5.WmtG.2b", src("5", "W-*Ghat", "odd, rhs"), |n| {
        (
            fe(bw("", "xxyy", n, "xxy")).scale(&coef(n, 0, 2 * n + 1)),
            alt_conv(2 * n + 1, |k| (gh(2 * n + 1 - k), w_word(-(k as i64)))).scale_q_power(1),
        )
    }));

    // W- against G.
    v.push(fam1("P5.WmG.1a", src("5", "W-*G", "even, lhs"), |n| {
        (
            alt_conv(2 * n, |k| (w_word(-(k as i64)), gg(2 * n - k))),
            fe(bw("x", "yyxx", n, "")).scale(&coef(n, 0, 2 * n)),
        )
    }));
    v.push(fam1("P5.WmG.1b", src("5", "W-*G", "even, rhs"), |n| {
        (
            fe(bw("x", "yyxx", n, "")).scale(&coef(n, 0, 2 * n)),
            alt_conv(2 * n, |k| (gg(2 * n - k), w_word(-(k as i64)))),
        )
    }));
    v.push(fam1("P5.WmG.2a", src("5", "W-*G", "odd, lhs"), |n| {
        (
            alt_conv(2 * n + 1, |k| (w_word(-(k as i64)), gg(2 * n + 1 - k))).scale_q_power(1),
            fe(bw("yxx", "yyxx", n, "")).scale(&coef(n, 0, 2 * n + 1)),
        )
    }));
    v.push(fam1("P5.WmG.2b", src("5", "W-*G", "odd, rhs"), |n| {
        (
            fe(bw("yxx", "yyxx", n, "")).scale(&coef(n, 0, 2 * n + 1)),
            alt_conv(2 * n + 1, |k| (gg(2 * n + 1 - k), w_word(-(k as i64)))).scale_q_power(-1),
        )
    }));

    // W+ against Ghat.
    v.push(fam1("P5.WptG.1a", src("5", "W+*Ghat", "even, lhs"), |n| {
        (
            alt_conv(2 * n, |k| (w_word(k as i64 + 1), gh(2 * n - k))),
            fe(bw("y", "xxyy", n, "")).scale(&coef(n, 0, 2 * n)),
        )
    }));
    v.push(fam1("P5.WptG.1b", src("5", "W+*Ghat", "even, rhs"), |n| {
        (
            fe(bw("y", "xxyy", n, "")).scale(&coef(n, 0, 2 * n)),
            alt_conv(2 * n, |k| (gh(2 * n - k), w_word(k as i64 + 1))),
        )
    }));
    v.push(fam1("P5.WptG.2a", src("5", "W+*Ghat", "odd, lhs"), |n| {
        (
            alt_conv(2 * n + 1, |k| (w_word(k as i64 + 1), gh(2 * n + 1 - k))).scale_q_power(1),
            fe(bw("xyy", "xxyy", n, "")).scale(&coef(n, 0, 2 * n + 1)),
        )
    }));
    v.push(fam1("P5.WptG.2b", src("5", "W+*Ghat", "odd, rhs"), |n| {
        (
            fe(bw("xyy", "xxyy", n, "")).scale(&coef(n, 0, 2 * n + 1)),
            alt_conv(2 * n + 1, |k| (gh(2 * n + 1 - k), w_word(k as i64 + 1))).scale_q_power(-1),
        )
    }));

    // W+ against G.
    v.push(fam1("P5.WpG.1a", src("5", "W+*G", "even, lhs"), |n| {
        (
            alt_conv(2 * n, |k| (w_word(k as i64 + 1), gg(2 * n - k))),
            fe(bw("", "yyxx", n, "y")).scale(&coef(n, 0, 2 * n)),
        )
    }));
    v.push(fam1("P5.WpG.1b", src("5", "W+*G", "even, rhs"), |n| {
        (
            fe(bw("", "yyxx", n, "y")).scale(&coef(n, 0, 2 * n)),
            alt_conv(2 * n, |k| (gg(2 * n - k), w_word(k as i64 + 1))),
        )
    }));
    v.push(fam1("P5.WpG.2a", src("5", "W+*G", "odd, lhs"), |n| {
        (
            alt_conv(2 * n + 1, |k| (w_word(k as i64 + 1), gg(2 * n + 1 - k))).scale_q_power(-1),
            fe(bw("", "yyxx", n, "yyx")).scale(&coef(n, 0, 2 * n + 1)),
        )
    }));
    v.push(fam1("P5.WpG.2b", src("5", "W+*G", "odd, rhs"), |n| {
        (
            fe(bw("", "yyxx", n, "yyx")).scale(&coef(n, 0, 2 * n + 1)),
            alt_conv(2 * n + 1, |k| (gg(2 * n + 1 - k), w_word(k as i64 + 1))).scale_q_power(1),
        )
    }));

    // G against Ghat.
    v.push(fam1("P5.GtG.1", src("5", "G*Ghat", "1"), |n| {
        (
            alt_conv(2 * n + 2, |k| (gg(k), gh(2 * n + 2 - k))),
            (&fe(bw("xyy", "xxyy", n, "x")).scale_q_power(-1)
                + &fe(bw("y", "xxyy", n, "xxy")).scale_q_power(1))
                .scale(&coef(n + 1, 0, 2 * n + 1)),
        )
    }));
    v.push(fam1("P5.GtG.2", src("5", "G*Ghat", "2"), |n| {
        (
            alt_conv(2 * n + 2, |k| (gh(2 * n + 2 - k), gg(k))),
            (&fe(bw("xyy", "xxyy", n, "x")).scale_q_power(1)
                + &fe(bw("y", "xxyy", n, "xxy")).scale_q_power(-1))
                .scale(&coef(n + 1, 0, 2 * n + 1)),
        )
    }));
    v.push(fam1("P5.GtG.3", src("5", "G*Ghat", "3"), |n| {
        (
            alt_conv(2 * n + 1, |k| (gg(k), gh(2 * n + 1 - k))),
            (&fe(bw("x", "yyxx", n, "y")) - &fe(bw("y", "xxyy", n, "x")))
                .scale(&coef(n, 0, 2 * n)),
        )
    }));
    v.push(fam1("P5.GtG.4", src("5", "G*Ghat", "4"), |n| {
        (
            alt_conv(2 * n + 1, |k| (gh(2 * n + 1 - k), gg(k))),
            (&fe(bw("x", "yyxx", n, "y")) - &fe(bw("y", "xxyy", n, "x")))
                .scale(&coef(n, 0, 2 * n)),
        )
    }));

    // W+ against W-.
    v.push(fam1("P5.WpWm.1", src("5", "W+*W-", "1"), |n| {
        (
            alt_conv(2 * n, |k| (w_word(k as i64 + 1), w_word(k as i64 - 2 * n as i64))),
            (&fe(bw("x", "yyxx", n, "y")).scale_q_power(-2) + &fe(bw("y", "xxyy", n, "x")))
                .scale(&coef(n, 0, 2 * n)),
        )
    }));
    v.push(fam1("P5.WpWm.2", src("5", "W+*W-", "2"), |n| {
        (
            alt_conv(2 * n, |k| (w_word(k as i64 - 2 * n as i64), w_word(k as i64 + 1))),
            (&fe(bw("x", "yyxx", n, "y")) + &fe(bw("y", "xxyy", n, "x")).scale_q_power(-2))
                .scale(&coef(n, 0, 2 * n)),
        )
    }));
    v.push(fam1("P5.WpWm.3", src("5", "W+*W-", "3"), |n| {
        (
            alt_conv(2 * n + 1, |k| {
                (w_word(k as i64 + 1), w_word(k as i64 - 2 * n as i64 - 1))
            }),
            (&fe(bw("xyy", "xxyy", n, "x")) - &fe(bw("yxx", "yyxx", n, "y")))
                .scale(&coef(n, -1, 2 * n + 1)),
        )
    }));
    v.push(fam1("P5.WpWm.4", src("5", "W+*W-", "4"), |n| {
        (
            alt_conv(2 * n + 1, |k| {
                (w_word(k as i64 - 2 * n as i64 - 1), w_word(k as i64 + 1))
            }),
            (&fe(bw("xyy", "xxyy", n, "x")) - &fe(bw("yxx", "yyxx", n, "y")))
                .scale(&coef(n, -1, 2 * n + 1)),
        )
    }));

    // First corollary, cleared by (1 - q^-2).
    let cleared1 = "cleared by (1 - q^-2)";
    v.push(fam1(
        "P5.cor1.1",
        src_note("5", "corollary 1", "1", cleared1),
        |n| {
            (
                fe(bw("x", "yyxx", n, "y")).scale(&(&coef(n, 0, 2 * n + 1) * &sc("1 - q^-2"))),
                alt_conv_comm(2 * n, 1, |k| {
                    (w_word(k as i64 - 2 * n as i64), w_word(k as i64 + 1))
                }),
            )
        },
    ));
    v.push(fam1(
        "P5.cor1.2",
        src_note("5", "corollary 1", "2", cleared1),
        |n| {
            (
                fe(bw("y", "xxyy", n, "x")).scale(&(&coef(n, 0, 2 * n + 1) * &sc("1 - q^-2"))),
                alt_conv_comm(2 * n, 1, |k| {
                    (w_word(k as i64 + 1), w_word(k as i64 - 2 * n as i64))
                }),
            )
        },
    ));
    v.push(fam1(
        "P5.cor1.3a",
        src_note("5", "corollary 1", "3, lhs", cleared1),
        |n| {
            (
                alt_conv(2 * n + 1, |k| (gg(k), gh(2 * n + 1 - k))).scale(&sc("1 - q^-2")),
                alt_conv_comm(2 * n, 0, |k| {
                    (w_word(k as i64 - 2 * n as i64), w_word(k as i64 + 1))
                }),
            )
        },
    ));
    v.push(fam1(
        "P5.cor1.3b",
        src_note("5", "corollary 1", "3, rhs", cleared1),
        |n| {
            (
                alt_conv_comm(2 * n, 0, |k| {
                    (w_word(k as i64 - 2 * n as i64), w_word(k as i64 + 1))
                }),
                alt_conv(2 * n + 1, |k| (gh(2 * n + 1 - k), gg(k))).scale(&sc("1 - q^-2")),
            )
        },
    ));

    // Second corollary, cleared by (q - q^-1) and (q^2 - 1).
    let cleared2 = "cleared by (q - q^-1)";
    let cleared3 = "cleared by (q^2 - 1)";
    v.push(fam1(
        "P5.cor2.1",
        src_note("5", "corollary 2", "1", cleared2),
        |n| {
            (
                fe(bw("xyy", "xxyy", n, "x"))
                    .scale(&(&coef(n + 1, 0, 2 * n + 2) * &sc("q - q^-1"))),
                alt_conv_comm(2 * n + 2, 1, |k| (gh(2 * n + 2 - k), gg(k))),
            )
        },
    ));
    v.push(fam1(
        "P5.cor2.2",
        src_note("5", "corollary 2", "2", cleared2),
        |n| {
            (
                fe(bw("yxx", "yyxx", n, "y"))
                    .scale(&(&coef(n + 1, 0, 2 * n + 2) * &sc("q - q^-1"))),
                alt_conv_comm(2 * n + 2, 1, |k| (gg(k), gh(2 * n + 2 - k))),
            )
        },
    ));
    v.push(fam1(
        "P5.cor2.3a",
        src_note("5", "corollary 2", "3, lhs", cleared3),
        |n| {
            (
                alt_conv(2 * n + 1, |k| {
                    (w_word(k as i64 + 1), w_word(k as i64 - 2 * n as i64 - 1))
                })
                .scale(&sc("q^2 - 1")),
                alt_conv_comm(2 * n + 2, 0, |k| (gg(k), gh(2 * n + 2 - k))),
            )
        },
    ));
    v.push(fam1(
        "P5.cor2.3b",
        src_note("5", "corollary 2", "3, rhs", cleared3),
        |n| {
            (
                alt_conv_comm(2 * n + 2, 0, |k| (gg(k), gh(2 * n + 2 - k))),
                alt_conv(2 * n + 1, |k| {
                    (w_word(k as i64 - 2 * n as i64 - 1), w_word(k as i64 + 1))
                })
                .scale(&sc("q^2 - 1")),
            )
        },
    ));
}

/// Known relations on the alternating words; lines holding two relations
/// split into `a`/`b` entries.
fn appendix_a(v: &mut Vec<RelationFamily>) {
    let wm = |i: usize| w_word(-(i as i64));
    let wp = |i: usize| w_word(i as i64 + 1);

    v.push(fam2("A.1a", src("A", "line 1", "a"), move |i, j| {
        (comm(wm(i), wm(j), 0), FreeElement::zero())
    }));
    v.push(fam2("A.1b", src("A", "line 1", "b"), move |i, j| {
        (comm(wp(i), wp(j), 0), FreeElement::zero())
    }));
    v.push(fam2("A.2a", src("A", "line 2", "a"), |i, j| {
        (comm(gg(i + 1), gg(j + 1), 0), FreeElement::zero())
    }));
    v.push(fam2("A.2b", src("A", "line 2", "b"), |i, j| {
        (comm(gh(i + 1), gh(j + 1), 0), FreeElement::zero())
    }));
    v.push(fam2_swap("A.3", src("A", "line 3", ""), 0, wm, wp));
    v.push(fam2_swap("A.4", src("A", "line 4", ""), 0, wm, |j| gg(j + 1)));
    v.push(fam2_swap("A.5", src("A", "line 5", ""), 0, wm, |j| gh(j + 1)));
    v.push(fam2_swap("A.6", src("A", "line 6", ""), 0, wp, |j| gg(j + 1)));
    v.push(fam2_swap("A.7", src("A", "line 7", ""), 0, wp, |j| gh(j + 1)));
    v.push(fam2_swap(
        "A.8",
        src("A", "line 8", ""),
        0,
        |i| gg(i + 1),
        |j| gh(j + 1),
    ));
    v.push(fam2_swap("A.9a", src("A", "line 9", "a"), 1, wm, gg));
    v.push(fam2_swap("A.9b", src("A", "line 9", "b"), 1, gg, wp));
    v.push(fam2_swap("A.10a", src("A", "line 10", "a"), 1, gh, wm));
    v.push(fam2_swap("A.10b", src("A", "line 10", "b"), 1, wp, gh));

    v.push(fam2("A.11", src("A", "line 11", ""), move |i, j| {
        (
            &comm(gg(i), gh(j + 1), 0) - &comm(gg(j), gh(i + 1), 0),
            (&comm(wm(j), wp(i), 1) - &comm(wm(i), wp(j), 1)).scale_q_power(1),
        )
    }));
    v.push(fam2("A.12", src("A", "line 12", ""), move |i, j| {
        (
            &comm(gh(i), gg(j + 1), 0) - &comm(gh(j), gg(i + 1), 0),
            (&comm(wp(j), wm(i), 1) - &comm(wp(i), wm(j), 1)).scale_q_power(1),
        )
    }));
    v.push(fam2("A.13", src("A", "line 13", ""), move |i, j| {
        (
            &comm(gg(i + 1), gh(j + 1), 1) - &comm(gg(j + 1), gh(i + 1), 1),
            (&comm(wm(j), wp(i + 1), 0) - &comm(wm(i), wp(j + 1), 0)).scale_q_power(1),
        )
    }));
    v.push(fam2("A.14", src("A", "line 14", ""), move |i, j| {
        (
            &comm(gh(i + 1), gg(j + 1), 1) - &comm(gh(j + 1), gg(i + 1), 1),
            (&comm(wp(j), wm(i + 1), 0) - &comm(wp(i), wm(j + 1), 0)).scale_q_power(1),
        )
    }));
}

/// Commutator relations between two doubly alternating words: eleven
/// propositions of four relations each, all of swap shape.
fn appendix_b(v: &mut Vec<RelationFamily>) {
    let entries: [(&'static str, i64, fn(usize) -> Word, fn(usize) -> Word); 44] = [
        ("B.1.1", 0, |i| bw("", "xxyy", i, ""), |j| bw("", "xxyy", j, "")),
        ("B.1.2", 0, |i| bw("", "yyxx", i, ""), |j| bw("", "yyxx", j, "")),
        ("B.1.3", 0, |i| bw("", "xxyy", i, "xx"), |j| bw("", "xxyy", j, "xx")),
        ("B.1.4", 0, |i| bw("", "yyxx", i, "yy"), |j| bw("", "yyxx", j, "yy")),
        ("B.2.1", 0, |i| bw("", "xxyy", i, "xxy"), |j| bw("", "xxyy", j + 1, "")),
        ("B.2.2", 0, |i| bw("xyy", "xxyy", i, ""), |j| bw("", "xxyy", j + 1, "")),
        ("B.2.3", 0, |i| bw("", "yyxx", i, "yyx"), |j| bw("", "yyxx", j + 1, "")),
        ("B.2.4", 0, |i| bw("yxx", "yyxx", i, ""), |j| bw("", "yyxx", j + 1, "")),
        ("B.3.1", 0, |i| bw("", "xxyy", i, "x"), |j| bw("", "xxyy", j + 1, "")),
        ("B.3.2", 0, |i| bw("y", "xxyy", i, ""), |j| bw("", "xxyy", j + 1, "")),
        ("B.3.3", 0, |i| bw("", "yyxx", i, "y"), |j| bw("", "yyxx", j + 1, "")),
        ("B.3.4", 0, |i| bw("x", "yyxx", i, ""), |j| bw("", "yyxx", j + 1, "")),
        ("B.4.1", 0, |i| bw("", "xxyy", i, "xx"), |j| bw("", "xxyy", j, "xxy")),
        ("B.4.2", 0, |i| bw("", "yyxx", i, "yy"), |j| bw("xyy", "xxyy", j, "")),
        ("B.4.3", 0, |i| bw("", "yyxx", i, "yy"), |j| bw("", "yyxx", j, "yyx")),
        ("B.4.4", 0, |i| bw("", "xxyy", i, "xx"), |j| bw("yxx", "yyxx", j, "")),
        ("B.5.1", 1, |i| bw("", "xxyy", i, "x"), |j| bw("", "xxyy", j, "xxy")),
        ("B.5.2", 1, |i| bw("xyy", "xxyy", i, ""), |j| bw("y", "xxyy", j, "")),
        ("B.5.3", 1, |i| bw("", "yyxx", i, "y"), |j| bw("", "yyxx", j, "yyx")),
        ("B.5.4", 1, |i| bw("yxx", "yyxx", i, ""), |j| bw("x", "yyxx", j, "")),
        ("B.6.1", 2, |i| bw("", "xxyy", i, ""), |j| bw("", "xxyy", j, "xxy")),
        ("B.6.2", 2, |i| bw("xyy", "xxyy", i, ""), |j| bw("", "xxyy", j, "")),
        ("B.6.3", 2, |i| bw("", "yyxx", i, ""), |j| bw("", "yyxx", j, "yyx")),
        ("B.6.4", 2, |i| bw("yxx", "yyxx", i, ""), |j| bw("", "yyxx", j, "")),
        ("B.7.1", 2, |i| bw("", "xxyy", i, "x"), |j| bw("", "xxyy", j, "xx")),
        ("B.7.2", 2, |i| bw("", "xxyy", i, "xx"), |j| bw("x", "yyxx", j, "")),
        ("B.7.3", 2, |i| bw("", "yyxx", i, "y"), |j| bw("", "yyxx", j, "yy")),
        ("B.7.4", 2, |i| bw("", "yyxx", i, "yy"), |j| bw("y", "xxyy", j, "")),
        ("B.8.1", 2, |i| bw("", "xxyy", i, "xxy"), |j| bw("", "xxyy", j + 1, "xx")),
        ("B.8.2", 2, |i| bw("", "xxyy", i + 1, "xx"), |j| bw("yxx", "yyxx", j, "")),
        ("B.8.3", 2, |i| bw("", "yyxx", i, "yyx"), |j| bw("", "yyxx", j + 1, "yy")),
        ("B.8.4", 2, |i| bw("", "yyxx", i + 1, "yy"), |j| bw("xyy", "xxyy", j, "")),
        ("B.9.1", 2, |i| bw("", "xxyy", i, ""), |j| bw("", "xxyy", j, "x")),
        ("B.9.2", 2, |i| bw("x", "yyxx", i, ""), |j| bw("", "yyxx", j, "")),
        ("B.9.3", 2, |i| bw("", "yyxx", i, ""), |j| bw("", "yyxx", j, "y")),
        ("B.9.4", 2, |i| bw("y", "xxyy", i, ""), |j| bw("", "xxyy", j, "")),
        ("B.10.1", 1, |i| bw("", "xxyy", i, "xxy"), |j| bw("", "xxyy", j + 1, "x")),
        ("B.10.2", 1, |i| bw("x", "yyxx", i + 1, ""), |j| bw("yxx", "yyxx", j, "")),
        ("B.10.3", 1, |i| bw("", "yyxx", i, "yyx"), |j| bw("", "yyxx", j + 1, "y")),
        ("B.10.4", 1, |i| bw("y", "xxyy", i + 1, ""), |j| bw("xyy", "xxyy", j, "")),
        ("B.11.1", 0, |i| bw("", "xxyy", i, "xx"), |j| bw("", "xxyy", j + 1, "x")),
        ("B.11.2", 0, |i| bw("x", "yyxx", i + 1, ""), |j| bw("xx", "yyxx", j, "")),
        ("B.11.3", 0, |i| bw("", "yyxx", i, "yy"), |j| bw("", "yyxx", j + 1, "y")),
        ("B.11.4", 0, |i| bw("y", "xxyy", i + 1, ""), |j| bw("yy", "xxyy", j, "")),
    ];
    for (id, c, fa, fb) in entries {
        // "B.<proposition>.<equation>"
        let position: &'static str = &id[2..];
        v.push(fam2_swap(id, src("B", "commutators", position), c, fa, fb));
    }
}

/// Alternative forms of the convolution identities, stated purely in the
/// alternating words. The two equality chains split into `a`/`b` halves.
fn appendix_c(v: &mut Vec<RelationFamily>) {
    v.push(fam1("C.1a", src("C", "W-*Ghat", "even"), |n| {
        (
            alt_conv(2 * n, |k| (w_word(-(k as i64)), gh(2 * n - k))),
            alt_conv(2 * n, |k| (gh(2 * n - k), w_word(-(k as i64)))),
        )
    }));
    v.push(fam1("C.1b", src("C", "W-*Ghat", "odd"), |n| {
        (
            alt_conv(2 * n + 1, |k| (w_word(-(k as i64)), gh(2 * n + 1 - k))).scale_q_power(-1),
            alt_conv(2 * n + 1, |k| (gh(2 * n + 1 - k), w_word(-(k as i64)))).scale_q_power(1),
        )
    }));
    v.push(fam1("C.2a", src("C", "W-*G", "even"), |n| {
        (
            alt_conv(2 * n, |k| (w_word(-(k as i64)), gg(2 * n - k))),
            alt_conv(2 * n, |k| (gg(2 * n - k), w_word(-(k as i64)))),
        )
    }));
    v.push(fam1("C.2b", src("C", "W-*G", "odd"), |n| {
        (
            alt_conv(2 * n + 1, |k| (w_word(-(k as i64)), gg(2 * n + 1 - k))).scale_q_power(1),
            alt_conv(2 * n + 1, |k| (gg(2 * n + 1 - k), w_word(-(k as i64)))).scale_q_power(-1),
        )
    }));
    v.push(fam1("C.3a", src("C", "W+*Ghat", "even"), |n| {
        (
            alt_conv(2 * n, |k| (w_word(k as i64 + 1), gh(2 * n - k))),
            alt_conv(2 * n, |k| (gh(2 * n - k), w_word(k as i64 + 1))),
        )
    }));
    v.push(fam1("C.3b", src("C", "W+*Ghat", "odd"), |n| {
        (
            alt_conv(2 * n + 1, |k| (w_word(k as i64 + 1), gh(2 * n + 1 - k))).scale_q_power(1),
            alt_conv(2 * n + 1, |k| (gh(2 * n + 1 - k), w_word(k as i64 + 1))).scale_q_power(-1),
        )
    }));
    v.push(fam1("C.4a", src("C", "W+*G", "even"), |n| {
        (
            alt_conv(2 * n, |k| (w_word(k as i64 + 1), gg(2 * n - k))),
            alt_conv(2 * n, |k| (gg(2 * n - k), w_word(k as i64 + 1))),
        )
    }));
    v.push(fam1("C.4b", src("C", "W+*G", "odd"), |n| {
        (
            alt_conv(2 * n + 1, |k| (w_word(k as i64 + 1), gg(2 * n + 1 - k))).scale_q_power(-1),
            alt_conv(2 * n + 1, |k| (gg(2 * n + 1 - k), w_word(k as i64 + 1))).scale_q_power(1),
        )
    }));

    let cleared1 = "cleared by (1 - q^-2)";
    v.push(fam1("C.5a", src_note("C", "G*Ghat", "lhs", cleared1), |n| {
        (
            alt_conv(2 * n + 1, |k| (gg(k), gh(2 * n + 1 - k))).scale(&sc("1 - q^-2")),
            alt_conv_comm(2 * n, 0, |k| {
                (w_word(k as i64 - 2 * n as i64), w_word(k as i64 + 1))
            }),
        )
    }));
    v.push(fam1("C.5b", src_note("C", "G*Ghat", "rhs", cleared1), |n| {
        (
            alt_conv_comm(2 * n, 0, |k| {
                (w_word(k as i64 - 2 * n as i64), w_word(k as i64 + 1))
            }),
            alt_conv(2 * n + 1, |k| (gh(2 * n + 1 - k), gg(k))).scale(&sc("1 - q^-2")),
        )
    }));

    let cleared3 = "cleared by (q^2 - 1)";
    v.push(fam1("C.6a", src_note("C", "W+*W-", "lhs", cleared3), |n| {
        (
            alt_conv(2 * n + 1, |k| {
                (w_word(k as i64 + 1), w_word(k as i64 - 2 * n as i64 - 1))
            })
            .scale(&sc("q^2 - 1")),
            alt_conv_comm(2 * n + 2, 0, |k| (gg(k), gh(2 * n + 2 - k))),
        )
    }));
    v.push(fam1("C.6b", src_note("C", "W+*W-", "rhs", cleared3), |n| {
        (
            alt_conv_comm(2 * n + 2, 0, |k| (gg(k), gh(2 * n + 2 - k))),
            alt_conv(2 * n + 1, |k| {
                (w_word(k as i64 - 2 * n as i64 - 1), w_word(k as i64 + 1))
            })
            .scale(&sc("q^2 - 1")),
        )
    }));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::{instantiate, list_families, resolve, verify, verify_range};
    use crate::words::{classify, WordClass};

    #[test]
    fn catalog_counts_per_section() {
        let count = |section: &str| {
            catalog()
                .iter()
                .filter(|f| f.source.section == section)
                .count()
        };
        assert_eq!(count("2"), 2);
        assert_eq!(count("4"), 32);
        // 24 proposition equalities (chains split) + 8 corollary halves.
        assert_eq!(count("5"), 40);
        // 14 lines; lines 1, 2, 9, 10 carry two relations each.
        assert_eq!(count("A"), 18);
        assert_eq!(count("B"), 44);
        // 8 single equalities + two chains split in half.
        assert_eq!(count("C"), 12);
    }

    #[test]
    fn catalog_contains_expected_ids() {
        for id in ["P4.xcomm1.1", "A.9a", "P5.conv1.3", "B.1.1", "B.11.2", "C.5a"] {
            assert!(
                catalog().iter().any(|f| f.id == id),
                "missing catalog id {id}"
            );
        }
        // Chain displays resolve as groups.
        assert_eq!(resolve("C.5"), vec!["C.5a", "C.5b"]);
        assert_eq!(resolve("P4.xcomm1").len(), 4);
        assert_eq!(resolve("A.9"), vec!["A.9a", "A.9b"]);
    }

    #[test]
    fn ids_are_unique() {
        let all = list_families();
        for (i, (id_a, _, _)) in all.iter().enumerate() {
            for (id_b, _, _) in &all[..i] {
                assert_ne!(id_a, id_b, "duplicate id {id_a}");
            }
        }
    }

    #[test]
    fn instantiate_examples() {
        let (lhs, rhs) = instantiate("serre.x", &[]).unwrap();
        assert!(rhs.is_zero());
        // The Serre combination expands to zero; that expansion is the check.
        assert!(lhs.is_zero());

        let (lhs, rhs) = instantiate("P5.conv1.3", &[0]).unwrap();
        let expected: FreeElement = "(1 + q^2)*xx".parse().unwrap();
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);

        let (lhs, rhs) = instantiate("B.1.1", &[1, 1]).unwrap();
        assert!(lhs.is_zero());
        assert!(rhs.is_zero());
    }

    #[test]
    fn verify_examples() {
        assert!(verify("P4.xcomm1.1", &[1]).unwrap().pass);
        assert!(verify("P5.conv1odd.1", &[0]).unwrap().pass);
        assert!(verify("A.11", &[2, 3]).unwrap().pass);
    }

    #[test]
    fn verify_range_examples() {
        let reports = verify_range("P4.ycomm1.4", 4).unwrap();
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(|r| r.pass));

        let reports = verify_range("B.5.1", 4).unwrap();
        assert_eq!(reports.len(), 15); // (i, j) with i + j <= 4
        assert!(reports.iter().all(|r| r.pass));

        let reports = verify_range("C.1a", 3).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.pass));
    }

    #[test]
    fn unknown_and_wrong_arity_errors() {
        assert!(verify("P4.nosuch", &[0]).is_err());
        assert!(verify("P4.xcomm1.1", &[1, 2]).is_err());
        assert!(instantiate("A.11", &[1]).is_err());
    }

    #[test]
    fn report_json_shape() {
        let report = verify("P4.xcomm1.1", &[1]).unwrap();
        let j = report.to_json();
        assert_eq!(j["verdict"], "pass");
        assert_eq!(j["id"], "P4.xcomm1.1");
        assert!(j["difference"]["terms"].as_array().unwrap().is_empty());
        assert!(j["millis"].is_number());
    }

    #[test]
    fn scalar_rhs_words_classify_doubly_alternating() {
        // Convolution right sides that are scalar multiples of a single
        // doubly alternating word, at n = 1 and n = 2.
        let scalar_rhs_families = [
            "P5.conv1.1",
            "P5.conv1.2",
            "P5.conv1.3",
            "P5.conv1.4",
            "P5.WmtG.1a",
            "P5.WmtG.2a",
            "P5.WmG.1a",
            "P5.WmG.2a",
            "P5.WptG.1a",
            "P5.WptG.2a",
            "P5.WpG.1a",
            "P5.WpG.2a",
        ];
        for id in scalar_rhs_families {
            for n in [1usize, 2] {
                let (lhs, rhs) = instantiate(id, &[n]).unwrap();
                let side = if rhs.num_terms() == 1 { &rhs } else { &lhs };
                assert_eq!(side.num_terms(), 1, "{id} at n={n}");
                let word = side.support().next().copied().unwrap();
                assert!(
                    matches!(classify(word), WordClass::DoublyAlternating(..)),
                    "{id} at n={n}: rhs word {word} should be doubly alternating"
                );
            }
        }
    }
}
