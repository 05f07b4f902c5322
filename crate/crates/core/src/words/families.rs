//! Named word families, the word classifier, and the ideal orthogonality
//! oracle for membership in the subalgebra generated by the letters.

use std::fmt;
use std::sync::OnceLock;

use crate::coeff::LaurentInt;
use crate::words::element::FreeElement;
use crate::words::word::{wlit, words_of_len, Letter, Word};

/// The four alternating word families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AltFamily {
    /// `Ghat_n = (xy)^n`
    GHat,
    /// `G_n = (yx)^n`
    G,
    /// `W_-n = (xy)^n x`
    WMinus,
    /// `W_n = (yx)^(n-1) y`, indices n >= 1
    WPlus,
}

impl AltFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            AltFamily::GHat => "Ghat",
            AltFamily::G => "G",
            AltFamily::WMinus => "W-",
            AltFamily::WPlus => "W+",
        }
    }

    pub fn from_str(s: &str) -> Option<AltFamily> {
        match s {
            "Ghat" | "ghat" => Some(AltFamily::GHat),
            "G" | "g" => Some(AltFamily::G),
            "W-" | "w-" | "Wm" | "wm" => Some(AltFamily::WMinus),
            "W+" | "w+" | "Wp" | "wp" => Some(AltFamily::WPlus),
            _ => None,
        }
    }
}

/// The sixteen doubly alternating word families, one per choice of the
/// first two and last two letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DoublyFamily {
    /// `(xxyy)^n`
    XxyyPow,
    /// `(yyxx)^n`
    YyxxPow,
    /// `(xxyy)^n xx`
    XxyyXx,
    /// `(yyxx)^n yy`
    YyxxYy,
    /// `xyy(xxyy)^n`
    XyyXxyy,
    /// `yxx(yyxx)^n`
    YxxYyxx,
    /// `x(yyxx)^n`
    XYyxx,
    /// `y(xxyy)^n`
    YXxyy,
    /// `(xxyy)^n xxy`
    XxyyXxy,
    /// `(yyxx)^n yyx`
    YyxxYyx,
    /// `(xxyy)^n x`
    XxyyX,
    /// `(yyxx)^n y`
    YyxxY,
    /// `x(yyxx)^n y`
    XYyxxY,
    /// `y(xxyy)^n x`
    YXxyyX,
    /// `xyy(xxyy)^n x`
    XyyXxyyX,
    /// `yxx(yyxx)^n y`
    YxxYyxxY,
}

pub const DOUBLY_FAMILIES: [DoublyFamily; 16] = [
    DoublyFamily::XxyyPow,
    DoublyFamily::YyxxPow,
    DoublyFamily::XxyyXx,
    DoublyFamily::YyxxYy,
    DoublyFamily::XyyXxyy,
    DoublyFamily::YxxYyxx,
    DoublyFamily::XYyxx,
    DoublyFamily::YXxyy,
    DoublyFamily::XxyyXxy,
    DoublyFamily::YyxxYyx,
    DoublyFamily::XxyyX,
    DoublyFamily::YyxxY,
    DoublyFamily::XYyxxY,
    DoublyFamily::YXxyyX,
    DoublyFamily::XyyXxyyX,
    DoublyFamily::YxxYyxxY,
];

impl DoublyFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            DoublyFamily::XxyyPow => "XXYY_pow",
            DoublyFamily::YyxxPow => "YYXX_pow",
            DoublyFamily::XxyyXx => "XXYY_xx",
            DoublyFamily::YyxxYy => "YYXX_yy",
            DoublyFamily::XyyXxyy => "xyy_XXYY",
            DoublyFamily::YxxYyxx => "yxx_YYXX",
            DoublyFamily::XYyxx => "x_YYXX",
            DoublyFamily::YXxyy => "y_XXYY",
            DoublyFamily::XxyyXxy => "XXYY_xxy",
            DoublyFamily::YyxxYyx => "YYXX_yyx",
            DoublyFamily::XxyyX => "XXYY_x",
            DoublyFamily::YyxxY => "YYXX_y",
            DoublyFamily::XYyxxY => "x_YYXX_y",
            DoublyFamily::YXxyyX => "y_XXYY_x",
            DoublyFamily::XyyXxyyX => "xyy_XXYY_x",
            DoublyFamily::YxxYyxxY => "yxx_YYXX_y",
        }
    }

    pub fn from_str(s: &str) -> Option<DoublyFamily> {
        DOUBLY_FAMILIES.iter().copied().find(|f| f.as_str() == s)
    }

    /// `(prefix, repeated block, suffix)` defining the family.
    fn shape(self) -> (&'static str, &'static str, &'static str) {
        match self {
            DoublyFamily::XxyyPow => ("", "xxyy", ""),
            DoublyFamily::YyxxPow => ("", "yyxx", ""),
            DoublyFamily::XxyyXx => ("", "xxyy", "xx"),
            DoublyFamily::YyxxYy => ("", "yyxx", "yy"),
            DoublyFamily::XyyXxyy => ("xyy", "xxyy", ""),
            DoublyFamily::YxxYyxx => ("yxx", "yyxx", ""),
            DoublyFamily::XYyxx => ("x", "yyxx", ""),
            DoublyFamily::YXxyy => ("y", "xxyy", ""),
            DoublyFamily::XxyyXxy => ("", "xxyy", "xxy"),
            DoublyFamily::YyxxYyx => ("", "yyxx", "yyx"),
            DoublyFamily::XxyyX => ("", "xxyy", "x"),
            DoublyFamily::YyxxY => ("", "yyxx", "y"),
            DoublyFamily::XYyxxY => ("x", "yyxx", "y"),
            DoublyFamily::YXxyyX => ("y", "xxyy", "x"),
            DoublyFamily::XyyXxyyX => ("xyy", "xxyy", "x"),
            DoublyFamily::YxxYyxxY => ("yxx", "yyxx", "y"),
        }
    }
}

/// Error from the family constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    /// `W_0 = x` belongs to the W- family; the W+ family starts at index 1.
    WPlusIndexZero,
    UnknownFamily(String),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::WPlusIndexZero => {
                write!(f, "W+ index 0 is rejected (W_0 = x lies in the W- family)")
            }
            FamilyError::UnknownFamily(s) => write!(f, "unknown word family '{s}'"),
        }
    }
}

impl std::error::Error for FamilyError {}

/// The alternating word of the given family and index:
/// `Ghat_n = (xy)^n`, `G_n = (yx)^n` (index 0 gives the trivial word),
/// `W_-n = (xy)^n x`, and `W_n = (yx)^(n-1) y` for index n >= 1.
pub fn alternating(family: AltFamily, n: usize) -> Result<Word, FamilyError> {
    match family {
        AltFamily::GHat => Ok(wlit("xy").repeated(n)),
        AltFamily::G => Ok(wlit("yx").repeated(n)),
        AltFamily::WMinus => Ok(wlit("xy").repeated(n).concat(&wlit("x"))),
        AltFamily::WPlus => {
            if n == 0 {
                Err(FamilyError::WPlusIndexZero)
            } else {
                Ok(wlit("yx").repeated(n - 1).concat(&wlit("y")))
            }
        }
    }
}

/// `W_j` for any integer index: `W_-n = (xy)^n x` for j <= 0 and
/// `W_n = (yx)^(n-1) y` for j >= 1.
pub fn w_word(j: i64) -> Word {
    if j <= 0 {
        alternating(AltFamily::WMinus, (-j) as usize).unwrap()
    } else {
        alternating(AltFamily::WPlus, j as usize).unwrap()
    }
}

/// The doubly alternating word of the given family at index `n`.
pub fn doubly_alternating(family: DoublyFamily, n: usize) -> Word {
    let (pre, block, post) = family.shape();
    wopt(pre)
        .concat(&wlit(block).repeated(n))
        .concat(&wopt(post))
}

// `wlit` rejects the empty string, so shape prefixes/suffixes go through
// this helper instead.
fn wopt(s: &str) -> Word {
    if s.is_empty() {
        Word::trivial()
    } else {
        wlit(s)
    }
}

/// Classification verdict for a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordClass {
    Trivial,
    PowerX(usize),
    PowerY(usize),
    Alternating(AltFamily, usize),
    DoublyAlternating(DoublyFamily, usize),
    /// Offset and content of the leftmost forbidden length-4 segment.
    NotInU { offset: usize, segment: Word },
}

impl WordClass {
    /// Rebuild the classified word; `None` for words outside the subalgebra.
    pub fn reconstruct(&self) -> Option<Word> {
        match *self {
            WordClass::Trivial => Some(Word::trivial()),
            WordClass::PowerX(n) => Some(Word::letter_word(Letter::X).repeated(n)),
            WordClass::PowerY(n) => Some(Word::letter_word(Letter::Y).repeated(n)),
            WordClass::Alternating(fam, n) => alternating(fam, n).ok(),
            WordClass::DoublyAlternating(fam, n) => Some(doubly_alternating(fam, n)),
            WordClass::NotInU { .. } => None,
        }
    }

    pub fn is_in_u(&self) -> bool {
        !matches!(self, WordClass::NotInU { .. })
    }
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordClass::Trivial => write!(f, "trivial"),
            WordClass::PowerX(n) => write!(f, "power x^{n}"),
            WordClass::PowerY(n) => write!(f, "power y^{n}"),
            WordClass::Alternating(fam, n) => match fam {
                AltFamily::GHat => write!(f, "alternating Ghat_{n}"),
                AltFamily::G => write!(f, "alternating G_{n}"),
                AltFamily::WMinus => write!(f, "alternating W_-{n}"),
                AltFamily::WPlus => write!(f, "alternating W_{n}"),
            },
            WordClass::DoublyAlternating(fam, n) => {
                write!(f, "doubly-alternating {} n={n}", fam.as_str())
            }
            WordClass::NotInU { offset, segment } => {
                write!(f, "not in U: forbidden segment {segment} at offset {offset}")
            }
        }
    }
}

/// The eight forbidden length-4 segments whose presence certifies that a
/// word lies outside the subalgebra.
pub fn forbidden_segments() -> &'static [Word; 8] {
    static SEGMENTS: OnceLock<[Word; 8]> = OnceLock::new();
    SEGMENTS.get_or_init(|| {
        [
            wlit("xxxy"),
            wlit("xxyx"),
            wlit("xyxx"),
            wlit("yxxx"),
            wlit("yyyx"),
            wlit("yyxy"),
            wlit("yxyy"),
            wlit("xyyy"),
        ]
    })
}

/// Leftmost forbidden segment, if any.
fn find_forbidden(w: Word) -> Option<(usize, Word)> {
    if w.len() < 4 {
        return None;
    }
    let forbidden = forbidden_segments();
    for i in 0..=w.len() - 4 {
        let seg = w.segment4(i);
        if forbidden.contains(&seg) {
            return Some((i, seg));
        }
    }
    None
}

/// True when no two adjacent letters are equal.
fn is_strictly_alternating(w: Word) -> bool {
    (1..w.len()).all(|i| w.letter(i) != w.letter(i - 1))
}

/// Classify a word: scan for forbidden segments first, then match the
/// unique family. Overlapping degenerate cases resolve in the fixed order
/// trivial, letter power, alternating, doubly alternating.
pub fn classify(w: Word) -> WordClass {
    if let Some((offset, segment)) = find_forbidden(w) {
        return WordClass::NotInU { offset, segment };
    }
    if w.is_trivial() {
        return WordClass::Trivial;
    }
    let (nx, ny) = w.bidegree();
    if ny == 0 {
        return WordClass::PowerX(nx);
    }
    if nx == 0 {
        return WordClass::PowerY(ny);
    }
    if is_strictly_alternating(w) {
        let class = match (w.first().unwrap(), w.last().unwrap()) {
            (Letter::X, Letter::Y) => WordClass::Alternating(AltFamily::GHat, w.len() / 2),
            (Letter::Y, Letter::X) => WordClass::Alternating(AltFamily::G, w.len() / 2),
            (Letter::X, Letter::X) => WordClass::Alternating(AltFamily::WMinus, w.len() / 2),
            (Letter::Y, Letter::Y) => WordClass::Alternating(AltFamily::WPlus, w.len() / 2 + 1),
        };
        debug_assert_eq!(class.reconstruct(), Some(w));
        return class;
    }
    // Doubly alternating: the pair (first two, last two letters) picks the
    // family, and the length fixes the index.
    let first2 = (w.letter(0), w.letter(1));
    let last2 = (w.letter(w.len() - 2), w.letter(w.len() - 1));
    use Letter::{X, Y};
    let family = match (first2, last2) {
        ((X, X), (Y, Y)) => DoublyFamily::XxyyPow,
        ((Y, Y), (X, X)) => DoublyFamily::YyxxPow,
        ((X, X), (X, X)) => DoublyFamily::XxyyXx,
        ((Y, Y), (Y, Y)) => DoublyFamily::YyxxYy,
        ((X, Y), (Y, Y)) => DoublyFamily::XyyXxyy,
        ((Y, X), (X, X)) => DoublyFamily::YxxYyxx,
        ((X, Y), (X, X)) => DoublyFamily::XYyxx,
        ((Y, X), (Y, Y)) => DoublyFamily::YXxyy,
        ((X, X), (X, Y)) => DoublyFamily::XxyyXxy,
        ((Y, Y), (Y, X)) => DoublyFamily::YyxxYyx,
        ((X, X), (Y, X)) => DoublyFamily::XxyyX,
        ((Y, Y), (X, Y)) => DoublyFamily::YyxxY,
        ((X, Y), (X, Y)) => DoublyFamily::XYyxxY,
        ((Y, X), (Y, X)) => DoublyFamily::YXxyyX,
        ((X, Y), (Y, X)) => DoublyFamily::XyyXxyyX,
        ((Y, X), (X, Y)) => DoublyFamily::YxxYyxxY,
    };
    let (pre, _, post) = family.shape();
    let fixed = wopt(pre).len() + wopt(post).len();
    assert!(
        w.len() >= fixed && (w.len() - fixed) % 4 == 0,
        "classification: segment-free word {w} does not fit family {}",
        family.as_str()
    );
    let n = (w.len() - fixed) / 4;
    let class = WordClass::DoublyAlternating(family, n);
    assert_eq!(
        class.reconstruct(),
        Some(w),
        "classification: reconstruction mismatch for {w}"
    );
    class
}

/// The two degree-4 generators of the ideal `J`:
/// `xxxy - [3] xxyx + [3] xyxx - yxxx` and its x/y mirror.
pub fn serre_generators() -> (FreeElement, FreeElement) {
    let three = LaurentInt::q_int(3);
    let mut g1 = FreeElement::from_word(wlit("xxxy"));
    g1.add_term(wlit("xxyx"), &-&three);
    g1.add_term(wlit("xyxx"), &three);
    g1.add_term(wlit("yxxx"), &-&LaurentInt::one());
    let mut g2 = FreeElement::from_word(wlit("yyyx"));
    g2.add_term(wlit("yyxy"), &-&three);
    g2.add_term(wlit("yxyy"), &three);
    g2.add_term(wlit("xyyy"), &-&LaurentInt::one());
    (g1, g2)
}

/// Spanning set of the degree-`d` component of the ideal `J`: all products
/// `a · g · b` with `|a| + |b| = d - 4` and `g` one of the two generators.
/// Empty for `d < 4`. Padding pairs are enumerated without deduplication.
pub fn span_j_degree(d: usize) -> Vec<FreeElement> {
    if d < 4 {
        return Vec::new();
    }
    let (g1, g2) = serre_generators();
    let mut out = Vec::new();
    for left_len in 0..=d - 4 {
        let right_len = d - 4 - left_len;
        for a in words_of_len(left_len) {
            for b in words_of_len(right_len) {
                for g in [&g1, &g2] {
                    let mut elem = FreeElement::zero();
                    for (m, c) in g.terms() {
                        elem.add_term(a.concat(m).concat(&b), c);
                    }
                    out.push(elem);
                }
            }
        }
    }
    out
}

/// Membership oracle from the ideal orthogonality characterization: a word
/// lies in the subalgebra iff it pairs to zero with every spanning element
/// of the matching-degree component of `J`. Independent of `classify`.
pub fn in_u_by_orthogonality(w: Word) -> bool {
    let elem = FreeElement::from_word(w);
    span_j_degree(w.len())
        .iter()
        .all(|s| elem.bilinear_form(s).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_examples() {
        assert_eq!(alternating(AltFamily::GHat, 3).unwrap(), wlit("xyxyxy"));
        assert_eq!(alternating(AltFamily::WMinus, 2).unwrap(), wlit("xyxyx"));
        assert_eq!(alternating(AltFamily::WPlus, 4).unwrap(), wlit("yxyxyxy"));
        assert_eq!(alternating(AltFamily::G, 0).unwrap(), Word::trivial());
        assert_eq!(alternating(AltFamily::GHat, 0).unwrap(), Word::trivial());
        assert_eq!(
            alternating(AltFamily::WPlus, 0),
            Err(FamilyError::WPlusIndexZero)
        );
    }

    #[test]
    fn w_word_both_signs() {
        assert_eq!(w_word(0), wlit("x"));
        assert_eq!(w_word(1), wlit("y"));
        assert_eq!(w_word(-2), wlit("xyxyx"));
        assert_eq!(w_word(3), wlit("yxyxy"));
    }

    #[test]
    fn doubly_alternating_examples() {
        assert_eq!(doubly_alternating(DoublyFamily::XxyyPow, 1), wlit("xxyy"));
        assert_eq!(doubly_alternating(DoublyFamily::XxyyXx, 1), wlit("xxyyxx"));
        assert_eq!(doubly_alternating(DoublyFamily::YxxYyxxY, 0), wlit("yxxy"));
        assert_eq!(doubly_alternating(DoublyFamily::XxyyPow, 0), Word::trivial());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(wlit("xyxyx")),
            WordClass::Alternating(AltFamily::WMinus, 2)
        );
        assert_eq!(
            classify(wlit("xxyx")),
            WordClass::NotInU {
                offset: 0,
                segment: wlit("xxyx")
            }
        );
        assert_eq!(classify(Word::trivial()), WordClass::Trivial);
        assert_eq!(
            classify(wlit("xxyyx")),
            WordClass::DoublyAlternating(DoublyFamily::XxyyX, 1)
        );
    }

    #[test]
    fn classify_reports_leftmost_forbidden_segment() {
        // yyxxxy contains yxxx at offset 1 and xxxy at offset 2; the scan
        // must report the leftmost one.
        let c = classify(wlit("yyxxxy"));
        assert_eq!(
            c,
            WordClass::NotInU {
                offset: 1,
                segment: wlit("yxxx")
            }
        );
    }

    #[test]
    fn degenerate_indices_prefer_shorter_descriptions() {
        assert_eq!(classify(wlit("x")), WordClass::PowerX(1));
        assert_eq!(classify(wlit("xx")), WordClass::PowerX(2));
        assert_eq!(
            classify(wlit("xy")),
            WordClass::Alternating(AltFamily::GHat, 1)
        );
        assert_eq!(
            classify(wlit("yx")),
            WordClass::Alternating(AltFamily::G, 1)
        );
        // xxy only fits one doubly alternating family.
        assert_eq!(
            classify(wlit("xxy")),
            WordClass::DoublyAlternating(DoublyFamily::XxyyXxy, 0)
        );
    }

    #[test]
    fn classify_reconstruct_round_trip() {
        for n in 0..=6usize {
            for fam in [AltFamily::GHat, AltFamily::G, AltFamily::WMinus, AltFamily::WPlus] {
                let Ok(w) = alternating(fam, n) else { continue };
                assert_eq!(classify(w).reconstruct(), Some(w), "{fam:?} {n}");
            }
            for fam in DOUBLY_FAMILIES {
                let w = doubly_alternating(fam, n);
                assert_eq!(classify(w).reconstruct(), Some(w), "{fam:?} {n}");
            }
            for letter in ["x", "y"] {
                let w = wlit(letter).repeated(n.max(1));
                assert_eq!(classify(w).reconstruct(), Some(w));
            }
        }
    }

    #[test]
    fn span_j_examples() {
        let (g1, g2) = serre_generators();
        assert_eq!(span_j_degree(4), vec![g1, g2]);
        assert_eq!(span_j_degree(5).len(), 8);
        assert!(span_j_degree(3).is_empty());
    }

    #[test]
    fn orthogonality_examples() {
        assert!(in_u_by_orthogonality(wlit("xxyy")));
        assert!(!in_u_by_orthogonality(wlit("xxyx")));
        assert!(in_u_by_orthogonality(wlit("x")));
    }

    #[test]
    fn classify_agrees_with_oracle_up_to_len_8() {
        for len in 0..=8 {
            for w in words_of_len(len) {
                assert_eq!(
                    classify(w).is_in_u(),
                    in_u_by_orthogonality(w),
                    "word {w}"
                );
            }
        }
    }
}
