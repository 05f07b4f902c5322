//! Packed words over the two-letter alphabet.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::parse::ParseError;

/// One of the two letters of the alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'x' => Some(Letter::X),
            'y' => Some(Letter::Y),
            _ => None,
        }
    }

    fn bit(self) -> u64 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    fn from_bit(b: u64) -> Letter {
        if b == 0 {
            Letter::X
        } else {
            Letter::Y
        }
    }
}

/// Maximum supported word length (one bit per letter in a `u64`).
pub const MAX_WORD_LEN: usize = 64;

/// A word over {x, y}, packed one bit per letter (x = 0, y = 1), with the
/// leftmost letter at bit 0. The length-0 word is the trivial word `1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bits: u64,
    len: u8,
}

impl Word {
    /// The trivial word `1`.
    pub const fn trivial() -> Word {
        Word { bits: 0, len: 0 }
    }

    pub fn from_letters(letters: &[Letter]) -> Word {
        assert!(letters.len() <= MAX_WORD_LEN, "word length exceeds {MAX_WORD_LEN}");
        let mut bits = 0u64;
        for (i, l) in letters.iter().enumerate() {
            bits |= l.bit() << i;
        }
        Word {
            bits,
            len: letters.len() as u8,
        }
    }

    /// The single-letter word.
    pub fn letter_word(l: Letter) -> Word {
        Word { bits: l.bit(), len: 1 }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_trivial(&self) -> bool {
        self.len == 0
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    /// Letter at position `i` (0-based from the left).
    pub fn letter(&self, i: usize) -> Letter {
        debug_assert!(i < self.len());
        Letter::from_bit((self.bits >> i) & 1)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn first(&self) -> Option<Letter> {
        (!self.is_trivial()).then(|| self.letter(0))
    }

    pub fn last(&self) -> Option<Letter> {
        (!self.is_trivial()).then(|| self.letter(self.len() - 1))
    }

    /// `l · w`.
    pub fn prepended(&self, l: Letter) -> Word {
        assert!(self.len() < MAX_WORD_LEN, "word length exceeds {MAX_WORD_LEN}");
        Word {
            bits: (self.bits << 1) | l.bit(),
            len: self.len + 1,
        }
    }

    /// `w · l`.
    pub fn appended(&self, l: Letter) -> Word {
        assert!(self.len() < MAX_WORD_LEN, "word length exceeds {MAX_WORD_LEN}");
        Word {
            bits: self.bits | (l.bit() << self.len),
            len: self.len + 1,
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let total = self.len() + other.len();
        assert!(total <= MAX_WORD_LEN, "word length exceeds {MAX_WORD_LEN}");
        Word {
            bits: self.bits | (other.bits << self.len),
            len: total as u8,
        }
    }

    /// Free-product power `self^n`.
    pub fn repeated(&self, n: usize) -> Word {
        let mut out = Word::trivial();
        for _ in 0..n {
            out = out.concat(self);
        }
        out
    }

    /// Split off the first letter.
    pub fn split_first(&self) -> Option<(Letter, Word)> {
        if self.is_trivial() {
            return None;
        }
        let l = self.letter(0);
        let tail = Word {
            bits: self.bits >> 1,
            len: self.len - 1,
        };
        Some((l, tail))
    }

    /// Left truncation: the tail if the word starts with `l`, else `None`.
    /// The trivial word always maps to `None`.
    pub fn strip_left(&self, l: Letter) -> Option<Word> {
        match self.split_first() {
            Some((first, tail)) if first == l => Some(tail),
            _ => None,
        }
    }

    /// Right truncation: the head if the word ends with `l`, else `None`.
    pub fn strip_right(&self, l: Letter) -> Option<Word> {
        if self.last() != Some(l) {
            return None;
        }
        let len = self.len - 1;
        Some(Word {
            bits: self.bits & !(1u64 << len),
            len,
        })
    }

    /// Number of occurrences of `l`.
    pub fn count(&self, l: Letter) -> usize {
        let ones = self.bits.count_ones() as usize;
        match l {
            Letter::Y => ones,
            Letter::X => self.len() - ones,
        }
    }

    /// `(#x, #y)`.
    pub fn bidegree(&self) -> (usize, usize) {
        (self.count(Letter::X), self.count(Letter::Y))
    }

    /// The length-4 segment starting at position `i`, as a word.
    pub fn segment4(&self, i: usize) -> Word {
        debug_assert!(i + 4 <= self.len());
        Word {
            bits: (self.bits >> i) & 0b1111,
            len: 4,
        }
    }
}

// Graded lexicographic order (length first, then x < y letterwise), used
// for canonical term ordering in elements.
impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            // Reversing the bits puts letter 0 in the most significant
            // position, so numeric comparison is lexicographic.
            let a = self.bits.reverse_bits();
            let b = other.bits.reverse_bits();
            a.cmp(&b)
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Word, ParseError> {
        if s == "1" {
            return Ok(Word::trivial());
        }
        if s.is_empty() {
            return Err(ParseError::new(0, "empty input", "a word over {x, y} or '1'"));
        }
        if s.len() > MAX_WORD_LEN {
            return Err(ParseError::new(
                MAX_WORD_LEN,
                format!("a word of length {}", s.len()),
                format!("at most {MAX_WORD_LEN} letters"),
            ));
        }
        let mut letters = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match Letter::from_char(c) {
                Some(l) => letters.push(l),
                None => return Err(ParseError::new(i, format!("'{c}'"), "'x' or 'y'")),
            }
        }
        Ok(Word::from_letters(&letters))
    }
}

/// Parse a word from a literal known at compile time; panics on bad input.
/// Intended for internal tables and tests.
pub(crate) fn wlit(s: &str) -> Word {
    s.parse().expect("valid word literal")
}

/// All words of the given length, in lexicographic order.
pub fn words_of_len(len: usize) -> impl Iterator<Item = Word> {
    assert!(len <= MAX_WORD_LEN);
    // Iterating the packed value covers all letter sequences.
    let count: u128 = 1u128 << len;
    (0..count).map(move |bits| Word {
        bits: bits as u64,
        len: len as u8,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_round_trip() {
        for s in ["1", "x", "y", "xxyy", "xyxyx", "yxxyyxx"] {
            let w: Word = s.parse().unwrap();
            assert_eq!(w.to_string(), s);
        }
        assert!("xz".parse::<Word>().is_err());
        assert!("".parse::<Word>().is_err());
    }

    #[test]
    fn concat_and_strip() {
        let w = wlit("xy").concat(&wlit("yx"));
        assert_eq!(w, wlit("xyyx"));
        assert_eq!(wlit("xy").strip_left(Letter::X), Some(wlit("y")));
        assert_eq!(wlit("yx").strip_left(Letter::X), None);
        assert_eq!(Word::trivial().strip_left(Letter::X), None);
        assert_eq!(wlit("xy").strip_right(Letter::Y), Some(wlit("x")));
        assert_eq!(wlit("xy").strip_right(Letter::X), None);
    }

    #[test]
    fn graded_lex_order() {
        assert!(wlit("y") < wlit("xx"));
        assert!(wlit("xxy") < wlit("xyx"));
        assert!(wlit("xyx") < wlit("yxx"));
        assert!(wlit("xxyy") < wlit("xyxy"));
    }

    #[test]
    fn counting() {
        let w = wlit("xxyyx");
        assert_eq!(w.count(Letter::X), 3);
        assert_eq!(w.count(Letter::Y), 2);
        assert_eq!(w.bidegree(), (3, 2));
    }

    #[test]
    #[should_panic(expected = "word length exceeds")]
    fn length_cap_enforced() {
        let w = wlit("xyxy").repeated(8); // 32 letters
        let _ = w.concat(&w).concat(&wlit("x"));
    }
}
