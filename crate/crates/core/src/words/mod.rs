//! Words over {x, y}, free-algebra elements, the bilinear form, truncation
//! operators, the named word families, the classifier, and the ideal
//! orthogonality oracle.

mod element;
mod families;
mod word;

pub use element::{FreeElement, Side};
pub use families::{
    alternating, classify, doubly_alternating, forbidden_segments, in_u_by_orthogonality,
    serre_generators, span_j_degree, w_word, AltFamily, DoublyFamily, FamilyError, WordClass,
};
pub use word::{words_of_len, Letter, Word, MAX_WORD_LEN};

pub(crate) use word::wlit;

