//! Registry of identity families: commutator relations for one letter and
//! one doubly alternating word, convolution identities expressing doubly
//! alternating words as polynomials in the alternating words (with their
//! denominator-cleared corollaries), the known alternating-word relations,
//! commutator relations between two doubly alternating words, and the
//! alternative forms restated purely in alternating words. Each family
//! instantiates at concrete parameters into an exact (lhs, rhs) pair.

pub(crate) mod catalog;

use std::fmt;
use std::time::Instant;

use serde_json::{json, Value};

use crate::words::FreeElement;

pub use catalog::catalog;

/// Number and meaning of a family's parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    /// Fixed relation, no parameters.
    None,
    /// One natural index `n`.
    One,
    /// Two natural indices `(i, j)`.
    Two,
    /// Truncation order of a series identity.
    SeriesOrder,
}

impl Arity {
    pub fn param_count(self) -> usize {
        match self {
            Arity::None => 0,
            Arity::One | Arity::SeriesOrder => 1,
            Arity::Two => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Arity::None => "fixed",
            Arity::One => "n",
            Arity::Two => "i,j",
            Arity::SeriesOrder => "order",
        }
    }
}

/// Citation record: section, item, and equation position within the item.
#[derive(Clone, Copy, Debug)]
pub struct Source {
    pub section: &'static str,
    pub item: &'static str,
    pub position: &'static str,
    /// Set when the registry encodes a corrected or denominator-cleared
    /// form of the displayed identity.
    pub note: Option<&'static str>,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "section {}, {} ({})", self.section, self.item, self.position)?;
        if let Some(note) = self.note {
            write!(f, " [{note}]")?;
        }
        Ok(())
    }
}

type Builder = Box<dyn Fn(&[usize]) -> (FreeElement, FreeElement) + Send + Sync>;

/// One identity family, instantiable at concrete parameters.
pub struct RelationFamily {
    pub id: &'static str,
    pub arity: Arity,
    pub source: Source,
    builder: Builder,
}

impl RelationFamily {
    fn new(id: &'static str, arity: Arity, source: Source, builder: Builder) -> RelationFamily {
        RelationFamily {
            id,
            arity,
            source,
            builder,
        }
    }

    /// Both sides, fully expanded.
    pub fn instantiate(
        &self,
        params: &[usize],
    ) -> Result<(FreeElement, FreeElement), RelationError> {
        if params.len() != self.arity.param_count() {
            return Err(RelationError::WrongArity {
                id: self.id.to_string(),
                expected: self.arity.param_count(),
                got: params.len(),
            });
        }
        Ok((self.builder)(params))
    }

    pub fn verify(&self, params: &[usize]) -> Result<VerificationReport, RelationError> {
        let start = Instant::now();
        let (lhs, rhs) = self.instantiate(params)?;
        let difference = &lhs - &rhs;
        Ok(VerificationReport {
            id: self.id.to_string(),
            params: params.to_vec(),
            pass: difference.is_zero(),
            lhs_terms: lhs.num_terms(),
            rhs_terms: rhs.num_terms(),
            difference,
            millis: start.elapsed().as_millis(),
        })
    }

    /// All parameter tuples covered by `verify_range` at the given bound:
    /// `n <= bound` for one-parameter families, `i + j <= bound` for
    /// two-parameter families.
    pub fn param_tuples(&self, bound: usize) -> Vec<Vec<usize>> {
        match self.arity {
            Arity::None => vec![vec![]],
            Arity::One | Arity::SeriesOrder => (0..=bound).map(|n| vec![n]).collect(),
            Arity::Two => {
                let mut out = Vec::new();
                for i in 0..=bound {
                    for j in 0..=bound - i {
                        out.push(vec![i, j]);
                    }
                }
                out
            }
        }
    }
}

impl fmt::Debug for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RelationFamily")
            .field("id", &self.id)
            .field("arity", &self.arity)
            .field("source", &self.source)
            .finish()
    }
}

/// Outcome of checking one identity instance exactly.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub id: String,
    pub params: Vec<usize>,
    pub pass: bool,
    /// `lhs - rhs` in canonical form; empty support on pass. For series
    /// identities this is the lowest-order nonzero coefficient.
    pub difference: FreeElement,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub millis: u128,
}

impl VerificationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "params": self.params,
            "verdict": if self.pass { "pass" } else { "fail" },
            "difference": self.difference.to_json(),
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "millis": self.millis,
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} params={:?} lhs_terms={} rhs_terms={} ({} ms)",
            if self.pass { "pass" } else { "FAIL" },
            self.id,
            self.params,
            self.lhs_terms,
            self.rhs_terms,
            self.millis
        )?;
        if !self.pass {
            write!(f, " difference: {}", self.difference)?;
        }
        Ok(())
    }
}

/// Errors from registry lookups and instantiation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationError {
    UnknownId(String),
    WrongArity {
        id: String,
        expected: usize,
        got: usize,
    },
    /// The id names a series identity, which has no finite (lhs, rhs) pair.
    NotExact(String),
}

impl fmt::Display for RelationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationError::UnknownId(id) => write!(f, "unknown relation id '{id}'"),
            RelationError::WrongArity { id, expected, got } => {
                write!(f, "relation '{id}' takes {expected} parameter(s), got {got}")
            }
            RelationError::NotExact(id) => write!(
                f,
                "'{id}' is a series identity; verify it at a truncation order instead of instantiating"
            ),
        }
    }
}

impl std::error::Error for RelationError {}

/// Exact (non-series) family by id.
pub fn find_exact(id: &str) -> Option<&'static RelationFamily> {
    catalog().iter().find(|fam| fam.id == id)
}

/// Resolve an id or id prefix to matching family ids, across the exact
/// catalog and the series identities. A prefix matches entries that extend
/// it with a short letter suffix (`C.5` -> `C.5a`, `C.5b`) or with further
/// dotted components (`P4.xcomm1` -> `P4.xcomm1.1` ...).
pub fn resolve(id: &str) -> Vec<&'static str> {
    let matches_prefix = |candidate: &str| -> bool {
        if candidate == id {
            return true;
        }
        match candidate.strip_prefix(id) {
            Some(rest) => {
                rest.starts_with('.')
                    || (!rest.is_empty()
                        && rest.len() <= 2
                        && rest.chars().all(|c| c.is_ascii_lowercase()))
            }
            None => false,
        }
    };
    let mut out: Vec<&'static str> = catalog()
        .iter()
        .map(|fam| fam.id)
        .filter(|cand| matches_prefix(cand))
        .collect();
    out.extend(
        crate::series::catalog()
            .iter()
            .map(|fam| fam.id)
            .filter(|cand| matches_prefix(cand)),
    );
    out
}

/// Full catalog listing: `(id, arity, source)` for every family, the
/// series identities included.
pub fn list_families() -> Vec<(&'static str, Arity, Source)> {
    let mut out: Vec<(&'static str, Arity, Source)> = catalog()
        .iter()
        .map(|fam| (fam.id, fam.arity, fam.source))
        .collect();
    out.extend(
        crate::series::catalog()
            .iter()
            .map(|fam| (fam.id, Arity::SeriesOrder, fam.source)),
    );
    out
}

/// Instantiate an exact identity at concrete parameters.
pub fn instantiate(
    id: &str,
    params: &[usize],
) -> Result<(FreeElement, FreeElement), RelationError> {
    if crate::series::find(id).is_some() {
        return Err(RelationError::NotExact(id.to_string()));
    }
    find_exact(id)
        .ok_or_else(|| RelationError::UnknownId(id.to_string()))?
        .instantiate(params)
}

/// Verify one instance. Series ids delegate to the series verifier, with
/// the single parameter read as the truncation order.
pub fn verify(id: &str, params: &[usize]) -> Result<VerificationReport, RelationError> {
    if let Some(series) = crate::series::find(id) {
        if params.len() != 1 {
            return Err(RelationError::WrongArity {
                id: id.to_string(),
                expected: 1,
                got: params.len(),
            });
        }
        return Ok(series.verify(params[0]));
    }
    find_exact(id)
        .ok_or_else(|| RelationError::UnknownId(id.to_string()))?
        .verify(params)
}

/// Verify a family (or id-prefix group) over the whole parameter range at
/// the given bound, aggregating the reports. Series identities run once,
/// at truncation order `bound`.
pub fn verify_range(id: &str, bound: usize) -> Result<Vec<VerificationReport>, RelationError> {
    let ids = resolve(id);
    if ids.is_empty() {
        return Err(RelationError::UnknownId(id.to_string()));
    }
    let mut out = Vec::new();
    for fam_id in ids {
        if let Some(series) = crate::series::find(fam_id) {
            out.push(series.verify(bound));
            continue;
        }
        let fam = find_exact(fam_id).expect("resolved id is in the catalog");
        for params in fam.param_tuples(bound) {
            out.push(fam.verify(&params)?);
        }
    }
    Ok(out)
}
