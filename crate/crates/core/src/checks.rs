//! Bulk self-check sweeps: classifier vs. ideal-orthogonality oracle, and
//! the q-shuffle product vs. the interleaving-enumeration oracle. Shared by
//! the test suite and the CLI `verify-all` command.

use std::time::Instant;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::shuffle::{shuffle, shuffle_oracle, shuffle_words};
use crate::words::{
    classify, in_u_by_orthogonality, words_of_len, FreeElement, Letter, Word,
};

/// Outcome of one sweep.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub id: String,
    pub instances: usize,
    pub failures: usize,
    pub millis: u128,
    /// First failure, for diagnostics; empty on pass.
    pub detail: String,
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "verdict": if self.pass() { "pass" } else { "fail" },
            "instances": self.instances,
            "failures": self.failures,
            "millis": self.millis,
            "detail": self.detail,
        })
    }
}

struct Sweep {
    id: &'static str,
    start: Instant,
    instances: usize,
    failures: usize,
    detail: String,
}

impl Sweep {
    fn new(id: &'static str) -> Sweep {
        Sweep {
            id,
            start: Instant::now(),
            instances: 0,
            failures: 0,
            detail: String::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.detail.is_empty() {
                self.detail = describe();
            }
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            id: self.id.to_string(),
            instances: self.instances,
            failures: self.failures,
            millis: self.start.elapsed().as_millis(),
            detail: self.detail,
        }
    }
}

// Deterministic generator for the randomized sweeps (splitmix64).
pub(crate) struct Rng(u64);

impl Rng {
    pub(crate) fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub(crate) fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub(crate) fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    pub(crate) fn word(&mut self, len: usize) -> Word {
        let letters: Vec<Letter> = (0..len)
            .map(|_| if self.next() & 1 == 1 { Letter::Y } else { Letter::X })
            .collect();
        Word::from_letters(&letters)
    }
}

/// Classifier vs. the ideal-orthogonality oracle for every word of length
/// at most `max_len`, plus the reconstruct round trip for words inside the
/// subalgebra.
pub fn classify_oracle_agreement(max_len: usize) -> CheckReport {
    let mut sweep = Sweep::new("check.classify.oracle");
    for len in 0..=max_len {
        for w in words_of_len(len) {
            let class = classify(w);
            let in_u = class.is_in_u();
            let oracle = in_u_by_orthogonality(w);
            let reconstruct_ok = !in_u || class.reconstruct() == Some(w);
            sweep.record(in_u == oracle && reconstruct_ok, || {
                format!("word {w}: classify says in_U={in_u}, oracle says {oracle}")
            });
        }
    }
    sweep.finish()
}

/// Recursive product vs. interleaving oracle for every word pair with
/// total length at most `max_total_len`.
pub fn shuffle_oracle_exhaustive(max_total_len: usize) -> CheckReport {
    let mut sweep = Sweep::new("check.shuffle.oracle.exhaustive");
    for total in 0..=max_total_len {
        for a in 0..=total {
            for u in words_of_len(a) {
                for v in words_of_len(total - a) {
                    sweep.record(shuffle_words(u, v) == shuffle_oracle(u, v), || {
                        format!("pair ({u}, {v})")
                    });
                }
            }
        }
    }
    sweep.finish()
}

/// Recursive product vs. interleaving oracle on random pairs with total
/// length at most `max_total_len`.
pub fn shuffle_oracle_random(count: usize, max_total_len: usize, seed: u64) -> CheckReport {
    let mut sweep = Sweep::new("check.shuffle.oracle.random");
    let mut rng = Rng::new(seed);
    for _ in 0..count {
        let total = rng.below(max_total_len as u64 + 1) as usize;
        let a = rng.below(total as u64 + 1) as usize;
        let u = rng.word(a);
        let v = rng.word(total - a);
        sweep.record(shuffle_words(u, v) == shuffle_oracle(u, v), || {
            format!("pair ({u}, {v})")
        });
    }
    sweep.finish()
}

/// Exact associativity on random word triples.
pub fn shuffle_associativity(count: usize, max_word_len: usize, seed: u64) -> CheckReport {
    let mut sweep = Sweep::new("check.shuffle.associativity");
    let mut rng = Rng::new(seed);
    for _ in 0..count {
        let words: Vec<FreeElement> = (0..3)
            .map(|_| {
                let len = rng.below(max_word_len as u64 + 1) as usize;
                FreeElement::from_word(rng.word(len))
            })
            .collect();
        let left = shuffle(&shuffle(&words[0], &words[1]), &words[2]);
        let right = shuffle(&words[0], &shuffle(&words[1], &words[2]));
        sweep.record(left == right, || "associativity failure".to_string());
    }
    sweep.finish()
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut out = BigInt::from(1);
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

/// Setting q = 1 must turn the product into the classical shuffle, whose
/// total coefficient mass is a binomial coefficient.
pub fn shuffle_q1_binomial(count: usize, max_total_len: usize, seed: u64) -> CheckReport {
    let mut sweep = Sweep::new("check.shuffle.q1.binomial");
    let mut rng = Rng::new(seed);
    for _ in 0..count {
        let total = rng.below(max_total_len as u64 + 1) as usize;
        let a = rng.below(total as u64 + 1) as usize;
        let u = rng.word(a);
        let v = rng.word(total - a);
        let sum: BigInt = shuffle_words(u, v)
            .terms()
            .map(|(_, c)| c.eval_at_one())
            .sum();
        let expected = binomial(total, a);
        sweep.record(sum == expected, || {
            format!("pair ({u}, {v}): q=1 mass {sum}, expected {expected}")
        });
    }
    sweep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweeps_pass_at_small_bounds() {
        assert!(classify_oracle_agreement(6).pass());
        assert!(shuffle_oracle_exhaustive(6).pass());
        assert!(shuffle_oracle_random(50, 10, 7).pass());
        assert!(shuffle_associativity(20, 3, 11).pass());
        assert!(shuffle_q1_binomial(50, 10, 13).pass());
    }

    #[test]
    fn report_json_shape() {
        let r = classify_oracle_agreement(3);
        let j = r.to_json();
        assert_eq!(j["verdict"], "pass");
        assert_eq!(j["failures"], 0);
    }
}
