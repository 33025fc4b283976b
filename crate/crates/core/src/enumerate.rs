//! Deterministic enumeration of low-weight phaseless Paulis.
//!
//! Order: weight ascending; within a weight, supports as index
//! combinations in lexicographic order; within a support, letters over
//! `{X, Y, Z}` in lexicographic order with the last qubit varying fastest.

use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliOperator};

/// `C(n, k)` saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of weight-`w` Paulis on `n` qubits, `C(n, w)·3^w`.
pub fn count_at_weight(n: usize, w: usize) -> u64 {
    binomial(n, w).saturating_mul(3u64.saturating_pow(w as u32))
}

/// `Σ_{i=1}^{t} C(n, i)·3^i`, the number of non-identity Paulis of weight
/// at most `t`.
pub fn correctable_count(n: usize, t: usize) -> u64 {
    (1..=t).fold(0u64, |acc, i| acc.saturating_add(count_at_weight(n, i)))
}

/// The second counting expression `Σ_{j=0}^{t} C(n, j)·Σ_{l=1}^{t−j} C(2n−2j, l)`.
///
/// Recorded for comparison only; it does not in general equal
/// [`correctable_count`] and no verdict depends on it.
pub fn alternate_count(n: usize, t: usize) -> u64 {
    (0..=t.min(n)).fold(0u64, |acc, j| {
        let inner = (1..=t - j).fold(0u64, |a, l| a.saturating_add(binomial(2 * n - 2 * j, l)));
        acc.saturating_add(binomial(n, j).saturating_mul(inner))
    })
}

/// Streams every phaseless Pauli with weight in `[min_weight, max_weight]`
/// exactly once.
#[derive(Clone, Debug)]
pub struct ErrorEnumerator {
    n: usize,
    max_weight: usize,
    weight: usize,
    support: Vec<usize>,
    letters: Vec<u8>,
    done: bool,
}

impl ErrorEnumerator {
    /// All non-identity Paulis of weight `1..=t`.
    pub fn new(n: usize, t: usize) -> Result<Self> {
        if t < 1 || t > n {
            return Err(Error::OutOfRange {
                name: "t",
                value: t,
                min: 1,
                max: n,
            });
        }
        Ok(Self::weights(n, 1, t))
    }

    /// All Paulis of exactly weight `w`; `w = 0` yields the identity.
    pub fn exact_weight(n: usize, w: usize) -> Self {
        Self::weights(n, w, w)
    }

    pub fn weights(n: usize, min_weight: usize, max_weight: usize) -> Self {
        let max_weight = max_weight.min(n);
        let done = min_weight > max_weight;
        Self {
            n,
            max_weight,
            weight: min_weight,
            support: (0..min_weight).collect(),
            letters: vec![0; min_weight],
            done,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn current(&self) -> PauliOperator {
        let mut letters = vec![PauliLetter::I; self.n];
        for (&q, &l) in self.support.iter().zip(&self.letters) {
            letters[q] = PauliLetter::NON_IDENTITY[l as usize];
        }
        PauliOperator::from_letters(&letters)
    }

    fn advance(&mut self) {
        // Letters: odometer with the last position fastest.
        for l in self.letters.iter_mut().rev() {
            if *l < 2 {
                *l += 1;
                return;
            }
            *l = 0;
        }
        // Support: next combination in lexicographic order.
        let w = self.weight;
        let n = self.n;
        if let Some(i) = (0..w).rev().find(|&i| self.support[i] < n - w + i) {
            self.support[i] += 1;
            for j in i + 1..w {
                self.support[j] = self.support[j - 1] + 1;
            }
            return;
        }
        // Next weight.
        self.weight += 1;
        if self.weight > self.max_weight {
            self.done = true;
            return;
        }
        self.support = (0..self.weight).collect();
        self.letters = vec![0; self.weight];
    }
}

impl Iterator for ErrorEnumerator {
    type Item = PauliOperator;

    fn next(&mut self) -> Option<PauliOperator> {
        if self.done {
            return None;
        }
        let p = self.current();
        self.advance();
        Some(p)
    }
}

/// Convenience wrapper for [`ErrorEnumerator::new`].
pub fn enumerate_errors(n: usize, t: usize) -> Result<ErrorEnumerator> {
    ErrorEnumerator::new(n, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn strings(e: ErrorEnumerator) -> Vec<String> {
        e.map(|p| p.to_string()).collect()
    }

    #[test]
    fn single_qubit() {
        assert_eq!(strings(enumerate_errors(1, 1).unwrap()), ["X", "Y", "Z"]);
    }

    #[test]
    fn five_qubits_weight_one() {
        assert_eq!(enumerate_errors(5, 1).unwrap().count(), 15);
    }

    #[test]
    fn two_qubits_all() {
        let all = strings(enumerate_errors(2, 2).unwrap());
        assert_eq!(all.len(), 15);
        assert_eq!(&all[..7], ["XI", "YI", "ZI", "IX", "IY", "IZ", "XX"]);
        assert_eq!(all.last().unwrap(), "ZZ");
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), 15);
    }

    #[test]
    fn t_out_of_range() {
        assert!(enumerate_errors(3, 0).is_err());
        assert!(enumerate_errors(3, 4).is_err());
    }

    #[test]
    fn exact_weight_zero_is_identity() {
        assert_eq!(strings(ErrorEnumerator::exact_weight(3, 0)), ["III"]);
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(correctable_count(7, 1), 21);
        assert_eq!(correctable_count(2, 2), 15);
        // n = 1, t = 1: C(1,0)·C(2,1) + C(1,1)·0 = 2, versus 3 Paulis.
        assert_eq!(alternate_count(1, 1), 2);
    }
}
