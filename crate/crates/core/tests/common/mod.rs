//! Independent reference implementations used by the integration tests.
//!
//! Everything here works letter by letter on `PauliLetter` slices or by
//! brute-force enumeration, never through the bit-packed fast paths.

#![allow(dead_code)]

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stabcode::codes::{random_code, random_css_code};
use stabcode::{Gf2Matrix, PauliLetter, PauliOperator, StabilizerCode};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform `n` and generator count, then a uniform code of that shape.
pub fn code_from_seed(seed: u64, max_n: usize) -> StabilizerCode {
    let mut r = rng(seed);
    let n = r.gen_range(1..=max_n);
    let m = r.gen_range(1..=n);
    random_code(n, m, &mut r)
}

pub fn css_from_seed(seed: u64, max_n: usize) -> StabilizerCode {
    let mut r = rng(seed);
    let n = r.gen_range(2..=max_n);
    let total = r.gen_range(2..=n);
    let x = r.gen_range(1..total);
    random_css_code(n, x, total - x, &mut r)
}

pub fn random_pauli<R: Rng + ?Sized>(n: usize, r: &mut R) -> PauliOperator {
    let letters: Vec<PauliLetter> = (0..n)
        .map(|_| {
            [
                PauliLetter::I,
                PauliLetter::X,
                PauliLetter::Y,
                PauliLetter::Z,
            ][r.gen_range(0..4)]
        })
        .collect();
    PauliOperator::from_letters(&letters)
}

/// Single-qubit anticommutation: both non-identity and different.
pub fn letters_anticommute(a: PauliLetter, b: PauliLetter) -> bool {
    a != PauliLetter::I && b != PauliLetter::I && a != b
}

pub fn commutes_oracle(a: &[PauliLetter], b: &[PauliLetter]) -> bool {
    a.iter()
        .zip(b)
        .filter(|(p, q)| letters_anticommute(**p, **q))
        .count()
        % 2
        == 0
}

/// Phaseless single-qubit product.
pub fn letter_product(a: PauliLetter, b: PauliLetter) -> PauliLetter {
    use PauliLetter::*;
    match (a, b) {
        (I, p) | (p, I) => p,
        (p, q) if p == q => I,
        (X, Y) | (Y, X) => Z,
        (Y, Z) | (Z, Y) => X,
        (X, Z) | (Z, X) => Y,
        _ => unreachable!(),
    }
}

pub fn product_oracle(a: &[PauliLetter], b: &[PauliLetter]) -> Vec<PauliLetter> {
    a.iter()
        .zip(b)
        .map(|(p, q)| letter_product(*p, *q))
        .collect()
}

/// Syndrome bits from letter-level commutation with each generator.
pub fn syndrome_oracle(code: &StabilizerCode, e: &PauliOperator) -> Vec<bool> {
    let el = e.letters();
    code.check_matrix()
        .generators()
        .iter()
        .map(|g| !commutes_oracle(&g.letters(), &el))
        .collect()
}

/// All `2^m` stabilizer elements as letter strings.
pub fn stabilizer_group(code: &StabilizerCode) -> HashSet<Vec<PauliLetter>> {
    let gens = code.check_matrix().generators();
    let n = code.n();
    let mut out = HashSet::new();
    for mask in 0u64..(1 << gens.len()) {
        let mut acc = vec![PauliLetter::I; n];
        for (i, g) in gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acc = product_oracle(&acc, &g.letters());
            }
        }
        out.insert(acc);
    }
    out
}

/// Every Pauli on `n` qubits.
pub fn all_paulis(n: usize) -> impl Iterator<Item = Vec<PauliLetter>> {
    (0u64..4u64.pow(n as u32)).map(move |mut v| {
        (0..n)
            .map(|_| {
                let l = [
                    PauliLetter::I,
                    PauliLetter::X,
                    PauliLetter::Y,
                    PauliLetter::Z,
                ][(v % 4) as usize];
                v /= 4;
                l
            })
            .collect()
    })
}

pub fn weight_oracle(l: &[PauliLetter]) -> usize {
    l.iter().filter(|p| **p != PauliLetter::I).count()
}

/// Rank as `log2 |row span|`, counted by enumerating the span.
pub fn rank_by_span(m: &Gf2Matrix) -> usize {
    let rows: Vec<u64> = (0..m.rows())
        .map(|r| (0..m.cols()).fold(0u64, |acc, c| acc | (u64::from(m.get(r, c)) << c)))
        .collect();
    let mut span = HashSet::new();
    for mask in 0u64..(1 << rows.len()) {
        let v = rows
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(0u64, |acc, (_, r)| acc ^ r);
        span.insert(v);
    }
    span.len().trailing_zeros() as usize
}

pub fn random_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, r: &mut R) -> Gf2Matrix {
    let bits: Vec<Vec<u8>> = (0..rows)
        .map(|_| (0..cols).map(|_| r.gen_range(0..2u8)).collect())
        .collect();
    Gf2Matrix::from_bits(&bits)
}

/// Degeneracy by brute force: some two distinct Paulis of weight `<= t`
/// (identity included) share a syndrome.
pub fn degenerate_oracle(code: &StabilizerCode, t: usize) -> bool {
    let mut seen = HashSet::new();
    for l in all_paulis(code.n()) {
        if weight_oracle(&l) > t {
            continue;
        }
        let s = syndrome_oracle(code, &PauliOperator::from_letters(&l));
        if !seen.insert(s) {
            return true;
        }
    }
    false
}

/// Minimum weight over the normalizer minus the stabilizer, by full scan.
pub fn distance_oracle(code: &StabilizerCode) -> Option<usize> {
    let stab = stabilizer_group(code);
    all_paulis(code.n())
        .filter(|l| !stab.contains(l))
        .filter(|l| {
            syndrome_oracle(code, &PauliOperator::from_letters(l))
                .iter()
                .all(|b| !b)
        })
        .map(|l| weight_oracle(&l))
        .min()
}
