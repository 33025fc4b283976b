//! Phaseless Pauli operators in binary symplectic form.
//!
//! A Pauli on `n` qubits, with its global phase discarded, is the pair
//! `(x | z)` of length-`n` bit vectors: `X ↦ (1|0)`, `Z ↦ (0|1)`,
//! `Y ↦ (1|1)`. Multiplication becomes XOR and commutation is the
//! symplectic inner product `x·z' + z·x' (mod 2)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    /// The three non-identity letters in enumeration order.
    pub const NON_IDENTITY: [PauliLetter; 3] = [PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(PauliLetter::I),
            'X' => Some(PauliLetter::X),
            'Y' => Some(PauliLetter::Y),
            'Z' => Some(PauliLetter::Z),
            _ => None,
        }
    }
}

/// `(x | z)` with `x.len() == z.len() == n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymplecticVector {
    x: BitVector,
    z: BitVector,
}

impl SymplecticVector {
    pub fn zeros(n: usize) -> Self {
        Self {
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
        }
    }

    pub fn new(x: BitVector, z: BitVector) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::LengthMismatch {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(Self { x, z })
    }

    /// Splits a length-`2n` vector into its halves.
    pub fn from_concatenated(v: &BitVector) -> Result<Self> {
        if !v.len().is_multiple_of(2) {
            return Err(Error::LengthMismatch {
                expected: v.len() + 1,
                found: v.len(),
            });
        }
        let n = v.len() / 2;
        Ok(Self {
            x: v.slice(0, n),
            z: v.slice(n, 2 * n),
        })
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &BitVector {
        &self.x
    }

    pub fn z(&self) -> &BitVector {
        &self.z
    }

    pub fn concatenated(&self) -> BitVector {
        self.x.concat(&self.z)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn letter(&self, qubit: usize) -> PauliLetter {
        PauliLetter::from_bits(self.x.get(qubit), self.z.get(qubit))
    }

    pub fn set_letter(&mut self, qubit: usize, letter: PauliLetter) {
        let (x, z) = letter.bits();
        self.x.set(qubit, x);
        self.z.set(qubit, z);
    }

    /// `w(x) + w(z) − w(x AND z)`: the number of qubits acted on nontrivially.
    pub fn symplectic_weight(&self) -> usize {
        self.x.count_ones() + self.z.count_ones() - self.x.and_count(&self.z)
    }

    /// Symplectic inner product `x·z' + z·x' (mod 2)`.
    ///
    /// # Panics
    /// Panics on mismatched qubit counts.
    #[inline]
    pub fn symplectic_product(&self, other: &Self) -> bool {
        self.x.dot(&other.z) ^ self.z.dot(&other.x)
    }

    pub fn xor_assign(&mut self, other: &Self) {
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    /// Applies a qubit relabeling: qubit `perm[j]` of `self` becomes qubit `j`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.n());
        for (j, &src) in perm.iter().enumerate() {
            out.x.set(j, self.x.get(src));
            out.z.set(j, self.z.get(src));
        }
        out
    }
}

impl fmt::Debug for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.x, self.z)
    }
}

impl fmt::Display for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.x, self.z)
    }
}

/// Number of qubit positions where `(x_j, z_j) ≠ (0, 0)`.
pub fn symplectic_weight(v: &SymplecticVector) -> usize {
    v.symplectic_weight()
}

/// An element of the Pauli group modulo phases.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    v: SymplecticVector,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        Self {
            v: SymplecticVector::zeros(n),
        }
    }

    pub fn from_symplectic(v: SymplecticVector) -> Self {
        Self { v }
    }

    pub fn from_xz(x: BitVector, z: BitVector) -> Result<Self> {
        SymplecticVector::new(x, z).map(Self::from_symplectic)
    }

    /// `letter` on qubit `qubit` (0-based), identity elsewhere.
    pub fn single(n: usize, qubit: usize, letter: PauliLetter) -> Self {
        let mut p = Self::identity(n);
        p.v.set_letter(qubit, letter);
        p
    }

    pub fn from_letters(letters: &[PauliLetter]) -> Self {
        let mut p = Self::identity(letters.len());
        for (j, &l) in letters.iter().enumerate() {
            p.v.set_letter(j, l);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.v.n()
    }

    pub fn symplectic(&self) -> &SymplecticVector {
        &self.v
    }

    pub fn x(&self) -> &BitVector {
        self.v.x()
    }

    pub fn z(&self) -> &BitVector {
        self.v.z()
    }

    pub fn letter(&self, qubit: usize) -> PauliLetter {
        self.v.letter(qubit)
    }

    pub fn letters(&self) -> Vec<PauliLetter> {
        (0..self.n()).map(|j| self.letter(j)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.v.is_zero()
    }

    /// Quantum weight, equal to the symplectic weight of the image.
    pub fn weight(&self) -> usize {
        self.v.symplectic_weight()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&j| self.letter(j) != PauliLetter::I)
            .collect()
    }

    fn check_n(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::QubitCountMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }

    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.check_n(other)?;
        Ok(!self.v.symplectic_product(&other.v))
    }

    /// Product in the phaseless group: componentwise XOR.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        out.v.xor_assign(&other.v);
        Ok(out)
    }

    pub fn mul_assign(&mut self, other: &Self) {
        self.v.xor_assign(&other.v);
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliOperator({self})")
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.n() {
            write!(f, "{}", self.letter(j).as_char())?;
        }
        Ok(())
    }
}

/// Length of a leading phase prefix (`+`, `-`, `±`, optionally followed by
/// `i`), in chars.
fn phase_prefix_len(s: &str) -> usize {
    let mut chars = s.chars();
    let mut len = 0;
    let mut first = chars.next();
    if matches!(first, Some('+' | '-' | '±')) {
        len += 1;
        first = chars.next();
    }
    if first == Some('i') {
        len += 1;
    }
    len
}

impl FromStr for PauliOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        pauli_from_string(s)
    }
}

/// Parses a string over `I`, `X`, `Y`, `Z`. A leading phase (`+`, `-`,
/// `i`, `-i`, ...) is accepted and dropped.
pub fn pauli_from_string(s: &str) -> Result<PauliOperator> {
    let skip = phase_prefix_len(s);
    let body: Vec<char> = s.chars().skip(skip).collect();
    if body.is_empty() {
        return Err(Error::EmptyPauli);
    }
    let mut letters = Vec::with_capacity(body.len());
    for (k, &c) in body.iter().enumerate() {
        match PauliLetter::from_char(c) {
            Some(l) => letters.push(l),
            None => {
                return Err(Error::PauliParse {
                    position: skip + k + 1,
                    found: c,
                })
            }
        }
    }
    Ok(PauliOperator::from_letters(&letters))
}

pub fn pauli_to_string(p: &PauliOperator) -> String {
    p.to_string()
}

pub fn commutes(a: &PauliOperator, b: &PauliOperator) -> Result<bool> {
    a.commutes(b)
}

pub fn pauli_product(a: &PauliOperator, b: &PauliOperator) -> Result<PauliOperator> {
    a.product(b)
}

impl Serialize for PauliOperator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PauliOperator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
