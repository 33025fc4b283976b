//! Stabilizer codes defined by a check matrix `H = [H_X | H_Z]`.
//!
//! Row `j` of `H` is the symplectic image of generator `M_j`. The syndrome
//! of an error `E` is read straight off the columns of `H`: a bit flip on
//! qubit `i` toggles column `i` of `H_Z`, a phase flip toggles column `i`
//! of `H_X`, so `s_E = x(E)·H_Zᵀ + z(E)·H_Xᵀ`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, ValidationError, Violation};
use crate::gf2::{BitVector, Gf2Matrix, IncrementalBasis};
use crate::pauli::{PauliOperator, SymplecticVector};

/// Validated generator list: pairwise commuting, linearly independent, all
/// on the same number of qubits.
#[derive(Clone, PartialEq, Eq)]
pub struct CheckMatrix {
    n: usize,
    rows: Vec<SymplecticVector>,
}

impl CheckMatrix {
    /// Number of physical qubits.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of generators, `n − k`.
    pub fn num_generators(&self) -> usize {
        self.rows.len()
    }

    /// Number of logical qubits.
    pub fn k(&self) -> usize {
        self.n - self.rows.len()
    }

    pub fn rows(&self) -> &[SymplecticVector] {
        &self.rows
    }

    pub fn generators(&self) -> Vec<PauliOperator> {
        self.rows
            .iter()
            .cloned()
            .map(PauliOperator::from_symplectic)
            .collect()
    }

    pub fn h_x(&self) -> Gf2Matrix {
        Gf2Matrix::from_rows(self.n, self.rows.iter().map(|r| r.x().clone()).collect())
            .expect("uniform row length")
    }

    pub fn h_z(&self) -> Gf2Matrix {
        Gf2Matrix::from_rows(self.n, self.rows.iter().map(|r| r.z().clone()).collect())
            .expect("uniform row length")
    }

    /// The full `(n−k) × 2n` matrix `[H_X | H_Z]`.
    pub fn matrix(&self) -> Gf2Matrix {
        Gf2Matrix::from_rows(
            2 * self.n,
            self.rows.iter().map(|r| r.concatenated()).collect(),
        )
        .expect("uniform row length")
    }

    /// Validates a raw `[H_X | H_Z]` matrix.
    pub fn from_matrix(m: &Gf2Matrix) -> Result<Self> {
        let rows = m
            .row_vectors()
            .iter()
            .map(SymplecticVector::from_concatenated)
            .collect::<Result<Vec<_>>>()?;
        validate_symplectic(rows)
    }
}

impl fmt::Debug for CheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.generators().iter().map(|g| g.to_string()))
            .finish()
    }
}

/// Checks that `rows` define a stabilizer group and returns its check
/// matrix. Every violation is reported, not just the first.
pub fn validate(rows: &[PauliOperator]) -> Result<CheckMatrix> {
    validate_symplectic(rows.iter().map(|p| p.symplectic().clone()).collect())
}

fn validate_symplectic(rows: Vec<SymplecticVector>) -> Result<CheckMatrix> {
    let Some(first) = rows.first() else {
        return Err(ValidationError {
            violations: vec![Violation::NoGenerators],
        }
        .into());
    };
    let n = first.n();
    let mut violations = Vec::new();
    for (row, r) in rows.iter().enumerate() {
        if r.n() != n {
            violations.push(Violation::MixedLengths {
                row,
                expected: n,
                found: r.n(),
            });
        }
    }
    if !violations.is_empty() {
        return Err(ValidationError { violations }.into());
    }
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if rows[i].symplectic_product(&rows[j]) {
                violations.push(Violation::NonCommutingGenerators(i, j));
            }
        }
    }
    let mut basis = IncrementalBasis::new(2 * n);
    let dependent: Vec<usize> = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| !basis.insert(&r.concatenated()))
        .map(|(i, _)| i)
        .collect();
    if !dependent.is_empty() {
        violations.push(Violation::DependentGenerators(dependent));
    }
    if !violations.is_empty() {
        return Err(ValidationError { violations }.into());
    }
    Ok(CheckMatrix { n, rows })
}

/// Syndrome bits, one per generator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Syndrome {
    bits: BitVector,
}

impl Syndrome {
    pub fn new(bits: BitVector) -> Self {
        Self { bits }
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(BitVector::zeros(len))
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.bits.checked_xor(&other.bits).map(Self::new)
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Syndrome({})", self.bits)
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits)
    }
}

/// Bit-flip and phase-flip syndrome matrices, both `n × (n−k)`.
///
/// Row `i` of `bsm` is the syndrome of `X_i`, row `i` of `psm` the syndrome
/// of `Z_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyndromeMatrices {
    pub bsm: Gf2Matrix,
    pub psm: Gf2Matrix,
}

/// A stabilizer code with optional metadata.
#[derive(Clone)]
pub struct StabilizerCode {
    h: CheckMatrix,
    label: Option<String>,
    designed_distance: Option<usize>,
    // H_Zᵀ and H_Xᵀ, cached for column-sum syndromes.
    bsm: Gf2Matrix,
    psm: Gf2Matrix,
    stabilizer_span: IncrementalBasis,
}

impl fmt::Debug for StabilizerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StabilizerCode")
            .field("label", &self.label)
            .field("n", &self.n())
            .field("k", &self.k())
            .field("generators", &self.h)
            .finish()
    }
}

impl StabilizerCode {
    pub fn new(h: CheckMatrix) -> Self {
        let bsm = h.h_z().transpose();
        let psm = h.h_x().transpose();
        let concatenated: Vec<BitVector> = h.rows.iter().map(|r| r.concatenated()).collect();
        let stabilizer_span = IncrementalBasis::from_vectors(2 * h.n, &concatenated);
        Self {
            h,
            label: None,
            designed_distance: None,
            bsm,
            psm,
            stabilizer_span,
        }
    }

    /// Validates `generators` and builds the code.
    pub fn from_generators(generators: &[PauliOperator]) -> Result<Self> {
        validate(generators).map(Self::new)
    }

    /// Parses one Pauli string per generator.
    pub fn from_strings<S: AsRef<str>>(generators: &[S]) -> Result<Self> {
        let ops = generators
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<PauliOperator>>>()?;
        Self::from_generators(&ops)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn with_designed_distance(mut self, d: usize) -> Self {
        self.designed_distance = Some(d);
        self
    }

    pub fn check_matrix(&self) -> &CheckMatrix {
        &self.h
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn designed_distance(&self) -> Option<usize> {
        self.designed_distance
    }

    /// `floor((d−1)/2)` for the designed distance, if one is set.
    pub fn default_t(&self) -> Option<usize> {
        self.designed_distance.map(|d| d.saturating_sub(1) / 2)
    }

    pub fn n(&self) -> usize {
        self.h.n
    }

    pub fn k(&self) -> usize {
        self.h.k()
    }

    pub fn num_generators(&self) -> usize {
        self.h.rows.len()
    }

    fn check_n(&self, e: &PauliOperator) -> Result<()> {
        if e.n() != self.n() {
            return Err(Error::QubitCountMismatch {
                expected: self.n(),
                found: e.n(),
            });
        }
        Ok(())
    }

    /// Syndrome as a sum of check-matrix columns: `x(E)·H_Zᵀ + z(E)·H_Xᵀ`.
    pub fn syndrome(&self, e: &PauliOperator) -> Result<Syndrome> {
        self.check_n(e)?;
        Ok(self.syndrome_unchecked(e))
    }

    pub(crate) fn syndrome_unchecked(&self, e: &PauliOperator) -> Syndrome {
        let mut s = BitVector::zeros(self.num_generators());
        for i in e.x().iter_ones() {
            s.xor_assign(self.bsm.row(i));
        }
        for i in e.z().iter_ones() {
            s.xor_assign(self.psm.row(i));
        }
        Syndrome::new(s)
    }

    /// Syndrome computed generator by generator from commutation.
    pub fn syndrome_direct(&self, e: &PauliOperator) -> Result<Syndrome> {
        let mut s = BitVector::zeros(self.num_generators());
        for (j, g) in self.h.generators().iter().enumerate() {
            if !e.commutes(g)? {
                s.set(j, true);
            }
        }
        Ok(Syndrome::new(s))
    }

    /// Builds the syndrome matrices by measuring every single-qubit `X_i`
    /// and `Z_i`.
    pub fn bsm_psm(&self) -> SyndromeMatrices {
        let n = self.n();
        let measure = |letter| {
            let rows = (0..n)
                .map(|i| {
                    self.syndrome_direct(&PauliOperator::single(n, i, letter))
                        .expect("qubit count matches")
                        .bits
                })
                .collect();
            Gf2Matrix::from_rows(self.num_generators(), rows).expect("uniform syndrome length")
        };
        let m = SyndromeMatrices {
            bsm: measure(crate::pauli::PauliLetter::X),
            psm: measure(crate::pauli::PauliLetter::Z),
        };
        debug_assert_eq!(m.bsm, self.bsm);
        debug_assert_eq!(m.psm, self.psm);
        m
    }

    /// `a·BSM + b·PSM` for X-support `a` and Z-support `b`.
    pub fn syndrome_linear(&self, a: &BitVector, b: &BitVector) -> Result<Syndrome> {
        let mut s = self.bsm.vec_mul(a)?;
        s.xor_assign(&self.psm.vec_mul(b)?);
        Ok(Syndrome::new(s))
    }

    /// Whether `e` lies in the stabilizer group (up to phase).
    pub fn in_stabilizer(&self, e: &PauliOperator) -> Result<bool> {
        self.check_n(e)?;
        Ok(self
            .stabilizer_span
            .contains(&e.symplectic().concatenated()))
    }

    /// Whether `e` commutes with every stabilizer but is not one of them.
    pub fn is_logical(&self, e: &PauliOperator) -> Result<bool> {
        Ok(self.syndrome(e)?.is_zero() && !self.in_stabilizer(e)?)
    }

    pub(crate) fn stabilizer_span(&self) -> &IncrementalBasis {
        &self.stabilizer_span
    }

    /// Splits the stabilizer into pure X-type and pure Z-type generators if
    /// some row-equivalent check matrix allows it.
    pub fn is_css(&self) -> Option<CssSplit> {
        css_split(&self.h)
    }

    /// Applies a qubit relabeling (qubit `perm[j]` becomes qubit `j`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let rows: Vec<PauliOperator> = self
            .h
            .rows
            .iter()
            .map(|r| PauliOperator::from_symplectic(r.permuted(perm)))
            .collect();
        let mut c = Self::from_generators(&rows)?;
        c.label = self.label.clone();
        c.designed_distance = self.designed_distance;
        Ok(c)
    }
}

/// X-type and Z-type generator blocks of a CSS code: the check matrix is
/// row-equivalent to `[[x_block, 0], [0, z_block]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CssSplit {
    pub x_block: Gf2Matrix,
    pub z_block: Gf2Matrix,
}

/// A code is CSS iff `rank(H_X) + rank(H_Z) = n − k`: the X-type part of the
/// row space has dimension `(n−k) − rank(H_Z)` and the Z-type part
/// `(n−k) − rank(H_X)`, and these fill the row space exactly when the sum is
/// right.
fn css_split(h: &CheckMatrix) -> Option<CssSplit> {
    let hx = h.h_x();
    let hz = h.h_z();
    let m = h.num_generators();
    if hx.rank() + hz.rank() != m {
        return None;
    }
    // Rows of the reduced [A | B] past the pivots of A have zero A part.
    let pure = |first: &Gf2Matrix, second: &Gf2Matrix| {
        let rr = crate::gf2::row_reduce(&first.hstack(second).expect("same row count"));
        let lead = first.rank();
        let rows = rr.reduced.row_vectors()[lead..rr.rank]
            .iter()
            .map(|r| r.slice(first.cols(), first.cols() + second.cols()))
            .collect();
        Gf2Matrix::from_rows(second.cols(), rows).expect("uniform row length")
    };
    Some(CssSplit {
        x_block: pure(&hz, &hx),
        z_block: pure(&hx, &hz),
    })
}
