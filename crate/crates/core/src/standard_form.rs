//! Standard form of a check matrix.
//!
//! Row operations plus a relabeling of qubits bring `H` to
//!
//! ```text
//!          r     n-k-r    k        r    n-k-r    k
//!      [   I      A1      A2   |   B      0      C  ]   r rows
//!      [   0      0       0    |   D      I      E  ]   n-k-r rows
//! ```
//!
//! where `r = rank(H_X)`. A qubit relabeling moves column `i` of `H_X`
//! together with column `i` of `H_Z`, so the symplectic pairing survives.

use serde::{Deserialize, Serialize};

use crate::code::StabilizerCode;
use crate::gf2::Gf2Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardForm {
    pub n: usize,
    pub k: usize,
    /// Rank of the X part.
    pub r: usize,
    pub i_top: Gf2Matrix,
    pub a1: Gf2Matrix,
    pub a2: Gf2Matrix,
    pub b: Gf2Matrix,
    pub c: Gf2Matrix,
    pub d: Gf2Matrix,
    pub i_bottom: Gf2Matrix,
    pub e: Gf2Matrix,
    /// Position `j` of the standard form holds original qubit
    /// `qubit_permutation[j]` (0-based).
    pub qubit_permutation: Vec<usize>,
    /// `(n−k) × (n−k)` invertible matrix `T` with `T · H_permuted = R`.
    pub row_transform: Gf2Matrix,
    /// The assembled matrix `R = [R_X | R_Z]`.
    pub matrix: Gf2Matrix,
}

impl StandardForm {
    /// Undoes the row transform and the qubit relabeling, recovering the
    /// original `[H_X | H_Z]`.
    pub fn reconstruct(&self) -> Gf2Matrix {
        let t_inv = self
            .row_transform
            .inverse()
            .expect("row transform is invertible");
        let permuted = t_inv.mul(&self.matrix).expect("conformable");
        let n = self.n;
        let mut out = Gf2Matrix::zeros(permuted.rows(), 2 * n);
        for row in 0..permuted.rows() {
            for (j, &q) in self.qubit_permutation.iter().enumerate() {
                out.set(row, q, permuted.get(row, j));
                out.set(row, n + q, permuted.get(row, n + j));
            }
        }
        out
    }

    /// The stabilizer code with check matrix `R`.
    pub fn to_code(&self) -> StabilizerCode {
        let h = crate::code::CheckMatrix::from_matrix(&self.matrix)
            .expect("standard form of a valid code is valid");
        StabilizerCode::new(h)
    }

    pub fn is_identity_permutation(&self) -> bool {
        self.qubit_permutation
            .iter()
            .enumerate()
            .all(|(j, &q)| j == q)
    }
}

fn swap_qubits(m: &mut Gf2Matrix, perm: &mut [usize], n: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    m.swap_cols(a, b);
    m.swap_cols(n + a, n + b);
    perm.swap(a, b);
}

/// Finds the first set entry in the block `rows × [cols.start, n)` of the
/// given half (offset 0 for X, `n` for Z), scanning column by column.
fn find_pivot(
    m: &Gf2Matrix,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
    offset: usize,
) -> Option<(usize, usize)> {
    cols.flat_map(|c| rows.clone().map(move |r| (r, c)))
        .find(|&(r, c)| m.get(r, offset + c))
}

fn eliminate_column(m: &mut Gf2Matrix, t: &mut Gf2Matrix, pivot_row: usize, col: usize) {
    for row in 0..m.rows() {
        if row != pivot_row && m.get(row, col) {
            m.add_row(pivot_row, row);
            t.add_row(pivot_row, row);
        }
    }
}

pub fn standard_form(code: &StabilizerCode) -> StandardForm {
    let n = code.n();
    let rows = code.num_generators();
    let k = code.k();
    let mut m = code.check_matrix().matrix();
    let mut t = Gf2Matrix::identity(rows);
    let mut perm: Vec<usize> = (0..n).collect();

    // X part: identity in the leading r × r block.
    let mut r = 0;
    while let Some((pr, pc)) = find_pivot(&m, r..rows, r..n, 0) {
        swap_qubits(&mut m, &mut perm, n, r, pc);
        m.swap_rows(r, pr);
        t.swap_rows(r, pr);
        eliminate_column(&mut m, &mut t, r, r);
        r += 1;
    }

    // The lower rows now have zero X part; their Z part restricted to
    // qubits r.. has full rank because they commute with the upper rows.
    for p in r..rows {
        let (pr, pc) = find_pivot(&m, p..rows, p..n, n)
            .expect("lower block has full rank on the trailing qubits");
        swap_qubits(&mut m, &mut perm, n, p, pc);
        m.swap_rows(p, pr);
        t.swap_rows(p, pr);
        eliminate_column(&mut m, &mut t, p, n + p);
    }

    let s = rows; // n - k
    StandardForm {
        n,
        k,
        r,
        i_top: m.submatrix(0, r, 0, r),
        a1: m.submatrix(0, r, r, s),
        a2: m.submatrix(0, r, s, n),
        b: m.submatrix(0, r, n, n + r),
        c: m.submatrix(0, r, n + s, 2 * n),
        d: m.submatrix(r, s, n, n + r),
        i_bottom: m.submatrix(r, s, n + r, n + s),
        e: m.submatrix(r, s, n + s, 2 * n),
        qubit_permutation: perm,
        row_transform: t,
        matrix: m,
    }
}
