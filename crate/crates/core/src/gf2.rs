//! Dense linear algebra over GF(2).
//!
//! Vectors are packed into `u64` words. Bit `i` lives in word `i / 64` at
//! position `i % 64`; bits past `len` in the last word are always zero.
//! Matrices are stored row-major as a list of [`BitVector`]s.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    /// Vector of length `len` with only bit `i` set.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from `0`/`1` entries; any nonzero entry counts as one.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    /// Panics if `i >= len`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range (len={})",
            self.len
        );
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    /// # Panics
    /// Panics if `i >= len`.
    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {i} out of range (len={})",
            self.len
        );
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "bit index {i} out of range (len={})",
            self.len
        );
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Hamming weight.
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * WORD + tz)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(())
    }

    /// In-place addition.
    ///
    /// # Panics
    /// Panics on mismatched lengths; use [`BitVector::checked_xor`] for a
    /// fallible version.
    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn checked_xor(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    /// Number of positions set in both vectors.
    pub fn and_count(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Inner product mod 2.
    #[inline]
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() & 1 == 1
    }

    pub fn checked_dot(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.dot(other))
    }

    pub fn and(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        Self {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Concatenation `self ‖ other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Bits `range.start..range.end` as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= self.len, "slice out of range");
        let mut out = Self::zeros(end - start);
        for i in self.iter_ones().filter(|&i| i >= start && i < end) {
            out.set(i - start, true);
        }
        out
    }

    /// Renders as a string of `0`/`1` characters.
    pub fn to_bit_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({})", self.to_bit_string())
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl Serialize for BitVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_bit_string())
    }
}

impl<'de> Deserialize<'de> for BitVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let mut v = BitVector::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(serde::de::Error::custom(format!(
                        "invalid bit character {other:?}"
                    )))
                }
            }
        }
        Ok(v)
    }
}

/// A dense matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| BitVector::unit(n, i)).collect(),
        }
    }

    /// Builds a matrix from row vectors. `cols` is needed for the empty case.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Convenience constructor from nested `0`/`1` slices.
    ///
    /// # Panics
    /// Panics if the rows are ragged.
    pub fn from_bits<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let data: Vec<_> = rows
            .iter()
            .map(|r| BitVector::from_bits(r.as_ref()))
            .collect();
        Self::from_rows(cols, data).expect("ragged rows")
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &BitVector {
        &self.data[r]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.data
    }

    pub fn column(&self, c: usize) -> BitVector {
        assert!(
            c < self.cols,
            "column {c} out of range (cols={})",
            self.cols
        );
        let mut v = BitVector::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            if row.get(c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn columns(&self) -> Vec<BitVector> {
        let t = self.transpose();
        t.data
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.iter_ones() {
                out.data[c].set(r, true);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    /// Matrix-vector product `M·v` (v as a column).
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            if row.dot(v) {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// Row-vector product `v·M`, the sum of the rows selected by `v`.
    pub fn vec_mul(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = BitVector::zeros(self.cols);
        for r in v.iter_ones() {
            out.xor_assign(&self.data[r]);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let data = self
            .data
            .iter()
            .map(|row| other.vec_mul(row))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.concat(b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    /// The block of rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        Self {
            rows: r1 - r0,
            cols: c1 - c0,
            data: self.data[r0..r1].iter().map(|r| r.slice(c0, c1)).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    /// `row[dst] += row[src]`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        assert_ne!(src, dst);
        let (s, d) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst);
            (&lo[src], &mut hi[0])
        } else {
            let (lo, hi) = self.data.split_at_mut(src);
            (&hi[0], &mut lo[dst])
        };
        d.xor_assign(s);
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in &mut self.data {
            let (x, y) = (row.get(a), row.get(b));
            row.set(a, y);
            row.set(b, x);
        }
    }

    pub fn rank(&self) -> usize {
        let mut basis = IncrementalBasis::new(self.cols);
        self.data.iter().filter(|r| basis.insert(r)).count()
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let rr = row_reduce(self);
        (rr.rank == self.rows).then_some(rr.transform)
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.data.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<&str> = row.iter().map(|b| if b { "1" } else { "0" }).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Gf2Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Gf2Matrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("data", &self.data)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Gf2Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rows: usize,
            cols: usize,
            data: Vec<BitVector>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.data.len() != raw.rows {
            return Err(serde::de::Error::custom("row count mismatch"));
        }
        Gf2Matrix::from_rows(raw.cols, raw.data).map_err(serde::de::Error::custom)
    }
}

/// Result of [`row_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction {
    /// Reduced row echelon form.
    pub reduced: Gf2Matrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivot_cols: Vec<usize>,
    /// Invertible `rows × rows` matrix with `transform · input == reduced`.
    pub transform: Gf2Matrix,
}

/// Gauss-Jordan elimination to reduced row echelon form.
pub fn row_reduce(m: &Gf2Matrix) -> RowReduction {
    let mut a = m.clone();
    let mut t = Gf2Matrix::identity(m.rows());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == m.rows() {
            break;
        }
        let Some(p) = (r..m.rows()).find(|&i| a.get(i, c)) else {
            continue;
        };
        a.swap_rows(r, p);
        t.swap_rows(r, p);
        for i in 0..m.rows() {
            if i != r && a.get(i, c) {
                a.add_row(r, i);
                t.add_row(r, i);
            }
        }
        pivots.push(c);
        r += 1;
    }
    RowReduction {
        reduced: a,
        rank: r,
        pivot_cols: pivots,
        transform: t,
    }
}

/// A basis of the right null space `{v : m·v = 0}`.
pub fn kernel_basis(m: &Gf2Matrix) -> Vec<BitVector> {
    let rr = row_reduce(m);
    let mut is_pivot = vec![false; m.cols()];
    for &p in &rr.pivot_cols {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = BitVector::unit(m.cols(), free);
            for (row, &p) in rr.pivot_cols.iter().enumerate() {
                if rr.reduced.get(row, free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect()
}

/// Whether the columns `cols` of `m` are linearly independent.
///
/// Columns are inserted one at a time into an echelon basis and the scan
/// stops at the first dependent one.
pub fn columns_subset_independent(m: &Gf2Matrix, cols: &[usize]) -> Result<bool> {
    let mut seen = vec![false; m.cols()];
    for &c in cols {
        if c >= m.cols() {
            return Err(Error::IndexOutOfRange {
                index: c,
                bound: m.cols(),
            });
        }
        if std::mem::replace(&mut seen[c], true) {
            return Err(Error::DuplicateIndex(c));
        }
    }
    let mut basis = IncrementalBasis::new(m.rows());
    Ok(cols.iter().all(|&c| basis.insert(&m.column(c))))
}

/// Echelon basis that grows one vector at a time.
///
/// Each stored vector is reduced against all earlier ones, so its pivot
/// (lowest set bit) is unique and reducing a candidate in insertion order
/// clears every pivot position.
#[derive(Clone, Debug)]
pub struct IncrementalBasis {
    len: usize,
    vectors: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl IncrementalBasis {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<'a>(len: usize, vs: impl IntoIterator<Item = &'a BitVector>) -> Self {
        let mut b = Self::new(len);
        for v in vs {
            b.insert(v);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    /// Reduces `v` against the basis in place.
    pub fn reduce(&self, v: &mut BitVector) {
        for (b, &p) in self.vectors.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(b);
            }
        }
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Adds `v` if it is independent of the current span. Returns whether it
    /// was added.
    pub fn insert(&mut self, v: &BitVector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        match w.first_one() {
            Some(p) => {
                self.vectors.push(w);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }

    /// Drops vectors beyond the first `dim`.
    pub fn truncate(&mut self, dim: usize) {
        self.vectors.truncate(dim);
        self.pivots.truncate(dim);
    }
}
