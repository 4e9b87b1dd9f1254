//! Bit-packed vectors and matrices over the two-element field.
//!
//! One vector type serves both `V` (coordinates in the basis `α_s`) and its
//! dual `V*` (coordinates in the dual basis `f_s`). Bit `i` always belongs to
//! vertex `i`; which space a vector lives in is tracked by the caller.

use std::fmt;
use std::str::FromStr;

use crate::error::BitstringError;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A length-`n` vector over F₂, packed 64 coordinates per word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        F2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The basis vector with a single one at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    /// Builds a vector from the low `len` bits of `mask`. Requires `len <= 64`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "from_mask needs len <= 64, got {len}");
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = mask & low_mask(len);
        }
        v
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    /// The low 64 coordinates as an integer, or `None` when `len > 64`.
    pub fn to_mask(&self) -> Option<u64> {
        if self.len > WORD {
            None
        } else {
            Some(self.words.first().copied().unwrap_or(0))
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of ones (the on-count of a configuration).
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &F2Vector) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &F2Vector) -> F2Vector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Parity of the coordinatewise product; this is the pairing `f(α)`.
    pub fn dot(&self, other: &F2Vector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Indices of the set coordinates, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    /// Lowest set index.
    pub fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }

    /// Character `i` is `'1'` when coordinate `i` is set.
    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    pub fn parse_bitstring(s: &str) -> Result<Self, BitstringError> {
        let s = s.trim();
        let mut v = Self::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => return Err(BitstringError::BadChar { ch: other, pos: i }),
            }
        }
        Ok(v)
    }

    /// Like [`parse_bitstring`](Self::parse_bitstring) but also checks the length.
    pub fn parse_bitstring_len(s: &str, len: usize) -> Result<Self, BitstringError> {
        let v = Self::parse_bitstring(s)?;
        if v.len != len {
            return Err(BitstringError::Length {
                expected: len,
                found: v.len,
            });
        }
        Ok(v)
    }
}

fn low_mask(len: usize) -> u64 {
    if len >= WORD {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector({})", self.to_bitstring())
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl FromStr for F2Vector {
    type Err = BitstringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_bitstring(s)
    }
}

/// Square matrix over F₂ stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zeros(n: usize) -> Self {
        F2Matrix {
            rows: vec![F2Vector::zeros(n); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        F2Matrix {
            rows: (0..n).map(|i| F2Vector::unit(n, i)).collect(),
        }
    }

    /// Panics unless every row has length `rows.len()`.
    pub fn from_rows(rows: Vec<F2Vector>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        F2Matrix { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &F2Vector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn mul_vec(&self, x: &F2Vector) -> F2Vector {
        let mut out = F2Vector::zeros(self.size());
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(x) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn transpose(&self) -> F2Matrix {
        let n = self.size();
        let mut t = F2Matrix::zeros(n);
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix[")?;
        for row in &self.rows {
            writeln!(f, "  {}", row.to_bitstring())?;
        }
        write!(f, "]")
    }
}

/// Rank of a matrix together with a basis of its (right) kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankKernel {
    pub rank: usize,
    pub kernel: Vec<F2Vector>,
}

impl RankKernel {
    pub fn is_invertible(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// Reduced row echelon form; pivots are taken column by column from the
/// first row at or below the current position with that bit set.
fn reduce(m: &F2Matrix) -> (Vec<F2Vector>, Vec<usize>) {
    let n = m.size();
    let mut rows = m.rows.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..n).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == n {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Gaussian elimination over F₂. The kernel basis has one vector per free
/// column `c`, with coordinate `c` set and the pivot coordinates solved.
pub fn rank_and_kernel(m: &F2Matrix) -> RankKernel {
    let n = m.size();
    let (rows, pivots) = reduce(m);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let kernel = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = F2Vector::unit(n, free);
            for (row, &p) in rows.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect();
    RankKernel {
        rank: pivots.len(),
        kernel,
    }
}

/// Some `x` with `m·x = b`, or `None` when `b` is outside the column space.
/// Free coordinates are set to zero, so the answer is unique when `m` is
/// invertible.
pub fn solve(m: &F2Matrix, b: &F2Vector) -> Option<F2Vector> {
    let n = m.size();
    assert_eq!(b.len(), n, "right-hand side length mismatch");
    // augment with b as column n
    let mut rows: Vec<F2Vector> = m
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut a = F2Vector::zeros(n + 1);
            for j in row.ones() {
                a.set(j, true);
            }
            if b.get(i) {
                a.set(n, true);
            }
            a
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..n).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| row.get(n)) {
        return None;
    }
    let mut x = F2Vector::zeros(n);
    for (row, &p) in rows.iter().zip(&pivots) {
        if row.get(n) {
            x.set(p, true);
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&str]) -> F2Matrix {
        F2Matrix::from_rows(rows.iter().map(|r| r.parse().unwrap()).collect())
    }

    #[test]
    fn bitstring_roundtrip_and_errors() {
        let v: F2Vector = "01100110".parse().unwrap();
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![1, 2, 5, 6]);
        assert_eq!(v.to_bitstring(), "01100110");
        assert!(F2Vector::parse_bitstring("01x").is_err());
        assert!(matches!(
            F2Vector::parse_bitstring_len("0101", 3),
            Err(BitstringError::Length {
                expected: 3,
                found: 4
            })
        ));
    }

    #[test]
    fn multiword_vectors() {
        let mut v = F2Vector::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.weight(), 3);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert!(v.to_mask().is_none());
        let w = F2Vector::from_indices(130, [64, 100]);
        assert!(v.dot(&w));
        assert_eq!(v.xor(&w).ones().collect::<Vec<_>>(), vec![0, 100, 129]);
    }

    #[test]
    fn from_mask_clears_high_bits() {
        let v = F2Vector::from_mask(3, 0b1111_0101);
        assert_eq!(v.to_mask(), Some(0b101));
    }

    #[test]
    fn star_kernel() {
        // K1,3 with center 0
        let a = mat(&["0111", "1000", "1000", "1000"]);
        let rk = rank_and_kernel(&a);
        assert_eq!(rk.rank, 2);
        assert_eq!(rk.kernel.len(), 2);
        for k in &rk.kernel {
            assert!(a.mul_vec(k).is_zero());
        }
        assert_eq!(rk.kernel[0].to_bitstring(), "0110");
        assert_eq!(rk.kernel[1].to_bitstring(), "0101");
    }

    #[test]
    fn identity_is_invertible() {
        let rk = rank_and_kernel(&F2Matrix::identity(5));
        assert_eq!(rk.rank, 5);
        assert!(rk.is_invertible());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = mat(&["0111", "1000", "1000", "1000"]);
        let b: F2Vector = "0111".parse().unwrap();
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        // rows 1..3 are equal, so their right-hand sides must agree
        let bad: F2Vector = "0100".parse().unwrap();
        assert!(solve(&a, &bad).is_none());
    }

    #[test]
    fn empty_matrix() {
        let rk = rank_and_kernel(&F2Matrix::zeros(0));
        assert_eq!(rk.rank, 0);
        assert!(rk.kernel.is_empty());
    }
}
