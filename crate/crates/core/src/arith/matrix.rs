use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::modular::rank_mod_p;
use super::Rational;
use crate::error::{Error, Result};

pub(crate) type SparseRow = Vec<(usize, Rational)>;

/// Sparse rational matrix stored row by row.
///
/// Each row is a list of `(column, value)` pairs sorted by column with no
/// explicit zeros, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

fn normalize(mut row: SparseRow) -> SparseRow {
    row.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `a + f * b` on sorted sparse rows.
fn axpy(a: &[(usize, Rational)], f: &Rational, b: &[(usize, Rational)]) -> SparseRow {
    if f.is_zero() {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, f * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon basis keyed by pivot column; every stored row has leading
/// entry 1 at its key.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    /// Reduces `row` until its leading column has no pivot; inserts it if
    /// nonzero. Returns whether the rank grew.
    fn insert(&mut self, mut row: SparseRow) -> bool {
        while let Some((lead, val)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(&row, &-val, p),
                None => {
                    let inv = val.recip();
                    for (_, v) in row.iter_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    /// Fully reduced echelon rows, ordered by pivot column.
    fn into_rref(mut self) -> Vec<(usize, SparseRow)> {
        let keys: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for &k in &keys {
            let pivot = self.pivots[&k].clone();
            for (_, row) in self.pivots.range_mut(..k) {
                if let Some(pos) = row.iter().position(|(c, _)| *c == k) {
                    let f = -row[pos].1.clone();
                    *row = axpy(row, &f, &pivot);
                }
            }
        }
        self.pivots.into_iter().collect()
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    /// Builds from `(column, value)` rows; duplicates are summed and zeros dropped.
    pub fn from_sparse_rows(cols: usize, rows: Vec<SparseRow>) -> Self {
        let data: Vec<SparseRow> = rows.into_iter().map(normalize).collect();
        assert!(
            data.iter().flatten().all(|(c, _)| *c < cols),
            "column index out of range"
        );
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_dense(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged dense matrix");
        Self::from_sparse_rows(
            cols,
            rows.into_iter()
                .map(|r| r.into_iter().enumerate().collect())
                .collect(),
        )
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_dense(
            rows.iter()
                .map(|r| r.iter().map(|&v| super::rat(v)).collect())
                .collect(),
        )
    }

    /// Builds from 0-based `(row, col, value)` triplets.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut data = vec![Vec::new(); rows];
        for (i, j, v) in triplets {
            data[i].push((j, v));
        }
        let mut m = Self::from_sparse_rows(cols, data);
        m.rows = rows;
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i]
            .binary_search_by_key(&j, |(c, _)| *c)
            .map(|k| self.data[i][k].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// 0-based nonzero triplets in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![Vec::new(); self.cols];
        for (i, j, v) in self.triplets() {
            data[j].push((i, v.clone()));
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect())
                .collect(),
        }
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &Rational, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| axpy(a, c, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&Rational::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&-Rational::one(), other)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc: SparseRow = Vec::new();
                for (k, a) in r {
                    acc.extend(other.data[*k].iter().map(|(j, b)| (*j, a * b)));
                }
                normalize(acc)
            })
            .collect();
        Self {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// Stacks rows of `self` above rows of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `self` to the left of `other`.
    pub fn hconcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row mismatch in hconcat");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.extend(b.iter().map(|(j, v)| (j + self.cols, v.clone())));
                r
            })
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        }
    }

    /// Row-major flattening into a single sparse vector of length rows*cols.
    pub fn vectorize(&self) -> SparseRow {
        self.triplets()
            .map(|(i, j, v)| (i * self.cols + j, v.clone()))
            .collect()
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut ech = Echelon::default();
        self.data
            .iter()
            .filter(|r| !r.is_empty())
            .filter(|r| ech.insert((*r).clone()))
            .count()
    }

    /// Rank over `F_p`; rejects composite `p`.
    pub fn rank_mod(&self, p: u64) -> Result<usize> {
        rank_mod_p(self, p)
    }

    /// `cols - rank`
    pub fn nullspace_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Reduced row echelon basis of the row space.
    pub fn row_space_basis(&self) -> Self {
        let mut ech = Echelon::default();
        for r in &self.data {
            ech.insert(r.clone());
        }
        let rows = ech.into_rref().into_iter().map(|(_, r)| r).collect();
        Self::from_sparse_rows(self.cols, rows)
    }

    /// Basis (as rows) of `{ v : self * v = 0 }`.
    pub fn kernel_basis(&self) -> Self {
        let mut ech = Echelon::default();
        for r in &self.data {
            ech.insert(r.clone());
        }
        let rref = ech.into_rref();
        let pivot_cols: std::collections::BTreeSet<usize> = rref.iter().map(|(c, _)| *c).collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis: Vec<SparseRow> = free.iter().map(|&f| vec![(f, Rational::one())]).collect();
        let index_of: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        for (pc, row) in &rref {
            for (c, v) in row {
                if c != pc {
                    basis[index_of[c]].push((*pc, -v.clone()));
                }
            }
        }
        Self::from_sparse_rows(self.cols, basis)
    }

    /// Basis (as rows) of `{ c : c * self = 0 }`.
    pub fn left_kernel_basis(&self) -> Self {
        self.transpose().kernel_basis()
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn row_space_contains(&self, other: &Self) -> bool {
        self.rank() == self.vstack(other).rank()
    }

    pub fn try_square_side(&self) -> Result<usize> {
        if self.rows == self.cols {
            Ok(self.rows)
        } else {
            Err(Error::InvalidArgument(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for (i, j, v) in self.triplets() {
            writeln!(f, "  ({i}, {j}) = {v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn zero_scaled_add_keeps_zero_matrix_canonical() {
        let z = ExactMatrix::zeros(2, 2);
        let sum = z.add_scaled(&rat(0), &ExactMatrix::identity(2));
        assert_eq!(sum, z);
        assert!(sum.is_zero());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::identity(4).rank(), 4);
        assert_eq!(ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(ExactMatrix::zeros(3, 5).rank(), 0);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(ExactMatrix::identity(4).nullspace_dim(), 0);
        assert_eq!(ExactMatrix::zeros(3, 5).nullspace_dim(), 5);
        assert_eq!(ExactMatrix::from_i64(&[&[1, 1], &[1, 1]]).nullspace_dim(), 1);
    }

    #[test]
    fn kernel_basis_is_annihilated() {
        let m = ExactMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = m.kernel_basis();
        assert_eq!(k.rows(), 2);
        assert!(m.mul(&k.transpose()).is_zero());
        assert_eq!(k.rank(), 2);
        let lk = m.left_kernel_basis();
        assert_eq!(lk.rows(), 1);
        assert!(lk.mul(&m).is_zero());
    }

    #[test]
    fn product_and_sums() {
        let a = ExactMatrix::from_i64(&[&[1, 2], &[0, 1]]);
        let b = ExactMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), ExactMatrix::from_i64(&[&[2, 1], &[1, 0]]));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.scale(&ratio(1, 2)).get(0, 1), rat(1));
        assert_eq!(a.transpose().get(1, 0), rat(2));
        assert_eq!(a.hconcat(&b).cols(), 4);
        assert_eq!(a.vstack(&b).rank(), 2);
    }

    fn arb_matrix() -> impl Strategy<Value = ExactMatrix> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-3i64..4, c), r).prop_map(|rows| {
                ExactMatrix::from_dense(
                    rows.into_iter()
                        .map(|row| row.into_iter().map(rat).collect())
                        .collect(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn rank_matches_transpose(m in arb_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.rows(), m.nullspace_dim());
            prop_assert!(m.mul(&k.transpose()).is_zero());
        }

        #[test]
        fn modular_rank_agrees(m in arb_matrix()) {
            prop_assert_eq!(m.rank_mod(1_048_583).unwrap(), m.rank());
            prop_assert_eq!(m.rank_mod(2_147_483_647).unwrap(), m.rank());
        }
    }
}
