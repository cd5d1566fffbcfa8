//! Exact linear algebra over a [`Field`]: row reduction, rank, kernels and linear maps.
//!
//! Matrices are stored as rows of scalars. Subspaces are represented by the
//! nonzero rows of their reduced row-echelon form together with the pivot columns.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::field::Field;

/// Reduced row-echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
    let mut m: Vec<Vec<F::Elem>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(&m[r][c]).expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = field.neg(&row[c]);
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = field.mul_add(x, &factor, y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Rank by plain Gaussian elimination over the field.
pub fn rank_by_elimination<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    rref(field, rows).1.len()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        // smallest nonzero pivot keeps intermediate entries short
        let Some(p) = (r..m.len())
            .filter(|&i| !m[i][c].is_zero())
            .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()))
        else {
            continue;
        };
        m.swap(r, p);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            for j in (c + 1)..ncols {
                let v = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        r += 1;
    }
    r
}

/// Reduces `v` modulo the row space of an RREF basis (`rows`, `pivots`).
pub fn reduce<F: Field>(
    field: &F,
    rows: &[Vec<F::Elem>],
    pivots: &[usize],
    v: &[F::Elem],
) -> Vec<F::Elem> {
    let mut out = v.to_vec();
    for (row, &c) in rows.iter().zip(pivots) {
        if field.is_zero(&out[c]) {
            continue;
        }
        let factor = field.neg(&out[c]);
        for (x, y) in out.iter_mut().zip(row) {
            *x = field.mul_add(x, &factor, y);
        }
    }
    out
}

/// Basis of `{x : rows · x = 0}` for a matrix with `ncols` columns.
pub fn nullspace<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let (red, pivots) = rref(field, rows);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![field.zero(); ncols];
        x[free] = field.one();
        for (row, &p) in red.iter().zip(&pivots) {
            x[p] = field.neg(&row[free]);
        }
        basis.push(x);
    }
    basis
}

/// Inverse of a square matrix, if it exists.
pub fn invert<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> Option<Vec<Vec<F::Elem>>> {
    let n = m.len();
    let augmented: Vec<Vec<F::Elem>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let (red, pivots) = rref(field, &augmented);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A linear map between coordinate spaces, stored as a `codomain × domain` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap<E> {
    pub domain: usize,
    pub codomain: usize,
    /// Row-major, `codomain` rows of length `domain`.
    pub matrix: Vec<Vec<E>>,
}

impl<E: Clone> LinearMap<E> {
    pub fn zero<F: Field<Elem = E>>(field: &F, domain: usize, codomain: usize) -> Self {
        LinearMap {
            domain,
            codomain,
            matrix: vec![vec![field.zero(); domain]; codomain],
        }
    }

    /// Builds the map whose `j`-th column is `columns[j]`.
    pub fn from_columns<F: Field<Elem = E>>(
        field: &F,
        codomain: usize,
        columns: &[Vec<E>],
    ) -> Self {
        let mut map = Self::zero(field, columns.len(), codomain);
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                map.matrix[i][j] = x.clone();
            }
        }
        map
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        self.matrix.iter().map(|row| row[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<E>> {
        (0..self.domain).map(|j| self.column(j)).collect()
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        if self.domain == 0 || self.codomain == 0 {
            return 0;
        }
        field.rank(&self.matrix)
    }

    pub fn apply<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Result<Vec<E>, Error> {
        if v.len() != self.domain {
            return Err(Error::DimensionMismatch {
                expected: self.domain,
                found: v.len(),
            });
        }
        Ok(self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(field.zero(), |acc, (a, b)| field.mul_add(&acc, a, b))
            })
            .collect())
    }

    /// `self ∘ inner`.
    pub fn compose<F: Field<Elem = E>>(&self, field: &F, inner: &Self) -> Result<Self, Error> {
        if inner.codomain != self.domain {
            return Err(Error::DimensionMismatch {
                expected: self.domain,
                found: inner.codomain,
            });
        }
        let columns = inner
            .columns()
            .iter()
            .map(|c| self.apply(field, c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_columns(field, self.codomain, &columns))
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.matrix.iter().flatten().all(|x| field.is_zero(x))
    }
}
