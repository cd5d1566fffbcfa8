use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::kernel::table::{complete_table, default_labels, BasisVector, BracketTable, SparseBracket};
use crate::kernel::{Parity, SuperDim};
use crate::linalg;

/// A finite-dimensional Lie superalgebra given by structure constants.
///
/// The basis is ordered canonically: even vectors first, then odd ones.
/// Values are immutable; every operation returns new data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Superalgebra<F: Field> {
    field: F,
    dims: SuperDim,
    basis: Vec<BasisVector>,
    table: BracketTable<F::Elem>,
    name: Option<String>,
    /// Dense structure constants: `structure[(i * N + j) * N + k]` is the `b_k`
    /// coefficient of `[b_i, b_j]`.
    structure: Vec<F::Elem>,
}

/// A basis triple on which the graded Jacobi identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation<E> {
    pub triple: [usize; 3],
    /// `[x,[y,z]]`
    pub lhs: Vec<E>,
    /// `[[x,y],z] + (-1)^{|x||y|}[y,[x,z]]`
    pub rhs: Vec<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport<E> {
    pub violations: Vec<JacobiViolation<E>>,
}

impl<E> ValidationReport<E> {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<F: Field> Superalgebra<F> {
    /// Builds a superalgebra from a canonical table without checking Jacobi.
    pub fn new(field: F, table: BracketTable<F::Elem>, name: Option<String>) -> Self {
        let dims = table.dims();
        let n = dims.total();
        let mut structure = vec![field.zero(); n * n * n];
        for (&(i, j), v) in table.entries() {
            let mirror_negated = !Parity::koszul_negative(dims.parity_of(i), dims.parity_of(j));
            for (k, x) in v.iter().enumerate() {
                structure[(i * n + j) * n + k] = x.clone();
                structure[(j * n + i) * n + k] = if mirror_negated {
                    field.neg(x)
                } else {
                    x.clone()
                };
            }
        }
        let basis = default_labels(dims)
            .into_iter()
            .enumerate()
            .map(|(index, label)| BasisVector {
                index,
                parity: dims.parity_of(index),
                label,
            })
            .collect();
        Superalgebra {
            field,
            dims,
            basis,
            table,
            name,
            structure,
        }
    }

    /// Completes a sparse bracket list and checks the graded Jacobi identity.
    pub fn from_brackets(
        field: F,
        dims: SuperDim,
        brackets: &[SparseBracket<F::Elem>],
        name: Option<String>,
    ) -> Result<Self, Error> {
        let table = complete_table(&field, dims, brackets)?;
        let algebra = Self::new(field, table, name);
        let report = algebra.validate();
        if report.is_ok() {
            Ok(algebra)
        } else {
            Err(Error::JacobiViolated(report.violations.len()))
        }
    }

    pub fn abelian(field: F, dims: SuperDim) -> Self {
        let table = complete_table(&field, dims, &[]).expect("empty table is valid");
        Self::new(field, table, None)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, Error> {
        let unique: BTreeSet<&String> = labels.iter().collect();
        if labels.len() != self.dim() || unique.len() != labels.len() {
            return Err(Error::BadLabels);
        }
        for (b, l) in self.basis.iter_mut().zip(labels) {
            b.label = l;
        }
        Ok(self)
    }

    pub fn with_name(mut self, name: Option<String>) -> Self {
        self.name = name;
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dims(&self) -> SuperDim {
        self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.total()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis.iter().map(|b| b.label.clone()).collect()
    }

    pub fn table(&self) -> &BracketTable<F::Elem> {
        &self.table
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    pub fn unit(&self, k: usize) -> Vec<F::Elem> {
        let f = &self.field;
        (0..self.dim())
            .map(|i| if i == k { f.one() } else { f.zero() })
            .collect()
    }

    /// `[b_i, b_j]` in coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[F::Elem] {
        let n = self.dim();
        &self.structure[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Bilinear, super-skew extension of the table.
    pub fn bracket(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<Vec<F::Elem>, Error> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        let f = &self.field;
        let mut out = vec![f.zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, a)| !f.is_zero(a)) {
            for (j, yj) in y.iter().enumerate().filter(|(_, a)| !f.is_zero(a)) {
                let c = f.mul(xi, yj);
                for (o, s) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    *o = f.mul_add(o, &c, s);
                }
            }
        }
        Ok(out)
    }

    /// `[b_i, v]` for a coordinate vector `v`.
    fn bracket_with_basis(&self, i: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (k, c) in v.iter().enumerate().filter(|(_, a)| !f.is_zero(a)) {
            for (o, s) in out.iter_mut().zip(self.bracket_basis(i, k)) {
                *o = f.mul_add(o, c, s);
            }
        }
        out
    }

    /// `[v, b_j]` for a coordinate vector `v`.
    fn bracket_basis_right(&self, v: &[F::Elem], j: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (k, c) in v.iter().enumerate().filter(|(_, a)| !f.is_zero(a)) {
            for (o, s) in out.iter_mut().zip(self.bracket_basis(k, j)) {
                *o = f.mul_add(o, c, s);
            }
        }
        out
    }

    /// Checks `[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]` on every basis triple.
    pub fn validate(&self) -> ValidationReport<F::Elem> {
        let f = &self.field;
        let n = self.dim();
        let mut violations = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let xy = self.bracket_basis(x, y).to_vec();
                let negative = Parity::koszul_negative(self.dims.parity_of(x), self.dims.parity_of(y));
                for z in 0..n {
                    let lhs = self.bracket_with_basis(x, self.bracket_basis(y, z));
                    let first = self.bracket_basis_right(&xy, z);
                    let second = self.bracket_with_basis(y, self.bracket_basis(x, z));
                    let rhs: Vec<F::Elem> = first
                        .iter()
                        .zip(&second)
                        .map(|(a, b)| if negative { f.sub(a, b) } else { f.add(a, b) })
                        .collect();
                    if lhs != rhs {
                        violations.push(JacobiViolation {
                            triple: [x, y, z],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// Block-diagonal direct sum. Basis: evens of `self`, evens of `other`, odds of
    /// `self`, odds of `other`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, Error> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (a, b) = (self.dims, other.dims);
        let dims = SuperDim::new(a.even + b.even, a.odd + b.odd);
        let left = |i: usize| if i < a.even { i } else { i + b.even };
        let right = |i: usize| {
            if i < b.even {
                a.even + i
            } else {
                a.total() + i
            }
        };
        let f = &self.field;
        let mut partial = Vec::new();
        for (alg, map) in [(self, &left as &dyn Fn(usize) -> usize), (other, &right)] {
            for (&(i, j), v) in alg.table.entries() {
                let mut w = vec![f.zero(); dims.total()];
                for (k, x) in v.iter().enumerate() {
                    w[map(k)] = x.clone();
                }
                partial.push(((map(i), map(j)), w));
            }
        }
        let table = complete_table(f, dims, &partial)?;
        let mut labels = vec![String::new(); dims.total()];
        for (i, bv) in self.basis.iter().enumerate() {
            labels[left(i)] = bv.label.clone();
        }
        for (i, bv) in other.basis.iter().enumerate() {
            labels[right(i)] = bv.label.clone();
        }
        let sum = Self::new(f.clone(), table, None);
        Ok(match sum.clone().with_labels(labels) {
            Ok(labelled) => labelled,
            Err(_) => sum,
        })
    }

    /// Re-expresses the table in the basis whose `i`-th vector is row `i` of
    /// `change` (old coordinates). Rows must be homogeneous of the parity of `i`.
    pub fn change_basis(&self, change: &[Vec<F::Elem>]) -> Result<Self, Error> {
        let n = self.dim();
        let f = &self.field;
        if change.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: change.len(),
            });
        }
        for (i, row) in change.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            let wrong = self.dims.block(self.dims.parity_of(i) + Parity::Odd);
            if row[wrong].iter().any(|x| !f.is_zero(x)) {
                return Err(Error::NotGraded);
            }
        }
        let inverse = linalg::invert(f, change).ok_or(Error::SingularChangeOfBasis)?;
        let mut partial = Vec::new();
        for i in 0..n {
            for j in i..n {
                let old = self.bracket(&change[i], &change[j])?;
                // new coordinates: old · P⁻¹
                let new: Vec<F::Elem> = (0..n)
                    .map(|l| {
                        old.iter()
                            .zip(&inverse)
                            .fold(f.zero(), |acc, (v, row)| f.mul_add(&acc, v, &row[l]))
                    })
                    .collect();
                partial.push(((i, j), new));
            }
        }
        let table = complete_table(f, self.dims, &partial)?;
        Ok(Self::new(f.clone(), table, self.name.clone()))
    }
}
