use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::kernel::{Parity, SuperDim};
use crate::linalg;

/// A graded subspace `V = V₀ ⊕ V₁` of a superalgebra.
///
/// Each component is kept as the nonzero rows of its reduced row-echelon form
/// (full-length coordinate vectors), so two subspaces are equal exactly when
/// their representations are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace<E> {
    dims: SuperDim,
    even: Vec<Vec<E>>,
    odd: Vec<Vec<E>>,
}

fn pivot_of<F: Field>(field: &F, row: &[F::Elem]) -> usize {
    row.iter()
        .position(|x| !field.is_zero(x))
        .expect("rref rows are nonzero")
}

/// Parity of a nonzero vector, or `None` if it is zero; errors if inhomogeneous.
pub(crate) fn parity_of_vector<F: Field>(
    field: &F,
    dims: SuperDim,
    v: &[F::Elem],
) -> Result<Option<Parity>, Error> {
    let even = v[dims.block(Parity::Even)]
        .iter()
        .any(|x| !field.is_zero(x));
    let odd = v[dims.block(Parity::Odd)].iter().any(|x| !field.is_zero(x));
    match (even, odd) {
        (true, true) => Err(Error::NotGraded),
        (true, false) => Ok(Some(Parity::Even)),
        (false, true) => Ok(Some(Parity::Odd)),
        (false, false) => Ok(None),
    }
}

impl<E: Clone + PartialEq> GradedSubspace<E> {
    pub fn zero(dims: SuperDim) -> Self {
        GradedSubspace {
            dims,
            even: Vec::new(),
            odd: Vec::new(),
        }
    }

    pub fn whole<F: Field<Elem = E>>(field: &F, dims: SuperDim) -> Self {
        let n = dims.total();
        let unit = |k: usize| -> Vec<E> {
            (0..n)
                .map(|i| if i == k { field.one() } else { field.zero() })
                .collect()
        };
        GradedSubspace {
            dims,
            even: dims.block(Parity::Even).map(unit).collect(),
            odd: dims.block(Parity::Odd).map(unit).collect(),
        }
    }

    /// Span of homogeneous vectors. Inhomogeneous generators are rejected.
    pub fn span<F: Field<Elem = E>>(
        field: &F,
        dims: SuperDim,
        vectors: &[Vec<E>],
    ) -> Result<Self, Error> {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for v in vectors {
            if v.len() != dims.total() {
                return Err(Error::DimensionMismatch {
                    expected: dims.total(),
                    found: v.len(),
                });
            }
            match parity_of_vector(field, dims, v)? {
                Some(Parity::Even) => even.push(v.clone()),
                Some(Parity::Odd) => odd.push(v.clone()),
                None => {}
            }
        }
        Ok(GradedSubspace {
            dims,
            even: linalg::rref(field, &even).0,
            odd: linalg::rref(field, &odd).0,
        })
    }

    pub fn parent_dims(&self) -> SuperDim {
        self.dims
    }

    pub fn component(&self, parity: Parity) -> &[Vec<E>] {
        match parity {
            Parity::Even => &self.even,
            Parity::Odd => &self.odd,
        }
    }

    pub fn even_basis(&self) -> &[Vec<E>] {
        &self.even
    }

    pub fn odd_basis(&self) -> &[Vec<E>] {
        &self.odd
    }

    /// Even basis followed by odd basis.
    pub fn basis(&self) -> impl Iterator<Item = &Vec<E>> {
        self.even.iter().chain(self.odd.iter())
    }

    pub fn superdim(&self) -> SuperDim {
        SuperDim::new(self.even.len(), self.odd.len())
    }

    pub fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub(crate) fn pivots<F: Field<Elem = E>>(&self, field: &F, parity: Parity) -> Vec<usize> {
        self.component(parity)
            .iter()
            .map(|r| pivot_of(field, r))
            .collect()
    }

    /// Reduction of `v` modulo the subspace (zero iff `v` lies in it).
    pub fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        let mut out = v.to_vec();
        for parity in [Parity::Even, Parity::Odd] {
            let rows = self.component(parity);
            out = linalg::reduce(field, rows, &self.pivots(field, parity), &out);
        }
        out
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        v.len() == self.dims.total() && self.reduce(field, v).iter().all(|x| field.is_zero(x))
    }

    pub fn is_subspace_of<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> bool {
        self.basis().all(|v| other.contains(field, v))
    }

    pub fn sum<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let vectors: Vec<Vec<E>> = self.basis().chain(other.basis()).cloned().collect();
        Self::span(field, self.dims, &vectors).expect("homogeneous by construction")
    }

    pub fn intersection<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut vectors = Vec::new();
        for parity in [Parity::Even, Parity::Odd] {
            let mine = self.component(parity);
            if mine.is_empty() {
                continue;
            }
            // x = Σ α_k u_k lies in `other` iff Σ α_k reduce(u_k) = 0
            let reduced: Vec<Vec<E>> = mine.iter().map(|u| other.reduce(field, u)).collect();
            let n = self.dims.total();
            let rows: Vec<Vec<E>> = (0..n)
                .map(|c| reduced.iter().map(|r| r[c].clone()).collect())
                .collect();
            for alpha in linalg::nullspace(field, &rows, mine.len()) {
                let mut x = vec![field.zero(); n];
                for (a, u) in alpha.iter().zip(mine) {
                    for (xi, ui) in x.iter_mut().zip(u) {
                        *xi = field.mul_add(xi, a, ui);
                    }
                }
                vectors.push(x);
            }
        }
        Self::span(field, self.dims, &vectors).expect("homogeneous by construction")
    }
}
