//! Subspace-level structure: products, central series, center and quotients.

use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::kernel::table::complete_table;
use crate::kernel::{GradedSubspace, Parity, Superalgebra};
use crate::linalg::{self, LinearMap};

type Subspace<F> = GradedSubspace<<F as Field>::Elem>;

impl<F: Field> Superalgebra<F> {
    pub fn whole(&self) -> Subspace<F> {
        GradedSubspace::whole(self.field(), self.dims())
    }

    pub fn zero_subspace(&self) -> Subspace<F> {
        GradedSubspace::zero(self.dims())
    }

    /// Even or odd part of the whole algebra.
    pub fn component(&self, parity: Parity) -> Subspace<F> {
        let vectors: Vec<_> = self.dims().block(parity).map(|k| self.unit(k)).collect();
        GradedSubspace::span(self.field(), self.dims(), &vectors).expect("homogeneous")
    }

    fn check_parent(&self, s: &Subspace<F>) -> Result<(), Error> {
        if s.parent_dims() != self.dims() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.parent_dims().total(),
            });
        }
        Ok(())
    }

    /// `[A, B]`: the span of brackets of basis elements.
    pub fn product_subspace(&self, a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>, Error> {
        self.check_parent(a)?;
        self.check_parent(b)?;
        let mut vectors = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                vectors.push(self.bracket(x, y)?);
            }
        }
        GradedSubspace::span(self.field(), self.dims(), &vectors)
    }

    /// The derived subalgebra `L² = [L, L]`.
    pub fn derived(&self) -> Subspace<F> {
        let whole = self.whole();
        self.product_subspace(&whole, &whole)
            .expect("whole algebra is a valid operand")
    }

    /// `C⁰ = L`, `C^{i+1} = [L, C^i]`, stopping once two consecutive terms agree.
    /// The repeated term is not listed twice.
    pub fn lower_central_series(&self) -> Vec<Subspace<F>> {
        let whole = self.whole();
        iterate_series(whole.clone(), |c| {
            self.product_subspace(&whole, c).expect("same parent")
        })
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(GradedSubspace::is_zero)
    }

    /// The two component sequences `C^k(L₀) = [L₀, C^{k-1}(L₀)]` and
    /// `C^k(L₁) = [L₀, C^{k-1}(L₁)]`.
    pub fn component_series(&self) -> (Vec<Subspace<F>>, Vec<Subspace<F>>) {
        let even = self.component(Parity::Even);
        let odd = self.component(Parity::Odd);
        let act = |c: &Subspace<F>| self.product_subspace(&even, c).expect("same parent");
        (
            iterate_series(even.clone(), act),
            iterate_series(odd, act),
        )
    }

    pub fn nilpotent_by_components(&self) -> bool {
        let (even, odd) = self.component_series();
        even.last().is_some_and(GradedSubspace::is_zero)
            && odd.last().is_some_and(GradedSubspace::is_zero)
    }

    /// `Z(L)`: the joint kernel of all adjoint maps, solved separately per parity.
    pub fn center(&self) -> Subspace<F> {
        let f = self.field();
        let n = self.dim();
        let mut vectors = Vec::new();
        for parity in [Parity::Even, Parity::Odd] {
            let block: Vec<usize> = self.dims().block(parity).collect();
            if block.is_empty() {
                continue;
            }
            // one equation per (j, k): Σ_i x_i c^k_{ij} = 0
            let mut rows = Vec::with_capacity(n * n);
            for j in 0..n {
                for k in 0..n {
                    rows.push(
                        block
                            .iter()
                            .map(|&i| self.bracket_basis(i, j)[k].clone())
                            .collect(),
                    );
                }
            }
            for sol in linalg::nullspace(f, &rows, block.len()) {
                let mut x = Vec::with_capacity(n);
                x.resize(n, f.zero());
                for (&i, v) in block.iter().zip(sol) {
                    x[i] = v;
                }
                vectors.push(x);
            }
        }
        GradedSubspace::span(f, self.dims(), &vectors).expect("homogeneous")
    }

    pub fn is_ideal(&self, ideal: &Subspace<F>) -> Result<bool, Error> {
        let product = self.product_subspace(&self.whole(), ideal)?;
        Ok(product.is_subspace_of(self.field(), ideal))
    }

    pub fn is_central(&self, s: &Subspace<F>) -> Result<bool, Error> {
        self.check_parent(s)?;
        Ok(s.is_subspace_of(self.field(), &self.center()))
    }

    /// `L / I` on the complement basis of non-pivot basis vectors, with the
    /// projection `L → L/I`.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<(Self, LinearMap<F::Elem>), Error> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let f = self.field();
        let mut pivots = ideal.pivots(f, Parity::Even);
        pivots.extend(ideal.pivots(f, Parity::Odd));
        let kept: Vec<usize> = (0..self.dim()).filter(|i| !pivots.contains(i)).collect();
        let dims = crate::kernel::SuperDim::new(
            kept.iter().filter(|&&i| i < self.dims().even).count(),
            kept.iter().filter(|&&i| i >= self.dims().even).count(),
        );
        let project = |v: &[F::Elem]| -> Vec<F::Elem> {
            let r = ideal.reduce(f, v);
            kept.iter().map(|&i| r[i].clone()).collect()
        };
        let mut partial = Vec::new();
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate().skip(a) {
                partial.push(((a, b), project(self.bracket_basis(i, j))));
            }
        }
        let table = complete_table(f, dims, &partial)?;
        let labels = kept.iter().map(|&i| self.basis()[i].label.clone()).collect();
        let quotient = Self::new(f.clone(), table, None).with_labels(labels)?;
        let columns: Vec<Vec<F::Elem>> = (0..self.dim()).map(|k| project(&self.unit(k))).collect();
        let projection = LinearMap::from_columns(f, dims.total(), &columns);
        Ok((quotient, projection))
    }
}

fn iterate_series<E: Clone + PartialEq>(
    start: GradedSubspace<E>,
    mut step: impl FnMut(&GradedSubspace<E>) -> GradedSubspace<E>,
) -> Vec<GradedSubspace<E>> {
    let mut terms = alloc::vec![start];
    loop {
        let next = step(terms.last().expect("nonempty"));
        if Some(&next) == terms.last() {
            return terms;
        }
        terms.push(next);
    }
}
