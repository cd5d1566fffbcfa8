//! Schur multipliers through the degree-2 and degree-3 graded chain spaces.
//!
//! Every admissible basis pair `(i, j)` gets a central tail `s(i,j)`. The graded
//! Jacobi identity evaluated on basis triples of the tailed bracket
//! `[b_i, b_j] + s(i,j)` gives linear relations among the tails
//! ([`relations3`]); the tails that survive, minus those absorbed by a change of
//! variables (one per dimension of `L²`), span the multiplier:
//!
//! `dim M(L) = dim C₂ − dim L² − rank(relations)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::time::Duration;

use crate::error::Error;
use crate::field::Field;
use crate::kernel::{complete_table, GradedSubspace, Parity, SuperDim, Superalgebra};
use crate::linalg::{self, LinearMap};

/// Admissible pairs: `i < j` for two even indices, otherwise `i <= j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSpace {
    dims: SuperDim,
    pairs: Vec<(usize, usize)>,
    /// `lookup[a * N + b]` is the index of the canonical pair for `(a, b)`.
    lookup: Vec<Option<usize>>,
}

impl PairSpace {
    pub fn new(dims: SuperDim) -> Self {
        let n = dims.total();
        let mut pairs = Vec::new();
        let mut lookup = vec![None; n * n];
        for i in 0..n {
            for j in i..n {
                if i == j && dims.parity_of(i) == Parity::Even {
                    continue;
                }
                lookup[i * n + j] = Some(pairs.len());
                lookup[j * n + i] = Some(pairs.len());
                pairs.push((i, j));
            }
        }
        PairSpace {
            dims,
            pairs,
            lookup,
        }
    }

    /// `½((m+n)² + (n−m))`, the multiplier dimension of the abelian superalgebra.
    pub fn expected_dim(dims: SuperDim) -> usize {
        let total = dims.total();
        (total * total + dims.odd - dims.even) / 2
    }

    pub fn dims(&self) -> SuperDim {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn parity(&self, p: usize) -> Parity {
        let (i, j) = self.pairs[p];
        self.dims.parity_of(i) + self.dims.parity_of(j)
    }

    /// Index of the pair for `s(a,b)` and whether `s(a,b) = −s(canonical)`.
    pub fn locate(&self, a: usize, b: usize) -> Option<(usize, bool)> {
        let p = self.lookup[a * self.dims.total() + b]?;
        let negate = a > b && !Parity::koszul_negative(self.dims.parity_of(a), self.dims.parity_of(b));
        Some((p, negate))
    }
}

/// Basis triples `i <= j <= k` with no repeated even index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSpace {
    triples: Vec<[usize; 3]>,
}

impl TripleSpace {
    pub fn new(dims: SuperDim) -> Self {
        let n = dims.total();
        let even_repeat = |a: usize, b: usize| a == b && dims.parity_of(a) == Parity::Even;
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i..n {
                if even_repeat(i, j) {
                    continue;
                }
                for k in j..n {
                    if !even_repeat(j, k) {
                        triples.push([i, j, k]);
                    }
                }
            }
        }
        TripleSpace { triples }
    }

    /// `C(m,3) + C(m,2)·n + m·C(n+1,2) + C(n+2,3)`.
    pub fn expected_dim(dims: SuperDim) -> usize {
        let (m, n) = (dims.even, dims.odd);
        let choose = |a: usize, b: usize| -> usize {
            if b > a {
                return 0;
            }
            (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
        };
        choose(m, 3) + choose(m, 2) * n + m * choose(n + 1, 2) + choose(n + 2, 3)
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }
}

/// `s(i,j) ↦ [b_i, b_j]`; its rank is `dim L²`.
pub fn boundary2<F: Field>(l: &Superalgebra<F>) -> LinearMap<F::Elem> {
    let pairs = PairSpace::new(l.dims());
    let columns: Vec<Vec<F::Elem>> = pairs
        .pairs()
        .iter()
        .map(|&(i, j)| l.bracket_basis(i, j).to_vec())
        .collect();
    LinearMap::from_columns(l.field(), l.dim(), &columns)
}

/// Tail coefficients of the Jacobi defect on `(x, y, z)` in the tailed algebra:
/// `Σ c^k_{yz} s(x,k) − Σ c^k_{xy} s(k,z) − (−1)^{|x||y|} Σ c^k_{xz} s(y,k)`.
fn jacobi_tail<F: Field>(l: &Superalgebra<F>, pairs: &PairSpace, [x, y, z]: [usize; 3]) -> Vec<F::Elem> {
    let f = l.field();
    let dims = l.dims();
    let mut out = vec![f.zero(); pairs.len()];
    let mut add = |a: usize, b: usize, coeff: &F::Elem, negate: bool| {
        if f.is_zero(coeff) {
            return;
        }
        if let Some((p, flip)) = pairs.locate(a, b) {
            let c = if negate != flip { f.neg(coeff) } else { coeff.clone() };
            out[p] = f.add(&out[p], &c);
        }
    };
    let koszul = Parity::koszul_negative(dims.parity_of(x), dims.parity_of(y));
    for k in 0..l.dim() {
        add(x, k, &l.bracket_basis(y, z)[k], false);
        add(k, z, &l.bracket_basis(x, y)[k], true);
        add(y, k, &l.bracket_basis(x, z)[k], !koszul);
    }
    out
}

/// The Jacobi relation map `TripleSpace → PairSpace`.
pub fn relations3<F: Field>(l: &Superalgebra<F>) -> LinearMap<F::Elem> {
    let pairs = PairSpace::new(l.dims());
    let triples = TripleSpace::new(l.dims());
    let columns: Vec<Vec<F::Elem>> = triples
        .triples()
        .iter()
        .map(|&t| jacobi_tail(l, &pairs, t))
        .collect();
    LinearMap::from_columns(l.field(), pairs.len(), &columns)
}

/// Whether `γ(L)` is defined: `dim L² = m+n−2`, `m+n >= 4`, `n >= 1`.
pub fn in_gamma_scope(dims: SuperDim, dim_derived: usize) -> bool {
    let total = dims.total();
    total >= 4 && dims.odd >= 1 && dim_derived + 2 == total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierReport {
    pub dims: SuperDim,
    pub dim_c2: usize,
    pub dim_derived: usize,
    pub rank_relations: usize,
    pub dim_multiplier: usize,
    /// `m + 2n − 2 − dim M(L)`, only inside the scope of [`in_gamma_scope`].
    pub gamma: Option<i64>,
    /// Filled in by callers that measure wall time.
    pub timing: Option<Duration>,
}

pub fn multiplier_dimension<F: Field>(l: &Superalgebra<F>) -> Result<MultiplierReport, Error> {
    if !l.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    Ok(multiplier_unchecked(l))
}

/// Multiplier arithmetic without the nilpotency gate (callers already know).
pub(crate) fn multiplier_unchecked<F: Field>(l: &Superalgebra<F>) -> MultiplierReport {
    let f = l.field();
    let dims = l.dims();
    let dim_c2 = PairSpace::expected_dim(dims);
    let dim_derived = boundary2(l).rank(f);
    let rank_relations = relations3(l).rank(f);
    let dim_multiplier = dim_c2 - dim_derived - rank_relations;
    let gamma = in_gamma_scope(dims, dim_derived)
        .then(|| (dims.even + 2 * dims.odd) as i64 - 2 - dim_multiplier as i64);
    MultiplierReport {
        dims,
        dim_c2,
        dim_derived,
        rank_relations,
        dim_multiplier,
        gamma,
        timing: None,
    }
}

/// Pair space modulo the Jacobi relations.
pub(crate) struct TailQuotient<E> {
    pub pairs: PairSpace,
    /// Pair indices forming a basis of the quotient (the surviving tails).
    pub survivors: Vec<usize>,
    /// For each pair, its class expressed in the survivor basis.
    pub classes: Vec<Vec<E>>,
}

pub(crate) fn tail_quotient<F: Field>(l: &Superalgebra<F>) -> TailQuotient<F::Elem> {
    let f = l.field();
    let pairs = PairSpace::new(l.dims());
    let relations = relations3(l).columns();
    let (rows, pivots) = linalg::rref(f, &relations);
    let survivors: Vec<usize> = (0..pairs.len()).filter(|p| !pivots.contains(p)).collect();
    let classes = (0..pairs.len())
        .map(|p| {
            let unit: Vec<F::Elem> = (0..pairs.len())
                .map(|q| if q == p { f.one() } else { f.zero() })
                .collect();
            let reduced = linalg::reduce(f, &rows, &pivots, &unit);
            survivors.iter().map(|&q| reduced[q].clone()).collect()
        })
        .collect();
    TailQuotient {
        pairs,
        survivors,
        classes,
    }
}

/// The central extension of `L` by the surviving tails.
#[derive(Clone, Debug)]
pub struct TailExtension<F: Field> {
    pub extension: Superalgebra<F>,
    /// The tails, as a central graded subspace of the extension.
    pub kernel: GradedSubspace<F::Elem>,
    /// `E → L`.
    pub projection: LinearMap<F::Elem>,
    /// Index in the extension of each basis vector of `L`.
    pub embedding: Vec<usize>,
    /// The canonical pair behind each tail, in extension order.
    pub tail_pairs: Vec<(usize, usize)>,
}

impl<F: Field> TailExtension<F> {
    /// `E² ∩ W`, a copy of the multiplier.
    pub fn multiplier_copy(&self) -> GradedSubspace<F::Elem> {
        self.extension
            .derived()
            .intersection(self.extension.field(), &self.kernel)
    }
}

fn tail_prefix(labels: &[String]) -> String {
    let clashes = |prefix: &str| {
        labels.iter().any(|l| {
            l.strip_prefix(prefix)
                .is_some_and(|rest| !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()))
        })
    };
    let mut prefix = String::from("s");
    for candidate in ["s", "t", "u", "w", "z"] {
        if !clashes(candidate) {
            return String::from(candidate);
        }
    }
    while clashes(&prefix) {
        prefix.push('_');
    }
    prefix
}

pub fn tail_extension<F: Field>(l: &Superalgebra<F>) -> Result<TailExtension<F>, Error> {
    if !l.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let f = l.field();
    let dims = l.dims();
    let tq = tail_quotient(l);
    let (even_tails, odd_tails): (Vec<usize>, Vec<usize>) = (0..tq.survivors.len())
        .partition(|&t| tq.pairs.parity(tq.survivors[t]) == Parity::Even);
    let w0 = even_tails.len();
    let edims = SuperDim::new(dims.even + w0, dims.odd + odd_tails.len());

    let embedding: Vec<usize> = (0..l.dim())
        .map(|i| if i < dims.even { i } else { i + w0 })
        .collect();
    // position in E of survivor number t
    let mut tail_index = vec![0; tq.survivors.len()];
    for (k, &t) in even_tails.iter().enumerate() {
        tail_index[t] = dims.even + k;
    }
    for (k, &t) in odd_tails.iter().enumerate() {
        tail_index[t] = edims.even + dims.odd + k;
    }

    let mut partial = Vec::new();
    for (p, &(i, j)) in tq.pairs.pairs().iter().enumerate() {
        let mut v = vec![f.zero(); edims.total()];
        for (k, c) in l.bracket_basis(i, j).iter().enumerate() {
            v[embedding[k]] = c.clone();
        }
        for (t, c) in tq.classes[p].iter().enumerate() {
            v[tail_index[t]] = c.clone();
        }
        partial.push(((embedding[i], embedding[j]), v));
    }
    let table = complete_table(f, edims, &partial)?;

    let mut labels = vec![String::new(); edims.total()];
    for (i, b) in l.basis().iter().enumerate() {
        labels[embedding[i]] = b.label.clone();
    }
    let prefix = tail_prefix(&l.labels());
    let mut tail_pairs = vec![(0, 0); tq.survivors.len()];
    for (t, &pos) in tail_index.iter().enumerate() {
        labels[pos] = format!("{prefix}{}", pos - embedding.iter().filter(|&&e| e < pos).count() + 1);
        tail_pairs[t] = tq.pairs.pairs()[tq.survivors[t]];
    }
    let mut ordered_pairs: Vec<(usize, (usize, usize))> = tail_index
        .iter()
        .zip(&tail_pairs)
        .map(|(&pos, &pair)| (pos, pair))
        .collect();
    ordered_pairs.sort_unstable();

    let name = l.name().map(|n| format!("tail extension of {n}"));
    let extension = Superalgebra::new(f.clone(), table, name).with_labels(labels)?;
    let tails: Vec<Vec<F::Elem>> = tail_index.iter().map(|&pos| extension.unit(pos)).collect();
    let kernel = GradedSubspace::span(f, edims, &tails)?;
    let columns: Vec<Vec<F::Elem>> = (0..edims.total())
        .map(|e| match embedding.iter().position(|&x| x == e) {
            Some(i) => l.unit(i),
            None => vec![f.zero(); l.dim()],
        })
        .collect();
    let projection = LinearMap::from_columns(f, l.dim(), &columns);
    Ok(TailExtension {
        extension,
        kernel,
        projection,
        embedding,
        tail_pairs: ordered_pairs.into_iter().map(|(_, p)| p).collect(),
    })
}
