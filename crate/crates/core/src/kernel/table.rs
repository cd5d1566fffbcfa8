use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Range};

use crate::error::Error;
use crate::field::Field;

/// ℤ₂-degree of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^{|a||b|} = -1`.
    pub fn koszul_negative(a: Parity, b: Parity) -> bool {
        a.is_odd() && b.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Superdimension `(m|n)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub const fn new(even: usize, odd: usize) -> Self {
        SuperDim { even, odd }
    }

    pub fn total(&self) -> usize {
        self.even + self.odd
    }

    /// Canonical ordering: indices `0..m` are even, `m..m+n` odd.
    pub fn parity_of(&self, index: usize) -> Parity {
        if index < self.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn block(&self, parity: Parity) -> Range<usize> {
        match parity {
            Parity::Even => 0..self.even,
            Parity::Odd => self.even..self.total(),
        }
    }

    pub fn component(&self, parity: Parity) -> usize {
        match parity {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisVector {
    pub index: usize,
    pub parity: Parity,
    pub label: String,
}

pub(crate) fn default_labels(dims: SuperDim) -> Vec<String> {
    (1..=dims.even)
        .map(|i| format!("e{i}"))
        .chain((1..=dims.odd).map(|i| format!("f{i}")))
        .collect()
}

/// Canonical form of the basis pair `(a, b)`: `(i, j, negate)` with `i <= j`, so that
/// `[b_a, b_b] = ±[b_i, b_j]`. `None` for the even diagonal, which is identically zero.
pub fn canonical_pair(dims: SuperDim, a: usize, b: usize) -> Option<(usize, usize, bool)> {
    let (pa, pb) = (dims.parity_of(a), dims.parity_of(b));
    if a == b && pa == Parity::Even {
        return None;
    }
    if a <= b {
        Some((a, b, false))
    } else {
        // [y,x] = -(-1)^{|x||y|}[x,y]
        Some((b, a, !Parity::koszul_negative(pa, pb)))
    }
}

/// Sparse bracket table holding only nonzero canonical entries `(i, j)`, `i <= j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable<E> {
    dims: SuperDim,
    entries: BTreeMap<(usize, usize), Vec<E>>,
}

impl<E: Clone + PartialEq> BracketTable<E> {
    pub fn dims(&self) -> SuperDim {
        self.dims
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<E>)> {
        self.entries.iter()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Vec<E>> {
        self.entries.get(&(i, j))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The entries as a partial list, suitable for feeding back into [`complete_table`].
    pub fn to_partial(&self) -> Vec<((usize, usize), Vec<E>)> {
        self.entries
            .iter()
            .map(|(&k, v)| (k, v.clone()))
            .collect()
    }
}

/// One listed bracket `[b_a, b_b] = v`.
pub type SparseBracket<E> = ((usize, usize), Vec<E>);

/// Canonicalizes a sparse list of brackets `[b_a, b_b] = v` into a [`BracketTable`].
///
/// Pairs given in the order `a > b` are rewritten through super-skew symmetry.
/// Unlisted pairs are zero; duplicates must agree after canonicalization.
pub fn complete_table<F: Field>(
    field: &F,
    dims: SuperDim,
    partial: &[SparseBracket<F::Elem>],
) -> Result<BracketTable<F::Elem>, Error> {
    let n = dims.total();
    let mut seen: BTreeMap<(usize, usize), Vec<F::Elem>> = BTreeMap::new();
    for ((a, b), v) in partial {
        let (a, b) = (*a, *b);
        for index in [a, b] {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, dim: n });
            }
        }
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        let nonzero = v.iter().any(|x| !field.is_zero(x));
        let Some((i, j, negate)) = canonical_pair(dims, a, b) else {
            if nonzero {
                return Err(Error::EvenDiagonal(a));
            }
            continue;
        };
        let value: Vec<F::Elem> = if negate {
            v.iter().map(|x| field.neg(x)).collect()
        } else {
            v.clone()
        };
        let expected = dims.parity_of(i) + dims.parity_of(j);
        let outside = dims.block(expected + Parity::Odd);
        if value[outside].iter().any(|x| !field.is_zero(x)) {
            return Err(Error::GradingViolation { i, j, expected });
        }
        match seen.get(&(i, j)) {
            Some(prev) if *prev != value => return Err(Error::ConflictingEntry(i, j)),
            Some(_) => {}
            None => {
                seen.insert((i, j), value);
            }
        }
    }
    seen.retain(|_, v| v.iter().any(|x| !field.is_zero(x)));
    Ok(BracketTable {
        dims,
        entries: seen,
    })
}
