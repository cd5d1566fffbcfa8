use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use superschur_core::capability::{epicenter, mono_criterion};
use superschur_core::homology::{boundary2, multiplier_dimension, relations3, tail_extension};
use superschur_core::linalg::{self, rank_by_elimination};
use superschur_core::verifier::{graded_lines, sample, ScanConfig};
use superschur_core::{catalog, Field, GradedSubspace, Parity, PrimeField, Rationals, SuperDim, Superalgebra};

fn f5() -> PrimeField {
    PrimeField::new(5).unwrap()
}

fn generated<F: Field>(field: F, seed: u64, index: usize) -> Superalgebra<F> {
    let config = ScanConfig {
        field,
        max_dims: SuperDim::new(3, 3),
        samples: index + 1,
        seed,
        depth: 3,
    };
    sample(&config, index).unwrap()
}

/// `dim M` from the Jacobi expansion of every ordered basis triple, with its
/// own pair bookkeeping.
fn oracle_multiplier<F: Field>(l: &Superalgebra<F>) -> usize {
    let f = l.field();
    let dims = l.dims();
    let n = l.dim();
    let odd = |i: usize| i >= dims.even;
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            if i != j || odd(i) {
                let k = index.len();
                index.insert((i, j), k);
            }
        }
    }
    // s(a,b) as a signed coordinate
    let s = |a: usize, b: usize| -> Option<(usize, bool)> {
        if a <= b {
            index.get(&(a, b)).map(|&k| (k, false))
        } else {
            let sign_flip = !(odd(a) && odd(b));
            index.get(&(b, a)).map(|&k| (k, sign_flip))
        }
    };
    let width = index.len();
    let mut columns = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut col = vec![f.zero(); width];
                let mut add = |a: usize, b: usize, c: &F::Elem| {
                    if let Some((k, neg)) = s(a, b) {
                        let c = if neg { f.neg(c) } else { c.clone() };
                        col[k] = f.add(&col[k], &c);
                    }
                };
                let koszul = if odd(x) && odd(y) { f.one() } else { f.neg(&f.one()) };
                for (k, c) in l.bracket_basis(y, z).iter().enumerate() {
                    add(x, k, c);
                }
                for (k, c) in l.bracket_basis(x, y).iter().enumerate() {
                    add(k, z, &f.neg(c));
                }
                // −(−1)^{|x||y|} s(y,[x,z])
                for (k, c) in l.bracket_basis(x, z).iter().enumerate() {
                    add(y, k, &f.mul(&koszul, c));
                }
                columns.push(col);
            }
        }
    }
    width - l.derived().dim() - f.rank(&columns)
}

fn parity_sign(a: Parity, b: Parity) -> bool {
    Parity::koszul_negative(a, b)
}

fn check_identities<F: Field>(l: &Superalgebra<F>, rng_seed: u64) {
    let f = l.field();
    let dims = l.dims();
    for a in 0..l.dim() {
        for b in 0..l.dim() {
            let ab = l.bracket(&l.unit(a), &l.unit(b)).unwrap();
            let ba = l.bracket(&l.unit(b), &l.unit(a)).unwrap();
            let expected: Vec<_> = if parity_sign(dims.parity_of(a), dims.parity_of(b)) {
                ab.clone()
            } else {
                ab.iter().map(|x| f.neg(x)).collect()
            };
            assert_eq!(ba, expected, "super-skew symmetry on ({a},{b})");
            let target = dims.parity_of(a) + dims.parity_of(b);
            for (k, x) in ab.iter().enumerate() {
                assert!(f.is_zero(x) || dims.parity_of(k) == target, "grading on ({a},{b})");
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    for _ in 0..4 {
        let mut x = vec![f.zero(); l.dim()];
        for i in dims.block(Parity::Odd) {
            x[i] = f.random(&mut rng);
        }
        let xx = l.bracket(&x, &x).unwrap();
        let cube = l.bracket(&x, &xx).unwrap();
        assert!(cube.iter().all(|c| f.is_zero(c)), "[x,[x,x]] = 0 for odd x");
    }
}

fn check_tail_extension<F: Field>(l: &Superalgebra<F>) {
    let f = l.field();
    let te = tail_extension(l).unwrap();
    let e = &te.extension;
    assert!(e.validate().is_ok());
    assert!(e.is_central(&te.kernel).unwrap());
    let (q, _) = e.quotient(&te.kernel).unwrap();
    assert_eq!(q.dims(), l.dims());
    assert_eq!(q.table(), l.table());
    let m = multiplier_dimension(l).unwrap();
    assert_eq!(e.derived().dim(), m.dim_derived + m.dim_multiplier);
    assert_eq!(te.multiplier_copy().dim(), m.dim_multiplier);
    assert!(te.projection.rank(f) == l.dim());
}

fn random_graded_change<F: Field>(field: &F, dims: SuperDim, seed: u64) -> Vec<Vec<F::Elem>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = dims.total();
    loop {
        let mut rows = vec![vec![field.zero(); n]; n];
        for parity in [Parity::Even, Parity::Odd] {
            for i in dims.block(parity) {
                for j in dims.block(parity) {
                    rows[i][j] = field.random(&mut rng);
                }
            }
        }
        if linalg::invert(field, &rows).is_some() {
            return rows;
        }
    }
}

fn permutation_change<F: Field>(field: &F, dims: SuperDim, seed: u64) -> Vec<Vec<F::Elem>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = dims.total();
    let mut order: Vec<usize> = (0..n).collect();
    for parity in [Parity::Even, Parity::Odd] {
        let block: Vec<usize> = dims.block(parity).collect();
        let mut shuffled = block.clone();
        rand::seq::SliceRandom::shuffle(shuffled.as_mut_slice(), &mut rng);
        for (i, j) in block.into_iter().zip(shuffled) {
            order[i] = j;
        }
    }
    (0..n)
        .map(|i| (0..n).map(|j| if order[i] == j { field.one() } else { field.zero() }).collect())
        .collect()
}

fn catalog_algebras() -> Vec<Superalgebra<Rationals>> {
    catalog::names(None)
        .into_iter()
        .map(|n| catalog::get(n, Rationals).unwrap())
        .collect()
}

#[test]
fn catalog_matches_the_triple_oracle() {
    for l in catalog_algebras() {
        assert_eq!(
            multiplier_dimension(&l).unwrap().dim_multiplier,
            oracle_multiplier(&l),
            "{:?}",
            l.name()
        );
    }
}

#[test]
fn catalog_structural_identities() {
    for (k, l) in catalog_algebras().iter().enumerate() {
        check_identities(l, k as u64);
        assert!(boundary2(l).compose(&Rationals, &relations3(l)).unwrap().is_zero(&Rationals));
        check_tail_extension(l);
        assert_eq!(l.nilpotent_by_components(), l.is_nilpotent());
    }
}

#[test]
fn non_nilpotent_component_series() {
    let q = Rationals;
    let l = Superalgebra::from_brackets(q, SuperDim::new(1, 1), &[((0, 1), vec![q.zero(), q.one()])], None).unwrap();
    assert!(!l.is_nilpotent());
    assert!(!l.nilpotent_by_components());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_instances_satisfy_the_identities(seed in any::<u64>(), index in 0usize..64) {
        let l = generated(f5(), seed, index);
        prop_assert!(l.validate().is_ok());
        prop_assert!(l.is_nilpotent());
        prop_assert_eq!(l.nilpotent_by_components(), true);
        check_identities(&l, seed ^ 7);
        prop_assert!(boundary2(&l).compose(l.field(), &relations3(&l)).unwrap().is_zero(l.field()));
    }

    #[test]
    fn canonical_triples_agree_with_all_ordered_triples(seed in any::<u64>(), index in 0usize..64) {
        let l = generated(f5(), seed, index);
        prop_assert_eq!(multiplier_dimension(&l).unwrap().dim_multiplier, oracle_multiplier(&l));
        let q = generated(Rationals, seed, index);
        prop_assert_eq!(multiplier_dimension(&q).unwrap().dim_multiplier, oracle_multiplier(&q));
    }

    #[test]
    fn bareiss_matches_elimination(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 5), 0..7)) {
        let q = Rationals;
        let as_q: Vec<Vec<_>> = rows.iter().map(|r| r.iter().map(|&x| q.from_int(x)).collect()).collect();
        let as_z: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let expected = rank_by_elimination(&q, &as_q);
        prop_assert_eq!(q.rank(&as_q), expected);
        prop_assert_eq!(linalg::bareiss_rank(as_z), expected);
    }

    #[test]
    fn tail_extension_invariants(seed in any::<u64>(), index in 0usize..64) {
        check_tail_extension(&generated(f5(), seed, index));
    }

    #[test]
    fn multiplier_is_basis_invariant(seed in any::<u64>(), index in 0usize..64) {
        let l = generated(f5(), seed, index);
        let f = f5();
        let m = multiplier_dimension(&l).unwrap().dim_multiplier;
        let changed = l.change_basis(&random_graded_change(&f, l.dims(), seed)).unwrap();
        prop_assert!(changed.validate().is_ok());
        prop_assert_eq!(multiplier_dimension(&changed).unwrap().dim_multiplier, m);
        let permuted = l.change_basis(&permutation_change(&f, l.dims(), seed)).unwrap();
        prop_assert_eq!(multiplier_dimension(&permuted).unwrap().dim_multiplier, m);
    }

    #[test]
    fn mono_criterion_matches_epicenter_membership(seed in any::<u64>(), index in 0usize..64) {
        let l = generated(f5(), seed, index);
        let f = f5();
        let ep = epicenter(&l).unwrap();
        for (_, z) in graded_lines(&f, &l.center()) {
            let k = GradedSubspace::span(&f, l.dims(), std::slice::from_ref(&z)).unwrap();
            prop_assert_eq!(mono_criterion(&l, &k).unwrap(), ep.epicenter.contains(&f, &z));
        }
    }

    #[test]
    fn central_quotients_stay_valid(seed in any::<u64>(), index in 0usize..64) {
        let l = generated(f5(), seed, index);
        let f = f5();
        for (_, z) in graded_lines(&f, &l.center()).into_iter().take(6) {
            let k = GradedSubspace::span(&f, l.dims(), std::slice::from_ref(&z)).unwrap();
            let (h, projection) = l.quotient(&k).unwrap();
            prop_assert!(h.validate().is_ok());
            prop_assert!(h.is_nilpotent());
            prop_assert_eq!(projection.rank(&f), l.dim() - 1);
        }
    }
}
