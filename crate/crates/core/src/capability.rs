//! Capability: the epicenter `Z*(L)` computed from the tail extension, the
//! monomorphism criterion on central lines, and the γ invariant.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::catalog;
use crate::claims::{Claim, Finding};
use crate::error::Error;
use crate::field::Field;
use crate::homology::{multiplier_dimension, multiplier_unchecked, tail_quotient};
use crate::kernel::{GradedSubspace, Parity, SuperDim, Superalgebra};
use crate::linalg;

/// Verdicts for one central line `K = ⟨z⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateVerdict<E> {
    pub generator: Vec<E>,
    pub parity: Parity,
    /// `dim M(L) = dim M(L/K) − dim(K ∩ L²)`.
    pub mono: bool,
    pub in_epicenter: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpicenterReport<E> {
    pub epicenter: GradedSubspace<E>,
    pub capable: bool,
    pub per_generator: Vec<CandidateVerdict<E>>,
}

fn check_line<F: Field>(l: &Superalgebra<F>, k: &GradedSubspace<F::Elem>) -> Result<(), Error> {
    if k.parent_dims() != l.dims() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: k.parent_dims().total(),
        });
    }
    if k.dim() != 1 {
        return Err(Error::WrongDimension {
            expected: 1,
            found: k.dim(),
        });
    }
    if !l.is_central(k)? {
        return Err(Error::NotCentral);
    }
    Ok(())
}

fn mono_with_known_multiplier<F: Field>(
    l: &Superalgebra<F>,
    k: &GradedSubspace<F::Elem>,
    dim_multiplier: usize,
) -> Result<bool, Error> {
    let (h, _) = l.quotient(k)?;
    let quotient_multiplier = multiplier_unchecked(&h).dim_multiplier;
    let overlap = k.intersection(l.field(), &l.derived()).dim();
    Ok(dim_multiplier + overlap == quotient_multiplier)
}

/// For a graded central line `K`: whether `M(L) → M(L/K)` is injective, tested
/// through `dim M(L) = dim M(L/K) − dim(K ∩ L²)`. `true` means `K ⊆ Z*(L)`.
pub fn mono_criterion<F: Field>(
    l: &Superalgebra<F>,
    k: &GradedSubspace<F::Elem>,
) -> Result<bool, Error> {
    check_line(l, k)?;
    let m = multiplier_dimension(l)?.dim_multiplier;
    mono_with_known_multiplier(l, k, m)
}

/// Elements `x ∈ Z(L)` whose lift is central in the tail extension, i.e.
/// `Σᵢ xᵢ s(i,j)` vanishes modulo the Jacobi relations for every `j`.
pub fn exterior_center<F: Field>(l: &Superalgebra<F>) -> Result<GradedSubspace<F::Elem>, Error> {
    if !l.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let f = l.field();
    let n = l.dim();
    let tq = tail_quotient(l);
    let width = tq.survivors.len();
    let mut solutions = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let block: Vec<usize> = l.dims().block(parity).collect();
        if block.is_empty() {
            continue;
        }
        let mut rows = Vec::with_capacity(n * width);
        for j in 0..n {
            for q in 0..width {
                rows.push(
                    block
                        .iter()
                        .map(|&i| match tq.pairs.locate(i, j) {
                            Some((p, negate)) => {
                                let c = &tq.classes[p][q];
                                if negate {
                                    f.neg(c)
                                } else {
                                    c.clone()
                                }
                            }
                            None => f.zero(),
                        })
                        .collect(),
                );
            }
        }
        for sol in linalg::nullspace(f, &rows, block.len()) {
            let mut x = alloc::vec![f.zero(); n];
            for (&i, v) in block.iter().zip(sol) {
                x[i] = v;
            }
            solutions.push(x);
        }
    }
    let lifted = GradedSubspace::span(f, l.dims(), &solutions)?;
    Ok(lifted.intersection(f, &l.center()))
}

/// The epicenter, double-checked against the monomorphism criterion on every
/// line spanned by a reduced center basis vector. Disagreement is an error.
pub fn epicenter<F: Field>(l: &Superalgebra<F>) -> Result<EpicenterReport<F::Elem>, Error> {
    let epicenter = exterior_center(l)?;
    let f = l.field();
    let m = multiplier_unchecked(l).dim_multiplier;
    let center = l.center();
    let mut per_generator = Vec::new();
    for (generator, z) in center.basis().enumerate() {
        let k = GradedSubspace::span(f, l.dims(), core::slice::from_ref(z))?;
        let mono = mono_with_known_multiplier(l, &k, m)?;
        let in_epicenter = epicenter.contains(f, z);
        if mono != in_epicenter {
            return Err(Error::CapabilityCrossCheck {
                generator,
                member: in_epicenter,
                mono,
            });
        }
        let parity = if generator < center.even_basis().len() {
            Parity::Even
        } else {
            Parity::Odd
        };
        per_generator.push(CandidateVerdict {
            generator: z.clone(),
            parity,
            mono,
            in_epicenter,
        });
    }
    Ok(EpicenterReport {
        capable: epicenter.is_zero(),
        epicenter,
        per_generator,
    })
}

/// Invariants used to recognise the algebras of the γ = 2 list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub dims: SuperDim,
    pub derived: SuperDim,
    pub center: SuperDim,
    pub dim_multiplier: usize,
    pub gamma: Option<i64>,
}

pub fn fingerprint<F: Field>(l: &Superalgebra<F>) -> Result<Fingerprint, Error> {
    let report = multiplier_dimension(l)?;
    Ok(Fingerprint {
        dims: l.dims(),
        derived: l.derived().superdim(),
        center: l.center().superdim(),
        dim_multiplier: report.dim_multiplier,
        gamma: report.gamma,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVerdict {
    /// Defined only in scope.
    pub gamma: Option<i64>,
    pub in_scope: bool,
    pub dim_multiplier: usize,
    /// Name of the γ = 2 list entry with the same fingerprint, when γ = 2.
    pub class_match: Option<&'static str>,
}

pub fn gamma<F: Field>(l: &Superalgebra<F>) -> Result<GammaVerdict, Error> {
    let print = fingerprint(l)?;
    let mut class_match = None;
    if print.gamma == Some(2) {
        for name in catalog::names(Some(catalog::GAMMA_TWO_TAG)) {
            let candidate = catalog::get(name, l.field().clone())?;
            if fingerprint(&candidate)? == print {
                class_match = Some(name);
                break;
            }
        }
    }
    Ok(GammaVerdict {
        gamma: print.gamma,
        in_scope: print.gamma.is_some(),
        dim_multiplier: print.dim_multiplier,
        class_match,
    })
}

#[derive(Clone, Debug)]
pub struct LowGammaReport<F: Field> {
    pub checked: usize,
    /// Instance index and reason.
    pub skipped: Vec<(usize, String)>,
    pub findings: Vec<Finding<F>>,
}

/// Scans for in-scope instances with γ ∈ {0, 1}. Such instances are findings
/// against the published classification, not internal errors.
pub fn verify_no_low_gamma<F: Field>(instances: &[Superalgebra<F>]) -> LowGammaReport<F> {
    let mut report = LowGammaReport {
        checked: 0,
        skipped: Vec::new(),
        findings: Vec::new(),
    };
    for (index, l) in instances.iter().enumerate() {
        let verdict = match gamma(l) {
            Ok(v) => v,
            Err(e) => {
                report.skipped.push((index, format!("{e}")));
                continue;
            }
        };
        let Some(g) = verdict.gamma else {
            report
                .skipped
                .push((index, String::from("out of scope: dim L² ≠ m+n−2, m+n < 4 or n = 0")));
            continue;
        };
        report.checked += 1;
        if g < 2 {
            report.findings.push(Finding {
                instance: l.clone(),
                claim: Claim::LowGamma,
                expected: String::from(">= 2"),
                observed: g,
                sample: Some(index),
                detail: None,
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn line<F: Field>(l: &Superalgebra<F>, k: usize) -> GradedSubspace<F::Elem> {
        GradedSubspace::span(l.field(), l.dims(), &[l.unit(k)]).unwrap()
    }

    #[test]
    fn mono_criterion_on_abelian_algebras() {
        let q = Rationals;
        let a2 = Superalgebra::abelian(q, SuperDim::new(2, 0));
        assert!(!mono_criterion(&a2, &line(&a2, 1)).unwrap());
        let a1 = Superalgebra::abelian(q, SuperDim::new(1, 0));
        assert!(mono_criterion(&a1, &line(&a1, 0)).unwrap());
    }

    #[test]
    fn mono_criterion_errors() {
        let q = Rationals;
        let l = catalog::get("(2|2)_4", q).unwrap();
        assert_eq!(mono_criterion(&l, &line(&l, 3)), Err(Error::NotCentral));
        assert_eq!(
            mono_criterion(&l, &l.center()),
            Err(Error::WrongDimension { expected: 1, found: 2 })
        );
    }

    #[test]
    fn mono_criterion_matches_membership_on_2_2_4() {
        let q = Rationals;
        let l = catalog::get("(2|2)_4", q).unwrap();
        let k = line(&l, 0);
        let e = epicenter(&l).unwrap();
        assert_eq!(mono_criterion(&l, &k).unwrap(), e.epicenter.contains(&q, &l.unit(0)));
        assert!(!mono_criterion(&l, &k).unwrap());
    }

    #[test]
    fn epicenters_of_abelian_algebras() {
        let f = PrimeField::new(5).unwrap();
        let a1 = Superalgebra::abelian(f, SuperDim::new(1, 0));
        let r = epicenter(&a1).unwrap();
        assert_eq!(r.epicenter, a1.whole());
        assert!(!r.capable);
        let a2 = Superalgebra::abelian(f, SuperDim::new(2, 0));
        let r = epicenter(&a2).unwrap();
        assert!(r.epicenter.is_zero() && r.capable);
        assert_eq!(r.per_generator.len(), 2);
        let o1 = Superalgebra::abelian(f, SuperDim::new(0, 1));
        assert!(epicenter(&o1).unwrap().capable);
    }

    #[test]
    fn heisenberg_is_capable() {
        let l = catalog::heisenberg3(Rationals);
        assert!(epicenter(&l).unwrap().capable);
    }

    #[test]
    fn gamma_examples() {
        let q = Rationals;
        let g = gamma(&catalog::get("(2|2)_4", q).unwrap()).unwrap();
        assert_eq!((g.gamma, g.class_match), (Some(2), Some("(2|2)_4")));
        let g = gamma(&catalog::get("(1|3)_1", q).unwrap()).unwrap();
        assert_eq!((g.gamma, g.class_match), (Some(2), Some("(1|3)_1")));
        let g = gamma(&catalog::get("(2|3)_22", q).unwrap()).unwrap();
        assert_eq!((g.gamma, g.class_match), (Some(3), None));
        let g = gamma(&Superalgebra::abelian(q, SuperDim::new(2, 2))).unwrap();
        assert!(!g.in_scope && g.gamma.is_none());
    }

    #[test]
    fn low_gamma_scan_skips_out_of_scope() {
        let q = Rationals;
        let instances = [
            Superalgebra::abelian(q, SuperDim::new(1, 1)),
            catalog::get("(2|2)_6", q).unwrap(),
        ];
        let r = verify_no_low_gamma(&instances);
        assert_eq!(r.checked, 1);
        assert_eq!(r.skipped.len(), 1);
        assert_eq!(r.skipped[0].0, 0);
        assert!(r.findings.is_empty());
    }
}
