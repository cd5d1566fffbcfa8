//! Built-in presentations: the classified `(m|n)` superalgebras with
//! `dim L² = m+n−2`, `4 ≤ m+n ≤ 5`, a one-parameter-pair `(4|2)` family,
//! and standard fixtures.
//!
//! Brackets are transcribed verbatim, coefficients included. Bases are
//! `e1..em` (even) followed by `f1..fn` (odd).

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::Error;
use crate::field::Field;
use crate::kernel::{complete_table, SuperDim, Superalgebra, ValidationReport};

pub const TABLE_TAG: &str = "table1";
pub const GAMMA_TWO_TAG: &str = "gamma2-list";
pub const FIXTURE_TAG: &str = "fixture";

/// `[lhs.0, lhs.1] = Σ coeff · label`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub lhs: (&'static str, &'static str),
    pub rhs: &'static [(i64, &'static str)],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub dims: SuperDim,
    pub brackets: &'static [Bracket],
    /// Published multiplier dimension.
    pub expected_multiplier_dim: Option<usize>,
    pub tags: &'static [&'static str],
}

const fn b(lhs: (&'static str, &'static str), rhs: &'static [(i64, &'static str)]) -> Bracket {
    Bracket { lhs, rhs }
}

const TABLE: &[&str] = &[TABLE_TAG];
const TABLE_GAMMA: &[&str] = &[TABLE_TAG, GAMMA_TWO_TAG];

pub static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "(2|2)_1",
        dims: SuperDim::new(2, 2),
        brackets: &[b(("f1", "f1"), &[(1, "e1")]), b(("f2", "f2"), &[(1, "e2")])],
        expected_multiplier_dim: Some(1),
        tags: TABLE,
    },
    CatalogEntry {
        name: "(2|2)_4",
        dims: SuperDim::new(2, 2),
        brackets: &[b(("f1", "f2"), &[(1, "e1")]), b(("f2", "f2"), &[(1, "e2")])],
        expected_multiplier_dim: Some(2),
        tags: TABLE_GAMMA,
    },
    CatalogEntry {
        name: "(2|2)_6",
        dims: SuperDim::new(2, 2),
        brackets: &[b(("e2", "f2"), &[(1, "f1")]), b(("f2", "f2"), &[(1, "e1")])],
        expected_multiplier_dim: Some(2),
        tags: TABLE_GAMMA,
    },
    CatalogEntry {
        name: "(1|3)_1",
        dims: SuperDim::new(1, 3),
        brackets: &[b(("e1", "f2"), &[(1, "f1")]), b(("e1", "f3"), &[(1, "f2")])],
        expected_multiplier_dim: Some(3),
        tags: TABLE_GAMMA,
    },
    CatalogEntry {
        name: "(1|4)_7",
        dims: SuperDim::new(1, 4),
        brackets: &[
            b(("e1", "f2"), &[(1, "f1")]),
            b(("e1", "f3"), &[(1, "f2")]),
            b(("e1", "f4"), &[(1, "f3")]),
        ],
        expected_multiplier_dim: Some(3),
        tags: TABLE,
    },
    CatalogEntry {
        name: "(3|2)_5",
        dims: SuperDim::new(3, 2),
        brackets: &[
            b(("f1", "f1"), &[(1, "e2")]),
            b(("f1", "f2"), &[(1, "e1")]),
            b(("f2", "f2"), &[(1, "e3")]),
        ],
        expected_multiplier_dim: Some(2),
        tags: TABLE,
    },
    CatalogEntry {
        name: "(3|2)_13",
        dims: SuperDim::new(3, 2),
        brackets: &[
            b(("e1", "e2"), &[(1, "e3")]),
            b(("e1", "f2"), &[(1, "f1")]),
            b(("f1", "f2"), &[(1, "e3")]),
            b(("f2", "f2"), &[(2, "e2")]),
        ],
        expected_multiplier_dim: Some(3),
        tags: TABLE_GAMMA,
    },
    CatalogEntry {
        name: "(2|3)_18",
        dims: SuperDim::new(2, 3),
        brackets: &[
            b(("e1", "f3"), &[(1, "f1")]),
            b(("e2", "f2"), &[(1, "f1")]),
            b(("f2", "f2"), &[(2, "e1")]),
            b(("f2", "f3"), &[(-1, "e2")]),
        ],
        expected_multiplier_dim: Some(2),
        tags: TABLE_GAMMA,
    },
    CatalogEntry {
        name: "(2|3)_19",
        dims: SuperDim::new(2, 3),
        brackets: &[
            b(("e1", "f3"), &[(1, "f1")]),
            b(("e2", "f2"), &[(1, "f1")]),
            b(("f2", "f3"), &[(-1, "e1")]),
            b(("f3", "f3"), &[(2, "e2")]),
        ],
        expected_multiplier_dim: Some(3),
        tags: TABLE,
    },
    CatalogEntry {
        name: "(2|3)_22",
        dims: SuperDim::new(2, 3),
        brackets: &[
            b(("e1", "f2"), &[(1, "f1")]),
            b(("e1", "f3"), &[(1, "f2")]),
            b(("f3", "f3"), &[(1, "e2")]),
        ],
        expected_multiplier_dim: Some(3),
        tags: TABLE,
    },
    CatalogEntry {
        name: "(2|3)_23",
        dims: SuperDim::new(2, 3),
        brackets: &[
            b(("e1", "f2"), &[(1, "f1")]),
            b(("e1", "f3"), &[(1, "f2")]),
            b(("f1", "f3"), &[(-1, "e2")]),
            b(("f2", "f2"), &[(1, "e2")]),
        ],
        expected_multiplier_dim: Some(2),
        tags: TABLE,
    },
    CatalogEntry {
        name: "heisenberg3",
        dims: SuperDim::new(3, 0),
        brackets: &[b(("e1", "e2"), &[(1, "e3")])],
        expected_multiplier_dim: None,
        tags: &[FIXTURE_TAG],
    },
];

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// Names carrying `tag`, or all names.
pub fn names(tag: Option<&str>) -> Vec<&'static str> {
    ENTRIES
        .iter()
        .filter(|e| tag.is_none_or(|t| e.tags.contains(&t)))
        .map(|e| e.name)
        .collect()
}

fn label_index(dims: SuperDim, label: &str) -> usize {
    let (kind, rest) = label.split_at(1);
    let k: usize = rest.parse().expect("catalog labels are e<k> or f<k>");
    match kind {
        "e" => k - 1,
        _ => dims.even + k - 1,
    }
}

impl CatalogEntry {
    pub fn build<F: Field>(&self, field: F) -> Result<Superalgebra<F>, Error> {
        let n = self.dims.total();
        let brackets: Vec<_> = self
            .brackets
            .iter()
            .map(|br| {
                let mut v = alloc::vec![field.zero(); n];
                for &(c, label) in br.rhs {
                    let k = label_index(self.dims, label);
                    v[k] = field.add(&v[k], &field.from_int(c));
                }
                (
                    (label_index(self.dims, br.lhs.0), label_index(self.dims, br.lhs.1)),
                    v,
                )
            })
            .collect();
        Superalgebra::from_brackets(field, self.dims, &brackets, Some(String::from(self.name)))
    }
}

/// Looks up a catalog entry, or parses `abelian(m|n)`.
pub fn get<F: Field>(name: &str, field: F) -> Result<Superalgebra<F>, Error> {
    if let Some(e) = entry(name) {
        return e.build(field);
    }
    if let Some(dims) = parse_abelian_name(name) {
        return Ok(abelian(field, dims.even, dims.odd));
    }
    Err(Error::UnknownName(String::from(name)))
}

fn parse_abelian_name(name: &str) -> Option<SuperDim> {
    let inner = name.strip_prefix("abelian(")?.strip_suffix(')')?;
    let (m, n) = inner.split_once('|')?;
    Some(SuperDim::new(m.trim().parse().ok()?, n.trim().parse().ok()?))
}

pub fn abelian<F: Field>(field: F, m: usize, n: usize) -> Superalgebra<F> {
    Superalgebra::abelian(field, SuperDim::new(m, n))
        .with_name(Some(alloc::format!("abelian({m}|{n})")))
}

/// The `(3|0)` Heisenberg Lie algebra `[e1, e2] = e3`.
pub fn heisenberg3<F: Field>(field: F) -> Superalgebra<F> {
    get("heisenberg3", field).expect("fixture is valid")
}

/// A member of the `(4|2)` family obtained by extending `(3|2)_13` by a central `e4`.
#[derive(Clone, Debug)]
pub struct FamilyInstance<F: Field> {
    /// Built from the bracket table without validation.
    pub algebra: Superalgebra<F>,
    pub validation: ValidationReport<F::Elem>,
    /// `(α₂, α₄) ≠ (0, 0)`.
    pub in_scope: bool,
    pub warnings: Vec<String>,
}

/// `[e1,e2] = e3, [e1,e3] = [f1,f1] = α₂e4, [e1,f2] = f1, [f1,f2] = e3 + α₄e4, [f2,f2] = 2e2`.
///
/// The graded Jacobi identity on `(e1, f2, f2)` forces `α₄ = 0`; other values
/// are returned with a warning rather than an error.
pub fn family_4_2<F: Field>(field: F, alpha2: F::Elem, alpha4: F::Elem) -> FamilyInstance<F> {
    let n = 6;
    let vec_of = |terms: &[(F::Elem, usize)]| {
        let mut v = alloc::vec![field.zero(); n];
        for (c, k) in terms {
            v[*k] = c.clone();
        }
        v
    };
    let one = field.one();
    let (e1, e2, e3, e4, f1, f2) = (0, 1, 2, 3, 4, 5);
    let brackets = [
        ((e1, e2), vec_of(&[(one.clone(), e3)])),
        ((e1, e3), vec_of(&[(alpha2.clone(), e4)])),
        ((f1, f1), vec_of(&[(alpha2.clone(), e4)])),
        ((e1, f2), vec_of(&[(one.clone(), f1)])),
        ((f1, f2), vec_of(&[(one.clone(), e3), (alpha4.clone(), e4)])),
        ((f2, f2), vec_of(&[(field.from_int(2), e2)])),
    ];
    let in_scope = !(field.is_zero(&alpha2) && field.is_zero(&alpha4));
    let name = alloc::format!(
        "(4|2)[a2={},a4={}]",
        field.format(&alpha2),
        field.format(&alpha4)
    );
    let table = complete_table(&field, SuperDim::new(4, 2), &brackets)
        .expect("family brackets are graded and in range");
    let algebra = Superalgebra::new(field, table, Some(name));
    let validation = algebra.validate();
    let mut warnings = Vec::new();
    if !in_scope {
        warnings.push(String::from(
            "a2 = a4 = 0: dim L^2 = 3, outside the dim L^2 = m+n-2 class",
        ));
    }
    if let Some(v) = validation.violations.first() {
        let labels = algebra.labels();
        warnings.push(alloc::format!(
            "graded Jacobi identity fails at ({}, {}, {})",
            labels[v.triple[0]],
            labels[v.triple[1]],
            labels[v.triple[2]]
        ));
    }
    FamilyInstance {
        algebra,
        validation,
        in_scope,
        warnings,
    }
}

/// Convenience: `family_4_2` over ℚ from integer-fraction parameters.
pub fn family_4_2_rational(
    alpha2: (i64, i64),
    alpha4: (i64, i64),
) -> FamilyInstance<crate::field::Rationals> {
    let q = crate::field::Rationals;
    let a2 = q
        .from_ratio(&BigInt::from(alpha2.0), &BigInt::from(alpha2.1))
        .expect("nonzero denominator");
    let a4 = q
        .from_ratio(&BigInt::from(alpha4.0), &BigInt::from(alpha4.1))
        .expect("nonzero denominator");
    family_4_2(q, a2, a4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn every_entry_is_valid_and_nilpotent() {
        for e in ENTRIES {
            let l = e.build(Rationals).unwrap();
            assert!(l.validate().is_ok(), "{}", e.name);
            assert!(l.is_nilpotent(), "{}", e.name);
            if e.tags.contains(&TABLE_TAG) {
                assert!(e.expected_multiplier_dim.is_some());
            }
            let f5 = e.build(PrimeField::new(5).unwrap()).unwrap();
            assert!(f5.is_nilpotent());
        }
        assert_eq!(names(Some(TABLE_TAG)).len(), 11);
        assert_eq!(names(Some(GAMMA_TWO_TAG)).len(), 5);
    }

    #[test]
    fn transcription_spot_checks() {
        let q = Rationals;
        let l = get("(2|2)_1", q).unwrap();
        assert_eq!(l.table().len(), 2);
        assert_eq!(l.table().get(2, 2), Some(&l.unit(0)));
        assert_eq!(l.table().get(3, 3), Some(&l.unit(1)));

        let l = get("(2|3)_18", q).unwrap();
        let two_e1: Vec<_> = l.unit(0).iter().map(|x| x * q.from_int(2)).collect();
        let minus_e2: Vec<_> = l.unit(1).iter().map(|x| -x).collect();
        assert_eq!(l.table().get(0, 4), Some(&l.unit(2)));
        assert_eq!(l.table().get(1, 3), Some(&l.unit(2)));
        assert_eq!(l.table().get(3, 3), Some(&two_e1));
        assert_eq!(l.table().get(3, 4), Some(&minus_e2));

        let l = get("(3|2)_13", q).unwrap();
        assert_eq!(l.table().len(), 4);
    }

    #[test]
    fn unknown_name() {
        assert_eq!(
            get("bogus", Rationals).err(),
            Some(Error::UnknownName(String::from("bogus")))
        );
        assert_eq!(get("abelian(2|1)", Rationals).unwrap().dims(), SuperDim::new(2, 1));
    }

    #[test]
    fn family_scope() {
        let l = family_4_2_rational((1, 1), (0, 1));
        assert!(l.in_scope && l.validation.is_ok() && l.warnings.is_empty());
        assert_eq!(l.algebra.derived().dim(), 4);
        let z = family_4_2_rational((0, 1), (0, 1));
        assert!(!z.in_scope && z.validation.is_ok());
        assert_eq!(z.warnings.len(), 1);
        assert_eq!(z.algebra.derived().dim(), 3);
        let bad = family_4_2_rational((1, 1), (1, 1));
        assert_eq!(bad.validation.violations[0].triple, [0, 5, 5]);
        assert_eq!(bad.warnings.len(), 1);
    }
}
