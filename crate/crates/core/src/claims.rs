//! Published dimension claims that the verifier checks, and the findings it
//! records when one of them fails on a concrete instance.

use alloc::string::String;
use core::fmt;

use crate::field::Field;
use crate::kernel::Superalgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// `dim M(L) = ½((m+n)² + (n−m))` exactly for abelian `L`, strictly less otherwise.
    AbelianExtremal,
    /// Central `K`: `dim M(L) + dim(L²∩K) ≤ dim M(L/K) + dim M(K) + dim(L/K / (L/K)² ⊗ K)`.
    CentralQuotientInequality,
    /// Central `K`: `dim M(L) + dim(L²∩K) ≤ ½((m+n)² + (n−m))`.
    CentralQuotientPairBound,
    /// `m+n = 3`, `dim L² = 1`: `dim M(L) ∈ {1, 2}`.
    SmallDerivedRange,
    /// `dim L² = m+n−2`, `m+n ≥ 4`, `n ≥ 1`: `dim M(L) ≤ m+2n−2`.
    CodimTwoBound,
    /// Same class: `dim M(L) < m+2n−3`.
    CodimTwoStrict,
    /// Same class with `m+n ≥ 6`: `dim M(L) < m+2n−4`.
    SixStrict,
    /// Same class with `m+n ≥ 6`: `dim M(L) ≤ m+2n−5`.
    SixBound,
    /// Even central line `K ⊆ L²`: `dim (L/K)² = m+n−3` and the multiplier bounds on `L/K`.
    EvenLineQuotient,
    /// Odd central line `K ⊆ L²`: `dim (L/K)² = m+n−3` and the multiplier bounds on `L/K`.
    OddLineQuotient,
    /// No member of the class has γ ∈ {0, 1}.
    LowGamma,
    /// Membership in the γ = 2 list.
    GammaTwoList,
    /// A tabulated multiplier dimension.
    TableValue,
    /// Every algebra of the γ = 2 list is capable.
    GammaTwoCapable,
}

impl Claim {
    pub const ALL: [Claim; 14] = [
        Claim::AbelianExtremal,
        Claim::CentralQuotientInequality,
        Claim::CentralQuotientPairBound,
        Claim::SmallDerivedRange,
        Claim::CodimTwoBound,
        Claim::CodimTwoStrict,
        Claim::SixStrict,
        Claim::SixBound,
        Claim::EvenLineQuotient,
        Claim::OddLineQuotient,
        Claim::LowGamma,
        Claim::GammaTwoList,
        Claim::TableValue,
        Claim::GammaTwoCapable,
    ];

    /// Stable identifier used in reports.
    pub fn id(self) -> &'static str {
        match self {
            Claim::AbelianExtremal => "abelian-extremal",
            Claim::CentralQuotientInequality => "central-quotient-inequality",
            Claim::CentralQuotientPairBound => "central-quotient-pair-bound",
            Claim::SmallDerivedRange => "small-derived-range",
            Claim::CodimTwoBound => "codim2-bound",
            Claim::CodimTwoStrict => "codim2-strict",
            Claim::SixStrict => "codim2-six-strict",
            Claim::SixBound => "codim2-six-bound",
            Claim::EvenLineQuotient => "even-line-quotient",
            Claim::OddLineQuotient => "odd-line-quotient",
            Claim::LowGamma => "low-gamma",
            Claim::GammaTwoList => "gamma2-list",
            Claim::TableValue => "table-value",
            Claim::GammaTwoCapable => "gamma2-capable",
        }
    }

    pub fn from_id(id: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.id() == id)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A concrete instance on which a claim fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding<F: Field> {
    pub instance: Superalgebra<F>,
    pub claim: Claim,
    /// Human-readable bound, e.g. `"< 5"`.
    pub expected: String,
    pub observed: i64,
    /// Position in the scanned stream, when the instance came from one.
    pub sample: Option<usize>,
    pub detail: Option<String>,
}
