use superschur_core::{PrimeField, Rationals, SuperDim, Superalgebra};

use crate::presentation;

/// A superalgebra over whichever field its presentation asked for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyAlgebra {
    Q(Superalgebra<Rationals>),
    Fp(Superalgebra<PrimeField>),
}

/// Evaluates `$body` with `$l` bound to the inner `Superalgebra<F>`.
#[macro_export]
macro_rules! with_algebra {
    ($any:expr, $l:ident => $body:expr) => {
        match $any {
            $crate::any::AnyAlgebra::Q($l) => $body,
            $crate::any::AnyAlgebra::Fp($l) => $body,
        }
    };
}

impl AnyAlgebra {
    pub fn dims(&self) -> SuperDim {
        with_algebra!(self, l => l.dims())
    }

    pub fn name(&self) -> Option<&str> {
        with_algebra!(self, l => l.name())
    }

    pub fn serialize(&self) -> String {
        with_algebra!(self, l => presentation::serialize(l))
    }
}

impl From<Superalgebra<Rationals>> for AnyAlgebra {
    fn from(l: Superalgebra<Rationals>) -> Self {
        AnyAlgebra::Q(l)
    }
}

impl From<Superalgebra<PrimeField>> for AnyAlgebra {
    fn from(l: Superalgebra<PrimeField>) -> Self {
        AnyAlgebra::Fp(l)
    }
}
