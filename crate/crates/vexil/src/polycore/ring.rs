use super::{Dyadic, Polynomial};

/// A commutative ring with unit, as needed by the Pfaffian and determinant
/// engines.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
}

/// Implements [`Ring`] for a type with `zero`/`one`/`is_zero` inherent
/// methods and arithmetic on references.
#[macro_export]
macro_rules! impl_ring_via_ops {
    ($t:ty) => {
        impl $crate::polycore::Ring for $t {
            fn zero() -> Self {
                <$t>::zero()
            }
            fn one() -> Self {
                <$t>::one()
            }
            fn is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
            fn plus(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn minus(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn times(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn negated(&self) -> Self {
                -self
            }
        }
    };
}

impl_ring_via_ops!(Polynomial);
impl_ring_via_ops!(Dyadic);
