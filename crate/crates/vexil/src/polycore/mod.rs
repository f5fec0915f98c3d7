//! Exact sparse polynomial arithmetic over the dyadic rationals.

mod dyadic;
mod poly;
mod ring;

pub use dyadic::Dyadic;
pub use poly::{h, prod_one_plus, t, u, x, y, z, Family, Monomial, Polynomial, Var};
pub use ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division is not exact")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("constant term is not invertible over the dyadic rationals")]
    NotInvertible,
}
