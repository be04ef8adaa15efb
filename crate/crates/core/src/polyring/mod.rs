//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
mod polynomial;
mod ring;
mod text;

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use polynomial::Polynomial;
pub use ring::{tensor_index, Ring, Variable};
pub use text::monomial_to_string;

pub type Rational = num_rational::BigRational;

/// `num / den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
