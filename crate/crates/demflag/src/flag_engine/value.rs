use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::qpoly::QPoly;

/// Coefficient ring the recursions run over.
///
/// Every recursion only ever multiplies by monomials `q^e` and adds, so
/// any ring homomorphic image of `Z[q, 1/q]` works. `QPoly` gives graded
/// multiplicities; `BigInt` is the specialisation `q = 1`.
pub trait MultValue: Clone + PartialEq + Send + Sync + std::fmt::Debug + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn q_pow(e: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn mul_q_pow(&self, e: i64) -> Self;
}

impl MultValue for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn q_pow(e: i64) -> Self {
        QPoly::q_pow(e)
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_q_pow(&self, e: i64) -> Self {
        self.shift(e)
    }
}

impl MultValue for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn q_pow(_: i64) -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_q_pow(&self, _: i64) -> Self {
        self.clone()
    }
}
