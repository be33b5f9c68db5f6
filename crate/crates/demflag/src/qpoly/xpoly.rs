use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::QPolyError;

/// Integer polynomial in `x`, dense from `x^0`, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct XPoly {
    coeffs: Vec<BigInt>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly::default()
    }

    pub fn one() -> Self {
        XPoly::monomial(1, 0)
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        XPoly::from_coeffs(coeffs)
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> Self {
        XPoly::monomial(1, k)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        XPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn pow(&self, k: u32) -> XPoly {
        (0..k).fold(XPoly::one(), |acc, _| &acc * self)
    }

    /// Substitutes `x -> x^k`.
    pub fn sub_xpower(&self, k: usize) -> XPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        XPoly::from_coeffs(out)
    }

    /// Coefficients `0..order`, zero padded.
    pub fn truncated(&self, order: usize) -> Vec<BigInt> {
        (0..order).map(|k| self.coeff(k)).collect()
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match (mag.is_one(), k) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => f.write_str("x")?,
                (true, _) => write!(f, "x^{k}")?,
                (false, 1) => write!(f, "{mag}*x")?,
                (false, _) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        XPoly::from_coeffs(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for XPoly {
            type Output = XPoly;
            fn $m(self, rhs: XPoly) -> XPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Rational function `num / den` in `x` with integer coefficients.
///
/// Not reduced; the denominator's leading coefficient is kept positive and
/// equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunX {
    num: XPoly,
    den: XPoly,
}

impl RatFunX {
    pub fn new(num: XPoly, den: XPoly) -> Result<Self, QPolyError> {
        if den.is_zero() {
            return Err(QPolyError::DivisionByZero);
        }
        // Positive lowest coefficient in the denominator, so `1 - x` rather than `-1 + x`.
        let lowest = den.coeffs.iter().find(|c| !c.is_zero());
        if lowest.is_some_and(Signed::is_negative) {
            return Ok(RatFunX { num: -&num, den: -&den });
        }
        Ok(RatFunX { num, den })
    }

    pub fn num(&self) -> &XPoly {
        &self.num
    }

    pub fn den(&self) -> &XPoly {
        &self.den
    }

    /// Maclaurin coefficients `0..order` by long division. The denominator
    /// must have constant term `±1` so the expansion stays integral.
    pub fn expand(&self, order: usize) -> Result<Vec<BigInt>, QPolyError> {
        let d0 = self.den.coeff(0);
        if !d0.abs().is_one() {
            return Err(QPolyError::NonUnitConstantTerm);
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(order);
        for k in 0..order {
            let mut acc = self.num.coeff(k);
            for j in 1..=k.min(self.den.coeffs.len().saturating_sub(1)) {
                acc -= self.den.coeff(j) * &out[k - j];
            }
            out.push(acc * &d0);
        }
        Ok(out)
    }
}

impl PartialEq for RatFunX {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunX {}

impl fmt::Display for RatFunX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Free-function form of [`RatFunX::expand`].
pub fn ratfun_expand(r: &RatFunX, x_order: usize) -> Result<Vec<BigInt>, QPolyError> {
    r.expand(x_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn expansions() {
        let one_minus_x = XPoly::from_i64(&[1, -1]);
        let geo = RatFunX::new(XPoly::one(), one_minus_x.clone()).unwrap();
        assert_eq!(geo.expand(4).unwrap(), ints(&[1, 1, 1, 1]));
        let unit = RatFunX::new(one_minus_x.clone(), one_minus_x).unwrap();
        assert_eq!(unit.expand(4).unwrap(), ints(&[1, 0, 0, 0]));
        let fib = RatFunX::new(XPoly::one(), XPoly::from_i64(&[1, -1, -1])).unwrap();
        assert_eq!(fib.expand(6).unwrap(), ints(&[1, 1, 2, 3, 5, 8]));
        let neg = RatFunX::new(XPoly::one(), XPoly::from_i64(&[-1, 1])).unwrap();
        assert_eq!(neg.expand(3).unwrap(), ints(&[-1, -1, -1]));
        let bad = RatFunX::new(XPoly::one(), XPoly::from_i64(&[2, 1])).unwrap();
        assert_eq!(bad.expand(3), Err(QPolyError::NonUnitConstantTerm));
    }

    #[test]
    fn cross_multiplied_equality_and_sign_normal_form() {
        let a = RatFunX::new(XPoly::from_i64(&[1, 1]), XPoly::from_i64(&[1, 0, -1])).unwrap();
        let b = RatFunX::new(XPoly::one(), XPoly::from_i64(&[1, -1])).unwrap();
        assert_eq!(a, b);
        let c = RatFunX::new(XPoly::from_i64(&[1]), XPoly::from_i64(&[-1, 1])).unwrap();
        assert!(c.den().coeff(0).is_positive());
        assert_eq!(c.num(), &XPoly::from_i64(&[-1]));
        assert_eq!(c, RatFunX::new(XPoly::from_i64(&[-1]), XPoly::from_i64(&[1, -1])).unwrap());
        assert!(RatFunX::new(XPoly::one(), XPoly::zero()).is_err());
    }

    #[test]
    fn display_and_degree() {
        assert_eq!(XPoly::from_i64(&[1, -2, 0, 1]).to_string(), "1 - 2*x + x^3");
        assert_eq!(XPoly::zero().degree(), None);
        assert_eq!(XPoly::x_pow(3).degree(), Some(3));
        assert_eq!(XPoly::from_i64(&[1, 1]).sub_xpower(2), XPoly::from_i64(&[1, 0, 1]));
    }
}
