use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{QPoly, QPolyError};

/// Power series in `x` with `QPoly` coefficients, truncated below `order`.
///
/// `coeffs` always has exactly `order` entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XSeries {
    coeffs: Vec<QPoly>,
}

impl XSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        XSeries { coeffs: vec![QPoly::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        XSeries::monomial(QPoly::one(), 0, order)
    }

    /// `c * x^k`, truncated.
    pub fn monomial(c: QPoly, k: usize, order: usize) -> Self {
        let mut s = XSeries::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads or truncates `coeffs` to `order`.
    pub fn from_coeffs(mut coeffs: Vec<QPoly>, order: usize) -> Self {
        coeffs.resize(order, QPoly::zero());
        XSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &QPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn set(&mut self, k: usize, c: QPoly) {
        if k < self.order() {
            self.coeffs[k] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(QPoly::is_zero)
    }

    /// Largest `k` with a non-zero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Same series viewed at a smaller order.
    pub fn truncate(&self, order: usize) -> XSeries {
        XSeries::from_coeffs(self.coeffs[..order.min(self.order())].to_vec(), order.min(self.order()))
    }

    pub fn add(&self, other: &XSeries) -> XSeries {
        let order = self.order().min(other.order());
        XSeries::from_coeffs((0..order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(), order)
    }

    pub fn sub(&self, other: &XSeries) -> XSeries {
        let order = self.order().min(other.order());
        XSeries::from_coeffs((0..order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(), order)
    }

    /// Truncated Cauchy product at the smaller of the two orders.
    pub fn mul(&self, other: &XSeries) -> XSeries {
        let order = self.order().min(other.order());
        let mut out = vec![QPoly::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        XSeries { coeffs: out }
    }

    /// Multiplies by `by * x^x_shift`, dropping terms pushed past the order.
    pub fn scale(&self, by: &QPoly, x_shift: usize) -> XSeries {
        let order = self.order();
        let mut out = XSeries::zero(order);
        for k in 0..order.saturating_sub(x_shift) {
            out.coeffs[k + x_shift] = &self.coeffs[k] * by;
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map(&self, f: impl Fn(&QPoly) -> QPoly) -> XSeries {
        XSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Multiplicative inverse up to the same order. The constant term must be
    /// a unit of Z[q, 1/q], i.e. `±q^e`.
    pub fn inverse(&self) -> Result<XSeries, QPolyError> {
        let order = self.order();
        if order == 0 {
            return Ok(XSeries::zero(0));
        }
        let c0 = &self.coeffs[0];
        let (c, e) = c0.as_monomial().ok_or(QPolyError::NonUnitConstantTerm)?;
        if !c.abs().is_one() {
            return Err(QPolyError::NonUnitConstantTerm);
        }
        let inv0 = QPoly::monomial(c.clone(), -e);
        let mut out = vec![QPoly::zero(); order];
        out[0] = inv0.clone();
        for k in 1..order {
            let mut acc = QPoly::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !out[k - j].is_zero() {
                    acc += &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out[k] = -(&acc * &inv0);
        }
        Ok(XSeries { coeffs: out })
    }

    /// Value at `q = 1`, coefficient by coefficient.
    pub fn eval_q_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(QPoly::eval_one).collect()
    }

    /// Sum of all coefficients, i.e. the series at `x = 1`; meaningful only
    /// when the caller knows the tail beyond the order is irrelevant.
    pub fn sum_coeffs(&self) -> QPoly {
        self.coeffs.iter().cloned().sum()
    }
}

impl fmt::Display for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}

/// Free-function form of [`XSeries::inverse`].
pub fn xs_inverse(s: &XSeries) -> Result<XSeries, QPolyError> {
    s.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    fn series(cs: &[&str], order: usize) -> XSeries {
        XSeries::from_coeffs(cs.iter().map(|c| p(c)).collect(), order)
    }

    #[test]
    fn products() {
        let a = series(&["1", "1"], 3);
        let b = series(&["1", "-1"], 3);
        assert_eq!(a.mul(&b), series(&["1", "0", "-1"], 3));
        let geo = series(&["1"; 5], 5);
        assert_eq!(geo.mul(&series(&["1", "-1"], 5)), XSeries::one(5));
    }

    #[test]
    fn scaling_shifts_and_truncates() {
        let a = series(&["1", "1"], 3);
        assert_eq!(a.scale(&p("q"), 1), series(&["0", "q", "q"], 3));
        assert_eq!(series(&["1", "1", "1"], 3).scale(&p("1"), 2), series(&["0", "0", "1"], 3));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(series(&["1", "-1"], 4).inverse().unwrap(), series(&["1"; 4], 4));
        assert_eq!(series(&["1", "-q"], 3).inverse().unwrap(), series(&["1", "q", "q^2"], 3));
        assert_eq!(series(&["0", "1", "1"], 3).inverse(), Err(QPolyError::NonUnitConstantTerm));
        assert_eq!(series(&["2"], 3).inverse(), Err(QPolyError::NonUnitConstantTerm));
        let unit = series(&["-q^2", "1 + q"], 6);
        assert_eq!(unit.mul(&unit.inverse().unwrap()), XSeries::one(6));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = XSeries::one(5);
        let b = XSeries::one(3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).order(), 3);
    }
}
