//! Closed-form expressions for flag multiplicities and their generating
//! series, computed independently of the recursion engines so the two can
//! be checked against each other.

mod carlitz;
mod hypergeom;
mod multiplicity;

use thiserror::Error;

use crate::qpoly::{QPoly, QPolyError, XSeries};

pub use carlitz::{carlitz_closed_a23w, carlitz_index, carlitz_s};
pub use hypergeom::{
    fourphithree_reduced, fourphithree_term, fourphithree_term_single, gen_binomial_closed, gen_binomial_series,
    hypergeom_rphis, hypergeom_terms, Param,
};
pub use multiplicity::{cf_1to2, cf_1to2_weighted, cf_2to3, cf_2to3_weighted, TwoThreeParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("Carlitz recurrence and closed sum disagree at n = {n}, k = {k}")]
    CarlitzMismatch { n: i64, k: u8 },
    #[error(transparent)]
    Poly(#[from] QPolyError),
}

/// `(a x^x_deg; base)_n` as an x-series truncated at `x_order`.
pub fn x_pochhammer(a: &QPoly, x_deg: usize, base: &QPoly, n: usize, x_order: usize) -> XSeries {
    let mut acc = XSeries::one(x_order);
    let mut factor = a.clone();
    for _ in 0..n {
        let mut term = XSeries::one(x_order);
        if x_deg == 0 {
            term.set(0, &QPoly::one() - &factor);
        } else {
            term.set(x_deg, -factor.clone());
        }
        acc = acc.mul(&term);
        factor = &factor * base;
    }
    acc
}

/// Ramanujan's fifth-order mock theta function `phi_0` (`which = 0`) or
/// `phi_1` (`which = 1`), keeping exponents below `q_order`.
pub fn mock_theta(which: u8, q_order: i64) -> Result<QPoly, ClosedFormError> {
    if which > 1 || q_order < 1 {
        return Err(ClosedFormError::OutOfRange(format!("phi_{which} to order {q_order}")));
    }
    let w = i64::from(which);
    let mut acc = QPoly::zero();
    let mut poch = QPoly::one();
    let mut n = 0;
    while (n + w) * (n + w) < q_order {
        acc += &poch.shift((n + w) * (n + w)).truncate(q_order);
        poch = (&poch * &(&QPoly::one() + &QPoly::q_pow(2 * n + 1))).truncate(q_order);
        n += 1;
    }
    Ok(acc)
}

/// `sum_i q^(i^2) (-q x; q^2)_i x^i`, truncated at `x_order`.
pub fn closed_a0_1to3(x_order: usize) -> XSeries {
    let mut acc = XSeries::zero(x_order);
    let mut poch = XSeries::one(x_order);
    for i in 0..x_order {
        let ii = i as i64;
        acc = acc.add(&poch.scale(&QPoly::q_pow(ii * ii), i));
        poch = poch.mul(&XSeries::from_coeffs(vec![QPoly::one(), QPoly::q_pow(2 * ii + 1)], x_order));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn mock_theta_examples() {
        assert_eq!(mock_theta(0, 3).unwrap(), q("1 + q + q^2"));
        assert_eq!(mock_theta(0, 9).unwrap(), q("1 + q + q^2 + q^4 + q^5 + q^7 + q^8"));
        assert_eq!(mock_theta(1, 2).unwrap(), q("q"));
        assert!(mock_theta(2, 5).is_err());
    }

    #[test]
    fn closed_a0_examples() {
        let a = closed_a0_1to3(12);
        assert!(a.coeff(0).is_one());
        assert_eq!(a.coeff(1), &q("q"));
        assert_eq!(a.sum_coeffs().truncate(9), mock_theta(0, 9).unwrap());
    }

    #[test]
    fn pochhammer_in_x() {
        let p = x_pochhammer(&q("1"), 1, &q("q"), 2, 4);
        assert_eq!(p, XSeries::from_coeffs(vec![q("1"), q("-1 - q"), q("q")], 4));
        let c = x_pochhammer(&q("q"), 0, &q("q"), 2, 2);
        assert_eq!(c, XSeries::from_coeffs(vec![q("1 - q - q^2 + q^3")], 2));
    }
}
