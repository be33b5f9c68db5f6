use crate::qpoly::{q_binomial, q_pochhammer, QPoly, XSeries};

use super::{x_pochhammer, ClosedFormError};

/// A hypergeometric parameter `coeff * x^x_deg`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Param {
    pub coeff: QPoly,
    pub x_deg: u32,
}

impl Param {
    /// A parameter free of `x`.
    pub fn q(coeff: QPoly) -> Self {
        Param { coeff, x_deg: 0 }
    }

    pub fn x(coeff: QPoly, x_deg: u32) -> Self {
        Param { coeff, x_deg }
    }
}

fn base_exponent(base: &QPoly) -> Result<i64, ClosedFormError> {
    match base.as_monomial() {
        Some((c, e)) if *c == 1.into() && e >= 1 => Ok(e),
        _ => Err(ClosedFormError::OutOfRange(format!("base {base} must be q^e with e >= 1"))),
    }
}

/// The first `terms` summands of the basic hypergeometric series
///
/// `sum_n (a_1;b)_n ... (a_r;b)_n / ((b_1;b)_n ... (b_s;b)_n (b;b)_n) z^n`
///
/// as x-series truncated at `x_order`. Pochhammers free of `x` in the
/// denominator are divided out exactly (an inexact quotient is an error);
/// those involving `x` are inverted as power series.
pub fn hypergeom_terms(
    upper: &[Param],
    lower: &[Param],
    base: &QPoly,
    terms: usize,
    z: &Param,
    x_order: usize,
) -> Result<Vec<XSeries>, ClosedFormError> {
    base_exponent(base)?;
    let poch = |p: &Param, n: usize| x_pochhammer(&p.coeff, p.x_deg as usize, base, n, x_order);
    let mut out = Vec::with_capacity(terms);
    for n in 0..terms {
        let mut numer = XSeries::one(x_order);
        for a in upper {
            numer = numer.mul(&poch(a, n));
        }
        let mut q_den = q_pochhammer(base, n, base);
        for b in lower {
            if b.x_deg == 0 {
                q_den = &q_den * &q_pochhammer(&b.coeff, n, base);
            } else {
                numer = numer.mul(&poch(b, n).inverse()?);
            }
        }
        let z_n = z.coeff.pow(n as u32);
        let numer = numer.scale(&z_n, n * z.x_deg as usize);
        let coeffs = numer.coeffs().iter().map(|c| c.div_exact(&q_den)).collect::<Result<Vec<_>, _>>()?;
        out.push(XSeries::from_coeffs(coeffs, x_order));
    }
    Ok(out)
}

/// Sum of the first `z_order` terms of [`hypergeom_terms`] with
/// `z = z_coeff * x^z_xdeg`.
pub fn hypergeom_rphis(
    upper: &[Param],
    lower: &[Param],
    base: &QPoly,
    z_order: usize,
    z_coeff: &QPoly,
    z_xdeg: u32,
    x_order: usize,
) -> Result<XSeries, ClosedFormError> {
    let z = Param::x(z_coeff.clone(), z_xdeg);
    let terms = hypergeom_terms(upper, lower, base, z_order, &z, x_order)?;
    Ok(terms.iter().fold(XSeries::zero(x_order), |acc, t| acc.add(t)))
}

/// `sum_j [j, k]_base x^j`, truncated at `x_order`.
pub fn gen_binomial_series(k: usize, base: &QPoly, x_order: usize) -> Result<XSeries, ClosedFormError> {
    let e = base_exponent(base)? as u32;
    let coeffs = (0..x_order).map(|j| q_binomial(j as i64, k as i64).sub_qpower(e)).collect();
    Ok(XSeries::from_coeffs(coeffs, x_order))
}

/// `x^k / (x; base)_(k+1)`, truncated at `x_order`.
pub fn gen_binomial_closed(k: usize, base: &QPoly, x_order: usize) -> Result<XSeries, ClosedFormError> {
    base_exponent(base)?;
    let den = x_pochhammer(&QPoly::one(), 1, base, k + 1, x_order);
    Ok(den.inverse()?.scale(&QPoly::one(), k))
}

fn q2_poch(a: &QPoly, n: usize) -> QPoly {
    q_pochhammer(a, n, &QPoly::q_pow(2))
}

fn sign(j: usize) -> QPoly {
    QPoly::constant(if j % 2 == 0 { 1 } else { -1 })
}

/// The `x^(2j)` coefficient of the terminating 4phi3 limit, written over
/// `(q^2;q^2)_(2j)`.
pub fn fourphithree_term_single(s0: i64, r_prime: i64, j: usize) -> Result<QPoly, ClosedFormError> {
    let ji = j as i64;
    let numer = &(&q2_poch(&QPoly::q_pow(2 * s0 + 2), j) * &q2_poch(&QPoly::q_pow(-2 * s0), j)) * &sign(j);
    let numer = numer.shift(2 * ji * (ji + r_prime) + 2 * s0 * ji - ji * ji + ji);
    Ok(numer.div_exact(&q2_poch(&QPoly::q_pow(2), 2 * j))?)
}

/// The same coefficient written over the four base-`q^2` Pochhammers.
pub fn fourphithree_term(s0: i64, r_prime: i64, j: usize) -> Result<QPoly, ClosedFormError> {
    let ji = j as i64;
    let numer = &(&q2_poch(&QPoly::q_pow(2 * s0 + 2), j) * &q2_poch(&QPoly::q_pow(-2 * s0), j)) * &sign(j);
    let numer = numer.shift(2 * ji * (s0 + r_prime) + ji * (ji + 1));
    let den = [QPoly::q_pow(2), -QPoly::q_pow(2), QPoly::q_pow(1), -QPoly::q_pow(1)]
        .iter()
        .fold(QPoly::one(), |acc, a| &acc * &q2_poch(a, j));
    Ok(numer.div_exact(&den)?)
}

/// The coefficient in reduced form `q^(2j(j+r')) [s0+j, 2j]_(q^2)`.
pub fn fourphithree_reduced(s0: i64, r_prime: i64, j: usize) -> QPoly {
    let ji = j as i64;
    q_binomial(s0 + ji, 2 * ji).sub_qpower(2).shift(2 * ji * (ji + r_prime))
}
