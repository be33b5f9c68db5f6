use crate::qpoly::{q_binomial, QPoly, XSeries};

use super::{x_pochhammer, ClosedFormError, TwoThreeParams};

/// Dense polynomial in `x` with `QPoly` coefficients.
type Bivariate = Vec<QPoly>;

fn trimmed(mut v: Bivariate) -> Bivariate {
    while v.last().is_some_and(QPoly::is_zero) {
        v.pop();
    }
    v
}

/// `x * a + q^e * b`.
fn recurrence_step(a: &Bivariate, b: &Bivariate, e: i64) -> Bivariate {
    let len = (a.len() + 1).max(b.len());
    let mut out = vec![QPoly::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i + 1] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += &c.shift(e);
    }
    trimmed(out)
}

/// `S_n(x,q)_k` by running the recurrence from the initial conditions.
///
/// For `k = 0` the value at `n = -1` is obtained by running the recurrence
/// backwards once (`S_1 = x S_0 + q^-1 S_-1` gives `S_-1 = q`).
fn by_recurrence(n: i64, k: u8) -> Bivariate {
    let (mut prev, mut cur, start) = match k {
        0 if n == -1 => return vec![QPoly::q_pow(1)],
        0 => (vec![], vec![QPoly::one()], 1),
        _ => (vec![], vec![QPoly::one()], 0),
    };
    if n < start {
        return prev;
    }
    for i in start + 1..=n {
        let next = recurrence_step(&cur, &prev, i - 2);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `S_n(x,q)_k` by the closed q-binomial sum; `None` where no sum is stated.
fn by_closed_sum(n: i64, k: u8) -> Option<Bivariate> {
    let (deg, twist) = match k {
        0 if n == -1 => return None,
        0 => (n - 1, 0),
        _ => (n, 1),
    };
    let mut out = vec![QPoly::zero(); deg.max(0) as usize + 1];
    for j in 0..=deg.max(0) / 2 {
        let c = q_binomial(deg - j, j).shift(j * (j - twist));
        if deg - 2 * j >= 0 {
            out[(deg - 2 * j) as usize] += &c;
        }
    }
    Some(trimmed(out))
}

/// Carlitz q-Fibonacci polynomial `S_n(x,q)_k`, valid for `n >= -1`.
///
/// The recurrence and the closed sum are both evaluated and must agree.
/// The result is returned as an x-series of order `max(n,0) + 1`, which
/// holds it exactly.
pub fn carlitz_s(n: i64, k: u8) -> Result<XSeries, ClosedFormError> {
    if k > 1 || n < -1 {
        return Err(ClosedFormError::OutOfRange(format!("S_{n}(x,q)_{k}")));
    }
    let rec = by_recurrence(n, k);
    if let Some(closed) = by_closed_sum(n, k) {
        if closed != rec {
            return Err(ClosedFormError::CarlitzMismatch { n, k });
        }
    }
    Ok(XSeries::from_coeffs(rec, n.max(0) as usize + 1))
}

/// `s_k` from the Carlitz identity: `s_0 = s - [r = 1]`,
/// `s_1 = s - 1 + [r = 3] + [r = 5]`.
pub fn carlitz_index(n: i64, k: u8) -> i64 {
    let t = TwoThreeParams::new(n, 0);
    match k {
        0 => t.s - i64::from(t.r == 1),
        _ => t.s - 1 + i64::from(t.r == 3 || t.r == 5),
    }
}

/// The parity-`k` part of the weighted 2→3 generating series for weight `n`,
/// `q^(-2 s_k^2 - k r') S_(2 s_k + 1)(y, q^2)_k / (x^2; q^2)_(2s + r~ + 1)`
/// with `y = q^(2 s_k + r') x`, truncated at `x_order`.
pub fn carlitz_closed_a23w(n: i64, k: u8, x_order: usize) -> Result<XSeries, ClosedFormError> {
    if n < 0 || k > 1 {
        return Err(ClosedFormError::OutOfRange(format!("weight {n}, parity {k}")));
    }
    let t = TwoThreeParams::new(n, 0);
    let sk = carlitz_index(n, k);
    let rp = t.r_prime();
    let s_poly = carlitz_s(2 * sk + 1, k)?;
    let y_scale = 2 * sk + rp;
    let shift = -2 * sk * sk - i64::from(k) * rp;
    let numer = XSeries::from_coeffs(
        s_poly.coeffs().iter().enumerate().map(|(e, c)| c.sub_qpower(2).shift(y_scale * e as i64 + shift)).collect(),
        x_order,
    );
    let den = x_pochhammer(&QPoly::one(), 2, &QPoly::q_pow(2), (2 * t.s + t.r_tilde() + 1) as usize, x_order);
    Ok(numer.mul(&den.inverse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn initial_values() {
        assert!(carlitz_s(0, 0).unwrap().is_zero());
        assert_eq!(carlitz_s(1, 0).unwrap(), XSeries::one(2));
        assert_eq!(carlitz_s(2, 0).unwrap(), XSeries::from_coeffs(vec![q("0"), q("1")], 3));
        assert_eq!(carlitz_s(3, 0).unwrap(), XSeries::from_coeffs(vec![q("q"), q("0"), q("1")], 4));
        assert_eq!(carlitz_s(-1, 0).unwrap(), XSeries::monomial(q("q"), 0, 1));
        assert!(carlitz_s(-1, 1).unwrap().is_zero());
        assert_eq!(carlitz_s(0, 1).unwrap(), XSeries::one(1));
        assert!(carlitz_s(-2, 1).is_err());
    }

    #[test]
    fn recurrence_matches_closed_sum() {
        for k in 0..=1 {
            for n in -1..=24 {
                carlitz_s(n, k).unwrap();
            }
        }
    }
}
