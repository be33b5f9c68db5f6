use super::QPoly;

/// Gaussian binomial `[n, m]_q`.
///
/// `m = 0` gives 1 for every `n`, negative `n` included. Returns 0 when
/// `m < 0`, when `0 <= n < m`, and (by the same counting convention) when
/// `n < 0 < m`.
pub fn q_binomial(n: i64, m: i64) -> QPoly {
    if m == 0 {
        return QPoly::one();
    }
    if m < 0 || n < m {
        return QPoly::zero();
    }
    let m = m.min(n - m);
    let mut acc = QPoly::one();
    for i in 1..=m {
        let num = &QPoly::one() - &QPoly::q_pow(n - m + i);
        let den = &QPoly::one() - &QPoly::q_pow(i);
        // Each partial product is itself [n-m+i, i]_q, so the division is exact.
        acc = (&acc * &num).div_exact(&den).expect("q-binomial partial products are polynomials");
    }
    acc
}

/// `(a; step)_n = prod_{i=1..n} (1 - a * step^(i-1))`.
pub fn q_pochhammer(a: &QPoly, n: usize, step: &QPoly) -> QPoly {
    let mut acc = QPoly::one();
    let mut factor = a.clone();
    for _ in 0..n {
        acc = &acc * &(&QPoly::one() - &factor);
        factor = &factor * step;
    }
    acc
}

/// `res_2(s)`: 0 for even `s`, 1 for odd.
pub fn res2(s: i64) -> i64 {
    s.rem_euclid(2)
}
