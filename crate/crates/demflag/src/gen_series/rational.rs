use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::qpoly::{RatFunX, XPoly};

use super::GenSeriesError;

/// `a_0 = a_1 = 1`; `a_n = a_(n-1) - x a_(n-2)` for odd `n` and
/// `(1+x) a_(n-1) - x a_(n-2)` for even `n`.
pub fn a_poly(n: usize) -> XPoly {
    a_polys(n).pop().expect("at least one entry")
}

/// `a_0, ..., a_n`.
pub fn a_polys(n: usize) -> Vec<XPoly> {
    let x = XPoly::x_pow(1);
    let one_plus_x = XPoly::from_i64(&[1, 1]);
    let mut out = vec![XPoly::one(), XPoly::one()];
    for k in 2..=n {
        let prev = if k % 2 == 1 { out[k - 1].clone() } else { &one_plus_x * &out[k - 1] };
        out.push(&prev - &(&x * &out[k - 2]));
    }
    out.truncate(n + 1);
    out
}

/// `P_0 = P_1 = 1`, `P_(n+1) = P_n - x P_(n-1)`.
pub fn chebyshev_p(n: usize) -> XPoly {
    let x = XPoly::x_pow(1);
    let (mut prev, mut cur) = (XPoly::one(), XPoly::one());
    for _ in 1..n {
        let next = &cur - &(&x * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Chebyshev polynomial of the second kind `U_n(t)`, as a polynomial in `t`.
pub fn chebyshev_u(n: usize) -> XPoly {
    let two_t = XPoly::monomial(2, 1);
    let (mut prev, mut cur) = (XPoly::one(), two_t.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_t * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `x^n U_n(1/(2x))`, which should equal `P_n(x^2)`. `None` if a
/// coefficient fails to be integral.
pub fn chebyshev_u_rescaled(n: usize) -> Option<XPoly> {
    let u = chebyshev_u(n);
    let mut out = vec![BigInt::zero(); n + 1];
    for (d, c) in u.coeffs().iter().enumerate() {
        let scale = BigInt::one() << d;
        let (quot, rem) = c.div_rem(&scale);
        if !rem.is_zero() {
            return None;
        }
        out[n - d] = quot;
    }
    Some(XPoly::from_coeffs(out))
}

/// `(1+x)^floor(n/2) P_n(x/(1+x))` with the denominators cleared.
pub fn a_from_chebyshev(n: usize) -> XPoly {
    let p = chebyshev_p(n);
    let half = n / 2;
    let one_plus_x = XPoly::from_i64(&[1, 1]);
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            assert!(k <= half, "deg P_n exceeds floor(n/2)");
            &XPoly::monomial(c.clone(), k) * &one_plus_x.pow((half - k) as u32)
        })
        .fold(XPoly::zero(), |acc, t| &acc + &t)
}

/// The rational form of `A_n^{1->m}(x)`, `n = ms + r`:
/// `N / (a_m a_(m+1))^(s+1)` with `N = a_(2m-2r-1)` when `floor(m/2) <= r`,
/// else `N = a_m a_(m-2r-1)`. For `m = 1` the series is `1`.
pub fn closed_a_1m(m: u32, n: u64) -> Result<RatFunX, GenSeriesError> {
    if m == 0 {
        return Err(GenSeriesError::OutOfRange(format!("level {m}")));
    }
    if m == 1 {
        return Ok(RatFunX::new(XPoly::one(), XPoly::one())?);
    }
    let m = m as usize;
    let (s, r) = ((n / m as u64) as u32, (n % m as u64) as usize);
    let a = a_polys(2 * m);
    let den = (&a[m] * &a[m + 1]).pow(s + 1);
    let num = if m / 2 <= r { a[2 * m - 2 * r - 1].clone() } else { &a[m] * &a[m - 2 * r - 1] };
    Ok(RatFunX::new(num, den)?)
}

/// The matrix `K` advancing the `d_n` by one block of `m + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMatrix {
    entries: Vec<Vec<XPoly>>,
}

fn ceil_half(a: i64) -> i64 {
    (a + 1).div_euclid(2)
}

impl KMatrix {
    fn zero(m: usize) -> Self {
        KMatrix { entries: vec![vec![XPoly::zero(); m + 1]; m + 1] }
    }

    fn add_at(&mut self, i: usize, j: usize, v: XPoly) {
        self.entries[i][j] = &self.entries[i][j] + &v;
    }

    /// Ones on the superdiagonal and `x^(m-1)` on the last
    /// `floor((m+1)/2)` diagonal entries.
    pub fn k1(m: u32) -> Self {
        let m = m as usize;
        let mut k = KMatrix::zero(m);
        for i in 0..m {
            k.add_at(i, i + 1, XPoly::one());
        }
        for i in ceil_half(m as i64 + 1) as usize..=m {
            k.add_at(i, i, XPoly::x_pow(m - 1));
        }
        k
    }

    /// The antidiagonal part: `K_{2,0}` for even `m`, `K_{2,1}` for odd `m`,
    /// and zero for `m = 1`.
    pub fn k2(m: u32) -> Self {
        let m = m as usize;
        let mut k = KMatrix::zero(m);
        if m == 1 {
            return k;
        }
        k.add_at(0, m, XPoly::x_pow(m - 1));
        k.add_at(m, 1, XPoly::one());
        let upper_rows = if m % 2 == 0 { (m - 1) / 2 } else { (m - 3) / 2 };
        for r in 1..=upper_rows {
            k.add_at(r, m + 1 - r, XPoly::x_pow(m - 2 * r));
            k.add_at(r, m - r, XPoly::x_pow(m - 2 * r - 1));
        }
        if m % 2 == 1 {
            k.add_at((m - 1) / 2, (m + 3) / 2, XPoly::x_pow(1));
        }
        for r in (m + 3) / 2..m {
            k.add_at(r, m + 1 - r, XPoly::x_pow(2 * m - 2 * r));
        }
        k
    }

    pub fn build(m: u32) -> Self {
        let (a, b) = (KMatrix::k1(m), KMatrix::k2(m));
        let mut out = a;
        for (i, row) in b.entries.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                out.add_at(i, j, v);
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &XPoly {
        &self.entries[i][j]
    }

    pub fn apply(&self, v: &[XPoly]) -> Vec<XPoly> {
        self.entries.iter().map(|row| row.iter().zip(v).fold(XPoly::zero(), |acc, (k, d)| &acc + &(k * d))).collect()
    }
}

/// `K` for level `m`.
pub fn build_k(m: u32) -> KMatrix {
    KMatrix::build(m)
}

/// The base table for `0 <= n <= m`; the `ceil((m-1)/2)` branch takes
/// precedence and the lower branch starts at `n = 1`.
pub fn d_base(m: u32, n: u32) -> XPoly {
    let (mi, ni) = (i64::from(m), i64::from(n));
    if n == 0 || n == m {
        XPoly::one()
    } else if ni == ceil_half(mi - 1) {
        XPoly::from_i64(&[1, i64::from(m % 2 == 1)])
    } else if 1 <= ni && ni <= ceil_half(mi - 2) {
        &XPoly::one() + &XPoly::x_pow((m - 2 * n) as usize)
    } else {
        &XPoly::one() + &XPoly::x_pow((2 * m - 2 * n) as usize)
    }
}

/// `d_n(x)` for level `m`.
pub fn d_poly(m: u32, n: u64) -> Result<XPoly, GenSeriesError> {
    if m == 0 {
        return Err(GenSeriesError::OutOfRange(format!("level {m}")));
    }
    let block = u64::from(m) + 1;
    let mut v: Vec<XPoly> = (0..=m).map(|j| d_base(m, j)).collect();
    let k = build_k(m);
    for _ in 0..n / block {
        v = k.apply(&v);
    }
    Ok(v.swap_remove((n % block) as usize))
}

/// The rational form of `A_n^{m->m+1}(x)`: `d_n / (1 - x^m)^(floor(n/(m+1)) + 1)`.
pub fn closed_a_m_m1(m: u32, n: u64) -> Result<RatFunX, GenSeriesError> {
    let d = d_poly(m, n)?;
    let geo = &XPoly::one() - &XPoly::x_pow(m as usize);
    Ok(RatFunX::new(d, geo.pow((n / (u64::from(m) + 1)) as u32 + 1))?)
}
