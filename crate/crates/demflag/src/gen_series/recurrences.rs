use num_bigint::BigInt;

use super::{series_a_at_one, GenSeriesError};

type Series = Vec<BigInt>;

/// Multiplies by `x^k`, keeping the length.
fn x_shift(a: &Series, k: usize) -> Series {
    let zero = BigInt::from(0);
    (0..a.len()).map(|i| if i >= k { a[i - k].clone() } else { zero.clone() }).collect()
}

fn sub(a: &Series, b: &Series) -> Series {
    a.iter().zip(b).map(|(u, v)| u - v).collect()
}

/// Checks the four-branch recurrence expressing `A_n^{1->m}` through
/// `A_(n+1)` and `A_(n+2)`, for `m >= 2` and `n >= -1` (with `A_-1 = 1`).
pub fn check_genserrec(m: u32, n: i64, x_order: usize) -> Result<bool, GenSeriesError> {
    if m < 2 || n < -1 {
        return Err(GenSeriesError::OutOfRange(format!("m = {m}, n = {n}")));
    }
    let a = |k: i64| series_a_at_one(1, m, k, x_order);
    let mi = i64::from(m);
    let n0 = (n + 1) - mi * (n.div_euclid(mi));
    let damp = |s: Series| if m == 2 { vec![BigInt::from(0); s.len()] } else { s };
    let next = a(n + 1)?;
    let rhs = if 2 * n0 == mi - 1 {
        next
    } else if n0 == mi - 1 || 2 * n0 == mi - 2 {
        sub(&next, &damp(x_shift(&next, 1)))
    } else if 2 * n0 == mi {
        sub(&next, &damp(x_shift(&a(n + 2)?, 2)))
    } else {
        sub(&sub(&next, &x_shift(&next, 1)), &damp(x_shift(&a(n + 2)?, 2)))
    };
    Ok(rhs == a(n)?)
}

/// Checks the five-branch recurrence for `A_n^{m->m+1}` with
/// `n = (m+1) p_n - r_n`, `0 <= r_n <= m`.
pub fn check_elltheorem(m: u32, n: i64, x_order: usize) -> Result<bool, GenSeriesError> {
    if m < 1 || n < 0 {
        return Err(GenSeriesError::OutOfRange(format!("m = {m}, n = {n}")));
    }
    let a = |k: i64| series_a_at_one(m, m + 1, k, x_order);
    let mi = i64::from(m);
    let r = (-n).rem_euclid(mi + 1);
    let head = a(n + mi)?;
    let rhs = if r == 0 {
        head
    } else if r <= (mi - 1) / 2 {
        sub(&head, &x_shift(&a(n + 2 * r)?, (2 * r) as usize))
    } else if r == (mi + 1) / 2 && m % 2 == 1 {
        sub(&head, &x_shift(&a(n + 2 * r)?, (2 * r - mi) as usize))
    } else if r == (mi + 1) / 2 {
        sub(&head, &x_shift(&a(n + 2 * r)?, (2 * r) as usize))
    } else {
        let t1 = x_shift(&a(n + 2 * r)?, (2 * r - mi) as usize);
        let t2 = x_shift(&a(n + 2 * r - mi - 1)?, (2 * r - mi - 1) as usize);
        sub(&sub(&head, &t1), &t2)
    };
    Ok(rhs == a(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_checks() {
        assert!(check_genserrec(2, 0, 12).unwrap());
        assert!(check_genserrec(3, 2, 12).unwrap());
        assert!(check_genserrec(2, -1, 12).unwrap());
        assert!(check_elltheorem(2, 3, 12).unwrap());
        assert!(check_elltheorem(1, 0, 12).unwrap());
        assert!(check_elltheorem(3, 2, 12).unwrap());
        assert!(check_genserrec(1, 0, 4).is_err());
    }
}
