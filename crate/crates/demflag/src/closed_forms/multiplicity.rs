use crate::qpoly::{q_binomial, res2, QPoly};

/// `[D(1,s+p) : D(2,s)]_q`.
pub fn cf_1to2(s: i64, p: i64) -> QPoly {
    cf_1to2_weighted(s, p).shift(p * (s + p + res2(s)))
}

/// The weighted 1→2 multiplicity `[s/2 + p, p]_{q^2}`.
pub fn cf_1to2_weighted(s: i64, p: i64) -> QPoly {
    q_binomial(s.div_euclid(2) + p, p).sub_qpower(2)
}

/// Parameters of the 2→3 formula for weight `n = 6s + r` and depth `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoThreeParams {
    pub s: i64,
    pub r: i64,
    pub p: i64,
}

impl TwoThreeParams {
    pub fn new(n: i64, p: i64) -> Self {
        TwoThreeParams { s: n.div_euclid(6), r: n.rem_euclid(6), p }
    }

    pub fn n(&self) -> i64 {
        6 * self.s + self.r
    }

    /// `r' = [r = 1] + [r = 4]`.
    pub fn r_prime(&self) -> i64 {
        i64::from(self.r == 1 || self.r == 4)
    }

    /// `r_bar = [r odd] res2(p) - [r = 1]`.
    pub fn r_bar(&self) -> i64 {
        i64::from(self.r % 2 == 1) * res2(self.p) - i64::from(self.r == 1)
    }

    /// `r_tilde = floor(r / 3)`.
    pub fn r_tilde(&self) -> i64 {
        self.r / 3
    }

    pub fn res2_p(&self) -> i64 {
        res2(self.p)
    }

    /// Exponent of the lowest power of `q` in the multiplicity.
    pub fn prefactor_exponent(&self) -> i64 {
        let half_up = (self.p + 1) / 2;
        self.p * (4 * self.s + self.r - self.r_tilde() + half_up) + self.res2_p() * (self.r_prime() + 1 - half_up)
    }
}

/// The weighted 2→3 multiplicity as the double q-binomial sum.
pub fn cf_2to3_weighted(n: i64, p: i64) -> QPoly {
    let t = TwoThreeParams::new(n, p);
    let (half, e) = (p / 2, t.res2_p());
    let base = 2 * t.s + t.r_tilde();
    (0..=half)
        .map(|j| {
            let first = q_binomial(base + half - j, base).sub_qpower(2);
            let second = q_binomial(t.s + j + t.r_bar(), 2 * j + e).sub_qpower(2);
            (&first * &second).shift(2 * j * (j + t.r_prime() + e))
        })
        .sum()
}

/// `[D(2,n+p) : D(3,n)]_q`.
pub fn cf_2to3(n: i64, p: i64) -> QPoly {
    cf_2to3_weighted(n, p).shift(TwoThreeParams::new(n, p).prefactor_exponent())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn one_two_examples() {
        assert_eq!(cf_1to2(5, 0), q("1"));
        assert_eq!(cf_1to2(1, 2), q("q^8"));
        assert_eq!(cf_1to2(2, 1), q("q^3 + q^5"));
    }

    #[test]
    fn two_three_examples() {
        for j in 0..5 {
            assert_eq!(cf_2to3(0, 2 * j), QPoly::q_pow(2 * j * j));
            assert!(cf_2to3(0, 2 * j + 1).is_zero());
        }
        for n in 0..12 {
            assert_eq!(cf_2to3(n, 0), q("1"));
        }
    }

    #[test]
    fn params() {
        let t = TwoThreeParams::new(13, 3);
        assert_eq!((t.s, t.r, t.n()), (2, 1, 13));
        assert_eq!((t.r_prime(), t.r_bar(), t.r_tilde(), t.res2_p()), (1, 0, 0, 1));
        let u = TwoThreeParams::new(10, 2);
        assert_eq!((u.r_prime(), u.r_bar(), u.r_tilde()), (1, 0, 1));
    }
}
