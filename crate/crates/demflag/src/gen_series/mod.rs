//! Generating series of flag multiplicities, their rational closed forms
//! at `q = 1`, and the recurrences relating them.

mod rational;
mod recurrences;

use num_bigint::BigInt;
use thiserror::Error;

use crate::flag_engine::{self, FlagError};
use crate::qpoly::{QPoly, QPolyError, XSeries};

pub use rational::{
    a_from_chebyshev, a_poly, a_polys, build_k, chebyshev_p, chebyshev_u, chebyshev_u_rescaled, closed_a_1m,
    closed_a_m_m1, d_base, d_poly, KMatrix,
};
pub use recurrences::{check_elltheorem, check_genserrec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenSeriesError {
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error(transparent)]
    Poly(#[from] QPolyError),
}

/// Which generating series to build: the coefficient of `x^p` is
/// `[D(m_from, n+p) : D(m_to, n)]_q`, optionally weighted and optionally
/// restricted to `p` of one parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesSpec {
    pub m_from: u32,
    pub m_to: u32,
    pub n: i64,
    pub weighted: bool,
    pub parity: Option<u8>,
    pub x_order: usize,
}

impl SeriesSpec {
    pub fn new(m_from: u32, m_to: u32, n: i64, x_order: usize) -> Self {
        SeriesSpec { m_from, m_to, n, weighted: false, parity: None, x_order }
    }

    pub fn weighted(self) -> Self {
        SeriesSpec { weighted: true, ..self }
    }

    pub fn parity(self, k: u8) -> Self {
        SeriesSpec { parity: Some(k), ..self }
    }

    fn validate(&self) -> Result<(), GenSeriesError> {
        if self.m_from == 0 || self.m_to < self.m_from {
            return Err(FlagError::InvalidLevel(format!("need 1 <= {} <= {}", self.m_from, self.m_to)).into());
        }
        if self.n < 0 || self.x_order == 0 || self.parity.is_some_and(|k| k > 1) {
            return Err(GenSeriesError::OutOfRange(format!("{self:?}")));
        }
        Ok(())
    }

    fn keeps(&self, p: usize) -> bool {
        self.parity.is_none_or(|k| p % 2 == usize::from(k))
    }
}

/// `A_n^{m_from -> m_to}(x, q)` or a weighted or parity-filtered variant.
pub fn series_a(spec: &SeriesSpec) -> Result<XSeries, GenSeriesError> {
    spec.validate()?;
    let coeffs = (0..spec.x_order)
        .map(|p| {
            if !spec.keeps(p) {
                return Ok(QPoly::zero());
            }
            let v = flag_engine::mult(spec.m_from, spec.n + p as i64, spec.m_to, spec.n)?;
            Ok(if spec.weighted { v.weight_split().1 } else { v })
        })
        .collect::<Result<Vec<_>, GenSeriesError>>()?;
    Ok(XSeries::from_coeffs(coeffs, spec.x_order))
}

/// `A_n^{m_from -> m_to}(x)` at `q = 1`, computed on the numeric engine.
/// `n = -1` gives the series `1` by convention.
pub fn series_a_at_one(m_from: u32, m_to: u32, n: i64, x_order: usize) -> Result<Vec<BigInt>, GenSeriesError> {
    if n == -1 {
        let mut one = vec![BigInt::from(0); x_order];
        if let Some(c) = one.first_mut() {
            *c = BigInt::from(1);
        }
        return Ok(one);
    }
    SeriesSpec::new(m_from, m_to, n, x_order).validate()?;
    (0..x_order as i64).map(|p| Ok(flag_engine::mult_at_one(m_from, n + p, m_to, n)?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_examples() {
        let s = series_a(&SeriesSpec::new(2, 4, 3, 6)).unwrap();
        assert!(s.coeff(0).is_one());
        let ones = series_a_at_one(1, 2, 0, 8).unwrap();
        assert!(ones.iter().all(|c| *c == BigInt::from(1)));
        let odd = series_a(&SeriesSpec::new(2, 3, 0, 12).parity(1)).unwrap();
        assert!(odd.is_zero());
        assert!(series_a(&SeriesSpec::new(3, 2, 0, 4)).is_err());
        assert_eq!(series_a_at_one(1, 3, -1, 3).unwrap(), vec![1.into(), 0.into(), 0.into()]);
    }

    #[test]
    fn weighted_parity_filter() {
        let w = series_a(&SeriesSpec::new(2, 3, 4, 8).weighted().parity(0)).unwrap();
        for p in 0..8 {
            if p % 2 == 1 {
                assert!(w.coeff(p).is_zero());
            } else if !w.coeff(p).is_zero() {
                assert!(w.coeff(p).coeff(0) != BigInt::from(0));
            }
        }
    }
}
