//! Graded multiplicities `[D(m',s) : D(m,n)]_q` in Demazure flags.
//!
//! Two independent algorithms are provided. The step engine composes the
//! one-level multiplicities `[D(m,s) : D(m+1,n)]_q` across levels; the
//! partition engine runs the general recursion over the modules `V(xi)`.
//! Both are memoised in process-wide tables (see [`Engine`]).

mod engine;
mod partition;
mod value;

use std::sync::OnceLock;

use num_bigint::BigInt;
use thiserror::Error;

use crate::qpoly::QPoly;

pub use engine::Engine;
pub use partition::{split_weight, Module, Partition};
pub use value::MultValue;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error("invalid level: {0}")]
    InvalidLevel(String),
    #[error("invalid partition shape {0}")]
    InvalidShape(String),
    #[error("memo table exceeded its limit of {limit} entries")]
    MemoLimitExceeded { limit: usize },
    #[error("internal recursion error: {0}")]
    Internal(String),
}

/// Shared engine producing graded values.
pub fn graded_engine() -> &'static Engine<QPoly> {
    static ENGINE: OnceLock<Engine<QPoly>> = OnceLock::new();
    ENGINE.get_or_init(Engine::from_env)
}

/// Shared engine producing values at `q = 1`.
pub fn numeric_engine() -> &'static Engine<BigInt> {
    static ENGINE: OnceLock<Engine<BigInt>> = OnceLock::new();
    ENGINE.get_or_init(Engine::from_env)
}

/// `[D(xi0, xi1) : D(m, s)]_q`, the length-one base case.
pub fn mult_base(xi0: u32, xi1: u32, m: u32, s: i64) -> Result<QPoly, FlagError> {
    if m < xi0 {
        return Err(FlagError::InvalidLevel(format!("flag level {m} is below xi0 = {xi0}")));
    }
    Ok(engine::base(xi0, xi1, m, s))
}

/// `[D(m,s) : D(m+1,n)]_q`.
pub fn mult_step(m: u32, s: i64, n: i64) -> Result<QPoly, FlagError> {
    graded_engine().step(m, s, n)
}

/// `[D(m_from,s) : D(m_to,n)]_q` via the step engine.
pub fn mult(m_from: u32, s: i64, m_to: u32, n: i64) -> Result<QPoly, FlagError> {
    graded_engine().chain(m_from, s, m_to, n)
}

/// `[D(m_from,s) : D(m_to,n)]_q` at `q = 1`.
pub fn mult_at_one(m_from: u32, s: i64, m_to: u32, n: i64) -> Result<BigInt, FlagError> {
    numeric_engine().chain(m_from, s, m_to, n)
}

/// `[V(xi) : D(m,n)]_q` via the partition engine.
pub fn mult_partition(xi: &Partition, m: u32, n: i64) -> Result<QPoly, FlagError> {
    if m < xi.xi0() {
        return Err(FlagError::InvalidLevel(format!("flag level {m} is below xi0 of {xi}")));
    }
    graded_engine().module(&Module::from_partition(xi), m, n)
}

/// The reduced query of the head-stripping identity
/// `[V(xi) : D(xi0,s)]_q = q^shift [V(stripped) : D(xi0, target)]_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrippedQuery {
    pub shift: i64,
    pub stripped: Partition,
    pub level: u32,
    pub target: i64,
}

impl StrippedQuery {
    /// Evaluates the right-hand side.
    pub fn evaluate(&self) -> Result<QPoly, FlagError> {
        Ok(mult_partition(&self.stripped, self.level, self.target)?.shift(self.shift))
    }
}

/// Valid for `xi0 = xi1`. For `ell > 1` the module `V(xi)` does not depend
/// on `xi0`, so a larger head changes the level on the left but not the module.
pub fn strip_head(xi: &Partition, s: i64) -> Result<StrippedQuery, FlagError> {
    let stripped = xi.strip()?;
    let level = xi.xi0();
    Ok(StrippedQuery { shift: 2 * (xi.weight() - s), stripped, level, target: s - i64::from(level) })
}

/// `(r, w)` with `q^r * w = mult(...)` and `w(0) != 0`; `(0, 0)` for a zero multiplicity.
pub fn weighted_mult(m_from: u32, s: i64, m_to: u32, n: i64) -> Result<(i64, QPoly), FlagError> {
    Ok(mult(m_from, s, m_to, n)?.weight_split())
}

/// All multiplicities `[D(from,s) : D(to,n)]_q` with `0 <= n <= s <= s_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub from_level: u32,
    pub to_level: u32,
    rows: Vec<Vec<QPoly>>,
}

impl MultiplicityTable {
    pub fn s_max(&self) -> i64 {
        self.rows.len() as i64 - 1
    }

    /// Entry `(s, n)`; zero outside `0 <= n <= s <= s_max`.
    pub fn get(&self, s: i64, n: i64) -> QPoly {
        if n < 0 || s < n {
            return QPoly::zero();
        }
        self.rows.get(s as usize).and_then(|row| row.get(n as usize)).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn row(&self, s: usize) -> &[QPoly] {
        &self.rows[s]
    }

    /// `(s, n, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (i64, i64, &QPoly)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(s, row)| row.iter().enumerate().map(move |(n, v)| (s as i64, n as i64, v)))
    }
}

pub fn mult_table(m_from: u32, m_to: u32, s_max: i64) -> Result<MultiplicityTable, FlagError> {
    if m_from == 0 || m_to < m_from {
        return Err(FlagError::InvalidLevel(format!("need 1 <= {m_from} <= {m_to}")));
    }
    let rows = (0..=s_max).map(|s| (0..=s).map(|n| mult(m_from, s, m_to, n)).collect()).collect::<Result<_, _>>()?;
    Ok(MultiplicityTable { from_level: m_from, to_level: m_to, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn base_examples() {
        assert_eq!(mult_base(2, 1, 3, 1).unwrap(), q("1"));
        assert!(mult_base(2, 2, 3, 1).unwrap().is_zero());
        assert_eq!(mult_base(1, 1, 2, 0).unwrap(), q("q"));
        assert!(mult_base(3, 1, 2, 0).is_err());
    }

    #[test]
    fn partition_examples() {
        let p = Partition::new(1, vec![1, 1]).unwrap();
        assert_eq!(mult_partition(&p, 2, 0).unwrap(), q("q^4"));
        let d23 = Partition::new(2, vec![2, 1]).unwrap();
        for n in 0..=3 {
            assert_eq!(mult_partition(&d23, 3, n).unwrap(), mult(2, 3, 3, n).unwrap());
        }
        assert!(mult_partition(&d23, 1, 0).is_err());
    }

    #[test]
    fn strip_examples() {
        let cases = [
            ((2, vec![2, 1]), 3, 0, (2, vec![1]), 2, 1),
            ((1, vec![1, 1]), 1, 2, (1, vec![1]), 1, 0),
            ((3, vec![3, 2]), 4, 2, (3, vec![2]), 3, 1),
        ];
        for ((h, parts), s, shift, (sh, sparts), level, target) in cases {
            let r = strip_head(&Partition::new(h, parts).unwrap(), s).unwrap();
            assert_eq!(r.shift, shift);
            assert_eq!(r.stripped, Partition::new(sh, sparts).unwrap());
            assert_eq!((r.level, r.target), (level, target));
        }
        assert!(strip_head(&Partition::new(2, vec![1]).unwrap(), 1).is_err());
    }

    #[test]
    fn weighted_examples() {
        assert_eq!(weighted_mult(1, 4, 2, 4).unwrap(), (0, q("1")));
        assert_eq!(weighted_mult(1, 3, 2, 1).unwrap(), (8, q("1")));
        assert_eq!(weighted_mult(2, 1, 3, 1).unwrap(), (0, q("1")));
    }

    #[test]
    fn table_examples() {
        let t = mult_table(1, 2, 2).unwrap();
        assert_eq!(t.get(2, 0), q("q^4"));
        assert_eq!(t.get(2, 2), q("1"));
        assert_eq!(t.get(2, 3), QPoly::zero());
        let id = mult_table(3, 3, 4).unwrap();
        assert!(id.entries().all(|(s, n, v)| *v == if s == n { QPoly::one() } else { QPoly::zero() }));
        assert_eq!(mult_table(1, 2, 0).unwrap().entries().count(), 1);
    }
}
