use std::collections::HashMap;
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering as AtomicOrdering};

use parking_lot::RwLock;

use super::partition::{Module, Partition};
use super::value::MultValue;
use super::FlagError;

type StepKey = (u32, i64, i64);
type ChainKey = (u32, i64, u32, i64);
type PartKey = (Partition, u32, i64);

/// Memoised evaluator for both recursions over a coefficient ring `R`.
///
/// Every public method is a pure function of its arguments; the memo is the
/// only shared state and is safe to hit from several threads.
pub struct Engine<R: MultValue> {
    memo: bool,
    limit: Option<usize>,
    entries: AtomicUsize,
    hits: AtomicU64,
    step: RwLock<HashMap<StepKey, R>>,
    chain: RwLock<HashMap<ChainKey, R>>,
    part: RwLock<HashMap<PartKey, R>>,
}

impl<R: MultValue> Default for Engine<R> {
    fn default() -> Self {
        Engine::with_limit(None)
    }
}

impl<R: MultValue> Engine<R> {
    /// Memoising engine whose table may hold at most `limit` entries.
    pub fn with_limit(limit: Option<usize>) -> Self {
        Engine {
            memo: true,
            limit,
            entries: AtomicUsize::new(0),
            hits: AtomicU64::new(0),
            step: RwLock::default(),
            chain: RwLock::default(),
            part: RwLock::default(),
        }
    }

    /// Memoising engine configured from `DEMFLAG_MEMO_LIMIT` (unset means unbounded).
    pub fn from_env() -> Self {
        let limit = std::env::var("DEMFLAG_MEMO_LIMIT").ok().and_then(|v| v.trim().parse().ok());
        Engine::with_limit(limit)
    }

    /// Engine that recomputes everything; slow, used to check the memo is transparent.
    pub fn without_memo() -> Self {
        Engine { memo: false, ..Engine::with_limit(None) }
    }

    pub fn memo_len(&self) -> usize {
        self.entries.load(AtomicOrdering::Relaxed)
    }

    pub fn memo_hits(&self) -> u64 {
        self.hits.load(AtomicOrdering::Relaxed)
    }

    pub fn clear(&self) {
        self.step.write().clear();
        self.chain.write().clear();
        self.part.write().clear();
        self.entries.store(0, AtomicOrdering::Relaxed);
    }

    fn lookup<K: Eq + Hash>(&self, map: &RwLock<HashMap<K, R>>, key: &K) -> Option<R> {
        if !self.memo {
            return None;
        }
        let hit = map.read().get(key).cloned();
        if hit.is_some() {
            self.hits.fetch_add(1, AtomicOrdering::Relaxed);
        }
        hit
    }

    fn store<K: Eq + Hash>(&self, map: &RwLock<HashMap<K, R>>, key: K, val: &R) -> Result<(), FlagError> {
        if !self.memo {
            return Ok(());
        }
        let mut guard = map.write();
        if guard.contains_key(&key) {
            return Ok(());
        }
        if let Some(limit) = self.limit {
            if self.entries.load(AtomicOrdering::Relaxed) >= limit {
                return Err(FlagError::MemoLimitExceeded { limit });
            }
        }
        guard.insert(key, val.clone());
        self.entries.fetch_add(1, AtomicOrdering::Relaxed);
        Ok(())
    }

    /// `[D(m,s) : D(m+1,n)]_q`.
    pub fn step(&self, m: u32, s: i64, n: i64) -> Result<R, FlagError> {
        if m == 0 {
            return Err(FlagError::InvalidLevel(format!("level must be positive, got {m}")));
        }
        if n < 0 || s < n {
            return Ok(R::zero());
        }
        if n <= i64::from(m) {
            return Ok(step_table(m, s, n));
        }
        let key = (m, s, n);
        if let Some(v) = self.lookup(&self.step, &key) {
            return Ok(v);
        }
        let v = self.step_recursion(m, s, n)?;
        self.store(&self.step, key, &v)?;
        Ok(v)
    }

    /// Runs the step recursion even where the closed table applies; needs
    /// `s > m` and `n >= 0`. Used to cross-check the table on the overlap.
    pub fn step_by_recursion(&self, m: u32, s: i64, n: i64) -> Result<R, FlagError> {
        if m == 0 || s <= i64::from(m) || n < 0 {
            return Err(FlagError::InvalidShape(format!("recursion needs s > m >= 1, n >= 0 (m={m}, s={s}, n={n})")));
        }
        if s < n {
            return Ok(R::zero());
        }
        self.step_recursion(m, s, n)
    }

    /// `[V((m+1), m^a, b) : D(m+1, n)]_q`, the images met by the step recursion.
    fn boundary(&self, m: u32, a: i64, b: i64, n: i64) -> Result<R, FlagError> {
        let mi = i64::from(m);
        let delta = |t: i64| if n == t { R::one() } else { R::zero() };
        Ok(match (a, b) {
            (a, b) if b > 0 && a >= 1 => self.step(m, mi * a + b, n)?,
            (a, 0) if a >= 2 => self.step(m, mi * a, n)?,
            (1, 0) => delta(mi),
            (0, 0) => delta(0),
            (0, b) => delta(b),
            _ => return Err(FlagError::Internal(format!("boundary image ({a},{b}) out of range"))),
        })
    }

    /// The recursion for `n > m`, with `s = m*s1 + s0`, `0 < s0 <= m`.
    fn step_recursion(&self, m: u32, s: i64, n: i64) -> Result<R, FlagError> {
        let mi = i64::from(m);
        let s1 = (s - 1).div_euclid(mi);
        let s0 = s - mi * s1;
        let mut r = self.boundary(m, s1 - 1, s0 - 1, n - mi - 1)?.mul_q_pow(2 * (s - n));
        if 2 * s0 <= mi {
            r.add_assign_ref(&self.boundary(m, s1 - 1, mi - s0, n)?.mul_q_pow(4 * s1 * s0));
            if s1 == 1 && 2 * s0 != mi && n == s0 {
                r.add_assign_ref(&R::q_pow(mi + 2 * s0));
            }
            if s0 == 1 && s1 == 2 && n == mi + 1 {
                r.add_assign_ref(&R::q_pow(3 * mi));
            }
        } else {
            r.add_assign_ref(&self.boundary(m, s1, mi - s0, n)?.mul_q_pow((2 * s1 + 1) * (2 * s0 - mi)));
            for j in 1..=k_xi(2 * s0 - mi, s1) {
                let img = self.boundary(m, s1 - 1, mi - s0 + i64::from(j == 2), n - mi - 1)?;
                r.add_assign_ref(&img.mul_q_pow(2 * s1 * (2 * s0 - j) + j + mi - 2 * n));
            }
            if s0 == mi && (s1 == 1 || s1 == 2) {
                let target = if s1 == 1 { 0 } else { mi + 1 };
                if n == target {
                    r.add_assign_ref(&R::q_pow(4 * mi * s1 - (s1 - 1) * (2 * s1 + 1)));
                }
            }
        }
        Ok(r)
    }

    /// `[D(from,s) : D(to,n)]_q` by composing level steps.
    pub fn chain(&self, from: u32, s: i64, to: u32, n: i64) -> Result<R, FlagError> {
        if from == 0 || to < from {
            return Err(FlagError::InvalidLevel(format!("need 1 <= {from} <= {to}")));
        }
        if n < 0 || s < n {
            return Ok(R::zero());
        }
        if from == to {
            return Ok(if n == s { R::one() } else { R::zero() });
        }
        let key = (from, s, to, n);
        if let Some(v) = self.lookup(&self.chain, &key) {
            return Ok(v);
        }
        let mut acc = R::zero();
        for p in n..=s {
            let first = self.step(from, s, p)?;
            if first.is_zero() {
                continue;
            }
            let rest = self.chain(from + 1, p, to, n)?;
            if !rest.is_zero() {
                acc.add_assign_ref(&first.mul_ref(&rest));
            }
        }
        self.store(&self.chain, key, &acc)?;
        Ok(acc)
    }

    /// `[V : D(m,n)]_q` by the general partition recursion.
    pub fn module(&self, module: &Module, m: u32, n: i64) -> Result<R, FlagError> {
        match module {
            Module::Trivial => Ok(if n == 0 { R::one() } else { R::zero() }),
            Module::V(p) => self.partition(p, m, n),
        }
    }

    fn partition(&self, t: &Partition, m: u32, n: i64) -> Result<R, FlagError> {
        if n < 0 {
            return Ok(R::zero());
        }
        if m < t.xi0() {
            return Err(FlagError::InvalidLevel(format!("level {m} below head of {t}")));
        }
        let len = t.len();
        if len == 1 {
            return Ok(base(t.xi0(), t.tail(), m, n));
        }
        let xi = t.xi();
        if t.xi0() == m && xi == m {
            return Ok(if n == t.weight() { R::one() } else { R::zero() });
        }
        let key = (t.clone(), m, n);
        if let Some(v) = self.lookup(&self.part, &key) {
            return Ok(v);
        }
        let v = self.partition_recursion(t, m, n)?;
        self.store(&self.part, key, &v)?;
        Ok(v)
    }

    fn partition_recursion(&self, t: &Partition, m: u32, n: i64) -> Result<R, FlagError> {
        let len = t.len();
        let l = len as i64;
        let xi = t.xi();
        let xl = t.tail();
        let p = t.p();
        let a = len - 1 - p;
        let big = xi + 1;
        let image = |na: usize, nb: usize, tail: Option<u32>| -> Result<Module, FlagError> {
            let mut parts = vec![big; na];
            parts.extend(std::iter::repeat_n(xi, nb));
            parts.extend(tail);
            let img = Module::canonical(big, parts)?;
            if !img.below(t) {
                return Err(FlagError::Internal(format!("recursion image of {t} is not smaller")));
            }
            Ok(img)
        };
        let eval = |img: Module, e: i64| -> Result<R, FlagError> { Ok(self.module(&img, m, n)?.mul_q_pow(e)) };

        let (xi, xl, pi) = (i64::from(xi), i64::from(xl), p as i64);
        let mut r = eval(image(a + 1, p - 1, Some(xl as u32 - 1))?, 0)?;
        let d = 2 * xl - xi;
        if d > 0 {
            for j in 0..=k_xi(d, pi) {
                let img = match j {
                    0 => image(a, p, Some((xi - xl) as u32))?,
                    _ => image(a + 1, p - 1, Some((xi - xl + i64::from(j == 2)) as u32))?,
                };
                r.add_assign_ref(&eval(img, (2 * l - 1) * (d - j))?);
            }
            if xl == xi && (p == 1 || p == 2) {
                r.add_assign_ref(&eval(image(len - 2, 0, None)?, 4 * xl * (l - 1) - (pi - 1) * (2 * l - 1))?);
            }
        } else {
            r.add_assign_ref(&eval(image(a, p - 1, Some((xi - xl) as u32))?, 4 * xl * (l - 1))?);
            if p == 1 && 2 * xl != xi {
                r.add_assign_ref(&eval(image(len - 2, 0, Some(xl as u32))?, (2 * l - 3) * xi + 2 * xl)?);
            }
            if xl == 1 && p == 2 {
                r.add_assign_ref(&eval(image(len - 2, 0, None)?, (2 * l - 3) * xi)?);
            }
        }
        Ok(r)
    }
}

/// The four-case integer `k`, from `d = 2*tail - xi` and the count of `xi`
/// parts (for the step recursion the count is `s1`).
pub(crate) fn k_xi(d: i64, count: i64) -> i64 {
    match d {
        d if d >= 3 && count == 1 => 2,
        d if d >= 3 || d == 2 => 1,
        1 => 0,
        _ => -1,
    }
}

/// Closed value of `[D(m,s) : D(m+1,n)]_q` for `0 <= n <= m`.
pub(crate) fn step_table<R: MultValue>(m: u32, s: i64, n: i64) -> R {
    let m = i64::from(m);
    for j in 0..=s.div_euclid(m) {
        let k = s - m * j;
        if !(0..=m).contains(&k) {
            continue;
        }
        if n == k {
            return R::q_pow(j * (m * j + 2 * k));
        }
        if n == m - k {
            return R::q_pow((j + 1) * (m * j + 2 * k - m));
        }
    }
    R::zero()
}

/// `[D(xi0, xi1) : D(m, s)]_q` for the length-one module.
pub(crate) fn base<R: MultValue>(xi0: u32, xi1: u32, m: u32, s: i64) -> R {
    let (xi0, xi1, m) = (i64::from(xi0), i64::from(xi1), i64::from(m));
    let gap = xi1 - s;
    if s == xi1 || ((2 * xi1 - m).max(0) < gap && gap <= (2 * xi1 - xi0).max(0)) {
        R::q_pow(gap)
    } else {
        R::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::QPoly;
    use num_bigint::BigInt;

    fn q(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn k_cases() {
        assert_eq!(k_xi(3, 1), 2);
        assert_eq!(k_xi(3, 2), 1);
        assert_eq!(k_xi(2, 1), 1);
        assert_eq!(k_xi(1, 1), 0);
        assert_eq!(k_xi(0, 1), -1);
    }

    #[test]
    fn step_values() {
        let e = Engine::<QPoly>::default();
        assert_eq!(e.step(2, 2, 0).unwrap(), q("q^2"));
        assert_eq!(e.step(2, 3, 1).unwrap(), q("q^4"));
        assert_eq!(e.step(3, 2, 2).unwrap(), q("1"));
        assert_eq!(e.step(1, 3, 1).unwrap(), q("q^8"));
        assert_eq!(e.step(1, 2, 1).unwrap(), q("q^3"));
        assert!(e.step(1, 2, 3).unwrap().is_zero());
        assert!(e.step(1, -2, -3).unwrap().is_zero());
    }

    #[test]
    fn chain_values() {
        let e = Engine::<QPoly>::default();
        assert_eq!(e.chain(1, 3, 2, 1).unwrap(), q("q^8"));
        assert_eq!(e.chain(1, 2, 2, 0).unwrap(), q("q^4"));
        assert_eq!(e.chain(1, 2, 3, 0).unwrap(), q("q^2 + q^4"));
        assert_eq!(e.chain(2, 5, 2, 5).unwrap(), q("1"));
        assert!(e.chain(2, 1, 1, 0).is_err());
    }

    #[test]
    fn base_cases() {
        assert_eq!(base::<QPoly>(2, 1, 3, 1), q("1"));
        assert!(base::<QPoly>(2, 2, 3, 1).is_zero());
        assert_eq!(base::<QPoly>(1, 1, 2, 0), q("q"));
    }

    #[test]
    fn numeric_engine_is_q_at_one() {
        let g = Engine::<QPoly>::default();
        let n = Engine::<BigInt>::default();
        for s in 0..12 {
            for t in 0..=s {
                assert_eq!(g.chain(1, s, 4, t).unwrap().eval_one(), n.chain(1, s, 4, t).unwrap());
            }
        }
    }

    #[test]
    fn memo_limit_fails_loudly() {
        let e = Engine::<QPoly>::with_limit(Some(3));
        let err = e.chain(1, 12, 4, 0).unwrap_err();
        assert_eq!(err, FlagError::MemoLimitExceeded { limit: 3 });
    }

    #[test]
    fn memo_is_transparent() {
        let with = Engine::<QPoly>::default();
        let without = Engine::<QPoly>::without_memo();
        for (m, s, n) in [(1, 7, 2), (2, 9, 4), (3, 8, 5), (1, 6, 0)] {
            assert_eq!(with.chain(m, s, m + 2, n).unwrap(), without.chain(m, s, m + 2, n).unwrap());
        }
        assert!(with.memo_len() > 0);
        assert_eq!(without.memo_len(), 0);
    }
}
