//! Graded sl2-characters and dimensions of Demazure modules, assembled from
//! flag multiplicities and the decomposition of the length-one modules.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::flag_engine::{self, split_weight, FlagError};
use crate::qpoly::QPoly;

/// `sum mult * q^p ch V(j)` stored as `(j, p) -> mult`, zero entries omitted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedCharacter {
    entries: BTreeMap<(u32, i64), BigUint>,
}

impl GradedCharacter {
    pub fn zero() -> Self {
        GradedCharacter::default()
    }

    /// A single `V(j)` at grade `p`.
    pub fn irreducible(j: u32, p: i64) -> Self {
        let mut c = GradedCharacter::zero();
        c.add_component(j, p, BigUint::one());
        c
    }

    pub fn add_component(&mut self, j: u32, p: i64, mult: BigUint) {
        if !mult.is_zero() {
            *self.entries.entry((j, p)).or_default() += mult;
        }
    }

    pub fn multiplicity(&self, j: u32, p: i64) -> BigUint {
        self.entries.get(&(j, p)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every grade moved down by `p`.
    pub fn shifted(&self, p: i64) -> Self {
        GradedCharacter { entries: self.entries.iter().map(|(&(j, g), c)| ((j, g + p), c.clone())).collect() }
    }

    pub fn scaled(&self, c: &BigUint) -> Self {
        let mut out = GradedCharacter::zero();
        for (&(j, p), m) in &self.entries {
            out.add_component(j, p, m * c);
        }
        out
    }

    pub fn add(&mut self, other: &GradedCharacter) {
        for (&(j, p), m) in &other.entries {
            self.add_component(j, p, m.clone());
        }
    }

    /// `sum (j + 1) * mult`.
    pub fn total_dimension(&self) -> BigUint {
        self.entries.iter().map(|(&(j, _), m)| m * BigUint::from(j + 1)).sum()
    }

    /// `(j, p, mult)` ordered by grade, then by decreasing `j`.
    pub fn triples(&self) -> Vec<(u32, i64, BigUint)> {
        let mut v: Vec<_> = self.entries.iter().map(|(&(j, p), m)| (j, p, m.clone())).collect();
        v.sort_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
        v
    }

    /// The ungraded character as a Laurent polynomial in the weight
    /// variable (the `q` of [`QPoly`] plays the role of `z`), with
    /// `ch V(j) = z^j + z^(j-2) + ... + z^-j`.
    pub fn ungraded(&self) -> QPoly {
        let mut by_j: BTreeMap<u32, BigUint> = BTreeMap::new();
        for (&(j, _), m) in &self.entries {
            *by_j.entry(j).or_default() += m;
        }
        by_j.into_iter()
            .map(|(j, m)| {
                let m = BigInt::from(m);
                QPoly::from_terms((0..=j).map(|i| (i64::from(j) - 2 * i64::from(i), m.clone())))
            })
            .sum()
    }
}

impl fmt::Display for GradedCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.triples().iter().map(|(j, p, m)| format!("({j},{p},{m})")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The decomposition of the length-one module `D(xi0, xi1)`: `V(xi1 - i)`
/// at grade `i` for `0 <= i <= (2 xi1 - xi0)_+`.
pub fn level_one_step_decomp(xi0: u32, xi1: u32) -> Result<GradedCharacter, FlagError> {
    if xi0 == 0 || xi1 > xi0 {
        return Err(FlagError::InvalidShape(format!("D({xi0},{xi1}) needs 0 <= xi1 <= xi0")));
    }
    let top = (2 * i64::from(xi1) - i64::from(xi0)).max(0);
    let mut c = GradedCharacter::zero();
    for i in 0..=top {
        c.add_component(xi1 - i as u32, i, BigUint::one());
    }
    Ok(c)
}

/// `dim D(m, n)`: `C(m+2, 2)^n1 ((n0 + 1) + (2 n0 - m)_+ (m + 1) / 2)` with
/// `n = n1 m + n0`, `0 < n0 <= m`; `D(m, 0)` is trivial.
pub fn dim_demazure(m: u32, n: u64) -> Result<BigUint, FlagError> {
    if m == 0 {
        return Err(FlagError::InvalidLevel("level must be positive".into()));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    let (n1, n0) = split_weight(n as i64, m);
    let m = i64::from(m);
    let full = BigUint::from(((m + 1) * (m + 2) / 2) as u64);
    let tail = (n0 + 1) + (2 * n0 - m).max(0) * (m + 1) / 2;
    Ok(full.pow(n1 as u32) * BigUint::from(tail as u64))
}

/// `ch_gr D(m, n)`, assembled from the flag of `D(m, n)` by level-`via`
/// Demazure modules, each of which has length one since `via >= n`.
pub fn graded_character(m: u32, n: u32, via: u32) -> Result<GradedCharacter, FlagError> {
    if via < m.max(n) {
        return Err(FlagError::InvalidLevel(format!("via level {via} below max({m}, {n})")));
    }
    let mut out = GradedCharacter::zero();
    for t in 0..=n {
        let mult = flag_engine::mult(m, i64::from(n), via, i64::from(t))?;
        if mult.is_zero() {
            continue;
        }
        let section = level_one_step_decomp(via, t)?;
        for (p, c) in mult.terms() {
            let c = c.to_biguint().ok_or_else(|| FlagError::Internal(format!("negative multiplicity {mult}")))?;
            out.add(&section.shifted(p).scaled(&c));
        }
    }
    Ok(out)
}

/// `ch_gr D(m, n)` through the smallest admissible via level.
pub fn demazure_character(m: u32, n: u32) -> Result<GradedCharacter, FlagError> {
    graded_character(m, n, m.max(n))
}

/// Right-hand side of the product rule `ch D(m,p) ch D(1,1) = ...` as
/// `(weight, coefficient)` pairs naming `ch D(m, weight)`; zero terms dropped.
pub fn char_product_d11(m: u32, p: u32) -> Vec<(u32, i64)> {
    let mut out = vec![(p + 1, 1)];
    if m == 1 {
        return out;
    }
    let (_, p0) = split_weight(i64::from(p), m);
    let mi = i64::from(m);
    let d = |c: bool| i64::from(c);
    let lower = 1 - d(2 * p0 == mi) - d(2 * p0 == mi + 1) - d(p0 == mi);
    let same = 1 - d(2 * p0 == mi) - d(2 * p0 == mi - 1);
    if lower != 0 && p >= 1 {
        out.push((p - 1, lower));
    }
    if same != 0 {
        out.push((p, same));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triples(c: &GradedCharacter) -> Vec<(u32, i64, u32)> {
        c.triples().into_iter().map(|(j, p, m)| (j, p, u32::try_from(m).unwrap())).collect()
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(triples(&level_one_step_decomp(2, 1).unwrap()), vec![(1, 0, 1)]);
        assert_eq!(triples(&level_one_step_decomp(2, 2).unwrap()), vec![(2, 0, 1), (1, 1, 1), (0, 2, 1)]);
        assert_eq!(triples(&level_one_step_decomp(1, 0).unwrap()), vec![(0, 0, 1)]);
        assert!(level_one_step_decomp(1, 2).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_demazure(3, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(dim_demazure(2, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(dim_demazure(2, 3).unwrap(), BigUint::from(12u32));
        assert_eq!(dim_demazure(1, 2).unwrap(), BigUint::from(9u32));
    }

    #[test]
    fn character_examples() {
        let c = graded_character(2, 2, 2).unwrap();
        assert_eq!(c, level_one_step_decomp(2, 2).unwrap());
        assert_eq!(c.to_string(), "(2,0,1) (1,1,1) (0,2,1)");
        let d12 = graded_character(1, 2, 2).unwrap();
        assert_eq!(d12.total_dimension(), BigUint::from(9u32));
        assert!(graded_character(1, 3, 2).is_err());
    }

    #[test]
    fn product_rule_examples() {
        assert_eq!(char_product_d11(1, 4), vec![(5, 1)]);
        assert_eq!(char_product_d11(2, 1), vec![(2, 1)]);
        assert_eq!(char_product_d11(2, 2), vec![(3, 1), (2, 1)]);
    }

    #[test]
    fn ungraded_weights() {
        let v2 = GradedCharacter::irreducible(2, 5);
        assert_eq!(v2.ungraded(), "q^-2 + 1 + q^2".parse().unwrap());
    }
}
