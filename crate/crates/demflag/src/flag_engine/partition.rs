use std::cmp::Ordering;
use std::fmt;

use super::FlagError;

/// A partition `(xi0 >= (xi+1)^(len-1-p) >= xi^p >= tail > 0)` indexing the
/// module `V(xi)`. Stored as `xi0` plus the explicit parts `xi_1..xi_len`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    xi0: u32,
    parts: Vec<u32>,
}

impl Partition {
    /// Validates the shape constraints.
    pub fn new(xi0: u32, parts: Vec<u32>) -> Result<Self, FlagError> {
        let bad = |why: &str| FlagError::InvalidShape(format!("({xi0}; {parts:?}): {why}"));
        let Some(&tail) = parts.last() else {
            return Err(bad("needs at least one part"));
        };
        if tail == 0 {
            return Err(bad("parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad("parts must be non-increasing"));
        }
        if xi0 < parts[0] {
            return Err(bad("xi0 must be at least xi1"));
        }
        if parts.len() > 1 {
            let xi = parts[parts.len() - 2];
            if parts[..parts.len() - 1].iter().any(|&v| v != xi && v != xi + 1) {
                return Err(bad("middle parts must take the values xi+1 and xi only"));
            }
        }
        Ok(Partition { xi0, parts })
    }

    /// Builds `(xi0, (xi+1)^(len-1-p), xi^p, tail)`.
    pub fn from_shape(xi0: u32, xi: u32, len: usize, p: usize, tail: u32) -> Result<Self, FlagError> {
        let shape_ok = (len == 1 && p == 0) || (len > 1 && (1..len).contains(&p));
        if !shape_ok {
            return Err(FlagError::InvalidShape(format!("len {len} with p {p}")));
        }
        let mut parts = vec![xi + 1; len - 1 - p];
        parts.extend(std::iter::repeat_n(xi, p));
        parts.push(tail);
        Partition::new(xi0, parts)
    }

    /// The partition presenting `D(m, s)` for `s >= 1`: head `m`, parts
    /// `(m^n1, n0)` with `s = n1*m + n0`, `0 < n0 <= m`.
    pub fn demazure(m: u32, s: u32) -> Result<Self, FlagError> {
        if m == 0 || s == 0 {
            return Err(FlagError::InvalidShape(format!("D({m},{s}) has no partition form")));
        }
        let (n1, n0) = split_weight(i64::from(s), m);
        let mut parts = vec![m; n1 as usize];
        parts.push(n0 as u32);
        Partition::new(m, parts)
    }

    pub fn xi0(&self) -> u32 {
        self.xi0
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The length `ell` (number of parts after `xi0`).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The repeated value `xi`, i.e. part `ell - 1`; for `ell = 1` this is `xi0`.
    pub fn xi(&self) -> u32 {
        match self.len() {
            1 => self.xi0,
            l => self.parts[l - 2],
        }
    }

    /// Number of parts equal to `xi` among `xi_1..xi_(ell-1)`.
    pub fn p(&self) -> usize {
        let xi = self.xi();
        self.parts[..self.len() - 1].iter().filter(|&&v| v == xi).count()
    }

    pub fn tail(&self) -> u32 {
        *self.parts.last().expect("validated non-empty")
    }

    /// `|xi|`, the sum of the parts excluding `xi0`.
    pub fn weight(&self) -> i64 {
        self.parts.iter().map(|&v| i64::from(v)).sum()
    }

    /// Drops `xi0`, promoting `xi1` to the new head. Needs `ell > 1`.
    pub fn strip(&self) -> Result<Partition, FlagError> {
        if self.len() < 2 {
            return Err(FlagError::InvalidShape("cannot strip a length-one partition".into()));
        }
        Partition::new(self.parts[0], self.parts[1..].to_vec())
    }

    /// Order used for well-founded recursion: length first, then parts
    /// compared from the last one backwards.
    pub fn recursion_cmp(&self, other: &Partition) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.parts.iter().rev().cmp(other.parts.iter().rev()))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.xi0)?;
        for v in &self.parts {
            write!(f, ",{v}")?;
        }
        f.write_str(")")
    }
}

/// A module reached by the recursion: either trivial or some `V(xi)`, with
/// the head normalised (`xi0 := xi1` once `ell > 1`, since the module does
/// not depend on it there).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Module {
    Trivial,
    V(Partition),
}

impl Module {
    /// Canonicalises a raw tuple that may end in zero parts.
    pub(crate) fn canonical(xi0: u32, mut parts: Vec<u32>) -> Result<Module, FlagError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.is_empty() {
            return Ok(Module::Trivial);
        }
        let head = if parts.len() > 1 { parts[0] } else { xi0 };
        Partition::new(head, parts).map(Module::V)
    }

    pub fn from_partition(p: &Partition) -> Module {
        if p.len() > 1 {
            Module::V(Partition { xi0: p.parts[0], parts: p.parts.clone() })
        } else {
            Module::V(p.clone())
        }
    }

    /// `D(m, s)` as a module (`s = 0` is trivial).
    pub fn demazure(m: u32, s: u32) -> Result<Module, FlagError> {
        if s == 0 {
            return Ok(Module::Trivial);
        }
        Partition::demazure(m, s).map(Module::V)
    }

    pub(crate) fn below(&self, other: &Partition) -> bool {
        match self {
            Module::Trivial => true,
            Module::V(p) => p.recursion_cmp(other) == Ordering::Less,
        }
    }
}

/// `s = n1*m + n0` with `0 < n0 <= m` (so `n1 >= -1`, and `n1 = -1` for `s = 0`).
pub fn split_weight(s: i64, m: u32) -> (i64, i64) {
    let m = i64::from(m);
    let n1 = (s - 1).div_euclid(m);
    (n1, s - n1 * m)
}
