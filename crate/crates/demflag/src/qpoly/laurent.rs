use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::QPolyError;

/// Laurent polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Stored densely from the lowest exponent. The canonical form has no zero
/// coefficient at either end, and the zero polynomial is an empty vector,
/// so derived equality is structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::q_pow(0)
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        QPoly::monomial(BigInt::one(), e)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        QPoly::from_dense(e, vec![c.into()])
    }

    /// Integer constant.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::monomial(c, 0)
    }

    /// Builds from dense coefficients starting at exponent `lo`.
    pub fn from_dense(lo: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { lo, coeffs };
        p.normalize();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return QPoly::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap_or(lo);
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        QPoly::from_dense(lo, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a non-zero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo)
    }

    /// Highest exponent with a non-zero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    /// Number of non-zero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.lo {
            return BigInt::zero();
        }
        self.coeffs.get((e - self.lo) as usize).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Non-zero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.lo + i as i64, c))
    }

    /// Some `(c, e)` when the polynomial is the single term `c*q^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        (self.coeffs.len() == 1).then(|| (&self.coeffs[0], self.lo))
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        QPoly { lo: self.lo + e, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        QPoly::from_dense(self.lo, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Substitutes `q -> q^k`.
    pub fn sub_qpower(&self, k: u32) -> QPoly {
        assert!(k >= 1, "substitution power must be positive");
        QPoly::from_terms(self.terms().map(|(e, c)| (e * i64::from(k), c.clone())))
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Splits off the lowest power: returns `(r, w)` with `q^r * w == self`
    /// and `w` having a non-zero constant term. Zero maps to `(0, 0)`.
    pub fn weight_split(&self) -> (i64, QPoly) {
        if self.is_zero() {
            return (0, QPoly::zero());
        }
        (self.lo, self.shift(-self.lo))
    }

    /// Keeps only the terms with exponent below `order`.
    pub fn truncate(&self, order: i64) -> QPoly {
        let Some(hi) = self.max_exp() else {
            return QPoly::zero();
        };
        if hi < order {
            return self.clone();
        }
        let keep = (order - self.lo).max(0) as usize;
        QPoly::from_dense(self.lo, self.coeffs[..keep].to_vec())
    }

    /// True when every coefficient is non-negative and every exponent is
    /// non-negative, i.e. the polynomial lies in N[q].
    pub fn in_natural_q(&self) -> bool {
        self.is_zero() || (self.lo >= 0 && self.coeffs.iter().all(|c| !c.is_negative()))
    }

    /// Exact division; fails unless `divisor` divides `self` in Z[q, 1/q].
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly, QPolyError> {
        if divisor.is_zero() {
            return Err(QPolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Err(QPolyError::InexactDivision);
        }
        let lead = divisor.coeffs.last().expect("non-zero divisor");
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (t, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(QPolyError::InexactDivision);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &t * d;
            }
            quot[i] = t;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(QPolyError::InexactDivision);
        }
        Ok(QPoly::from_dense(self.lo - divisor.lo, quot))
    }

    pub fn pow(&self, k: u32) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn add_scaled(&mut self, other: &QPoly, negate: bool) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if negate { -other.clone() } else { other.clone() };
            return;
        }
        let lo = self.lo.min(other.lo);
        let hi = self.max_exp().unwrap().max(other.max_exp().unwrap());
        if lo < self.lo {
            let pad = (self.lo - lo) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(BigInt::zero(), pad));
            self.lo = lo;
        }
        let len = (hi - lo + 1) as usize;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        let off = (other.lo - self.lo) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            if negate {
                self.coeffs[off + i] -= c;
            } else {
                self.coeffs[off + i] += c;
            }
        }
        self.normalize();
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match (mag.is_one(), e) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => f.write_str("q")?,
                (true, _) => write!(f, "q^{e}")?,
                (false, 1) => write!(f, "{mag}*q")?,
                (false, _) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for QPoly {
    type Err = QPolyError;

    /// Parses the display format, e.g. `1 + 2*q^3 - q^5` or `q^-2 - 3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || QPolyError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        let bytes = compact.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut negative = false;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                negative = bytes[i] == b'-';
                i += 1;
            } else if i > 0 {
                return Err(bad());
            }
            // A term runs to the next sign that is not an exponent sign.
            let start = i;
            while i < bytes.len() {
                let b = bytes[i];
                if (b == b'+' || b == b'-') && i > start && bytes[i - 1] != b'^' {
                    break;
                }
                i += 1;
            }
            let (e, c) = parse_term(&compact[start..i]).ok_or_else(bad)?;
            terms.push((e, if negative { -c } else { c }));
        }
        Ok(QPoly::from_terms(terms))
    }
}

fn parse_term(t: &str) -> Option<(i64, BigInt)> {
    if t.is_empty() {
        return None;
    }
    let (coeff, var) = match t.find('q') {
        None => return Some((0, t.parse().ok()?)),
        Some(0) => (BigInt::one(), t),
        Some(pos) => {
            let c = t[..pos].strip_suffix('*')?;
            (c.parse().ok()?, &t[pos..])
        }
    };
    let exp = match var.strip_prefix('q')? {
        "" => 1,
        rest => rest.strip_prefix('^')?.parse().ok()?,
    };
    Some((exp, coeff))
}

impl PartialOrd for QPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but total order (by exponent range then coefficients), so
/// polynomials can key ordered maps.
impl Ord for QPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.lo, self.coeffs.len(), &self.coeffs).cmp(&(other.lo, other.coeffs.len(), &other.coeffs))
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        QPoly::constant(c)
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        self.add_scaled(rhs, false);
    }
}

impl AddAssign for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        self.add_scaled(&rhs, false);
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        self.add_scaled(rhs, true);
    }
}

impl SubAssign for QPoly {
    fn sub_assign(&mut self, rhs: QPoly) {
        self.add_scaled(&rhs, true);
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(mut self) -> QPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -self.clone()
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        if let Some((c, e)) = rhs.as_monomial() {
            return if c.is_one() { self.shift(e) } else { self.scale(c).shift(e) };
        }
        if let Some((c, e)) = self.as_monomial() {
            return if c.is_one() { rhs.shift(e) } else { rhs.scale(c).shift(e) };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QPoly::from_dense(self.lo + rhs.lo, out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, x| acc + x)
    }
}
