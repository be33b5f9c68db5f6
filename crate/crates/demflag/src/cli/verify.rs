//! The identity suites behind `demflag verify` and the acceptance tests.
//!
//! Every check is an exact equality of canonical polynomials or integer
//! series. A [`Profile`] fixes the ranges; the reference profile uses
//! `max = 40` and other values scale every bound proportionally.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::characters::{char_product_d11, demazure_character, dim_demazure, graded_character, level_one_step_decomp};
use crate::closed_forms::{
    carlitz_closed_a23w, cf_1to2, cf_2to3, fourphithree_reduced, fourphithree_term, fourphithree_term_single,
    hypergeom_terms, mock_theta, x_pochhammer, Param, TwoThreeParams,
};
use crate::flag_engine::{graded_engine, mult, mult_at_one, mult_step, weighted_mult, Module};
use crate::gen_series::{
    a_from_chebyshev, a_polys, chebyshev_p, chebyshev_u_rescaled, check_elltheorem, check_genserrec, closed_a_1m,
    closed_a_m_m1, series_a, series_a_at_one, SeriesSpec,
};
use crate::qpoly::{QPoly, XPoly, XSeries};

/// Reference value of the `--max` knob; [`Profile::acceptance`] equals `Profile::scaled(40)`.
pub const REFERENCE_MAX: u32 = 40;

/// Ranges used by the suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub base_level: u32,
    pub base_blocks: i64,
    pub closed_weight: i64,
    pub composition_weight: i64,
    pub agreement_weight: i64,
    pub mock_q_order: i64,
    pub phi_index: usize,
    pub phi_x_order: usize,
    pub hyper_z_order: usize,
    pub hyper_x_order: usize,
    pub carlitz_blocks: i64,
    pub carlitz_x_order: usize,
    pub fourphi_blocks: i64,
    pub fourphi_terms: usize,
    pub genser_max_level: u32,
    pub series_x_order: usize,
    pub closedform_max_level: u32,
    pub a_poly_max: usize,
    pub recurrence_max_level: u32,
    pub recurrence_weight: i64,
    pub dim_weight: i64,
    pub char_level: u32,
    pub char_weight: u32,
    pub product_level: u32,
    pub product_weight: u32,
    pub flag_char_weight: i64,
}

impl Profile {
    /// The bounds of the acceptance criteria.
    pub fn acceptance() -> Self {
        Profile {
            base_level: 6,
            base_blocks: 6,
            closed_weight: 40,
            composition_weight: 16,
            agreement_weight: 18,
            mock_q_order: 40,
            phi_index: 8,
            phi_x_order: 20,
            hyper_z_order: 8,
            hyper_x_order: 12,
            carlitz_blocks: 3,
            carlitz_x_order: 16,
            fourphi_blocks: 2,
            fourphi_terms: 6,
            genser_max_level: 5,
            series_x_order: 20,
            closedform_max_level: 5,
            a_poly_max: 20,
            recurrence_max_level: 5,
            recurrence_weight: 20,
            dim_weight: 20,
            char_level: 3,
            char_weight: 10,
            product_level: 5,
            product_weight: 12,
            flag_char_weight: 10,
        }
    }

    /// Every bound multiplied by `max / 40` (rounded up), never below the
    /// smallest meaningful value.
    pub fn scaled(max: u32) -> Self {
        let a = Profile::acceptance();
        let sc = |b: i64, lo: i64| -> i64 { ((b * i64::from(max) + 39) / 40).max(lo) };
        let su = |b: usize, lo: usize| sc(b as i64, lo as i64) as usize;
        let s32 = |b: u32, lo: u32| sc(i64::from(b), i64::from(lo)) as u32;
        Profile {
            base_level: s32(a.base_level, 1),
            base_blocks: sc(a.base_blocks, 0),
            closed_weight: sc(a.closed_weight, 0),
            composition_weight: sc(a.composition_weight, 0),
            agreement_weight: sc(a.agreement_weight, 0),
            mock_q_order: sc(a.mock_q_order, 1),
            phi_index: su(a.phi_index, 0),
            phi_x_order: su(a.phi_x_order, 1),
            hyper_z_order: su(a.hyper_z_order, 1),
            hyper_x_order: su(a.hyper_x_order, 1),
            carlitz_blocks: sc(a.carlitz_blocks, 0),
            carlitz_x_order: su(a.carlitz_x_order, 1),
            fourphi_blocks: sc(a.fourphi_blocks, 0),
            fourphi_terms: su(a.fourphi_terms, 0),
            genser_max_level: s32(a.genser_max_level, 2),
            series_x_order: su(a.series_x_order, 1),
            closedform_max_level: s32(a.closedform_max_level, 1),
            a_poly_max: su(a.a_poly_max, 4),
            recurrence_max_level: s32(a.recurrence_max_level, 2),
            recurrence_weight: sc(a.recurrence_weight, 0),
            dim_weight: sc(a.dim_weight, 0),
            char_level: s32(a.char_level, 1),
            char_weight: s32(a.char_weight, 0),
            product_level: s32(a.product_level, 1),
            product_weight: s32(a.product_weight, 0),
            flag_char_weight: sc(a.flag_char_weight, 0),
        }
    }
}

/// Groups of criteria selectable with `--suite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Base,
    Composition,
    Closedforms,
    Series,
    Characters,
}

impl Suite {
    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15],
            Suite::Base => &[1, 15],
            Suite::Composition => &[4, 5],
            Suite::Closedforms => &[2, 3, 6, 7, 8, 9],
            Suite::Series => &[10, 11, 12, 13],
            Suite::Characters => &[14],
        }
    }
}

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub checks: u64,
    pub failure: Option<String>,
    pub elapsed: Duration,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} {status} {} ({} checks)", self.id, self.title, self.checks)?;
        if let Some(why) = &self.failure {
            write!(f, ": first counterexample {why}")?;
        }
        Ok(())
    }
}

/// Counts checks and remembers the first mismatch.
struct Tally {
    checks: u64,
}

type Outcome = Result<(), String>;

impl Tally {
    fn new() -> Self {
        Tally { checks: 0 }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, what: impl FnOnce() -> String, left: T, right: T) -> Outcome {
        self.checks += 1;
        if left == right {
            Ok(())
        } else {
            Err(format!("{}: {left:?} != {right:?}", what()))
        }
    }

    fn holds(&mut self, what: impl FnOnce() -> String, ok: bool) -> Outcome {
        self.checks += 1;
        if ok {
            Ok(())
        } else {
            Err(what())
        }
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    format!("error: {e}")
}

pub const TITLES: [&str; 15] = [
    "level-step closed table",
    "closed form 1->2",
    "closed form 2->3",
    "composition across levels",
    "partition engine agrees with step chain",
    "mock theta specialisations",
    "Phi 1->2 series and 1phi1 terms",
    "Carlitz form of the weighted 2->3 series",
    "4phi3 limit, term by term",
    "rational form of A^{1->m}",
    "rational form of A^{m->m+1} via K",
    "a_n, Chebyshev and auxiliary recurrences",
    "genserrec and elltheorem recurrences",
    "dimensions and graded characters",
    "positivity and triangularity",
];

/// Runs one criterion under `profile`.
pub fn run_criterion(id: u8, profile: &Profile) -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    let result = match id {
        1 => base_table(&mut t, profile),
        2 => closed_1to2(&mut t, profile),
        3 => closed_2to3(&mut t, profile),
        4 => composition(&mut t, profile),
        5 => engine_agreement(&mut t, profile),
        6 => mock_theta_check(&mut t, profile),
        7 => phi_series(&mut t, profile),
        8 => carlitz(&mut t, profile),
        9 => fourphithree(&mut t, profile),
        10 => thmgenser1(&mut t, profile),
        11 => closedform(&mut t, profile),
        12 => a_identities(&mut t, profile),
        13 => recurrences(&mut t, profile),
        14 => characters(&mut t, profile),
        15 => positivity(&mut t, profile),
        _ => Err(format!("no criterion {id}")),
    };
    CriterionReport {
        id,
        title: TITLES.get(usize::from(id).wrapping_sub(1)).copied().unwrap_or("unknown"),
        checks: t.checks,
        failure: result.err(),
        elapsed: start.elapsed(),
    }
}

/// Runs every criterion of `suite`, one thread each, reporting in criterion order.
pub fn run_suite(suite: Suite, profile: &Profile) -> Vec<CriterionReport> {
    std::thread::scope(|scope| {
        let handles: Vec<_> =
            suite.criteria().iter().map(|&id| scope.spawn(move || run_criterion(id, profile))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread panicked")).collect()
    })
}

fn closed_table_value(m: i64, j: i64, k: i64, n: i64) -> QPoly {
    if n == k {
        QPoly::q_pow(j * (m * j + 2 * k))
    } else if n == m - k {
        QPoly::q_pow((j + 1) * (m * j + 2 * k - m))
    } else {
        QPoly::zero()
    }
}

fn base_table(t: &mut Tally, p: &Profile) -> Outcome {
    let engine = graded_engine();
    for m in 1..=p.base_level {
        let mi = i64::from(m);
        for j in 0..=p.base_blocks {
            for k in 0..=mi {
                let s = mi * j + k;
                for n in 0..=mi.min(s) {
                    let want = closed_table_value(mi, j, k, n);
                    t.eq(|| format!("mult_step({m},{s},{n})"), mult_step(m, s, n).map_err(err)?, want.clone())?;
                    if s > mi {
                        let rec = engine.step_by_recursion(m, s, n).map_err(err)?;
                        t.eq(|| format!("recursion at ({m},{s},{n})"), rec, want)?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn closed_1to2(t: &mut Tally, p: &Profile) -> Outcome {
    for total in 0..=p.closed_weight {
        for s in 0..=total {
            let d = total - s;
            let engine = mult(1, total, 2, s).map_err(err)?;
            t.eq(|| format!("cf_1to2({s},{d})"), cf_1to2(s, d), engine)?;
            let (r, _) = weighted_mult(1, total, 2, s).map_err(err)?;
            t.eq(|| format!("1->2 shift at ({s},{d})"), r, d * (s + d + s % 2))?;
        }
    }
    Ok(())
}

fn closed_2to3(t: &mut Tally, p: &Profile) -> Outcome {
    for total in 0..=p.closed_weight {
        for n in 0..=total {
            let d = total - n;
            let engine = mult(2, total, 3, n).map_err(err)?;
            t.eq(|| format!("cf_2to3({n},{d})"), cf_2to3(n, d), engine.clone())?;
            if !engine.is_zero() {
                let (r, _) = engine.weight_split();
                t.eq(|| format!("2->3 shift at ({n},{d})"), r, TwoThreeParams::new(n, d).prefactor_exponent())?;
            }
        }
    }
    Ok(())
}

const COMPOSITION_TRIPLES: [(u32, u32, u32); 4] = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)];

fn composition(t: &mut Tally, p: &Profile) -> Outcome {
    for (a, l, b) in COMPOSITION_TRIPLES {
        for s in 0..=p.composition_weight {
            for n in 0..=s {
                let direct = mult(a, s, b, n).map_err(err)?;
                let mut via = QPoly::zero();
                for mid in n..=s {
                    via += &(&mult(a, s, l, mid).map_err(err)? * &mult(l, mid, b, n).map_err(err)?);
                }
                t.eq(|| format!("D({a},{s}) -> D({b},{n}) through level {l}"), direct, via)?;
            }
        }
    }
    Ok(())
}

fn engine_agreement(t: &mut Tally, p: &Profile) -> Outcome {
    let engine = graded_engine();
    for from in 1..=3u32 {
        for to in from..=from + 2 {
            for s in 0..=p.agreement_weight {
                let module = Module::demazure(from, s as u32).map_err(err)?;
                for n in 0..=s {
                    let part = engine.module(&module, to, n).map_err(err)?;
                    t.eq(|| format!("[D({from},{s}):D({to},{n})]"), part, mult(from, s, to, n).map_err(err)?)?;
                }
            }
        }
    }
    Ok(())
}

/// Lower bound for the lowest power of `q` in `[D(1,n+p) : D(3,n)]_q`.
///
/// Through level 2 the term is a sum of products with exponents at least
/// `a^2` (from 1->2 with depth `a`) and `b*ceil(b/2) - 1` (from 2->3 with
/// depth `b`), and `a + b = p`, so every exponent is at least `p^2/3 - 1`.
fn mock_term_bound(p: i64) -> i64 {
    p * p / 3 - 1
}

fn mock_theta_check(t: &mut Tally, p: &Profile) -> Outcome {
    let order = p.mock_q_order;
    for (which, n, shift) in [(0u8, 0i64, 0i64), (1, 1, 1)] {
        let mut acc = QPoly::zero();
        let mut depth = 0;
        while mock_term_bound(depth) + shift < order {
            let term = mult(1, n + depth, 3, n).map_err(err)?;
            if let Some(lo) = term.min_exp() {
                t.holds(|| format!("exponent bound at depth {depth}"), lo >= mock_term_bound(depth))?;
            }
            acc += &term;
            depth += 1;
        }
        let engine = acc.shift(shift).truncate(order);
        t.eq(|| format!("phi_{which} to order {order}"), engine, mock_theta(which, order).map_err(err)?)?;
    }
    Ok(())
}

fn phi_series(t: &mut Tally, p: &Profile) -> Outcome {
    let q2 = QPoly::q_pow(2);
    let phi = |n: usize, order: usize| -> Result<XSeries, String> {
        if n == 0 {
            return Ok(XSeries::one(order));
        }
        series_a(&SeriesSpec::new(1, 2, 2 * (n as i64 - 1), order).weighted()).map_err(err)
    };
    for n in 0..=p.phi_index {
        let even = series_a(&SeriesSpec::new(1, 2, 2 * n as i64, p.phi_x_order).weighted()).map_err(err)?;
        let odd = series_a(&SeriesSpec::new(1, 2, 2 * n as i64 + 1, p.phi_x_order).weighted()).map_err(err)?;
        let closed = x_pochhammer(&QPoly::one(), 1, &q2, n + 1, p.phi_x_order).inverse().map_err(err)?;
        t.eq(|| format!("A_{}^(1->2,w)", 2 * n), &even, &closed)?;
        t.eq(|| format!("A_{}^(1->2,w)", 2 * n + 1), &odd, &closed)?;
    }
    let terms = hypergeom_terms(
        &[Param::q(q2.clone())],
        &[Param::x(QPoly::one(), 1)],
        &q2,
        p.hyper_z_order,
        &Param::q(QPoly::one()),
        p.hyper_x_order,
    )
    .map_err(err)?;
    for (n, term) in terms.iter().enumerate() {
        t.eq(|| format!("z^{n} coefficient of 1phi1"), term, &phi(n, p.hyper_x_order)?)?;
    }
    Ok(())
}

fn carlitz(t: &mut Tally, p: &Profile) -> Outcome {
    for s in 0..=p.carlitz_blocks {
        for r in 0..6 {
            let n = 6 * s + r;
            for k in 0..=1u8 {
                let closed = carlitz_closed_a23w(n, k, p.carlitz_x_order).map_err(err)?;
                let spec = SeriesSpec::new(2, 3, n, p.carlitz_x_order).weighted().parity(k);
                t.eq(|| format!("n={n}, k={k}"), closed, series_a(&spec).map_err(err)?)?;
            }
        }
    }
    Ok(())
}

fn fourphithree(t: &mut Tally, p: &Profile) -> Outcome {
    let order = 2 * p.fourphi_terms + 1;
    for s in 0..=p.fourphi_blocks {
        for r in 0..6 {
            let n = 6 * s + r;
            let params = TwoThreeParams::new(n, 0);
            let (s0, rp) = (s - i64::from(r == 1), params.r_prime());
            let series = series_a(&SeriesSpec::new(2, 3, n, order).weighted().parity(0)).map_err(err)?;
            let factor =
                x_pochhammer(&QPoly::one(), 2, &QPoly::q_pow(2), (2 * s + params.r_tilde() + 1) as usize, order);
            let cleared = series.mul(&factor);
            for j in 0..=p.fourphi_terms {
                let reduced = fourphithree_reduced(s0, rp, j);
                let what = || format!("n={n}, j={j}");
                t.eq(what, fourphithree_term(s0, rp, j).map_err(err)?, reduced.clone())?;
                t.eq(what, fourphithree_term_single(s0, rp, j).map_err(err)?, reduced.clone())?;
                t.eq(what, cleared.coeff(2 * j).clone(), reduced)?;
                if 2 * j + 1 < order {
                    t.holds(what, cleared.coeff(2 * j + 1).is_zero())?;
                }
            }
        }
    }
    Ok(())
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn thmgenser1(t: &mut Tally, p: &Profile) -> Outcome {
    let fib = closed_a_1m(3, 0).map_err(err)?.expand(6).map_err(err)?;
    t.eq(|| "1/a_4 expansion".into(), fib, ints(&[1, 1, 2, 3, 5, 8]))?;
    for m in 2..=p.genser_max_level {
        for n in 0..=3 * u64::from(m) {
            let closed = closed_a_1m(m, n).map_err(err)?.expand(p.series_x_order).map_err(err)?;
            let engine = series_a_at_one(1, m, n as i64, p.series_x_order).map_err(err)?;
            t.eq(|| format!("A_{n}^(1->{m})"), closed, engine)?;
        }
    }
    Ok(())
}

fn closedform(t: &mut Tally, p: &Profile) -> Outcome {
    for m in 1..=p.closedform_max_level {
        for n in 0..=4 * (u64::from(m) + 1) {
            let closed = closed_a_m_m1(m, n).map_err(err)?.expand(p.series_x_order).map_err(err)?;
            let engine = series_a_at_one(m, m + 1, n as i64, p.series_x_order).map_err(err)?;
            t.eq(|| format!("A_{n}^({m}->{})", m + 1), closed, engine)?;
        }
    }
    Ok(())
}

fn a_identities(t: &mut Tally, p: &Profile) -> Outcome {
    let a = a_polys(p.a_poly_max);
    let x2 = XPoly::x_pow(2);
    let one_minus_x = XPoly::from_i64(&[1, -1]);
    for n in 0..=p.a_poly_max {
        t.eq(|| format!("a_{n} from P_{n}"), a_from_chebyshev(n), a[n].clone())?;
        t.eq(|| format!("P_{n}(x^2) from U_{n}"), chebyshev_u_rescaled(n), Some(chebyshev_p(n).sub_xpower(2)))?;
        if n >= 4 {
            let rhs = &(&one_minus_x * &a[n - 2]) - &(&x2 * &a[n - 4]);
            t.eq(|| format!("a_{n} = (1-x)a_{} - x^2 a_{}", n - 2, n - 4), a[n].clone(), rhs)?;
        }
        if n >= 4 && n % 2 == 0 {
            let rhs = &a[n - 1] - &(&x2 * &a[n - 3]);
            t.eq(|| format!("a_{n} = a_{} - x^2 a_{}", n - 1, n - 3), a[n].clone(), rhs)?;
        }
    }
    Ok(())
}

fn recurrences(t: &mut Tally, p: &Profile) -> Outcome {
    for m in 2..=p.recurrence_max_level {
        for n in -1..=p.recurrence_weight {
            let ok = check_genserrec(m, n, p.series_x_order).map_err(err)?;
            t.holds(|| format!("genserrec at m={m}, n={n}"), ok)?;
        }
    }
    for m in 1..=p.recurrence_max_level {
        for n in 0..=p.recurrence_weight {
            let ok = check_elltheorem(m, n, p.series_x_order).map_err(err)?;
            t.holds(|| format!("elltheorem at m={m}, n={n}"), ok)?;
        }
    }
    Ok(())
}

fn characters(t: &mut Tally, p: &Profile) -> Outcome {
    for from in 1..=3u32 {
        for to in from..=from + 3 {
            for s in 0..=p.dim_weight {
                let mut total = BigInt::from(0);
                for n in 0..=s {
                    let c = mult_at_one(from, s, to, n).map_err(err)?;
                    total += c * BigInt::from(dim_demazure(to, n as u64).map_err(err)?);
                }
                let want = BigInt::from(dim_demazure(from, s as u64).map_err(err)?);
                t.eq(|| format!("dim D({from},{s}) through level {to}"), total, want)?;
            }
        }
    }
    for m in 1..=p.char_level {
        for n in 0..=p.char_weight {
            let low = m.max(n);
            let base = graded_character(m, n, low).map_err(err)?;
            t.eq(
                || format!("dim of ch D({m},{n})"),
                base.total_dimension(),
                dim_demazure(m, u64::from(n)).map_err(err)?,
            )?;
            for via in low + 1..=low + 2 {
                t.eq(|| format!("ch D({m},{n}) via {via}"), graded_character(m, n, via).map_err(err)?, base.clone())?;
            }
        }
    }
    let d11 = level_one_step_decomp(1, 1).map_err(err)?.ungraded();
    for m in 1..=p.product_level {
        for w in 0..=p.product_weight {
            let lhs = &demazure_character(m, w).map_err(err)?.ungraded() * &d11;
            let mut rhs = QPoly::zero();
            for (weight, coeff) in char_product_d11(m, w) {
                rhs += &demazure_character(m, weight).map_err(err)?.ungraded().scale(&BigInt::from(coeff));
            }
            t.eq(|| format!("ch D({m},{w}) ch D(1,1)"), lhs, rhs)?;
        }
    }
    for to in 2..=3u32 {
        for s in 0..=p.flag_char_weight {
            let su = s as u32;
            let lhs = graded_character(1, su, su + 2).map_err(err)?;
            let mut rhs = crate::characters::GradedCharacter::zero();
            for n in 0..=s {
                let mlt = mult(1, s, to, n).map_err(err)?;
                if mlt.is_zero() {
                    continue;
                }
                let ch = demazure_character(to, n as u32).map_err(err)?;
                for (e, c) in mlt.terms() {
                    let c = c.to_biguint().ok_or_else(|| format!("negative coefficient in {mlt}"))?;
                    rhs.add(&ch.shifted(e).scaled(&c));
                }
            }
            t.eq(|| format!("ch_gr D(1,{s}) through level {to}"), lhs, rhs)?;
        }
    }
    Ok(())
}

fn check_positive(t: &mut Tally, v: &QPoly, what: impl Fn() -> String) -> Outcome {
    t.holds(|| format!("{} = {v} is not in N[q]", what()), v.in_natural_q())
}

fn triangular(t: &mut Tally, from: u32, s: i64, to: u32) -> Outcome {
    t.eq(|| format!("[D({from},{s}):D({to},{s})]"), mult(from, s, to, s).map_err(err)?, QPoly::one())?;
    for n in s + 1..=s + 2 {
        t.holds(|| format!("[D({from},{s}):D({to},{n})] non-zero"), mult(from, s, to, n).map_err(err)?.is_zero())?;
    }
    Ok(())
}

fn positivity(t: &mut Tally, p: &Profile) -> Outcome {
    let engine = graded_engine();
    for m in 1..=p.base_level {
        let mi = i64::from(m);
        for s in 0..=mi * p.base_blocks + mi {
            for n in 0..=mi.min(s) {
                let v = mult_step(m, s, n).map_err(err)?;
                check_positive(t, &v, || format!("step({m},{s},{n})"))?;
            }
            triangular(t, m, s, m + 1)?;
        }
    }
    let mut pairs: Vec<(u32, u32, i64)> = vec![(1, 2, p.closed_weight), (2, 3, p.closed_weight)];
    for (a, l, b) in COMPOSITION_TRIPLES {
        pairs.extend([(a, l, p.composition_weight), (l, b, p.composition_weight), (a, b, p.composition_weight)]);
    }
    for from in 1..=3u32 {
        for to in from..=from + 2 {
            pairs.push((from, to, p.agreement_weight));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    for (from, to, bound) in pairs {
        for s in 0..=bound {
            for n in 0..=s {
                let v = mult(from, s, to, n).map_err(err)?;
                check_positive(t, &v, || format!("[D({from},{s}):D({to},{n})]"))?;
            }
            triangular(t, from, s, to)?;
        }
    }
    for from in 1..=3u32 {
        for to in from..=from + 2 {
            for s in 0..=p.agreement_weight {
                let module = Module::demazure(from, s as u32).map_err(err)?;
                for n in 0..=s + 2 {
                    let v = engine.module(&module, to, n).map_err(err)?;
                    check_positive(t, &v, || format!("partition engine [D({from},{s}):D({to},{n})]"))?;
                    if n > s {
                        t.holds(|| format!("partition engine non-zero above {s}"), v.is_zero())?;
                    }
                }
            }
        }
    }
    Ok(())
}
