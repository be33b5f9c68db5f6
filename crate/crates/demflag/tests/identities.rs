use demflag::closed_forms::{
    carlitz_s, cf_1to2_weighted, cf_2to3_weighted, closed_a0_1to3, gen_binomial_closed, gen_binomial_series,
    hypergeom_rphis, mock_theta, Param, TwoThreeParams,
};
use demflag::flag_engine::{mult, weighted_mult};
use demflag::gen_series::{build_k, d_poly, series_a, SeriesSpec};
use demflag::qpoly::{res2, QPoly, XPoly, XSeries};

#[test]
fn generalised_binomial_identity() {
    for base in [QPoly::q_pow(1), QPoly::q_pow(2)] {
        for k in 0..=8 {
            assert_eq!(
                gen_binomial_series(k, &base, 24).unwrap(),
                gen_binomial_closed(k, &base, 24).unwrap(),
                "k = {k}, base {base}"
            );
        }
    }
}

#[test]
fn carlitz_recurrence_and_closed_sum_agree() {
    for k in 0..=1u8 {
        for n in -1..=24 {
            carlitz_s(n, k).unwrap_or_else(|e| panic!("n = {n}, k = {k}: {e}"));
        }
    }
}

#[test]
fn weighted_exponent_laws() {
    for total in 0..=30i64 {
        for s in 0..=total {
            let p = total - s;
            let (r, w) = weighted_mult(1, total, 2, s).unwrap();
            assert_eq!(r, p * (s + p + res2(s)));
            assert_eq!(w, cf_1to2_weighted(s, p));
            let (r, w) = weighted_mult(2, total, 3, s).unwrap();
            if !w.is_zero() {
                assert_eq!(r, TwoThreeParams::new(s, p).prefactor_exponent(), "2->3 at n = {s}, p = {p}");
                assert_eq!(w, cf_2to3_weighted(s, p));
            }
        }
    }
}

#[test]
fn level_three_trivial_series_matches_its_closed_sum() {
    let engine = series_a(&SeriesSpec::new(1, 3, 0, 14)).unwrap();
    assert_eq!(engine, closed_a0_1to3(14));
}

#[test]
fn mock_theta_from_the_closed_sum() {
    // At x = 1 only finitely many terms reach below q^20.
    let s = closed_a0_1to3(12).sum_coeffs().truncate(20);
    assert_eq!(s, mock_theta(0, 20).unwrap());
}

#[test]
fn one_phi_one_sum() {
    // sum_n z^n / (x;q^2)_n with z = x: the x^k coefficient counts partitions
    // of k into a first part and then any multiset of the q^2-weighted ones.
    let upper = [Param::q(QPoly::q_pow(2))];
    let lower = [Param::x(QPoly::one(), 1)];
    let total = hypergeom_rphis(&upper, &lower, &QPoly::q_pow(2), 8, &QPoly::one(), 1, 8).unwrap();
    let mut direct = XSeries::zero(8);
    for n in 0..8 {
        let spec = SeriesSpec::new(1, 2, 2 * (n as i64 - 1).max(0), 8).weighted();
        let phi = if n == 0 { XSeries::one(8) } else { series_a(&spec).unwrap() };
        direct = direct.add(&phi.scale(&QPoly::one(), n));
    }
    assert_eq!(total, direct);
}

#[test]
fn even_levels_have_vanishing_odd_depths() {
    for j in 0..8 {
        assert_eq!(mult(2, 2 * j, 3, 0).unwrap(), QPoly::q_pow(2 * j * j));
        assert!(mult(2, 2 * j + 1, 3, 0).unwrap().is_zero());
    }
}

#[test]
fn k_matrix_shape() {
    for m in 1..=5u32 {
        let k = build_k(m);
        assert_eq!(k.dim(), m as usize + 1);
        let block = m as u64 + 1;
        for row in 0..block {
            let next = d_poly(m, row + block).unwrap();
            let base: Vec<XPoly> = (0..block).map(|i| d_poly(m, i).unwrap()).collect();
            assert_eq!(k.apply(&base)[row as usize], next, "m = {m}, row {row}");
        }
    }
}
