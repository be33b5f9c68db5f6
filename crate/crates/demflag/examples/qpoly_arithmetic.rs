//! Exact Laurent polynomials in q, Gaussian binomials and truncated x-series.

use demflag::qpoly::{q_binomial, q_pochhammer, QPoly, XSeries};

fn main() {
    let a: QPoly = "q^-1 + 1".parse().expect("valid polynomial");
    let b = QPoly::q_pow(1);
    println!("({a}) * ({b}) = {}", &a * &b);

    for n in 0..=5 {
        let row: Vec<String> = (0..=n).map(|m| q_binomial(n, m).to_string()).collect();
        println!("[{n}, m]_q: {}", row.join(" | "));
    }

    let q = QPoly::q_pow(1);
    println!("(q; q)_4 = {}", q_pochhammer(&q, 4, &q));

    // 1 / (1 - q x) as a series in x.
    let s = XSeries::from_coeffs(vec![QPoly::one(), -QPoly::q_pow(1)], 6);
    println!("1/(1 - q x) = {}", s.inverse().expect("unit constant term"));

    let (shift, w) = "q^3 + 2*q^5".parse::<QPoly>().expect("valid polynomial").weight_split();
    println!("q^3 + 2q^5 = q^{shift} * ({w})");
}
