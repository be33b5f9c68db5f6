//! Rational generating functions at q = 1 and the recurrences between them.

use demflag::gen_series::{check_elltheorem, check_genserrec, closed_a_1m, closed_a_m_m1, d_poly, series_a_at_one};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fib = closed_a_1m(3, 0)?;
    println!("A_0^(1->3)(x) = {fib} = {:?}", fib.expand(10)?.iter().map(ToString::to_string).collect::<Vec<_>>());

    for m in 1..=4 {
        for n in [0, m as u64 + 2] {
            let closed = closed_a_m_m1(m, n)?;
            let agree = closed.expand(16)? == series_a_at_one(m, m + 1, n as i64, 16)?;
            println!("A_{n}^({m}->{})(x) = {closed}  d_{n} = {}  (engine agrees: {agree})", m + 1, d_poly(m, n)?);
        }
    }

    let ok = (2..=4).all(|m| (-1..=8).all(|n| check_genserrec(m, n, 12).unwrap_or(false)));
    println!("four-branch recurrence for A^(1->m), m <= 4, n <= 8: {ok}");
    let ok = (1..=4).all(|m| (0..=8).all(|n| check_elltheorem(m, n, 12).unwrap_or(false)));
    println!("five-branch recurrence for A^(m->m+1), m <= 4, n <= 8: {ok}");
    Ok(())
}
