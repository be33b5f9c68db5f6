//! Closed forms for the 1->2 and 2->3 multiplicities, the Carlitz form of the
//! weighted 2->3 series, and the terms of the 4phi3 limit.

use demflag::closed_forms::{carlitz_closed_a23w, cf_1to2, cf_2to3, fourphithree_reduced, fourphithree_term};
use demflag::flag_engine::mult;
use demflag::gen_series::{series_a, SeriesSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (s, p) in [(1, 2), (2, 3), (4, 4)] {
        println!("1->2  s={s} p={p}: {}  (engine: {})", cf_1to2(s, p), mult(1, s + p, 2, s)?);
    }
    for (n, p) in [(0, 4), (3, 3), (5, 6)] {
        println!("2->3  n={n} p={p}: {}  (engine: {})", cf_2to3(n, p), mult(2, n + p, 3, n)?);
    }

    let n = 9;
    for k in 0..=1 {
        let closed = carlitz_closed_a23w(n, k, 8)?;
        let engine = series_a(&SeriesSpec::new(2, 3, n, 8).weighted().parity(k))?;
        println!("A_{n}^(2->3,w)_{k} = {closed}  (matches engine: {})", closed == engine);
    }

    for j in 0..4 {
        println!("4phi3 term j={j}: {}  reduced {}", fourphithree_term(2, 1, j)?, fourphithree_reduced(2, 1, j));
    }
    Ok(())
}
