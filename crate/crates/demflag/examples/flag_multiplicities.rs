//! Graded multiplicities [D(m',s) : D(m,n)]_q from both engines.

use demflag::flag_engine::{graded_engine, mult, mult_table, weighted_mult, Module};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = mult_table(1, 3, 6)?;
    println!("[D(1,s) : D(3,n)]_q");
    for (s, n, v) in table.entries().filter(|(_, _, v)| !v.is_zero()) {
        println!("  s={s} n={n}: {v}");
    }

    // The partition engine works from a different recursion; the values agree.
    let engine = graded_engine();
    for (from, s, to, n) in [(1, 8, 3, 2), (2, 9, 4, 3), (3, 12, 5, 4)] {
        let chain = mult(from, s, to, n)?;
        let part = engine.module(&Module::demazure(from, s as u32)?, to, n)?;
        println!("[D({from},{s}) : D({to},{n})]_q = {chain} (partition engine agrees: {})", chain == part);
    }

    let (r, w) = weighted_mult(2, 11, 3, 5)?;
    println!("[D(2,11) : D(3,5)]_q = q^{r} * ({w})");
    println!("memo entries: {}, hits: {}", engine.memo_len(), engine.memo_hits());
    Ok(())
}
