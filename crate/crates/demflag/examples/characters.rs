//! Graded characters and dimensions of Demazure modules.

use demflag::characters::{char_product_d11, demazure_character, dim_demazure, graded_character};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, n) in [(1, 3), (2, 4), (3, 5)] {
        let ch = demazure_character(m, n)?;
        println!("ch_gr D({m},{n}) = {ch}");
        println!("  dimension {} (closed formula {})", ch.total_dimension(), dim_demazure(m, u64::from(n))?);
        let via = graded_character(m, n, m.max(n) + 2)?;
        println!("  same character through a higher level: {}", via == ch);
    }
    println!("ch D(3,4) * ch D(1,1) = {:?} (weight, coefficient)", char_product_d11(3, 4));
    Ok(())
}
