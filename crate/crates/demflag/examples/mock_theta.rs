//! Summing the level-three multiplicities of the trivial module recovers
//! Ramanujan's fifth-order mock theta function phi_0.

use demflag::closed_forms::mock_theta;
use demflag::flag_engine::mult;
use demflag::qpoly::QPoly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order = 30;
    let mut sum = QPoly::zero();
    // Depth p contributes nothing below q^(p^2/3 - 1).
    let mut p = 0;
    while p * p / 3 - 1 < order {
        sum += &mult(1, p, 3, 0)?;
        p += 1;
    }
    let sum = sum.truncate(order);
    let phi0 = mock_theta(0, order)?;
    println!("sum_p [D(1,p) : D(3,0)]_q = {sum} + O(q^{order})");
    println!("phi_0(q)                  = {phi0} + O(q^{order})");
    println!("equal: {}", sum == phi0);
    Ok(())
}
