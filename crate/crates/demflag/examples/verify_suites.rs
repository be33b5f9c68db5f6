//! Runs the identity suites programmatically at a reduced scale.

use demflag::cli::verify::{run_suite, Profile, Suite};

fn main() {
    let max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);
    let reports = run_suite(Suite::All, &Profile::scaled(max));
    for r in &reports {
        println!("{r}  [{:.1} ms]", r.elapsed.as_secs_f64() * 1e3);
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{failed} failures at --max {max}");
}
