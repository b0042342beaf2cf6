//! Chern numbers of the complete intersections with c_1 = 0 and the
//! congruences they must satisfy.
//!
//!     cargo run --example complete_intersections -- 4

use chernhodge::manifolds::{c1_zero_complete_intersections, complete_intersection_chern, divisibility_suite, theorem_checks};

fn main() -> chernhodge::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for n in 1..=n_max {
        for (ambient, degrees) in c1_zero_complete_intersections(n) {
            let x = complete_intersection_chern(ambient, &degrees)?;
            let mut report = divisibility_suite(&x)?;
            report.extend(theorem_checks(&x, None)?);
            let status = if report.ok() { "ok" } else { "FAILED" };
            println!("{degrees:?} in CP^{ambient}: e = {}, {} checks {status}", x.euler()?, report.checks.len());
        }
    }
    Ok(())
}
