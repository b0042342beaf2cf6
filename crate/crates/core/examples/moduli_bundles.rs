//! Poincare polynomial and chi_y genus of the moduli space of stable rank-2
//! bundles of odd degree on a genus-g curve.
//!
//!     cargo run --example moduli_bundles -- 5

use chernhodge::moduli::{mg_chi, mg_poincare, mg_report, minus_one_multiplicity};

fn main() -> chernhodge::Result<()> {
    let g_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    for g in 2..=g_max {
        let p = mg_poincare(g)?;
        println!("g = {g}: b = {:?}", p.betti);
        println!("  P(1) = {}, root -1 of order {}", p.total(), minus_one_multiplicity(g)?);
        println!("  chi = {:?}", mg_chi(g)?.coeffs);
    }
    println!("chi(M_3; -1 + t) = {}", mg_chi(3)?.shifted_to_minus_one());
    print!("{}", mg_report(3)?.to_table());
    Ok(())
}
