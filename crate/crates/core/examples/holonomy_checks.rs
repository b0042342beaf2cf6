//! Betti-number relations for G2, Spin(7) and quaternion-Kahler manifolds,
//! run on the bundled reference data.

use chernhodge::fixtures::Fixtures;
use chernhodge::invariants::{g2_quantity, qk_constraint, spin7_report, PoincarePoly, QkBetti};

fn main() -> chernhodge::Result<()> {
    let fx = Fixtures::load()?;
    for g2 in &fx.g2 {
        let p = PoincarePoly::manifold(g2.betti.clone())?;
        println!("G2 {:?}: {}", p.betti, g2_quantity(&p)?);
    }
    let p = PoincarePoly::manifold(fx.spin7.betti.clone())?;
    print!("{}", spin7_report(&p, fx.spin7.b4_minus, None)?.to_table());
    for qk in &fx.qk {
        let b = QkBetti::new(qk.m, qk.beta.clone())?;
        println!("{} (m = {}): {}", qk.name, qk.m, qk_constraint(&b));
    }
    Ok(())
}
