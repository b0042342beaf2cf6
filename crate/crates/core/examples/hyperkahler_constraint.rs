//! The Betti-number constraint for hyperkahler manifolds, on Hilbert schemes
//! of a K3 surface and on a few Betti lists that cannot carry such a metric.

use chernhodge::hilbert::{hilb_poincare, SurfaceBetti};
use chernhodge::invariants::{fo_form, hk_report, log_expansion, phi_cap, phi_small, PoincarePoly};

fn main() -> chernhodge::Result<()> {
    for m in 1..=5 {
        let p = hilb_poincare(&SurfaceBetti::K3, m)?;
        println!("K3^[{m}]: Phi = {}, phi = {}", phi_cap(&p)?, phi_small(&p)?);
    }

    let p = hilb_poincare(&SurfaceBetti::K3, 2)?;
    println!("log P(-1+t) for K3^[2]: {}", log_expansion(&p, 3)?);

    // CP^2 x CP^2 and a made-up list with plausible parity
    for betti in [vec![1, 0, 2, 0, 3, 0, 2, 0, 1], vec![1, 0, 22, 0, 300, 0, 22, 0, 1]] {
        let p = PoincarePoly::manifold(betti)?;
        let (lhs, rhs) = fo_form(&p)?;
        println!("{:?}: m e = {lhs}, Betti side = {rhs}", p.betti);
        print!("{}", hk_report(&p)?.to_table());
    }
    Ok(())
}
