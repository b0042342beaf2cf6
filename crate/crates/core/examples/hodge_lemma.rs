//! The Hodge-number form of Phi, and the mirror map, on a few diamonds.

use chernhodge::invariants::{hodge_to_chi, mirror, phi_lemma_sides, HodgeDiamond};

fn main() -> chernhodge::Result<()> {
    let k3 = HodgeDiamond::new(vec![vec![1, 0, 1], vec![0, 20, 0], vec![1, 0, 1]])?;
    let quintic = HodgeDiamond::new(vec![
        vec![1, 0, 0, 1],
        vec![0, 1, 101, 0],
        vec![0, 101, 1, 0],
        vec![1, 0, 0, 1],
    ])?;
    for (name, h) in [("K3", k3), ("quintic", quintic)] {
        let (phi, chi_part, correction) = phi_lemma_sides(&h)?;
        println!("{name}: Phi = {phi} = {chi_part} + {correction}");
        let m = mirror(&h);
        println!("  chi = {:?}, mirror chi = {:?}", hodge_to_chi(&h).coeffs, hodge_to_chi(&m).coeffs);
        println!("  mirror h^(1,1) = {}, h^(n-1,1) = {}", m.get(1, 1), m.get(h.n - 1, 1));
    }
    Ok(())
}
