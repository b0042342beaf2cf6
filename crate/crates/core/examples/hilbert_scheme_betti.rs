//! Betti numbers of Hilbert schemes of points and symmetric products of a
//! surface. Takes a preset (k3, torus, cp2) or a JSON file with Betti numbers.
//!
//!     cargo run --example hilbert_scheme_betti -- k3 4

use chernhodge::hilbert::{hilb_poincare, sym_product_poincare, SurfaceBetti};

fn main() -> chernhodge::Result<()> {
    let mut args = std::env::args().skip(1);
    let surface = SurfaceBetti::resolve(&args.next().unwrap_or_else(|| "k3".into()))?;
    let m_max: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    println!("surface: {surface}");
    for m in 1..=m_max {
        let h = hilb_poincare(&surface, m)?;
        let s = sym_product_poincare(&surface, m)?;
        println!("S^[{m}]: e = {:>8}  b = {:?}", h.euler(), h.betti);
        println!("S^({m}): e = {:>8}  b = {:?}", s.euler(), s.betti);
    }
    Ok(())
}
