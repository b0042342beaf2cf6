//! Chern character and Todd class in terms of Chern classes, and the
//! Riemann-Roch chi_y genus of a few varieties.

use chernhodge::charclass::{chern_character, todd_class};
use chernhodge::manifolds::{chi_from_chern, complete_intersection_chern, cp_chern};

fn main() -> chernhodge::Result<()> {
    for n in 1..=4 {
        println!("ch (n = {n}): {}", chern_character(n)?.render());
        println!("td (n = {n}): {}", todd_class(n)?.render());
    }
    println!("td_4 as LaTeX: {}", todd_class(4)?.render_latex());

    let cases = [
        ("CP^3", cp_chern(3)?),
        ("quartic surface", complete_intersection_chern(3, &[4])?),
        ("quintic threefold", complete_intersection_chern(4, &[5])?),
    ];
    for (name, data) in cases {
        let chi = chi_from_chern(&data)?;
        println!("{name}: chi^p = {:?}, e = {}", chi.coeffs, data.euler()?);
    }
    Ok(())
}
