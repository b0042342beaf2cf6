//! Prints the classes K(n,k) for one dimension, with the c_1 = 0 reduction
//! and, where one exists, the closed form they are compared against.
//!
//!     cargo run --example kclass_table -- 6

use chernhodge::charclass::{kclass_table, printed_kclass};

fn main() -> chernhodge::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let table = kclass_table(n)?;
    for (k, class) in table.iter().enumerate() {
        println!("K({n},{k}) = {}", class.render());
        let reduced = class.with_c1_zero();
        if reduced != *class {
            println!("  c1 = 0: {}", reduced.render());
        }
        if let Some(printed) = printed_kclass(n, k) {
            println!("  closed form agrees: {}", printed == *class);
        }
    }
    Ok(())
}
