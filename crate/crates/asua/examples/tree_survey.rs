//! Enumerate all trees up to order 8 and survey which ones attain the
//! extremes of the absorption-step sum t_sigma and the round trip t'. The
//! survey reports whether the star and the path sit at the extremes; it
//! does not assert that they must.
//!
//! ```bash
//! cargo run -p asua --example tree_survey
//! ```

use asua::survey::{render_survey, survey};

fn main() {
    let orders = survey(3..=8).unwrap();
    print!("{}", render_survey(&orders, false));

    println!("\nsummary:");
    for order in &orders {
        println!(
            "  n={}: star min / path max under the max-absorber convention: {} / {}",
            order.n,
            order.sigma_max_convention.star_attains_min,
            order.sigma_max_convention.path_attains_max
        );
    }
}
