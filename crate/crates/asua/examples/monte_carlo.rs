//! Estimate expected absorption steps by simulation and compare against
//! the exact solver. Same seed, same numbers, every run.
//!
//! ```bash
//! cargo run -p asua --example monte_carlo
//! ```

use asua::families::{gen_cycle, gen_path};
use asua::{simulate, solve_graph, vid, Graph, WalkConfig};
use num::ToPrimitive;

fn main() {
    let cases: Vec<(&str, Graph, usize)> = vec![
        ("P_5 from v1", gen_path(5).unwrap(), 1),
        ("C_10 from v5", gen_cycle(10).unwrap(), 5),
        (
            "multigraph from v2",
            Graph::build(3, &[(vid(1), vid(2), 2), (vid(2), vid(3), 1)], &[vid(3)]).unwrap(),
            2,
        ),
    ];

    for (name, g, start) in cases {
        let exact = solve_graph(&g).unwrap().value_or_zero(vid(start));
        let cfg = WalkConfig::new(vid(start), 100_000, 7);
        let est = simulate(&g, &cfg).unwrap();
        let exact_f = exact.to_f64().unwrap();
        let sigmas = if est.stderr > 0.0 {
            (est.mean - exact_f).abs() / est.stderr
        } else {
            0.0
        };
        println!(
            "{name}: exact={exact} mean={:.4} stderr={:.4} ({:.2} standard errors off, {} walks, {} capped)",
            est.mean, est.stderr, sigmas, est.walks_completed, est.walks_capped
        );
        assert!((est.mean - exact_f).abs() <= 4.0 * est.stderr.max(f64::EPSILON));
    }
}
