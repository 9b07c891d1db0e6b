//! Solve a five-state absorbing chain two ways: from an undirected graph,
//! and from raw transition rows for a chain that no undirected graph
//! produces.
//!
//! ```bash
//! cargo run -p asua --example intro_chain
//! ```

use asua::format::exact_table;
use asua::rational::{fraction, integer};
use asua::{build_transition, chain_residuals, solve_asua, vid, Graph, TransitionMatrix};

fn main() {
    // Route 1: an undirected 5-vertex graph with absorber v5. Walks step to
    // a uniformly random neighbor.
    let g = Graph::build(
        5,
        &[
            (vid(1), vid(2), 1),
            (vid(1), vid(3), 1),
            (vid(2), vid(4), 1),
            (vid(3), vid(4), 1),
            (vid(3), vid(5), 1),
        ],
        &[vid(5)],
    )
    .unwrap();
    let tm = build_transition(&g).unwrap();
    let t = solve_asua(&tm).unwrap();
    println!("undirected graph walk (absorber v5):");
    print!("{}", exact_table(&tm, &t));

    // Route 2: raw row-stochastic rows. This chain walks state 3 to states
    // 1, 2, 5, which breaks undirected symmetry, so it can only be entered
    // as a matrix.
    let z = integer(0);
    let h = fraction(1, 2);
    let third = fraction(1, 3);
    let chain = TransitionMatrix::from_rows(vec![
        vec![z.clone(), h.clone(), h.clone(), z.clone(), z.clone()],
        vec![h.clone(), z.clone(), z.clone(), h.clone(), z.clone()],
        vec![third.clone(), third.clone(), z.clone(), z.clone(), third.clone()],
        vec![z.clone(), h.clone(), h.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), z.clone(), integer(1)],
    ])
    .unwrap();
    let t = solve_asua(&chain).unwrap();
    println!("\nraw chain (state 3 walks to 1, 2, 5):");
    print!("{}", exact_table(&chain, &t));

    // Either way the solution satisfies the local identity
    // t(v) = mean of neighbor values + 1 with zero residual.
    let residuals = chain_residuals(&chain, &t).unwrap();
    println!("\nneighbor-mean residuals (all must be 0):");
    for (v, r) in residuals {
        println!("  {v}: {r}");
    }
}
