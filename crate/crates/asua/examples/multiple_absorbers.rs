//! Two ways to handle several absorbing vertices: keep them all in the
//! chain, or contract them into one vertex. The expected step counts agree
//! exactly, so the equivalence stays a checked fact rather than an
//! assumption.
//!
//! ```bash
//! cargo run -p asua --example multiple_absorbers
//! ```

use asua::{asua_sum, round_trip, solve_graph, vid, Graph, VertexId};

fn main() {
    // C_6 with opposite absorbers v3 and v6.
    let cycle = Graph::build(
        6,
        &[
            (vid(1), vid(2), 1),
            (vid(2), vid(3), 1),
            (vid(3), vid(4), 1),
            (vid(4), vid(5), 1),
            (vid(5), vid(6), 1),
            (vid(6), vid(1), 1),
        ],
        &[vid(3), vid(6)],
    )
    .unwrap();

    let native = solve_graph(&cycle).unwrap();
    println!("native two-absorber solve on C_6 (absorbing v3, v6):");
    for (v, value) in native.iter() {
        println!("  t({v}) = {value}");
    }

    // Contract v3 and v6 into one absorber. The merged vertex keeps id v3
    // and ids above v6 would shift down (none here).
    let merged = cycle.merge_absorbers(vid(3), vid(6)).unwrap();
    let contracted = solve_graph(&merged).unwrap();
    println!("after contracting v3 and v6:");
    for (v, value) in contracted.iter() {
        println!("  t({v}) = {value}");
    }

    for v in cycle.vertices().filter(|v| !cycle.is_absorbing(*v)) {
        let image = if v > vid(6) { VertexId::new(v.index() - 1) } else { v };
        assert_eq!(native.value_or_zero(v), contracted.value_or_zero(image));
    }
    println!("vertex-by-vertex equality holds.\n");

    // Aggregates for a single absorber: the absorption-step sum and a
    // round trip between two vertices.
    let path = Graph::build(
        3,
        &[(vid(1), vid(2), 1), (vid(2), vid(3), 1)],
        &[vid(3)],
    )
    .unwrap();
    println!("P_3 absorbed at v3: sum of values = {}", asua_sum(&path).unwrap());
    println!(
        "P_3 round trip v1 -> v3 -> v1 = {}",
        round_trip(&path, vid(1), vid(3)).unwrap()
    );
}
