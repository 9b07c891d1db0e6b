use std::time::Duration;

/// Prints the per-criterion pass/fail line and fails the test on a miss.
pub fn criterion(number: u32, description: &str, ok: bool, detail: &str, elapsed: Duration) {
    let status = if ok { "PASS" } else { "FAIL" };
    println!("{status} criterion {number}: {description} [{detail}] in {elapsed:.2?}");
    assert!(ok, "criterion {number} ({description}) failed: {detail}");
}

/// The worked five-state chain: `T = D * A` from the diagonal
/// `D = diag(1/2, 1/2, 1/3, 1/2, 1)` and the adjacency rows
/// `(0,1,1,0,0), (1,0,0,1,0), (1,1,0,0,1), (0,1,1,0,0)`, with state 5
/// absorbing. Row 3 walks to states 1, 2, 5, so this chain is not the walk
/// of any undirected graph and must enter through the raw-rows door.
pub fn worked_chain() -> asua::TransitionMatrix {
    use asua::rational::{fraction, integer};
    let z = integer(0);
    let h = fraction(1, 2);
    let t = fraction(1, 3);
    asua::TransitionMatrix::from_rows(vec![
        vec![z.clone(), h.clone(), h.clone(), z.clone(), z.clone()],
        vec![h.clone(), z.clone(), z.clone(), h.clone(), z.clone()],
        vec![t.clone(), t.clone(), z.clone(), z.clone(), t.clone()],
        vec![z.clone(), h.clone(), h.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), z.clone(), integer(1)],
    ])
    .expect("the worked chain is well formed")
}
