//! Closed-form expected absorption steps for paths, cycles, stems, and
//! sea-dragon trees, cross-checked against the exact solver on the spot.
//!
//! ```bash
//! cargo run -p asua --example closed_forms
//! ```

use asua::closed_form::{
    cycle_asua, path_asua, sd1_asua, sd3_asua, stem_offset, stem_vertex_asua, SeaDragonSpec,
};
use asua::families::{gen_cycle, gen_path, gen_sea_dragon, sea_dragon_layout};
use asua::rational::natural;
use asua::{solve_graph, vid};

fn main() {
    // Path P_6 with absorber v6: t(v_i) = (n-1)^2 - (i-1)^2.
    let t = solve_graph(&gen_path(6).unwrap()).unwrap();
    println!("P_6:");
    for i in 1..=5u64 {
        let formula = path_asua(6, i).unwrap();
        let solved = t.value_or_zero(vid(i as usize));
        println!("  t(v{i}) formula={formula} solver={solved}");
        assert_eq!(natural(formula), solved);
    }

    // Cycle C_6: t(v_i) = i(n-i), symmetric around the absorber.
    let t = solve_graph(&gen_cycle(6).unwrap()).unwrap();
    println!("C_6:");
    for i in 1..=5u64 {
        let formula = cycle_asua(6, i).unwrap();
        assert_eq!(natural(formula), t.value_or_zero(vid(i as usize)));
        println!("  t(v{i}) = {formula}");
    }

    // SD1 tree T(5,{2,3}): spine of five with single leaves at v2 and v3.
    let spec = SeaDragonSpec::Sd1 { n: 5, leaf_positions: vec![2, 3] };
    let t = solve_graph(&gen_sea_dragon(&spec).unwrap()).unwrap();
    println!("SD1 T(5,{{2,3}}):");
    for i in 1..=4u64 {
        let formula = sd1_asua(&spec, i).unwrap();
        assert_eq!(natural(formula), t.value_or_zero(vid(i as usize)));
        println!("  t(v{i}) = {formula}");
    }

    // SD3 tree T(5,2^(2)): one stem of length 2 at v2; stem vertices sit
    // l^2 - (j-1)^2 above their attachment.
    let spec = SeaDragonSpec::Sd3 { n: 5, position: 2, stem_length: 2 };
    let layout = sea_dragon_layout(&spec).unwrap();
    let t = solve_graph(&gen_sea_dragon(&spec).unwrap()).unwrap();
    println!("SD3 T(5,2^(2)):");
    println!("  spine: {:?}", (1..=4u64).map(|i| sd3_asua(&spec, i).unwrap()).collect::<Vec<_>>());
    for (offset, &vertex) in layout.stems[0].vertices.iter().enumerate() {
        let j = layout.stems[0].length - offset as u64;
        let formula = stem_vertex_asua(&spec, 0, j).unwrap();
        assert_eq!(natural(formula), t.value_or_zero(vertex));
        println!(
            "  stem u_{j} ({vertex}) = {} + {} = {formula}",
            sd3_asua(&spec, 2).unwrap(),
            stem_offset(2, j).unwrap()
        );
    }
}
