//! Parse an ASCII maze, build its walk graph, and print the expected
//! number of random steps to reach a target from every open cell.
//!
//! ```bash
//! cargo run -p asua --example maze_grid
//! ```

use asua::maze::{maze_to_graph, parse_maze, render_asua_grid};
use asua::solve_graph;

const MAZE: &str = "\
.....#T
.###.#.
.#...#.
.#.###.
.#.....
";

fn main() {
    let grid = parse_maze(MAZE).unwrap();
    let (graph, map) = maze_to_graph(&grid).unwrap();
    println!(
        "maze: {} rows x {} cols, {} cells as vertices, {} absorbing",
        grid.rows(),
        grid.cols(),
        graph.vertex_count(),
        graph.absorbing().len()
    );
    let t = solve_graph(&graph).unwrap();
    println!("{MAZE}");
    println!("expected steps to a target from each cell:");
    print!("{}", render_asua_grid(&grid, &map, &graph, &t));
}
