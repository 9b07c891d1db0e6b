//! ASCII grid mazes and their walk graphs.
//!
//! A maze is a rectangular grid of `#` (wall), `.` (open), and `T` (target)
//! cells. Every non-wall cell becomes a vertex, 4-neighborhood adjacency
//! becomes edges (no diagonals), and the targets form the absorbing set —
//! several targets give a multi-absorber walk. Vertices are numbered
//! row-major, 1-based.

use std::collections::HashMap;

use crate::chain::AsuaVector;
use crate::error::{Error, Result};
use crate::format::decimal_2;
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Wall,
    Open,
    Target,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MazeGrid {
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
}

impl MazeGrid {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cell(&self, row: usize, col: usize) -> Cell {
        self.cells[row * self.cols + col]
    }
}

/// Parses the maze text. Positions in errors are 1-based.
pub fn parse_maze(text: &str) -> Result<MazeGrid> {
    let mut cells = Vec::new();
    let mut cols = None;
    let mut rows = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let width = line.chars().count();
        match cols {
            None => cols = Some(width),
            Some(w) if w != width => return Err(Error::RaggedRows { line: idx + 1 }),
            Some(_) => {}
        }
        for (c, ch) in line.chars().enumerate() {
            let cell = match ch {
                '#' => Cell::Wall,
                '.' => Cell::Open,
                'T' => Cell::Target,
                other => {
                    return Err(Error::IllegalCharacter {
                        line: idx + 1,
                        col: c + 1,
                        ch: other,
                    })
                }
            };
            cells.push(cell);
        }
        rows += 1;
    }
    let cols = cols.unwrap_or(0);
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyMaze);
    }
    if !cells.contains(&Cell::Target) {
        return Err(Error::NoTarget);
    }
    Ok(MazeGrid { rows, cols, cells })
}

/// Coordinate-to-vertex correspondence of a maze graph.
#[derive(Debug, Clone)]
pub struct CoordMap {
    by_vertex: Vec<(usize, usize)>,
    by_coord: HashMap<(usize, usize), VertexId>,
}

impl CoordMap {
    pub fn coord(&self, v: VertexId) -> (usize, usize) {
        self.by_vertex[v.index()]
    }

    pub fn vertex(&self, row: usize, col: usize) -> Option<VertexId> {
        self.by_coord.get(&(row, col)).copied()
    }
}

/// One vertex per non-wall cell, edges between 4-adjacent non-wall cells,
/// targets absorbing. Whether every open cell can actually reach a target
/// is left to the solve-time reachability check.
pub fn maze_to_graph(m: &MazeGrid) -> Result<(Graph, CoordMap)> {
    let mut by_vertex = Vec::new();
    let mut by_coord = HashMap::new();
    for r in 0..m.rows {
        for c in 0..m.cols {
            if m.cell(r, c) != Cell::Wall {
                let v = VertexId::new(by_vertex.len());
                by_coord.insert((r, c), v);
                by_vertex.push((r, c));
            }
        }
    }
    let mut edges = Vec::new();
    let mut absorbing = Vec::new();
    for (i, &(r, c)) in by_vertex.iter().enumerate() {
        let v = VertexId::new(i);
        if m.cell(r, c) == Cell::Target {
            absorbing.push(v);
        }
        // right and down neighbors; the other two directions are covered
        // from the earlier cell
        if c + 1 < m.cols {
            if let Some(u) = by_coord.get(&(r, c + 1)) {
                edges.push((v, *u, 1));
            }
        }
        if r + 1 < m.rows {
            if let Some(u) = by_coord.get(&(r + 1, c)) {
                edges.push((v, *u, 1));
            }
        }
    }
    let g = Graph::build(by_vertex.len(), &edges, &absorbing)?;
    Ok((g, CoordMap { by_vertex, by_coord }))
}

/// Renders per-cell expected absorption steps as an aligned grid: walls as
/// `####`, absorbing cells as `0`, open cells as decimals.
pub fn render_asua_grid(m: &MazeGrid, map: &CoordMap, g: &Graph, t: &AsuaVector) -> String {
    let mut entries = vec![String::new(); m.rows * m.cols];
    for r in 0..m.rows {
        for c in 0..m.cols {
            entries[r * m.cols + c] = match m.cell(r, c) {
                Cell::Wall => "####".to_string(),
                _ => {
                    let v = map.vertex(r, c).expect("non-wall cell has a vertex");
                    if g.is_absorbing(v) {
                        "0".to_string()
                    } else {
                        decimal_2(&t.value_or_zero(v))
                    }
                }
            };
        }
    }
    let width = entries.iter().map(|e| e.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in 0..m.rows {
        let row: Vec<String> = (0..m.cols)
            .map(|c| format!("{:>width$}", entries[r * m.cols + c]))
            .collect();
        out.push_str(row.join(" ").trim_end());
        out.push('\n');
    }
    out
}
