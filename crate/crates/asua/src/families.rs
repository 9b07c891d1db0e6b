//! Generators for the named graph families and small-tree enumeration.
//!
//! Generated vertex numbering is deterministic so golden outputs stay
//! stable: paths and cycles run `v1..vn` with `v_n` absorbing, the star
//! centers on `v1`, and sea dragons number the spine first and then the
//! attachment vertices in ascending (position, stem index,
//! distance-from-spine) order.

use std::collections::HashSet;

use crate::closed_form::SeaDragonSpec;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::rng::Xoshiro256StarStar;

/// Path `P_n` with absorber `v_n`.
pub fn gen_path(n: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("path needs n >= 2, got {n}")));
    }
    let edges: Vec<_> = (0..n as usize - 1)
        .map(|i| (VertexId::new(i), VertexId::new(i + 1), 1))
        .collect();
    Graph::build(n as usize, &edges, &[VertexId::new(n as usize - 1)])
}

/// Cycle `C_n` with absorber `v_n`.
pub fn gen_cycle(n: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("cycle needs n >= 3, got {n}")));
    }
    let n = n as usize;
    let mut edges: Vec<_> = (0..n - 1)
        .map(|i| (VertexId::new(i), VertexId::new(i + 1), 1))
        .collect();
    edges.push((VertexId::new(n - 1), VertexId::new(0), 1));
    Graph::build(n, &edges, &[VertexId::new(n - 1)])
}

/// Star `S_n`: center `v1` adjacent to `n-1` leaves, center absorbing.
pub fn gen_star(n: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("star needs n >= 2, got {n}")));
    }
    let edges: Vec<_> = (1..n as usize)
        .map(|i| (VertexId::new(0), VertexId::new(i), 1))
        .collect();
    Graph::build(n as usize, &edges, &[VertexId::new(0)])
}

/// One stem of a laid-out sea dragon: vertex ids run outward from the
/// spine, so `vertices[0]` is adjacent to the attachment and
/// `vertices[length-1]` is the far leaf `u_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemLayout {
    pub position: u64,
    pub length: u64,
    pub vertices: Vec<VertexId>,
}

/// Vertex layout of a generated sea dragon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeaDragonLayout {
    pub spine: Vec<VertexId>,
    pub stems: Vec<StemLayout>,
}

impl SeaDragonLayout {
    /// Spine vertex `v_i` (1-based).
    pub fn spine_vertex(&self, i: u64) -> VertexId {
        self.spine[i as usize - 1]
    }
}

/// Deterministic layout for a sea-dragon spec; `gen_sea_dragon` realizes it
/// as a graph.
pub fn sea_dragon_layout(spec: &SeaDragonSpec) -> Result<SeaDragonLayout> {
    spec.validate()?;
    let n = spec.spine_len() as usize;
    let spine: Vec<VertexId> = (0..n).map(VertexId::new).collect();
    let mut next = n;
    let mut stems = Vec::new();
    for (position, lengths) in spec.attachments() {
        for &length in &lengths {
            let vertices: Vec<VertexId> =
                (0..length as usize).map(|d| VertexId::new(next + d)).collect();
            next += length as usize;
            stems.push(StemLayout { position, length, vertices });
        }
    }
    Ok(SeaDragonLayout { spine, stems })
}

/// Builds the tree for a sea-dragon spec, absorber `v_n`.
pub fn gen_sea_dragon(spec: &SeaDragonSpec) -> Result<Graph> {
    let layout = sea_dragon_layout(spec)?;
    let n = spec.spine_len() as usize;
    let mut edges: Vec<(VertexId, VertexId, u64)> = (0..n - 1)
        .map(|i| (layout.spine[i], layout.spine[i + 1], 1))
        .collect();
    let mut count = n;
    for stem in &layout.stems {
        let attach = layout.spine_vertex(stem.position);
        let mut prev = attach;
        for &v in &stem.vertices {
            edges.push((prev, v, 1));
            prev = v;
            count += 1;
        }
    }
    Graph::build(count, &edges, &[layout.spine[n - 1]])
}

/// AHU-style canonical code of a tree, rooted at its centroid (or centroid
/// pair). Two trees get the same code iff they are isomorphic. Returns
/// `None` when the graph is not a simple tree.
pub fn tree_code(g: &Graph) -> Option<String> {
    let n = g.vertex_count();
    if n == 0
        || g.edges().any(|(_, _, m)| m > 1)
        || g.edge_count() != n - 1
        || !g.is_connected()
    {
        return None;
    }
    let mut adj = vec![Vec::new(); n];
    for (u, v, _) in g.edges() {
        adj[u.index()].push(v.index());
        adj[v.index()].push(u.index());
    }
    Some(code_of_adjacency(&adj))
}

fn code_of_adjacency(adj: &[Vec<usize>]) -> String {
    let centroids = centroids(adj);
    match centroids[..] {
        [c] => rooted_code(adj, c, usize::MAX),
        [c1, c2] => {
            let a = rooted_code(adj, c1, c2);
            let b = rooted_code(adj, c2, c1);
            if a <= b {
                format!("{a}|{b}")
            } else {
                format!("{b}|{a}")
            }
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
}

fn rooted_code(adj: &[Vec<usize>], root: usize, parent: usize) -> String {
    let mut child_codes: Vec<String> = adj[root]
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| rooted_code(adj, c, root))
        .collect();
    child_codes.sort();
    format!("({})", child_codes.concat())
}

fn centroids(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n == 1 {
        return vec![0];
    }
    let mut size = vec![1usize; n];
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let mut best = Vec::new();
    let mut best_weight = usize::MAX;
    for v in 0..n {
        // weight of v = the largest component left when v is removed
        let mut weight = n - size[v];
        for &u in &adj[v] {
            if parent[u] == v {
                weight = weight.max(size[u]);
            }
        }
        match weight.cmp(&best_weight) {
            std::cmp::Ordering::Less => {
                best_weight = weight;
                best = vec![v];
            }
            std::cmp::Ordering::Equal => best.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    best.sort_unstable();
    best
}

/// One representative per isomorphism class of trees on `n` vertices,
/// generated by leaf augmentation with canonical-code deduplication.
/// The returned graphs have an empty absorbing set; callers pick absorbers.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if !(2..=10).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "tree enumeration supports 2 <= n <= 10, got {n}"
        )));
    }
    // every tree on m vertices is some tree on m-1 vertices plus a leaf
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for m in 2..=n {
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for edges in &level {
            for attach in 0..m - 1 {
                let mut grown = edges.clone();
                grown.push((attach, m - 1));
                let mut adj = vec![Vec::new(); m];
                for &(u, v) in &grown {
                    adj[u].push(v);
                    adj[v].push(u);
                }
                if seen.insert(code_of_adjacency(&adj)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|edges| {
            let built: Vec<_> = edges
                .iter()
                .map(|&(u, v)| (VertexId::new(u), VertexId::new(v), 1))
                .collect();
            Graph::build(n, &built, &[])
        })
        .collect()
}

/// Uniform random labeled tree on `n` vertices via a random linear-time
/// decoding sequence; absorbing set left empty.
pub fn random_tree(rng: &mut Xoshiro256StarStar, n: usize) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::build(1, &[], &[]).unwrap();
    }
    if n == 2 {
        return Graph::build(2, &[(VertexId::new(0), VertexId::new(1), 1)], &[]).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2)
        .map(|_| rng.gen_range(n as u64) as usize)
        .collect();
    let edges = decode_pruefer(n, &seq);
    let built: Vec<_> = edges
        .iter()
        .map(|&(u, v)| (VertexId::new(u), VertexId::new(v), 1))
        .collect();
    Graph::build(n, &built, &[]).unwrap()
}

/// Standard Pruefer-sequence decoding; exposed for the enumeration
/// cross-check, which compares the leaf-augmentation count against a full
/// labeled enumeration collapsed by canonical code.
pub fn decode_pruefer(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // the current leaf is the smallest unused degree-1 vertex; the scan
    // pointer only moves forward because a vertex dropping to degree 1
    // below it is consumed immediately on the next round
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Random connected graph for the property suites: a random spanning tree
/// plus a few extra edges, optionally with multiplicities up to 3.
pub fn random_connected_graph(
    rng: &mut Xoshiro256StarStar,
    n: usize,
    allow_multi: bool,
) -> Graph {
    let tree = random_tree(rng, n);
    let mut edges: Vec<(VertexId, VertexId, u64)> = tree.edges().collect();
    if n >= 2 {
        let extra = rng.gen_range(n as u64);
        for _ in 0..extra {
            let u = rng.gen_range(n as u64) as usize;
            let v = rng.gen_range(n as u64) as usize;
            if u == v {
                continue;
            }
            let m = if allow_multi { 1 + rng.gen_range(3) } else { 1 };
            edges.push((VertexId::new(u), VertexId::new(v), m));
        }
        if allow_multi {
            // nudge some tree edges up so multigraphs actually occur
            let bumps = rng.gen_range(3);
            for _ in 0..bumps {
                let pick = rng.gen_range((n - 1) as u64) as usize;
                let (u, v, _) = tree.edges().nth(pick).unwrap();
                edges.push((u, v, 1 + rng.gen_range(2)));
            }
        }
    }
    Graph::build(n, &edges, &[]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{vid, SeaDragonClass};

    #[test]
    fn path_cycle_star_shapes() {
        let p = gen_path(3).unwrap();
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![
            (vid(1), vid(2), 1),
            (vid(2), vid(3), 1),
        ]);
        assert!(p.is_absorbing(vid(3)));

        let c = gen_cycle(4).unwrap();
        assert_eq!(c.degree(vid(1)), 2);
        assert_eq!(c.edge_count(), 4);
        assert!(c.is_absorbing(vid(4)));

        let s = gen_star(4).unwrap();
        assert_eq!(s.degree(vid(1)), 3);
        assert!(s.is_absorbing(vid(1)));
        assert!(gen_path(1).is_err());
        assert!(gen_cycle(2).is_err());
    }

    #[test]
    fn sea_dragon_shapes() {
        let sd1 = gen_sea_dragon(&SeaDragonSpec::Sd1 { n: 4, leaf_positions: vec![2] }).unwrap();
        assert_eq!(sd1.vertex_count(), 5);
        assert_eq!(sd1.multiplicity(vid(2), vid(5)), 1);
        assert!(sd1.is_absorbing(vid(4)));

        let sd3 = gen_sea_dragon(&SeaDragonSpec::Sd3 { n: 5, position: 2, stem_length: 2 })
            .unwrap();
        assert_eq!(sd3.vertex_count(), 7);
        // stem path u1-u2-v2 numbered outward: v2-v6, v6-v7
        assert_eq!(sd3.multiplicity(vid(2), vid(6)), 1);
        assert_eq!(sd3.multiplicity(vid(6), vid(7)), 1);
        assert_eq!(sd3.degree(vid(7)), 1);

        let sd4 = gen_sea_dragon(&SeaDragonSpec::Sd4 {
            n: 6,
            position: 3,
            stem_lengths: vec![1, 2],
        })
        .unwrap();
        assert_eq!(sd4.vertex_count(), 9);
        assert_eq!(sd4.degree(vid(3)), 4);
    }

    #[test]
    fn sd2_attachment_degree() {
        for n in 3..=8 {
            for k in 2..=n - 1 {
                for b in 1..=4 {
                    let g = gen_sea_dragon(&SeaDragonSpec::Sd2 {
                        n,
                        position: k,
                        leaf_count: b,
                    })
                    .unwrap();
                    assert_eq!(g.degree(vid(k as usize)), b + 2);
                }
            }
        }
    }

    #[test]
    fn generated_dragons_classify_as_sea_dragons() {
        let specs = vec![
            SeaDragonSpec::Sd1 { n: 6, leaf_positions: vec![2, 4, 5] },
            SeaDragonSpec::Sd2 { n: 5, position: 3, leaf_count: 3 },
            SeaDragonSpec::Sd3 { n: 7, position: 4, stem_length: 3 },
            SeaDragonSpec::Sd4 { n: 6, position: 2, stem_lengths: vec![2, 1, 3] },
        ];
        for spec in specs {
            let g = gen_sea_dragon(&spec).unwrap();
            g.check_invariants().unwrap();
            assert!(
                matches!(g.is_sea_dragon(), SeaDragonClass::SeaDragon { .. }),
                "{spec:?} did not classify as a sea dragon"
            );
        }
    }

    #[test]
    fn tree_counts() {
        let expected = [
            (2, 1),
            (3, 1),
            (4, 2),
            (5, 3),
            (6, 6),
            (7, 11),
            (8, 23),
            (9, 47),
            (10, 106),
        ];
        for (n, count) in expected {
            assert_eq!(enumerate_trees(n).unwrap().len(), count, "n = {n}");
        }
        assert!(enumerate_trees(1).is_err());
        assert!(enumerate_trees(11).is_err());
    }

    #[test]
    fn enumerated_trees_have_distinct_codes() {
        for n in 2..=9 {
            let trees = enumerate_trees(n).unwrap();
            let codes: HashSet<String> =
                trees.iter().map(|t| tree_code(t).expect("tree")).collect();
            assert_eq!(codes.len(), trees.len());
        }
    }

    #[test]
    fn pruefer_decode_is_a_tree() {
        let edges = decode_pruefer(5, &[2, 2, 0]);
        assert_eq!(edges.len(), 4);
        let built: Vec<_> = edges
            .iter()
            .map(|&(u, v)| (VertexId::new(u), VertexId::new(v), 1))
            .collect();
        let g = Graph::build(5, &built, &[]).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = Xoshiro256StarStar::from_seed(11);
        for _ in 0..50 {
            let n = 2 + rng.gen_range(9) as usize;
            let g = random_tree(&mut rng, n);
            assert!(g.is_connected());
            assert_eq!(g.edge_count(), n - 1);
        }
    }
}
