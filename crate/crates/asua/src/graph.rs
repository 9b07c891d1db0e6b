//! Undirected multigraphs with a designated set of absorbing vertices.
//!
//! Parallel edges carry integer multiplicities; a walk at `v` moves to a
//! neighbor `u` with probability `multiplicity(v, u) / degree(v)`, so
//! multiplicities are the exact-arithmetic stand-in for edge weights.
//! Vertices are indexed from 0 internally and print 1-based (`v1`, `v2`, ...)
//! everywhere a user sees them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(usize);

impl VertexId {
    /// 0-based constructor.
    pub fn new(index: usize) -> Self {
        VertexId(index)
    }

    /// 1-based constructor; returns `None` for 0.
    pub fn from_one_based(id: usize) -> Option<Self> {
        id.checked_sub(1).map(VertexId)
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub fn one_based(self) -> usize {
        self.0 + 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.one_based())
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.one_based())
    }
}

/// 1-based convenience constructor matching the `v1..vn` naming convention.
/// Panics on 0; intended for literals in tests and examples.
pub fn vid(one_based: usize) -> VertexId {
    VertexId::from_one_based(one_based).expect("vertex ids are 1-based")
}

/// Degrees and per-vertex neighbor multisets (each parallel edge listed once
/// per multiplicity, ascending by id).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    degrees: Vec<u64>,
    neighbors: Vec<Vec<VertexId>>,
}

impl DegreeProfile {
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, v: VertexId) -> u64 {
        self.degrees[v.index()]
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[v.index()]
    }
}

/// Result of classifying a graph against the sea-dragon tree shape: a tree
/// whose vertices of degree >= 3 all lie on a single path (the spine).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeaDragonClass {
    NotATree,
    SeaDragon { spine: Vec<VertexId> },
    TreeWithoutSpine,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    // keys are normalized to (min, max); symmetry holds by construction
    multiplicity: BTreeMap<(VertexId, VertexId), u64>,
    degrees: Vec<u64>,
    absorbing: BTreeSet<VertexId>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, absorbing={:?}, edges=[", self.vertex_count, self.absorbing)?;
        for (i, (u, v, m)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
            if m > 1 {
                write!(f, "x{m}")?;
            }
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Builds a validated multigraph. Duplicate edge entries sum their
    /// multiplicities. An empty absorbing set is permitted here (rejected
    /// later at solve time) so graphs can be assembled in stages.
    pub fn build(
        vertex_count: usize,
        edges: &[(VertexId, VertexId, u64)],
        absorbing: &[VertexId],
    ) -> Result<Graph> {
        let check = |id: VertexId| -> Result<()> {
            if id.index() >= vertex_count {
                Err(Error::IdOutOfRange { id, vertex_count })
            } else {
                Ok(())
            }
        };
        let mut multiplicity: BTreeMap<(VertexId, VertexId), u64> = BTreeMap::new();
        for &(u, v, m) in edges {
            check(u)?;
            check(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if m == 0 {
                return Err(Error::ZeroMultiplicity { u, v });
            }
            let key = (u.min(v), u.max(v));
            *multiplicity.entry(key).or_insert(0) += m;
        }
        let mut degrees = vec![0u64; vertex_count];
        for (&(u, v), &m) in &multiplicity {
            degrees[u.index()] += m;
            degrees[v.index()] += m;
        }
        let mut abs = BTreeSet::new();
        for &a in absorbing {
            check(a)?;
            abs.insert(a);
        }
        Ok(Graph {
            vertex_count,
            multiplicity,
            degrees,
            absorbing: abs,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count).map(VertexId)
    }

    /// Edges as `(u, v, multiplicity)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, u64)> + '_ {
        self.multiplicity.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    pub fn edge_count(&self) -> usize {
        self.multiplicity.len()
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u64 {
        if u == v {
            return 0;
        }
        self.multiplicity
            .get(&(u.min(v), u.max(v)))
            .copied()
            .unwrap_or(0)
    }

    pub fn degree(&self, v: VertexId) -> u64 {
        self.degrees[v.index()]
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.multiplicity.values().sum()
    }

    pub fn is_absorbing(&self, v: VertexId) -> bool {
        self.absorbing.contains(&v)
    }

    pub fn absorbing(&self) -> &BTreeSet<VertexId> {
        &self.absorbing
    }

    pub fn transient(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|v| !self.is_absorbing(*v))
    }

    /// Same graph with a different absorbing set.
    pub fn with_absorbing(&self, absorbing: &[VertexId]) -> Result<Graph> {
        let mut g = self.clone();
        g.absorbing.clear();
        for &a in absorbing {
            if a.index() >= self.vertex_count {
                return Err(Error::IdOutOfRange { id: a, vertex_count: self.vertex_count });
            }
            g.absorbing.insert(a);
        }
        Ok(g)
    }

    /// Adjacency lists `(neighbor, multiplicity)`, ascending by neighbor.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(VertexId, u64)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (&(u, v), &m) in &self.multiplicity {
            adj[u.index()].push((v, m));
            adj[v.index()].push((u, m));
        }
        for list in &mut adj {
            list.sort();
        }
        adj
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let adj = self.adjacency();
        let neighbors = adj
            .iter()
            .map(|list| {
                let mut expanded = Vec::new();
                for &(u, m) in list {
                    for _ in 0..m {
                        expanded.push(u);
                    }
                }
                expanded
            })
            .collect();
        DegreeProfile {
            degrees: self.degrees.clone(),
            neighbors,
        }
    }

    /// Succeeds iff every transient vertex has a path to some absorbing
    /// vertex, the necessary condition for the absorption solve.
    pub fn validate_reachability(&self) -> Result<()> {
        if self.absorbing.is_empty() {
            return Err(Error::EmptyAbsorbingSet);
        }
        let adj = self.adjacency();
        let mut reached = vec![false; self.vertex_count];
        let mut queue: VecDeque<VertexId> = self.absorbing.iter().copied().collect();
        for &a in &self.absorbing {
            reached[a.index()] = true;
        }
        while let Some(v) = queue.pop_front() {
            for &(u, _) in &adj[v.index()] {
                if !reached[u.index()] {
                    reached[u.index()] = true;
                    queue.push_back(u);
                }
            }
        }
        let stranded: Vec<VertexId> = self
            .vertices()
            .filter(|v| !reached[v.index()])
            .collect();
        if stranded.is_empty() {
            Ok(())
        } else {
            Err(Error::UnreachableAbsorber { stranded })
        }
    }

    /// Identifies `x` and `y` into a single vertex, the contraction that
    /// reduces a two-absorber problem to a single absorber.
    ///
    /// The merged vertex keeps the smaller of the two ids; every id above
    /// the larger one shifts down by one. Parallel edges created by the
    /// identification sum their multiplicities, self-loops are discarded,
    /// and the merged vertex is absorbing iff `x` or `y` was.
    pub fn merge_absorbers(&self, x: VertexId, y: VertexId) -> Result<Graph> {
        if x == y {
            return Err(Error::SameVertex(x));
        }
        for id in [x, y] {
            if id.index() >= self.vertex_count {
                return Err(Error::IdOutOfRange { id, vertex_count: self.vertex_count });
            }
        }
        let keep = x.min(y);
        let drop = x.max(y);
        let map = |v: VertexId| -> VertexId {
            if v == drop {
                keep
            } else if v > drop {
                VertexId(v.index() - 1)
            } else {
                v
            }
        };
        let mut edges = Vec::new();
        for (u, v, m) in self.edges() {
            let (a, b) = (map(u), map(v));
            if a != b {
                edges.push((a, b, m));
            }
        }
        let absorbing: Vec<VertexId> = self.absorbing.iter().map(|&a| map(a)).collect();
        Graph::build(self.vertex_count - 1, &edges, &absorbing)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([VertexId(0)]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &(u, _) in &adj[v.index()] {
                if !seen[u.index()] {
                    seen[u.index()] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.vertex_count
    }

    /// Classifies the graph against the sea-dragon shape.
    ///
    /// For trees, the graph is a sea dragon iff all vertices of degree >= 3
    /// lie on one path. The returned spine is canonical: the path between
    /// the two branch vertices farthest apart, extended maximally at both
    /// ends through degree-<=2 vertices (longest hanging path first, ties
    /// broken by smallest VertexId), oriented so the smaller endpoint
    /// comes first.
    pub fn is_sea_dragon(&self) -> SeaDragonClass {
        let n = self.vertex_count;
        if n == 0 {
            return SeaDragonClass::NotATree;
        }
        // a tree is simple, connected, and has exactly n-1 edges
        if self.multiplicity.values().any(|&m| m > 1)
            || self.multiplicity.len() != n - 1
            || !self.is_connected()
        {
            return SeaDragonClass::NotATree;
        }
        let adj: Vec<Vec<VertexId>> = self
            .adjacency()
            .into_iter()
            .map(|list| list.into_iter().map(|(u, _)| u).collect())
            .collect();

        let branch: Vec<VertexId> = self
            .vertices()
            .filter(|v| adj[v.index()].len() >= 3)
            .collect();

        if branch.is_empty() {
            // the tree itself is a path; its spine is the whole path
            if n == 1 {
                return SeaDragonClass::SeaDragon { spine: vec![VertexId(0)] };
            }
            let start = self
                .vertices()
                .find(|v| adj[v.index()].len() == 1)
                .expect("a path has leaves");
            let spine = walk_path(&adj, start, None);
            return SeaDragonClass::SeaDragon { spine: orient(spine) };
        }

        // core path: between the two branch vertices farthest apart
        let core = if branch.len() == 1 {
            vec![branch[0]]
        } else {
            let mut best: Option<(usize, VertexId, VertexId)> = None;
            for &b in &branch {
                let dist = bfs_distances(&adj, b);
                for &c in &branch {
                    if b >= c {
                        continue;
                    }
                    let d = dist[c.index()];
                    let better = match best {
                        None => true,
                        Some((bd, bx, by)) => d > bd || (d == bd && (b, c) < (bx, by)),
                    };
                    if better {
                        best = Some((d, b, c));
                    }
                }
            }
            let (_, x, y) = best.expect("at least two branch vertices");
            tree_path(&adj, x, y)
        };

        let on_core: BTreeSet<VertexId> = core.iter().copied().collect();
        if branch.iter().any(|b| !on_core.contains(b)) {
            return SeaDragonClass::TreeWithoutSpine;
        }

        // extend both ends through degree-<=2 territory
        let head = *core.first().unwrap();
        let tail = *core.last().unwrap();
        let head_block = core.get(1).copied();
        let tail_block = if core.len() >= 2 {
            Some(core[core.len() - 2])
        } else {
            None
        };
        let mut front = best_extension(&adj, head, head_block, None);
        let back = if core.len() == 1 {
            // a single branch vertex: the two longest hanging paths form the
            // spine through it, so exclude the direction already taken
            best_extension(&adj, tail, tail_block, front.first().copied())
        } else {
            best_extension(&adj, tail, tail_block, None)
        };

        front.reverse();
        let mut spine = front;
        spine.extend(core.iter().copied());
        spine.extend(back);
        SeaDragonClass::SeaDragon { spine: orient(spine) }
    }

    /// Test-suite checker for the structural invariants: no self-loops,
    /// positive degree on every transient vertex, and the handshake count.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        for (&(u, v), &m) in &self.multiplicity {
            if u == v {
                return Err(format!("self-loop stored on {u}"));
            }
            if m == 0 {
                return Err(format!("zero multiplicity stored on {u} {v}"));
            }
        }
        for v in self.vertices() {
            if !self.is_absorbing(v) && self.degree(v) == 0 {
                return Err(format!("isolated transient vertex {v}"));
            }
        }
        let sum: u64 = self.degrees.iter().sum();
        if sum != 2 * self.total_multiplicity() {
            return Err("degree sum does not equal twice the edge multiplicity total".into());
        }
        Ok(())
    }
}

fn orient(mut spine: Vec<VertexId>) -> Vec<VertexId> {
    if spine.last() < spine.first() {
        spine.reverse();
    }
    spine
}

fn bfs_distances(adj: &[Vec<VertexId>], from: VertexId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[from.index()] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v.index()] {
            if dist[u.index()] == usize::MAX {
                dist[u.index()] = dist[v.index()] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Unique path between two vertices of a tree.
fn tree_path(adj: &[Vec<VertexId>], from: VertexId, to: VertexId) -> Vec<VertexId> {
    let mut parent: Vec<Option<VertexId>> = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    seen[from.index()] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v.index()] {
            if !seen[u.index()] {
                seen[u.index()] = true;
                parent[u.index()] = Some(v);
                queue.push_back(u);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while let Some(p) = parent[cur.index()] {
        path.push(p);
        cur = p;
    }
    path.reverse();
    debug_assert_eq!(path[0], from);
    path
}

/// Walks a degree-<=2 path starting at `start`, never stepping back onto
/// `block`; returns the full vertex sequence including `start`.
fn walk_path(adj: &[Vec<VertexId>], start: VertexId, block: Option<VertexId>) -> Vec<VertexId> {
    let mut seq = vec![start];
    let mut prev = block;
    let mut cur = start;
    loop {
        let next = adj[cur.index()]
            .iter()
            .copied()
            .find(|&u| Some(u) != prev);
        match next {
            Some(u) if adj[cur.index()].len() <= 2 => {
                seq.push(u);
                prev = Some(cur);
                cur = u;
            }
            _ => break,
        }
    }
    seq
}

/// Longest hanging path leaving `end`, skipping the spine direction `block`
/// and an already-claimed first step `taken`. Ties go to the smallest first
/// vertex id. Returns the extension excluding `end` itself.
fn best_extension(
    adj: &[Vec<VertexId>],
    end: VertexId,
    block: Option<VertexId>,
    taken: Option<VertexId>,
) -> Vec<VertexId> {
    let mut best: Vec<VertexId> = Vec::new();
    for &c in &adj[end.index()] {
        if Some(c) == block || Some(c) == taken {
            continue;
        }
        if adj[c.index()].len() > 2 {
            continue;
        }
        let candidate = hanging_path(adj, end, c);
        if candidate.len() > best.len() {
            best = candidate;
        }
    }
    best
}

/// The hanging path entered from `from` via `first`; all interior vertices
/// have degree <= 2 so the continuation is forced.
fn hanging_path(adj: &[Vec<VertexId>], from: VertexId, first: VertexId) -> Vec<VertexId> {
    let mut seq = vec![first];
    let mut prev = from;
    let mut cur = first;
    while adj[cur.index()].len() == 2 {
        let next = adj[cur.index()]
            .iter()
            .copied()
            .find(|&u| u != prev)
            .expect("degree-2 vertex has a continuation");
        seq.push(next);
        prev = cur;
        cur = next;
    }
    seq
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::build(3, &[(vid(1), vid(2), 1), (vid(2), vid(3), 1)], &[vid(3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::build(
            4,
            &[
                (vid(1), vid(2), 1),
                (vid(2), vid(3), 1),
                (vid(3), vid(4), 1),
                (vid(4), vid(1), 1),
            ],
            &[vid(4)],
        )
        .unwrap()
    }

    /// The five-vertex example graph: edges v1v2, v1v3, v2v4, v3v4, v3v5,
    /// absorbing v5.
    fn example_graph() -> Graph {
        Graph::build(
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
        .unwrap()
    }

    #[test]
    fn build_smallest_path() {
        let g = Graph::build(2, &[(vid(1), vid(2), 1)], &[vid(2)]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.degree(vid(1)), 1);
        assert!(g.is_absorbing(vid(2)));
        g.check_invariants().unwrap();
    }

    #[test]
    fn build_example_graph() {
        let g = example_graph();
        assert_eq!(g.degree_profile().degrees(), &[2, 2, 3, 2, 1]);
        g.check_invariants().unwrap();
    }

    #[test]
    fn multiplicity_semantics() {
        let g = Graph::build(3, &[(vid(1), vid(2), 2), (vid(2), vid(3), 1)], &[vid(3)]).unwrap();
        assert_eq!(g.degree(vid(1)), 2);
        assert_eq!(g.degree(vid(2)), 3);
        assert_eq!(g.multiplicity(vid(2), vid(1)), 2);
        assert_eq!(
            g.degree_profile().neighbors(vid(2)),
            &[vid(1), vid(1), vid(3)]
        );
    }

    #[test]
    fn duplicate_edges_sum() {
        let g = Graph::build(2, &[(vid(1), vid(2), 1), (vid(2), vid(1), 2)], &[]).unwrap();
        assert_eq!(g.multiplicity(vid(1), vid(2)), 3);
    }

    #[test]
    fn build_rejects_self_loop_and_bad_ids() {
        assert_eq!(
            Graph::build(2, &[(vid(1), vid(1), 1)], &[]),
            Err(Error::SelfLoop(vid(1)))
        );
        assert!(matches!(
            Graph::build(2, &[(vid(1), vid(3), 1)], &[]),
            Err(Error::IdOutOfRange { .. })
        ));
        assert!(matches!(
            Graph::build(2, &[(vid(1), vid(2), 0)], &[]),
            Err(Error::ZeroMultiplicity { .. })
        ));
    }

    #[test]
    fn reachability() {
        assert!(p3().validate_reachability().is_ok());
        assert!(c4().validate_reachability().is_ok());
        // two disjoint edges, absorber in one component
        let g = Graph::build(
            4,
            &[(vid(1), vid(2), 1), (vid(3), vid(4), 1)],
            &[vid(1)],
        )
        .unwrap();
        assert_eq!(
            g.validate_reachability(),
            Err(Error::UnreachableAbsorber {
                stranded: vec![vid(3), vid(4)]
            })
        );
        let empty = p3().with_absorbing(&[]).unwrap();
        assert_eq!(empty.validate_reachability(), Err(Error::EmptyAbsorbingSet));
    }

    #[test]
    fn merge_c4_opposite_corners() {
        let merged = c4().merge_absorbers(vid(2), vid(4)).unwrap();
        assert_eq!(merged.vertex_count(), 3);
        // merged vertex keeps id v2; old v3 becomes v3
        assert_eq!(merged.multiplicity(vid(2), vid(1)), 2);
        assert_eq!(merged.multiplicity(vid(2), vid(3)), 2);
        assert!(merged.is_absorbing(vid(2)));
    }

    #[test]
    fn merge_p3_endpoints() {
        let merged = p3().merge_absorbers(vid(1), vid(3)).unwrap();
        assert_eq!(merged.vertex_count(), 2);
        assert_eq!(merged.multiplicity(vid(1), vid(2)), 2);
        assert!(merged.is_absorbing(vid(1)));
        assert_eq!(
            p3().merge_absorbers(vid(2), vid(2)),
            Err(Error::SameVertex(vid(2)))
        );
    }

    #[test]
    fn merge_preserves_multiplicity_total() {
        let g = c4();
        let between = g.multiplicity(vid(2), vid(4));
        let merged = g.merge_absorbers(vid(2), vid(4)).unwrap();
        assert_eq!(merged.total_multiplicity(), g.total_multiplicity() - between);
    }

    #[test]
    fn classify_star_and_spider() {
        let star = Graph::build(
            5,
            &[
                (vid(1), vid(2), 1),
                (vid(1), vid(3), 1),
                (vid(1), vid(4), 1),
                (vid(1), vid(5), 1),
            ],
            &[vid(1)],
        )
        .unwrap();
        match star.is_sea_dragon() {
            SeaDragonClass::SeaDragon { spine } => assert_eq!(spine, vec![vid(2), vid(1), vid(3)]),
            other => panic!("star misclassified: {other:?}"),
        }

        // spider: three legs of length 2 from one center
        let spider = Graph::build(
            7,
            &[
                (vid(1), vid(2), 1),
                (vid(2), vid(3), 1),
                (vid(1), vid(4), 1),
                (vid(4), vid(5), 1),
                (vid(1), vid(6), 1),
                (vid(6), vid(7), 1),
            ],
            &[vid(1)],
        )
        .unwrap();
        match spider.is_sea_dragon() {
            SeaDragonClass::SeaDragon { spine } => {
                assert_eq!(spine, vec![vid(3), vid(2), vid(1), vid(4), vid(5)]);
            }
            other => panic!("spider misclassified: {other:?}"),
        }
    }

    #[test]
    fn classify_h_tree_as_sea_dragon() {
        // two degree-3 vertices joined by an edge, each with two pendant
        // legs of length 2: both branch vertices sit on the crossbar path,
        // so this is a sea dragon even though it looks like an H
        let g = Graph::build(
            10,
            &[
                (vid(1), vid(2), 1),
                (vid(1), vid(3), 1),
                (vid(3), vid(4), 1),
                (vid(1), vid(5), 1),
                (vid(5), vid(6), 1),
                (vid(2), vid(7), 1),
                (vid(7), vid(8), 1),
                (vid(2), vid(9), 1),
                (vid(9), vid(10), 1),
            ],
            &[vid(4)],
        )
        .unwrap();
        match g.is_sea_dragon() {
            SeaDragonClass::SeaDragon { spine } => {
                assert_eq!(
                    spine,
                    vec![vid(4), vid(3), vid(1), vid(2), vid(7), vid(8)]
                );
            }
            other => panic!("H tree misclassified: {other:?}"),
        }
    }

    #[test]
    fn classify_negatives() {
        assert_eq!(c4().is_sea_dragon(), SeaDragonClass::NotATree);
        let multi = Graph::build(2, &[(vid(1), vid(2), 2)], &[vid(2)]).unwrap();
        assert_eq!(multi.is_sea_dragon(), SeaDragonClass::NotATree);

        // center with three branches, each carrying its own branch vertex:
        // the degree->=3 vertices do not fit on one path
        let mut edges = Vec::new();
        // center v1 with arms v2, v5, v8; each arm vertex has two leaves
        for (arm, leaves) in [(2, [3, 4]), (5, [6, 7]), (8, [9, 10])] {
            edges.push((vid(1), vid(arm), 1));
            for leaf in leaves {
                edges.push((vid(arm), vid(leaf), 1));
            }
        }
        let y_of_y = Graph::build(10, &edges, &[vid(3)]).unwrap();
        assert_eq!(y_of_y.is_sea_dragon(), SeaDragonClass::TreeWithoutSpine);
    }

    #[test]
    fn classify_bare_path() {
        match p3().is_sea_dragon() {
            SeaDragonClass::SeaDragon { spine } => {
                assert_eq!(spine, vec![vid(1), vid(2), vid(3)]);
            }
            other => panic!("path misclassified: {other:?}"),
        }
    }
}
