//! Mechanized formula-vs-solver verification.
//!
//! Each closed form is swept over a family range and compared against the
//! exact rational solve of the generated graph, value by value; a report
//! carries the mismatches (there should be none) instead of panicking so
//! the same machinery backs both the test suite and the `verify`
//! subcommand. The refuted `(k+1)^2` first-piece constant for SD2/SD3 can
//! be evaluated alongside, in which case the report also counts how many
//! instances it gets wrong — all of them, which is the point.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use crate::chain::solve_graph;
use crate::closed_form::{
    cycle_asua, path_asua, sd23_printed_value, stem_offset, SeaDragonSpec,
};
use crate::error::Result;
use crate::families::{
    gen_cycle, gen_path, gen_sea_dragon, random_tree, sea_dragon_layout,
};
use crate::graph::{Graph, VertexId};
use crate::rational::{natural, Rational};
use crate::rng::Xoshiro256StarStar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub instance: String,
    pub vertex: VertexId,
    pub formula: Rational,
    pub solver: Rational,
}

/// Outcome of sweeping the refuted printed constant: how many instances
/// carry at least one disagreeing value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrintedConstantSummary {
    pub instances: usize,
    pub instances_mismatching: usize,
    pub values_mismatching: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub family: String,
    pub instances: usize,
    pub values_checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub printed_constant: Option<PrintedConstantSummary>,
}

impl VerifyReport {
    fn new(family: &str) -> Self {
        VerifyReport {
            family: family.to_string(),
            instances: 0,
            values_checked: 0,
            mismatches: Vec::new(),
            printed_constant: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn check(&mut self, instance: &str, vertex: VertexId, formula: Rational, solver: &Rational) {
        self.values_checked += 1;
        if &formula != solver {
            self.mismatches.push(Mismatch {
                instance: instance.to_string(),
                vertex,
                formula,
                solver: solver.clone(),
            });
        }
    }
}

fn spec_name(spec: &SeaDragonSpec) -> String {
    match spec {
        SeaDragonSpec::Sd1 { n, leaf_positions } => {
            let ks: Vec<String> = leaf_positions.iter().map(|k| k.to_string()).collect();
            format!("sd1 T({n},{{{}}})", ks.join(","))
        }
        SeaDragonSpec::Sd2 { n, position, leaf_count } => {
            format!("sd2 T({n},({position},{leaf_count}))")
        }
        SeaDragonSpec::Sd3 { n, position, stem_length } => {
            format!("sd3 T({n},{position}^({stem_length}))")
        }
        SeaDragonSpec::Sd4 { n, position, stem_lengths } => {
            let cs: Vec<String> = stem_lengths.iter().map(|c| c.to_string()).collect();
            format!("sd4 T({n},{position},({}))", cs.join(","))
        }
    }
}

/// Path formula against the solver for every `2 <= n` in the range, all i.
pub fn verify_path(ns: RangeInclusive<u64>) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("path");
    for n in ns {
        let g = gen_path(n)?;
        let t = solve_graph(&g)?;
        report.instances += 1;
        let name = format!("path P_{n}");
        for i in 1..=n - 1 {
            let formula = natural(path_asua(n, i)?);
            let solver = t.value_or_zero(VertexId::new(i as usize - 1));
            report.check(&name, VertexId::new(i as usize - 1), formula, &solver);
        }
    }
    Ok(report)
}

/// Cycle formula against the solver, plus the reflection symmetry of the
/// solved values themselves.
pub fn verify_cycle(ns: RangeInclusive<u64>) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("cycle");
    for n in ns {
        let g = gen_cycle(n)?;
        let t = solve_graph(&g)?;
        report.instances += 1;
        let name = format!("cycle C_{n}");
        for i in 1..=n - 1 {
            let vertex = VertexId::new(i as usize - 1);
            let formula = natural(cycle_asua(n, i)?);
            let solver = t.value_or_zero(vertex);
            report.check(&name, vertex, formula, &solver);
            // t(v_i) = t(v_{n-i}) by the reflection through the absorber
            let mirrored = t.value_or_zero(VertexId::new((n - i) as usize - 1));
            report.check(&format!("{name} symmetry"), vertex, mirrored, &solver);
        }
    }
    Ok(report)
}

/// One sea-dragon instance: spine values, stem/leaf values via the stem
/// offsets, and optionally the printed-constant variant.
fn check_dragon(
    spec: &SeaDragonSpec,
    report: &mut VerifyReport,
    printed: Option<&mut PrintedConstantSummary>,
) -> Result<()> {
    let layout = sea_dragon_layout(spec)?;
    let g = gen_sea_dragon(spec)?;
    let t = solve_graph(&g)?;
    let n = spec.spine_len();
    let name = spec_name(spec);
    report.instances += 1;

    for i in 1..=n - 1 {
        let vertex = layout.spine_vertex(i);
        let formula = natural(spec.asua(i)?);
        let solver = t.value_or_zero(vertex);
        report.check(&name, vertex, formula, &solver);
    }
    for stem in &layout.stems {
        let attach_value = spec.asua(stem.position)?;
        for (offset, &vertex) in stem.vertices.iter().enumerate() {
            // vertices run outward, so distance offset+1 is u_{length-offset}
            let j = stem.length - offset as u64;
            let formula = natural(attach_value + stem_offset(stem.length, j)?);
            let solver = t.value_or_zero(vertex);
            report.check(&name, vertex, formula, &solver);
        }
    }

    if let Some(summary) = printed {
        let (k, d) = match spec {
            SeaDragonSpec::Sd2 { position, .. }
            | SeaDragonSpec::Sd3 { position, .. }
            | SeaDragonSpec::Sd4 { position, .. } => (*position, spec.stem_mass()),
            SeaDragonSpec::Sd1 { .. } => return Ok(()),
        };
        summary.instances += 1;
        let mut wrong = 0usize;
        for i in 1..=n - 1 {
            let variant = natural(sd23_printed_value(n, k, d, i));
            if variant != t.value_or_zero(layout.spine_vertex(i)) {
                wrong += 1;
            }
        }
        summary.values_mismatching += wrong;
        if wrong > 0 {
            summary.instances_mismatching += 1;
        }
    }
    Ok(())
}

/// SD1 over every nonempty leaf-position subset of `{2..n-1}` for each `n`.
pub fn verify_sd1(ns: RangeInclusive<u64>) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("sd1");
    for n in ns.filter(|&n| n >= 3) {
        let slots: Vec<u64> = (2..=n - 1).collect();
        for mask in 1u64..(1 << slots.len()) {
            let leaf_positions: Vec<u64> = slots
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &k)| k)
                .collect();
            let spec = SeaDragonSpec::Sd1 { n, leaf_positions };
            check_dragon(&spec, &mut report, None)?;
        }
    }
    Ok(report)
}

/// SD2 for every interior position and `b` in the given range.
pub fn verify_sd2(
    ns: RangeInclusive<u64>,
    bs: RangeInclusive<u64>,
    printed: bool,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("sd2");
    let mut summary = PrintedConstantSummary {
        instances: 0,
        instances_mismatching: 0,
        values_mismatching: 0,
    };
    for n in ns.filter(|&n| n >= 3) {
        for k in 2..=n - 1 {
            for b in bs.clone() {
                let spec = SeaDragonSpec::Sd2 { n, position: k, leaf_count: b };
                check_dragon(&spec, &mut report, printed.then_some(&mut summary))?;
            }
        }
    }
    if printed {
        report.printed_constant = Some(summary);
    }
    Ok(report)
}

/// SD3 for every interior position and `c` in the given range.
pub fn verify_sd3(
    ns: RangeInclusive<u64>,
    cs: RangeInclusive<u64>,
    printed: bool,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("sd3");
    let mut summary = PrintedConstantSummary {
        instances: 0,
        instances_mismatching: 0,
        values_mismatching: 0,
    };
    for n in ns.filter(|&n| n >= 3) {
        for k in 2..=n - 1 {
            for c in cs.clone() {
                let spec = SeaDragonSpec::Sd3 { n, position: k, stem_length: c };
                check_dragon(&spec, &mut report, printed.then_some(&mut summary))?;
            }
        }
    }
    if printed {
        report.printed_constant = Some(summary);
    }
    Ok(report)
}

/// Stem compositions with at most `max_parts` parts summing to `total`, in
/// lexicographic order.
pub fn stem_compositions(total: u64, max_parts: usize) -> Vec<Vec<u64>> {
    fn rec(remaining: u64, parts_left: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for first in 1..=remaining {
            prefix.push(first);
            rec(remaining - first, parts_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, max_parts, &mut Vec::new(), &mut out);
    out
}

/// SD4 for every interior position and every stem composition with total
/// mass in `ds` and at most three stems.
pub fn verify_sd4(
    ns: RangeInclusive<u64>,
    ds: RangeInclusive<u64>,
    printed: bool,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("sd4");
    let mut summary = PrintedConstantSummary {
        instances: 0,
        instances_mismatching: 0,
        values_mismatching: 0,
    };
    for n in ns.filter(|&n| n >= 3) {
        for k in 2..=n - 1 {
            for d in ds.clone() {
                for stem_lengths in stem_compositions(d, 3) {
                    let spec = SeaDragonSpec::Sd4 { n, position: k, stem_lengths };
                    check_dragon(&spec, &mut report, printed.then_some(&mut summary))?;
                }
            }
        }
    }
    if printed {
        report.printed_constant = Some(summary);
    }
    Ok(report)
}

/// A random tree with a pendant stem grafted on, as used by the stem
/// sweep. `stem_vertices` run outward from the attachment.
#[derive(Debug, Clone)]
pub struct StemInstance {
    pub name: String,
    pub graph: Graph,
    pub attach: VertexId,
    pub length: u64,
    pub stem_vertices: Vec<VertexId>,
}

/// Seeded random trees (n <= 10), each augmented with a stem of length
/// 1..=4 at a random vertex and given a random absorber among the original
/// tree vertices.
pub fn stem_instances(tree_count: usize, seed: u64) -> Vec<StemInstance> {
    let mut rng = Xoshiro256StarStar::from_seed(seed);
    let mut out = Vec::with_capacity(tree_count);
    for idx in 0..tree_count {
        let n = 2 + rng.gen_range(9) as usize; // 2..=10
        let tree = random_tree(&mut rng, n);
        let attach = VertexId::new(rng.gen_index(n));
        let length = 1 + rng.gen_range(4); // 1..=4
        let absorber = VertexId::new(rng.gen_index(n));

        let mut edges: Vec<(VertexId, VertexId, u64)> = tree.edges().collect();
        let mut stem_vertices = Vec::with_capacity(length as usize);
        let mut prev = attach;
        for d in 0..length as usize {
            let vertex = VertexId::new(n + d);
            edges.push((prev, vertex, 1));
            stem_vertices.push(vertex);
            prev = vertex;
        }
        let graph = Graph::build(n + length as usize, &edges, &[absorber])
            .expect("stem augmentation keeps the graph valid");
        out.push(StemInstance {
            name: format!("stem tree#{idx} n={n} l={length} at={attach} absorber={absorber}"),
            graph,
            attach,
            length,
            stem_vertices,
        });
    }
    out
}

/// Stem theorem on seeded random trees: the solved values must satisfy
/// `t(u_j) - t(v) = l^2 - (j-1)^2` exactly for every stem vertex.
pub fn verify_stem_theorem(tree_count: usize, seed: u64) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("stem");
    for instance in stem_instances(tree_count, seed) {
        let t = solve_graph(&instance.graph)?;
        report.instances += 1;
        let attach_value = t.value_or_zero(instance.attach);
        for (offset, &vertex) in instance.stem_vertices.iter().enumerate() {
            let j = instance.length - offset as u64;
            let formula = &attach_value + natural(stem_offset(instance.length, j)?);
            let solver = t.value_or_zero(vertex);
            report.check(&instance.name, vertex, formula, &solver);
        }
    }
    Ok(report)
}

/// Renders a report as the stable one-line-per-fact text used by the CLI.
pub fn render_report(report: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "family={} instances={} values={} mismatches={}",
        report.family,
        report.instances,
        report.values_checked,
        report.mismatches.len()
    );
    for m in report.mismatches.iter().take(10) {
        let _ = writeln!(
            out,
            "  MISMATCH {} at {}: formula={} solver={}",
            m.instance,
            m.vertex,
            crate::format::rational_str(&m.formula),
            crate::format::rational_str(&m.solver)
        );
    }
    if report.mismatches.len() > 10 {
        let _ = writeln!(out, "  ... {} more", report.mismatches.len() - 10);
    }
    if let Some(p) = &report.printed_constant {
        let _ = writeln!(
            out,
            "  printed-constant(k+1)^2: instances={} mismatching_instances={} mismatching_values={}",
            p.instances, p.instances_mismatching, p.values_mismatching
        );
    }
    out
}
