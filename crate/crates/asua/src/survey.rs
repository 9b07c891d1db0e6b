//! Extremal survey over all trees of a given order.
//!
//! For each tree the survey computes the absorption-step sum `t_sigma`
//! under every choice of absorbing vertex, and round trips `t'` under two
//! pair conventions (maximum over all pairs, and the endpoints of a
//! diameter). It then records whether the star and the path attain the
//! extremes. The survey reports; it does not assert — whether the star
//! and path always bound the other trees is an open question, not a
//! theorem.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use crate::chain::{round_trip, solve_graph};
use crate::error::Result;
use crate::families::enumerate_trees;
use crate::graph::{Graph, VertexId};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSummary {
    pub index: usize,
    pub edges: String,
    pub is_star: bool,
    pub is_path: bool,
    /// `t_sigma(T, u)` for every absorber `u`, indexed by vertex.
    pub sigma_by_absorber: Vec<Rational>,
    pub sigma_min: Rational,
    pub sigma_max: Rational,
    pub round_trip_max: Rational,
    pub round_trip_max_pair: (VertexId, VertexId),
    pub round_trip_diameter: Rational,
    pub round_trip_diameter_pair: (VertexId, VertexId),
}

/// Extremes of one statistic across the trees of an order, with star/path
/// attainment flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremeSummary {
    pub statistic: String,
    pub min_value: Rational,
    pub min_trees: Vec<usize>,
    pub max_value: Rational,
    pub max_trees: Vec<usize>,
    pub star_attains_min: bool,
    pub path_attains_max: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyOrder {
    pub n: usize,
    pub tree_count: usize,
    pub star_index: usize,
    pub path_index: usize,
    pub trees: Vec<TreeSummary>,
    /// Convention: `t_sigma(T) = max` over absorber choices.
    pub sigma_max_convention: ExtremeSummary,
    /// Convention: `t_sigma(T) = min` over absorber choices.
    pub sigma_min_convention: ExtremeSummary,
    /// Convention "each": every per-absorber value of every tree lies in
    /// the band [star's minimum, path's maximum].
    pub sigma_each_within_band: bool,
    pub round_trip_max_pairs: ExtremeSummary,
    pub round_trip_diameter: ExtremeSummary,
}

fn edge_string(g: &Graph) -> String {
    let parts: Vec<String> = g
        .edges()
        .map(|(u, v, _)| format!("{}-{}", u.one_based(), v.one_based()))
        .collect();
    parts.join(" ")
}

/// Diameter endpoints by double sweep, ties broken by smallest id.
fn diameter_pair(g: &Graph) -> (VertexId, VertexId) {
    let profile = g.degree_profile();
    let far = |from: VertexId| -> VertexId {
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[from.index()] = 0;
        let mut queue = std::collections::VecDeque::from([from]);
        let mut best = from;
        while let Some(v) = queue.pop_front() {
            for &u in profile.neighbors(v) {
                if dist[u.index()] == usize::MAX {
                    dist[u.index()] = dist[v.index()] + 1;
                    queue.push_back(u);
                }
            }
        }
        for v in g.vertices() {
            if dist[v.index()] != usize::MAX && dist[v.index()] > dist[best.index()] {
                best = v;
            }
        }
        best
    };
    let a = far(VertexId::new(0));
    let b = far(a);
    (a.min(b), a.max(b))
}

fn summarize_tree(index: usize, tree: &Graph) -> Result<TreeSummary> {
    let n = tree.vertex_count();
    let max_degree = tree.vertices().map(|v| tree.degree(v)).max().unwrap_or(0);
    let is_path = tree.vertices().all(|v| tree.degree(v) <= 2);
    let is_star = max_degree as usize == n - 1;

    let mut sigma_by_absorber = Vec::with_capacity(n);
    let mut solves = Vec::with_capacity(n);
    for u in tree.vertices() {
        let t = solve_graph(&tree.with_absorbing(&[u])?)?;
        sigma_by_absorber.push(t.total());
        solves.push(t);
    }
    let sigma_min = sigma_by_absorber.iter().min().cloned().expect("n >= 1");
    let sigma_max = sigma_by_absorber.iter().max().cloned().expect("n >= 1");

    let mut rt_max: Option<(Rational, (VertexId, VertexId))> = None;
    for v in tree.vertices() {
        for u in tree.vertices().filter(|&u| u > v) {
            let value = solves[u.index()].value_or_zero(v) + solves[v.index()].value_or_zero(u);
            if rt_max.as_ref().is_none_or(|(best, _)| value > *best) {
                rt_max = Some((value, (v, u)));
            }
        }
    }
    let (round_trip_max, round_trip_max_pair) = rt_max.expect("n >= 2");
    let round_trip_diameter_pair = diameter_pair(tree);
    let round_trip_diameter = round_trip(tree, round_trip_diameter_pair.0, round_trip_diameter_pair.1)?;

    Ok(TreeSummary {
        index,
        edges: edge_string(tree),
        is_star,
        is_path,
        sigma_by_absorber,
        sigma_min,
        sigma_max,
        round_trip_max,
        round_trip_max_pair,
        round_trip_diameter,
        round_trip_diameter_pair,
    })
}

fn extremes(
    statistic: &str,
    values: &[Rational],
    star_index: usize,
    path_index: usize,
) -> ExtremeSummary {
    let min_value = values.iter().min().cloned().expect("non-empty");
    let max_value = values.iter().max().cloned().expect("non-empty");
    let min_trees: Vec<usize> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| **v == min_value)
        .map(|(i, _)| i)
        .collect();
    let max_trees: Vec<usize> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| **v == max_value)
        .map(|(i, _)| i)
        .collect();
    ExtremeSummary {
        statistic: statistic.to_string(),
        star_attains_min: min_trees.contains(&star_index),
        path_attains_max: max_trees.contains(&path_index),
        min_value,
        min_trees,
        max_value,
        max_trees,
    }
}

/// Surveys every tree order in the range (2..=10 supported).
pub fn survey(orders: RangeInclusive<usize>) -> Result<Vec<SurveyOrder>> {
    let mut out = Vec::new();
    for n in orders {
        let trees = enumerate_trees(n)?;
        let summaries: Vec<TreeSummary> = trees
            .iter()
            .enumerate()
            .map(|(i, t)| summarize_tree(i, t))
            .collect::<Result<_>>()?;
        let star_index = summaries.iter().position(|s| s.is_star).expect("star exists");
        let path_index = summaries.iter().position(|s| s.is_path).expect("path exists");

        let sigma_max_values: Vec<Rational> =
            summaries.iter().map(|s| s.sigma_max.clone()).collect();
        let sigma_min_values: Vec<Rational> =
            summaries.iter().map(|s| s.sigma_min.clone()).collect();
        let rt_max_values: Vec<Rational> =
            summaries.iter().map(|s| s.round_trip_max.clone()).collect();
        let rt_diam_values: Vec<Rational> =
            summaries.iter().map(|s| s.round_trip_diameter.clone()).collect();

        let band_lo = &summaries[star_index].sigma_min;
        let band_hi = &summaries[path_index].sigma_max;
        let sigma_each_within_band = summaries
            .iter()
            .flat_map(|s| s.sigma_by_absorber.iter())
            .all(|v| v >= band_lo && v <= band_hi);

        out.push(SurveyOrder {
            n,
            tree_count: summaries.len(),
            star_index,
            path_index,
            sigma_max_convention: extremes(
                "t_sigma (absorber=max)",
                &sigma_max_values,
                star_index,
                path_index,
            ),
            sigma_min_convention: extremes(
                "t_sigma (absorber=min)",
                &sigma_min_values,
                star_index,
                path_index,
            ),
            sigma_each_within_band,
            round_trip_max_pairs: extremes(
                "t' (max over pairs)",
                &rt_max_values,
                star_index,
                path_index,
            ),
            round_trip_diameter: extremes(
                "t' (diameter endpoints)",
                &rt_diam_values,
                star_index,
                path_index,
            ),
            trees: summaries,
        });
    }
    Ok(out)
}

fn render_extreme(out: &mut String, e: &ExtremeSummary) {
    let fmt_trees = |trees: &[usize]| -> String {
        let parts: Vec<String> = trees.iter().map(|t| format!("#{t}")).collect();
        parts.join(",")
    };
    let _ = writeln!(
        out,
        "  {}: min={} at {} max={} at {} star_attains_min={} path_attains_max={}",
        e.statistic,
        crate::format::rational_str(&e.min_value),
        fmt_trees(&e.min_trees),
        crate::format::rational_str(&e.max_value),
        fmt_trees(&e.max_trees),
        e.star_attains_min,
        e.path_attains_max
    );
}

/// Absorber conventions a survey report can print: `t_sigma` maximized
/// over the absorber choice, minimized, or checked per-absorber against the
/// star/path band.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaConvention {
    Max,
    Min,
    Each,
}

/// Plain-text report, one block per order, all conventions.
pub fn render_survey(orders: &[SurveyOrder], list_trees: bool) -> String {
    render_survey_with(
        orders,
        list_trees,
        &[SigmaConvention::Max, SigmaConvention::Min, SigmaConvention::Each],
    )
}

/// Plain-text report restricted to the chosen sigma conventions; round-trip
/// lines are always included under both pair conventions.
pub fn render_survey_with(
    orders: &[SurveyOrder],
    list_trees: bool,
    conventions: &[SigmaConvention],
) -> String {
    let mut out = String::new();
    for order in orders {
        let _ = writeln!(
            out,
            "n={} trees={} star=#{} path=#{}",
            order.n, order.tree_count, order.star_index, order.path_index
        );
        if list_trees {
            for t in &order.trees {
                let mut tags = String::new();
                if t.is_star {
                    tags.push_str(" star");
                }
                if t.is_path {
                    tags.push_str(" path");
                }
                let _ = writeln!(
                    out,
                    "  tree #{}{}: [{}] sigma_min={} sigma_max={} t'_max={} ({}-{}) t'_diam={} ({}-{})",
                    t.index,
                    tags,
                    t.edges,
                    crate::format::rational_str(&t.sigma_min),
                    crate::format::rational_str(&t.sigma_max),
                    crate::format::rational_str(&t.round_trip_max),
                    t.round_trip_max_pair.0,
                    t.round_trip_max_pair.1,
                    crate::format::rational_str(&t.round_trip_diameter),
                    t.round_trip_diameter_pair.0,
                    t.round_trip_diameter_pair.1,
                );
            }
        }
        for convention in conventions {
            match convention {
                SigmaConvention::Max => render_extreme(&mut out, &order.sigma_max_convention),
                SigmaConvention::Min => render_extreme(&mut out, &order.sigma_min_convention),
                SigmaConvention::Each => {
                    let _ = writeln!(
                        out,
                        "  t_sigma (absorber=each): all values within star/path band: {}",
                        order.sigma_each_within_band
                    );
                }
            }
        }
        render_extreme(&mut out, &order.round_trip_max_pairs);
        render_extreme(&mut out, &order.round_trip_diameter);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::integer;

    #[test]
    fn order_four_extremes() {
        let orders = survey(4..=4).unwrap();
        let order = &orders[0];
        assert_eq!(order.tree_count, 2);
        // S_4 with the center absorbing: three leaves, sigma = 3
        assert_eq!(order.sigma_min_convention.min_value, integer(3));
        assert!(order.sigma_min_convention.star_attains_min);
        // P_4 absorbed at an end: 9 + 8 + 5 = 22
        assert_eq!(order.sigma_max_convention.max_value, integer(22));
        assert!(order.sigma_max_convention.path_attains_max);
    }

    #[test]
    fn order_three_is_trivially_extremal() {
        let orders = survey(3..=3).unwrap();
        let order = &orders[0];
        assert_eq!(order.tree_count, 1);
        assert_eq!(order.star_index, order.path_index);
        assert!(order.sigma_max_convention.star_attains_min);
        assert!(order.sigma_max_convention.path_attains_max);
        assert!(order.sigma_each_within_band);
    }

    #[test]
    fn round_trip_conventions_on_paths() {
        // P_4: t' between the ends is 2 * 9 = 18 and no pair beats the ends
        let orders = survey(4..=4).unwrap();
        let path = &orders[0].trees[orders[0].path_index];
        assert_eq!(path.round_trip_max, integer(18));
        assert_eq!(path.round_trip_diameter, integer(18));
        assert_eq!(path.round_trip_max_pair, path.round_trip_diameter_pair);
    }
}
