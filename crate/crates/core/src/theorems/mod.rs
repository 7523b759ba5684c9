//! Executable checks for the energy statements: coalescence alternation,
//! forest quasi-order parities, subadditivity, successive-coalescence
//! trajectories, star limits, and the uniform star-chain closed forms.

mod star_chain;
pub mod suites;

pub use star_chain::{star_chain_build, star_chain_verify, StarChain, StarChainReport, WeightCheck};

use thiserror::Error;

use crate::charpoly::{quasi_compare, CharpolyError, QuasiOrder};
use crate::graph::{Graph, GraphError};
use crate::spectral::{eigen_sym, SpectralError};

#[derive(Debug, Error, PartialEq)]
pub enum CheckError {
    #[error("expected a tree")]
    NotATree,
    #[error("expected a bipartite graph")]
    NotBipartite,
    #[error("merge vertex {0} must have degree at least one")]
    MergeVertexIsolated(usize),
    #[error("vertex sequence is not a path in the tree")]
    NotAPath,
    #[error("edge set is not an edge cut")]
    NotAnEdgeCut,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Charpoly(#[from] CharpolyError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Direction of an observed energy change, with changes inside the
/// strictness margin reported as indeterminate rather than silently passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Increase,
    Decrease,
    Indeterminate,
}

impl Verdict {
    fn classify(delta: f64, epsilon: f64) -> Verdict {
        if delta.abs() <= epsilon {
            Verdict::Indeterminate
        } else if delta > 0.0 {
            Verdict::Increase
        } else {
            Verdict::Decrease
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Increase => "increase",
            Verdict::Decrease => "decrease",
            Verdict::Indeterminate => "indeterminate",
        }
    }
}

/// Per-vertex record of an energy comparison between two constructions.
#[derive(Debug, Clone)]
pub struct VertexOutcome {
    /// Vertex index in the original tree.
    pub vertex: usize,
    /// Its copy in the modified graph.
    pub mapped: usize,
    /// Distance to the reference vertex.
    pub distance: usize,
    pub energy_before: f64,
    pub energy_after: f64,
    pub delta: f64,
    pub verdict: Verdict,
    pub violation: bool,
}

/// Outcome of one alternation check: every tree vertex appears exactly once.
#[derive(Debug, Clone)]
pub struct AlternationReport {
    pub tree_order: usize,
    pub attached_order: usize,
    pub outcomes: Vec<VertexOutcome>,
    pub violations: usize,
    pub indeterminate: usize,
}

impl AlternationReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

fn tally(outcomes: Vec<VertexOutcome>, tree_order: usize, attached_order: usize) -> AlternationReport {
    let violations = outcomes.iter().filter(|o| o.violation).count();
    let indeterminate = outcomes
        .iter()
        .filter(|o| o.verdict == Verdict::Indeterminate)
        .count();
    AlternationReport { tree_order, attached_order, outcomes, violations, indeterminate }
}

/// Coalesce bipartite `b` (at `u`, which must not be isolated) onto vertex
/// `v` of tree `t`, and compare every tree vertex's energy before and after:
/// odd distance from `v` must decrease, even distance must increase.
pub fn check_alternation(
    t: &Graph,
    v: usize,
    b: &Graph,
    u: usize,
    epsilon: f64,
) -> Result<AlternationReport, CheckError> {
    if !t.is_tree() {
        return Err(CheckError::NotATree);
    }
    if b.bipartition().is_none() {
        return Err(CheckError::NotBipartite);
    }
    if b.degree(u) == 0 {
        return Err(CheckError::MergeVertexIsolated(u));
    }
    let before = eigen_sym(t)?;
    let merged = t.coalesce(v, b, u)?;
    let after = eigen_sym(&merged.graph)?;

    let mut outcomes = Vec::with_capacity(t.order());
    for w in 0..t.order() {
        let distance = t.distance(v, w).expect("trees are connected");
        let mapped = merged.map_left[w];
        let energy_before = before.vertex_energy(w);
        let energy_after = after.vertex_energy(mapped);
        let delta = energy_after - energy_before;
        let verdict = Verdict::classify(delta, epsilon);
        let expected = if distance % 2 == 1 { Verdict::Decrease } else { Verdict::Increase };
        let violation = verdict != Verdict::Indeterminate && verdict != expected;
        outcomes.push(VertexOutcome {
            vertex: w,
            mapped,
            distance,
            energy_before,
            energy_after,
            delta,
            verdict,
            violation,
        });
    }
    Ok(tally(outcomes, t.order(), b.order()))
}

/// Delete the copy of tree edge `e` from the coalescence of `t` (at `v`)
/// with bipartite `b` (at `u`) and compare energies: for `w` in the side
/// component of `e` containing `v_i`, odd `d(w, v_i)` must gain energy and
/// even must lose it.
pub fn check_edge_deletion(
    t: &Graph,
    v: usize,
    b: &Graph,
    u: usize,
    e: (usize, usize),
    epsilon: f64,
) -> Result<AlternationReport, CheckError> {
    if !t.is_tree() {
        return Err(CheckError::NotATree);
    }
    if b.bipartition().is_none() {
        return Err(CheckError::NotBipartite);
    }
    if !t.has_edge(e.0, e.1) {
        return Err(GraphError::MissingEdge(e.0.min(e.1), e.0.max(e.1)).into());
    }
    let merged = t.coalesce(v, b, u)?;
    let original = eigen_sym(&merged.graph)?;
    // Tree vertices keep their indices, so the edge copy is e itself.
    let deleted = eigen_sym(&merged.graph.delete_edges(&[e])?)?;

    let halves = t.delete_edges(&[e])?;
    let side_of = |w: usize| -> usize {
        if halves.distance(w, e.0).is_some() {
            e.0
        } else {
            e.1
        }
    };

    let mut outcomes = Vec::with_capacity(t.order());
    for w in 0..t.order() {
        let anchor = side_of(w);
        let distance = t.distance(w, anchor).expect("trees are connected");
        let energy_before = original.vertex_energy(w);
        let energy_after = deleted.vertex_energy(w);
        let delta = energy_after - energy_before;
        let verdict = Verdict::classify(delta, epsilon);
        let expected = if distance % 2 == 1 { Verdict::Increase } else { Verdict::Decrease };
        let violation = verdict != Verdict::Indeterminate && verdict != expected;
        outcomes.push(VertexOutcome {
            vertex: w,
            mapped: w,
            distance,
            energy_before,
            energy_after,
            delta,
            verdict,
            violation,
        });
    }
    Ok(tally(outcomes, t.order(), b.order()))
}

/// One quasi-order comparison along a path: expected and observed verdicts
/// for the forests built from position `index` (1-based).
#[derive(Debug, Clone)]
pub struct ForestComparison {
    pub index: usize,
    pub expected: QuasiOrder,
    pub actual: QuasiOrder,
    pub violation: bool,
}

#[derive(Debug, Clone)]
pub struct ForestAlternationReport {
    pub comparisons: Vec<ForestComparison>,
    pub violations: usize,
}

impl ForestAlternationReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// For a path v_1 ~ ... ~ v_n in a tree, compare at every 1 <= i <= n-1 the
/// forests T + A~_i against T~ + A_i in the quasi-order, where A_i is the
/// side of edge (v_i, v_{i+1}) containing v_i, T~ is the component of
/// T - v_1 containing v_2, and A~_i is the component of A_i - v_1 containing
/// v_2 (empty for i = 1). Odd i must compare strictly greater, even i
/// strictly less; the comparisons are exact integer arithmetic.
pub fn check_forest_alternation(t: &Graph, path: &[usize]) -> Result<ForestAlternationReport, CheckError> {
    if !t.is_tree() {
        return Err(CheckError::NotATree);
    }
    if path.len() < 2 {
        return Err(CheckError::NotAPath);
    }
    let mut seen = vec![false; t.order()];
    for pair in path.windows(2) {
        if pair[0] >= t.order() || pair[1] >= t.order() || !t.has_edge(pair[0], pair[1]) {
            return Err(CheckError::NotAPath);
        }
    }
    for &v in path {
        if seen[v] {
            return Err(CheckError::NotAPath);
        }
        seen[v] = true;
    }

    let head = path[0];
    let second = path[1];
    let t_reduced = component_graph_without_vertex(t, head, second)?;

    let mut comparisons = Vec::new();
    for i in 1..path.len() {
        let edge = (path[i - 1], path[i]);
        let cut = t.delete_edges(&[edge])?;
        let near_side = component_vertices(&cut, path[i - 1]);
        let side_graph = t.induced_subgraph(&near_side)?.graph;

        let reduced_side = if i == 1 {
            Graph::empty(0)
        } else {
            // Component of A_i - v_1 containing v_2, in original coordinates.
            let trimmed = cut.delete_vertices(&[head])?;
            let mapped_second = trimmed.index_map[second].expect("v_2 survives");
            let comp = component_vertices(&trimmed.graph, mapped_second);
            let original: Vec<usize> = (0..t.order())
                .filter(|&w| trimmed.index_map[w].is_some_and(|m| comp.contains(&m)))
                .collect();
            t.induced_subgraph(&original)?.graph
        };

        let lhs = t.disjoint_union(&reduced_side);
        let rhs = t_reduced.disjoint_union(&side_graph);
        let expected = if i % 2 == 1 { QuasiOrder::StrictlyGreater } else { QuasiOrder::StrictlyLess };
        let actual = quasi_compare(&lhs, &rhs)?;
        comparisons.push(ForestComparison {
            index: i,
            expected,
            actual,
            violation: actual != expected,
        });
    }
    let violations = comparisons.iter().filter(|c| c.violation).count();
    Ok(ForestAlternationReport { comparisons, violations })
}

/// Component of `g - remove` containing `keep`, as a graph in its own right.
fn component_graph_without_vertex(g: &Graph, remove: usize, keep: usize) -> Result<Graph, CheckError> {
    let del = g.delete_vertices(&[remove])?;
    let mapped = del.index_map[keep].expect("kept vertex survives");
    let comp = component_vertices(&del.graph, mapped);
    Ok(del.graph.induced_subgraph(&comp)?.graph)
}

fn component_vertices(g: &Graph, v: usize) -> Vec<usize> {
    g.components()
        .into_iter()
        .find(|c| c.binary_search(&v).is_ok())
        .expect("vertex lies in some component")
}

/// Energy bookkeeping for the merge vertex of one coalescence.
#[derive(Debug, Clone)]
pub struct MergeSubadditivityReport {
    pub merged_energy: f64,
    pub left_energy: f64,
    pub right_energy: f64,
    /// left + right - merged; the inequality demands this be >= -epsilon.
    pub slack: f64,
    pub equality: bool,
    pub merge_isolated: bool,
    pub violation: bool,
}

impl MergeSubadditivityReport {
    pub fn passed(&self) -> bool {
        !self.violation
    }
}

/// Check, for bipartite `g` and `h`, that the merged vertex of the
/// coalescence at (u, v) has energy at most the sum of the operand vertex
/// energies, with equality exactly when one merge vertex is isolated.
pub fn check_merge_subadditivity(
    g: &Graph,
    u: usize,
    h: &Graph,
    v: usize,
    epsilon: f64,
) -> Result<MergeSubadditivityReport, CheckError> {
    if g.bipartition().is_none() || h.bipartition().is_none() {
        return Err(CheckError::NotBipartite);
    }
    let merged = g.coalesce(u, h, v)?;
    let merged_energy = eigen_sym(&merged.graph)?.vertex_energy(merged.merged);
    let left_energy = eigen_sym(g)?.vertex_energy(u);
    let right_energy = eigen_sym(h)?.vertex_energy(v);
    let slack = left_energy + right_energy - merged_energy;
    let equality = slack.abs() <= epsilon;
    let merge_isolated = g.degree(u) == 0 || h.degree(v) == 0;
    let violation = slack < -epsilon || (equality != merge_isolated);
    Ok(MergeSubadditivityReport {
        merged_energy,
        left_energy,
        right_energy,
        slack,
        equality,
        merge_isolated,
        violation,
    })
}

/// Total-energy bookkeeping for one coalescence or edge-cut comparison.
#[derive(Debug, Clone)]
pub struct EnergyComparisonReport {
    pub lhs_energy: f64,
    pub rhs_energy: f64,
    /// rhs - lhs; the inequality demands this be >= -epsilon.
    pub slack: f64,
    pub violation: bool,
}

impl EnergyComparisonReport {
    pub fn passed(&self) -> bool {
        !self.violation
    }
}

/// Check E(G o H) <= E(G) + E(H) for arbitrary graphs.
pub fn check_energy_subadditivity(
    g: &Graph,
    u: usize,
    h: &Graph,
    v: usize,
    epsilon: f64,
) -> Result<EnergyComparisonReport, CheckError> {
    let merged = g.coalesce(u, h, v)?;
    let lhs = eigen_sym(&merged.graph)?.graph_energy();
    let rhs = eigen_sym(g)?.graph_energy() + eigen_sym(h)?.graph_energy();
    let slack = rhs - lhs;
    Ok(EnergyComparisonReport { lhs_energy: lhs, rhs_energy: rhs, slack, violation: slack < -epsilon })
}

/// Check E(G - F) <= E(G) for an edge cut F (a set whose removal increases
/// the component count; the empty set passes trivially).
pub fn check_edge_cut_energy(
    g: &Graph,
    cut: &[(usize, usize)],
    epsilon: f64,
) -> Result<EnergyComparisonReport, CheckError> {
    let reduced = g.delete_edges(cut)?;
    if !cut.is_empty() && reduced.components().len() <= g.components().len() {
        return Err(CheckError::NotAnEdgeCut);
    }
    let lhs = eigen_sym(&reduced)?.graph_energy();
    let rhs = eigen_sym(g)?.graph_energy();
    let slack = rhs - lhs;
    Ok(EnergyComparisonReport { lhs_energy: lhs, rhs_energy: rhs, slack, violation: slack < -epsilon })
}

/// Energy trajectory of one tree vertex across successive coalescences.
#[derive(Debug, Clone)]
pub struct TrajectoryRecord {
    pub vertex: usize,
    pub distance: usize,
    /// Energies at steps 0..=steps (step 0 is the bare tree).
    pub energies: Vec<f64>,
    /// E_{T - v}(w); `None` for the merge vertex itself.
    pub bound: Option<f64>,
    pub monotone_violations: usize,
    pub bound_violations: usize,
    pub indeterminate: usize,
}

#[derive(Debug, Clone)]
pub struct TrajectoryReport {
    pub steps: usize,
    pub records: Vec<TrajectoryRecord>,
    pub violations: usize,
    pub indeterminate: usize,
}

impl TrajectoryReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Coalesce the schedule of bipartite graphs one by one onto the running
/// copy of `v` and record every tree vertex's energy after each step.
/// Vertices at even distance from `v` must rise strictly (bounded above by
/// their energy in T - v, except for `v` itself); odd distances must fall
/// strictly (bounded below).
pub fn run_successive(
    t: &Graph,
    v: usize,
    schedule: &[(Graph, usize)],
    epsilon: f64,
) -> Result<TrajectoryReport, CheckError> {
    if !t.is_tree() {
        return Err(CheckError::NotATree);
    }
    for (b, bv) in schedule {
        if b.bipartition().is_none() {
            return Err(CheckError::NotBipartite);
        }
        if b.degree(*bv) == 0 {
            return Err(CheckError::MergeVertexIsolated(*bv));
        }
    }

    let n = t.order();
    let mut energies: Vec<Vec<f64>> = vec![Vec::with_capacity(schedule.len() + 1); n];
    let spec = eigen_sym(t)?;
    for (w, track) in energies.iter_mut().enumerate() {
        track.push(spec.vertex_energy(w));
    }
    let mut current = t.clone();
    for (b, bv) in schedule {
        // Left-operand indices survive coalescence, so v and every tracked
        // vertex keep their indices.
        current = current.coalesce(v, b, *bv)?.graph;
        let spec = eigen_sym(&current)?;
        for (w, track) in energies.iter_mut().enumerate() {
            track.push(spec.vertex_energy(w));
        }
    }

    let without_v = t.delete_vertices(&[v])?;
    let bound_spec = eigen_sym(&without_v.graph)?;

    let mut records = Vec::with_capacity(n);
    for (w, track) in energies.into_iter().enumerate() {
        let distance = t.distance(v, w).expect("trees are connected");
        let rising = distance.is_multiple_of(2);
        let bound = if w == v {
            None
        } else {
            Some(bound_spec.vertex_energy(without_v.index_map[w].expect("w != v survives")))
        };
        let mut monotone_violations = 0;
        let mut indeterminate = 0;
        for pair in track.windows(2) {
            let delta = pair[1] - pair[0];
            match Verdict::classify(delta, epsilon) {
                Verdict::Indeterminate => indeterminate += 1,
                Verdict::Increase if !rising => monotone_violations += 1,
                Verdict::Decrease if rising => monotone_violations += 1,
                _ => {}
            }
        }
        let mut bound_violations = 0;
        if let Some(bound) = bound {
            for &e in &track {
                let ok = if rising { e <= bound + epsilon } else { e >= bound - epsilon };
                if !ok {
                    bound_violations += 1;
                }
            }
        }
        records.push(TrajectoryRecord {
            vertex: w,
            distance,
            energies: track,
            bound,
            monotone_violations,
            bound_violations,
            indeterminate,
        });
    }
    let violations = records.iter().map(|r| r.monotone_violations + r.bound_violations).sum();
    let indeterminate = records.iter().map(|r| r.indeterminate).sum();
    Ok(TrajectoryReport { steps: schedule.len(), records, violations, indeterminate })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepRole {
    Center,
    Leaf,
    Tree,
}

impl SweepRole {
    pub fn as_str(&self) -> &'static str {
        match self {
            SweepRole::Center => "center",
            SweepRole::Leaf => "leaf",
            SweepRole::Tree => "tree",
        }
    }
}

/// One (star size, vertex) energy sample of the star sweep.
#[derive(Debug, Clone)]
pub struct StarSweepRow {
    pub star_edges: usize,
    pub role: SweepRole,
    /// Vertex index in the coalesced graph.
    pub vertex: usize,
    pub energy: f64,
    /// Bracketing bounds (center and leaf rows only).
    pub bound_low: Option<f64>,
    pub bound_high: Option<f64>,
    /// E_{T - v_c} target and current gap (tree rows only).
    pub target: Option<f64>,
    pub gap: Option<f64>,
    pub violation: bool,
}

#[derive(Debug, Clone)]
pub struct StarSweepReport {
    pub rows: Vec<StarSweepRow>,
    pub violations: usize,
}

impl StarSweepReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// For each n in `star_sizes`, coalesce the star with n edges (center
/// identified with `v_c` of tree `t`) and check the bracketing bounds:
/// leaf energy in [1/sqrt(n + deg), 1/sqrt(n)], center energy in
/// [sqrt(n), sqrt(n + deg)] with deg = deg_T(v_c), and for the remaining
/// tree vertices a gap to their energy in T - v_c that never grows as n
/// increases.
pub fn star_limit_sweep(
    t: &Graph,
    v_c: usize,
    star_sizes: &[usize],
    epsilon: f64,
) -> Result<StarSweepReport, CheckError> {
    if !t.is_tree() {
        return Err(CheckError::NotATree);
    }
    let deg = t.degree(v_c) as f64;
    let without = t.delete_vertices(&[v_c])?;
    let target_spec = eigen_sym(&without.graph)?;

    let mut rows = Vec::new();
    // (star size, vertex, gap) samples for the monotone-gap check.
    let mut gap_samples: Vec<(usize, usize, f64)> = Vec::new();
    for &n in star_sizes {
        assert!(n >= 1, "star sweep needs at least one star edge");
        let star = Graph::star(n + 1)?;
        let merged = star.coalesce(0, t, v_c)?;
        let spec = eigen_sym(&merged.graph)?;
        let nf = n as f64;

        let center_energy = spec.vertex_energy(0);
        let (lo, hi) = (nf.sqrt(), (nf + deg).sqrt());
        rows.push(StarSweepRow {
            star_edges: n,
            role: SweepRole::Center,
            vertex: 0,
            energy: center_energy,
            bound_low: Some(lo),
            bound_high: Some(hi),
            target: None,
            gap: None,
            violation: center_energy < lo - epsilon || center_energy > hi + epsilon,
        });

        let leaf_energy = spec.vertex_energy(1);
        let (lo, hi) = (1.0 / (nf + deg).sqrt(), 1.0 / nf.sqrt());
        rows.push(StarSweepRow {
            star_edges: n,
            role: SweepRole::Leaf,
            vertex: 1,
            energy: leaf_energy,
            bound_low: Some(lo),
            bound_high: Some(hi),
            target: None,
            gap: None,
            violation: leaf_energy < lo - epsilon || leaf_energy > hi + epsilon,
        });

        for w in 0..t.order() {
            if w == v_c {
                continue;
            }
            let mapped = merged.map_right[w];
            let energy = spec.vertex_energy(mapped);
            let target = target_spec.vertex_energy(without.index_map[w].expect("w != v_c"));
            let gap = (energy - target).abs();
            gap_samples.push((n, w, gap));
            rows.push(StarSweepRow {
                star_edges: n,
                role: SweepRole::Tree,
                vertex: mapped,
                energy,
                bound_low: None,
                bound_high: None,
                target: Some(target),
                gap: Some(gap),
                violation: false,
            });
        }
    }

    // Gaps must be non-increasing in the star size for every tree vertex.
    let mut violations = rows.iter().filter(|r| r.violation).count();
    for w in 0..t.order() {
        let mut series: Vec<(usize, f64)> = gap_samples
            .iter()
            .filter(|&&(_, v, _)| v == w)
            .map(|&(n, _, g)| (n, g))
            .collect();
        series.sort_by_key(|&(n, _)| n);
        for pair in series.windows(2) {
            if pair[1].1 > pair[0].1 + epsilon {
                violations += 1;
            }
        }
    }
    Ok(StarSweepReport { rows, violations })
}

/// One prefix of the star-schedule series bound.
#[derive(Debug, Clone)]
pub struct SeriesBoundRow {
    pub steps: usize,
    pub hub_energy: f64,
    /// 1 + sum of 1/sqrt(d_i + 1) over the prefix.
    pub bound: f64,
    pub violation: bool,
}

#[derive(Debug, Clone)]
pub struct SeriesBoundReport {
    pub rows: Vec<SeriesBoundRow>,
    pub violations: usize,
}

impl SeriesBoundReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Starting from a single edge (hub vertex 1), coalesce a star with
/// d_i + 1 edges by one of its leaves at each step and check the hub energy
/// against the running bound 1 + sum 1/sqrt(d_i + 1) at every prefix.
pub fn check_series_bound(leaf_counts: &[usize], epsilon: f64) -> Result<SeriesBoundReport, CheckError> {
    assert!(!leaf_counts.is_empty(), "need at least one step");
    let hub = 1usize;
    let mut g = Graph::path(2);
    let mut bound = 1.0;
    let mut rows = Vec::with_capacity(leaf_counts.len());
    for (step, &d) in leaf_counts.iter().enumerate() {
        assert!(d >= 1, "star leaf parameter must be positive");
        let star = Graph::star(d + 2)?;
        // Vertex 1 of a star is a leaf; hub index survives on the left.
        g = g.coalesce(hub, &star, 1)?.graph;
        bound += 1.0 / ((d as f64) + 1.0).sqrt();
        let hub_energy = eigen_sym(&g)?.vertex_energy(hub);
        rows.push(SeriesBoundRow {
            steps: step + 1,
            hub_energy,
            bound,
            violation: hub_energy > bound + epsilon,
        });
    }
    let violations = rows.iter().filter(|r| r.violation).count();
    Ok(SeriesBoundReport { rows, violations })
}
