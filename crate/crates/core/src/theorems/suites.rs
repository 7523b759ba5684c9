//! Seeded randomized verification suites. Every suite derives each
//! instance's generator deterministically from (seed, instance index), so
//! runs with identical configuration produce identical reports.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::charpoly::{verify_coalescence_identity, verify_edge_recursion};
use crate::graph::Graph;
use crate::spectral::{eigen_sym, spectral_moment, walk_count};
use num_traits::ToPrimitive;

use super::{
    check_alternation, check_edge_cut_energy, check_edge_deletion, check_energy_subadditivity,
    check_forest_alternation, check_merge_subadditivity, check_series_bound, run_successive,
    star_chain_build, star_chain_verify, star_limit_sweep, CheckError, Verdict,
};

pub const SUITE_NAMES: &[&str] = &[
    "alternation",
    "lemma31",
    "edge-deletion",
    "subadd-vertex",
    "subadd-energy",
    "edge-cut",
    "successive",
    "star-limit",
    "hnd",
    "series-bound",
    "balance",
    "adjacent-product",
    "identities",
    "moments",
];

#[derive(Debug, Error, PartialEq)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// Knobs shared by all suites. All randomness flows from `seed`.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub epsilon: f64,
    pub quad_rel_tol: f64,
    pub max_tree: usize,
    pub max_bip: usize,
    pub trials: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            epsilon: 1e-8,
            quad_rel_tol: 1e-6,
            max_tree: 12,
            max_bip: 10,
            trials: 100,
        }
    }
}

/// One CSV row of a suite run.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub instance: usize,
    pub item: String,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub delta: Option<f64>,
    pub verdict: String,
}

/// Pass/fail record tying one suite run to one verified statement.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub violations: usize,
    pub indeterminate: usize,
    pub rows: Vec<ReportRow>,
}

/// Fixed-width scientific formatting with 17 significant digits.
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn summary(&self) -> String {
        format!(
            "SUITE {} {} checked={} violations={} indeterminate={}",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.violations,
            self.indeterminate
        )
    }

    pub fn csv_header() -> &'static str {
        "suite,instance,item,lhs,rhs,delta,verdict"
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::csv_header());
        out.push('\n');
        let fmt = |v: &Option<f64>| v.map(format_real).unwrap_or_default();
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                self.name,
                row.instance,
                row.item,
                fmt(&row.lhs),
                fmt(&row.rhs),
                fmt(&row.delta),
                row.verdict
            ));
        }
        out
    }
}

/// Deterministic per-instance generator: one stream per instance index.
fn instance_rng(seed: u64, instance: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(instance as u64);
    rng
}

fn random_tree_instance<R: Rng>(rng: &mut R, max_order: usize) -> Graph {
    let n = rng.gen_range(2..=max_order.max(2));
    Graph::random_tree_with(n, rng)
}

fn random_bipartite_instance<R: Rng>(rng: &mut R, max_order: usize) -> Graph {
    let total = max_order.max(2);
    let n1 = rng.gen_range(1..=total - 1);
    let n2 = rng.gen_range(1..=total - n1);
    let p = rng.gen_range(0.25..0.75);
    Graph::random_bipartite_with(n1, n2, p, rng).expect("redraw cap is generous at p >= 0.25")
}

/// Run one named suite. Unknown names list nothing; see [`SUITE_NAMES`].
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    match name {
        "alternation" => alternation_suite(cfg),
        "lemma31" => forest_alternation_suite(cfg),
        "edge-deletion" => edge_deletion_suite(cfg),
        "subadd-vertex" => merge_subadditivity_suite(cfg),
        "subadd-energy" => energy_subadditivity_suite(cfg),
        "edge-cut" => edge_cut_suite(cfg),
        "successive" => successive_suite(cfg),
        "star-limit" => star_limit_suite(cfg),
        "hnd" => star_chain_suite(cfg),
        "series-bound" => series_bound_suite(cfg),
        "balance" => balance_suite(cfg),
        "adjacent-product" => adjacent_product_suite(cfg),
        "identities" => identities_suite(cfg),
        "moments" => moments_suite(cfg),
        _ => Err(SuiteError::UnknownSuite(name.to_owned())),
    }
}

fn alternation_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "alternation".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    for instance in 0..cfg.trials {
        let mut rng = instance_rng(cfg.seed, instance);
        let tree = random_tree_instance(&mut rng, cfg.max_tree);
        let v = rng.gen_range(0..tree.order());
        let attached = random_bipartite_instance(&mut rng, cfg.max_bip);
        let outcome = check_alternation(&tree, v, &attached, 0, cfg.epsilon)?;
        for o in &outcome.outcomes {
            report.rows.push(ReportRow {
                instance,
                item: format!("w={} d={}", o.vertex, o.distance),
                lhs: Some(o.energy_before),
                rhs: Some(o.energy_after),
                delta: Some(o.delta),
                verdict: if o.violation { "violation".into() } else { o.verdict.as_str().into() },
            });
        }
        report.checked += outcome.outcomes.len();
        report.violations += outcome.violations;
        report.indeterminate += outcome.indeterminate;
    }
    Ok(report)
}

fn forest_alternation_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "lemma31".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    for instance in 0..cfg.trials {
        let mut rng = instance_rng(cfg.seed, instance);
        let tree = random_tree_instance(&mut rng, cfg.max_tree);
        // A maximal path: between two distinct leaves.
        let leaves: Vec<usize> = (0..tree.order()).filter(|&v| tree.degree(v) <= 1).collect();
        let a = leaves[rng.gen_range(0..leaves.len())];
        let b = loop {
            let b = leaves[rng.gen_range(0..leaves.len())];
            if b != a {
                break b;
            }
        };
        let path = tree.tree_path(a, b).map_err(CheckError::from)?;
        let outcome = check_forest_alternation(&tree, &path)?;
        for c in &outcome.comparisons {
            report.rows.push(ReportRow {
                instance,
                item: format!("i={} expected={:?} actual={:?}", c.index, c.expected, c.actual),
                lhs: None,
                rhs: None,
                delta: None,
                verdict: if c.violation { "violation".into() } else { "exact".into() },
            });
        }
        report.checked += outcome.comparisons.len();
        report.violations += outcome.violations;
    }
    Ok(report)
}

fn edge_deletion_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "edge-deletion".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    for instance in 0..cfg.trials {
        let mut rng = instance_rng(cfg.seed, instance);
        let tree = random_tree_instance(&mut rng, cfg.max_tree);
        let edges: Vec<(usize, usize)> = tree.edges().collect();
        let e = edges[rng.gen_range(0..edges.len())];
        let v = rng.gen_range(0..tree.order());
        // Include the bare-deletion case (isolated-vertex attachment).
        let attached = if instance % 4 == 0 {
            Graph::empty(1)
        } else {
            random_bipartite_instance(&mut rng, cfg.max_bip)
        };
        let outcome = check_edge_deletion(&tree, v, &attached, 0, e, cfg.epsilon)?;
        for o in &outcome.outcomes {
            report.rows.push(ReportRow {
                instance,
                item: format!("w={} d={}", o.vertex, o.distance),
                lhs: Some(o.energy_before),
                rhs: Some(o.energy_after),
                delta: Some(o.delta),
                verdict: if o.violation { "violation".into() } else { o.verdict.as_str().into() },
            });
        }
        report.checked += outcome.outcomes.len();
        report.violations += outcome.violations;
        report.indeterminate += outcome.indeterminate;
    }
    Ok(report)
}

fn merge_subadditivity_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "subadd-vertex".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    for instance in 0..cfg.trials {
        let mut rng = instance_rng(cfg.seed, instance);
        let right = random_bipartite_instance(&mut rng, cfg.max_bip);
        let v = rng.gen_range(0..right.order());
        // Every fifth instance constructs the equality case: an isolated
        // merge vertex appended to the left operand.
        let (left, u, kind) = if instance % 5 == 0 {
            let base = random_bipartite_instance(&mut rng, cfg.max_bip);
            let extended = Graph::from_edges(base.order() + 1, base.edges()).expect("same edges");
            let u = extended.order() - 1;
            (extended, u, "isolated")
        } else {
            let base = random_bipartite_instance(&mut rng, cfg.max_bip);
            let u = rng.gen_range(0..base.order());
            (base, u, "random")
        };
        let outcome = check_merge_subadditivity(&left, u, &right, v, cfg.epsilon)?;
        report.rows.push(ReportRow {
            instance,
            item: format!(
                "{kind} equality={} isolated={}",
                outcome.equality, outcome.merge_isolated
            ),
            lhs: Some(outcome.merged_energy),
            rhs: Some(outcome.left_energy + outcome.right_energy),
            delta: Some(outcome.slack),
            verdict: if outcome.violation { "violation".into() } else { "ok".into() },
        });
        report.checked += 1;
        report.violations += usize::from(outcome.violation);
    }
    Ok(report)
}

fn energy_subadditivity_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "subadd-energy".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    for instance in 0..cfg.trials {
        let mut rng = instance_rng(cfg.seed, instance);
        // The inequality holds for arbitrary graphs; mix in odd cycles.
        let left = match instance % 3 {
            0 => random_tree_instance(&mut rng, cfg.max_tree),
            1 => random_bipartite_instance(&mut rng, cfg.max_bip),
            _ => Graph::cycle(2 * rng.gen_range(1..=3) + 1),
        };
        let right = if instance % 2 == 0 {
            random_bipartite_instance(&mut rng, cfg.max_bip)
        } else {
            random_tree_instance(&mut rng, cfg.max_tree)
        };
        let u = rng.gen_range(0..left.order());
        let v = rng.gen_range(0..right.order());
        let outcome = check_energy_subadditivity(&left, u, &right, v, cfg.epsilon)?;
        report.rows.push(ReportRow {
            instance,
            item: format!("orders={}+{}", left.order(), right.order()),
            lhs: Some(outcome.lhs_energy),
            rhs: Some(outcome.rhs_energy),
            delta: Some(outcome.slack),
            verdict: if outcome.violation { "violation".into() } else { "ok".into() },
        });
        report.checked += 1;
        report.violations += usize::from(outcome.violation);
    }
    Ok(report)
}

fn edge_cut_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "edge-cut".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    for instance in 0..cfg.trials {
        let mut rng = instance_rng(cfg.seed, instance);
        let g = if instance % 2 == 0 {
            random_tree_instance(&mut rng, cfg.max_tree)
        } else {
            random_bipartite_instance(&mut rng, cfg.max_bip)
        };
        // A cut is the boundary of a vertex subset; empty boundaries are the
        // trivial case.
        let side: Vec<bool> = (0..g.order()).map(|_| rng.gen_bool(0.5)).collect();
        let cut: Vec<(usize, usize)> = g.edges().filter(|&(a, b)| side[a] != side[b]).collect();
        let outcome = check_edge_cut_energy(&g, &cut, cfg.epsilon)?;
        report.rows.push(ReportRow {
            instance,
            item: format!("cut_size={}", cut.len()),
            lhs: Some(outcome.lhs_energy),
            rhs: Some(outcome.rhs_energy),
            delta: Some(outcome.slack),
            verdict: if outcome.violation { "violation".into() } else { "ok".into() },
        });
        report.checked += 1;
        report.violations += usize::from(outcome.violation);
    }
    Ok(report)
}

fn successive_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "successive".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    let trials = cfg.trials.min(20);
    for instance in 0..trials {
        let mut rng = instance_rng(cfg.seed, instance);
        let tree = random_tree_instance(&mut rng, cfg.max_tree.min(8));
        let v = rng.gen_range(0..tree.order());
        let schedule: Vec<(Graph, usize)> = (0..10)
            .map(|_| (random_bipartite_instance(&mut rng, cfg.max_bip.min(6)), 0))
            .collect();
        let outcome = run_successive(&tree, v, &schedule, cfg.epsilon)?;
        for r in &outcome.records {
            report.rows.push(ReportRow {
                instance,
                item: format!("w={} d={}", r.vertex, r.distance),
                lhs: Some(r.energies[0]),
                rhs: Some(*r.energies.last().unwrap()),
                delta: r.bound,
                verdict: if r.monotone_violations + r.bound_violations > 0 {
                    "violation".into()
                } else if r.indeterminate > 0 {
                    Verdict::Indeterminate.as_str().into()
                } else {
                    "ok".into()
                },
            });
        }
        report.checked += outcome.records.len();
        report.violations += outcome.violations;
        report.indeterminate += outcome.indeterminate;
    }
    Ok(report)
}

fn star_limit_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "star-limit".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    let sizes = [1usize, 2, 4, 8, 16, 32];
    let trials = cfg.trials.min(6);
    for instance in 0..trials {
        let mut rng = instance_rng(cfg.seed, instance);
        let tree = random_tree_instance(&mut rng, cfg.max_tree.min(6));
        let center = rng.gen_range(0..tree.order());
        let outcome = star_limit_sweep(&tree, center, &sizes, cfg.epsilon)?;
        for row in &outcome.rows {
            report.rows.push(ReportRow {
                instance,
                item: format!("n={} {} v={}", row.star_edges, row.role.as_str(), row.vertex),
                lhs: Some(row.energy),
                rhs: row.bound_high.or(row.target),
                delta: row.gap,
                verdict: if row.violation { "violation".into() } else { "ok".into() },
            });
        }
        report.checked += outcome.rows.len();
        report.violations += outcome.violations;
    }
    Ok(report)
}

fn star_chain_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "hnd".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    let mut instance = 0;
    for n in 1..=8 {
        for d in 1..=5 {
            let chain = star_chain_build(n, d);
            let outcome = star_chain_verify(&chain, cfg.epsilon)?;
            report.rows.push(ReportRow {
                instance,
                item: format!("n={n} d={d} charpoly={}", outcome.charpoly_match),
                lhs: Some(outcome.spectral_energy),
                rhs: Some(outcome.closed_form_energy),
                delta: Some(outcome.spectral_energy - outcome.closed_form_energy),
                verdict: if outcome.violations == 0 { "ok".into() } else { "violation".into() },
            });
            report.checked += 2 + outcome.weight_checks.len();
            report.violations += outcome.violations;
            instance += 1;
        }
    }
    Ok(report)
}

fn series_bound_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "series-bound".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    let trials = cfg.trials.min(10);
    for instance in 0..trials {
        let mut rng = instance_rng(cfg.seed, instance);
        let seq: Vec<usize> = match instance {
            0 => vec![1, 1, 1],
            1 => (1..=5).map(|k| k * k).collect(),
            _ => {
                let len = rng.gen_range(3..=8);
                (0..len).map(|_| rng.gen_range(1..=6)).collect()
            }
        };
        let outcome = check_series_bound(&seq, cfg.epsilon)?;
        for row in &outcome.rows {
            report.rows.push(ReportRow {
                instance,
                item: format!("steps={}", row.steps),
                lhs: Some(row.hub_energy),
                rhs: Some(row.bound),
                delta: Some(row.bound - row.hub_energy),
                verdict: if row.violation { "violation".into() } else { "ok".into() },
            });
        }
        report.checked += outcome.rows.len();
        report.violations += outcome.violations;
    }
    Ok(report)
}

fn balance_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "balance".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    for instance in 0..cfg.trials {
        let mut rng = instance_rng(cfg.seed, instance);
        let g = random_bipartite_instance(&mut rng, cfg.max_bip);
        let parts = g.bipartition().expect("generator output is bipartite");
        let spec = eigen_sym(&g).map_err(CheckError::from)?;
        let sum1: f64 = parts.part1.iter().map(|&v| spec.vertex_energy(v)).sum();
        let sum2: f64 = parts.part2.iter().map(|&v| spec.vertex_energy(v)).sum();
        let delta = (sum1 - sum2).abs();
        let violation = delta > cfg.epsilon * g.order() as f64;
        report.rows.push(ReportRow {
            instance,
            item: format!("order={}", g.order()),
            lhs: Some(sum1),
            rhs: Some(sum2),
            delta: Some(delta),
            verdict: if violation { "violation".into() } else { "ok".into() },
        });
        report.checked += 1;
        report.violations += usize::from(violation);
    }
    Ok(report)
}

/// Adjacent vertex energies multiply to at least one; fixed margin.
const ADJACENT_PRODUCT_TOL: f64 = 1e-9;

fn adjacent_product_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "adjacent-product".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    for instance in 0..cfg.trials {
        let mut rng = instance_rng(cfg.seed, instance);
        let g = if instance % 2 == 0 {
            random_bipartite_instance(&mut rng, cfg.max_bip)
        } else {
            random_tree_instance(&mut rng, cfg.max_tree)
        };
        let spec = eigen_sym(&g).map_err(CheckError::from)?;
        let mut min_product = f64::INFINITY;
        let mut edge_count = 0usize;
        let mut violations = 0usize;
        for (a, b) in g.edges() {
            let product = spec.vertex_energy(a) * spec.vertex_energy(b);
            min_product = min_product.min(product);
            edge_count += 1;
            if product < 1.0 - ADJACENT_PRODUCT_TOL {
                violations += 1;
            }
        }
        report.rows.push(ReportRow {
            instance,
            item: format!("edges={edge_count}"),
            lhs: (edge_count > 0).then_some(min_product),
            rhs: Some(1.0),
            delta: (edge_count > 0).then_some(min_product - 1.0),
            verdict: if violations > 0 { "violation".into() } else { "ok".into() },
        });
        report.checked += edge_count;
        report.violations += violations;
    }
    Ok(report)
}

fn identities_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "identities".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    let push = |report: &mut SuiteReport, instance: usize, item: String, ok: bool| {
        report.rows.push(ReportRow {
            instance,
            item,
            lhs: None,
            rhs: None,
            delta: None,
            verdict: if ok { "exact".into() } else { "violation".into() },
        });
        report.checked += 1;
        report.violations += usize::from(!ok);
    };
    for instance in 0..cfg.trials {
        let mut rng = instance_rng(cfg.seed, instance);
        let tree = random_tree_instance(&mut rng, cfg.max_tree);
        let attached = random_bipartite_instance(&mut rng, cfg.max_bip);
        let u = rng.gen_range(0..tree.order());
        let v = rng.gen_range(0..attached.order());
        let ok = verify_coalescence_identity(&tree, u, &attached, v).map_err(CheckError::from)?;
        push(&mut report, instance, format!("coalescence u={u} v={v}"), ok);

        let edges: Vec<(usize, usize)> = tree.edges().collect();
        let e = edges[rng.gen_range(0..edges.len())];
        let ok = verify_edge_recursion(&tree, e).map_err(CheckError::from)?;
        push(&mut report, instance, format!("edge-recursion e=({},{})", e.0, e.1), ok);
    }
    // Fixed cyclic instances: every edge of C4, C6, and C4 with a pendant.
    let mut pendant_edges: Vec<(usize, usize)> = Graph::cycle(4).edges().collect();
    pendant_edges.push((1, 4));
    let fixtures = [
        ("C4", Graph::cycle(4)),
        ("C6", Graph::cycle(6)),
        ("C4+pendant", Graph::from_edges(5, pendant_edges).expect("simple")),
    ];
    for (offset, (label, g)) in fixtures.into_iter().enumerate() {
        let instance = cfg.trials + offset;
        for e in g.edges().collect::<Vec<_>>() {
            let ok = verify_edge_recursion(&g, e).map_err(CheckError::from)?;
            push(&mut report, instance, format!("{label} e=({},{})", e.0, e.1), ok);
        }
    }
    Ok(report)
}

fn moments_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let mut report = SuiteReport {
        name: "moments".into(),
        checked: 0,
        violations: 0,
        indeterminate: 0,
        rows: Vec::new(),
    };
    for instance in 0..cfg.trials {
        let mut rng = instance_rng(cfg.seed, instance);
        let g = if instance % 2 == 0 {
            random_tree_instance(&mut rng, cfg.max_tree.min(10))
        } else {
            random_bipartite_instance(&mut rng, cfg.max_bip.min(10))
        };
        let mut worst = 0.0f64;
        let mut violations = 0usize;
        let mut samples = 0usize;
        for i in 0..g.order() {
            for k in 0..=8 {
                let exact = walk_count(&g, i, k).map_err(CheckError::from)?;
                let approx = spectral_moment(&g, i, k).map_err(CheckError::from)?;
                let exact_f = exact.to_f64().expect("small counts");
                let deviation = (approx - exact_f).abs();
                worst = worst.max(deviation);
                samples += 1;
                if deviation > 1e-6 * exact_f.max(1.0) {
                    violations += 1;
                }
            }
        }
        report.rows.push(ReportRow {
            instance,
            item: format!("order={} samples={samples}", g.order()),
            lhs: Some(worst),
            rhs: None,
            delta: None,
            verdict: if violations > 0 { "violation".into() } else { "ok".into() },
        });
        report.checked += samples;
        report.violations += violations;
    }
    Ok(report)
}
