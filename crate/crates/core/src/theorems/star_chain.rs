//! The uniform star chain: a single edge grown by repeatedly coalescing
//! identical stars (by a leaf) onto the same hub vertex. The family has a
//! seven-value spectrum with closed-form characteristic polynomial, tail
//! weights, and tail energy, which the verifier checks against the spectral
//! and exact-polynomial routes.

use crate::charpoly::char_poly;
use crate::graph::Graph;
use crate::poly::IntPolynomial;
use crate::spectral::eigen_sym;

use super::CheckError;

/// A star chain instance: `star_count` copies of the star with
/// `leaf_count + 1` edges, each coalesced by a leaf onto the hub end of a
/// single edge. The tail is the other end of that edge.
#[derive(Debug, Clone)]
pub struct StarChain {
    pub star_count: usize,
    pub leaf_count: usize,
    pub graph: Graph,
    /// The non-merge end of the seed edge (vertex 0).
    pub tail: usize,
    /// The vertex every star is merged onto (vertex 1).
    pub hub: usize,
}

/// Build the star chain with `star_count >= 1` stars of `leaf_count >= 1`
/// outer leaves each. The result is a tree of order
/// 2 + star_count * (leaf_count + 1).
pub fn star_chain_build(star_count: usize, leaf_count: usize) -> StarChain {
    assert!(star_count >= 1 && leaf_count >= 1);
    let mut g = Graph::path(2);
    for _ in 0..star_count {
        let star = Graph::star(leaf_count + 2).expect("leaf_count + 2 >= 3");
        // Vertex 1 of the star is a leaf; hub keeps index 1 on the left.
        g = g.coalesce(1, &star, 1).expect("indices in range").graph;
    }
    assert_eq!(g.order(), 2 + star_count * (leaf_count + 1));
    StarChain { star_count, leaf_count, graph: g, tail: 0, hub: 1 }
}

/// Expected aggregated tail weight at one spectrum value.
#[derive(Debug, Clone)]
pub struct WeightCheck {
    pub eigenvalue: f64,
    pub multiplicity: usize,
    pub aggregated: f64,
    pub expected: f64,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct StarChainReport {
    pub star_count: usize,
    pub leaf_count: usize,
    pub charpoly_match: bool,
    pub spectral_energy: f64,
    pub closed_form_energy: f64,
    pub weight_checks: Vec<WeightCheck>,
    pub violations: usize,
}

impl StarChainReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Closed-form characteristic polynomial of the chain:
/// x^(n(d-1)) (x^2 - d)^(n-1) (x^4 - (n+d+1) x^2 + d).
pub(crate) fn star_chain_charpoly(star_count: usize, leaf_count: usize) -> IntPolynomial {
    let n = star_count;
    let d = leaf_count as i64;
    let quad = IntPolynomial::from_ints(&[-d, 0, 1]);
    let quart = IntPolynomial::from_ints(&[d, 0, -((n as i64) + d + 1), 0, 1]);
    (&quad.pow(n - 1) * &quart).mul_x_pow(n * (leaf_count - 1))
}

/// Closed-form tail energy of the chain.
pub(crate) fn star_chain_tail_energy(star_count: usize, leaf_count: usize) -> f64 {
    let s = (star_count + leaf_count + 1) as f64;
    let d = leaf_count as f64;
    let r = (s * s - 4.0 * d).sqrt();
    let lam_big = ((s + r) / 2.0).sqrt();
    (1.0 + d.sqrt()) * (r + s - 2.0 * d.sqrt()) / (2.0 * r * lam_big)
}

const EIGENVALUE_MATCH_TOL: f64 = 1e-6;
const CLOSED_FORM_TOL: f64 = 1e-8;
const NULL_WEIGHT_TOL: f64 = 1e-9;

/// Verify one chain instance against its closed forms: (a) the exact
/// characteristic polynomial, (b) the tail energy within 1e-8, and (c) the
/// per-eigenvalue aggregated tail weights -- zero on 0 and on the inner
/// star values, the two closed-form weights on the two outer pairs.
pub fn star_chain_verify(inst: &StarChain, _epsilon: f64) -> Result<StarChainReport, CheckError> {
    let n = inst.star_count;
    let d = inst.leaf_count;
    let charpoly_match = char_poly(&inst.graph) == star_chain_charpoly(n, d);

    let s = (n + d + 1) as f64;
    let df = d as f64;
    let r = (s * s - 4.0 * df).sqrt();
    let lam_small = ((s - r) / 2.0).sqrt();
    let lam_big = ((s + r) / 2.0).sqrt();
    let weight_big = (r - s + 2.0) / (4.0 * r);
    let weight_small = (r + s - 2.0) / (4.0 * r);

    // (value, multiplicity, expected aggregated tail weight)
    let mut targets: Vec<(f64, usize, f64)> = Vec::new();
    if n * (d - 1) > 0 {
        targets.push((0.0, n * (d - 1), 0.0));
    }
    if n > 1 {
        targets.push((df.sqrt(), n - 1, 0.0));
        targets.push((-df.sqrt(), n - 1, 0.0));
    }
    targets.push((lam_big, 1, weight_big));
    targets.push((-lam_big, 1, weight_big));
    targets.push((lam_small, 1, weight_small));
    targets.push((-lam_small, 1, weight_small));

    let spec = eigen_sym(&inst.graph)?;
    let mut violations = usize::from(!charpoly_match);
    let mut weight_checks = Vec::with_capacity(targets.len());
    for (value, multiplicity, expected) in targets {
        let slots: Vec<usize> = (0..spec.order())
            .filter(|&j| (spec.eigenvalues()[j] - value).abs() <= EIGENVALUE_MATCH_TOL)
            .collect();
        let aggregated: f64 = slots.iter().map(|&j| spec.weight(inst.tail, j)).sum();
        let tol = if expected == 0.0 { NULL_WEIGHT_TOL } else { CLOSED_FORM_TOL };
        let ok = slots.len() == multiplicity && (aggregated - expected).abs() <= tol;
        if !ok {
            violations += 1;
        }
        weight_checks.push(WeightCheck { eigenvalue: value, multiplicity, aggregated, expected, ok });
    }

    let spectral_energy = spec.vertex_energy(inst.tail);
    let closed_form_energy = star_chain_tail_energy(n, d);
    if (spectral_energy - closed_form_energy).abs() > CLOSED_FORM_TOL {
        violations += 1;
    }

    Ok(StarChainReport {
        star_count: n,
        leaf_count: d,
        charpoly_match,
        spectral_energy,
        closed_form_energy,
        weight_checks,
        violations,
    })
}
