//! Exact characteristic polynomials of adjacency matrices, the even-power
//! coefficient sequence of bipartite graphs, and the induced quasi-order.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::intmat::IntMatrix;
use crate::poly::IntPolynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharpolyError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("bipartite coefficient pattern violated at power {power}")]
    SignPattern { power: usize },
    #[error("graph order {order} exceeds the cycle enumeration guard {max}")]
    SizeGuard { order: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Characteristic polynomial det(xI - A) of the adjacency matrix, computed
/// exactly by the Faddeev-LeVerrier recurrence over big integers (every
/// division in the recurrence is exact for integer matrices). The empty
/// graph gets the constant polynomial 1.
pub fn char_poly(g: &Graph) -> IntPolynomial {
    let n = g.order();
    let a = IntMatrix::adjacency(g);
    let mut m = IntMatrix::identity(n);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    for k in 1..=n {
        let am = a.mul(&m);
        let tr = am.trace();
        debug_assert!((&tr % BigInt::from(k)).is_zero(), "LeVerrier trace not divisible");
        let c = -tr / BigInt::from(k);
        coeffs[n - k] = c.clone();
        m = am;
        m.add_scalar_to_diagonal(&c);
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// The sequence b_0, b_2, ..., b_{2*floor(n/2)} of absolute even-power
/// coefficients of a bipartite graph's characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSequence {
    /// b_{2k} for k = 0..=floor(n/2); always starts with b_0 = 1.
    pub values: Vec<BigUint>,
    /// Order of the source graph.
    pub order: usize,
}

/// Extract the b-sequence of a bipartite graph.
///
/// Writing phi = sum_k a_k x^(n-k), this checks a_k = 0 for odd k and
/// a_{2k} = (-1)^k b_{2k} with b_{2k} >= 0, erroring on any violation
/// (which would signal a charpoly bug, not bad input).
pub fn b_coeffs(g: &Graph) -> Result<BSequence, CharpolyError> {
    if g.bipartition().is_none() {
        return Err(CharpolyError::NotBipartite);
    }
    let n = g.order();
    let phi = char_poly(g);
    for k in (1..=n).step_by(2) {
        if !phi.coeff(n - k).is_zero() {
            return Err(CharpolyError::SignPattern { power: n - k });
        }
    }
    let mut values = Vec::with_capacity(n / 2 + 1);
    for k in 0..=(n / 2) {
        let a = phi.coeff(n - 2 * k);
        let expected_nonneg = k % 2 == 0;
        if a.is_negative() == expected_nonneg && !a.is_zero() {
            return Err(CharpolyError::SignPattern { power: n - 2 * k });
        }
        values.push(a.abs().to_biguint().expect("|a| is nonnegative"));
    }
    Ok(BSequence { values, order: n })
}

/// Outcome of comparing two bipartite graphs by their b-sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuasiOrder {
    Equal,
    StrictlyLess,
    StrictlyGreater,
    Incomparable,
}

/// Compare two bipartite graphs coefficient-wise; the shorter b-sequence is
/// right-padded with zeros (a missing coefficient counts zero matchings of
/// that size).
pub fn quasi_compare(g1: &Graph, g2: &Graph) -> Result<QuasiOrder, CharpolyError> {
    let b1 = b_coeffs(g1)?;
    let b2 = b_coeffs(g2)?;
    Ok(compare_b_sequences(&b1, &b2))
}

/// Coefficient-wise comparison of two b-sequences with zero padding.
pub fn compare_b_sequences(b1: &BSequence, b2: &BSequence) -> QuasiOrder {
    let zero = BigUint::zero();
    let len = b1.values.len().max(b2.values.len());
    let mut some_less = false;
    let mut some_greater = false;
    for k in 0..len {
        let x = b1.values.get(k).unwrap_or(&zero);
        let y = b2.values.get(k).unwrap_or(&zero);
        match x.cmp(y) {
            std::cmp::Ordering::Less => some_less = true,
            std::cmp::Ordering::Greater => some_greater = true,
            std::cmp::Ordering::Equal => {}
        }
    }
    match (some_less, some_greater) {
        (false, false) => QuasiOrder::Equal,
        (true, false) => QuasiOrder::StrictlyLess,
        (false, true) => QuasiOrder::StrictlyGreater,
        (true, true) => QuasiOrder::Incomparable,
    }
}

/// Check phi_{GoH} = phi_G phi_{H-v} + phi_{G-u} phi_H - x phi_{G-u} phi_{H-v}
/// as an exact polynomial identity for the coalescence at (u, v). This must
/// hold for every valid input; `false` signals an implementation bug.
pub fn verify_coalescence_identity(
    g: &Graph,
    u: usize,
    h: &Graph,
    v: usize,
) -> Result<bool, CharpolyError> {
    let merged = g.coalesce(u, h, v)?;
    let lhs = char_poly(&merged.graph);

    let phi_g = char_poly(g);
    let phi_h = char_poly(h);
    let phi_g_minus = char_poly(&g.delete_vertices(&[u])?.graph);
    let phi_h_minus = char_poly(&h.delete_vertices(&[v])?.graph);

    let cross = &phi_g_minus * &phi_h_minus;
    let rhs = &(&(&phi_g * &phi_h_minus) + &(&phi_g_minus * &phi_h)) - &cross.mul_x_pow(1);
    Ok(lhs == rhs)
}

const CYCLE_ENUMERATION_MAX_ORDER: usize = 16;

/// Check the edge recursion
/// phi_G = phi_{G-e} - phi_{G-{u,v}} - 2 sum_C phi_{G-C},
/// where C ranges over the vertex sets of cycles through e. Guarded to
/// small orders because cycle enumeration is exponential.
pub fn verify_edge_recursion(g: &Graph, e: (usize, usize)) -> Result<bool, CharpolyError> {
    if g.order() > CYCLE_ENUMERATION_MAX_ORDER {
        return Err(CharpolyError::SizeGuard {
            order: g.order(),
            max: CYCLE_ENUMERATION_MAX_ORDER,
        });
    }
    if !g.has_edge(e.0, e.1) {
        return Err(GraphError::MissingEdge(e.0.min(e.1), e.0.max(e.1)).into());
    }
    let without_edge = g.delete_edges(&[e])?;
    let without_ends = g.delete_vertices(&[e.0, e.1])?.graph;

    let mut rhs = &char_poly(&without_edge) - &char_poly(&without_ends);
    let two = IntPolynomial::from_ints(&[2]);
    for cycle in simple_paths(&without_edge, e.0, e.1) {
        let term = char_poly(&g.delete_vertices(&cycle)?.graph);
        rhs = &rhs - &(&two * &term);
    }
    Ok(char_poly(g) == rhs)
}

/// All simple paths from `s` to `t`, as vertex lists (each path together
/// with the removed edge is one cycle through it).
fn simple_paths(g: &Graph, s: usize, t: usize) -> Vec<Vec<usize>> {
    let mut paths = Vec::new();
    let mut current = vec![s];
    let mut on_path = vec![false; g.order()];
    on_path[s] = true;
    extend_path(g, t, &mut current, &mut on_path, &mut paths);
    paths
}

fn extend_path(
    g: &Graph,
    t: usize,
    current: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    paths: &mut Vec<Vec<usize>>,
) {
    let last = *current.last().unwrap();
    if last == t {
        paths.push(current.clone());
        return;
    }
    for &w in g.neighbors(last) {
        if !on_path[w] {
            on_path[w] = true;
            current.push(w);
            extend_path(g, t, current, on_path, paths);
            current.pop();
            on_path[w] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: det(xI - A) by cofactor expansion over polynomial
    /// entries. Exponential; for orders up to about 8.
    fn char_poly_cofactor(g: &Graph) -> IntPolynomial {
        let n = g.order();
        let mut mat = vec![vec![IntPolynomial::zero(); n]; n];
        for (i, row) in mat.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = if i == j {
                    IntPolynomial::x()
                } else if g.has_edge(i, j) {
                    IntPolynomial::from_ints(&[-1])
                } else {
                    IntPolynomial::zero()
                };
            }
        }
        poly_det(&mat)
    }

    fn poly_det(mat: &[Vec<IntPolynomial>]) -> IntPolynomial {
        let n = mat.len();
        if n == 0 {
            return IntPolynomial::one();
        }
        if n == 1 {
            return mat[0][0].clone();
        }
        let mut det = IntPolynomial::zero();
        for j in 0..n {
            if mat[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<IntPolynomial>> = mat[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, p)| p.clone())
                        .collect()
                })
                .collect();
            let term = &mat[0][j] * &poly_det(&minor);
            det = if j % 2 == 0 { &det + &term } else { &det - &term };
        }
        det
    }

    #[test]
    fn char_poly_small_graphs() {
        // K2: x^2 - 1.
        assert_eq!(char_poly(&Graph::path(2)), IntPolynomial::from_ints(&[-1, 0, 1]));
        // P3: x^3 - 2x, frozen from the cofactor oracle.
        let p3 = Graph::path(3);
        let expected = IntPolynomial::from_ints(&[0, -2, 0, 1]);
        assert_eq!(char_poly_cofactor(&p3), expected);
        assert_eq!(char_poly(&p3), expected);
        // Stars: x^(k-2) (x^2 - (k-1)), cross-checked against the oracle.
        for k in 2..=6 {
            let s = Graph::star(k).unwrap();
            let closed =
                IntPolynomial::from_ints(&[-((k as i64) - 1), 0, 1]).mul_x_pow(k - 2);
            assert_eq!(char_poly(&s), closed, "star on {k} vertices");
            assert_eq!(char_poly_cofactor(&s), closed);
        }
        // Empty graph: the multiplicative identity.
        assert_eq!(char_poly(&Graph::empty(0)), IntPolynomial::one());
        assert_eq!(char_poly(&Graph::empty(1)), IntPolynomial::x());
    }

    #[test]
    fn char_poly_matches_cofactor_oracle_on_random_graphs() {
        for seed in 0..20 {
            let t = Graph::random_tree(7, seed);
            assert_eq!(char_poly(&t), char_poly_cofactor(&t), "tree seed {seed}");
            let b = Graph::random_bipartite(3, 4, 0.5, seed).unwrap();
            assert_eq!(char_poly(&b), char_poly_cofactor(&b), "bipartite seed {seed}");
        }
        for n in [3usize, 5, 7] {
            let c = Graph::cycle(n);
            assert_eq!(char_poly(&c), char_poly_cofactor(&c), "odd-ish cycle {n}");
        }
    }

    #[test]
    fn char_poly_multiplicative_over_disjoint_union() {
        let p4 = Graph::path(4);
        let s3 = Graph::star(3).unwrap();
        let u = p4.disjoint_union(&s3);
        assert_eq!(char_poly(&u), &char_poly(&p4) * &char_poly(&s3));
    }

    #[test]
    fn char_poly_invariant_under_relabeling() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for seed in 0..10 {
            let g = Graph::random_tree(9, seed);
            let mut perm: Vec<usize> = (0..9).collect();
            perm.shuffle(&mut rng);
            let relabeled = Graph::from_edges(
                9,
                g.edges().map(|(u, v)| (perm[u], perm[v])),
            )
            .unwrap();
            assert_eq!(char_poly(&g), char_poly(&relabeled));
        }
    }

    #[test]
    fn b_sequences() {
        let b = b_coeffs(&Graph::path(2)).unwrap();
        assert_eq!(b.values, [BigUint::from(1u8), BigUint::from(1u8)]);

        // P4: x^4 - 3x^2 + 1 by the cofactor oracle.
        let p4 = Graph::path(4);
        assert_eq!(char_poly_cofactor(&p4), IntPolynomial::from_ints(&[1, 0, -3, 0, 1]));
        let b = b_coeffs(&p4).unwrap();
        assert_eq!(b.values, [1u8.into(), 3u8.into(), 1u8.into()]);

        // S4: x^4 - 3x^2 by the oracle.
        let s4 = Graph::star(4).unwrap();
        assert_eq!(char_poly_cofactor(&s4), IntPolynomial::from_ints(&[0, 0, -3, 0, 1]));
        let b = b_coeffs(&s4).unwrap();
        assert_eq!(b.values, [1u8.into(), 3u8.into(), 0u8.into()]);

        assert_eq!(b_coeffs(&Graph::cycle(3)), Err(CharpolyError::NotBipartite));

        // b_0 = 1 always, including the empty graph.
        assert_eq!(b_coeffs(&Graph::empty(0)).unwrap().values, [BigUint::from(1u8)]);
    }

    #[test]
    fn quasi_order_comparisons() {
        let p4 = Graph::path(4);
        let s4 = Graph::star(4).unwrap();
        assert_eq!(quasi_compare(&s4, &p4).unwrap(), QuasiOrder::StrictlyLess);
        assert_eq!(quasi_compare(&p4, &s4).unwrap(), QuasiOrder::StrictlyGreater);
        assert_eq!(quasi_compare(&p4, &p4).unwrap(), QuasiOrder::Equal);

        // (1,4,4,0) vs (1,3,3,1): crossing coefficients are incomparable.
        let p3p3 = Graph::path(3).disjoint_union(&Graph::path(3));
        let k2s = Graph::path(2)
            .disjoint_union(&Graph::path(2))
            .disjoint_union(&Graph::path(2));
        assert_eq!(quasi_compare(&p3p3, &k2s).unwrap(), QuasiOrder::Incomparable);

        // Unequal orders compare through zero padding.
        let s6 = Graph::star(6).unwrap();
        let p6 = Graph::path(6);
        assert_eq!(quasi_compare(&s6, &p6).unwrap(), QuasiOrder::StrictlyLess);

        assert_eq!(
            quasi_compare(&Graph::cycle(5), &p4),
            Err(CharpolyError::NotBipartite)
        );
    }

    #[test]
    fn coalescence_identity_k2_k2() {
        let k2 = Graph::path(2);
        assert!(verify_coalescence_identity(&k2, 0, &k2, 0).unwrap());
        // Both sides are x^3 - 2x.
        let merged = k2.coalesce(0, &k2, 0).unwrap();
        assert_eq!(char_poly(&merged.graph), IntPolynomial::from_ints(&[0, -2, 0, 1]));
    }

    #[test]
    fn coalescence_identity_with_point() {
        let k1 = Graph::empty(1);
        let s5 = Graph::star(5).unwrap();
        assert!(verify_coalescence_identity(&k1, 0, &s5, 3).unwrap());
        assert!(verify_coalescence_identity(&s5, 2, &k1, 0).unwrap());
    }

    #[test]
    fn coalescence_identity_random_pairs() {
        for seed in 0..40 {
            let t = Graph::random_tree(6, seed);
            let b = Graph::random_bipartite(3, 3, 0.5, seed + 1000).unwrap();
            let u = (seed as usize) % t.order();
            let v = (seed as usize) % b.order();
            assert!(
                verify_coalescence_identity(&t, u, &b, v).unwrap(),
                "seed {seed} at ({u}, {v})"
            );
        }
    }

    #[test]
    fn edge_recursion_on_trees_and_cycles() {
        // Tree edge: the cycle sum is empty.
        let p4 = Graph::path(4);
        for e in p4.edges().collect::<Vec<_>>() {
            assert!(verify_edge_recursion(&p4, e).unwrap());
        }

        // K2 and its single edge: x^2 - 1 = x^2 - 1 - 0.
        assert!(verify_edge_recursion(&Graph::path(2), (0, 1)).unwrap());

        // C4: exactly one cycle term, G minus the cycle being empty.
        let c4 = Graph::cycle(4);
        assert_eq!(char_poly(&c4), IntPolynomial::from_ints(&[0, 0, -4, 0, 1]));
        for e in c4.edges().collect::<Vec<_>>() {
            assert!(verify_edge_recursion(&c4, e).unwrap());
        }

        // Odd cycle, pendant cycle, and the errors.
        assert!(verify_edge_recursion(&Graph::cycle(5), (0, 1)).unwrap());
        let mut edges: Vec<(usize, usize)> = Graph::cycle(4).edges().collect();
        edges.push((1, 4));
        let pendant = Graph::from_edges(5, edges).unwrap();
        for e in pendant.edges().collect::<Vec<_>>() {
            assert!(verify_edge_recursion(&pendant, e).unwrap());
        }
        assert_eq!(
            verify_edge_recursion(&c4, (0, 2)),
            Err(CharpolyError::Graph(GraphError::MissingEdge(0, 2)))
        );
        let big = Graph::path(17);
        assert_eq!(
            verify_edge_recursion(&big, (0, 1)),
            Err(CharpolyError::SizeGuard { order: 17, max: 16 })
        );
    }

    #[test]
    fn bipartite_sign_pattern_holds_on_random_inputs() {
        for seed in 0..30 {
            let t = Graph::random_tree(10, seed);
            assert!(b_coeffs(&t).is_ok(), "tree seed {seed}");
            let b = Graph::random_bipartite(4, 5, 0.4, seed).unwrap();
            assert!(b_coeffs(&b).is_ok(), "bipartite seed {seed}");
        }
    }
}
