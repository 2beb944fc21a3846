//! Applications: minimum sum coloring with its degree law for the G-major
//! index polynomial, and the base-k fingerprint that distinguishes labeled
//! graphs.
//!
//! The G-major index polynomial sum_{pi} q^(maj_G(pi)) has degree
//! C(d+1,2) - Sigma(G) and leading coefficient equal to the number of proper
//! colorings attaining the chromatic sum Sigma(G) = min sum_v c(v).
//!
//! The fingerprint evaluates the q-chromatic polynomial at palette d-1 for
//! the linear form (k, k^2, ..., k^d) with k >= d: exponents are base-k
//! encodings of colorings, so two labeled graphs on {1..d} agree iff their
//! fingerprints agree as polynomials.

use num_traits::ToPrimitive;
use sha2::{Digest, Sha256};

use crate::genfunc::{brute_chi, LinearForm};
use crate::graph::{Coloring, Graph};
use crate::gstats::all_permutations;
use crate::qpoly::QPoly;
use crate::{EnumCap, Error};

/// Result of the minimum sum coloring search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinSumResult {
    /// The chromatic sum Sigma(G): the least possible total of colors.
    pub sigma: u64,
    /// How many proper colorings attain it.
    pub count: u64,
    /// The attaining colorings, in lexicographic order.
    pub witnesses: Vec<Coloring>,
}

/// Minimum sum coloring by backtracking over palette {1..d} with a
/// running-sum prune. A minimum coloring never needs a color above d, since
/// recoloring a vertex with the least color unused by its neighbors only
/// lowers the sum.
pub fn min_sum_coloring(graph: &Graph) -> MinSumResult {
    let d = graph.d();
    let mut best: u64 = (d * d) as u64 + 1;
    let mut witnesses: Vec<Vec<usize>> = Vec::new();
    let mut partial: Vec<usize> = Vec::with_capacity(d);

    fn go(
        graph: &Graph,
        partial: &mut Vec<usize>,
        sum: u64,
        best: &mut u64,
        witnesses: &mut Vec<Vec<usize>>,
    ) {
        let d = graph.d();
        let depth = partial.len();
        if depth == d {
            if sum < *best {
                *best = sum;
                witnesses.clear();
            }
            witnesses.push(partial.clone());
            return;
        }
        // optimistic completion: every remaining vertex gets color 1
        let remaining = (d - depth) as u64;
        let v = depth + 1;
        let mask = graph.neighbors_mask(v);
        for color in 1..=d {
            let candidate = sum + color as u64;
            if candidate + (remaining - 1) > *best {
                break;
            }
            let conflict = partial
                .iter()
                .enumerate()
                .any(|(i, &c)| (mask >> i) & 1 == 1 && c == color);
            if conflict {
                continue;
            }
            partial.push(color);
            go(graph, partial, candidate, best, witnesses);
            partial.pop();
        }
    }
    go(graph, &mut partial, 0, &mut best, &mut witnesses);
    // the prune admits sums equal to the running best, so stale entries from
    // an earlier, larger best may remain in front
    witnesses.retain(|w| w.iter().map(|&c| c as u64).sum::<u64>() == best);
    MinSumResult {
        sigma: best,
        count: witnesses.len() as u64,
        witnesses: witnesses.into_iter().map(|w| Coloring::new(w, d)).collect(),
    }
}

/// The G-major index polynomial sum_{pi in S_d} q^(maj_G(pi)).
pub fn g_major_polynomial(graph: &Graph, cap: EnumCap) -> Result<QPoly, Error> {
    let d = graph.d();
    cap.check(d)?;
    let mut poly = QPoly::zero();
    for pi in all_permutations(d) {
        let stats = crate::gstats::g_statistics(graph, &pi);
        poly = poly.add(&QPoly::term(1, stats.maj));
    }
    Ok(poly)
}

/// Degree bounds for the G-major polynomial of a tree on d >= 2 vertices:
/// C(d+1,2) - floor(1.5 d) <= deg <= C(d+1,2) - d - 1, returned as
/// (lower, upper, actual). Errors on non-tree input.
pub fn tree_degree_bounds(tree: &Graph, cap: EnumCap) -> Result<(u64, u64, u64), Error> {
    if !tree.is_tree() || tree.d() < 2 {
        return Err(Error::NotATree);
    }
    let d = tree.d() as u64;
    let choose2 = d * (d + 1) / 2;
    let lower = choose2 - (3 * d) / 2;
    let upper = choose2 - d - 1;
    let poly = g_major_polynomial(tree, cap)?;
    let actual = poly
        .degree()
        .expect("G-major polynomial of a nonempty graph is nonzero")
        .to_u64()
        .expect("small degree");
    Ok((lower, upper, actual))
}

/// The base-k fingerprint of a labeled graph: chi_G^lambda(q, d-1) for
/// lambda = (k, k^2, ..., k^d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub d: usize,
    pub k: u64,
    pub poly: QPoly,
}

impl Fingerprint {
    /// SHA-256 of the canonical term list, hex encoded. Convenience only;
    /// equality decisions always compare the polynomials themselves.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.canonical_string().as_bytes());
        hasher
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    pub const DIGEST_ALG: &'static str = "sha256";

    fn canonical_string(&self) -> String {
        let mut s = format!("d={};k={};terms=", self.d, self.k);
        for (e, c) in self.poly.iter() {
            s.push_str(&format!("({e},{c});"));
        }
        s
    }
}

/// Compute the fingerprint. Requires d >= 2 and k >= d (so distinct proper
/// colorings land on distinct exponents).
pub fn fingerprint(graph: &Graph, k: u64) -> Result<Fingerprint, Error> {
    let d = graph.d();
    if d < 2 {
        return Err(Error::InvalidFingerprint("need at least 2 vertices".into()));
    }
    if (k as usize) < d {
        return Err(Error::InvalidFingerprint(format!(
            "base {k} is below the vertex count {d}"
        )));
    }
    let lambda = LinearForm::powers(k, d);
    let poly = brute_chi(graph, &lambda, d - 1);
    Ok(Fingerprint { d, k, poly })
}

/// True iff the two graphs have equal fingerprints, which holds iff they have
/// identical edge sets. Errors on mismatched vertex counts.
pub fn distinguish(g: &Graph, h: &Graph, k: u64) -> Result<bool, Error> {
    if g.d() != h.d() {
        return Err(Error::InvalidFingerprint(format!(
            "vertex counts differ: {} vs {}",
            g.d(),
            h.d()
        )));
    }
    Ok(fingerprint(g, k)? == fingerprint(h, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn min_sum_star_and_path() {
        for d in 2..=7 {
            assert_eq!(
                min_sum_coloring(&Graph::star(d).unwrap()).sigma,
                d as u64 + 1
            );
            assert_eq!(
                min_sum_coloring(&Graph::path(d).unwrap()).sigma,
                (3 * d as u64) / 2
            );
        }
    }

    #[test]
    fn min_sum_broom_family() {
        // Sigma(B(d-2b-1, 2b+1)) = d + 1 + b
        for d in 4..=8usize {
            for b in 0..=(d - 2) / 2 {
                let m = d - 2 * b - 1;
                let n = 2 * b + 1;
                if m < 1 {
                    continue;
                }
                let broom = Graph::broom(m, n).unwrap();
                assert_eq!(
                    min_sum_coloring(&broom).sigma,
                    (d + 1 + b) as u64,
                    "B({m},{n})"
                );
            }
        }
    }

    #[test]
    fn min_sum_witnesses_are_proper_and_counted() {
        let g = Graph::complete(3).unwrap();
        let res = min_sum_coloring(&g);
        assert_eq!(res.sigma, 6);
        assert_eq!(res.count, 6); // all bijections to {1,2,3}
        assert_eq!(res.count as usize, res.witnesses.len());
        for w in &res.witnesses {
            assert!(w.is_proper(&g));
            assert_eq!(w.color_sum(), res.sigma);
        }
        // edge: two witnesses (1,2) and (2,1)
        let res = min_sum_coloring(&Graph::path(2).unwrap());
        assert_eq!((res.sigma, res.count), (3, 2));
    }

    #[test]
    fn min_sum_matches_ascent_minimum() {
        // Sigma equals min over pi of d + sum_{j in asc_G(pi)} (d - j), with
        // matching attainment counts
        for g in [
            Graph::path(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::bowtie(),
        ] {
            let d = g.d();
            let res = min_sum_coloring(&g);
            let mut min_val = u64::MAX;
            let mut count = 0u64;
            for pi in all_permutations(d) {
                let stats = crate::gstats::g_statistics(&g, &pi);
                let val = d as u64 + stats.asc.iter().map(|&j| (d - j) as u64).sum::<u64>();
                match val.cmp(&min_val) {
                    std::cmp::Ordering::Less => {
                        min_val = val;
                        count = 1;
                    }
                    std::cmp::Ordering::Equal => count += 1,
                    std::cmp::Ordering::Greater => {}
                }
            }
            assert_eq!(res.sigma, min_val);
            assert_eq!(res.count, count);
        }
    }

    #[test]
    fn g_major_small_examples() {
        let cap = EnumCap::default();
        // edge on 2 vertices: both permutations have maj_G = 0
        let p = g_major_polynomial(&Graph::path(2).unwrap(), cap).unwrap();
        assert_eq!(p, QPoly::constant(2));
        // edgeless pair: ordinary major index, 1 + q
        let p = g_major_polynomial(&Graph::empty(2).unwrap(), cap).unwrap();
        assert_eq!(p, QPoly::from_terms(&[(1, 0), (1, 1)]));
        // K3: every permutation is all-G-ascents, so the polynomial is 6
        let p = g_major_polynomial(&Graph::complete(3).unwrap(), cap).unwrap();
        assert_eq!(p, QPoly::constant(6));
    }

    #[test]
    fn degree_law_on_small_graphs() {
        let cap = EnumCap::default();
        for g in [
            Graph::path(5).unwrap(),
            Graph::star(5).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::bowtie(),
            Graph::complete(4).unwrap(),
        ] {
            let d = g.d() as u64;
            let res = min_sum_coloring(&g);
            let poly = g_major_polynomial(&g, cap).unwrap();
            let degree = poly.degree().unwrap().to_u64().unwrap();
            assert_eq!(degree, d * (d + 1) / 2 - res.sigma);
            assert_eq!(poly.leading_coeff().unwrap(), &BigInt::from(res.count));
        }
    }

    #[test]
    fn tree_bounds_attained() {
        let cap = EnumCap::default();
        // star d=5 attains the upper degree bound, path d=5 the lower
        let (lower, upper, actual) = tree_degree_bounds(&Graph::star(5).unwrap(), cap).unwrap();
        assert_eq!(actual, upper);
        assert_eq!(actual, 9);
        let (_, _, actual) = tree_degree_bounds(&Graph::path(5).unwrap(), cap).unwrap();
        assert_eq!(actual, lower);
        assert_eq!(actual, 8);
        // broom B(2,3): Sigma = 7, degree 8
        let (_, _, actual) = tree_degree_bounds(&Graph::broom(2, 3).unwrap(), cap).unwrap();
        assert_eq!(actual, 8);
        // non-trees rejected
        assert!(tree_degree_bounds(&Graph::cycle(4).unwrap(), cap).is_err());
    }

    #[test]
    fn fingerprint_tiny_cases() {
        // edgeless pair, k = 2: single 1-coloring (1,1), exponent 2 + 4 = 6
        let f = fingerprint(&Graph::empty(2).unwrap(), 2).unwrap();
        assert_eq!(f.poly, QPoly::term(1, 6));
        // edge, k = 2: no proper 1-coloring
        let f = fingerprint(&Graph::path(2).unwrap(), 2).unwrap();
        assert!(f.poly.is_zero());
        // parameter validation
        assert!(fingerprint(&Graph::empty(1).unwrap(), 3).is_err());
        assert!(fingerprint(&Graph::path(3).unwrap(), 2).is_err());
    }

    #[test]
    fn fingerprints_separate_labeled_triangles() {
        // all 8 labeled graphs on [3] get pairwise distinct fingerprints
        let pairs = [(1, 2), (1, 3), (2, 3)];
        let mut polys = Vec::new();
        for mask in 0u32..8 {
            let g = Graph::from_edges(
                3,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            polys.push(fingerprint(&g, 3).unwrap().poly);
        }
        for i in 0..polys.len() {
            for j in 0..i {
                assert_ne!(polys[i], polys[j], "graphs {i} and {j} collide");
            }
        }
    }

    #[test]
    fn distinguish_examples() {
        let e2 = Graph::empty(2).unwrap();
        let edge = Graph::path(2).unwrap();
        assert!(!distinguish(&e2, &edge, 2).unwrap());
        assert!(distinguish(&edge, &edge, 2).unwrap());
        // two different labelings of the star on [4]: isomorphic but distinct
        let a = Graph::star(4).unwrap();
        let b = Graph::from_edges(4, [(2, 1), (2, 3), (2, 4)]).unwrap();
        assert!(!distinguish(&a, &b, 4).unwrap());
        assert!(distinguish(&a, &Graph::empty(3).unwrap(), 4).is_err());
    }

    #[test]
    fn digest_is_stable_and_marked() {
        let f = fingerprint(&Graph::empty(2).unwrap(), 2).unwrap();
        assert_eq!(f.digest(), f.digest());
        assert_eq!(f.digest().len(), 64);
        assert_eq!(Fingerprint::DIGEST_ALG, "sha256");
    }

    /// Search all labeled trees on 7 vertices for the one whose G-major
    /// polynomial matches a known 3q^18 + ... + 64 table. Slow; run with
    /// --ignored.
    #[test]
    #[ignore]
    fn seven_vertex_tree_search() {
        let expected = QPoly::from_terms(&[
            (3, 18),
            (8, 17),
            (20, 16),
            (56, 15),
            (101, 14),
            (167, 13),
            (249, 12),
            (358, 11),
            (448, 10),
            (529, 9),
            (555, 8),
            (561, 7),
            (552, 6),
            (470, 5),
            (358, 4),
            (263, 3),
            (170, 2),
            (108, 1),
            (64, 0),
        ]);
        assert_eq!(expected.eval_at_one(), BigInt::from(5040));
        let cap = EnumCap::default();
        let found = crate::graph::labeled_trees(7)
            .find(|g| g_major_polynomial(g, cap).unwrap() == expected);
        match found {
            Some(g) => println!("matching tree edges: {:?}", g.edges()),
            None => panic!("no labeled 7-vertex tree realizes the table"),
        }
    }
}
