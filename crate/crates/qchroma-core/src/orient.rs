//! Acyclic orientations meet linear extensions: the bijection between S_d and
//! pairs (rho, sigma) of an acyclic orientation with a Jordan-Hoelder word of
//! its induced poset, the reversal involution behind the palindromicity of
//! the numerator coefficients, lattice-point sums over open order polytopes,
//! and Stanley's W_P(q).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::genfunc::{brute_chi, LinearForm};
use crate::graph::{
    acyclic_orientations, induced_poset, linear_extensions, rank_labeling, Graph, Labeling,
    Orientation, Poset,
};
use crate::gstats::{rank_of_permutation, Permutation};
use crate::qpoly::{QPoly, ZNumerator};
use crate::Error;

/// A pair of an acyclic orientation and a Jordan-Hoelder word of its induced
/// poset under the scheme's natural labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationPair {
    pub rho: Orientation,
    pub sigma: Permutation,
}

/// Assignment of one natural labeling to every induced poset. The choice
/// depends only on the poset (hence only on the orientation), never on the
/// permutation being mapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelingScheme {
    /// The rank labeling: strip minimal elements batch by batch.
    Rank,
    /// A seeded random natural labeling; deterministic per (seed, poset).
    Random { seed: u64 },
}

impl LabelingScheme {
    pub fn labeling(&self, poset: &Poset) -> Labeling {
        match *self {
            LabelingScheme::Rank => rank_labeling(poset),
            LabelingScheme::Random { seed } => random_natural_labeling(poset, seed),
        }
    }
}

/// FNV-1a over the relation matrix, so the random scheme keys off the poset
/// alone.
fn poset_fingerprint(poset: &Poset) -> u64 {
    let d = poset.d();
    let mut h: u64 = 0xcbf29ce484222325;
    let mut mix = |byte: u8| {
        h ^= byte as u64;
        h = h.wrapping_mul(0x100000001b3);
    };
    mix(d as u8);
    for i in 1..=d {
        for j in 1..=d {
            mix(poset.leq(i, j) as u8);
        }
    }
    h
}

/// A uniform-ish random linear extension: repeatedly pick one of the current
/// minimal elements. Labeling the k-th pick with k is natural.
fn random_natural_labeling(poset: &Poset, seed: u64) -> Labeling {
    let d = poset.d();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ poset_fingerprint(poset));
    let mut remaining: u64 = if d == 64 { !0 } else { (1u64 << d) - 1 };
    let mut label = vec![0usize; d];
    let mut next = 1;
    while remaining != 0 {
        let minimal = poset.minimal_in(remaining);
        let v = minimal[rng.gen_range(0..minimal.len())];
        label[v - 1] = next;
        next += 1;
        remaining &= !(1 << (v - 1));
    }
    Labeling::new(label).expect("bijection by construction")
}

/// The rank orientation of a permutation: each edge points toward the larger
/// rank. Well defined because adjacent vertices always have distinct ranks,
/// and acyclic because ranks strictly increase along arcs.
pub fn pi_rank_orientation(graph: &Graph, pi: &Permutation) -> Orientation {
    let rk = rank_of_permutation(graph, pi);
    let arcs = graph
        .edges()
        .iter()
        .map(|&(u, v)| if rk.of(u) < rk.of(v) { (u, v) } else { (v, u) })
        .collect();
    Orientation::new(graph, arcs).expect("arcs orient the edge set")
}

/// The forward bijection: pi maps to (rho_pi, sigma_pi) with
/// sigma_pi = omega(pi(1)) ... omega(pi(d)). Under the rank-labeling scheme,
/// des(sigma_pi) equals des_G(pi).
pub fn phi(graph: &Graph, pi: &Permutation, scheme: LabelingScheme) -> OrientationPair {
    let rho = pi_rank_orientation(graph, pi);
    let poset = induced_poset(graph, &rho).expect("rank orientations are acyclic");
    let omega = scheme.labeling(&poset);
    let sigma = Permutation::new((1..=graph.d()).map(|i| omega.of(pi.at(i))).collect())
        .expect("composition of bijections");
    OrientationPair { rho, sigma }
}

/// The inverse: recover pi from (rho, sigma) as pi(i) = omega^{-1}(sigma(i)).
/// Errors if sigma is not a Jordan-Hoelder word of the labeled induced poset.
pub fn phi_inverse(
    graph: &Graph,
    rho: &Orientation,
    sigma: &Permutation,
    scheme: LabelingScheme,
) -> Result<Permutation, Error> {
    let poset = induced_poset(graph, rho)?;
    if sigma.d() != graph.d() {
        return Err(Error::NotLinearExtension);
    }
    let omega = scheme.labeling(&poset);
    let word: Vec<usize> = (1..=graph.d())
        .map(|i| omega.vertex_with_label(sigma.at(i)))
        .collect();
    // sigma is a Jordan-Hoelder word iff every element's strict predecessors
    // appear earlier in this sequence
    for (pos, &v) in word.iter().enumerate() {
        for u in 1..=graph.d() {
            if u != v && poset.lt(u, v) && !word[..pos].contains(&u) {
                return Err(Error::NotLinearExtension);
            }
        }
    }
    Permutation::new(word)
}

/// The numerator of the lambda = 1 generating function computed from pairs:
/// a_i(q) = sum over (rho, sigma) with ascnum(sigma) + 1 = i of
/// q^(d + sum_{j in asc(sigma)} (d-j)), with the usual ascent statistic.
/// Equals [`crate::genfunc::numerator_ones`] for every labeling scheme.
pub fn numerator_double_sum(graph: &Graph, scheme: LabelingScheme) -> ZNumerator {
    let d = graph.d();
    let mut numerator = ZNumerator::new(d);
    for rho in acyclic_orientations(graph) {
        let poset = induced_poset(graph, &rho).expect("enumerated orientations are acyclic");
        let omega = scheme.labeling(&poset);
        for sigma in linear_extensions(&poset, &omega).expect("scheme labelings are natural") {
            let asc = sigma.ascents();
            let exp: u64 = d as u64 + asc.iter().map(|&j| (d - j) as u64).sum::<u64>();
            numerator.add_to_coeff(asc.len() + 1, &QPoly::term(1, exp));
        }
    }
    numerator
}

/// True iff the word is a Jordan-Hoelder word of (P, omega): reading the
/// word through omega^{-1} must list every element after all of its strict
/// predecessors.
fn is_jh_word(poset: &Poset, omega: &Labeling, word: &Permutation) -> bool {
    if word.d() != poset.d() {
        return false;
    }
    let elements: Vec<usize> = (1..=poset.d())
        .map(|i| omega.vertex_with_label(word.at(i)))
        .collect();
    for (pos, &v) in elements.iter().enumerate() {
        for u in 1..=poset.d() {
            if u != v && poset.lt(u, v) && !elements[..pos].contains(&u) {
                return false;
            }
        }
    }
    true
}

/// The reversal involution on pairs: (rho, sigma) maps to (rho reversed,
/// op(sigma)) where op(sigma)(i) = d + 1 - sigma(d + 1 - i). Applying it
/// twice is the identity, and asc(sigma) = { d - i : i in asc(op(sigma)) }.
///
/// The opposite word is a Jordan-Hoelder word of the reversed orientation's
/// poset under the complemented labeling s . omega_rho, not in general under
/// the scheme's own labeling of the reversed poset; the involution alternates
/// between the two labeled domains, and membership is validated accordingly.
pub fn reverse_pair(
    graph: &Graph,
    rho: &Orientation,
    sigma: &Permutation,
    scheme: LabelingScheme,
) -> Result<OrientationPair, Error> {
    let poset = induced_poset(graph, rho)?;
    let omega = scheme.labeling(&poset);
    // either a word of the scheme-labeled domain, or one produced by a prior
    // reversal, labeled by s . omega of the reversed poset
    let primed = scheme.labeling(&poset.transpose()).complemented();
    if !is_jh_word(&poset, &omega, sigma) && !is_jh_word(&poset, &primed, sigma) {
        return Err(Error::NotLinearExtension);
    }
    let d = graph.d();
    let word: Vec<usize> = (1..=d).map(|i| d + 1 - sigma.at(d + 1 - i)).collect();
    Ok(OrientationPair {
        rho: rho.reversed(),
        sigma: Permutation::new(word).expect("reverse-complement of a bijection"),
    })
}

/// Lattice points of the n-th dilate of the open order polytope, summed as
/// q^(lambda . m): assignments with 0 < m_v < n and m_u < m_v whenever
/// u < v in the poset.
pub fn order_polytope_ehr_open(poset: &Poset, lambda: &LinearForm, n: usize) -> QPoly {
    assert_eq!(
        lambda.d(),
        poset.d(),
        "linear form must match the poset size"
    );
    let d = poset.d();
    if n <= 1 {
        return if d == 0 { QPoly::one() } else { QPoly::zero() };
    }
    // assign along a linear-extension order so predecessors are always set
    let omega = rank_labeling(poset);
    let mut order: Vec<usize> = (1..=d).collect();
    order.sort_by_key(|&v| omega.of(v));

    struct Search<'a> {
        poset: &'a Poset,
        lambda: &'a LinearForm,
        order: Vec<usize>,
        dilate: usize,
        values: Vec<usize>,
        acc: QPoly,
    }
    impl Search<'_> {
        fn go(&mut self, depth: usize, exp: BigUint) {
            if depth == self.order.len() {
                self.acc.add_term(BigInt::one(), exp);
                return;
            }
            let v = self.order[depth];
            let mut low = 1usize;
            for u in 1..=self.poset.d() {
                if u != v && self.poset.lt(u, v) {
                    low = low.max(self.values[u] + 1);
                }
            }
            for m in low..self.dilate {
                self.values[v] = m;
                let e = &exp + self.lambda.weight(v) * BigUint::from(m);
                self.go(depth + 1, e);
            }
            self.values[v] = 0;
        }
    }
    let mut search = Search {
        poset,
        lambda,
        order,
        dilate: n,
        values: vec![0; d + 1],
        acc: QPoly::zero(),
    };
    search.go(0, BigUint::zero());
    search.acc
}

/// Check that chi_G^lambda(q, n) equals the sum over acyclic orientations of
/// the open-order-polytope sums at dilate n + 1.
pub fn verify_qehrhart_lemma(graph: &Graph, lambda: &LinearForm, n: usize) -> bool {
    let lhs = brute_chi(graph, lambda, n);
    let mut rhs = QPoly::zero();
    for rho in acyclic_orientations(graph) {
        let poset = induced_poset(graph, &rho).expect("enumerated orientations are acyclic");
        rhs = rhs.add(&order_polytope_ehr_open(&poset, lambda, n + 1));
    }
    lhs == rhs
}

/// Stanley's W_P(q): the major-index generating polynomial over the
/// Jordan-Hoelder words of (P, omega). Monic, of degree
/// C(|P|+1, 2) - delta(P).
pub fn w_poly(poset: &Poset, omega: &Labeling) -> Result<QPoly, Error> {
    let mut w = QPoly::zero();
    for sigma in linear_extensions(poset, omega)? {
        w.add_term(BigInt::one(), BigUint::from(sigma.major_index()));
    }
    Ok(w)
}
