//! The q-chromatic polynomial and its generating functions.
//!
//! For a graph G on {1..d} and a linear form lambda of positive integer
//! weights, the q-chromatic polynomial is
//!
//! ```text
//!     chi_G^lambda(q, n) = sum over proper colorings c of q^(lambda . c),
//! ```
//!
//! and its generating function in z is a sum of one rational term per
//! permutation:
//!
//! ```text
//!     sum_{n >= 0} chi_G^lambda(q, n) z^n
//!       = sum_{pi in S_d} q^alpha_pi z^(ascnum_G(pi) + 1)
//!         / ((1 - z)(1 - q^(s_1) z) ... (1 - q^(s_d) z))
//! ```
//!
//! where alpha_pi = Lambda + sum over G-ascents j of
//! lambda_pi(j+1) + ... + lambda_pi(d), and the s_i are the suffix partial
//! sums of lambda along pi. For lambda = 1 every term shares the denominator
//! (1-z)(1-qz)...(1-q^d z), the numerator collapses to the [`ZNumerator`]
//! a_xi(q) z^xi + ... + a_d(q) z^d, and expanding against the q-binomial
//! series writes chi in the basis `{ [n+k choose d]_q }`.
//!
//! [`brute_chi`] is the definitional enumeration and serves as the oracle for
//! everything else here.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::graph::{proper_colorings, Graph};
use crate::gstats::{all_permutations, g_sequence_coloring, g_statistics, Permutation};
use crate::qpoly::{qbinomial, qfactorial, QPoly, QRat, ZNumerator};
use crate::{EnumCap, Error};

/// A linear form: one positive integer weight per vertex.
///
/// Weights are bignums because the graph-distinguishing form (k, k^2, ..., k^d)
/// grows past 64 bits quickly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    entries: Vec<BigUint>,
}

impl LinearForm {
    pub fn new(entries: Vec<BigUint>) -> Result<LinearForm, Error> {
        if entries.iter().any(|x| x.is_zero()) {
            return Err(Error::InvalidSize(
                "linear form entries must be positive".into(),
            ));
        }
        Ok(LinearForm { entries })
    }

    pub fn from_u64(entries: &[u64]) -> Result<LinearForm, Error> {
        LinearForm::new(entries.iter().map(|&x| BigUint::from(x)).collect())
    }

    /// The all-ones form.
    pub fn ones(d: usize) -> LinearForm {
        LinearForm {
            entries: vec![BigUint::one(); d],
        }
    }

    /// The base-k form (k, k^2, ..., k^d).
    pub fn powers(k: u64, d: usize) -> LinearForm {
        let k = BigUint::from(k);
        let mut entries = Vec::with_capacity(d);
        let mut acc = BigUint::one();
        for _ in 0..d {
            acc *= &k;
            entries.push(acc.clone());
        }
        LinearForm { entries }
    }

    pub fn d(&self) -> usize {
        self.entries.len()
    }

    /// lambda_v for a 1-indexed vertex.
    pub fn weight(&self, v: usize) -> &BigUint {
        &self.entries[v - 1]
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// Lambda, the sum of all weights.
    pub fn total(&self) -> BigUint {
        self.entries.iter().sum()
    }

    pub fn is_ones(&self) -> bool {
        self.entries.iter().all(|x| x.is_one())
    }
}

/// The q-chromatic polynomial by direct enumeration of proper colorings.
pub fn brute_chi(graph: &Graph, lambda: &LinearForm, n: usize) -> QPoly {
    assert_eq!(
        lambda.d(),
        graph.d(),
        "linear form must match the vertex count"
    );
    let mut chi = QPoly::zero();
    for coloring in proper_colorings(graph, n) {
        let mut exp = BigUint::zero();
        for v in 1..=graph.d() {
            exp += lambda.weight(v) * BigUint::from(coloring.color(v));
        }
        chi.add_term(BigInt::one(), exp);
    }
    chi
}

/// One summand of the permutation-sum generating function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermTerm {
    /// The permutation contributing this term.
    pub pi: Permutation,
    /// Exponent of q: Lambda + sum over G-ascents j of the lambda-suffix
    /// past position j.
    pub alpha: BigUint,
    /// Number of G-ascents; the z-exponent is ascnum + 1.
    pub ascnum: usize,
    /// The d+1 denominator exponents 0, lambda_pi(d),
    /// lambda_pi(d) + lambda_pi(d-1), ..., Lambda.
    pub partial_sums: Vec<BigUint>,
}

/// One term per permutation of S_d carrying the data of its rational summand.
pub fn perm_terms(
    graph: &Graph,
    lambda: &LinearForm,
    cap: EnumCap,
) -> Result<Vec<PermTerm>, Error> {
    assert_eq!(
        lambda.d(),
        graph.d(),
        "linear form must match the vertex count"
    );
    let d = graph.d();
    cap.check(d)?;
    let total = lambda.total();
    let mut terms = Vec::new();
    for pi in all_permutations(d) {
        let stats = g_statistics(graph, &pi);
        // suffix[j] = lambda_pi(j) + ... + lambda_pi(d), 1-indexed
        let mut suffix = vec![BigUint::zero(); d + 2];
        for j in (1..=d).rev() {
            suffix[j] = &suffix[j + 1] + lambda.weight(pi.at(j));
        }
        let mut alpha = total.clone();
        for &j in &stats.asc {
            alpha += &suffix[j + 1];
        }
        let mut partial_sums = Vec::with_capacity(d + 1);
        for j in (1..=d + 1).rev() {
            partial_sums.push(suffix[j].clone());
        }
        terms.push(PermTerm {
            pi,
            alpha,
            ascnum: stats.ascnum(),
            partial_sums,
        });
    }
    Ok(terms)
}

/// chi_G^lambda(q, 0..=upto) by exact truncated geometric expansion of each
/// permutation's rational summand.
pub fn series_chi(
    graph: &Graph,
    lambda: &LinearForm,
    upto: usize,
    cap: EnumCap,
) -> Result<Vec<QPoly>, Error> {
    let terms = perm_terms(graph, lambda, cap)?;
    let mut out = vec![QPoly::zero(); upto + 1];
    for term in &terms {
        let z_shift = term.ascnum + 1;
        if z_shift > upto {
            continue;
        }
        // expansion of 1 / prod_i (1 - q^(s_i) z) up to z^(upto - z_shift):
        // multiplying by 1/(1 - a z) maps h to h' with h'[m] = h[m] + a h'[m-1]
        let len = upto - z_shift + 1;
        let mut series = vec![QPoly::zero(); len];
        series[0] = QPoly::one();
        for s in &term.partial_sums {
            for m in 1..len {
                let carried = series[m - 1].mul_monomial(&BigInt::one(), s);
                series[m] = series[m].add(&carried);
            }
        }
        for (m, h) in series.iter().enumerate() {
            out[z_shift + m] = out[z_shift + m].add(&h.mul_monomial(&BigInt::one(), &term.alpha));
        }
    }
    Ok(out)
}

/// True iff alpha_pi equals sum_i lambda_i w_pi(i), the lambda-weighted sum
/// of the G-sequence coloring.
pub fn weighted_exponent_check(graph: &Graph, pi: &Permutation, lambda: &LinearForm) -> bool {
    let stats = g_statistics(graph, pi);
    let d = graph.d();
    let mut suffix = vec![BigUint::zero(); d + 2];
    for j in (1..=d).rev() {
        suffix[j] = &suffix[j + 1] + lambda.weight(pi.at(j));
    }
    let mut alpha = lambda.total();
    for &j in &stats.asc {
        alpha += &suffix[j + 1];
    }
    let coloring = g_sequence_coloring(graph, pi);
    let mut weighted = BigUint::zero();
    for v in 1..=d {
        weighted += lambda.weight(v) * BigUint::from(coloring.color(v));
    }
    alpha == weighted
}

/// The numerator of the lambda = 1 generating function:
/// a_i(q) = sum over pi with ascnum_G(pi) + 1 = i of q^(d + sum_{j in asc} (d-j)).
/// Nonzero only for xi <= i <= d.
pub fn numerator_ones(graph: &Graph, cap: EnumCap) -> Result<ZNumerator, Error> {
    let d = graph.d();
    cap.check(d)?;
    let mut numerator = ZNumerator::new(d);
    for pi in all_permutations(d) {
        let stats = g_statistics(graph, &pi);
        let exp: u64 = d as u64 + stats.asc.iter().map(|&j| (d - j) as u64).sum::<u64>();
        numerator.add_to_coeff(stats.ascnum() + 1, &QPoly::term(1, exp));
    }
    Ok(numerator)
}

/// chi_G^1(q, n) assembled in the q-binomial basis:
/// `sum_j [n+j choose d]_q * a_{d-j}(q)`.
pub fn chi_ones_qbinom(graph: &Graph, n: usize, cap: EnumCap) -> Result<QPoly, Error> {
    let numerator = numerator_ones(graph, cap)?;
    Ok(chi_ones_from_numerator(&numerator, n))
}

/// Same assembly from a precomputed numerator.
pub fn chi_ones_from_numerator(numerator: &ZNumerator, n: usize) -> QPoly {
    let d = numerator.d() as i64;
    let mut chi = QPoly::zero();
    for (i, a) in numerator.iter() {
        chi = chi.add(&a.mul(&qbinomial(d + n as i64 - i as i64, d)));
    }
    chi
}

/// The Chung-Graham descent counts: j -> |{pi in S_d : desnum_G(pi) = j}|.
/// Summing count_j * C(n+j, d) recovers the ordinary chromatic polynomial.
pub fn chung_graham(graph: &Graph, cap: EnumCap) -> Result<BTreeMap<usize, u64>, Error> {
    let d = graph.d();
    cap.check(d)?;
    let mut counts = BTreeMap::new();
    for pi in all_permutations(d) {
        let stats = g_statistics(graph, &pi);
        *counts.entry(stats.desnum()).or_insert(0u64) += 1;
    }
    Ok(counts)
}

/// chi_G^1(q, n) rewritten as a polynomial in `x = [n]_q` with coefficients
/// in Q(q): chi~ = sum_k c_k x^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiTilde {
    coeffs: Vec<QRat>,
}

impl ChiTilde {
    /// Coefficient of x^k.
    pub fn coeff(&self, k: usize) -> &QRat {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    /// Degree in x, i.e. the vertex count.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of x^d.
    pub fn leading(&self) -> &QRat {
        self.coeffs.last().expect("nonempty coefficient list")
    }

    /// Substitute `x = [n]_q`; the result is chi_G^1(q, n) as a fraction
    /// (which reduces to a polynomial).
    pub fn eval_at(&self, n: u64) -> QRat {
        let x = QRat::from_poly(crate::qpoly::qint(n));
        let mut acc = QRat::zero();
        let mut pow = QRat::one();
        for c in &self.coeffs {
            acc = acc.add(&c.mul(&pow));
            pow = pow.mul(&x);
        }
        acc
    }
}

/// chi~ by Lagrange interpolation over Q(q) at the d+1 distinct nodes
/// `x = [0]_q, [1]_q, ..., [d]_q`, matching chi_G^1(q, n) for n = 0..=d.
pub fn chi_tilde(graph: &Graph, cap: EnumCap) -> Result<ChiTilde, Error> {
    let d = graph.d();
    let numerator = numerator_ones(graph, cap)?;
    let nodes: Vec<QPoly> = (0..=d as u64).map(crate::qpoly::qint).collect();
    let values: Vec<QPoly> = (0..=d)
        .map(|n| chi_ones_from_numerator(&numerator, n))
        .collect();

    let mut coeffs = vec![QRat::zero(); d + 1];
    for n in 0..=d {
        if values[n].is_zero() {
            continue;
        }
        // basis polynomial prod_{m != n} (x - [m]_q), coefficients in Z[q][x]
        let mut basis: Vec<QPoly> = vec![QPoly::one()];
        let mut denom = QPoly::one();
        for m in 0..=d {
            if m == n {
                continue;
            }
            denom = denom.mul(&nodes[n].sub(&nodes[m]));
            let mut next = vec![QPoly::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                // times x
                next[k + 1] = next[k + 1].add(c);
                // times -[m]_q
                next[k] = next[k].sub(&c.mul(&nodes[m]));
            }
            basis = next;
        }
        for (k, b) in basis.iter().enumerate() {
            let contribution = QRat::new(values[n].mul(b), denom.clone())?;
            coeffs[k] = coeffs[k].add(&contribution);
        }
    }
    Ok(ChiTilde { coeffs })
}

/// The closed-form leading coefficient of chi~:
/// `(sum_{pi in S_d} q^(d + maj_G(pi))) / [d]_q!`.
pub fn leading_coeff_formula(graph: &Graph, cap: EnumCap) -> Result<QRat, Error> {
    let d = graph.d();
    cap.check(d)?;
    let mut numerator = QPoly::zero();
    for pi in all_permutations(d) {
        let stats = g_statistics(graph, &pi);
        numerator.add_term(BigInt::one(), BigUint::from(d as u64 + stats.maj));
    }
    QRat::new(numerator, qfactorial(d as u64))
}

/// Check the three equivalent bigraded forms of the lambda = 1 numerator:
/// summing q^(d + sum_{asc}(d-j)), q^(d + sum_{asc} j), and
/// q^(C(d+1,2) - maj_G(pi)) against z^(ascnum+1) must give identical data.
pub fn symmetry_check(graph: &Graph, cap: EnumCap) -> Result<bool, Error> {
    let d = graph.d();
    cap.check(d)?;
    let choose2 = (d as u64) * (d as u64 + 1) / 2;
    let mut by_suffix: BTreeMap<usize, QPoly> = BTreeMap::new();
    let mut by_prefix: BTreeMap<usize, QPoly> = BTreeMap::new();
    let mut by_maj: BTreeMap<usize, QPoly> = BTreeMap::new();
    for pi in all_permutations(d) {
        let stats = g_statistics(graph, &pi);
        let i = stats.ascnum() + 1;
        let e1: u64 = d as u64 + stats.asc.iter().map(|&j| (d - j) as u64).sum::<u64>();
        let e2: u64 = d as u64 + stats.asc.iter().map(|&j| j as u64).sum::<u64>();
        let e3: u64 = choose2 - stats.maj;
        for (map, e) in [
            (&mut by_suffix, e1),
            (&mut by_prefix, e2),
            (&mut by_maj, e3),
        ] {
            let entry = map.entry(i).or_insert_with(QPoly::zero);
            *entry = entry.add(&QPoly::term(1, e));
        }
    }
    Ok(by_suffix == by_prefix && by_prefix == by_maj)
}

/// Shifted palindromicity: every nonzero numerator coefficient a_i(q)
/// satisfies q^(d(i+1)) a_i(1/q) = a_i(q), and chi_G^1(q, n) is palindromic
/// with total d(n+1) for n <= d+2.
pub fn palindromicity_check(graph: &Graph, cap: EnumCap) -> Result<bool, Error> {
    let d = graph.d();
    let numerator = numerator_ones(graph, cap)?;
    for (i, a) in numerator.iter() {
        let total = BigUint::from((d * (i + 1)) as u64);
        if !a.is_shifted_palindromic(&total) {
            return Ok(false);
        }
    }
    for n in 0..=d + 2 {
        let chi = chi_ones_from_numerator(&numerator, n);
        if chi.is_zero() {
            continue;
        }
        let total = BigUint::from((d * (n + 1)) as u64);
        if !chi.is_shifted_palindromic(&total) {
            return Ok(false);
        }
    }
    Ok(true)
}
