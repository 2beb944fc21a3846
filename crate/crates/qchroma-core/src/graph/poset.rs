//! Posets induced by acyclic orientations, natural labelings, and linear
//! extensions (Jordan-Hoelder words).

use crate::graph::{Graph, Orientation};
use crate::gstats::Permutation;
use crate::Error;

/// A partial order on {1..d}, stored as its full reflexive-transitive
/// less-or-equal matrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poset {
    d: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Build from a list of relations i <= j; takes the reflexive-transitive
    /// closure and rejects antisymmetry violations (i.e. cycles).
    pub fn from_relations(d: usize, relations: &[(usize, usize)]) -> Result<Poset, Error> {
        let mut leq = vec![false; d * d];
        for v in 1..=d {
            leq[(v - 1) * d + (v - 1)] = true;
        }
        for &(i, j) in relations {
            if i < 1 || i > d || j < 1 || j > d {
                return Err(Error::InvalidGraph(format!(
                    "relation {i} <= {j} out of range 1..={d}"
                )));
            }
            leq[(i - 1) * d + (j - 1)] = true;
        }
        // Warshall closure
        for k in 0..d {
            for i in 0..d {
                if leq[i * d + k] {
                    for j in 0..d {
                        if leq[k * d + j] {
                            leq[i * d + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..d {
            for j in 0..i {
                if leq[i * d + j] && leq[j * d + i] {
                    return Err(Error::CyclicOrientation);
                }
            }
        }
        Ok(Poset { d, leq })
    }

    /// The antichain on {1..d}.
    pub fn antichain(d: usize) -> Poset {
        Poset::from_relations(d, &[]).unwrap()
    }

    /// The chain 1 < 2 < ... < d.
    pub fn chain(d: usize) -> Poset {
        let rels: Vec<(usize, usize)> = (1..d).map(|i| (i, i + 1)).collect();
        Poset::from_relations(d, &rels).unwrap()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// i <= j in the poset.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[(i - 1) * self.d + (j - 1)]
    }

    /// i < j strictly.
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// The dual poset (all relations transposed).
    pub fn transpose(&self) -> Poset {
        let d = self.d;
        let mut leq = vec![false; d * d];
        for i in 0..d {
            for j in 0..d {
                leq[j * d + i] = self.leq[i * d + j];
            }
        }
        Poset { d, leq }
    }

    /// Minimal elements among the vertices selected by `remaining` (bitmask,
    /// bit v-1 for vertex v), in increasing label order.
    pub fn minimal_in(&self, remaining: u64) -> Vec<usize> {
        (1..=self.d)
            .filter(|&v| {
                remaining >> (v - 1) & 1 == 1
                    && (1..=self.d)
                        .all(|u| u == v || remaining >> (u - 1) & 1 == 0 || !self.lt(u, v))
            })
            .collect()
    }

    /// Strict upper covers are not tracked; this lists all u with v < u.
    pub fn strictly_above(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.d).filter(move |&u| self.lt(v, u))
    }
}

/// The induced poset of an acyclic orientation: arc i -> j gives i <= j,
/// closed transitively. Rejects cyclic orientations.
pub fn induced_poset(graph: &Graph, orientation: &Orientation) -> Result<Poset, Error> {
    if orientation.arcs().len() != graph.edge_count()
        || orientation.arcs().iter().any(|&(t, h)| {
            t > graph.d() || h > graph.d() || t < 1 || h < 1 || !graph.has_edge(t, h)
        })
    {
        return Err(Error::InvalidGraph(
            "orientation does not match the graph's edges".into(),
        ));
    }
    Poset::from_relations(graph.d(), orientation.arcs())
}

/// A bijective labeling of {1..d}; natural when it is itself a linear
/// extension of the poset at hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    label: Vec<usize>,
}

impl Labeling {
    pub fn new(label: Vec<usize>) -> Result<Labeling, Error> {
        let d = label.len();
        let mut seen = vec![false; d + 1];
        for &l in &label {
            if l < 1 || l > d || seen[l] {
                return Err(Error::InvalidPermutation(format!("labels {label:?}")));
            }
            seen[l] = true;
        }
        Ok(Labeling { label })
    }

    pub fn identity(d: usize) -> Labeling {
        Labeling {
            label: (1..=d).collect(),
        }
    }

    pub fn d(&self) -> usize {
        self.label.len()
    }

    /// The label omega(v).
    pub fn of(&self, v: usize) -> usize {
        self.label[v - 1]
    }

    /// The vertex carrying a given label.
    pub fn vertex_with_label(&self, l: usize) -> usize {
        self.label
            .iter()
            .position(|&x| x == l)
            .expect("bijective labeling")
            + 1
    }

    /// Natural iff i <= j in the poset implies omega(i) <= omega(j).
    pub fn is_natural(&self, poset: &Poset) -> bool {
        let d = poset.d();
        (1..=d).all(|i| (1..=d).all(|j| !poset.leq(i, j) || self.of(i) <= self.of(j)))
    }

    /// Compose with the involution s(i) = d + 1 - i, giving label
    /// d + 1 - omega(v). Turns a natural labeling of P into a natural
    /// labeling of the dual of P.
    pub fn complemented(&self) -> Labeling {
        let d = self.d();
        Labeling {
            label: self.label.iter().map(|&l| d + 1 - l).collect(),
        }
    }
}

/// The rank labeling: repeatedly strip the minimal elements of what remains,
/// listing each batch in increasing vertex order, and give the j-th vertex
/// listed the label j. Always a natural labeling.
pub fn rank_labeling(poset: &Poset) -> Labeling {
    let d = poset.d();
    let mut remaining: u64 = if d == 64 { !0 } else { (1 << d) - 1 };
    let mut label = vec![0usize; d];
    let mut next = 1;
    while remaining != 0 {
        for v in poset.minimal_in(remaining) {
            label[v - 1] = next;
            next += 1;
            remaining &= !(1 << (v - 1));
        }
    }
    Labeling { label }
}

/// Lazy stream of the Jordan-Hoelder words of a naturally labeled poset.
///
/// Each order-preserving bijection tau: P -> {1..d} contributes the word
/// omega(tau^{-1}(1)) ... omega(tau^{-1}(d)); words come out in lexicographic
/// order.
pub struct LinearExtensions<'a> {
    poset: &'a Poset,
    omega: &'a Labeling,
    // elements chosen so far, in position order
    chosen: Vec<usize>,
    used: u64,
    // vertices sorted by ascending label, so candidate scans are lex in the word
    by_label: Vec<usize>,
    emitted: bool,
    done: bool,
}

/// Enumerate the Jordan-Hoelder words of (P, omega). Errors if omega is not
/// a natural labeling of P.
pub fn linear_extensions<'a>(
    poset: &'a Poset,
    omega: &'a Labeling,
) -> Result<LinearExtensions<'a>, Error> {
    if omega.d() != poset.d() || !omega.is_natural(poset) {
        return Err(Error::NotNatural);
    }
    let mut by_label: Vec<usize> = (1..=poset.d()).collect();
    by_label.sort_by_key(|&v| omega.of(v));
    Ok(LinearExtensions {
        poset,
        omega,
        chosen: Vec::new(),
        used: 0,
        by_label,
        emitted: false,
        done: false,
    })
}

impl LinearExtensions<'_> {
    /// Candidate vertices for the next position with label greater than
    /// `after`: unused, and with every strict predecessor already used.
    fn next_candidate(&self, after: usize) -> Option<usize> {
        self.by_label
            .iter()
            .copied()
            .filter(|&v| self.omega.of(v) > after)
            .find(|&v| {
                self.used >> (v - 1) & 1 == 0
                    && (1..=self.poset.d())
                        .all(|u| u == v || !self.poset.lt(u, v) || self.used >> (u - 1) & 1 == 1)
            })
    }

    fn word(&self) -> Permutation {
        Permutation::new(self.chosen.iter().map(|&v| self.omega.of(v)).collect())
            .expect("bijection by construction")
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let d = self.poset.d();
        let mut floor = if self.emitted {
            match self.chosen.pop() {
                Some(v) => {
                    self.used &= !(1 << (v - 1));
                    self.omega.of(v)
                }
                None => {
                    self.done = true;
                    return None;
                }
            }
        } else {
            0
        };
        loop {
            match self.next_candidate(floor) {
                Some(v) => {
                    self.chosen.push(v);
                    self.used |= 1 << (v - 1);
                    if self.chosen.len() == d {
                        self.emitted = true;
                        return Some(self.word());
                    }
                    floor = 0;
                }
                None => match self.chosen.pop() {
                    Some(v) => {
                        self.used &= !(1 << (v - 1));
                        floor = self.omega.of(v);
                    }
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}

/// Stanley's delta statistic: delta(t) is the number of vertices of the
/// longest chain of P starting at t, and delta(P) = sum_t delta(t).
pub fn delta_stat(poset: &Poset) -> u64 {
    let d = poset.d();
    let mut memo = vec![0u64; d + 1];
    fn delta_of(poset: &Poset, v: usize, memo: &mut Vec<u64>) -> u64 {
        if memo[v] != 0 {
            return memo[v];
        }
        let best = poset
            .strictly_above(v)
            .map(|u| delta_of(poset, u, memo))
            .max()
            .unwrap_or(0);
        memo[v] = best + 1;
        memo[v]
    }
    (1..=d).map(|v| delta_of(poset, v, &mut memo)).sum()
}
