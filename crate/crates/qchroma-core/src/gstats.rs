//! Rank functions and G-statistics on permutations, following Chung-Graham,
//! plus the half-open simplicial cone decomposition of the homogenized
//! proper-coloring region
//!
//! ```text
//!     K^_G = { x in R^(d+1) : 0 < x_1, ..., x_d < x_{d+1},
//!              x_i != x_j for every edge ij }.
//! ```
//!
//! The rank of pi(i) is the longest run of increasing positions ending at i
//! whose consecutive entries are adjacent in G. A G-descent at i means
//! rk(pi(i)) > rk(pi(i+1)), or equal ranks with pi(i) > pi(i+1); G-ascents
//! are the complementary comparisons. Cutting pi at its G-ascents yields the
//! G-sequence, an ordered set partition into independent sets.
//!
//! Each permutation pi carries the half-open cone
//!
//! ```text
//!     D^_pi = { 0 < x_pi(1) <= ... <= x_pi(d) < x_{d+1},
//!               strict at exactly the G-ascent positions },
//! ```
//!
//! and these cones partition K^_G; [`locate_point`] inverts the partition.

use itertools::Itertools;

use crate::graph::{Coloring, Graph};
use crate::Error;

/// A permutation of {1..d} in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validate a one-line word: each of 1..=d exactly once.
    pub fn new(word: Vec<usize>) -> Result<Permutation, Error> {
        let d = word.len();
        let mut seen = vec![false; d + 1];
        for &x in &word {
            if x < 1 || x > d || seen[x] {
                return Err(Error::InvalidPermutation(format!("{word:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(d: usize) -> Permutation {
        Permutation {
            word: (1..=d).collect(),
        }
    }

    pub fn d(&self) -> usize {
        self.word.len()
    }

    /// pi(i), 1-indexed position.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Position of value v, i.e. pi^{-1}(v), 1-indexed.
    pub fn position_of(&self, v: usize) -> usize {
        self.word
            .iter()
            .position(|&x| x == v)
            .expect("value in range")
            + 1
    }

    /// Usual ascent set {i : pi(i) < pi(i+1)}.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.d())
            .filter(|&i| self.at(i) < self.at(i + 1))
            .collect()
    }

    /// Usual descent set {i : pi(i) > pi(i+1)}.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.d())
            .filter(|&i| self.at(i) > self.at(i + 1))
            .collect()
    }

    /// Usual major index, the sum of the descent positions.
    pub fn major_index(&self) -> u64 {
        self.descents().iter().map(|&i| i as u64).sum()
    }
}

/// All of S_d in lexicographic order of the one-line words.
pub fn all_permutations(d: usize) -> impl Iterator<Item = Permutation> {
    (1..=d).permutations(d).map(|word| Permutation { word })
}

/// The rank function of a permutation or an ordered set partition:
/// rk(v) for each vertex v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFunction {
    rk: Vec<usize>,
}

impl RankFunction {
    pub fn of(&self, v: usize) -> usize {
        self.rk[v - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.rk
    }
}

/// An ordered set partition (A_1, ..., A_m) of {1..d} into disjoint nonempty
/// blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<OrderedSetPartition, Error> {
        let d: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; d + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidGraph(
                    "empty block in ordered set partition".into(),
                ));
            }
            for &v in block {
                if v < 1 || v > d || seen[v] {
                    return Err(Error::InvalidGraph(format!(
                        "blocks do not partition 1..={d}: {blocks:?}"
                    )));
                }
                seen[v] = true;
            }
        }
        Ok(OrderedSetPartition { blocks })
    }

    /// The singleton partition ({pi(1)}, ..., {pi(d)}).
    pub fn singletons(pi: &Permutation) -> OrderedSetPartition {
        OrderedSetPartition {
            blocks: pi.word().iter().map(|&v| vec![v]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// 1-based index of the block containing v.
    pub fn block_of(&self, v: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&v))
            .expect("partition covers 1..=d")
            + 1
    }
}

impl std::fmt::Display for OrderedSetPartition {
    /// Blocks joined by '/', e.g. `31/2/5/4`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<String>())
            .collect();
        write!(f, "{}", parts.join("/"))
    }
}

/// G-ascent/G-descent data of a permutation: the two sets partition {1..d-1}
/// and maj is the sum of the descent positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GStatProfile {
    pub asc: Vec<usize>,
    pub des: Vec<usize>,
    pub maj: u64,
}

impl GStatProfile {
    pub fn ascnum(&self) -> usize {
        self.asc.len()
    }

    pub fn desnum(&self) -> usize {
        self.des.len()
    }
}

/// A lattice point of R^(d+1); the last coordinate is the homogenizing
/// height n+1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePoint {
    coords: Vec<u64>,
}

impl LatticePoint {
    pub fn new(coords: Vec<u64>) -> LatticePoint {
        LatticePoint { coords }
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// Rank function of a permutation: rk(pi(i)) = 1 + max rank over neighbors of
/// pi(i) at earlier positions (1 if none), scanned left to right.
pub fn rank_of_permutation(graph: &Graph, pi: &Permutation) -> RankFunction {
    let d = graph.d();
    let mut rk = vec![0usize; d];
    for i in 1..=d {
        let v = pi.at(i);
        let mask = graph.neighbors_mask(v);
        let mut best = 0;
        for j in 1..i {
            let u = pi.at(j);
            if (mask >> (u - 1)) & 1 == 1 {
                best = best.max(rk[u - 1]);
            }
        }
        rk[v - 1] = best + 1;
    }
    RankFunction { rk }
}

/// Rank function of an ordered set partition: rk(v) is the number of vertices
/// in a longest path of G ending at v that visits blocks of strictly
/// increasing index.
pub fn rank_of_partition(graph: &Graph, partition: &OrderedSetPartition) -> RankFunction {
    let d = graph.d();
    let mut rk = vec![0usize; d];
    let mut block_of = vec![0usize; d + 1];
    for (idx, block) in partition.blocks().iter().enumerate() {
        for &v in block {
            block_of[v] = idx + 1;
        }
    }
    for block in partition.blocks() {
        for &v in block {
            let mask = graph.neighbors_mask(v);
            let mut best = 0;
            for u in 1..=d {
                if (mask >> (u - 1)) & 1 == 1 && block_of[u] < block_of[v] {
                    best = best.max(rk[u - 1]);
                }
            }
            rk[v - 1] = best + 1;
        }
    }
    RankFunction { rk }
}

/// G-ascents, G-descents, and the G-major index of a permutation.
pub fn g_statistics(graph: &Graph, pi: &Permutation) -> GStatProfile {
    let rk = rank_of_permutation(graph, pi);
    let mut asc = Vec::new();
    let mut des = Vec::new();
    for i in 1..pi.d() {
        let (a, b) = (pi.at(i), pi.at(i + 1));
        let descent = match rk.of(a).cmp(&rk.of(b)) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => a > b,
        };
        if descent {
            des.push(i);
        } else {
            asc.push(i);
        }
    }
    let maj = des.iter().map(|&i| i as u64).sum();
    GStatProfile { asc, des, maj }
}

/// The G-sequence of a permutation: cut the one-line word at its G-ascents.
/// Every block is an independent set of G.
pub fn g_sequence(graph: &Graph, pi: &Permutation) -> OrderedSetPartition {
    let stats = g_statistics(graph, pi);
    let mut blocks = Vec::with_capacity(stats.ascnum() + 1);
    let mut current = Vec::new();
    for i in 1..=pi.d() {
        current.push(pi.at(i));
        if stats.asc.contains(&i) {
            blocks.push(std::mem::take(&mut current));
        }
    }
    blocks.push(current);
    OrderedSetPartition { blocks }
}

/// The G-sequence coloring w_pi: vertex v gets the index of its G-sequence
/// block. A proper coloring with ascnum+1 colors.
pub fn g_sequence_coloring(graph: &Graph, pi: &Permutation) -> Coloring {
    let seq = g_sequence(graph, pi);
    let palette = seq.block_count();
    let mut assignment = vec![0usize; graph.d()];
    for (idx, block) in seq.blocks().iter().enumerate() {
        for &v in block {
            assignment[v - 1] = idx + 1;
        }
    }
    Coloring::new(assignment, palette)
}

/// Membership of an integer point in the half-open cone of pi:
/// 0 < a_pi(1) <= ... <= a_pi(d) < a_{d+1}, strict exactly at G-ascents.
pub fn cone_contains(graph: &Graph, pi: &Permutation, point: &LatticePoint) -> Result<bool, Error> {
    let d = graph.d();
    if point.len() != d + 1 {
        return Err(Error::DimensionMismatch {
            expected: d + 1,
            got: point.len(),
        });
    }
    let a = point.coords();
    if a[pi.at(1) - 1] == 0 {
        return Ok(false);
    }
    let stats = g_statistics(graph, pi);
    for i in 1..d {
        let x = a[pi.at(i) - 1];
        let y = a[pi.at(i + 1) - 1];
        let strict = stats.asc.contains(&i);
        if strict && !(x < y) {
            return Ok(false);
        }
        if !strict && !(x <= y) {
            return Ok(false);
        }
    }
    Ok(a[pi.at(d) - 1] < a[d])
}

/// Locate the unique permutation whose cone contains an integer point of the
/// region K^_G: group the first d coordinates into blocks of equal value in
/// ascending order, sort each block by rank (w.r.t. the value partition)
/// descending with ties broken by label descending, and concatenate.
pub fn locate_point(graph: &Graph, point: &LatticePoint) -> Result<Permutation, Error> {
    let d = graph.d();
    if point.len() != d + 1 {
        return Err(Error::DimensionMismatch {
            expected: d + 1,
            got: point.len(),
        });
    }
    let a = point.coords();
    let height = a[d];
    for (i, &x) in a.iter().enumerate().take(d) {
        if x == 0 {
            return Err(Error::PointOutsideRegion(format!(
                "coordinate {} is zero",
                i + 1
            )));
        }
        if x >= height {
            return Err(Error::PointOutsideRegion(format!(
                "coordinate {} is not below the height {height}",
                i + 1
            )));
        }
    }
    for &(u, v) in graph.edges() {
        if a[u - 1] == a[v - 1] {
            return Err(Error::PointOutsideRegion(format!(
                "edge {{{u},{v}}} has equal coordinates"
            )));
        }
    }
    // blocks of equal value, ascending
    let mut values: Vec<u64> = a[..d].to_vec();
    values.sort_unstable();
    values.dedup();
    let blocks: Vec<Vec<usize>> = values
        .iter()
        .map(|&b| (1..=d).filter(|&v| a[v - 1] == b).collect())
        .collect();
    let partition = OrderedSetPartition {
        blocks: blocks.clone(),
    };
    let rk = rank_of_partition(graph, &partition);
    let mut word = Vec::with_capacity(d);
    for mut block in blocks {
        block.sort_by(|&u, &v| rk.of(v).cmp(&rk.of(u)).then(v.cmp(&u)));
        word.extend(block);
    }
    Ok(Permutation { word })
}
