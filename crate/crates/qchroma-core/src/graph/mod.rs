//! Labeled simple graphs on vertex set {1..d} and the enumeration machinery
//! built on them: proper colorings, the chromatic polynomial by
//! deletion-contraction, and acyclic orientations.
//!
//! Vertices are 1-indexed everywhere in the public interface. Enumeration
//! orders are fixed so streams are deterministic: colorings come out in
//! lexicographic order of the assignment sequence, orientations in
//! lexicographic order of their direction choices along the sorted edge list.

mod poset;

pub use poset::{
    delta_stat, induced_poset, linear_extensions, rank_labeling, Labeling, LinearExtensions, Poset,
};

use std::collections::BTreeSet;
use std::fmt;

use crate::Error;

/// Hard structural limit: adjacency rows are u64 bitmasks.
const MAX_VERTICES: usize = 64;

/// A labeled simple graph on vertices {1..d}.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    d: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Build from an edge list; edges are deduplicated, self-loops rejected.
    pub fn from_edges<I>(d: usize, edges: I) -> Result<Graph, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if d < 1 {
            return Err(Error::InvalidGraph(
                "vertex count must be at least 1".into(),
            ));
        }
        if d > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!(
                "at most {MAX_VERTICES} vertices are supported"
            )));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u < 1 || u > d || v < 1 || v > d {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u},{v}}} has an endpoint outside 1..={d}"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![0u64; d + 1];
        for &(u, v) in &set {
            adj[u] |= 1 << (v - 1);
            adj[v] |= 1 << (u - 1);
        }
        Ok(Graph {
            d,
            edges: set.into_iter().collect(),
            adj,
        })
    }

    /// Parse the graph file format: '#' starts a comment line, the first data
    /// line is the vertex count d, and each subsequent data line is "u v".
    pub fn parse(text: &str) -> Result<Graph, Error> {
        let mut d: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if d.is_none() {
                d = Some(line.parse().map_err(|_| {
                    Error::InvalidGraph(format!(
                        "line {}: expected vertex count, got {line:?}",
                        lineno + 1
                    ))
                })?);
                continue;
            }
            let mut it = line.split_whitespace();
            let u: usize = it.next().and_then(|t| t.parse().ok()).ok_or_else(|| {
                Error::InvalidGraph(format!("line {}: expected \"u v\"", lineno + 1))
            })?;
            let v: usize = it.next().and_then(|t| t.parse().ok()).ok_or_else(|| {
                Error::InvalidGraph(format!("line {}: expected \"u v\"", lineno + 1))
            })?;
            if it.next().is_some() {
                return Err(Error::InvalidGraph(format!(
                    "line {}: trailing tokens",
                    lineno + 1
                )));
            }
            edges.push((u, v));
        }
        let d = d.ok_or_else(|| Error::InvalidGraph("missing vertex count".into()))?;
        Graph::from_edges(d, edges)
    }

    /// Edgeless graph.
    pub fn empty(d: usize) -> Result<Graph, Error> {
        Graph::from_edges(d, [])
    }

    /// Path 1-2-...-d.
    pub fn path(d: usize) -> Result<Graph, Error> {
        Graph::from_edges(d, (1..d).map(|i| (i, i + 1)))
    }

    /// Cycle 1-2-...-d-1; requires d >= 3.
    pub fn cycle(d: usize) -> Result<Graph, Error> {
        if d < 3 {
            return Err(Error::InvalidSize("cycle needs at least 3 vertices".into()));
        }
        Graph::from_edges(d, (1..d).map(|i| (i, i + 1)).chain([(d, 1)]))
    }

    /// Star with center 1 and leaves 2..=d.
    pub fn star(d: usize) -> Result<Graph, Error> {
        Graph::from_edges(d, (2..=d).map(|v| (1, v)))
    }

    /// Complete graph K_d.
    pub fn complete(d: usize) -> Result<Graph, Error> {
        let mut edges = Vec::new();
        for u in 1..=d {
            for v in u + 1..=d {
                edges.push((u, v));
            }
        }
        Graph::from_edges(d, edges)
    }

    /// Broom B(m, n): a path on vertices 1..=n with m extra leaves
    /// n+1..=n+m attached to vertex n. B(m, 1) is the star on m+1 vertices.
    pub fn broom(m: usize, n: usize) -> Result<Graph, Error> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidSize("broom sizes must be positive".into()));
        }
        let d = m + n;
        let edges = (1..n)
            .map(|i| (i, i + 1))
            .chain((1..=m).map(|j| (n, n + j)));
        Graph::from_edges(d, edges)
    }

    /// The bowtie: two triangles {1,4,5} and {2,3,5} glued at vertex 5.
    pub fn bowtie() -> Graph {
        Graph::from_edges(5, [(1, 4), (1, 5), (4, 5), (2, 3), (2, 5), (3, 5)]).unwrap()
    }

    /// Decode a Pruefer sequence (entries in 1..=d, length d-2) into the
    /// labeled tree it encodes.
    pub fn from_pruefer(seq: &[usize]) -> Result<Graph, Error> {
        let d = seq.len() + 2;
        if seq.iter().any(|&v| v < 1 || v > d) {
            return Err(Error::InvalidSize(
                "Pruefer entries must lie in 1..=d".into(),
            ));
        }
        let mut degree = vec![1usize; d + 1];
        for &v in seq {
            degree[v] += 1;
        }
        let mut edges = Vec::with_capacity(d - 1);
        for &v in seq {
            let leaf = (1..=d)
                .find(|&u| degree[u] == 1)
                .expect("a leaf always remains");
            edges.push((leaf, v));
            degree[leaf] -= 1;
            degree[v] -= 1;
        }
        let rest: Vec<usize> = (1..=d).filter(|&u| degree[u] == 1).collect();
        edges.push((rest[0], rest[1]));
        Graph::from_edges(d, edges)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Edges as sorted (u, v) pairs with u < v.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && (self.adj[u] >> (v - 1)) & 1 == 1
    }

    /// Neighbors of v as a bitmask (bit i set means vertex i+1 is adjacent).
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[v];
        (1..=self.d).filter(move |u| (mask >> (u - 1)) & 1 == 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Connected with exactly d-1 edges.
    pub fn is_tree(&self) -> bool {
        if self.edges.len() != self.d - 1 {
            return false;
        }
        // BFS from vertex 1
        let mut seen = 1u64;
        let mut frontier = vec![1usize];
        while let Some(v) = frontier.pop() {
            for u in self.neighbors(v) {
                if seen >> (u - 1) & 1 == 0 {
                    seen |= 1 << (u - 1);
                    frontier.push(u);
                }
            }
        }
        seen.count_ones() as usize == self.d
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.d)?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// A coloring c: {1..d} -> {1..n}; proper iff the endpoints of every edge
/// receive distinct colors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Coloring {
    assignment: Vec<usize>,
    palette: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>, palette: usize) -> Self {
        Coloring {
            assignment,
            palette,
        }
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v - 1]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.assignment.len() == g.d()
            && self.assignment.iter().all(|&c| c >= 1 && c <= self.palette)
            && g.edges()
                .iter()
                .all(|&(u, v)| self.color(u) != self.color(v))
    }

    /// Sum of the colors over all vertices.
    pub fn color_sum(&self) -> u64 {
        self.assignment.iter().map(|&c| c as u64).sum()
    }
}

/// Lazy stream of all proper colorings of a graph with a given palette size,
/// in lexicographic order of the assignment sequence.
pub struct ProperColorings<'a> {
    graph: &'a Graph,
    palette: usize,
    partial: Vec<usize>,
    emitted: bool,
    done: bool,
}

/// Enumerate the proper colorings c: {1..d} -> {1..n} in lexicographic order.
pub fn proper_colorings(graph: &Graph, palette: usize) -> ProperColorings<'_> {
    ProperColorings {
        graph,
        palette,
        partial: Vec::new(),
        emitted: false,
        done: false,
    }
}

impl ProperColorings<'_> {
    fn color_ok(&self, depth: usize, color: usize) -> bool {
        // vertex depth+1 against its already-colored neighbors
        let v = depth + 1;
        let mask = self.graph.neighbors_mask(v);
        for (i, &c) in self.partial.iter().enumerate() {
            if (mask >> i) & 1 == 1 && c == color {
                return false;
            }
        }
        true
    }
}

impl Iterator for ProperColorings<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.done {
            return None;
        }
        let d = self.graph.d();
        let mut candidate = if self.emitted {
            // backtrack off the previously emitted full assignment
            match self.partial.pop() {
                Some(c) => c + 1,
                None => {
                    self.done = true;
                    return None;
                }
            }
        } else {
            1
        };
        loop {
            let depth = self.partial.len();
            let mut placed = false;
            for color in candidate..=self.palette {
                if self.color_ok(depth, color) {
                    self.partial.push(color);
                    placed = true;
                    break;
                }
            }
            if placed {
                if self.partial.len() == d {
                    self.emitted = true;
                    return Some(Coloring::new(self.partial.clone(), self.palette));
                }
                candidate = 1;
            } else {
                match self.partial.pop() {
                    Some(c) => candidate = c + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// Smallest palette size admitting a proper coloring.
pub fn chromatic_number(graph: &Graph) -> usize {
    (1..=graph.d())
        .find(|&n| proper_colorings(graph, n).next().is_some())
        .expect("every graph on d vertices is d-colorable")
}

/// An integer polynomial in the palette-size variable n, dense little-endian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<i128>,
}

impl IntPoly {
    fn x_pow(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        IntPoly { coeffs }
    }

    fn sub(&self, other: &IntPoly) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(coeffs.len().max(other.coeffs.len()), 0);
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: i128) -> i128 {
        let mut acc = 0i128;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.unsigned_abs();
            if mag != 1 || k == 0 {
                write!(f, "{mag}")?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            if k == 1 {
                write!(f, "n")?;
            } else if k > 1 {
                write!(f, "n^{k}")?;
            }
        }
        Ok(())
    }
}

/// The chromatic polynomial of the graph by deletion-contraction:
/// chi(G) = chi(G - e) - chi(G / e), with chi of the edgeless graph on k
/// vertices equal to n^k.
pub fn chromatic_polynomial_dc(graph: &Graph) -> IntPoly {
    if graph.edge_count() == 0 {
        return IntPoly::x_pow(graph.d());
    }
    let &(u, v) = &graph.edges()[0];
    // deletion
    let deleted = Graph::from_edges(
        graph.d(),
        graph.edges().iter().copied().filter(|&e| e != (u, v)),
    )
    .unwrap();
    // contraction: merge v into u, relabel w > v down by one
    let relabel = |w: usize| {
        let w = if w == v { u } else { w };
        if w > v {
            w - 1
        } else {
            w
        }
    };
    let contracted = Graph::from_edges(
        graph.d() - 1,
        graph
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != (u, v))
            .map(|(a, b)| (relabel(a), relabel(b))),
    )
    .unwrap();
    chromatic_polynomial_dc(&deleted).sub(&chromatic_polynomial_dc(&contracted))
}

/// An orientation of a graph's edges: one (tail, head) arc per edge, stored
/// in the graph's sorted edge order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Build from arcs; each arc must orient a distinct edge of the graph.
    pub fn new(graph: &Graph, arcs: Vec<(usize, usize)>) -> Result<Orientation, Error> {
        if arcs.len() != graph.edge_count() {
            return Err(Error::InvalidGraph(
                "arc count does not match edge count".into(),
            ));
        }
        let mut sorted: Vec<(usize, usize)> =
            arcs.iter().map(|&(t, h)| (t.min(h), t.max(h))).collect();
        sorted.sort_unstable();
        if sorted != graph.edges() {
            return Err(Error::InvalidGraph(
                "arcs do not orient the graph's edge set".into(),
            ));
        }
        let mut ordered = arcs;
        ordered.sort_unstable_by_key(|&(t, h)| (t.min(h), t.max(h)));
        Ok(Orientation { arcs: ordered })
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Reverse the direction of every arc.
    pub fn reversed(&self) -> Orientation {
        Orientation {
            arcs: self.arcs.iter().map(|&(t, h)| (h, t)).collect(),
        }
    }

    /// True iff the arc set has no directed cycle.
    pub fn is_acyclic(&self, d: usize) -> bool {
        // Kahn's algorithm on the arc digraph
        let mut indeg = vec![0usize; d + 1];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); d + 1];
        for &(t, h) in &self.arcs {
            indeg[h] += 1;
            out[t].push(h);
        }
        let mut stack: Vec<usize> = (1..=d).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &h in &out[v] {
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    stack.push(h);
                }
            }
        }
        seen == d
    }
}

/// All d^(d-2) labeled trees on {1..d} (d >= 2), by Pruefer decoding in
/// lexicographic sequence order.
pub fn labeled_trees(d: usize) -> impl Iterator<Item = Graph> {
    let total: u64 = if d >= 2 {
        (d as u64).pow((d - 2) as u32)
    } else {
        0
    };
    (0..total).map(move |code| {
        let mut seq = Vec::with_capacity(d.saturating_sub(2));
        let mut c = code;
        for _ in 0..d.saturating_sub(2) {
            seq.push((c % d as u64) as usize + 1);
            c /= d as u64;
        }
        Graph::from_pruefer(&seq).expect("valid Pruefer sequence")
    })
}

/// All acyclic orientations, in lexicographic order of direction choices
/// along the sorted edge list. The count equals |chi_G(-1)|.
pub fn acyclic_orientations(graph: &Graph) -> Vec<Orientation> {
    let d = graph.d();
    let edges = graph.edges();
    let mut out = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    fn reaches(arcs: &[(usize, usize)], from: usize, to: usize, d: usize) -> bool {
        let mut seen = vec![false; d + 1];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            for &(t, h) in arcs {
                if t == v && !seen[h] {
                    seen[h] = true;
                    stack.push(h);
                }
            }
        }
        false
    }
    fn go(
        edges: &[(usize, usize)],
        idx: usize,
        arcs: &mut Vec<(usize, usize)>,
        out: &mut Vec<Orientation>,
        d: usize,
    ) {
        if idx == edges.len() {
            out.push(Orientation { arcs: arcs.clone() });
            return;
        }
        let (u, v) = edges[idx];
        // adding u -> v creates a cycle iff v already reaches u
        for (tail, head) in [(u, v), (v, u)] {
            if !reaches(arcs, head, tail, d) {
                arcs.push((tail, head));
                go(edges, idx + 1, arcs, out, d);
                arcs.pop();
            }
        }
    }
    go(edges, 0, &mut arcs, &mut out, d);
    out
}
