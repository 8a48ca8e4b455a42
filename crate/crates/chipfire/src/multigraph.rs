//! Connected undirected loopless multigraphs with a distinguished sink
//! (vertex 0) and a fixed total ordering on the edges.
//!
//! Parallel edges are materialized as distinct entries with distinct
//! identifiers rather than multiplicity counts: the tree encoding and
//! decoding walk individual rejected edges, so every physical edge needs
//! its own identity. The edge order is exactly the input order; callers
//! that want a different order permute the list themselves.

use crate::error::ChipError;
use crate::matrix::IntegerMatrix;
use crate::rng::fnv1a64;
use crate::set::BitSet;
use serde::{Deserialize, Serialize};
use std::fmt;

pub type Vertex = usize;

/// 1-based edge identifier; `EdgeId(3)` displays as `e3`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

impl EdgeId {
    /// Position of this edge in the graph's edge list.
    pub fn index(self) -> usize {
        self.0 - 1
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    #[serde(skip)]
    neighbors: Vec<Vec<(Vertex, u32)>>,
    #[serde(skip)]
    degrees: Vec<i64>,
}

impl Multigraph {
    /// Validates and builds a multigraph. Vertices are `0..vertex_count`
    /// with 0 the sink; edge identifiers `e1..em` follow list position.
    pub fn new(vertex_count: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self, ChipError> {
        if vertex_count < 2 {
            return Err(ChipError::TooFewVertices(vertex_count));
        }
        if edges.is_empty() {
            return Err(ChipError::NoEdges);
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            let edge = i + 1;
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(ChipError::VertexOutOfRange {
                        edge,
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(ChipError::LoopEdge { edge, vertex: u });
            }
        }
        let mut g = Multigraph {
            vertex_count,
            edges,
            neighbors: Vec::new(),
            degrees: Vec::new(),
        };
        g.rebuild_adjacency();
        // Connectivity by search from the sink.
        let mut seen = vec![false; vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &g.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(ChipError::Disconnected { vertex: v });
        }
        Ok(g)
    }

    fn rebuild_adjacency(&mut self) {
        let mut counts = vec![std::collections::BTreeMap::new(); self.vertex_count];
        let mut degrees = vec![0i64; self.vertex_count];
        for &(u, v) in &self.edges {
            *counts[u].entry(v).or_insert(0u32) += 1;
            *counts[v].entry(u).or_insert(0u32) += 1;
            degrees[u] += 1;
            degrees[v] += 1;
        }
        self.neighbors = counts
            .into_iter()
            .map(|m| m.into_iter().collect())
            .collect();
        self.degrees = degrees;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of non-sink vertices.
    pub fn non_sink_count(&self) -> usize {
        self.vertex_count - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (1..=self.edges.len()).map(EdgeId)
    }

    pub fn endpoints(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id.index()]
    }

    pub fn check_edge_id(&self, id: EdgeId) -> Result<(), ChipError> {
        if id.0 == 0 || id.0 > self.edges.len() {
            return Err(ChipError::EdgeOutOfRange {
                edge: id.0,
                edge_count: self.edges.len(),
            });
        }
        Ok(())
    }

    pub fn degree(&self, v: Vertex) -> i64 {
        self.degrees[v]
    }

    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, u32)] {
        &self.neighbors[v]
    }

    /// Number of edges between `v` and vertices inside `set`.
    /// (`v`'s own membership is irrelevant: the graph is loopless.)
    pub fn edges_into(&self, v: Vertex, set: &BitSet) -> i64 {
        self.neighbors[v]
            .iter()
            .filter(|&&(w, _)| set.contains(w))
            .map(|&(_, m)| m as i64)
            .sum()
    }

    /// Number of edges between `v` and vertices outside `set` — the chips
    /// `v` loses when `set` fires with `v` a member.
    pub fn edges_out_of(&self, v: Vertex, set: &BitSet) -> i64 {
        self.degrees[v] - self.edges_into(v, set)
    }

    /// All edges with exactly one endpoint in `x`, in increasing id order.
    pub fn boundary_edges(&self, x: &BitSet) -> Vec<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter(|&(_, &(u, v))| x.contains(u) != x.contains(v))
            .map(|(i, _)| EdgeId(i + 1))
            .collect()
    }

    /// The full set of vertices as a bitset.
    pub fn all_vertices(&self) -> BitSet {
        BitSet::all_below(self.vertex_count)
    }

    /// The graph Laplacian: degrees on the diagonal, minus edge
    /// multiplicities off it. Rows and columns sum to zero.
    pub fn laplacian(&self) -> IntegerMatrix {
        let n = self.vertex_count;
        let mut m = IntegerMatrix::zeros(n);
        for v in 0..n {
            m.set(v, v, self.degrees[v].into());
            for &(w, mult) in &self.neighbors[v] {
                m.set(v, w, (-(mult as i64)).into());
            }
        }
        m
    }

    /// The Laplacian with the sink's row and column deleted. Full rank for
    /// a connected graph; its determinant counts spanning trees.
    pub fn reduced_laplacian(&self) -> IntegerMatrix {
        let n = self.non_sink_count();
        let mut m = IntegerMatrix::zeros(n);
        for v in 1..self.vertex_count {
            m.set(v - 1, v - 1, self.degrees[v].into());
            for &(w, mult) in &self.neighbors[v] {
                if w != 0 {
                    m.set(v - 1, w - 1, (-(mult as i64)).into());
                }
            }
        }
        m
    }

    /// Stable content hash of the vertex count and ordered edge list.
    pub fn content_hash(&self) -> u64 {
        let mut bytes = Vec::with_capacity(8 + 16 * self.edges.len());
        bytes.extend_from_slice(&(self.vertex_count as u64).to_le_bytes());
        for &(u, v) in &self.edges {
            bytes.extend_from_slice(&(u as u64).to_le_bytes());
            bytes.extend_from_slice(&(v as u64).to_le_bytes());
        }
        fnv1a64(&bytes)
    }

    /// Parse the graph file format:
    /// `vertices N` followed by one `edge u v` line per edge, in order.
    /// `#` starts a comment line.
    pub fn from_text(text: &str) -> Result<Self, ChipError> {
        let mut vertex_count: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let mut tokens = content.split_whitespace();
            match tokens.next() {
                Some("vertices") => {
                    if vertex_count.is_some() {
                        return Err(ChipError::parse(line, "duplicate `vertices` line"));
                    }
                    let n = tokens
                        .next()
                        .ok_or_else(|| ChipError::parse(line, "`vertices` needs a count"))?;
                    vertex_count = Some(n.parse().map_err(|_| {
                        ChipError::parse(line, format!("invalid vertex count `{n}`"))
                    })?);
                }
                Some("edge") => {
                    if vertex_count.is_none() {
                        return Err(ChipError::parse(line, "`edge` before `vertices`"));
                    }
                    let mut parse = |what: &str| -> Result<usize, ChipError> {
                        let t = tokens
                            .next()
                            .ok_or_else(|| ChipError::parse(line, format!("missing {what}")))?;
                        t.parse()
                            .map_err(|_| ChipError::parse(line, format!("invalid {what} `{t}`")))
                    };
                    let u = parse("edge endpoint")?;
                    let v = parse("edge endpoint")?;
                    edges.push((u, v));
                }
                Some(other) => {
                    return Err(ChipError::parse(line, format!("unknown directive `{other}`")));
                }
                None => unreachable!(),
            }
        }
        let vertex_count =
            vertex_count.ok_or_else(|| ChipError::parse(0, "missing `vertices` line"))?;
        Multigraph::new(vertex_count, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("vertices {}\n", self.vertex_count);
        for &(u, v) in &self.edges {
            out.push_str(&format!("edge {u} {v}\n"));
        }
        out
    }

    /// Same graph with its edge list permuted by a seeded shuffle: the
    /// edge *set* is unchanged but every identifier is reassigned.
    pub fn with_shuffled_edges(&self, seed: u64) -> Multigraph {
        let mut edges = self.edges.clone();
        let mut rng = crate::rng::SplitMix64::new(seed);
        rng.shuffle(&mut edges);
        Multigraph::new(self.vertex_count, edges).expect("permuting edges preserves validity")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    pub fn k3() -> Multigraph {
        Multigraph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    pub fn b3() -> Multigraph {
        Multigraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    pub fn p3() -> Multigraph {
        Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn build_k3_assigns_ids_by_position() {
        let g = k3();
        assert_eq!(g.endpoints(EdgeId(1)), (0, 1));
        assert_eq!(g.endpoints(EdgeId(2)), (0, 2));
        assert_eq!(g.endpoints(EdgeId(3)), (1, 2));
    }

    #[test]
    fn build_banana_keeps_parallel_edges_distinct() {
        let g = b3();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(1), 3);
    }

    #[test]
    fn build_rejects_loop() {
        let err = Multigraph::new(3, vec![(1, 1)]).unwrap_err();
        assert_eq!(err, ChipError::LoopEdge { edge: 1, vertex: 1 });
    }

    #[test]
    fn build_rejects_disconnected_and_out_of_range() {
        let err = Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap_err();
        assert!(matches!(err, ChipError::Disconnected { .. }));
        let err = Multigraph::new(3, vec![(0, 5)]).unwrap_err();
        assert!(matches!(err, ChipError::VertexOutOfRange { vertex: 5, .. }));
    }

    #[test]
    fn degrees() {
        assert_eq!(k3().degree(1), 2);
        assert_eq!(b3().degree(1), 3);
        assert_eq!(p3().degree(2), 1);
    }

    #[test]
    fn boundary_edges_examples() {
        let g = k3();
        assert_eq!(
            g.boundary_edges(&BitSet::from([0])),
            vec![EdgeId(1), EdgeId(2)]
        );
        assert_eq!(
            g.boundary_edges(&BitSet::from([0, 1])),
            vec![EdgeId(2), EdgeId(3)]
        );
        assert_eq!(
            b3().boundary_edges(&BitSet::from([0])),
            vec![EdgeId(1), EdgeId(2), EdgeId(3)]
        );
    }

    #[test]
    fn boundary_edge_membership_matches_direct_scan() {
        let g = k3();
        for mask in 1u32..7 {
            let x: BitSet = (0..3).filter(|&v| mask & (1 << v) != 0).collect();
            let boundary = g.boundary_edges(&x);
            for id in g.edge_ids() {
                let (u, v) = g.endpoints(id);
                let expect = x.contains(u) != x.contains(v);
                assert_eq!(boundary.contains(&id), expect);
            }
        }
    }

    #[test]
    fn laplacian_values() {
        let l = k3().laplacian();
        let expect = IntegerMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert_eq!(l, expect);
        assert_eq!(
            b3().laplacian(),
            IntegerMatrix::from_rows(&[vec![3, -3], vec![-3, 3]])
        );
        assert_eq!(
            p3().laplacian(),
            IntegerMatrix::from_rows(&[vec![1, -1, 0], vec![-1, 2, -1], vec![0, -1, 1]])
        );
    }

    #[test]
    fn laplacian_rows_and_columns_sum_to_zero() {
        for g in [k3(), b3(), p3()] {
            let l = g.laplacian();
            assert!(l.is_symmetric());
            for i in 0..l.dim() {
                assert_eq!(l.row_sum(i), BigInt::zero());
                assert_eq!(BigInt::from(g.degree(i)), *l.get(i, i));
            }
        }
    }

    #[test]
    fn reduced_laplacian_values() {
        assert_eq!(
            k3().reduced_laplacian(),
            IntegerMatrix::from_rows(&[vec![2, -1], vec![-1, 2]])
        );
        assert_eq!(
            b3().reduced_laplacian(),
            IntegerMatrix::from_rows(&[vec![3]])
        );
        assert_eq!(
            p3().reduced_laplacian(),
            IntegerMatrix::from_rows(&[vec![2, -1], vec![-1, 1]])
        );
    }

    #[test]
    fn text_round_trip() {
        let g = k3();
        let text = g.to_text();
        let back = Multigraph::from_text(&text).unwrap();
        assert_eq!(g, back);
        let with_comments = format!("# triangle\n\n{text}");
        assert_eq!(Multigraph::from_text(&with_comments).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Multigraph::from_text("vertices 3\nedge 0 x\n").unwrap_err();
        assert!(matches!(err, ChipError::Parse { line: 2, .. }));
        let err = Multigraph::from_text("edge 0 1\n").unwrap_err();
        assert!(matches!(err, ChipError::Parse { line: 1, .. }));
    }

    #[test]
    fn shuffled_edges_same_multiset() {
        let g = k3();
        let h = g.with_shuffled_edges(5);
        let mut a = g.edges().to_vec();
        let mut b = h.edges().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }
}
