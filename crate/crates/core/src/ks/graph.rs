use crate::error::Result;
use crate::exact::quad_dot3;

use super::VectorSet;

/// Orthogonality graph: nodes are vector indices, edges join exactly
/// orthogonal pairs, triads are the mutually orthogonal triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    triads: Vec<[usize; 3]>,
    adjacency: Vec<Vec<usize>>,
    node_triads: Vec<Vec<usize>>,
}

impl OrthoGraph {
    /// Graph from explicit parts. Edges and triads are normalized to sorted
    /// order and deduplicated; every triad must be a triangle of `edges`.
    pub fn from_parts(n: usize, edges: &[(usize, usize)], triads: &[[usize; 3]]) -> Self {
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(i, j)| {
                assert!(i != j && i < n && j < n, "edge ({i}, {j}) out of range or a loop");
                (i.min(j), i.max(j))
            })
            .collect();
        e.sort_unstable();
        e.dedup();
        let mut t: Vec<[usize; 3]> = triads
            .iter()
            .map(|t| {
                let mut t = *t;
                t.sort_unstable();
                t
            })
            .collect();
        t.sort_unstable();
        t.dedup();
        let mut adjacency = vec![Vec::new(); n];
        for &(i, j) in &e {
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        let mut node_triads = vec![Vec::new(); n];
        for (ti, tri) in t.iter().enumerate() {
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                assert!(e.binary_search(&(tri[a], tri[b])).is_ok(), "triad {tri:?} is not a triangle");
            }
            for &v in tri {
                node_triads[v].push(ti);
            }
        }
        Self { n, edges: e, triads: t, adjacency, node_triads }
    }

    /// Graph on `n` nodes with the given edges; triads are all triangles.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let g = Self::from_parts(n, edges, &[]);
        let t = g.triangles();
        Self::from_parts(n, edges, &t)
    }

    fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for &(i, j) in &self.edges {
            for &k in &self.adjacency[j] {
                if k > j && self.adjacency[i].contains(&k) {
                    out.push([i, j, k]);
                }
            }
        }
        out
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn triads(&self) -> &[[usize; 3]] {
        &self.triads
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Indices into [`Self::triads`] of the triads containing `v`.
    pub fn triads_of(&self, v: usize) -> &[usize] {
        &self.node_triads[v]
    }

    /// 1-based label of a node, as in the vector file.
    pub fn label(&self, v: usize) -> usize {
        v + 1
    }
}

/// Exact orthogonality graph of a vector set. Triads are found by triangle
/// enumeration and unioned with the declared ones.
pub fn build_graph(vs: &VectorSet) -> Result<OrthoGraph> {
    let v = vs.vectors();
    let mut edges = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if quad_dot3(&v[i], &v[j])?.is_zero() {
                edges.push((i, j));
            }
        }
    }
    let g = OrthoGraph::from_edges(v.len(), &edges);
    let mut triads = g.triads().to_vec();
    triads.extend_from_slice(vs.triads());
    Ok(OrthoGraph::from_parts(v.len(), &edges, &triads))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ks::parse_vector_set;

    #[test]
    fn axes() {
        let vs = parse_vector_set("field 1\nv 1:0 0:0 0:0\nv 0:0 1:0 0:0\nv 0:0 0:0 1:0\n").unwrap();
        let g = build_graph(&vs).unwrap();
        assert_eq!(g.edges().len(), 3);
        assert_eq!(g.triads(), &[[0, 1, 2]]);
        assert_eq!(g.label(2), 3);
    }

    #[test]
    fn diagonal_joins_the_z_axis() {
        let four = "field 2\nv 1:0 0:0 0:0\nv 0:0 1:0 0:0\nv 0:0 0:0 1:0\nv 1:0 1:0 0:0\n";
        let g = build_graph(&parse_vector_set(four).unwrap()).unwrap();
        assert!(g.edges().contains(&(2, 3)));
        assert_eq!(g.triads(), &[[0, 1, 2]]);
        let five = format!("{four}v 1:0 -1:0 0:0\n");
        let g = build_graph(&parse_vector_set(&five).unwrap()).unwrap();
        assert_eq!(g.triads(), &[[0, 1, 2], [2, 3, 4]]);
        assert_eq!(g.triads_of(2), &[0, 1]);
    }

    #[test]
    fn empty_set() {
        let g = build_graph(&parse_vector_set("field 3\n").unwrap()).unwrap();
        assert_eq!(g.node_count(), 0);
        assert!(g.edges().is_empty() && g.triads().is_empty());
    }
}
