//! Permutation representation graphs and string groups generated by involutions.
//!
//! A [`CprGraph`] on vertices `1..=n` has an `i`-labeled edge `{a, b}`
//! exactly when the `i`-th involution swaps `a` and `b`. Parallel edges
//! carry distinct labels and are stored as separate triples.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, SggiError};
use crate::perm::Permutation;

/// A string group generated by involutions: `rho_0..rho_{r-1}` on `degree`
/// points, each an involution, with `rho_i rho_j` an involution whenever
/// `|i - j| > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sggi {
    degree: usize,
    generators: Vec<Permutation>,
}

/// Checks the involution and commuting conditions on a generator list.
pub fn check_sggi(generators: &[Permutation]) -> Result<(), SggiError> {
    if let Some(first) = generators.first() {
        for g in generators {
            if g.degree() != first.degree() {
                return Err(crate::error::PermError::DegreeMismatch {
                    left: first.degree(),
                    right: g.degree(),
                }
                .into());
            }
        }
    }
    for (i, g) in generators.iter().enumerate() {
        if !g.is_involution() {
            return Err(SggiError::NotInvolution { index: i });
        }
    }
    for i in 0..generators.len() {
        for j in i + 2..generators.len() {
            if !generators[i].commutes_with(&generators[j]) {
                return Err(SggiError::NotCommuting { i, j });
            }
        }
    }
    Ok(())
}

impl Sggi {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, SggiError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(crate::error::PermError::DegreeMismatch {
                left: degree,
                right: g.degree(),
            }
            .into());
        }
        check_sggi(&generators)?;
        Ok(Self { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Permutation {
        &self.generators[i]
    }

    pub fn into_generators(self) -> Vec<Permutation> {
        self.generators
    }
}

/// An edge-labeled multigraph on vertices `1..=n` with labels `0..rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson")]
pub struct CprGraph {
    n: usize,
    rank: usize,
    /// `(u, v, label)` with `u < v`, sorted.
    edges: Vec<(usize, usize, usize)>,
}

#[derive(Deserialize)]
struct GraphJson {
    n: usize,
    rank: usize,
    edges: Vec<(usize, usize, usize)>,
}

impl TryFrom<GraphJson> for CprGraph {
    type Error = GraphError;

    fn try_from(raw: GraphJson) -> Result<Self, GraphError> {
        CprGraph::new(raw.n, raw.rank, raw.edges)
    }
}

impl CprGraph {
    /// Builds a graph, normalizing each edge to `u < v` and sorting.
    pub fn new(
        n: usize,
        rank: usize,
        edges: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut out = Vec::new();
        for (u, v, label) in edges {
            for vertex in [u, v] {
                if vertex == 0 || vertex > n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            if label >= rank {
                return Err(GraphError::LabelOutOfRange { label, rank });
            }
            out.push((u.min(v), u.max(v), label));
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            let (u, v, label) = w[0];
            return Err(GraphError::DuplicateEdge { u, v, label });
        }
        Ok(Self {
            n,
            rank,
            edges: out,
        })
    }

    /// The graph of a list of involutions on a common degree.
    pub fn from_generators(degree: usize, generators: &[Permutation]) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (label, g) in generators.iter().enumerate() {
            if g.degree() != degree {
                return Err(SggiError::from(crate::error::PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                })
                .into());
            }
            if !g.is_involution() {
                return Err(SggiError::NotInvolution { index: label }.into());
            }
            for cycle in g.cycles() {
                edges.push((cycle[0] + 1, cycle[1] + 1, label));
            }
        }
        Self::new(degree, generators.len(), edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn edges_with_label(&self, label: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges
            .iter()
            .filter(move |e| e.2 == label)
            .map(|&(u, v, _)| (u, v))
    }

    /// Labels that occur on at least one edge.
    pub fn labels_used(&self) -> BTreeSet<usize> {
        self.edges.iter().map(|e| e.2).collect()
    }

    /// Connected components of the subgraph spanned by edges with the given
    /// labels. Every vertex appears, isolated ones as singletons; components
    /// are sorted and ordered by smallest vertex.
    pub fn induced_components(&self, labels: &[usize]) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v, l) in &self.edges {
            if labels.contains(&l) {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.n + 1];
        for v in 1..=self.n {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[slot[r]].push(v);
        }
        comps
    }

    /// Reads one permutation per label. Fails if some label is not a
    /// matching, so that the relation is not a function.
    pub fn raw_generators(&self) -> Result<Vec<Permutation>, GraphError> {
        let mut images: Vec<Vec<usize>> = vec![(0..self.n).collect(); self.rank];
        for &(u, v, l) in &self.edges {
            let img = &mut images[l];
            if img[u - 1] != u - 1 || img[v - 1] != v - 1 {
                return Err(GraphError::Invalid(format!("label {l} is not a matching")));
            }
            img[u - 1] = v - 1;
            img[v - 1] = u - 1;
        }
        Ok(images
            .into_iter()
            .map(|img| Permutation::from_images(img).expect("matching gives a bijection"))
            .collect())
    }

    /// Deterministic DOT rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph cpr {\n");
        for v in 1..=self.n {
            let _ = writeln!(s, "  {v};");
        }
        for &(u, v, l) in &self.edges {
            let _ = writeln!(s, "  {u} -- {v} [label=\"{l}\"];");
        }
        s.push_str("}\n");
        s
    }

    /// JSON text `{"n":..,"rank":..,"edges":[[u,v,label],..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        serde_json::from_str(text).map_err(|e| GraphError::Invalid(e.to_string()))
    }
}

/// Why a graph fails to be the graph of an sggi.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `vertex` meets more than one edge labeled `label`.
    NotMatching { label: usize, vertex: usize },
    /// A component of the `{i, j}` subgraph (`j >= i + 2`) is not a vertex,
    /// an edge, a double edge, or an alternating square.
    BadComponent {
        labels: (usize, usize),
        component: Vec<usize>,
    },
    /// No edge carries `label`, so that generator would be the identity.
    EmptyLabel { label: usize },
}

/// Checks that every label is a nonempty matching and that every pair of
/// non-adjacent labels induces only the allowed component shapes.
pub fn validate_sggi_graph(g: &CprGraph) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    for label in 0..g.rank {
        let mut deg = vec![0u32; g.n + 1];
        let mut any = false;
        for (u, v) in g.edges_with_label(label) {
            any = true;
            deg[u] += 1;
            deg[v] += 1;
        }
        if !any {
            violations.push(Violation::EmptyLabel { label });
        }
        if let Some(vertex) = (1..=g.n).find(|&v| deg[v] > 1) {
            violations.push(Violation::NotMatching { label, vertex });
        }
    }
    for i in 0..g.rank {
        for j in i + 2..g.rank {
            let edges_in = |comp: &[usize]| {
                g.edges
                    .iter()
                    .filter(|e| (e.2 == i || e.2 == j) && comp.binary_search(&e.0).is_ok())
                    .count()
            };
            for comp in g.induced_components(&[i, j]) {
                let ok = match comp.len() {
                    1 => true,
                    2 => edges_in(&comp) <= 2,
                    4 => edges_in(&comp) == 4,
                    _ => false,
                };
                if !ok {
                    violations.push(Violation::BadComponent {
                        labels: (i, j),
                        component: comp,
                    });
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// The sggi encoded by a valid graph.
pub fn graph_to_generators(g: &CprGraph) -> Result<Sggi, GraphError> {
    if let Err(v) = validate_sggi_graph(g) {
        return Err(GraphError::Invalid(format!("{v:?}")));
    }
    Ok(Sggi::new(g.n, g.raw_generators()?)?)
}

pub fn generators_to_graph(s: &Sggi) -> CprGraph {
    CprGraph::from_generators(s.degree(), s.generators()).expect("sggi generators are involutions")
}

pub fn export_dot(g: &CprGraph) -> String {
    g.to_dot()
}

pub fn induced_components(g: &CprGraph, labels: &[usize]) -> Vec<Vec<usize>> {
    g.induced_components(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(n: usize) -> CprGraph {
        CprGraph::new(n, n - 1, (1..n).map(|i| (i, i + 1, i - 1))).unwrap()
    }

    #[test]
    fn alternating_square_is_valid() {
        let g = CprGraph::new(
            4,
            3,
            [(1, 2, 0), (2, 3, 2), (3, 4, 0), (4, 1, 2), (1, 3, 1)],
        );
        // the diagonal 1-edge makes {0,1} and {1,2} irrelevant to condition 2
        let g = g.unwrap();
        assert_eq!(validate_sggi_graph(&g), Ok(()));
    }

    #[test]
    fn repeated_label_at_vertex_is_not_a_matching() {
        let g = CprGraph::new(3, 1, [(1, 2, 0), (2, 3, 0)]).unwrap();
        let v = validate_sggi_graph(&g).unwrap_err();
        assert_eq!(
            v,
            vec![Violation::NotMatching {
                label: 0,
                vertex: 2
            }]
        );
        assert!(g.raw_generators().is_err());
    }

    #[test]
    fn path_with_labels_0_and_2_breaks_commuting() {
        let g = CprGraph::new(3, 3, [(1, 2, 0), (2, 3, 2), (1, 3, 1)]).unwrap();
        let v = validate_sggi_graph(&g).unwrap_err();
        assert_eq!(
            v,
            vec![Violation::BadComponent {
                labels: (0, 2),
                component: vec![1, 2, 3]
            }]
        );
    }

    #[test]
    fn simplex_round_trip() {
        let g = simplex(5);
        let s = graph_to_generators(&g).unwrap();
        let expected: Vec<_> = (1..5)
            .map(|i| Permutation::from_cycles(5, &[&[i, i + 1]]).unwrap())
            .collect();
        assert_eq!(s.generators(), &expected[..]);
        assert_eq!(generators_to_graph(&s), g);
    }

    #[test]
    fn single_edge_fixes_the_rest() {
        let g = CprGraph::new(3, 1, [(2, 1, 0)]).unwrap();
        let s = graph_to_generators(&g).unwrap();
        assert_eq!(
            s.generator(0),
            &Permutation::from_cycles(3, &[&[1, 2]]).unwrap()
        );
        let two = Sggi::new(
            4,
            vec![Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap()],
        );
        assert_eq!(
            generators_to_graph(&two.unwrap()).edges(),
            &[(1, 2, 0), (3, 4, 0)]
        );
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            CprGraph::new(3, 2, [(1, 2, 2)]),
            Err(GraphError::LabelOutOfRange { label: 2, rank: 2 })
        ));
        assert!(matches!(
            CprGraph::new(3, 2, [(1, 1, 0)]),
            Err(GraphError::Loop { .. })
        ));
        assert!(matches!(
            CprGraph::new(3, 2, [(1, 2, 0), (2, 1, 0)]),
            Err(GraphError::DuplicateEdge { .. })
        ));
        assert!(CprGraph::new(3, 2, [(1, 4, 0)]).is_err());
        let identity = Permutation::identity(3);
        assert!(Sggi::new(3, vec![identity]).is_err());
    }

    #[test]
    fn dot_and_json_are_deterministic() {
        let g = CprGraph::new(3, 2, [(3, 2, 1), (1, 2, 0)]).unwrap();
        assert_eq!(
            g.to_dot(),
            "graph cpr {\n  1;\n  2;\n  3;\n  1 -- 2 [label=\"0\"];\n  2 -- 3 [label=\"1\"];\n}\n"
        );
        assert_eq!(g.to_json(), r#"{"n":3,"rank":2,"edges":[[1,2,0],[2,3,1]]}"#);
        assert_eq!(CprGraph::from_json(&g.to_json()).unwrap(), g);
        let empty = CprGraph::new(2, 0, []).unwrap();
        assert_eq!(empty.to_dot(), "graph cpr {\n  1;\n  2;\n}\n");
    }

    #[test]
    fn components_include_isolated_vertices() {
        let g = simplex(5);
        assert_eq!(
            g.induced_components(&[0, 1]),
            vec![vec![1, 2, 3], vec![4], vec![5]]
        );
        assert!(g.induced_components(&[0]).iter().all(|c| c.len() <= 2));
    }
}
