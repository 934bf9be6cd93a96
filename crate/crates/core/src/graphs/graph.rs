use std::fmt;

use serde::{Deserialize, Serialize};

/// Which admissibility constraints a graph satisfies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// No tadpoles and no parallel edges.
    Directed,
    /// Additionally acyclic, and no edge starts at an external vertex.
    Oriented,
    /// Additionally every internal vertex has odd out-degree and valence at least 3.
    #[default]
    OrientedOdd,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range 1..={count}")]
    VertexOutOfRange { vertex: u8, count: usize },
    #[error("tadpole at vertex {0}")]
    Tadpole(u8),
    #[error("parallel edges {0} -> {1}")]
    Parallel(u8, u8),
    #[error("graph has a directed cycle")]
    DirectedCycle,
    #[error("edge starts at external vertex {0}")]
    ExternalSource(u8),
    #[error("internal vertex {vertex} has even out-degree {degree}")]
    EvenOutDegree { vertex: u8, degree: usize },
    #[error("internal vertex {vertex} has valence {valence}, need at least 3")]
    LowValence { vertex: u8, valence: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not internally connected")]
    NotInternallyConnected,
    #[error("graph has external vertices")]
    HasExternals,
    #[error("operation needs regime {want:?}, graph has {have:?}")]
    Regime { want: Regime, have: Regime },
    #[error("{n_ext} external and {n_int} internal vertices exceed the limits {max_ext} and {max_int}")]
    Bounds { n_ext: usize, n_int: usize, max_ext: usize, max_int: usize },
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

/// Externals are numbered `1..=n_ext`, internals `n_ext+1..=n_ext+n_int`.
/// The order of `edges` is the orientation: edges have odd degree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedGraph {
    pub(crate) n_ext: usize,
    pub(crate) n_int: usize,
    pub(crate) edges: Vec<(u8, u8)>,
    pub(crate) regime: Regime,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    ext: usize,
    int: usize,
    edges: Vec<[u8; 2]>,
    #[serde(default)]
    regime: Regime,
}

impl DirectedGraph {
    pub fn new(n_ext: usize, n_int: usize, edges: Vec<(u8, u8)>, regime: Regime) -> Result<Self, GraphError> {
        let g = DirectedGraph { n_ext, n_int, edges, regime };
        g.validate()?;
        Ok(g)
    }

    pub fn n_ext(&self) -> usize {
        self.n_ext
    }

    pub fn n_int(&self) -> usize {
        self.n_int
    }

    pub fn edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn vertex_count(&self) -> usize {
        self.n_ext + self.n_int
    }

    pub fn is_internal(&self, v: u8) -> bool {
        v as usize > self.n_ext
    }

    pub fn out_degree(&self, v: u8) -> usize {
        self.edges.iter().filter(|e| e.0 == v).count()
    }

    pub fn valence(&self, v: u8) -> usize {
        self.edges.iter().filter(|e| e.0 == v || e.1 == v).count()
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let count = self.vertex_count();
        if count > u8::MAX as usize {
            return Err(GraphError::VertexOutOfRange { vertex: u8::MAX, count });
        }
        for (i, &(s, t)) in self.edges.iter().enumerate() {
            for v in [s, t] {
                if v == 0 || v as usize > count {
                    return Err(GraphError::VertexOutOfRange { vertex: v, count });
                }
            }
            if s == t {
                return Err(GraphError::Tadpole(s));
            }
            if self.edges[..i].contains(&(s, t)) {
                return Err(GraphError::Parallel(s, t));
            }
        }
        if self.regime == Regime::Directed {
            return Ok(());
        }
        if let Some(&(s, _)) = self.edges.iter().find(|e| !self.is_internal(e.0)) {
            return Err(GraphError::ExternalSource(s));
        }
        if !is_acyclic(count, &self.edges) {
            return Err(GraphError::DirectedCycle);
        }
        if self.regime == Regime::OrientedOdd {
            for v in self.internal_vertices() {
                let degree = self.out_degree(v);
                if degree.is_multiple_of(2) {
                    return Err(GraphError::EvenOutDegree { vertex: v, degree });
                }
                let valence = self.valence(v);
                if valence < 3 {
                    return Err(GraphError::LowValence { vertex: v, valence });
                }
            }
        }
        Ok(())
    }

    pub fn internal_vertices(&self) -> impl Iterator<Item = u8> {
        (self.n_ext + 1..=self.n_ext + self.n_int).map(|v| v as u8)
    }

    /// Connected after deleting the external vertices (and false with no internal vertices).
    pub fn is_internally_connected(&self) -> bool {
        internally_connected(self.n_ext, self.n_int, &self.edges)
    }

    /// Connected as an undirected graph on all vertices.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && components(n, self.edges.iter().copied(), |_| true) == 1
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let j: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        DirectedGraph::new(j.ext, j.int, j.edges.iter().map(|e| (e[0], e[1])).collect(), j.regime)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json()).expect("graph serializes")
    }

    fn json(&self) -> GraphJson {
        GraphJson {
            ext: self.n_ext,
            int: self.n_int,
            edges: self.edges.iter().map(|&(s, t)| [s, t]).collect(),
            regime: self.regime,
        }
    }
}

impl Serialize for DirectedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.json().serialize(s)
    }
}

impl fmt::Display for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}[", self.n_ext, self.n_int)?;
        for (i, (s, t)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}>{t}")?;
        }
        write!(f, "]")
    }
}

/// Number of undirected components among the vertices `1..=n` selected by `keep`.
pub(crate) fn components(n: usize, edges: impl Iterator<Item = (u8, u8)>, keep: impl Fn(u8) -> bool) -> usize {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (s, t) in edges {
        if keep(s) && keep(t) {
            let (a, b) = (find(&mut parent, s as usize), find(&mut parent, t as usize));
            parent[a] = b;
        }
    }
    (1..=n).filter(|&v| keep(v as u8) && find(&mut parent, v) == v).count()
}

pub(crate) fn internally_connected(n_ext: usize, n_int: usize, edges: &[(u8, u8)]) -> bool {
    n_int > 0 && components(n_ext + n_int, edges.iter().copied(), |v| v as usize > n_ext) == 1
}

/// Kahn's algorithm on vertices `1..=n`.
pub(crate) fn is_acyclic(n: usize, edges: &[(u8, u8)]) -> bool {
    let mut indeg = vec![0usize; n + 1];
    for &(_, t) in edges {
        indeg[t as usize] += 1;
    }
    let mut stack: Vec<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &(s, t) in edges {
            if s as usize == v {
                indeg[t as usize] -= 1;
                if indeg[t as usize] == 0 {
                    stack.push(t as usize);
                }
            }
        }
    }
    seen == n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_inadmissible() {
        let odd = Regime::OrientedOdd;
        assert_eq!(DirectedGraph::new(3, 1, vec![(4, 4)], odd), Err(GraphError::Tadpole(4)));
        assert_eq!(
            DirectedGraph::new(2, 2, vec![(3, 4), (3, 4), (3, 1)], Regime::Directed),
            Err(GraphError::Parallel(3, 4))
        );
        assert_eq!(DirectedGraph::new(3, 1, vec![(1, 4)], Regime::Oriented), Err(GraphError::ExternalSource(1)));
        assert_eq!(DirectedGraph::new(0, 2, vec![(1, 2), (2, 1)], Regime::Oriented), Err(GraphError::DirectedCycle));
        assert_eq!(
            DirectedGraph::new(3, 1, vec![(4, 1), (4, 2)], odd),
            Err(GraphError::EvenOutDegree { vertex: 4, degree: 2 })
        );
        assert_eq!(DirectedGraph::new(3, 1, vec![(4, 1)], odd), Err(GraphError::LowValence { vertex: 4, valence: 1 }));
        assert!(DirectedGraph::new(3, 1, vec![(4, 1), (4, 2), (4, 3)], odd).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let g = DirectedGraph::from_json(r#"{"ext":3,"int":1,"edges":[[4,1],[4,2],[4,3]]}"#).unwrap();
        assert_eq!(g.regime(), Regime::OrientedOdd);
        assert_eq!(DirectedGraph::from_json(&g.to_json()).unwrap(), g);
        assert!(matches!(DirectedGraph::from_json("{"), Err(GraphError::Json(_))));
    }

    #[test]
    fn connectivity() {
        let g = DirectedGraph::new(4, 2, vec![(5, 1), (5, 2), (5, 3), (6, 2), (6, 3), (6, 4)], Regime::OrientedOdd)
            .unwrap();
        assert!(!g.is_internally_connected());
        assert!(g.is_connected());
    }
}
