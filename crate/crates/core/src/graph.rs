//! Simple undirected graphs with a cached hop-count metric.

use std::collections::VecDeque;
use std::sync::OnceLock;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex index {index} out of range for a graph on {vertex_count} vertices")]
    IndexOutOfRange { index: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{kind} needs at least {min} vertices, got {got}")]
    TooSmall {
        kind: &'static str,
        min: usize,
        got: usize,
    },
    #[error(
        "family G(0,0,0) leaves x and y with degree 2; at least one of m, n, k must be positive"
    )]
    DegenerateFamily,
    #[error("hexagonal torus {a}x{b} is too small to be locally isometric to the tiling (need even a, b >= 20)")]
    TooSmallForIsometry { a: usize, b: usize },
    #[error("marked pair needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertices {0} and {1} lie in different components")]
    Disconnected(usize, usize),
    #[error("no vertex labelled {0:?}")]
    UnknownLabel(String),
    #[error("label list has {labels} entries for {vertex_count} vertices")]
    LabelCount { labels: usize, vertex_count: usize },
    #[error("graph violates {0}")]
    Invalid(String),
}

/// Hop-count distances between all vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `None` when `v` is not reachable from `u`.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.dist[u * self.n + v];
        (d != Self::UNREACHABLE).then_some(d)
    }

    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }
}

/// An immutable simple graph on vertices `0..vertex_count`.
///
/// Adjacency lists are strictly increasing and symmetric. The all-pairs
/// distance matrix is computed on first use and cached.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    distances: OnceLock<DistanceMatrix>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency && self.labels == other.labels
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds the canonical graph from an edge list. Repeated edges (in either
    /// orientation) collapse into one.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::IndexOutOfRange {
                        index: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self {
            adjacency,
            labels: None,
            distances: OnceLock::new(),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.vertex_count() {
            return Err(GraphError::LabelCount {
                labels: labels.len(),
                vertex_count: self.vertex_count(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn check_index(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::IndexOutOfRange {
                index: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// Hop distances from `source`; unreachable vertices get
    /// [`DistanceMatrix::UNREACHABLE`].
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![DistanceMatrix::UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == DistanceMatrix::UNREACHABLE {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distances(&self) -> &DistanceMatrix {
        self.distances.get_or_init(|| {
            let n = self.vertex_count();
            let mut dist = Vec::with_capacity(n * n);
            for s in 0..n {
                dist.extend(self.bfs(s));
            }
            DistanceMatrix { n, dist }
        })
    }

    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        self.distances().get(u, v)
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0
            || self
                .bfs(0)
                .iter()
                .all(|&d| d != DistanceMatrix::UNREACHABLE)
    }

    /// Vertices in the component of `v`, ascending.
    pub fn component_of(&self, v: usize) -> Vec<usize> {
        self.bfs(v)
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != DistanceMatrix::UNREACHABLE)
            .map(|(u, _)| u)
            .collect()
    }

    /// Largest finite distance from `v`.
    pub fn eccentricity(&self, v: usize) -> u32 {
        self.distances()
            .row(v)
            .iter()
            .copied()
            .filter(|&d| d != DistanceMatrix::UNREACHABLE)
            .max()
            .unwrap_or(0)
    }

    /// Vertices at distance exactly `radius` from `v`.
    pub fn sphere(&self, v: usize, radius: u32) -> Vec<usize> {
        self.bfs(v)
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == radius)
            .map(|(u, _)| u)
            .collect()
    }

    /// Checks simplicity, sortedness and symmetry of the adjacency lists.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for (u, list) in self.adjacency.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(GraphError::Invalid(format!(
                    "sorted adjacency at vertex {u}"
                )));
            }
            for &v in list {
                if v >= n {
                    return Err(GraphError::IndexOutOfRange {
                        index: v,
                        vertex_count: n,
                    });
                }
                if v == u {
                    return Err(GraphError::SelfLoop(u));
                }
                if !self.is_adjacent(v, u) {
                    return Err(GraphError::Invalid(format!("symmetry on edge ({u}, {v})")));
                }
            }
        }
        Ok(())
    }
}

/// A graph with two designated distinct vertices in one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedPair {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
}

impl MarkedPair {
    pub fn new(graph: Graph, x: usize, y: usize) -> Result<Self, GraphError> {
        graph.check_index(x)?;
        graph.check_index(y)?;
        if x == y {
            return Err(GraphError::SameVertex(x));
        }
        if graph.dist(x, y).is_none() {
            return Err(GraphError::Disconnected(x, y));
        }
        Ok(Self { graph, x, y })
    }

    pub fn delta(&self) -> u32 {
        self.graph
            .dist(self.x, self.y)
            .expect("marked pair is connected")
    }

    /// The same graph with a different marked pair.
    pub fn remark(&self, x: usize, y: usize) -> Result<Self, GraphError> {
        Self::new(self.graph.clone(), x, y)
    }
}
