//! Graph generators: standard fixtures, the three-path family with
//! prescribed critical points, truncated regular trees, the hexagonal torus,
//! Cartesian products and seeded random connected graphs.

use rand::Rng;

use crate::graph::{Graph, GraphError, MarkedPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasicKind {
    Path,
    Cycle,
    Complete,
    Star,
}

impl BasicKind {
    pub fn name(self) -> &'static str {
        match self {
            BasicKind::Path => "path",
            BasicKind::Cycle => "cycle",
            BasicKind::Complete => "complete",
            BasicKind::Star => "star",
        }
    }
}

pub fn basic(kind: BasicKind, n: usize) -> Result<Graph, GraphError> {
    let min = if kind == BasicKind::Cycle { 3 } else { 1 };
    if n < min {
        return Err(GraphError::TooSmall {
            kind: kind.name(),
            min,
            got: n,
        });
    }
    let edges: Vec<(usize, usize)> = match kind {
        BasicKind::Path => (1..n).map(|i| (i - 1, i)).collect(),
        BasicKind::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        BasicKind::Complete => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
        BasicKind::Star => (1..n).map(|i| (0, i)).collect(),
    };
    Graph::new(n, &edges)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    basic(BasicKind::Path, n)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    basic(BasicKind::Cycle, n)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    basic(BasicKind::Complete, n)
}

pub fn star(n: usize) -> Result<Graph, GraphError> {
    basic(BasicKind::Star, n)
}

/// The tree `x - w - y` with two pendant vertices `z1`, `z2` hanging off `y`.
/// The marked pair is `(x, w)`.
pub fn figure3() -> MarkedPair {
    let labels = ["x", "w", "y", "z1", "z2"].map(String::from).to_vec();
    let graph = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (2, 4)])
        .and_then(|g| g.with_labels(labels))
        .expect("static graph is valid");
    MarkedPair::new(graph, 0, 1).expect("x and w are adjacent")
}

/// Family `G(m, n, k)`: `x` and `y` joined by two length-3 paths through
/// `x0 - y0` and `x1 - y1`, `m` length-5 paths `x - x'_i - v_i - w_i - y'_i - y`,
/// `n` length-4 paths `x - x''_i - z_i - y''_i - y` and `k` length-3 paths
/// `x - x'''_i - y'''_i - y`, plus the cross edges `x0 - y*_i` and
/// `x*_i - y1` for every extra path.
///
/// Vertex order: `x, y, x0, x1, y0, y1`, then the `m` blocks
/// `(x'_i, v_i, w_i, y'_i)`, the `n` blocks `(x''_i, z_i, y''_i)` and the `k`
/// blocks `(x'''_i, y'''_i)`. Both marked vertices have degree `2 + m + n + k`
/// and lie at distance 3.
pub fn family(m: usize, n: usize, k: usize) -> Result<MarkedPair, GraphError> {
    if m + n + k == 0 {
        return Err(GraphError::DegenerateFamily);
    }
    const X: usize = 0;
    const Y: usize = 1;
    const X0: usize = 2;
    const X1: usize = 3;
    const Y0: usize = 4;
    const Y1: usize = 5;

    let mut labels: Vec<String> = ["x", "y", "x0", "x1", "y0", "y1"]
        .map(String::from)
        .to_vec();
    let mut edges = vec![(X, X0), (X0, Y0), (Y0, Y), (X, X1), (X1, Y1), (Y1, Y)];
    let push = |labels: &mut Vec<String>, name: String| {
        labels.push(name);
        labels.len() - 1
    };

    for i in 1..=m {
        let xp = push(&mut labels, format!("x'{i}"));
        let v = push(&mut labels, format!("v{i}"));
        let w = push(&mut labels, format!("w{i}"));
        let yp = push(&mut labels, format!("y'{i}"));
        edges.extend([
            (X, xp),
            (xp, v),
            (v, w),
            (w, yp),
            (yp, Y),
            (X0, yp),
            (xp, Y1),
        ]);
    }
    for i in 1..=n {
        let xpp = push(&mut labels, format!("x''{i}"));
        let z = push(&mut labels, format!("z{i}"));
        let ypp = push(&mut labels, format!("y''{i}"));
        edges.extend([(X, xpp), (xpp, z), (z, ypp), (ypp, Y), (X0, ypp), (xpp, Y1)]);
    }
    for i in 1..=k {
        let xppp = push(&mut labels, format!("x'''{i}"));
        let yppp = push(&mut labels, format!("y'''{i}"));
        edges.extend([(X, xppp), (xppp, yppp), (yppp, Y), (X0, yppp), (xppp, Y1)]);
    }

    let graph = Graph::new(labels.len(), &edges)?.with_labels(labels)?;
    MarkedPair::new(graph, X, Y)
}

/// Ball of radius `radius` around the root of the infinite `degree`-regular
/// tree. The root is vertex 0; vertices are numbered breadth-first.
#[derive(Debug, Clone)]
pub struct TreeBall {
    pub graph: Graph,
    pub root: usize,
    pub degree: usize,
    pub radius: usize,
}

pub fn tree_ball(degree: usize, radius: usize) -> Result<TreeBall, GraphError> {
    if degree < 2 {
        return Err(GraphError::TooSmall {
            kind: "regular tree degree",
            min: 2,
            got: degree,
        });
    }
    if radius < 1 {
        return Err(GraphError::TooSmall {
            kind: "tree radius",
            min: 1,
            got: radius,
        });
    }
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    let mut count = 1usize;
    for depth in 0..radius {
        let children = if depth == 0 { degree } else { degree - 1 };
        let mut next = Vec::with_capacity(frontier.len() * children);
        for &parent in &frontier {
            for _ in 0..children {
                edges.push((parent, count));
                next.push(count);
                count += 1;
            }
        }
        frontier = next;
    }
    Ok(TreeBall {
        graph: Graph::new(count, &edges)?,
        root: 0,
        degree,
        radius,
    })
}

impl TreeBall {
    /// Marks `(x, y)` after checking that every vertex within distance 1 of
    /// either endpoint has full degree, so lazy-walk measures and the
    /// geodesics between their supports coincide with the infinite tree.
    pub fn marked_pair(&self, x: usize, y: usize) -> Result<MarkedPair, GraphError> {
        let pair = MarkedPair::new(self.graph.clone(), x, y)?;
        for v in [x, y] {
            for &u in std::iter::once(&v).chain(self.graph.neighbors(v)) {
                if self.graph.degree(u) != self.degree {
                    return Err(GraphError::Invalid(format!(
                        "tree truncation: vertex {u} near the pair is a leaf"
                    )));
                }
            }
        }
        Ok(pair)
    }

    /// First vertex (in breadth-first numbering) at the given depth.
    pub fn first_at_depth(&self, depth: usize) -> usize {
        // depth-first along first children: 0 -> 1 -> (d+1) -> ...
        let mut v = self.root;
        for _ in 0..depth {
            v = *self
                .graph
                .neighbors(v)
                .iter()
                .find(|&&u| u > v)
                .expect("depth within radius");
        }
        v
    }
}

/// The pair (root, a vertex at depth `distance`) inside a ball of radius
/// `distance + 2`, which is deep enough for exact curvature computations.
pub fn tree_pair(degree: usize, distance: usize) -> Result<MarkedPair, GraphError> {
    let ball = tree_ball(degree, distance + 2)?;
    let y = ball.first_at_depth(distance);
    ball.marked_pair(ball.root, y)
}

/// Brick-wall hexagonal tiling on an `a x b` torus.
///
/// Vertex `(i, j)` has index `i * b + j` and is joined to `(i, j +- 1)`, and to
/// `(i + 1, j)` when `i + j` is even or `(i - 1, j)` when it is odd.
pub fn hex_torus(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a < 20 || b < 20 || !a.is_multiple_of(2) || !b.is_multiple_of(2) {
        return Err(GraphError::TooSmallForIsometry { a, b });
    }
    Ok(brick_wall(a, b))
}

pub(crate) fn brick_wall(a: usize, b: usize) -> Graph {
    let idx = |i: usize, j: usize| (i % a) * b + (j % b);
    let mut edges = Vec::with_capacity(a * b * 3 / 2);
    for i in 0..a {
        for j in 0..b {
            edges.push((idx(i, j), idx(i, j + 1)));
            if (i + j) % 2 == 0 {
                edges.push((idx(i, j), idx(i + 1, j)));
            }
        }
    }
    Graph::new(a * b, &edges).expect("brick wall edges are in range")
}

/// Cartesian product with row-major indexing: `(w, z)` is `w * |H| + z`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.vertex_count();
    let idx = |w: usize, z: usize| w * nh + z;
    let mut edges = Vec::new();
    for w in 0..g.vertex_count() {
        for (z1, z2) in h.edges() {
            edges.push((idx(w, z1), idx(w, z2)));
        }
    }
    for (w1, w2) in g.edges() {
        for z in 0..nh {
            edges.push((idx(w1, z), idx(w2, z)));
        }
    }
    let product = Graph::new(g.vertex_count() * nh, &edges).expect("product indices are in range");
    match (g.labels(), h.labels()) {
        (Some(lg), Some(lh)) => {
            let labels = lg
                .iter()
                .flat_map(|a| lh.iter().map(move |b| format!("({a},{b})")))
                .collect();
            product.with_labels(labels).expect("label count matches")
        }
        _ => product,
    }
}

/// Random connected graph: a random recursive spanning tree plus every other
/// pair independently with probability `extra_edge_probability`.
pub fn random_connected<R: Rng + ?Sized>(
    rng: &mut R,
    vertex_count: usize,
    extra_edge_probability: f64,
) -> Graph {
    let mut edges = Vec::new();
    for v in 1..vertex_count {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..vertex_count {
        for v in u + 1..vertex_count {
            if rng.gen_bool(extra_edge_probability) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(vertex_count, &edges).expect("indices are in range")
}
