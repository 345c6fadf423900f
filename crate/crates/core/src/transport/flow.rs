//! Uncapacitated min-cost flow with integer supplies and integer arc costs.
//!
//! Primal-dual successive shortest paths: each phase labels the residual
//! network with Bellman-Ford distances from a super source, then saturates
//! the zero-reduced-cost subnetwork with breadth-first augmenting paths.
//! Shortest-path lengths strictly increase between phases, so the number of
//! phases is bounded by the cost range rather than by the flow value.
//!
//! Node potentials returned with the flow are a feasible, complementary-slack
//! solution of the dual LP `max sum b_v pi_v s.t. pi_v - pi_u <= c_uv`, where
//! `b_v = -supply_v`.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("supplies sum to {0}, expected 0")]
    Unbalanced(i128),
    #[error("demand cannot be routed: only {routed} of {required} units reach the sinks")]
    Infeasible { routed: i128, required: i128 },
    #[error("residual network has a negative cycle")]
    NegativeCycle,
}

const INF_CAP: i128 = i128::MAX / 4;

#[derive(Debug, Clone)]
struct Edge {
    to: usize,
    cap: i128,
    cost: i64,
    rev: usize,
}

/// A directed network with uncapacitated arcs.
#[derive(Debug, Clone, Default)]
pub struct FlowNetwork {
    node_count: usize,
    arcs: Vec<(usize, usize, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowSolution {
    /// Flow on each arc, in insertion order.
    pub flow: Vec<i128>,
    pub cost: i128,
    /// Dual node potentials.
    pub potential: Vec<i64>,
}

impl FlowNetwork {
    pub fn new(node_count: usize) -> Self {
        Self {
            node_count,
            arcs: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Adds an arc and returns its index.
    pub fn add_arc(&mut self, from: usize, to: usize, cost: i64) -> usize {
        assert!(
            from < self.node_count && to < self.node_count,
            "arc endpoint out of range"
        );
        self.arcs.push((from, to, cost));
        self.arcs.len() - 1
    }

    /// Routes `supply[v]` units out of every node with positive supply into
    /// nodes with negative supply at minimum total cost.
    pub fn solve(&self, supply: &[i128]) -> Result<FlowSolution, FlowError> {
        assert_eq!(supply.len(), self.node_count);
        let total: i128 = supply.iter().sum();
        if total != 0 {
            return Err(FlowError::Unbalanced(total));
        }

        let n = self.node_count;
        let source = n;
        let sink = n + 1;
        let mut graph: Vec<Vec<Edge>> = vec![Vec::new(); n + 2];
        let mut handles = Vec::with_capacity(self.arcs.len());
        for &(u, v, c) in &self.arcs {
            handles.push(push_edge(&mut graph, u, v, INF_CAP, c));
        }
        let mut required = 0i128;
        for (v, &s) in supply.iter().enumerate() {
            if s > 0 {
                push_edge(&mut graph, source, v, s, 0);
                required += s;
            } else if s < 0 {
                push_edge(&mut graph, v, sink, -s, 0);
            }
        }

        let mut routed = 0i128;
        loop {
            let dist = bellman_ford(&graph, &[source])?;
            if dist[sink].is_none() {
                break;
            }
            routed += saturate_admissible(&mut graph, &dist, source, sink);
        }
        if routed != required {
            return Err(FlowError::Infeasible { routed, required });
        }

        let flow: Vec<i128> = handles
            .iter()
            .map(|&(u, i)| {
                let e = &graph[u][i];
                graph[e.to][e.rev].cap
            })
            .collect();
        let cost = flow
            .iter()
            .zip(&self.arcs)
            .map(|(&f, &(_, _, c))| f * c as i128)
            .sum();

        // Distances from a virtual root joined to every original node by a
        // zero-cost arc; the residual network is free of negative cycles at
        // optimality, so these are finite and dual feasible.
        let residual: Vec<Vec<Edge>> = graph[..n]
            .iter()
            .map(|list| list.iter().filter(|e| e.to < n).cloned().collect())
            .collect();
        let roots: Vec<usize> = (0..n).collect();
        let potential = bellman_ford(&residual, &roots)?
            .into_iter()
            .map(|d| d.expect("every node is a root"))
            .collect();

        Ok(FlowSolution {
            flow,
            cost,
            potential,
        })
    }
}

fn push_edge(graph: &mut [Vec<Edge>], u: usize, v: usize, cap: i128, cost: i64) -> (usize, usize) {
    let iu = graph[u].len();
    let iv = graph[v].len() + usize::from(u == v);
    graph[u].push(Edge {
        to: v,
        cap,
        cost,
        rev: iv,
    });
    graph[v].push(Edge {
        to: u,
        cap: 0,
        cost: -cost,
        rev: iu,
    });
    (u, iu)
}

/// Queue-based Bellman-Ford over arcs with positive residual capacity.
/// Every node in `roots` starts at distance 0.
fn bellman_ford(graph: &[Vec<Edge>], roots: &[usize]) -> Result<Vec<Option<i64>>, FlowError> {
    let n = graph.len();
    let mut dist: Vec<Option<i64>> = vec![None; n];
    let mut in_queue = vec![false; n];
    let mut hops = vec![0usize; n];
    let mut queue = VecDeque::new();
    for &r in roots {
        dist[r] = Some(0);
        in_queue[r] = true;
        queue.push_back(r);
    }
    while let Some(u) = queue.pop_front() {
        in_queue[u] = false;
        let du = dist[u].expect("queued nodes are labelled");
        for e in &graph[u] {
            if e.cap <= 0 {
                continue;
            }
            let candidate = du + e.cost;
            if dist[e.to].is_none_or(|dv| candidate < dv) {
                dist[e.to] = Some(candidate);
                hops[e.to] = hops[u] + 1;
                if hops[e.to] >= n {
                    return Err(FlowError::NegativeCycle);
                }
                if !in_queue[e.to] {
                    in_queue[e.to] = true;
                    queue.push_back(e.to);
                }
            }
        }
    }
    Ok(dist)
}

/// Edmonds-Karp restricted to arcs that are tight for `dist`. Returns the
/// amount routed in this phase.
fn saturate_admissible(
    graph: &mut [Vec<Edge>],
    dist: &[Option<i64>],
    source: usize,
    sink: usize,
) -> i128 {
    let admissible = |u: usize, e: &Edge| -> bool {
        e.cap > 0 && matches!((dist[u], dist[e.to]), (Some(du), Some(dv)) if du + e.cost == dv)
    };
    let mut routed = 0;
    loop {
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; graph.len()];
        let mut seen = vec![false; graph.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        'bfs: while let Some(u) = queue.pop_front() {
            for (i, e) in graph[u].iter().enumerate() {
                if !seen[e.to] && admissible(u, e) {
                    seen[e.to] = true;
                    parent[e.to] = Some((u, i));
                    if e.to == sink {
                        break 'bfs;
                    }
                    queue.push_back(e.to);
                }
            }
        }
        if !seen[sink] {
            return routed;
        }
        let mut bottleneck = INF_CAP;
        let mut v = sink;
        while let Some((u, i)) = parent[v] {
            bottleneck = bottleneck.min(graph[u][i].cap);
            v = u;
        }
        let mut v = sink;
        while let Some((u, i)) = parent[v] {
            graph[u][i].cap -= bottleneck;
            let (to, rev) = (graph[u][i].to, graph[u][i].rev);
            graph[to][rev].cap += bottleneck;
            v = u;
        }
        routed += bottleneck;
    }
}
