use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{Measure, TransportError};
use crate::graph::Graph;
use crate::rational::{common_denominator, to_i128, Rational};

/// Largest graph the enumeration oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 12;

/// W1 by exhaustive search over integer-valued 1-Lipschitz potentials.
///
/// The potential is pinned to 0 at the lowest-index vertex `a` of `mu`'s
/// support; vertices are assigned in breadth-first order from `a`, each
/// within `[-d(v, a), d(v, a)]` and within 1 of every already assigned
/// neighbour. Integer potentials suffice for the supremum, so the maximum
/// found is the exact distance. Independent of the flow solver.
pub fn oracle_w1_enum(g: &Graph, mu: &Measure, nu: &Measure) -> Result<Rational, TransportError> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(TransportError::TooLargeForOracle {
            vertices: n,
            limit: ORACLE_MAX_VERTICES,
        });
    }
    let anchor = mu
        .support()
        .next()
        .ok_or_else(|| TransportError::InvalidMeasure("empty source measure".to_string()))?;
    let dist_from_anchor = g.bfs(anchor);
    if mu
        .support()
        .chain(nu.support())
        .any(|v| dist_from_anchor[v] == crate::graph::DistanceMatrix::UNREACHABLE)
    {
        return Err(TransportError::DisconnectedSupports);
    }

    let mut weights: BTreeMap<usize, Rational> = BTreeMap::new();
    for (v, m) in mu.iter() {
        *weights.entry(v).or_default() += m;
    }
    for (v, m) in nu.iter() {
        *weights.entry(v).or_default() -= m;
    }
    let scale = common_denominator(weights.values());
    let scale_r = Rational::from_integer(scale.clone());
    let mut weight = vec![0i128; n];
    for (&v, w) in &weights {
        weight[v] = to_i128(&(w * &scale_r)).ok_or(TransportError::Overflow)?;
    }

    let mut order: Vec<usize> = (0..n)
        .filter(|&v| dist_from_anchor[v] != crate::graph::DistanceMatrix::UNREACHABLE)
        .collect();
    order.sort_by_key(|&v| (dist_from_anchor[v], v));

    let mut search = Search {
        g,
        order: &order,
        radius: &dist_from_anchor,
        weight: &weight,
        phi: vec![None; n],
        best: i128::MIN,
    };
    search.phi[anchor] = Some(0);
    search.descend(1, 0);
    Ok(Rational::new(BigInt::from(search.best), scale))
}

struct Search<'a> {
    g: &'a Graph,
    order: &'a [usize],
    radius: &'a [u32],
    weight: &'a [i128],
    phi: Vec<Option<i64>>,
    best: i128,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize, partial: i128) {
        if depth == self.order.len() {
            self.best = self.best.max(partial);
            return;
        }
        let v = self.order[depth];
        let r = self.radius[v] as i64;
        let (mut lo, mut hi) = (-r, r);
        for &u in self.g.neighbors(v) {
            if let Some(pu) = self.phi[u] {
                lo = lo.max(pu - 1);
                hi = hi.min(pu + 1);
            }
        }
        for value in lo..=hi {
            self.phi[v] = Some(value);
            self.descend(depth + 1, partial + value as i128 * self.weight[v]);
        }
        self.phi[v] = None;
    }
}
