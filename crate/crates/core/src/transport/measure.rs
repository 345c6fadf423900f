use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::TransportError;
use crate::graph::Graph;
use crate::rational::Rational;

/// A finitely supported probability measure on the vertices of a graph.
///
/// Only strictly positive masses are stored and they sum to exactly one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    masses: BTreeMap<usize, Rational>,
}

impl Measure {
    /// Validates and wraps a mass table. Zero entries are dropped.
    pub fn new(masses: BTreeMap<usize, Rational>) -> Result<Self, TransportError> {
        let mut total = Rational::zero();
        let mut kept = BTreeMap::new();
        for (v, m) in masses {
            if m.is_negative() {
                return Err(TransportError::InvalidMeasure(format!(
                    "negative mass at vertex {v}"
                )));
            }
            if m.is_zero() {
                continue;
            }
            total += &m;
            kept.insert(v, m);
        }
        if !total.is_one() {
            return Err(TransportError::InvalidMeasure(format!(
                "total mass {total} != 1"
            )));
        }
        Ok(Self { masses: kept })
    }

    pub fn dirac(v: usize) -> Self {
        Self {
            masses: BTreeMap::from([(v, Rational::one())]),
        }
    }

    pub fn mass(&self, v: usize) -> Rational {
        self.masses.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.masses.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.masses.iter().map(|(&v, m)| (v, m))
    }

    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }
}

/// The lazy random-walk measure at `x`: mass `p` stays at `x`, the rest is
/// spread evenly over the neighbours.
pub fn lazy_measure(g: &Graph, x: usize, p: &Rational) -> Result<Measure, TransportError> {
    g.check_index(x)?;
    if p.is_negative() || p > &Rational::one() {
        return Err(TransportError::BadIdleness(p.clone()));
    }
    let degree = g.degree(x);
    let mut masses = BTreeMap::new();
    if !p.is_zero() {
        masses.insert(x, p.clone());
    }
    if !p.is_one() {
        if degree == 0 {
            return Err(TransportError::IsolatedVertex(x));
        }
        let share = (Rational::one() - p) / Rational::from_integer(degree.into());
        for &w in g.neighbors(x) {
            masses.insert(w, share.clone());
        }
    }
    Ok(Measure { masses })
}
