use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::flow::FlowNetwork;
use super::{Measure, TransportError};
use crate::graph::Graph;
use crate::rational::{self, common_denominator, to_i128, Rational};

/// A coupling of two measures, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportPlan {
    pub entries: BTreeMap<(usize, usize), Rational>,
    pub source: Measure,
    pub target: Measure,
}

impl TransportPlan {
    pub fn cost(&self, g: &Graph) -> Option<Rational> {
        let mut total = Rational::zero();
        for (&(u, v), m) in &self.entries {
            total += m * Rational::from_integer(g.dist(u, v)?.into());
        }
        Some(total)
    }
}

/// A real-valued function on (part of) the vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Potential {
    pub values: BTreeMap<usize, Rational>,
}

impl Potential {
    pub fn get(&self, v: usize) -> Option<&Rational> {
        self.values.get(&v)
    }

    /// `sum phi(v) (mu(v) - nu(v))`, or `None` if a support vertex has no value.
    pub fn objective(&self, mu: &Measure, nu: &Measure) -> Option<Rational> {
        let mut total = Rational::zero();
        for (v, m) in mu.iter() {
            total += self.values.get(&v)? * m;
        }
        for (v, m) in nu.iter() {
            total -= self.values.get(&v)? * m;
        }
        Some(total)
    }

    /// Edges `(u, v)` with both values defined and `|phi(u) - phi(v)| > 1`.
    pub fn lipschitz_violations(&self, g: &Graph) -> Vec<(usize, usize)> {
        let one = Rational::from_integer(1.into());
        g.edges()
            .filter(|&(u, v)| match (self.values.get(&u), self.values.get(&v)) {
                (Some(a), Some(b)) => (a - b).abs() > one,
                _ => false,
            })
            .collect()
    }

    pub fn is_lipschitz(&self, g: &Graph) -> bool {
        self.lipschitz_violations(g).is_empty()
    }

    pub fn is_integer_valued(&self) -> bool {
        self.values.values().all(rational::is_integer)
    }

    pub fn floor(&self) -> Potential {
        self.map(rational::floor)
    }

    pub fn ceil(&self) -> Potential {
        self.map(rational::ceil)
    }

    pub fn shifted(&self, by: &Rational) -> Potential {
        self.map(|r| r + by)
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> Potential {
        Potential {
            values: self.values.iter().map(|(&v, r)| (v, f(r))).collect(),
        }
    }
}

/// A primal plan and a dual potential with equal objective values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct W1Certificate {
    pub value: Rational,
    pub plan: TransportPlan,
    pub potential: Potential,
}

/// Exact 1-Wasserstein distance with plan and potential. The potential is
/// normalised to vanish at the lowest-index vertex of `nu`'s support.
pub fn w1(g: &Graph, mu: &Measure, nu: &Measure) -> Result<W1Certificate, TransportError> {
    let anchor = nu
        .support()
        .next()
        .ok_or_else(|| TransportError::InvalidMeasure("empty target measure".to_string()))?;
    w1_anchored(g, mu, nu, anchor)
}

/// Like [`w1`] but normalises the potential so that `phi(anchor) = 0`.
/// The anchor must share a component with the supports.
pub fn w1_anchored(
    g: &Graph,
    mu: &Measure,
    nu: &Measure,
    anchor: usize,
) -> Result<W1Certificate, TransportError> {
    g.check_index(anchor)?;
    for v in mu.support().chain(nu.support()) {
        g.check_index(v)?;
    }
    let dist = g.distances();
    let component = g.component_of(anchor);
    let in_component: BTreeSet<usize> = component.iter().copied().collect();
    if !mu
        .support()
        .chain(nu.support())
        .all(|v| in_component.contains(&v))
    {
        return Err(TransportError::DisconnectedSupports);
    }

    if mu == nu {
        let potential = Potential {
            values: component.iter().map(|&v| (v, Rational::zero())).collect(),
        };
        return Ok(W1Certificate {
            value: Rational::zero(),
            plan: TransportPlan {
                entries: mu.iter().map(|(v, m)| ((v, v), m.clone())).collect(),
                source: mu.clone(),
                target: nu.clone(),
            },
            potential,
        });
    }

    let scale = common_denominator(mu.iter().chain(nu.iter()).map(|(_, m)| m));
    let scaled = |m: &Rational| -> Result<i128, TransportError> {
        to_i128(&(m * Rational::from_integer(scale.clone()))).ok_or(TransportError::Overflow)
    };

    let sources: Vec<(usize, &Rational)> = mu.iter().collect();
    let sinks: Vec<(usize, &Rational)> = nu.iter().collect();
    let s = sources.len();
    let mut network = FlowNetwork::new(s + sinks.len());
    let mut arc_ends = Vec::with_capacity(s * sinks.len());
    for (i, &(u, _)) in sources.iter().enumerate() {
        for (j, &(v, _)) in sinks.iter().enumerate() {
            let d = dist.get(u, v).expect("same component") as i64;
            network.add_arc(i, s + j, d);
            arc_ends.push((u, v));
        }
    }
    let mut supply = Vec::with_capacity(network.node_count());
    for (_, m) in &sources {
        supply.push(scaled(m)?);
    }
    for (_, m) in &sinks {
        supply.push(-scaled(m)?);
    }
    let solution = network.solve(&supply)?;

    let unscale = |x: i128| Rational::new(BigInt::from(x), scale.clone());
    let entries: BTreeMap<(usize, usize), Rational> = solution
        .flow
        .iter()
        .zip(&arc_ends)
        .filter(|(&f, _)| f > 0)
        .map(|(&f, &ends)| (ends, unscale(f)))
        .collect();
    let value = unscale(solution.cost);

    // c-transform of the sink duals: phi(u) = min_t d(u, t) - pi_t is
    // 1-Lipschitz on the whole component and attains the optimum.
    let sink_duals: Vec<(usize, i64)> = sinks
        .iter()
        .enumerate()
        .map(|(j, &(v, _))| (v, solution.potential[s + j]))
        .collect();
    let raw: BTreeMap<usize, i64> = component
        .iter()
        .map(|&u| {
            let phi = sink_duals
                .iter()
                .map(|&(t, pi)| dist.raw(u, t) as i64 - pi)
                .min()
                .expect("target support is non-empty");
            (u, phi)
        })
        .collect();
    let offset = raw[&anchor];
    let potential = Potential {
        values: raw
            .into_iter()
            .map(|(v, phi)| (v, Rational::from_integer((phi - offset).into())))
            .collect(),
    };
    debug_assert_eq!(potential.objective(mu, nu).as_ref(), Some(&value));

    Ok(W1Certificate {
        value,
        plan: TransportPlan {
            entries,
            source: mu.clone(),
            target: nu.clone(),
        },
        potential,
    })
}

/// A single failed condition in [`check_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NonPositiveEntry {
        from: usize,
        to: usize,
    },
    RowSum {
        vertex: usize,
        expected: Rational,
        actual: Rational,
    },
    ColumnSum {
        vertex: usize,
        expected: Rational,
        actual: Rational,
    },
    Unreachable {
        from: usize,
        to: usize,
    },
    PrimalValue {
        claimed: Rational,
        plan_cost: Rational,
    },
    MissingPotential {
        vertex: usize,
    },
    Lipschitz {
        u: usize,
        v: usize,
    },
    DualityGap {
        plan_cost: Rational,
        dual_objective: Rational,
    },
    ComplementarySlackness {
        from: usize,
        to: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CertificateReport {
    pub violations: Vec<Violation>,
}

impl CertificateReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks marginals, the 1-Lipschitz condition, zero duality gap and
/// complementary slackness.
pub fn check_certificate(g: &Graph, cert: &W1Certificate) -> CertificateReport {
    let mut violations = Vec::new();
    let plan = &cert.plan;
    let mut rows: BTreeMap<usize, Rational> = BTreeMap::new();
    let mut cols: BTreeMap<usize, Rational> = BTreeMap::new();
    let mut plan_cost = Rational::zero();
    for (&(u, v), m) in &plan.entries {
        if !m.is_positive() {
            violations.push(Violation::NonPositiveEntry { from: u, to: v });
        }
        *rows.entry(u).or_default() += m;
        *cols.entry(v).or_default() += m;
        match g.dist(u, v) {
            Some(d) => plan_cost += m * Rational::from_integer(d.into()),
            None => violations.push(Violation::Unreachable { from: u, to: v }),
        }
    }
    let marginal = |measure: &Measure, sums: &BTreeMap<usize, Rational>| {
        let vertices: BTreeSet<usize> = measure.support().chain(sums.keys().copied()).collect();
        vertices
            .into_iter()
            .filter_map(|v| {
                let expected = measure.mass(v);
                let actual = sums.get(&v).cloned().unwrap_or_default();
                (expected != actual).then_some((v, expected, actual))
            })
            .collect::<Vec<_>>()
    };
    for (vertex, expected, actual) in marginal(&plan.source, &rows) {
        violations.push(Violation::RowSum {
            vertex,
            expected,
            actual,
        });
    }
    for (vertex, expected, actual) in marginal(&plan.target, &cols) {
        violations.push(Violation::ColumnSum {
            vertex,
            expected,
            actual,
        });
    }
    if plan_cost != cert.value {
        violations.push(Violation::PrimalValue {
            claimed: cert.value.clone(),
            plan_cost: plan_cost.clone(),
        });
    }

    let phi = &cert.potential;
    for v in plan.source.support().chain(plan.target.support()) {
        if phi.get(v).is_none() {
            violations.push(Violation::MissingPotential { vertex: v });
        }
    }
    for (u, v) in phi.lipschitz_violations(g) {
        violations.push(Violation::Lipschitz { u, v });
    }
    if let Some(dual) = phi.objective(&plan.source, &plan.target) {
        if dual != plan_cost {
            violations.push(Violation::DualityGap {
                plan_cost,
                dual_objective: dual,
            });
        }
    }
    for &(u, v) in plan.entries.keys() {
        if let (Some(a), Some(b), Some(d)) = (phi.get(u), phi.get(v), g.dist(u, v)) {
            if a - b != Rational::from_integer(d.into()) {
                violations.push(Violation::ComplementarySlackness { from: u, to: v });
            }
        }
    }
    CertificateReport { violations }
}

/// Rounds an optimal potential down to integers without losing optimality.
///
/// Vertices joined by positive plan entries form components of a support
/// graph; complementary slackness forces each component to share one
/// fractional part, and no mass crosses components, so flooring keeps the
/// dual objective unchanged.
pub fn integerize_potential(g: &Graph, cert: &W1Certificate) -> Result<Potential, TransportError> {
    let phi = &cert.potential;
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    fn find(parent: &mut BTreeMap<usize, usize>, v: usize) -> usize {
        let p = *parent.entry(v).or_insert(v);
        if p == v {
            return v;
        }
        let root = find(parent, p);
        parent.insert(v, root);
        root
    }
    for &(u, v) in cert.plan.entries.keys() {
        let (a, b) = match (phi.get(u), phi.get(v)) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(TransportError::NotOptimalInput(format!(
                    "potential undefined on plan entry ({u}, {v})"
                )))
            }
        };
        let d = g.dist(u, v).ok_or(TransportError::DisconnectedSupports)?;
        if a - b != Rational::from_integer(d.into()) {
            return Err(TransportError::NotOptimalInput(format!(
                "complementary slackness fails on ({u}, {v})"
            )));
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent.insert(ru.max(rv), ru.min(rv));
        }
    }
    let mut fractional: BTreeMap<usize, Rational> = BTreeMap::new();
    let vertices: Vec<usize> = parent.keys().copied().collect();
    for v in vertices {
        let root = find(&mut parent, v);
        let f = rational::frac(&phi.values[&v]);
        match fractional.get(&root) {
            Some(existing) if *existing != f => {
                return Err(TransportError::NotOptimalInput(format!(
                    "fractional parts differ inside the support component of {v}"
                )))
            }
            Some(_) => {}
            None => {
                fractional.insert(root, f);
            }
        }
    }
    let floored = phi.floor();
    if let (Some(before), Some(after)) = (
        phi.objective(&cert.plan.source, &cert.plan.target),
        floored.objective(&cert.plan.source, &cert.plan.target),
    ) {
        if before != after {
            return Err(TransportError::NotOptimalInput(
                "flooring changed the dual objective".to_string(),
            ));
        }
    }
    Ok(floored)
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    #[serde(with = "crate::rational")]
    value: Rational,
    plan: Vec<(usize, usize, RationalString)>,
    potential: Vec<(usize, RationalString)>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct RationalString(#[serde(with = "crate::rational")] Rational);

impl W1Certificate {
    /// `{"value": "n/d", "plan": [[u, v, "n/d"], ...], "potential": [[v, "n/d"], ...]}`
    pub fn to_json(&self) -> String {
        let doc = CertificateJson {
            value: self.value.clone(),
            plan: self
                .plan
                .entries
                .iter()
                .map(|(&(u, v), m)| (u, v, RationalString(m.clone())))
                .collect(),
            potential: self
                .potential
                .values
                .iter()
                .map(|(&v, r)| (v, RationalString(r.clone())))
                .collect(),
        };
        serde_json::to_string(&doc).expect("certificate serialises")
    }

    /// Reads the dump format back; marginals are rebuilt from the plan.
    pub fn from_json(text: &str) -> Result<Self, TransportError> {
        let doc: CertificateJson =
            serde_json::from_str(text).map_err(|e| TransportError::Json(e.to_string()))?;
        let entries: BTreeMap<(usize, usize), Rational> = doc
            .plan
            .into_iter()
            .map(|(u, v, m)| ((u, v), m.0))
            .collect();
        let mut rows: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut cols: BTreeMap<usize, Rational> = BTreeMap::new();
        for (&(u, v), m) in &entries {
            *rows.entry(u).or_default() += m;
            *cols.entry(v).or_default() += m;
        }
        let (source, target) = if entries.is_empty() {
            return Err(TransportError::Json(
                "empty plan: marginals cannot be recovered".to_string(),
            ));
        } else {
            (Measure::new(rows)?, Measure::new(cols)?)
        };
        Ok(W1Certificate {
            value: doc.value,
            plan: TransportPlan {
                entries,
                source,
                target,
            },
            potential: Potential {
                values: doc.potential.into_iter().map(|(v, r)| (v, r.0)).collect(),
            },
        })
    }
}
