use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::kappa::pair_distance;
use super::CurvatureError;
use crate::graph::Graph;
use crate::rational::{lcm, Rational};
use crate::transport::{FlowNetwork, Potential, TransportError};

/// The supremum `c_j` and an integer potential attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CjSolution {
    pub value: Rational,
    /// Integer-valued, 1-Lipschitz on the component of the pair, with
    /// `phi(x) = j` and `phi(y) = 0`.
    pub potential: Potential,
}

/// `c_j = sup F(phi)` over 1-Lipschitz `phi` with `phi(x) = j`, `phi(y) = 0`,
/// where `F(phi) = mean of phi over N(x) - mean of phi over N(y)`.
///
/// The LP `max sum b_v phi_v` subject to `phi_v - phi_u <= 1` on edges is the
/// dual of an uncapacitated min-cost flow with demands `b`. The pin becomes
/// the arc pair `y -> x` (cost `j`) and `x -> y` (cost `-j`); the only new
/// cycles cost `d(x, y) - j >= 0`. Flow duals are integers, so the optimum
/// is attained by an integer-valued potential.
pub fn potential_sup_cj(
    g: &Graph,
    x: usize,
    y: usize,
    j: i64,
) -> Result<CjSolution, CurvatureError> {
    let delta = pair_distance(g, x, y)?;
    if delta < 2 {
        return Err(CurvatureError::DistanceTooSmall { delta });
    }
    if j.unsigned_abs() > u64::from(delta) {
        return Err(CurvatureError::InfeasiblePin { j, delta });
    }

    let component = g.component_of(x);
    let local: BTreeMap<usize, usize> =
        component.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut network = FlowNetwork::new(component.len());
    for (u, v) in g.edges() {
        if let (Some(&a), Some(&b)) = (local.get(&u), local.get(&v)) {
            network.add_arc(a, b, 1);
            network.add_arc(b, a, 1);
        }
    }
    let (lx, ly) = (local[&x], local[&y]);
    network.add_arc(ly, lx, j);
    network.add_arc(lx, ly, -j);

    let (dx, dy) = (g.degree(x) as u64, g.degree(y) as u64);
    let scale = lcm(dx, dy);
    let (wx, wy) = (i128::from(scale / dx), i128::from(scale / dy));
    // supply = -b * scale
    let mut supply = vec![0i128; component.len()];
    for &w in g.neighbors(x) {
        supply[local[&w]] -= wx;
    }
    for &w in g.neighbors(y) {
        supply[local[&w]] += wy;
    }
    let solution = network.solve(&supply).map_err(TransportError::from)?;

    let offset = solution.potential[ly];
    let potential = Potential {
        values: component
            .iter()
            .map(|&v| {
                (
                    v,
                    Rational::from_integer((solution.potential[local[&v]] - offset).into()),
                )
            })
            .collect(),
    };
    let value = Rational::new(BigInt::from(solution.cost), BigInt::from(scale));
    debug_assert_eq!(&potential.values[&x], &Rational::from_integer(j.into()));
    Ok(CjSolution { value, potential })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, family};
    use crate::rational::{int, rat};

    fn f_of(g: &Graph, x: usize, y: usize, phi: &Potential) -> Rational {
        let mean = |v: usize| {
            let total: Rational = g.neighbors(v).iter().map(|w| phi.values[w].clone()).sum();
            total / int(g.degree(v) as i64)
        };
        mean(x) - mean(y)
    }

    #[test]
    fn family_111() {
        let pair = family(1, 1, 1).unwrap();
        let (g, x, y) = (&pair.graph, pair.x, pair.y);
        let expected = [rat(8, 5), rat(7, 5), int(1)];
        for (j, c) in (1..=3).zip(expected) {
            let sol = potential_sup_cj(g, x, y, j).unwrap();
            assert_eq!(sol.value, c, "c_{j}");
            assert!(sol.potential.is_lipschitz(g));
            assert!(sol.potential.is_integer_valued());
            assert_eq!(sol.potential.values[&x], int(j));
            assert_eq!(sol.potential.values[&y], int(0));
            assert_eq!(f_of(g, x, y, &sol.potential), sol.value);
        }
    }

    #[test]
    fn four_cycle() {
        // N(x) = N(y) = {1, 3}, so F vanishes identically
        let g = cycle(4).unwrap();
        for j in 0..=2 {
            assert_eq!(potential_sup_cj(&g, 0, 2, j).unwrap().value, int(0));
        }
    }

    #[test]
    fn errors() {
        let g = cycle(6).unwrap();
        assert_eq!(
            potential_sup_cj(&g, 0, 1, 0).unwrap_err(),
            CurvatureError::DistanceTooSmall { delta: 1 }
        );
        assert_eq!(
            potential_sup_cj(&g, 0, 3, 4).unwrap_err(),
            CurvatureError::InfeasiblePin { j: 4, delta: 3 }
        );
    }
}
