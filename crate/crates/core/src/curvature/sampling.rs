use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::kappa::{kappa_p, pair_distance};
use super::profile::PiecewiseLinear;
use super::CurvatureError;
use crate::graph::Graph;
use crate::rational::{lcm, midpoint, rat, Rational};

/// `0`, `a / (a + l)` for `a = 1..=l`, `1`, and the midpoint of every
/// consecutive pair of those, ascending.
pub fn candidate_grid(l: u64) -> Vec<Rational> {
    let l = l as i64;
    let mut base = vec![Rational::zero()];
    base.extend((1..=l).map(|a| rat(a, a + l)));
    base.push(Rational::one());
    let mids: Vec<Rational> = base.windows(2).map(|w| midpoint(&w[0], &w[1])).collect();
    base.extend(mids);
    base.sort();
    base.dedup();
    base
}

fn sample(
    g: &Graph,
    x: usize,
    y: usize,
    grid: &[Rational],
) -> Result<Vec<(Rational, Rational)>, CurvatureError> {
    grid.par_iter()
        .map(|p| kappa_p(g, x, y, p).map(|k| (p.clone(), k)))
        .collect()
}

/// Recovers `p -> kappa_p(x, y)` from exact evaluations on the breakpoint
/// candidates. Works at every distance, including adjacent pairs.
///
/// For adjacent pairs the candidate form is not guaranteed, so the result
/// is additionally checked against the dense grid `k / (4 l)` and rebuilt
/// from all samples if any disagree.
pub fn reconstruct_by_sampling(
    g: &Graph,
    x: usize,
    y: usize,
) -> Result<PiecewiseLinear, CurvatureError> {
    let delta = pair_distance(g, x, y)?;
    let l = lcm(g.degree(x) as u64, g.degree(y) as u64);
    let grid = candidate_grid(l);
    let mut samples = sample(g, x, y, &grid)?;
    let mut f = PiecewiseLinear::from_samples(samples.clone());

    if delta == 1 {
        let dense: Vec<Rational> = (0..=4 * l as i64).map(|k| rat(k, 4 * l as i64)).collect();
        let extra = sample(g, x, y, &dense)?;
        if extra.iter().any(|(p, k)| f.evaluate(p).as_ref() != Some(k)) {
            let merged: BTreeMap<Rational, Rational> = samples.into_iter().chain(extra).collect();
            samples = merged.into_iter().collect();
            f = PiecewiseLinear::from_samples(samples);
        }
    }

    if !f.is_concave() {
        return Err(CurvatureError::NotConcave);
    }
    if f.piece_count() > 3 {
        return Err(CurvatureError::MoreThanThreePieces {
            pieces: f.piece_count(),
        });
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{evaluate_profile, idleness_profile};
    use crate::generators::{cycle, family, star};
    use crate::rational::int;

    #[test]
    fn grid_shape() {
        let grid = candidate_grid(2);
        // 0, 1/3, 1/2, 1 and their three midpoints
        assert_eq!(grid.len(), 7);
        assert_eq!(grid[0], int(0));
        assert_eq!(grid[2], rat(1, 3));
        assert_eq!(*grid.last().unwrap(), int(1));
    }

    #[test]
    fn family_matches_profile() {
        let pair = family(1, 1, 1).unwrap();
        let f = reconstruct_by_sampling(&pair.graph, pair.x, pair.y).unwrap();
        let prof = idleness_profile(&pair.graph, pair.x, pair.y).unwrap();
        assert_eq!(f, prof.to_piecewise());
        for k in 0..=20 {
            let p = rat(k, 20);
            assert_eq!(f.evaluate(&p).unwrap(), evaluate_profile(&prof, &p));
        }
    }

    #[test]
    fn six_cycle_edge_is_flat() {
        let g = cycle(6).unwrap();
        let f = reconstruct_by_sampling(&g, 0, 1).unwrap();
        assert_eq!(f.piece_count(), 1);
        assert_eq!(f.values, vec![int(0), int(0)]);
    }

    #[test]
    fn star_edge() {
        // leaf-centre pair of a star: kappa_p is linear in p on each side of
        // the short-scale breakpoints
        let g = star(5).unwrap();
        let f = reconstruct_by_sampling(&g, 0, 1).unwrap();
        assert!(f.piece_count() <= 3);
        assert!(f.is_concave());
        assert_eq!(f.evaluate(&int(1)), Some(int(0)));
    }
}
