use num_traits::{One, Signed, Zero};

use super::CurvatureError;
use crate::graph::Graph;
use crate::rational::{int, Rational};
use crate::transport::{integerize_potential, lazy_measure, w1_anchored, W1Certificate};

pub(crate) fn pair_distance(g: &Graph, x: usize, y: usize) -> Result<u32, CurvatureError> {
    g.check_index(x)?;
    g.check_index(y)?;
    if x == y {
        return Err(CurvatureError::SameVertex(x));
    }
    g.dist(x, y).ok_or(CurvatureError::Disconnected(x, y))
}

fn check_idleness(p: &Rational) -> Result<(), CurvatureError> {
    if p.is_negative() || p > &Rational::one() {
        return Err(CurvatureError::BadIdleness(p.clone()));
    }
    Ok(())
}

/// `kappa_p(x, y)` together with the transport certificate behind it. The
/// potential is normalised to vanish at `y`.
pub fn kappa_p_certificate(
    g: &Graph,
    x: usize,
    y: usize,
    p: &Rational,
) -> Result<(Rational, W1Certificate), CurvatureError> {
    let delta = pair_distance(g, x, y)?;
    check_idleness(p)?;
    let mu = lazy_measure(g, x, p)?;
    let nu = lazy_measure(g, y, p)?;
    let cert = w1_anchored(g, &mu, &nu, y)?;
    let kappa = Rational::one() - &cert.value / int(delta.into());
    Ok((kappa, cert))
}

/// `1 - W1(mu_x^p, mu_y^p) / d(x, y)`.
pub fn kappa_p(g: &Graph, x: usize, y: usize, p: &Rational) -> Result<Rational, CurvatureError> {
    kappa_p_certificate(g, x, y, p).map(|(k, _)| k)
}

/// Lin-Lu-Yau curvature. The idleness function is linear on `[1/2, 1]` and
/// vanishes at 1, so the limit equals `kappa_{1/2} / (1/2)`.
pub fn kappa_lly(g: &Graph, x: usize, y: usize) -> Result<Rational, CurvatureError> {
    Ok(kappa_p(g, x, y, &Rational::new(1.into(), 2.into()))? * int(2))
}

/// `phi(x) - phi(y)` for the integer optimal potential of the pair at
/// idleness `p`; always in `[delta - 2, delta]`.
pub fn optimal_potential_gap(
    g: &Graph,
    x: usize,
    y: usize,
    p: &Rational,
) -> Result<i64, CurvatureError> {
    let delta = pair_distance(g, x, y)?;
    if delta < 2 {
        return Err(CurvatureError::DistanceTooSmall { delta });
    }
    if !p.is_positive() {
        return Err(CurvatureError::BadIdleness(p.clone()));
    }
    let (_, cert) = kappa_p_certificate(g, x, y, p)?;
    let phi = integerize_potential(g, &cert)?;
    let gap = &phi.values[&x] - &phi.values[&y];
    Ok(i64::try_from(gap.to_integer()).expect("gap is bounded by the distance"))
}

/// Right-hand side of the Cartesian-product curvature formula for regular
/// factors:
///
/// `(D_G d_G k_G + D_H d_H k_H) / ((D_G + D_H)(d_G + d_H))`,
///
/// where a factor at distance 0 contributes nothing.
pub fn product_formula_rhs(
    kappa_g: &Rational,
    kappa_h: &Rational,
    degree_g: u64,
    degree_h: u64,
    dist_g: u64,
    dist_h: u64,
) -> Result<Rational, CurvatureError> {
    if dist_g + dist_h == 0 {
        return Err(CurvatureError::BothDistancesZero);
    }
    let term = |degree: u64, dist: u64, kappa: &Rational| {
        if dist == 0 {
            Rational::zero()
        } else {
            kappa * Rational::from_integer((degree * dist).into())
        }
    };
    let numerator = term(degree_g, dist_g, kappa_g) + term(degree_h, dist_h, kappa_h);
    let denominator = Rational::from_integer(((degree_g + degree_h) * (dist_g + dist_h)).into());
    Ok(numerator / denominator)
}

/// If `kappa_p(x, y) >= kappa > 0` for every `y`, then every vertex lies
/// within `2 (1 - p) / kappa` of `x` (and the diameter is at most twice that).
pub fn bonnet_myers_diameter_bound(
    kappa: &Rational,
    p: &Rational,
) -> Result<Rational, CurvatureError> {
    if !kappa.is_positive() {
        return Err(CurvatureError::NonPositiveKappa(kappa.clone()));
    }
    if p.is_negative() || p >= &Rational::one() {
        return Err(CurvatureError::BadIdleness(p.clone()));
    }
    Ok(int(2) * (Rational::one() - p) / kappa)
}
