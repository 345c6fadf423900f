use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::cj::potential_sup_cj;
use super::kappa::pair_distance;
use super::CurvatureError;
use crate::graph::Graph;
use crate::rational::{self, int, lcm, Rational};

/// The complete description of `p -> kappa_p(x, y)` for a pair at distance
/// `delta >= 2`: the intercepts `c_{delta-2}, c_{delta-1}, c_delta` of the
/// three lines `f_j(p) = p j + (1 - p) c_j` and their crossing points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdlenessProfile {
    pub delta: u32,
    pub c_lo: Rational,
    pub c_mid: Rational,
    pub c_hi: Rational,
    /// Where `f_{delta-2}` and `f_{delta-1}` cross.
    pub p1: Rational,
    /// Where `f_{delta-1}` and `f_delta` cross.
    pub p2: Rational,
    pub d_x: usize,
    pub d_y: usize,
}

/// `t / (t + 1)`: the crossing point of two lines whose intercepts differ by
/// `t` and whose slopes differ by one.
fn crossing(t: &Rational) -> Rational {
    t / (t + Rational::one())
}

impl IdlenessProfile {
    /// Assembles a profile from its three intercepts without validating it.
    pub fn from_constants(delta: u32, c: [Rational; 3], d_x: usize, d_y: usize) -> Self {
        let [c_lo, c_mid, c_hi] = c;
        let p1 = crossing(&(&c_lo - &c_mid));
        let p2 = crossing(&(&c_mid - &c_hi));
        Self {
            delta,
            c_lo,
            c_mid,
            c_hi,
            p1,
            p2,
            d_x,
            d_y,
        }
    }

    pub fn constants(&self) -> [&Rational; 3] {
        [&self.c_lo, &self.c_mid, &self.c_hi]
    }

    /// `lcm(d_x, d_y)`; every critical point has the form `a / (a + lcm)`.
    pub fn lcm(&self) -> u64 {
        lcm(self.d_x as u64, self.d_y as u64)
    }

    /// `1 - 1/d_x - 1/d_y`.
    pub fn degree_gap(&self) -> Rational {
        Rational::one() - rational::rat(1, self.d_x as i64) - rational::rat(1, self.d_y as i64)
    }

    /// `-1 < c_lo - c_mid <= c_mid - c_hi <= 1 - 1/d_x - 1/d_y`, exactly as
    /// usually stated. The right-hand inequality can fail when an endpoint
    /// is a leaf: a path on four vertices has `c = (1, 1, 1)`.
    pub fn satisfies_stated_chain(&self) -> bool {
        let (a, b) = (&self.c_lo - &self.c_mid, &self.c_mid - &self.c_hi);
        a > int(-1) && a <= b && b <= self.degree_gap()
    }

    /// The chain with its right end replaced by `max(0, 1 - 1/d_x - 1/d_y)`,
    /// which is what the underlying case analysis actually yields. It agrees
    /// with [`Self::satisfies_stated_chain`] whenever both degrees are at
    /// least 2.
    pub fn satisfies_chain(&self) -> bool {
        let (a, b) = (&self.c_lo - &self.c_mid, &self.c_mid - &self.c_hi);
        a > int(-1) && a <= b && b <= self.degree_gap().max(Rational::zero())
    }

    /// `1/2 - (1/2)(d_x + d_y) / (2 d_x d_y - d_x - d_y)`, the largest
    /// possible critical point. Undefined when both endpoints are leaves.
    pub fn critical_upper_bound(&self) -> Option<Rational> {
        let (dx, dy) = (self.d_x as i64, self.d_y as i64);
        let denominator = 2 * dx * dy - dx - dy;
        if denominator == 0 {
            return None;
        }
        let half = rational::rat(1, 2);
        Some(&half - &half * rational::rat(dx + dy, denominator))
    }

    /// `1 / (1 + lcm(d_x, d_y))`, the smallest possible positive critical
    /// point.
    pub fn critical_lower_bound(&self) -> Rational {
        rational::rat(1, 1 + self.lcm() as i64)
    }

    /// The `a` with `p = a / (a + lcm)`, if it is an integer.
    pub fn form_numerator(&self, p: &Rational) -> Option<i64> {
        if p >= &Rational::one() {
            return None;
        }
        let a = p * int(self.lcm() as i64) / (Rational::one() - p);
        if !rational::is_integer(&a) {
            return None;
        }
        rational::to_i128(&a).and_then(|a| i64::try_from(a).ok())
    }

    /// The line `p -> 1 - f_j(p) / delta` for `j = delta - 2 + index`, as
    /// `(slope, intercept)`.
    pub fn kappa_line(&self, index: usize) -> (Rational, Rational) {
        let delta = int(self.delta.into());
        let j = int(i64::from(self.delta) - 2 + index as i64);
        let c = self.constants()[index];
        ((c - &j) / &delta, Rational::one() - c / &delta)
    }

    pub fn to_piecewise(&self) -> PiecewiseLinear {
        let mut points = vec![Rational::zero()];
        points.extend(critical_points(self));
        points.push(Rational::one());
        let samples = points
            .into_iter()
            .map(|p| {
                let v = evaluate_profile(self, &p);
                (p, v)
            })
            .collect();
        PiecewiseLinear::from_samples(samples)
    }

    /// `{"delta": 3, "c": ["n/d", ...], "critical_points": [...], "pieces": [...]}`
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out {
            delta: u32,
            c: Vec<String>,
            critical_points: Vec<String>,
            pieces: Vec<PieceOut>,
        }
        let out = Out {
            delta: self.delta,
            c: self
                .constants()
                .iter()
                .map(|c| rational::format_rational(c))
                .collect(),
            critical_points: critical_points(self)
                .iter()
                .map(rational::format_rational)
                .collect(),
            pieces: self
                .to_piecewise()
                .pieces()
                .iter()
                .map(PieceOut::from)
                .collect(),
        };
        serde_json::to_string(&out).expect("profile serialises")
    }

    fn validate(&self) -> Result<(), CurvatureError> {
        if !self.satisfies_chain() {
            return Err(CurvatureError::InvariantViolated(format!(
                "c-chain fails: c = ({}, {}, {})",
                self.c_lo, self.c_mid, self.c_hi
            )));
        }
        if self.p1 > self.p2 {
            return Err(CurvatureError::InvariantViolated(format!(
                "p1 = {} exceeds p2 = {}",
                self.p1, self.p2
            )));
        }
        for p in [&self.p1, &self.p2] {
            if self.form_numerator(p).is_none() {
                return Err(CurvatureError::InvariantViolated(format!(
                    "{p} is not of the form a/(a + {})",
                    self.lcm()
                )));
            }
        }
        let report = check_critical_bounds(self);
        if let Some(failed) = report.checks.iter().find(|c| !c.passed) {
            return Err(CurvatureError::InvariantViolated(format!(
                "{}: {} vs {}",
                failed.name, failed.lhs, failed.rhs
            )));
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct PieceOut {
    from: String,
    to: String,
    slope: String,
    intercept: String,
}

impl From<&Piece> for PieceOut {
    fn from(p: &Piece) -> Self {
        Self {
            from: rational::format_rational(&p.from),
            to: rational::format_rational(&p.to),
            slope: rational::format_rational(&p.slope),
            intercept: rational::format_rational(&p.intercept),
        }
    }
}

/// Computes and validates the three-line profile of a pair at distance at
/// least 2.
pub fn idleness_profile(g: &Graph, x: usize, y: usize) -> Result<IdlenessProfile, CurvatureError> {
    let delta = pair_distance(g, x, y)?;
    if delta < 2 {
        return Err(CurvatureError::DistanceTooSmall { delta });
    }
    let top = i64::from(delta);
    let c = [top - 2, top - 1, top].map(|j| potential_sup_cj(g, x, y, j).map(|s| s.value));
    let [lo, mid, hi] = c;
    let profile =
        IdlenessProfile::from_constants(delta, [lo?, mid?, hi?], g.degree(x), g.degree(y));
    profile.validate()?;
    Ok(profile)
}

/// `1 - (1/delta) max_j (p j + (1 - p) c_j)`.
pub fn evaluate_profile(profile: &IdlenessProfile, p: &Rational) -> Rational {
    let q = Rational::one() - p;
    let top = i64::from(profile.delta);
    let w = profile
        .constants()
        .into_iter()
        .zip(top - 2..)
        .map(|(c, j)| p * int(j) + &q * c)
        .max()
        .expect("three lines");
    Rational::one() - w / int(top)
}

/// The crossing points that fall strictly inside `(0, 1)`, ascending and
/// without repeats.
pub fn critical_points(profile: &IdlenessProfile) -> Vec<Rational> {
    let mut out: Vec<Rational> = [&profile.p1, &profile.p2]
        .into_iter()
        .filter(|p| p.is_positive() && **p < Rational::one())
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: String,
    pub passed: bool,
    /// The two sides compared with equality.
    pub attained: bool,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundReport {
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn find(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: String, lhs: Rational, rhs: Rational) {
        let passed = lhs <= rhs;
        let attained = lhs == rhs;
        self.checks.push(BoundCheck {
            name,
            passed,
            attained,
            lhs,
            rhs,
        });
    }
}

/// Checks each critical point `p*` against
/// `1 / (1 + l) <= p* <= 1/2 - (1/2)(d_x + d_y)/(2 d_x d_y - d_x - d_y)` and
/// the form `a / (a + l)` with `l = lcm(d_x, d_y)`. Checks are named
/// `lower(p*)`, `upper(p*)` and `form(p*)`; every check is `lhs <= rhs`.
pub fn check_critical_bounds(profile: &IdlenessProfile) -> BoundReport {
    let mut report = BoundReport::default();
    let l = profile.lcm() as i64;
    for p in critical_points(profile) {
        let tag = rational::format_rational(&p);
        report.push(
            format!("lower({tag})"),
            profile.critical_lower_bound(),
            p.clone(),
        );
        match profile.critical_upper_bound() {
            Some(bound) => report.push(format!("upper({tag})"), p.clone(), bound),
            None => report.checks.push(BoundCheck {
                name: format!("upper({tag})"),
                passed: false,
                attained: false,
                lhs: p.clone(),
                rhs: Rational::zero(),
            }),
        }
        match profile.form_numerator(&p) {
            Some(a) => report.push(format!("form({tag})"), int(1), int(a)),
            None => report.checks.push(BoundCheck {
                name: format!("form({tag})"),
                passed: false,
                attained: false,
                lhs: p.clone(),
                rhs: int(l),
            }),
        }
    }
    report
}

/// One maximal linear piece `p -> slope p + intercept` on `[from, to]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub from: Rational,
    pub to: Rational,
    pub slope: Rational,
    pub intercept: Rational,
}

impl Piece {
    pub fn covers(&self, a: &Rational, b: &Rational) -> bool {
        &self.from <= a && b <= &self.to
    }
}

/// A continuous piecewise-linear function given by its values at strictly
/// increasing breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseLinear {
    pub breakpoints: Vec<Rational>,
    pub values: Vec<Rational>,
}

fn slope(a: (&Rational, &Rational), b: (&Rational, &Rational)) -> Rational {
    (b.1 - a.1) / (b.0 - a.0)
}

impl PiecewiseLinear {
    /// Interpolates the samples (sorted, duplicates by abscissa dropped) and
    /// removes breakpoints where the slope does not change.
    pub fn from_samples(mut samples: Vec<(Rational, Rational)>) -> Self {
        samples.sort_by(|a, b| a.0.cmp(&b.0));
        samples.dedup_by(|a, b| a.0 == b.0);
        let mut kept: Vec<(Rational, Rational)> = Vec::with_capacity(samples.len());
        for s in samples {
            while kept.len() >= 2 {
                let (a, b) = (&kept[kept.len() - 2], &kept[kept.len() - 1]);
                if slope((&a.0, &a.1), (&b.0, &b.1)) == slope((&b.0, &b.1), (&s.0, &s.1)) {
                    kept.pop();
                } else {
                    break;
                }
            }
            kept.push(s);
        }
        let (breakpoints, values) = kept.into_iter().unzip();
        Self {
            breakpoints,
            values,
        }
    }

    pub fn pieces(&self) -> Vec<Piece> {
        self.breakpoints
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(b, v)| {
                let s = slope((&b[0], &v[0]), (&b[1], &v[1]));
                let intercept = &v[0] - &s * &b[0];
                Piece {
                    from: b[0].clone(),
                    to: b[1].clone(),
                    slope: s,
                    intercept,
                }
            })
            .collect()
    }

    pub fn piece_count(&self) -> usize {
        self.breakpoints.len().saturating_sub(1)
    }

    /// Slopes are non-increasing from left to right.
    pub fn is_concave(&self) -> bool {
        self.pieces().windows(2).all(|w| w[0].slope >= w[1].slope)
    }

    /// `None` outside `[first breakpoint, last breakpoint]`.
    pub fn evaluate(&self, p: &Rational) -> Option<Rational> {
        if self.breakpoints.len() == 1 {
            return (p == &self.breakpoints[0]).then(|| self.values[0].clone());
        }
        self.pieces()
            .into_iter()
            .find(|piece| &piece.from <= p && p <= &piece.to)
            .map(|piece| piece.slope * p + piece.intercept)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::kappa_p;
    use crate::generators::{family, path};
    use crate::rational::rat;

    fn family_profile(m: usize, n: usize, k: usize) -> IdlenessProfile {
        let pair = family(m, n, k).unwrap();
        idleness_profile(&pair.graph, pair.x, pair.y).unwrap()
    }

    #[test]
    fn family_111_profile() {
        let prof = family_profile(1, 1, 1);
        assert_eq!(prof.constants(), [&rat(8, 5), &rat(7, 5), &int(1)]);
        assert_eq!(critical_points(&prof), vec![rat(1, 6), rat(2, 7)]);
        assert_eq!(evaluate_profile(&prof, &int(1)), int(0));
        assert_eq!(evaluate_profile(&prof, &rat(1, 2)), rat(1, 3));
        assert_eq!(evaluate_profile(&prof, &int(0)), rat(7, 15));
        let report = check_critical_bounds(&prof);
        assert!(report.all_passed());
        assert!(report.find("lower(1/6)").unwrap().attained);
    }

    #[test]
    fn family_110_saturates_upper_bound() {
        let prof = family_profile(1, 1, 0);
        assert_eq!(critical_points(&prof), vec![rat(1, 5), rat(1, 3)]);
        assert!(
            check_critical_bounds(&prof)
                .find("upper(1/3)")
                .unwrap()
                .attained
        );
        assert_eq!(prof.to_piecewise().piece_count(), 3);
    }

    #[test]
    fn family_010_two_pieces() {
        let prof = family_profile(0, 1, 0);
        assert_eq!(prof.p1, int(0));
        assert_eq!(critical_points(&prof), vec![rat(1, 4)]);
        assert_eq!(prof.to_piecewise().piece_count(), 2);
    }

    #[test]
    fn profile_matches_direct_curvature() {
        let pair = family(1, 2, 0).unwrap();
        let prof = idleness_profile(&pair.graph, pair.x, pair.y).unwrap();
        for k in 0..=10 {
            let p = rat(k, 10);
            assert_eq!(
                evaluate_profile(&prof, &p),
                kappa_p(&pair.graph, pair.x, pair.y, &p).unwrap()
            );
        }
    }

    #[test]
    fn leaf_endpoints_break_stated_chain_only() {
        let g = path(4).unwrap();
        let prof = idleness_profile(&g, 0, 3).unwrap();
        assert_eq!(prof.constants(), [&int(1), &int(1), &int(1)]);
        assert!(!prof.satisfies_stated_chain());
        assert!(prof.satisfies_chain());
        assert!(critical_points(&prof).is_empty());
        assert_eq!(prof.critical_upper_bound(), None);
    }

    #[test]
    fn flat_profile_has_no_critical_points() {
        let prof = IdlenessProfile::from_constants(3, [int(1), int(1), int(1)], 3, 3);
        assert!(critical_points(&prof).is_empty());
        assert_eq!(prof.to_piecewise().piece_count(), 1);
    }

    #[test]
    fn piecewise_collapse_and_evaluate() {
        let samples = (0..=4).map(|k| (rat(k, 4), rat(k.min(2), 4))).collect();
        let f = PiecewiseLinear::from_samples(samples);
        assert_eq!(f.breakpoints, vec![int(0), rat(1, 2), int(1)]);
        assert!(f.is_concave());
        assert_eq!(f.evaluate(&rat(3, 4)), Some(rat(1, 2)));
        assert_eq!(f.evaluate(&rat(5, 4)), None);
        let convex = PiecewiseLinear::from_samples(vec![
            (int(0), int(1)),
            (rat(1, 2), int(0)),
            (int(1), int(1)),
        ]);
        assert!(!convex.is_concave());
    }

    #[test]
    fn json_shape() {
        let json = family_profile(1, 1, 1).to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["delta"], 3);
        assert_eq!(v["c"][0], "8/5");
        assert_eq!(v["critical_points"][1], "2/7");
        assert_eq!(v["pieces"].as_array().unwrap().len(), 3);
        assert_eq!(v["pieces"][2]["to"], "1/1");
    }
}
