//! Reproduction suites: each runs a family of exact computations and
//! compares them with closed-form values.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::curvature::{
    bonnet_myers_diameter_bound, check_critical_bounds, critical_points, evaluate_profile,
    idleness_profile, kappa_lly, kappa_p, optimal_potential_gap, product_formula_rhs,
    CurvatureError,
};
use crate::generators::{
    cartesian_product, complete, cycle, family, figure3, hex_torus, random_connected, tree_pair,
};
use crate::graph::{Graph, GraphError};
use crate::rational::{format_rational, int, rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Family,
    Hexagon,
    Tree,
    Product,
    Bounds,
    Figure3,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Family,
        Suite::Hexagon,
        Suite::Tree,
        Suite::Product,
        Suite::Bounds,
        Suite::Figure3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Family => "family",
            Suite::Hexagon => "hexagon",
            Suite::Tree => "tree",
            Suite::Product => "product",
            Suite::Bounds => "bounds",
            Suite::Figure3 => "figure3",
        }
    }
}

/// One comparison between an expected and a computed exact value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

impl Check {
    pub fn equal(name: impl Into<String>, expected: &Rational, computed: &Rational) -> Self {
        Self {
            name: name.into(),
            expected: format_rational(expected),
            computed: format_rational(computed),
            passed: expected == computed,
        }
    }

    pub fn text(name: impl Into<String>, expected: String, computed: String) -> Self {
        let passed = expected == computed;
        Self {
            name: name.into(),
            expected,
            computed,
            passed,
        }
    }

    /// `ok` out of `total` cases satisfied a property that should always hold.
    pub fn count(name: impl Into<String>, ok: usize, total: usize) -> Self {
        Self::text(name, format!("{total}/{total}"), format!("{ok}/{total}"))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: expected {}, computed {}",
            self.name, self.expected, self.computed
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn list(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn value_set(values: impl IntoIterator<Item = Rational>) -> String {
    let set: BTreeSet<Rational> = values.into_iter().collect();
    list(&set.into_iter().collect::<Vec<_>>())
}

/// The three-path family `G(m, n, k)`: intercepts, crossing points and
/// agreement of the profile with direct curvature on a 21-point grid.
pub fn family_suite(m: usize, n: usize, k: usize) -> Result<SuiteReport, VerifyError> {
    let pair = family(m, n, k)?;
    let (g, x, y) = (&pair.graph, pair.x, pair.y);
    let (m, n, k) = (m as i64, n as i64, k as i64);
    let d = 2 + m + n + k;
    let profile = idleness_profile(g, x, y)?;

    let mut checks = vec![
        Check::text("delta", "3".into(), profile.delta.to_string()),
        Check::equal("c_1", &rat(3 * m + 2 * n + k + 2, d), &profile.c_lo),
        Check::equal("c_2", &rat(2 * m + 2 * n + k + 2, d), &profile.c_mid),
        Check::equal("c_3", &int(1), &profile.c_hi),
        Check::equal("p1", &rat(m, d + m), &profile.p1),
        Check::equal("p2", &rat(m + n, d + m + n), &profile.p2),
    ];
    let mut expected: Vec<Rational> = [rat(m, d + m), rat(m + n, d + m + n)]
        .into_iter()
        .filter(|p| p.is_positive())
        .collect();
    expected.dedup();
    checks.push(Check::text(
        "critical points",
        list(&expected),
        list(&critical_points(&profile)),
    ));

    let grid: Vec<Rational> = (0..=20).map(|i| rat(i, 20)).collect();
    let direct: Vec<Rational> = grid
        .par_iter()
        .map(|p| kappa_p(g, x, y, p))
        .collect::<Result<_, _>>()?;
    let agree = grid
        .iter()
        .zip(&direct)
        .filter(|(p, k)| evaluate_profile(&profile, p) == **k)
        .count();
    checks.push(Check::count(
        "profile = direct kappa_p on 21-point grid",
        agree,
        grid.len(),
    ));
    Ok(SuiteReport {
        suite: Suite::Family,
        checks,
    })
}

/// Hexagonal tiling on the 20 x 20 torus: edge curvature and the
/// distance-7 sphere.
pub fn hexagon_suite() -> Result<SuiteReport, VerifyError> {
    let g = hex_torus(20, 20)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let sphere = g.sphere(0, 7);
    let mut checks = Vec::new();
    for p in [int(0), rat(1, 4), rat(1, 2)] {
        let q = Rational::one() - &p;
        let tag = format_rational(&p);
        let on_edges: Vec<Rational> = edges
            .par_iter()
            .map(|&(u, v)| kappa_p(&g, u, v, &p))
            .collect::<Result<_, _>>()?;
        checks.push(Check::text(
            format!("edge values at p={tag}"),
            value_set([rat(-2, 3) * &q]),
            value_set(on_edges),
        ));
        let on_sphere: Vec<Rational> = sphere
            .par_iter()
            .map(|&v| kappa_p(&g, 0, v, &p))
            .collect::<Result<_, _>>()?;
        checks.push(Check::text(
            format!("distance-7 values at p={tag}"),
            value_set([rat(2, 21) * &q, rat(-2, 21) * &q]),
            value_set(on_sphere),
        ));
    }
    Ok(SuiteReport {
        suite: Suite::Hexagon,
        checks,
    })
}

/// Regular trees: `kappa_p = (4 - 2d) / (d L) (1 - p)` at distance `L`.
pub fn tree_suite() -> Result<SuiteReport, VerifyError> {
    let mut checks = Vec::new();
    for d in [3i64, 4] {
        for l in [1i64, 2, 3] {
            let pair = tree_pair(d as usize, l as usize)?;
            for p in [int(0), rat(1, 2), rat(3, 4)] {
                let expected = rat(4 - 2 * d, d * l) * (Rational::one() - &p);
                let computed = kappa_p(&pair.graph, pair.x, pair.y, &p)?;
                checks.push(Check::equal(
                    format!("d={d} L={l} p={}", format_rational(&p)),
                    &expected,
                    &computed,
                ));
            }
        }
    }
    Ok(SuiteReport {
        suite: Suite::Tree,
        checks,
    })
}

/// A pair of product vertices, given by factor coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductPair {
    pub w: (usize, usize),
    pub z: (usize, usize),
}

/// Random product pairs: two with one factor coordinate shared, the rest
/// uniformly random distinct pairs.
pub fn product_pairs(g: &Graph, h: &Graph, count: usize, rng: &mut impl Rng) -> Vec<ProductPair> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut pairs = vec![
        ProductPair {
            w: (0, 0),
            z: (0, nh / 2),
        },
        ProductPair {
            w: (0, ng / 2),
            z: (0, 0),
        },
    ];
    while pairs.len() < count {
        let w = (rng.gen_range(0..ng), rng.gen_range(0..ng));
        let z = (rng.gen_range(0..nh), rng.gen_range(0..nh));
        if w.0 != w.1 || z.0 != z.1 {
            pairs.push(ProductPair { w, z });
        }
    }
    pairs
}

fn factor_kappa(g: &Graph, a: usize, b: usize, p: &Rational) -> Result<Rational, CurvatureError> {
    if a == b {
        Ok(Rational::zero())
    } else {
        kappa_p(g, a, b, p)
    }
}

fn factor_lly(g: &Graph, a: usize, b: usize) -> Result<Rational, CurvatureError> {
    if a == b {
        Ok(Rational::zero())
    } else {
        kappa_lly(g, a, b)
    }
}

/// Compares curvature on `G x H` with the weighted combination of factor
/// curvatures, for `kappa_p` at each given `p` and for `kappa_LLY`.
pub fn product_checks(
    g: &Graph,
    h: &Graph,
    pairs: &[ProductPair],
    ps: &[Rational],
) -> Result<Vec<(ProductPair, String, Rational, Rational)>, CurvatureError> {
    let prod = cartesian_product(g, h);
    let nh = h.vertex_count();
    let (dg, dh) = (g.degree(0) as u64, h.degree(0) as u64);
    pairs
        .par_iter()
        .map(|&pair| {
            let ProductPair {
                w: (w1, w2),
                z: (z1, z2),
            } = pair;
            let (a, b) = (w1 * nh + z1, w2 * nh + z2);
            let dist_g = g.dist(w1, w2).expect("connected factor") as u64;
            let dist_h = h.dist(z1, z2).expect("connected factor") as u64;
            let mut rows = Vec::new();
            for p in ps {
                let rhs = product_formula_rhs(
                    &factor_kappa(g, w1, w2, p)?,
                    &factor_kappa(h, z1, z2, p)?,
                    dg,
                    dh,
                    dist_g,
                    dist_h,
                )?;
                rows.push((
                    pair,
                    format!("p={}", format_rational(p)),
                    rhs,
                    kappa_p(&prod, a, b, p)?,
                ));
            }
            let rhs = product_formula_rhs(
                &factor_lly(g, w1, w2)?,
                &factor_lly(h, z1, z2)?,
                dg,
                dh,
                dist_g,
                dist_h,
            )?;
            rows.push((pair, "lly".to_string(), rhs, kappa_lly(&prod, a, b)?));
            Ok(rows)
        })
        .collect::<Result<Vec<_>, CurvatureError>>()
        .map(|nested| nested.into_iter().flatten().collect())
}

/// Cartesian products of regular graphs against the product formula.
pub fn product_suite(seed: u64) -> Result<SuiteReport, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let factors = [
        ("C6 x K3", cycle(6)?, complete(3)?),
        ("C4 x C4", cycle(4)?, cycle(4)?),
        ("K4 x C6", complete(4)?, cycle(6)?),
    ];
    let ps = [rat(1, 2), rat(3, 4)];
    let mut checks = Vec::new();
    for (name, g, h) in &factors {
        let pairs = product_pairs(g, h, 12, &mut rng);
        for (pair, which, rhs, direct) in product_checks(g, h, &pairs, &ps)? {
            checks.push(Check::equal(
                format!(
                    "{name} ({},{})-({},{}) {which}",
                    pair.w.0, pair.z.0, pair.w.1, pair.z.1
                ),
                &rhs,
                &direct,
            ));
        }
    }
    Ok(SuiteReport {
        suite: Suite::Product,
        checks,
    })
}

/// Seeded random connected graphs on 4 to 10 vertices.
pub fn random_graphs(seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(4..=10);
            let q = rng.gen_range(0.0..0.4);
            random_connected(&mut rng, n, q)
        })
        .collect()
}

/// Per-pair outcomes of the structural properties of idleness functions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairFindings {
    pub pairs: usize,
    pub profile_ok: usize,
    pub stated_chain: usize,
    pub leafless_pairs: usize,
    pub leafless_stated_chain: usize,
    pub at_most_three_pieces: usize,
    pub concave: usize,
    pub last_piece_covers_half: usize,
    pub first_piece_covers_start: usize,
    pub critical_bounds: usize,
    pub gap_in_range: usize,
    pub gap_is_delta_above_half: usize,
}

impl PairFindings {
    fn merge(mut self, o: Self) -> Self {
        self.pairs += o.pairs;
        self.profile_ok += o.profile_ok;
        self.stated_chain += o.stated_chain;
        self.leafless_pairs += o.leafless_pairs;
        self.leafless_stated_chain += o.leafless_stated_chain;
        self.at_most_three_pieces += o.at_most_three_pieces;
        self.concave += o.concave;
        self.last_piece_covers_half += o.last_piece_covers_half;
        self.first_piece_covers_start += o.first_piece_covers_start;
        self.critical_bounds += o.critical_bounds;
        self.gap_in_range += o.gap_in_range;
        self.gap_is_delta_above_half += o.gap_is_delta_above_half;
        self
    }
}

/// Evaluates every structural property on one pair at distance >= 2.
pub fn pair_findings(g: &Graph, x: usize, y: usize) -> PairFindings {
    let mut out = PairFindings {
        pairs: 1,
        ..Default::default()
    };
    let Ok(profile) = idleness_profile(g, x, y) else {
        return out;
    };
    out.profile_ok = 1;
    out.stated_chain = usize::from(profile.satisfies_stated_chain());
    if profile.d_x >= 2 && profile.d_y >= 2 {
        out.leafless_pairs = 1;
        out.leafless_stated_chain = out.stated_chain;
    }
    let f = profile.to_piecewise();
    let pieces = f.pieces();
    out.at_most_three_pieces = usize::from(pieces.len() <= 3);
    out.concave = usize::from(f.is_concave());
    out.last_piece_covers_half =
        usize::from(pieces.last().is_some_and(|p| p.covers(&rat(1, 2), &int(1))));
    out.first_piece_covers_start = usize::from(
        pieces
            .first()
            .is_some_and(|p| p.covers(&int(0), &profile.critical_lower_bound())),
    );
    out.critical_bounds = usize::from(check_critical_bounds(&profile).all_passed());

    let delta = i64::from(profile.delta);
    let in_range = [rat(1, 100), rat(1, 3), rat(1, 2), int(1)].iter().all(|p| {
        optimal_potential_gap(g, x, y, p).is_ok_and(|gap| (delta - 2..=delta).contains(&gap))
    });
    out.gap_in_range = usize::from(in_range);
    let above_half = [rat(3, 5), rat(3, 4), rat(9, 10)]
        .iter()
        .all(|p| optimal_potential_gap(g, x, y, p).is_ok_and(|gap| gap == delta));
    out.gap_is_delta_above_half = usize::from(above_half);
    out
}

/// Structural findings over every pair at distance >= 2 of every graph.
pub fn structure_findings(graphs: &[Graph]) -> PairFindings {
    graphs
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.vertex_count();
            (0..n)
                .flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
                .filter(|&(x, y)| g.dist(x, y).is_some_and(|d| d >= 2))
                .map(move |(x, y)| pair_findings(g, x, y))
        })
        .reduce(PairFindings::default, PairFindings::merge)
}

/// Whether some pair of `g` has `kappa_p > 0`.
pub fn has_positive_pair(g: &Graph, p: &Rational) -> bool {
    let n = g.vertex_count();
    (0..n).any(|x| (x + 1..n).any(|y| kappa_p(g, x, y, p).is_ok_and(|k| k.is_positive())))
}

/// Structural properties of idleness functions on random graphs.
pub fn bounds_suite(seed: u64, count: usize) -> Result<SuiteReport, VerifyError> {
    let graphs = random_graphs(seed, count);
    let f = structure_findings(&graphs);
    let total = f.pairs;
    let positive = graphs
        .par_iter()
        .filter(|g| has_positive_pair(g, &rat(1, 2)))
        .count();
    let checks = vec![
        Check::count("profile computed and validated", f.profile_ok, total),
        Check::count(
            "c-chain with right end 1 - 1/d_x - 1/d_y (both degrees >= 2)",
            f.leafless_stated_chain,
            f.leafless_pairs,
        ),
        Check::count("at most three pieces", f.at_most_three_pieces, total),
        Check::count("concave", f.concave, total),
        Check::count(
            "last piece covers [1/2, 1]",
            f.last_piece_covers_half,
            total,
        ),
        Check::count(
            "first piece covers [0, 1/(1+lcm)]",
            f.first_piece_covers_start,
            total,
        ),
        Check::count(
            "critical points: bounds and a/(a+lcm) form",
            f.critical_bounds,
            total,
        ),
        Check::count("potential gap in [delta-2, delta]", f.gap_in_range, total),
        Check::count(
            "potential gap = delta for p > 1/2",
            f.gap_is_delta_above_half,
            total,
        ),
        Check::count(
            "graph has a pair with kappa_1/2 > 0",
            positive,
            graphs.len(),
        ),
    ];
    Ok(SuiteReport {
        suite: Suite::Bounds,
        checks,
    })
}

/// The five-vertex tree `x - w - y` with leaves `z1, z2` on `y`.
pub fn figure3_suite() -> Result<SuiteReport, VerifyError> {
    let pair = figure3();
    let g = &pair.graph;
    let v = |l: &str| g.vertex_by_label(l).expect("figure3 labels");
    let expected = [
        ("x", "w", int(1)),
        ("w", "y", rat(-1, 3)),
        ("y", "z1", rat(2, 3)),
        ("y", "z2", rat(2, 3)),
        ("x", "y", rat(1, 3)),
        ("x", "z1", rat(2, 3)),
        ("x", "z2", rat(2, 3)),
    ];
    let mut checks = Vec::new();
    for (a, b, value) in expected {
        checks.push(Check::equal(
            format!("kappa_LLY({a},{b})"),
            &value,
            &kappa_lly(g, v(a), v(b))?,
        ));
    }
    let half = rat(1, 2);
    let x = v("x");
    let mut kappa_min: Option<Rational> = None;
    for y in (0..g.vertex_count()).filter(|&y| y != x) {
        let k = kappa_p(g, x, y, &half)?;
        kappa_min = Some(kappa_min.map_or(k.clone(), |m| m.min(k)));
    }
    let kappa_min = kappa_min.expect("more than one vertex");
    checks.push(Check::equal("min_y kappa_1/2(x,y)", &rat(1, 6), &kappa_min));
    let bound = bonnet_myers_diameter_bound(&kappa_min, &half)?;
    let ecc = int(g.eccentricity(x).into());
    checks.push(Check::text(
        "eccentricity(x) <= 2(1-p)/kappa",
        format!("<= {}", format_rational(&bound)),
        if ecc <= bound {
            format!("<= {}", format_rational(&bound))
        } else {
            format_rational(&ecc)
        },
    ));
    checks.push(Check::equal("eccentricity(x)", &int(3), &ecc));
    Ok(SuiteReport {
        suite: Suite::Figure3,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_default_passes() {
        let report = family_suite(1, 1, 1).unwrap();
        assert!(report.passed(), "{:#?}", report.checks);
    }

    #[test]
    fn family_without_first_paths() {
        let report = family_suite(0, 1, 0).unwrap();
        assert!(report.passed(), "{:#?}", report.checks);
    }

    #[test]
    fn figure3_passes() {
        let report = figure3_suite().unwrap();
        assert!(report.passed(), "{:#?}", report.checks);
    }

    #[test]
    fn tree_passes() {
        assert!(tree_suite().unwrap().passed());
    }

    #[test]
    fn check_display() {
        let c = Check::equal("c", &rat(1, 2), &rat(1, 3));
        assert_eq!(c.to_string(), "FAIL c: expected 1/2, computed 1/3");
    }
}
