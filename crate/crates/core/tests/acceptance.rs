//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.
//!
//! Expected values are either closed forms quoted from the theory or are
//! produced here by independent means (brute force, direct formulas); the
//! library is only ever the thing being checked.

use std::collections::BTreeSet;
use std::process::ExitCode;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ricci_idleness::curvature::{
    check_critical_bounds, critical_points, evaluate_profile, idleness_profile, kappa_lly, kappa_p,
    optimal_potential_gap, product_formula_rhs, reconstruct_by_sampling, IdlenessProfile,
};
use ricci_idleness::generators::{
    cartesian_product, complete, cycle, family, figure3, hex_torus, random_connected, tree_pair,
};
use ricci_idleness::graph::Graph;
use ricci_idleness::rational::{format_rational, int, lcm, rat, Rational};
use ricci_idleness::transport::{
    check_certificate, integerize_potential, lazy_measure, oracle_w1_enum, w1,
};

struct Outcome {
    passed: bool,
    summary: String,
    details: Vec<String>,
}

impl Outcome {
    fn new(summary: impl Into<String>) -> Self {
        Self {
            passed: true,
            summary: summary.into(),
            details: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.passed = false;
            if self.details.len() < 8 {
                self.details.push(detail());
            }
        }
    }

    fn note(&mut self, line: String) {
        self.details.push(line);
    }
}

fn seeded_graphs(seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(4..=10);
            let q = rng.gen_range(0.0..0.4);
            random_connected(&mut rng, n, q)
        })
        .collect()
}

fn pairs_at_least_two(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| g.dist(x, y).is_some_and(|d| d >= 2))
        .collect()
}

/// Exact three-path family constants and critical points.
fn criterion_1() -> Outcome {
    let params = [
        (1, 1, 1),
        (2, 1, 0),
        (1, 1, 0),
        (1, 2, 3),
        (3, 0, 2),
        (0, 2, 1),
    ];
    let mut out = Outcome::new(format!(
        "family constants and critical points for {} parameter triples",
        params.len()
    ));
    for (m, n, k) in params {
        let pair = family(m, n, k).unwrap();
        let prof = idleness_profile(&pair.graph, pair.x, pair.y).unwrap();
        let (m, n, k) = (m as i64, n as i64, k as i64);
        let d = 2 + m + n + k;
        let c = [
            rat(3 * m + 2 * n + k + 2, d),
            rat(2 * m + 2 * n + k + 2, d),
            int(1),
        ];
        let got: Vec<Rational> = prof.constants().into_iter().cloned().collect();
        out.require(got == c, || {
            format!("G({m},{n},{k}): c = {got:?}, expected {c:?}")
        });
        let mut expected: Vec<Rational> = [rat(m, d + m), rat(m + n, d + m + n)]
            .into_iter()
            .filter(Signed::is_positive)
            .collect();
        expected.dedup();
        let crit = critical_points(&prof);
        out.require(crit == expected, || {
            format!("G({m},{n},{k}): critical points {crit:?}, expected {expected:?}")
        });
        out.require(
            prof.p1 == rat(m, d + m) && prof.p2 == rat(m + n, d + m + n),
            || format!("G({m},{n},{k}): p1 = {}, p2 = {}", prof.p1, prof.p2),
        );
    }
    out
}

/// The larger critical point reaches the upper bound when k = 0.
fn criterion_2() -> Outcome {
    let mut out = Outcome::new("upper bound (D-2)/(2D-2) attained for k = 0, D in {4, 5, 6}");
    let mut cases = 0;
    for d in 4i64..=6 {
        for n in 0..=d - 2 {
            let m = d - 2 - n;
            cases += 1;
            let pair = family(m as usize, n as usize, 0).unwrap();
            let prof = idleness_profile(&pair.graph, pair.x, pair.y).unwrap();
            let target = rat(d - 2, 2 * d - 2);
            let larger = critical_points(&prof).last().cloned();
            out.require(larger.as_ref() == Some(&target), || {
                format!("G({m},{n},0): larger critical point {larger:?}, expected {target}")
            });
            let report = check_critical_bounds(&prof);
            let name = format!("upper({})", format_rational(&target));
            let attained = report.find(&name).is_some_and(|c| c.passed && c.attained);
            out.require(attained && report.all_passed(), || {
                format!("G({m},{n},0): bound report {report:?}")
            });
        }
    }
    out.summary.push_str(&format!(" ({cases} graphs)"));
    out
}

/// Hexagonal tiling: edges and the distance-7 sphere.
fn criterion_3() -> Outcome {
    let g = hex_torus(20, 20).unwrap();
    let sphere = g.sphere(0, 7);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Outcome::new(format!(
        "hex torus 20x20: {} edges at -(2/3)(1-p); distance-7 sphere ({} vertices) gives +-(2/21)(1-p)",
        edges.len(),
        sphere.len()
    ));
    for p in [int(0), rat(1, 4), rat(1, 2)] {
        let q = Rational::one() - &p;
        let edge_value = rat(-2, 3) * &q;
        for &(u, v) in &edges {
            let k = kappa_p(&g, u, v, &p).unwrap();
            out.require(k == edge_value, || format!("edge ({u},{v}) at p={p}: {k}"));
        }
        let values: BTreeSet<Rational> = sphere
            .iter()
            .map(|&y| kappa_p(&g, 0, y, &p).unwrap())
            .collect();
        let expected: BTreeSet<Rational> = [rat(2, 21) * &q, rat(-2, 21) * &q].into();
        out.require(values == expected, || {
            format!("sphere at p={p}: {values:?}")
        });
    }
    out
}

/// Regular trees.
fn criterion_4() -> Outcome {
    let mut out =
        Outcome::new("regular tree kappa_p = (4-2d)/(dL) (1-p) for d in {3,4}, L in {1,2,3}");
    for d in [3i64, 4] {
        for l in [1i64, 2, 3] {
            let pair = tree_pair(d as usize, l as usize).unwrap();
            out.require(pair.delta() as i64 == l, || {
                format!("d={d} L={l}: pair at distance {}", pair.delta())
            });
            for p in [int(0), rat(1, 2), rat(3, 4)] {
                let expected = rat(4 - 2 * d, d * l) * (Rational::one() - &p);
                let k = kappa_p(&pair.graph, pair.x, pair.y, &p).unwrap();
                out.require(k == expected, || {
                    format!("d={d} L={l} p={p}: {k}, expected {expected}")
                });
            }
        }
    }
    out
}

/// The product formula written out directly, as an oracle for
/// `product_formula_rhs`.
fn weighted_mean(terms: [(u64, u64, &Rational); 2]) -> Rational {
    let degrees: u64 = terms.iter().map(|t| t.0).sum();
    let dists: u64 = terms.iter().map(|t| t.1).sum();
    let num: Rational = terms
        .iter()
        .filter(|t| t.1 > 0)
        .map(|t| t.2 * Rational::from_integer((t.0 * t.1).into()))
        .sum();
    num / Rational::from_integer((degrees * dists).into())
}

/// Cartesian products of regular graphs.
fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let factors = [
        ("C6 x K3", cycle(6).unwrap(), complete(3).unwrap()),
        ("C4 x C4", cycle(4).unwrap(), cycle(4).unwrap()),
        ("K4 x C6", complete(4).unwrap(), cycle(6).unwrap()),
    ];
    let mut out = Outcome::new(
        "product curvature = degree/distance weighted mean of factors (3 products x 12 pairs)",
    );
    let mut zero_factor_pairs = 0;
    for (name, g, h) in &factors {
        let prod = cartesian_product(g, h);
        let (ng, nh) = (g.vertex_count(), h.vertex_count());
        let (dg, dh) = (g.degree(0) as u64, h.degree(0) as u64);
        let mut pairs = vec![((0, 0), (0, 1)), ((0, 1), (0, 0))];
        while pairs.len() < 12 {
            let w = (rng.gen_range(0..ng), rng.gen_range(0..ng));
            let z = (rng.gen_range(0..nh), rng.gen_range(0..nh));
            if w.0 != w.1 || z.0 != z.1 {
                pairs.push((w, z));
            }
        }
        for ((w1, w2), (z1, z2)) in pairs {
            let (a, b) = (w1 * nh + z1, w2 * nh + z2);
            let (sg, sh) = (
                g.dist(w1, w2).unwrap() as u64,
                h.dist(z1, z2).unwrap() as u64,
            );
            out.require(prod.dist(a, b).unwrap() as u64 == sg + sh, || {
                format!("{name}: product metric at {a},{b}")
            });
            if sg == 0 || sh == 0 {
                zero_factor_pairs += 1;
            }
            let factor = |f: &Graph, u: usize, v: usize, p: Option<&Rational>| {
                if u == v {
                    Rational::zero()
                } else {
                    match p {
                        Some(p) => kappa_p(f, u, v, p).unwrap(),
                        None => kappa_lly(f, u, v).unwrap(),
                    }
                }
            };
            let ps = [Some(rat(1, 2)), Some(rat(3, 4)), None];
            for p in &ps {
                let (kg, kh) = (factor(g, w1, w2, p.as_ref()), factor(h, z1, z2, p.as_ref()));
                let direct = match p {
                    Some(p) => kappa_p(&prod, a, b, p).unwrap(),
                    None => kappa_lly(&prod, a, b).unwrap(),
                };
                let rhs = product_formula_rhs(&kg, &kh, dg, dh, sg, sh).unwrap();
                let oracle = weighted_mean([(dg, sg, &kg), (dh, sh, &kh)]);
                out.require(rhs == oracle, || {
                    format!("{name}: formula {rhs} vs written-out {oracle}")
                });
                out.require(direct == rhs, || {
                    format!(
                        "{name} ({w1},{z1})-({w2},{z2}) p={p:?}: direct {direct}, formula {rhs}"
                    )
                });
            }
        }
    }
    out.require(zero_factor_pairs >= 6, || {
        format!("only {zero_factor_pairs} pairs with a zero factor distance")
    });
    out
}

/// Solver against brute-force dual enumeration, and integer potentials.
fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let ps = [int(0), rat(1, 7), rat(1, 3), rat(1, 2), rat(9, 10)];
    let graphs = seeded_graphs(60, 200);
    let mut out = Outcome::new(format!(
        "W1 = brute-force dual on {} random graphs; integer potentials optimal",
        graphs.len()
    ));
    for (i, g) in graphs.iter().enumerate() {
        let n = g.vertex_count();
        let x = rng.gen_range(0..n);
        let y = (x + rng.gen_range(1..n)) % n;
        let p = &ps[rng.gen_range(0..ps.len())];
        let mu = lazy_measure(g, x, p).unwrap();
        let nu = lazy_measure(g, y, p).unwrap();
        let cert = w1(g, &mu, &nu).unwrap();
        let oracle = oracle_w1_enum(g, &mu, &nu).unwrap();
        out.require(cert.value == oracle, || {
            format!(
                "graph {i} ({x},{y}) p={p}: solver {}, oracle {oracle}",
                cert.value
            )
        });
        out.require(check_certificate(g, &cert).is_ok(), || {
            format!("graph {i}: certificate rejected")
        });
        let phi = integerize_potential(g, &cert).unwrap();
        out.require(phi.is_integer_valued() && phi.is_lipschitz(g), || {
            format!("graph {i}: integer potential invalid")
        });
        out.require(
            phi.objective(&mu, &nu).as_ref() == Some(&cert.value),
            || format!("graph {i}: integer potential objective differs"),
        );
    }
    out
}

/// `1 - 1/d_x - 1/d_y`.
fn degree_gap(prof: &IdlenessProfile) -> Rational {
    Rational::one() - rat(1, prof.d_x as i64) - rat(1, prof.d_y as i64)
}

/// Structural properties on every pair at distance >= 2.
fn criterion_7(graphs: &[Graph]) -> Outcome {
    let mut out = Outcome::new(String::new());
    let mut pairs = 0usize;
    let mut chain_failures: Vec<String> = Vec::new();
    let mut total_chain_failures = 0usize;
    let mut chain_failures_leafless = 0usize;
    let mut corrected_chain_failures = 0usize;
    for (i, g) in graphs.iter().enumerate() {
        for (x, y) in pairs_at_least_two(g) {
            pairs += 1;
            let delta = i64::from(g.dist(x, y).unwrap());
            let prof = idleness_profile(g, x, y).unwrap();
            let tag = || format!("graph {i} pair ({x},{y})");

            let a = &prof.c_lo - &prof.c_mid;
            let b = &prof.c_mid - &prof.c_hi;
            let gap = degree_gap(&prof);
            if !(a > int(-1) && a <= b && b <= gap) {
                total_chain_failures += 1;
                if chain_failures.len() < 3 {
                    chain_failures.push(format!(
                        "{}: c = ({}, {}, {}), d_x = {}, d_y = {}: c_mid - c_hi = {} > {}",
                        tag(),
                        format_rational(&prof.c_lo),
                        format_rational(&prof.c_mid),
                        format_rational(&prof.c_hi),
                        prof.d_x,
                        prof.d_y,
                        format_rational(&b),
                        format_rational(&gap)
                    ));
                }
                if prof.d_x >= 2 && prof.d_y >= 2 {
                    chain_failures_leafless += 1;
                }
                if !(a > int(-1) && a <= b && b <= gap.clone().max(Rational::zero())) {
                    corrected_chain_failures += 1;
                }
            }

            // piece structure from direct sampling, independent of the c_j
            let f = reconstruct_by_sampling(g, x, y).unwrap();
            let pieces = f.pieces();
            out.require(pieces.len() <= 3, || {
                format!("{}: {} pieces", tag(), pieces.len())
            });
            out.require(f.is_concave(), || format!("{}: not concave", tag()));
            out.require(pieces.last().unwrap().covers(&rat(1, 2), &int(1)), || {
                format!("{}: last piece too short", tag())
            });
            let l = lcm(prof.d_x as u64, prof.d_y as u64) as i64;
            out.require(pieces[0].covers(&int(0), &rat(1, 1 + l)), || {
                format!("{}: first piece too short", tag())
            });
            for k in [int(0), rat(1, 3), rat(2, 3)] {
                out.require(f.evaluate(&k) == Some(evaluate_profile(&prof, &k)), || {
                    format!("{}: profile disagrees", tag())
                });
            }
            let interior: Vec<Rational> = f.breakpoints[1..f.breakpoints.len() - 1].to_vec();
            out.require(interior == critical_points(&prof), || {
                format!("{}: breakpoints {interior:?}", tag())
            });

            let (dx, dy) = (prof.d_x as i64, prof.d_y as i64);
            for p in &interior {
                let a = p * int(l) / (Rational::one() - p);
                out.require(a.is_integer() && a >= int(1), || {
                    format!("{}: {p} not of the form a/(a+{l})", tag())
                });
                let upper = rat(1, 2) - rat(1, 2) * rat(dx + dy, 2 * dx * dy - dx - dy);
                out.require(p <= &upper, || {
                    format!("{}: critical point {p} above {upper}", tag())
                });
            }

            for p in [rat(1, 100), rat(1, 3), rat(1, 2), int(1)] {
                let gap = optimal_potential_gap(g, x, y, &p).unwrap();
                out.require((delta - 2..=delta).contains(&gap), || {
                    format!("{}: gap {gap} at p={p}", tag())
                });
            }
            for p in [rat(3, 5), rat(3, 4), rat(9, 10)] {
                let gap = optimal_potential_gap(g, x, y, &p).unwrap();
                out.require(gap == delta, || {
                    format!("{}: gap {gap} != delta at p={p}", tag())
                });
            }
        }
    }
    out.summary = format!(
        "structure on {} random graphs, {pairs} pairs at distance >= 2: c-chain, <= 3 pieces, concavity, piece coverage, critical-point form and bound, potential gap",
        graphs.len()
    );
    if total_chain_failures > 0 {
        out.passed = false;
        out.details.insert(
            0,
            format!(
                "c-chain -1 < c_lo - c_mid <= c_mid - c_hi <= 1 - 1/d_x - 1/d_y fails on {total_chain_failures} pairs, \
                 {chain_failures_leafless} of them with both degrees >= 2; with right end max(0, 1 - 1/d_x - 1/d_y) it fails on {corrected_chain_failures}"
            ),
        );
        for (j, line) in chain_failures.into_iter().enumerate() {
            out.details.insert(1 + j, line);
        }
    }
    out
}

/// The five-vertex tree and the diameter bound.
fn criterion_8() -> Outcome {
    let mut out =
        Outcome::new("five-vertex tree: seven Lin-Lu-Yau values and the radius bound at p = 1/2");
    let pair = figure3();
    let g = &pair.graph;
    let v = |l: &str| g.vertex_by_label(l).unwrap();
    let expected = [
        ("x", "w", int(1)),
        ("w", "y", rat(-1, 3)),
        ("y", "z1", rat(2, 3)),
        ("y", "z2", rat(2, 3)),
        ("x", "y", rat(1, 3)),
        ("x", "z1", rat(2, 3)),
        ("x", "z2", rat(2, 3)),
    ];
    for (a, b, value) in expected {
        let k = kappa_lly(g, v(a), v(b)).unwrap();
        out.require(k == value, || {
            format!("kappa_LLY({a},{b}) = {k}, expected {value}")
        });
    }
    let half = rat(1, 2);
    let x = v("x");
    let kappa_min = (0..g.vertex_count())
        .filter(|&y| y != x)
        .map(|y| kappa_p(g, x, y, &half).unwrap())
        .min()
        .unwrap();
    let bound = int(2) * (Rational::one() - &half) / &kappa_min;
    let ecc = int(g.eccentricity(x).into());
    out.require(kappa_min.is_positive() && ecc <= bound, || {
        format!("eccentricity {ecc} vs 2(1-p)/kappa = {bound} with kappa = {kappa_min}")
    });
    out.note(format!(
        "kappa_1/2 minimum from x = {}, radius bound = {}, eccentricity = {}",
        kappa_min, bound, ecc
    ));
    out
}

/// Finite connected graphs always carry some positive curvature.
fn criterion_9(graphs: &[Graph]) -> Outcome {
    let mut out = Outcome::new(format!(
        "every one of {} random graphs has a pair with kappa_1/2 > 0",
        graphs.len()
    ));
    for (i, g) in graphs.iter().enumerate() {
        let n = g.vertex_count();
        let positive =
            (0..n).any(|x| (x + 1..n).any(|y| kappa_p(g, x, y, &rat(1, 2)).unwrap().is_positive()));
        out.require(positive, || format!("graph {i} has no positive pair"));
    }
    out
}

fn main() -> ExitCode {
    // `cargo test` passes harness flags such as `--quiet`; only a
    // `--list` request needs a different answer.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return ExitCode::SUCCESS;
    }
    let structure_graphs = seeded_graphs(70, 300);
    let mut positive_graphs = structure_graphs.clone();
    positive_graphs.extend(seeded_graphs(60, 200));

    let criteria: Vec<(u32, Box<dyn Fn() -> Outcome>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(criterion_2)),
        (3, Box::new(criterion_3)),
        (4, Box::new(criterion_4)),
        (5, Box::new(criterion_5)),
        (6, Box::new(criterion_6)),
        (7, Box::new(move || criterion_7(&structure_graphs))),
        (8, Box::new(criterion_8)),
        (9, Box::new(move || criterion_9(&positive_graphs))),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        let start = std::time::Instant::now();
        let outcome = run();
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {id}: {} [{:.1}s]",
            outcome.summary,
            start.elapsed().as_secs_f64()
        );
        for line in &outcome.details {
            println!("    {line}");
        }
        if !outcome.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
