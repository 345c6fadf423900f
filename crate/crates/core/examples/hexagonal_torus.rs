// Curvature on the hexagonal tiling, realised as a 20 x 20 brick-wall torus
// that is locally isometric to the plane tiling up to radius 9.

use std::collections::BTreeSet;
use std::error::Error;

use rayon::prelude::*;
use ricci_idleness::curvature::kappa_p;
use ricci_idleness::generators::hex_torus;
use ricci_idleness::rational::{format_rational, rat, Rational};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = hex_torus(20, 20)?;
    let sizes: Vec<usize> = (0..=9).map(|r| g.sphere(0, r).len()).collect();
    println!(
        "{} vertices, sphere sizes up to radius 9: {sizes:?}",
        g.vertex_count()
    );

    let edges: Vec<(usize, usize)> = g.edges().collect();
    let sphere = g.sphere(0, 7);
    for p in [rat(0, 1), rat(1, 2)] {
        let edge_values: BTreeSet<Rational> = edges
            .par_iter()
            .map(|&(u, v)| kappa_p(&g, u, v, &p))
            .collect::<Result<_, _>>()?;
        let far_values: BTreeSet<Rational> = sphere
            .par_iter()
            .map(|&v| kappa_p(&g, 0, v, &p))
            .collect::<Result<_, _>>()?;
        let show =
            |s: &BTreeSet<Rational>| s.iter().map(format_rational).collect::<Vec<_>>().join(", ");
        println!(
            "p = {}: edges {{{}}}, distance 7 {{{}}}",
            format_rational(&p),
            show(&edge_values),
            show(&far_values)
        );

        let q = Rational::from_integer(1.into()) - &p;
        if edge_values != BTreeSet::from([rat(-2, 3) * &q]) {
            return Err("edge curvature is not -2/3 (1 - p)".into());
        }
        if far_values != BTreeSet::from([rat(-2, 21) * &q, rat(2, 21) * &q]) {
            return Err("distance-7 curvature is not +-2/21 (1 - p)".into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
