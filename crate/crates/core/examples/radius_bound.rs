// Lin-Lu-Yau curvature on a small tree and the distance bound that positive
// curvature at one vertex gives: ecc(x) <= 2 (1 - p) / min_y kappa_p(x, y).

use std::error::Error;

use ricci_idleness::curvature::{bonnet_myers_diameter_bound, kappa_lly, kappa_p};
use ricci_idleness::generators::figure3;
use ricci_idleness::rational::{format_rational, rat};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let pair = figure3();
    let g = &pair.graph;
    let v = |l: &str| g.vertex_by_label(l).ok_or_else(|| format!("no vertex {l}"));

    for (a, b) in [("x", "w"), ("w", "y"), ("y", "z1"), ("x", "y"), ("x", "z1")] {
        println!(
            "kappa_LLY({a}, {b}) = {}",
            format_rational(&kappa_lly(g, v(a)?, v(b)?)?)
        );
    }

    let x = v("x")?;
    for p in [rat(0, 1), rat(1, 2), rat(2, 3)] {
        let kappa = (0..g.vertex_count())
            .filter(|&y| y != x)
            .map(|y| kappa_p(g, x, y, &p))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .min()
            .ok_or("single vertex")?;
        match bonnet_myers_diameter_bound(&kappa, &p) {
            Ok(bound) => {
                println!(
                    "p = {}: min kappa = {}, ecc(x) = {} <= {}",
                    format_rational(&p),
                    format_rational(&kappa),
                    g.eccentricity(x),
                    format_rational(&bound)
                );
                if rat(g.eccentricity(x).into(), 1) > bound {
                    return Err("radius bound violated".into());
                }
            }
            Err(e) => println!("p = {}: {e}", format_rational(&p)),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
