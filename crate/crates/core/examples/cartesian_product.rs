// Curvature of a Cartesian product from the curvature of its factors.

use std::error::Error;

use ricci_idleness::curvature::{kappa_lly, kappa_p, product_formula_rhs};
use ricci_idleness::generators::{cartesian_product, complete, cycle};
use ricci_idleness::graph::Graph;
use ricci_idleness::rational::{format_rational, rat, Rational};

fn factor(g: &Graph, u: usize, v: usize, p: &Rational) -> Result<Rational, Box<dyn Error>> {
    Ok(if u == v {
        Rational::from_integer(0.into())
    } else {
        kappa_p(g, u, v, p)?
    })
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let (g, h) = (cycle(5)?, complete(4)?);
    let (dg, dh) = (2u64, 3u64);
    let prod = cartesian_product(&g, &h);
    let nh = h.vertex_count();
    println!(
        "C5 x K4: {} vertices, {} edges",
        prod.vertex_count(),
        prod.edge_count()
    );

    for (a, b) in [(0, 1), (0, nh), (0, 2 * nh + 3), (1, 2 * nh)] {
        let (w1, z1, w2, z2) = (a / nh, a % nh, b / nh, b % nh);
        let d_g = u64::from(g.dist(w1, w2).ok_or("disconnected")?);
        let d_h = u64::from(h.dist(z1, z2).ok_or("disconnected")?);
        for p in [rat(1, 2), rat(3, 4)] {
            let direct = kappa_p(&prod, a, b, &p)?;
            let rhs = product_formula_rhs(
                &factor(&g, w1, w2, &p)?,
                &factor(&h, z1, z2, &p)?,
                dg,
                dh,
                d_g,
                d_h,
            )?;
            println!(
                "(({w1},{z1}), ({w2},{z2})) p={}: direct {}, from factors {}",
                format_rational(&p),
                format_rational(&direct),
                format_rational(&rhs)
            );
            if direct != rhs {
                return Err("product formula mismatch".into());
            }
        }
    }

    // the same combination rule for Lin-Lu-Yau curvature on an edge
    let lly = kappa_lly(&prod, 0, 1)?;
    let rhs = product_formula_rhs(
        &Rational::from_integer(0.into()),
        &kappa_lly(&h, 0, 1)?,
        dg,
        dh,
        0,
        1,
    )?;
    println!(
        "LLY on a K4 edge: {} = {}",
        format_rational(&lly),
        format_rational(&rhs)
    );
    if lly != rhs {
        return Err("LLY product mismatch".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
