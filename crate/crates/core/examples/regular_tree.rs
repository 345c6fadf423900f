// Curvature between two vertices of a d-regular tree, computed inside a
// finite ball that is deep enough to see no truncation.

use std::error::Error;

use ricci_idleness::curvature::kappa_p;
use ricci_idleness::generators::{tree_ball, tree_pair};
use ricci_idleness::rational::{format_rational, rat, Rational};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ball = tree_ball(3, 3)?;
    let near_leaf = ball.first_at_depth(2);
    if let Err(e) = ball.marked_pair(ball.root, near_leaf) {
        println!("rejected pair next to the truncation: {e}");
    }

    for d in [3i64, 4, 5] {
        for l in 1..=3i64 {
            let pair = tree_pair(d as usize, l as usize)?;
            let mut row = Vec::new();
            for p in [rat(0, 1), rat(1, 2), rat(3, 4)] {
                let kappa = kappa_p(&pair.graph, pair.x, pair.y, &p)?;
                let expected = rat(4 - 2 * d, d * l) * (Rational::from_integer(1.into()) - &p);
                if kappa != expected {
                    return Err(format!("d={d} L={l} p={p}: got {kappa}, want {expected}").into());
                }
                row.push(format!("{:>7}", format_rational(&kappa)));
            }
            println!(
                "d={d} L={l} ({} vertices): {}",
                pair.graph.vertex_count(),
                row.join(" ")
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
