// Recovering the idleness function from exact samples alone, without the
// pinned-potential constants, and comparing the two.

use std::error::Error;

use ricci_idleness::curvature::{candidate_grid, idleness_profile, reconstruct_by_sampling};
use ricci_idleness::generators::{family, star};
use ricci_idleness::rational::format_rational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!(
        "candidate grid for lcm 4: {}",
        candidate_grid(4)
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(" ")
    );

    let pair = family(1, 1, 0)?;
    let sampled = reconstruct_by_sampling(&pair.graph, pair.x, pair.y)?;
    let exact = idleness_profile(&pair.graph, pair.x, pair.y)?.to_piecewise();
    let show = |f: &ricci_idleness::PiecewiseLinear| {
        f.breakpoints
            .iter()
            .zip(&f.values)
            .map(|(p, k)| format!("({}, {})", format_rational(p), format_rational(k)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("G(1,1,0) sampled: {}", show(&sampled));
    println!("G(1,1,0) exact:   {}", show(&exact));
    if sampled != exact {
        return Err("sampling and exact profile disagree".into());
    }

    // an adjacent pair: no constants, only samples
    let g = star(5)?;
    let f = reconstruct_by_sampling(&g, 0, 1)?;
    println!(
        "star edge: {} ({} piece(s), concave: {})",
        show(&f),
        f.piece_count(),
        f.is_concave()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
