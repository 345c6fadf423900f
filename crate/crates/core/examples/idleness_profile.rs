// The whole idleness function p -> kappa_p(x, y) of a pair at distance >= 2
// from three integer-pinned potential problems.

use std::error::Error;

use ricci_idleness::curvature::{
    check_critical_bounds, critical_points, idleness_profile, kappa_p,
};
use ricci_idleness::generators::family;
use ricci_idleness::rational::{format_rational, rat};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (m, n, k) in [(1, 1, 1), (1, 1, 0), (0, 1, 0), (2, 1, 0)] {
        let pair = family(m, n, k)?;
        let prof = idleness_profile(&pair.graph, pair.x, pair.y)?;
        let [c_lo, c_mid, c_hi] = prof.constants().map(format_rational);
        let critical: Vec<String> = critical_points(&prof).iter().map(format_rational).collect();
        println!(
            "G({m},{n},{k}): delta = {}, c = ({c_lo}, {c_mid}, {c_hi})",
            prof.delta
        );
        println!("  critical points: [{}]", critical.join(", "));
        for piece in prof.to_piecewise().pieces() {
            println!(
                "  on [{}, {}]: kappa = {} p + {}",
                format_rational(&piece.from),
                format_rational(&piece.to),
                format_rational(&piece.slope),
                format_rational(&piece.intercept)
            );
        }
        for check in check_critical_bounds(&prof).checks {
            let mark = if check.attained { "attained" } else { "" };
            println!(
                "  {}: {} <= {} {mark}",
                check.name,
                format_rational(&check.lhs),
                format_rational(&check.rhs)
            );
        }
        // spot check against a direct transport computation
        let p = rat(1, 5);
        let direct = kappa_p(&pair.graph, pair.x, pair.y, &p)?;
        if direct != prof.to_piecewise().evaluate(&p).ok_or("p outside [0, 1]")? {
            return Err(format!("profile disagrees with kappa_1/5 = {direct}").into());
        }
    }

    let pair = family(1, 1, 1)?;
    let prof = idleness_profile(&pair.graph, pair.x, pair.y)?;
    if critical_points(&prof) != vec![rat(1, 6), rat(2, 7)] {
        return Err("G(1,1,1) critical points moved".into());
    }
    println!("{}", prof.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
