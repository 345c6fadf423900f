// Exact W1 between lazy random-walk measures, with a primal plan, a dual
// potential, an independent certificate check and an integer-valued potential.

use std::error::Error;

use ricci_idleness::generators::family;
use ricci_idleness::rational::{format_rational, rat};
use ricci_idleness::transport::{
    check_certificate, integerize_potential, lazy_measure, oracle_w1_enum, w1,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let pair = family(1, 0, 0)?;
    let g = &pair.graph;
    let name = |v: usize| g.label(v).unwrap_or("?").to_string();

    for p in [rat(0, 1), rat(1, 3), rat(1, 2)] {
        let mu = lazy_measure(g, pair.x, &p)?;
        let nu = lazy_measure(g, pair.y, &p)?;
        let cert = w1(g, &mu, &nu)?;
        let report = check_certificate(g, &cert);
        if !report.is_ok() {
            return Err(format!("certificate rejected: {:?}", report.violations).into());
        }
        let brute = oracle_w1_enum(g, &mu, &nu)?;
        if brute != cert.value {
            return Err(format!("solver {} != enumeration {}", cert.value, brute).into());
        }
        let phi = integerize_potential(g, &cert)?;
        if phi.objective(&mu, &nu).as_ref() != Some(&cert.value) || !phi.is_integer_valued() {
            return Err("integer potential lost optimality".into());
        }

        println!(
            "p = {}: W1 = {}",
            format_rational(&p),
            format_rational(&cert.value)
        );
        for (&(u, v), m) in &cert.plan.entries {
            println!(
                "  move {:>6} from {:>5} to {:>5}",
                format_rational(m),
                name(u),
                name(v)
            );
        }
        let values: Vec<String> = phi
            .values
            .iter()
            .map(|(&v, f)| format!("{}={}", name(v), f))
            .collect();
        println!("  integer potential: {}", values.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
