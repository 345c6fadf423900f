// Saving a generated graph as JSON, loading it back and running the command
// line front end on the file.

use std::error::Error;

use clap::Parser;
use ricci_idleness::cli::{run, RunConfig};
use ricci_idleness::generators::family;
use ricci_idleness::io::{graph_to_json, read_graph, write_graph};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let pair = family(1, 1, 0)?;
    let path = std::env::temp_dir().join(format!("ricci-example-{}.json", std::process::id()));
    write_graph(&path, &pair.graph)?;
    let loaded = read_graph(&path)?;
    if graph_to_json(&loaded) != graph_to_json(&pair.graph) {
        return Err("round trip changed the graph".into());
    }
    println!(
        "wrote {} vertices, {} edges to {}",
        loaded.vertex_count(),
        loaded.edge_count(),
        path.display()
    );

    let file = path.to_string_lossy().into_owned();
    for args in [
        vec![
            "ricci",
            "curvature",
            "--graph",
            &file,
            "--pair",
            "x,y",
            "--p",
            "0,1/5,1/3,1",
        ],
        vec![
            "ricci", "idleness", "--graph", &file, "--pair", "x,y", "--format", "json",
        ],
    ] {
        let outcome = run(&RunConfig::try_parse_from(&args)?)?;
        println!("$ {}\n{}", args[1..].join(" "), outcome.output.trim_end());
    }
    std::fs::remove_file(&path)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
