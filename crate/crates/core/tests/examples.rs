mod transport_certificate {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/transport_certificate.rs"
    ));
}
mod idleness_profile {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/idleness_profile.rs"
    ));
}
mod hexagonal_torus {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/hexagonal_torus.rs"
    ));
}
mod regular_tree {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/regular_tree.rs"
    ));
}
mod cartesian_product {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/cartesian_product.rs"
    ));
}
mod radius_bound {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/radius_bound.rs"
    ));
}
mod sampling_reconstruction {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/sampling_reconstruction.rs"
    ));
}
mod graph_files {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/graph_files.rs"
    ));
}

#[test]
fn transport_certificate_runs() {
    transport_certificate::run_example().expect("transport certificate example should run");
}

#[test]
fn idleness_profile_runs() {
    idleness_profile::run_example().expect("idleness profile example should run");
}

#[test]
fn hexagonal_torus_runs() {
    hexagonal_torus::run_example().expect("hexagonal torus example should run");
}

#[test]
fn regular_tree_runs() {
    regular_tree::run_example().expect("regular tree example should run");
}

#[test]
fn cartesian_product_runs() {
    cartesian_product::run_example().expect("cartesian product example should run");
}

#[test]
fn radius_bound_runs() {
    radius_bound::run_example().expect("radius bound example should run");
}

#[test]
fn sampling_reconstruction_runs() {
    sampling_reconstruction::run_example().expect("sampling example should run");
}

#[test]
fn graph_files_runs() {
    graph_files::run_example().expect("graph files example should run");
}
