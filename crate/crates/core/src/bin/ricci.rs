fn main() {
    std::process::exit(ricci_idleness::cli::main_with_args(std::env::args_os()));
}
