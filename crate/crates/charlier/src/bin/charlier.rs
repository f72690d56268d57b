fn main() {
    std::process::exit(charlier::cli::run(std::env::args()));
}
