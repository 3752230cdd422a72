fn main() {
    std::process::exit(bs1n::cli::run(std::env::args().collect()));
}
