fn main() {
    std::process::exit(young_seminormal::cli::run());
}
