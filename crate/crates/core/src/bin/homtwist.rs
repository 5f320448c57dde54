fn main() {
    std::process::exit(homtwist::cli::main());
}
