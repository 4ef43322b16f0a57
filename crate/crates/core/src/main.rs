fn main() {
    std::process::exit(bisetkit::cli::main());
}
