fn main() {
    std::process::exit(sgforge::cli::run());
}
