fn main() {
    std::process::exit(oscint::cli::run());
}
