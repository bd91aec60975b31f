fn main() {
    std::process::exit(licol::cli::run());
}
