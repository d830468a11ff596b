fn main() {
    std::process::exit(nivs::cli::run());
}
