fn main() {
    std::process::exit(artin_cli::run());
}
