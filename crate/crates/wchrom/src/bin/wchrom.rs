fn main() {
    std::process::exit(wchrom::cli::run());
}
