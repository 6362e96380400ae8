fn main() {
    std::process::exit(attoclock::cli::run());
}
