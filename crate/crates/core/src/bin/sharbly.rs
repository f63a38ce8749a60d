fn main() {
    std::process::exit(sharbly::cli::run(std::env::args_os()));
}
