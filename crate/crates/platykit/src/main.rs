fn main() {
    std::process::exit(platykit::cli::run(std::env::args_os()));
}
