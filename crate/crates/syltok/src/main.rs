fn main() {
    std::process::exit(syltok::cli::run(std::env::args_os()));
}
