fn main() {
    std::process::exit(weylcheb::cli::main_with_args(std::env::args_os()));
}
