fn main() {
    std::process::exit(lieb::cli::main_with_args(std::env::args_os()));
}
