fn main() {
    std::process::exit(rootpoly::cli::main_with_args(std::env::args_os()));
}
