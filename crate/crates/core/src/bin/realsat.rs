fn main() {
    std::process::exit(realsat::cli::main_with_args(std::env::args_os()));
}
