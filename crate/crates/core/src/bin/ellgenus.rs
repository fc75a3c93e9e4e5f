fn main() {
    std::process::exit(ellgenus::cli::main_with_args(std::env::args_os()));
}
