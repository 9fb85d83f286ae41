fn main() {
    std::process::exit(triality_cli::main_with(std::env::args_os()));
}
