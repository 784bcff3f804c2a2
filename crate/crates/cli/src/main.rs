fn main() {
    std::process::exit(arith_cli::run(std::env::args_os()));
}
