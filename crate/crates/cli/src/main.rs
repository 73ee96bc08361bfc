fn main() {
    std::process::exit(lumbral_cli::run(std::env::args_os()));
}
