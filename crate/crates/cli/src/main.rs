fn main() {
    std::process::exit(afp_cli::run(std::env::args_os()));
}
