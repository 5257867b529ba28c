fn main() {
    std::process::exit(spectre_cli::run(std::env::args_os()));
}
