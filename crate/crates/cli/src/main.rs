fn main() {
    std::process::exit(srg_cli::run(std::env::args_os()));
}
