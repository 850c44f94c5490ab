fn main() {
    std::process::exit(chowquot_cli::run(std::env::args_os()));
}
