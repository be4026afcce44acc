fn main() {
    std::process::exit(youngbound::cli::run(std::env::args_os()));
}
