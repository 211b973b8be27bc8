fn main() {
    std::process::exit(fluorospec::cli::run(std::env::args_os()));
}
