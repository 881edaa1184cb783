fn main() {
    std::process::exit(superdegen::cli::run(std::env::args_os()));
}
