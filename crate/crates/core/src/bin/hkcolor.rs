fn main() {
    std::process::exit(hkcolor::cli::run(std::env::args_os()));
}
