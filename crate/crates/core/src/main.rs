fn main() {
    std::process::exit(emsurf::cli::run(std::env::args_os()));
}
