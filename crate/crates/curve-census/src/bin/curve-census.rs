fn main() {
    std::process::exit(curve_census::cli::run(std::env::args_os()));
}
