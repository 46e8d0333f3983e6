fn main() {
    std::process::exit(infinity_series::cli::run(std::env::args_os()));
}
