fn main() {
    std::process::exit(discrete_smooth::cli::run(std::env::args_os()));
}
