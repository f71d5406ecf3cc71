fn main() {
    std::process::exit(discrete_catenoids::cli::cli_main(std::env::args_os()));
}
