fn main() {
    std::process::exit(gtcent::cli::run(std::env::args_os()))
}
