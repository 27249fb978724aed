fn main() {
    std::process::exit(hpk_cli::run(std::env::args_os()));
}
