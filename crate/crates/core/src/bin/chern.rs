fn main() {
    std::process::exit(chern::io::cli::main_with(std::env::args_os()));
}
