fn main() {
    std::process::exit(oddwheel::cli::main_with(std::env::args_os()));
}
