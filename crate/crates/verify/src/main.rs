fn main() {
    std::process::exit(paley_verify::main_with_args(std::env::args_os()));
}
