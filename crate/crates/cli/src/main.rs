fn main() {
    std::process::exit(maskcheck::main_with_args(std::env::args_os()));
}
