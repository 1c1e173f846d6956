fn main() {
    std::process::exit(pell_lab::run(std::env::args_os()));
}
