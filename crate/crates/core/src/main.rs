fn main() {
    std::process::exit(qcharm::cli::main());
}
