fn main() {
    std::process::exit(demival::cli::main());
}
