fn main() {
    std::process::exit(lie_algebroid::cli::main());
}
