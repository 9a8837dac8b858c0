fn main() {
    std::process::exit(qvir::cli::main())
}
