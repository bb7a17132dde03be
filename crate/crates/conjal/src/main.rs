fn main() {
    std::process::exit(conjal::cli::main_entry(std::env::args().skip(1)));
}
