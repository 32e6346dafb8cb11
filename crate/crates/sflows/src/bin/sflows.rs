fn main() {
    std::process::exit(sflows::cli::main_entry());
}
