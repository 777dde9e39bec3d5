fn main() {
    std::process::exit(juggling_cards::cli::main_entry());
}
