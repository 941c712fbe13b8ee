fn main() { std::process::exit(urnwalk::cli::run(std::env::args())); }
