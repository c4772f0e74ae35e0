fn main() {
    std::process::exit(obliteration::cli::run(std::env::args_os()));
}
