fn main() {
    std::process::exit(llrcal::cli::run(std::env::args_os()));
}
