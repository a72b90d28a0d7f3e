fn main() {
    std::process::exit(kncrystal::cli::run(std::env::args_os()));
}
