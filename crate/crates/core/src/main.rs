fn main() {
    std::process::exit(rigiditylab::cli::run(std::env::args_os()));
}
