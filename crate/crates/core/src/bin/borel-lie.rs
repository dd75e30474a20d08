fn main() {
    std::process::exit(borel_lie::cli::run(std::env::args_os()));
}
