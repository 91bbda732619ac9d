fn main() {
    std::process::exit(glmn::cli::run(std::env::args_os()));
}
