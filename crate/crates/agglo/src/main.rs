fn main() {
    std::process::exit(agglo::cli::main_from_args(std::env::args_os()));
}
