fn main() {
    std::process::exit(spc_cli::app::main_with_args(std::env::args_os()));
}
