fn main() {
    std::process::exit(tcl_core::cli::run(std::env::args_os()));
}
