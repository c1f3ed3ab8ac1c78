use std::process::ExitCode;

fn main() -> ExitCode {
    pdmetric::cli::main()
}
