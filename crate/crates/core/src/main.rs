use std::process::ExitCode;

fn main() -> ExitCode {
    conevol::cli::run()
}
