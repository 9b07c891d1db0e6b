use std::process::ExitCode;

fn main() -> ExitCode {
    asua::cli::run()
}
