use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code =
        siegel_dims::report::cli::run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    let _ = io::stdout().flush();
    ExitCode::from(code)
}
