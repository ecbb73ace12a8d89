use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let code = cpdist::run(std::env::args_os(), &mut stdout.lock());
    ExitCode::from(code as u8)
}
