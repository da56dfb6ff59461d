use std::process::ExitCode;

fn main() -> ExitCode {
    let mut stdout = std::io::stdout();
    let code = shadowlab::cli::run(std::env::args_os(), &mut stdout);
    ExitCode::from(code as u8)
}
