use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::init();
    let code =
        nelson_forge::cli::main_with(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}
