use std::process::ExitCode;

fn main() -> ExitCode {
    let config = match envelope_cli::parse_args(std::env::args_os()) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let mut stderr = std::io::stderr().lock();
    ExitCode::from(envelope_cli::run(&config, &mut stderr) as u8)
}
