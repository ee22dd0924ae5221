use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = nilcone_cli::run(std::env::args_os());
    let text = result.render();
    let mut out: Box<dyn Write> = if result.is_ok() || result.json {
        Box::new(std::io::stdout())
    } else {
        Box::new(std::io::stderr())
    };
    // A closed pipe is not worth a panic.
    let _ = writeln!(out, "{}", text.trim_end());
    ExitCode::from(result.exit_code)
}
