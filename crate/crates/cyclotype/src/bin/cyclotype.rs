use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = cyclotype::cli::run(&args, &mut out, &mut err);
    ExitCode::from(code as u8)
}
