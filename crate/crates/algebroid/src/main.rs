use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let code = std::panic::catch_unwind(|| {
        let mut out = std::io::stdout().lock();
        let mut err = std::io::stderr().lock();
        let code = algebroid::cli::run(&args, &mut out, &mut err);
        let _ = out.flush();
        code
    })
    .unwrap_or(algebroid::cli::EXIT_INVARIANT);
    ExitCode::from(u8::try_from(code).unwrap_or(algebroid::cli::EXIT_INVARIANT as u8))
}
