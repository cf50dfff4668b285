use std::panic;
use std::process::ExitCode;

fn main() -> ExitCode {
    match panic::catch_unwind(affine_current_kit::cli::run) {
        Ok(code) => ExitCode::from(code as u8),
        Err(_) => ExitCode::from(1),
    }
}
