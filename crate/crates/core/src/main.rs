use std::io::{self, Write};

fn main() {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let code = primegraph::cli::run(std::env::args_os(), &mut stdin.lock(), &mut out, &mut stderr.lock());
    let _ = out.flush();
    std::process::exit(code);
}
