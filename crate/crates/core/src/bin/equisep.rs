use std::io::Write;

fn main() {
    let (code, out) = equisep::cli::run(std::env::args_os());
    let written = if code == 0 {
        std::io::stdout().write_all(out.as_bytes())
    } else {
        std::io::stderr().write_all(out.as_bytes())
    };
    if written.is_err() {
        std::process::exit(1);
    }
    std::process::exit(code);
}
