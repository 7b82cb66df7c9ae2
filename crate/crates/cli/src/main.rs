use std::io::Write;

fn main() {
    let out = czorb_cli::run(std::env::args_os().skip(1));
    // Ignore write errors on closed pipes; the exit code still reports the result.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
