use std::process::exit;

fn main() {
    let (code, out) = superqsym::cli::run(std::env::args());
    print!("{out}");
    exit(code);
}
