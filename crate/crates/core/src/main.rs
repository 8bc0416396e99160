use std::io;

fn main() {
    let code = fda_beam::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
