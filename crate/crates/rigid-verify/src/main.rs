#![forbid(unsafe_code)]

fn main() {
    let code = rigid_verify::run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
