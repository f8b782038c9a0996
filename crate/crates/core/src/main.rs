use std::io::Write;

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("FMETHOD_LOG")).init();
    let out = fmethod::cli::execute(std::env::args_os());
    eprint!("{}", out.stderr);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stdout.flush();
    std::process::exit(out.status.code());
}
