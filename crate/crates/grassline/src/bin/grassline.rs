use std::io::Read;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let env = std::env::var("GRASSLINE_BOUNDS").ok();
    let (out, err, code) = grassline::cli::main_with(&args, env.as_deref(), || {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    });
    if !err.is_empty() {
        eprintln!("{err}");
    }
    println!("{out}");
    std::process::exit(code);
}
