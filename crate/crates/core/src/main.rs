fn main() {
    let (code, out) = trigonal::cli::run(std::env::args_os());
    println!("{}", out.trim_end());
    std::process::exit(code);
}
