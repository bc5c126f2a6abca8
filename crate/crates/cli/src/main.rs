fn main() {
    eprintln!("error: validation: no subcommands wired up yet");
    std::process::exit(1);
}
