fn main() {
    coalition_frames::cli::configure_threads();
    let code = coalition_frames::cli::run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr(),
    );
    std::process::exit(code);
}
