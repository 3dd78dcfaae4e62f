fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("AVOID_LOG", "warn")).init();
    std::process::exit(avoid_cli::run(std::env::args_os()));
}
