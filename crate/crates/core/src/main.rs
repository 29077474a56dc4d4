fn main() -> std::process::ExitCode {
    hyperdet::cli::run()
}
