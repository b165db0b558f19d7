fn main() -> std::process::ExitCode {
    chebcube::cli::main()
}
