fn main() -> std::process::ExitCode {
    chernhodge::cli::main()
}
