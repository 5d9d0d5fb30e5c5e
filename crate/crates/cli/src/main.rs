fn main() {
    // Die silently on a closed pipe (`qwords sweep | head`) instead of
    // panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(qwords_cli::app::main_entry());
}
