fn main() {
    std::process::exit(tenscalc::run_placeholder());
}
