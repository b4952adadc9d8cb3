fn main() {
    std::process::exit(supercapelli::run(std::env::args_os()));
}
