fn main() {
    std::process::exit(cube_spectra::run(std::env::args_os()));
}
