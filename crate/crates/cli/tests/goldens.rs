use cube_spectra::goldens::{generate, SUITES};

#[test]
fn committed_goldens_match_a_fresh_run() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/goldens");
    for suite in SUITES {
        let path = format!("{dir}/{}", suite.file_name());
        let committed = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
        let fresh = generate(suite);
        if committed != fresh {
            let line = committed.lines().zip(fresh.lines()).position(|(a, b)| a != b);
            panic!("{path} is stale (first differing line {line:?}); run `cube-spectra regen-goldens`");
        }
    }
}

#[test]
fn regen_into_a_fresh_directory_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let code = cube_spectra::run(["cube-spectra", "regen-goldens", "--dir", d, "--format", "tsv", "-o", "/dev/null"]);
    assert_eq!(code, 0);
    let code = cube_spectra::run(["cube-spectra", "regen-goldens", "--dir", d, "--check", "-o", "/dev/null"]);
    assert_eq!(code, 0);
    std::fs::write(dir.path().join("search-table.tsv"), "stale\n").unwrap();
    let code = cube_spectra::run(["cube-spectra", "regen-goldens", "--dir", d, "--check", "-o", "/dev/null"]);
    assert_eq!(code, 1);
}

#[test]
fn goldens_carry_the_closed_form_rows() {
    let bounds = generate(cube_spectra::goldens::Suite::BoundsTable);
    assert!(bounds.lines().nth(1).unwrap().starts_with("6\t2\t1\t"));
    assert!(bounds.lines().nth(1).unwrap().contains("\t4.00000000000\t"));
    assert!(bounds.lines().nth(2).unwrap().starts_with("16\t4\t"));
    let search = generate(cube_spectra::goldens::Suite::SearchTable);
    let ns: Vec<&str> = search.lines().skip(1).map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(ns, (2..=12).map(|n| n.to_string()).collect::<Vec<_>>());
    let hamming = generate(cube_spectra::goldens::Suite::HammingTable);
    assert_eq!(hamming.lines().count(), 1 + (4..=20).map(|d| d / 2 + 1).sum::<usize>());
}
