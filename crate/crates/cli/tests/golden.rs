//! Replays `fixtures/paper/cases.txt` and compares stdout with the stored
//! reports. Set `GNICE_BLESS=1` to rewrite them.

use std::path::Path;
use std::process::Command;

#[test]
fn recorded_fixtures() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/paper");
    let cases = std::fs::read_to_string(dir.join("cases.txt")).unwrap();
    let bless = std::env::var_os("GNICE_BLESS").is_some();
    let mut failures = Vec::new();
    for line in cases.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')) {
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        let [name, session, args] = fields[..] else {
            panic!("malformed case `{line}`");
        };
        let out = Command::new(env!("CARGO_BIN_EXE_gnice"))
            .arg(dir.join(session))
            .args(args.split_whitespace())
            .output()
            .unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let actual = String::from_utf8(out.stdout).unwrap();
        let expected_path = dir.join("expected").join(format!("{name}.out"));
        if bless {
            std::fs::create_dir_all(expected_path.parent().unwrap()).unwrap();
            std::fs::write(&expected_path, &actual).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&expected_path).unwrap_or_default();
        if actual != expected {
            failures.push(format!("{name}:\n--- expected\n{expected}--- actual\n{actual}"));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
