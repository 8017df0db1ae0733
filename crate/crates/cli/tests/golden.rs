//! Each file under `tests/golden` holds a `$ args` line followed by the
//! exact expected standard output.

use std::fs;
use std::path::Path;
use std::process::Command;

#[test]
fn transcripts_reproduce_byte_for_byte() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut files: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    files.sort();
    assert!(files.len() >= 30, "golden corpus is missing");

    let mut failures = Vec::new();
    for path in &files {
        let text = fs::read_to_string(path).unwrap();
        let (command, expected) = text.split_once('\n').unwrap();
        let args: Vec<&str> = command.strip_prefix("$ ").unwrap().split_whitespace().collect();
        let out = Command::new(env!("CARGO_BIN_EXE_schubert")).args(&args).output().unwrap();
        let stdout = String::from_utf8(out.stdout).unwrap();
        if !out.status.success() || stdout != expected {
            failures.push(format!(
                "{}: exit {:?}\n--- expected\n{expected}--- got\n{stdout}{}",
                path.display(),
                out.status.code(),
                String::from_utf8_lossy(&out.stderr)
            ));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
