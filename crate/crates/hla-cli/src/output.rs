//! Deterministic artifact formatting and output-directory resolution.
//!
//! Floats are printed with Rust's shortest round-trip representation, so a
//! given input always produces byte-identical CSV/JSON.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

/// Environment variable that overrides the `--out` directory when set.
pub const OUTPUT_DIR_ENV: &str = "HLA_OUTPUT_DIR";

/// A named file produced by a command, not yet written to disk.
#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    pub filename: String,
    pub contents: String,
}

impl Artifact {
    pub fn new(filename: impl Into<String>, contents: impl Into<String>) -> Self {
        Self {
            filename: filename.into(),
            contents: contents.into(),
        }
    }
}

/// Resolves the output directory: the environment override wins over the
/// flag, which wins over the default `hla_out`.
pub fn resolve_output_dir(flag: Option<&Path>) -> PathBuf {
    if let Ok(dir) = std::env::var(OUTPUT_DIR_ENV) {
        if !dir.is_empty() {
            return PathBuf::from(dir);
        }
    }
    flag.map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from("hla_out"))
}

/// Writes artifacts into the directory, creating it if needed; returns the
/// paths written.
pub fn write_artifacts(dir: &Path, artifacts: &[Artifact]) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut paths = Vec::with_capacity(artifacts.len());
    for a in artifacts {
        let path = dir.join(&a.filename);
        fs::write(&path, &a.contents)?;
        paths.push(path);
    }
    Ok(paths)
}

/// Shortest round-trip float formatting ('.' decimal separator always).
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

/// CSV from a header and rows of preformatted cells (RFC-4180 style: comma
/// separated, newline terminated; the numeric cells never need quoting).
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_formatting_is_roundtrip_and_dot_separated() {
        assert_eq!(fmt_f64(1.0), "1.0");
        assert_eq!(fmt_f64(-13.612844317758006), "-13.612844317758006");
        assert_eq!(fmt_f64(1e-300), "1e-300");
    }

    #[test]
    fn csv_has_header_and_newlines() {
        let out = csv_table(&["a", "b"], &[vec!["1".into(), "2".into()]]);
        assert_eq!(out, "a,b\n1,2\n");
    }
}
