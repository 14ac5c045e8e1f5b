//! Line-oriented group files:
//!
//! ```text
//! name: A5
//! degree: 5
//! gen: (1,2,3,4,5)
//! gen: (1,2,3)   # comment
//! ```

use std::path::Path;

use super::cycles::{format_cycles, parse_cycles};
use super::{CatalogEntry, Source};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub fn parse_group_file(text: &str, path: &str) -> Result<CatalogEntry> {
    let err = |line: usize, message: String| Error::Format {
        path: path.to_string(),
        line,
        message,
    };
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| err(lineno, format!("expected `key: value`, found {line:?}")))?;
        let value = value.trim();
        match key.trim() {
            "name" => {
                if name.is_some() {
                    return Err(err(lineno, "duplicate name".into()));
                }
                if degree.is_some() || !gens.is_empty() {
                    return Err(err(lineno, "name must come first".into()));
                }
                name = Some(value.to_string());
            }
            "degree" => {
                if name.is_none() {
                    return Err(err(lineno, "degree before name".into()));
                }
                if degree.is_some() {
                    return Err(err(lineno, "duplicate degree".into()));
                }
                let n: usize = value
                    .parse()
                    .map_err(|_| err(lineno, format!("bad degree {value:?}")))?;
                if n == 0 {
                    return Err(err(lineno, "degree must be at least 1".into()));
                }
                degree = Some(n);
            }
            "gen" => {
                let n = degree.ok_or_else(|| err(lineno, "generator before degree".into()))?;
                let p = parse_cycles(value, n).map_err(|e| err(lineno, e.to_string()))?;
                gens.push(p);
            }
            other => return Err(err(lineno, format!("unknown key {other:?}"))),
        }
    }
    let name = name.ok_or_else(|| err(1, "missing name".into()))?;
    let degree = degree.ok_or_else(|| err(1, "missing degree".into()))?;
    let group = PermGroup::new(degree, gens)?;
    Ok(CatalogEntry::new(name, group, Source::File(path.to_string())))
}

pub fn render_group_file(entry: &CatalogEntry) -> String {
    let mut out = format!("name: {}\ndegree: {}\n", entry.name, entry.group.degree());
    for g in entry.group.generators() {
        out.push_str("gen: ");
        out.push_str(&format_cycles(g));
        out.push('\n');
    }
    out
}

pub fn load_group_file(path: impl AsRef<Path>) -> Result<CatalogEntry> {
    let path = path.as_ref();
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    parse_group_file(&text, &shown)
}

pub fn save_group_file(entry: &CatalogEntry, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, render_group_file(entry)).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a5_file() {
        let text = "# alternating\nname: A5\ndegree: 5\n\ngen: (1,2,3,4,5)\ngen: (1,2,3)  # 3-cycle\n";
        let e = parse_group_file(text, "a5.grp").unwrap();
        assert_eq!(e.name, "A5");
        assert_eq!(e.group.order(), 60);
        assert!(!e.soluble);
    }

    #[test]
    fn empty_generator_section_is_trivial() {
        let e = parse_group_file("name: one\ndegree: 4\n", "t").unwrap();
        assert_eq!(e.group.order(), 1);
        assert!(e.soluble);
    }

    #[test]
    fn format_errors_carry_line_numbers() {
        let e = parse_group_file("name: z\ndegree: 0\n", "z").unwrap_err();
        assert!(matches!(e, Error::Format { line: 2, .. }), "{e}");
        let e = parse_group_file("name: z\ndegree: 3\ngen: (1,4)\n", "z").unwrap_err();
        assert!(matches!(e, Error::Format { line: 3, .. }), "{e}");
        let e = parse_group_file("name: z\ngen: (1,2)\n", "z").unwrap_err();
        assert!(matches!(e, Error::Format { line: 2, .. }), "{e}");
        let e = parse_group_file("name: z\ndegree 3\n", "z").unwrap_err();
        assert!(matches!(e, Error::Format { line: 2, .. }), "{e}");
        assert!(load_group_file("/nonexistent/file.grp").is_err());
    }
}
