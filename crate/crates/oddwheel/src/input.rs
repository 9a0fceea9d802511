use std::fs;
use std::io::{self, Read};
use std::path::Path;

use oddwheel_core::graph6::{self, Graph6Error};
use oddwheel_core::Graph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{source_name}: {err}")]
    Io { source_name: String, err: io::Error },
    #[error("{source_name}:{line}: {err}")]
    Parse { source_name: String, line: usize, err: Graph6Error },
}

/// A graph read from a graph6 stream, with where it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Located {
    pub source: String,
    pub line: usize,
    pub graph: Graph,
}

/// Parses one graph per non-empty line; `#` starts a comment line.
pub fn parse_graph6_lines(source: &str, text: &str) -> Result<Vec<Located>, InputError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let graph = graph6::decode(line)
            .map_err(|err| InputError::Parse { source_name: source.to_string(), line: i + 1, err })?;
        out.push(Located { source: source.to_string(), line: i + 1, graph });
    }
    Ok(out)
}

/// Reads graphs from a file, or from stdin when `path` is `-`.
pub fn read_graph6(path: &Path) -> Result<Vec<Located>, InputError> {
    let name = path.display().to_string();
    let text = if name == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|err| InputError::Io { source_name: "<stdin>".into(), err })?;
        s
    } else {
        fs::read_to_string(path).map_err(|err| InputError::Io { source_name: name.clone(), err })?
    };
    parse_graph6_lines(if name == "-" { "<stdin>" } else { &name }, &text)
}

pub fn write_graph6(path: &Path, graphs: &[Graph]) -> io::Result<()> {
    let mut text = String::new();
    for g in graphs {
        text.push_str(&graph6::encode(g));
        text.push('\n');
    }
    fs::write(path, text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_numbers_in_errors() {
        let err = parse_graph6_lines("t", "Bw\n\n# comment\nB\x01\n").unwrap_err();
        match err {
            InputError::Parse { line, .. } => assert_eq!(line, 4),
            other => panic!("{other}"),
        }
        let ok = parse_graph6_lines("t", "Bw\n# x\nDQc\n").unwrap();
        assert_eq!(ok.iter().map(|l| l.line).collect::<Vec<_>>(), vec![1, 3]);
    }
}
