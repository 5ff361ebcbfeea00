use std::path::Path;

use regpow_core::graph::{Graph, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{origin}: {source}")]
    Parse { origin: String, source: ParseError },
}

/// Accepts a file path, `-` for stdin, or an inline edge list whose lines are
/// separated by `/` or `;` (e.g. `"3 3 / 1 2 / 2 3 / 1 3"`).
pub fn read_graph(input: &str) -> Result<Graph, InputError> {
    let (origin, text) = if input == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|source| InputError::Io { path: "<stdin>".into(), source })?;
        ("<stdin>".to_string(), s)
    } else if Path::new(input).is_file() {
        let s = std::fs::read_to_string(input).map_err(|source| InputError::Io { path: input.into(), source })?;
        (input.to_string(), s)
    } else {
        let lines: Vec<&str> = input.split(['/', ';', '\n']).map(str::trim).collect();
        ("<inline>".to_string(), lines.join("\n"))
    };
    Graph::parse_edge_list(&text).map_err(|source| InputError::Parse { origin, source })
}
