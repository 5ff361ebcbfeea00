//! Corpus entries: edge-list files with optional `# tags:` comment lines such
//! as `# tags: binomial=ACI_Cycle parity=ACI_BipartiteUnicyclic-even-cycle`.

use std::path::{Path, PathBuf};

use regpow_core::edge_ideals::EdgeIdealKind;
use regpow_core::graph::Graph;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Graph,
    pub source_path: PathBuf,
    pub tags: Vec<String>,
}

impl CorpusEntry {
    pub fn parse(id: &str, source_path: PathBuf, text: &str) -> Result<CorpusEntry, String> {
        let graph = Graph::parse_edge_list(text).map_err(|e| e.to_string())?;
        let tags = text
            .lines()
            .filter_map(|l| l.trim().strip_prefix('#')?.trim().strip_prefix("tags:"))
            .flat_map(|rest| rest.split_whitespace().map(str::to_string))
            .collect();
        Ok(CorpusEntry { id: id.to_string(), graph, source_path, tags })
    }

    /// Expected class label for `kind`, from a `kind=LABEL` tag.
    pub fn expected_label(&self, kind: EdgeIdealKind) -> Option<&str> {
        self.tags.iter().find_map(|t| t.strip_prefix(kind.as_str())?.strip_prefix('='))
    }
}

/// A file that could not be read or parsed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusError {
    pub id: String,
    pub source_path: PathBuf,
    pub message: String,
}

pub type Loaded = Result<CorpusEntry, CorpusError>;

/// Every regular file in `dir`, sorted by file name; the id is the file stem.
pub fn load_dir(dir: &Path) -> std::io::Result<Vec<Loaded>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && !p.file_name().is_some_and(|n| n.to_string_lossy().starts_with('.')))
        .collect();
    paths.sort();
    let mut out = Vec::with_capacity(paths.len());
    let mut seen = std::collections::BTreeSet::new();
    for path in paths {
        let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let err = |message: String| CorpusError { id: id.clone(), source_path: path.clone(), message };
        let entry = if !seen.insert(id.clone()) {
            Err(err(format!("duplicate id '{id}'")))
        } else {
            match std::fs::read_to_string(&path) {
                Ok(text) => CorpusEntry::parse(&id, path.clone(), &text).map_err(err),
                Err(e) => Err(err(e.to_string())),
            }
        };
        out.push(entry);
    }
    Ok(out)
}

macro_rules! bundled_files {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $name, ".edges")))),*]
    };
}

const BUNDLED: &[(&str, &str)] = bundled_files![
    "balloon_c4",
    "c4_chord",
    "c4_chord_pendant",
    "c5_chord",
    "claw_k13",
    "complete_k4",
    "cycle_c3",
    "cycle_c4",
    "cycle_c5",
    "cycle_c6",
    "g2_f3",
    "h_tree",
    "odd_balloon",
    "odd_cycle_internal_path",
    "path_p2",
    "path_p3",
    "path_p4",
    "path_p5",
    "path_p6",
    "triangle_pendant",
    "triangle_three_pendants",
    "triangle_two_pendants",
    "two_triangles_bridge",
];

/// The corpus compiled into the binary: every family at its smallest size.
pub fn bundled() -> Vec<CorpusEntry> {
    BUNDLED
        .iter()
        .map(|(id, text)| {
            CorpusEntry::parse(id, PathBuf::from(format!("corpus/{id}.edges")), text).expect("bundled corpus parses")
        })
        .collect()
}

/// Writes the bundled corpus into `dir` as edge-list files.
pub fn write_bundled(dir: &Path) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for (id, text) in BUNDLED {
        std::fs::write(dir.join(format!("{id}.edges")), text)?;
    }
    Ok(())
}
