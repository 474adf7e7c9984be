use std::path::{Path, PathBuf};

use logforms::{corpus, Arrangement, Error};
use serde::Serialize;
use sha2::{Digest, Sha256};

/// Where an arrangement came from, with a digest of its canonical text.
#[derive(Clone, Debug, Serialize)]
pub struct InputInfo {
    pub source: String,
    pub sha256: String,
    pub l: usize,
    pub n: usize,
    pub labels: Vec<String>,
}

pub const CORPUS_PREFIX: &str = "corpus:";

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Reads a JSON file, or a bundled arrangement named `corpus:<name>`.
pub fn load(spec: &Path) -> Result<(Arrangement, InputInfo), Error> {
    let text = spec.to_string_lossy();
    let (a, source, bytes) = if let Some(name) = text.strip_prefix(CORPUS_PREFIX) {
        let a = corpus::bundled()?
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, a)| a)
            .ok_or_else(|| Error::Parse {
                field: "input".into(),
                message: format!("no bundled arrangement named {name:?}"),
            })?;
        let json = a.to_json();
        (a, text.into_owned(), json.into_bytes())
    } else {
        let bytes = std::fs::read(spec).map_err(|e| Error::Parse {
            field: "input".into(),
            message: format!("{}: {e}", spec.display()),
        })?;
        let s = std::str::from_utf8(&bytes).map_err(|e| Error::Parse {
            field: "input".into(),
            message: e.to_string(),
        })?;
        let a = Arrangement::from_json(s)?;
        let name = spec
            .file_name()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_else(|| text.into_owned());
        (a, name, bytes)
    };
    let info = InputInfo {
        source,
        sha256: digest(&bytes),
        l: a.l(),
        n: a.n(),
        labels: a.labels().to_vec(),
    };
    Ok((a, info))
}

/// Writes every bundled arrangement as `<dir>/<name>.json`.
pub fn export_corpus(dir: &Path) -> Result<Vec<PathBuf>, Error> {
    let io = |e: std::io::Error| Error::Parse {
        field: "output".into(),
        message: format!("{}: {e}", dir.display()),
    };
    std::fs::create_dir_all(dir).map_err(io)?;
    let mut written = Vec::new();
    for (name, a) in corpus::bundled()? {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, a.to_json() + "\n").map_err(io)?;
        written.push(path);
    }
    Ok(written)
}
