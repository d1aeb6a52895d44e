use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::engine::BmwEngine;
use super::relations::validate_relations;
use crate::scalars::LaurentPoly;

/// Bumped whenever the basis, lift or table layout changes.
pub const TABLE_FORMAT: &str = "bmw-tables-v1";

#[derive(Serialize, Deserialize)]
struct TableFile {
    format: String,
    r: usize,
    basis: Vec<String>,
    left: Table<String>,
    right: Table<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed table file: {0}")]
    Format(String),
    #[error("cached table for r={0} failed relation check: {1}")]
    Invalid(usize, String),
}

/// File name keyed by a hash of the format tag and the rank.
pub fn cache_path(dir: &Path, r: usize) -> PathBuf {
    let mut h = Sha256::new();
    h.update(TABLE_FORMAT.as_bytes());
    h.update(r.to_le_bytes());
    let digest = h.finalize();
    let tag: String = digest.iter().take(8).map(|b| format!("{b:02x}")).collect();
    dir.join(format!("bmw-r{r}-{tag}.json"))
}

/// Generator products indexed by [letter][basis element].
type Table<C> = Vec<Vec<Vec<(usize, C)>>>;

fn encode(t: &[Vec<Vec<(usize, LaurentPoly)>>]) -> Table<String> {
    t.iter().map(|g| g.iter().map(|row| row.iter().map(|(j, c)| (*j, c.to_string())).collect()).collect()).collect()
}

fn decode(t: Table<String>) -> Result<Table<LaurentPoly>, CacheError> {
    t.into_iter()
        .map(|g| {
            g.into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|(j, s)| s.parse::<LaurentPoly>().map(|c| (j, c)).map_err(CacheError::Format))
                        .collect()
                })
                .collect()
        })
        .collect()
}

pub fn save(engine: &BmwEngine<LaurentPoly>, dir: &Path) -> Result<PathBuf, CacheError> {
    fs::create_dir_all(dir)?;
    let file = TableFile {
        format: TABLE_FORMAT.to_string(),
        r: engine.r,
        basis: engine.basis.diagrams.iter().map(|d| d.to_string()).collect(),
        left: encode(&engine.left),
        right: encode(&engine.right),
    };
    let path = cache_path(dir, engine.r);
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, serde_json::to_vec(&file).map_err(|e| CacheError::Format(e.to_string()))?)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

/// Loads a cached table, checking format, basis order and the relation suite.
pub fn load(dir: &Path, r: usize) -> Result<Option<BmwEngine<LaurentPoly>>, CacheError> {
    let path = cache_path(dir, r);
    if !path.exists() {
        return Ok(None);
    }
    let file: TableFile = serde_json::from_slice(&fs::read(&path)?).map_err(|e| CacheError::Format(e.to_string()))?;
    if file.format != TABLE_FORMAT || file.r != r {
        return Err(CacheError::Format(format!("{} r={}", file.format, file.r)));
    }
    let mut engine = BmwEngine::skeleton(r);
    let expected: Vec<String> = engine.basis.diagrams.iter().map(|d| d.to_string()).collect();
    if expected != file.basis {
        return Err(CacheError::Format("basis order differs".into()));
    }
    engine.left = decode(file.left)?;
    engine.right = decode(file.right)?;
    let n = engine.dim();
    let shape_ok = |t: &Table<LaurentPoly>| t.len() == 3 * (r - 1) && t.iter().all(|g| g.len() == n);
    if !shape_ok(&engine.left) || !shape_ok(&engine.right) {
        return Err(CacheError::Format("table shape".into()));
    }
    let report = validate_relations(&engine, |c| c.clone());
    if let Some(f) = report.failures().next() {
        return Err(CacheError::Invalid(r, f.relation.clone()));
    }
    Ok(Some(engine))
}

/// Loads from `dir` if possible, otherwise builds and stores the tables.
pub fn load_or_build(dir: Option<&Path>, r: usize) -> Result<BmwEngine<LaurentPoly>, CacheError> {
    if let Some(dir) = dir {
        match load(dir, r) {
            Ok(Some(e)) => return Ok(e),
            Ok(None) | Err(CacheError::Format(_)) | Err(CacheError::Invalid(..)) => {}
            Err(e) => return Err(e),
        }
    }
    let engine = BmwEngine::quantum(r);
    if let Some(dir) = dir {
        save(&engine, dir)?;
    }
    Ok(engine)
}
