use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use gce_core::{GroundTruth, PageSnapshot};

pub fn read_snapshot(path: &Path) -> Result<PageSnapshot> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    PageSnapshot::from_json(&bytes).with_context(|| format!("{}", path.display()))
}

pub fn read_truth(path: &Path) -> Result<GroundTruth> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    GroundTruth::from_json(&bytes).with_context(|| format!("{}", path.display()))
}

/// One snapshot file and, when present, its ground-truth file.
#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub snapshot: PathBuf,
    pub truth: Option<PathBuf>,
}

/// Snapshot files (`*.json`) in `corpus`, sorted by name, each paired with
/// the file of the same name in `truth`.
pub fn scan(corpus: &Path, truth: &Path) -> Result<Vec<Entry>> {
    let mut entries = Vec::new();
    let dir = std::fs::read_dir(corpus)
        .with_context(|| format!("reading corpus {}", corpus.display()))?;
    for item in dir {
        let path = item?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") || !path.is_file() {
            continue;
        }
        let Some(name) = path.file_stem().and_then(|s| s.to_str()).map(str::to_owned) else {
            continue;
        };
        let truth_path = truth.join(format!("{name}.json"));
        entries.push(Entry {
            truth: truth_path.is_file().then_some(truth_path),
            snapshot: path,
            name,
        });
    }
    if entries.is_empty() {
        bail!("corpus {} contains no snapshot files", corpus.display());
    }
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(entries)
}

/// A page whose snapshot and ground truth both loaded.
pub struct Page {
    pub name: String,
    pub snapshot: PageSnapshot,
    pub truth: GroundTruth,
}

impl Entry {
    pub fn load(&self) -> Result<Page> {
        let truth_path = self.truth.as_ref().context("no ground truth")?;
        let snapshot = read_snapshot(&self.snapshot)?;
        let truth = read_truth(truth_path)?;
        truth
            .validate(&snapshot)
            .with_context(|| format!("{}", truth_path.display()))?;
        Ok(Page {
            name: self.name.clone(),
            snapshot,
            truth,
        })
    }
}

pub fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?)
}
