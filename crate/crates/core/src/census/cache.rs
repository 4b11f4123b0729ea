//! Persistent invariant cache: lines `hex(key) TAB task TAB value`.
//! Appended as values are computed; on open the file is rewritten with one
//! line per entry, the last value for a key winning.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, RwLock};

use crate::error::{Error, Result};

type Entries = BTreeMap<(String, String), String>;

#[derive(Default)]
pub struct InvariantCache {
    path: Option<PathBuf>,
    entries: RwLock<Entries>,
    writer: Mutex<Option<BufWriter<File>>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

fn parse_entries(text: &str) -> Entries {
    let mut out = Entries::new();
    for line in text.lines() {
        let mut parts = line.split('\t');
        let (Some(key), Some(task), Some(value), None) = (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            // a torn or foreign line
            continue;
        };
        if key.is_empty() || task.is_empty() || value.is_empty() || hex::decode(key).is_err() {
            continue;
        }
        out.insert((key.to_string(), task.to_string()), value.to_string());
    }
    out
}

fn render(entries: &Entries) -> String {
    let mut s = String::new();
    for ((k, t), v) in entries {
        s.push_str(&format!("{k}\t{t}\t{v}\n"));
    }
    s
}

impl InvariantCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads and compacts `path`, creating it when missing.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let entries = match std::fs::read_to_string(&path) {
            Ok(text) => parse_entries(&text),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Entries::new(),
            Err(e) => return Err(e.into()),
        };
        let tmp = path.with_extension("compact");
        std::fs::write(&tmp, render(&entries))?;
        std::fs::rename(&tmp, &path)?;
        let file = OpenOptions::new().append(true).open(&path)?;
        Ok(InvariantCache {
            path: Some(path),
            entries: RwLock::new(entries),
            writer: Mutex::new(Some(BufWriter::new(file))),
            ..Default::default()
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn get(&self, key: &str, task: &str) -> Option<String> {
        let v = self.entries.read().unwrap().get(&(key.to_string(), task.to_string())).cloned();
        let counter = if v.is_some() { &self.hits } else { &self.misses };
        counter.fetch_add(1, Ordering::Relaxed);
        v
    }

    pub fn insert(&self, key: &str, task: &str, value: &str) -> Result<()> {
        if [key, task, value].iter().any(|s| s.contains(['\t', '\n'])) {
            return Err(Error::InvalidArgument("cache fields may not contain tabs or newlines".into()));
        }
        if [key, task, value].iter().any(|s| s.is_empty()) || hex::decode(key).is_err() {
            return Err(Error::InvalidArgument("cache keys are nonempty hex and fields are nonempty".into()));
        }
        self.entries
            .write()
            .unwrap()
            .insert((key.to_string(), task.to_string()), value.to_string());
        if let Some(w) = self.writer.lock().unwrap().as_mut() {
            writeln!(w, "{key}\t{task}\t{value}")?;
            w.flush()?;
        }
        Ok(())
    }

    /// Looks `key`/`task` up, computing and storing the value on a miss.
    pub fn get_or_compute(
        &self,
        key: &str,
        task: &str,
        compute: impl FnOnce() -> Result<String>,
    ) -> Result<String> {
        if let Some(v) = self.get(key, task) {
            return Ok(v);
        }
        let v = compute()?;
        self.insert(key, task, &v)?;
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(hits, misses)` since the cache was opened.
    pub fn stats(&self) -> (u64, u64) {
        (self.hits.load(Ordering::Relaxed), self.misses.load(Ordering::Relaxed))
    }

    pub fn snapshot(&self) -> Vec<(String, String, String)> {
        self.entries
            .read()
            .unwrap()
            .iter()
            .map(|((k, t), v)| (k.clone(), t.clone(), v.clone()))
            .collect()
    }
}
