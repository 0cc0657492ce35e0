//! Parallel scan of [`search_regular_mod4`] over a range of sizes, written as
//! JSONL in increasing `n` with a resumable checkpoint.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::sync::mpsc;

use serde::{Deserialize, Serialize};

use super::search::{search_regular_mod4, SearchReport};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub range: RangeInclusive<usize>,
    pub cap: usize,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    /// When false every report carries `elapsed_ms = 0` so output is
    /// byte-reproducible.
    pub timing: bool,
    pub checkpoint: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    /// Every `n` of the range up to this value is complete.
    pub completed_through: usize,
    /// Range values not yet complete.
    pub pending: Vec<usize>,
}

impl Checkpoint {
    fn from_done(range: &RangeInclusive<usize>, done: &BTreeSet<usize>) -> Self {
        let mut completed_through = range.start().saturating_sub(1);
        for n in range.clone() {
            if !done.contains(&n) {
                break;
            }
            completed_through = n;
        }
        let pending = range.clone().filter(|n| !done.contains(n)).collect();
        Checkpoint {
            completed_through,
            pending,
        }
    }

    pub fn load(path: &Path) -> Result<Option<Self>> {
        match fs::read_to_string(path) {
            Ok(text) => serde_json::from_str(&text)
                .map(Some)
                .map_err(|e| Error::io(format!("checkpoint {}", path.display()), e)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(Error::io(format!("checkpoint {}", path.display()), e)),
        }
    }

    /// Writes through a temporary file and a rename.
    pub fn store(&self, path: &Path) -> Result<()> {
        let ctx = || format!("checkpoint {}", path.display());
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = PathBuf::from(tmp);
        let text = serde_json::to_string(self).map_err(|e| Error::io(ctx(), e))?;
        fs::write(&tmp, text + "\n").map_err(|e| Error::io(ctx(), e))?;
        fs::rename(&tmp, path).map_err(|e| Error::io(ctx(), e))
    }
}

/// What an earlier, interrupted scan already produced.
#[derive(Debug, Clone, Default)]
pub struct ResumeState {
    pub done: BTreeSet<usize>,
    pub prior: Vec<SearchReport>,
}

/// Reads complete reports from `out` and the checkpoint, if any. A partial
/// trailing line left by an interrupted write is cut off so appending
/// continues on a clean line boundary.
pub fn load_resume_state(
    range: &RangeInclusive<usize>,
    out: &Path,
    checkpoint: Option<&Path>,
) -> Result<ResumeState> {
    let mut state = ResumeState::default();
    if let Some(cp) = checkpoint.map(Checkpoint::load).transpose()?.flatten() {
        state
            .done
            .extend(range.clone().filter(|&n| n <= cp.completed_through));
    }
    let ctx = || format!("output {}", out.display());
    let file = match fs::File::open(out) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(state),
        Err(e) => return Err(Error::io(ctx(), e)),
    };
    let mut reader = BufReader::new(file);
    let mut good_len = 0u64;
    let mut line = String::new();
    loop {
        line.clear();
        let read = reader
            .read_line(&mut line)
            .map_err(|e| Error::io(ctx(), e))?;
        if read == 0 || !line.ends_with('\n') {
            break;
        }
        match serde_json::from_str::<SearchReport>(line.trim_end()) {
            Ok(r) => {
                good_len += read as u64;
                if range.contains(&r.n) && state.done.insert(r.n) {
                    state.prior.push(r);
                } else if range.contains(&r.n) {
                    state.prior.retain(|p| p.n != r.n);
                    state.prior.push(r);
                }
            }
            Err(_) => break,
        }
    }
    let f = OpenOptions::new()
        .write(true)
        .open(out)
        .map_err(|e| Error::io(ctx(), e))?;
    f.set_len(good_len).map_err(|e| Error::io(ctx(), e))?;
    Ok(state)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanSummary {
    /// Reports computed in this run.
    pub computed: Vec<usize>,
    /// Sizes taken from an earlier run.
    pub resumed: Vec<usize>,
    /// `(n, sequence)` for every survivor that is not the zero-edge graph.
    pub nonzero_survivors: Vec<(usize, String)>,
    pub capped: Vec<usize>,
    pub bound_violations: Vec<usize>,
}

impl ScanSummary {
    fn absorb(&mut self, r: &SearchReport) {
        self.nonzero_survivors
            .extend(r.nonzero_survivors().map(|s| (r.n, s.to_string())));
        if r.capped {
            self.capped.push(r.n);
        }
        if !r.bound_ok {
            self.bound_violations.push(r.n);
        }
    }

    /// Nothing but zero-edge survivors and nothing capped.
    pub fn is_clean(&self) -> bool {
        self.nonzero_survivors.is_empty() && self.capped.is_empty()
    }
}

/// Runs every `n` of the range not in `resume.done` and writes one JSON line
/// per report to `sink` in increasing `n`, updating the checkpoint after each
/// line.
pub fn run_scan<W: Write>(
    config: &ScanConfig,
    resume: ResumeState,
    sink: &mut W,
) -> Result<ScanSummary> {
    let range = &config.range;
    if *range.start() < 5 {
        return Err(Error::SizeTooSmall {
            n: *range.start(),
            min: 5,
        });
    }
    let mut summary = ScanSummary::default();
    let mut done = resume.done;
    let mut prior = resume.prior;
    prior.sort_by_key(|r| r.n);
    for r in &prior {
        summary.resumed.push(r.n);
        summary.absorb(r);
    }
    let todo: Vec<usize> = range.clone().filter(|n| !done.contains(n)).collect();

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = config.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;

    let (tx, rx) = mpsc::channel();
    for &n in &todo {
        let tx = tx.clone();
        let cap = config.cap;
        pool.spawn(move || {
            let _ = tx.send((n, search_regular_mod4(n, cap)));
        });
    }
    drop(tx);

    let mut waiting: BTreeMap<usize, SearchReport> = BTreeMap::new();
    let mut next = todo.iter().copied().peekable();
    for (n, result) in rx {
        let mut report = result?;
        if !config.timing {
            report.elapsed_ms = 0;
        }
        waiting.insert(n, report);
        while let Some(report) = next.peek().and_then(|k| waiting.remove(k)) {
            next.next();
            let line = serde_json::to_string(&report).map_err(|e| Error::io("report", e))?;
            writeln!(sink, "{line}")
                .and_then(|_| sink.flush())
                .map_err(|e| Error::io("report output", e))?;
            summary.computed.push(report.n);
            summary.absorb(&report);
            done.insert(report.n);
            if let Some(path) = &config.checkpoint {
                Checkpoint::from_done(range, &done).store(path)?;
            }
        }
    }
    if next.peek().is_some() {
        return Err(Error::Internal(
            "scan worker exited without a report".into(),
        ));
    }
    if let Some(path) = &config.checkpoint {
        Checkpoint::from_done(range, &done).store(path)?;
    }
    Ok(summary)
}
