//! Sessions persisted as one JSON file each under a state directory.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};
use std::time::{SystemTime, UNIX_EPOCH};

use qck_core::torus::HistoryEntry;
use qck_core::MutationState;
use serde::{Deserialize, Serialize};

use crate::json::{history_to_json, seed_to_json, torus_from_json, torus_to_json, HistoryJson, SeedData, SeedJson, TorusTerm};
use crate::ops::{parse_seed, InputError, OpResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionFile {
    pub id: String,
    pub created: u64,
    pub modified: u64,
    pub seed: SeedJson,
    pub initial_l: Vec<Vec<i64>>,
    pub variables: Vec<Vec<TorusTerm>>,
    pub history: Vec<HistoryJson>,
}

/// A session decoded into core types.
pub struct Session {
    pub id: String,
    pub created: u64,
    pub data: SeedData,
    pub state: MutationState,
}

fn now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

impl Session {
    pub fn new(id: String, data: SeedData) -> Self {
        let state = MutationState::new(data.seed.clone());
        Self { id, created: now(), data, state }
    }

    pub fn current(&self) -> SeedData {
        SeedData { cartan: self.data.cartan.clone(), word: self.data.word.clone(), seed: self.state.seed().clone() }
    }

    pub fn to_file(&self) -> SessionFile {
        let (c, w) = (&self.data.cartan, &self.data.word);
        SessionFile {
            id: self.id.clone(),
            created: self.created,
            modified: now(),
            seed: seed_to_json(&self.current()),
            initial_l: self.state.initial_l().to_vec(),
            variables: self.state.variables().iter().map(torus_to_json).collect(),
            history: self.state.history().iter().map(|h| history_to_json(c, w, h)).collect(),
        }
    }

    pub fn from_file(f: &SessionFile) -> OpResult<Self> {
        let data = parse_seed(&f.seed)?;
        let history = f
            .history
            .iter()
            .map(|h| {
                let k = h.k.checked_sub(1).ok_or_else(|| InputError::new("InvalidSession", "history index 0"))?;
                Ok(HistoryEntry { k, seed: parse_seed(&h.seed)?.seed, variable: torus_from_json(&h.variable) })
            })
            .collect::<OpResult<Vec<_>>>()?;
        let variables = f.variables.iter().map(|v| torus_from_json(v)).collect();
        let state = MutationState::from_parts(f.initial_l.clone(), data.seed.clone(), variables, history)?;
        Ok(Self { id: f.id.clone(), created: f.created, data, state })
    }
}

/// File-backed session store. Writes to one session are serialised through
/// a per-id lock; ids are issued sequentially.
pub struct Store {
    dir: PathBuf,
    issue: Mutex<()>,
    locks: Mutex<HashMap<String, Arc<tokio::sync::Mutex<()>>>>,
}

fn valid_id(id: &str) -> bool {
    !id.is_empty() && id.len() <= 32 && id.chars().all(|c| c.is_ascii_alphanumeric())
}

impl Store {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Self { dir, issue: Mutex::new(()), locks: Mutex::new(HashMap::new()) })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, id: &str) -> PathBuf {
        self.dir.join(format!("{}.json", id))
    }

    pub fn lock(&self, id: &str) -> Arc<tokio::sync::Mutex<()>> {
        self.locks.lock().unwrap().entry(id.to_string()).or_default().clone()
    }

    /// Stores a new session for `data` and returns it.
    pub fn create(&self, data: SeedData) -> io::Result<Session> {
        let _guard = self.issue.lock().unwrap();
        let mut next = 1;
        for entry in fs::read_dir(&self.dir)? {
            let name = entry?.file_name();
            let name = name.to_string_lossy();
            if let Some(n) = name.strip_prefix('s').and_then(|r| r.strip_suffix(".json")).and_then(|n| n.parse::<u64>().ok()) {
                next = next.max(n + 1);
            }
        }
        let session = Session::new(format!("s{}", next), data);
        self.save(&session)?;
        Ok(session)
    }

    pub fn load(&self, id: &str) -> io::Result<Option<SessionFile>> {
        if !valid_id(id) {
            return Ok(None);
        }
        match fs::read(self.path(id)) {
            Ok(bytes) => serde_json::from_slice(&bytes).map(Some).map_err(io::Error::other),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e),
        }
    }

    pub fn save(&self, session: &Session) -> io::Result<()> {
        let file = session.to_file();
        let bytes = serde_json::to_vec_pretty(&file).map_err(io::Error::other)?;
        let tmp = self.dir.join(format!(".{}.tmp", session.id));
        fs::write(&tmp, bytes)?;
        fs::rename(tmp, self.path(&session.id))
    }
}
