//! In-memory session table with optional JSON snapshots on disk.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use arbor::MemoTable;

use crate::error::ApiError;
use crate::session::{Session, SessionRecord};

/// Sessions keyed by id. Each session sits behind its own lock, so moves in
/// one game never wait on another.
pub struct SessionStore {
    sessions: RwLock<BTreeMap<String, Arc<Mutex<Session>>>>,
    dir: Option<PathBuf>,
}

impl SessionStore {
    pub fn in_memory() -> Self {
        SessionStore {
            sessions: RwLock::new(BTreeMap::new()),
            dir: None,
        }
    }

    /// Opens (creating if needed) a snapshot directory and replays every
    /// stored session.
    pub fn persistent(dir: impl Into<PathBuf>, memo: &MemoTable) -> Result<Self, ApiError> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(storage)?;
        let mut sessions = BTreeMap::new();
        for entry in fs::read_dir(&dir).map_err(storage)? {
            let path = entry.map_err(storage)?.path();
            if path.extension().and_then(|e| e.to_str()) != Some("json") {
                continue;
            }
            let text = fs::read_to_string(&path).map_err(storage)?;
            let record: SessionRecord = serde_json::from_str(&text).map_err(storage)?;
            let session = Session::replay(&record, memo)?;
            sessions.insert(record.id.clone(), Arc::new(Mutex::new(session)));
        }
        Ok(SessionStore {
            sessions: RwLock::new(sessions),
            dir: Some(dir),
        })
    }

    pub fn insert(&self, session: Session) -> Result<(), ApiError> {
        self.save(&session)?;
        let id = session.id().to_string();
        self.sessions
            .write()
            .expect("session table lock")
            .insert(id, Arc::new(Mutex::new(session)));
        Ok(())
    }

    pub fn get(&self, id: &str) -> Result<Arc<Mutex<Session>>, ApiError> {
        self.sessions
            .read()
            .expect("session table lock")
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::UnknownSession(id.to_string()))
    }

    pub fn contains(&self, id: &str) -> bool {
        self.sessions.read().expect("session table lock").contains_key(id)
    }

    /// Runs `f` with exclusive access to one session and snapshots the
    /// result.
    pub fn update<T>(&self, id: &str, f: impl FnOnce(&mut Session) -> Result<T, ApiError>) -> Result<T, ApiError> {
        let handle = self.get(id)?;
        let mut session = handle.lock().expect("session lock");
        let out = f(&mut session)?;
        self.save(&session)?;
        Ok(out)
    }

    pub fn remove(&self, id: &str) -> Result<(), ApiError> {
        let removed = self.sessions.write().expect("session table lock").remove(id);
        if removed.is_none() {
            return Err(ApiError::UnknownSession(id.to_string()));
        }
        if let Some(dir) = &self.dir {
            let path = snapshot_path(dir, id);
            if path.exists() {
                fs::remove_file(path).map_err(storage)?;
            }
        }
        Ok(())
    }

    /// All sessions in id order.
    pub fn all(&self) -> Vec<Arc<Mutex<Session>>> {
        self.sessions.read().expect("session table lock").values().cloned().collect()
    }

    fn save(&self, session: &Session) -> Result<(), ApiError> {
        let Some(dir) = &self.dir else {
            return Ok(());
        };
        let json = serde_json::to_string_pretty(&session.record()).map_err(storage)?;
        let path = snapshot_path(dir, session.id());
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, json).map_err(storage)?;
        fs::rename(&tmp, &path).map_err(storage)?;
        Ok(())
    }
}

fn snapshot_path(dir: &Path, id: &str) -> PathBuf {
    dir.join(format!("{id}.json"))
}

fn storage(e: impl std::fmt::Display) -> ApiError {
    ApiError::Storage(e.to_string())
}
