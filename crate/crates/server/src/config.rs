use std::path::PathBuf;

pub const DEFAULT_ANALYSIS_CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct Config {
    pub port: u16,
    /// Largest tree accepted by `/api/analyze` and for new games.
    pub analysis_cap: usize,
    /// Directory for per-session JSON snapshots; `None` keeps sessions in
    /// memory only.
    pub persist_dir: Option<PathBuf>,
    /// Origins allowed by CORS. Empty disables the CORS layer.
    pub cors_origins: Vec<String>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            port: 8080,
            analysis_cap: DEFAULT_ANALYSIS_CAP,
            persist_dir: None,
            cors_origins: Vec::new(),
        }
    }
}
