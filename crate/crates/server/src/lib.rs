//! HTTP play service: human-vs-bot games and exact analysis over JSON.

pub mod api;
pub mod config;
pub mod error;
pub mod session;
pub mod store;

use std::net::SocketAddr;

pub use api::{analyze_tree, router, AppState};
pub use config::Config;
pub use error::ApiError;
pub use session::{BotKind, GameStatus, HumanRole, Session, SessionRecord, SessionView};

/// Binds `0.0.0.0:port` and serves until the process is stopped.
pub async fn serve(config: Config) -> std::io::Result<()> {
    let addr = SocketAddr::from(([0, 0, 0, 0], config.port));
    let state = AppState::new(config).map_err(|e| std::io::Error::other(e.to_string()))?;
    let listener = tokio::net::TcpListener::bind(addr).await?;
    tracing::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(state)).await
}

