use std::path::{Path, PathBuf};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}", config_message(.file, .key, .message))]
    Config {
        file: Option<PathBuf>,
        key: Option<String>,
        message: String,
    },
    #[error("{}: {source}", .path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: line {line}: {message}", .path.display())]
    Csv {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Core(#[from] diraclab_core::Error),
    #[error("{0}")]
    Usage(String),
}

fn config_message(file: &Option<PathBuf>, key: &Option<String>, message: &str) -> String {
    let mut s = String::from("config error");
    if let Some(p) = file {
        s.push_str(&format!(" in {}", p.display()));
    }
    if let Some(k) = key {
        s.push_str(&format!(": key `{k}`"));
    }
    s.push_str(": ");
    s.push_str(message);
    s
}

impl CliError {
    /// `1` is reserved for failed verification; everything here is `2`.
    pub fn exit_code(&self) -> i32 {
        2
    }

    pub(crate) fn with_file(self, path: &Path) -> Self {
        match self {
            CliError::Config { key, message, .. } => CliError::Config {
                file: Some(path.to_path_buf()),
                key,
                message,
            },
            other => other,
        }
    }
}
