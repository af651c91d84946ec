use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// On-disk memo of expensive results, one JSON file per key. Files are
/// safe to delete; unreadable entries are recomputed.
#[derive(Clone, Debug, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<&Path>) -> std::io::Result<Self> {
        if let Some(d) = dir {
            fs::create_dir_all(d)?;
        }
        Ok(Cache { dir: dir.map(Path::to_path_buf) })
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    /// Content hash of the operation name and its inputs.
    pub fn key(operation: &str, inputs: &Value) -> String {
        let material = json!({ "operation": operation, "inputs": inputs });
        hex::encode(Sha256::digest(material.to_string().as_bytes()))
    }

    pub fn get_or_compute<T, F>(&self, operation: &str, inputs: Value, compute: F) -> T
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> T,
    {
        let Some(dir) = &self.dir else {
            return compute();
        };
        let path = dir.join(format!("{}.json", Self::key(operation, &inputs)));
        if let Some(hit) = fs::read_to_string(&path)
            .ok()
            .and_then(|s| serde_json::from_str::<Value>(&s).ok())
            .filter(|v| v.get("operation") == Some(&json!(operation)) && v.get("inputs") == Some(&inputs))
            .and_then(|v| serde_json::from_value(v.get("value")?.clone()).ok())
        {
            return hit;
        }
        let value = compute();
        let entry = json!({ "operation": operation, "inputs": inputs, "value": value });
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        if fs::write(&tmp, entry.to_string()).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
        value
    }
}
