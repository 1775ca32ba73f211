pub mod bounds;
pub mod construct;
pub mod enumerate;
pub mod verify;

use crate::{CliError, CliResult};
use std::io::Read;

/// Reads a file argument; "-" or absence means stdin.
pub fn read_input(file: Option<&str>) -> CliResult<String> {
    match file {
        Some(path) if path != "-" => {
            std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}
