use std::io::Write;

use fano_chern::catalog::CATALOG_VERSION;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub schema_version: u32,
    pub tool: &'static str,
    pub tool_version: &'static str,
    pub catalog_version: &'static str,
    pub command: String,
    pub items: Vec<T>,
    pub pass: bool,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: String, items: Vec<T>, pass: bool) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool: env!("CARGO_BIN_NAME"),
            tool_version: env!("CARGO_PKG_VERSION"),
            catalog_version: CATALOG_VERSION,
            command,
            items,
            pass,
        }
    }
}

/// Rows that can be flattened into a fixed CSV layout.
pub trait CsvRow {
    fn header() -> &'static [&'static str];
    fn record(&self) -> Vec<String>;
}

pub fn render<T: Serialize + CsvRow>(report: &Report<T>, format: Format) -> Result<Vec<u8>, String> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(report).map_err(|e| e.to_string())?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(T::header()).map_err(|e| e.to_string())?;
            for item in &report.items {
                w.write_record(item.record()).map_err(|e| e.to_string())?;
            }
            w.into_inner().map_err(|e| e.to_string())
        }
    }
}

pub fn emit(bytes: &[u8], out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()
        }
    }
}
