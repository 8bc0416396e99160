use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_complex::Complex64;

use super::CliError;
use crate::model::{AxisKind, BeamGrid};

pub const CSV_MAGIC: &str = "# fda-beam v1";

// lowest dB value written; keeps exact zeros out of -inf
pub const DB_FLOOR: f64 = -300.0;

/// `10 log10(p / reference)` floored at -300 dB.
pub fn to_db(p: f64, reference: f64) -> f64 {
    if p <= 0.0 || reference <= 0.0 {
        return DB_FLOOR;
    }
    (10.0 * (p / reference).log10()).max(DB_FLOOR)
}

/// Weights as `index re im` lines.
///
/// Values use Rust's shortest round-trip float formatting, so reading the
/// file back yields bit-identical weights.
pub fn format_weights(weights: &[Complex64], comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "# index re im");
    for (i, w) in weights.iter().enumerate() {
        let _ = writeln!(out, "{i} {} {}", w.re, w.im);
    }
    out
}

pub fn parse_weights(text: &str, origin: &Path) -> Result<Vec<Complex64>, CliError> {
    let bad = |line: usize, msg: &str| {
        CliError::Validation(format!("{}:{line}: {msg}", origin.display()))
    };
    let mut entries: Vec<(usize, Complex64)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(bad(n + 1, "expected `index re im`"));
        }
        let index: usize = fields[0].parse().map_err(|_| bad(n + 1, "bad index"))?;
        let re: f64 = fields[1].parse().map_err(|_| bad(n + 1, "bad real part"))?;
        let im: f64 = fields[2]
            .parse()
            .map_err(|_| bad(n + 1, "bad imaginary part"))?;
        entries.push((index, Complex64::new(re, im)));
    }
    entries.sort_by_key(|e| e.0);
    for (expected, (index, _)) in entries.iter().enumerate() {
        if *index != expected {
            return Err(CliError::Validation(format!(
                "{}: weight indices must be 0..{} with no gaps or repeats",
                origin.display(),
                entries.len()
            )));
        }
    }
    if entries.is_empty() {
        return Err(CliError::Validation(format!(
            "{}: no weights",
            origin.display()
        )));
    }
    Ok(entries.into_iter().map(|e| e.1).collect())
}

pub fn read_weights(path: &Path) -> Result<Vec<Complex64>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_weights(&text, path)
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

/// `<stem><suffix>`, e.g. `out/pattern` + `_weights.txt`.
pub fn with_suffix(stem: &Path, suffix: &str) -> PathBuf {
    let mut s = stem.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

pub fn column_name(kind: AxisKind) -> &'static str {
    match kind {
        AxisKind::Time => "time_s",
        AxisKind::Range => "range_m",
        AxisKind::Angle => "angle_deg",
    }
}

pub fn format_coord(kind: AxisKind, v: f64) -> String {
    match kind {
        AxisKind::Angle => format!("{:.6}", v.to_degrees()),
        _ => format!("{v}"),
    }
}

/// CSV text for a sweep grid. `power_db` is referenced to `M^2`,
/// `power_norm_db` to the grid maximum.
pub fn grid_csv(grid: &BeamGrid) -> String {
    let m = grid.config.m_antennas() as f64;
    let reference = m * m;
    let peak = grid.power.iter().copied().fold(0.0, f64::max);
    let mut out = String::new();
    let _ = writeln!(out, "{CSV_MAGIC}");
    let mut header: Vec<&str> = grid.axes.iter().map(|a| column_name(a.kind)).collect();
    header.extend(["power_lin", "power_db", "power_norm_db"]);
    let _ = writeln!(out, "{}", header.join(","));
    for (i, &p) in grid.power.iter().enumerate() {
        for (axis, v) in grid.axes.iter().zip(grid.coords(i)) {
            let _ = write!(out, "{},", format_coord(axis.kind, v));
        }
        let _ = writeln!(out, "{p},{:.6},{:.6}", to_db(p, reference), to_db(p, peak));
    }
    out
}

/// Generic CSV with the magic line, a header and pre-formatted rows.
pub fn table_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{CSV_MAGIC}");
    let _ = writeln!(out, "{}", header.join(","));
    for r in rows {
        let _ = writeln!(out, "{}", r.join(","));
    }
    out
}
