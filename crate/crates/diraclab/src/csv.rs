//! Trajectory CSV: fixed header, `{:.16e}` fields, one row per sample.

use std::fmt::Write as _;
use std::path::Path;

use diraclab_core::dynamics::{Trajectory, COLUMNS};

use crate::error::CliError;

pub fn header() -> String {
    COLUMNS.join(",")
}

pub fn to_csv(traj: &Trajectory) -> String {
    let mut out = header();
    out.push('\n');
    for i in 0..traj.len() {
        for (j, v) in traj.row(i).iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            let _ = write!(out, "{v:.16e}");
        }
        out.push('\n');
    }
    out
}

pub fn write_csv(traj: &Trajectory, path: &Path) -> Result<(), CliError> {
    std::fs::write(path, to_csv(traj)).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        source: e,
    })
}

pub fn parse_csv(text: &str, path: &Path) -> Result<Trajectory, CliError> {
    let bad = |line: usize, message: String| CliError::Csv {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut lines = text.lines();
    let head = lines.next().ok_or_else(|| bad(1, "empty file".into()))?;
    if head.trim_end_matches('\r') != header() {
        return Err(bad(1, format!("expected header `{}`", header())));
    }
    let mut traj = Trajectory::default();
    for (i, line) in lines.enumerate() {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let mut row = [0.0; 7];
        let mut fields = line.split(',');
        for (j, slot) in row.iter_mut().enumerate() {
            let f = fields
                .next()
                .ok_or_else(|| bad(i + 2, format!("missing column `{}`", COLUMNS[j])))?;
            *slot = f.trim().parse().map_err(|_| {
                bad(
                    i + 2,
                    format!("column `{}`: cannot parse `{f}`", COLUMNS[j]),
                )
            })?;
        }
        if fields.next().is_some() {
            return Err(bad(i + 2, "too many columns".into()));
        }
        traj.push(row);
    }
    Ok(traj)
}

pub fn read_csv(path: &Path) -> Result<Trajectory, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        source: e,
    })?;
    parse_csv(&text, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Trajectory {
        let mut t = Trajectory::default();
        t.push([0.0, 0.1, -1.0 / 3.0, 1e-300, 1.0, -0.0, 6.02214076e23]);
        t.push([
            0.5,
            f64::MIN_POSITIVE,
            2.0f64.sqrt(),
            -7.5,
            1.0 - f64::EPSILON,
            3.0,
            1.0,
        ]);
        t
    }

    #[test]
    fn exact_round_trip() {
        let t = sample();
        let text = to_csv(&t);
        assert!(text.starts_with("t,x_canonical,x_particle,velocity,norm,J01_P,J01_D_plus_S01_D\n"));
        assert!(text.ends_with('\n'));
        assert_eq!(text.lines().count(), 3);
        let back = parse_csv(&text, Path::new("mem")).unwrap();
        for i in 0..t.len() {
            for (a, b) in t.row(i).iter().zip(back.row(i)) {
                assert_eq!(a.to_bits(), b.to_bits());
            }
        }
    }

    #[test]
    fn seventeen_significant_digits() {
        let text = to_csv(&sample());
        let first = text.lines().nth(1).unwrap();
        assert!(
            first.starts_with("0.0000000000000000e0,1.0000000000000001e-1,"),
            "{first}"
        );
    }

    #[test]
    fn malformed_input_reports_line() {
        let p = Path::new("x.csv");
        assert!(parse_csv("a,b\n", p)
            .unwrap_err()
            .to_string()
            .contains("line 1"));
        let text = format!("{}\n1,2,3\n", header());
        let err = parse_csv(&text, p).unwrap_err().to_string();
        assert!(err.contains("line 2") && err.contains("velocity"), "{err}");
    }
}
