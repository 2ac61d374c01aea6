//! Pretty JSON with arrays of scalars kept on one line, so amplitudes read
//! as `[re, im]` and a basis file diffs state by state.

use serde::Serialize;

pub fn to_pretty<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let pretty = serde_json::to_string_pretty(value)?;
    let mut out = String::with_capacity(pretty.len());
    let lines: Vec<&str> = pretty.lines().collect();
    let mut i = 0;
    while i < lines.len() {
        let line = lines[i];
        if line.ends_with('[') {
            if let Some(close) = scalar_run_end(&lines, i + 1) {
                out.push_str(line);
                let items: Vec<&str> = lines[i + 1..close].iter().map(|l| l.trim()).collect();
                out.push_str(&items.join(" "));
                out.push_str(lines[close].trim_start());
                out.push('\n');
                i = close + 1;
                continue;
            }
        }
        out.push_str(line);
        out.push('\n');
        i += 1;
    }
    Ok(out)
}

/// Index of the closing `]` line when every line from `start` up to it is a scalar.
fn scalar_run_end(lines: &[&str], start: usize) -> Option<usize> {
    for (offset, line) in lines[start..].iter().enumerate() {
        let t = line.trim();
        if t.starts_with(']') {
            return Some(start + offset);
        }
        if t.ends_with('[') || t.ends_with('{') || t.starts_with('}') {
            return None;
        }
    }
    None
}
