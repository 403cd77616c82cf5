//! Plain-text tables.

use chainrep::{Chain, GroundSet};

/// Columns padded to their widest cell; the first column is left-aligned,
/// the rest right-aligned.
pub fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let columns = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(columns) {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let pad = " ".repeat(widths[i] - c.chars().count());
                if i == 0 {
                    format!("{c}{pad}")
                } else {
                    format!("{pad}{c}")
                }
            })
            .collect();
        padded.join("  ").trim_end().to_owned()
    };
    let mut out = line(header);
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

/// `key  value` lines with keys padded to a common width.
pub fn pairs(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

pub fn chain(ground: &GroundSet, chain: &Chain) -> String {
    let labels: Vec<&str> = chain.order().iter().map(|&e| ground.label(e)).collect();
    format!("({})", labels.join(","))
}

pub fn yes_no(flag: bool) -> String {
    if flag { "yes" } else { "no" }.to_owned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligns_columns() {
        let out =
            table(&["n".into(), "value".into()], &[vec!["0".into(), "7".into()], vec!["10".into(), "123".into()]]);
        assert_eq!(out, "n   value\n0       7\n10    123\n");
    }
}
