use crate::Format;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => {
                let mut s = self.header.join("\t");
                s.push('\n');
                for r in &self.rows {
                    s.push_str(&r.join("\t"));
                    s.push('\n');
                }
                s
            }
            Format::Text => {
                let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
                for r in &self.rows {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let line = |cells: &[String]| {
                    let parts: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| {
                            let pad = w - c.chars().count();
                            format!("{c}{}", " ".repeat(pad))
                        })
                        .collect();
                    let mut l = parts.join("  ").trim_end().to_string();
                    l.push('\n');
                    l
                };
                let mut s = line(&self.header);
                for r in &self.rows {
                    s.push_str(&line(r));
                }
                s
            }
        }
    }
}

/// Parses a tab-separated table; `#` lines are comments, the first other
/// line is the header.
pub fn parse_tsv(text: &str) -> (Vec<String>, Table) {
    let mut comments = Vec::new();
    let mut table = Table::default();
    for line in text.lines() {
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.trim().to_string());
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<String> = line.split('\t').map(|s| s.to_string()).collect();
        if table.header.is_empty() {
            table.header = cells;
        } else {
            table.rows.push(cells);
        }
    }
    (comments, table)
}

/// Cell-level differences of `got` against `expected`. Rows are matched on
/// the `key` column, other columns by name; rows and columns only present in
/// `got` are ignored. Returns the number of cells compared and the mismatches.
pub fn diff(expected: &Table, got: &Table, key: &str) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut out = Vec::new();
    let (Some(ek), Some(gk)) = (expected.column(key), got.column(key)) else {
        return (0, vec![format!("key column {key} missing")]);
    };
    for erow in &expected.rows {
        let kv = erow.get(ek).map(String::as_str).unwrap_or("");
        let Some(grow) = got.rows.iter().find(|r| r.get(gk).map(String::as_str) == Some(kv)) else {
            out.push(format!("row {key}={kv} missing"));
            continue;
        };
        for (col, name) in expected.header.iter().enumerate() {
            if col == ek {
                continue;
            }
            let Some(gcol) = got.column(name) else {
                out.push(format!("column {name} missing"));
                continue;
            };
            let e = erow.get(col).map(String::as_str).unwrap_or("");
            let g = grow.get(gcol).map(String::as_str).unwrap_or("");
            checked += 1;
            if e != g {
                out.push(format!("row {key}={kv}, column {name}: expected {e}, got {g}"));
            }
        }
    }
    (checked, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diff_reports_cells() {
        let (c, e) = parse_tsv("# anchor\nx\ty\n1\t2\n3\t4\n7\t8\n");
        assert_eq!(c, vec!["anchor".to_string()]);
        let mut g = Table::new(&["y", "x", "extra"]);
        g.push(vec!["5".into(), "3".into(), "z".into()]);
        g.push(vec!["2".into(), "1".into(), "z".into()]);
        let (n, d) = diff(&e, &g, "x");
        assert_eq!(n, 2);
        assert_eq!(
            d,
            vec![
                "row x=3, column y: expected 4, got 5".to_string(),
                "row x=7 missing".to_string()
            ]
        );
    }

    #[test]
    fn text_alignment() {
        let mut t = Table::new(&["a", "bbb"]);
        t.push(vec!["long".into(), "1".into()]);
        assert_eq!(t.render(Format::Text), "a     bbb\nlong  1\n");
        assert_eq!(t.render(Format::Tsv), "a\tbbb\nlong\t1\n");
    }
}
