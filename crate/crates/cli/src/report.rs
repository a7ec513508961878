//! Output records. `text` is aligned for reading; `kv` is one `key=value`
//! per line (table rows as space-separated pairs) for scripts.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Number(f64),
    Angle(f64),
    Text(String),
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    kind: String,
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(kind: &str, columns: &[&str]) -> Self {
        Self { kind: kind.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }
}

/// Fields and tables in the order they were added.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record {
    fields: Vec<(String, Value)>,
    tables: Vec<Table>,
}

/// Shortest round-trip form, stable across runs; scientific at the extremes.
pub fn num(x: f64) -> String {
    if x != 0.0 && (x.abs() < 1e-4 || x.abs() >= 1e15) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

/// Scientific form for residuals.
pub fn sci(x: f64) -> String {
    format!("{x:.3e}")
}

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn number(&mut self, key: &str, x: f64) -> &mut Self {
        self.fields.push((key.into(), Value::Number(x)));
        self
    }

    /// An angle in radians; printed in both units.
    pub fn angle(&mut self, key: &str, radians: f64) -> &mut Self {
        self.fields.push((key.into(), Value::Angle(radians)));
        self
    }

    pub fn text(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.fields.push((key.into(), Value::Text(value.into())));
        self
    }

    pub fn table(&mut self, table: Table) -> &mut Self {
        self.tables.push(table);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Kv => self.render_kv(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.fields {
            let shown = match v {
                Value::Number(x) => num(*x),
                Value::Angle(r) => format!("{} rad = {}°", num(*r), num(r.to_degrees())),
                Value::Text(s) => s.clone(),
            };
            let _ = writeln!(out, "{k:<width$}  {shown}");
        }
        for t in &self.tables {
            if t.rows.is_empty() {
                continue;
            }
            if !out.is_empty() {
                out.push('\n');
            }
            let mut widths: Vec<usize> = t.columns.iter().map(|c| c.len()).collect();
            for r in &t.rows {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                padded.join("  ").trim_end().to_string()
            };
            let _ = writeln!(out, "{}", line(&t.columns));
            for r in &t.rows {
                let _ = writeln!(out, "{}", line(r));
            }
        }
        out
    }

    fn render_kv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            match v {
                Value::Number(x) => {
                    let _ = writeln!(out, "{k}={}", num(*x));
                }
                Value::Angle(r) => {
                    let _ = writeln!(out, "{k}={}", num(*r));
                    let _ = writeln!(out, "{k}_deg={}", num(r.to_degrees()));
                }
                Value::Text(s) => {
                    let _ = writeln!(out, "{k}={}", s.replace('\n', " "));
                }
            }
        }
        for t in &self.tables {
            for r in &t.rows {
                let pairs: Vec<String> =
                    t.columns.iter().zip(r).map(|(c, v)| format!("{c}={}", v.replace(' ', "_"))).collect();
                let _ = writeln!(out, "row={} {}", t.kind, pairs.join(" "));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Record {
        let mut r = Record::new();
        r.number("c", 1.5).angle("alpha", std::f64::consts::FRAC_PI_4).text("note", "ok");
        let mut t = Table::new("assert", &["name", "pass"]);
        t.row(vec!["same ideal".into(), "true".into()]);
        r.table(t);
        r
    }

    #[test]
    fn extremes_are_scientific() {
        assert_eq!(num(2.5e-16), "2.5e-16");
        assert_eq!(num(0.0), "0");
        assert_eq!(num(1234.5), "1234.5");
        assert_eq!(num(-3e20), "-3e20");
    }

    #[test]
    fn kv_lines() {
        let s = sample().render(Format::Kv);
        assert_eq!(s, "c=1.5\nalpha=0.7853981633974483\nalpha_deg=45\nnote=ok\nrow=assert name=same_ideal pass=true\n");
    }

    #[test]
    fn text_is_aligned() {
        let s = sample().render(Format::Text);
        assert!(s.starts_with("c      1.5\nalpha  0.7853981633974483 rad = 45°\n"));
        assert!(s.contains("name        pass\nsame ideal  true\n"));
    }
}
