//! Report model shared by all subcommands, rendered as text, JSON or CSV.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use solv_lab::solubilizer::SolubilizerRecord;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A row type that knows its flat column layout.
pub trait Tabular: Serialize {
    fn headers() -> Vec<&'static str>;
    fn cells(&self) -> Vec<String>;
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub checked: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Serialize)]
pub struct Report<T: Tabular> {
    pub version: &'static str,
    pub command: &'static str,
    pub params: Value,
    pub items: Vec<T>,
    pub summary: Summary,
    pub counterexamples: Vec<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl<T: Tabular> Report<T> {
    pub fn new(command: &'static str, params: Value) -> Self {
        Report {
            version: VERSION,
            command,
            params,
            items: Vec::new(),
            summary: Summary::default(),
            counterexamples: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn has_counterexample(&self) -> bool {
        self.summary.failed > 0 || !self.counterexamples.is_empty()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(T::headers()).expect("in-memory write");
        for item in &self.items {
            w.write_record(item.cells()).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    fn render_text(&self) -> String {
        let headers = T::headers();
        let rows: Vec<Vec<String>> = self.items.iter().map(Tabular::cells).collect();
        let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
        for row in &rows {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let line = |cells: &[String], out: &mut String| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(&headers.iter().map(|h| h.to_string()).collect::<Vec<_>>(), &mut out);
        for row in &rows {
            line(row, &mut out);
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        let _ = writeln!(
            out,
            "checked {}, failed {}, skipped {}",
            self.summary.checked, self.summary.failed, self.summary.skipped
        );
        for c in &self.counterexamples {
            let _ = writeln!(out, "counterexample: {c}");
        }
        out
    }
}

/// Per-(group, element) outcome.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Item {
    pub group: String,
    pub element: String,
    pub sol_size: usize,
    pub nx_order: u128,
    pub cx_order: u128,
    pub ell_cx: usize,
    pub ell_nx: usize,
    pub ratio34: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<String>,
    pub flags: BTreeMap<String, bool>,
}

impl Item {
    pub fn from_record(group: &str, rec: &SolubilizerRecord) -> Self {
        let mut flags = BTreeMap::new();
        flags.insert("conjecture_ok".to_string(), rec.conjecture_ok);
        flags.insert("ratio34_integral".to_string(), rec.ratio34_integral());
        flags.insert("is_subgroup".to_string(), rec.is_subgroup);
        flags.insert("equals_nx".to_string(), rec.equals_nx);
        Item {
            group: group.to_string(),
            element: rec.x.to_string(),
            sol_size: rec.sol_size,
            nx_order: rec.n_x.order(),
            cx_order: rec.c_x.order(),
            ell_cx: rec.ell_cx,
            ell_nx: rec.ell_nx,
            ratio34: rec.ratio34.to_string(),
            structure: None,
            flags,
        }
    }
}

impl Tabular for Item {
    fn headers() -> Vec<&'static str> {
        vec![
            "group",
            "element",
            "sol_size",
            "nx_order",
            "cx_order",
            "ell_cx",
            "ell_nx",
            "ratio34",
            "structure",
            "flags",
        ]
    }

    fn cells(&self) -> Vec<String> {
        let flags: Vec<String> = self.flags.iter().map(|(k, v)| format!("{k}={v}")).collect();
        vec![
            self.group.clone(),
            self.element.clone(),
            self.sol_size.to_string(),
            self.nx_order.to_string(),
            self.cx_order.to_string(),
            self.ell_cx.to_string(),
            self.ell_nx.to_string(),
            self.ratio34.clone(),
            self.structure.clone().unwrap_or_default(),
            flags.join(";"),
        ]
    }
}
