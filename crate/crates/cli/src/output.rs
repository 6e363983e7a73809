//! Rendering of result tables. Column names and JSON keys are frozen by
//! `docs/schema.md`; bump [`SCHEMA_VERSION`] when they change.

use std::io::{self, Write};

use serde::Serialize;

use crate::args::Format;

pub const SCHEMA_VERSION: u32 = 1;

/// Conventions fixing the concrete characters behind each row.
#[derive(Debug, Clone, Serialize)]
pub struct Generators {
    pub residue_generator: &'static str,
    pub uniformizer: &'static str,
    pub orbit_representative: &'static str,
}

pub const GENERATORS: Generators = Generators {
    residue_generator:
        "norm-compatible: g_f = N(g_n) from F_{q^n}^x to F_{q^f}^x (Conway-style choice)",
    uniformizer:
        "t is the image of a uniformizer of D normalizing k_n, with t^n = uniformizer of k",
    orbit_representative: "smallest residue exponent a in its Frobenius orbit",
};

pub trait Row: Serialize {
    const COLUMNS: &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

#[derive(Serialize)]
struct Envelope<'a, P: Serialize, R: Serialize, S: Serialize> {
    schema_version: u32,
    tool_version: &'static str,
    command: &'static str,
    generator: &'a Generators,
    parameters: &'a P,
    rows: &'a [R],
    #[serde(skip_serializing_if = "Option::is_none")]
    summary: Option<&'a S>,
}

pub struct Report<'a, P: Serialize, R: Row, S: Serialize> {
    pub command: &'static str,
    pub parameters: &'a P,
    pub rows: &'a [R],
    pub summary: Option<&'a S>,
    /// Lines printed below a table, or to stderr for CSV.
    pub footer: Vec<String>,
}

impl<P: Serialize, R: Row, S: Serialize> Report<'_, P, R, S> {
    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                let env = Envelope {
                    schema_version: SCHEMA_VERSION,
                    tool_version: env!("CARGO_PKG_VERSION"),
                    command: self.command,
                    generator: &GENERATORS,
                    parameters: self.parameters,
                    rows: self.rows,
                    summary: self.summary,
                };
                serde_json::to_writer_pretty(&mut *out, &env)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(R::COLUMNS)?;
                for row in self.rows {
                    w.write_record(row.cells())?;
                }
                w.flush()?;
                drop(w);
                for line in &self.footer {
                    eprintln!("{line}");
                }
                Ok(())
            }
            Format::Table => {
                let cells: Vec<Vec<String>> = self.rows.iter().map(Row::cells).collect();
                write_table(out, R::COLUMNS, &cells)?;
                for line in &self.footer {
                    writeln!(out, "{line}")?;
                }
                Ok(())
            }
        }
    }
}

impl<P: Serialize, R: Row, S: Serialize> Report<'_, P, R, S> {
    /// As [`Report::write`], but a table is printed one `column  value`
    /// line per field.
    pub fn write_vertical(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        if format != Format::Table {
            return self.write(format, out);
        }
        let width = R::COLUMNS
            .iter()
            .map(|c| c.chars().count())
            .max()
            .unwrap_or(0);
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                writeln!(out)?;
            }
            for (col, cell) in R::COLUMNS.iter().zip(row.cells()) {
                let cell = if cell.is_empty() {
                    "-".to_string()
                } else {
                    cell
                };
                writeln!(out, "{col:<width$}  {cell}")?;
            }
        }
        for line in &self.footer {
            writeln!(out, "{line}")?;
        }
        Ok(())
    }
}

fn write_table(out: &mut impl Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |out: &mut dyn Write, cells: &mut dyn Iterator<Item = &str>| -> io::Result<()> {
        let parts: Vec<String> = cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        writeln!(out, "{}", parts.join("  ").trim_end())
    };
    line(out, &mut header.iter().copied())?;
    for row in rows {
        line(
            out,
            &mut row
                .iter()
                .map(|c| if c.is_empty() { "-" } else { c.as_str() }),
        )?;
    }
    Ok(())
}

pub fn yes_no(b: bool) -> String {
    if b { "true" } else { "false" }.to_string()
}
