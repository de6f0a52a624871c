//! Row encodings for `fdpi scan`.
//!
//! JSON rows look like
//! `{"p":7,"qa":[1,6],"qb":[1,6],"bi":[{"t":0,"divides":null,"exceptional":null}]}`.
//! CSV has a mandatory header `p,qa,qb,bi,divides,exceptional`; list cells are
//! joined with `;`, and the flag columns are empty when no principal ideal was
//! given.

use std::io::Write;

use anyhow::{bail, Context};
use clap::ValueEnum;
use fdpi_core::{BiRoot, ScanRow};

pub const CSV_HEADER: [&str; 6] = ["p", "qa", "qb", "bi", "divides", "exceptional"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// A single JSON array of rows
    Json,
    /// One JSON object per line
    Jsonl,
    Csv,
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn split(cell: &str) -> Vec<&str> {
    if cell.is_empty() {
        Vec::new()
    } else {
        cell.split(';').collect()
    }
}

pub fn csv_record(row: &ScanRow) -> [String; 6] {
    let flags = |f: fn(&BiRoot) -> Option<bool>| match row.bi.first().and_then(f) {
        Some(_) => join(row.bi.iter().map(|b| f(b).unwrap_or_default())),
        None => String::new(),
    };
    [
        row.p.to_string(),
        join(&row.qa),
        join(&row.qb),
        join(row.bi.iter().map(|b| b.t)),
        flags(|b| b.divides),
        flags(|b| b.exceptional),
    ]
}

pub fn parse_csv_record(record: &csv::StringRecord) -> anyhow::Result<ScanRow> {
    if record.len() != CSV_HEADER.len() {
        bail!("expected {} fields, found {}", CSV_HEADER.len(), record.len());
    }
    let ints = |i: usize| -> anyhow::Result<Vec<u64>> {
        split(&record[i])
            .into_iter()
            .map(|x| x.parse().with_context(|| format!("bad integer {x:?}")))
            .collect()
    };
    let flags = |i: usize, len: usize| -> anyhow::Result<Vec<Option<bool>>> {
        let cells = split(&record[i]);
        if cells.is_empty() {
            return Ok(vec![None; len]);
        }
        if cells.len() != len {
            bail!("column {} has {} entries for {len} roots", CSV_HEADER[i], cells.len());
        }
        cells
            .into_iter()
            .map(|x| Ok(Some(x.parse().with_context(|| format!("bad flag {x:?}"))?)))
            .collect()
    };

    let ts = ints(3)?;
    let divides = flags(4, ts.len())?;
    let exceptional = flags(5, ts.len())?;
    Ok(ScanRow {
        p: record[0].parse().context("bad p")?,
        qa: ints(1)?,
        qb: ints(2)?,
        bi: ts
            .into_iter()
            .zip(divides)
            .zip(exceptional)
            .map(|((t, divides), exceptional)| BiRoot {
                t,
                divides,
                exceptional,
            })
            .collect(),
    })
}

/// Parses a complete CSV scan, header included.
pub fn parse_csv(text: &str) -> anyhow::Result<Vec<ScanRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    if reader.headers()?.iter().ne(CSV_HEADER) {
        bail!("unexpected CSV header");
    }
    reader
        .records()
        .map(|r| parse_csv_record(&r?))
        .collect()
}

/// Streams rows in one format.
pub enum RowWriter<W: Write> {
    Json { out: W, rows: usize },
    Jsonl(W),
    Csv(Box<csv::Writer<W>>),
}

impl<W: Write> RowWriter<W> {
    pub fn new(format: Format, out: W) -> anyhow::Result<Self> {
        Ok(match format {
            Format::Json => RowWriter::Json { out, rows: 0 },
            Format::Jsonl => RowWriter::Jsonl(out),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(CSV_HEADER)?;
                RowWriter::Csv(Box::new(w))
            }
        })
    }

    pub fn write(&mut self, row: &ScanRow) -> anyhow::Result<()> {
        match self {
            RowWriter::Json { out, rows } => {
                out.write_all(if *rows == 0 { b"[" } else { b"," })?;
                serde_json::to_writer(&mut *out, row)?;
                *rows += 1;
            }
            RowWriter::Jsonl(out) => {
                serde_json::to_writer(&mut *out, row)?;
                out.write_all(b"\n")?;
            }
            RowWriter::Csv(w) => w.write_record(csv_record(row))?,
        }
        Ok(())
    }

    pub fn finish(self) -> anyhow::Result<()> {
        match self {
            RowWriter::Json { mut out, rows } => {
                out.write_all(if rows == 0 { b"[]\n" } else { b"]\n" })?;
                out.flush()?;
            }
            RowWriter::Jsonl(mut out) => out.flush()?,
            RowWriter::Csv(mut w) => w.flush()?,
        }
        Ok(())
    }
}
