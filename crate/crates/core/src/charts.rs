//! Function catalogs and input/output mapping charts.
//!
//! The catalog lists the positive functions on `n` variables in ascending
//! numeric order with letter ids `a, b, c, …`. The chart has one row per
//! output state `|y, 1⟩` and one column per input state `|x, 1⟩`; each cell
//! holds the id of the positive function that maps the input to the output.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::bits::BitString;
use crate::boolfunc::{from_parity_form, generate_functions, ParityForm, TruthTable};
use crate::error::{Error, Result};

/// Largest `n` for catalogs and charts.
pub const MAX_CHART_VARS: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" | "txt" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

pub trait Render {
    fn render(&self, format: Format) -> String;
}

/// Spreadsheet-style ids: `a..z`, then `aa, ab, …`.
pub fn id_for_index(mut index: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (index % 26) as u8);
        if index < 26 {
            break;
        }
        index = index / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}

fn check_chart_vars(n: usize) -> Result<()> {
    if !(1..=MAX_CHART_VARS).contains(&n) {
        return Err(Error::OutOfBounds {
            what: "variable count",
            value: n,
            min: 1,
            max: MAX_CHART_VARS,
        });
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub table: TruthTable,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FunctionCatalog {
    n: usize,
    entries: Vec<CatalogEntry>,
}

impl FunctionCatalog {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn index_of(&self, table: &TruthTable) -> Option<usize> {
        self.entries.binary_search_by(|e| e.table.cmp(table)).ok()
    }
}

pub fn build_catalog(n: usize) -> Result<FunctionCatalog> {
    check_chart_vars(n)?;
    let (mut positives, _) = generate_functions(n)?;
    positives.sort();
    let entries = positives
        .into_iter()
        .enumerate()
        .map(|(i, table)| CatalogEntry {
            id: id_for_index(i),
            table,
        })
        .collect();
    Ok(FunctionCatalog { n, entries })
}

impl Render for FunctionCatalog {
    /// CSV rows are `id,binary,hex,decimal` with no header.
    fn render(&self, format: Format) -> String {
        let rows: Vec<[String; 4]> = self
            .entries
            .iter()
            .map(|e| {
                [
                    e.id.clone(),
                    e.table.to_binary(),
                    e.table.to_hex(),
                    e.table.to_decimal(),
                ]
            })
            .collect();
        match format {
            Format::Csv => rows.iter().map(|r| r.join(",") + "\n").collect(),
            Format::Text => {
                let header = ["id", "bin", "hex", "dec"].map(String::from);
                let widths: Vec<usize> = (0..4)
                    .map(|c| {
                        rows.iter()
                            .chain(std::iter::once(&header))
                            .map(|r| r[c].len())
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                std::iter::once(&header)
                    .chain(&rows)
                    .map(|r| aligned_line(r.iter().map(String::as_str), &widths))
                    .collect()
            }
        }
    }
}

fn aligned_line<'a>(cells: impl Iterator<Item = &'a str>, widths: &[usize]) -> String {
    let mut line = String::new();
    for (i, (cell, w)) in cells.zip(widths).enumerate() {
        if i > 0 {
            line.push_str("  ");
        }
        let _ = write!(line, "{cell:<w$}");
    }
    line.truncate(line.trim_end().len());
    line.push('\n');
    line
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MappingChart {
    n: usize,
    ids: Vec<String>,
    /// `cells[y][x]` is a catalog index.
    cells: Vec<Vec<usize>>,
    show_negatives: bool,
}

pub fn build_chart(n: usize) -> Result<MappingChart> {
    let catalog = build_catalog(n)?;
    let size = 1u64 << n;
    let mut cells = Vec::with_capacity(size as usize);
    for y in 0..size {
        let mut row = Vec::with_capacity(size as usize);
        for x in 0..size {
            let form = ParityForm::new(BitString::new(n, x ^ y)?, false)?;
            let table = from_parity_form(&form);
            let index = catalog
                .index_of(&table)
                .expect("every parity function is in the catalog");
            row.push(index);
        }
        cells.push(row);
    }
    Ok(MappingChart {
        n,
        ids: catalog.entries.into_iter().map(|e| e.id).collect(),
        cells,
        show_negatives: false,
    })
}

impl MappingChart {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Id at output row `y` and input column `x` (data bits only).
    pub fn cell(&self, y: u64, x: u64) -> &str {
        &self.ids[self.cells[y as usize][x as usize]]
    }

    pub fn cell_index(&self, y: u64, x: u64) -> usize {
        self.cells[y as usize][x as usize]
    }

    /// Id for full kets such as `00001 -> 00101`, ancilla bit included.
    pub fn cell_for_states(&self, output: &str, input: &str) -> Result<&str> {
        let y = self.data_bits(output)?;
        let x = self.data_bits(input)?;
        Ok(self.cell(y, x))
    }

    fn data_bits(&self, state: &str) -> Result<u64> {
        let bits: BitString = state.parse()?;
        match bits.split_last() {
            Some((data, true)) if data.width() == self.n => Ok(data.value()),
            _ => Err(Error::InvalidState(format!(
                "{state} is not a {}-bit state ending in 1",
                self.n + 1
            ))),
        }
    }

    pub fn state_label(&self, value: u64) -> String {
        format!("{:0width$b}1", value, width = self.n)
    }

    pub fn with_negatives(mut self, show: bool) -> Self {
        self.show_negatives = show;
        self
    }

    fn cell_text(&self, y: usize, x: usize) -> String {
        let id = &self.ids[self.cells[y][x]];
        if self.show_negatives {
            format!("{id}/{}", id.to_uppercase())
        } else {
            id.clone()
        }
    }

    /// Each row and each column holds every id exactly once.
    pub fn is_latin_square(&self) -> bool {
        let size = self.size();
        let full = |ids: Vec<usize>| {
            let mut seen = vec![false; size];
            ids.into_iter()
                .all(|i| i < size && !std::mem::replace(&mut seen[i], true))
        };
        (0..size).all(|r| full(self.cells[r].clone()))
            && (0..size).all(|c| full((0..size).map(|r| self.cells[r][c]).collect()))
    }

    pub fn is_symmetric(&self) -> bool {
        let size = self.size();
        (0..size).all(|r| (0..size).all(|c| self.cells[r][c] == self.cells[c][r]))
    }

    /// Flipping the chart upside down (complementing every output state)
    /// sends id number `k` to id number `N - 1 - k`, so the upper half of
    /// the catalog mirrors the lower half.
    pub fn has_mirror_structure(&self) -> bool {
        let size = self.size();
        (0..size)
            .all(|y| (0..size).all(|x| self.cells[size - 1 - y][x] == size - 1 - self.cells[y][x]))
    }
}

impl Render for MappingChart {
    /// Header row of input states, first column of output states.
    fn render(&self, format: Format) -> String {
        let size = self.size();
        let corner = "y\\x".to_string();
        let header: Vec<String> = std::iter::once(corner)
            .chain((0..size as u64).map(|x| self.state_label(x)))
            .collect();
        let rows: Vec<Vec<String>> = (0..size)
            .map(|y| {
                std::iter::once(self.state_label(y as u64))
                    .chain((0..size).map(|x| self.cell_text(y, x)))
                    .collect()
            })
            .collect();
        match format {
            Format::Csv => std::iter::once(&header)
                .chain(&rows)
                .map(|r| r.join(",") + "\n")
                .collect(),
            Format::Text => {
                let w = std::iter::once(&header)
                    .chain(&rows)
                    .flatten()
                    .map(|c| c.chars().count())
                    .max()
                    .unwrap_or(1);
                let widths = vec![w; size + 1];
                std::iter::once(&header)
                    .chain(&rows)
                    .map(|r| aligned_line(r.iter().map(String::as_str), &widths))
                    .collect()
            }
        }
    }
}
