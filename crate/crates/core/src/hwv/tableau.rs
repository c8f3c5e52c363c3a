use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, Partition};
use crate::error::{Error, Result};

/// A filling of a Young diagram with labels `1..=d`, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;

    fn try_from(j: TableauJson) -> Result<Self> {
        let t = Tableau::from_rows(j.rows)?;
        if t.shape.parts() != j.shape.as_slice() {
            return Err(Error::Shape(format!("declared shape {:?} but rows have shape {}", j.shape, t.shape)));
        }
        Ok(t)
    }
}

impl From<Tableau> for TableauJson {
    fn from(t: Tableau) -> Self {
        TableauJson {
            shape: t.shape.parts().to_vec(),
            rows: t.rows,
        }
    }
}

impl Tableau {
    /// Rows must be nonempty, weakly decreasing in length, with labels >= 1.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Shape("empty row".into()));
        }
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::Shape("labels start at 1".into()));
        }
        let lens: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        let shape = Partition::new(lens.clone()).map_err(|_| Error::Shape(format!("row lengths {lens:?} increase")))?;
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> u32 {
        self.rows[row][col]
    }

    /// Largest label.
    pub fn max_label(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Labels of column `c`, top to bottom.
    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.shape.part(0) as usize).map(|c| self.column(c)).collect()
    }

    /// Checks that every label `1..=d` occurs exactly `n` times, where
    /// `d = |shape| / n`; returns `d`.
    pub fn check_content(&self, n: u32) -> Result<u32> {
        let size = self.shape.size();
        if n == 0 || size % u64::from(n) != 0 {
            return Err(Error::Content(format!("{} boxes are not a multiple of n = {n}", size)));
        }
        let d = (size / u64::from(n)) as u32;
        let mut counts = vec![0u32; d as usize + 1];
        for &v in self.rows.iter().flatten() {
            if v > d {
                return Err(Error::Content(format!("label {v} exceeds d = {d}")));
            }
            counts[v as usize] += 1;
        }
        if let Some(bad) = (1..=d as usize).find(|&i| counts[i] != n) {
            return Err(Error::Content(format!("label {bad} occurs {} times, expected {n}", counts[bad])));
        }
        Ok(d)
    }

    /// Rows weakly increasing, columns strictly increasing.
    pub fn is_semistandard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
            && self.rows.windows(2).all(|p| p[1].iter().zip(&p[0]).all(|(below, above)| below > above))
    }

    /// `sum_k prod_i C(n, kappa_i(T^{<=k}))`, with `kappa_i(T^{<=k})` the number
    /// of boxes labeled `i` among the first `k` columns: the number of
    /// distinct partial placement states after each column.
    pub fn cache_size(&self, n: u32) -> BigUint {
        let d = self.max_label() as usize;
        let mut seen = vec![0u64; d + 1];
        let mut total = BigUint::default();
        for col in self.columns() {
            for v in col {
                seen[v as usize] += 1;
            }
            let term = seen[1..].iter().fold(BigUint::from(1u32), |acc, &k| acc * binomial(u64::from(n), k));
            total += term;
        }
        total
    }

    /// Compact row encoding; see [`parse_compact_tableaux`].
    pub fn to_compact(&self) -> String {
        let rows: Vec<String> = self.rows.iter().map(|r| encode_row(r)).collect();
        rows.join(".")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

/// Fills `shape` with `T(b) = ceil(pi(j(b)) / n)`, where `j` numbers the
/// boxes column by column (left to right, each column top to bottom) from 1
/// and `pi` is given by its images `pi[j-1]` of `1..=|shape|`.
pub fn tableau_from_permutation(shape: &Partition, pi: &[usize], n: u32) -> Result<Tableau> {
    let size = shape.size() as usize;
    if pi.len() != size || n == 0 || size % n as usize != 0 {
        return Err(Error::Dimension(format!(
            "permutation of length {} does not fit {shape} with n = {n}",
            pi.len()
        )));
    }
    let mut seen = vec![false; size + 1];
    for &v in pi {
        if v == 0 || v > size || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidParameters(format!("{pi:?} is not a permutation of 1..={size}")));
        }
    }
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut j = 0;
    for c in 0..shape.part(0) as usize {
        for row in rows.iter_mut().take_while(|r| r.len() > c) {
            row[c] = pi[j].div_ceil(n as usize) as u32;
            j += 1;
        }
    }
    Tableau::from_rows(rows)
}

const SYMBOLS: &[u8] = b"123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

fn encode_row(row: &[u32]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < row.len() {
        let run = row[i..].iter().take_while(|&&v| v == row[i]).count();
        let sym = row[i]
            .checked_sub(1)
            .and_then(|k| SYMBOLS.get(k as usize))
            .map(|&b| b as char)
            .expect("labels 1..=35 have symbols");
        out.push(sym);
        match run {
            1 => {}
            2..=9 => out.push_str(&format!("^{run}")),
            _ => out.push_str(&format!("^{{{run}}}")),
        }
        i += run;
    }
    out
}

/// Parses the compact tableau grammar.
///
/// Tableaux are separated by `,` and rows by `.`. A box label is one symbol
/// `1`-`9` or `A`-`Z` (`A` = 10, ..., `Z` = 35), optionally followed by a
/// repetition `^k` with a single digit `k` or `^{k}` with any number of
/// digits. So `1^72.2^6` has rows `1111111 2` and `222222`. Whitespace is
/// ignored and `#` starts a comment running to the end of the line. A trailing
/// separator after the last tableau is accepted.
pub fn parse_compact_tableaux(text: &str) -> Result<Vec<Tableau>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut row: Vec<u32> = Vec::new();
    let mut tableau_start = 0usize;
    let mut touched = false;
    let mut i = 0usize;
    let err = |offset: usize, message: &str| Error::TableauSyntax {
        offset,
        message: message.to_string(),
    };
    let finish = |rows: &mut Vec<Vec<u32>>, row: &mut Vec<u32>, at: usize| -> Result<()> {
        if row.is_empty() {
            return Err(err(at, "empty row"));
        }
        rows.push(std::mem::take(row));
        Ok(())
    };
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b'#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
                continue;
            }
            _ if b.is_ascii_whitespace() => {}
            b'.' => {
                finish(&mut rows, &mut row, i)?;
            }
            b',' => {
                finish(&mut rows, &mut row, i)?;
                out.push(build(std::mem::take(&mut rows), tableau_start)?);
                tableau_start = i + 1;
                touched = false;
            }
            b'^' => return Err(err(i, "repetition without a preceding symbol")),
            _ => {
                let Some(label) = SYMBOLS.iter().position(|&s| s == b) else {
                    return Err(err(i, &format!("unexpected character {:?}", b as char)));
                };
                touched = true;
                let mut count = 1usize;
                let mut j = skip_ws(bytes, i + 1);
                if j < bytes.len() && bytes[j] == b'^' {
                    let (c, next) = parse_exponent(bytes, j + 1)?;
                    count = c;
                    j = next;
                } else {
                    j = i + 1;
                }
                row.extend(std::iter::repeat_n(label as u32 + 1, count));
                i = j;
                continue;
            }
        }
        i += 1;
    }
    if touched || !rows.is_empty() || !row.is_empty() {
        finish(&mut rows, &mut row, bytes.len())?;
        out.push(build(rows, tableau_start)?);
    }
    Ok(out)
}

fn skip_ws(bytes: &[u8], mut i: usize) -> usize {
    while i < bytes.len() && bytes[i].is_ascii_whitespace() {
        i += 1;
    }
    i
}

fn parse_exponent(bytes: &[u8], start: usize) -> Result<(usize, usize)> {
    let i = skip_ws(bytes, start);
    let bad = |offset: usize, message: &str| Error::TableauSyntax {
        offset,
        message: message.to_string(),
    };
    match bytes.get(i) {
        Some(b) if b.is_ascii_digit() => Ok(((b - b'0') as usize, i + 1)),
        Some(b'{') => {
            let mut j = i + 1;
            let mut value: usize = 0;
            let mut digits = 0;
            while j < bytes.len() && bytes[j] != b'}' {
                let c = bytes[j];
                if c.is_ascii_digit() {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add((c - b'0') as usize))
                        .ok_or_else(|| bad(j, "repetition count overflows"))?;
                    digits += 1;
                } else if !c.is_ascii_whitespace() {
                    return Err(bad(j, "expected a digit inside braces"));
                }
                j += 1;
            }
            if j == bytes.len() {
                return Err(bad(i, "unclosed brace"));
            }
            if digits == 0 {
                return Err(bad(i, "empty repetition count"));
            }
            Ok((value, j + 1))
        }
        _ => Err(bad(i, "expected a digit or '{' after '^'")),
    }
    .and_then(|(count, next)| {
        if count == 0 {
            Err(bad(i, "repetition count must be positive"))
        } else {
            Ok((count, next))
        }
    })
}

fn build(rows: Vec<Vec<u32>>, offset: usize) -> Result<Tableau> {
    Tableau::from_rows(rows).map_err(|e| Error::TableauSyntax {
        offset,
        message: e.to_string(),
    })
}

/// Parses tableaux in the JSON form `{"shape": [...], "rows": [[...], ...]}`,
/// either a single object or an array of them.
pub fn parse_json_tableaux(text: &str) -> Result<Vec<Tableau>> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let parse = |v: serde_json::Value| serde_json::from_value::<Tableau>(v).map_err(|e| Error::Malformed(e.to_string()));
    match value {
        serde_json::Value::Array(items) => items.into_iter().map(parse).collect(),
        other => Ok(vec![parse(other)?]),
    }
}

/// Chooses the JSON or compact reader by the first non-blank character.
pub fn parse_tableaux(text: &str) -> Result<Vec<Tableau>> {
    match text.trim_start().as_bytes().first() {
        Some(b'{') | Some(b'[') => parse_json_tableaux(text),
        _ => parse_compact_tableaux(text),
    }
}
