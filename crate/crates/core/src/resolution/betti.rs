//! Multigraded Betti tables and the invariants read from them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Counts `beta_{d,mu}` keyed by homological degree and multidegree.
/// Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Monomial), u64>,
}

#[derive(Serialize)]
struct EntryJson {
    d: usize,
    mu: String,
    degree: u32,
    count: u64,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, d: usize, mu: Monomial, count: u64) {
        if count > 0 {
            *self.entries.entry((d, mu)).or_insert(0) += count;
        }
    }

    pub fn set(&mut self, d: usize, mu: Monomial, count: u64) {
        if count == 0 {
            self.entries.remove(&(d, mu));
        } else {
            self.entries.insert((d, mu), count);
        }
    }

    pub fn get(&self, d: usize, mu: &Monomial) -> u64 {
        self.entries.get(&(d, mu.clone())).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Monomial, u64)> {
        self.entries.iter().map(|((d, mu), &c)| (*d, mu, c))
    }

    /// Largest homological degree with a nonzero entry.
    pub fn max_degree(&self) -> Option<usize> {
        self.entries.keys().map(|(d, _)| *d).max()
    }

    /// Total Betti numbers `beta_0, beta_1, ...` up to the last nonzero one.
    pub fn totals(&self) -> Vec<u64> {
        let Some(top) = self.max_degree() else {
            return Vec::new();
        };
        let mut out = vec![0; top + 1];
        for ((d, _), c) in &self.entries {
            out[*d] += c;
        }
        out
    }

    /// Graded Betti numbers `beta_{d,j}` with `j = |mu|`.
    pub fn graded(&self) -> BTreeMap<(usize, u32), u64> {
        let mut out = BTreeMap::new();
        for ((d, mu), c) in &self.entries {
            *out.entry((*d, mu.degree())).or_insert(0) += c;
        }
        out
    }

    /// `sum_d (-1)^d beta_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.totals()
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &BettiTable) -> bool {
        self.entries
            .iter()
            .all(|((d, mu), &c)| c <= other.get(*d, mu))
    }

    /// Keys where `self` exceeds `other`, for diagnostics.
    pub fn excess_over(&self, other: &BettiTable) -> Vec<(usize, Monomial, u64, u64)> {
        self.entries
            .iter()
            .filter(|((d, mu), &c)| c > other.get(*d, mu))
            .map(|((d, mu), &c)| (*d, mu.clone(), c, other.get(*d, mu)))
            .collect()
    }

    /// Applies `f` to every multidegree, summing collisions.
    pub fn map_multidegrees<F>(&self, mut f: F) -> Result<BettiTable>
    where
        F: FnMut(&Monomial) -> Result<Monomial>,
    {
        let mut out = BettiTable::new();
        for ((d, mu), &c) in &self.entries {
            out.add(*d, f(mu)?, c);
        }
        Ok(out)
    }

    /// Aligned text: the totals line, then the graded table with one row per
    /// degree `j` and one column per homological degree `d`.
    pub fn to_text(&self) -> String {
        let totals = self.totals();
        let graded = self.graded();
        let mut out = String::new();
        let cols = totals.len();
        let cells: Vec<Vec<String>> = {
            let mut degs: Vec<u32> = graded.keys().map(|(_, j)| *j).collect();
            degs.sort_unstable();
            degs.dedup();
            degs.iter()
                .map(|&j| {
                    let mut row = vec![format!("{j}")];
                    for d in 0..cols {
                        row.push(match graded.get(&(d, j)) {
                            Some(c) => c.to_string(),
                            None => ".".into(),
                        });
                    }
                    row
                })
                .collect()
        };
        let mut header = vec!["deg".to_string()];
        header.extend((0..cols).map(|d| d.to_string()));
        let mut total_row = vec!["total".to_string()];
        total_row.extend(totals.iter().map(ToString::to_string));
        let rows: Vec<&Vec<String>> = std::iter::once(&header)
            .chain(cells.iter())
            .chain(std::iter::once(&total_row))
            .collect();
        let width: Vec<usize> = (0..=cols)
            .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(1))
            .collect();
        for r in rows {
            let line: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(c, s)| format!("{s:>w$}", w = width[c]))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    /// JSON array of `{"d", "mu", "degree", "count"}` objects.
    pub fn to_json(&self) -> String {
        let v: Vec<EntryJson> = self
            .entries
            .iter()
            .map(|((d, mu), &c)| EntryJson {
                d: *d,
                mu: mu.to_string(),
                degree: mu.degree(),
                count: c,
            })
            .collect();
        serde_json::to_string(&v).expect("table serializes")
    }
}

/// Projective dimension and regularity read off a Betti table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub projdim: usize,
    /// `max (|mu| - d - 1)` over nonzero `beta_{d,mu}`, the convention for `S/I`.
    pub regularity: i64,
}

impl Invariants {
    /// Regularity of the ideal itself, `max (|mu| - d)`.
    pub fn ideal_regularity(&self) -> i64 {
        self.regularity + 1
    }
}

pub fn derived_invariants(table: &BettiTable) -> Result<Invariants> {
    let projdim = table.max_degree().ok_or(Error::EmptyTable)?;
    let regularity = table
        .iter()
        .map(|(d, mu, _)| mu.degree() as i64 - d as i64 - 1)
        .max()
        .ok_or(Error::EmptyTable)?;
    Ok(Invariants {
        projdim,
        regularity,
    })
}
