//! Polarization, chain-partition depolarization and copolarity.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::{find_variable_isomorphism, IndexSet, Monomial, MonomialIdeal};
use crate::support::support_family;

/// Bookkeeping for the variables `x_{i,s}` (`1 <= s <= a_i`) of a polarization.
///
/// Polarized variables are flattened block by block: `x_{1,1..a_1}` first, then
/// `x_{2,1..a_2}`, and so on. Source variables with `a_i = 0` get no block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizationMap {
    source_n: usize,
    bounds: Vec<u32>,
    offsets: Vec<usize>,
    total: usize,
}

impl PolarizationMap {
    /// Map for the degree bounds `a` (one entry per source variable).
    pub fn from_bounds(bounds: Vec<u32>) -> Self {
        let mut offsets = Vec::with_capacity(bounds.len());
        let mut acc = 0usize;
        for &a in &bounds {
            offsets.push(acc);
            acc += a as usize;
        }
        PolarizationMap {
            source_n: bounds.len(),
            bounds,
            offsets,
            total: acc,
        }
    }

    pub fn for_ideal(ideal: &MonomialIdeal) -> Self {
        Self::from_bounds(ideal.max_exponents())
    }

    pub fn source_ambient(&self) -> usize {
        self.source_n
    }

    /// Number of polarized variables, `sum a_i`.
    pub fn target_ambient(&self) -> usize {
        self.total
    }

    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    /// Flat 1-based index of `x_{i,slot}`.
    pub fn flat(&self, i: usize, slot: u32) -> Result<usize> {
        if i == 0 || i > self.source_n {
            return Err(Error::VariableOutOfRange {
                index: i,
                n: self.source_n,
            });
        }
        if slot == 0 || slot > self.bounds[i - 1] {
            return Err(Error::OutOfRange(format!(
                "slot {slot} of x{i} exceeds bound {}",
                self.bounds[i - 1]
            )));
        }
        Ok(self.offsets[i - 1] + slot as usize)
    }

    /// Inverse of [`flat`](Self::flat).
    pub fn source(&self, flat: usize) -> Option<(usize, u32)> {
        if flat == 0 || flat > self.total {
            return None;
        }
        let i = (0..self.source_n).find(|&i| {
            self.offsets[i] < flat && flat <= self.offsets[i] + self.bounds[i] as usize
        })?;
        Some((i + 1, (flat - self.offsets[i]) as u32))
    }

    /// Human-readable name `x{i}_{s}` of a polarized variable.
    pub fn name(&self, flat: usize) -> String {
        match self.source(flat) {
            Some((i, s)) => format!("x{i}_{s}"),
            None => format!("?{flat}"),
        }
    }

    /// The squarefree image `x^mu -> prod_i prod_{s <= mu_i} x_{i,s}`.
    /// Fails when some exponent exceeds its bound.
    pub fn polarize_monomial(&self, m: &Monomial) -> Result<Monomial> {
        if m.ambient() != self.source_n {
            return Err(Error::AmbientMismatch {
                left: self.source_n,
                right: m.ambient(),
            });
        }
        let mut exps = vec![0u32; self.total];
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > self.bounds[i] {
                return Err(Error::OutOfRange(format!(
                    "exponent {e} of x{} exceeds polarization bound {}",
                    i + 1,
                    self.bounds[i]
                )));
            }
            for s in 0..e as usize {
                exps[self.offsets[i] + s] = 1;
            }
        }
        Ok(Monomial::new(exps))
    }

    /// Collapses a polarized multidegree back to the source ring by summing slots.
    pub fn depolarize_monomial(&self, m: &Monomial) -> Result<Monomial> {
        if m.ambient() != self.total {
            return Err(Error::AmbientMismatch {
                left: self.total,
                right: m.ambient(),
            });
        }
        let mut exps = vec![0u32; self.source_n];
        for (k, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                let (i, _) = self.source(k + 1).expect("flat index in range");
                exps[i - 1] += e;
            }
        }
        Ok(Monomial::new(exps))
    }
}

/// The squarefree ideal `I^P` together with its variable bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    pub map: PolarizationMap,
}

/// Polarization of `ideal`. The generator count is preserved.
pub fn polarize(ideal: &MonomialIdeal) -> Polarization {
    let map = PolarizationMap::for_ideal(ideal);
    let gens = ideal
        .generators()
        .iter()
        .map(|g| map.polarize_monomial(g).expect("bounds cover every generator"))
        .collect();
    // the image of an antichain under polarization is an antichain
    let ideal = MonomialIdeal::from_minimal_unchecked(map.target_ambient(), gens);
    Polarization { ideal, map }
}

/// A partition of the variables `1..=n` into blocks, each meant to be a chain
/// of the `<`-support poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainPartition {
    blocks: Vec<Vec<usize>>,
}

impl ChainPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        ChainPartition { blocks }
    }

    /// Every variable in its own block.
    pub fn singletons(n: usize) -> Self {
        ChainPartition {
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Checks the blocks partition `1..=n`.
    pub fn check_partition(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for b in &self.blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &i in b {
                if i == 0 || i > n {
                    return Err(Error::InvalidPartition(format!("variable {i} not in 1..={n}")));
                }
                if seen[i - 1] {
                    return Err(Error::InvalidPartition(format!("variable {i} repeated")));
                }
                seen[i - 1] = true;
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("variable {} missing", i + 1)));
        }
        Ok(())
    }
}

impl FromStr for ChainPartition {
    type Err = Error;

    /// `1,2,4|3` (blocks separated by `|`, optional `x` prefixes).
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split('|')
            .map(|blk| {
                blk.split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.trim_start_matches('x')
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad variable `{t}` in chain partition")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainPartition { blocks })
    }
}

impl fmt::Display for ChainPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Collapses each block of `partition` to one variable `y_b` (blocks in the
/// given order) and keeps the result only if it polarizes back to `ideal`.
pub fn depolarize_by_chains(
    ideal: &MonomialIdeal,
    partition: &ChainPartition,
) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.ambient();
    partition.check_partition(n)?;
    if !ideal.has_full_support() {
        return Err(Error::InvalidPartition(
            "ideal must involve every variable of its ring".into(),
        ));
    }
    let family = support_family(ideal)?;
    for b in partition.blocks() {
        for (k, &i) in b.iter().enumerate() {
            for &j in &b[k + 1..] {
                let (ci, cj) = (family.set(i).unwrap(), family.set(j).unwrap());
                if !ci.is_subset(cj) && !cj.is_subset(ci) {
                    return Err(Error::InvalidPartition(format!(
                        "variables {i} and {j} are incomparable in the support poset"
                    )));
                }
            }
        }
    }
    let target = partition.blocks().len();
    let mut block_of = vec![0usize; n];
    for (bi, b) in partition.blocks().iter().enumerate() {
        for &i in b {
            block_of[i - 1] = bi + 1;
        }
    }
    let collapsed = ideal.renamed(&block_of, target);
    if collapsed.len() != ideal.len() {
        return Err(Error::NotADepolarization);
    }
    let back = polarize(&collapsed);
    if back.ideal.ambient() != n || find_variable_isomorphism(&back.ideal, ideal).is_none() {
        return Err(Error::NotADepolarization);
    }
    Ok(collapsed)
}

/// True iff the polarizations of `i` and `j` agree up to renaming variables.
pub fn are_copolar(i: &MonomialIdeal, j: &MonomialIdeal) -> bool {
    let pi = polarize(i).ideal;
    let pj = polarize(j).ideal;
    if pi.ambient() != pj.ambient() {
        return false;
    }
    find_variable_isomorphism(&pi, &pj).is_some()
}

/// `m` as a squarefree monomial in the polarization ring of `map`, provided
/// every exponent respects the bounds (used for multidegree comparisons).
pub fn flatten_multidegree(map: &PolarizationMap, m: &Monomial) -> Result<Monomial> {
    map.polarize_monomial(m)
}

/// Source indices touched by a set of polarized variables.
pub fn source_support(map: &PolarizationMap, flat: &IndexSet) -> IndexSet {
    flat.iter().filter_map(|k| map.source(k).map(|(i, _)| i)).collect()
}
