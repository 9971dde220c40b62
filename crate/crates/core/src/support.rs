//! Support families `C_i`, support posets and the ideals `I_Sigma` built from them.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{IndexSet, Monomial, MonomialIdeal};
use crate::polarity::PolarizationMap;
use crate::poset::Poset;

/// The sets `C_i` for every `i` in a domain of variable indices.
///
/// For ideals with full support the domain is `1..=n`. For other ideals it is
/// `supp(I)` and `C_i` is undefined outside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFamily {
    n: usize,
    sets: BTreeMap<usize, IndexSet>,
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    n: usize,
    #[serde(rename = "C")]
    c: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    support: Option<Vec<usize>>,
}

impl SupportFamily {
    /// Family over the full domain `1..=n`; `sets[i-1]` is `C_i`.
    pub fn new(n: usize, sets: Vec<IndexSet>) -> Result<Self> {
        if sets.len() != n {
            return Err(Error::InvalidFamily(format!(
                "expected {n} sets, got {}",
                sets.len()
            )));
        }
        Self::with_domain(n, (1..=n).zip(sets).collect())
    }

    /// Family over an arbitrary domain.
    pub fn with_domain(n: usize, sets: BTreeMap<usize, IndexSet>) -> Result<Self> {
        let fam = SupportFamily { n, sets };
        fam.validate()?;
        Ok(fam)
    }

    /// Convenience constructor from plain index lists.
    pub fn from_lists(n: usize, lists: &[&[usize]]) -> Result<Self> {
        Self::new(n, lists.iter().map(|l| l.iter().copied().collect()).collect())
    }

    fn validate(&self) -> Result<()> {
        let domain: IndexSet = self.sets.keys().copied().collect();
        domain.check_within(self.n)?;
        for (&i, c) in &self.sets {
            if !c.contains(i) {
                return Err(Error::InvalidFamily(format!("{i} is not in C_{i}")));
            }
            if !c.is_subset(&domain) {
                return Err(Error::InvalidFamily(format!("C_{i} leaves the domain {domain}")));
            }
        }
        for (&j, cj) in &self.sets {
            for i in cj.iter() {
                if !self.sets[&i].is_subset(cj) {
                    return Err(Error::InvalidFamily(format!(
                        "not transitive: {i} in C_{j} but C_{i} is not inside C_{j}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Indices `i` for which `C_i` is defined.
    pub fn domain(&self) -> IndexSet {
        self.sets.keys().copied().collect()
    }

    pub fn is_full(&self) -> bool {
        self.sets.len() == self.n
    }

    /// `C_i`, if `i` is in the domain.
    pub fn set(&self, i: usize) -> Option<&IndexSet> {
        self.sets.get(&i)
    }

    /// `(i, C_i)` pairs in increasing `i`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &IndexSet)> {
        self.sets.iter().map(|(&i, c)| (i, c))
    }

    pub fn to_json(&self) -> String {
        let fj = FamilyJson {
            n: self.n,
            c: self.sets.values().map(|c| c.iter().collect()).collect(),
            support: (!self.is_full()).then(|| self.sets.keys().copied().collect()),
        };
        serde_json::to_string(&fj).expect("family serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let fj: FamilyJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("support family JSON: {e}")))?;
        let domain = fj.support.unwrap_or_else(|| (1..=fj.n).collect());
        if domain.len() != fj.c.len() {
            return Err(Error::InvalidFamily(format!(
                "{} sets for a domain of {} indices",
                fj.c.len(),
                domain.len()
            )));
        }
        let sets = domain
            .into_iter()
            .zip(fj.c)
            .map(|(i, c)| (i, c.into_iter().collect()))
            .collect();
        Self::with_domain(fj.n, sets)
    }

    /// The squarefree monomial `m_i = prod_{j in C_i} x_j`.
    pub fn monomial(&self, i: usize) -> Result<Monomial> {
        let c = self
            .set(i)
            .ok_or(Error::VariableOutOfRange { index: i, n: self.n })?;
        Monomial::from_support(self.n, c)
    }
}

/// A collection `Sigma` of nonempty subsets of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaCollection(Vec<IndexSet>);

impl SigmaCollection {
    pub fn new(sets: Vec<IndexSet>) -> Result<Self> {
        if sets.iter().any(IndexSet::is_empty) {
            return Err(Error::InvalidSigma("empty member".into()));
        }
        Ok(SigmaCollection(sets))
    }

    pub fn from_lists(lists: &[&[usize]]) -> Result<Self> {
        Self::new(lists.iter().map(|l| l.iter().copied().collect()).collect())
    }

    pub fn sets(&self) -> &[IndexSet] {
        &self.0
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: Vec<Vec<usize>> =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("sigma JSON: {e}")))?;
        Self::new(v.into_iter().map(|l| l.into_iter().collect()).collect())
    }
}

/// `C_i` for every variable in the support of a squarefree ideal.
pub fn support_family(ideal: &MonomialIdeal) -> Result<SupportFamily> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.ambient();
    let supports: Vec<IndexSet> = ideal.generators().iter().map(Monomial::support).collect();
    let mut sets = BTreeMap::new();
    for i in ideal.support().iter() {
        let mut acc: Option<IndexSet> = None;
        for s in supports.iter().filter(|s| s.contains(i)) {
            acc = Some(match acc {
                None => s.clone(),
                Some(a) => a.intersection(s),
            });
        }
        sets.insert(i, acc.expect("i lies in some generator"));
    }
    Ok(SupportFamily { n, sets })
}

/// Support family of the polarization of any ideal, computed from exponent
/// thresholds without building `I^P`.
///
/// The polarized variable `x_{i,s}` divides exactly the generators with
/// `mu_i >= s`. Indices follow the flattening of [`PolarizationMap`].
pub fn polarized_support_family(ideal: &MonomialIdeal) -> SupportFamily {
    let map = PolarizationMap::for_ideal(ideal);
    let gens = ideal.generators();
    let mut sets = BTreeMap::new();
    for k in 1..=map.target_ambient() {
        let (i, s) = map.source(k).expect("flat index in range");
        let holders: Vec<&Monomial> = gens.iter().filter(|g| g.exponent(i) >= s).collect();
        let mut c = IndexSet::new();
        for l in 1..=map.target_ambient() {
            let (j, t) = map.source(l).expect("flat index in range");
            if holders.iter().all(|g| g.exponent(j) >= t) {
                c.insert(l);
            }
        }
        sets.insert(k, c);
    }
    SupportFamily {
        n: map.target_ambient(),
        sets,
    }
}

/// The support poset: distinct sets among the `C_i`, ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportPoset {
    /// Distinct `C` sets, ordered by their smallest member index.
    pub classes: Vec<IndexSet>,
    /// For each class, the indices `i` with `C_i` equal to it.
    pub members: Vec<IndexSet>,
    pub poset: Poset,
}

impl SupportPoset {
    /// Hasse diagram in DOT, each node labelled by its members as `1,2`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph support_poset {\n  rankdir=BT;\n  node [shape=circle];\n");
        for (i, m) in self.members.iter().enumerate() {
            let label: Vec<String> = m.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", label.join(",")));
        }
        for &(a, b) in self.poset.covers() {
            out.push_str(&format!("  n{a} -> n{b} [arrowhead=none];\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn from_family(family: &SupportFamily) -> Self {
        let mut by_set: BTreeMap<&IndexSet, IndexSet> = BTreeMap::new();
        for (i, c) in family.iter() {
            by_set.entry(c).or_default().insert(i);
        }
        let mut pairs: Vec<(IndexSet, IndexSet)> =
            by_set.into_iter().map(|(c, m)| (c.clone(), m)).collect();
        pairs.sort_by_key(|(_, m)| m.iter().next());
        let (classes, members): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let labels = members
            .iter()
            .map(|m: &IndexSet| m.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("="))
            .collect();
        let mut rel = Vec::new();
        for (a, ca) in classes.iter().enumerate() {
            for (b, cb) in classes.iter().enumerate() {
                if a != b && ca.is_subset(cb) {
                    rel.push((a, b));
                }
            }
        }
        let poset = Poset::from_relation(labels, rel).expect("inclusion is a partial order");
        SupportPoset {
            classes,
            members,
            poset,
        }
    }
}

/// Support poset of `ideal`; non-squarefree ideals are handled through their
/// polarization.
pub fn support_poset(ideal: &MonomialIdeal) -> SupportPoset {
    let family = if ideal.is_squarefree() {
        support_family(ideal).expect("squarefree")
    } else {
        polarized_support_family(ideal)
    };
    SupportPoset::from_family(&family)
}

/// Poset on the variables of the domain: `i < j` iff `C_i` is strictly inside
/// `C_j`, or `C_i = C_j` and `i` precedes `j` in `order`.
///
/// `order` may list only some variables; the rest follow in increasing index.
pub fn ordered_support_poset(family: &SupportFamily, order: &[usize]) -> Result<Poset> {
    let domain: Vec<usize> = family.domain().iter().collect();
    let mut rank: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in order {
        if !family.domain().contains(v) {
            return Err(Error::UnknownLabel(v.to_string()));
        }
        if rank.insert(v, rank.len()).is_some() {
            return Err(Error::Parse(format!("variable {v} repeated in order")));
        }
    }
    for &v in &domain {
        let next = rank.len();
        rank.entry(v).or_insert(next);
    }
    let labels = domain.iter().map(|i| i.to_string()).collect();
    let mut rel = Vec::new();
    for (a, &i) in domain.iter().enumerate() {
        for (b, &j) in domain.iter().enumerate() {
            if a == b {
                continue;
            }
            let (ci, cj) = (family.set(i).unwrap(), family.set(j).unwrap());
            let below = if ci == cj {
                rank[&i] < rank[&j]
            } else {
                ci.is_subset(cj)
            };
            if below {
                rel.push((a, b));
            }
        }
    }
    Poset::from_relation(labels, rel)
}

/// `m_sigma = lcm(m_i : i in sigma)` for each sigma, as a minimalized ideal.
pub fn ideal_from_sigma(family: &SupportFamily, sigma: &SigmaCollection) -> Result<MonomialIdeal> {
    if !family.is_full() {
        return Err(Error::InvalidFamily("family must be indexed by all of [n]".into()));
    }
    let ms = sigma_monomials(family, sigma)?;
    MonomialIdeal::minimalize(family.ambient(), ms)
}

fn sigma_monomials(family: &SupportFamily, sigma: &SigmaCollection) -> Result<Vec<Monomial>> {
    let n = family.ambient();
    sigma
        .sets()
        .iter()
        .map(|s| {
            s.check_within(n).map_err(|_| Error::InvalidSigma(format!("{s} leaves [{n}]")))?;
            let mut set = IndexSet::new();
            for i in s.iter() {
                for j in family.set(i).unwrap().iter() {
                    set.insert(j);
                }
            }
            Monomial::from_support(n, &set)
        })
        .collect()
}

/// The two realization conditions for `(C, Sigma)`.
///
/// Both are evaluated over the members of `Sigma` whose `m_sigma` is a minimal
/// generator of `I_Sigma`. A non-minimal `m_sigma` does not influence the
/// support family of `I_Sigma`, and counting it can accept collections whose
/// ideal has a different support poset.
pub fn sigma_conditions_hold(family: &SupportFamily, sigma: &SigmaCollection) -> bool {
    sigma_conditions_impl(family, sigma, true)
}

/// The conditions evaluated literally over every member of `Sigma`.
pub fn sigma_conditions_hold_literal(family: &SupportFamily, sigma: &SigmaCollection) -> bool {
    sigma_conditions_impl(family, sigma, false)
}

fn sigma_conditions_impl(family: &SupportFamily, sigma: &SigmaCollection, survivors: bool) -> bool {
    if !family.is_full() {
        return false;
    }
    let Ok(ms) = sigma_monomials(family, sigma) else {
        return false;
    };
    let n = family.ambient();
    let kept: Vec<&Monomial> = if survivors {
        ms.iter()
            .filter(|m| !ms.iter().any(|o| o != *m && o.divides_same(m)))
            .collect()
    } else {
        ms.iter().collect()
    };
    let holders: Vec<BTreeSet<usize>> = (1..=n)
        .map(|i| {
            kept.iter()
                .enumerate()
                .filter(|(_, m)| m.exponent(i) > 0)
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    if holders.iter().any(BTreeSet::is_empty) {
        return false;
    }
    for i in 1..=n {
        for j in 1..=n {
            if holders[i - 1].is_subset(&holders[j - 1])
                && !family.set(j).unwrap().is_subset(family.set(i).unwrap())
            {
                return false;
            }
        }
    }
    true
}

/// `support_family(I) == C`; false for non-squarefree ideals.
pub fn is_support_poset_of(family: &SupportFamily, ideal: &MonomialIdeal) -> bool {
    matches!(support_family(ideal), Ok(f) if &f == family)
}

/// Largest ambient accepted by [`brute_force_realizability`].
pub const BRUTE_FORCE_MAX_N: usize = 4;

/// Searches every antichain of nonempty squarefree monomials on `n <= 4`
/// variables for an ideal with support family `C`.
///
/// Antichains are visited in increasing order of their bitmask encoding, so the
/// answer is deterministic.
pub fn brute_force_realizability(family: &SupportFamily) -> Result<Option<MonomialIdeal>> {
    let n = family.ambient();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::ScaleCap {
            what: "variables for exhaustive realizability search",
            actual: n,
            cap: BRUTE_FORCE_MAX_N,
        });
    }
    let monos: Vec<u32> = (1u32..(1 << n)).collect();
    let count = monos.len();
    for pick in 1u64..(1u64 << count) {
        let chosen: Vec<u32> = (0..count)
            .filter(|&k| pick >> k & 1 == 1)
            .map(|k| monos[k])
            .collect();
        let antichain = chosen.iter().enumerate().all(|(a, &x)| {
            chosen[a + 1..]
                .iter()
                .all(|&y| x & y != x && x & y != y)
        });
        if !antichain {
            continue;
        }
        let gens = chosen
            .iter()
            .map(|&mask| Monomial::new((0..n).map(|b| mask >> b & 1).collect()))
            .collect();
        let ideal = MonomialIdeal::from_minimal_unchecked(n, gens);
        if is_support_poset_of(family, &ideal) {
            return Ok(Some(ideal));
        }
    }
    Ok(None)
}
