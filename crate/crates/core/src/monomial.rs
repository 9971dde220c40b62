//! Exact monomial and monomial-ideal arithmetic.
//!
//! Variables are numbered from 1 in every public interface: `x1`, `x2`, ...
//! Exponent vectors are stored densely and indexed from 0 internally.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of 1-based variable indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSet(BTreeSet<usize>);

impl IndexSet {
    pub fn new() -> Self {
        IndexSet(BTreeSet::new())
    }

    /// `{1, ..., n}`
    pub fn full(n: usize) -> Self {
        (1..=n).collect()
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet(BTreeSet::from([i]))
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn insert(&mut self, i: usize) -> bool {
        self.0.insert(i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<usize> {
        &self.0
    }

    /// Checks every element lies in `1..=n`.
    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i == 0 || i > n) {
            Some(&index) => Err(Error::VariableOutOfRange { index, n }),
            None => Ok(()),
        }
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        IndexSet(iter.into_iter().collect())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A monomial `x1^e1 * ... * xn^en` over a fixed number of variables.
///
/// The derived ordering is lexicographic on the exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_var` (1-based) raised to `exp`.
    pub fn power(n: usize, var: usize, exp: u32) -> Result<Self> {
        if var == 0 || var > n {
            return Err(Error::VariableOutOfRange { index: var, n });
        }
        let mut exps = vec![0; n];
        exps[var - 1] = exp;
        Ok(Monomial { exps })
    }

    pub fn variable(n: usize, var: usize) -> Result<Self> {
        Self::power(n, var, 1)
    }

    /// Squarefree product of the variables in `set`.
    pub fn from_support(n: usize, set: &IndexSet) -> Result<Self> {
        set.check_within(n)?;
        let mut exps = vec![0; n];
        for i in set.iter() {
            exps[i - 1] = 1;
        }
        Ok(Monomial { exps })
    }

    /// Builds a monomial from `(var, exp)` pairs; repeated variables add up.
    pub fn from_pairs(n: usize, pairs: &[(usize, u32)]) -> Result<Self> {
        let mut exps = vec![0; n];
        for &(var, e) in pairs {
            if var == 0 || var > n {
                return Err(Error::VariableOutOfRange { index: var, n });
            }
            exps[var - 1] += e;
        }
        Ok(Monomial { exps })
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_var`, 1-based.
    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables dividing this monomial.
    pub fn support(&self) -> IndexSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Bitmask view of a squarefree monomial (bit `i-1` for `x_i`).
    /// `None` when the monomial is not squarefree or has more than 64 variables.
    pub fn squarefree_mask(&self) -> Option<u64> {
        if self.exps.len() > 64 || !self.is_squarefree() {
            return None;
        }
        Some(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e == 1)
                .fold(0u64, |m, (i, _)| m | (1 << i)),
        )
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::AmbientMismatch {
                left: self.exps.len(),
                right: other.exps.len(),
            });
        }
        Ok(())
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(self.lcm_same(other))
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.divides_same(other))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        })
    }

    pub(crate) fn lcm_same(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub(crate) fn divides_same(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Same monomial viewed in a larger ring (new variables get exponent 0).
    pub fn padded(&self, n: usize) -> Result<Monomial> {
        if n < self.exps.len() && self.exps[n..].iter().any(|&e| e > 0) {
            return Err(Error::AmbientMismatch {
                left: self.exps.len(),
                right: n,
            });
        }
        let mut exps = self.exps.clone();
        exps.resize(n, 0);
        Ok(Monomial { exps })
    }

    /// Renames variables: `x_i` goes to `x_{map[i-1]}` (1-based targets).
    pub(crate) fn renamed(&self, map: &[usize], n: usize) -> Monomial {
        let mut exps = vec![0; n];
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[map[i] - 1] += e;
            }
        }
        Monomial { exps }
    }

    /// Parses `x1*x2^3` (or `1`) in a ring with `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        if compact == "1" {
            return Ok(Monomial::one(n));
        }
        let mut exps = vec![0u32; n];
        for factor in compact.split('*') {
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("expected `x<k>` in factor `{factor}`")))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e),
                None => (body, "1"),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in `{factor}`")))?;
            let exp: u32 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
            if idx == 0 || idx > n {
                return Err(Error::VariableOutOfRange { index: idx, n });
            }
            exps[idx - 1] += exp;
        }
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Support of a monomial.
pub fn support(m: &Monomial) -> IndexSet {
    m.support()
}

/// A monomial ideal stored through its minimal generating set `G(I)`.
///
/// Generators are kept in decreasing lexicographic order of their exponent
/// vectors, so `x1*x2` is listed before `x3`. Two ideals are equal exactly when
/// their generator sets are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

fn canonical_sort(gens: &mut [Monomial]) {
    gens.sort_unstable_by(|a, b| b.cmp(a));
}

impl MonomialIdeal {
    /// The zero ideal in `n` variables.
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// Strict constructor: the generators must already be a divisibility antichain.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.ambient() != n {
                return Err(Error::AmbientMismatch {
                    left: n,
                    right: g.ambient(),
                });
            }
            if g.is_one() {
                return Err(Error::UnitGenerator);
            }
        }
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if a.divides_same(b) || b.divides_same(a) {
                    return Err(Error::NotMinimal);
                }
            }
        }
        let mut gens = gens;
        canonical_sort(&mut gens);
        Ok(MonomialIdeal { n, gens })
    }

    /// Ideal generated by arbitrary monomials; drops every non-minimal one.
    pub fn minimalize<I>(n: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut ms: Vec<Monomial> = Vec::new();
        for m in monomials {
            if m.ambient() != n {
                return Err(Error::AmbientMismatch {
                    left: n,
                    right: m.ambient(),
                });
            }
            if m.is_one() {
                return Err(Error::UnitGenerator);
            }
            ms.push(m);
        }
        Ok(MonomialIdeal {
            n,
            gens: minimal_elements(ms),
        })
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Union of the supports of the generators.
    pub fn support(&self) -> IndexSet {
        let mut set = IndexSet::new();
        for g in &self.gens {
            for i in g.support().iter() {
                set.insert(i);
            }
        }
        set
    }

    pub fn has_full_support(&self) -> bool {
        self.support().len() == self.n
    }

    /// Maximum exponent of each variable over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut a = vec![0; self.n];
        for g in &self.gens {
            for (ai, &e) in a.iter_mut().zip(g.exponents()) {
                *ai = (*ai).max(e);
            }
        }
        a
    }

    /// Ideal membership.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.ambient() != self.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: m.ambient(),
            });
        }
        Ok(self.gens.iter().any(|g| g.divides_same(m)))
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let all = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimal_elements(all),
        })
    }

    /// Intersection, as the minimal elements of all pairwise lcms.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm_same(b)))
            .collect();
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimal_elements(lcms),
        })
    }

    /// The same generators in a ring with `n >= ambient` variables.
    pub fn padded(&self, n: usize) -> Result<MonomialIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.padded(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal { n, gens })
    }

    /// Applies a variable renaming `x_i -> x_{map[i-1]}` into a ring with `n` variables.
    pub(crate) fn renamed(&self, map: &[usize], n: usize) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.renamed(map, n)).collect();
        MonomialIdeal {
            n,
            gens: minimal_elements(gens),
        }
    }

    /// Builds an ideal from generators that are known to be minimal already.
    pub(crate) fn from_minimal_unchecked(n: usize, mut gens: Vec<Monomial>) -> MonomialIdeal {
        canonical_sort(&mut gens);
        MonomialIdeal { n, gens }
    }

    /// Comma separated generator list, without the header line.
    pub fn generators_string(&self) -> String {
        self.gens
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Minimal elements of a list of monomials under divisibility, sorted and deduplicated.
pub(crate) fn minimal_elements(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    // increasing degree first: a divisor always precedes its multiples
    ms.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    ms.dedup();
    let mut keep: Vec<Monomial> = Vec::with_capacity(ms.len());
    for m in ms {
        if !keep.iter().any(|k| k.divides_same(&m)) {
            keep.push(m);
        }
    }
    canonical_sort(&mut keep);
    keep
}

/// Free-function form of [`MonomialIdeal::minimalize`].
pub fn minimalize<I>(monomials: I, n: usize) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = Monomial>,
{
    MonomialIdeal::minimalize(n, monomials)
}

impl fmt::Display for MonomialIdeal {
    /// `vars: n` on the first line, generators on the second.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.n)?;
        write!(f, "{}", self.generators_string())
    }
}

impl FromStr for MonomialIdeal {
    type Err = Error;

    /// Parses the header `vars: n` followed by comma separated monomials.
    /// Lines starting with `#` are comments. The generator list is minimalized.
    fn from_str(s: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut body = String::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if n.is_none() {
                let rest = line
                    .strip_prefix("vars")
                    .and_then(|r| r.trim_start().strip_prefix(':'))
                    .ok_or_else(|| Error::Parse("missing `vars: n` header".into()))?;
                n = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable count `{}`", rest.trim())))?,
                );
                continue;
            }
            body.push_str(line);
            body.push(',');
        }
        let n = n.ok_or_else(|| Error::Parse("missing `vars: n` header".into()))?;
        let gens = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| Monomial::parse(t, n))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(n, gens)
    }
}

/// A bijection on `{1..n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariablePermutation(Vec<usize>);

impl VariablePermutation {
    pub fn identity(n: usize) -> Self {
        VariablePermutation((0..n).collect())
    }

    /// Image of variable `i` (both 1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `(i, image)` pairs, 1-based.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().map(|(i, &j)| (i + 1, j + 1)).collect()
    }

    pub fn apply_to_monomial(&self, m: &Monomial) -> Monomial {
        let mut exps = vec![0; m.ambient()];
        for (i, &e) in m.exponents().iter().enumerate() {
            exps[self.0[i]] = e;
        }
        Monomial::new(exps)
    }

    pub fn apply_to_ideal(&self, ideal: &MonomialIdeal) -> MonomialIdeal {
        let gens = ideal
            .generators()
            .iter()
            .map(|g| self.apply_to_monomial(g))
            .collect();
        MonomialIdeal::from_minimal_unchecked(ideal.ambient(), gens)
    }
}

/// Searches for a permutation of the variables mapping `G(I)` onto `G(J)`.
///
/// Candidates for each variable are pruned by a degree profile (the multiset of
/// `(exponent, generator degree)` over the generators it divides), and partial
/// assignments are checked by comparing the projections of both generator sets
/// onto the variables assigned so far.
pub fn find_variable_isomorphism(
    i_ideal: &MonomialIdeal,
    j_ideal: &MonomialIdeal,
) -> Option<VariablePermutation> {
    let n = i_ideal.ambient();
    if n != j_ideal.ambient() || i_ideal.len() != j_ideal.len() {
        return None;
    }
    if i_ideal == j_ideal {
        return Some(VariablePermutation::identity(n));
    }
    let degs = |id: &MonomialIdeal| {
        let mut d: Vec<u32> = id.generators().iter().map(Monomial::degree).collect();
        d.sort_unstable();
        d
    };
    if degs(i_ideal) != degs(j_ideal) {
        return None;
    }
    let profile = |id: &MonomialIdeal, v: usize| {
        let mut p: Vec<(u32, u32)> = id
            .generators()
            .iter()
            .filter(|g| g.exponents()[v] > 0)
            .map(|g| (g.exponents()[v], g.degree()))
            .collect();
        p.sort_unstable();
        p
    };
    let pi: Vec<_> = (0..n).map(|v| profile(i_ideal, v)).collect();
    let pj: Vec<_> = (0..n).map(|v| profile(j_ideal, v)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| pi[v] == pj[w]).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    let mut sorted_i = pi.clone();
    let mut sorted_j = pj.clone();
    sorted_i.sort();
    sorted_j.sort();
    if sorted_i != sorted_j {
        return None;
    }

    // most constrained first, heavily used variables first among ties
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (candidates[v].len(), std::cmp::Reverse(pi[v].len())));

    let mut search = IsoSearch {
        gi: i_ideal.generators(),
        gj: j_ideal.generators(),
        order: &order,
        candidates: &candidates,
        image: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if search.extend(0) {
        Some(VariablePermutation(search.image))
    } else {
        None
    }
}

struct IsoSearch<'a> {
    gi: &'a [Monomial],
    gj: &'a [Monomial],
    order: &'a [usize],
    candidates: &'a [Vec<usize>],
    image: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for &w in &self.candidates[v] {
            if self.used[w] {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            if self.consistent(depth + 1) && self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.image[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, assigned: usize) -> bool {
        let vars = &self.order[..assigned];
        let mut left: Vec<Vec<u32>> = self
            .gi
            .iter()
            .map(|g| vars.iter().map(|&v| g.exponents()[v]).collect())
            .collect();
        let mut right: Vec<Vec<u32>> = self
            .gj
            .iter()
            .map(|g| vars.iter().map(|&v| g.exponents()[self.image[v]]).collect())
            .collect();
        left.sort_unstable();
        right.sort_unstable();
        left == right
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    #[test]
    fn support_of_monomials() {
        assert_eq!(m("x1*x2*x4", 5).support(), IndexSet::from_iter([1, 2, 4]));
        assert_eq!(Monomial::one(3).support(), IndexSet::new());
        assert_eq!(m("x1^3*x2", 2).support(), IndexSet::from_iter([1, 2]));
    }

    #[test]
    fn ideal_support_and_full_support() {
        let i = ideal("vars: 5\nx1*x2, x2*x4, x3, x4*x5");
        assert_eq!(i.support(), IndexSet::full(5));
        assert!(i.has_full_support());
        let j = ideal("vars: 2\nx1");
        assert_eq!(j.support(), IndexSet::singleton(1));
        assert!(!j.has_full_support());
        assert_eq!(MonomialIdeal::zero(3).support(), IndexSet::new());
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(m("x1*x2", 3).lcm(&m("x2*x3", 3)).unwrap(), m("x1*x2*x3", 3));
        let a = m("x1^2*x3", 3);
        assert_eq!(a.lcm(&a).unwrap(), a);
        assert_eq!(m("x1^3", 2).lcm(&m("x1*x2^2", 2)).unwrap(), m("x1^3*x2^2", 2));
        assert!(matches!(
            m("x1", 2).lcm(&m("x1", 3)),
            Err(Error::AmbientMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn divides_examples() {
        assert!(m("x1", 2).divides(&m("x1*x2", 2)).unwrap());
        assert!(!m("x1^2", 2).divides(&m("x1*x2", 2)).unwrap());
        let a = m("x2^2", 2);
        assert!(a.divides(&a).unwrap());
        assert!(m("x1", 1).divides(&m("x1", 2)).is_err());
    }

    #[test]
    fn minimalize_examples() {
        let i = MonomialIdeal::minimalize(2, [m("x1", 2), m("x1*x2", 2)]).unwrap();
        assert_eq!(i.generators(), &[m("x1", 2)]);
        let j = MonomialIdeal::minimalize(3, [m("x1*x2", 3), m("x2*x3", 3)]).unwrap();
        assert_eq!(j.len(), 2);
        assert!(MonomialIdeal::minimalize(2, [Monomial::one(2)]).is_err());
    }

    #[test]
    fn minimalize_products_for_series_parallel_example() {
        let n = 8;
        let left = ["x1*x2*x3", "x1*x4"];
        let right = ["x5*x6*x7", "x5*x8"];
        let products = left
            .iter()
            .flat_map(|a| right.iter().map(move |b| m(a, n).mul(&m(b, n)).unwrap()));
        let i = MonomialIdeal::minimalize(n, products).unwrap();
        assert_eq!(
            i.generators_string(),
            "x1*x2*x3*x5*x6*x7, x1*x2*x3*x5*x8, x1*x4*x5*x6*x7, x1*x4*x5*x8"
        );
    }

    #[test]
    fn strict_constructor_rejects_non_antichains() {
        assert_eq!(
            MonomialIdeal::new(2, vec![m("x1", 2), m("x1*x2", 2)]),
            Err(Error::NotMinimal)
        );
        assert_eq!(
            MonomialIdeal::new(2, vec![Monomial::one(2)]),
            Err(Error::UnitGenerator)
        );
    }

    #[test]
    fn sum_examples() {
        let a = ideal("vars: 2\nx1");
        let b = ideal("vars: 2\nx2");
        assert_eq!(a.sum(&b).unwrap(), ideal("vars: 2\nx1, x2"));
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.sum(&ideal("vars: 2\nx1*x2")).unwrap(), a);
        assert!(a.sum(&ideal("vars: 3\nx1")).is_err());
    }

    #[test]
    fn intersection_examples() {
        let a = ideal("vars: 2\nx1");
        let b = ideal("vars: 2\nx2");
        assert_eq!(a.intersection(&b).unwrap(), ideal("vars: 2\nx1*x2"));
        assert_eq!(a.intersection(&a).unwrap(), a);
        // <x2> ∩ <x3> + <x4> inside k[x1..x8]
        let x = |i| MonomialIdeal::new(8, vec![Monomial::variable(8, i).unwrap()]).unwrap();
        let inner = x(2).intersection(&x(3)).unwrap().sum(&x(4)).unwrap();
        assert_eq!(inner.generators_string(), "x2*x3, x4");
    }

    #[test]
    fn isomorphism_examples() {
        let i = ideal("vars: 3\nx1*x2, x2*x3^2");
        assert!(find_variable_isomorphism(&i, &i).unwrap().is_identity());
        let a = ideal("vars: 3\nx1*x2");
        let b = ideal("vars: 3\nx2*x3");
        let p = find_variable_isomorphism(&a, &b).unwrap();
        assert_eq!(p.apply_to_ideal(&a), b);
        let c = ideal("vars: 3\nx1*x2*x3");
        assert!(find_variable_isomorphism(&a, &c).is_none());
    }

    #[test]
    fn text_round_trip() {
        let text = "vars: 4\nx1*x2^3, x3, x2*x4";
        let i: MonomialIdeal = text.parse().unwrap();
        assert_eq!(i.to_string(), "vars: 4\nx1*x2^3, x2*x4, x3");
        assert_eq!(i.to_string().parse::<MonomialIdeal>().unwrap(), i);
        let spaced: MonomialIdeal = "  vars :4\n x1 * x2 ^ 3 ,\n x3,x2*x4 ".parse().unwrap();
        assert_eq!(spaced, i);
        let zero: MonomialIdeal = "vars: 3\n".parse().unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.to_string().parse::<MonomialIdeal>().unwrap(), zero);
    }

    #[test]
    fn parse_errors() {
        assert!("x1, x2".parse::<MonomialIdeal>().is_err());
        assert!("vars: 2\nx3".parse::<MonomialIdeal>().is_err());
        assert!("vars: 2\ny1".parse::<MonomialIdeal>().is_err());
        assert!("vars: 2\nx1^".parse::<MonomialIdeal>().is_err());
    }

    #[test]
    fn squarefree_mask_view() {
        assert_eq!(m("x1*x3", 3).squarefree_mask(), Some(0b101));
        assert_eq!(m("x1^2", 3).squarefree_mask(), None);
    }
}
