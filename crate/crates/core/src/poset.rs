//! Finite posets, Hasse diagrams and forests.
//!
//! Forests are oriented with roots at the bottom: a root is a minimal element,
//! a leaf is a maximal one, and every element covers at most one element.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite partial order on labelled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    /// `leq[a][b]` iff `a <= b`.
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Builds a poset from a relation given as `(a, b)` pairs meaning `a <= b`.
    ///
    /// Reflexive pairs are added; the relation must already be transitive and
    /// antisymmetric.
    pub fn from_relation<I>(labels: Vec<String>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_labels(&labels)?;
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::NotPartialOrder(format!("pair ({a},{b}) out of range")));
            }
            leq[a][b] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::NotPartialOrder(format!(
                        "{} and {} are mutually comparable",
                        labels[a], labels[b]
                    )));
                }
                if !leq[a][b] {
                    continue;
                }
                for c in 0..n {
                    if leq[b][c] && !leq[a][c] {
                        return Err(Error::NotPartialOrder(format!(
                            "not transitive at {} <= {} <= {}",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(Self::from_closed(labels, leq))
    }

    /// Builds a poset as the transitive closure of the given cover pairs `a < b`.
    pub fn from_covers<I>(labels: Vec<String>, covers: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_labels(&labels)?;
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::NotPartialOrder(format!("pair ({a},{b}) out of range")));
            }
            leq[a][b] = true;
        }
        // Warshall closure
        #[allow(clippy::needless_range_loop)]
        for k in 0..n {
            for a in 0..n {
                if !leq[a][k] {
                    continue;
                }
                for b in 0..n {
                    if leq[k][b] {
                        leq[a][b] = true;
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if leq[a][b] && leq[b][a] {
                    return Err(Error::NotPartialOrder(format!(
                        "cycle through {} and {}",
                        labels[a], labels[b]
                    )));
                }
            }
        }
        Ok(Self::from_closed(labels, leq))
    }

    fn from_closed(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Self {
        let n = labels.len();
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !leq[a][b] {
                    continue;
                }
                let between = (0..n).any(|c| c != a && c != b && leq[a][c] && leq[c][b]);
                if !between {
                    covers.push((a, b));
                }
            }
        }
        Poset {
            labels,
            leq,
            covers,
        }
    }

    pub fn antichain(labels: Vec<String>) -> Result<Self> {
        Self::from_covers(labels, [])
    }

    /// Chain `labels[0] < labels[1] < ...`.
    pub fn chain(labels: Vec<String>) -> Result<Self> {
        let k = labels.len();
        Self::from_covers(labels, (1..k).map(|i| (i - 1, i)))
    }

    /// Poset with integer labels `1..=n` and the given covers (1-based).
    pub fn numbered(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Self::from_covers(labels, covers.iter().map(|&(a, b)| (a - 1, b - 1)))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// Hasse diagram edges `(a, b)` with `a` covered by `b`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Cover pairs by label.
    pub fn cover_labels(&self) -> BTreeSet<(String, String)> {
        self.covers
            .iter()
            .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect()
    }

    /// Elements covered by `b`.
    pub fn lower_covers(&self, b: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.1 == b).map(|c| c.0).collect()
    }

    /// Elements covering `a`.
    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.0 == a).map(|c| c.1).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&b| (0..self.len()).all(|a| !self.lt(a, b)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| (0..self.len()).all(|b| !self.lt(a, b)))
            .collect()
    }

    /// Every element covers at most one element.
    pub fn is_forest(&self) -> bool {
        let mut below = vec![0usize; self.len()];
        for &(_, b) in &self.covers {
            below[b] += 1;
        }
        below.iter().all(|&c| c <= 1)
    }

    pub fn is_tree(&self) -> bool {
        self.is_forest() && self.minimal_elements().len() == 1
    }

    /// Induced subposet on the given elements, in the given order.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let labels = elements.iter().map(|&e| self.labels[e].clone()).collect();
        let leq = elements
            .iter()
            .map(|&a| elements.iter().map(|&b| self.leq[a][b]).collect())
            .collect();
        Self::from_closed(labels, leq)
    }

    /// Induced subposet on `{ k : k >= j }`.
    pub fn upper_set(&self, label: &str) -> Result<Poset> {
        let j = self
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        let keep: Vec<usize> = (0..self.len()).filter(|&k| self.leq[j][k]).collect();
        Ok(self.induced(&keep))
    }

    /// Disjoint union; labels of `other` that collide are primed until unique.
    pub fn disjoint_union(&self, other: &Poset) -> DisjointUnion {
        let mut labels = self.labels.clone();
        let mut taken: BTreeSet<String> = labels.iter().cloned().collect();
        let mut origin: Vec<(Side, usize)> = (0..self.len()).map(|i| (Side::Left, i)).collect();
        for (i, l) in other.labels.iter().enumerate() {
            let mut l = l.clone();
            while taken.contains(&l) {
                l.push('\'');
            }
            taken.insert(l.clone());
            labels.push(l);
            origin.push((Side::Right, i));
        }
        let off = self.len();
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (row, src) in leq.iter_mut().zip(&self.leq) {
            row[..src.len()].copy_from_slice(src);
        }
        for (row, src) in leq[off..].iter_mut().zip(&other.leq) {
            row[off..off + src.len()].copy_from_slice(src);
        }
        DisjointUnion {
            poset: Self::from_closed(labels, leq),
            origin,
        }
    }

    /// Order isomorphism test ignoring labels.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// An order isomorphism `self -> other` as an index map, if one exists.
    pub fn find_isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() || self.covers.len() != other.covers.len() {
            return None;
        }
        let sig = |p: &Poset, a: usize| {
            let down = (0..n).filter(|&b| p.lt(b, a)).count();
            let up = (0..n).filter(|&b| p.lt(a, b)).count();
            (down, up, p.lower_covers(a).len(), p.upper_covers(a).len())
        };
        let s1: Vec<_> = (0..n).map(|a| sig(self, a)).collect();
        let s2: Vec<_> = (0..n).map(|a| sig(other, a)).collect();
        let mut c1 = s1.clone();
        let mut c2 = s2.clone();
        c1.sort_unstable();
        c2.sort_unstable();
        if c1 != c2 {
            return None;
        }
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            k: usize,
            p: &Poset,
            q: &Poset,
            s1: &[(usize, usize, usize, usize)],
            s2: &[(usize, usize, usize, usize)],
            image: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if k == p.len() {
                return true;
            }
            for w in 0..q.len() {
                if used[w] || s1[k] != s2[w] {
                    continue;
                }
                let ok = (0..k).all(|a| {
                    p.leq[a][k] == q.leq[image[a]][w] && p.leq[k][a] == q.leq[w][image[a]]
                });
                if !ok {
                    continue;
                }
                image[k] = w;
                used[w] = true;
                if go(k + 1, p, q, s1, s2, image, used) {
                    return true;
                }
                used[w] = false;
            }
            false
        }
        if go(0, self, other, &s1, &s2, &mut image, &mut used) {
            Some(image)
        } else {
            None
        }
    }

    /// Graphviz rendering of the Hasse diagram, drawn bottom to top.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", escape_dot(l)));
        }
        for &(a, b) in &self.covers {
            out.push_str(&format!("  n{a} -> n{b} [arrowhead=none];\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if l.is_empty() || l.contains([',', '<', '\n']) {
            return Err(Error::Parse(format!("invalid element label `{l}`")));
        }
        if !seen.insert(l) {
            return Err(Error::Parse(format!("duplicate element label `{l}`")));
        }
    }
    Ok(())
}

pub(crate) fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Result of [`Poset::disjoint_union`]: the union and, per element, where it came from.
#[derive(Clone, Debug)]
pub struct DisjointUnion {
    pub poset: Poset,
    pub origin: Vec<(Side, usize)>,
}

impl fmt::Display for Poset {
    /// `elements: a,b,c` then `covers: a<b, b<c`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "elements: {}", self.labels.join(","))?;
        let covers: Vec<String> = self
            .covers
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        write!(f, "covers: {}", covers.join(", "))
    }
}

impl FromStr for Poset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut labels: Option<Vec<String>> = None;
        let mut pairs: Vec<(String, String)> = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("elements:") {
                if labels.is_some() {
                    return Err(Error::Parse("duplicate `elements:` line".into()));
                }
                labels = Some(
                    rest.split(',')
                        .map(|t| t.trim().to_string())
                        .filter(|t| !t.is_empty())
                        .collect(),
                );
            } else if let Some(rest) = line.strip_prefix("covers:") {
                for item in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                    let parts: Vec<&str> = item.split('<').map(str::trim).collect();
                    if parts.len() < 2 || parts.iter().any(|p| p.is_empty()) {
                        return Err(Error::Parse(format!("bad cover `{item}`")));
                    }
                    for w in parts.windows(2) {
                        pairs.push((w[0].to_string(), w[1].to_string()));
                    }
                }
            } else {
                return Err(Error::Parse(format!("unexpected line `{line}`")));
            }
        }
        let labels = labels.ok_or_else(|| Error::Parse("missing `elements:` line".into()))?;
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        };
        let covers = pairs
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Poset::from_covers(labels.clone(), covers)
    }
}

/// A poset in which every element covers at most one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forest(Poset);

impl TryFrom<Poset> for Forest {
    type Error = Error;

    fn try_from(p: Poset) -> Result<Self> {
        if p.is_forest() {
            Ok(Forest(p))
        } else {
            Err(Error::NotForest)
        }
    }
}

impl Deref for Forest {
    type Target = Poset;

    fn deref(&self) -> &Poset {
        &self.0
    }
}

impl Forest {
    /// Forest on labels `1..=n` from a parent table (`parent[i-1]` is the parent of `i`).
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        let n = parents.len();
        let covers: Vec<(usize, usize)> = parents
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (p, i + 1)))
            .collect();
        if covers.iter().any(|&(p, _)| p == 0 || p > n) {
            return Err(Error::OutOfRange("parent index".into()));
        }
        Forest::try_from(Poset::numbered(n, &covers)?)
    }

    pub fn poset(&self) -> &Poset {
        &self.0
    }

    pub fn into_poset(self) -> Poset {
        self.0
    }

    /// The element directly below `i`, if any.
    pub fn parent(&self, i: usize) -> Option<usize> {
        self.0.lower_covers(i).first().copied()
    }

    pub fn children(&self, i: usize) -> Vec<usize> {
        self.0.upper_covers(i)
    }

    /// Maximal elements.
    pub fn leaves(&self) -> Vec<usize> {
        self.0.maximal_elements()
    }

    /// Minimal elements.
    pub fn roots(&self) -> Vec<usize> {
        self.0.minimal_elements()
    }

    /// Elements of `i`'s root-to-`i` path, root first.
    pub fn path_to(&self, i: usize) -> Vec<usize> {
        let mut path = vec![i];
        let mut cur = i;
        while let Some(p) = self.parent(cur) {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Connected components, each listed in element order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.roots()
            .into_iter()
            .map(|r| (0..self.len()).filter(|&k| self.leq(r, k)).collect())
            .collect()
    }

    /// Longest chain from the root along which every node has exactly one
    /// child, ending at the first node that branches or is a leaf.
    pub fn trunk(&self) -> Result<Vec<usize>> {
        let roots = self.roots();
        if roots.len() != 1 {
            return Err(Error::NotTree);
        }
        let mut chain = vec![roots[0]];
        loop {
            let kids = self.children(*chain.last().unwrap());
            if kids.len() != 1 {
                return Ok(chain);
            }
            chain.push(kids[0]);
        }
    }
}

/// Free-function forms of the forest queries, erroring on non-forests.
pub fn leaves(p: &Poset) -> Result<Vec<usize>> {
    if !p.is_forest() {
        return Err(Error::NotForest);
    }
    Ok(p.maximal_elements())
}

pub fn roots(p: &Poset) -> Result<Vec<usize>> {
    if !p.is_forest() {
        return Err(Error::NotForest);
    }
    Ok(p.minimal_elements())
}
