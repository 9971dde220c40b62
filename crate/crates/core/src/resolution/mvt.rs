//! Mayer-Vietoris trees.
//!
//! A node holding generators `f_1, ..., f_r` (pivot `f_r`) has the right child
//! `<f_1, ..., f_{r-1}>` and the left child `<f_1, ..., f_{r-1}> ∩ <f_r>`,
//! whose minimal generators are the minimal `lcm(f_i, f_r)`. Leaves hold a
//! single generator.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::betti::BettiTable;
use crate::constructions::{diamonds_generators_in_standard_order, lines_generators_in_standard_order};
use crate::error::{Error, Result};
use crate::monomial::{minimal_elements, Monomial, MonomialIdeal};

/// Upper bound on the number of tree nodes.
pub const MVT_MAX_NODES: usize = 1 << 22;

/// How the generators of each node are ordered; the last one is the pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    /// Every node sorted in the stored ideal order.
    Canonical,
    /// Every node in reversed stored order.
    Reversed,
    /// Every node shuffled by a ChaCha8 stream with this seed.
    Seeded(u64),
    /// The root uses this list; children inherit the order of their parent.
    Explicit(Vec<Monomial>),
}

impl PivotOrder {
    /// Pivot order giving an exact tree for `J_{n,m}`: pivots `y_1^m, ..., y_n^m`, then
    /// the mixed generators.
    pub fn lines_standard(n: usize, m: usize) -> Result<Self> {
        let mut g = lines_generators_in_standard_order(n, m)?;
        g.reverse();
        Ok(PivotOrder::Explicit(g))
    }

    /// Pivot order giving an exact tree for the diamond ideals: pivots `A_1, ..., A_m`,
    /// then `B_1, ..., B_m`.
    pub fn diamonds_standard(m: usize) -> Result<Self> {
        let mut g = diamonds_generators_in_standard_order(m)?;
        g.reverse();
        Ok(PivotOrder::Explicit(g))
    }

    /// Parses `canonical`, `reversed` or `seeded:<u64>`.
    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "canonical" => Ok(PivotOrder::Canonical),
            "reversed" => Ok(PivotOrder::Reversed),
            _ => name
                .strip_prefix("seeded:")
                .and_then(|s| s.parse().ok())
                .map(PivotOrder::Seeded)
                .ok_or_else(|| Error::Parse(format!("unknown pivot order '{name}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvtNode {
    /// Generators in pivot order.
    pub gens: Vec<Monomial>,
    pub position: BigUint,
    pub dimension: usize,
    /// Arena indices of the (left, right) children.
    pub children: Option<(usize, usize)>,
}

impl MvtNode {
    pub fn is_relevant(&self) -> bool {
        self.position == BigUint::from(1u32) || !self.position.bit(0)
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_minimal_unchecked(self.gens[0].ambient(), self.gens.clone())
    }
}

/// A tree stored as an arena; the root is node 0.
#[derive(Clone, Debug)]
pub struct MvTree {
    nodes: Vec<MvtNode>,
}

impl MvTree {
    pub fn nodes(&self) -> &[MvtNode] {
        &self.nodes
    }

    pub fn root(&self) -> &MvtNode {
        &self.nodes[0]
    }

    pub fn node(&self, i: usize) -> &MvtNode {
        &self.nodes[i]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn relevant(&self) -> impl Iterator<Item = &MvtNode> {
        self.nodes.iter().filter(|n| n.is_relevant())
    }

    /// DOT rendering; relevant nodes are drawn as filled boxes.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph mvt {\n  node [fontname=\"monospace\"];\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let style = if n.is_relevant() {
                "shape=box, style=filled, fillcolor=lightgrey"
            } else {
                "shape=ellipse"
            };
            let gens: Vec<String> = n.gens.iter().map(|g| g.to_string()).collect();
            let _ = writeln!(
                s,
                "  n{i} [{style}, label=\"pos {} dim {} gens {}\\n{}\"];",
                n.position,
                n.dimension,
                n.gens.len(),
                gens.join(", ")
            );
        }
        for (i, n) in self.nodes.iter().enumerate() {
            if let Some((l, r)) = n.children {
                let _ = writeln!(s, "  n{i} -> n{l} [label=\"L\"];");
                let _ = writeln!(s, "  n{i} -> n{r} [label=\"R\"];");
            }
        }
        s.push_str("}\n");
        s
    }
}

fn arrange(gens: Vec<Monomial>, order: &PivotOrder, rng: &mut ChaCha8Rng) -> Vec<Monomial> {
    let mut gens = gens;
    match order {
        PivotOrder::Canonical => gens.sort_by(|a, b| b.cmp(a)),
        PivotOrder::Reversed => gens.sort(),
        PivotOrder::Seeded(_) => {
            gens.sort_by(|a, b| b.cmp(a));
            gens.shuffle(rng);
        }
        PivotOrder::Explicit(_) => {}
    }
    gens
}

/// Builds the tree of `ideal` under `order`.
pub fn mvt_build(ideal: &MonomialIdeal, order: &PivotOrder) -> Result<MvTree> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let seed = match order {
        PivotOrder::Seeded(s) => *s,
        _ => 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let root_gens = match order {
        PivotOrder::Explicit(list) => {
            let mut a = list.clone();
            let mut b = ideal.generators().to_vec();
            a.sort();
            b.sort();
            if a != b {
                return Err(Error::Parse(
                    "explicit pivot order must list each minimal generator exactly once".into(),
                ));
            }
            list.clone()
        }
        _ => arrange(ideal.generators().to_vec(), order, &mut rng),
    };
    let mut nodes = vec![MvtNode {
        gens: root_gens,
        position: BigUint::from(1u32),
        dimension: 0,
        children: None,
    }];
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        if nodes[i].gens.len() < 2 {
            continue;
        }
        if nodes.len() + 2 > MVT_MAX_NODES {
            return Err(Error::ScaleCap {
                what: "Mayer-Vietoris tree nodes",
                actual: nodes.len() + 2,
                cap: MVT_MAX_NODES,
            });
        }
        let (pivot, rest) = nodes[i].gens.split_last().expect("at least two generators");
        let right = rest.to_vec();
        let lcms: Vec<Monomial> = rest.iter().map(|f| f.lcm_same(pivot)).collect();
        let keep = minimal_elements(lcms.clone());
        // stable: first occurrence of each surviving lcm, in parent order
        let mut left = Vec::with_capacity(keep.len());
        for l in lcms {
            if keep.contains(&l) && !left.contains(&l) {
                left.push(l);
            }
        }
        let left = arrange(left, order, &mut rng);
        let right = arrange(right, order, &mut rng);
        let p = nodes[i].position.clone();
        let d = nodes[i].dimension;
        let l_idx = nodes.len();
        nodes.push(MvtNode {
            gens: left,
            position: &p * 2u32,
            dimension: d + 1,
            children: None,
        });
        nodes.push(MvtNode {
            gens: right,
            position: &p * 2u32 + 1u32,
            dimension: d,
            children: None,
        });
        nodes[i].children = Some((l_idx, l_idx + 1));
        stack.push(l_idx + 1);
        stack.push(l_idx);
    }
    Ok(MvTree { nodes })
}

/// Occurrence counts of relevant-node generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvtCounts {
    /// Every occurrence, keyed by (dimension, multidegree).
    pub full: BettiTable,
    /// Entries whose multidegree occurs exactly once over all relevant nodes.
    pub once: BettiTable,
}

pub fn mvt_counts(tree: &MvTree) -> MvtCounts {
    let mut full = BettiTable::new();
    let mut seen: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for n in tree.relevant() {
        for g in &n.gens {
            full.add(n.dimension, g.clone(), 1);
            *seen.entry(g).or_default() += 1;
        }
    }
    let mut once = BettiTable::new();
    for (d, mu, c) in full.iter() {
        if seen[mu] == 1 {
            once.set(d, mu.clone(), c);
        }
    }
    MvtCounts { full, once }
}

/// Lower and upper Betti bounds from one tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvtBounds {
    pub lower: BettiTable,
    pub upper: BettiTable,
}

impl MvtBounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Bounds from the tree of `ideal`, with the lower bound raised to the upper
/// one at every multidegree whose dimensions contain no consecutive pair.
pub fn mvt_bounds(ideal: &MonomialIdeal, order: &PivotOrder) -> Result<MvtBounds> {
    let tree = mvt_build(ideal, order)?;
    Ok(bounds_from_tree(&tree))
}

pub fn bounds_from_tree(tree: &MvTree) -> MvtBounds {
    let MvtCounts { full, mut once } = mvt_counts(tree);
    let mut dims: BTreeMap<&Monomial, Vec<usize>> = BTreeMap::new();
    for (d, mu, _) in full.iter() {
        dims.entry(mu).or_default().push(d);
    }
    for (mu, ds) in dims {
        // ds is increasing because the table iterates in (d, mu) order per mu
        let mut ds = ds;
        ds.sort_unstable();
        if ds.windows(2).all(|w| w[1] > w[0] + 1) {
            for &d in &ds {
                once.set(d, mu.clone(), full.get(d, mu));
            }
        }
    }
    MvtBounds { lower: once, upper: full }
}
