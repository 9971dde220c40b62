//! Leaf ideals of forests and the only-child reduction of a forest.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::monomial::{IndexSet, Monomial, MonomialIdeal};
use crate::poset::{Forest, Poset};

/// Element labels read as variable indices; they must be exactly `1..=len`.
pub(crate) fn variable_labels(p: &Poset) -> Result<Vec<usize>> {
    let labels: Vec<usize> = p
        .labels()
        .iter()
        .map(|l| {
            l.parse::<usize>()
                .map_err(|_| Error::Parse(format!("element `{l}` is not a variable index")))
        })
        .collect::<Result<_>>()?;
    let n = labels.len();
    let set: IndexSet = labels.iter().copied().collect();
    if set != IndexSet::full(n) {
        return Err(Error::Parse(format!("element labels must be exactly 1..={n}")));
    }
    Ok(labels)
}

/// One generator per leaf: the product of the variables from the root of its
/// tree up to and including the leaf.
pub fn leaf_ideal(p: &Poset) -> Result<MonomialIdeal> {
    let forest = Forest::try_from(p.clone())?;
    let labels = variable_labels(p)?;
    let n = labels.len();
    let gens = forest
        .leaves()
        .into_iter()
        .map(|leaf| {
            let set: IndexSet = forest.path_to(leaf).into_iter().map(|e| labels[e]).collect();
            Monomial::from_support(n, &set)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

/// A reduced forest and, for each of its nodes, the original labels merged
/// into it (root side first).
#[derive(Clone, Debug)]
pub struct ReducedForest {
    pub forest: Forest,
    pub merges: BTreeMap<String, Vec<String>>,
}

/// Merges every only child with its parent until each node is a leaf or has
/// at least two children. A merged node keeps the label of its deepest member.
pub fn reduce_forest(p: &Poset) -> Result<ReducedForest> {
    let f = Forest::try_from(p.clone())?;
    let kept: Vec<usize> = (0..f.len()).filter(|&v| f.children(v).len() != 1).collect();
    let mut group_top = BTreeMap::new();
    let mut merges = BTreeMap::new();
    for &k in &kept {
        let mut group = vec![k];
        let mut top = k;
        while let Some(par) = f.parent(top) {
            if f.children(par).len() != 1 {
                break;
            }
            group.push(par);
            top = par;
        }
        group.reverse();
        group_top.insert(k, top);
        merges.insert(
            f.label(k).to_string(),
            group.iter().map(|&g| f.label(g).to_string()).collect(),
        );
    }
    let index: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let mut covers = Vec::new();
    for &k in &kept {
        if let Some(par) = f.parent(group_top[&k]) {
            covers.push((index[&par], index[&k]));
        }
    }
    let labels = kept.iter().map(|&k| f.label(k).to_string()).collect();
    let forest = Forest::try_from(Poset::from_covers(labels, covers)?)?;
    Ok(ReducedForest { forest, merges })
}

/// The stages of the Betti number argument for leaf ideals: the forest, its
/// reduction, then repeatedly the reduction after deleting every root that is
/// not a leaf, until only isolated points remain.
pub fn reduction_stages(p: &Poset) -> Result<Vec<Forest>> {
    let mut stages = vec![Forest::try_from(p.clone())?];
    let mut current = reduce_forest(p)?.forest;
    loop {
        stages.push(current.clone());
        let drop: Vec<usize> = current
            .roots()
            .into_iter()
            .filter(|&r| !current.children(r).is_empty())
            .collect();
        if drop.is_empty() {
            return Ok(stages);
        }
        let keep: Vec<usize> = (0..current.len()).filter(|v| !drop.contains(v)).collect();
        let next = current.induced(&keep);
        current = reduce_forest(&next)?.forest;
    }
}
