//! Subgroup lattices: exhaustive enumeration, chain length and
//! intersection-independence search.

use crate::bitset::ElemSet;
use crate::group::{Elem, GroupTable};
use std::collections::HashMap;

/// Index of a subgroup inside a [`SubgroupLattice`].
pub type SubgroupId = usize;

/// All subgroups of a group, sorted by `(size, bitset order)`, with the
/// inclusion relation. Id 0 is the trivial subgroup and the last id is the
/// whole group.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group_order: usize,
    group_hash: String,
    subgroups: Vec<ElemSet>,
    index: HashMap<ElemSet, SubgroupId>,
    /// `contained[a * n + b]` iff subgroup `a` is a subset of subgroup `b`.
    contained: Vec<bool>,
}

/// Seeds with every cyclic subgroup and joins with cyclic subgroups until no new
/// subgroup appears; the result is closed under all pairwise joins.
pub fn enumerate_subgroups(g: &GroupTable) -> SubgroupLattice {
    let mut cyclic: Vec<(ElemSet, Elem)> = Vec::new();
    let mut seen: HashMap<ElemSet, ()> = HashMap::new();
    for x in g.elements() {
        let c = g.closure(&[x]);
        if seen.insert(c, ()).is_none() {
            cyclic.push((c, x));
        }
    }
    let mut worklist: Vec<(ElemSet, Vec<Elem>)> = cyclic.iter().map(|&(c, x)| (c, vec![x])).collect();
    while let Some((h, gens)) = worklist.pop() {
        for &(c, x) in &cyclic {
            if c.is_subset(&h) {
                continue;
            }
            let mut more = gens.clone();
            more.push(x);
            let j = g.closure(&more);
            if seen.insert(j, ()).is_none() {
                worklist.push((j, more));
            }
        }
    }
    SubgroupLattice::from_subgroups(g, seen.into_keys().collect())
}

impl SubgroupLattice {
    /// Builds the lattice structure around an already complete subgroup list.
    pub(crate) fn from_subgroups(g: &GroupTable, mut subgroups: Vec<ElemSet>) -> Self {
        subgroups.sort_by_key(|s| (s.len(), *s));
        subgroups.dedup();
        let n = subgroups.len();
        let index = subgroups.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut contained = vec![false; n * n];
        for a in 0..n {
            for b in a..n {
                contained[a * n + b] = subgroups[a].is_subset(&subgroups[b]);
            }
        }
        SubgroupLattice { group_order: g.order(), group_hash: g.content_hash(), subgroups, index, contained }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn group_hash(&self) -> &str {
        &self.group_hash
    }

    pub fn subgroup(&self, id: SubgroupId) -> &ElemSet {
        &self.subgroups[id]
    }

    pub fn subgroups(&self) -> &[ElemSet] {
        &self.subgroups
    }

    pub fn id_of(&self, set: &ElemSet) -> Option<SubgroupId> {
        self.index.get(set).copied()
    }

    pub fn trivial(&self) -> SubgroupId {
        0
    }

    pub fn whole(&self) -> SubgroupId {
        self.subgroups.len() - 1
    }

    /// `a` is a subgroup of `b`.
    pub fn is_contained(&self, a: SubgroupId, b: SubgroupId) -> bool {
        self.contained[a * self.len() + b]
    }

    /// All strict inclusion pairs `(a, b)`, `a` a proper subgroup of `b`.
    pub fn containment_pairs(&self) -> Vec<(SubgroupId, SubgroupId)> {
        let n = self.len();
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| self.is_contained(a, b)).collect()
    }

    /// Longest strict chain ending at each subgroup, counted in subgroups
    /// (the trivial subgroup has chain length 1).
    fn chain_lengths(&self) -> Vec<usize> {
        let n = self.len();
        let mut len = vec![1usize; n];
        for b in 0..n {
            for a in 0..b {
                if self.is_contained(a, b) && len[a] + 1 > len[b] {
                    len[b] = len[a] + 1;
                }
            }
        }
        len
    }

    /// Maximum number of subgroups in a strictly increasing chain of proper
    /// subgroups. The trivial subgroup counts, the whole group does not.
    pub fn lambda(&self) -> usize {
        let len = self.chain_lengths();
        len[..self.whole()].iter().copied().max().unwrap_or(0)
    }

    /// No member contains the intersection of the others. A singleton is
    /// independent iff it is proper.
    pub fn is_intersection_independent(&self, ids: &[SubgroupId]) -> bool {
        let sets: Vec<ElemSet> = ids.iter().map(|&i| self.subgroups[i]).collect();
        sets_intersection_independent(&sets, self.group_order)
    }

    /// Largest intersection-independent family, with the first maximal family
    /// met by a depth-first search over subgroups in descending size order.
    pub fn mu_with_witness(&self) -> (usize, Vec<SubgroupId>) {
        let whole = self.whole();
        // height[i]: number of strict steps in the longest chain from 1 to subgroup i
        let height: Vec<usize> = self.chain_lengths().into_iter().map(|l| l - 1).collect();
        let order: Vec<SubgroupId> = (0..whole).rev().collect();
        let mut search =
            MuSearch { lattice: self, order: &order, height: &height, family: Vec::new(), best: Vec::new() };
        let full = *self.subgroup(whole);
        search.extend(0, full);
        let mut best = search.best;
        best.sort_unstable();
        (best.len(), best)
    }

    pub fn mu(&self) -> usize {
        self.mu_with_witness().0
    }
}

pub(crate) fn sets_intersection_independent(sets: &[ElemSet], group_order: usize) -> bool {
    let k = sets.len();
    let full = ElemSet::full(group_order);
    let mut prefix = vec![full; k + 1];
    let mut suffix = vec![full; k + 1];
    for i in 0..k {
        prefix[i + 1] = prefix[i].intersection(&sets[i]);
        suffix[k - 1 - i] = suffix[k - i].intersection(&sets[k - 1 - i]);
    }
    (0..k).all(|i| !prefix[i].intersection(&suffix[i + 1]).is_subset(&sets[i]))
}

struct MuSearch<'a> {
    lattice: &'a SubgroupLattice,
    order: &'a [SubgroupId],
    height: &'a [usize],
    family: Vec<SubgroupId>,
    best: Vec<SubgroupId>,
}

impl MuSearch<'_> {
    fn extend(&mut self, from: usize, running: ElemSet) {
        for pos in from..self.order.len() {
            let id = self.order[pos];
            let next = running.intersection(self.lattice.subgroup(id));
            if next == running {
                continue;
            }
            self.family.push(id);
            if self.lattice.is_intersection_independent(&self.family) {
                if self.family.len() > self.best.len() {
                    self.best = self.family.clone();
                }
                let meet = self.lattice.id_of(&next).expect("intersection of subgroups is a subgroup");
                // every further member strictly shrinks the running intersection
                if self.family.len() + self.height[meet] > self.best.len() {
                    self.extend(pos + 1, next);
                }
            }
            self.family.pop();
        }
    }
}
