//! Helly dimension of a finite group.
//!
//! `kappa_exact` uses the characterization
//!
//! > kappa(G) is the largest size of an inclusion-minimal family of left cosets
//! > whose total intersection is empty.
//!
//! If `n` is at least that size and every `n`-subfamily of some family meets,
//! an empty total intersection would contain a minimal empty subfamily of size
//! `<= n`, which is impossible; a minimal empty family of size `s` shows the
//! property fails for `n = s - 1`. `kappa_oracle` evaluates the definition
//! directly and is used to cross-check the search on small groups.
//!
//! Search space for `kappa_exact`: a minimal empty family of size `s >= 3` has
//! pairwise distinct subgroups (two cosets of one subgroup are equal or
//! disjoint), and every `s - 1` of its subgroups are intersection independent
//! (otherwise the family is non-empty by the covering argument for
//! `kappa <= mu + 1`). Hence `s <= mu + 1`. Translating on the left we may take
//! the first coset to be its subgroup.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable};
use crate::lattice::{sets_intersection_independent, SubgroupId, SubgroupLattice};
use serde::{Deserialize, Serialize};

/// The left coset `representative * subgroup`; the representative is the
/// smallest element index in the coset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    pub subgroup: SubgroupId,
    pub representative: Elem,
    pub members: ElemSet,
}

impl Coset {
    /// `x * H` for the subgroup `H` with the given id.
    pub fn new(g: &GroupTable, l: &SubgroupLattice, subgroup: SubgroupId, x: Elem) -> Coset {
        let members = g.translate(x, l.subgroup(subgroup));
        Coset { subgroup, representative: members.first().expect("cosets are non-empty"), members }
    }

    /// `by * self`.
    pub fn translate(&self, g: &GroupTable, by: Elem) -> Coset {
        let members = g.translate(by, &self.members);
        Coset { subgroup: self.subgroup, representative: members.first().expect("cosets are non-empty"), members }
    }
}

/// Intersection of left cosets: empty, or a left coset of the intersection of
/// their subgroups. An empty family has no defined intersection and yields `None`.
pub fn coset_intersection(l: &SubgroupLattice, family: &[Coset]) -> Option<Coset> {
    let (first, rest) = family.split_first()?;
    let mut members = first.members;
    let mut sub = *l.subgroup(first.subgroup);
    for c in rest {
        members = members.intersection(&c.members);
        sub = sub.intersection(l.subgroup(c.subgroup));
    }
    let representative = members.first()?;
    Some(Coset { subgroup: l.id_of(&sub).expect("intersections of subgroups are subgroups"), representative, members })
}

/// Left cosets of one subgroup, ordered by representative.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    pub subgroup: SubgroupId,
    pub cosets: Vec<ElemSet>,
    /// Element index to position in `cosets`.
    pub coset_of: Vec<usize>,
}

impl CosetSpace {
    pub fn new(g: &GroupTable, l: &SubgroupLattice, subgroup: SubgroupId) -> Self {
        let h = l.subgroup(subgroup);
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut cosets = Vec::new();
        for x in g.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = g.translate(x, h);
            for y in c.iter() {
                coset_of[y] = cosets.len();
            }
            cosets.push(c);
        }
        CosetSpace { subgroup, cosets, coset_of }
    }

    pub fn index(&self) -> usize {
        self.cosets.len()
    }
}

pub fn coset_spaces(g: &GroupTable, l: &SubgroupLattice) -> Vec<CosetSpace> {
    (0..l.len()).map(|id| CosetSpace::new(g, l, id)).collect()
}

/// An inclusion-minimal family of left cosets with empty intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HellyWitness {
    pub cosets: Vec<Coset>,
}

impl HellyWitness {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Checks emptiness of the whole family and non-emptiness of every
    /// leave-one-out subfamily (which covers all proper subfamilies).
    pub fn verify(&self, l: &SubgroupLattice) -> Result<()> {
        if self.cosets.len() < 2 {
            return Err(Error::InvalidWitness("fewer than two cosets".into()));
        }
        if coset_intersection(l, &self.cosets).is_some() {
            return Err(Error::InvalidWitness("total intersection is non-empty".into()));
        }
        for i in 0..self.cosets.len() {
            let mut rest = self.cosets.clone();
            rest.remove(i);
            if coset_intersection(l, &rest).is_none() {
                return Err(Error::InvalidWitness(format!("dropping coset {i} still leaves an empty intersection")));
            }
        }
        Ok(())
    }

    pub fn translate(&self, g: &GroupTable, by: Elem) -> HellyWitness {
        HellyWitness { cosets: self.cosets.iter().map(|c| c.translate(g, by)).collect() }
    }
}

#[derive(Clone, Debug)]
pub struct KappaResult {
    pub kappa: usize,
    /// Present whenever `kappa >= 2`: a maximal minimal empty family,
    /// lexicographically least by (subgroup ids, representatives).
    pub witness: Option<HellyWitness>,
}

/// Exact Helly dimension with a canonical witness. The trivial group gets 1.
pub fn kappa_exact(g: &GroupTable, l: &SubgroupLattice) -> KappaResult {
    if g.order() == 1 {
        return KappaResult { kappa: 1, witness: None };
    }
    let spaces = coset_spaces(g, l);
    let mu = l.mu();
    for size in (3..=mu + 1).rev() {
        if let Some(cosets) = WitnessSearch::new(g, l, &spaces, size).run() {
            return KappaResult { kappa: size, witness: Some(HellyWitness { cosets }) };
        }
    }
    // two distinct points always form a minimal empty family
    let trivial = l.trivial();
    let witness = HellyWitness { cosets: vec![Coset::new(g, l, trivial, 0), Coset::new(g, l, trivial, 1)] };
    KappaResult { kappa: 2, witness: Some(witness) }
}

struct WitnessSearch<'a> {
    g: &'a GroupTable,
    l: &'a SubgroupLattice,
    spaces: &'a [CosetSpace],
    size: usize,
    ids: Vec<SubgroupId>,
    chosen: Vec<usize>,
}

impl<'a> WitnessSearch<'a> {
    fn new(g: &'a GroupTable, l: &'a SubgroupLattice, spaces: &'a [CosetSpace], size: usize) -> Self {
        WitnessSearch { g, l, spaces, size, ids: Vec::new(), chosen: Vec::new() }
    }

    fn run(mut self) -> Option<Vec<Coset>> {
        if self.subgroup_tuples(0) {
            let cosets = self
                .ids
                .iter()
                .zip(&self.chosen)
                .map(|(&id, &k)| Coset::new(self.g, self.l, id, self.spaces[id].cosets[k].first().unwrap()))
                .collect();
            Some(cosets)
        } else {
            None
        }
    }

    fn sets(&self) -> Vec<ElemSet> {
        self.ids.iter().map(|&i| *self.l.subgroup(i)).collect()
    }

    /// Subgroup id tuples in increasing lexicographic order whose every
    /// `size - 1` members are intersection independent.
    fn subgroup_tuples(&mut self, from: SubgroupId) -> bool {
        let n = self.g.order();
        if self.ids.len() == self.size {
            let sets = self.sets();
            let ok = (0..self.size).all(|skip| {
                let rest: Vec<ElemSet> = sets.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, s)| *s).collect();
                sets_intersection_independent(&rest, n)
            });
            return ok && self.coset_tuples();
        }
        for id in from..self.l.whole() {
            self.ids.push(id);
            let prefix_ok = self.ids.len() == self.size || sets_intersection_independent(&self.sets(), n);
            if prefix_ok && self.subgroup_tuples(id + 1) {
                return true;
            }
            self.ids.pop();
        }
        false
    }

    fn coset_tuples(&mut self) -> bool {
        self.chosen.clear();
        self.chosen.push(self.spaces[self.ids[0]].coset_of[0]);
        let start = self.spaces[self.ids[0]].cosets[self.chosen[0]];
        self.extend(start)
    }

    fn coset(&self, level: usize) -> &ElemSet {
        &self.spaces[self.ids[level]].cosets[self.chosen[level]]
    }

    /// `running` is the (non-empty) intersection of the chosen prefix.
    fn extend(&mut self, running: ElemSet) -> bool {
        let level = self.chosen.len();
        let space = &self.spaces[self.ids[level]];
        if level + 1 < self.size {
            for k in 0..space.index() {
                let next = running.intersection(&space.cosets[k]);
                if next.is_empty() {
                    continue;
                }
                self.chosen.push(k);
                if self.extend(next) {
                    return true;
                }
                self.chosen.pop();
            }
            return false;
        }
        // last coset: miss `running`, meet every leave-one-out intersection
        let leave_one_out: Vec<ElemSet> = (0..level)
            .map(|skip| {
                (0..level)
                    .filter(|&j| j != skip)
                    .fold(ElemSet::full(self.g.order()), |acc, j| acc.intersection(self.coset(j)))
            })
            .collect();
        for k in 0..space.index() {
            let c = &space.cosets[k];
            if !c.intersects(&running) && leave_one_out.iter().all(|j| c.intersects(j)) {
                self.chosen.push(k);
                return true;
            }
        }
        false
    }
}

/// Helly dimension straight from its definition: the least `n <= cap` such
/// that every set of at most `cap` distinct cosets whose `n`-subsets all meet
/// has a common element. Sound when `cap >= mu + 1`; meant for small groups.
///
/// `n = cap` holds vacuously (no family larger than `cap` is examined), so a
/// cap below `kappa` returns `cap` rather than the true value.
///
/// Families are only enumerated up to left translation: each one is anchored
/// at a member containing the identity, i.e. a subgroup.
pub fn kappa_oracle(g: &GroupTable, l: &SubgroupLattice, cap: usize) -> Result<usize> {
    let all: Vec<ElemSet> = coset_spaces(g, l).into_iter().flat_map(|s| s.cosets).collect();
    let anchors: Vec<usize> = (0..all.len()).filter(|&i| all[i].contains(0)).collect();
    let full = ElemSet::full(g.order());
    for n in 1..=cap {
        let mut frames = vec![Vec::new(); cap + 1];
        frames[0] = vec![(0, full), (usize::MAX, full)];
        let mut search = OracleSearch { all: &all, n, cap, anchor: 0, frames };
        let counterexample = anchors.iter().any(|&a| {
            search.anchor = a;
            search.counterexample(0, a, 0)
        });
        if !counterexample {
            return Ok(n);
        }
    }
    Err(Error::OracleCapTooSmall { cap })
}

struct OracleSearch<'a> {
    all: &'a [ElemSet],
    n: usize,
    cap: usize,
    anchor: usize,
    /// `frames[d]`: intersections of every subset of the first `d` members
    /// with fewer than `n` elements (tagged with their size), followed by the
    /// total intersection tagged `usize::MAX`.
    frames: Vec<Vec<(usize, ElemSet)>>,
}

impl OracleSearch<'_> {
    /// Adds coset `c` as member `depth`, then extends with indices `>= from`.
    /// True once a family of size `n+1..=cap` is found whose `n`-subsets all
    /// meet but whose total intersection is empty.
    fn counterexample(&mut self, depth: usize, c: usize, from: usize) -> bool {
        let coset = self.all[c];
        let (lower, upper) = self.frames.split_at_mut(depth + 1);
        let next = &mut upper[0];
        next.clear();
        let mut total = ElemSet::empty();
        for &(k, set) in &lower[depth] {
            if k == usize::MAX {
                total = set.intersection(&coset);
                continue;
            }
            next.push((k, set));
            let joined = set.intersection(&coset);
            if k + 1 == self.n && joined.is_empty() {
                return false;
            }
            if k + 1 < self.n {
                next.push((k + 1, joined));
            }
        }
        let size = depth + 1;
        if size > self.n && total.is_empty() {
            return true;
        }
        if size == self.cap {
            return false;
        }
        next.push((usize::MAX, total));
        (from..self.all.len()).any(|d| d != self.anchor && self.counterexample(depth + 1, d, d + 1))
    }
}

/// JSON-facing view of one witness coset.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessCosetView {
    pub subgroup_size: usize,
    pub representative_label: String,
    pub members: Vec<String>,
}

impl WitnessCosetView {
    pub fn new(g: &GroupTable, l: &SubgroupLattice, c: &Coset) -> Self {
        WitnessCosetView {
            subgroup_size: l.subgroup(c.subgroup).len(),
            representative_label: g.label(c.representative).to_string(),
            members: c.members.iter().map(|x| g.label(x).to_string()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_cyclic, build_klein_four};
    use crate::lattice::enumerate_subgroups;

    #[test]
    fn chinese_remainder_intersection() {
        let g = build_cyclic(6).unwrap();
        let l = enumerate_subgroups(&g);
        let by_size = |k: usize| l.subgroups().iter().position(|s| s.len() == k).unwrap();
        // x = 1 mod 2 is g^1 <g^2>; x = 2 mod 3 is g^2 <g^3>
        let odd = Coset::new(&g, &l, by_size(3), 1);
        let two_mod_three = Coset::new(&g, &l, by_size(2), 2);
        let meet = coset_intersection(&l, &[odd.clone(), two_mod_three]).unwrap();
        assert_eq!(meet.members.iter().collect::<Vec<_>>(), vec![5]);
        assert_eq!(meet.subgroup, l.trivial());
        assert_eq!(g.label(meet.representative), "g^5");

        let even = Coset::new(&g, &l, by_size(3), 0);
        assert_eq!(coset_intersection(&l, &[even, odd.clone()]), None);
        assert_eq!(coset_intersection(&l, &[odd.clone(), odd.clone()]), Some(odd));
    }

    #[test]
    fn trivial_group_conventions() {
        let g = build_cyclic(1).unwrap();
        let l = enumerate_subgroups(&g);
        let r = kappa_exact(&g, &l);
        assert_eq!(r.kappa, 1);
        assert!(r.witness.is_none());
        assert_eq!(kappa_oracle(&g, &l, 3).unwrap(), 1);
    }

    #[test]
    fn klein_four_witness() {
        let g = build_klein_four().unwrap();
        let l = enumerate_subgroups(&g);
        let r = kappa_exact(&g, &l);
        assert_eq!(r.kappa, 3);
        let w = r.witness.unwrap();
        w.verify(&l).unwrap();
        assert_eq!(w.cosets.iter().map(|c| c.subgroup).collect::<Vec<_>>(), vec![1, 2, 3]);
        for i in 0..3 {
            for j in i + 1..3 {
                let pair = coset_intersection(&l, &[w.cosets[i].clone(), w.cosets[j].clone()]).unwrap();
                assert_eq!(pair.members.len(), 1);
            }
        }
        assert_eq!(kappa_oracle(&g, &l, 3).unwrap(), 3);
    }

    #[test]
    fn oracle_cap_truncates() {
        let g = build_klein_four().unwrap();
        let l = enumerate_subgroups(&g);
        assert_eq!(kappa_oracle(&g, &l, 2), Ok(2));
        assert_eq!(kappa_oracle(&g, &l, 0), Err(Error::OracleCapTooSmall { cap: 0 }));
    }

    #[test]
    fn witness_verification_rejects_non_minimal() {
        let g = build_cyclic(6).unwrap();
        let l = enumerate_subgroups(&g);
        let a = Coset::new(&g, &l, 0, 0);
        let b = Coset::new(&g, &l, 0, 1);
        let c = Coset::new(&g, &l, 0, 2);
        assert!(HellyWitness { cosets: vec![a.clone(), b.clone()] }.verify(&l).is_ok());
        assert!(HellyWitness { cosets: vec![a.clone(), b, c] }.verify(&l).is_err());
        assert!(HellyWitness { cosets: vec![a] }.verify(&l).is_err());
    }
}
