//! Orbit equality of tuples under finite group actions, decided through
//! transporter cosets, and the d-wise versus global comparison.
//!
//! For a finite group two points are separated by polynomial invariants
//! exactly when their orbits differ, so everything here is phrased as orbit
//! equality; no invariant polynomial is ever constructed.
//!
//! Randomized checks draw from `ChaCha8Rng::seed_from_u64(seed)`, so a report
//! is reproducible bit for bit from its seed.

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::finite_field::FiniteField;
use crate::group::{Elem, GroupTable};
use crate::helly::{Coset, CosetSpace, HellyWitness};
use crate::lattice::SubgroupLattice;
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fmt::Debug;

/// A left action of a finite group.
pub trait GroupAction {
    type Point: Clone + Eq + Debug + Serialize;

    fn group(&self) -> &GroupTable;

    fn act(&self, g: Elem, x: &Self::Point) -> Self::Point;

    fn check_point(&self, x: &Self::Point) -> Result<()>;

    fn random_point(&self, rng: &mut ChaCha8Rng) -> Self::Point;
}

/// A finite G-set given by its full action table.
#[derive(Clone, Debug)]
pub struct ActionTable<'g> {
    group: &'g GroupTable,
    points: usize,
    /// `act[g * points + x]`
    act: Vec<u32>,
}

impl<'g> ActionTable<'g> {
    /// Validates `act(1, x) = x` and `act(g, act(h, x)) = act(gh, x)`.
    pub fn new(group: &'g GroupTable, points: usize, act: Vec<u32>) -> Result<Self> {
        if act.len() != group.order() * points || act.iter().any(|&y| y as usize >= points) {
            return Err(Error::InvalidAction("table shape or point range".into()));
        }
        let a = ActionTable { group, points, act };
        for x in 0..points {
            if a.image(0, x) != x {
                return Err(Error::InvalidAction(format!("identity moves point {x}")));
            }
            for g in group.elements() {
                for h in group.elements() {
                    if a.image(g, a.image(h, x)) != a.image(group.mul(g, h), x) {
                        return Err(Error::InvalidAction(format!("g={g}, h={h}, x={x} not compatible")));
                    }
                }
            }
        }
        Ok(a)
    }

    /// Disjoint union of the coset spaces `G/H` for the given subgroups, in
    /// order. Returns the action and the offset of each block; the base point
    /// `H` of block `i` is `offsets[i] + space.coset_of[identity]`, i.e. `offsets[i]`.
    pub fn coset_spaces(group: &'g GroupTable, l: &SubgroupLattice, subgroups: &[usize]) -> (Self, Vec<usize>) {
        let spaces: Vec<CosetSpace> = subgroups.iter().map(|&h| CosetSpace::new(group, l, h)).collect();
        let mut offsets = Vec::with_capacity(spaces.len());
        let mut points = 0;
        for s in &spaces {
            offsets.push(points);
            points += s.index();
        }
        let mut act = vec![0u32; group.order() * points];
        for g in group.elements() {
            for (s, &off) in spaces.iter().zip(&offsets) {
                for (k, coset) in s.cosets.iter().enumerate() {
                    let y = group.mul(g, coset.first().unwrap());
                    act[g * points + off + k] = (off + s.coset_of[y]) as u32;
                }
            }
        }
        (ActionTable { group, points, act }, offsets)
    }

    /// Left multiplication on the group itself.
    pub fn regular(group: &'g GroupTable) -> Self {
        let n = group.order();
        let act = (0..n).flat_map(|g| (0..n).map(move |x| group.mul(g, x) as u32)).collect();
        ActionTable { group, points: n, act }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    #[inline]
    pub fn image(&self, g: Elem, x: usize) -> usize {
        self.act[g * self.points + x] as usize
    }
}

impl GroupAction for ActionTable<'_> {
    type Point = usize;

    fn group(&self) -> &GroupTable {
        self.group
    }

    fn act(&self, g: Elem, x: &usize) -> usize {
        self.image(g, *x)
    }

    fn check_point(&self, x: &usize) -> Result<()> {
        if *x < self.points {
            Ok(())
        } else {
            Err(Error::InvalidInstance(format!("point {x} >= {}", self.points)))
        }
    }

    fn random_point(&self, rng: &mut ChaCha8Rng) -> usize {
        rng.gen_range(0..self.points)
    }
}

/// Square matrix over GF(q), row-major.
pub type Matrix = Vec<u8>;

/// A representation `G -> GL(n, q)` given by one matrix per element.
#[derive(Clone, Debug)]
pub struct LinearAction<'g> {
    group: &'g GroupTable,
    field: &'static FiniteField,
    dim: usize,
    matrices: Vec<Matrix>,
}

fn mat_mul(f: &FiniteField, n: usize, a: &[u8], b: &[u8]) -> Matrix {
    let mut out = vec![0u8; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = f.add(out[i * n + j], f.mul(aik, b[k * n + j]));
            }
        }
    }
    out
}

fn identity_matrix(n: usize) -> Matrix {
    let mut m = vec![0u8; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

impl<'g> LinearAction<'g> {
    /// Validates that every matrix has the right shape and entries and that
    /// the map is a homomorphism (which forces invertibility).
    pub fn new(group: &'g GroupTable, field: &'static FiniteField, dim: usize, matrices: Vec<Matrix>) -> Result<Self> {
        if dim == 0 || matrices.len() != group.order() {
            return Err(Error::InvalidAction("need one matrix per group element and dim >= 1".into()));
        }
        if matrices.iter().any(|m| m.len() != dim * dim || m.iter().any(|&v| v as usize >= field.size())) {
            return Err(Error::InvalidAction("matrix shape or entry out of range".into()));
        }
        if matrices[0] != identity_matrix(dim) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for g in group.elements() {
            for h in group.elements() {
                if mat_mul(field, dim, &matrices[g], &matrices[h]) != matrices[group.mul(g, h)] {
                    return Err(Error::InvalidAction(format!("not a homomorphism at ({g}, {h})")));
                }
            }
        }
        Ok(LinearAction { group, field, dim, matrices })
    }

    /// Extends images of a generating set along the Cayley graph, then
    /// validates the result as in [`LinearAction::new`].
    pub fn from_generator_images(
        group: &'g GroupTable,
        field: &'static FiniteField,
        dim: usize,
        images: &[(Elem, Matrix)],
    ) -> Result<Self> {
        let mut matrices: Vec<Option<Matrix>> = vec![None; group.order()];
        matrices[0] = Some(identity_matrix(dim));
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for (s, m) in images {
                let y = group.mul(x, *s);
                if matrices[y].is_none() {
                    matrices[y] = Some(mat_mul(field, dim, matrices[x].as_ref().unwrap(), m));
                    queue.push(y);
                }
            }
        }
        let matrices = matrices
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidAction("generator images do not reach every element".into()))?;
        Self::new(group, field, dim, matrices)
    }

    /// Cyclic group acting by `g^k -> diag(d_1^k, ..., d_n^k)`.
    pub fn diagonal_cyclic(group: &'g GroupTable, field: &'static FiniteField, diagonal: &[u8]) -> Result<Self> {
        let n = diagonal.len();
        let mut m = vec![0u8; n * n];
        for (i, &d) in diagonal.iter().enumerate() {
            m[i * n + i] = d;
        }
        let generator = if group.order() > 1 { 1 } else { 0 };
        Self::from_generator_images(group, field, n, &[(generator, m)])
    }

    /// Permutation module `field^X` of a G-set `X`; point `x` maps to basis vector `e_x`.
    pub fn permutation_module(action: &ActionTable<'g>, field: &'static FiniteField) -> Self {
        let n = action.points();
        let matrices = action
            .group()
            .elements()
            .map(|g| {
                let mut m = vec![0u8; n * n];
                for x in 0..n {
                    m[action.image(g, x) * n + x] = 1;
                }
                m
            })
            .collect();
        LinearAction { group: action.group, field, dim: n, matrices }
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &'static FiniteField {
        self.field
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.dim];
        v[i] = 1;
        v
    }
}

impl GroupAction for LinearAction<'_> {
    type Point = Vec<u8>;

    fn group(&self) -> &GroupTable {
        self.group
    }

    fn act(&self, g: Elem, x: &Vec<u8>) -> Vec<u8> {
        let (f, n, m) = (self.field, self.dim, &self.matrices[g]);
        (0..n).map(|i| (0..n).fold(0u8, |acc, j| f.add(acc, f.mul(m[i * n + j], x[j])))).collect()
    }

    fn check_point(&self, x: &Vec<u8>) -> Result<()> {
        if x.len() == self.dim && x.iter().all(|&v| (v as usize) < self.field.size()) {
            Ok(())
        } else {
            Err(Error::InvalidInstance(format!("{x:?} is not a vector in GF({})^{}", self.field.size(), self.dim)))
        }
    }

    fn random_point(&self, rng: &mut ChaCha8Rng) -> Vec<u8> {
        (0..self.dim).map(|_| rng.gen_range(0..self.field.size()) as u8).collect()
    }
}

pub fn stabilizer<A: GroupAction>(a: &A, x: &A::Point) -> ElemSet {
    a.group().elements().filter(|&g| a.act(g, x) == *x).collect()
}

/// `{g : g x = x'}`, a left coset of the stabilizer of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transporter {
    pub stabilizer: ElemSet,
    pub members: ElemSet,
    pub representative: Elem,
}

impl Transporter {
    /// The same set as a lattice coset.
    pub fn to_coset(&self, l: &SubgroupLattice) -> Coset {
        Coset {
            subgroup: l.id_of(&self.stabilizer).expect("stabilizers are subgroups"),
            representative: self.representative,
            members: self.members,
        }
    }
}

fn transporter_set<A: GroupAction>(a: &A, x: &A::Point, y: &A::Point) -> ElemSet {
    a.group().elements().filter(|&g| a.act(g, x) == *y).collect()
}

pub fn transporter<A: GroupAction>(a: &A, x: &A::Point, y: &A::Point) -> Option<Transporter> {
    let members = transporter_set(a, x, y);
    let representative = members.first()?;
    Some(Transporter { stabilizer: stabilizer(a, x), members, representative })
}

/// A pair of equal-length tuples of points.
#[derive(Clone, Debug)]
pub struct TupleInstance<'a, A: GroupAction> {
    pub action: &'a A,
    pub x: Vec<A::Point>,
    pub x_prime: Vec<A::Point>,
}

impl<'a, A: GroupAction> TupleInstance<'a, A> {
    pub fn new(action: &'a A, x: Vec<A::Point>, x_prime: Vec<A::Point>) -> Result<Self> {
        if x.len() != x_prime.len() {
            return Err(Error::InvalidInstance(format!("lengths {} and {} differ", x.len(), x_prime.len())));
        }
        for p in x.iter().chain(&x_prime) {
            action.check_point(p)?;
        }
        Ok(TupleInstance { action, x, x_prime })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Per-coordinate transporter sets.
    pub fn transporters(&self) -> Vec<ElemSet> {
        self.x.iter().zip(&self.x_prime).map(|(p, q)| transporter_set(self.action, p, q)).collect()
    }

    /// Hex SHA-256 (first 16 bytes) of the group hash and both tuples.
    pub fn instance_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.action.group().content_hash().as_bytes());
        h.update(serde_json::to_vec(&(&self.x, &self.x_prime)).expect("points serialize"));
        hex::encode(&h.finalize()[..16])
    }
}

/// Some `g` with `g x = x'` (the smallest index), or `None` for different orbits.
pub fn same_orbit<A: GroupAction>(t: &TupleInstance<'_, A>) -> Option<Elem> {
    let full = ElemSet::full(t.action.group().order());
    t.transporters().iter().fold(full, |acc, s| acc.intersection(s)).first()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// The full tuples lie in one orbit.
    GlobalEqual,
    /// Some d-wise projection already differs.
    DwiseFails,
    /// Every d-wise projection agrees but the full tuples do not.
    Counterexample,
}

/// Classifies an instance from its per-coordinate transporter sets.
pub fn verdict_from_transporters(transporters: &[ElemSet], d: usize, group_order: usize) -> Verdict {
    let full = ElemSet::full(group_order);
    let all = transporters.iter().fold(full, |acc, s| acc.intersection(s));
    if !all.is_empty() {
        return Verdict::GlobalEqual;
    }
    let every_projection_agrees = (0..transporters.len())
        .combinations(d)
        .all(|idx| idx.iter().fold(full, |acc, &i| acc.intersection(&transporters[i])).first().is_some());
    if every_projection_agrees {
        Verdict::Counterexample
    } else {
        Verdict::DwiseFails
    }
}

pub fn dwise_implies_global<A: GroupAction>(t: &TupleInstance<'_, A>, d: usize) -> Result<Verdict> {
    if d == 0 || d > t.len() {
        return Err(Error::InvalidInstance(format!("d = {d} must lie in 1..={}", t.len())));
    }
    Ok(verdict_from_transporters(&t.transporters(), d, t.action.group().order()))
}

/// The G-set realization of a Helly witness: `X` is the disjoint union of the
/// coset spaces `G/G_i`, `x_i` is the base point of block `i` and
/// `x'_i = g_i x_i` for the witness coset `g_i G_i`.
#[derive(Clone, Debug)]
pub struct WitnessInstance<'g> {
    pub action: ActionTable<'g>,
    pub x: Vec<usize>,
    pub x_prime: Vec<usize>,
}

impl<'g> WitnessInstance<'g> {
    pub fn instance(&self) -> TupleInstance<'_, ActionTable<'g>> {
        TupleInstance { action: &self.action, x: self.x.clone(), x_prime: self.x_prime.clone() }
    }

    /// The same instance inside the permutation module over `field`.
    pub fn linear(&self, field: &'static FiniteField) -> (LinearAction<'g>, Vec<Vec<u8>>, Vec<Vec<u8>>) {
        let lin = LinearAction::permutation_module(&self.action, field);
        let x = self.x.iter().map(|&p| lin.basis_vector(p)).collect();
        let x_prime = self.x_prime.iter().map(|&p| lin.basis_vector(p)).collect();
        (lin, x, x_prime)
    }
}

pub fn witness_instance<'g>(g: &'g GroupTable, l: &SubgroupLattice, w: &HellyWitness) -> Result<WitnessInstance<'g>> {
    w.verify(l)?;
    let ids: Vec<usize> = w.cosets.iter().map(|c| c.subgroup).collect();
    let (action, offsets) = ActionTable::coset_spaces(g, l, &ids);
    let x: Vec<usize> = offsets.clone();
    let x_prime = w.cosets.iter().zip(&x).map(|(c, &base)| action.image(c.representative, base)).collect();
    Ok(WitnessInstance { action, x, x_prime })
}

/// Outcome counts of a batch of randomized d-wise checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub d: usize,
    pub trials: usize,
    pub global_equal: usize,
    pub dwise_fails: usize,
    pub counterexamples: usize,
}

impl TrialReport {
    pub fn record(&mut self, v: Verdict) {
        self.trials += 1;
        match v {
            Verdict::GlobalEqual => self.global_equal += 1,
            Verdict::DwiseFails => self.dwise_fails += 1,
            Verdict::Counterexample => self.counterexamples += 1,
        }
    }

    pub fn merge(&mut self, other: &TrialReport) {
        self.trials += other.trials;
        self.global_equal += other.global_equal;
        self.dwise_fails += other.dwise_fails;
        self.counterexamples += other.counterexamples;
    }
}

/// Draws `x` uniformly and builds `x'` in one of three ways, chosen uniformly:
/// fully random; `x'_i = h x_i` with `h` from a palette of two random group
/// elements (so many projections agree); or `x' = g x` with one coordinate
/// replaced by a random point.
pub fn sample_pair<A: GroupAction>(a: &A, m: usize, rng: &mut ChaCha8Rng) -> (Vec<A::Point>, Vec<A::Point>) {
    let order = a.group().order();
    let x: Vec<A::Point> = (0..m).map(|_| a.random_point(rng)).collect();
    let x_prime = match rng.gen_range(0..3) {
        0 => (0..m).map(|_| a.random_point(rng)).collect(),
        1 => {
            let palette = [rng.gen_range(0..order), rng.gen_range(0..order)];
            x.iter().map(|p| a.act(*palette.choose(rng).unwrap(), p)).collect()
        }
        _ => {
            let g = rng.gen_range(0..order);
            let mut y: Vec<A::Point> = x.iter().map(|p| a.act(g, p)).collect();
            let i = rng.gen_range(0..m);
            y[i] = a.random_point(rng);
            y
        }
    };
    (x, x_prime)
}

/// Runs `trials` random instances with lengths drawn from `m_range`.
pub fn random_dwise_trials<A: GroupAction>(
    a: &A,
    d: usize,
    m_range: std::ops::RangeInclusive<usize>,
    trials: usize,
    rng: &mut ChaCha8Rng,
) -> TrialReport {
    let mut report = TrialReport { d, ..Default::default() };
    for _ in 0..trials {
        let m = rng.gen_range(m_range.clone());
        let (x, x_prime) = sample_pair(a, m, rng);
        let t = TupleInstance { action: a, x, x_prime };
        report.record(verdict_from_transporters(&t.transporters(), d, a.group().order()));
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductiveReport {
    pub field: usize,
    pub dimension: usize,
    pub seed: u64,
    pub trials: TrialReport,
}

impl ReductiveReport {
    pub fn ok(&self) -> bool {
        self.trials.counterexamples == 0
    }
}

/// Random pairs in `V^m`, `m` in `n+2..=n+4`: whenever all `(n+1)`-wise
/// projections share an orbit the full tuples must too.
pub fn verify_reductive_bound(a: &LinearAction<'_>, trials: usize, seed: u64) -> ReductiveReport {
    let n = a.dimension();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let report = random_dwise_trials(a, n + 1, n + 2..=n + 4, trials, &mut rng);
    ReductiveReport { field: a.field().size(), dimension: n, seed, trials: report }
}

/// Every pair of `m`-tuples over a small G-set, classified at `d`.
pub fn exhaustive_dwise(a: &ActionTable<'_>, m: usize, d: usize) -> TrialReport {
    let mut report = TrialReport { d, ..Default::default() };
    let order = a.group().order();
    let tuples: Vec<Vec<usize>> = (0..m).map(|_| 0..a.points()).multi_cartesian_product().collect();
    for x in &tuples {
        for y in &tuples {
            let ts: Vec<ElemSet> = x.iter().zip(y).map(|(p, q)| transporter_set(a, p, q)).collect();
            report.record(verdict_from_transporters(&ts, d, order));
        }
    }
    report
}

/// Both directions of "kappa is the largest separating length" at the level
/// of orbits, for one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaOrbitReport {
    pub group: String,
    pub kappa: usize,
    pub witness_points: usize,
    /// Verdict of the witness instance at `d = kappa - 1`.
    pub witness_verdict: Verdict,
    /// Random instances on coset-space G-sets at `d = kappa`.
    pub gset: TrialReport,
    /// Random instances in permutation modules over GF(2) and GF(3) at `d = kappa`.
    pub linear: TrialReport,
    /// All pairs of `(kappa+1)`-tuples in the regular action, for groups of order <= 8.
    pub exhaustive: Option<TrialReport>,
}

impl KappaOrbitReport {
    pub fn ok(&self) -> bool {
        self.witness_verdict == Verdict::Counterexample
            && self.gset.counterexamples == 0
            && self.linear.counterexamples == 0
            && self.exhaustive.as_ref().is_none_or(|r| r.counterexamples == 0)
    }
}

const EXHAUSTIVE_MAX_ORDER: usize = 8;
const LINEAR_MAX_POINTS: usize = 24;
const MAX_TUPLE_LEN: usize = 6;

/// Runs `trials` random instances split four to one between G-sets and
/// permutation modules. Tuple lengths are drawn from `kappa+1..=6`.
pub fn kappa_orbit_check(
    g: &GroupTable,
    l: &SubgroupLattice,
    kappa: usize,
    witness: &HellyWitness,
    trials: usize,
    seed: u64,
) -> Result<KappaOrbitReport> {
    if kappa < 2 || kappa + 1 > MAX_TUPLE_LEN {
        return Err(Error::InvalidParameter(format!("kappa = {kappa} outside 2..={}", MAX_TUPLE_LEN - 1)));
    }
    let wi = witness_instance(g, l, witness)?;
    let witness_verdict = dwise_implies_global(&wi.instance(), kappa - 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut gsets = vec![ActionTable::regular(g), wi.action.clone()];
    for _ in 0..4 {
        let blocks = rng.gen_range(1..=3);
        let ids: Vec<usize> = (0..blocks).map(|_| rng.gen_range(0..l.len())).collect();
        gsets.push(ActionTable::coset_spaces(g, l, &ids).0);
    }
    let smallest_index = (0..l.len() - 1).max_by_key(|&h| l.subgroup(h).len()).unwrap_or(0);
    let mut modules = Vec::new();
    for q in [2, 3] {
        let field = crate::finite_field::gf(q)?;
        modules.push(LinearAction::permutation_module(&ActionTable::coset_spaces(g, l, &[smallest_index]).0, field));
        if wi.action.points() <= LINEAR_MAX_POINTS {
            modules.push(LinearAction::permutation_module(&wi.action, field));
        }
    }

    let lengths = kappa + 1..=MAX_TUPLE_LEN;
    let linear_trials = trials / 5;
    let mut gset = TrialReport { d: kappa, ..Default::default() };
    for _ in 0..trials - linear_trials {
        let a = &gsets[rng.gen_range(0..gsets.len())];
        gset.merge(&random_dwise_trials(a, kappa, lengths.clone(), 1, &mut rng));
    }
    let mut linear = TrialReport { d: kappa, ..Default::default() };
    for _ in 0..linear_trials {
        let a = &modules[rng.gen_range(0..modules.len())];
        linear.merge(&random_dwise_trials(a, kappa, lengths.clone(), 1, &mut rng));
    }
    let exhaustive =
        (g.order() <= EXHAUSTIVE_MAX_ORDER).then(|| exhaustive_dwise(&ActionTable::regular(g), kappa + 1, kappa));
    Ok(KappaOrbitReport {
        group: g.name(),
        kappa,
        witness_points: wi.action.points(),
        witness_verdict,
        gset,
        linear,
        exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::gf;
    use crate::group::{build_cyclic, build_klein_four};
    use crate::helly::kappa_exact;
    use crate::lattice::enumerate_subgroups;

    fn c3_on_gf7() -> (GroupTable, &'static FiniteField) {
        (build_cyclic(3).unwrap(), gf(7).unwrap())
    }

    #[test]
    fn diagonal_example_orbit() {
        let (g, f) = c3_on_gf7();
        let a = LinearAction::diagonal_cyclic(&g, f, &[2, 4]).unwrap();
        let orbit: Vec<Vec<u8>> = g.elements().map(|h| a.act(h, &vec![1, 1])).collect();
        assert_eq!(orbit, vec![vec![1, 1], vec![2, 4], vec![4, 2]]);
        let t = transporter(&a, &vec![1, 1], &vec![2, 4]).unwrap();
        assert_eq!(t.members.len(), 1);
        assert_eq!(t.representative, 1);
        assert_eq!(t.stabilizer.len(), 1);
        assert!(transporter(&a, &vec![1, 1], &vec![1, 2]).is_none());
    }

    #[test]
    fn transporter_of_a_point_to_itself_is_its_stabilizer() {
        let (g, f) = c3_on_gf7();
        let a = LinearAction::diagonal_cyclic(&g, f, &[2, 4]).unwrap();
        let zero = vec![0, 0];
        let t = transporter(&a, &zero, &zero).unwrap();
        assert_eq!(t.members, t.stabilizer);
        assert_eq!(t.members.len(), 3);
    }

    #[test]
    fn distinct_fixed_points_have_no_transporter() {
        let g = build_cyclic(4).unwrap();
        let f = gf(5).unwrap();
        // g acts by diag(1, 2): vectors (c, 0) are fixed
        let a = LinearAction::diagonal_cyclic(&g, f, &[1, 2]).unwrap();
        assert!(transporter(&a, &vec![1, 0], &vec![3, 0]).is_none());
    }

    #[test]
    fn invalid_actions_are_rejected() {
        let (g, f) = c3_on_gf7();
        // 3 has order 6 mod 7, so g -> diag(3) is not a homomorphism from C3
        assert!(LinearAction::diagonal_cyclic(&g, f, &[3]).is_err());
        assert!(ActionTable::new(&g, 2, vec![0, 1, 1, 0, 0, 1]).is_err());
        assert!(ActionTable::new(&g, 1, vec![0, 0, 0]).is_ok());
    }

    #[test]
    fn tuple_instance_validation() {
        let g = build_cyclic(3).unwrap();
        let a = ActionTable::regular(&g);
        assert!(TupleInstance::new(&a, vec![0, 1], vec![0]).is_err());
        assert!(TupleInstance::new(&a, vec![0, 5], vec![0, 1]).is_err());
        let t = TupleInstance::new(&a, vec![0, 1], vec![0, 1]).unwrap();
        assert_eq!(same_orbit(&t), Some(0));
        assert_eq!(dwise_implies_global(&t, 1).unwrap(), Verdict::GlobalEqual);
        assert!(dwise_implies_global(&t, 3).is_err());
        assert!(dwise_implies_global(&t, 0).is_err());
    }

    #[test]
    fn klein_four_witness_instance() {
        let g = build_klein_four().unwrap();
        let l = enumerate_subgroups(&g);
        let w = kappa_exact(&g, &l).witness.unwrap();
        let wi = witness_instance(&g, &l, &w).unwrap();
        assert_eq!(wi.action.points(), 6);
        assert_eq!(wi.x.len(), 3);
        let t = wi.instance();
        assert_eq!(same_orbit(&t), None);
        assert_eq!(dwise_implies_global(&t, 2).unwrap(), Verdict::Counterexample);
        assert_ne!(dwise_implies_global(&t, 3).unwrap(), Verdict::Counterexample);

        let (lin, x, xp) = wi.linear(gf(2).unwrap());
        let t = TupleInstance::new(&lin, x, xp).unwrap();
        assert_eq!(dwise_implies_global(&t, 2).unwrap(), Verdict::Counterexample);
    }

    #[test]
    fn kappa_orbit_check_small_groups() {
        for g in [build_klein_four().unwrap(), build_cyclic(6).unwrap()] {
            let l = enumerate_subgroups(&g);
            let k = kappa_exact(&g, &l);
            let r = kappa_orbit_check(&g, &l, k.kappa, k.witness.as_ref().unwrap(), 500, 3).unwrap();
            assert!(r.ok(), "{r:?}");
            assert_eq!(r.gset.trials + r.linear.trials, 500);
            assert!(r.exhaustive.unwrap().global_equal > 0);
        }
    }

    #[test]
    fn reductive_bound_small_run() {
        let (g, f) = c3_on_gf7();
        let a = LinearAction::diagonal_cyclic(&g, f, &[2, 4]).unwrap();
        let r = verify_reductive_bound(&a, 200, 7);
        assert!(r.ok());
        assert_eq!(r.trials.trials, 200);
        assert_eq!(r, verify_reductive_bound(&a, 200, 7));
    }
}
