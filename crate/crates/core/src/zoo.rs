//! The test zoo of finite subgroups of SL(2, C) and the Helly-dimension
//! report over it.

use crate::cache::{lattice_for, LatticeCache};
use crate::error::Result;
use crate::group::{
    build_alternating4, build_alternating5, build_binary_polyhedral, build_cyclic, build_dicyclic, build_symmetric4,
    GroupTable, PolyhedralTag, Provenance,
};
use crate::helly::{kappa_exact, WitnessCosetView};
use serde::{Deserialize, Serialize};

pub const MAX_CYCLIC: usize = 60;
pub const MAX_DICYCLIC: usize = 12;
pub const EXCEPTIONAL_KAPPA_BOUND: usize = 6;
pub const DICYCLIC_KAPPA_BOUND: usize = 4;

pub const BINARY_TAGS: [PolyhedralTag; 3] =
    [PolyhedralTag::Tetrahedral, PolyhedralTag::Octahedral, PolyhedralTag::Icosahedral];

/// C_2..C_60, Dic_2..Dic_12, 2T, 2O, 2I in that order.
pub fn zoo() -> Result<Vec<GroupTable>> {
    let mut groups = Vec::new();
    for n in 2..=MAX_CYCLIC {
        groups.push(build_cyclic(n)?);
    }
    for n in 2..=MAX_DICYCLIC {
        groups.push(build_dicyclic(n)?);
    }
    for tag in BINARY_TAGS {
        groups.push(build_binary_polyhedral(tag)?);
    }
    Ok(groups)
}

/// Published chain lengths of the binary polyhedral groups.
pub fn binary_lambda(tag: PolyhedralTag) -> usize {
    match tag {
        PolyhedralTag::Tetrahedral => 4,
        PolyhedralTag::Octahedral => 5,
        PolyhedralTag::Icosahedral => 5,
    }
}

/// Published chain lengths of the rotation groups A_4, S_4, A_5.
pub fn quotient_lambda(tag: PolyhedralTag) -> usize {
    match tag {
        PolyhedralTag::Tetrahedral => 3,
        PolyhedralTag::Octahedral => 4,
        PolyhedralTag::Icosahedral => 4,
    }
}

pub fn build_quotient(tag: PolyhedralTag) -> Result<GroupTable> {
    match tag {
        PolyhedralTag::Tetrahedral => build_alternating4(),
        PolyhedralTag::Octahedral => build_symmetric4(),
        PolyhedralTag::Icosahedral => build_alternating5(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub group: String,
    pub order: usize,
    pub kappa: usize,
    pub mu: usize,
    pub lambda: usize,
    pub bounds_ok: bool,
    pub witness: Vec<WitnessCosetView>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZooReport {
    pub groups: Vec<GroupReport>,
    pub failures: Vec<String>,
}

impl ZooReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn group_report(g: &GroupTable, cache: Option<&LatticeCache>) -> Result<(GroupReport, Vec<String>)> {
    let l = lattice_for(g, cache)?;
    let k = kappa_exact(g, &l);
    let (mu, lambda) = (l.mu(), l.lambda());
    let name = g.name();
    let mut failures = Vec::new();

    let bounds_ok = k.kappa <= mu + 1 && mu <= lambda;
    if !bounds_ok {
        failures.push(format!("{name}: kappa={} mu={mu} lambda={lambda} violates kappa <= mu+1 <= lambda+1", k.kappa));
    }
    match g.provenance() {
        Provenance::Cyclic(n) if *n > 1 && k.kappa != 2 => {
            failures.push(format!("{name}: kappa={} but cyclic groups have kappa 2", k.kappa));
        }
        Provenance::Dicyclic(_) if k.kappa > DICYCLIC_KAPPA_BOUND => {
            failures.push(format!("{name}: kappa={} exceeds {DICYCLIC_KAPPA_BOUND}", k.kappa));
        }
        Provenance::BinaryPolyhedral(tag) => {
            if k.kappa > EXCEPTIONAL_KAPPA_BOUND {
                failures.push(format!("{name}: kappa={} exceeds {EXCEPTIONAL_KAPPA_BOUND}", k.kappa));
            }
            if lambda != binary_lambda(*tag) {
                failures.push(format!("{name}: lambda={lambda}, expected {}", binary_lambda(*tag)));
            }
        }
        _ => {}
    }
    if let Some(w) = &k.witness {
        if let Err(e) = w.verify(&l) {
            failures.push(format!("{name}: witness rejected: {e}"));
        }
    }
    let witness = k
        .witness
        .as_ref()
        .map(|w| w.cosets.iter().map(|c| WitnessCosetView::new(g, &l, c)).collect())
        .unwrap_or_default();
    let report = GroupReport { group: name, order: g.order(), kappa: k.kappa, mu, lambda, bounds_ok, witness };
    Ok((report, failures))
}

/// Computes kappa, mu and lambda for every group and checks the published
/// bounds. Violations are collected, not raised.
pub fn verify_zoo(groups: &[GroupTable], cache: Option<&LatticeCache>) -> Result<ZooReport> {
    let mut report = ZooReport::default();
    for g in groups {
        let (r, f) = group_report(g, cache)?;
        report.groups.push(r);
        report.failures.extend(f);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverLambda {
    pub quotient: String,
    pub cover: String,
    pub quotient_lambda: usize,
    pub cover_lambda: usize,
    pub ok: bool,
}

/// lambda of A_4, S_4, A_5 and of their double covers against the published values.
pub fn verify_cover_lambdas(cache: Option<&LatticeCache>) -> Result<Vec<CoverLambda>> {
    BINARY_TAGS
        .iter()
        .map(|&tag| {
            let q = build_quotient(tag)?;
            let c = build_binary_polyhedral(tag)?;
            let ql = lattice_for(&q, cache)?.lambda();
            let cl = lattice_for(&c, cache)?.lambda();
            Ok(CoverLambda {
                quotient: q.name(),
                cover: c.name(),
                quotient_lambda: ql,
                cover_lambda: cl,
                ok: ql == quotient_lambda(tag) && cl == binary_lambda(tag) && cl == ql + 1,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zoo_shape() {
        let z = zoo().unwrap();
        assert_eq!(z.len(), 59 + 11 + 3);
        assert_eq!(z[0].order(), 2);
        assert_eq!(z.last().unwrap().order(), 120);
    }

    #[test]
    fn c2_is_tight() {
        let r = verify_zoo(&[build_cyclic(2).unwrap()], None).unwrap();
        assert!(r.ok());
        let g = &r.groups[0];
        assert_eq!((g.kappa, g.mu, g.lambda), (2, 1, 1));
    }

    #[test]
    fn binary_tetrahedral_report() {
        let r = verify_zoo(&[build_binary_polyhedral(PolyhedralTag::Tetrahedral).unwrap()], None).unwrap();
        assert!(r.ok(), "{:?}", r.failures);
        let g = &r.groups[0];
        assert!(g.kappa <= g.mu + 1 && g.kappa <= 6);
        assert_eq!(g.lambda, 4);
        assert_eq!(g.witness.len(), g.kappa);
    }

    #[test]
    fn cover_lambdas() {
        assert!(verify_cover_lambdas(None).unwrap().iter().all(|c| c.ok));
    }
}
