//! Biparabolic subalgebras given by a pair of simple-root subsets.

use serde::{Deserialize, Serialize};

use crate::cascade::kostant_cascade;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{diagram_involution, Family, NodeSet, RootSystem, RootVec, SimpleSystem};

/// The pair (π₁, π₂) with π₁ ∪ π₂ = π and π₁ ∩ π₂ ≠ π.
#[derive(Debug, Clone)]
pub struct Biparabolic<'a> {
    rs: &'a RootSystem,
    pi1: NodeSet,
    pi2: NodeSet,
    i1: Vec<usize>,
    i2: Vec<usize>,
    orbits: Vec<NodeSet>,
}

/// The diagram involution of `nodes`, extended by the identity to all of π.
/// Entry `k` is the image of label `k + 1`.
pub fn extended_involution(rs: &RootSystem, nodes: &NodeSet) -> Vec<usize> {
    let mut map: Vec<usize> = (1..=rs.rank()).collect();
    let ss = SimpleSystem::from_nodes(rs, nodes);
    for (k, img) in diagram_involution(rs, &ss).into_iter().enumerate() {
        map[nodes.labels()[k] - 1] = nodes.labels()[img];
    }
    map
}

/// Orbits on 1..=n of the group generated by the given label permutations,
/// listed by least element.
pub fn orbits_of(n: usize, maps: &[&[usize]]) -> Vec<NodeSet> {
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for s in 1..=n {
        if seen[s] {
            continue;
        }
        let mut orbit = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for m in maps {
                let y = m[x - 1];
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        out.push(NodeSet::from_iter_unchecked(orbit));
    }
    out
}

pub fn make_biparabolic<'a>(rs: &'a RootSystem, pi1: NodeSet, pi2: NodeSet) -> Result<Biparabolic<'a>> {
    let all = NodeSet::full(rs.rank());
    for s in [&pi1, &pi2] {
        if !s.is_subset(&all) {
            return Err(Error::IndexOutOfRange { index: *s.labels().last().unwrap_or(&0), rank: rs.rank() });
        }
    }
    if pi1.union(&pi2) != all {
        return Err(Error::StandingHypothesis(format!("pi1 ∪ pi2 = {} is not all of π", pi1.union(&pi2))));
    }
    if pi1.intersection(&pi2) == all {
        return Err(Error::StandingHypothesis("pi1 ∩ pi2 is all of π".into()));
    }
    let i1 = extended_involution(rs, &pi1);
    let i2 = extended_involution(rs, &pi2);
    let orbits = orbits_of(rs.rank(), &[&i1, &i2]);
    Ok(Biparabolic { rs, pi1, pi2, i1, i2, orbits })
}

/// The Borel subalgebra: π₁ = ∅, π₂ = π.
pub fn borel(rs: &RootSystem) -> Biparabolic<'_> {
    make_biparabolic(rs, NodeSet::default(), NodeSet::full(rs.rank())).expect("Borel is a valid pair")
}

impl<'a> Biparabolic<'a> {
    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn pi1(&self) -> &NodeSet {
        &self.pi1
    }

    pub fn pi2(&self) -> &NodeSet {
        &self.pi2
    }

    pub fn i1(&self) -> &[usize] {
        &self.i1
    }

    pub fn i2(&self) -> &[usize] {
        &self.i2
    }

    pub fn intersection(&self) -> NodeSet {
        self.pi1.intersection(&self.pi2)
    }

    /// π ∖ (π₁ ∩ π₂).
    pub fn outside_intersection(&self) -> NodeSet {
        NodeSet::full(self.rs.rank()).difference(&self.intersection())
    }

    pub fn is_parabolic(&self) -> bool {
        self.pi2.len() == self.rs.rank()
    }

    pub fn orbits(&self) -> &[NodeSet] {
        &self.orbits
    }

    /// B = −B_{π₁} ⊔ B_{π₂}, in that order.
    pub fn cascade_basis(&self) -> Vec<RootVec> {
        let c1 = kostant_cascade(self.rs, &SimpleSystem::from_nodes(self.rs, &self.pi1));
        let c2 = kostant_cascade(self.rs, &SimpleSystem::from_nodes(self.rs, &self.pi2));
        c1.roots().iter().map(RootVec::neg).chain(c2.roots().iter().cloned()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDecomposition {
    pub orbits: Vec<NodeSet>,
    /// Whether the orbits are known to index the semi-invariant generators:
    /// true for parabolics of type A or C only.
    pub backed_by_generator_bijection: bool,
}

pub fn orbit_decomposition(bp: &Biparabolic<'_>) -> OrbitDecomposition {
    OrbitDecomposition {
        orbits: bp.orbits.clone(),
        backed_by_generator_bijection: bp.is_parabolic() && matches!(bp.rs.family(), Family::A | Family::C),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusTest {
    pub frobenius: bool,
    pub basis: Vec<RootVec>,
}

/// Frobenius iff B = −B_{π₁} ⊔ B_{π₂} is a basis of the span of π.
pub fn is_frobenius(bp: &Biparabolic<'_>) -> FrobeniusTest {
    let basis = bp.cascade_basis();
    let rows: Vec<Vec<i64>> = basis.iter().map(|b| b.0.clone()).collect();
    let frobenius = basis.len() == bp.rs.rank() && linalg::rank_int(&rows) == basis.len();
    FrobeniusTest { frobenius, basis }
}

/// Orbit-side form of the Frobenius condition: no orbit lies inside π₁ ∩ π₂
/// and every orbit meets π ∖ (π₁ ∩ π₂) exactly once.
pub fn orbit_frobenius_criterion(bp: &Biparabolic<'_>) -> bool {
    let outside = bp.outside_intersection();
    bp.orbits.iter().all(|o| o.iter().filter(|&i| outside.contains(i)).count() == 1)
}

/// The reduced index of a type-C parabolic: the number of i₁-orbits on π.
pub fn reduced_index_typec_parabolic(bp: &Biparabolic<'_>) -> Result<usize> {
    if bp.rs.family() != Family::C || !bp.is_parabolic() {
        return Err(Error::Unsupported("a type C parabolic (pi2 = π)".into()));
    }
    Ok(bp.orbits.len())
}
