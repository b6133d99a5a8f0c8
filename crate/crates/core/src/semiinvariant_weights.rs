//! Weights of the semi-invariant generators of Sy(q) and Sy(q_Z) as orbit
//! sums of relative fundamental weights, and their coroot pairings.

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integral_pairs::IntegralPairData;
use crate::linalg::{self, Solution, Q};
use crate::rootsys::{diagram_involution, NodeSet, RootSystem, RootVec, SimpleSystem, WeightVec};

/// The fundamental weight of `alpha` relative to `ss`: the element of the span
/// of `ss` with β^∨(ϖ) = δ_{αβ} for β ∈ ss. Zero when `alpha` is not in `ss`.
pub fn fundamental_weight(rs: &RootSystem, ss: &SimpleSystem, alpha: &RootVec) -> WeightVec {
    let n = rs.rank();
    let Some(pos) = ss.position(alpha) else {
        return WeightVec::zero(n);
    };
    let e = ss.elements();
    let k = e.len();
    let a: Vec<Vec<Q>> = e.iter().map(|b| e.iter().map(|x| linalg::q(rs.pair(b, x))).collect()).collect();
    let rhs: Vec<Q> = (0..k).map(|i| linalg::q(i64::from(i == pos))).collect();
    let Solution::Affine { particular, kernel } = linalg::solve(&a, &rhs, k) else {
        unreachable!("the Cartan matrix of a simple system is invertible")
    };
    assert!(kernel.is_empty(), "the Cartan matrix of a simple system is invertible");
    let mut w = WeightVec::zero(n);
    for (c, x) in particular.iter().zip(e) {
        w = w.add(&x.to_weight().scale(c));
    }
    w
}

/// γ ↦ i(γ) for the diagram involution of `ss`, the identity off `ss`.
fn involution_of(rs: &RootSystem, ss: &SimpleSystem) -> impl Fn(&RootVec) -> RootVec {
    let perm = diagram_involution(rs, ss);
    let elems = ss.elements().to_vec();
    move |g: &RootVec| match elems.iter().position(|e| e == g) {
        Some(p) => elems[perm[p]].clone(),
        None => g.clone(),
    }
}

/// Orbits in `all` of the partial map γ ↦ i₂(i₁(γ)), defined when γ lies in
/// `side1` and i₁(γ) in `side2`. Orbits are listed by first element in `all`
/// order, and each orbit keeps `all` order.
pub fn composite_orbits(
    rs: &RootSystem,
    all: &SimpleSystem,
    side1: &SimpleSystem,
    side2: &SimpleSystem,
) -> Vec<Vec<RootVec>> {
    let i1 = involution_of(rs, side1);
    let i2 = involution_of(rs, side2);
    let e = all.elements();
    let mut parent: Vec<usize> = (0..e.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (a, g) in e.iter().enumerate() {
        if !side1.contains(g) {
            continue;
        }
        let h = i1(g);
        if !side2.contains(&h) {
            continue;
        }
        let Some(b) = all.position(&i2(&h)) else { continue };
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra.max(rb)] = ra.min(rb);
    }
    let mut out: Vec<Vec<RootVec>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; e.len()];
    for a in 0..e.len() {
        let r = find(&mut parent, a);
        match root_of[r] {
            Some(o) => out[o].push(e[a].clone()),
            None => {
                root_of[r] = Some(out.len());
                out.push(vec![e[a].clone()]);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorInfo {
    pub label: String,
    pub orbit: Vec<RootVec>,
    pub weight: WeightVec,
    /// The part of the weight coming from the π₂ side.
    pub weight_plus: WeightVec,
    /// The part subtracted for the π₁ side.
    pub weight_minus: WeightVec,
    pub pairing_vector: Vec<i64>,
}

/// Integer coroot pairings of a weight; panics if one is not an integer.
pub fn pairings(rs: &RootSystem, w: &WeightVec, coroots: &[RootVec]) -> Result<Vec<i64>> {
    coroots
        .iter()
        .map(|c| {
            let v = rs.coroot_pairing(c, w)?;
            assert!(v.is_integer(), "weight {w} pairs to {v} with {c}^v");
            Ok(v.to_integer().to_i64().expect("small"))
        })
        .collect()
}

/// δ = Σ_{γ∈orbit} (ϖ²_γ + ϖ²_{i₂γ}) − (ϖ¹_γ + ϖ¹_{i₁γ}), relative to `side2`
/// and `side1`. On a fixed point this is 2(ϖ²_γ − ϖ¹_γ). Consecutive orbits of
/// equal weight are labelled p_k, p_k′.
pub fn generator_weights(
    rs: &RootSystem,
    side1: &SimpleSystem,
    side2: &SimpleSystem,
    orbits: &[Vec<RootVec>],
    coroots: &[RootVec],
) -> Result<Vec<GeneratorInfo>> {
    let n = rs.rank();
    let i1 = involution_of(rs, side1);
    let i2 = involution_of(rs, side2);
    let mut out: Vec<GeneratorInfo> = Vec::new();
    let mut number = 0;
    for orbit in orbits {
        let mut plus = WeightVec::zero(n);
        let mut minus = WeightVec::zero(n);
        for g in orbit {
            plus = plus.add(&fundamental_weight(rs, side2, g)).add(&fundamental_weight(rs, side2, &i2(g)));
            minus = minus.add(&fundamental_weight(rs, side1, g)).add(&fundamental_weight(rs, side1, &i1(g)));
        }
        let weight = plus.sub(&minus);
        let label = match out.last() {
            Some(prev) if prev.weight == weight && !prev.label.ends_with('\'') => format!("{}'", prev.label),
            _ => {
                number += 1;
                format!("p{number}")
            }
        };
        let pairing_vector = pairings(rs, &weight, coroots)?;
        out.push(GeneratorInfo {
            label,
            orbit: orbit.clone(),
            weight,
            weight_plus: plus,
            weight_minus: minus,
            pairing_vector,
        });
    }
    Ok(out)
}

/// Rows α^∨(δ) for each generator over `coroots`.
pub fn pairing_table(rs: &RootSystem, gens: &[GeneratorInfo], coroots: &[RootVec]) -> Result<Vec<Vec<i64>>> {
    gens.iter().map(|g| pairings(rs, &g.weight, coroots)).collect()
}

/// Whether every generator weight vanishes on the coroots of `intersection`.
pub fn vanishes_on(rs: &RootSystem, gens: &[GeneratorInfo], intersection: &SimpleSystem) -> bool {
    gens.iter().all(|g| {
        intersection.elements().iter().all(|c| rs.coroot_pairing(c, &g.weight).map(|v| v.is_zero()).unwrap_or(false))
    })
}

/// First label in the support of a root: s[i,j] and β_i start at i.
pub fn start_index(x: &RootVec) -> usize {
    x.support()[0]
}

/// π^Z ordered as its left component then its right component, each by
/// start index. This is the Bourbaki order of each type-C component.
pub fn ordered_pi_z(rs: &RootSystem, data: &IntegralPairData) -> SimpleSystem {
    let mut left = data.pi_z_left.clone();
    let mut right = data.pi_z_right.clone();
    left.sort_by_key(start_index);
    right.sort_by_key(start_index);
    SimpleSystem::new(rs, left.into_iter().chain(right).collect()).expect("reordering keeps a simple system")
}

/// Generators of Sy(q_Z) for a type-C parabolic, with pairings against `coroots`.
pub fn integral_generators(
    rs: &RootSystem,
    data: &IntegralPairData,
    coroots: &[RootVec],
) -> Result<Vec<GeneratorInfo>> {
    let all = ordered_pi_z(rs, data);
    let orbits = composite_orbits(rs, &all, &data.pi1_z, &all);
    generator_weights(rs, &data.pi1_z, &all, &orbits, coroots)
}

/// Generators of Sy(q) for the parabolic with Levi part π₁.
pub fn parabolic_generators(rs: &RootSystem, pi1: &NodeSet, coroots: &[RootVec]) -> Result<Vec<GeneratorInfo>> {
    let all = SimpleSystem::from_nodes(rs, &NodeSet::full(rs.rank()));
    let side1 = SimpleSystem::from_nodes(rs, pi1);
    let orbits = composite_orbits(rs, &all, &side1, &all);
    generator_weights(rs, &side1, &all, &orbits, coroots)
}

/// Coroots α_i^∨ for the given labels, as roots.
pub fn coroots_of(rs: &RootSystem, labels: &[usize]) -> Result<Vec<RootVec>> {
    labels
        .iter()
        .map(|&i| {
            if i == 0 || i > rs.rank() {
                Err(Error::IndexOutOfRange { index: i, rank: rs.rank() })
            } else {
                Ok(rs.simple(i))
            }
        })
        .collect()
}

/// Closed-form pairing values stated for type-C parabolics, compared with the
/// direct computation.
pub mod closed_forms {
    use super::*;
    use crate::integral_pairs::{compute_pi1_z, HalfSet};

    /// Which closed form a [`Check`] tests. "Own" means the generator's start
    /// lies in the block of the component whose half index is paired against.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
    pub enum Rule {
        /// ϖ⁺ on another component: −2|p| at a left neighbour, else 0; fails when i_u lies in I(p).
        OtherBlockPlus,
        /// ϖ⁺ on another component, with the sign case for i_u inside I(p).
        OtherBlockPlusCorrected,
        /// ϖ⁻ on another component: 0.
        OtherBlockMinus,
        /// ϖ⁺ on the own component: 0, 2 or −2|p| by position.
        OwnBlockPlus,
        /// ϖ⁻ on an own component containing α_n: equals the ϖ⁺ value.
        OwnBlockMinusTypeC,
        /// Total pairing on an own component containing α_n: 0.
        OwnBlockTotalTypeC,
        /// ϖ⁻ on an own type-A component.
        OwnBlockMinusTypeA,
        /// Total pairing on an own type-A component.
        OwnBlockTotalTypeA,
    }

    #[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
    pub struct Check {
        pub rule: Rule,
        /// i_u, the half index of the component being paired against.
        pub half_index: usize,
        /// Smallest start index of the generator's orbit.
        pub generator_start: usize,
        pub predicted: i64,
        pub actual: i64,
    }

    impl Check {
        pub fn holds(&self) -> bool {
            self.predicted == self.actual
        }
    }

    struct Component {
        first: usize,
        last: usize,
        /// One past the end of the block of starts owned by the component.
        block_end: usize,
        half: Option<usize>,
        type_c: bool,
    }

    /// All closed-form predictions applicable to (π₁, π^½). Requires a reduced
    /// π^½ contained in π₁.
    pub fn checks(rs: &RootSystem, pi1: &NodeSet, half: &HalfSet) -> Result<Vec<Check>> {
        let n = rs.rank();
        if !half.nodes().is_subset(pi1) {
            return Err(Error::Unsupported("a half set contained in pi1".into()));
        }
        let data = compute_pi1_z(rs, pi1, half)?;
        let comps = rs.node_components(pi1);
        let mut blocks = Vec::new();
        for (a, c) in comps.iter().enumerate() {
            let first = c.labels()[0];
            let last = *c.labels().last().unwrap();
            let block_end = comps.get(a + 1).map_or(n + 1, |d| d.labels()[0]);
            let h: Vec<usize> = c.iter().filter(|&i| half.contains(i)).collect();
            blocks.push(Component { first, last, block_end, half: h.first().copied(), type_c: last == n });
        }
        let coroots: Vec<RootVec> = half.indices().iter().map(|&i| rs.simple(i)).collect();
        let gens = integral_generators(rs, &data, &coroots)?;
        let part_of = |t: usize| data.i_left.contains(&t);
        let mut out = Vec::new();
        for g in &gens {
            let k = g.orbit.iter().map(start_index).min().unwrap();
            let size = g.orbit.len() as i64;
            let fixed = size == 1;
            let owner = blocks.iter().position(|b| b.first <= k && k < b.block_end);
            for (col, &iu) in half.indices().iter().enumerate() {
                let u = blocks.iter().position(|b| b.half == Some(iu)).expect("half ⊆ π₁");
                let cu = &blocks[u];
                let plus = pairings(rs, &g.weight_plus, &coroots[col..=col])?[0];
                let minus = pairings(rs, &g.weight_minus, &coroots[col..=col])?[0];
                let total = g.pairing_vector[col];
                let mut push = |rule: Rule, predicted: i64, actual: i64| {
                    out.push(Check { rule, half_index: iu, generator_start: k, predicted, actual })
                };
                match owner {
                    Some(o) if o != u => {
                        // i_u and i_u + 1 always lie in different parity classes
                        let in_class = |t: usize| part_of(t) == part_of(k);
                        let left_neighbour = iu < k && !in_class(iu) && in_class(iu + 1);
                        push(Rule::OtherBlockPlus, if left_neighbour { -2 * size } else { 0 }, plus);
                        let corrected = match (iu < k, in_class(iu)) {
                            (false, _) => 0,
                            (true, true) => 2 * size,
                            (true, false) => -2 * size,
                        };
                        push(Rule::OtherBlockPlusCorrected, corrected, plus);
                        push(Rule::OtherBlockMinus, 0, minus);
                    }
                    Some(_) => {
                        let by_position = match k.cmp(&iu) {
                            std::cmp::Ordering::Less => 0,
                            std::cmp::Ordering::Equal => 2,
                            std::cmp::Ordering::Greater => -2 * size,
                        };
                        push(Rule::OwnBlockPlus, by_position, plus);
                        if cu.type_c {
                            push(Rule::OwnBlockMinusTypeC, by_position, minus);
                            push(Rule::OwnBlockTotalTypeC, 0, total);
                        } else {
                            let m = if k == iu || k > cu.last {
                                0
                            } else if fixed {
                                -1
                            } else {
                                -2
                            };
                            push(Rule::OwnBlockMinusTypeA, m, minus);
                            let t = if k < iu {
                                if fixed {
                                    1
                                } else {
                                    2
                                }
                            } else if k == iu {
                                2
                            } else if k <= cu.last {
                                if fixed {
                                    -1
                                } else {
                                    -2
                                }
                            } else {
                                -2
                            };
                            push(Rule::OwnBlockTotalTypeA, t, total);
                        }
                    }
                    None => {}
                }
            }
        }
        Ok(out)
    }
}
