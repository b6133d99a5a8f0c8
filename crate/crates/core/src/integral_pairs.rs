//! Regular integral pairs (π, π^Z) for classical types, computed from the set
//! π^½ of simple roots on which h is a half-integer.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cascade::kostant_cascade;
use crate::error::{Error, Result};
use crate::rootsys::{Family, NodeSet, RootSystem, RootVec, SimpleSystem};

/// π^½ as a strictly increasing list of labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfSet(NodeSet);

impl HalfSet {
    pub fn new(rank: usize, indices: &[usize]) -> Result<HalfSet> {
        NodeSet::new(rank, indices).map(HalfSet)
    }

    pub fn empty() -> HalfSet {
        HalfSet::default()
    }

    pub fn from_nodes(nodes: NodeSet) -> HalfSet {
        HalfSet(nodes)
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.0
    }

    pub fn indices(&self) -> &[usize] {
        self.0.labels()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    fn parity(&self, n: usize) -> Vec<u8> {
        (1..=n).map(|i| u8::from(self.contains(i))).collect()
    }

    fn from_parity(p: &[u8]) -> HalfSet {
        HalfSet(NodeSet::from_iter_unchecked((1..=p.len()).filter(|&i| p[i - 1] == 1)))
    }
}

impl fmt::Display for HalfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PiZ {
    Admissible(SimpleSystem),
    Inadmissible,
}

impl PiZ {
    pub fn admissible(self) -> Option<SimpleSystem> {
        match self {
            PiZ::Admissible(s) => Some(s),
            PiZ::Inadmissible => None,
        }
    }
}

/// 2ε_k in simple-root coordinates, Bourbaki realisation.
pub fn two_eps(family: Family, n: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    match family {
        Family::B => {
            for x in &mut v[k - 1..] {
                *x = 2;
            }
        }
        Family::C => {
            for x in &mut v[k - 1..n - 1] {
                *x = 2;
            }
            v[n - 1] = 1;
        }
        Family::D => {
            if k == n {
                v[n - 2] = -1;
                v[n - 1] = 1;
            } else {
                for x in &mut v[k - 1..n - 2] {
                    *x = 2;
                }
                v[n - 2] = 1;
                v[n - 1] = 1;
            }
        }
        _ => panic!("ε coordinates are only used for types B, C, D"),
    }
    v
}

/// ε_i + s·ε_j with s = ±1, or 2ε_i when i = j and s = 1.
pub fn eps_root(family: Family, n: usize, i: usize, j: usize, s: i64) -> RootVec {
    let a = two_eps(family, n, i);
    let b = two_eps(family, n, j);
    RootVec(a.iter().zip(&b).map(|(x, y)| (x + s * y) / 2).collect())
}

/// β_t = 2α_t + … + 2α_{n−1} + α_n, the cascade of C_n.
pub fn beta(n: usize, t: usize) -> RootVec {
    RootVec(two_eps(Family::C, n, t))
}

/// Coordinates 1..=n split by t_k ∈ ℤ/2, where h(ε_k) ∈ t_k/2 + ℤ.
/// The class of coordinate n comes first for B (the integral class); for C and D
/// the class containing 1 comes first. `None` when the ε-values are not
/// half-integers, which forces |π^Z| < |π|.
fn parity_classes(family: Family, n: usize, half: &HalfSet) -> Option<[Vec<usize>; 2]> {
    let mut t = vec![0u8; n + 1];
    match family {
        Family::B => {
            for k in (1..=n).rev() {
                let above = if k == n { 0 } else { t[k + 1] };
                t[k] = above ^ u8::from(half.contains(k));
            }
        }
        Family::C => {
            for k in (1..n).rev() {
                t[k] = t[k + 1] ^ u8::from(half.contains(k));
            }
        }
        Family::D => {
            if half.contains(n - 1) != half.contains(n) {
                return None;
            }
            t[n - 1] = u8::from(half.contains(n - 1));
            for k in (1..n - 1).rev() {
                t[k] = t[k + 1] ^ u8::from(half.contains(k));
            }
        }
        _ => unreachable!(),
    }
    let first = if family == Family::B { 0 } else { t[1] };
    let a: Vec<usize> = (1..=n).filter(|&k| t[k] == first).collect();
    let b: Vec<usize> = (1..=n).filter(|&k| t[k] != first).collect();
    Some([a, b])
}

/// Simple roots of the integral subsystem on one parity class, listed
/// chain first, end root last. `None` when the class has too few roots.
fn class_roots(family: Family, n: usize, class: &[usize], integral_short: bool) -> Option<Vec<RootVec>> {
    let m = class.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let mut out: Vec<RootVec> = class.windows(2).map(|w| eps_root(family, n, w[0], w[1], -1)).collect();
    let last = class[m - 1];
    match family {
        Family::C => out.push(eps_root(family, n, last, last, 1)),
        Family::B if integral_short => {
            let mut v = two_eps(family, n, last);
            v.iter_mut().for_each(|x| *x /= 2);
            out.push(RootVec(v));
        }
        _ => {
            if m == 1 {
                return None;
            }
            out.push(eps_root(family, n, class[m - 2], last, 1));
        }
    }
    Some(out)
}

fn sort_desc(v: &mut [RootVec]) {
    v.sort_by(|a, b| b.0.cmp(&a.0));
}

/// The simple roots in ℕπ of Δ^Z = {γ : h(γ) ∈ ℤ}, when they number |π|.
pub fn compute_pi_z(rs: &RootSystem, half: &HalfSet) -> Result<PiZ> {
    let n = rs.rank();
    if let Some(&i) = half.indices().last() {
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
    }
    let family = rs.family();
    if half.is_empty() {
        return Ok(PiZ::Admissible(SimpleSystem::from_nodes(rs, &NodeSet::full(n))));
    }
    match family {
        Family::A => return Ok(PiZ::Inadmissible),
        Family::B | Family::C | Family::D => {}
        _ => return Err(Error::Unsupported("a classical root system".into())),
    }
    if family == Family::C && half.contains(n) {
        return Ok(PiZ::Inadmissible);
    }
    let Some([a, b]) = parity_classes(family, n, half) else {
        return Ok(PiZ::Inadmissible);
    };
    let (Some(ra), Some(rb)) = (class_roots(family, n, &a, family == Family::B), class_roots(family, n, &b, false))
    else {
        return Ok(PiZ::Inadmissible);
    };
    let mut all: Vec<RootVec> = ra.into_iter().chain(rb).collect();
    if all.len() != n {
        return Ok(PiZ::Inadmissible);
    }
    sort_desc(&mut all);
    Ok(PiZ::Admissible(SimpleSystem::new(rs, all)?))
}

fn require_c(rs: &RootSystem) -> Result<()> {
    if rs.family() != Family::C {
        return Err(Error::Unsupported("a root system of type C".into()));
    }
    Ok(())
}

fn require_c_half(rs: &RootSystem, half: &HalfSet) -> Result<()> {
    require_c(rs)?;
    if let Some(&i) = half.indices().last() {
        if i >= rs.rank() {
            return Err(Error::Inadmissible(half.indices().to_vec()));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitI {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub left_cascade: Vec<RootVec>,
    pub right_cascade: Vec<RootVec>,
}

/// I^ℓ = ⊔_j [i_{2j}+1, i_{2j+1}] and I^r = ⊔_j [i_{2j+1}+1, i_{2j+2}] with
/// i_0 = 0, i_{r+1} = n, together with the cascade parts {β_t}.
pub fn split_i(rs: &RootSystem, half: &HalfSet) -> Result<SplitI> {
    require_c_half(rs, half)?;
    let n = rs.rank();
    let mut ends = vec![0];
    ends.extend_from_slice(half.indices());
    ends.push(n);
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (j, w) in ends.windows(2).enumerate() {
        let part = if j % 2 == 0 { &mut left } else { &mut right };
        part.extend(w[0] + 1..=w[1]);
    }
    let casc = |v: &[usize]| v.iter().map(|&t| beta(n, t)).collect();
    Ok(SplitI { left_cascade: casc(&left), right_cascade: casc(&right), left, right })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// The part of π₁^Z lying over one component of π₁ and one component of π^Z.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Piece {
    pub component: NodeSet,
    pub side: Side,
    pub roots: Vec<RootVec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralPairData {
    pub half_set: HalfSet,
    pub pi_z: SimpleSystem,
    pub pi_z_left: Vec<RootVec>,
    pub pi_z_right: Vec<RootVec>,
    pub i_left: Vec<usize>,
    pub i_right: Vec<usize>,
    pub pi1_z: SimpleSystem,
    pub pi1_z_components: Vec<Pi1Piece>,
    pub beta_ir_in_pi1z: bool,
    /// π^½ with i_r removed when β_{i_r} ∈ π₁^Z.
    pub reduced_half_set: HalfSet,
}

fn supported_in(x: &RootVec, nodes: &NodeSet) -> bool {
    x.support().iter().all(|&i| nodes.contains(i))
}

/// Whether π^½ meets each component of π₁ at most once.
pub fn is_reduced(rs: &RootSystem, pi1: &NodeSet, half: &HalfSet) -> bool {
    rs.node_components(pi1).iter().all(|c| c.iter().filter(|&i| half.contains(i)).count() <= 1)
}

/// π₁^Z = π^Z ∩ ℕπ₁ for a type-C parabolic and a reduced π^½, with its
/// components and π̄^½.
pub fn compute_pi1_z(rs: &RootSystem, pi1: &NodeSet, half: &HalfSet) -> Result<IntegralPairData> {
    require_c_half(rs, half)?;
    let n = rs.rank();
    if !pi1.is_subset(&NodeSet::full(n)) {
        return Err(Error::IndexOutOfRange { index: *pi1.labels().last().unwrap_or(&0), rank: n });
    }
    if !is_reduced(rs, pi1, half) {
        return Err(Error::NotReduced { half: half.indices().to_vec() });
    }
    let pi_z = compute_pi_z(rs, half)?.admissible().expect("type C half sets below n are admissible");
    let split = split_i(rs, half)?;
    let on_left = |x: &RootVec| {
        // the first coordinate of a chain root or β_t decides the class
        let first = x.support()[0];
        split.left.contains(&first)
    };
    let (pi_z_left, pi_z_right): (Vec<RootVec>, Vec<RootVec>) =
        pi_z.elements().iter().cloned().partition(|x| on_left(x));
    let pi1_z = pi_z.filter(|x| supported_in(x, pi1));
    let beta_ir_in_pi1z = half.indices().last().is_some_and(|&ir| pi1_z.contains(&beta(n, ir)));
    let mut pi1_z_components = Vec::new();
    for comp in rs.node_components(pi1) {
        for (side, part) in [(Side::Left, &pi_z_left), (Side::Right, &pi_z_right)] {
            let roots: Vec<RootVec> = part.iter().filter(|x| supported_in(x, &comp)).cloned().collect();
            if !roots.is_empty() {
                pi1_z_components.push(Pi1Piece { component: comp.clone(), side, roots });
            }
        }
    }
    let reduced_half_set = if beta_ir_in_pi1z {
        HalfSet(NodeSet::from_iter_unchecked(half.indices()[..half.len() - 1].iter().copied()))
    } else {
        half.clone()
    };
    Ok(IntegralPairData {
        half_set: half.clone(),
        pi_z,
        pi_z_left,
        pi_z_right,
        i_left: split.left,
        i_right: split.right,
        pi1_z,
        pi1_z_components,
        beta_ir_in_pi1z,
        reduced_half_set,
    })
}

/// One step of the normalisation: in the first component of π₁ holding two
/// indices a < b of π^½, replace h by s_{b−1}⋯s_{a+1}s_a·h. Inside the
/// component this deletes a, adds a − 1 and moves b to b − 1; the label a − 1
/// changes parity even when it lies outside π₁. Returns `None` when reduced.
pub fn reduce_step(rs: &RootSystem, pi1: &NodeSet, half: &HalfSet) -> Option<HalfSet> {
    for comp in rs.node_components(pi1) {
        let inside: Vec<usize> = half.indices().iter().copied().filter(|&i| comp.contains(i)).collect();
        if inside.len() < 2 {
            continue;
        }
        let (a, b) = (inside[0], inside[1]);
        return Some((a..b).fold(half.clone(), |h, j| reflect_half_set(rs, j, &h)));
    }
    None
}

/// Iterates [`reduce_step`] until each component of π₁ holds at most one index.
pub fn reduce_half_set(rs: &RootSystem, pi1: &NodeSet, half: &HalfSet) -> Result<HalfSet> {
    require_c(rs)?;
    let mut cur = half.clone();
    let mut seen = BTreeSet::from([cur.clone()]);
    while let Some(next) = reduce_step(rs, pi1, &cur) {
        if !seen.insert(next.clone()) {
            return Ok(canonical_half_set(rs, pi1, half));
        }
        cur = next;
    }
    Ok(cur)
}

/// The half set of s_j·h: parities change by α_j^∨(α_i) times the parity at j.
pub fn reflect_half_set(rs: &RootSystem, j: usize, half: &HalfSet) -> HalfSet {
    let n = rs.rank();
    let p = half.parity(n);
    let c = rs.cartan();
    let q: Vec<u8> =
        (0..n).map(|i| ((i64::from(p[i]) + c[j - 1][i].rem_euclid(2) * i64::from(p[j - 1])) % 2) as u8).collect();
    HalfSet::from_parity(&q)
}

/// The orbit of π^½ under the Weyl group of π₁, sorted.
pub fn w_orbit(rs: &RootSystem, pi1: &NodeSet, half: &HalfSet) -> Vec<HalfSet> {
    let mut seen: BTreeSet<HalfSet> = BTreeSet::new();
    let mut queue = VecDeque::from([half.clone()]);
    seen.insert(half.clone());
    while let Some(h) = queue.pop_front() {
        for j in pi1.iter() {
            let g = reflect_half_set(rs, j, &h);
            if seen.insert(g.clone()) {
                queue.push_back(g);
            }
        }
    }
    seen.into_iter().collect()
}

/// The reduced member of the W_{π₁}-orbit of π^½ that is least by (size, labels).
pub fn canonical_half_set(rs: &RootSystem, pi1: &NodeSet, half: &HalfSet) -> HalfSet {
    w_orbit(rs, pi1, half)
        .into_iter()
        .filter(|h| is_reduced(rs, pi1, h))
        .min_by(|a, b| (a.len(), a.indices()).cmp(&(b.len(), b.indices())))
        .expect("every orbit has a reduced member")
}

/// Positive roots whose coefficient sum over π^½ is even: the roots on which h is integral.
pub fn integral_roots(rs: &RootSystem, half: &HalfSet) -> Vec<RootVec> {
    rs.positive_roots()
        .iter()
        .filter(|g| half.indices().iter().map(|&i| g.0[i - 1]).sum::<i64>() % 2 == 0)
        .cloned()
        .collect()
}

/// The cascade of each component of a simple system, keyed by component.
pub fn component_cascades(rs: &RootSystem, ss: &SimpleSystem) -> Vec<(SimpleSystem, Vec<RootVec>)> {
    ss.components(rs)
        .into_iter()
        .map(|c| {
            let k = kostant_cascade(rs, &c).roots().to_vec();
            (c, k)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> RootSystem {
        RootSystem::new(Family::C, n).unwrap()
    }

    fn hs(n: usize, v: &[usize]) -> HalfSet {
        HalfSet::new(n, v).unwrap()
    }

    fn ns(n: usize, v: &[usize]) -> NodeSet {
        NodeSet::new(n, v).unwrap()
    }

    fn s(n: usize, i: usize, j: usize) -> RootVec {
        RootVec::interval(n, i, j)
    }

    #[test]
    fn eps_translation() {
        assert_eq!(eps_root(Family::C, 3, 1, 1, 1), RootVec(vec![2, 2, 1]));
        assert_eq!(eps_root(Family::C, 3, 3, 3, 1), RootVec(vec![0, 0, 1]));
        assert_eq!(eps_root(Family::B, 4, 1, 3, 1), RootVec(vec![1, 1, 2, 2]));
        assert_eq!(eps_root(Family::D, 5, 1, 2, 1), RootVec(vec![1, 2, 2, 1, 1]));
        assert_eq!(eps_root(Family::D, 5, 2, 4, 1), RootVec(vec![0, 1, 1, 1, 1]));
        assert_eq!(eps_root(Family::D, 5, 2, 5, 1), RootVec(vec![0, 1, 1, 0, 1]));
        assert_eq!(eps_root(Family::D, 5, 4, 5, -1), RootVec(vec![0, 0, 0, 1, 0]));
        assert_eq!(eps_root(Family::B, 4, 2, 4, -1), RootVec(vec![0, 1, 1, 0]));
        for (f, n) in [(Family::B, 5), (Family::C, 5), (Family::D, 5)] {
            let rs = RootSystem::new(f, n).unwrap();
            for i in 1..=n {
                for j in i + 1..=n {
                    assert!(rs.is_root(&eps_root(f, n, i, j, 1)));
                    assert!(rs.is_root(&eps_root(f, n, i, j, -1)));
                }
            }
        }
    }

    #[test]
    fn pi_z_c6_example() {
        let rs = c(6);
        let pz = compute_pi_z(&rs, &hs(6, &[1, 3, 5])).unwrap().admissible().unwrap();
        let expect =
            [s(6, 1, 3), rs.simple(2), s(6, 3, 5), rs.simple(4), RootVec(vec![0, 0, 0, 0, 2, 1]), rs.simple(6)];
        assert_eq!(pz.elements(), &expect[..]);
    }

    #[test]
    fn pi_z_trivial_and_inadmissible() {
        let rs = c(4);
        let pz = compute_pi_z(&rs, &HalfSet::empty()).unwrap().admissible().unwrap();
        assert_eq!(pz.elements(), &rs.simple_roots()[..]);
        assert_eq!(compute_pi_z(&rs, &hs(4, &[4])).unwrap(), PiZ::Inadmissible);
        let b4 = RootSystem::parse("B4", None).unwrap();
        assert_eq!(compute_pi_z(&b4, &hs(4, &[1])).unwrap(), PiZ::Inadmissible);
        assert_eq!(compute_pi_z(&b4, &hs(4, &[2, 3])).unwrap(), PiZ::Inadmissible);
        assert!(matches!(compute_pi_z(&b4, &hs(4, &[2])).unwrap(), PiZ::Admissible(_)));
        let a3 = RootSystem::parse("A3", None).unwrap();
        assert_eq!(compute_pi_z(&a3, &hs(3, &[2])).unwrap(), PiZ::Inadmissible);
        let g2 = RootSystem::parse("G2", None).unwrap();
        assert!(compute_pi_z(&g2, &hs(2, &[1])).is_err());
    }

    #[test]
    fn pi_z_type_d_fork() {
        let d5 = RootSystem::parse("D5", None).unwrap();
        let pz = compute_pi_z(&d5, &hs(5, &[2, 4, 5])).unwrap().admissible().unwrap();
        let mut want = vec![
            d5.simple(1),
            d5.simple(3),
            RootVec(vec![0, 1, 1, 1, 0]),
            RootVec(vec![0, 1, 1, 0, 1]),
            RootVec(vec![0, 0, 1, 1, 1]),
        ];
        sort_desc(&mut want);
        assert_eq!(pz.elements(), &want[..]);
        assert_eq!(compute_pi_z(&d5, &hs(5, &[4])).unwrap(), PiZ::Inadmissible);
        assert_eq!(compute_pi_z(&d5, &hs(5, &[1])).unwrap(), PiZ::Inadmissible);
    }

    #[test]
    fn split_examples() {
        let sp = split_i(&c(6), &hs(6, &[1, 3, 5])).unwrap();
        assert_eq!((sp.left.clone(), sp.right.clone()), (vec![1, 4, 5], vec![2, 3, 6]));
        assert_eq!(sp.left_cascade, vec![beta(6, 1), beta(6, 4), beta(6, 5)]);
        let sp = split_i(&c(4), &HalfSet::empty()).unwrap();
        assert_eq!((sp.left, sp.right), (vec![1, 2, 3, 4], vec![]));
        let sp = split_i(&c(3), &hs(3, &[1])).unwrap();
        assert_eq!((sp.left, sp.right), (vec![1], vec![2, 3]));
    }

    #[test]
    fn pi1_z_examples() {
        let rs = c(6);
        let d = compute_pi1_z(&rs, &ns(6, &[1, 2, 4, 5]), &hs(6, &[1, 3, 5])).unwrap();
        assert_eq!(d.pi1_z.elements(), &[rs.simple(2), rs.simple(4)]);
        assert!(!d.beta_ir_in_pi1z);
        assert_eq!(d.reduced_half_set, hs(6, &[1, 3, 5]));
        assert_eq!(d.pi_z_left, vec![s(6, 1, 3), rs.simple(4), beta(6, 5)]);
        assert_eq!(d.pi_z_right, vec![rs.simple(2), s(6, 3, 5), rs.simple(6)]);
        assert_eq!(d.pi1_z_components.len(), 2);
        assert_eq!(d.pi1_z_components[0].side, Side::Right);
        assert_eq!(d.pi1_z_components[1].side, Side::Left);

        let c3 = c(3);
        let d = compute_pi1_z(&c3, &ns(3, &[1, 2]), &hs(3, &[1])).unwrap();
        assert_eq!(d.pi1_z.elements(), &[c3.simple(2)]);

        let c4 = c(4);
        let d = compute_pi1_z(&c4, &ns(4, &[2, 3, 4]), &hs(4, &[2])).unwrap();
        assert!(d.beta_ir_in_pi1z);
        assert!(d.pi1_z.contains(&beta(4, 2)));
        assert!(d.reduced_half_set.is_empty());

        assert_eq!(
            compute_pi1_z(&rs, &ns(6, &[2, 3, 4, 5, 6]), &hs(6, &[3, 5])),
            Err(Error::NotReduced { half: vec![3, 5] })
        );
    }

    #[test]
    fn reduce_examples() {
        let rs = c(6);
        let pi1 = ns(6, &[2, 3, 4, 5, 6]);
        assert_eq!(reduce_step(&rs, &pi1, &hs(6, &[3, 5])), Some(hs(6, &[2, 4])));
        // α1 lies outside π₁ but s2 still changes its parity
        assert_eq!(reduce_step(&rs, &pi1, &hs(6, &[2, 4])), Some(hs(6, &[1, 3])));
        let r = reduce_half_set(&rs, &pi1, &hs(6, &[3, 5])).unwrap();
        assert_eq!(r, hs(6, &[1, 3]));
        assert_eq!(r.nodes().intersection(&pi1), ns(6, &[3]));
        let c4 = c(4);
        assert_eq!(reduce_half_set(&c4, &ns(4, &[2, 3]), &hs(4, &[2, 3])).unwrap(), hs(4, &[1, 2]));
        let pi1 = ns(6, &[1, 2, 4, 5]);
        assert_eq!(reduce_half_set(&rs, &pi1, &hs(6, &[1, 3, 5])).unwrap(), hs(6, &[1, 3, 5]));
        assert_eq!(reduce_half_set(&rs, &pi1, &HalfSet::empty()).unwrap(), HalfSet::empty());
    }

    #[test]
    fn reduction_stays_in_the_weyl_orbit() {
        for n in 2..=6 {
            let rs = c(n);
            for m1 in 0..(1u32 << n) - 1 {
                let pi1 = NodeSet::from_mask(n, m1);
                for hm in 0..(1u32 << (n - 1)) {
                    let half = HalfSet(NodeSet::from_mask(n, hm));
                    let orbit = w_orbit(&rs, &pi1, &half);
                    let r = reduce_half_set(&rs, &pi1, &half).unwrap();
                    assert!(is_reduced(&rs, &pi1, &r));
                    assert!(orbit.contains(&r), "C{n} {pi1} {half} -> {r}");
                    assert_eq!(canonical_half_set(&rs, &pi1, &r), canonical_half_set(&rs, &pi1, &half));
                }
            }
        }
    }

    #[test]
    fn c3_classes_and_c6_invariant() {
        let c3 = c(3);
        let pi1 = ns(3, &[1, 2]);
        let orbit = w_orbit(&c3, &pi1, &hs(3, &[1]));
        assert_eq!(orbit, vec![hs(3, &[1]), hs(3, &[1, 2]), hs(3, &[2])]);
        let c6 = c(6);
        let pi1 = ns(6, &[1, 2, 4, 5]);
        let mut classes = BTreeSet::new();
        for hm in 0..(1u32 << 5) {
            classes.insert(canonical_half_set(&c6, &pi1, &HalfSet(NodeSet::from_mask(6, hm))));
        }
        assert_eq!(classes.len(), 8);
    }
}
