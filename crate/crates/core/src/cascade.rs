//! Kostant cascades of simple systems.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::rootsys::{connected_components, RootSystem, RootVec, SimpleSystem};

/// Coordinates of root-lattice vectors over a simple system.
pub(crate) struct Coords<'a> {
    elements: &'a [RootVec],
    /// Positions of the elements when they are all simple roots.
    simple: Option<Vec<usize>>,
    /// `inverse_scaled = G⁻¹ · denom` with G the Gram matrix.
    inverse_scaled: Vec<Vec<i64>>,
    denom: i64,
}

impl<'a> Coords<'a> {
    pub(crate) fn new(rs: &RootSystem, elements: &'a [RootVec]) -> Coords<'a> {
        let simple: Option<Vec<usize>> = elements.iter().map(|e| e.simple_index().map(|i| i - 1)).collect();
        let k = elements.len();
        let (inverse_scaled, denom) = if simple.is_some() || k == 0 {
            (Vec::new(), 1)
        } else {
            let mut m: Vec<Vec<Q>> = (0..k)
                .map(|i| {
                    let mut row: Vec<Q> = (0..k).map(|j| linalg::q(rs.form(&elements[i], &elements[j]))).collect();
                    row.extend((0..k).map(|j| linalg::q(i64::from(i == j))));
                    row
                })
                .collect();
            linalg::rref(&mut m);
            let denom =
                m.iter().flat_map(|r| r[k..].iter()).fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
            let d = Q::from_integer(denom.clone());
            let inv = m
                .iter()
                .map(|r| r[k..].iter().map(|x| (x * &d).to_integer().to_i64().expect("small")).collect())
                .collect();
            (inv, denom.to_i64().expect("small"))
        };
        Coords { elements, simple, inverse_scaled, denom }
    }

    /// Integer coordinates of `x`, when `x` lies in the lattice spanned by the elements.
    pub(crate) fn of(&self, rs: &RootSystem, x: &RootVec) -> Option<Vec<i64>> {
        if let Some(pos) = &self.simple {
            let c: Vec<i64> = pos.iter().map(|&p| x.0[p]).collect();
            let covered: i64 = c.iter().map(|v| v.abs()).sum();
            let total: i64 = x.0.iter().map(|v| v.abs()).sum();
            return (covered == total).then_some(c);
        }
        let v: Vec<i64> = self.elements.iter().map(|e| rs.form(e, x)).collect();
        let mut c = Vec::with_capacity(v.len());
        for row in &self.inverse_scaled {
            let s: i64 = row.iter().zip(&v).map(|(a, b)| a * b).sum();
            if s % self.denom != 0 {
                return None;
            }
            c.push(s / self.denom);
        }
        let mut back = RootVec::zero(rs.rank());
        for (ci, e) in c.iter().zip(self.elements) {
            back = back.add(&e.scale(*ci));
        }
        (back == *x).then_some(c)
    }
}

/// Roots of Δ ∩ ℕ·ss with their coordinates over ss.
pub fn subsystem_positive_roots(rs: &RootSystem, ss: &SimpleSystem) -> Vec<(RootVec, Vec<i64>)> {
    let coords = Coords::new(rs, ss.elements());
    let mut out = Vec::new();
    for p in rs.positive_roots() {
        for r in [p.clone(), p.neg()] {
            if let Some(c) = coords.of(rs, &r) {
                if c.iter().all(|&v| v >= 0) && c.iter().any(|&v| v > 0) {
                    out.push((r, c));
                }
            }
        }
    }
    out
}

/// The unique root of maximal height in Δ ∩ ℕ·ss, for connected ss.
pub fn highest_root(rs: &RootSystem, ss: &SimpleSystem) -> Result<RootVec> {
    if ss.is_empty() || connected_components(rs, ss.elements()).len() != 1 {
        return Err(Error::NotConnected);
    }
    let roots = subsystem_positive_roots(rs, ss);
    let top = roots.iter().map(|(_, c)| c.iter().sum::<i64>()).max().expect("nonempty");
    let mut best = roots.into_iter().filter(|(_, c)| c.iter().sum::<i64>() == top);
    let (beta, _) = best.next().expect("nonempty");
    debug_assert!(best.next().is_none(), "highest root is unique");
    Ok(beta)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cascade {
    roots: Vec<RootVec>,
    parent: SimpleSystem,
}

impl Cascade {
    /// Cascade roots in construction order.
    pub fn roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn parent(&self) -> &SimpleSystem {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Applies the product of the cascade reflections, the longest element of
    /// the Weyl group of the parent system.
    pub fn longest_element(&self, rs: &RootSystem, x: &RootVec) -> RootVec {
        self.roots.iter().fold(x.clone(), |acc, b| rs.reflect(b, &acc))
    }
}

/// Recursive cascade: the highest root of each component, then the cascade of
/// the elements orthogonal to it. Components are visited in order of their
/// first element.
pub fn kostant_cascade(rs: &RootSystem, ss: &SimpleSystem) -> Cascade {
    let mut roots = Vec::new();
    descend(rs, ss, &mut roots);
    Cascade { roots, parent: ss.clone() }
}

fn descend(rs: &RootSystem, ss: &SimpleSystem, out: &mut Vec<RootVec>) {
    for comp in ss.components(rs) {
        let beta = highest_root(rs, &comp).expect("components are connected");
        let rest = comp.filter(|a| rs.form(a, &beta).is_zero());
        out.push(beta);
        descend(rs, &rest, out);
    }
}
