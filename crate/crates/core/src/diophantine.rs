//! Hilbert bases of monoids {m ∈ ℕ^k : Σ m_i a_i = 0}.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Default bound on the total degree Σm explored by [`hilbert_basis`].
pub const DEGREE_BUDGET: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidProblem {
    vectors: Vec<Vec<i64>>,
}

impl MonoidProblem {
    pub fn new(vectors: Vec<Vec<i64>>) -> Result<MonoidProblem> {
        let Some(first) = vectors.first() else {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        };
        let d = first.len();
        if let Some(v) = vectors.iter().find(|v| v.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, got: v.len() });
        }
        Ok(MonoidProblem { vectors })
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn k(&self) -> usize {
        self.vectors.len()
    }

    pub fn d(&self) -> usize {
        self.vectors[0].len()
    }

    /// Σ m_i a_i.
    pub fn image(&self, m: &[u32]) -> Vec<i64> {
        let mut s = vec![0i64; self.d()];
        for (mi, a) in m.iter().zip(&self.vectors) {
            for (x, y) in s.iter_mut().zip(a) {
                *x += i64::from(*mi) * y;
            }
        }
        s
    }

    pub fn is_member(&self, m: &ExponentVector) -> bool {
        m.0.len() == self.k() && self.image(&m.0).iter().all(|&x| x == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise ≥.
    pub fn dominates(&self, o: &ExponentVector) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a >= b)
    }

    /// Monomial in the given generator names, e.g. "p2^2p4^2p6".
    pub fn monomial(&self, names: &[String]) -> String {
        let mut s = String::new();
        for (e, name) in self.0.iter().zip(names) {
            match e {
                0 => {}
                1 => s.push_str(name),
                _ => s.push_str(&format!("{name}^{e}")),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum HilbertOutcome {
    Basis(Vec<ExponentVector>),
    /// The search reached total degree `budget` with candidates left.
    BudgetExceeded {
        budget: u32,
        found: Vec<ExponentVector>,
    },
}

impl HilbertOutcome {
    pub fn basis(&self) -> Option<&[ExponentVector]> {
        match self {
            HilbertOutcome::Basis(b) => Some(b),
            HilbertOutcome::BudgetExceeded { .. } => None,
        }
    }
}

pub fn hilbert_basis(problem: &MonoidProblem) -> HilbertOutcome {
    hilbert_basis_with_budget(problem, DEGREE_BUDGET)
}

/// Contejean–Devie completion: from a non-solution m, only add e_j when
/// ⟨Am, a_j⟩ < 0, and drop candidates dominating a solution already found.
pub fn hilbert_basis_with_budget(problem: &MonoidProblem, budget: u32) -> HilbertOutcome {
    let k = problem.k();
    let a = problem.vectors();
    let mut basis: Vec<ExponentVector> = Vec::new();
    let mut frontier: BTreeSet<Vec<u32>> = (0..k)
        .map(|i| {
            let mut e = vec![0u32; k];
            e[i] = 1;
            e
        })
        .collect();
    let mut degree = 1;
    while !frontier.is_empty() {
        if degree > budget {
            basis.sort();
            return HilbertOutcome::BudgetExceeded { budget, found: basis };
        }
        let mut open = Vec::new();
        for m in frontier {
            let img = problem.image(&m);
            if img.iter().all(|&x| x == 0) {
                basis.push(ExponentVector(m));
            } else {
                open.push((m, img));
            }
        }
        let mut next = BTreeSet::new();
        for (m, img) in open {
            for (j, aj) in a.iter().enumerate() {
                let dot: i64 = img.iter().zip(aj).map(|(x, y)| x * y).sum();
                if dot >= 0 {
                    continue;
                }
                let mut c = m.clone();
                c[j] += 1;
                let cand = ExponentVector(c);
                if !basis.iter().any(|b| cand.dominates(b)) {
                    next.insert(cand.0);
                }
            }
        }
        frontier = next;
        degree += 1;
    }
    basis.sort();
    HilbertOutcome::Basis(basis)
}

/// A relation Σ lhs·b = Σ rhs·b between basis elements, with disjoint supports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Freeness {
    pub free: bool,
    /// Rank of the group generated by the monoid.
    pub rank: usize,
    pub relation: Option<Relation>,
}

/// A saturated monoid is free exactly when its Hilbert basis is linearly
/// independent; otherwise an integer relation among the basis is returned.
pub fn is_free_monoid(basis: &[ExponentVector]) -> Freeness {
    let rows: Vec<Vec<i64>> = basis.iter().map(|b| b.0.iter().map(|&x| i64::from(x)).collect()).collect();
    let rank = linalg::rank_int(&rows);
    if rank == basis.len() {
        return Freeness { free: true, rank, relation: None };
    }
    // kernel of the transpose: coefficients c with Σ c_i b_i = 0
    let k = basis.first().map_or(0, |b| b.0.len());
    let t: Vec<Vec<linalg::Q>> =
        (0..k).map(|col| basis.iter().map(|b| linalg::q(i64::from(b.0[col]))).collect()).collect();
    let ker = linalg::nullspace(&t, basis.len());
    let c = linalg::primitive_integer(&ker[0]);
    let (mut lhs, mut rhs) = (vec![0u64; basis.len()], vec![0u64; basis.len()]);
    for (i, x) in c.iter().enumerate() {
        let v = x.abs().to_u64().expect("small");
        if x.is_positive() {
            lhs[i] = v;
        } else if !x.is_zero() {
            rhs[i] = v;
        }
    }
    Freeness { free: false, rank, relation: Some(Relation { lhs, rhs }) }
}

/// Minimal nonzero solutions among all exponent vectors of total degree at
/// most `max_degree`, by exhaustive enumeration.
pub fn brute_force_minimal(problem: &MonoidProblem, max_degree: u32) -> Vec<ExponentVector> {
    let k = problem.k();
    let mut sols: Vec<ExponentVector> = Vec::new();
    let mut m = vec![0u32; k];
    fn rec(p: &MonoidProblem, i: usize, left: u32, m: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if i == m.len() {
            if m.iter().any(|&x| x > 0) && p.image(m).iter().all(|&x| x == 0) {
                out.push(ExponentVector(m.clone()));
            }
            return;
        }
        for e in 0..=left {
            m[i] = e;
            rec(p, i + 1, left - e, m, out);
        }
        m[i] = 0;
    }
    rec(problem, 0, max_degree, &mut m, &mut sols);
    let mut min: Vec<ExponentVector> =
        sols.iter().filter(|s| !sols.iter().any(|t| t != *s && s.dominates(t))).cloned().collect();
    min.sort();
    min
}
