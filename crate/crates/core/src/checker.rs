//! The staged exclusion pipeline for type-C parabolics: h_Γ, orbit counts,
//! polynomiality of the invariant monoid and the factorisation property.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diophantine::{hilbert_basis, is_free_monoid, ExponentVector, HilbertOutcome, MonoidProblem, Relation};
use crate::error::{Error, Result};
use crate::integral_pairs::{compute_pi1_z, reduce_half_set, HalfSet, IntegralPairData};
use crate::linalg;
use crate::rootsys::{diagram_involution, Family, NodeSet, RootSystem, RootVec, SimpleSystem};
use crate::semiinvariant_weights::{integral_generators, pairing_table, parabolic_generators, GeneratorInfo};

/// Default rank guard for [`integrality_sweep`].
pub const DEFAULT_MAX_RANK: usize = 8;

/// The guard from `CASCADE_KIT_MAX_RANK`, or [`DEFAULT_MAX_RANK`].
pub fn max_rank_from_env() -> usize {
    std::env::var("CASCADE_KIT_MAX_RANK").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_RANK)
}

/// A basis of h_Γ given by coroots α^∨ of the listed roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HGamma {
    pub coroots: Vec<RootVec>,
}

impl HGamma {
    pub fn from_labels(rs: &RootSystem, labels: &[usize]) -> Result<HGamma> {
        Ok(HGamma { coroots: crate::semiinvariant_weights::coroots_of(rs, labels)? })
    }

    pub fn dim(&self) -> usize {
        self.coroots.len()
    }

    /// Simple-root labels of the coroots, where they are simple.
    pub fn labels(&self) -> Vec<usize> {
        self.coroots.iter().filter_map(RootVec::simple_index).collect()
    }
}

fn require_c(rs: &RootSystem) -> Result<()> {
    if rs.family() == Family::C {
        Ok(())
    } else {
        Err(Error::Unsupported("a type C root system".into()))
    }
}

fn check_half_range(rs: &RootSystem, half: &HalfSet) -> Result<()> {
    let n = rs.rank();
    match half.indices().iter().find(|&&i| i == 0 || i >= n) {
        Some(&i) => Err(Error::IndexOutOfRange { index: i, rank: n - 1 }),
        None => Ok(()),
    }
}

/// α_i^∨ for i ∈ π̄^½ ∩ π₁; `half` must be reduced.
pub fn h_gamma_basis(rs: &RootSystem, pi1: &NodeSet, half: &HalfSet) -> Result<HGamma> {
    let data = compute_pi1_z(rs, pi1, half)?;
    Ok(h_gamma_of(rs, pi1, &data))
}

fn h_gamma_of(rs: &RootSystem, pi1: &NodeSet, data: &IntegralPairData) -> HGamma {
    let labels: Vec<usize> = data.reduced_half_set.indices().iter().copied().filter(|&i| pi1.contains(i)).collect();
    HGamma { coroots: labels.iter().map(|&i| rs.simple(i)).collect() }
}

/// Number of orbits of the diagram involution of `ss` on its elements.
fn involution_orbit_count(rs: &RootSystem, ss: &SimpleSystem) -> usize {
    ss.components(rs)
        .iter()
        .map(|c| {
            let perm = diagram_involution(rs, c);
            perm.iter().enumerate().filter(|&(i, &j)| i <= j).count()
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    /// rℓ(q): orbits on π, with i₁ extended by the identity.
    pub rl: usize,
    /// rℓ(q_Z): orbits on π^Z.
    pub rl_z: usize,
    /// Orbits of i_{π₁} on π₁.
    pub s: usize,
    /// Orbits of i_{π₁^Z} on π₁^Z.
    pub s_z: usize,
    /// |π̄^½ ∩ π₁|.
    pub bar_half_in_pi1: usize,
    pub dim_h_gamma: usize,
    /// rℓ(q_Z) − rℓ(q).
    pub diff: i64,
    /// diff = (s^Z − s) + |π̄^½ ∩ π₁|.
    pub identity_holds: bool,
    /// Type-A components of π₁ whose π₁^Z part is A_m × A_n with m, n even.
    pub even_even_components: Vec<NodeSet>,
}

impl CountReport {
    pub fn fails(&self) -> bool {
        self.diff < self.dim_h_gamma as i64
    }
}

fn count_report(rs: &RootSystem, pi1: &NodeSet, data: &IntegralPairData, hg: &HGamma) -> CountReport {
    let n = rs.rank();
    let pi1_ss = SimpleSystem::from_nodes(rs, pi1);
    let s = involution_orbit_count(rs, &pi1_ss);
    let s_z = involution_orbit_count(rs, &data.pi1_z);
    let rl = s + n - pi1.len();
    let rl_z = s_z + data.pi_z.len() - data.pi1_z.len();
    let bar = hg.dim();
    let diff = rl_z as i64 - rl as i64;
    let identity_holds = diff == s_z as i64 - s as i64 + bar as i64;
    let mut even_even_components = Vec::new();
    for comp in rs.node_components(pi1) {
        if comp.contains(n) || !comp.iter().any(|i| data.half_set.contains(i)) {
            continue;
        }
        let inside = data.pi1_z.filter(|x| x.support().iter().all(|&i| comp.contains(i)));
        let parts = inside.components(rs);
        let mut sizes: Vec<usize> = parts.iter().map(SimpleSystem::len).collect();
        sizes.resize(2, 0);
        if parts.len() <= 2 && sizes.iter().all(|m| m % 2 == 0) {
            even_even_components.push(comp);
        }
    }
    CountReport {
        rl,
        rl_z,
        s,
        s_z,
        bar_half_in_pi1: bar,
        dim_h_gamma: hg.dim(),
        diff,
        identity_holds,
        even_even_components,
    }
}

/// Orbit counts for a reduced `half`.
pub fn count_check(rs: &RootSystem, pi1: &NodeSet, half: &HalfSet) -> Result<CountReport> {
    require_c(rs)?;
    let data = compute_pi1_z(rs, pi1, half)?;
    let hg = h_gamma_of(rs, pi1, &data);
    Ok(count_report(rs, pi1, &data, &hg))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    NoHatFactor,
    SeveralHatFactors,
    HatExponent,
}

/// The first Hilbert basis element breaking the factorisation rule for the
/// partition whose scalar part Q is `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionFailure {
    /// Generator positions (0-based) forming Q.
    pub q: Vec<usize>,
    /// Position in the Hilbert basis.
    pub element: usize,
    pub violation: Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationReport {
    pub passed: bool,
    /// Q of the first partition that works.
    pub partition: Option<Vec<usize>>,
    pub legal_partitions: usize,
    pub failures: Vec<PartitionFailure>,
}

/// Choices of Q with |Q| = `dim`, independent pairing vectors, and
/// |P̂| = `rl_q`, in lex order.
pub fn legal_partitions(vectors: &[Vec<i64>], dim: usize, rl_q: usize) -> Vec<Vec<usize>> {
    let k = vectors.len();
    if k < dim || k - dim != rl_q {
        return Vec::new();
    }
    (0..k)
        .combinations(dim)
        .filter(|q| {
            let rows: Vec<Vec<i64>> = q.iter().map(|&i| vectors[i].clone()).collect();
            linalg::rank_int(&rows) == dim
        })
        .collect()
}

/// How `element` breaks the rule "exactly one P̂ factor, to the first power".
pub fn violation(q: &[usize], element: &ExponentVector) -> Option<Violation> {
    let hats: Vec<u32> =
        element.0.iter().enumerate().filter(|(i, _)| !q.contains(i)).map(|(_, &e)| e).filter(|&e| e > 0).collect();
    match hats.as_slice() {
        [] => Some(Violation::NoHatFactor),
        [1] => None,
        [_] => Some(Violation::HatExponent),
        _ => Some(Violation::SeveralHatFactors),
    }
}

pub fn factorization_on_basis(
    vectors: &[Vec<i64>],
    basis: &[ExponentVector],
    dim: usize,
    rl_q: usize,
) -> FactorizationReport {
    let parts = legal_partitions(vectors, dim, rl_q);
    let mut failures = Vec::new();
    for q in &parts {
        match basis.iter().enumerate().find_map(|(e, b)| violation(q, b).map(|v| (e, v))) {
            Some((element, violation)) => failures.push(PartitionFailure { q: q.clone(), element, violation }),
            None => {
                return FactorizationReport {
                    passed: true,
                    partition: Some(q.clone()),
                    legal_partitions: parts.len(),
                    failures,
                };
            }
        }
    }
    FactorizationReport { passed: false, partition: None, legal_partitions: parts.len(), failures }
}

/// The factorisation test on the Hilbert basis of the monoid of pairing
/// vectors. `None` when the Hilbert basis exceeds the degree budget.
pub fn factorization_test(vectors: &[Vec<i64>], dim: usize, rl_q: usize) -> Result<Option<FactorizationReport>> {
    let problem = MonoidProblem::new(vectors.to_vec())?;
    Ok(hilbert_basis(&problem).basis().map(|b| factorization_on_basis(vectors, b, dim, rl_q)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Stage {
    RLEqual,
    CountFail,
    NotPolynomial,
    FactorizationFail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    IntegralTrivially,
    Excluded(Stage),
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    None,
    Counts(CountReport),
    NotFree { vectors: Vec<Vec<i64>>, basis: Vec<ExponentVector>, relation: Relation },
    Factorization { vectors: Vec<Vec<i64>>, basis: Vec<ExponentVector>, report: FactorizationReport },
    BudgetExceeded { vectors: Vec<Vec<i64>>, budget: u32 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub half_set: HalfSet,
    pub reduced: HalfSet,
    pub status: Status,
    pub h_gamma: Vec<usize>,
    pub counts: Option<CountReport>,
    pub generators: Vec<GeneratorInfo>,
    pub witness: Witness,
}

impl Verdict {
    pub fn is_excluded(&self) -> bool {
        matches!(self.status, Status::Excluded(_))
    }

    /// Generator labels, in pairing-vector order.
    pub fn generator_names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.label.clone()).collect()
    }
}

/// Polynomiality and factorisation stages on given pairing vectors.
fn algebra_stages(vectors: Vec<Vec<i64>>, dim: usize, rl_q: usize) -> Result<(Status, Witness)> {
    let problem = MonoidProblem::new(vectors.clone())?;
    let basis = match hilbert_basis(&problem) {
        HilbertOutcome::Basis(b) => b,
        HilbertOutcome::BudgetExceeded { budget, .. } => {
            return Ok((Status::Inconclusive, Witness::BudgetExceeded { vectors, budget }));
        }
    };
    let free = is_free_monoid(&basis);
    if let Some(relation) = free.relation {
        return Ok((Status::Excluded(Stage::NotPolynomial), Witness::NotFree { vectors, basis, relation }));
    }
    let report = factorization_on_basis(&vectors, &basis, dim, rl_q);
    let status = if report.passed { Status::Inconclusive } else { Status::Excluded(Stage::FactorizationFail) };
    Ok((status, Witness::Factorization { vectors, basis, report }))
}

/// Runs the pipeline on one half set of a type-C parabolic with Levi part π₁.
pub fn check_half_set(rs: &RootSystem, pi1: &NodeSet, half: &HalfSet) -> Result<Verdict> {
    require_c(rs)?;
    check_half_range(rs, half)?;
    let n = rs.rank();
    if !pi1.is_subset(&NodeSet::full(n)) || pi1.len() == n {
        return Err(Error::StandingHypothesis("pi1 must be a proper subset of π".into()));
    }
    let mut verdict = Verdict {
        half_set: half.clone(),
        reduced: half.clone(),
        status: Status::IntegralTrivially,
        h_gamma: Vec::new(),
        counts: None,
        generators: Vec::new(),
        witness: Witness::None,
    };
    if half.is_empty() {
        return Ok(verdict);
    }
    let reduced = reduce_half_set(rs, pi1, half)?;
    let data = compute_pi1_z(rs, pi1, &reduced)?;
    let hg = h_gamma_of(rs, pi1, &data);
    let counts = count_report(rs, pi1, &data, &hg);
    verdict.reduced = reduced;
    verdict.h_gamma = hg.labels();
    verdict.counts = Some(counts.clone());
    if hg.dim() == 0 {
        verdict.status = Status::Excluded(Stage::RLEqual);
        verdict.witness = Witness::Counts(counts);
        return Ok(verdict);
    }
    if counts.fails() {
        verdict.status = Status::Excluded(Stage::CountFail);
        verdict.witness = Witness::Counts(counts);
        return Ok(verdict);
    }
    let gens = integral_generators(rs, &data, &hg.coroots)?;
    let vectors = gens.iter().map(|g| g.pairing_vector.clone()).collect();
    let (status, witness) = algebra_stages(vectors, hg.dim(), counts.rl)?;
    verdict.generators = gens;
    verdict.status = status;
    verdict.witness = witness;
    Ok(verdict)
}

/// Polynomiality and factorisation only, for caller-supplied generators and h_Γ.
pub fn check_with_explicit_hgamma(
    rs: &RootSystem,
    gens: &[GeneratorInfo],
    hg: &HGamma,
    rl_q: usize,
) -> Result<Verdict> {
    let vectors = pairing_table(rs, gens, &hg.coroots)?;
    let vectors = if hg.dim() == 0 { vec![Vec::new(); gens.len()] } else { vectors };
    let (status, witness) = algebra_stages(vectors, hg.dim(), rl_q)?;
    Ok(Verdict {
        half_set: HalfSet::empty(),
        reduced: HalfSet::empty(),
        status,
        h_gamma: hg.labels(),
        counts: None,
        generators: gens.to_vec(),
        witness,
    })
}

fn combine(basis: &[ExponentVector], coeffs: &[u64]) -> Vec<u64> {
    let k = basis.first().map_or(0, |b| b.0.len());
    let mut s = vec![0u64; k];
    for (c, b) in coeffs.iter().zip(basis) {
        for (x, y) in s.iter_mut().zip(&b.0) {
            *x += c * u64::from(*y);
        }
    }
    s
}

/// Recomputes the verdict for (π₁, half) and checks that its witness holds
/// up on its own terms.
pub fn reverify(rs: &RootSystem, pi1: &NodeSet, verdict: &Verdict) -> Result<bool> {
    let fresh = check_half_set(rs, pi1, &verdict.half_set)?;
    if fresh.status != verdict.status || fresh.generators != verdict.generators {
        return Ok(false);
    }
    Ok(witness_holds(verdict))
}

/// Checks a witness against the data it carries.
pub fn witness_holds(verdict: &Verdict) -> bool {
    let member = |vectors: &[Vec<i64>], b: &ExponentVector| {
        MonoidProblem::new(vectors.to_vec()).map(|p| p.is_member(b)).unwrap_or(false)
    };
    match (&verdict.status, &verdict.witness) {
        (Status::IntegralTrivially, Witness::None) => verdict.half_set.is_empty(),
        (Status::Excluded(Stage::RLEqual), Witness::Counts(c)) => c.dim_h_gamma == 0,
        (Status::Excluded(Stage::CountFail), Witness::Counts(c)) => c.fails() && c.dim_h_gamma > 0,
        (Status::Excluded(Stage::NotPolynomial), Witness::NotFree { vectors, basis, relation }) => {
            let lhs = combine(basis, &relation.lhs);
            basis.iter().all(|b| member(vectors, b))
                && relation.lhs.iter().zip(&relation.rhs).all(|(a, b)| *a == 0 || *b == 0)
                && lhs.iter().any(|&x| x > 0)
                && lhs == combine(basis, &relation.rhs)
        }
        (Status::Excluded(Stage::FactorizationFail), Witness::Factorization { vectors, basis, report }) => {
            let dim = verdict.h_gamma.len();
            let rl = vectors.len().saturating_sub(dim);
            let parts = legal_partitions(vectors, dim, rl);
            !report.passed
                && basis.iter().all(|b| member(vectors, b))
                && parts.len() == report.failures.len()
                && parts
                    .iter()
                    .zip(&report.failures)
                    .all(|(q, f)| *q == f.q && basis.get(f.element).and_then(|b| violation(q, b)) == Some(f.violation))
        }
        (Status::Inconclusive, _) => true,
        _ => false,
    }
}

/// Verdict for a whole class of half sets sharing a reduced representative.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassResult {
    pub representative: HalfSet,
    pub members: Vec<HalfSet>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub label: String,
    pub pi1: NodeSet,
    pub rl_q: usize,
    pub classes: Vec<ClassResult>,
    pub certified: bool,
    pub inconclusive: Vec<HalfSet>,
}

/// Checks every half set in [1, n−1], grouped by reduced representative.
pub fn integrality_sweep(rs: &RootSystem, pi1: &NodeSet, max_rank: usize) -> Result<CertifyReport> {
    require_c(rs)?;
    let n = rs.rank();
    if n > max_rank {
        return Err(Error::GuardExceeded { rank: n, max: max_rank });
    }
    if !pi1.is_subset(&NodeSet::full(n)) || pi1.len() == n {
        return Err(Error::StandingHypothesis("pi1 must be a proper subset of π".into()));
    }
    let mut groups: Vec<(HalfSet, Vec<HalfSet>)> = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let half = HalfSet::from_nodes(NodeSet::from_mask(n, mask));
        let rep = if half.is_empty() { half.clone() } else { reduce_half_set(rs, pi1, &half)? };
        match groups.iter_mut().find(|(r, _)| *r == rep) {
            Some((_, m)) => m.push(half),
            None => groups.push((rep, vec![half])),
        }
    }
    groups.sort_by(|a, b| (a.0.len(), a.0.indices()).cmp(&(b.0.len(), b.0.indices())));
    let classes: Vec<ClassResult> = groups
        .into_par_iter()
        .map(|(rep, mut members)| {
            members.sort_by(|a, b| (a.len(), a.indices()).cmp(&(b.len(), b.indices())));
            check_half_set(rs, pi1, &rep).map(|verdict| ClassResult { representative: rep, members, verdict })
        })
        .collect::<Result<_>>()?;
    let inconclusive: Vec<HalfSet> =
        classes.iter().filter(|c| c.verdict.status == Status::Inconclusive).map(|c| c.representative.clone()).collect();
    let rl_q = involution_orbit_count(rs, &SimpleSystem::from_nodes(rs, pi1)) + n - pi1.len();
    Ok(CertifyReport {
        label: rs.label(),
        pi1: pi1.clone(),
        rl_q,
        certified: inconclusive.is_empty(),
        classes,
        inconclusive,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shortcut {
    Integral,
    NotApplicable,
}

/// Integrality holds outright when every component of π₁ and of π₂ is of type A.
pub fn type_a_shortcut(rs: &RootSystem, pi1: &NodeSet, pi2: &NodeSet) -> Result<Shortcut> {
    let all = NodeSet::full(rs.rank());
    for s in [pi1, pi2] {
        if let Some(&i) = s.labels().iter().find(|&&i| !all.contains(i)) {
            return Err(Error::IndexOutOfRange { index: i, rank: rs.rank() });
        }
    }
    let type_a = |s: &NodeSet| SimpleSystem::from_nodes(rs, s).components(rs).iter().all(|c| c.is_type_a(rs));
    Ok(if type_a(pi1) && type_a(pi2) { Shortcut::Integral } else { Shortcut::NotApplicable })
}

/// Generators of Sy(q) of the parabolic, for reporting rℓ(q) alongside a verdict.
pub fn parabolic_generator_count(rs: &RootSystem, pi1: &NodeSet) -> Result<usize> {
    Ok(parabolic_generators(rs, pi1, &[])?.len())
}
