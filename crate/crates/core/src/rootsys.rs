//! Root systems of the simple Lie algebras in Bourbaki numbering.
//!
//! Roots are integer vectors over the simple-root basis. The bilinear form is
//! normalised so that every (α_i, α_j) is an integer.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownType(s.to_string())),
        }
    }

    fn legal_rank(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Integer coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn zero(n: usize) -> RootVec {
        RootVec(vec![0; n])
    }

    /// The simple root α_i, with `i` a 1-based Bourbaki label.
    pub fn simple(n: usize, i: usize) -> RootVec {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        RootVec(v)
    }

    /// α_i + α_{i+1} + … + α_j (1-based, inclusive).
    pub fn interval(n: usize, i: usize, j: usize) -> RootVec {
        let mut v = vec![0; n];
        for x in &mut v[i - 1..j] {
            *x = 1;
        }
        RootVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    /// 1-based labels of the simple roots with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).map(|i| i + 1).collect()
    }

    /// The 1-based label of a simple root, if this is one.
    pub fn simple_index(&self) -> Option<usize> {
        let s = self.support();
        (s.len() == 1 && self.0[s[0] - 1] == 1).then(|| s[0])
    }

    pub fn add(&self, o: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> RootVec {
        RootVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> RootVec {
        RootVec(self.0.iter().map(|a| k * a).collect())
    }

    pub fn to_weight(&self) -> WeightVec {
        WeightVec(linalg::to_q(&self.0))
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Exact rational coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVec(pub Vec<Q>);

impl WeightVec {
    pub fn zero(n: usize) -> WeightVec {
        WeightVec(vec![Q::zero(); n])
    }

    pub fn add(&self, o: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Q) -> WeightVec {
        WeightVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// The integer vector, when every coefficient is an integer.
    pub fn to_root_vec(&self) -> Option<RootVec> {
        self.0
            .iter()
            .map(|c| if c.is_integer() { i64::try_from(c.to_integer()).ok() } else { None })
            .collect::<Option<Vec<_>>>()
            .map(RootVec)
    }

    /// Coefficients rendered as "p/q" strings, for serialisation.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            let a = c.abs();
            if !a.is_one() {
                if a.is_integer() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for WeightVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightVec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.iter()
            .map(|s| s.parse::<Q>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(WeightVec)
    }
}

/// A strictly increasing list of 1-based simple-root labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeSet(Vec<usize>);

impl NodeSet {
    pub fn new(rank: usize, labels: &[usize]) -> Result<NodeSet> {
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(labels.to_vec()));
        }
        if let Some(&bad) = labels.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::IndexOutOfRange { index: bad, rank });
        }
        Ok(NodeSet(labels.to_vec()))
    }

    /// Builds from any collection of labels, sorting and deduplicating.
    pub fn from_iter_unchecked(labels: impl IntoIterator<Item = usize>) -> NodeSet {
        let s: BTreeSet<usize> = labels.into_iter().collect();
        NodeSet(s.into_iter().collect())
    }

    pub fn full(rank: usize) -> NodeSet {
        NodeSet((1..=rank).collect())
    }

    pub fn from_mask(rank: usize, mask: u32) -> NodeSet {
        NodeSet((1..=rank).filter(|i| mask >> (i - 1) & 1 == 1).collect())
    }

    pub fn mask(&self) -> u32 {
        self.0.iter().fold(0, |m, i| m | 1 << (i - 1))
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, o: &NodeSet) -> NodeSet {
        NodeSet::from_iter_unchecked(self.iter().chain(o.iter()))
    }

    pub fn intersection(&self, o: &NodeSet) -> NodeSet {
        NodeSet(self.iter().filter(|&i| o.contains(i)).collect())
    }

    pub fn difference(&self, o: &NodeSet) -> NodeSet {
        NodeSet(self.iter().filter(|&i| !o.contains(i)).collect())
    }

    pub fn is_subset(&self, o: &NodeSet) -> bool {
        self.iter().all(|i| o.contains(i))
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    sym_diag: Vec<i64>,
    gram: Vec<Vec<i64>>,
    positive: Vec<RootVec>,
    members: HashSet<RootVec>,
}

fn gram_matrix(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i - 1][j - 1] = v;
        g[j - 1][i - 1] = v;
    };
    match family {
        Family::A | Family::D | Family::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            match family {
                Family::A => (1..n).for_each(|i| link(&mut g, i, i + 1, -1)),
                Family::D => {
                    (1..n - 1).for_each(|i| link(&mut g, i, i + 1, -1));
                    link(&mut g, n - 2, n, -1);
                }
                _ => {
                    link(&mut g, 1, 3, -1);
                    link(&mut g, 2, 4, -1);
                    (3..n).for_each(|i| link(&mut g, i, i + 1, -1));
                }
            }
        }
        Family::B => {
            // long roots have squared length 4, α_n = ε_n has 2
            for i in 0..n {
                g[i][i] = 4;
            }
            g[n - 1][n - 1] = 2;
            (1..n).for_each(|i| link(&mut g, i, i + 1, -2));
        }
        Family::C => {
            // α_n = 2ε_n is long with squared length 4
            for i in 0..n {
                g[i][i] = 2;
            }
            g[n - 1][n - 1] = 4;
            (1..n - 1).for_each(|i| link(&mut g, i, i + 1, -1));
            link(&mut g, n - 1, n, -2);
        }
        Family::F => {
            g = vec![vec![4, -2, 0, 0], vec![-2, 4, -2, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]];
        }
        Family::G => {
            g = vec![vec![2, -3], vec![-3, 6]];
        }
    }
    g
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<RootSystem> {
        if !family.legal_rank(rank) {
            return Err(Error::IllegalRank { family: family.to_string(), rank });
        }
        let gram = gram_matrix(family, rank);
        let cartan: Vec<Vec<i64>> =
            (0..rank).map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[i][i]).collect()).collect();
        let sym_diag = (0..rank).map(|i| gram[i][i] / 2).collect();
        let mut rs = RootSystem { family, rank, cartan, sym_diag, gram, positive: Vec::new(), members: HashSet::new() };
        rs.enumerate_roots();
        Ok(rs)
    }

    /// Parses labels such as `C6`, `E7`, `g2`, or a bare family with a separate rank.
    pub fn parse(label: &str, rank: Option<usize>) -> Result<RootSystem> {
        let label = label.trim();
        let (fam, digits) = label.split_at(label.find(|c: char| c.is_ascii_digit()).unwrap_or(label.len()));
        let family = Family::parse(fam)?;
        let n = match (digits.is_empty(), rank) {
            (false, Some(r)) => {
                let d: usize = digits.parse().map_err(|_| Error::UnknownType(label.to_string()))?;
                if d != r {
                    return Err(Error::IllegalRank { family: family.to_string(), rank: r });
                }
                d
            }
            (false, None) => digits.parse().map_err(|_| Error::UnknownType(label.to_string()))?,
            (true, Some(r)) => r,
            (true, None) => match family {
                Family::F => 4,
                Family::G => 2,
                _ => return Err(Error::UnknownType(label.to_string())),
            },
        };
        RootSystem::new(family, n)
    }

    /// Every root is the image of a simple root under the Weyl group, so the
    /// orbit of π under the simple reflections is the whole root system.
    fn enumerate_roots(&mut self) {
        let n = self.rank;
        let mut seen: HashSet<RootVec> = HashSet::new();
        let mut queue: VecDeque<RootVec> = (1..=n).map(|i| RootVec::simple(n, i)).collect();
        seen.extend(queue.iter().cloned());
        while let Some(r) = queue.pop_front() {
            for i in 1..=n {
                let s = self.reflect_simple(i, &r);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        let mut pos: Vec<RootVec> = seen.iter().filter(|r| r.is_positive()).cloned().collect();
        pos.sort_by(|a, b| a.height().cmp(&b.height()).then(b.cmp(a)));
        self.members = seen;
        self.positive = pos;
    }

    fn reflect_simple(&self, i: usize, x: &RootVec) -> RootVec {
        let k = (0..self.rank).map(|j| self.cartan[i - 1][j] * x.0[j]).sum::<i64>();
        let mut v = x.0.clone();
        v[i - 1] -= k;
        RootVec(v)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `cartan[i][j] = α_i^∨(α_j)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `d_i = (α_i, α_i) / 2`, so that `d_i * cartan[i][j]` is symmetric.
    pub fn sym_diag(&self) -> &[i64] {
        &self.sym_diag
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// Positive roots ordered by height, ties broken so that α1 precedes α2.
    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive
    }

    pub fn simple(&self, i: usize) -> RootVec {
        RootVec::simple(self.rank, i)
    }

    pub fn simple_roots(&self) -> Vec<RootVec> {
        (1..=self.rank).map(|i| self.simple(i)).collect()
    }

    pub fn is_root(&self, x: &RootVec) -> bool {
        self.members.contains(x)
    }

    pub fn form(&self, x: &RootVec, y: &RootVec) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            if x.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += x.0[i] * self.gram[i][j] * y.0[j];
            }
        }
        s
    }

    pub fn form_weight(&self, x: &WeightVec, y: &WeightVec) -> Q {
        let n = self.rank;
        let mut s = Q::zero();
        for i in 0..n {
            if x.0[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if self.gram[i][j] != 0 && !y.0[j].is_zero() {
                    s += &x.0[i] * &y.0[j] * linalg::q(self.gram[i][j]);
                }
            }
        }
        s
    }

    fn check_len(&self, x: &[impl Sized]) -> Result<()> {
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: x.len() });
        }
        Ok(())
    }

    /// γ^∨(λ) = 2(γ,λ)/(γ,γ) for a root γ.
    pub fn coroot_pairing(&self, gamma: &RootVec, lambda: &WeightVec) -> Result<Q> {
        self.check_len(&gamma.0)?;
        self.check_len(&lambda.0)?;
        if !self.is_root(gamma) {
            return Err(Error::NotARoot(gamma.to_string()));
        }
        Ok(self.form_weight(&gamma.to_weight(), lambda) * linalg::q(2) / linalg::q(self.form(gamma, gamma)))
    }

    /// γ^∨(x) for a root γ and an element x of the root lattice; always an integer.
    pub fn coroot_pairing_root(&self, gamma: &RootVec, x: &RootVec) -> Result<i64> {
        self.check_len(&gamma.0)?;
        self.check_len(&x.0)?;
        if !self.is_root(gamma) {
            return Err(Error::NotARoot(gamma.to_string()));
        }
        Ok(self.pair(gamma, x))
    }

    /// Unchecked integer coroot pairing; `gamma` must be a root.
    pub(crate) fn pair(&self, gamma: &RootVec, x: &RootVec) -> i64 {
        let num = 2 * self.form(gamma, x);
        let den = self.form(gamma, gamma);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// s_γ(x) = x − γ^∨(x) γ.
    pub fn reflect(&self, gamma: &RootVec, x: &RootVec) -> RootVec {
        x.sub(&gamma.scale(self.pair(gamma, x)))
    }

    /// Connected components of the simple-root subset `nodes`, each sorted.
    pub fn node_components(&self, nodes: &NodeSet) -> Vec<NodeSet> {
        let roots: Vec<RootVec> = nodes.iter().map(|i| self.simple(i)).collect();
        connected_components(self, &roots)
            .into_iter()
            .map(|c| NodeSet::from_iter_unchecked(c.into_iter().map(|k| nodes.labels()[k])))
            .collect()
    }
}

/// Partition of `roots` (given by position) into maximal blocks connected by
/// nonzero pairings. Blocks are listed by first position.
pub fn connected_components(rs: &RootSystem, roots: &[RootVec]) -> Vec<Vec<usize>> {
    let k = roots.len();
    let mut comp = vec![usize::MAX; k];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut block = vec![start];
        comp[start] = id;
        let mut idx = 0;
        while idx < block.len() {
            let a = block[idx];
            for b in 0..k {
                if comp[b] == usize::MAX && rs.form(&roots[a], &roots[b]) != 0 {
                    comp[b] = id;
                    block.push(b);
                }
            }
            idx += 1;
        }
        block.sort_unstable();
        out.push(block);
    }
    out
}

/// A set of roots forming a basis of simple roots for the subsystem it spans.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleSystem {
    elements: Vec<RootVec>,
}

impl SimpleSystem {
    pub fn new(rs: &RootSystem, elements: Vec<RootVec>) -> Result<SimpleSystem> {
        for e in &elements {
            if !rs.is_root(e) {
                return Err(Error::NotARoot(e.to_string()));
            }
        }
        for (a, x) in elements.iter().enumerate() {
            for y in &elements[a + 1..] {
                if x == y {
                    return Err(Error::InvalidSimpleSystem(format!("{x} repeated")));
                }
                if rs.form(x, y) > 0 {
                    return Err(Error::InvalidSimpleSystem(format!("({x}, {y}) > 0")));
                }
            }
        }
        let rows: Vec<Vec<i64>> = elements.iter().map(|e| e.0.clone()).collect();
        if linalg::rank_int(&rows) != elements.len() {
            return Err(Error::InvalidSimpleSystem("elements are linearly dependent".into()));
        }
        Ok(SimpleSystem { elements })
    }

    /// The simple roots with the given labels.
    pub fn from_nodes(rs: &RootSystem, nodes: &NodeSet) -> SimpleSystem {
        SimpleSystem { elements: nodes.iter().map(|i| rs.simple(i)).collect() }
    }

    pub fn elements(&self) -> &[RootVec] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &RootVec) -> bool {
        self.elements.contains(x)
    }

    pub fn position(&self, x: &RootVec) -> Option<usize> {
        self.elements.iter().position(|e| e == x)
    }

    pub fn components(&self, rs: &RootSystem) -> Vec<SimpleSystem> {
        connected_components(rs, &self.elements)
            .into_iter()
            .map(|c| SimpleSystem { elements: c.into_iter().map(|k| self.elements[k].clone()).collect() })
            .collect()
    }

    /// Sub-system of the elements satisfying `keep`, order preserved.
    pub fn filter(&self, keep: impl Fn(&RootVec) -> bool) -> SimpleSystem {
        SimpleSystem { elements: self.elements.iter().filter(|e| keep(e)).cloned().collect() }
    }

    /// Whether every component is of type A: a chain of simply laced links.
    pub fn is_type_a(&self, rs: &RootSystem) -> bool {
        self.components(rs).iter().all(|c| {
            let e = &c.elements;
            let mut degree = vec![0; e.len()];
            for a in 0..e.len() {
                for b in a + 1..e.len() {
                    if rs.form(&e[a], &e[b]) != 0 {
                        if rs.pair(&e[a], &e[b]) * rs.pair(&e[b], &e[a]) != 1 {
                            return false;
                        }
                        degree[a] += 1;
                        degree[b] += 1;
                    }
                }
            }
            degree.iter().all(|&d| d <= 2)
        })
    }

    /// Gram matrix of the bilinear form on the elements.
    pub fn gram(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        self.elements.iter().map(|x| self.elements.iter().map(|y| rs.form(x, y)).collect()).collect()
    }
}

/// The diagram involution −w of `ss`, as a permutation of element positions.
/// w is the product of the reflections in the cascade of `ss`, which is the
/// longest element of the Weyl group of `ss`.
pub fn diagram_involution(rs: &RootSystem, ss: &SimpleSystem) -> Vec<usize> {
    let cascade = crate::cascade::kostant_cascade(rs, ss);
    ss.elements
        .iter()
        .map(|a| {
            let image = cascade.longest_element(rs, a).neg();
            ss.position(&image).expect("-w permutes a simple system")
        })
        .collect()
}
