//! Gaussian elimination over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Q = BigRational;

pub(crate) fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub(crate) fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

pub(crate) fn rank_int(rows: &[Vec<i64>]) -> usize {
    let m: Vec<Vec<Q>> = rows.iter().map(|r| to_q(r)).collect();
    rank(&m)
}

/// Solution set of `a x = b`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Solution {
    Inconsistent,
    /// A particular solution and a basis of the homogeneous solutions.
    Affine {
        particular: Vec<Q>,
        kernel: Vec<Vec<Q>>,
    },
}

pub(crate) fn solve(a: &[Vec<Q>], b: &[Q], unknowns: usize) -> Solution {
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&unknowns) {
        return Solution::Inconsistent;
    }
    let mut particular = vec![Q::zero(); unknowns];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = m[r][unknowns].clone();
    }
    let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); unknowns];
            v[f] = Q::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][f].clone();
            }
            v
        })
        .collect();
    Solution::Affine { particular, kernel }
}

/// Basis of `{x : a x = 0}`.
pub(crate) fn nullspace(a: &[Vec<Q>], unknowns: usize) -> Vec<Vec<Q>> {
    match solve(a, &vec![Q::zero(); a.len()], unknowns) {
        Solution::Affine { kernel, .. } => kernel,
        Solution::Inconsistent => unreachable!("homogeneous systems are consistent"),
    }
}

/// Scale a rational vector to a primitive integer vector.
pub(crate) fn primitive_integer(v: &[Q]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub(crate) fn abs(x: &Q) -> Q {
    x.abs()
}

/// Serde adapter writing rational vectors as "p/q" strings.
pub(crate) mod qvec_serde {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub(crate) fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.iter().map(|x| x.parse::<Q>().map_err(serde::de::Error::custom)).collect()
    }
}

/// Serde adapter for lists of rational vectors.
pub(crate) mod qmat_serde {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub(crate) fn serialize<S: Serializer>(m: &[Vec<Q>], s: S) -> Result<S::Ok, S::Error> {
        m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Q>>, D::Error> {
        let m: Vec<Vec<String>> = Vec::deserialize(d)?;
        m.iter().map(|r| r.iter().map(|x| x.parse::<Q>().map_err(serde::de::Error::custom)).collect()).collect()
    }
}

/// Serde adapter writing a rational as a "p/q" string.
pub(crate) mod q_serde {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serializer};

    pub(crate) fn serialize<S: Serializer>(v: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        String::deserialize(d)?.parse::<Q>().map_err(serde::de::Error::custom)
    }
}
