//! Integer partitions and the symmetric-group combinatorics built on them.

mod characters;
mod hooks;

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::scalar::{factorial, Rational};
use crate::error::{Error, Result};

pub use characters::{character, theta, theta_sides};
pub use hooks::{rim_hooks, RimHook};

/// Weakly decreasing list of positive parts. Serializes as a JSON array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The hook `alpha_a = (a+1, 1, ..., 1)` of size `d`.
    pub fn hook(a: usize, d: usize) -> Self {
        assert!(a < d, "hook arm {a} too long for size {d}");
        let mut parts = vec![a + 1];
        parts.extend(std::iter::repeat(1).take(d - 1 - a));
        Partition { parts }
    }

    pub fn row(d: usize) -> Self {
        Partition { parts: vec![d] }
    }

    pub fn column(d: usize) -> Self {
        Partition { parts: vec![1; d] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    pub fn conjugate(&self) -> Self {
        let n = self.part(0);
        Partition {
            parts: (0..n)
                .map(|j| self.parts.iter().filter(|&&p| p > j).count())
                .collect(),
        }
    }

    /// Cells as `(row, column)`, rows top to bottom.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Cells to the right of `(i, j)` in its row.
    pub fn arm(&self, i: usize, j: usize) -> usize {
        self.part(i) - j - 1
    }

    /// Cells below `(i, j)` in its column.
    pub fn leg(&self, i: usize, j: usize) -> usize {
        self.parts.iter().skip(i + 1).filter(|&&p| p > j).count()
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        self.cells().map(|(i, j)| self.arm(i, j) + self.leg(i, j) + 1).collect()
    }

    /// Removes one part equal to `k`.
    pub fn without_part(&self, k: usize) -> Option<Self> {
        let pos = self.parts.iter().position(|&p| p == k)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    pub fn with_part(&self, k: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.push(k);
        Partition::from_unsorted(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `d` in reverse lexicographic order, `(d)` first.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// Centralizer order `prod mu_i * prod_r m_r!`.
pub fn z_of(mu: &Partition) -> Rational {
    Rational::from_integer(z_int(mu))
}

pub(crate) fn z_int(mu: &Partition) -> BigInt {
    let mut z: BigInt = mu.parts.iter().map(|&p| BigInt::from(p)).product();
    let mut i = 0;
    while i < mu.parts.len() {
        let k = mu.parts[i];
        let m = mu.multiplicity(k);
        z *= factorial(m as u64);
        i += m;
    }
    z
}

/// Degree of the irreducible representation, by the hook length formula.
pub fn dim_of(mu: &Partition) -> BigInt {
    let hooks: BigInt = mu.hook_lengths().into_iter().map(BigInt::from).product();
    factorial(mu.size() as u64) / hooks
}

/// Sum over cells of `column - row`.
///
/// A cell in column `a` and row `b` is the monomial `x1^a x2^b`, so this is
/// the `(i - j)` content with `i` the `x1` exponent.
pub fn content_weight(lambda: &Partition) -> i64 {
    lambda.cells().map(|(r, c)| c as i64 - r as i64).sum()
}
