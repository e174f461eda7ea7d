//! Degree-sequence predicates.
//!
//! Sequences are stored in canonical nondecreasing order `d_1 ≤ … ≤ d_n`.
//! Positions in the public API are 1-based where they mirror the usual
//! mathematical indexing (`failing_k`, `eg_strength`).

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A degree sequence in canonical nondecreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Sorts `raw` into canonical order after checking `0 ≤ d ≤ n − 1`.
    pub fn normalize(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Empty);
        }
        let max = raw.len() - 1;
        let mut degrees = Vec::with_capacity(raw.len());
        for (index, &degree) in raw.iter().enumerate() {
            if degree < 0 || degree as u64 > max as u64 {
                return Err(Error::InvalidDegree { index, degree, max });
            }
            degrees.push(degree as usize);
        }
        degrees.sort_unstable();
        Ok(Self { degrees })
    }

    /// Same as [`normalize`](Self::normalize) for already-unsigned input.
    pub fn from_degrees(mut degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Empty);
        }
        let max = degrees.len() - 1;
        if let Some((index, &d)) = degrees.iter().enumerate().find(|(_, &d)| d > max) {
            return Err(Error::InvalidDegree {
                index,
                degree: d as i64,
                max,
            });
        }
        degrees.sort_unstable();
        Ok(Self { degrees })
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    /// Always false; the type requires at least one vertex.
    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `d_j` with 1-based `j`.
    pub fn d(&self, j: usize) -> usize {
        self.degrees[j - 1]
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Degrees in nonincreasing order.
    pub fn nonincreasing(&self) -> Vec<usize> {
        self.degrees.iter().rev().copied().collect()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Parses comma-separated decimal integers in any order.
    fn from_str(s: &str) -> Result<Self> {
        let raw = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::normalize(&raw)
    }
}

impl Serialize for DegreeSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.degrees.serialize(serializer)
    }
}

/// Outcome of Chvátal's condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChvatalResult {
    pub satisfied: bool,
    /// Least `k` with `d_k ≤ k` and `d_{n−k} ≤ n − k − 1`.
    pub failing_k: Option<usize>,
}

/// Erdős–Gallai on a nonincreasing slice, checking only `d_n < j ≤ D`.
pub(crate) fn graphical_nonincreasing(d: &[usize]) -> bool {
    let n = d.len();
    if n == 0 {
        return true;
    }
    if d.iter().sum::<usize>() % 2 != 0 {
        return false;
    }
    if d[0] >= n {
        return false;
    }
    let strength = strength_nonincreasing(d);
    let last = d[n - 1];
    let mut prefix: usize = d[..last.min(n)].iter().sum();
    for j in (last + 1)..=strength {
        prefix += d[j - 1];
        let tail: usize = d[j..].iter().map(|&x| x.min(j)).sum();
        if prefix > j * (j - 1) + tail {
            return false;
        }
    }
    true
}

fn strength_nonincreasing(d: &[usize]) -> usize {
    // d_i − i is strictly decreasing, so the admissible indices form a prefix.
    d.iter().enumerate().take_while(|&(i, &x)| x > i).count()
}

/// Whether some simple graph realizes `seq`.
///
/// The Erdős–Gallai inequality is evaluated on the nonincreasing reversal
/// only for `d_n < j ≤ D`; the remaining `j` hold trivially.
pub fn is_graphical(seq: &DegreeSequence) -> bool {
    graphical_nonincreasing(&seq.nonincreasing())
}

/// `D = max{i : d_i ≥ i}` in nonincreasing indexing, or 0 if `d_1 = 0`.
pub fn eg_strength(seq: &DegreeSequence) -> usize {
    strength_nonincreasing(&seq.nonincreasing())
}

/// Chvátal's condition: for each `1 ≤ k ≤ (n−1)/2`, `d_k ≥ k+1` or `d_{n−k} ≥ n−k`.
pub fn chvatal_condition(seq: &DegreeSequence) -> Result<ChvatalResult> {
    let n = seq.len();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let failing_k = (1..)
        .take_while(|&k| 2 * k < n)
        .find(|&k| seq.d(k) <= k && seq.d(n - k) < n - k);
    Ok(ChvatalResult {
        satisfied: failing_k.is_none(),
        failing_k,
    })
}

fn check_chvatal_params(n: usize, k: usize) -> Result<()> {
    if k < 1 || 2 * k > n.saturating_sub(1) {
        return Err(Error::InvalidParams(format!(
            "need 1 <= k <= (n-1)/2, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

pub(crate) fn check_nw_params(n: usize, k: usize) -> Result<()> {
    if n < 5 || k < 2 || 2 * k >= n {
        return Err(Error::InvalidParams(format!(
            "need n >= 5 and 2 <= k < n/2, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Degree sequence of `K_k ∨ (K̄_k ∪ K_{n−2k})`: `k` copies of `k`, `n − 2k`
/// copies of `n − k − 1`, `k` copies of `n − 1`.
pub fn chvatal_extremal_sequence(n: usize, k: usize) -> Result<DegreeSequence> {
    check_chvatal_params(n, k)?;
    let mut degrees = vec![k; k];
    degrees.extend(std::iter::repeat_n(n - k - 1, n - 2 * k));
    degrees.extend(std::iter::repeat_n(n - 1, k));
    DegreeSequence::from_degrees(degrees)
}

/// Entrywise `a_j ≥ b_j` in canonical order.
pub fn majorizes(a: &DegreeSequence, b: &DegreeSequence) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.degrees.iter().zip(&b.degrees).all(|(x, y)| x >= y))
}

/// `d_1 = … = d_k = k` and `d_{k+1} = … = d_{n−k+1} = n − k − 1`.
pub fn matches_nw_shape(seq: &DegreeSequence, k: usize) -> Result<bool> {
    let n = seq.len();
    check_nw_params(n, k)?;
    let low = (1..=k).all(|j| seq.d(j) == k);
    let mid = (k + 1..=n - k + 1).all(|j| seq.d(j) == n - k - 1);
    Ok(low && mid)
}

/// The `k` for which `seq` has the Nash-Williams shape, if any. Only
/// `k = d_1` can qualify.
pub fn nw_shape_k(seq: &DegreeSequence) -> Option<usize> {
    let n = seq.len();
    let k = seq.d(1);
    if check_nw_params(n, k).is_err() {
        return None;
    }
    matches_nw_shape(seq, k).ok().filter(|&m| m).map(|_| k)
}

/// The exceptional shape: additionally `d_j = n − k − 1` for
/// `n − k + 2 ≤ j ≤ n − 1` and `d_n = n − 1`.
pub fn is_exception_sequence(seq: &DegreeSequence, k: usize) -> Result<bool> {
    if !matches_nw_shape(seq, k)? {
        return Err(Error::ShapeMismatch { k });
    }
    let n = seq.len();
    let tail = (n - k + 2..n).all(|j| seq.d(j) == n - k - 1);
    Ok(tail && seq.d(n) == n - 1)
}

/// The unique exceptional sequence for `(n, k)`.
pub fn exception_sequence(n: usize, k: usize) -> Result<DegreeSequence> {
    check_nw_params(n, k)?;
    let mut degrees = vec![k; k];
    degrees.extend(std::iter::repeat_n(n - k - 1, n - k - 1));
    degrees.push(n - 1);
    DegreeSequence::from_degrees(degrees)
}
