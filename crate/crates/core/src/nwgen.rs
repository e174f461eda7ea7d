//! Nash-Williams `(n, k)`-sequences.
//!
//! Each admissible modifier `π′` (a nondecreasing length-`(k−1)` sequence
//! over `{0, …, k−1}` other than `(0, …, 0, k−1)`) is added to the last
//! `k − 1` terms of the foundational sequence whose sum has the same parity
//! as `π′`. The result is graphical, has the Nash-Williams shape at `k`, and
//! fails Chvátal's condition at `k`.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::binomial;
use num_rational::Ratio;

use crate::degseq::{check_nw_params, DegreeSequence};
use crate::error::{Error, Result};

/// Validated `(n, k)` with `n ≥ 5` and `2 ≤ k < n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NwParams {
    n: usize,
    k: usize,
}

impl NwParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_nw_params(n, k)?;
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// All valid `k` for a given `n`, ascending.
    pub fn all_for(n: usize) -> impl Iterator<Item = NwParams> {
        (2..)
            .take_while(move |&k| 2 * k < n)
            .filter_map(move |k| Self::new(n, k).ok())
    }
}

/// A tail modifier `π′`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiPrime {
    entries: Vec<usize>,
}

impl PiPrime {
    /// Validates `entries` as a modifier for parameter `k`.
    pub fn new(entries: Vec<usize>, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParams(format!("need k >= 2, got {k}")));
        }
        if entries.len() != k - 1 {
            return Err(Error::InvalidPiPrime(format!(
                "length must be k - 1 = {}, got {}",
                k - 1,
                entries.len()
            )));
        }
        if let Some(&e) = entries.iter().find(|&&e| e > k - 1) {
            return Err(Error::InvalidPiPrime(format!(
                "entry {e} exceeds k - 1 = {}",
                k - 1
            )));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPiPrime(
                "entries must be nondecreasing".into(),
            ));
        }
        if is_excluded(&entries, k) {
            return Err(Error::InvalidPiPrime(format!(
                "({}) is excluded: it would produce the exceptional sequence",
                join(&entries)
            )));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn is_excluded(entries: &[usize], k: usize) -> bool {
    match entries.split_last() {
        Some((&last, rest)) => last == k - 1 && rest.iter().all(|&e| e == 0),
        None => false,
    }
}

/// The two foundational sequences: `k` copies of `k`, then `n − k − 1` up to
/// position `n − 1`, then a final term of `n − k − 1` or `n − k`.
pub fn foundational_sequences(p: NwParams) -> (DegreeSequence, DegreeSequence) {
    let (n, k) = (p.n, p.k);
    let mut base = vec![k; k];
    base.extend(std::iter::repeat_n(n - k - 1, n - k));
    let mut second = base.clone();
    second[n - 1] = n - k;
    (
        DegreeSequence::from_degrees(base).expect("valid for n >= 5, 2k < n"),
        DegreeSequence::from_degrees(second).expect("valid for n >= 5, 2k < n"),
    )
}

/// Lexicographic stream of admissible modifiers for `k`.
#[derive(Debug, Clone)]
pub struct PiPrimes {
    k: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for PiPrimes {
    type Item = PiPrime;

    fn next(&mut self) -> Option<PiPrime> {
        loop {
            let current = self.next.take()?;
            self.next = successor(&current, self.k - 1);
            if !is_excluded(&current, self.k) {
                return Some(PiPrime { entries: current });
            }
        }
    }
}

/// Next nondecreasing sequence over `{0, …, max}` in lexicographic order.
fn successor(v: &[usize], max: usize) -> Option<Vec<usize>> {
    let i = v.iter().rposition(|&x| x < max)?;
    let mut next = v.to_vec();
    let bumped = next[i] + 1;
    next[i..].iter_mut().for_each(|x| *x = bumped);
    Some(next)
}

/// Every admissible `π′` for `k`, lexicographically. There are
/// `C(2k − 2, k − 1) − 1` of them.
pub fn enumerate_pi_primes(k: usize) -> Result<PiPrimes> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("need k >= 2, got {k}")));
    }
    Ok(PiPrimes {
        k,
        next: Some(vec![0; k - 1]),
    })
}

/// Builds the Nash-Williams sequence for `π′`.
pub fn nw_construct(p: NwParams, pi: &PiPrime) -> Result<DegreeSequence> {
    if pi.entries.len() != p.k - 1 {
        return Err(Error::InvalidPiPrime(format!(
            "length must be k - 1 = {}, got {}",
            p.k - 1,
            pi.entries.len()
        )));
    }
    let (first, second) = foundational_sequences(p);
    let base = if first.sum() % 2 == pi.sum() % 2 {
        first
    } else {
        second
    };
    let mut degrees = base.degrees().to_vec();
    let offset = p.n - (p.k - 1);
    for (slot, add) in degrees[offset..].iter_mut().zip(&pi.entries) {
        *slot += add;
    }
    DegreeSequence::from_degrees(degrees)
}

/// Groups every admissible `π′` by the sequence it produces.
pub fn nw_fibers(p: NwParams) -> BTreeMap<DegreeSequence, Vec<PiPrime>> {
    let mut fibers: BTreeMap<DegreeSequence, Vec<PiPrime>> = BTreeMap::new();
    for pi in enumerate_pi_primes(p.k).expect("k >= 2") {
        let seq = nw_construct(p, &pi).expect("length matches");
        fibers.entry(seq).or_default().push(pi);
    }
    fibers
}

/// The distinct Nash-Williams `(n, k)`-sequences from the construction.
pub fn enumerate_nw_sequences(p: NwParams) -> BTreeSet<DegreeSequence> {
    nw_fibers(p).into_keys().collect()
}

/// `C(2(k−1), k−1) − 1`, the number of admissible modifiers.
pub fn pi_prime_count(k: usize) -> Result<u128> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("need k >= 2, got {k}")));
    }
    Ok(binomial(2 * (k as u128 - 1), k as u128 - 1) - 1)
}

/// `½[C(2(k−1), k−1) − 1]`.
pub fn count_lower_bound(k: usize) -> Result<Ratio<u128>> {
    Ok(Ratio::new(pi_prime_count(k)?, 2))
}

/// Sum of [`count_lower_bound`] over `2 ≤ k ≤ ⌊(n−1)/2⌋`.
pub fn count_total_lower_bound(n: usize) -> Result<Ratio<u128>> {
    if n < 5 {
        return Err(Error::InvalidParams(format!("need n >= 5, got {n}")));
    }
    let mut total = Ratio::from_integer(0);
    for k in 2..=(n - 1) / 2 {
        total += count_lower_bound(k)?;
    }
    Ok(total)
}
