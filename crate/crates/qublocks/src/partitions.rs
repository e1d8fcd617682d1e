//! Partitions, bipartitions, beta-sets and the hook/core/quotient calculus.
//!
//! Hooks, cores and quotients are implemented on beta-sets (first-column
//! hook lengths): removing an `a`-hook from a partition is the replacement
//! of a beta-set entry `x` by `x - a`, which must be free.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: a weakly decreasing sequence of positive integers.
///
/// Serializes as the JSON array of its parts, e.g. `[3,1]`; the empty
/// partition is `[]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::invalid("partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase (m, m-1, ..., 2, 1); `m = 0` gives the empty partition.
    pub fn staircase(m: u32) -> Self {
        Partition {
            parts: (1..=m).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Returns `m` iff this partition is the staircase (m, m-1, ..., 1),
    /// with `m = 0` for the empty partition.
    pub fn staircase_index(&self) -> Option<u32> {
        let m = self.parts.len() as u32;
        for (i, &p) in self.parts.iter().enumerate() {
            if p != m - i as u32 {
                return None;
            }
        }
        Some(m)
    }

    /// The beta-set {p_i + (length - i) : i = 1..length}, parts beyond the
    /// last being zero. Requires `length >= self.len()`.
    pub fn beta_set(&self, length: usize) -> Result<BetaSet> {
        if length < self.parts.len() {
            return Err(Error::invalid(format!(
                "beta-set length {} is below the part count {}",
                length,
                self.parts.len()
            )));
        }
        let mut entries: Vec<u32> = (0..length)
            .map(|i| {
                let part = self.parts.get(i).copied().unwrap_or(0);
                part + (length - 1 - i) as u32
            })
            .collect();
        entries.reverse();
        Ok(BetaSet { entries })
    }

    /// Minimal beta-set: one entry per part (the first-column hook lengths).
    fn minimal_beta(&self) -> BetaSet {
        self.beta_set(self.parts.len()).expect("minimal length is valid")
    }

    /// All removable `a`-hooks, one per beta-set entry `x >= a` with `x - a`
    /// free, on the minimal beta-set.
    pub fn removable_hooks(&self, a: u32) -> Vec<HookRemoval> {
        assert!(a >= 1, "hook length must be positive");
        let beta = self.minimal_beta();
        beta.entries
            .iter()
            .filter(|&&x| x >= a && !beta.entries.contains(&(x - a)))
            .map(|&x| HookRemoval { entry: x, length: a })
            .collect()
    }

    /// The `a`-core together with the number of `a`-hooks removed to reach it.
    ///
    /// Computed by pushing every beta-set entry down its residue class mod `a`
    /// (the abacus), which is independent of removal order.
    pub fn core(&self, a: u32) -> (Partition, u32) {
        assert!(a >= 1, "hook length must be positive");
        let beta = self.minimal_beta();
        let mut classes: Vec<Vec<u32>> = vec![Vec::new(); a as usize];
        for &x in &beta.entries {
            classes[(x % a) as usize].push(x / a);
        }
        let mut weight = 0u32;
        let mut entries = Vec::new();
        for (r, class) in classes.iter().enumerate() {
            for (j, &q) in class.iter().enumerate() {
                weight += q - j as u32;
                entries.push(a * j as u32 + r as u32);
            }
        }
        entries.sort_unstable();
        (BetaSet { entries }.to_partition(), weight)
    }

    /// The `a`-quotient, computed on a beta-set whose length is a multiple of
    /// `a`: component `i` collects the entries congruent to `i` mod `a`, each
    /// divided down. Total size of the tuple is the `a`-weight.
    pub fn quotient(&self, a: u32) -> Vec<Partition> {
        assert!(a >= 1, "hook length must be positive");
        let len = self.parts.len().div_ceil(a as usize) * a as usize;
        let beta = self.beta_set(len).expect("padded length is valid");
        let mut classes: Vec<Vec<u32>> = vec![Vec::new(); a as usize];
        for &x in &beta.entries {
            classes[(x % a) as usize].push(x / a);
        }
        classes
            .into_iter()
            .map(|entries| BetaSet { entries }.to_partition())
            .collect()
    }

    /// Inverse of the core/quotient decomposition: the unique partition with
    /// the given `a`-core and `a`-quotient.
    pub fn from_core_and_quotient(core: &Partition, quotient: &[Partition], a: u32) -> Result<Partition> {
        assert!(a >= 1, "hook length must be positive");
        if quotient.len() != a as usize {
            return Err(Error::invalid(format!(
                "quotient must have exactly {} components, got {}",
                a,
                quotient.len()
            )));
        }
        if core.core(a).1 != 0 {
            return Err(Error::invalid(format!("{core} is not a {a}-core")));
        }
        let mut len = core.len().div_ceil(a as usize) * a as usize;
        loop {
            let beta = core.beta_set(len).expect("padded length is valid");
            let mut classes: Vec<Vec<u32>> = vec![Vec::new(); a as usize];
            for &x in &beta.entries {
                classes[(x % a) as usize].push(x / a);
            }
            if classes.iter().zip(quotient).all(|(cl, q)| cl.len() >= q.len()) {
                let mut entries = Vec::new();
                for (r, (class, q)) in classes.iter().zip(quotient).enumerate() {
                    // a core has each class compacted to an initial segment
                    debug_assert!(class.iter().enumerate().all(|(j, &v)| v == j as u32));
                    let qb = q.beta_set(class.len()).expect("class checked long enough");
                    for &b in &qb.entries {
                        entries.push(a * b + r as u32);
                    }
                }
                entries.sort_unstable();
                return Ok(BetaSet { entries }.to_partition());
            }
            len += a as usize;
        }
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for k in (1..=max.min(n)).rev() {
                cur.push(k);
                rec(n - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// A removable `a`-hook, identified by the beta-set entry it moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookRemoval {
    pub entry: u32,
    pub length: u32,
}

impl HookRemoval {
    /// Remove this hook from `p`, yielding a partition of `|p| - length`.
    pub fn apply(&self, p: &Partition) -> Partition {
        let beta = p.minimal_beta();
        let mut entries = beta.entries;
        let pos = entries
            .iter()
            .position(|&x| x == self.entry)
            .expect("hook entry must belong to the beta-set");
        assert!(self.entry >= self.length && !entries.contains(&(self.entry - self.length)));
        entries[pos] = self.entry - self.length;
        entries.sort_unstable();
        BetaSet { entries }.to_partition()
    }
}

/// A beta-set: a finite strictly increasing sequence of nonnegative
/// integers. Padding by a leading {0, 1, ...} block encodes the same
/// partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BetaSet {
    entries: Vec<u32>,
}

impl BetaSet {
    pub fn new(mut entries: Vec<u32>) -> Result<Self> {
        entries.sort_unstable();
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("beta-set entries must be distinct"));
        }
        Ok(BetaSet { entries })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// The partition encoded by this beta-set (independent of padding).
    pub fn to_partition(&self) -> Partition {
        let mut parts: Vec<u32> = self
            .entries
            .iter()
            .enumerate()
            .map(|(j, &e)| e - j as u32)
            .filter(|&p| p > 0)
            .collect();
        parts.reverse();
        Partition { parts }
    }
}

/// A pair of partitions, e.g. a label for an irreducible character of the
/// type-B Weyl group W_n. Serializes as a two-element array `[[..],[..]]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(Partition, Partition)", into = "(Partition, Partition)")]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl From<(Partition, Partition)> for Bipartition {
    fn from((first, second): (Partition, Partition)) -> Self {
        Bipartition { first, second }
    }
}

impl From<Bipartition> for (Partition, Partition) {
    fn from(r: Bipartition) -> Self {
        (r.first, r.second)
    }
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_empty() && self.second.is_empty()
    }

    /// Componentwise `f`-core; the weight is the total number of `f`-hooks
    /// removed across both components.
    pub fn f_core(&self, f: u32) -> (Bipartition, u32) {
        let (c1, w1) = self.first.core(f);
        let (c2, w2) = self.second.core(f);
        (Bipartition::new(c1, c2), w1 + w2)
    }

    /// All bipartitions of `n`, ordered by (first, second).
    pub fn all(n: u32) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in 0..=n {
            for first in Partition::all(k) {
                for second in Partition::all(n - k) {
                    out.push(Bipartition::new(first.clone(), second));
                }
            }
        }
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.first, self.second)
    }
}

/// Number of `e`-tuples of partitions with total size `n`: the coefficient
/// of x^n in prod_k (1 - x^k)^{-e}.
pub fn multipartition_count(e: u32, n: u32) -> u64 {
    let n = n as usize;
    let mut dp = vec![0u64; n + 1];
    dp[0] = 1;
    for _ in 0..e {
        for k in 1..=n {
            for i in k..=n {
                dp[i] += dp[i - k];
            }
        }
    }
    dp[n]
}

/// Number of bipartitions of `n`; shorthand for `multipartition_count(2, n)`.
pub fn bipartition_count(n: u32) -> u64 {
    multipartition_count(2, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn beta_set_examples() {
        assert_eq!(Partition::empty().beta_set(3).unwrap().entries(), &[0, 1, 2]);
        assert_eq!(p(&[3, 1]).beta_set(2).unwrap().entries(), &[1, 4]);
        assert_eq!(p(&[2, 1]).beta_set(3).unwrap().entries(), &[0, 2, 4]);
        assert!(p(&[3, 1]).beta_set(1).is_err());
    }

    #[test]
    fn beta_set_round_trip_padding_invariant() {
        for n in 0..=10u32 {
            for part in Partition::all(n) {
                for len in part.len()..=part.len() + 4 {
                    let beta = part.beta_set(len).unwrap();
                    assert_eq!(beta.to_partition(), part);
                }
            }
        }
    }

    #[test]
    fn removable_hook_examples() {
        let hooks = p(&[4]).removable_hooks(2);
        assert_eq!(hooks.len(), 1);
        assert_eq!(hooks[0].apply(&p(&[4])), p(&[2]));

        assert!(p(&[2, 1]).removable_hooks(2).is_empty());

        let hooks = p(&[1]).removable_hooks(1);
        assert_eq!(hooks.len(), 1);
        assert_eq!(hooks[0].apply(&p(&[1])), Partition::empty());
    }

    #[test]
    fn core_examples() {
        assert_eq!(p(&[4]).core(2), (Partition::empty(), 2));
        assert_eq!(p(&[2, 1]).core(2), (p(&[2, 1]), 0));
        assert_eq!(Partition::empty().core(3), (Partition::empty(), 0));
    }

    #[test]
    fn core_has_no_hooks_and_matches_size() {
        for n in 0..=10u32 {
            for part in Partition::all(n) {
                for a in 1..=4u32 {
                    let (core, w) = part.core(a);
                    assert!(core.removable_hooks(a).is_empty());
                    assert_eq!(core.size() + a * w, n);
                }
            }
        }
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(p(&[2, 1]).quotient(2), vec![Partition::empty(), Partition::empty()]);
        assert_eq!(p(&[4]).quotient(1), vec![p(&[4])]);
        let q = p(&[4]).quotient(2);
        assert_eq!(q.iter().map(Partition::size).sum::<u32>(), 2);
    }

    #[test]
    fn core_quotient_round_trip() {
        for n in 0..=12u32 {
            for part in Partition::all(n) {
                for a in 1..=4u32 {
                    let (core, w) = part.core(a);
                    let quot = part.quotient(a);
                    assert_eq!(quot.iter().map(Partition::size).sum::<u32>(), w);
                    let back = Partition::from_core_and_quotient(&core, &quot, a).unwrap();
                    assert_eq!(back, part);
                }
            }
        }
    }

    #[test]
    fn from_core_and_quotient_rejects_non_core() {
        let err = Partition::from_core_and_quotient(&p(&[4]), &[Partition::empty(), Partition::empty()], 2);
        assert!(err.is_err());
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(Partition::empty().staircase_index(), Some(0));
        assert_eq!(p(&[2, 1]).staircase_index(), Some(2));
        assert_eq!(p(&[2, 2]).staircase_index(), None);
        for m in 0..=6u32 {
            let s = Partition::staircase(m);
            assert_eq!(s.staircase_index(), Some(m));
            assert_eq!(s.size(), m * (m + 1) / 2);
        }
    }

    #[test]
    fn multipartition_counts() {
        for e in 1..=6u32 {
            assert_eq!(multipartition_count(e, 0), 1);
        }
        assert_eq!(multipartition_count(1, 4), 5);
        assert_eq!(multipartition_count(2, 4), 20);
        assert_eq!(bipartition_count(2), 5);
        assert_eq!(Bipartition::all(4).len() as u64, bipartition_count(4));
    }

    #[test]
    fn bipartition_f_core_examples() {
        assert_eq!(Bipartition::empty().f_core(3), (Bipartition::empty(), 0));
        let r = Bipartition::new(p(&[4]), Partition::empty());
        assert_eq!(r.f_core(2), (Bipartition::empty(), 2));
        for r in Bipartition::all(5) {
            assert_eq!(r.f_core(1), (Bipartition::empty(), r.size()));
        }
    }

    #[test]
    fn count_partitions_with_given_core() {
        // #{p of n with a-core c} = multipartition_count(a, (n - |c|)/a)
        for a in 1..=4u32 {
            for n in 0..=10u32 {
                let mut by_core: std::collections::BTreeMap<Partition, u64> = Default::default();
                for part in Partition::all(n) {
                    *by_core.entry(part.core(a).0).or_default() += 1;
                }
                for (core, count) in by_core {
                    let w = (n - core.size()) / a;
                    assert_eq!(count, multipartition_count(a, w));
                }
            }
        }
    }

    #[test]
    fn serde_partition_shape() {
        let part = p(&[3, 1]);
        assert_eq!(serde_json::to_string(&part).unwrap(), "[3,1]");
        let back: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(back, part);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());

        let r = Bipartition::new(p(&[2, 1]), Partition::empty());
        assert_eq!(serde_json::to_string(&r).unwrap(), "[[2,1],[]]");
    }
}
