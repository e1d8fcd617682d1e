//! Two-row symbols: rank, defect, hooks and cohooks, cores and cocores,
//! twisting, and the dictionary with bipartitions.
//!
//! A symbol is a pair of strictly increasing rows of nonnegative integers,
//! considered up to the shift operation (prepend 0 to both rows and
//! increment every entry). Unordered symbols are additionally considered up
//! to row swap. Every `Symbol` in this crate is stored in reduced canonical
//! form: no shift can be undone, and an unordered symbol has its longer row
//! on top (ties broken lexicographically).
//!
//! Conventions:
//! - rank = sum of all entries - floor(((|top|+|bottom|-1)^2)/4),
//! - defect = |top| - |bottom| (signed for ordered symbols),
//! - removing an `a`-hook replaces an entry `x` of a row by `x - a` in the
//!   same row; removing an `a`-cohook moves it to the other row as `x - a`.
//!
//! Both moves lower the rank by exactly `a`; hooks preserve the defect while
//! cohooks change it by two.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{BetaSet, Bipartition};

/// Which enumeration family a symbol belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolFamily {
    /// Unordered symbols of odd defect (symplectic labels).
    OddUnordered,
    /// Ordered symbols of even defect (even orthogonal labels).
    EvenOrdered,
}

/// A two-row symbol in reduced canonical form.
///
/// Serializes as `{"top":[...], "bottom":[...], "ordered":bool}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "SymbolRepr", into = "SymbolRepr")]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
    ordered: bool,
}

#[derive(Serialize, Deserialize)]
struct SymbolRepr {
    top: Vec<u32>,
    bottom: Vec<u32>,
    ordered: bool,
}

impl TryFrom<SymbolRepr> for Symbol {
    type Error = Error;
    fn try_from(r: SymbolRepr) -> Result<Self> {
        Symbol::new(r.top, r.bottom, r.ordered)
    }
}

impl From<Symbol> for SymbolRepr {
    fn from(s: Symbol) -> SymbolRepr {
        SymbolRepr {
            top: s.top,
            bottom: s.bottom,
            ordered: s.ordered,
        }
    }
}

fn is_strictly_increasing(row: &[u32]) -> bool {
    row.windows(2).all(|w| w[0] < w[1])
}

/// Rank of a raw row pair; invariant under shift and row swap.
pub fn rank_of_rows(top: &[u32], bottom: &[u32]) -> u32 {
    let total: i64 = top.iter().chain(bottom).map(|&x| x as i64).sum();
    let k = (top.len() + bottom.len()) as i64;
    let corr = (k - 1) * (k - 1) / 4;
    u32::try_from(total - corr).expect("rank of a valid symbol is nonnegative")
}

impl Symbol {
    /// Builds a symbol from raw rows, validating and reducing to canonical
    /// form. For unordered symbols the rows may be given in either order.
    pub fn new(mut top: Vec<u32>, mut bottom: Vec<u32>, ordered: bool) -> Result<Symbol> {
        if !is_strictly_increasing(&top) || !is_strictly_increasing(&bottom) {
            return Err(Error::invalid("symbol rows must be strictly increasing"));
        }
        // undo shifts: both rows start with 0
        while top.first() == Some(&0) && bottom.first() == Some(&0) {
            top.remove(0);
            bottom.remove(0);
            for x in top.iter_mut().chain(bottom.iter_mut()) {
                *x -= 1;
            }
        }
        if !ordered {
            let swap = match top.len().cmp(&bottom.len()) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => top < bottom,
                std::cmp::Ordering::Greater => false,
            };
            if swap {
                std::mem::swap(&mut top, &mut bottom);
            }
        }
        Ok(Symbol { top, bottom, ordered })
    }

    pub fn unordered(top: Vec<u32>, bottom: Vec<u32>) -> Result<Symbol> {
        Symbol::new(top, bottom, false)
    }

    pub fn ordered(top: Vec<u32>, bottom: Vec<u32>) -> Result<Symbol> {
        Symbol::new(top, bottom, true)
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn is_ordered(&self) -> bool {
        self.ordered
    }

    pub fn rank(&self) -> u32 {
        rank_of_rows(&self.top, &self.bottom)
    }

    /// Signed defect |top| - |bottom|; nonnegative for unordered symbols.
    pub fn defect(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    /// Row swap; the identity on (canonical) unordered symbols.
    pub fn swapped(&self) -> Symbol {
        Symbol::new(self.bottom.clone(), self.top.clone(), self.ordered)
            .expect("rows of a valid symbol stay valid")
    }

    fn rows(&self) -> [&[u32]; 2] {
        [&self.top, &self.bottom]
    }

    /// Removable `a`-hooks on the canonical representative.
    pub fn removable_hooks(&self, a: u32) -> Vec<SymbolMove> {
        assert!(a >= 1, "hook length must be positive");
        let mut out = Vec::new();
        for (row, entries) in self.rows().into_iter().enumerate() {
            for &x in entries {
                if x >= a && !entries.contains(&(x - a)) {
                    out.push(SymbolMove {
                        cohook: false,
                        row,
                        entry: x,
                        length: a,
                    });
                }
            }
        }
        out
    }

    /// Removable `a`-cohooks on the canonical representative.
    pub fn removable_cohooks(&self, a: u32) -> Vec<SymbolMove> {
        assert!(a >= 1, "hook length must be positive");
        let rows = self.rows();
        let mut out = Vec::new();
        for (row, entries) in rows.into_iter().enumerate() {
            let other = rows[1 - row];
            for &x in entries {
                if x >= a && !other.contains(&(x - a)) {
                    out.push(SymbolMove {
                        cohook: true,
                        row,
                        entry: x,
                        length: a,
                    });
                }
            }
        }
        out
    }

    /// The removable `a`-hooks and `a`-cohooks, in that order.
    pub fn cohooks_and_hooks(&self, a: u32) -> (Vec<SymbolMove>, Vec<SymbolMove>) {
        (self.removable_hooks(a), self.removable_cohooks(a))
    }

    /// The `e`-core (no removable `e`-hooks) and the number of hooks removed.
    ///
    /// Hooks act within a row, so each row is compacted independently on its
    /// abacus; the result does not depend on removal order.
    pub fn core(&self, e: u32) -> (Symbol, u32) {
        assert!(e >= 1);
        let mut weight = 0u32;
        let mut compact = |row: &[u32]| -> Vec<u32> {
            let mut classes: Vec<Vec<u32>> = vec![Vec::new(); e as usize];
            for &x in row {
                classes[(x % e) as usize].push(x / e);
            }
            let mut out = Vec::new();
            for (r, class) in classes.iter().enumerate() {
                for (j, &q) in class.iter().enumerate() {
                    weight += q - j as u32;
                    out.push(e * j as u32 + r as u32);
                }
            }
            out.sort_unstable();
            out
        };
        let top = compact(&self.top);
        let bottom = compact(&self.bottom);
        let core = Symbol::new(top, bottom, self.ordered).expect("compacted rows are valid");
        (core, weight)
    }

    /// The `e`-cocore (no removable `e`-cohooks) and the number of cohooks
    /// removed. Cocores are independent of removal order: at a fixed shift
    /// level, cohook moves are hook moves on the rows relabelled by quotient
    /// parity, and hook removal is confluent.
    pub fn cocore(&self, e: u32) -> (Symbol, u32) {
        assert!(e >= 1);
        let mut s = self.clone();
        let mut weight = 0;
        loop {
            match s.removable_cohooks(e).first() {
                None => return (s, weight),
                Some(mv) => {
                    s = mv.apply(&s);
                    weight += 1;
                }
            }
        }
    }

    /// The `e`-twist: on the canonical representative, an entry `z = qe + r`
    /// lying in row `i` is placed in row `(i + q) mod 2`. Removable
    /// `e`-cohooks of a symbol correspond to removable `e`-hooks of its
    /// twist and vice versa; rank, entry multiset and defect parity are
    /// preserved, and the twist is an involution on canonical symbols.
    ///
    /// The cohook/hook mirror lives at the shift level of the representative
    /// the twist is computed on, so compositions with core and cocore agree
    /// in entry multiset and weight but not always in row assignment.
    pub fn twist(&self, e: u32) -> Symbol {
        assert!(e >= 1);
        let mut rows = [Vec::new(), Vec::new()];
        for (i, entries) in self.rows().into_iter().enumerate() {
            for &z in entries {
                rows[(i + (z / e) as usize) % 2].push(z);
            }
        }
        let [mut top, mut bottom] = rows;
        top.sort_unstable();
        bottom.sort_unstable();
        Symbol::new(top, bottom, self.ordered).expect("twisted rows are strictly increasing")
    }

    /// The symbol of a bipartition: defect 1 (unordered, the W_n dictionary)
    /// or defect 0 (ordered). Rank equals the size of the bipartition.
    pub fn from_bipartition(r: &Bipartition, defect_one: bool) -> Symbol {
        if defect_one {
            Symbol::attach_odd(0, r)
        } else {
            Symbol::attach_even(0, r)
        }
    }

    /// Attach construction for the odd family: the unordered symbol of
    /// defect `2h + 1` and rank `h(h+1) + |r|` carrying `r`. With `h = 0`
    /// this is the defect-1 symbol of `r`.
    pub fn attach_odd(h: u32, r: &Bipartition) -> Symbol {
        let d = 2 * h as usize + 1;
        let k = r.second.len().max(r.first.len().saturating_sub(d));
        let top = r.first.beta_set(k + d).expect("length covers all parts");
        let bottom = r.second.beta_set(k).expect("length covers all parts");
        Symbol::new(top.entries().to_vec(), bottom.entries().to_vec(), false)
            .expect("beta-sets are strictly increasing")
    }

    /// Attach construction for the even family: the ordered symbol of defect
    /// `2h` and rank `h^2 + |r|` carrying `r`. For `h > 0` the long row is on
    /// top; negating `h` swaps the rows. With `h = 0` this is the defect-0
    /// symbol of `r`.
    pub fn attach_even(h: i64, r: &Bipartition) -> Symbol {
        let d = 2 * h.unsigned_abs() as usize;
        let k = r.second.len().max(r.first.len().saturating_sub(d));
        let long = r.first.beta_set(k + d).expect("length covers all parts");
        let short = r.second.beta_set(k).expect("length covers all parts");
        let (top, bottom) = if h >= 0 { (&long, &short) } else { (&short, &long) };
        Symbol::new(top.entries().to_vec(), bottom.entries().to_vec(), true)
            .expect("beta-sets are strictly increasing")
    }

    /// Inverse of the attach construction. For an unordered symbol of odd
    /// defect `d` this returns `h = (d-1)/2 >= 0`; for an ordered symbol of
    /// even defect `d` it returns the signed `h = d/2`. The bipartition is
    /// read off the rows, the longer row carrying the first component.
    pub fn detach(&self) -> Result<(i64, Bipartition)> {
        let d = self.defect();
        let read = |row: &[u32]| BetaSet::new(row.to_vec()).expect("rows are valid").to_partition();
        if !self.ordered {
            if d.rem_euclid(2) != 1 {
                return Err(Error::invalid("unordered symbol must have odd defect"));
            }
            let h = (d - 1) / 2;
            Ok((h, Bipartition::new(read(&self.top), read(&self.bottom))))
        } else {
            if d.rem_euclid(2) != 0 {
                return Err(Error::invalid("ordered symbol must have even defect"));
            }
            let h = d / 2;
            let r = if h >= 0 {
                Bipartition::new(read(&self.top), read(&self.bottom))
            } else {
                Bipartition::new(read(&self.bottom), read(&self.top))
            };
            Ok((h, r))
        }
    }

    /// All symbols of the given rank in the given family, without
    /// duplicates, generated through the attach construction.
    pub fn enumerate(rank: u32, family: SymbolFamily) -> Vec<Symbol> {
        let mut out = Vec::new();
        match family {
            SymbolFamily::OddUnordered => {
                let mut h = 0u32;
                while h * (h + 1) <= rank {
                    for r in Bipartition::all(rank - h * (h + 1)) {
                        out.push(Symbol::attach_odd(h, &r));
                    }
                    h += 1;
                }
            }
            SymbolFamily::EvenOrdered => {
                let mut h = 0i64;
                while (h * h) as u32 <= rank {
                    let sizes = rank - (h * h) as u32;
                    for r in Bipartition::all(sizes) {
                        out.push(Symbol::attach_even(h, &r));
                        if h > 0 {
                            out.push(Symbol::attach_even(-h, &r));
                        }
                    }
                    h += 1;
                }
            }
        }
        out.sort_unstable();
        debug_assert!(out.windows(2).all(|w| w[0] != w[1]), "attach must not repeat symbols");
        out
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |f: &mut fmt::Formatter<'_>, entries: &[u32]| -> fmt::Result {
            write!(f, "[")?;
            for (i, x) in entries.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")
        };
        write!(f, "[")?;
        row(f, &self.top)?;
        write!(f, ",")?;
        row(f, &self.bottom)?;
        write!(f, "]")
    }
}

/// A removable hook or cohook of a symbol, identified by the row and entry
/// it moves on the canonical representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolMove {
    pub cohook: bool,
    /// 0 = top row, 1 = bottom row.
    pub row: usize,
    pub entry: u32,
    pub length: u32,
}

impl SymbolMove {
    /// Apply the move, yielding a symbol of rank lowered by `length`.
    pub fn apply(&self, s: &Symbol) -> Symbol {
        let mut rows = [s.top.clone(), s.bottom.clone()];
        let src = &mut rows[self.row];
        let pos = src
            .iter()
            .position(|&x| x == self.entry)
            .expect("move entry must belong to its row");
        src.remove(pos);
        let dst = if self.cohook { 1 - self.row } else { self.row };
        assert!(self.entry >= self.length && !rows[dst].contains(&(self.entry - self.length)));
        rows[dst].push(self.entry - self.length);
        rows[dst].sort_unstable();
        let [top, bottom] = rows;
        Symbol::new(top, bottom, s.ordered).expect("applying a removable move keeps rows valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bip(a: &[u32], b: &[u32]) -> Bipartition {
        Bipartition::new(part(a), part(b))
    }

    fn all_symbols(rank: u32) -> Vec<Symbol> {
        let mut v = Symbol::enumerate(rank, SymbolFamily::OddUnordered);
        v.extend(Symbol::enumerate(rank, SymbolFamily::EvenOrdered));
        v
    }

    #[test]
    fn normalization() {
        let s = Symbol::unordered(vec![0, 3], vec![0, 1]).unwrap();
        assert_eq!(s, Symbol::unordered(vec![2], vec![0]).unwrap());
        assert_eq!(s.top(), &[2]);
        assert_eq!(s.bottom(), &[0]);

        let s = Symbol::unordered(vec![2], vec![]).unwrap();
        assert_eq!(s.top(), &[2]);

        // row swap to nonnegative defect
        let s = Symbol::unordered(vec![], vec![2]).unwrap();
        assert_eq!(s.top(), &[2]);
        assert_eq!(s.bottom(), &[] as &[u32]);

        // ordered symbols keep their row order
        let s = Symbol::ordered(vec![], vec![2]).unwrap();
        assert_eq!(s.top(), &[] as &[u32]);
        assert_eq!(s.bottom(), &[2]);
    }

    #[test]
    fn rank_and_defect() {
        let s = Symbol::unordered(vec![0, 1, 2], vec![]).unwrap();
        assert_eq!((s.rank(), s.defect()), (2, 3));
        for n in 0..=6u32 {
            let s = Symbol::unordered(vec![n], vec![]).unwrap();
            assert_eq!((s.rank(), s.defect()), (n, 1));
        }
        let s = Symbol::unordered(vec![], vec![]).unwrap();
        assert_eq!((s.rank(), s.defect()), (0, 0));
    }

    #[test]
    fn rank_defect_shift_invariant() {
        let shift = |top: &[u32], bottom: &[u32]| -> (Vec<u32>, Vec<u32>) {
            let bump = |row: &[u32]| {
                let mut v = vec![0];
                v.extend(row.iter().map(|x| x + 1));
                v
            };
            (bump(top), bump(bottom))
        };
        for rank in 0..=6 {
            for s in all_symbols(rank) {
                let (mut top, mut bottom) = (s.top().to_vec(), s.bottom().to_vec());
                for _ in 0..3 {
                    let shifted = shift(&top, &bottom);
                    top = shifted.0;
                    bottom = shifted.1;
                    assert_eq!(rank_of_rows(&top, &bottom), s.rank());
                    assert_eq!(
                        top.len() as i64 - bottom.len() as i64,
                        s.defect()
                    );
                    let back = Symbol::new(top.clone(), bottom.clone(), s.is_ordered()).unwrap();
                    assert_eq!(back, s);
                }
            }
        }
    }

    #[test]
    fn hooks_and_cohooks_drop_rank() {
        for rank in 0..=6 {
            for s in all_symbols(rank) {
                for a in 1..=4u32 {
                    let (hooks, cohooks) = s.cohooks_and_hooks(a);
                    for mv in hooks.iter().chain(&cohooks) {
                        let t = mv.apply(&s);
                        assert_eq!(t.rank() + a, s.rank(), "{s} move {mv:?}");
                        if mv.cohook {
                            assert_eq!((t.defect() - s.defect()).abs() % 2, 0);
                        } else if s.is_ordered() {
                            assert_eq!(t.defect(), s.defect());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hook_cohook_examples() {
        let empty = Symbol::unordered(vec![], vec![]).unwrap();
        for a in 1..=4 {
            let (h, c) = empty.cohooks_and_hooks(a);
            assert!(h.is_empty() && c.is_empty());
        }

        let s = Symbol::unordered(vec![2], vec![]).unwrap();
        let (hooks, cohooks) = s.cohooks_and_hooks(2);
        assert_eq!(hooks.len(), 1);
        assert_eq!(cohooks.len(), 1);
        assert_eq!(hooks[0].apply(&s), Symbol::unordered(vec![0], vec![]).unwrap());
        // the cohook result lands on the other row and is swapped back by
        // canonicalization
        assert_eq!(cohooks[0].apply(&s), Symbol::unordered(vec![0], vec![]).unwrap());

        // the cuspidal rank-2 symbol has no 1-hooks; each of its 1-cohooks
        // drops the rank to 1
        let theta = Symbol::unordered(vec![0, 1, 2], vec![]).unwrap();
        let (hooks, cohooks) = theta.cohooks_and_hooks(1);
        assert!(hooks.is_empty());
        assert_eq!(cohooks.len(), 2);
        let rank1 = all_symbols(1);
        for mv in cohooks {
            let t = mv.apply(&theta);
            assert_eq!(t.rank(), 1);
            assert!(rank1.contains(&t));
        }
    }

    #[test]
    fn core_and_cocore_examples() {
        let s = Symbol::unordered(vec![2], vec![]).unwrap();
        assert_eq!(s.core(2), (Symbol::unordered(vec![0], vec![]).unwrap(), 1));
        assert_eq!(s.cocore(2), (Symbol::unordered(vec![0], vec![]).unwrap(), 1));
        for rank in 0..=3 {
            for s in all_symbols(rank) {
                let e = rank + 1;
                assert_eq!(s.core(e), (s.clone(), 0));
            }
        }
    }

    #[test]
    fn cores_and_cocores_are_cores() {
        for rank in 0..=6 {
            for s in all_symbols(rank) {
                for e in 1..=3u32 {
                    let (core, w) = s.core(e);
                    assert!(core.removable_hooks(e).is_empty());
                    assert_eq!(core.rank() + e * w, rank);
                    let (cocore, w) = s.cocore(e);
                    assert!(cocore.removable_cohooks(e).is_empty());
                    assert_eq!(cocore.rank() + e * w, rank);
                }
            }
        }
    }

    fn multiset(s: &Symbol) -> Vec<u32> {
        let mut v: Vec<u32> = s.top().iter().chain(s.bottom()).copied().collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn twist_contract() {
        for rank in 0..=6 {
            for s in all_symbols(rank) {
                for e in 1..=4u32 {
                    let t = s.twist(e);
                    assert_eq!(t.rank(), s.rank(), "twist preserves rank");
                    assert_eq!(t.twist(e), s, "twist is an involution");
                    assert_eq!(
                        (t.defect() - s.defect()).rem_euclid(2),
                        0,
                        "twist preserves defect parity"
                    );
                    assert_eq!(multiset(&t), multiset(&s), "twist preserves the entry multiset");
                    assert_eq!(
                        s.removable_cohooks(e).len(),
                        t.removable_hooks(e).len(),
                        "cohooks swap with hooks"
                    );
                    assert_eq!(s.removable_hooks(e).len(), t.removable_cohooks(e).len());
                    // the cocore mirrors the core of the twist entrywise
                    let (core_of_twist, w1) = t.core(e);
                    let (cocore, w2) = s.cocore(e);
                    assert_eq!(multiset(&core_of_twist), multiset(&cocore));
                    assert_eq!(w1, w2);
                }
            }
        }
    }

    #[test]
    fn twist_fixes_small_entries() {
        for rank in 0..=5 {
            for s in all_symbols(rank) {
                let max = s.top().iter().chain(s.bottom()).max().copied().unwrap_or(0);
                let e = max + 1;
                assert_eq!(s.twist(e), s);
            }
        }
    }

    #[test]
    fn bipartition_dictionary() {
        let s = Symbol::from_bipartition(&Bipartition::empty(), true);
        assert_eq!(s, Symbol::unordered(vec![0], vec![]).unwrap());
        for n in 0..=6u32 {
            for r in Bipartition::all(n) {
                let s = Symbol::from_bipartition(&r, true);
                assert_eq!(s.rank(), n);
                assert_eq!(s.defect(), 1);
                let (h, back) = s.detach().unwrap();
                assert_eq!((h, back), (0, r.clone()));

                let s = Symbol::from_bipartition(&r, false);
                assert_eq!(s.rank(), n);
                assert_eq!(s.defect(), 0);
                let (h, back) = s.detach().unwrap();
                assert_eq!((h, back), (0, r));
            }
        }
    }

    #[test]
    fn defect_one_count_matches_bipartitions() {
        use crate::partitions::bipartition_count;
        for n in 0..=8u32 {
            let count = Bipartition::all(n)
                .iter()
                .map(|r| Symbol::from_bipartition(r, true))
                .collect::<std::collections::BTreeSet<_>>()
                .len() as u64;
            assert_eq!(count, bipartition_count(n));
        }
    }

    #[test]
    fn attach_examples() {
        let theta = Symbol::attach_odd(1, &Bipartition::empty());
        assert_eq!(theta, Symbol::unordered(vec![0, 1, 2], vec![]).unwrap());
        assert_eq!((theta.rank(), theta.defect()), (2, 3));

        for h in 0..=3u32 {
            for n in 0..=4u32 {
                for r in Bipartition::all(n) {
                    let s = Symbol::attach_odd(h, &r);
                    assert_eq!(s.rank(), h * (h + 1) + n);
                    assert_eq!(s.defect(), 2 * h as i64 + 1);
                    assert_eq!(s.detach().unwrap(), (h as i64, r.clone()));
                }
            }
        }
        for h in -3..=3i64 {
            for n in 0..=4u32 {
                for r in Bipartition::all(n) {
                    let s = Symbol::attach_even(h, &r);
                    assert_eq!(s.rank() as i64, h * h + n as i64);
                    assert_eq!(s.defect(), 2 * h);
                    assert_eq!(s.detach().unwrap(), (h, r.clone()));
                }
            }
        }
    }

    #[test]
    fn negating_h_swaps_rows() {
        for h in 1..=3i64 {
            for r in Bipartition::all(3) {
                let plus = Symbol::attach_even(h, &r);
                let minus = Symbol::attach_even(-h, &r);
                assert_eq!(minus, plus.swapped());
                assert_ne!(minus, plus);
            }
        }
        // distinct defect-0 ordered symbols unless the rows agree
        let r = bip(&[1], &[]);
        let s = Symbol::attach_even(0, &r);
        assert_ne!(s, s.swapped());
    }

    #[test]
    fn enumeration_counts() {
        use crate::partitions::bipartition_count;
        assert_eq!(Symbol::enumerate(2, SymbolFamily::OddUnordered).len(), 6);
        assert_eq!(Symbol::enumerate(0, SymbolFamily::OddUnordered).len(), 1);
        assert_eq!(Symbol::enumerate(0, SymbolFamily::EvenOrdered).len(), 1);
        assert_eq!(Symbol::enumerate(2, SymbolFamily::EvenOrdered).len(), 9);
        for n in 0..=6u32 {
            let odd: u64 = (0..)
                .take_while(|h| h * (h + 1) <= n)
                .map(|h| bipartition_count(n - h * (h + 1)))
                .sum();
            assert_eq!(Symbol::enumerate(n, SymbolFamily::OddUnordered).len() as u64, odd);
            let even: u64 = (0i64..)
                .take_while(|h| (h * h) as u32 <= n)
                .map(|h| {
                    let c = bipartition_count(n - (h * h) as u32);
                    if h == 0 {
                        c
                    } else {
                        2 * c
                    }
                })
                .sum();
            assert_eq!(Symbol::enumerate(n, SymbolFamily::EvenOrdered).len() as u64, even);
        }
    }

    #[test]
    fn serde_symbol_shape() {
        let s = Symbol::unordered(vec![0, 1, 2], vec![]).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"top":[0,1,2],"bottom":[],"ordered":false}"#);
        let back: Symbol = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        // non-reduced input is normalized on deserialization
        let back: Symbol =
            serde_json::from_str(r#"{"top":[0,1,2,3],"bottom":[0],"ordered":false}"#).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<Symbol>(r#"{"top":[1,1],"bottom":[],"ordered":false}"#).is_err());
    }
}
