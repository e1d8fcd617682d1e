//! Independent brute-force oracles and exhaustive audits of the claims made
//! by the other modules, producing pass/fail reports with counterexamples.
//!
//! Oracles here never call the constructive code path they audit: symbol
//! enumeration is re-done by generate-and-filter with its own rank formula,
//! core confluence is re-checked over every removal order, and block laws
//! are checked against freshly enumerated membership lists.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::blocks::{
    block_of_gl, block_of_sp, correspond_block, correspond_block_inv, correspond_char_blockwise,
    enumerate_blocks, BlockLabel, Family, Regime,
};
use crate::characters::{
    correspond_char, correspond_char_inv, enumerate_gl, enumerate_sp, triangular, GlFamily,
};
use crate::error::Result;
use crate::partitions::{multipartition_count, Partition};
use crate::symbols::{Symbol, SymbolFamily};

const MAX_COUNTEREXAMPLES: usize = 10;

/// Outcome of one audit over a parameter window.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AuditReport {
    pub name: String,
    pub window: String,
    pub verdict: String,
    pub counts: Vec<CountLine>,
    /// At most ten counterexamples are kept; the total is always reported.
    pub counterexamples: Vec<String>,
    pub total_counterexamples: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CountLine {
    pub label: String,
    pub observed: u64,
    pub expected: u64,
}

impl AuditReport {
    fn new(name: impl Into<String>, window: impl Into<String>) -> AuditReport {
        AuditReport {
            name: name.into(),
            window: window.into(),
            verdict: "pass".into(),
            counts: Vec::new(),
            counterexamples: Vec::new(),
            total_counterexamples: 0,
        }
    }

    fn fail(&mut self, msg: impl Into<String>) {
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(msg.into());
        }
        self.total_counterexamples += 1;
        self.verdict = "fail".into();
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }

    fn count(&mut self, label: impl Into<String>, observed: u64, expected: u64) {
        let label = label.into();
        if observed != expected {
            self.fail(format!("{label}: observed {observed}, expected {expected}"));
        }
        self.counts.push(CountLine { label, observed, expected });
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.total_counterexamples == 0
    }

    /// Human-readable table rendering.
    pub fn table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<4} {}  [{}]\n",
            if self.passed() { "ok" } else { "FAIL" },
            self.name,
            self.window
        ));
        for line in &self.counts {
            out.push_str(&format!(
                "      {}: {} (expected {})\n",
                line.label, line.observed, line.expected
            ));
        }
        if !self.passed() {
            out.push_str(&format!(
                "      {} counterexample(s):\n",
                self.total_counterexamples
            ));
            for c in &self.counterexamples {
                out.push_str(&format!("      - {c}\n"));
            }
        }
        out
    }
}

/// Independent rank formula for the oracle path.
fn oracle_rank(top: &[u32], bottom: &[u32]) -> i64 {
    let total: i64 = top.iter().chain(bottom).map(|&x| x as i64).sum();
    let k = (top.len() + bottom.len()) as i64;
    total - (k - 1) * (k - 1) / 4
}

/// Generate-and-filter enumeration of symbols of the given rank and family,
/// with all entries below `entry_bound`. Independent of the attach
/// construction.
pub fn oracle_enumerate_symbols(
    rank: u32,
    family: SymbolFamily,
    entry_bound: u32,
) -> Vec<Symbol> {
    // index every subset of {0..entry_bound} by (size, sum)
    let mut by_shape: HashMap<(usize, u32), Vec<Vec<u32>>> = HashMap::new();
    let vals: Vec<u32> = (0..=entry_bound).collect();
    let mut current = Vec::new();
    fn rec(
        vals: &[u32],
        from: usize,
        current: &mut Vec<u32>,
        sum: u32,
        cap: u32,
        by_shape: &mut HashMap<(usize, u32), Vec<Vec<u32>>>,
    ) {
        by_shape
            .entry((current.len(), sum))
            .or_default()
            .push(current.clone());
        for i in from..vals.len() {
            if sum + vals[i] > cap {
                break;
            }
            current.push(vals[i]);
            rec(vals, i + 1, current, sum + vals[i], cap, by_shape);
            current.pop();
        }
    }
    let max_k = 2 * (entry_bound as usize + 1);
    let cap = rank + (((max_k as i64 - 1) * (max_k as i64 - 1)) / 4) as u32;
    rec(&vals, 0, &mut current, 0, cap, &mut by_shape);

    let mut out = BTreeSet::new();
    for p in 0..=entry_bound as usize + 1 {
        for t in 0..=entry_bound as usize + 1 {
            let defect = p as i64 - t as i64;
            let parity_ok = match family {
                SymbolFamily::OddUnordered => defect.rem_euclid(2) == 1,
                SymbolFamily::EvenOrdered => defect.rem_euclid(2) == 0,
            };
            if !parity_ok {
                continue;
            }
            let k = (p + t) as i64;
            let needed = rank as i64 + (k - 1) * (k - 1) / 4;
            if needed < 0 {
                continue;
            }
            for s1 in 0..=needed as u32 {
                let (Some(tops), Some(bottoms)) = (
                    by_shape.get(&(p, s1)),
                    by_shape.get(&(t, needed as u32 - s1)),
                ) else {
                    continue;
                };
                for top in tops {
                    for bottom in bottoms {
                        debug_assert_eq!(oracle_rank(top, bottom), rank as i64);
                        let ordered = matches!(family, SymbolFamily::EvenOrdered);
                        let s = Symbol::new(top.clone(), bottom.clone(), ordered)
                            .expect("generated rows are strictly increasing");
                        out.insert(s);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Compares the constructive symbol enumeration against the
/// generate-and-filter oracle and the closed counting formulas.
pub fn audit_symbol_enumeration(max_rank: u32) -> AuditReport {
    let mut report = AuditReport::new(
        "symbol-enumeration",
        format!("rank <= {max_rank}, both families"),
    );
    for rank in 0..=max_rank {
        // any reduced representative and removable structure fits below this
        let defect_cap = 2 * rank.isqrt() + 1;
        let bound = rank + defect_cap + 6;
        for (family, tag) in [
            (SymbolFamily::OddUnordered, "odd-unordered"),
            (SymbolFamily::EvenOrdered, "even-ordered"),
        ] {
            let constructive = Symbol::enumerate(rank, family);
            let oracle = oracle_enumerate_symbols(rank, family, bound);
            let expected: u64 = match family {
                SymbolFamily::OddUnordered => (0..)
                    .take_while(|h| h * (h + 1) <= rank)
                    .map(|h| multipartition_count(2, rank - h * (h + 1)))
                    .sum(),
                SymbolFamily::EvenOrdered => (0i64..)
                    .take_while(|h| (h * h) as u32 <= rank)
                    .map(|h| {
                        let c = multipartition_count(2, rank - (h * h) as u32);
                        if h == 0 {
                            c
                        } else {
                            2 * c
                        }
                    })
                    .sum(),
            };
            report.count(
                format!("rank {rank} {tag} classes"),
                constructive.len() as u64,
                expected,
            );
            report.count(
                format!("rank {rank} {tag} oracle classes"),
                oracle.len() as u64,
                expected,
            );
            let constructive_set: BTreeSet<_> = constructive.iter().cloned().collect();
            let oracle_set: BTreeSet<_> = oracle.iter().cloned().collect();
            for s in constructive_set.symmetric_difference(&oracle_set) {
                report.fail(format!(
                    "rank {rank} {tag}: {s} in exactly one of constructive/oracle enumerations"
                ));
            }
            for s in &constructive {
                let max_entry = s.top().iter().chain(s.bottom()).max().copied().unwrap_or(0);
                report.check(max_entry <= bound, || {
                    format!("rank {rank} {tag}: {s} exceeds the entry bound {bound}")
                });
            }
        }
    }
    report
}

/// All orders of hook removal must reach the same core; checked by a
/// memoized walk of the full removal tree, then compared with the abacus.
pub fn audit_partition_towers(max_confluence: u32, max_round_trip: u32, max_a: u32) -> AuditReport {
    let mut report = AuditReport::new(
        "partition-towers",
        format!("confluence n <= {max_confluence}, round trips n <= {max_round_trip}, a <= {max_a}"),
    );

    // beta-set round trips over every valid padding up to 10
    for n in 0..=max_round_trip {
        for p in Partition::all(n) {
            for len in p.len()..=10.max(p.len()) {
                match p.beta_set(len) {
                    Ok(beta) => report.check(beta.to_partition() == p, || {
                        format!("beta-set round trip failed for {p} at length {len}")
                    }),
                    Err(e) => report.fail(format!("beta_set({p}, {len}): {e}")),
                }
            }
        }
    }

    // exhaustive confluence of hook removal, memoized over partitions
    fn removal_core(
        p: &Partition,
        a: u32,
        memo: &mut HashMap<Partition, (Partition, u32)>,
        report: &mut AuditReport,
    ) -> (Partition, u32) {
        if let Some(v) = memo.get(p) {
            return v.clone();
        }
        let hooks = p.removable_hooks(a);
        let value = if hooks.is_empty() {
            (p.clone(), 0)
        } else {
            let mut results = BTreeSet::new();
            for hook in &hooks {
                let child = hook.apply(p);
                let (core, w) = removal_core(&child, a, memo, report);
                results.insert((core, w + 1));
            }
            report.check(results.len() == 1, || {
                format!("removal orders from {p} with a = {a} reach different cores")
            });
            results.into_iter().next().unwrap()
        };
        memo.insert(p.clone(), value.clone());
        value
    }
    for a in 1..=max_a {
        let mut memo = HashMap::new();
        for n in 0..=max_confluence {
            for p in Partition::all(n) {
                let by_removal = removal_core(&p, a, &mut memo, &mut report);
                report.check(p.core(a) == by_removal, || {
                    format!("abacus core of {p} disagrees with hook removal at a = {a}")
                });
            }
        }
    }

    // core/quotient bijection
    for n in 0..=max_round_trip {
        for p in Partition::all(n) {
            for a in 1..=max_a {
                let (core, w) = p.core(a);
                let quot = p.quotient(a);
                report.check(
                    quot.iter().map(Partition::size).sum::<u32>() == w,
                    || format!("{a}-quotient of {p} has the wrong total size"),
                );
                match Partition::from_core_and_quotient(&core, &quot, a) {
                    Ok(back) => report.check(back == p, || {
                        format!("core/quotient round trip failed for {p} at a = {a}")
                    }),
                    Err(e) => report.fail(format!("from_core_and_quotient for {p}: {e}")),
                }
            }
        }
    }

    // fiber count identity: #{p of n with a-core c} = p_a((n - |c|)/a)
    for a in 1..=max_a {
        for n in 0..=max_confluence {
            let mut by_core: BTreeMap<Partition, u64> = BTreeMap::new();
            for p in Partition::all(n) {
                *by_core.entry(p.core(a).0).or_default() += 1;
            }
            for (core, observed) in by_core {
                let w = (n - core.size()) / a;
                report.check(observed == multipartition_count(a, w), || {
                    format!(
                        "fiber over the {a}-core {core} at n = {n} has size {observed}, \
                         expected p_{a}({w})"
                    )
                });
            }
        }
    }

    report
}

/// Raw row pair of the canonical representative.
fn raw_rows(s: &Symbol) -> [Vec<u32>; 2] {
    [s.top().to_vec(), s.bottom().to_vec()]
}

/// Removable cohooks of a raw row pair, without any normalization.
fn raw_cohooks(rows: &[Vec<u32>; 2], e: u32) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for &x in row {
            if x >= e && !rows[1 - i].contains(&(x - e)) {
                out.push((i, x));
            }
        }
    }
    out
}

/// Greedy cohook removal at a fixed shift level (no normalization), taking
/// the first or last removable cohook at every step.
fn raw_cocore(mut rows: [Vec<u32>; 2], e: u32, take_last: bool) -> ([Vec<u32>; 2], u32) {
    let mut weight = 0;
    loop {
        let moves = raw_cohooks(&rows, e);
        let Some(&(i, x)) = (if take_last { moves.last() } else { moves.first() }) else {
            return (rows, weight);
        };
        rows[i].retain(|&y| y != x);
        rows[1 - i].push(x - e);
        rows[1 - i].sort_unstable();
        weight += 1;
    }
}

/// Quotient-parity row relabelling at the given shift level.
fn raw_twist(rows: &[Vec<u32>; 2], e: u32) -> [Vec<u32>; 2] {
    let mut out = [Vec::new(), Vec::new()];
    for (i, row) in rows.iter().enumerate() {
        for &z in row {
            out[(i + (z / e) as usize) % 2].push(z);
        }
    }
    out[0].sort_unstable();
    out[1].sort_unstable();
    out
}

/// Twist contract audit, parameterized over the twist implementation so a
/// corrupted twist can be fed in by fault-injection tests.
///
/// The composite identity core(twist(s)) = twist(cocore(s)) is checked with
/// the inner twist evaluated at the shift level of `s` itself, which is
/// where the cohook/hook mirror is exact; the audit rebuilds that level
/// with its own raw-row machinery.
pub fn audit_twist_contract_with(
    twist: &dyn Fn(&Symbol, u32) -> Symbol,
    max_rank: u32,
    max_e: u32,
) -> AuditReport {
    let mut report = AuditReport::new(
        "twist-contract",
        format!("rank <= {max_rank}, e <= {max_e}"),
    );
    for rank in 0..=max_rank {
        let mut symbols = Symbol::enumerate(rank, SymbolFamily::OddUnordered);
        symbols.extend(Symbol::enumerate(rank, SymbolFamily::EvenOrdered));
        for s in &symbols {
            for e in 1..=max_e {
                let t = twist(s, e);
                report.check(t.rank() == s.rank(), || {
                    format!("twist of {s} at e = {e} changes the rank")
                });
                report.check(twist(&t, e) == *s, || {
                    format!("twist at e = {e} is not an involution on {s}")
                });
                report.check((t.defect() - s.defect()).rem_euclid(2) == 0, || {
                    format!("twist of {s} at e = {e} changes the defect parity")
                });
                let multiset = |x: &Symbol| {
                    let mut v: Vec<u32> = x.top().iter().chain(x.bottom()).copied().collect();
                    v.sort_unstable();
                    v
                };
                report.check(multiset(&t) == multiset(s), || {
                    format!("twist of {s} at e = {e} changes the entry multiset")
                });
                report.check(
                    s.removable_cohooks(e).len() == t.removable_hooks(e).len()
                        && s.removable_hooks(e).len() == t.removable_cohooks(e).len(),
                    || format!("hook/cohook counts of {s} and its twist disagree at e = {e}"),
                );

                // cocores do not depend on the removal order
                let (rows_first, w_first) = raw_cocore(raw_rows(s), e, false);
                let (rows_last, w_last) = raw_cocore(raw_rows(s), e, true);
                let canon = |rows: &[Vec<u32>; 2]| {
                    Symbol::new(rows[0].clone(), rows[1].clone(), s.is_ordered())
                        .expect("raw rows stay strictly increasing")
                };
                report.check(
                    canon(&rows_first) == canon(&rows_last) && w_first == w_last,
                    || format!("cohook removal orders diverge for {s} at e = {e}"),
                );
                let (cocore, w_public) = s.cocore(e);
                report.check(
                    cocore == canon(&rows_first) && w_public == w_first,
                    || format!("public cocore of {s} disagrees with raw removal at e = {e}"),
                );

                // composite identity at the aligned level: the core of the
                // twist is the twist of the cocore, both evaluated where the
                // mirror lives
                let (core_of_twist, w1) = t.core(e);
                let mirrored = canon(&raw_twist(&rows_first, e));
                report.check(
                    core_of_twist == mirrored && w1 == w_first,
                    || format!("core-of-twist and mirrored cocore disagree for {s} at e = {e}"),
                );
            }
        }
    }
    report
}

pub fn audit_twist_contract(max_rank: u32, max_e: u32) -> AuditReport {
    audit_twist_contract_with(&|s, e| s.twist(e), max_rank, max_e)
}

/// Exhaustive confluence of hook and cohook removal on symbols: every
/// maximal removal sequence reaches the same core (resp. cocore) with the
/// same weight, and that is what `core` (resp. `cocore`) returns.
pub fn audit_symbol_cores(max_rank: u32, max_e: u32) -> AuditReport {
    let mut report = AuditReport::new(
        "symbol-core-confluence",
        format!("rank <= {max_rank}, e <= {max_e}, all removal orders"),
    );
    fn removal_result(
        s: &Symbol,
        e: u32,
        cohooks: bool,
        memo: &mut BTreeMap<Symbol, (Symbol, u32)>,
        report: &mut AuditReport,
    ) -> (Symbol, u32) {
        if let Some(v) = memo.get(s) {
            return v.clone();
        }
        let moves = if cohooks { s.removable_cohooks(e) } else { s.removable_hooks(e) };
        let value = if moves.is_empty() {
            (s.clone(), 0)
        } else {
            let mut results = BTreeSet::new();
            for mv in &moves {
                let (core, w) = removal_result(&mv.apply(s), e, cohooks, memo, report);
                results.insert((core, w + 1));
            }
            report.check(results.len() == 1, || {
                let kind = if cohooks { "cohook" } else { "hook" };
                format!("{kind} removal orders from {s} diverge at e = {e}")
            });
            results.into_iter().next().unwrap()
        };
        memo.insert(s.clone(), value.clone());
        value
    }
    for e in 1..=max_e {
        let mut hook_memo = BTreeMap::new();
        let mut cohook_memo = BTreeMap::new();
        for rank in 0..=max_rank {
            let mut symbols = Symbol::enumerate(rank, SymbolFamily::OddUnordered);
            symbols.extend(Symbol::enumerate(rank, SymbolFamily::EvenOrdered));
            for s in &symbols {
                let by_removal = removal_result(s, e, false, &mut hook_memo, &mut report);
                report.check(s.core(e) == by_removal, || {
                    format!("abacus core of {s} disagrees with hook removal at e = {e}")
                });
                let by_removal = removal_result(s, e, true, &mut cohook_memo, &mut report);
                report.check(s.cocore(e) == by_removal, || {
                    format!("greedy cocore of {s} disagrees with cohook removal at e = {e}")
                });
            }
        }
    }
    report
}

/// Round trips and rank equations of the global character correspondence,
/// plus the fixed small-rank distribution examples.
pub fn audit_character_correspondence(max_m: u32) -> AuditReport {
    let mut report = AuditReport::new(
        "character-correspondence",
        format!("sp rank <= {max_m}, gl images scanned up to n <= {}", 2 * max_m),
    );
    for m in 0..=max_m {
        for psi in enumerate_sp(m) {
            let chi = correspond_char_inv(&psi, GlFamily::Gl);
            let t = chi.tuple();
            let n = chi.n();
            report.check(
                n == triangular(t.m1) + triangular(t.m2) + 2 * t.rho1.size() + 2 * t.rho2.size(),
                || format!("rank equation fails on the gl side for {}", psi.tuple()),
            );
            report.check(correspond_char(&chi) == psi, || {
                format!("round trip fails for the sp character {}", psi.tuple())
            });
        }
    }
    // every gl character whose image lands in the window must return to itself
    for n in 0..=2 * max_m {
        for chi in enumerate_gl(GlFamily::Gl, n) {
            let psi = correspond_char(&chi);
            if psi.rank() <= max_m {
                report.check(correspond_char_inv(&psi, GlFamily::Gl) == chi, || {
                    format!("round trip fails for the gl character {}", chi.tuple())
                });
            }
        }
    }
    if max_m >= 2 {
        let mut by_n: BTreeMap<u32, u64> = BTreeMap::new();
        for psi in enumerate_sp(2) {
            *by_n.entry(correspond_char_inv(&psi, GlFamily::Gl).n()).or_default() += 1;
        }
        for (n, expected) in [(4u32, 14u64), (3, 8), (2, 1)] {
            report.count(
                format!("sp rank-2 characters with gl image at n = {n}"),
                by_n.get(&n).copied().unwrap_or(0),
                expected,
            );
        }
        let mut by_m: BTreeMap<u32, u64> = BTreeMap::new();
        for chi in enumerate_gl(GlFamily::Gl, 4) {
            *by_m.entry(correspond_char(&chi).rank()).or_default() += 1;
        }
        for (m, expected) in [(2u32, 14u64), (3, 4), (4, 2)] {
            report.count(
                format!("gl(4) characters with sp image at m = {m}"),
                by_m.get(&m).copied().unwrap_or(0),
                expected,
            );
        }
    }
    report
}

fn gl_family_of(regime: &Regime) -> Option<GlFamily> {
    match regime.family() {
        Family::Gl => Some(GlFamily::Gl),
        Family::U => Some(GlFamily::U),
        Family::Sp => None,
    }
}

/// Partition, count-law and canonicality checks for one regime.
pub fn audit_blocks(regime: &Regime, max_rank: u32) -> Result<AuditReport> {
    let mut report = AuditReport::new(
        "block-partition",
        format!("regime {regime}, rank <= {max_rank}"),
    );
    for rank in 0..=max_rank {
        let blocks = enumerate_blocks(regime, rank)?;
        let block_set: BTreeSet<_> = blocks.iter().cloned().collect();
        report.count(
            format!("rank {rank} distinct block labels"),
            block_set.len() as u64,
            blocks.len() as u64,
        );
        let mut seen: BTreeMap<BlockLabel, u64> = BTreeMap::new();
        let char_total: u64;
        match gl_family_of(regime) {
            Some(gl) => {
                let chars = enumerate_gl(gl, rank);
                char_total = chars.len() as u64;
                for chi in &chars {
                    let b = block_of_gl(chi, regime)?;
                    report.check(block_set.contains(&b), || {
                        format!("block of {} missing from the rank-{rank} enumeration", chi.tuple())
                    });
                    *seen.entry(b).or_default() += 1;
                }
            }
            None => {
                let chars = enumerate_sp(rank);
                char_total = chars.len() as u64;
                for psi in &chars {
                    let b = block_of_sp(psi, regime)?;
                    report.check(block_set.contains(&b), || {
                        format!("block of {} missing from the rank-{rank} enumeration", psi.tuple())
                    });
                    *seen.entry(b).or_default() += 1;
                }
            }
        }
        let sum: u64 = blocks.iter().map(|b| b.char_count()).sum();
        report.count(format!("rank {rank} block sizes sum"), sum, char_total);
        for b in &blocks {
            let observed = seen.get(b).copied().unwrap_or(0);
            report.check(observed == b.char_count(), || {
                format!(
                    "block {b} has {observed} members, count law predicts {}",
                    b.char_count()
                )
            });
        }
    }
    Ok(report)
}

/// Commuting square, bijectivity and defect-equality checks for one of the
/// four regime pairings, identified by its GL/U source regime.
pub fn audit_correspondence(source: &Regime, max_rank: u32) -> Result<AuditReport> {
    let Some(gl) = gl_family_of(source) else {
        return Err(crate::error::Error::invalid(
            "correspondence audits start from a gl or u regime",
        ));
    };
    let mut report = AuditReport::new(
        "block-correspondence",
        format!("source {source}, n <= {max_rank}"),
    );
    let target = source.retarget(Family::Sp)?;
    let mut images: BTreeSet<BlockLabel> = BTreeSet::new();
    for n in 0..=max_rank {
        for block in enumerate_blocks(source, n)? {
            let image = correspond_block(&block)?;
            report.check(images.insert(image.clone()), || {
                format!("correspondence is not injective at the image of {block}")
            });
            let back = correspond_block_inv(&image, gl)?;
            report.check(back == block, || {
                format!("block round trip fails for {block}")
            });
            // the commuting square over every member of the block
            for chi in block.members_gl()? {
                let psi = correspond_char_blockwise(&chi, source)?;
                let via_chars = block_of_sp(&psi, &target)?;
                report.check(via_chars == image, || {
                    format!(
                        "commuting square fails for the character {} in {block}",
                        chi.tuple()
                    )
                });
            }
            let (lg, lg_image) = (block.local_group(), image.local_group());
            report.check(
                (lg.cyclic_order, lg.m1, lg.m2, lg.irr_count)
                    == (lg_image.cyclic_order, lg_image.m1, lg_image.m2, lg_image.irr_count),
                || format!("local group descriptors differ across the correspondence for {block}"),
            );
            if source.witness().is_some() {
                report.check(
                    block.defect_exponent()? == image.defect_exponent()?,
                    || format!("defect exponents differ across the correspondence for {block}"),
                );
            }
        }
    }
    // surjectivity away from the window edge: every target block of rank
    // m <= max_rank/2 has a source of rank n <= 2m <= max_rank
    for m in 0..=max_rank / 2 {
        for b in enumerate_blocks(&target, m)? {
            report.check(images.contains(&b), || {
                format!("target block {b} is not hit within the window")
            });
        }
    }
    report.count("image blocks", images.len() as u64, images.len() as u64);
    Ok(report)
}

/// Every admissible regime with f in 1..=max_f, for one family.
pub fn admissible_regimes(family: Family, max_f: u32) -> Vec<Regime> {
    let mut out = Vec::new();
    for f in 1..=max_f {
        for eps in [1, -1] {
            if let Ok(r) = Regime::new(family, f, eps) {
                out.push(r);
            }
        }
    }
    out
}

/// Options for the full audit suite.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Window for GL/U block audits (ambient rank n).
    pub max_n: u32,
    /// Window for Sp block audits (ambient rank m).
    pub max_m: u32,
    /// Window for the symbol enumeration audit.
    pub max_symbol_rank: u32,
    /// Twist contract window.
    pub max_e: u32,
    /// Largest f for which regimes are audited.
    pub max_f: u32,
    /// Witness pairs to attach where consistent.
    pub witnesses: Vec<(u64, u64)>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: 6,
            max_m: 4,
            max_symbol_rank: 5,
            max_e: 3,
            max_f: 2,
            witnesses: vec![(3, 5), (3, 7), (5, 3)],
        }
    }
}

/// Runs the whole audit suite. Returns one report per audit; the run passes
/// iff every report passes.
pub fn run_suite(opts: &SuiteOptions) -> Result<Vec<AuditReport>> {
    let round_trip_window = opts.max_n.clamp(8, 15);
    let mut reports = vec![
        audit_partition_towers(opts.max_n.min(12), round_trip_window, 4),
        audit_symbol_enumeration(opts.max_symbol_rank),
        audit_twist_contract(opts.max_symbol_rank.max(4), opts.max_e),
        audit_character_correspondence(opts.max_m.max(2)),
    ];

    for family in [Family::Gl, Family::U, Family::Sp] {
        for regime in admissible_regimes(family, opts.max_f) {
            let window = if family == Family::Sp { opts.max_m } else { opts.max_n };
            reports.push(audit_blocks(&regime, window)?);
        }
    }

    for family in [Family::Gl, Family::U] {
        for regime in admissible_regimes(family, opts.max_f) {
            reports.push(audit_correspondence(&regime, opts.max_n)?);
        }
    }

    // regimes with a consistent witness additionally check defect equality
    for &(q, ell) in &opts.witnesses {
        for family in [Family::Gl, Family::U] {
            if let Ok(regime) = Regime::from_witness(family, q, ell) {
                reports.push(audit_correspondence(&regime, opts.max_n)?);
            }
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_matches_constructive_enumeration() {
        let report = audit_symbol_enumeration(4);
        assert!(report.passed(), "{}", report.table());
    }

    #[test]
    fn oracle_rank2_odd_classes() {
        let classes = oracle_enumerate_symbols(2, SymbolFamily::OddUnordered, 9);
        assert_eq!(classes.len(), 6);
        let classes = oracle_enumerate_symbols(0, SymbolFamily::OddUnordered, 6);
        assert_eq!(classes.len(), 1);
        let classes = oracle_enumerate_symbols(0, SymbolFamily::EvenOrdered, 6);
        assert_eq!(classes.len(), 1);
    }

    #[test]
    fn partition_towers_pass() {
        let report = audit_partition_towers(8, 8, 3);
        assert!(report.passed(), "{}", report.table());
    }

    #[test]
    fn twist_contract_passes() {
        let report = audit_twist_contract(4, 2);
        assert!(report.passed(), "{}", report.table());
    }

    #[test]
    fn corrupted_twist_is_detected() {
        // swap the rows instead of twisting: breaks the hook/cohook exchange
        let corrupted = |s: &Symbol, e: u32| -> Symbol {
            if s.is_ordered() {
                s.swapped()
            } else {
                s.twist(e)
            }
        };
        let report = audit_twist_contract_with(&corrupted, 4, 2);
        assert!(!report.passed());
        assert!(report.total_counterexamples > 0);
        assert!(!report.counterexamples.is_empty());
    }

    #[test]
    fn character_correspondence_passes() {
        let report = audit_character_correspondence(4);
        assert!(report.passed(), "{}", report.table());
    }

    #[test]
    fn block_audits_pass_small() {
        let regime = Regime::new(Family::Gl, 1, -1).unwrap();
        let report = audit_blocks(&regime, 4).unwrap();
        assert!(report.passed(), "{}", report.table());
        let regime = Regime::new(Family::Sp, 1, -1).unwrap();
        let report = audit_blocks(&regime, 3).unwrap();
        assert!(report.passed(), "{}", report.table());
    }

    #[test]
    fn correspondence_audit_passes_small() {
        let regime = Regime::new(Family::U, 1, 1).unwrap();
        let report = audit_correspondence(&regime, 4).unwrap();
        assert!(report.passed(), "{}", report.table());
        let regime = Regime::from_witness(Family::Gl, 5, 3).unwrap();
        let report = audit_correspondence(&regime, 4).unwrap();
        assert!(report.passed(), "{}", report.table());
    }

    #[test]
    fn suite_determinism() {
        let opts = SuiteOptions {
            max_n: 3,
            max_m: 2,
            max_symbol_rank: 3,
            max_e: 2,
            max_f: 1,
            witnesses: vec![(5, 3)],
        };
        let a = run_suite(&opts).unwrap();
        let b = run_suite(&opts).unwrap();
        let render =
            |r: &[AuditReport]| serde_json::to_string(&r.iter().collect::<Vec<_>>()).unwrap();
        assert_eq!(render(&a), render(&b));
        assert!(a.iter().all(|r| r.passed()));
    }
}
