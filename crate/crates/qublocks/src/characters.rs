//! Quadratic unipotent character labels for the general linear / unitary
//! groups and for the symplectic groups, in both coordinate systems, and
//! the rank-collapsing bijection between the two sides.
//!
//! A GL/U label is a bipartition (mu1, mu2) of n, or equivalently the
//! 4-tuple (m1, m2, rho1, rho2) where the 2-core of mu_i is the staircase
//! of m_i and the 2-quotient of mu_i is rho_i. A symplectic label is a pair
//! (unordered odd-defect symbol, ordered even-defect symbol) of total rank
//! m, or equivalently the 4-tuple (h1, h2, rho1, rho2) with
//! h1(h1+1) + h2^2 + |rho1| + |rho2| = m.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Bipartition, Partition};
use crate::symbols::Symbol;

/// Which type-A family a character label belongs to. The two families share
/// the same labels (Ennola duality is the identity on them); the tag only
/// becomes load-bearing for block regimes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GlFamily {
    #[serde(rename = "gl")]
    Gl,
    #[serde(rename = "u")]
    U,
}

impl fmt::Display for GlFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlFamily::Gl => write!(f, "gl"),
            GlFamily::U => write!(f, "u"),
        }
    }
}

/// The 4-tuple coordinates of a GL/U label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GlTuple {
    pub m1: u32,
    pub m2: u32,
    pub rho1: Bipartition,
    pub rho2: Bipartition,
}

impl GlTuple {
    /// The rank t(m1) + t(m2) + 2|rho1| + 2|rho2| of the labelled character.
    pub fn rank(&self) -> u32 {
        triangular(self.m1) + triangular(self.m2) + 2 * self.rho1.size() + 2 * self.rho2.size()
    }
}

impl fmt::Display for GlTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.m1, self.m2, self.rho1, self.rho2)
    }
}

pub(crate) fn triangular(m: u32) -> u32 {
    m * (m + 1) / 2
}

/// A quadratic unipotent character of GL(n,q) or U(n,q).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuCharGlRepr", into = "QuCharGlRepr")]
pub struct QuCharGl {
    family: GlFamily,
    pair: Bipartition,
    tuple: GlTuple,
}

#[derive(Serialize, Deserialize)]
struct QuCharGlRepr {
    family: GlFamily,
    n: u32,
    pair: Bipartition,
    tuple: GlTuple,
    unipotent: bool,
}

impl TryFrom<QuCharGlRepr> for QuCharGl {
    type Error = Error;
    fn try_from(r: QuCharGlRepr) -> Result<Self> {
        let chi = QuCharGl::from_pair(r.family, r.pair);
        if chi.n() != r.n || chi.tuple != r.tuple || chi.is_unipotent() != r.unipotent {
            return Err(Error::invalid("inconsistent character record"));
        }
        Ok(chi)
    }
}

impl From<QuCharGl> for QuCharGlRepr {
    fn from(chi: QuCharGl) -> QuCharGlRepr {
        QuCharGlRepr {
            family: chi.family,
            n: chi.n(),
            unipotent: chi.is_unipotent(),
            pair: chi.pair,
            tuple: chi.tuple,
        }
    }
}

impl QuCharGl {
    /// Label from the pair coordinates, deriving the 4-tuple through the
    /// 2-core / 2-quotient decomposition of each component.
    pub fn from_pair(family: GlFamily, pair: Bipartition) -> QuCharGl {
        let slot = |mu: &Partition| -> (u32, Bipartition) {
            let (core, _) = mu.core(2);
            let m = core.staircase_index().expect("a 2-core is a staircase");
            let q = mu.quotient(2);
            (m, Bipartition::new(q[0].clone(), q[1].clone()))
        };
        let (m1, rho1) = slot(&pair.first);
        let (m2, rho2) = slot(&pair.second);
        QuCharGl {
            family,
            pair,
            tuple: GlTuple { m1, m2, rho1, rho2 },
        }
    }

    /// Label from the 4-tuple coordinates; inverse of `from_pair`.
    pub fn from_tuple(family: GlFamily, tuple: GlTuple) -> QuCharGl {
        let mu = |m: u32, rho: &Bipartition| -> Partition {
            Partition::from_core_and_quotient(
                &Partition::staircase(m),
                &[rho.first.clone(), rho.second.clone()],
                2,
            )
            .expect("a staircase is a 2-core")
        };
        let pair = Bipartition::new(mu(tuple.m1, &tuple.rho1), mu(tuple.m2, &tuple.rho2));
        QuCharGl { family, pair, tuple }
    }

    pub fn family(&self) -> GlFamily {
        self.family
    }

    pub fn pair(&self) -> &Bipartition {
        &self.pair
    }

    pub fn tuple(&self) -> &GlTuple {
        &self.tuple
    }

    pub fn n(&self) -> u32 {
        self.pair.size()
    }

    /// Unipotent characters are those with trivial second component.
    pub fn is_unipotent(&self) -> bool {
        self.pair.second.is_empty()
    }
}

/// The 4-tuple coordinates of a symplectic label; `h2` is signed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SpTuple {
    pub h1: u32,
    pub h2: i64,
    pub rho1: Bipartition,
    pub rho2: Bipartition,
}

impl SpTuple {
    /// The rank h1(h1+1) + h2^2 + |rho1| + |rho2| of the labelled character.
    pub fn rank(&self) -> u32 {
        self.h1 * (self.h1 + 1)
            + (self.h2 * self.h2) as u32
            + self.rho1.size()
            + self.rho2.size()
    }
}

impl fmt::Display for SpTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.h1, self.h2, self.rho1, self.rho2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
enum SpTag {
    #[serde(rename = "sp")]
    Sp,
}

/// A quadratic unipotent character of Sp(2m,q).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuCharSpRepr", into = "QuCharSpRepr")]
pub struct QuCharSp {
    symbols: (Symbol, Symbol),
    tuple: SpTuple,
}

#[derive(Serialize, Deserialize)]
struct QuCharSpRepr {
    family: SpTag,
    n: u32,
    pair: (Symbol, Symbol),
    tuple: SpTuple,
    unipotent: bool,
}

impl TryFrom<QuCharSpRepr> for QuCharSp {
    type Error = Error;
    fn try_from(r: QuCharSpRepr) -> Result<Self> {
        let psi = QuCharSp::from_pair(r.pair.0, r.pair.1)?;
        if psi.rank() != r.n || psi.tuple != r.tuple || psi.is_unipotent() != r.unipotent {
            return Err(Error::invalid("inconsistent character record"));
        }
        Ok(psi)
    }
}

impl From<QuCharSp> for QuCharSpRepr {
    fn from(psi: QuCharSp) -> QuCharSpRepr {
        QuCharSpRepr {
            family: SpTag::Sp,
            n: psi.rank(),
            unipotent: psi.is_unipotent(),
            pair: psi.symbols,
            tuple: psi.tuple,
        }
    }
}

impl QuCharSp {
    /// Label from a symbol pair. The first symbol must be unordered with odd
    /// defect and the second ordered with even defect.
    pub fn from_pair(first: Symbol, second: Symbol) -> Result<QuCharSp> {
        if first.is_ordered() || first.defect().rem_euclid(2) != 1 {
            return Err(Error::invalid(
                "first symbol must be unordered with odd defect",
            ));
        }
        if !second.is_ordered() || second.defect().rem_euclid(2) != 0 {
            return Err(Error::invalid(
                "second symbol must be ordered with even defect",
            ));
        }
        let (h1, rho1) = first.detach()?;
        let (h2, rho2) = second.detach()?;
        Ok(QuCharSp {
            symbols: (first, second),
            tuple: SpTuple {
                h1: h1 as u32,
                h2,
                rho1,
                rho2,
            },
        })
    }

    /// Label from the 4-tuple coordinates; inverse of `from_pair`.
    pub fn from_tuple(tuple: SpTuple) -> QuCharSp {
        let first = Symbol::attach_odd(tuple.h1, &tuple.rho1);
        let second = Symbol::attach_even(tuple.h2, &tuple.rho2);
        QuCharSp {
            symbols: (first, second),
            tuple,
        }
    }

    pub fn symbols(&self) -> (&Symbol, &Symbol) {
        (&self.symbols.0, &self.symbols.1)
    }

    pub fn tuple(&self) -> &SpTuple {
        &self.tuple
    }

    /// The rank m, i.e. the label belongs to Sp(2m,q).
    pub fn rank(&self) -> u32 {
        self.symbols.0.rank() + self.symbols.1.rank()
    }

    /// Unipotent characters are those whose second symbol has rank 0.
    pub fn is_unipotent(&self) -> bool {
        self.symbols.1.rank() == 0
    }

    /// Apply the `e`-twist to both symbols.
    pub fn twisted(&self, e: u32) -> QuCharSp {
        QuCharSp::from_pair(self.symbols.0.twist(e), self.symbols.1.twist(e))
            .expect("twisting preserves defect parity and orderedness")
    }
}

/// (h1, h2) -> (m1, m2): m1 = sup(h1+h2, -h1-h2-1), m2 = sup(h1-h2, h2-h1-1).
/// Satisfies t(m1) + t(m2) = h1(h1+1) + h2^2.
pub fn waldspurger_mh(h1: u32, h2: i64) -> (u32, u32) {
    let h1 = h1 as i64;
    let m1 = (h1 + h2).max(-h1 - h2 - 1);
    let m2 = (h1 - h2).max(h2 - h1 - 1);
    (m1 as u32, m2 as u32)
}

/// Inverse of `waldspurger_mh`: of the four candidates h1+h2 in {m1, -m1-1},
/// h1-h2 in {m2, -m2-1}, exactly one is integral with h1 >= 0 and maps back.
pub fn waldspurger_hm(m1: u32, m2: u32) -> (u32, i64) {
    let (a1, a2) = (m1 as i64, -(m1 as i64) - 1);
    let (b1, b2) = (m2 as i64, -(m2 as i64) - 1);
    let mut found = None;
    for a in [a1, a2] {
        for b in [b1, b2] {
            if (a + b).rem_euclid(2) != 0 {
                continue;
            }
            let h1 = (a + b) / 2;
            let h2 = (a - b) / 2;
            if h1 < 0 {
                continue;
            }
            if waldspurger_mh(h1 as u32, h2) == (m1, m2) {
                assert!(found.is_none(), "preimage of ({m1},{m2}) is not unique");
                found = Some((h1 as u32, h2));
            }
        }
    }
    found.expect("every (m1,m2) has a preimage")
}

/// The global character correspondence: (m1, m2, rho1, rho2) of GL/U maps to
/// (h1, h2, rho1, rho2) of Sp, preserving the rho slots.
pub fn correspond_char(chi: &QuCharGl) -> QuCharSp {
    let t = chi.tuple();
    let (h1, h2) = waldspurger_hm(t.m1, t.m2);
    QuCharSp::from_tuple(SpTuple {
        h1,
        h2,
        rho1: t.rho1.clone(),
        rho2: t.rho2.clone(),
    })
}

/// Inverse of `correspond_char`; the family tag is metadata.
pub fn correspond_char_inv(psi: &QuCharSp, family: GlFamily) -> QuCharGl {
    let t = psi.tuple();
    let (m1, m2) = waldspurger_mh(t.h1, t.h2);
    QuCharGl::from_tuple(
        family,
        GlTuple {
            m1,
            m2,
            rho1: t.rho1.clone(),
            rho2: t.rho2.clone(),
        },
    )
}

/// All quadratic unipotent characters of GL(n,q) or U(n,q), sorted by tuple.
pub fn enumerate_gl(family: GlFamily, n: u32) -> Vec<QuCharGl> {
    let mut out: Vec<QuCharGl> = Bipartition::all(n)
        .into_iter()
        .map(|pair| QuCharGl::from_pair(family, pair))
        .collect();
    out.sort_by(|a, b| a.tuple.cmp(&b.tuple));
    out
}

/// All quadratic unipotent characters of Sp(2m,q), sorted by tuple.
pub fn enumerate_sp(m: u32) -> Vec<QuCharSp> {
    let mut out = Vec::new();
    let mut h1 = 0u32;
    while h1 * (h1 + 1) <= m {
        let rem1 = m - h1 * (h1 + 1);
        let mut h2 = 0i64;
        while (h2 * h2) as u32 <= rem1 {
            let rem = rem1 - (h2 * h2) as u32;
            let signs: &[i64] = if h2 == 0 { &[1] } else { &[1, -1] };
            for n1 in 0..=rem {
                for rho1 in Bipartition::all(n1) {
                    for rho2 in Bipartition::all(rem - n1) {
                        for &sign in signs {
                            out.push(QuCharSp::from_tuple(SpTuple {
                                h1,
                                h2: sign * h2,
                                rho1: rho1.clone(),
                                rho2: rho2.clone(),
                            }));
                        }
                    }
                }
            }
            h2 += 1;
        }
        h1 += 1;
    }
    out.sort_by(|a, b| a.tuple.cmp(&b.tuple));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bip(a: &[u32], b: &[u32]) -> Bipartition {
        Bipartition::new(part(a), part(b))
    }

    #[test]
    fn gl_pair_tuple_examples() {
        let chi = QuCharGl::from_pair(GlFamily::Gl, bip(&[1], &[1]));
        assert_eq!(chi.n(), 2);
        assert_eq!(
            *chi.tuple(),
            GlTuple { m1: 1, m2: 1, rho1: Bipartition::empty(), rho2: Bipartition::empty() }
        );

        let chi = QuCharGl::from_pair(GlFamily::Gl, bip(&[2, 1], &[1]));
        assert_eq!(chi.n(), 4);
        assert_eq!((chi.tuple().m1, chi.tuple().m2), (2, 1));
        assert!(chi.tuple().rho1.is_empty() && chi.tuple().rho2.is_empty());

        let chi = QuCharGl::from_pair(GlFamily::Gl, Bipartition::empty());
        assert_eq!(chi.n(), 0);
        assert_eq!((chi.tuple().m1, chi.tuple().m2), (0, 0));
    }

    #[test]
    fn gl_round_trip() {
        for n in 0..=8u32 {
            for pair in Bipartition::all(n) {
                let chi = QuCharGl::from_pair(GlFamily::U, pair.clone());
                assert_eq!(chi.tuple().rank(), n);
                let back = QuCharGl::from_tuple(GlFamily::U, chi.tuple().clone());
                assert_eq!(back.pair(), &pair);
            }
        }
    }

    #[test]
    fn sp_pair_tuple_examples() {
        let theta = Symbol::unordered(vec![0, 1, 2], vec![]).unwrap();
        let trivial = Symbol::ordered(vec![], vec![]).unwrap();
        let psi = QuCharSp::from_pair(theta, trivial).unwrap();
        assert_eq!(psi.rank(), 2);
        assert_eq!(
            *psi.tuple(),
            SpTuple { h1: 1, h2: 0, rho1: Bipartition::empty(), rho2: Bipartition::empty() }
        );

        let s1 = Symbol::unordered(vec![0], vec![]).unwrap();
        let s2 = Symbol::ordered(vec![], vec![]).unwrap();
        let psi = QuCharSp::from_pair(s1, s2).unwrap();
        assert_eq!(psi.rank(), 0);
        assert_eq!((psi.tuple().h1, psi.tuple().h2), (0, 0));

        // wrong defect parity is rejected
        let even = Symbol::unordered(vec![1], vec![0]).unwrap();
        let trivial = Symbol::ordered(vec![], vec![]).unwrap();
        assert!(QuCharSp::from_pair(even, trivial).is_err());
        let odd = Symbol::ordered(vec![0, 1, 2], vec![]).unwrap();
        let s1 = Symbol::unordered(vec![0], vec![]).unwrap();
        assert!(QuCharSp::from_pair(s1, odd).is_err());
    }

    #[test]
    fn sp_round_trip() {
        for m in 0..=5u32 {
            for psi in enumerate_sp(m) {
                assert_eq!(psi.rank(), m);
                assert_eq!(psi.tuple().rank(), m);
                let (s1, s2) = psi.symbols();
                let back = QuCharSp::from_pair(s1.clone(), s2.clone()).unwrap();
                assert_eq!(back, psi);
            }
        }
    }

    #[test]
    fn waldspurger_examples() {
        assert_eq!(waldspurger_mh(1, 0), (1, 1));
        assert_eq!(waldspurger_mh(0, 2), (2, 1));
        assert_eq!(waldspurger_mh(0, -2), (1, 2));
        assert_eq!(waldspurger_mh(0, 0), (0, 0));
        assert_eq!(waldspurger_hm(1, 1), (1, 0));
        assert_eq!(waldspurger_hm(2, 1), (0, 2));
        assert_eq!(waldspurger_hm(1, 2), (0, -2));
    }

    #[test]
    fn waldspurger_bijection() {
        // brute force: every (h1, h2) in a window maps to some (m1, m2), and
        // hm recovers it uniquely
        for h1 in 0..=10u32 {
            for h2 in -10..=10i64 {
                let (m1, m2) = waldspurger_mh(h1, h2);
                assert_eq!(
                    triangular(m1) + triangular(m2),
                    h1 * (h1 + 1) + (h2 * h2) as u32
                );
                assert_eq!(waldspurger_hm(m1, m2), (h1, h2));
            }
        }
        for m1 in 0..=8u32 {
            for m2 in 0..=8u32 {
                let (h1, h2) = waldspurger_hm(m1, m2);
                assert_eq!(waldspurger_mh(h1, h2), (m1, m2));
            }
        }
    }

    #[test]
    fn correspondence_named_examples() {
        // the 2-cuspidal pair (1,1) of GL(2,q) maps to the cuspidal rank-2
        // symplectic character
        let chi = QuCharGl::from_pair(GlFamily::Gl, bip(&[1], &[1]));
        let psi = correspond_char(&chi);
        assert_eq!(psi.rank(), 2);
        let (s1, s2) = psi.symbols();
        assert_eq!(s1, &Symbol::unordered(vec![0, 1, 2], vec![]).unwrap());
        assert_eq!(s2, &Symbol::ordered(vec![], vec![]).unwrap());
        assert_eq!((psi.tuple().h1, psi.tuple().h2), (1, 0));

        let chi = QuCharGl::from_pair(GlFamily::Gl, bip(&[2, 1], &[1]));
        let psi = correspond_char(&chi);
        assert_eq!(psi.rank(), 4);
        assert_eq!((psi.tuple().h1, psi.tuple().h2), (0, 2));
        let chi = QuCharGl::from_pair(GlFamily::Gl, bip(&[1], &[2, 1]));
        let psi = correspond_char(&chi);
        assert_eq!(psi.rank(), 4);
        assert_eq!((psi.tuple().h1, psi.tuple().h2), (0, -2));

        let chi = QuCharGl::from_pair(GlFamily::Gl, Bipartition::empty());
        let psi = correspond_char(&chi);
        assert_eq!(psi.rank(), 0);
    }

    #[test]
    fn correspondence_round_trip() {
        for m in 0..=6u32 {
            for psi in enumerate_sp(m) {
                let chi = correspond_char_inv(&psi, GlFamily::Gl);
                let t = chi.tuple();
                assert_eq!(
                    chi.n(),
                    triangular(t.m1) + triangular(t.m2)
                        + 2 * t.rho1.size()
                        + 2 * t.rho2.size()
                );
                assert_eq!(correspond_char(&chi), psi);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_gl(GlFamily::Gl, 0).len(), 1);
        let gl4 = enumerate_gl(GlFamily::Gl, 4);
        assert_eq!(gl4.len(), 20);
        assert_eq!(gl4.iter().filter(|c| c.is_unipotent()).count(), 5);
        let sp2 = enumerate_sp(2);
        assert_eq!(sp2.len(), 23);
        assert_eq!(sp2.iter().filter(|c| c.is_unipotent()).count(), 6);
    }

    #[test]
    fn distribution_of_images() {
        // ranks of the GL images of the 23 rank-2 symplectic characters
        let mut by_n = std::collections::BTreeMap::new();
        for psi in enumerate_sp(2) {
            let chi = correspond_char_inv(&psi, GlFamily::Gl);
            *by_n.entry(chi.n()).or_insert(0u32) += 1;
        }
        assert_eq!(by_n, [(2, 1), (3, 8), (4, 14)].into_iter().collect());

        let mut by_m = std::collections::BTreeMap::new();
        for chi in enumerate_gl(GlFamily::Gl, 4) {
            let psi = correspond_char(&chi);
            *by_m.entry(psi.rank()).or_insert(0u32) += 1;
        }
        assert_eq!(by_m, [(2, 14), (3, 4), (4, 2)].into_iter().collect());
    }

    #[test]
    fn unipotent_sublocus() {
        for n in 0..=8u32 {
            let count = enumerate_gl(GlFamily::Gl, n)
                .iter()
                .filter(|c| c.is_unipotent())
                .count() as u64;
            assert_eq!(count, crate::partitions::multipartition_count(1, n));
        }
    }

    #[test]
    fn serde_character_shapes() {
        let chi = QuCharGl::from_pair(GlFamily::Gl, bip(&[1], &[1]));
        let json = serde_json::to_string(&chi).unwrap();
        assert_eq!(
            json,
            r#"{"family":"gl","n":2,"pair":[[1],[1]],"tuple":{"m1":1,"m2":1,"rho1":[[],[]],"rho2":[[],[]]},"unipotent":false}"#
        );
        let back: QuCharGl = serde_json::from_str(&json).unwrap();
        assert_eq!(back, chi);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);

        let psi = correspond_char(&chi);
        let json = serde_json::to_string(&psi).unwrap();
        let back: QuCharSp = serde_json::from_str(&json).unwrap();
        assert_eq!(back, psi);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
