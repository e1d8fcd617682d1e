//! l-block labels and membership for the admissible regimes, block
//! enumeration, the block correspondences between the type-A and type-C
//! sides, defect-group exponents, local-group descriptors and endoscopic
//! labels.
//!
//! A regime fixes the arithmetic situation (family, f, sign eps with
//! l | q^f - eps). GL/U blocks are labelled by 6-tuples
//! (m1, m2, sigma1, sigma2, M1, M2) with the sigma componentwise f-core
//! bipartitions; symplectic blocks by a pair of symbols which are f-cores
//! (eps = +1) or f-cocores (eps = -1) together with the weights (M1, M2).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::characters::{
    correspond_char, enumerate_gl, enumerate_sp, triangular, waldspurger_hm, waldspurger_mh,
    GlFamily, QuCharGl, QuCharSp,
};
use crate::error::{Error, Result};
use crate::partitions::{multipartition_count, Bipartition, Partition};
use crate::symbols::{Symbol, SymbolFamily};

/// Group family of a regime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "gl")]
    Gl,
    #[serde(rename = "u")]
    U,
    #[serde(rename = "sp")]
    Sp,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Family::Gl),
            "u" => Ok(Family::U),
            "sp" => Ok(Family::Sp),
            other => Err(Error::invalid(format!(
                "unknown family '{other}' (expected gl, u or sp)"
            ))),
        }
    }
}

impl From<GlFamily> for Family {
    fn from(f: GlFamily) -> Family {
        match f {
            GlFamily::Gl => Family::Gl,
            GlFamily::U => Family::U,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Gl => write!(f, "gl"),
            Family::U => write!(f, "u"),
            Family::Sp => write!(f, "sp"),
        }
    }
}

/// A concrete arithmetic pair (q, l) consistent with a regime, together
/// with the derived valuation a = nu_l(q^{2f} - 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub q: u64,
    pub ell: u64,
    pub a: u32,
}

/// The arithmetic situation classifying blocks: group family, the order `f`
/// of q^2 mod l, and the sign eps with l | q^f - eps. An optional witness
/// (q, l) enables defect exponents.
///
/// Equality, ordering and hashing ignore the witness: the witness never
/// changes which block a label denotes.
#[derive(Clone, Debug)]
pub struct Regime {
    family: Family,
    f: u32,
    eps: i8,
    witness: Option<Witness>,
}

impl PartialEq for Regime {
    fn eq(&self, other: &Self) -> bool {
        (self.family, self.f, self.eps) == (other.family, other.f, other.eps)
    }
}
impl Eq for Regime {}
impl PartialOrd for Regime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Regime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.family, self.f, self.eps).cmp(&(other.family, other.f, other.eps))
    }
}
impl std::hash::Hash for Regime {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.family, self.f, self.eps).hash(state);
    }
}

impl Regime {
    /// Validates admissibility of (family, f, eps) and builds the regime.
    ///
    /// Admissible: (gl, any f, -1); (u, f odd, +1); (u, f even, -1);
    /// (sp, any f, -1); (sp, f odd, +1). Everything else is rejected with a
    /// diagnostic naming the excluded case.
    pub fn new(family: Family, f: u32, eps: i8) -> Result<Regime> {
        if f == 0 {
            return Err(Error::InadmissibleRegime("f must be positive".into()));
        }
        if eps != 1 && eps != -1 {
            return Err(Error::InadmissibleRegime("eps must be +1 or -1".into()));
        }
        let f_odd = f % 2 == 1;
        match (family, f_odd, eps) {
            (Family::Gl, _, -1) => {}
            (Family::U, true, 1) => {}
            (Family::U, false, -1) => {}
            (Family::Sp, _, -1) => {}
            (Family::Sp, true, 1) => {}
            (Family::Gl, _, 1) => {
                return Err(Error::InadmissibleRegime(
                    "l | q^f - 1 puts the general linear family in the excluded odd-e case; \
                     gl requires eps = -1"
                        .into(),
                ));
            }
            (Family::U, true, -1) => {
                return Err(Error::InadmissibleRegime(
                    "the case e = 2 (mod 4) is excluded: the unitary family with odd f \
                     requires eps = +1"
                        .into(),
                ));
            }
            (Family::U, false, 1) => {
                return Err(Error::InadmissibleRegime(
                    "the case e = 2 (mod 4) is excluded: eps = +1 with even f is inconsistent \
                     with f being the order of q^2 mod l"
                        .into(),
                ));
            }
            (Family::Sp, false, 1) => {
                return Err(Error::InadmissibleRegime(
                    "eps = +1 requires odd f (f is the order of q^2 mod l)".into(),
                ));
            }
            _ => unreachable!("eps checked above"),
        }
        Ok(Regime {
            family,
            f,
            eps,
            witness: None,
        })
    }

    /// Builds a regime and checks the witness (q, l) against it: l must be
    /// an odd prime not dividing the prime power q, f must equal the order
    /// of q^2 mod l, and eps must satisfy l | q^f - eps.
    pub fn with_witness(family: Family, f: u32, eps: i8, q: u64, ell: u64) -> Result<Regime> {
        let mut regime = Regime::new(family, f, eps)?;
        let (f0, eps0, a) = witness_arithmetic(q, ell)?;
        if f != f0 {
            return Err(Error::invalid(format!(
                "f = {f} is inconsistent with the witness: the order of {q}^2 mod {ell} is {f0}"
            )));
        }
        if eps != eps0 {
            return Err(Error::invalid(format!(
                "eps = {eps:+} is inconsistent with the witness: {ell} divides {q}^{f} - ({eps0:+})"
            )));
        }
        regime.witness = Some(Witness { q, ell, a });
        Ok(regime)
    }

    /// Derives (f, eps) from the witness alone.
    pub fn from_witness(family: Family, q: u64, ell: u64) -> Result<Regime> {
        let (f, eps, _) = witness_arithmetic(q, ell)?;
        Regime::with_witness(family, f, eps, q, ell)
    }

    /// Same regime aimed at another family; revalidates admissibility and
    /// keeps the witness.
    pub(crate) fn retarget(&self, family: Family) -> Result<Regime> {
        let mut regime = Regime::new(family, self.f, self.eps)?;
        regime.witness = self.witness;
        Ok(regime)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn eps(&self) -> i8 {
        self.eps
    }

    pub fn witness(&self) -> Option<Witness> {
        self.witness
    }

    /// The order e of q mod l: f when eps = +1, otherwise 2f.
    pub fn e(&self) -> u32 {
        if self.eps == 1 {
            self.f
        } else {
            2 * self.f
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, f={}, eps={:+})", self.family, self.f, self.eps)?;
        if let Some(w) = self.witness {
            write!(f, " [q={}, l={}]", w.q, w.ell)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RegimeRepr {
    family: Family,
    f: u32,
    eps: i8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ell: Option<u64>,
}

impl TryFrom<RegimeRepr> for Regime {
    type Error = Error;
    fn try_from(r: RegimeRepr) -> Result<Regime> {
        match (r.q, r.ell) {
            (Some(q), Some(ell)) => Regime::with_witness(r.family, r.f, r.eps, q, ell),
            (None, None) => Regime::new(r.family, r.f, r.eps),
            _ => Err(Error::invalid("q and ell must be supplied together")),
        }
    }
}

impl From<Regime> for RegimeRepr {
    fn from(r: Regime) -> RegimeRepr {
        RegimeRepr {
            family: r.family,
            f: r.f,
            eps: r.eps,
            q: r.witness.map(|w| w.q),
            ell: r.witness.map(|w| w.ell),
        }
    }
}

impl Serialize for Regime {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RegimeRepr::from(self.clone()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Regime {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RegimeRepr::deserialize(d)?;
        Regime::try_from(repr).map_err(serde::de::Error::custom)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut m = q;
            while m.is_multiple_of(p) {
                m /= p;
            }
            return m == 1;
        }
        p += 1;
    }
    true // q itself is prime
}

fn mod_pow(mut base: u128, mut exp: u64, modulus: u128) -> u128 {
    let mut acc: u128 = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// (f, eps, a) for a witness pair: f = order of q^2 mod l, eps the sign with
/// l | q^f - eps, and a = nu_l(q^{2f} - 1).
fn witness_arithmetic(q: u64, ell: u64) -> Result<(u32, i8, u32)> {
    if !is_prime(ell) || ell.is_multiple_of(2) {
        return Err(Error::invalid(format!("l = {ell} must be an odd prime")));
    }
    if ell > 1 << 20 {
        return Err(Error::invalid(format!("l = {ell} is too large")));
    }
    if !is_prime_power(q) {
        return Err(Error::invalid(format!("q = {q} must be a prime power")));
    }
    if q.is_multiple_of(ell) {
        return Err(Error::invalid(format!("l = {ell} must not divide q = {q}")));
    }
    let q2 = (q as u128 * q as u128 % ell as u128) as u64;
    let mut f = 1u32;
    let mut t = q2 % ell;
    while t != 1 {
        t = (t as u128 * q2 as u128 % ell as u128) as u64;
        f += 1;
    }
    let qf = mod_pow(q as u128, f as u64, ell as u128) as u64;
    let eps: i8 = if qf == 1 {
        1
    } else if qf == ell - 1 {
        -1
    } else {
        unreachable!("q^f mod l squares to 1")
    };
    let mut a = 0u32;
    let mut modulus: u128 = 1;
    while let Some(next) = modulus.checked_mul(ell as u128) {
        if mod_pow(q as u128, 2 * f as u64, next) != 1 {
            break;
        }
        a += 1;
        modulus = next;
    }
    Ok((f, eps, a))
}

fn nu_factorial(m: u32, ell: u64) -> u32 {
    let mut v = 0u64;
    let mut pk = ell;
    while pk <= m as u64 {
        v += m as u64 / pk;
        match pk.checked_mul(ell) {
            Some(next) => pk = next,
            None => break,
        }
    }
    v as u32
}

/// Fixed core data of a block label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockCore {
    /// GL/U: (m1, m2) plus the componentwise f-core bipartitions.
    Gl {
        m1: u32,
        m2: u32,
        sigma1: Bipartition,
        sigma2: Bipartition,
    },
    /// Sp: the pair of core symbols (f-cores for eps = +1, f-cocores for
    /// eps = -1).
    Sp { first: Symbol, second: Symbol },
}

/// A canonical block label: regime, core data, weights and ambient rank.
/// Two labels are equal iff they denote the same block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockLabel {
    regime: Regime,
    core: BlockCore,
    weights: (u32, u32),
    rank: u32,
}

impl BlockLabel {
    /// GL/U block label from its 6-tuple; validates that the sigma are
    /// componentwise f-cores.
    pub fn new_gl(
        regime: &Regime,
        m1: u32,
        m2: u32,
        sigma1: Bipartition,
        sigma2: Bipartition,
        weights: (u32, u32),
    ) -> Result<BlockLabel> {
        if regime.family == Family::Sp {
            return Err(Error::invalid("6-tuple labels belong to the gl/u families"));
        }
        let f = regime.f;
        for sigma in [&sigma1, &sigma2] {
            if sigma.f_core(f).1 != 0 {
                return Err(Error::invalid(format!("{sigma} is not a componentwise {f}-core")));
            }
        }
        let rank = triangular(m1)
            + triangular(m2)
            + 2 * (f * weights.0 + sigma1.size())
            + 2 * (f * weights.1 + sigma2.size());
        Ok(BlockLabel {
            regime: regime.clone(),
            core: BlockCore::Gl { m1, m2, sigma1, sigma2 },
            weights,
            rank,
        })
    }

    /// Sp block label from its core symbol pair; validates the core
    /// condition required by the regime sign.
    pub fn new_sp(
        regime: &Regime,
        first: Symbol,
        second: Symbol,
        weights: (u32, u32),
    ) -> Result<BlockLabel> {
        if regime.family != Family::Sp {
            return Err(Error::invalid("symbol-pair labels belong to the sp family"));
        }
        if first.is_ordered() || first.defect().rem_euclid(2) != 1 {
            return Err(Error::invalid("first core symbol must be unordered with odd defect"));
        }
        if !second.is_ordered() || second.defect().rem_euclid(2) != 0 {
            return Err(Error::invalid("second core symbol must be ordered with even defect"));
        }
        let f = regime.f;
        for s in [&first, &second] {
            let clean = if regime.eps == 1 {
                s.removable_hooks(f).is_empty()
            } else {
                s.removable_cohooks(f).is_empty()
            };
            if !clean {
                let kind = if regime.eps == 1 { "core" } else { "cocore" };
                return Err(Error::invalid(format!("{s} is not a {f}-{kind}")));
            }
        }
        let rank = first.rank() + second.rank() + f * (weights.0 + weights.1);
        Ok(BlockLabel {
            regime: regime.clone(),
            core: BlockCore::Sp { first, second },
            weights,
            rank,
        })
    }

    pub fn regime(&self) -> &Regime {
        &self.regime
    }

    pub fn core(&self) -> &BlockCore {
        &self.core
    }

    pub fn weights(&self) -> (u32, u32) {
        self.weights
    }

    /// Ambient rank: n for GL/U blocks, m for Sp blocks.
    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Number of quadratic unipotent characters in the block:
    /// p_{2f}(M1) * p_{2f}(M2), the irreducible-character count of
    /// Z_{2f} wr S_{M1} x Z_{2f} wr S_{M2}.
    pub fn char_count(&self) -> u64 {
        let e = 2 * self.regime.f;
        multipartition_count(e, self.weights.0) * multipartition_count(e, self.weights.1)
    }

    /// l-adic valuation of the defect group order:
    /// a(M1 + M2) + nu_l(M1!) + nu_l(M2!). Requires a witness.
    pub fn defect_exponent(&self) -> Result<u32> {
        let w = self.regime.witness.ok_or_else(|| {
            Error::MissingWitness("defect exponents need the (q, l) witness".into())
        })?;
        let (m1, m2) = self.weights;
        Ok(w.a * (m1 + m2) + nu_factorial(m1, w.ell) + nu_factorial(m2, w.ell))
    }

    /// Shape of the local subgroup Z(L)_l x| (Z_{2f} wr S_{M1} x Z_{2f} wr S_{M2}).
    pub fn local_group(&self) -> LocalGroupDescriptor {
        let f = self.regime.f;
        let (m1, m2) = self.weights;
        let torus_order = match (self.regime.family, self.regime.eps) {
            (Family::Gl | Family::U, _) => format!("(q^{}-1)^{}", 2 * f, m1 + m2),
            (Family::Sp, 1) => format!("(q^{}-1)^{}", f, m1 + m2),
            (Family::Sp, _) => format!("(q^{}+1)^{}", f, m1 + m2),
        };
        LocalGroupDescriptor {
            cyclic_order: 2 * f,
            m1,
            m2,
            torus_order,
            irr_count: self.char_count(),
        }
    }

    /// Endoscopic product-group label: (n1, n2) with n1 + n2 = n for GL/U,
    /// (k1, k2, O-type) with k1 + k2 = m for Sp. The O-type is plus iff the
    /// h of the even core symbol is even.
    pub fn endoscopic(&self) -> EndoscopicLabel {
        let f = self.regime.f;
        let (w1, w2) = self.weights;
        match &self.core {
            BlockCore::Gl { m1, m2, sigma1, sigma2 } => {
                let lambda = |m: u32, sigma: &Bipartition| -> Partition {
                    let p = Partition::from_core_and_quotient(
                        &Partition::staircase(m),
                        &[sigma.first.clone(), sigma.second.clone()],
                        2,
                    )
                    .expect("a staircase is a 2-core");
                    debug_assert_eq!(p.core(2 * f).1, 0, "core partitions are 2f-cores");
                    p
                };
                EndoscopicLabel::Gl {
                    n1: 2 * f * w1 + lambda(*m1, sigma1).size(),
                    n2: 2 * f * w2 + lambda(*m2, sigma2).size(),
                }
            }
            BlockCore::Sp { first, second } => EndoscopicLabel::Sp {
                k1: f * w1 + first.rank(),
                k2: f * w2 + second.rank(),
                o_type: if second.defect().rem_euclid(4) == 0 {
                    OrthogonalType::Plus
                } else {
                    OrthogonalType::Minus
                },
            },
        }
    }

    /// Advisory flag q > 2m for Sp blocks carrying a witness.
    pub fn hypothesis_q_gt_2m(&self) -> Option<bool> {
        match (self.regime.family, self.regime.witness) {
            (Family::Sp, Some(w)) => Some(w.q > 2 * self.rank as u64),
            _ => None,
        }
    }

    /// The characters belonging to this GL/U block.
    pub fn members_gl(&self) -> Result<Vec<QuCharGl>> {
        let family = match self.regime.family {
            Family::Gl => GlFamily::Gl,
            Family::U => GlFamily::U,
            Family::Sp => return Err(Error::invalid("sp blocks have symplectic members")),
        };
        Ok(enumerate_gl(family, self.rank)
            .into_iter()
            .filter(|chi| block_of_gl(chi, &self.regime).expect("family matches") == *self)
            .collect())
    }

    /// The characters belonging to this Sp block.
    pub fn members_sp(&self) -> Result<Vec<QuCharSp>> {
        if self.regime.family != Family::Sp {
            return Err(Error::invalid("gl/u blocks have type-A members"));
        }
        Ok(enumerate_sp(self.rank)
            .into_iter()
            .filter(|psi| block_of_sp(psi, &self.regime).expect("family matches") == *self)
            .collect())
    }

    /// Full JSON-facing record with the derived data filled in.
    pub fn report(&self) -> BlockReport {
        BlockReport {
            regime: self.regime.clone(),
            core: CoreRepr::from(&self.core),
            weights: self.weights,
            rank: self.rank,
            size: self.char_count(),
            defect_exponent: self.defect_exponent().ok(),
            endoscopic: self.endoscopic(),
            q_gt_2m: self.hypothesis_q_gt_2m(),
        }
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.core {
            BlockCore::Gl { m1, m2, sigma1, sigma2 } => write!(
                f,
                "({m1},{m2},{sigma1},{sigma2},{},{}) n={} {}",
                self.weights.0, self.weights.1, self.rank, self.regime
            ),
            BlockCore::Sp { first, second } => write!(
                f,
                "({first},{second},{},{}) m={} {}",
                self.weights.0, self.weights.1, self.rank, self.regime
            ),
        }
    }
}

/// Local subgroup shape attached to a block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalGroupDescriptor {
    /// Order of the cyclic wreath factor, i.e. 2f.
    pub cyclic_order: u32,
    pub m1: u32,
    pub m2: u32,
    pub torus_order: String,
    pub irr_count: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrthogonalType {
    #[serde(rename = "O+")]
    Plus,
    #[serde(rename = "O-")]
    Minus,
}

impl fmt::Display for OrthogonalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrthogonalType::Plus => write!(f, "O+"),
            OrthogonalType::Minus => write!(f, "O-"),
        }
    }
}

/// Endoscopic product-group label of a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EndoscopicLabel {
    Gl { n1: u32, n2: u32 },
    Sp {
        k1: u32,
        k2: u32,
        #[serde(rename = "type")]
        o_type: OrthogonalType,
    },
}

impl fmt::Display for EndoscopicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EndoscopicLabel::Gl { n1, n2 } => write!(f, "G_{n1} x G_{n2}"),
            EndoscopicLabel::Sp { k1, k2, o_type } => {
                write!(f, "Sp({}) x {}({})", 2 * k1, o_type, 2 * k2)
            }
        }
    }
}

/// Serialized form of a block core.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoreRepr {
    Gl {
        m1: u32,
        m2: u32,
        sigma1: Bipartition,
        sigma2: Bipartition,
    },
    Sp { symbols: (Symbol, Symbol) },
}

impl From<&BlockCore> for CoreRepr {
    fn from(core: &BlockCore) -> CoreRepr {
        match core {
            BlockCore::Gl { m1, m2, sigma1, sigma2 } => CoreRepr::Gl {
                m1: *m1,
                m2: *m2,
                sigma1: sigma1.clone(),
                sigma2: sigma2.clone(),
            },
            BlockCore::Sp { first, second } => CoreRepr::Sp {
                symbols: (first.clone(), second.clone()),
            },
        }
    }
}

/// JSON-facing block record. Serializes as
/// `{"regime":..., "core":..., "weights":[M1,M2], "rank":..., "size":...,
///   "defect_exponent":..?, "endoscopic":..., "q_gt_2m":..?}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BlockReport {
    pub regime: Regime,
    pub core: CoreRepr,
    pub weights: (u32, u32),
    pub rank: u32,
    pub size: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defect_exponent: Option<u32>,
    pub endoscopic: EndoscopicLabel,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_gt_2m: Option<bool>,
}

impl BlockReport {
    /// Rebuild the validated label; the derived fields are checked.
    pub fn to_label(&self) -> Result<BlockLabel> {
        let label = match &self.core {
            CoreRepr::Gl { m1, m2, sigma1, sigma2 } => BlockLabel::new_gl(
                &self.regime,
                *m1,
                *m2,
                sigma1.clone(),
                sigma2.clone(),
                self.weights,
            )?,
            CoreRepr::Sp { symbols } => BlockLabel::new_sp(
                &self.regime,
                symbols.0.clone(),
                symbols.1.clone(),
                self.weights,
            )?,
        };
        if label.rank != self.rank || label.char_count() != self.size {
            return Err(Error::invalid("inconsistent block record"));
        }
        Ok(label)
    }
}

/// The block containing a GL/U character in the given regime.
pub fn block_of_gl(chi: &QuCharGl, regime: &Regime) -> Result<BlockLabel> {
    let matches = matches!(
        (chi.family(), regime.family),
        (GlFamily::Gl, Family::Gl) | (GlFamily::U, Family::U)
    );
    if !matches {
        return Err(Error::invalid(format!(
            "character family {} does not match regime family {}",
            chi.family(),
            regime.family
        )));
    }
    let t = chi.tuple();
    let (sigma1, w1) = t.rho1.f_core(regime.f);
    let (sigma2, w2) = t.rho2.f_core(regime.f);
    let label = BlockLabel::new_gl(regime, t.m1, t.m2, sigma1, sigma2, (w1, w2))?;
    debug_assert_eq!(label.rank, chi.n());
    Ok(label)
}

fn entry_multiset(s: &Symbol) -> Vec<u32> {
    let mut v: Vec<u32> = s.top().iter().chain(s.bottom()).copied().collect();
    v.sort_unstable();
    v
}

/// The block containing a symplectic character in the given regime.
///
/// For eps = +1 the label cores are the f-cores of the two symbols. For
/// eps = -1 the label cores are f-cocores, reached through the hook route:
/// f-twist the character, take f-cores, and f-twist those back. Direct
/// cohook removal reaches a cocore with the same entry multiset and the
/// same weight on each component, which is enforced as a runtime check;
/// the twist route is used for the label so that block labels transport
/// exactly along f-twisting.
pub fn block_of_sp(psi: &QuCharSp, regime: &Regime) -> Result<BlockLabel> {
    if regime.family != Family::Sp {
        return Err(Error::invalid(format!(
            "character family sp does not match regime family {}",
            regime.family
        )));
    }
    let f = regime.f;
    let (s1, s2) = psi.symbols();
    let label = if regime.eps == 1 {
        let t = psi.tuple();
        let (sigma1, w1) = t.rho1.f_core(f);
        let (sigma2, w2) = t.rho2.f_core(f);
        let first = Symbol::attach_odd(t.h1, &sigma1);
        let second = Symbol::attach_even(t.h2, &sigma2);
        // the tuple route must agree with the f-cores of the symbols
        assert_eq!(s1.core(f), (first.clone(), w1));
        assert_eq!(s2.core(f), (second.clone(), w2));
        BlockLabel::new_sp(regime, first, second, (w1, w2))?
    } else {
        let (pi1, w1) = s1.twist(f).core(f);
        let (pi2, w2) = s2.twist(f).core(f);
        let first = pi1.twist(f);
        let second = pi2.twist(f);
        // direct cohook removal must mirror the hook route entrywise
        let (tau1, v1) = s1.cocore(f);
        let (tau2, v2) = s2.cocore(f);
        assert_eq!((entry_multiset(&tau1), v1), (entry_multiset(&first), w1));
        assert_eq!((entry_multiset(&tau2), v2), (entry_multiset(&second), w2));
        BlockLabel::new_sp(regime, first, second, (w1, w2))?
    };
    debug_assert_eq!(label.rank, psi.rank());
    Ok(label)
}

fn f_core_partitions(size: u32, f: u32) -> Vec<Partition> {
    Partition::all(size)
        .into_iter()
        .filter(|p| p.core(f).1 == 0)
        .collect()
}

fn f_core_bipartitions(size: u32, f: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in 0..=size {
        for first in f_core_partitions(k, f) {
            for second in f_core_partitions(size - k, f) {
                out.push(Bipartition::new(first.clone(), second));
            }
        }
    }
    out
}

/// (weight, core) options for one slot: all M >= 0 and componentwise
/// f-core bipartitions sigma with f*M + |sigma| = n_i.
fn slot_options(n_i: u32, f: u32) -> Vec<(u32, Bipartition)> {
    let mut out = Vec::new();
    for m in 0..=n_i / f {
        for sigma in f_core_bipartitions(n_i - f * m, f) {
            out.push((m, sigma));
        }
    }
    out
}

/// All blocks of the given ambient rank in the given regime, sorted by
/// (core, weights).
pub fn enumerate_blocks(regime: &Regime, rank: u32) -> Result<Vec<BlockLabel>> {
    let f = regime.f;
    let mut out = Vec::new();
    match regime.family {
        Family::Gl | Family::U => {
            let mut m1 = 0u32;
            while triangular(m1) <= rank {
                let mut m2 = 0u32;
                while triangular(m1) + triangular(m2) <= rank {
                    let rem = rank - triangular(m1) - triangular(m2);
                    if rem.is_multiple_of(2) {
                        let total = rem / 2;
                        for n1 in 0..=total {
                            for (w1, sigma1) in slot_options(n1, f) {
                                for (w2, sigma2) in slot_options(total - n1, f) {
                                    out.push(BlockLabel::new_gl(
                                        regime,
                                        m1,
                                        m2,
                                        sigma1.clone(),
                                        sigma2,
                                        (w1, w2),
                                    )?);
                                }
                            }
                        }
                    }
                    m2 += 1;
                }
                m1 += 1;
            }
        }
        Family::Sp if regime.eps == 1 => {
            let mut h1 = 0u32;
            while h1 * (h1 + 1) <= rank {
                let rem1 = rank - h1 * (h1 + 1);
                let mut h2 = 0i64;
                while (h2 * h2) as u32 <= rem1 {
                    let rem = rem1 - (h2 * h2) as u32;
                    let signs: &[i64] = if h2 == 0 { &[1] } else { &[1, -1] };
                    for &sign in signs {
                        for n1 in 0..=rem {
                            for (w1, sigma1) in slot_options(n1, f) {
                                for (w2, sigma2) in slot_options(rem - n1, f) {
                                    let first = Symbol::attach_odd(h1, &sigma1);
                                    let second = Symbol::attach_even(sign * h2, &sigma2);
                                    out.push(BlockLabel::new_sp(
                                        regime,
                                        first,
                                        second,
                                        (w1, w2),
                                    )?);
                                }
                            }
                        }
                    }
                    h2 += 1;
                }
                h1 += 1;
            }
        }
        Family::Sp => {
            let cocores = |r: u32, family: SymbolFamily| -> Vec<Symbol> {
                Symbol::enumerate(r, family)
                    .into_iter()
                    .filter(|s| s.removable_cohooks(f).is_empty())
                    .collect()
            };
            for w1 in 0..=rank / f {
                for w2 in 0..=(rank - f * w1) / f {
                    let rem = rank - f * (w1 + w2);
                    for r1 in 0..=rem {
                        for tau1 in cocores(r1, SymbolFamily::OddUnordered) {
                            for tau2 in cocores(rem - r1, SymbolFamily::EvenOrdered) {
                                out.push(BlockLabel::new_sp(
                                    regime,
                                    tau1.clone(),
                                    tau2,
                                    (w1, w2),
                                )?);
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| (&a.core, a.weights).cmp(&(&b.core, b.weights)));
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]), "block labels repeat");
    Ok(out)
}

/// The forward block correspondence, from a GL/U block to the symplectic
/// block with the same (f, eps), sigma data and weights. For eps = -1 the
/// target core symbols are reached through f-twisting.
pub fn correspond_block(b: &BlockLabel) -> Result<BlockLabel> {
    let BlockCore::Gl { m1, m2, sigma1, sigma2 } = &b.core else {
        return Err(Error::invalid(
            "the forward correspondence expects a gl or u block; use the inverse for sp",
        ));
    };
    let f = b.regime.f;
    let (h1, h2) = waldspurger_hm(*m1, *m2);
    let mut first = Symbol::attach_odd(h1, sigma1);
    let mut second = Symbol::attach_even(h2, sigma2);
    if b.regime.eps == -1 {
        first = first.twist(f);
        second = second.twist(f);
    }
    let target = b.regime.retarget(Family::Sp)?;
    BlockLabel::new_sp(&target, first, second, b.weights)
}

/// Inverse of `correspond_block`; the target family must be admissible for
/// the regime (u for eps = +1, gl or u per the parity of f for eps = -1).
pub fn correspond_block_inv(b: &BlockLabel, target: GlFamily) -> Result<BlockLabel> {
    let BlockCore::Sp { first, second } = &b.core else {
        return Err(Error::invalid(
            "the inverse correspondence expects an sp block",
        ));
    };
    let f = b.regime.f;
    let (pi1, pi2) = if b.regime.eps == -1 {
        (first.twist(f), second.twist(f))
    } else {
        (first.clone(), second.clone())
    };
    let (h1, sigma1) = pi1.detach()?;
    let (h2, sigma2) = pi2.detach()?;
    let (m1, m2) = waldspurger_mh(h1 as u32, h2);
    let target_regime = b.regime.retarget(target.into())?;
    BlockLabel::new_gl(&target_regime, m1, m2, sigma1, sigma2, b.weights)
}

/// The character-level map that commutes with `block_of` in the given
/// regime: the global correspondence, composed with f-twisting of both
/// symbols when eps = -1.
pub fn correspond_char_blockwise(chi: &QuCharGl, regime: &Regime) -> Result<QuCharSp> {
    if regime.family == Family::Sp {
        return Err(Error::invalid("expected a gl or u source regime"));
    }
    let psi = correspond_char(chi);
    Ok(if regime.eps == -1 {
        psi.twisted(regime.f)
    } else {
        psi
    })
}

/// Convenience: 6-tuple view (h1, h2, sigma1, sigma2) of an Sp block core
/// read off the core symbols through the inverse attach construction.
pub fn sp_core_tuple(b: &BlockLabel) -> Result<(i64, i64, Bipartition, Bipartition)> {
    let BlockCore::Sp { first, second } = &b.core else {
        return Err(Error::invalid("expected an sp block"));
    };
    let (h1, sigma1) = first.detach()?;
    let (h2, sigma2) = second.detach()?;
    Ok((h1, h2, sigma1, sigma2))
}
