//! Truncated n-adic integers and the ideal lattice of Z_n.
//!
//! A truncation of depth l is a residue mod n^l, read as the first l digits
//! of an n-adic integer. Arithmetic is plain residue arithmetic; the
//! digit-level carry recursions are implemented separately and tested
//! against it. For composite n the ring Z_n splits by the Chinese remainder
//! theorem into Z_{p_i} factors, and its ideals are products of components
//! p_i^{a_i} Z_{p_i} or {0} — the combinatorics that ultimately indexes the
//! tree actions of BS(1,n).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::basen::checked_pow_u128;
use crate::error::{Error, Result};

/// Residues are kept below 2^63 so products fit u128 without widening.
const RESIDUE_CAP: u128 = 1 << 63;

/// Prime factorization of `n` as ascending `(prime, multiplicity)` pairs.
pub fn factorize(n: u32) -> Result<Vec<(u32, u32)>> {
    if n < 2 {
        return Err(Error::InvalidN(n));
    }
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p as u64 * p as u64 <= m as u64 {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    Ok(out)
}

/// n^depth, guarded by the residue cap.
pub fn truncation_modulus(base: u32, depth: u32) -> Result<u128> {
    if base < 2 {
        return Err(Error::InvalidN(base));
    }
    match checked_pow_u128(base as u128, depth) {
        Some(m) if m <= RESIDUE_CAP => Ok(m),
        _ => {
            let mut limit = 0;
            let mut acc: u128 = 1;
            while acc <= RESIDUE_CAP / base as u128 {
                acc *= base as u128;
                limit += 1;
            }
            Err(Error::DepthExceeded { requested: depth, limit })
        }
    }
}

/// An n-adic integer truncated to its first `depth` digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NAdic {
    base: u32,
    depth: u32,
    residue: u128,
}

impl NAdic {
    pub fn new(base: u32, depth: u32, residue: u128) -> Result<Self> {
        let m = truncation_modulus(base, depth)?;
        Ok(NAdic { base, depth, residue: residue % m })
    }

    pub fn from_digits(base: u32, digits: &[u32]) -> Result<Self> {
        let depth = digits.len() as u32;
        let m = truncation_modulus(base, depth)?;
        let mut residue: u128 = 0;
        for &d in digits.iter().rev() {
            if d >= base {
                return Err(Error::InvalidArgument(format!(
                    "digit {d} out of range for base {base}"
                )));
            }
            residue = residue * base as u128 + d as u128;
        }
        debug_assert!(residue < m);
        Ok(NAdic { base, depth, residue })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn residue(&self) -> u128 {
        self.residue
    }

    pub fn modulus(&self) -> u128 {
        checked_pow_u128(self.base as u128, self.depth).expect("validated at construction")
    }

    /// Digit at position `i` (0-based from the units place).
    pub fn digit(&self, i: u32) -> u32 {
        if i >= self.depth {
            return 0;
        }
        let w = checked_pow_u128(self.base as u128, i).expect("below modulus");
        ((self.residue / w) % self.base as u128) as u32
    }

    /// All `depth` digits, units place first.
    pub fn digits(&self) -> Vec<u32> {
        (0..self.depth).map(|i| self.digit(i)).collect()
    }

    /// The integer partial sum of the first `l` digits: sum a_i n^i, i < l.
    pub fn partial_sum(&self, l: u32) -> Result<u128> {
        if l > self.depth {
            return Err(Error::DepthExceeded { requested: l, limit: self.depth });
        }
        let w = checked_pow_u128(self.base as u128, l).expect("below modulus");
        Ok(self.residue % w)
    }

    fn check_shape(&self, other: &NAdic) -> Result<()> {
        if self.base != other.base || self.depth != other.depth {
            return Err(Error::ShapeMismatch(self.base, self.depth, other.base, other.depth));
        }
        Ok(())
    }

    pub fn add(&self, other: &NAdic) -> Result<NAdic> {
        self.check_shape(other)?;
        let m = self.modulus();
        Ok(NAdic { residue: (self.residue + other.residue) % m, ..*self })
    }

    pub fn neg(&self) -> NAdic {
        let m = self.modulus();
        NAdic { residue: (m - self.residue) % m, ..*self }
    }

    pub fn sub(&self, other: &NAdic) -> Result<NAdic> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &NAdic) -> Result<NAdic> {
        self.check_shape(other)?;
        let m = self.modulus();
        Ok(NAdic { residue: (self.residue * other.residue) % m, ..*self })
    }

    /// Addition as the digit-level recursion: at place i,
    /// a_i + b_i + c_i = t_i + n·c_{i+1} with t_i the output digit and
    /// c_{i+1} in {0, 1}. Returns the sum together with the carries
    /// c_0, …, c_depth (c_0 = 0; the final carry is the truncated overflow).
    pub fn carry_add(&self, other: &NAdic) -> Result<(NAdic, Vec<u32>)> {
        self.check_shape(other)?;
        let n = self.base;
        let mut carries = Vec::with_capacity(self.depth as usize + 1);
        carries.push(0u32);
        let mut digits = Vec::with_capacity(self.depth as usize);
        let mut c = 0u32;
        for i in 0..self.depth {
            let total = self.digit(i) + other.digit(i) + c;
            digits.push(total % n);
            c = total / n;
            carries.push(c);
        }
        Ok((NAdic::from_digits(n, &digits)?, carries))
    }

    /// Multiplication as the digit-level recursion: at place i the column sum
    /// sum_{j+k=i} a_j b_k + s_i splits as d_i + n·s_{i+1}. Returns the
    /// product with the column carries s_0, …, s_depth (s_0 = 0).
    pub fn carry_mul(&self, other: &NAdic) -> Result<(NAdic, Vec<u128>)> {
        self.check_shape(other)?;
        let n = self.base as u128;
        let mut carries = Vec::with_capacity(self.depth as usize + 1);
        carries.push(0u128);
        let mut digits = Vec::with_capacity(self.depth as usize);
        let mut s: u128 = 0;
        for i in 0..self.depth {
            let mut total = s;
            for j in 0..=i {
                total += self.digit(j) as u128 * other.digit(i - j) as u128;
            }
            digits.push((total % n) as u32);
            s = total / n;
            carries.push(s);
        }
        Ok((NAdic::from_digits(self.base, &digits)?, carries))
    }

    /// A truncation is a unit of Z_n exactly when its units digit is coprime
    /// to n.
    pub fn is_unit(&self) -> bool {
        crate::basen::gcd_u128(self.digit(0) as u128, self.base as u128) == 1
    }

    /// Splits along the prime factorization of the base: the component for
    /// p^e is the residue mod p^(depth·e), returned as a p-adic truncation
    /// of depth depth·e.
    pub fn crt_split(&self) -> Result<Vec<NAdic>> {
        let factorization = factorize(self.base)?;
        factorization
            .iter()
            .map(|&(p, e)| {
                let d = self.depth * e;
                let m = checked_pow_u128(p as u128, d).expect("divides the base modulus");
                NAdic::new(p, d, self.residue % m)
            })
            .collect()
    }

    /// Inverse of [`NAdic::crt_split`]: rebuilds the base-n truncation from
    /// p-adic components with the shapes `crt_split` produces.
    pub fn crt_join(base: u32, depth: u32, components: &[NAdic]) -> Result<NAdic> {
        let factorization = factorize(base)?;
        if components.len() != factorization.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} CRT components, got {}",
                factorization.len(),
                components.len()
            )));
        }
        let mut residue: u128 = 0;
        let mut modulus: u128 = 1;
        for (c, &(p, e)) in components.iter().zip(&factorization) {
            if c.base != p || c.depth != depth * e {
                return Err(Error::ShapeMismatch(c.base, c.depth, p, depth * e));
            }
            let m = c.modulus();
            // Merge x ≡ residue (mod modulus), x ≡ c.residue (mod m); the
            // moduli are coprime.
            let inv = mod_inverse(modulus % m, m).expect("prime-power moduli are coprime");
            let delta = ((c.residue + m - residue % m) % m * inv) % m;
            residue += modulus * delta;
            modulus *= m;
        }
        NAdic::new(base, depth, residue)
    }

    /// Regroups a prime-power truncation into digits of the underlying
    /// prime: base p^e, depth l becomes base p, depth l·e. The residue is
    /// unchanged.
    pub fn expand(&self) -> Result<NAdic> {
        let f = factorize(self.base)?;
        if f.len() != 1 {
            return Err(Error::BaseNotPrimePower(self.base));
        }
        let (p, e) = f[0];
        NAdic::new(p, self.depth * e, self.residue)
    }

    /// Inverse regrouping: packs base-p digits into base p^e = `new_base`
    /// digits. The depth must be divisible by e.
    pub fn contract(&self, new_base: u32) -> Result<NAdic> {
        let f = factorize(new_base)?;
        if f.len() != 1 || f[0].0 != self.base {
            return Err(Error::BaseNotPrimePower(new_base));
        }
        let e = f[0].1;
        if self.depth % e != 0 {
            return Err(Error::InvalidArgument(format!(
                "depth {} not divisible by exponent {e}",
                self.depth
            )));
        }
        NAdic::new(new_base, self.depth / e, self.residue)
    }

    /// Ultrametric distance: n^(-q) where q is the first place at which the
    /// digits differ. Equal truncations only bound the distance by
    /// n^(-depth), which the `at_depth` flag records.
    pub fn distance(&self, other: &NAdic) -> Result<NadicDistance> {
        self.check_shape(other)?;
        for q in 0..self.depth {
            if self.digit(q) != other.digit(q) {
                return Ok(NadicDistance { exponent: q, at_depth: false });
            }
        }
        Ok(NadicDistance { exponent: self.depth, at_depth: true })
    }
}

impl fmt::Display for NAdic {
    /// Digits units-place first, so the display reads left to right in
    /// increasing place value: `(3, 0, 1, …)` base n.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.depth {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.digit(i))?;
        }
        write!(f, ") base {}", self.base)
    }
}

/// Distance between truncations as the exponent q of n^(-q); `at_depth`
/// marks "indistinguishable at this precision" rather than a true distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NadicDistance {
    pub exponent: u32,
    pub at_depth: bool,
}

fn mod_inverse(a: u128, m: u128) -> Option<u128> {
    // Extended Euclid on (a, m); returns a^(-1) mod m when gcd = 1.
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u128)
}

// ---------------------------------------------------------------------------
// The ideal lattice of Z_n.
// ---------------------------------------------------------------------------

/// One CRT component of an ideal of Z_n: either p^a Z_p or the zero ideal
/// of that factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealComponent {
    Exp(u32),
    Zero,
}

/// An ideal of Z_n as its CRT components, one per prime divisor of n in
/// ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealSpec {
    factorization: Vec<(u32, u32)>,
    components: Vec<IdealComponent>,
}

impl IdealSpec {
    pub fn new(n: u32, components: Vec<IdealComponent>) -> Result<Self> {
        let factorization = factorize(n)?;
        if components.len() != factorization.len() {
            return Err(Error::InvalidArgument(format!(
                "n = {n} has {} prime divisors but {} components were given",
                factorization.len(),
                components.len()
            )));
        }
        Ok(IdealSpec { factorization, components })
    }

    /// The whole ring Z_n (every component p^0 Z_p).
    pub fn whole_ring(n: u32) -> Result<Self> {
        let factorization = factorize(n)?;
        let components = vec![IdealComponent::Exp(0); factorization.len()];
        Ok(IdealSpec { factorization, components })
    }

    /// The zero ideal {0}.
    pub fn zero_ideal(n: u32) -> Result<Self> {
        let factorization = factorize(n)?;
        let components = vec![IdealComponent::Zero; factorization.len()];
        Ok(IdealSpec { factorization, components })
    }

    pub fn n(&self) -> u32 {
        self.factorization.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn factorization(&self) -> &[(u32, u32)] {
        &self.factorization
    }

    pub fn components(&self) -> &[IdealComponent] {
        &self.components
    }

    /// Membership of a truncation, with the verdict the available precision
    /// supports.
    ///
    /// Per component over p^e at truncation depth l the residue r mod
    /// p^(l·e) is known. For p^a Z_p: divisibility by p^min(a, l·e) is
    /// decided; failing it is `Out`, passing with a > l·e leaves the tail
    /// digits unknown (`NeedDepth`). For a zero component every known digit
    /// must vanish, and no finite depth settles membership
    /// (`ConsistentToDepth`).
    pub fn contains(&self, x: &NAdic) -> Result<Verdict> {
        if x.base() != self.n() {
            return Err(Error::BaseMismatch(x.base(), self.n()));
        }
        let parts = x.crt_split()?;
        let mut need_depth: u32 = 0;
        let mut any_zero = false;
        for ((part, &(p, e)), comp) in parts.iter().zip(&self.factorization).zip(&self.components)
        {
            let avail = x.depth() * e;
            match *comp {
                IdealComponent::Exp(a) => {
                    let check = a.min(avail);
                    let m = checked_pow_u128(p as u128, check)
                        .ok_or_else(|| Error::Overflow(format!("{p}^{check}")))?;
                    if part.residue() % m != 0 {
                        return Ok(Verdict::Out);
                    }
                    if a > avail {
                        // Depth ceil(a/e) makes p^a visible in this factor.
                        need_depth = need_depth.max(a.div_ceil(e));
                    }
                }
                IdealComponent::Zero => {
                    if part.residue() != 0 {
                        return Ok(Verdict::Out);
                    }
                    any_zero = true;
                }
            }
        }
        if need_depth > 0 {
            Ok(Verdict::NeedDepth(need_depth))
        } else if any_zero {
            Ok(Verdict::ConsistentToDepth)
        } else {
            Ok(Verdict::In)
        }
    }

    fn check_comparable(&self, other: &IdealSpec) -> Result<()> {
        if self.factorization != other.factorization {
            return Err(Error::BaseMismatch(self.n(), other.n()));
        }
        Ok(())
    }

    /// The shift preorder: self ≤ other when some power of the shift maps
    /// self into other, i.e. n^k · self ⊆ other. Componentwise that needs
    /// every non-zero component of self to face a non-zero component of
    /// other; the minimal witness is k = max ceil((b_i - a_i)/e_i) over the
    /// exponent pairs.
    pub fn leq_with_witness(&self, other: &IdealSpec) -> Result<Option<u32>> {
        self.check_comparable(other)?;
        let mut k: u32 = 0;
        for ((&a, &b), &(_, e)) in
            self.components.iter().zip(&other.components).zip(&self.factorization)
        {
            match (a, b) {
                (IdealComponent::Zero, _) => {}
                (IdealComponent::Exp(_), IdealComponent::Zero) => return Ok(None),
                (IdealComponent::Exp(a), IdealComponent::Exp(b)) => {
                    if b > a {
                        k = k.max((b - a).div_ceil(e));
                    }
                }
            }
        }
        Ok(Some(k))
    }

    pub fn leq(&self, other: &IdealSpec) -> Result<bool> {
        Ok(self.leq_with_witness(other)?.is_some())
    }

    /// Equivalence under the shift preorder: ≤ in both directions.
    pub fn equivalent(&self, other: &IdealSpec) -> Result<bool> {
        Ok(self.leq(other)? && other.leq(self)?)
    }

    /// The canonical representative of the equivalence class: exponents of
    /// all non-zero components dropped to 0. Returns the full ideal together
    /// with the witness A = max dropped exponent, for which n^A maps the
    /// normalized ideal into the original.
    pub fn full_normalize(&self) -> (FullIdeal, u32) {
        let mut zero_set = BTreeSet::new();
        let mut witness: u32 = 0;
        for (i, comp) in self.components.iter().enumerate() {
            match *comp {
                IdealComponent::Zero => {
                    zero_set.insert(i + 1);
                }
                IdealComponent::Exp(a) => witness = witness.max(a),
            }
        }
        (FullIdeal { factorization: self.factorization.clone(), zero_set }, witness)
    }
}

/// A full ideal: every CRT component is either the whole factor or zero.
/// `zero_set` holds the 1-based indices of the zero components, matching the
/// ascending order of the prime divisors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FullIdeal {
    factorization: Vec<(u32, u32)>,
    zero_set: BTreeSet<usize>,
}

impl FullIdeal {
    pub fn new(n: u32, zero_set: BTreeSet<usize>) -> Result<Self> {
        let factorization = factorize(n)?;
        if let Some(&hi) = zero_set.iter().next_back() {
            if hi > factorization.len() || zero_set.iter().next() == Some(&0) {
                return Err(Error::InvalidArgument(format!(
                    "zero set {zero_set:?} out of range for {} primes",
                    factorization.len()
                )));
            }
        }
        Ok(FullIdeal { factorization, zero_set })
    }

    /// All 2^k full ideals of Z_n, ordered by subset bitmask.
    pub fn all(n: u32) -> Result<Vec<FullIdeal>> {
        let factorization = factorize(n)?;
        let k = factorization.len();
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0u32..(1 << k) {
            let zero_set =
                (1..=k).filter(|i| mask & (1 << (i - 1)) != 0).collect::<BTreeSet<_>>();
            out.push(FullIdeal { factorization: factorization.clone(), zero_set });
        }
        Ok(out)
    }

    pub fn n(&self) -> u32 {
        self.factorization.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn factorization(&self) -> &[(u32, u32)] {
        &self.factorization
    }

    pub fn zero_set(&self) -> &BTreeSet<usize> {
        &self.zero_set
    }

    /// Bitmask of the zero set: bit i-1 for prime index i.
    pub fn bitmask(&self) -> u32 {
        self.zero_set.iter().map(|&i| 1u32 << (i - 1)).sum()
    }

    /// The zero ideal has every component zero.
    pub fn is_zero_ideal(&self) -> bool {
        self.zero_set.len() == self.factorization.len()
    }

    /// The whole ring has no zero component.
    pub fn is_whole_ring(&self) -> bool {
        self.zero_set.is_empty()
    }

    pub fn to_spec(&self) -> IdealSpec {
        let components = (1..=self.factorization.len())
            .map(|i| {
                if self.zero_set.contains(&i) {
                    IdealComponent::Zero
                } else {
                    IdealComponent::Exp(0)
                }
            })
            .collect();
        IdealSpec { factorization: self.factorization.clone(), components }
    }

    /// Product of p_i^(s·e_i) over the zero components — the modulus an
    /// integer tail must vanish under to sit in S(𝔞) at fractional depth s.
    pub fn tail_modulus(&self, s: u32) -> Result<u128> {
        let mut m: u128 = 1;
        for &i in &self.zero_set {
            let (p, e) = self.factorization[i - 1];
            let f = checked_pow_u128(p as u128, s * e)
                .ok_or_else(|| Error::Overflow(format!("{p}^{}", s * e)))?;
            m = m
                .checked_mul(f)
                .ok_or_else(|| Error::Overflow("tail modulus".into()))?;
        }
        Ok(m)
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self
            .components()
            .iter()
            .map(|c| match c {
                IdealComponent::Exp(e) => e.to_string(),
                IdealComponent::Zero => "zero".to_string(),
            })
            .collect();
        write!(f, "spec({}) of Z_{}", names.join(","), self.n())
    }
}

impl fmt::Display for FullIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero_set.is_empty() {
            return write!(f, "Z_{}", self.n());
        }
        let names: Vec<String> = self.zero_set.iter().map(|i| i.to_string()).collect();
        write!(f, "ideal{{{}}} of Z_{}", names.join(","), self.n())
    }
}

/// What a finite truncation can say about ideal membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Membership holds and is fully decided at this depth.
    In,
    /// Some decided component fails; the element is not in the ideal.
    Out,
    /// Every known digit is consistent with membership, but a zero component
    /// can never be decided at finite depth.
    ConsistentToDepth,
    /// No component fails yet, and depth this large would decide the
    /// remaining exponent components.
    NeedDepth(u32),
}

// ---------------------------------------------------------------------------
// Serde for the ideal types: a schema that names the primes explicitly, so
// files stay readable and shape errors surface on load.
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ComponentRepr {
    p: u32,
    e: u32,
    ideal: KindRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum KindRepr {
    Word(String),
    Exp { exp: u32 },
}

#[derive(Serialize, Deserialize)]
struct IdealSpecRepr {
    n: u32,
    components: Vec<ComponentRepr>,
}

impl Serialize for IdealSpec {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let components = self
            .factorization
            .iter()
            .zip(&self.components)
            .map(|(&(p, e), comp)| ComponentRepr {
                p,
                e,
                ideal: match *comp {
                    IdealComponent::Zero => KindRepr::Word("zero".into()),
                    IdealComponent::Exp(a) => KindRepr::Exp { exp: a },
                },
            })
            .collect();
        IdealSpecRepr { n: self.n(), components }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for IdealSpec {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let repr = IdealSpecRepr::deserialize(de)?;
        let factorization = factorize(repr.n).map_err(DeError::custom)?;
        let given: Vec<(u32, u32)> = repr.components.iter().map(|c| (c.p, c.e)).collect();
        if given != factorization {
            return Err(DeError::custom(format!(
                "components {given:?} do not match the factorization {factorization:?} of {}",
                repr.n
            )));
        }
        let components = repr
            .components
            .iter()
            .map(|c| match &c.ideal {
                KindRepr::Word(w) if w == "zero" => Ok(IdealComponent::Zero),
                KindRepr::Word(w) => Err(DeError::custom(format!("unknown ideal kind {w:?}"))),
                KindRepr::Exp { exp } => Ok(IdealComponent::Exp(*exp)),
            })
            .collect::<std::result::Result<_, D::Error>>()?;
        Ok(IdealSpec { factorization, components })
    }
}

#[derive(Serialize, Deserialize)]
struct FullIdealRepr {
    n: u32,
    zero_set: Vec<usize>,
}

impl Serialize for FullIdeal {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        FullIdealRepr { n: self.n(), zero_set: self.zero_set.iter().copied().collect() }
            .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for FullIdeal {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = FullIdealRepr::deserialize(de)?;
        FullIdeal::new(repr.n, repr.zero_set.into_iter().collect())
            .map_err(serde::de::Error::custom)
    }
}
