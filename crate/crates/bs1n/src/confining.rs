//! Confining subsets of Z[1/n] and the map back to ideals of Z_n.
//!
//! A subset Q of Z[1/n] is confining under an automorphism φ (here the shift
//! α or its inverse) when (a) φ(Q) ⊆ Q, (b) every h has φ^k(h) ∈ Q for some
//! k, and (c) some fixed power φ^k0 maps Q + Q into Q. Each such Q generates
//! a hyperbolic action of BS(1,n); which action only depends on Q up to
//! coarse equivalence, and for the α direction the invariant is an ideal of
//! Z_n recovered here by [`compute_ideal_of`].
//!
//! The checker in [`verify_confining`] is deliberately empirical: it works
//! on a finite window of the set and reports what it saw, rather than
//! assuming any of the axioms.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::basen::{checked_pow_u128, NAryNumber};
use crate::error::{Error, Result};
use crate::nadic::{factorize, FullIdeal, IdealSpec};

/// Which automorphism the axioms are checked against: `Forward` is the shift
/// α (multiplication by n), `Inverse` is α⁻¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Forward,
    Inverse,
}

impl Flavor {
    fn direction(self) -> i64 {
        match self {
            Flavor::Forward => 1,
            Flavor::Inverse => -1,
        }
    }

    /// φ^k(x).
    pub fn apply(self, x: &NAryNumber, k: i64) -> NAryNumber {
        x.shift(self.direction() * k)
    }
}

/// Window for enumerating a confining set: integer digits up to
/// `max_int_digits` places, fractional digits down to `max_frac_depth`
/// places, and an optional cap on the magnitude.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumBounds {
    pub max_int_digits: u32,
    pub max_frac_depth: u32,
    pub max_abs: Option<u128>,
}

impl Default for EnumBounds {
    fn default() -> Self {
        EnumBounds { max_int_digits: 2, max_frac_depth: 3, max_abs: None }
    }
}

/// A subset of Z[1/n] given by one of the stock constructions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConfiningSet {
    /// The integers Z inside Z[1/n] — confining under α.
    QPlus { base: u32 },
    /// The interval (-1, 1) in Z[1/n]: elements with no integer digits —
    /// confining under α⁻¹.
    QMinus { base: u32 },
    /// S(𝔞) for an ideal 𝔞 of Z_n: elements whose fractional tail lies in
    /// 𝔞 — confining under α. Membership only depends on the equivalence
    /// class of 𝔞, i.e. on its full normalization.
    SOfIdeal(IdealSpec),
    /// A base set enlarged by the forward α-orbits α^j(f), j ≥ k, of
    /// finitely many extra elements.
    Closure { base_set: Box<ConfiningSet>, extra: Vec<NAryNumber>, k: u32 },
    /// An explicit finite set; a stock example of a non-confining subset.
    FiniteTruncation { base: u32, elements: BTreeSet<NAryNumber> },
}

/// The fractional tail of x as an integer: R0 = sum of the fractional
/// digits read with the deepest digit in the units place, together with the
/// tail depth s0 = -p(x).
pub fn tail_integer(x: &NAryNumber) -> (u128, u32) {
    let s0 = x.frac_depth();
    let n = x.base() as u128;
    let mut r: u128 = 0;
    for u in 1..=s0 {
        r = r * n + x.digit(-(u as i64)) as u128;
    }
    (r, s0)
}

impl ConfiningSet {
    /// The base n of the ambient Z[1/n].
    pub fn base(&self) -> u32 {
        match self {
            ConfiningSet::QPlus { base } | ConfiningSet::QMinus { base } => *base,
            ConfiningSet::SOfIdeal(spec) => spec.n(),
            ConfiningSet::Closure { base_set, .. } => base_set.base(),
            ConfiningSet::FiniteTruncation { base, .. } => *base,
        }
    }

    /// Exact membership.
    pub fn contains(&self, x: &NAryNumber) -> Result<bool> {
        if x.base() != self.base() {
            return Err(Error::BaseMismatch(x.base(), self.base()));
        }
        match self {
            ConfiningSet::QPlus { .. } => Ok(x.is_integer()),
            ConfiningSet::QMinus { .. } => Ok(x.max_index().map_or(true, |hi| hi < 0)),
            ConfiningSet::SOfIdeal(spec) => {
                let (full, _) = spec.full_normalize();
                let (r0, s0) = tail_integer(x);
                Ok(r0 % full.tail_modulus(s0)? == 0)
            }
            ConfiningSet::Closure { base_set, extra, k } => {
                if base_set.contains(x)? {
                    return Ok(true);
                }
                for f in extra {
                    if f.is_zero() {
                        if x.is_zero() {
                            return Ok(true);
                        }
                        continue;
                    }
                    if x.is_zero() {
                        continue;
                    }
                    let j = x.min_index().unwrap() - f.min_index().unwrap();
                    if j >= *k as i64 && f.shift(j) == *x {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            ConfiningSet::FiniteTruncation { elements, .. } => Ok(elements.contains(x)),
        }
    }

    /// Every element of the set inside the window, sorted with the
    /// nonnegative values first and magnitudes ascending, so enumeration
    /// order — and hence every reported witness — is deterministic.
    pub fn enumerate(&self, bounds: &EnumBounds) -> Result<Vec<NAryNumber>> {
        let n = self.base();
        if n < 2 {
            return Err(Error::InvalidN(n));
        }
        let mut out: BTreeSet<NAryNumber> = BTreeSet::new();
        self.collect(bounds, &mut out)?;
        let mut list: Vec<NAryNumber> = out.into_iter().collect();
        list.sort_by(|a, b| {
            (a.sign() < 0)
                .cmp(&(b.sign() < 0))
                .then_with(|| a.abs_cmp(b))
        });
        Ok(list)
    }

    fn collect(&self, bounds: &EnumBounds, out: &mut BTreeSet<NAryNumber>) -> Result<()> {
        let n = self.base();
        let keep = |x: &NAryNumber| match bounds.max_abs {
            Some(limit) => x.abs_leq_integer(limit),
            None => true,
        };
        match self {
            ConfiningSet::QPlus { .. } => {
                let top = checked_pow_u128(n as u128, bounds.max_int_digits)
                    .ok_or_else(|| Error::Overflow("integer window".into()))?;
                let top = match bounds.max_abs {
                    Some(limit) => top.min(limit + 1),
                    None => top,
                };
                for v in 0..top {
                    let x = NAryNumber::from_fraction(v as i128, 1, n)?;
                    out.insert(x.neg());
                    out.insert(x);
                }
            }
            ConfiningSet::QMinus { .. } => {
                out.insert(NAryNumber::zero(n));
                for s in 1..=bounds.max_frac_depth {
                    let den = checked_pow_u128(n as u128, s)
                        .ok_or_else(|| Error::Overflow("fraction window".into()))?;
                    for r in 1..den {
                        if r % n as u128 == 0 {
                            continue;
                        }
                        let x = NAryNumber::from_fraction(r as i128, den, n)?;
                        if keep(&x) {
                            out.insert(x.neg());
                            out.insert(x);
                        }
                    }
                }
            }
            ConfiningSet::SOfIdeal(spec) => {
                let (full, _) = spec.full_normalize();
                let int_top = checked_pow_u128(n as u128, bounds.max_int_digits)
                    .ok_or_else(|| Error::Overflow("integer window".into()))?;
                // Valid tails at exact depth s are the multiples of the tail
                // modulus whose deepest digit is nonzero.
                let mut tails: Vec<(u128, u128)> = vec![(0, 1)]; // (R0, n^s)
                for s in 1..=bounds.max_frac_depth {
                    let den = checked_pow_u128(n as u128, s)
                        .ok_or_else(|| Error::Overflow("fraction window".into()))?;
                    let g = full.tail_modulus(s)?;
                    let mut r = g;
                    while r < den {
                        if r % n as u128 != 0 {
                            tails.push((r, den));
                        }
                        r += g;
                    }
                }
                for &(r0, den) in &tails {
                    for m in 0..int_top {
                        let num = m
                            .checked_mul(den)
                            .and_then(|v| v.checked_add(r0))
                            .ok_or_else(|| Error::Overflow("window element".into()))?;
                        if num == 0 {
                            out.insert(NAryNumber::zero(n));
                            continue;
                        }
                        let x = NAryNumber::from_fraction(num as i128, den, n)?;
                        if keep(&x) {
                            out.insert(x.neg());
                            out.insert(x);
                        }
                    }
                }
            }
            ConfiningSet::Closure { base_set, extra, k } => {
                base_set.collect(bounds, out)?;
                for f in extra {
                    if f.is_zero() {
                        out.insert(f.clone());
                        continue;
                    }
                    let mut j = *k as i64;
                    loop {
                        let shifted = f.shift(j);
                        if shifted.max_index().unwrap_or(0) >= bounds.max_int_digits as i64 {
                            break;
                        }
                        if shifted.min_index().unwrap_or(0) >= -(bounds.max_frac_depth as i64)
                            && keep(&shifted)
                        {
                            out.insert(shifted);
                        }
                        j += 1;
                    }
                }
            }
            ConfiningSet::FiniteTruncation { elements, .. } => {
                for x in elements {
                    let deep_enough =
                        x.min_index().unwrap_or(0) >= -(bounds.max_frac_depth as i64);
                    let low_enough = x.max_index().unwrap_or(0) < bounds.max_int_digits as i64;
                    if deep_enough && low_enough && keep(x) {
                        out.insert(x.clone());
                    }
                }
            }
        }
        Ok(())
    }

    /// Extra fractional depth a Closure's orbit junk can survive in the
    /// chain pruning of [`compute_ideal_of`].
    fn junk_slack(&self) -> u32 {
        match self {
            ConfiningSet::Closure { base_set, extra, k } => {
                let own = extra
                    .iter()
                    .map(|f| f.frac_depth().saturating_sub(*k))
                    .max()
                    .unwrap_or(0);
                own.max(base_set.junk_slack())
            }
            _ => 0,
        }
    }

    /// Fractional tails (R0, s0) of the set's elements down to depth
    /// `max_depth`, with integer parts discarded.
    fn collect_tails(&self, max_depth: u32, out: &mut BTreeSet<(u128, u32)>) -> Result<()> {
        let n = self.base() as u128;
        match self {
            ConfiningSet::QPlus { .. } => {
                out.insert((0, 0));
            }
            ConfiningSet::QMinus { .. } => {
                out.insert((0, 0));
                for s in 1..=max_depth {
                    let den = checked_pow_u128(n, s)
                        .ok_or_else(|| Error::Overflow("tail window".into()))?;
                    for r in 1..den {
                        if r % n != 0 {
                            out.insert((r, s));
                        }
                    }
                }
            }
            ConfiningSet::SOfIdeal(spec) => {
                let (full, _) = spec.full_normalize();
                out.insert((0, 0));
                for s in 1..=max_depth {
                    let den = checked_pow_u128(n, s)
                        .ok_or_else(|| Error::Overflow("tail window".into()))?;
                    let g = full.tail_modulus(s)?;
                    let mut r = g;
                    while r < den {
                        if r % n != 0 {
                            out.insert((r, s));
                        }
                        r += g;
                    }
                }
            }
            ConfiningSet::Closure { base_set, extra, k } => {
                base_set.collect_tails(max_depth, out)?;
                for f in extra {
                    let mut j = *k as i64;
                    // Orbit elements keep losing fractional digits; stop
                    // once the orbit has reached the integers.
                    loop {
                        let shifted = f.shift(j);
                        let (r0, s0) = tail_integer(&shifted);
                        if s0 <= max_depth {
                            out.insert((r0, s0));
                        }
                        if shifted.is_integer() {
                            break;
                        }
                        j += 1;
                    }
                }
            }
            ConfiningSet::FiniteTruncation { elements, .. } => {
                for x in elements {
                    let (r0, s0) = tail_integer(x);
                    if s0 <= max_depth {
                        out.insert((r0, s0));
                    }
                }
            }
        }
        Ok(())
    }

    /// See [`compute_ideal_of`].
    pub fn ideal_of(&self, depth: u32) -> Result<FullIdeal> {
        compute_ideal_of(self, depth)
    }
}

// ---------------------------------------------------------------------------
// The confining-axiom checker.
// ---------------------------------------------------------------------------

/// Budget for [`verify_confining`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyLimits {
    /// Window the sample is drawn from.
    pub bounds: EnumBounds,
    /// Largest shift exponent tried for the landing axioms (b) and (c).
    pub exponent_cap: u32,
}

impl Default for VerifyLimits {
    fn default() -> Self {
        VerifyLimits { bounds: EnumBounds::default(), exponent_cap: 16 }
    }
}

/// What an empirical check of the confining axioms observed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfiningReport {
    /// φ mapped every sampled element back into the set.
    pub axiom_a: bool,
    /// First sampled element with φ(x) outside the set, if any.
    pub axiom_a_counterexample: Option<NAryNumber>,
    /// First sampled x ∈ Q with φ⁻¹(x) ∉ Q — a witness that the inclusion
    /// φ(Q) ⊆ Q is strict.
    pub strict_witness: Option<NAryNumber>,
    /// For each probe element h, the least k ≤ cap with φ^k(h) ∈ Q.
    pub axiom_b: Vec<(NAryNumber, Option<u32>)>,
    /// max over sampled pairs (x, y) of the least k with φ^k(x+y) ∈ Q.
    /// None when axiom (a) already failed on the sample.
    pub axiom_c_k0: Option<u32>,
    /// Number of sampled elements.
    pub sample_size: usize,
}

impl ConfiningReport {
    pub fn passed(&self) -> bool {
        self.axiom_a
            && self.axiom_b.iter().all(|(_, k)| k.is_some())
            && self.axiom_c_k0.is_some()
    }
}

/// Probe elements for axiom (b): everything with at most two nonzero digits
/// at indices in [-2, 2] and digit values 1 or n-1, both signs.
fn axiom_b_grid(n: u32) -> Vec<NAryNumber> {
    let values = if n == 2 { vec![1u32] } else { vec![1, n - 1] };
    let mut grid: BTreeSet<NAryNumber> = BTreeSet::new();
    grid.insert(NAryNumber::zero(n));
    let indices = [-2i64, -1, 0, 1, 2];
    for (a, &i) in indices.iter().enumerate() {
        for &vi in &values {
            let mut coeffs = BTreeMap::new();
            coeffs.insert(i, vi as i64);
            let single = NAryNumber::from_signed_coeffs(n, &coeffs);
            grid.insert(single.neg());
            grid.insert(single);
            for &j in indices.iter().skip(a + 1) {
                for &vj in &values {
                    let mut coeffs = BTreeMap::new();
                    coeffs.insert(i, vi as i64);
                    coeffs.insert(j, vj as i64);
                    let pair = NAryNumber::from_signed_coeffs(n, &coeffs);
                    grid.insert(pair.neg());
                    grid.insert(pair);
                }
            }
        }
    }
    let mut list: Vec<NAryNumber> = grid.into_iter().collect();
    list.sort_by(|a, b| (a.sign() < 0).cmp(&(b.sign() < 0)).then_with(|| a.abs_cmp(b)));
    list
}

/// Checks the three confining axioms for `set` under the flavor's
/// automorphism, over a finite sample.
///
/// Axiom (a) is checked on every sampled element. If it fails the report
/// carries the counterexample and skips (c), whose per-pair minimal
/// exponents are only meaningful when membership is monotone under φ. A
/// pair that fails to land within `exponent_cap` shifts while (a) holds is
/// reported as [`Error::SampleExhausted`].
pub fn verify_confining(
    set: &ConfiningSet,
    flavor: Flavor,
    limits: &VerifyLimits,
) -> Result<ConfiningReport> {
    let sample = set.enumerate(&limits.bounds)?;
    // Axiom (a) and the strictness witness.
    let mut counterexample = None;
    for x in &sample {
        if !set.contains(&flavor.apply(x, 1))? {
            counterexample = Some(x.clone());
            break;
        }
    }
    let axiom_a = counterexample.is_none();
    let mut strict_witness = None;
    if axiom_a {
        for x in &sample {
            if !set.contains(&flavor.apply(x, -1))? {
                strict_witness = Some(x.clone());
                break;
            }
        }
    }
    // Axiom (b): landing exponents over the probe grid.
    let mut axiom_b = Vec::new();
    for h in axiom_b_grid(set.base()) {
        let mut landed = None;
        for k in 0..=limits.exponent_cap {
            if set.contains(&flavor.apply(&h, k as i64))? {
                landed = Some(k);
                break;
            }
        }
        axiom_b.push((h, landed));
    }
    // Axiom (c): k0 = max over pairs of the least landing exponent of the
    // sum. Monotonicity (granted by (a)) lets a single membership test at
    // the current maximum discharge most pairs. The pair base is the whole
    // sample when it is small; past the cap it is thinned to an
    // order-preserving subsample — the full small-magnitude prefix plus an
    // even stride through the rest — so carry-forcing pairs (two elements
    // near a power of the base) stay represented while the quadratic loop
    // stays tractable. A subsample can only under-report the maximum, never
    // inflate it.
    const PAIR_BASE_CAP: usize = 3_000;
    let pair_base: Vec<&NAryNumber> = if sample.len() <= PAIR_BASE_CAP {
        sample.iter().collect()
    } else {
        let prefix = PAIR_BASE_CAP / 2;
        let rest = &sample[prefix..];
        let stride = rest.len().div_ceil(PAIR_BASE_CAP - prefix).max(1);
        sample[..prefix]
            .iter()
            .chain(rest.iter().step_by(stride))
            .collect()
    };
    let mut axiom_c_k0 = None;
    if axiom_a {
        let mut k0: u32 = 0;
        for (i, x) in pair_base.iter().enumerate() {
            for y in &pair_base[i..] {
                let sum = x.add(y)?;
                if set.contains(&flavor.apply(&sum, k0 as i64))? {
                    continue;
                }
                let mut found = None;
                for k in (k0 + 1)..=limits.exponent_cap {
                    if set.contains(&flavor.apply(&sum, k as i64))? {
                        found = Some(k);
                        break;
                    }
                }
                match found {
                    Some(k) => k0 = k,
                    None => {
                        return Err(Error::SampleExhausted(format!(
                            "axiom (c): {x} + {y} did not land within {} shifts",
                            limits.exponent_cap
                        )))
                    }
                }
            }
        }
        axiom_c_k0 = Some(k0);
    }
    Ok(ConfiningReport {
        axiom_a,
        axiom_a_counterexample: counterexample,
        strict_witness,
        axiom_b,
        axiom_c_k0,
        sample_size: sample.len(),
    })
}

// ---------------------------------------------------------------------------
// The L map: from an α-confining set back to the ideal indexing its action.
// ---------------------------------------------------------------------------

/// Recovers the full ideal of Z_n whose tree action a confining set `q`
/// (under the forward shift) generates.
///
/// The set's fractional tails, padded to a common depth s, are exactly the
/// depth-s residues of an ideal of Z_n once two cleanups run: a forward
/// pass keeps only residues whose truncations are again tail residues, and
/// a backward pass drops residues with no extension to greater depth (the
/// forward orbits a [`ConfiningSet::Closure`] adds are finite, so their
/// residue chains die out). Each prime divisor is then classified by the
/// minimal p-valuation of the surviving residues at two consecutive depths:
/// pinned to the precision cap at both means the component is zero,
/// stable strictly below the cap means it is not, and anything else is
/// [`Error::InconclusiveDepth`].
pub fn compute_ideal_of(q: &ConfiningSet, depth: u32) -> Result<FullIdeal> {
    if depth < 3 {
        return Err(Error::InvalidArgument(format!(
            "classification needs depth >= 3, got {depth}"
        )));
    }
    let n = q.base();
    let factorization = factorize(n)?;
    let slack = q.junk_slack();
    let total = depth + slack;
    let mut tails: BTreeSet<(u128, u32)> = BTreeSet::new();
    q.collect_tails(total, &mut tails)?;
    // Padded residues per level.
    let mut levels: Vec<BTreeSet<u128>> = Vec::with_capacity(total as usize + 1);
    levels.push([0u128].into_iter().collect()); // level 0
    for s in 1..=total {
        let mut p_s = BTreeSet::new();
        for &(r0, s0) in &tails {
            if s0 <= s {
                let pad = checked_pow_u128(n as u128, s - s0)
                    .ok_or_else(|| Error::Overflow("residue pad".into()))?;
                p_s.insert(r0 * pad);
            }
        }
        // Forward pass: keep chains whose truncation is a shallower residue.
        let down = checked_pow_u128(n as u128, s - 1).expect("below pad");
        let prev = &levels[s as usize - 1];
        let lambda: BTreeSet<u128> =
            p_s.into_iter().filter(|v| prev.contains(&(v % down))).collect();
        levels.push(lambda);
    }
    // Backward pass: drop residues with no extension above.
    for s in (1..total).rev() {
        let modulus = checked_pow_u128(n as u128, s).expect("level modulus");
        let extendable: BTreeSet<u128> =
            levels[s as usize + 1].iter().map(|w| w % modulus).collect();
        let pruned: BTreeSet<u128> = levels[s as usize]
            .iter()
            .copied()
            .filter(|v| extendable.contains(v))
            .collect();
        levels[s as usize] = pruned;
    }
    // Classification at two consecutive clean depths.
    let s1 = depth - 1;
    let s2 = depth - 2;
    let min_valuation = |s: u32, p: u32, e: u32| -> Result<u32> {
        let cap = s * e;
        let level = &levels[s as usize];
        if level.is_empty() {
            return Err(Error::InconclusiveDepth {
                depth,
                detail: format!("no surviving residues at depth {s}"),
            });
        }
        let mut best = cap;
        for &v in level {
            let val = if v == 0 {
                cap
            } else {
                let mut w = v;
                let mut c = 0;
                while c < cap && w % p as u128 == 0 {
                    w /= p as u128;
                    c += 1;
                }
                c
            };
            best = best.min(val);
            if best == 0 {
                break;
            }
        }
        Ok(best)
    };
    let mut zero_set = BTreeSet::new();
    for (idx, &(p, e)) in factorization.iter().enumerate() {
        let v1 = min_valuation(s1, p, e)?;
        let v2 = min_valuation(s2, p, e)?;
        let zero_like = v1 == s1 * e && v2 == s2 * e;
        let stable_nonzero = v1 == v2 && v1 < s2 * e;
        if zero_like {
            zero_set.insert(idx + 1);
        } else if !stable_nonzero {
            return Err(Error::InconclusiveDepth {
                depth,
                detail: format!(
                    "prime {p}: min valuation {v2} at depth {s2} vs {v1} at depth {s1}"
                ),
            });
        }
    }
    FullIdeal::new(n, zero_set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nadic::IdealComponent;

    fn num(text: &str, base: u32) -> NAryNumber {
        NAryNumber::parse(text, base).unwrap()
    }

    fn s_of(n: u32, zero: &[usize]) -> ConfiningSet {
        let full = FullIdeal::new(n, zero.iter().copied().collect()).unwrap();
        ConfiningSet::SOfIdeal(full.to_spec())
    }

    #[test]
    fn q_plus_and_q_minus_membership() {
        let qp = ConfiningSet::QPlus { base: 6 };
        assert!(qp.contains(&num("25", 6)).unwrap());
        assert!(qp.contains(&num("-3", 6)).unwrap());
        assert!(!qp.contains(&num("0.1", 6)).unwrap());
        let qm = ConfiningSet::QMinus { base: 6 };
        assert!(qm.contains(&num("0.55", 6)).unwrap());
        assert!(qm.contains(&num("-0.001", 6)).unwrap());
        assert!(qm.contains(&num("0", 6)).unwrap());
        assert!(!qm.contains(&num("1", 6)).unwrap());
        assert!(!qm.contains(&num("1.01", 6)).unwrap());
    }

    #[test]
    fn s_membership_worked_examples() {
        // n = 6, zero component at p = 2: tails must be divisible by 2^s.
        let s = s_of(6, &[1]);
        assert!(s.contains(&num("0.2", 6)).unwrap());
        assert!(!s.contains(&num("0.3", 6)).unwrap());
        assert!(s.contains(&num("0.12", 6)).unwrap()); // tail 8, v2 = 3 >= 2
        assert!(!s.contains(&num("0.02", 6)).unwrap()); // tail 2, v2 = 1 < 2
        assert!(s.contains(&num("41", 6)).unwrap()); // integers always
        assert!(s.contains(&num("-3.4", 6)).unwrap()); // tail 4, v2 = 2 >= 1
        // Whole ring: no constraint at all.
        let whole = s_of(6, &[]);
        assert!(whole.contains(&num("0.135", 6)).unwrap());
        // Zero ideal: only the integers.
        let zero = s_of(6, &[1, 2]);
        assert!(zero.contains(&num("21", 6)).unwrap());
        assert!(!zero.contains(&num("0.3", 6)).unwrap());
        assert!(!zero.contains(&num("4.2", 6)).unwrap());
    }

    #[test]
    fn s_membership_ignores_exponents() {
        // S(𝔞) = S of the full normalization, so exponent components do not
        // constrain membership.
        let spec =
            IdealSpec::new(12, vec![IdealComponent::Exp(5), IdealComponent::Exp(2)]).unwrap();
        let s = ConfiningSet::SOfIdeal(spec);
        assert!(s.contains(&num("0.1", 12)).unwrap());
        assert!(s.contains(&num("0.7", 12)).unwrap());
        let spec2 =
            IdealSpec::new(12, vec![IdealComponent::Zero, IdealComponent::Exp(4)]).unwrap();
        let s2 = ConfiningSet::SOfIdeal(spec2);
        // Tail must vanish 2-adically: 0.4 has tail 4 = 2^2, need v2 >= 2. ok
        assert!(s2.contains(&num("0.4", 12)).unwrap());
        // 0.6: tail 6 = 2·3, v2 = 1 < 2: out.
        assert!(!s2.contains(&num("0.6", 12)).unwrap());
    }

    #[test]
    fn enumeration_is_sorted_and_member_only() {
        let s = s_of(6, &[1]);
        let bounds = EnumBounds { max_int_digits: 1, max_frac_depth: 2, max_abs: None };
        let sample = s.enumerate(&bounds).unwrap();
        assert!(!sample.is_empty());
        assert_eq!(sample[0], NAryNumber::zero(6));
        for x in &sample {
            assert!(s.contains(x).unwrap(), "{x} enumerated but not a member");
        }
        // Sorted: nonnegative ascending, then negative ascending.
        let flip = sample.iter().position(|x| x.sign() < 0).unwrap();
        for w in sample[..flip].windows(2) {
            assert_eq!(w[0].abs_cmp(&w[1]), std::cmp::Ordering::Less);
        }
        for w in sample[flip..].windows(2) {
            assert_eq!(w[0].abs_cmp(&w[1]), std::cmp::Ordering::Less);
        }
        // Every positive member has its negative in the sample.
        assert_eq!(sample[..flip].len(), sample[flip..].len() + 1);
    }

    #[test]
    fn q_minus_passes_inverse_axioms_with_pinned_witness() {
        let qm = ConfiningSet::QMinus { base: 10 };
        let limits = VerifyLimits {
            bounds: EnumBounds { max_int_digits: 1, max_frac_depth: 2, max_abs: None },
            exponent_cap: 8,
        };
        let report = verify_confining(&qm, Flavor::Inverse, &limits).unwrap();
        assert!(report.axiom_a);
        assert!(report.passed());
        assert_eq!(report.strict_witness, Some(num("0.1", 10)));
        assert_eq!(report.axiom_c_k0, Some(1));
        assert!(report.axiom_b.iter().all(|(_, k)| k.is_some()));
    }

    #[test]
    fn s_sets_pass_forward_axioms_with_k0_zero() {
        for zero in [&[][..], &[1], &[2], &[1, 2]] {
            let s = s_of(6, zero);
            let limits = VerifyLimits {
                bounds: EnumBounds { max_int_digits: 1, max_frac_depth: 3, max_abs: None },
                exponent_cap: 8,
            };
            let report = verify_confining(&s, Flavor::Forward, &limits).unwrap();
            assert!(report.passed(), "zero set {zero:?}");
            assert_eq!(report.axiom_c_k0, Some(0), "zero set {zero:?}");
        }
    }

    #[test]
    fn finite_set_fails_axiom_a() {
        let elements: BTreeSet<NAryNumber> =
            [num("0", 6), num("1", 6), num("0.3", 6)].into_iter().collect();
        let ft = ConfiningSet::FiniteTruncation { base: 6, elements };
        let report = verify_confining(&ft, Flavor::Forward, &VerifyLimits::default()).unwrap();
        assert!(!report.axiom_a);
        assert!(report.axiom_a_counterexample.is_some());
        assert_eq!(report.axiom_c_k0, None);
        assert!(!report.passed());
    }

    #[test]
    fn exhausted_pair_is_an_error() {
        // Powers of 3 are α-closed as an oracle, but 1 + 1 = 2 never lands.
        let elements: BTreeSet<NAryNumber> = (0..=5)
            .map(|j| NAryNumber::from_fraction(3i128.pow(j), 1, 3).unwrap())
            .chain([NAryNumber::zero(3)])
            .collect();
        let ft = ConfiningSet::FiniteTruncation { base: 3, elements };
        let limits = VerifyLimits {
            bounds: EnumBounds { max_int_digits: 3, max_frac_depth: 1, max_abs: Some(27) },
            exponent_cap: 6,
        };
        match verify_confining(&ft, Flavor::Forward, &limits) {
            Err(Error::SampleExhausted(_)) => {}
            other => panic!("expected SampleExhausted, got {other:?}"),
        }
    }

    #[test]
    fn closure_membership_includes_orbit() {
        let base = s_of(6, &[1, 2]); // S = Z
        let extra = vec![num("0.01", 6)];
        let c = ConfiningSet::Closure { base_set: Box::new(base), extra, k: 1 };
        // Orbit from k = 1: 0.1, 1, 10, ...
        assert!(c.contains(&num("0.1", 6)).unwrap());
        assert!(c.contains(&num("1", 6)).unwrap()); // integer, in base too
        assert!(!c.contains(&num("0.01", 6)).unwrap()); // below the cutoff
        assert!(!c.contains(&num("0.2", 6)).unwrap());
        assert!(c.contains(&num("25", 6)).unwrap());
    }

    #[test]
    fn ideal_of_round_trip_full_ideals() {
        for n in [6u32, 12] {
            for full in FullIdeal::all(n).unwrap() {
                let s = ConfiningSet::SOfIdeal(full.to_spec());
                let recovered = compute_ideal_of(&s, 4).unwrap();
                assert_eq!(recovered, full, "n = {n}");
            }
        }
    }

    #[test]
    fn ideal_of_q_plus_is_zero_ideal() {
        let qp = ConfiningSet::QPlus { base: 12 };
        let recovered = compute_ideal_of(&qp, 4).unwrap();
        assert!(recovered.is_zero_ideal());
    }

    #[test]
    fn ideal_of_sees_through_closure_junk() {
        // Adding the orbit of 0.1 (tail 1, never 2-divisible) to S must not
        // change the recovered ideal.
        let base = s_of(6, &[1]);
        let c = ConfiningSet::Closure {
            base_set: Box::new(base),
            extra: vec![num("0.1", 6), num("0.011", 6)],
            k: 0,
        };
        let recovered = compute_ideal_of(&c, 4).unwrap();
        assert_eq!(recovered, FullIdeal::new(6, [1].into_iter().collect()).unwrap());
    }

    #[test]
    fn ideal_of_rejects_shallow_depth() {
        let qp = ConfiningSet::QPlus { base: 6 };
        assert!(compute_ideal_of(&qp, 2).is_err());
    }

    #[test]
    fn confining_set_serde_round_trip() {
        let c = ConfiningSet::Closure {
            base_set: Box::new(s_of(12, &[2])),
            extra: vec![num("0.3", 12)],
            k: 2,
        };
        let json = serde_json::to_string(&c).unwrap();
        let back: ConfiningSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        let qm = ConfiningSet::QMinus { base: 5 };
        let json = serde_json::to_value(&qm).unwrap();
        assert_eq!(json, serde_json::json!({"kind": "q_minus", "base": 5}));
    }
}
