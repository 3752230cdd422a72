//! Exact elements of Z[1/n] as signed base-n digit maps.
//!
//! A value is stored as a sign together with a sparse map from digit index to
//! digit value: index i carries weight n^i, indices below zero are fractional
//! places. The representation is canonical — zero digits are never stored and
//! the sign is zero exactly when the map is empty — so structural equality is
//! value equality and the maps can key hash tables directly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact element of Z[1/n], n >= 2.
///
/// Invariants: every stored digit lies in [1, base-1]; `sign == 0` iff the
/// digit map is empty; the value is `sign * sum(digits[i] * base^i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NAryNumber {
    base: u32,
    sign: i8,
    digits: BTreeMap<i64, u32>,
}

impl NAryNumber {
    /// The zero element over `base`.
    pub fn zero(base: u32) -> Self {
        NAryNumber { base, sign: 0, digits: BTreeMap::new() }
    }

    /// An integer over `base`.
    pub fn from_integer(value: i128, base: u32) -> Result<Self> {
        Self::from_fraction(value, 1, base)
    }

    /// Builds the canonical representation of `numerator / denominator` over
    /// `base`. Every prime factor of the denominator must divide the base.
    pub fn from_fraction(numerator: i128, denominator: u128, base: u32) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidN(base));
        }
        if denominator == 0 {
            return Err(Error::InvalidArgument("denominator must be positive".into()));
        }
        let mut num = numerator;
        let mut den = denominator;
        let g = gcd_u128(num.unsigned_abs(), den);
        if g > 1 {
            num /= g as i128;
            den /= g;
        }
        // Smallest e with den | base^e; each pass strips gcd(den, base).
        let mut e: u32 = 0;
        let mut d = den;
        while d > 1 {
            let g = gcd_u128(d, base as u128);
            if g == 1 {
                return Err(Error::DenominatorNotSupported(denominator, base));
            }
            d /= g;
            e += 1;
        }
        let factor = checked_pow_u128(base as u128, e)
            .ok_or_else(|| Error::Overflow(format!("{base}^{e}")))?
            / den;
        let scaled = num
            .checked_mul(factor as i128)
            .ok_or_else(|| Error::Overflow(format!("{num} * {factor}")))?;
        let sign: i8 = match scaled.cmp(&0) {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        };
        let mut digits = BTreeMap::new();
        let mut mag = scaled.unsigned_abs();
        let mut idx = -(e as i64);
        while mag > 0 {
            let d = (mag % base as u128) as u32;
            if d != 0 {
                digits.insert(idx, d);
            }
            mag /= base as u128;
            idx += 1;
        }
        Ok(NAryNumber { base, sign, digits })
    }

    /// Canonicalizes an arbitrary signed coefficient map (weights base^i)
    /// into sign-magnitude digit form.
    pub fn from_signed_coeffs(base: u32, coeffs: &BTreeMap<i64, i64>) -> Self {
        debug_assert!(base >= 2);
        match normalize_nonnegative(base, coeffs) {
            Some(digits) => {
                let sign = if digits.is_empty() { 0 } else { 1 };
                NAryNumber { base, sign, digits }
            }
            None => {
                let neg: BTreeMap<i64, i64> = coeffs.iter().map(|(&k, &v)| (k, -v)).collect();
                let digits = normalize_nonnegative(base, &neg)
                    .expect("negated coefficients of a negative value are nonnegative");
                let sign = if digits.is_empty() { 0 } else { -1 };
                NAryNumber { base, sign, digits }
            }
        }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// Sparse digit map: index -> digit in [1, base-1].
    pub fn digits(&self) -> &BTreeMap<i64, u32> {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// True when there are no fractional places.
    pub fn is_integer(&self) -> bool {
        self.digits.keys().next().map_or(true, |&lo| lo >= 0)
    }

    /// Digit at index `i` (0 when absent).
    pub fn digit(&self, i: i64) -> u32 {
        self.digits.get(&i).copied().unwrap_or(0)
    }

    /// Lowest stored index, when nonzero.
    pub fn min_index(&self) -> Option<i64> {
        self.digits.keys().next().copied()
    }

    /// Highest stored index, when nonzero.
    pub fn max_index(&self) -> Option<i64> {
        self.digits.keys().next_back().copied()
    }

    /// The profile (p, c): p is the leading negative place, i.e.
    /// min(0, lowest stored index), and c is the digit at that place
    /// (c = 0 when x has no fractional part).
    pub fn frac_profile(&self) -> (i64, u32) {
        let p = self.min_index().map_or(0, |lo| lo.min(0));
        (p, self.digit(p))
    }

    /// Number of fractional places: -p(x) as a width.
    pub fn frac_depth(&self) -> u32 {
        (-self.frac_profile().0) as u32
    }

    /// Exact sum. Errors when the bases differ.
    pub fn add(&self, other: &NAryNumber) -> Result<NAryNumber> {
        if self.base != other.base {
            return Err(Error::BaseMismatch(self.base, other.base));
        }
        let mut coeffs: BTreeMap<i64, i64> = BTreeMap::new();
        for (&i, &d) in &self.digits {
            *coeffs.entry(i).or_insert(0) += self.sign as i64 * d as i64;
        }
        for (&i, &d) in &other.digits {
            *coeffs.entry(i).or_insert(0) += other.sign as i64 * d as i64;
        }
        Ok(NAryNumber::from_signed_coeffs(self.base, &coeffs))
    }

    pub fn neg(&self) -> NAryNumber {
        NAryNumber { base: self.base, sign: -self.sign, digits: self.digits.clone() }
    }

    pub fn sub(&self, other: &NAryNumber) -> Result<NAryNumber> {
        self.add(&other.neg())
    }

    /// The shift automorphism: multiplies by base^j, translating every digit
    /// index by +j. `shift(x, 1)` is the map usually written alpha.
    pub fn shift(&self, j: i64) -> NAryNumber {
        if self.sign == 0 {
            return self.clone();
        }
        let digits = self.digits.iter().map(|(&i, &d)| (i + j, d)).collect();
        NAryNumber { base: self.base, sign: self.sign, digits }
    }

    /// Exact value as `(integer, e)` with value = integer / base^e and
    /// e = -p(x). Errors when the numerator exceeds i128.
    pub fn to_fraction(&self) -> Result<(i128, u32)> {
        let e = self.frac_depth();
        let mut num: i128 = 0;
        for (&i, &d) in &self.digits {
            let exp = (i + e as i64) as u32;
            let w = checked_pow_u128(self.base as u128, exp)
                .and_then(|w| i128::try_from(w).ok())
                .ok_or_else(|| Error::Overflow(format!("{}^{exp}", self.base)))?;
            num = num
                .checked_add(
                    (d as i128)
                        .checked_mul(w)
                        .ok_or_else(|| Error::Overflow("digit * weight".into()))?,
                )
                .ok_or_else(|| Error::Overflow("numerator sum".into()))?;
        }
        Ok((num * self.sign as i128, e))
    }

    /// Approximate real value; fine for display and for the plane action.
    pub fn value_f64(&self) -> f64 {
        let b = self.base as f64;
        let mut v = 0.0;
        for (&i, &d) in &self.digits {
            v += d as f64 * b.powi(i as i32);
        }
        v * self.sign as f64
    }

    /// Exact value comparison (both operands must share a base).
    pub fn cmp_value(&self, other: &NAryNumber) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        assert_eq!(self.base, other.base, "cmp_value across bases");
        match self.sign.cmp(&other.sign) {
            Equal => {}
            ord => return ord,
        }
        if self.sign == 0 {
            return Equal;
        }
        let mag = self.abs_cmp(other);
        if self.sign > 0 {
            mag
        } else {
            mag.reverse()
        }
    }

    /// Compares |self| with |other| digit-wise from the top.
    pub fn abs_cmp(&self, other: &NAryNumber) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        let mut a = self.digits.iter().rev().peekable();
        let mut b = other.digits.iter().rev().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Equal,
                (Some(_), None) => return Greater,
                (None, Some(_)) => return Less,
                (Some((&ia, &da)), Some((&ib, &db))) => {
                    if ia != ib {
                        return ia.cmp(&ib);
                    }
                    if da != db {
                        return da.cmp(&db);
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }

    /// |self| <= limit, exactly (limit is an integer bound on the magnitude).
    pub fn abs_leq_integer(&self, limit: u128) -> bool {
        let e = self.frac_depth();
        match self.to_fraction() {
            Ok((num, _)) => match checked_pow_u128(self.base as u128, e) {
                Some(scale) => match limit.checked_mul(scale) {
                    Some(rhs) => num.unsigned_abs() <= rhs,
                    None => true,
                },
                None => false,
            },
            // A numerator too large for i128 certainly exceeds any desk-scale
            // limit.
            Err(_) => false,
        }
    }
}

/// Normalizes coefficients into digits assuming the represented value is
/// nonnegative; returns None when it turns out to be negative.
fn normalize_nonnegative(base: u32, coeffs: &BTreeMap<i64, i64>) -> Option<BTreeMap<i64, u32>> {
    let b = base as i64;
    let mut out = BTreeMap::new();
    let mut carry: i64 = 0;
    let mut pending = coeffs.iter().filter(|(_, &v)| v != 0).peekable();
    let mut pos = match pending.peek() {
        Some((&p, _)) => p,
        None => return Some(out),
    };
    loop {
        let here = match pending.peek() {
            Some((&p, &v)) if p == pos => {
                pending.next();
                v
            }
            _ => 0,
        };
        let total = here + carry;
        let digit = total.rem_euclid(b);
        carry = (total - digit) / b;
        if digit != 0 {
            out.insert(pos, digit as u32);
        }
        pos += 1;
        match pending.peek() {
            Some((&p, _)) => {
                if carry == 0 && p > pos {
                    pos = p;
                }
            }
            None => {
                if carry == 0 {
                    return Some(out);
                }
                if carry < 0 {
                    // The whole value is negative; the caller retries negated.
                    return None;
                }
            }
        }
    }
}

pub(crate) fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn checked_pow_u128(base: u128, exp: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

// ---------------------------------------------------------------------------
// Textual format.
//
// Bases up to 10 print digits as plain characters ("-10.1001"); larger bases
// print decimal digit values separated by colons ("1:12:7.3"). Parsing is the
// exact inverse on canonical output, and tolerates leading zeros.
// ---------------------------------------------------------------------------

impl fmt::Display for NAryNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        let hi = self.max_index().map_or(0, |h| h.max(0));
        let lo = self.min_index().map_or(0, |l| l.min(0));
        let colon = self.base > 10;
        let mut int_part: Vec<String> = Vec::new();
        for i in (0..=hi).rev() {
            int_part.push(self.digit(i).to_string());
        }
        if colon {
            write!(f, "{}", int_part.join(":"))?;
        } else {
            write!(f, "{}", int_part.concat())?;
        }
        if lo < 0 {
            write!(f, ".")?;
            let mut frac_part: Vec<String> = Vec::new();
            for i in (lo..0).rev() {
                frac_part.push(self.digit(i).to_string());
            }
            if colon {
                write!(f, "{}", frac_part.join(":"))?;
            } else {
                write!(f, "{}", frac_part.concat())?;
            }
        }
        Ok(())
    }
}

impl NAryNumber {
    /// Parses the textual format over an explicit base.
    pub fn parse(text: &str, base: u32) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidN(base));
        }
        let text = text.trim();
        let (negative, body) = match text.strip_prefix('-').or_else(|| text.strip_prefix('\u{2212}')) {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        if body.is_empty() {
            return Err(Error::Parse("empty numeral".into()));
        }
        let mut parts = body.splitn(2, '.');
        let int_str = parts.next().unwrap_or("");
        let frac_str = parts.next();
        let int_digits = parse_digit_run(int_str, base)?;
        let frac_digits = match frac_str {
            Some(s) => parse_digit_run(s, base)?,
            None => Vec::new(),
        };
        if int_digits.is_empty() && frac_digits.is_empty() {
            return Err(Error::Parse(format!("no digits in {text:?}")));
        }
        let mut digits = BTreeMap::new();
        let top = int_digits.len() as i64 - 1;
        for (k, &d) in int_digits.iter().enumerate() {
            if d != 0 {
                digits.insert(top - k as i64, d);
            }
        }
        for (k, &d) in frac_digits.iter().enumerate() {
            if d != 0 {
                digits.insert(-(k as i64) - 1, d);
            }
        }
        if let Some((&lo, _)) = digits.iter().next() {
            if lo < 0 && frac_digits.last() == Some(&0) {
                return Err(Error::Parse("trailing zero fractional digit".into()));
            }
        } else if frac_digits.last() == Some(&0) && !frac_digits.is_empty() {
            return Err(Error::Parse("trailing zero fractional digit".into()));
        }
        let sign = if digits.is_empty() {
            0
        } else if negative {
            -1
        } else {
            1
        };
        Ok(NAryNumber { base, sign, digits })
    }
}

fn parse_digit_run(s: &str, base: u32) -> Result<Vec<u32>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let raw: Vec<u32> = if base > 10 {
        s.split(':')
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad digit group {tok:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad digit character {c:?}")))
            })
            .collect::<Result<_>>()?
    };
    for &d in &raw {
        if d >= base {
            return Err(Error::Parse(format!("digit {d} out of range for base {base}")));
        }
    }
    Ok(raw)
}

/// A numeral string only fixes a value together with its base, so the serde
/// form is an object carrying both.
#[derive(Serialize, Deserialize)]
struct NAryRepr {
    base: u32,
    value: String,
}

impl Serialize for NAryNumber {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        NAryRepr { base: self.base, value: self.to_string() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for NAryNumber {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = NAryRepr::deserialize(de)?;
        NAryNumber::parse(&repr.value, repr.base).map_err(serde::de::Error::custom)
    }
}

impl FromStr for NAryNumber {
    type Err = Error;

    /// A numeral alone does not determine the base, so `FromStr` takes the
    /// combined `base@numeral` form, e.g. `10@0.1` or `12@-1:11.6`.
    fn from_str(s: &str) -> Result<Self> {
        let (base_str, numeral) = s
            .split_once('@')
            .ok_or_else(|| Error::Parse("expected base@numeral".into()))?;
        let base: u32 = base_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad base {base_str:?}")))?;
        NAryNumber::parse(numeral, base)
    }
}
