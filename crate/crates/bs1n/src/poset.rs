//! The poset of hyperbolic structures on BS(1,n).
//!
//! For n with k distinct prime factors the poset has 2^k + 2 elements: the
//! elliptic and lineal structures at the bottom, the hyperbolic-plane
//! structure, and one quasi-parabolic tree structure per proper ideal of
//! Z_n, indexed here by the set of components that vanish. The plane is the
//! structure of the empty zero set (the whole ring); it sits above the
//! lineal structure but is incomparable to every tree. Among trees,
//! structures grow with their zero sets, so the Bass–Serre tree (everything
//! zero) is the largest.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::basen::NAryNumber;
use crate::bsgroup::{word_length_exact, BSElement};
use crate::confining::{ConfiningSet, EnumBounds};
use crate::error::{Error, Result};
use crate::nadic::{factorize, FullIdeal};

/// One hyperbolic structure on BS(1,n).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HypStructure {
    Elliptic,
    Lineal,
    /// The action on the hyperbolic plane by z ↦ n^k z + h.
    Plane,
    /// The quasi-parabolic action on the tree of the ideal's confining set.
    TreeStruct(FullIdeal),
}

impl HypStructure {
    /// Stable identifier used in DOT output and on the command line:
    /// `elliptic`, `lineal`, `plane`, or `tree_{bitmask}` where the bitmask
    /// has bit i-1 set when component i is zero.
    pub fn dot_id(&self) -> String {
        match self {
            HypStructure::Elliptic => "elliptic".into(),
            HypStructure::Lineal => "lineal".into(),
            HypStructure::Plane => "plane".into(),
            HypStructure::TreeStruct(ideal) => format!("tree_{}", ideal.bitmask()),
        }
    }

    pub fn label(&self) -> String {
        match self {
            HypStructure::Elliptic => "Elliptic".into(),
            HypStructure::Lineal => "Lineal".into(),
            HypStructure::Plane => "Plane".into(),
            HypStructure::TreeStruct(ideal) => {
                let set: Vec<String> =
                    ideal.zero_set().iter().map(|i| i.to_string()).collect();
                format!("Tree {{{}}}", set.join(","))
            }
        }
    }
}

/// Outcome of comparing two structures in the partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    LessThan,
    GreaterThan,
    Equal,
    Incomparable,
}

/// Compares two structures of the same poset. Elliptic sits below
/// everything, lineal below every quasi-parabolic structure; trees compare
/// by inclusion of their zero sets; the plane is incomparable to all trees.
pub fn compare_structures(a: &HypStructure, b: &HypStructure) -> Comparison {
    use Comparison::*;
    use HypStructure::*;
    if a == b {
        return Equal;
    }
    match (a, b) {
        (Elliptic, _) => LessThan,
        (_, Elliptic) => GreaterThan,
        (Lineal, _) => LessThan,
        (_, Lineal) => GreaterThan,
        (Plane, TreeStruct(_)) | (TreeStruct(_), Plane) => Incomparable,
        (TreeStruct(x), TreeStruct(y)) => {
            if x.zero_set().is_subset(y.zero_set()) {
                LessThan
            } else if y.zero_set().is_subset(x.zero_set()) {
                GreaterThan
            } else {
                Incomparable
            }
        }
        (Plane, Plane) => Equal,
    }
}

/// The full poset of hyperbolic structures for one n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypPoset {
    n: u32,
    elements: Vec<HypStructure>,
}

impl HypPoset {
    /// Builds the poset: elliptic, lineal, plane, then the trees ordered by
    /// ascending bitmask of their zero sets.
    pub fn build(n: u32) -> Result<HypPoset> {
        let k = factorize(n)?.len();
        let mut elements =
            vec![HypStructure::Elliptic, HypStructure::Lineal, HypStructure::Plane];
        for ideal in FullIdeal::all(n)? {
            if !ideal.zero_set().is_empty() {
                elements.push(HypStructure::TreeStruct(ideal));
            }
        }
        debug_assert_eq!(elements.len(), (1usize << k) + 2);
        Ok(HypPoset { n, elements })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn elements(&self) -> &[HypStructure] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn index_of(&self, s: &HypStructure) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == s)
            .ok_or_else(|| Error::UnknownElement(s.dot_id()))
    }

    /// Looks an element up by its [`HypStructure::dot_id`].
    pub fn by_id(&self, id: &str) -> Result<&HypStructure> {
        self.elements
            .iter()
            .find(|e| e.dot_id() == id)
            .ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    /// Compares two members of this poset.
    pub fn compare(&self, a: &HypStructure, b: &HypStructure) -> Result<Comparison> {
        self.index_of(a)?;
        self.index_of(b)?;
        Ok(compare_structures(a, b))
    }

    pub fn leq(&self, a: &HypStructure, b: &HypStructure) -> Result<bool> {
        Ok(matches!(
            self.compare(a, b)?,
            Comparison::LessThan | Comparison::Equal
        ))
    }

    /// Covering pairs (i, j): element i is strictly below j with nothing in
    /// between — the Hasse diagram as a transitive reduction.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let m = self.elements.len();
        let lt = |i: usize, j: usize| {
            compare_structures(&self.elements[i], &self.elements[j]) == Comparison::LessThan
        };
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if lt(i, j) && !(0..m).any(|c| lt(i, c) && lt(c, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn maximal_elements(&self) -> Vec<&HypStructure> {
        self.elements
            .iter()
            .filter(|a| {
                !self
                    .elements
                    .iter()
                    .any(|b| compare_structures(a, b) == Comparison::LessThan)
            })
            .collect()
    }

    /// Graphviz rendering of the Hasse diagram, edges pointing upward.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hyp_poset {\n  rankdir=BT;\n");
        out.push_str("  node [shape=box, style=rounded];\n");
        for e in &self.elements {
            out.push_str(&format!("  {} [label=\"{}\"];\n", e.dot_id(), e.label()));
        }
        for (i, j) in self.covers() {
            out.push_str(&format!(
                "  {} -> {};\n",
                self.elements[i].dot_id(),
                self.elements[j].dot_id()
            ));
        }
        out.push_str("}\n");
        out
    }

    /// Cross-checks the abstract order against the confining sets it is
    /// supposed to reflect: whenever tree(A) > tree(B) the ideal of A is the
    /// smaller one, so every window element of S(𝔞_A) must lie in S(𝔞_B).
    pub fn validate_against_confining_sets(&self, bounds: &EnumBounds) -> Result<()> {
        for a in &self.elements {
            for b in &self.elements {
                let (HypStructure::TreeStruct(ia), HypStructure::TreeStruct(ib)) = (a, b)
                else {
                    continue;
                };
                if compare_structures(a, b) != Comparison::GreaterThan {
                    continue;
                }
                let sa = ConfiningSet::SOfIdeal(ia.to_spec());
                let sb = ConfiningSet::SOfIdeal(ib.to_spec());
                for x in sa.enumerate(bounds)? {
                    if !sb.contains(&x)? {
                        return Err(Error::InvalidArgument(format!(
                            "{} > {} but {} ∈ S({}) is missing from S({})",
                            a.dot_id(),
                            b.dot_id(),
                            x,
                            ia,
                            ib
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A witness that the structure of 𝔞 is not dominated by that of 𝔟: an
/// element of S(𝔞) together with its word length over S(𝔟) ∪ {t, t⁻¹}.
/// The family x_K = (prod of the 𝔞-zero primes to the K·e_i) / n^K lies in
/// S(𝔞) for every K while its 𝔟-length grows without bound, provided 𝔟
/// zeroes out some component 𝔞 does not.
pub fn incomparability_witness(
    a: &FullIdeal,
    b: &FullIdeal,
    k: u32,
) -> Result<(NAryNumber, u64)> {
    if a.n() != b.n() {
        return Err(Error::BaseMismatch(a.n(), b.n()));
    }
    if b.zero_set().is_subset(a.zero_set()) {
        return Err(Error::InvalidArgument(format!(
            "{b} imposes no constraint beyond {a}; the witness family stays bounded"
        )));
    }
    let n = a.n();
    let mut numerator: i128 = 1;
    for (idx, &(p, e)) in a.factorization().iter().enumerate() {
        if a.zero_set().contains(&(idx + 1)) {
            let pw = crate::basen::checked_pow_u128(p as u128, k * e)
                .ok_or_else(|| Error::Overflow(format!("{p}^{}", k * e)))?;
            numerator = numerator
                .checked_mul(pw as i128)
                .ok_or_else(|| Error::Overflow("witness numerator".into()))?;
        }
    }
    let denominator = crate::basen::checked_pow_u128(n as u128, k)
        .ok_or_else(|| Error::Overflow(format!("{n}^{k}")))?;
    let x = NAryNumber::from_fraction(numerator, denominator, n)?;
    let sa = ConfiningSet::SOfIdeal(a.to_spec());
    debug_assert!(sa.contains(&x)?);
    let length = word_length_exact(&BSElement::new(x.clone(), 0), b)?;
    Ok((x, length))
}

/// Convenience: the ideal a tree structure acts through, if any.
pub fn ideal_of_structure(s: &HypStructure, n: u32) -> Result<Option<FullIdeal>> {
    Ok(match s {
        HypStructure::TreeStruct(ideal) => Some(ideal.clone()),
        HypStructure::Plane => Some(FullIdeal::new(n, BTreeSet::new())?),
        _ => None,
    })
}
