//! The group BS(1,n) = Z[1/n] ⋊ Z and its word metrics.
//!
//! Elements are pairs (h, k) with h ∈ Z[1/n] and k the t-exponent,
//! multiplying by (h1, k1)(h2, k2) = (h1 + α^k1(h2), k1 + k2). The word
//! metrics of interest come from the generating sets S(𝔞) ∪ {t, t⁻¹}, one
//! per ideal 𝔞 of Z_n; the closed-form length is implemented next to a
//! certified breadth-first search so the two can be played against each
//! other. The same elements act on the Bass–Serre tree of the ascending
//! HNN splitting (built here as finite balls) and on the hyperbolic plane
//! through z ↦ n^k z + h.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::basen::NAryNumber;
use crate::confining::{ConfiningSet, EnumBounds};
use crate::error::{Error, Result};
use crate::nadic::FullIdeal;

/// An element (h, k) of BS(1,n): the map x ↦ h + n^k x.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BSElement {
    pub h: NAryNumber,
    pub k: i64,
}

impl BSElement {
    pub fn new(h: NAryNumber, k: i64) -> Self {
        BSElement { h, k }
    }

    pub fn identity(base: u32) -> Self {
        BSElement { h: NAryNumber::zero(base), k: 0 }
    }

    pub fn base(&self) -> u32 {
        self.h.base()
    }

    /// t^k.
    pub fn t_power(base: u32, k: i64) -> Self {
        BSElement { h: NAryNumber::zero(base), k }
    }

    /// a^y = (y, 0).
    pub fn h_element(y: NAryNumber) -> Self {
        BSElement { h: y, k: 0 }
    }

    pub fn mul(&self, other: &BSElement) -> Result<BSElement> {
        let h = self.h.add(&other.h.shift(self.k))?;
        Ok(BSElement { h, k: self.k + other.k })
    }

    pub fn inverse(&self) -> BSElement {
        BSElement { h: self.h.neg().shift(-self.k), k: -self.k }
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0 && self.h.is_zero()
    }
}

impl fmt::Display for BSElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.h, self.k)
    }
}

/// A letter in the generating alphabet: the stable letter, its inverse, or
/// an element of the horocyclic subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Letter {
    T,
    TInv,
    Elem(NAryNumber),
}

/// Evaluates a word left to right.
pub fn evaluate_word(base: u32, word: &[Letter]) -> Result<BSElement> {
    let mut g = BSElement::identity(base);
    for letter in word {
        let step = match letter {
            Letter::T => BSElement::t_power(base, 1),
            Letter::TInv => BSElement::t_power(base, -1),
            Letter::Elem(y) => BSElement::h_element(y.clone()),
        };
        g = g.mul(&step)?;
    }
    Ok(g)
}

/// The normal form t^(-r) a^x t^s, kept with r, s ≥ 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalForm {
    pub r: u64,
    pub x: NAryNumber,
    pub s: u64,
}

impl NormalForm {
    /// The element this form denotes: (α^(-r)(x), s - r).
    pub fn element(&self) -> BSElement {
        BSElement { h: self.x.shift(-(self.r as i64)), k: self.s as i64 - self.r as i64 }
    }

    /// Letters of the form, for feeding back into [`evaluate_word`].
    pub fn letters(&self) -> Vec<Letter> {
        let mut word = Vec::new();
        for _ in 0..self.r {
            word.push(Letter::TInv);
        }
        if !self.x.is_zero() {
            word.push(Letter::Elem(self.x.clone()));
        }
        for _ in 0..self.s {
            word.push(Letter::T);
        }
        word
    }

    /// Cancels common powers of the base through the middle: while x is
    /// divisible by n and both exponents are positive, shrink everything.
    pub fn reduce(mut self) -> NormalForm {
        while self.r > 0 && self.s > 0 && (self.x.is_zero() || self.x.min_index().unwrap() >= 1)
        {
            self.r -= 1;
            self.s -= 1;
            self.x = self.x.shift(-1);
        }
        if self.x.is_zero() {
            // t^(-r) t^s with nothing in between collapses entirely.
            let net = self.s as i64 - self.r as i64;
            self.r = (-net).max(0) as u64;
            self.s = net.max(0) as u64;
        }
        self
    }
}

/// Scans a word once, left to right, into the form t^(-r) a^x t^s.
///
/// Each letter does constant bookkeeping: t bumps s; t⁻¹ either cancels
/// against s or moves through a^x, conjugating x by the shift; a^y lands in
/// the middle as α^s(y). The result satisfies r + s + (x ≠ 0) ≤ word length
/// and always evaluates to the same element.
pub fn normal_form_of_word(base: u32, word: &[Letter]) -> Result<NormalForm> {
    let mut r: u64 = 0;
    let mut s: u64 = 0;
    let mut x = NAryNumber::zero(base);
    for letter in word {
        match letter {
            Letter::T => s += 1,
            Letter::TInv => {
                if s > 0 {
                    s -= 1;
                } else {
                    r += 1;
                    x = x.shift(1);
                }
            }
            Letter::Elem(y) => {
                if y.base() != base {
                    return Err(Error::BaseMismatch(y.base(), base));
                }
                x = x.add(&y.shift(s as i64))?;
            }
        }
    }
    Ok(NormalForm { r, x, s })
}

/// The reduced normal form of an element computed directly: the least
/// r ≥ max(0, -k) making n^r h an integer.
pub fn normal_form(g: &BSElement) -> NormalForm {
    let mut r = (-g.k).max(0) as u64;
    let needed = g.h.frac_depth() as u64;
    r = r.max(needed);
    NormalForm { r, x: g.h.shift(r as i64), s: (g.k + r as i64) as u64 }
}

// ---------------------------------------------------------------------------
// Word length for the generating sets S(𝔞) ∪ {t, t⁻¹}.
// ---------------------------------------------------------------------------

/// Closed form for the word length of g = (h, k) with respect to
/// S(𝔞) ∪ {t, t⁻¹}: |k| when h = 0, and otherwise the minimum of
/// 2r + k + 1 over r ≥ max(0, -k) with α^r(h) ∈ S(𝔞). Such r exist because
/// α^r(h) is eventually an integer, and the valid set is upward closed by
/// the confining axiom (a).
pub fn word_length_exact(g: &BSElement, ideal: &FullIdeal) -> Result<u64> {
    if g.base() != ideal.n() {
        return Err(Error::BaseMismatch(g.base(), ideal.n()));
    }
    if g.h.is_zero() {
        return Ok(g.k.unsigned_abs());
    }
    let s = ConfiningSet::SOfIdeal(ideal.to_spec());
    let start = (-g.k).max(0);
    let stop = start.max(g.h.frac_depth() as i64);
    for r in start..=stop {
        if s.contains(&g.h.shift(r))? {
            return Ok((2 * r + g.k + 1) as u64);
        }
    }
    unreachable!("alpha^r(h) is an integer for r = frac_depth(h)");
}

/// One exploration record of the certified search, for tracing.
#[derive(Clone, Debug, Serialize)]
pub struct TraceRow {
    /// The remaining defect α^(-k)(g.h - h_done), as a numeral.
    pub state_h: String,
    /// The t-exponent of the prefix built so far.
    pub state_k: i64,
    /// Index of the parent row, -1 for the root.
    pub parent: i64,
    /// Letters spent so far.
    pub depth: u64,
}

/// Budget for [`word_length_bfs`].
#[derive(Clone, Debug)]
pub struct BfsParams {
    /// Largest word length to certify.
    pub radius: u64,
    /// Optional magnitude cap the generator window was built with; used for
    /// a coarse feasibility check before searching.
    pub max_abs: Option<u128>,
}

/// Dense generator window: every nonzero element of S(𝔞) the bounds reach.
pub fn s_generators(ideal: &FullIdeal, bounds: &EnumBounds) -> Result<Vec<NAryNumber>> {
    let s = ConfiningSet::SOfIdeal(ideal.to_spec());
    Ok(s.enumerate(bounds)?.into_iter().filter(|x| !x.is_zero()).collect())
}

/// Sparse generator window: nonzero elements of S(𝔞) with at most
/// `max_digits` nonzero digits, all at indices in [min_index, max_index].
/// Geodesics of the 2r + k + 1 shape only ever need one sparse letter, so
/// this keeps the branching factor manageable at larger bases.
pub fn sparse_s_generators(
    ideal: &FullIdeal,
    max_digits: u32,
    min_index: i64,
    max_index: i64,
) -> Result<Vec<NAryNumber>> {
    if max_digits == 0 || min_index > max_index {
        return Err(Error::InvalidArgument("empty sparse generator window".into()));
    }
    if max_digits > 3 {
        return Err(Error::InvalidArgument(
            "sparse windows beyond 3 nonzero digits are not supported".into(),
        ));
    }
    let n = ideal.n();
    let s = ConfiningSet::SOfIdeal(ideal.to_spec());
    let indices: Vec<i64> = (min_index..=max_index).collect();
    let mut out: Vec<NAryNumber> = Vec::new();
    let push = |digits: &[(i64, u32)], out: &mut Vec<NAryNumber>| -> Result<()> {
        let coeffs = digits.iter().map(|&(i, d)| (i, d as i64)).collect();
        let x = NAryNumber::from_signed_coeffs(n, &coeffs);
        if s.contains(&x)? {
            out.push(x.neg());
            out.push(x);
        }
        Ok(())
    };
    for (ai, &i) in indices.iter().enumerate() {
        for di in 1..n {
            push(&[(i, di)], &mut out)?;
            if max_digits < 2 {
                continue;
            }
            for (bi, &j) in indices.iter().enumerate().skip(ai + 1) {
                for dj in 1..n {
                    push(&[(i, di), (j, dj)], &mut out)?;
                    if max_digits < 3 {
                        continue;
                    }
                    for &l in indices.iter().skip(bi + 1) {
                        for dl in 1..n {
                            push(&[(i, di), (j, dj), (l, dl)], &mut out)?;
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| (a.sign() < 0).cmp(&(b.sign() < 0)).then_with(|| a.abs_cmp(b)));
    out.dedup();
    Ok(out)
}

fn bfs_lower_bound(delta: &NAryNumber, k: i64, goal_k: i64, f_eff: u32) -> u64 {
    let dk = goal_k - k;
    let straight = dk.unsigned_abs();
    if delta.is_zero() {
        return straight;
    }
    let deficit = (delta.frac_depth() as i64 - f_eff as i64).max(0);
    let detour = (2 * deficit + dk + 1).max(0) as u64;
    straight.max(detour)
}

/// Certified word-length search.
///
/// Explores words over `gens` ∪ {t, t⁻¹} in defect space: a state is
/// (δ, k) where δ = α^(-k)(g.h - h built so far); a generator letter turns
/// δ into δ - x and t^(±1) shifts δ. Reaching (0, g.k) at depth d proves a
/// word of length d. States are pruned with a sound lower bound, so
/// `Some(d)` is exact for the windowed alphabet and `None` certifies that
/// no word within `radius` exists over it.
pub fn word_length_bfs(
    g: &BSElement,
    ideal: &FullIdeal,
    gens: &[NAryNumber],
    params: &BfsParams,
) -> Result<Option<u64>> {
    word_length_bfs_inner(g, ideal, gens, params, None).map(|(d, _)| d)
}

/// [`word_length_bfs`] plus the exploration log.
pub fn word_length_bfs_traced(
    g: &BSElement,
    ideal: &FullIdeal,
    gens: &[NAryNumber],
    params: &BfsParams,
) -> Result<(Option<u64>, Vec<TraceRow>)> {
    let mut rows = Vec::new();
    let (d, _) = word_length_bfs_inner(g, ideal, gens, params, Some(&mut rows))?;
    Ok((d, rows))
}

fn word_length_bfs_inner(
    g: &BSElement,
    ideal: &FullIdeal,
    gens: &[NAryNumber],
    params: &BfsParams,
    mut trace: Option<&mut Vec<TraceRow>>,
) -> Result<(Option<u64>, usize)> {
    if g.base() != ideal.n() {
        return Err(Error::BaseMismatch(g.base(), ideal.n()));
    }
    for x in gens {
        if x.base() != g.base() {
            return Err(Error::BaseMismatch(x.base(), g.base()));
        }
    }
    // Feasibility of the window: a word of `radius` letters drawn from a
    // window of magnitude <= w cannot build an h-part larger than
    // radius · w · n^radius; refuse clearly outgunned calls.
    if let Some(w) = params.max_abs {
        let r = params.radius as u32;
        let reach = (w.max(1))
            .checked_mul(params.radius.max(1) as u128)
            .and_then(|v| crate::basen::checked_pow_u128(g.base() as u128, r).map(|p| (v, p)))
            .and_then(|(v, p)| v.checked_mul(p));
        let too_small = match reach {
            Some(reach) => !g.h.abs_leq_integer(reach),
            None => false,
        };
        if too_small {
            return Err(Error::BoundTooSmall(format!(
                "generator window magnitude {w} cannot reach {} within {} letters",
                g.h, params.radius
            )));
        }
    }
    let f_eff = gens.iter().map(|x| x.frac_depth()).max().unwrap_or(0);
    let goal_k = g.k;
    let start = (g.h.clone(), 0i64);
    if bfs_lower_bound(&start.0, start.1, goal_k, f_eff) > params.radius {
        return Ok((None, 0));
    }
    let mut visited: HashSet<(NAryNumber, i64)> = HashSet::new();
    let mut queue: VecDeque<((NAryNumber, i64), u64, i64)> = VecDeque::new();
    visited.insert(start.clone());
    queue.push_back((start, 0, -1));
    let mut expanded = 0usize;
    let mut next_row: i64 = 0;
    while let Some(((delta, k), depth, parent)) = queue.pop_front() {
        let row_id = next_row;
        next_row += 1;
        if let Some(rows) = trace.as_deref_mut() {
            rows.push(TraceRow {
                state_h: delta.to_string(),
                state_k: k,
                parent,
                depth,
            });
        }
        if delta.is_zero() && k == goal_k {
            return Ok((Some(depth), expanded));
        }
        if depth == params.radius {
            continue;
        }
        expanded += 1;
        let push = |state: (NAryNumber, i64),
                        visited: &mut HashSet<(NAryNumber, i64)>,
                        queue: &mut VecDeque<((NAryNumber, i64), u64, i64)>| {
            if depth + 1 + bfs_lower_bound(&state.0, state.1, goal_k, f_eff) <= params.radius
                && visited.insert(state.clone())
            {
                queue.push_back((state, depth + 1, row_id));
            }
        };
        // t and t^-1: k ± 1 shifts the defect the other way.
        push((delta.shift(-1), k + 1), &mut visited, &mut queue);
        push((delta.shift(1), k - 1), &mut visited, &mut queue);
        // Generator letters cannot touch digits below the window depth, so
        // when the defect is deeper than every generator they leave the
        // lower bound unchanged — skip the whole fan when it cannot fit.
        let deep = delta.frac_depth() > f_eff;
        if deep && depth + 1 + bfs_lower_bound(&delta, k, goal_k, f_eff) > params.radius {
            continue;
        }
        for x in gens {
            let next = delta.sub(x)?;
            push((next, k), &mut visited, &mut queue);
        }
    }
    Ok((None, expanded))
}

// ---------------------------------------------------------------------------
// Bass–Serre tree balls.
// ---------------------------------------------------------------------------

/// How an edge leaves its parent vertex: up along a coset translate x·t, or
/// down along t⁻¹.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TreeEdge {
    Up(NAryNumber),
    Down,
}

/// A radius-r ball in the Bass–Serre tree of BS(1,n) acting with vertex
/// group S(𝔞), rooted at the identity coset.
#[derive(Clone, Debug, Serialize)]
pub struct TreeBall {
    /// Coset representatives; index 0 is the root.
    pub vertices: Vec<BSElement>,
    /// Tree distance of each vertex from the root.
    pub depths: Vec<u32>,
    /// (parent index, child index, kind).
    pub edges: Vec<(usize, usize, TreeEdge)>,
    pub radius: u32,
    pub ideal: FullIdeal,
    /// The coset representatives of S(𝔞)/α(S(𝔞)) used for up-edges.
    pub reps: Vec<NAryNumber>,
}

/// Representatives of S(𝔞)/α(S(𝔞)), collected greedily from the sorted
/// window: x and y are identified when α⁻¹(x - y) ∈ S(𝔞).
pub fn coset_reps_mod_alpha(ideal: &FullIdeal, bounds: &EnumBounds) -> Result<Vec<NAryNumber>> {
    let s = ConfiningSet::SOfIdeal(ideal.to_spec());
    let window = s.enumerate(bounds)?;
    let mut reps: Vec<NAryNumber> = Vec::new();
    for x in window {
        let mut fresh = true;
        for y in &reps {
            if s.contains(&x.sub(y)?.shift(-1))? {
                fresh = false;
                break;
            }
        }
        if fresh {
            reps.push(x);
        }
    }
    Ok(reps)
}

/// Does this coset of S(𝔞) contain the identity — i.e. is d ∈ S(𝔞) as a
/// group element?
fn in_vertex_group(d: &BSElement, s: &ConfiningSet) -> Result<bool> {
    Ok(d.k == 0 && s.contains(&d.h)?)
}

/// Builds the ball of the given radius. Children follow the HNN structure:
/// every vertex has one down-edge g ↦ g t⁻¹ and one up-edge g ↦ g x t per
/// representative x; the exploration never revisits its parent, and the
/// tree has no other coincidences (checked by [`TreeBall::validate`]).
pub fn tree_ball(ideal: &FullIdeal, radius: u32, rep_bounds: &EnumBounds) -> Result<TreeBall> {
    let base = ideal.n();
    let s = ConfiningSet::SOfIdeal(ideal.to_spec());
    let reps = coset_reps_mod_alpha(ideal, rep_bounds)?;
    // The representative lying in α(S) — its up-edge from a child reached by
    // t⁻¹ would climb straight back.
    let mut alpha_rep = None;
    for (i, x) in reps.iter().enumerate() {
        if s.contains(&x.shift(-1))? {
            alpha_rep = Some(i);
            break;
        }
    }
    let alpha_rep = alpha_rep.ok_or_else(|| {
        Error::InvalidArgument("no representative lies in α(S); window too small".into())
    })?;
    #[derive(Clone, Copy, PartialEq)]
    enum Arrived {
        Root,
        ViaUp,
        ViaDown,
    }
    let mut vertices = vec![BSElement::identity(base)];
    let mut depths = vec![0u32];
    let mut edges: Vec<(usize, usize, TreeEdge)> = Vec::new();
    let mut queue: VecDeque<(usize, Arrived)> = VecDeque::new();
    queue.push_back((0, Arrived::Root));
    while let Some((v, arrived)) = queue.pop_front() {
        if depths[v] == radius {
            continue;
        }
        let g = vertices[v].clone();
        for (i, x) in reps.iter().enumerate() {
            if arrived == Arrived::ViaDown && i == alpha_rep {
                continue;
            }
            let child = g.mul(&BSElement { h: x.clone(), k: 1 })?;
            let c = vertices.len();
            vertices.push(child);
            depths.push(depths[v] + 1);
            edges.push((v, c, TreeEdge::Up(x.clone())));
            queue.push_back((c, Arrived::ViaUp));
        }
        if arrived != Arrived::ViaUp {
            let child = g.mul(&BSElement::t_power(base, -1))?;
            let c = vertices.len();
            vertices.push(child);
            depths.push(depths[v] + 1);
            edges.push((v, c, TreeEdge::Down));
            queue.push_back((c, Arrived::ViaDown));
        }
    }
    Ok(TreeBall { vertices, depths, edges, radius, ideal: ideal.clone(), reps })
}

impl TreeBall {
    /// Number of edges incident to vertex i.
    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|(a, b, _)| *a == i || *b == i).count()
    }

    /// Checks that the ball really is a ball in the Bass–Serre tree:
    /// pairwise-distinct cosets, structurally valid edges, and |E| = |V|-1
    /// with everything connected to the root.
    pub fn validate(&self) -> Result<()> {
        let s = ConfiningSet::SOfIdeal(self.ideal.to_spec());
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                let d = self.vertices[i].inverse().mul(&self.vertices[j])?;
                if in_vertex_group(&d, &s)? {
                    return Err(Error::InvalidArgument(format!(
                        "vertices {i} and {j} name the same coset"
                    )));
                }
            }
        }
        for (a, b, kind) in &self.edges {
            let d = self.vertices[*a].inverse().mul(&self.vertices[*b])?;
            let ok = match kind {
                TreeEdge::Up(_) => d.k == 1 && s.contains(&d.h)?,
                TreeEdge::Down => d.k == -1 && s.contains(&d.h.shift(1))?,
            };
            if !ok {
                return Err(Error::InvalidArgument(format!(
                    "edge {a} -> {b} is not an admissible tree edge"
                )));
            }
        }
        if self.edges.len() + 1 != self.vertices.len() {
            return Err(Error::InvalidArgument(format!(
                "{} edges for {} vertices",
                self.edges.len(),
                self.vertices.len()
            )));
        }
        let mut seen = vec![false; self.vertices.len()];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for (a, b, _) in &self.edges {
                let w = if *a == v { *b } else if *b == v { *a } else { continue };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if !seen.iter().all(|&x| x) {
            return Err(Error::InvalidArgument("ball is not connected".into()));
        }
        Ok(())
    }

    /// Graphviz rendering, vertices labeled by their coset representative.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph tree_ball {\n  node [shape=circle];\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{v}\"];\n"));
        }
        for (a, b, kind) in &self.edges {
            let style = match kind {
                TreeEdge::Up(_) => "",
                TreeEdge::Down => " [style=dashed]",
            };
            out.push_str(&format!("  v{a} -- v{b}{style};\n"));
        }
        out.push_str("}\n");
        out
    }
}

// ---------------------------------------------------------------------------
// The hyperbolic-plane action and the abelianization.
// ---------------------------------------------------------------------------

/// Hyperbolic distance between two points of the upper half plane.
pub fn h2_distance(z: (f64, f64), w: (f64, f64)) -> f64 {
    let dx = z.0 - w.0;
    let dy = z.1 - w.1;
    let cosh = 1.0 + (dx * dx + dy * dy) / (2.0 * z.1 * w.1);
    cosh.acosh()
}

/// Where g sends a point of the upper half plane: z ↦ n^k z + h.
pub fn h2_apply(g: &BSElement, z: (f64, f64)) -> (f64, f64) {
    let scale = (g.base() as f64).powi(g.k as i32);
    (scale * z.0 + g.h.value_f64(), scale * z.1)
}

/// Displacement of the basepoint i: d(i, g·i) =
/// 2 asinh(½ √((h² + (n^k - 1)²) / n^k)).
pub fn h2_displacement(g: &BSElement) -> f64 {
    let r = g.h.value_f64();
    let scale = (g.base() as f64).powi(g.k as i32);
    let q = (r * r + (scale - 1.0) * (scale - 1.0)) / scale;
    2.0 * (0.5 * q.sqrt()).asinh()
}

/// Image of g in the abelianization Z × Z/(n-1): the t-exponent, and the
/// digit sum of h with its sign, mod n - 1 (trivial for n = 2).
pub fn abelianize(g: &BSElement) -> (i64, u32) {
    let n = g.base();
    if n == 2 {
        return (g.k, 0);
    }
    let m = (n - 1) as i64;
    let digit_sum: i64 = g.h.digits().values().map(|&d| d as i64).sum();
    let signed = g.h.sign() as i64 * digit_sum;
    (g.k, signed.rem_euclid(m) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn num(text: &str, base: u32) -> NAryNumber {
        NAryNumber::parse(text, base).unwrap()
    }

    fn elem(h: &str, k: i64, base: u32) -> BSElement {
        BSElement::new(num(h, base), k)
    }

    fn zero_ideal(n: u32) -> FullIdeal {
        let k = crate::nadic::factorize(n).unwrap().len();
        FullIdeal::new(n, (1..=k).collect()).unwrap()
    }

    #[test]
    fn group_axioms_on_samples() {
        let g = elem("0.1", 2, 6);
        let h = elem("-4.3", -1, 6);
        let k = elem("12", 0, 6);
        let gh_k = g.mul(&h).unwrap().mul(&k).unwrap();
        let g_hk = g.mul(&h.mul(&k).unwrap()).unwrap();
        assert_eq!(gh_k, g_hk);
        assert!(g.mul(&g.inverse()).unwrap().is_identity());
        assert!(g.inverse().mul(&g).unwrap().is_identity());
    }

    #[test]
    fn defining_relation_holds() {
        // t a t^-1 = a^n.
        let base = 6;
        let t = BSElement::t_power(base, 1);
        let a = BSElement::h_element(num("1", base));
        let lhs = t.mul(&a).unwrap().mul(&t.inverse()).unwrap();
        let rhs = BSElement::h_element(num("10", base));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn word_normal_form_matches_evaluation() {
        let base = 6;
        let word = vec![
            Letter::T,
            Letter::Elem(num("0.1", base)),
            Letter::TInv,
            Letter::TInv,
            Letter::Elem(num("5", base)),
            Letter::T,
        ];
        let nf = normal_form_of_word(base, &word).unwrap();
        assert_eq!(nf.element(), evaluate_word(base, &word).unwrap());
        assert!(nf.r + nf.s + u64::from(!nf.x.is_zero()) <= word.len() as u64);
        // The letters of the form evaluate back to the same element.
        let relit = evaluate_word(base, &nf.letters()).unwrap();
        assert_eq!(relit, nf.element());
    }

    #[test]
    fn direct_normal_form_is_reduced() {
        let g = elem("0.03", -1, 6);
        let nf = normal_form(&g);
        assert_eq!(nf.element(), g);
        assert_eq!(nf.r, 2);
        assert_eq!(nf.s, 1);
        assert_eq!(nf.x, num("3", 6));
        // Greedy + reduce agrees with the direct form.
        let word = vec![
            Letter::TInv,
            Letter::TInv,
            Letter::TInv,
            Letter::Elem(num("30", 6)),
            Letter::T,
            Letter::T,
        ];
        let greedy = normal_form_of_word(6, &word).unwrap();
        assert_eq!(greedy.element(), g);
        assert_eq!(greedy.reduce(), nf);
    }

    #[test]
    fn exact_length_basics() {
        let ideal = zero_ideal(2);
        assert_eq!(word_length_exact(&elem("0", 3, 2), &ideal).unwrap(), 3);
        assert_eq!(word_length_exact(&elem("1", 0, 2), &ideal).unwrap(), 1);
        // h = 2^-K costs 2K + 1.
        for k in 1..=3u32 {
            let h = NAryNumber::from_fraction(1, 1 << k, 2).unwrap();
            let g = BSElement::new(h, 0);
            assert_eq!(word_length_exact(&g, &ideal).unwrap(), 2 * k as u64 + 1);
        }
        // With the whole ring every h costs one letter.
        let whole = FullIdeal::new(2, Default::default()).unwrap();
        let g = BSElement::new(NAryNumber::from_fraction(1, 8, 2).unwrap(), 0);
        assert_eq!(word_length_exact(&g, &whole).unwrap(), 1);
    }

    #[test]
    fn bfs_agrees_on_small_elements() {
        let ideal = zero_ideal(2);
        let gens = sparse_s_generators(&ideal, 2, -2, 3).unwrap();
        assert!(gens.iter().all(|x| x.is_integer()));
        for (h, k) in [("1", 0i64), ("0.1", 0), ("0.1", 1), ("1.1", -1), ("0", 2), ("11", 0)] {
            let g = elem(h, k, 2);
            let exact = word_length_exact(&g, &ideal).unwrap();
            let params = BfsParams { radius: exact, max_abs: None };
            let found = word_length_bfs(&g, &ideal, &gens, &params).unwrap();
            assert_eq!(found, Some(exact), "({h}, {k})");
            if exact > 0 {
                let tight = BfsParams { radius: exact - 1, max_abs: None };
                assert_eq!(word_length_bfs(&g, &ideal, &gens, &tight).unwrap(), None);
            }
        }
    }

    #[test]
    fn bfs_trace_has_root_and_goal() {
        let ideal = zero_ideal(2);
        let gens = sparse_s_generators(&ideal, 1, 0, 2).unwrap();
        let g = elem("1", 1, 2);
        let params = BfsParams { radius: 2, max_abs: None };
        let (d, rows) = word_length_bfs_traced(&g, &ideal, &gens, &params).unwrap();
        assert_eq!(d, Some(2));
        assert_eq!(rows[0].parent, -1);
        assert!(rows.iter().all(|r| r.depth <= 2));
    }

    #[test]
    fn bound_too_small_is_reported() {
        let ideal = zero_ideal(2);
        let gens = sparse_s_generators(&ideal, 1, 0, 1).unwrap();
        let g = elem("10000000", 0, 2);
        let params = BfsParams { radius: 1, max_abs: Some(3) };
        match word_length_bfs(&g, &ideal, &gens, &params) {
            Err(Error::BoundTooSmall(_)) => {}
            other => panic!("expected BoundTooSmall, got {other:?}"),
        }
    }

    #[test]
    fn tree_ball_base2_is_trivalent() {
        let ideal = zero_ideal(2);
        let bounds = EnumBounds { max_int_digits: 2, max_frac_depth: 1, max_abs: None };
        let ball = tree_ball(&ideal, 2, &bounds).unwrap();
        ball.validate().unwrap();
        assert_eq!(ball.reps.len(), 2);
        assert_eq!(ball.vertices.len(), 10); // 1 + 3 + 6
        for i in 0..ball.vertices.len() {
            if ball.depths[i] < 2 {
                assert_eq!(ball.degree(i), 3, "vertex {i}");
            } else {
                assert_eq!(ball.degree(i), 1, "leaf {i}");
            }
        }
    }

    #[test]
    fn tree_ball_rejects_bad_mutation() {
        let ideal = zero_ideal(2);
        let bounds = EnumBounds { max_int_digits: 2, max_frac_depth: 1, max_abs: None };
        let mut ball = tree_ball(&ideal, 1, &bounds).unwrap();
        ball.validate().unwrap();
        // Duplicate coset: copy the root.
        ball.vertices.push(BSElement::identity(2));
        ball.depths.push(1);
        assert!(ball.validate().is_err());
    }

    #[test]
    fn h2_displacement_of_t_is_log_n() {
        for n in [2u32, 6, 12] {
            let t = BSElement::t_power(n, 1);
            let d = h2_displacement(&t);
            assert!((d - (n as f64).ln()).abs() < 1e-12, "n = {n}: {d}");
            // And through the two-point formula.
            let moved = h2_apply(&t, (0.0, 1.0));
            let d2 = h2_distance((0.0, 1.0), moved);
            assert!((d2 - d).abs() < 1e-12);
        }
    }

    #[test]
    fn h2_identity_fixes_everything() {
        let e = BSElement::identity(6);
        assert_eq!(h2_displacement(&e), 0.0);
        let z = (0.3, 2.0);
        assert_eq!(h2_apply(&e, z), z);
    }

    #[test]
    fn abelianization_kills_the_relation() {
        // t a t^-1 = a^n, so a and its conjugate differ as elements but both
        // must map to the class of 1 (n ≡ 1 mod n-1).
        let base = 6;
        let a = BSElement::h_element(num("1", base));
        let conj = BSElement::t_power(base, 1)
            .mul(&a)
            .unwrap()
            .mul(&BSElement::t_power(base, -1))
            .unwrap();
        assert_ne!(a, conj);
        assert_eq!(abelianize(&a), abelianize(&conj));
        assert_eq!(abelianize(&a), (0, 1));
        assert_eq!(abelianize(&BSElement::t_power(base, 5)), (5, 0));
        assert_eq!(abelianize(&BSElement::h_element(num("-0.2", base))), (0, 3));
        // n = 2: torsion part is trivial.
        assert_eq!(abelianize(&elem("1.1", 4, 2)), (4, 0));
    }

    proptest! {
        #[test]
        fn inverse_and_product_consistent(
            p1 in -500i128..500, e1 in 0u32..3, k1 in -3i64..4,
            p2 in -500i128..500, e2 in 0u32..3, k2 in -3i64..4,
        ) {
            let base = 6u32;
            let g = BSElement::new(
                NAryNumber::from_fraction(p1, (base as u128).pow(e1), base).unwrap(), k1);
            let h = BSElement::new(
                NAryNumber::from_fraction(p2, (base as u128).pow(e2), base).unwrap(), k2);
            let prod = g.mul(&h).unwrap();
            let undone = prod.mul(&h.inverse()).unwrap();
            prop_assert_eq!(undone, g.clone());
            prop_assert!(g.mul(&g.inverse()).unwrap().is_identity());
        }

        #[test]
        fn greedy_form_always_evaluates_back(
            seed in proptest::collection::vec(0u8..5, 0..12),
        ) {
            let base = 6;
            let word: Vec<Letter> = seed.iter().map(|&b| match b {
                0 => Letter::T,
                1 => Letter::TInv,
                2 => Letter::Elem(num("1", base)),
                3 => Letter::Elem(num("-0.1", base)),
                _ => Letter::Elem(num("4.3", base)),
            }).collect();
            let nf = normal_form_of_word(base, &word).unwrap();
            prop_assert_eq!(nf.element(), evaluate_word(base, &word).unwrap());
            prop_assert!(nf.r + nf.s + u64::from(!nf.x.is_zero()) <= word.len() as u64);
            let reduced = nf.clone().reduce();
            prop_assert_eq!(reduced.element(), nf.element());
        }
    }
}
