//! Acceptance gate: eleven end-to-end checks with pinned expectations and
//! per-criterion time limits. Runs without the libtest harness so that it
//! prints exactly one PASS/FAIL line per criterion; the process exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bs1n::bsgroup::{
    coset_reps_mod_alpha, h2_displacement, h2_distance, sparse_s_generators, tree_ball,
    word_length_bfs, word_length_exact, BSElement, BfsParams,
};
use bs1n::confining::{compute_ideal_of, verify_confining, ConfiningSet, Flavor, VerifyLimits};
use bs1n::nadic::{FullIdeal, IdealComponent, IdealSpec, NAdic, Verdict};
use bs1n::poset::{compare_structures, Comparison, HypPoset, HypStructure};
use bs1n::wreath::{
    doubling_sequence, generate_qi, separation_bound, wreath_word_length, LaurentPoly, QiBounds,
    WreathElement,
};
use bs1n::{EnumBounds, NAryNumber};

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !($cond) {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn zero_ideal(n: u32) -> FullIdeal {
    let k = FullIdeal::new(n, BTreeSet::new()).unwrap().factorization().len();
    FullIdeal::new(n, (1..=k).collect()).unwrap()
}

// ---------------------------------------------------------------------------
// 1. Poset sizes: 2^k + 2 structures when n has k distinct prime divisors.
// ---------------------------------------------------------------------------
fn criterion_01() -> Result<String, String> {
    for (n, want) in [(2u32, 4usize), (3, 4), (5, 4), (7, 4), (12, 6), (30, 10)] {
        let poset = HypPoset::build(n).map_err(err)?;
        check!(
            poset.len() == want,
            "n = {n}: got {} structures, want {want}",
            poset.len()
        );
    }
    Ok("counts 4, 4, 4, 4, 6, 10 for n = 2, 3, 5, 7, 12, 30".into())
}

// ---------------------------------------------------------------------------
// 2. Shape of the n = 12 poset: the plane is incomparable to all three
//    trees, the tree with full zero set is the unique maximal tree, and the
//    lineal structure sits below every quasi-parabolic structure.
// ---------------------------------------------------------------------------
fn criterion_02() -> Result<String, String> {
    let t = |zs: &[usize]| -> HypStructure {
        HypStructure::TreeStruct(FullIdeal::new(12, zs.iter().copied().collect()).unwrap())
    };
    let trees = [t(&[1]), t(&[2]), t(&[1, 2])];
    let plane = HypStructure::Plane;
    for tree in &trees {
        check!(
            compare_structures(&plane, tree) == Comparison::Incomparable
                && compare_structures(tree, &plane) == Comparison::Incomparable,
            "plane should be incomparable to {}",
            tree.dot_id()
        );
    }
    check!(
        compare_structures(&trees[0], &trees[2]) == Comparison::LessThan
            && compare_structures(&trees[1], &trees[2]) == Comparison::LessThan
            && compare_structures(&trees[0], &trees[1]) == Comparison::Incomparable,
        "tree_3 must dominate exactly tree_1 and tree_2"
    );
    for qp in trees.iter().chain(std::iter::once(&plane)) {
        check!(
            compare_structures(&HypStructure::Lineal, qp) == Comparison::LessThan,
            "lineal should sit below {}",
            qp.dot_id()
        );
    }
    let poset = HypPoset::build(12).map_err(err)?;
    let maximal: Vec<String> = poset.maximal_elements().iter().map(|e| e.dot_id()).collect();
    check!(
        maximal == ["plane", "tree_3"],
        "maximal elements {maximal:?}, want [plane, tree_3]"
    );
    Ok("n = 12 Hasse shape: plane incomparable to trees, tree_3 top tree, lineal below all".into())
}

// ---------------------------------------------------------------------------
// 3. Digit-level carry recursions agree with modular arithmetic on 10^4
//    random pairs per base, for bases 2, 6, 8, 10, 12, 36 and depths 1..=8,
//    for both addition and multiplication.
// ---------------------------------------------------------------------------
fn criterion_03() -> Result<String, String> {
    let mut checked = 0u64;
    for base in [2u32, 6, 8, 10, 12, 36] {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE + base as u64);
        for _ in 0..10_000 {
            let depth = rng.gen_range(1u32..=8);
            let m = (base as u128).pow(depth);
            let (a, b) = (rng.gen_range(0..m), rng.gen_range(0..m));
            let x = NAdic::new(base, depth, a).map_err(err)?;
            let y = NAdic::new(base, depth, b).map_err(err)?;
            let (sum, _) = x.carry_add(&y).map_err(err)?;
            check!(
                sum.residue() == (a + b) % m,
                "base {base} depth {depth}: carry_add({a}, {b}) = {}, want {}",
                sum.residue(),
                (a + b) % m
            );
            let (prod, _) = x.carry_mul(&y).map_err(err)?;
            check!(
                prod.residue() == (a * b) % m,
                "base {base} depth {depth}: carry_mul({a}, {b}) = {}, want {}",
                prod.residue(),
                (a * b) % m
            );
            checked += 2;
        }
    }
    Ok(format!("{checked} carry results equal modular arithmetic over 6 bases"))
}

// ---------------------------------------------------------------------------
// 4. Membership criteria in Z_8 = Z_2: x lies in 2 Z_8 iff its first digit
//    is even, and in 2^13 Z_8 iff the depth-5 partial sum vanishes mod
//    2^13 — both checked against the brute-force residue oracle on Z/2^15.
// ---------------------------------------------------------------------------
fn criterion_04() -> Result<String, String> {
    let spec1 = IdealSpec::new(8, vec![IdealComponent::Exp(1)]).map_err(err)?;
    let spec13 = IdealSpec::new(8, vec![IdealComponent::Exp(13)]).map_err(err)?;
    for r in 0u128..(1 << 15) {
        let x = NAdic::new(8, 5, r).map_err(err)?;
        let in2 = r % 2 == 0;
        let in13 = r % (1 << 13) == 0;
        check!(
            (x.digit(0) % 2 == 0) == in2,
            "digit criterion failed at residue {r}"
        );
        check!(
            (x.partial_sum(5).map_err(err)? % (1 << 13) == 0) == in13,
            "partial-sum criterion failed at residue {r}"
        );
        let v1 = spec1.contains(&x).map_err(err)?;
        check!(
            v1 == if in2 { Verdict::In } else { Verdict::Out },
            "2 Z_8 verdict at residue {r}: {v1:?}, oracle says {in2}"
        );
        let v13 = spec13.contains(&x).map_err(err)?;
        check!(
            v13 == if in13 { Verdict::In } else { Verdict::Out },
            "2^13 Z_8 verdict at residue {r}: {v13:?}, oracle says {in13}"
        );
    }
    Ok("all 32768 residues of Z/2^15 match the digit and partial-sum criteria".into())
}

// ---------------------------------------------------------------------------
// 5. full_normalize lands in the same ~-class: for every spec with
//    exponents <= 6 over n in {6, 8, 12}, the normalization is equivalent
//    to the input (leq both ways), the reported witness is the largest
//    finite exponent, and normalizing again is the identity.
// ---------------------------------------------------------------------------
fn criterion_05() -> Result<String, String> {
    let mut specs = 0u32;
    for n in [6u32, 8, 12] {
        let k = zero_ideal(n).factorization().len();
        // Slot values 0..=6 mean Exp(v); slot value 7 means Zero.
        for code in 0..8u32.pow(k as u32) {
            let mut components = Vec::with_capacity(k);
            let mut rest = code;
            for _ in 0..k {
                let v = rest % 8;
                rest /= 8;
                components.push(if v == 7 {
                    IdealComponent::Zero
                } else {
                    IdealComponent::Exp(v)
                });
            }
            let expected_witness = components
                .iter()
                .filter_map(|c| match c {
                    IdealComponent::Exp(e) => Some(*e),
                    IdealComponent::Zero => None,
                })
                .max()
                .unwrap_or(0);
            let spec = IdealSpec::new(n, components).map_err(err)?;
            let (full, witness) = spec.full_normalize();
            check!(
                witness == expected_witness,
                "{spec}: witness {witness}, want the max exponent {expected_witness}"
            );
            let full_spec = full.to_spec();
            check!(
                spec.leq_with_witness(&full_spec).map_err(err)?.is_some(),
                "{spec} should sit below its normalization {full}"
            );
            check!(
                full_spec.leq_with_witness(&spec).map_err(err)?.is_some(),
                "normalization {full} should sit below {spec}"
            );
            check!(
                spec.equivalent(&full_spec).map_err(err)?,
                "{spec} not equivalent to its normalization {full}"
            );
            let (again, _) = full_spec.full_normalize();
            check!(again == full, "normalization of {full} is not idempotent");
            specs += 1;
        }
    }
    Ok(format!("{specs} specs normalize into their own ~-class with witness = max exponent"))
}

// ---------------------------------------------------------------------------
// 6. Confining axioms: Q^- is confining under alpha^{-1} with uniform
//    k0 = 1 and the strictness witness 0.1, and S(a) is confining under
//    alpha with k0 = 0 for every full ideal, at enumeration depth 4.
// ---------------------------------------------------------------------------
fn criterion_06() -> Result<String, String> {
    let limits_for = |n: u32| VerifyLimits {
        bounds: EnumBounds {
            max_int_digits: if n >= 12 { 1 } else { 2 },
            max_frac_depth: 4,
            max_abs: None,
        },
        exponent_cap: 16,
    };
    let mut verified = 0u32;
    for n in [2u32, 6, 12] {
        let report = verify_confining(
            &ConfiningSet::QMinus { base: n },
            Flavor::Inverse,
            &limits_for(n),
        )
        .map_err(err)?;
        check!(report.passed(), "Q^- under alpha^{{-1}} failed for n = {n}");
        check!(
            report.axiom_c_k0 == Some(1),
            "Q^- for n = {n}: k0 = {:?}, want Some(1)",
            report.axiom_c_k0
        );
        let witness = report.strict_witness.as_ref().map(|w| w.to_string());
        check!(
            witness.as_deref() == Some("0.1"),
            "Q^- for n = {n}: strictness witness {witness:?}, want 0.1"
        );
        verified += 1;
        for ideal in FullIdeal::all(n).map_err(err)? {
            let report = verify_confining(
                &ConfiningSet::SOfIdeal(ideal.to_spec()),
                Flavor::Forward,
                &limits_for(n),
            )
            .map_err(err)?;
            check!(report.passed(), "S({ideal}) under alpha failed for n = {n}");
            check!(
                report.axiom_c_k0 == Some(0),
                "S({ideal}) for n = {n}: k0 = {:?}, want Some(0)",
                report.axiom_c_k0
            );
            verified += 1;
        }
    }
    Ok(format!("{verified} confining reports passed with the pinned k0 values"))
}

// ---------------------------------------------------------------------------
// 7. The ideal-recovery map inverts S: compute_ideal_of(S(a)) = a for every
//    full ideal over n in {2, 6, 8, 12} at depth 4, and Q^+ recovers the
//    zero ideal.
// ---------------------------------------------------------------------------
fn criterion_07() -> Result<String, String> {
    let mut roundtrips = 0u32;
    for n in [2u32, 6, 8, 12] {
        for ideal in FullIdeal::all(n).map_err(err)? {
            let recovered =
                compute_ideal_of(&ConfiningSet::SOfIdeal(ideal.to_spec()), 4).map_err(err)?;
            check!(
                recovered == ideal,
                "n = {n}: S({ideal}) recovered as {recovered}"
            );
            roundtrips += 1;
        }
        let from_qplus = compute_ideal_of(&ConfiningSet::QPlus { base: n }, 4).map_err(err)?;
        check!(
            from_qplus.is_zero_ideal(),
            "n = {n}: Q^+ recovered as {from_qplus}, want the zero ideal"
        );
        roundtrips += 1;
    }
    Ok(format!("{roundtrips} recoveries (all full ideals plus Q^+) are exact"))
}

// ---------------------------------------------------------------------------
// 8. The closed-form word length equals breadth-first search over a sparse
//    generator window for every probe of length <= 7, over n in {2, 6, 12}
//    and every full ideal; and |(n^-K, 0)| = 2K + 1 in the zero-ideal
//    metric for K <= 5.
// ---------------------------------------------------------------------------
fn criterion_08() -> Result<String, String> {
    let probes = ["0", "1", "10", "11", "0.1", "1.1", "0.01", "0.001"];
    let mut agreed = 0u32;
    for n in [2u32, 6, 12] {
        for ideal in FullIdeal::all(n).map_err(err)? {
            let s = ConfiningSet::SOfIdeal(ideal.to_spec());
            for text in probes {
                for k in [-2i64, -1, 0, 1, 2] {
                    let g = BSElement::new(NAryNumber::parse(text, n).map_err(err)?, k);
                    let exact = word_length_exact(&g, &ideal).map_err(err)?;
                    if exact > 7 {
                        continue;
                    }
                    // The search is exact over any window that contains the
                    // geodesic letter alpha^r(h) for the least admissible r,
                    // so span exactly that letter (plus the units position).
                    let (mut lo, mut hi) = (0i64, 0i64);
                    if !g.h.is_zero() {
                        let mut r = (-g.k).max(0);
                        while !s.contains(&g.h.shift(r)).map_err(err)? {
                            r += 1;
                            check!(r <= 64, "no admissible shift for ({text}, {k})");
                        }
                        let letter = g.h.shift(r);
                        lo = letter.min_index().unwrap().min(0);
                        hi = letter.max_index().unwrap().max(0);
                    }
                    let gens = sparse_s_generators(&ideal, 2, lo, hi).map_err(err)?;
                    let params = BfsParams { radius: exact, max_abs: None };
                    let found = word_length_bfs(&g, &ideal, &gens, &params).map_err(err)?;
                    check!(
                        found == Some(exact),
                        "n = {n}, ideal {ideal}, g = ({text}, {k}): exact {exact}, bfs {found:?}"
                    );
                    agreed += 1;
                }
            }
        }
        let zero = zero_ideal(n);
        for k_exp in 1..=5u32 {
            let h = NAryNumber::from_fraction(1, (n as u128).pow(k_exp), n).map_err(err)?;
            let len = word_length_exact(&BSElement::new(h, 0), &zero).map_err(err)?;
            check!(
                len == 2 * k_exp as u64 + 1,
                "n = {n}: |(n^-{k_exp}, 0)| = {len}, want {}",
                2 * k_exp + 1
            );
        }
    }
    Ok(format!("bfs matched the closed form on {agreed} probes; |(n^-K, 0)| = 2K + 1 up to K = 5"))
}

// ---------------------------------------------------------------------------
// 9. Bass-Serre tree balls: for n = 2 and the zero ideal the radius-3 ball
//    is a trivalent tree with 22 vertices, and for n = 6 with zero set {1}
//    the interior degree is 1 plus the empirical index [S : alpha(S)].
// ---------------------------------------------------------------------------
fn criterion_09() -> Result<String, String> {
    let bounds = EnumBounds { max_int_digits: 2, max_frac_depth: 2, max_abs: None };
    let ball2 = tree_ball(&zero_ideal(2), 3, &bounds).map_err(err)?;
    ball2.validate().map_err(err)?;
    check!(
        ball2.vertices.len() == 22,
        "n = 2 radius-3 ball has {} vertices, want 22",
        ball2.vertices.len()
    );
    for (i, depth) in ball2.depths.iter().enumerate() {
        if *depth < 3 {
            check!(
                ball2.degree(i) == 3,
                "n = 2: interior vertex {i} has degree {}, want 3",
                ball2.degree(i)
            );
        }
    }
    let ideal6 = FullIdeal::new(6, [1].into_iter().collect()).map_err(err)?;
    let reps = coset_reps_mod_alpha(&ideal6, &bounds).map_err(err)?;
    let ball6 = tree_ball(&ideal6, 2, &bounds).map_err(err)?;
    ball6.validate().map_err(err)?;
    let want = 1 + reps.len();
    for (i, depth) in ball6.depths.iter().enumerate() {
        if *depth < 2 {
            check!(
                ball6.degree(i) == want,
                "n = 6: interior vertex {i} has degree {}, want 1 + [S:alpha(S)] = {want}",
                ball6.degree(i)
            );
        }
    }
    Ok(format!(
        "n = 2 ball: 22 vertices, trivalent interior; n = 6 interior degree {want}"
    ))
}

// ---------------------------------------------------------------------------
// 10. The plane action: t moves i by exactly log n; 200 seeded points of
//     the unit strip lie within log n + 1 of the orbit of i; and any
//     sampled element with displacement <= 2 log n + 3 has |k| <= 6.
// ---------------------------------------------------------------------------
fn criterion_10() -> Result<String, String> {
    for n in [2u32, 6, 12] {
        let log_n = (n as f64).ln();
        let t = BSElement::t_power(n, 1);
        check!(
            (h2_displacement(&t) - log_n).abs() < 1e-9,
            "n = {n}: displacement of t is {}, want log n = {log_n}",
            h2_displacement(&t)
        );
        let mut rng = ChaCha8Rng::seed_from_u64(0x10 + n as u64);
        let scale = (n as f64).powi(4);
        for _ in 0..200 {
            let z = (rng.gen_range(-3.0..3.0), rng.gen_range(1.0..n as f64));
            let mut best = f64::INFINITY;
            for k in 0..=1i32 {
                let h = (z.0 * scale).round() / scale;
                best = best.min(h2_distance(z, (h, (n as f64).powi(k))));
            }
            check!(
                best <= log_n + 1.0,
                "n = {n}: strip point {z:?} sits {best} from the orbit, over log n + 1"
            );
        }
        for _ in 0..200 {
            let k = rng.gen_range(-8i64..=8);
            let num = rng.gen_range(-200i128..=200);
            let h = NAryNumber::from_fraction(num, (n as u128).pow(2), n).map_err(err)?;
            let g = BSElement::new(h, k);
            if h2_displacement(&g) <= 2.0 * log_n + 3.0 {
                check!(
                    k.abs() <= 6,
                    "n = {n}: displacement {} at k = {k} breaks the k-bound",
                    h2_displacement(&g)
                );
            }
        }
    }
    Ok("displacement of t = log n (1e-9); strip coboundedness and the k-bound hold".into())
}

// ---------------------------------------------------------------------------
// 11. The Z wr Z chain: the structural facts hold for i in {1, 2, 3} at
//     five steps (levels 0..=2 re-derived by an independent recursion); the
//     doubling sequence is 1, 2x^i, 4x^2i, 8x^3i, each a single letter of
//     its level; BFS lengths of the Q^(1) chain in the Q^(2) alphabet are
//     nondecreasing and at least the discrete scan bound for r <= 4; and
//     the analytic bound f(k*) is within 2 of the scan minimum.
// ---------------------------------------------------------------------------
fn criterion_11() -> Result<String, String> {
    // (i) structural facts at five steps over a monomial window.
    for i in 1u32..=3 {
        let bounds =
            QiBounds { max_degree: 5 * i as i64, max_abs_coeff: 32, max_terms: 1 };
        let truncation = generate_qi(i, 5, &bounds).map_err(err)?;
        let report = truncation.facts();
        check!(report.passed(), "facts failed for i = {i}: {report:?}");
    }
    // Independent recursion for the first two refinement steps.
    for i in 1u32..=3 {
        let bounds = QiBounds { max_degree: 3 * i as i64, max_abs_coeff: 8, max_terms: 2 };
        let truncation = generate_qi(i, 2, &bounds).map_err(err)?;
        let fits = |p: &LaurentPoly| {
            p.num_terms() <= bounds.max_terms
                && p.max_abs_coeff() <= bounds.max_abs_coeff
                && p.max_degree().map_or(true, |d| d <= bounds.max_degree)
                && p.min_degree().map_or(true, |d| d >= -bounds.max_degree)
        };
        let mut oracle: BTreeSet<LaurentPoly> = [LaurentPoly::zero()].into();
        for d in 0..=bounds.max_degree {
            oracle.insert(LaurentPoly::monomial(1, d));
            oracle.insert(LaurentPoly::monomial(-1, d));
        }
        check!(
            &oracle == truncation.level(0),
            "i = {i}: level 0 disagrees with the oracle"
        );
        for m in 1..=2usize {
            let prev = oracle.clone();
            for p in &prev {
                for q in &prev {
                    let image = p.add(q).shift_degree(i as i64);
                    if fits(&image) {
                        oracle.insert(image);
                    }
                }
            }
            check!(
                &oracle == truncation.level(m),
                "i = {i}: level {m} disagrees with the oracle"
            );
        }
    }
    // (ii) the doubling sequence and its one-letter certificates.
    for i in 1u32..=3 {
        let seq = doubling_sequence(i, 3);
        let want: Vec<LaurentPoly> =
            (0i64..=3).map(|m| LaurentPoly::monomial(1 << m, m * i as i64)).collect();
        check!(seq == want, "doubling sequence for i = {i} is {seq:?}");
        let bounds = QiBounds { max_degree: 3 * i as i64, max_abs_coeff: 8, max_terms: 1 };
        let truncation = generate_qi(i, 3, &bounds).map_err(err)?;
        for (m, p) in seq.iter().enumerate() {
            check!(
                truncation.level(m).contains(p),
                "i = {i}: 2^{m} x^({m}{i}) is not a level-{m} letter"
            );
        }
    }
    // (iii) BFS lengths of the Q^(1) chain against the Q^(2) alphabet.
    let bounds = QiBounds { max_degree: 6, max_abs_coeff: 8, max_terms: 2 };
    let q2 = generate_qi(2, 3, &bounds).map_err(err)?;
    let gens: Vec<LaurentPoly> = q2.all().iter().filter(|p| !p.is_zero()).cloned().collect();
    let seq = doubling_sequence(1, 4);
    let mut lengths = Vec::new();
    for r in 1..=4usize {
        let target = WreathElement { p: seq[r].clone(), m: 0 };
        let found = wreath_word_length(&target, &gens, 8).map_err(err)?;
        let Some(len) = found else {
            return Err(format!("no Q^(2) word of length <= 8 for the level-{r} element"));
        };
        let scan = separation_bound(1, 2, r as u32).map_err(err)?.scan_min;
        check!(
            len >= scan,
            "r = {r}: BFS length {len} under the scan bound {scan}"
        );
        lengths.push(len);
    }
    check!(
        lengths.windows(2).all(|w| w[0] <= w[1]),
        "BFS lengths {lengths:?} are not nondecreasing"
    );
    // The analytic bound stays within 2 of the discrete scan.
    for (i, j, r) in [(1u32, 2u32, 4u32), (1, 2, 10), (1, 3, 9), (2, 3, 8)] {
        let b = separation_bound(i, j, r).map_err(err)?;
        check!(
            (b.f_min - b.scan_min as f64).abs() <= 2.0,
            "(i, j, r) = ({i}, {j}, {r}): f(k*) = {} vs scan {}",
            b.f_min,
            b.scan_min
        );
    }
    Ok(format!(
        "facts, oracle levels, one-letter doubling chain, BFS lengths {lengths:?} >= scan bounds"
    ))
}

// ---------------------------------------------------------------------------

fn main() {
    let criteria: Vec<(u32, &str, Duration, fn() -> Result<String, String>)> = vec![
        (1, "poset sizes 2^k + 2", Duration::from_secs(1), criterion_01),
        (2, "n = 12 poset shape", Duration::from_secs(1), criterion_02),
        (3, "carries match modular arithmetic", Duration::from_secs(10), criterion_03),
        (4, "membership criteria in Z_8", Duration::from_secs(5), criterion_04),
        (5, "full_normalize lands in the ~-class", Duration::from_secs(5), criterion_05),
        (6, "confining axioms with pinned k0", Duration::from_secs(30), criterion_06),
        (7, "ideal recovery inverts S", Duration::from_secs(30), criterion_07),
        (8, "closed-form length = BFS", Duration::from_secs(60), criterion_08),
        (9, "Bass-Serre tree balls", Duration::from_secs(10), criterion_09),
        (10, "plane action displacement", Duration::from_secs(5), criterion_10),
        (11, "Z wr Z chain and separation", Duration::from_secs(120), criterion_11),
    ];
    let mut failures = 0;
    for (id, name, limit, body) in criteria {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(body));
        let elapsed = started.elapsed();
        let stamp = format!("{:.2}s", elapsed.as_secs_f64());
        match outcome {
            Ok(Ok(detail)) if elapsed <= limit => {
                println!("criterion {id:02} ({name}): PASS in {stamp} — {detail}");
            }
            Ok(Ok(_)) => {
                failures += 1;
                println!(
                    "criterion {id:02} ({name}): FAIL — over the {}s time limit ({stamp})",
                    limit.as_secs()
                );
            }
            Ok(Err(msg)) => {
                failures += 1;
                println!("criterion {id:02} ({name}): FAIL in {stamp} — {msg}");
            }
            Err(_) => {
                failures += 1;
                println!("criterion {id:02} ({name}): FAIL in {stamp} — panicked");
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
