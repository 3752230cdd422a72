//! The lamplighter-style chain inside Z ≀ Z.
//!
//! The sets Q^(i) ⊂ Z[x, x^-1] — the smallest sets containing 0 and ±x^d
//! for d ≥ 0 and closed under (p, q) ↦ x^i (p + q) — give an infinite chain
//! of inequivalent confining subsets for Z ≀ Z = Z[x, x^-1] ⋊ Z, hence an
//! unbounded chain of hyperbolic actions. This example builds finite
//! truncations of Q^(i), checks the structural facts that drive the
//! argument, follows the doubling witness 2^m x^(m i), computes the
//! separation bound telling the Q^(i)-metrics apart, and certifies a word
//! length by breadth-first search.
//!
//! ```bash
//! cargo run --example wreath_chain
//! ```

use bs1n::wreath::{
    doubling_sequence, generate_qi, separation_bound, wreath_word_length, LaurentPoly,
    WreathElement,
};
use bs1n::{QiBounds, Result};

fn main() -> Result<()> {
    // Truncations of Q^(2): level 0 is {0, ±x^d}, each level applies the
    // recursion once more inside a finite window. The monomial window
    // (max_terms = 1) isolates the doubling direction the argument rides;
    // wider windows admit mixed-support elements whose fresh degree can lag
    // behind r·i.
    let bounds = QiBounds { max_degree: 8, max_abs_coeff: 16, max_terms: 1 };
    let q2 = generate_qi(2, 4, &bounds)?;
    println!("Q^(2) truncation, window (deg ≤ {}, |coeff| ≤ {}, ≤ {} term):",
        bounds.max_degree, bounds.max_abs_coeff, bounds.max_terms);
    for (m, level) in q2.levels().iter().enumerate() {
        println!("   level {m}: {:4} elements, {:2} fresh", level.len(), q2.fresh(m).len());
    }

    // The structural facts: supports in degrees ≥ 0, fresh elements pushed
    // out to degree ≥ r·i, coefficients capped by 2^r (and the cap is
    // attained), the per-degree bound |c_k| ≤ 2^(k div i), and 1 never
    // arising as an image.
    let facts = q2.facts();
    println!("\nstructural facts for Q^(2):");
    println!("   supports nonnegative:   {}", facts.supports_nonnegative);
    println!("   fresh min degree ≥ r·i: {}", facts.fresh_min_degree_ok);
    println!("   coeff cap 2^r holds:    {}", facts.coeff_cap_ok);
    println!("   coeff cap attained:     {}", facts.coeff_cap_attained_ok);
    println!("   per-degree cap holds:   {}", facts.per_degree_ok);
    println!("   1 forced to level 0:    {}", facts.one_not_in_image);
    assert!(facts.passed());

    // The doubling witness: p_m = 2^m x^(m·i) appears exactly at level m —
    // the element the separation argument rides.
    println!("\ndoubling sequence in Q^(3):");
    for (m, p) in doubling_sequence(3, 4).iter().enumerate() {
        println!("   p_{m} = {p}");
        assert_eq!(*p, LaurentPoly::monomial(1 << m, (m as i64) * 3));
    }

    // Separating the metrics: expressing the Q^(1) doubling element p_r
    // over the Q^(2) alphabet costs at least min_k (2k + 2^ceil((r - k)/2))
    // letters, which grows without bound in r. So no quasi-isometry
    // identifies the two actions.
    println!("\nseparation bound for Q^(1) vs Q^(2) on p_r:");
    for r in [4, 8, 12, 20] {
        let sep = separation_bound(1, 2, r)?;
        println!(
            "   r = {r:2}: scan min {:3} at k = {:2}   (analytic: f({:.2}) = {:.2})",
            sep.scan_min, sep.scan_argmin, sep.k_star.max(0.0), sep.f_min
        );
        assert!((sep.f_min - sep.scan_min as f64).abs() <= 2.0);
    }

    // Certified search: word length of (2x + 2x^2, 0) over level-2 letters
    // of Q^(1) plus the stable letter. The mass bound prunes the search.
    let window = QiBounds { max_degree: 6, max_abs_coeff: 8, max_terms: 2 };
    let letters: Vec<LaurentPoly> =
        generate_qi(1, 3, &window)?.all().iter().filter(|q| !q.is_zero()).cloned().collect();
    let target = WreathElement { p: LaurentPoly::from_terms(&[(1, 2), (2, 2)]), m: 0 };
    let len = wreath_word_length(&target, &letters, 8)?;
    println!("\n|({}, {})| over {} Q^(1) letters: {:?}", target.p, target.m, letters.len(), len);
    let len = len.expect("within radius");
    assert_eq!(
        wreath_word_length(&target, &letters, len - 1)?,
        None,
        "no shorter word exists"
    );

    // Lengths over the Q^(1) alphabet only grow with the doubling level,
    // and never dip below the separation scan bound.
    println!("\nBFS length of p_r over Q^(2) letters vs the scan bound:");
    let q2_letters: Vec<LaurentPoly> =
        generate_qi(2, 3, &QiBounds { max_degree: 6, max_abs_coeff: 8, max_terms: 2 })?
            .all().iter().filter(|q| !q.is_zero()).cloned().collect();
    let mut last = 0u64;
    for r in 1..=3u32 {
        let p_r = LaurentPoly::monomial(1 << r, r as i64);
        let found = wreath_word_length(&WreathElement { p: p_r, m: 0 }, &q2_letters, 6)?;
        let sep = separation_bound(1, 2, r)?;
        println!("   r = {r}: length {found:?}, scan bound {}", sep.scan_min);
        if let Some(len) = found {
            assert!(len >= sep.scan_min.min(6));
            assert!(len >= last);
            last = len;
        }
    }
    Ok(())
}
