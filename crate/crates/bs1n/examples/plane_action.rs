//! The action of BS(1, n) on the hyperbolic plane.
//!
//! Sending (h, k) to z ↦ n^k z + h gives an affine action on the upper half
//! plane — the "plane" structure at the top of the poset. This example
//! measures displacements, shows the orbit of i is coarsely dense in the
//! strip and that small displacement forces a small t-exponent (the action
//! is cobounded and the stabilizer directions are controlled), and computes
//! images in the abelianization Z × Z/(n-1).
//!
//! ```bash
//! cargo run --example plane_action
//! ```

use bs1n::bsgroup::{abelianize, h2_apply, h2_displacement, h2_distance};
use bs1n::{BSElement, NAryNumber, Result};

fn main() -> Result<()> {
    let n = 6u32;
    let log_n = (n as f64).ln();

    // The stable letter t translates along the imaginary axis by log n.
    let t = BSElement::t_power(n, 1);
    println!("displacement of t:      {:.9}  (log {n} = {log_n:.9})", h2_displacement(&t));
    assert!((h2_displacement(&t) - log_n).abs() < 1e-12);

    // Horocyclic elements displace i by a bounded hyperbolic amount even
    // when their translation length along the boundary is large…
    for text in ["1", "100", "-0.01"] {
        let g = BSElement::new(NAryNumber::parse(text, n)?, 0);
        println!("displacement of ({text}, 0): {:.6}", h2_displacement(&g));
    }
    // …because z ↦ z + h moves i along a horocycle, not a geodesic.

    // Where points go: g = (1.3, 1) sends z to 6z + (1 + 3/6).
    let g = BSElement::new(NAryNumber::parse("1.3", n)?, 1);
    let z = (0.25, 1.0);
    let gz = h2_apply(&g, z);
    println!("\ng = {g} sends {z:?} to {gz:?}");
    println!("d(i, g·i) = {:.6} = displacement {:.6}",
        h2_distance((0.0, 1.0), h2_apply(&g, (0.0, 1.0))), h2_displacement(&g));

    // Coboundedness in the fundamental strip 1 ≤ y < n: every point is
    // within log n + 1 of the orbit of i.
    let mut orbit = Vec::new();
    for num in -200i128..=200 {
        for k in 0..=1i64 {
            let h = NAryNumber::from_fraction(num, 36, n)?;
            orbit.push(h2_apply(&BSElement::new(h, k), (0.0, 1.0)));
        }
    }
    let mut worst = 0.0f64;
    for ix in -20..20 {
        for iy in 0..10 {
            let p = (ix as f64 * 0.15, 1.0 + iy as f64 * 0.5);
            let best = orbit.iter().map(|&q| h2_distance(p, q)).fold(f64::INFINITY, f64::min);
            worst = worst.max(best);
        }
    }
    println!("\nstrip points are within {worst:.4} of the orbit of i (bound: log n + 1 = {:.4})",
        log_n + 1.0);
    assert!(worst <= log_n + 1.0);

    // Conversely, displacement controls |k|: moving i by at most
    // 2 log n + 3 forces |k| ≤ 6.
    let budget = 2.0 * log_n + 3.0;
    for k in -10i64..=10 {
        let g = BSElement::new(NAryNumber::zero(n), k);
        if h2_displacement(&g) <= budget {
            assert!(k.abs() <= 6);
        }
    }
    println!("displacement ≤ 2 log n + 3 forces |k| ≤ 6 on pure powers of t");

    // The abelianization Z × Z/(n-1) reads off the t-exponent and the digit
    // sum; it is what survives of the group in any abelian quotient.
    println!("\nabelianization images (t-exponent, digit class mod {}):", n - 1);
    for (text, k) in [("0", 3i64), ("1.3", 1), ("-25", 0), ("0.000043", -2)] {
        let g = BSElement::new(NAryNumber::parse(text, n)?, k);
        let (tk, cls) = abelianize(&g);
        println!("   {g}  ->  ({tk}, {cls})");
    }
    // Commutators die there: [t, a] has image (0, 0).
    let a = BSElement::new(NAryNumber::parse("1", n)?, 0);
    let t = BSElement::t_power(n, 1);
    let comm = t.mul(&a)?.mul(&t.inverse())?.mul(&a.inverse())?;
    println!("   [t, a] = {comm}  ->  {:?}", abelianize(&comm));
    assert_eq!(abelianize(&comm), (0, 0));
    Ok(())
}
