//! Recovering the ideal a confining set converges to.
//!
//! Each alpha-confining subset of Z[1/n] determines a full ideal of Z_n —
//! the one whose tree action the subset generates. The map reads the
//! fractional tails of the set at two consecutive depths and classifies
//! each prime divisor by the stability of its minimal valuation. This
//! example round-trips every full ideal through S(a), shows Q^+ landing on
//! the zero ideal, and demonstrates that junk orbits added to a set do not
//! change its ideal.
//!
//! ```bash
//! cargo run --example ideal_of_confining
//! ```

use bs1n::confining::{compute_ideal_of, ConfiningSet};
use bs1n::nadic::FullIdeal;
use bs1n::{NAryNumber, Result};

fn main() -> Result<()> {
    for n in [2u32, 6, 12] {
        println!("== base n = {n} ==");
        for ideal in FullIdeal::all(n)? {
            let s = ConfiningSet::SOfIdeal(ideal.to_spec());
            let recovered = compute_ideal_of(&s, 4)?;
            println!("   S({ideal:<18}) |-> {recovered}");
            assert_eq!(recovered, ideal);
        }
        // Q^+ = the integer points of Z[1/n]; its tails are all zero, so
        // the associated ideal is the zero ideal.
        let from_qplus = compute_ideal_of(&ConfiningSet::QPlus { base: n }, 4)?;
        println!("   Q^+{:<18} |-> {from_qplus}", "");
        assert!(from_qplus.is_zero_ideal());
        println!();
    }

    // Stability under junk: enlarging S(a) by the forward orbit of a few
    // stray elements leaves the recovered ideal unchanged, because orbits
    // of single elements die out at increasing depth.
    let ideal = FullIdeal::new(6, [1].into_iter().collect())?;
    let base_set = ConfiningSet::SOfIdeal(ideal.to_spec());
    let junk = vec![NAryNumber::parse("0.1", 6)?, NAryNumber::parse("1.03", 6)?];
    let enlarged = ConfiningSet::Closure { base_set: Box::new(base_set), extra: junk, k: 0 };
    let recovered = compute_ideal_of(&enlarged, 4)?;
    println!("S({ideal}) + junk orbits |-> {recovered}  (junk is invisible in the limit)");
    assert_eq!(recovered, ideal);
    Ok(())
}
