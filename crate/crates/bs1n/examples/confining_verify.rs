//! Empirically verifying the confining axioms.
//!
//! A subset Q of Z[1/n] is confining under a shift map when (a) it is
//! closed under the shift, (b) every element eventually lands in it under
//! iterated shifts, and (c) sums of pairs land after a uniform number k0
//! of shifts. These finite checks run over an enumerated window; the
//! report carries the counterexamples and witnesses.
//!
//! ```bash
//! cargo run --example confining_verify
//! ```

use bs1n::confining::{verify_confining, ConfiningSet};
use bs1n::nadic::FullIdeal;
use bs1n::{EnumBounds, Flavor, Result, VerifyLimits};

fn report_line(name: &str, set: &ConfiningSet, flavor: Flavor, limits: &VerifyLimits) -> Result<()> {
    let report = verify_confining(set, flavor, limits)?;
    println!(
        "{name:<26} sample {:>5}   axiom (a) {}   (b) {}/{}   k0 = {:?}   {}",
        report.sample_size,
        report.axiom_a,
        report.axiom_b.iter().filter(|(_, e)| e.is_some()).count(),
        report.axiom_b.len(),
        report.axiom_c_k0,
        if report.passed() { "PASS" } else { "FAIL" },
    );
    if let Some(w) = &report.strict_witness {
        println!("{:26} strictness witness: {w} leaves the set one shift back", "");
    }
    if let Some(cx) = &report.axiom_a_counterexample {
        println!("{:26} axiom (a) counterexample: {cx} maps outside the set", "");
    }
    Ok(())
}

fn main() -> Result<()> {
    let limits = VerifyLimits {
        bounds: EnumBounds { max_int_digits: 2, max_frac_depth: 3, max_abs: None },
        exponent_cap: 16,
    };

    println!("base n = 6, shift alpha(x) = 6x, inverse shift alpha^-1:\n");
    // Q^- (bounded negative tails) confines under the inverse shift...
    report_line("Q^- under alpha^-1", &ConfiningSet::QMinus { base: 6 }, Flavor::Inverse, &limits)?;
    // ... and S(a) (tails inside the ideal a) confines under alpha itself,
    // for every full ideal a of Z_6.
    for ideal in FullIdeal::all(6)? {
        let name = format!("S({ideal}) under alpha");
        report_line(&name, &ConfiningSet::SOfIdeal(ideal.to_spec()), Flavor::Forward, &limits)?;
    }
    println!();

    // A set that is NOT confining under the forward shift: Q^- itself.
    // Axiom (a) fails because alpha pushes fractions up into integers
    // that Q^- does not contain.
    report_line("Q^- under alpha (fails)", &ConfiningSet::QMinus { base: 6 }, Flavor::Forward, &limits)?;
    Ok(())
}
