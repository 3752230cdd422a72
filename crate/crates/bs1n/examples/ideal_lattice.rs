//! The lattice of ideals of Z_n, up to the shift equivalence that matters
//! for group actions.
//!
//! An ideal of Z_n is a CRT vector of prime-power components, each either a
//! finite power p^a or the zero ideal. Under the equivalence generated by
//! multiplication by n (the "shift"), only the zero positions survive:
//! every ideal normalizes to a full one, and 2^k classes remain when n has
//! k prime divisors. This example decides membership at finite depth,
//! compares ideals with explicit shift witnesses, and normalizes.
//!
//! ```bash
//! cargo run --example ideal_lattice
//! ```

use bs1n::nadic::{IdealComponent, IdealSpec, NAdic};
use bs1n::Result;

fn main() -> Result<()> {
    // The ideal 2^3 x {0} of Z_12 = Z_4 x Z_3.
    let spec = IdealSpec::new(12, vec![IdealComponent::Exp(3), IdealComponent::Zero])?;
    println!("ideal a = {spec}");

    // Membership of truncations: some verdicts are final, some need depth,
    // and zero components can never be settled by finitely many digits.
    for residue in [0u128, 8, 96, 1728] {
        let x = NAdic::new(12, 5, residue)?;
        println!("   {residue:>6} = {x} : {:?}", spec.contains(&x)?);
    }
    println!();

    // Comparison is "multiply by n^k until contained", and the witness k
    // is reported. a <= b but not conversely here:
    let whole = IdealSpec::new(12, vec![IdealComponent::Exp(0), IdealComponent::Exp(0)])?;
    let zeroish = IdealSpec::new(12, vec![IdealComponent::Zero, IdealComponent::Zero])?;
    println!("a <= whole ring?  witness {:?}", spec.leq_with_witness(&whole)?);
    println!("whole <= a?       witness {:?}", whole.leq_with_witness(&spec)?);
    println!("zero  <= a?       witness {:?}", zeroish.leq_with_witness(&spec)?);
    println!("a <= zero ideal?  {:?}", spec.leq_with_witness(&zeroish)?);
    println!();

    // Normalization: the finite exponents shift away, the zero set stays.
    let (full, witness) = spec.full_normalize();
    println!("a normalizes to {full} with shift witness k = {witness}");
    println!("equivalent to its normalization? {}", spec.equivalent(&full.to_spec())?);

    // The four classes of Z_12, by zero set.
    println!("\nall full ideals of Z_12:");
    for ideal in bs1n::FullIdeal::all(12)? {
        println!(
            "   {ideal}  (zero set {:?}, bitmask {}, tail modulus at depth 3: {})",
            ideal.zero_set(),
            ideal.bitmask(),
            ideal.tail_modulus(3)?
        );
    }
    Ok(())
}
