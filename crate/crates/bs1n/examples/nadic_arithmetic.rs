//! Truncated n-adic integers: digits, carries, and the CRT splitting.
//!
//! Z_n (the "n-adic integers") only sees an integer through its residues
//! mod n, n^2, n^3, ...; this example adds and multiplies truncations,
//! shows the carry sequences the digit recursions produce, splits an
//! element into its prime-power coordinates and reassembles it, and
//! measures how close two elements are in the n-adic metric.
//!
//! ```bash
//! cargo run --example nadic_arithmetic
//! ```

use bs1n::nadic::NAdic;
use bs1n::Result;

fn main() -> Result<()> {
    // Base-10 carries look exactly like school arithmetic.
    let a = NAdic::new(10, 6, 481_094)?;
    let b = NAdic::new(10, 6, 97_316)?;
    let (sum, carries) = a.carry_add(&b)?;
    println!("a       = {a}");
    println!("b       = {b}");
    println!("a + b   = {sum}");
    println!("carries = {carries:?}   (digit i of the sum absorbs carry i)");
    let (prod, carries) = a.carry_mul(&b)?;
    println!("a * b   = {prod}");
    println!("carries = {carries:?}\n");

    // A 6-adic integer splits into a 2-adic and a 3-adic coordinate.
    let x = NAdic::new(6, 5, 3_141)?;
    let parts = x.crt_split()?;
    println!("x = {x} in Z_6");
    for part in &parts {
        println!("   component: {part}");
    }
    let back = NAdic::crt_join(6, x.depth(), &parts)?;
    println!("   joined back: {back}  (residue {})\n", back.residue());
    assert_eq!(back.residue(), x.residue());

    // Units are exactly the elements whose first digit is coprime to n.
    for r in [0u128, 2, 3, 5, 35] {
        let y = NAdic::new(6, 4, r)?;
        println!("{y}: unit? {}", y.is_unit());
    }
    println!();

    // The n-adic metric: more shared low digits = closer.
    let u = NAdic::new(2, 10, 0b1101_0110)?;
    let v = NAdic::new(2, 10, 0b1100_0110)?;
    println!("u = {u}");
    println!("v = {v}");
    println!("distance(u, v) = {:?}", u.distance(&v)?);
    println!();

    // A prime-power base re-expands into prime digits and back, losslessly.
    let w = NAdic::new(8, 3, 0o715)?;
    let bits = w.expand()?;
    println!("w = {w} in Z_8");
    println!("   as a 2-adic truncation: {bits}");
    println!("   contracted back to base 8: {}", bits.contract(8)?);
    Ok(())
}
