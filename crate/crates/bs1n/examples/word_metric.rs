//! Word metrics on BS(1, n) for the generating sets S(a) ∪ {t^±1}.
//!
//! Every group element factors as t^-r a^x t^s with x in S(a); the word
//! length has the closed form |k| for (0, k) and min 2r + k + 1 over the
//! admissible shifts r otherwise. This example multiplies group elements,
//! reads normal forms, evaluates the closed form, and certifies it against
//! a breadth-first search in defect space over a sparse generator window.
//!
//! ```bash
//! cargo run --example word_metric
//! ```

use bs1n::bsgroup::{
    normal_form, sparse_s_generators, word_length_bfs, word_length_exact, evaluate_word, Letter,
};
use bs1n::nadic::FullIdeal;
use bs1n::{BSElement, BfsParams, NAryNumber, Result};

fn main() -> Result<()> {
    let n = 2;
    // (h, k) acts on the line by x |-> 2^k x + h; the product twists h.
    let a = BSElement::new(NAryNumber::parse("1.1", n)?, 1);
    let b = BSElement::new(NAryNumber::parse("-0.01", n)?, -2);
    println!("a = {a}");
    println!("b = {b}");
    println!("a b = {}", a.mul(&b)?);
    println!("a^-1 = {}", a.inverse());
    assert!(a.mul(&a.inverse())?.is_identity());

    // Normal form t^-r a^x t^s: the automaton reads any word down to it.
    let g = BSElement::new(NAryNumber::parse("0.11", n)?, 1);
    let nf = normal_form(&g);
    println!("\ng = {g}");
    println!("normal form: t^-{} a^({}) t^{}", nf.r, nf.x, nf.s);
    assert_eq!(nf.element(), g);
    let word: Vec<Letter> = nf.letters();
    assert_eq!(evaluate_word(n, &word)?, g);
    println!("re-evaluating its {} letters returns g", word.len());

    // The closed-form word length, over two different ideals.
    let zero = FullIdeal::new(n, [1].into_iter().collect())?;
    let whole = FullIdeal::new(n, [].into_iter().collect())?;
    println!("\nword lengths of g:");
    println!("   over S(zero ideal):  {}", word_length_exact(&g, &zero)?);
    println!("   over S(whole ring):  {}", word_length_exact(&g, &whole)?);

    // Deep fractions are exponentially far in the tree metric but stay
    // close in the plane-flavored one: the poset incomparabilities in
    // microcosm.
    println!("\n|(2^-K, 0)| in the zero-ideal metric:");
    for k in 1..=5u32 {
        let h = NAryNumber::from_fraction(1, 1 << k, n)?;
        let g = BSElement::new(h, 0);
        println!("   K = {k}: {}", word_length_exact(&g, &zero)?);
    }

    // Certification: breadth-first search over an explicit window agrees.
    let g = BSElement::new(NAryNumber::parse("0.01", n)?, 1);
    let exact = word_length_exact(&g, &zero)?;
    let gens = sparse_s_generators(&zero, 2, -2, 3)?;
    let params = BfsParams { radius: exact, max_abs: None };
    let found = word_length_bfs(&g, &zero, &gens, &params)?;
    println!("\ncertifying |({}, {})| = {exact}: bfs over {} generators finds {found:?}", g.h, g.k, gens.len());
    assert_eq!(found, Some(exact));
    let none = word_length_bfs(&g, &zero, &gens, &BfsParams { radius: exact - 1, max_abs: None })?;
    println!("and no word of length {} exists over that window: {none:?}", exact - 1);
    assert_eq!(none, None);
    Ok(())
}
