//! Finite balls in the Bass–Serre tree of the splitting over S(a).
//!
//! BS(1, n) acts on the Bass–Serre tree of its ascending HNN extension with
//! vertex group S(a). This example computes coset representatives of
//! S(a)/α(S(a)), grows balls around the identity coset, validates them
//! (distinct cosets, admissible edges, connected, |E| = |V| - 1), reads off
//! vertex degrees, and renders one ball as Graphviz DOT.
//!
//! ```bash
//! cargo run --example tree_ball
//! ```

use bs1n::bsgroup::{coset_reps_mod_alpha, tree_ball, TreeEdge};
use bs1n::nadic::FullIdeal;
use bs1n::{EnumBounds, Result};

fn main() -> Result<()> {
    let bounds = EnumBounds { max_int_digits: 2, max_frac_depth: 2, max_abs: None };

    // n = 2, the ideal with zero set {1}: S(a) = Z, so the tree is the
    // (n+1)-regular Bass–Serre tree of BS(1,2) and the ball is trivalent.
    let zero = FullIdeal::new(2, [1].into_iter().collect())?;
    let reps = coset_reps_mod_alpha(&zero, &bounds)?;
    println!("n = 2, zero set {{1}}: S/αS representatives: {:?}",
        reps.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    let ball = tree_ball(&zero, 3, &bounds)?;
    ball.validate()?;
    println!("radius-3 ball: {} vertices, {} edges", ball.vertices.len(), ball.edges.len());
    for i in 0..ball.vertices.len() {
        if ball.depths[i] < ball.radius {
            assert_eq!(ball.degree(i), 3, "interior vertices of a trivalent tree");
        }
    }
    println!("every interior vertex has degree 3");
    let up = ball.edges.iter().filter(|(_, _, e)| matches!(e, TreeEdge::Up(_))).count();
    println!("{} up-edges (index [S : αS] = {}), {} down-edges\n",
        up, ball.reps.len(), ball.edges.len() - up);

    // n = 6 with zero set {1}: only the 2-part of the ideal vanishes, so
    // S(a) = Z[1/3] and the index [S : αS] drops from 6 to 2.
    let half = FullIdeal::new(6, [1].into_iter().collect())?;
    let ball6 = tree_ball(&half, 2, &bounds)?;
    ball6.validate()?;
    println!("n = 6, zero set {{1}}: index {} tree, radius-2 ball has {} vertices",
        ball6.reps.len(), ball6.vertices.len());
    for i in 0..ball6.vertices.len() {
        if ball6.depths[i] < ball6.radius {
            assert_eq!(ball6.degree(i), 1 + ball6.reps.len());
        }
    }
    println!("interior degree 1 + index = {}\n", 1 + ball6.reps.len());

    // The whole ring is an ideal too; its tree is a line ([S : αS] = 1),
    // which is exactly why that structure sits at the bottom of the poset.
    let whole = FullIdeal::new(6, [].into_iter().collect())?;
    let line = tree_ball(&whole, 4, &bounds)?;
    line.validate()?;
    println!("n = 6, whole ring: radius-4 ball has {} vertices (a line segment)",
        line.vertices.len());
    assert_eq!(line.vertices.len(), 9);

    println!("\nDOT rendering of the n = 2 radius-2 ball:\n");
    print!("{}", tree_ball(&zero, 2, &bounds)?.to_dot());
    Ok(())
}
