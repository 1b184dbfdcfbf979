//! The matrix bicrystal and the RSK map: a matrix over letter pairs
//! unfolds into two biwords, the row and column operators commute, and
//! the map onto pairs of quasi-ribbon tableaux restricts to a bijection
//! on every bicrystal component. Descent-pair counts of permutations
//! match counts of doubly-highest matrices.
//!
//! Run with: cargo run --example super_rsk

use std::collections::BTreeSet;

use superqsym::alphabet::GradedAlphabet;
use superqsym::rsk::{gessel_count, omega_biword, omega_star_biword, rsk, SuperMatrix};

fn main() {
    let a = GradedAlphabet::parse("half:2").unwrap();
    let parse = |s: &str| a.parse_letter(s).unwrap();
    let m = SuperMatrix::from_entries(
        [
            ((parse("1/2"), parse("1")), 1),
            ((parse("1"), parse("1/2")), 1),
            ((parse("1"), parse("1")), 2),
        ],
        &a,
    )
    .unwrap();
    let bw = omega_biword(&m, &a);
    let bw_star = omega_star_biword(&m, &a);
    println!("row word    : {}", bw.first_word().display(&a));
    println!("col word    : {}", bw_star.second_word().display(&a));
    let (p1, p2) = rsk(&m, &a).unwrap();
    println!("P1 shape {}: {:?}", p1.shape(), p1.to_json(&a)["rows"]);
    println!("P2 shape {}: {:?}", p2.shape(), p2.to_json(&a)["rows"]);

    // Permutations of S_3 with both descent sets {1} vs doubly-highest
    // matrices with the matching weights.
    let s: BTreeSet<usize> = [1].into_iter().collect();
    let (perms, mats) = gessel_count(&s, &s, 3, &a).unwrap();
    println!("descent pair ({{1}},{{1}}) in S_3: {perms} permutations, {mats} matrices");
}
