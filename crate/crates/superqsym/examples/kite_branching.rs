//! Kite crystals and branching: over a mixed alphabet each kite shape
//! carries a connected crystal, and a partition crystal branches into
//! kites following the skew standard-tableau rule with the first-column
//! condition. The same rule governs the standard two-block crystal viewed
//! over its reordered alphabet.
//!
//! Run with: cargo run --example kite_branching

use std::collections::BTreeMap;

use superqsym::alphabet::GradedAlphabet;
use superqsym::crystal::decompose;
use superqsym::ppartition::decode_kite_weight;
use superqsym::shape::{Composition, KiteShape, Partition};
use superqsym::tableau::{enumerate_kite, enumerate_ssyt, kite_highest};
use superqsym::word::Word;

fn main() {
    let a = GradedAlphabet::parse("mixed:1,2").unwrap();
    let shape = KiteShape::new(
        1,
        Partition::new(vec![2]).unwrap(),
        Composition::new(vec![1, 2]).unwrap(),
    )
    .unwrap();
    let tabs = enumerate_kite(&shape, &a);
    let h = kite_highest(&shape, &a).unwrap();
    println!(
        "B{shape} over {}: {} tableaux, highest reads {}",
        a.name(),
        tabs.len(),
        h.reading_word().display(&a),
    );

    // Branching of the partition (2,1) over N(1).
    let lam = Partition::new(vec![2, 1]).unwrap();
    let words: Vec<Word> = enumerate_ssyt(&lam, &a)
        .iter()
        .map(|t| t.reading_word())
        .collect();
    let mut multiset: BTreeMap<String, usize> = BTreeMap::new();
    for c in decompose(&a, &words).unwrap() {
        let hw = c.highest_weights();
        let k = decode_kite_weight(&hw[0], &a).unwrap();
        *multiset.entry(k.to_string()).or_default() += 1;
    }
    println!("branching of the (2,1) crystal over N(1):");
    for (shape, mult) in &multiset {
        println!("  {mult} x B{shape}");
    }

    // The standard [2|1] crystal over the reordered alphabet decomposes
    // the same way.
    let omega = GradedAlphabet::parse("perm:mn:2,1:omega").unwrap();
    let mixed = GradedAlphabet::parse("mixed:1,1").unwrap();
    let words: Vec<Word> = enumerate_ssyt(&lam, &omega)
        .iter()
        .map(|t| t.reading_word())
        .collect();
    let mut multiset: BTreeMap<String, usize> = BTreeMap::new();
    for c in decompose(&mixed, &words).unwrap() {
        let hw = c.highest_weights();
        let k = decode_kite_weight(&hw[0], &mixed).unwrap();
        *multiset.entry(k.to_string()).or_default() += 1;
    }
    println!("branching of the [2|1] crystal over {}:", omega.name());
    for (shape, mult) in &multiset {
        println!("  {mult} x B{shape}");
    }
}
