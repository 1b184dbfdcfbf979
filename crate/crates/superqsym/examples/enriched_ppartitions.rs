//! Enriched partitions of a labeled poset carry a crystal structure, and
//! decompose by the linear extensions of the poset: the multiplicity of
//! each ribbon crystal equals the number of extensions with that descent
//! composition.
//!
//! Run with: cargo run --example enriched_ppartitions

use std::collections::BTreeMap;

use superqsym::alphabet::GradedAlphabet;
use superqsym::crystal::decompose;
use superqsym::ppartition::{decode_kite_weight, embed_word, enumerate_enriched, LabeledPoset};
use superqsym::word::Word;

fn main() {
    // The V-shaped poset a < b, a < c with labels chosen so that one arm
    // is a descent.
    let poset = LabeledPoset::from_json(&serde_json::json!({
        "elements": ["a", "b", "c"],
        "covers": [["a", "b"], ["a", "c"]],
        "gamma": {"a": 2, "b": 1, "c": 3},
    }))
    .unwrap();

    let a = GradedAlphabet::parse("half:2").unwrap();
    let sigmas = enumerate_enriched(&poset, &a).unwrap();
    println!("{} enriched partitions over {}", sigmas.len(), a.name());

    println!("linear extensions and their descent compositions:");
    for ext in poset.linear_extensions() {
        let names: Vec<&str> = ext.iter().map(|&i| poset.name(i)).collect();
        println!("  {:?} -> {}", names, poset.descent_composition(&ext));
    }

    let words: Vec<Word> = sigmas.iter().map(|s| embed_word(s, &poset)).collect();
    let mut multiset: BTreeMap<String, usize> = BTreeMap::new();
    for c in decompose(&a, &words).unwrap() {
        let hw = c.highest_weights();
        let shape = decode_kite_weight(&hw[0], &a).unwrap();
        *multiset.entry(shape.tail().to_string()).or_default() += 1;
    }
    println!("crystal components:");
    for (shape, mult) in &multiset {
        println!("  {mult} x B{shape}");
    }
}
