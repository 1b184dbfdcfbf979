//! Tensor products of ribbon crystals decompose by shuffles: the descent
//! compositions of the interleavings of two labeled chains predict the
//! component multiset of the tensor crystal exactly.
//!
//! Run with: cargo run --example tensor_shuffles

use std::collections::BTreeMap;

use superqsym::alphabet::GradedAlphabet;
use superqsym::crystal::decompose;
use superqsym::ppartition::{decode_kite_weight, shuffle_decompose};
use superqsym::shape::Composition;
use superqsym::tableau::enumerate_qr;
use superqsym::word::Word;

fn main() {
    let a = GradedAlphabet::parse("half:2").unwrap();
    let s1 = Composition::new(vec![2]).unwrap();
    let s2 = Composition::new(vec![1, 1]).unwrap();

    println!("shuffle rule for B{s1} (x) B{s2}:");
    let mut predicted: BTreeMap<String, usize> = BTreeMap::new();
    for alpha in shuffle_decompose(&s1, &s2) {
        *predicted.entry(alpha.to_string()).or_default() += 1;
    }
    for (shape, mult) in &predicted {
        println!("  {mult} x B{shape}");
    }

    let mut words: Vec<Word> = Vec::new();
    for t1 in enumerate_qr(&s1, &a) {
        for t2 in enumerate_qr(&s2, &a) {
            words.push(t1.reading_word().concat(&t2.reading_word()));
        }
    }
    println!("crystal decomposition of the {} tensor words:", words.len());
    let mut got: BTreeMap<String, usize> = BTreeMap::new();
    for c in decompose(&a, &words).unwrap() {
        let hw = c.highest_weights();
        let shape = decode_kite_weight(&hw[0], &a).unwrap();
        *got.entry(shape.tail().to_string()).or_default() += 1;
    }
    for (shape, mult) in &got {
        println!("  {mult} x B{shape}");
    }
}
