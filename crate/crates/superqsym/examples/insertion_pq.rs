//! The quasi-ribbon insertion correspondence: a word maps bijectively to
//! a pair of a quasi-ribbon tableau and a standard ribbon recording
//! tableau of the same shape, and stays crystal-equivalent to its
//! P-tableau.
//!
//! Run with: cargo run --example insertion_pq

use superqsym::alphabet::GradedAlphabet;
use superqsym::crystal::{equivalent, DEFAULT_CAP};
use superqsym::insertion::{qr_insert, qr_pq};
use superqsym::tableau::QuasiRibbonTableau;
use superqsym::word::Word;

fn show(t: &QuasiRibbonTableau, a: &GradedAlphabet) -> String {
    t.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|l| a.display(*l))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

fn main() {
    let a = GradedAlphabet::parse("half:3").unwrap();
    let w = Word::parse("1 1/2 1 5/2 2 2", &a).unwrap();
    let (p, q) = qr_pq(&w, &a).unwrap();
    println!("word      : {}", w.display(&a));
    println!("P shape {} rows: {}", p.shape(), show(&p, &a));
    println!("Q rows    : {:?}", q.rows());
    println!(
        "w equivalent to P(w): {}",
        equivalent(&a, &w, &p.reading_word(), DEFAULT_CAP).unwrap()
    );

    // A single insertion step: splice before the first entry that is at
    // least (strictly above, for an odd letter) the inserted one.
    let t = p.clone();
    let b = a.parse_letter("3/2").unwrap();
    let ins = qr_insert(b, &t, &a).unwrap();
    println!("insert 3/2: shape {} rows: {}", ins.shape(), show(&ins, &a));
}
