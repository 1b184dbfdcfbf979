//! Explore the crystal of the shape (2,1) over the four-letter truncation
//! of N and print it as a DOT graph: eight elements, all reachable from
//! the zigzag highest tableau by 0/1 strings of the three lowering
//! operators.
//!
//! Run with: cargo run --example crystal_component

use superqsym::alphabet::GradedAlphabet;
use superqsym::crystal::{explore_component, DEFAULT_CAP};
use superqsym::shape::Composition;
use superqsym::tableau::qr_highest;

fn main() {
    let a = GradedAlphabet::parse("half:2").unwrap();
    let shape = Composition::new(vec![2, 1]).unwrap();
    let h = qr_highest(&shape, &a).unwrap();
    println!("highest tableau rows: {:?}", h.rows());
    let component = explore_component(&a, &h.reading_word(), DEFAULT_CAP).unwrap();
    println!(
        "component: {} elements, {} lowering edges, highest = {}",
        component.size(),
        component.edges.len(),
        component.highest_words()[0].display(&a),
    );
    print!("{}", component.to_dot(&a));
}
