//! Build the alphabet families and inspect their letters and simple
//! roots.
//!
//! Run with: cargo run --example alphabets

use superqsym::alphabet::GradedAlphabet;

fn describe(spec: &str) {
    let a = GradedAlphabet::parse(spec).unwrap();
    let letters: Vec<String> = a
        .letters()
        .map(|l| format!("{}{}", a.display(l), if a.sign(l) == 1 { "" } else { "'" }))
        .collect();
    println!(
        "{spec}: letters (odd marked with '): {}",
        letters.join(" < ")
    );
    for root in a.simple_roots() {
        println!(
            "  root {}: ({}, {}) {} ell={}",
            a.root_display(&root),
            a.display(root.lo),
            a.display(root.hi),
            if root.isotropic {
                "isotropic"
            } else {
                "non-isotropic"
            },
            root.ell,
        );
    }
}

fn main() {
    describe("mn:2,1");
    describe("half:2");
    describe("mixed:1,1");
    // The canonical reordering of [4|2] interleaves the blocks so that
    // every simple root is isotropic.
    describe("perm:mn:4,2:omega");
}
