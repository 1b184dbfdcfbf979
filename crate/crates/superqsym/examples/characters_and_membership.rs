//! Exact characters: hook Schur polynomials and their reordering
//! invariance, the factorization of small-tail kite characters, the
//! membership test for the character ring, and expansion in the kite
//! basis.
//!
//! Run with: cargo run --example characters_and_membership

use superqsym::alphabet::GradedAlphabet;
use superqsym::character::{
    ch_kite, ch_qr, ch_ssyt, expand_in_basis, factorization_check, hook_schur, qsym_membership,
};
use superqsym::shape::{Composition, KiteShape, Partition};

fn main() {
    // Hook Schur polynomials do not depend on the alphabet ordering.
    let lam = Partition::new(vec![2, 1]).unwrap();
    let hs = hook_schur(&lam, 2, 1).unwrap();
    println!("hs_(2,1)(z[-2],z[-1];z[1]) = {hs}");
    let omega = GradedAlphabet::parse("perm:mn:2,1:omega").unwrap();
    println!(
        "same after reordering: {}",
        ch_ssyt(&lam, &omega).unwrap() == hs
    );

    // Factorization of a kite character with a 2-corner tail.
    let ok = factorization_check(
        &Partition::new(vec![1]).unwrap(),
        &Composition::new(vec![2]).unwrap(),
        1,
        1,
    )
    .unwrap();
    println!("factorization of ch B((1);(2)) over N(1): {ok}");

    // Membership: a basis character passes, a bare variable fails.
    let a = GradedAlphabet::parse("mixed:1,1").unwrap();
    let kite = KiteShape::new(
        1,
        Partition::new(vec![1]).unwrap(),
        Composition::new(vec![1]).unwrap(),
    )
    .unwrap();
    let f = ch_kite(&kite, &a).unwrap();
    println!("ch B((1);(1)) = {f}");
    println!(
        "member of the character ring: {}",
        qsym_membership(&f, 1, 2).unwrap().member
    );
    let bad = superqsym::character::CharacterPoly::parse("z[1/2]").unwrap();
    let verdict = qsym_membership(&bad, 0, 2).unwrap();
    println!(
        "z[1/2] member: {} ({})",
        verdict.member,
        verdict.witness.unwrap()
    );

    // The square of ch B((1)) expands back into the basis.
    let half = GradedAlphabet::parse("half:2").unwrap();
    let one = ch_qr(&Composition::new(vec![1]).unwrap(), &half).unwrap();
    let expansion = expand_in_basis(&one.mul(&one), 0, 4).unwrap();
    println!("ch B((1))^2 expands as:");
    for (shape, coeff) in &expansion.coefficients {
        println!("  {coeff} x ch B{shape}");
    }
}
