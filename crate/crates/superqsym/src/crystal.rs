//! Kashiwara operators on words via the tensor-product rules, component
//! exploration, decomposition of operator-closed sets, and crystal
//! equivalence by paired bisimulation.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::alphabet::{GradedAlphabet, Letter, Parity, SimpleRoot};
use crate::error::{Error, Result};
use crate::weight::Weight;
use crate::word::Word;

/// A raising (`e`) or lowering (`f`) operator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CrystalOp {
    Raise,
    Lower,
}

pub const BOTH_OPS: [CrystalOp; 2] = [CrystalOp::Raise, CrystalOp::Lower];

/// Default cap for exploration and equivalence checks.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Target {
    Null,
    Pos(usize),
}

/// State of the left-associative fold over a prefix: the prefix's
/// epsilon/phi for the root, the pairing of its weight with the root, and
/// the position each operator would act on.
#[derive(Clone, Copy, Debug)]
struct FoldState {
    eps: i64,
    phi: i64,
    pair: i64,
    e_at: Target,
    f_at: Target,
}

impl FoldState {
    fn empty() -> Self {
        FoldState {
            eps: 0,
            phi: 0,
            pair: 0,
            e_at: Target::Null,
            f_at: Target::Null,
        }
    }
}

fn letter_state(alphabet: &GradedAlphabet, root: &SimpleRoot, l: Letter, pos: usize) -> FoldState {
    let eps = i64::from(l == root.hi);
    let phi = i64::from(l == root.lo);
    FoldState {
        eps,
        phi,
        pair: Weight::epsilon(l).pairing(root, alphabet),
        e_at: if l == root.hi {
            Target::Pos(pos)
        } else {
            Target::Null
        },
        f_at: if l == root.lo {
            Target::Pos(pos)
        } else {
            Target::Null
        },
    }
}

/// Combines a prefix state with the state of the next letter, following
/// the two-factor tensor rule.
fn combine(root: &SimpleRoot, p: FoldState, b: FoldState) -> FoldState {
    let ell = root.ell;
    if root.isotropic {
        // The same condition selects the factor for eps, phi, e and f.
        let on_prefix = (ell == 1 && p.pair != 0) || (ell == -1 && b.pair == 0);
        let (eps, phi, e_at, f_at) = if on_prefix {
            (p.eps, p.phi, p.e_at, p.f_at)
        } else {
            (b.eps, b.phi, b.e_at, b.f_at)
        };
        FoldState {
            eps,
            phi,
            pair: p.pair + b.pair,
            e_at,
            f_at,
        }
    } else {
        // For ell = -1 the rule is the mirror image of the ell = +1 rule
        // (factors swapped), which is what axioms (1)-(4) force on the
        // dual chains.
        let (eps, phi) = if ell == 1 {
            (p.eps.max(b.eps - p.pair), (p.phi + b.pair).max(b.phi))
        } else {
            ((p.eps + b.pair).max(b.eps), p.phi.max(b.phi - p.pair))
        };
        let e_on_prefix = if ell == 1 {
            p.phi >= b.eps
        } else {
            b.phi < p.eps
        };
        let f_on_prefix = if ell == 1 {
            p.phi > b.eps
        } else {
            b.phi <= p.eps
        };
        FoldState {
            eps,
            phi,
            pair: p.pair + b.pair,
            e_at: if e_on_prefix { p.e_at } else { b.e_at },
            f_at: if f_on_prefix { p.f_at } else { b.f_at },
        }
    }
}

fn fold_word(alphabet: &GradedAlphabet, root: &SimpleRoot, w: &Word) -> FoldState {
    let mut state = FoldState::empty();
    for (k, l) in w.letters().iter().enumerate() {
        state = combine(root, state, letter_state(alphabet, root, *l, k));
    }
    state
}

/// `(epsilon, phi)` of a word for a root, computed by the tensor fold.
pub fn eps_phi(alphabet: &GradedAlphabet, root: &SimpleRoot, w: &Word) -> Result<(u64, u64)> {
    alphabet.check_root(root)?;
    w.check(alphabet)?;
    let s = fold_word(alphabet, root, w);
    debug_assert!(s.eps >= 0 && s.phi >= 0);
    Ok((s.eps as u64, s.phi as u64))
}

/// Applies `e` or `f` for a root to a word. `None` is the null symbol and
/// is absorbing.
pub fn apply(
    op: CrystalOp,
    alphabet: &GradedAlphabet,
    root: &SimpleRoot,
    w: &Word,
) -> Result<Option<Word>> {
    alphabet.check_root(root)?;
    w.check(alphabet)?;
    let s = fold_word(alphabet, root, w);
    let target = match op {
        CrystalOp::Raise => s.e_at,
        CrystalOp::Lower => s.f_at,
    };
    Ok(match target {
        Target::Null => None,
        Target::Pos(k) => {
            let mut letters = w.letters().to_vec();
            letters[k] = match op {
                CrystalOp::Raise => root.lo,
                CrystalOp::Lower => root.hi,
            };
            Some(Word(letters))
        }
    })
}

/// The one-pass scan form of the operators over a truncation of N: for a
/// root with even lower letter act at the smallest position with nonzero
/// pairing, for an odd lower letter at the largest; null if the letter
/// there does not move.
pub fn apply_isotropic_scan(
    op: CrystalOp,
    alphabet: &GradedAlphabet,
    root: &SimpleRoot,
    w: &Word,
) -> Result<Option<Word>> {
    if !alphabet.is_half_family() {
        return Err(Error::NotHalfTruncation(alphabet.name().to_string()));
    }
    alphabet.check_root(root)?;
    w.check(alphabet)?;
    let positions = w
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, l)| Weight::epsilon(**l).pairing(root, alphabet) != 0)
        .map(|(k, _)| k);
    let k = if alphabet.parity(root.lo) == Parity::Even {
        positions.min()
    } else {
        positions.max()
    };
    Ok(k.and_then(|k| {
        let l = w.letters()[k];
        let new = match op {
            CrystalOp::Raise if l == root.hi => Some(root.lo),
            CrystalOp::Lower if l == root.lo => Some(root.hi),
            _ => None,
        };
        new.map(|nl| {
            let mut letters = w.letters().to_vec();
            letters[k] = nl;
            Word(letters)
        })
    }))
}

/// True when every raising operator kills the word.
pub fn is_highest(alphabet: &GradedAlphabet, w: &Word) -> Result<bool> {
    for i in 0..alphabet.num_roots() {
        if apply(CrystalOp::Raise, alphabet, &alphabet.root(i), w)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Applies a string of lowering operators, rightmost root index first.
pub fn lower_string(alphabet: &GradedAlphabet, roots: &[usize], w: &Word) -> Result<Option<Word>> {
    let mut cur = w.clone();
    for idx in roots.iter().rev() {
        match apply(CrystalOp::Lower, alphabet, &alphabet.root(*idx), &cur)? {
            Some(next) => cur = next,
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}

/// A connected component of the word crystal, with elements sorted, the
/// `f`-edges among them, and the positions of all elements killed by every
/// raising operator.
#[derive(Clone, Debug)]
pub struct CrystalComponent {
    pub elements: Vec<Word>,
    /// `(source, root index, target)`, each an index into `elements`.
    pub edges: Vec<(usize, usize, usize)>,
    /// Indices of the elements with all raising operators null.
    pub highest: Vec<usize>,
    /// Set when exploration stopped at the cap; the component is partial.
    pub truncated: bool,
}

impl CrystalComponent {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn highest_words(&self) -> Vec<&Word> {
        self.highest.iter().map(|i| &self.elements[*i]).collect()
    }

    pub fn highest_weights(&self) -> Vec<Weight> {
        self.highest
            .iter()
            .map(|i| self.elements[*i].weight())
            .collect()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.elements.binary_search(w).is_ok()
    }

    /// DOT export: nodes labeled by words, edges by root displays.
    pub fn to_dot(&self, alphabet: &GradedAlphabet) -> String {
        let label = |w: &Word| {
            let s = w.display(alphabet);
            if s.is_empty() {
                "∅".to_string()
            } else {
                s
            }
        };
        let mut out = String::from("digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n");
        for w in &self.elements {
            out.push_str(&format!("  \"{}\";\n", label(w)));
        }
        let mut edges = self.edges.clone();
        edges.sort();
        for (s, r, t) in edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                label(&self.elements[s]),
                label(&self.elements[t]),
                alphabet.root_display(&alphabet.root(r)),
            ));
        }
        out.push_str("}\n");
        out
    }
}

fn build_component(
    alphabet: &GradedAlphabet,
    members: Vec<Word>,
    truncated: bool,
) -> Result<CrystalComponent> {
    let mut elements = members;
    elements.sort();
    elements.dedup();
    let index: HashMap<&Word, usize> = elements.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    let mut highest = Vec::new();
    for (i, w) in elements.iter().enumerate() {
        let mut killed = true;
        for r in 0..alphabet.num_roots() {
            let root = alphabet.root(r);
            if let Some(t) = apply(CrystalOp::Lower, alphabet, &root, w)? {
                if let Some(j) = index.get(&t) {
                    edges.push((i, r, *j));
                }
            }
            if apply(CrystalOp::Raise, alphabet, &root, w)?.is_some() {
                killed = false;
            }
        }
        if killed {
            highest.push(i);
        }
    }
    Ok(CrystalComponent {
        elements,
        edges,
        highest,
        truncated,
    })
}

/// BFS closure of a seed under all raising and lowering operators. Stops
/// with `truncated = true` once more than `cap` elements are found.
pub fn explore_component(
    alphabet: &GradedAlphabet,
    seed: &Word,
    cap: usize,
) -> Result<CrystalComponent> {
    seed.check(alphabet)?;
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed.clone());
    let mut truncated = false;
    while let Some(w) = queue.pop_front() {
        for r in 0..alphabet.num_roots() {
            let root = alphabet.root(r);
            for op in BOTH_OPS {
                if let Some(next) = apply(op, alphabet, &root, &w)? {
                    if !seen.contains(&next) {
                        if seen.len() >= cap {
                            truncated = true;
                            continue;
                        }
                        seen.insert(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
        if truncated {
            break;
        }
    }
    build_component(alphabet, seen.into_iter().collect(), truncated)
}

/// Partitions an operator-closed set of words into connected components.
/// Errors if some operator maps an element outside the set.
pub fn decompose(alphabet: &GradedAlphabet, elements: &[Word]) -> Result<Vec<CrystalComponent>> {
    let mut sorted: Vec<Word> = elements.to_vec();
    sorted.sort();
    sorted.dedup();
    let index: HashMap<&Word, usize> = sorted.iter().enumerate().map(|(i, w)| (w, i)).collect();

    // Closure check and adjacency in one pass.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); sorted.len()];
    for (i, w) in sorted.iter().enumerate() {
        for r in 0..alphabet.num_roots() {
            let root = alphabet.root(r);
            for op in BOTH_OPS {
                if let Some(next) = apply(op, alphabet, &root, w)? {
                    match index.get(&next) {
                        Some(j) => adj[i].push(*j),
                        None => return Err(Error::SetNotClosed(w.display(alphabet))),
                    }
                }
            }
        }
    }

    let mut seen = vec![false; sorted.len()];
    let mut components = Vec::new();
    for start in 0..sorted.len() {
        if seen[start] {
            continue;
        }
        let mut members = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(i) = queue.pop_front() {
            members.push(sorted[i].clone());
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        components.push(build_component(alphabet, members, false)?);
    }
    components.sort_by(|a, b| a.elements.cmp(&b.elements));
    Ok(components)
}

/// Crystal equivalence of two words: weights and all `(epsilon, phi)`
/// agree, and the paired bisimulation never distinguishes them. Exact when
/// both components fit under the cap; errors with `Indeterminate` when the
/// cap is hit.
pub fn equivalent(alphabet: &GradedAlphabet, a: &Word, b: &Word, cap: usize) -> Result<bool> {
    a.check(alphabet)?;
    b.check(alphabet)?;
    let roots = alphabet.simple_roots();
    let agree = |u: &Word, v: &Word| -> Result<bool> {
        if u.weight() != v.weight() {
            return Ok(false);
        }
        for root in &roots {
            if eps_phi(alphabet, root, u)? != eps_phi(alphabet, root, v)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    if !agree(a, b)? {
        return Ok(false);
    }

    let mut partner: HashMap<Word, Word> = HashMap::new();
    let mut partner_rev: HashMap<Word, Word> = HashMap::new();
    let mut queue = VecDeque::new();
    partner.insert(a.clone(), b.clone());
    partner_rev.insert(b.clone(), a.clone());
    queue.push_back((a.clone(), b.clone()));

    while let Some((u, v)) = queue.pop_front() {
        for root in &roots {
            for op in BOTH_OPS {
                let xu = apply(op, alphabet, root, &u)?;
                let xv = apply(op, alphabet, root, &v)?;
                match (xu, xv) {
                    (None, None) => {}
                    (Some(_), None) | (None, Some(_)) => return Ok(false),
                    (Some(nu), Some(nv)) => {
                        match (partner.get(&nu), partner_rev.get(&nv)) {
                            (Some(pv), _) if *pv != nv => return Ok(false),
                            (_, Some(pu)) if *pu != nu => return Ok(false),
                            (Some(_), Some(_)) => {} // already matched consistently
                            _ => {
                                if !agree(&nu, &nv)? {
                                    return Ok(false);
                                }
                                if partner.len() >= cap {
                                    return Err(Error::Indeterminate { cap });
                                }
                                partner.insert(nu.clone(), nv.clone());
                                partner_rev.insert(nv.clone(), nu.clone());
                                queue.push_back((nu, nv));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{words_up_to_length, Word};

    fn alpha(spec: &str) -> GradedAlphabet {
        GradedAlphabet::parse(spec).unwrap()
    }

    fn w(s: &str, a: &GradedAlphabet) -> Word {
        Word::parse(s, a).unwrap()
    }

    #[test]
    fn one_letter_edges() {
        let a = alpha("half:2");
        let r0 = a.root(0); // 1/2 -> 1
        let half = w("1/2", &a);
        assert_eq!(
            apply(CrystalOp::Lower, &a, &r0, &half).unwrap(),
            Some(w("1", &a))
        );
        assert_eq!(apply(CrystalOp::Raise, &a, &r0, &half).unwrap(), None);
        assert_eq!(
            apply(CrystalOp::Raise, &a, &r0, &w("1", &a)).unwrap(),
            Some(half)
        );
    }

    #[test]
    fn lower_acts_at_scan_position() {
        let a = alpha("half:2");
        // f_1 on "1 1" acts at position 1 (smallest k for an even index).
        let r1 = a.root(1);
        assert_eq!(
            apply(CrystalOp::Lower, &a, &r1, &w("1 1", &a)).unwrap(),
            Some(w("3/2 1", &a))
        );
        // f_{1/2} on "1/2 1/2" acts at the largest position.
        let r0 = a.root(0);
        assert_eq!(
            apply(CrystalOp::Lower, &a, &r0, &w("1/2 1/2", &a)).unwrap(),
            Some(w("1/2 1", &a))
        );
        // e_1 on "1/2 1": the scan finds position 2 but e_1(1) is null.
        assert_eq!(
            apply(CrystalOp::Raise, &a, &r1, &w("1/2 1", &a)).unwrap(),
            None
        );
    }

    #[test]
    fn scan_rule_matches_tensor_fold() {
        let a = alpha("half:2");
        for word in words_up_to_length(&a, 6) {
            for r in 0..a.num_roots() {
                let root = a.root(r);
                for op in BOTH_OPS {
                    assert_eq!(
                        apply(op, &a, &root, &word).unwrap(),
                        apply_isotropic_scan(op, &a, &root, &word).unwrap(),
                        "mismatch on {} root {}",
                        word.display(&a),
                        r
                    );
                }
            }
        }
    }

    #[test]
    fn scan_requires_half_family() {
        let a = alpha("mn:1,1");
        let r = a.root(0);
        assert!(matches!(
            apply_isotropic_scan(CrystalOp::Lower, &a, &r, &Word::empty()),
            Err(Error::NotHalfTruncation(_))
        ));
    }

    #[test]
    fn empty_word_is_inert() {
        let a = alpha("half:1");
        let r = a.root(0);
        assert_eq!(
            apply(CrystalOp::Lower, &a, &r, &Word::empty()).unwrap(),
            None
        );
        assert_eq!(
            apply(CrystalOp::Raise, &a, &r, &Word::empty()).unwrap(),
            None
        );
        assert_eq!(eps_phi(&a, &r, &Word::empty()).unwrap(), (0, 0));
    }

    #[test]
    fn eps_phi_small_cases() {
        let a = alpha("half:2");
        // w = "1/2", root alpha_{1/2}: f applies once, e is null.
        assert_eq!(eps_phi(&a, &a.root(0), &w("1/2", &a)).unwrap(), (0, 1));
        // Isotropic root with zero pairing and both operators null.
        let r2 = a.root(2);
        let v = w("1/2 1", &a);
        assert_eq!(v.weight().pairing(&r2, &a), 0);
        assert_eq!(eps_phi(&a, &r2, &v).unwrap(), (0, 0));
    }

    #[test]
    fn non_isotropic_phi_minus_eps() {
        let b = alpha("mn:2,1");
        let r = b.root(0); // (-2,-1), ell = 1
        let v = w("-2 -2", &b);
        let (eps, phi) = eps_phi(&b, &r, &v).unwrap();
        assert_eq!(phi as i64 - eps as i64, r.ell * v.weight().pairing(&r, &b));
        assert_eq!(phi as i64 - eps as i64, 2);
    }

    /// Definition axioms for all words up to length 5 over small
    /// alphabets covering every root flavor: isotropic, non-isotropic
    /// with ell +1 (adjacent even letters), and with ell -1 (adjacent odd
    /// letters).
    #[test]
    fn crystal_axioms_exhaustive() {
        for spec in ["half:2", "mn:2,1", "mn:1,2", "mixed:1,1"] {
            let a = alpha(spec);
            let max_len = if a.len() >= 4 { 4 } else { 5 };
            for word in words_up_to_length(&a, max_len) {
                let wt = word.weight();
                for r in 0..a.num_roots() {
                    let root = a.root(r);
                    let (eps, phi) = eps_phi(&a, &root, &word).unwrap();
                    let (eps, phi) = (eps as i64, phi as i64);
                    let pair = wt.pairing(&root, &a);
                    if root.isotropic {
                        // Axiom (1).
                        assert_eq!(phi + eps, i64::from(pair != 0));
                    } else {
                        // Axiom (2).
                        assert_eq!(phi - eps, root.ell * pair);
                    }
                    let up = apply(CrystalOp::Raise, &a, &root, &word).unwrap();
                    if let Some(up) = &up {
                        // Axiom (3).
                        let (e2, p2) = eps_phi(&a, &root, up).unwrap();
                        assert_eq!(e2 as i64, eps - 1);
                        assert_eq!(p2 as i64, phi + 1);
                        let alpha_wt = &Weight::epsilon(root.lo) - &Weight::epsilon(root.hi);
                        assert_eq!(up.weight(), &wt + &alpha_wt);
                        // Axiom (5), one direction.
                        assert_eq!(
                            apply(CrystalOp::Lower, &a, &root, up).unwrap().as_ref(),
                            Some(&word)
                        );
                    }
                    let down = apply(CrystalOp::Lower, &a, &root, &word).unwrap();
                    if let Some(down) = &down {
                        // Axiom (4).
                        let (e2, p2) = eps_phi(&a, &root, down).unwrap();
                        assert_eq!(e2 as i64, eps + 1);
                        assert_eq!(p2 as i64, phi - 1);
                        // Axiom (5), other direction.
                        assert_eq!(
                            apply(CrystalOp::Raise, &a, &root, down).unwrap().as_ref(),
                            Some(&word)
                        );
                        // Letters stay inside the alphabet.
                        assert!(down.check(&a).is_ok());
                    }
                    if root.isotropic {
                        // e^2 = f^2 = null on isotropic roots.
                        if let Some(u) = &up {
                            assert_eq!(apply(CrystalOp::Raise, &a, &root, u).unwrap(), None);
                        }
                        if let Some(d) = &down {
                            assert_eq!(apply(CrystalOp::Lower, &a, &root, d).unwrap(), None);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn explore_small_components() {
        let a = alpha("half:1");
        let c = explore_component(&a, &w("1/2", &a), DEFAULT_CAP).unwrap();
        assert_eq!(c.size(), 2);
        assert_eq!(c.edges.len(), 1);
        assert!(!c.truncated);
        assert_eq!(c.highest_words(), [&w("1/2", &a)]);

        let trivial = explore_component(&a, &Word::empty(), DEFAULT_CAP).unwrap();
        assert_eq!(trivial.size(), 1);
        assert!(trivial.edges.is_empty());
    }

    #[test]
    fn explore_respects_cap() {
        let a = alpha("half:2");
        let c = explore_component(&a, &w("1 1 1", &a), 2).unwrap();
        assert!(c.truncated);
        assert!(c.size() <= 2);
    }

    #[test]
    fn decompose_rejects_open_sets() {
        let a = alpha("half:1");
        let words = vec![w("1/2", &a)]; // f maps it to "1", outside
        assert!(matches!(decompose(&a, &words), Err(Error::SetNotClosed(_))));
        assert!(decompose(&a, &[]).unwrap().is_empty());
    }

    #[test]
    fn equivalence_basics() {
        let a = alpha("half:2");
        let u = w("1 1/2", &a);
        assert!(equivalent(&a, &u, &u, DEFAULT_CAP).unwrap());
        assert!(!equivalent(&a, &w("1/2", &a), &w("1", &a), DEFAULT_CAP).unwrap());
        // Reading of the shape-(1,1) column [1;2] is "1 2": equivalent words
        // with different letters.
        assert!(equivalent(&a, &w("1 2", &a), &w("1/2 1/2", &a), DEFAULT_CAP).is_ok());
    }

    #[test]
    fn equivalence_is_an_equivalence_relation_on_a_sample() {
        let a = alpha("half:1");
        let sample = words_up_to_length(&a, 3);
        let eq = |x: &Word, y: &Word| equivalent(&a, x, y, DEFAULT_CAP).unwrap();
        for x in &sample {
            assert!(eq(x, x));
            for y in &sample {
                assert_eq!(eq(x, y), eq(y, x));
                for z in &sample {
                    if eq(x, y) && eq(y, z) {
                        assert!(eq(x, z));
                    }
                }
            }
        }
    }

    #[test]
    fn equivalence_cap_is_reported() {
        let a = alpha("half:2");
        let u = w("1 1 1 1", &a);
        assert!(matches!(
            equivalent(&a, &u, &u, 1),
            Err(Error::Indeterminate { .. })
        ));
    }
}
