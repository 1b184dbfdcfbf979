//! Labeled posets and enriched partitions as crystals, decomposition by
//! linear extensions, shuffle tensor decomposition, Littlewood-Richardson
//! tableaux, and kite tensor multiplicities computed two ways.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::alphabet::{GradedAlphabet, Letter, Parity};
use crate::crystal::{self, equivalent, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::shape::{Composition, KiteShape, Partition, SkewShape, Step};
use crate::tableau::{
    enumerate_kite, enumerate_ssyt, ssyt_highest, standard_tableaux, SemistandardTableau,
    StandardTableau,
};
use crate::weight::Weight;
use crate::word::Word;

// ---------------------------------------------------------------------------
// Labeled posets and enriched partitions
// ---------------------------------------------------------------------------

/// A finite poset with an injective integer labeling.
#[derive(Clone, Debug)]
pub struct LabeledPoset {
    names: Vec<String>,
    /// Strict order as a full relation matrix: `less[i][j]` means i < j.
    less: Vec<Vec<bool>>,
    gamma: Vec<u64>,
}

impl LabeledPoset {
    /// Builds from cover relations; the strict order is the transitive
    /// closure. Cycles are rejected, as are repeated names and labels.
    pub fn new(
        names: Vec<String>,
        covers: &[(String, String)],
        gamma: &BTreeMap<String, u64>,
    ) -> Result<Self> {
        let index: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        if index.len() != names.len() {
            return Err(Error::BadInput("poset element names must be unique".into()));
        }
        let n = names.len();
        let mut less = vec![vec![false; n]; n];
        for (a, b) in covers {
            let i = *index
                .get(a.as_str())
                .ok_or_else(|| Error::BadInput(format!("unknown element `{a}`")))?;
            let j = *index
                .get(b.as_str())
                .ok_or_else(|| Error::BadInput(format!("unknown element `{b}`")))?;
            less[i][j] = true;
        }
        // Transitive closure.
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    let reachable: Vec<usize> = (0..n).filter(|&j| less[k][j]).collect();
                    for j in reachable {
                        less[i][j] = true;
                    }
                }
            }
        }
        for (i, row) in less.iter().enumerate() {
            if row[i] {
                return Err(Error::BadInput(format!("cycle through `{}`", names[i])));
            }
        }
        let mut labels = Vec::with_capacity(n);
        for name in &names {
            let g = gamma
                .get(name)
                .ok_or_else(|| Error::BadInput(format!("no label for `{name}`")))?;
            labels.push(*g);
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::BadInput("labeling must be injective".into()));
        }
        Ok(LabeledPoset {
            names,
            less,
            gamma: labels,
        })
    }

    /// Parses `{"elements": [...], "covers": [[a,b],...], "gamma": {...}}`.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let bad = |msg: &str| Error::BadInput(format!("poset json: {msg}"));
        let names: Vec<String> = value
            .get("elements")
            .and_then(|v| v.as_array())
            .ok_or_else(|| bad("missing `elements`"))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| bad("element not a string"))
            })
            .collect::<Result<_>>()?;
        let covers: Vec<(String, String)> = value
            .get("covers")
            .and_then(|v| v.as_array())
            .map(|arr| {
                arr.iter()
                    .map(|pair| {
                        let p = pair.as_array().filter(|p| p.len() == 2);
                        match p {
                            Some(p) => match (p[0].as_str(), p[1].as_str()) {
                                (Some(a), Some(b)) => Ok((a.to_string(), b.to_string())),
                                _ => Err(bad("cover is not a pair of strings")),
                            },
                            None => Err(bad("cover is not a pair")),
                        }
                    })
                    .collect::<Result<_>>()
            })
            .transpose()?
            .unwrap_or_default();
        let gamma: BTreeMap<String, u64> = value
            .get("gamma")
            .and_then(|v| v.as_object())
            .ok_or_else(|| bad("missing `gamma`"))?
            .iter()
            .map(|(k, v)| {
                v.as_u64()
                    .map(|g| (k.clone(), g))
                    .ok_or_else(|| bad("bad label"))
            })
            .collect::<Result<_>>()?;
        LabeledPoset::new(names, &covers, &gamma)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.less[i][j]
    }

    pub fn gamma(&self, i: usize) -> u64 {
        self.gamma[i]
    }

    /// All linear extensions, each a sequence of element indices.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        fn rec(
            p: &LabeledPoset,
            placed: &mut Vec<bool>,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == p.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..p.len() {
                if placed[v] {
                    continue;
                }
                if (0..p.len()).any(|u| !placed[u] && p.lt(u, v)) {
                    continue;
                }
                placed[v] = true;
                cur.push(v);
                rec(p, placed, cur, out);
                cur.pop();
                placed[v] = false;
            }
        }
        let mut out = Vec::new();
        rec(
            self,
            &mut vec![false; n],
            &mut Vec::with_capacity(n),
            &mut out,
        );
        out
    }

    /// Descent set of a linear extension: positions where gamma drops.
    pub fn descents(&self, extension: &[usize]) -> BTreeSet<usize> {
        (1..extension.len())
            .filter(|&i| self.gamma(extension[i - 1]) > self.gamma(extension[i]))
            .collect()
    }

    pub fn descent_composition(&self, extension: &[usize]) -> Composition {
        Composition::from_subset(&self.descents(extension), extension.len()).unwrap()
    }
}

/// An enriched partition on a labeled poset: an assignment of letters
/// (over a truncation of N) subject to the parity-sensitive equality
/// rules.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EnrichedPartition(pub Vec<Letter>);

fn enriched_ok(
    poset: &LabeledPoset,
    sigma: &[Letter],
    i: usize,
    j: usize,
    alphabet: &GradedAlphabet,
) -> bool {
    // Conditions for i < j in the poset.
    let (a, b) = (sigma[i], sigma[j]);
    if a > b {
        return false;
    }
    if a == b {
        match alphabet.parity(a) {
            Parity::Even => poset.gamma(i) < poset.gamma(j),
            Parity::Odd => poset.gamma(i) > poset.gamma(j),
        }
    } else {
        true
    }
}

/// All enriched partitions of a labeled poset over a truncation of N.
pub fn enumerate_enriched(
    poset: &LabeledPoset,
    alphabet: &GradedAlphabet,
) -> Result<Vec<EnrichedPartition>> {
    if !alphabet.is_half_family() {
        return Err(Error::NotHalfTruncation(alphabet.name().to_string()));
    }
    let n = poset.len();
    fn rec(
        poset: &LabeledPoset,
        alphabet: &GradedAlphabet,
        k: usize,
        cur: &mut Vec<Letter>,
        out: &mut Vec<EnrichedPartition>,
    ) {
        if k == poset.len() {
            out.push(EnrichedPartition(cur.clone()));
            return;
        }
        'letters: for x in alphabet.letters() {
            cur.push(x);
            for j in 0..k {
                let ok = if poset.lt(j, k) {
                    enriched_ok(poset, cur, j, k, alphabet)
                } else if poset.lt(k, j) {
                    enriched_ok(poset, cur, k, j, alphabet)
                } else {
                    true
                };
                if !ok {
                    cur.pop();
                    continue 'letters;
                }
            }
            rec(poset, alphabet, k + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(poset, alphabet, 0, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    Ok(out)
}

/// The word of an enriched partition: values listed in strictly
/// decreasing label order.
pub fn embed_word(sigma: &EnrichedPartition, poset: &LabeledPoset) -> Word {
    let mut idx: Vec<usize> = (0..poset.len()).collect();
    idx.sort_by_key(|&i| std::cmp::Reverse(poset.gamma(i)));
    Word(idx.into_iter().map(|i| sigma.0[i]).collect())
}

/// The linear extension carrying an enriched partition: elements in
/// increasing value order; ties on an even value in increasing label
/// order, on an odd value in decreasing label order.
pub fn pi_decompose(
    sigma: &EnrichedPartition,
    poset: &LabeledPoset,
    alphabet: &GradedAlphabet,
) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..poset.len()).collect();
    idx.sort_by_key(|&i| {
        let v = sigma.0[i];
        let g = poset.gamma(i);
        let tie = match alphabet.parity(v) {
            Parity::Even => g as i64,
            Parity::Odd => -(g as i64),
        };
        (v, tie)
    });
    debug_assert!(
        idx.windows(2).all(|w| !poset.lt(w[1], w[0])),
        "pi produced a non-extension"
    );
    idx
}

// ---------------------------------------------------------------------------
// Shuffle decomposition of tensor products of ribbon crystals
// ---------------------------------------------------------------------------

/// Canonical chain labels of a ribbon: the node read k-th (rows top to
/// bottom, right to left) gets label r - k + 1, so labels decrease along
/// the reading order.
fn chain_labels(shape: &Composition) -> Vec<u64> {
    let cells = shape.ribbon_cells();
    let r = cells.len();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by_key(|&i| (cells[i].0, std::cmp::Reverse(cells[i].1)));
    let mut labels = vec![0u64; r];
    for (k, &node) in order.iter().enumerate() {
        labels[node] = (r - k) as u64;
    }
    labels
}

fn interleavings(r1: usize, r2: usize) -> Vec<Vec<bool>> {
    // true = take from the first chain.
    fn rec(a: usize, b: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if a == 0 && b == 0 {
            out.push(cur.clone());
            return;
        }
        if a > 0 {
            cur.push(true);
            rec(a - 1, b, cur, out);
            cur.pop();
        }
        if b > 0 {
            cur.push(false);
            rec(a, b - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r1, r2, &mut Vec::new(), &mut out);
    out
}

fn merged_labels(pick: &[bool], labels1: &[u64], labels2: &[u64]) -> Vec<u64> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(pick.len());
    for &from_first in pick {
        if from_first {
            out.push(labels1[i]);
            i += 1;
        } else {
            out.push(labels2[j]);
            j += 1;
        }
    }
    out
}

fn descent_composition_of_labels(labels: &[u64]) -> Composition {
    let d: BTreeSet<usize> = (1..labels.len())
        .filter(|&i| labels[i - 1] > labels[i])
        .collect();
    Composition::from_subset(&d, labels.len()).unwrap()
}

/// The multiset of descent compositions of all shuffles of two ribbon
/// chains, with the first chain's labels shifted above the second's. By
/// the tensor decomposition this is the component multiset of
/// `B(alpha) (x) B(beta)`.
pub fn shuffle_decompose(alpha: &Composition, beta: &Composition) -> Vec<Composition> {
    let labels2 = chain_labels(beta);
    let shift = beta.size() as u64;
    let labels1: Vec<u64> = chain_labels(alpha).into_iter().map(|g| g + shift).collect();
    let mut out: Vec<Composition> = interleavings(alpha.size(), beta.size())
        .iter()
        .map(|pick| descent_composition_of_labels(&merged_labels(pick, &labels1, &labels2)))
        .collect();
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson tableaux through crystal equivalence
// ---------------------------------------------------------------------------

/// The tableaux `S` of shape nu over `[m|0]` such that `H_mu (x) S` is
/// equivalent to `H_lambda`. Empty when sizes or lengths rule the triple
/// out.
pub fn lr_tableaux(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    m: usize,
) -> Result<Vec<SemistandardTableau>> {
    if lambda.size() != mu.size() + nu.size()
        || lambda.len() > m
        || mu.len() > m
        || nu.len() > m
        || m == 0
    {
        return Ok(Vec::new());
    }
    let alphabet = GradedAlphabet::parse(&format!("mn:{m},0"))?;
    let h_mu = ssyt_highest(mu, &alphabet)?.reading_word();
    let h_lambda = ssyt_highest(lambda, &alphabet)?.reading_word();
    let mut out = Vec::new();
    for s in enumerate_ssyt(nu, &alphabet) {
        let w = h_mu.concat(&s.reading_word());
        if equivalent(&alphabet, &w, &h_lambda, DEFAULT_CAP)? {
            out.push(s);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Kite decoding and tensor multiplicities
// ---------------------------------------------------------------------------

/// Interprets a weight as the highest weight of a kite crystal over a
/// mixed truncation: negative-letter coefficients weakly decreasing (the
/// body), positive-letter coefficients supported on an initial run with
/// no gaps (the tail). Returns `None` when the pattern does not match.
pub fn decode_kite_weight(w: &Weight, alphabet: &GradedAlphabet) -> Option<KiteShape> {
    let m = alphabet.mixed_m()?;
    let mut body_counts = Vec::with_capacity(m);
    for i in 0..m {
        let c = w.coeff(Letter(i as u32));
        if c < 0 {
            return None;
        }
        body_counts.push(c as usize);
    }
    if body_counts.windows(2).any(|p| p[0] < p[1]) {
        return None;
    }
    while body_counts.last() == Some(&0) {
        body_counts.pop();
    }
    let body = Partition::new(body_counts).ok()?;

    // Positive letters: counts on an initial segment, all at least one.
    let mut pos_counts = Vec::new();
    let mut ended = false;
    for i in m..alphabet.len() {
        let c = w.coeff(Letter(i as u32));
        if c < 0 {
            return None;
        }
        if c == 0 {
            ended = true;
        } else if ended {
            return None;
        } else {
            pos_counts.push(c as usize);
        }
    }
    let tail = if pos_counts.is_empty() {
        Composition::empty()
    } else {
        let mut steps = Vec::new();
        for (j, &c) in pos_counts.iter().enumerate() {
            let parity = alphabet.parity(Letter((m + j) as u32));
            let (step, count) = match parity {
                Parity::Odd => (Step::Down, if j == 0 { c - 1 } else { c }),
                Parity::Even => (Step::Right, c),
            };
            steps.extend(std::iter::repeat_n(step, count));
        }
        Composition::from_steps(&steps, false)
    };
    KiteShape::new(m, body, tail).ok()
}

/// The tensor product of two kite crystals as an operator-closed word
/// set: the concatenated reading words.
pub fn kite_tensor_words(f1: &KiteShape, f2: &KiteShape, alphabet: &GradedAlphabet) -> Vec<Word> {
    let b1 = enumerate_kite(f1, alphabet);
    let b2 = enumerate_kite(f2, alphabet);
    let mut out = Vec::with_capacity(b1.len() * b2.len());
    for t1 in &b1 {
        let w1 = t1.reading_word();
        for t2 in &b2 {
            out.push(w1.concat(&t2.reading_word()));
        }
    }
    out
}

fn multiplicity_by_highest_words(
    target: &KiteShape,
    f1: &KiteShape,
    f2: &KiteShape,
    alphabet: &GradedAlphabet,
) -> Result<u64> {
    let mut count = 0;
    for w in kite_tensor_words(f1, f2, alphabet) {
        if crystal::is_highest(alphabet, &w)? {
            match decode_kite_weight(&w.weight(), alphabet) {
                Some(shape) if &shape == target => count += 1,
                Some(_) => {}
                None => {
                    return Err(Error::BadInput(format!(
                        "highest word {} has no kite decoding",
                        w.display(alphabet)
                    )))
                }
            }
        }
    }
    Ok(count)
}

fn mixed_alphabet(m: usize, bound2: i64) -> Result<GradedAlphabet> {
    GradedAlphabet::build(&crate::alphabet::AlphabetSpec::MixedTrunc(m, bound2))
}

/// Multiplicity of `target` in the tensor product of two kite crystals,
/// computed two ways: by counting highest-weight words of the tensor
/// crystal over the truncation (re-run one truncation higher to detect
/// instability), and by enumerating the combinatorial quadruples.
pub fn kite_tensor_multiplicity(
    target: &KiteShape,
    f1: &KiteShape,
    f2: &KiteShape,
    m: usize,
    bound2: i64,
) -> Result<(u64, u64)> {
    if target.m() != m || f1.m() != m || f2.m() != m {
        return Err(Error::BadInput("kite shapes disagree on m".into()));
    }
    let small = mixed_alphabet(m, bound2)?;
    let by_crystal = multiplicity_by_highest_words(target, f1, f2, &small)?;
    let large = mixed_alphabet(m, bound2 + 2)?;
    let again = multiplicity_by_highest_words(target, f1, f2, &large)?;
    if by_crystal != again {
        return Err(Error::TruncationUnstable(format!(
            "{} vs {}",
            small.name(),
            large.name()
        )));
    }
    let by_quadruples = kite_quadruple_count(target, f1, f2, m)?;
    Ok((by_crystal, by_quadruples))
}

/// Reading positions (0-based) of the cells of a pair of kites read as
/// the concatenated word.
struct TensorReading {
    /// Cell -> position for the first factor.
    first: HashMap<(usize, usize), usize>,
    /// Cell -> position for the second factor.
    second: HashMap<(usize, usize), usize>,
}

fn tensor_reading(f1: &KiteShape, f2: &KiteShape) -> TensorReading {
    let order = |shape: &KiteShape| {
        let cells = shape.cells();
        let mut idx: Vec<usize> = (0..cells.len()).collect();
        idx.sort_by_key(|&i| (cells[i].0, std::cmp::Reverse(cells[i].1)));
        let mut map = HashMap::new();
        for (k, &i) in idx.iter().enumerate() {
            map.insert(cells[i], k);
        }
        map
    };
    let first = order(f1);
    let offset = f1.size();
    let second = order(f2)
        .into_iter()
        .map(|(c, k)| (c, k + offset))
        .collect();
    TensorReading { first, second }
}

/// Counts the quadruples (S, T1, T2, w) for the multiplicity of
/// `target = (lambda, alpha)` in `B(mu,beta) (x) B(nu,gamma)` over N(m),
/// m >= 1. For m = 0 the tensor rule is the shuffle decomposition.
pub fn kite_quadruple_count(
    target: &KiteShape,
    f1: &KiteShape,
    f2: &KiteShape,
    m: usize,
) -> Result<u64> {
    if m == 0 {
        // Over N the kites are plain ribbon crystals and the tensor rule
        // is the shuffle decomposition.
        if !target.body().is_empty() {
            return Ok(0);
        }
        return Ok(shuffle_decompose(f1.tail(), f2.tail())
            .into_iter()
            .filter(|a| a == target.tail())
            .count() as u64);
    }
    let (lambda, alpha) = (target.body(), target.tail());
    let (mu, beta) = (f1.body(), f1.tail());
    let (nu, gamma) = (f2.body(), f2.tail());
    let reading = tensor_reading(f1, f2);
    let neg_one = Letter(m as u32 - 1);

    let mut total = 0u64;
    for eta in mu.sub_partitions() {
        for zeta in nu.sub_partitions() {
            if eta.size() + zeta.size() != lambda.size() {
                continue;
            }
            let s_set = lr_tableaux(lambda, &eta, &zeta, m)?;
            if s_set.is_empty() {
                continue;
            }
            // Positions of the letter -1 contributed by H_eta in the
            // first factor: row m of eta.
            let eta_minus1: Vec<usize> =
                (1..=eta.part(m)).map(|j| reading.first[&(m, j)]).collect();
            let skew1 = SkewShape::new(mu.clone(), eta.clone())?;
            let skew2 = SkewShape::new(nu.clone(), zeta.clone())?;
            let t1s = standard_tableaux(&skew1);
            let t2s = standard_tableaux(&skew2);
            for t1 in &t1s {
                let comp1 = t1.descent_composition().concat(beta);
                for t2 in &t2s {
                    let comp2 = t2.descent_composition().concat(gamma);
                    let r1 = comp1.size();
                    let r2 = comp2.size();
                    let labels2 = chain_labels(&comp2);
                    let labels1: Vec<u64> = chain_labels(&comp1)
                        .into_iter()
                        .map(|g| g + r2 as u64)
                        .collect();
                    for pick in interleavings(r1, r2) {
                        let labels = merged_labels(&pick, &labels1, &labels2);
                        if &descent_composition_of_labels(&labels) != alpha {
                            continue;
                        }
                        if labels.is_empty() {
                            // No positive nodes at all: condition (4) is
                            // vacuous and each S counts once.
                            total += s_set.len() as u64;
                            continue;
                        }
                        let w_star_pos = chain_node_position(pick[0], t1, t2, f1, f2, &reading);
                        for s in &s_set {
                            if quadruple_condition_four(
                                s,
                                &zeta,
                                &eta_minus1,
                                w_star_pos,
                                neg_one,
                                &reading,
                            ) {
                                total += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(total)
}

/// The reading position of the first node of a chain: for the first
/// chain, the cell of T1's entry 1 (or the first tail cell when the skew
/// part is empty); likewise for the second chain.
fn chain_node_position(
    from_first: bool,
    t1: &StandardTableau,
    t2: &StandardTableau,
    f1: &KiteShape,
    f2: &KiteShape,
    reading: &TensorReading,
) -> usize {
    if from_first {
        match t1.cell_of(1) {
            Some(cell) => reading.first[&cell],
            None => reading.first[&f1.joint().expect("nonempty chain")],
        }
    } else {
        match t2.cell_of(1) {
            Some(cell) => reading.second[&cell],
            None => reading.second[&f2.joint().expect("nonempty chain")],
        }
    }
}

/// Condition (4): some letter -1 (from H_eta in the first factor or from
/// S in the second) is read strictly before the cell of the smallest
/// element of the shuffle.
fn quadruple_condition_four(
    s: &SemistandardTableau,
    zeta: &Partition,
    eta_minus1: &[usize],
    w_star_pos: usize,
    neg_one: Letter,
    reading: &TensorReading,
) -> bool {
    if eta_minus1.iter().any(|&p| p < w_star_pos) {
        return true;
    }
    for (i, &len) in zeta.parts().iter().enumerate() {
        for j in 1..=len {
            if s.entry(i + 1, j) == Some(neg_one) && reading.second[&(i + 1, j)] < w_star_pos {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::decompose;
    use crate::tableau::enumerate_qr;

    fn alpha(spec: &str) -> GradedAlphabet {
        GradedAlphabet::parse(spec).unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn chain2(labels: (u64, u64)) -> LabeledPoset {
        LabeledPoset::new(
            vec!["x".into(), "y".into()],
            &[("x".into(), "y".into())],
            &[("x".to_string(), labels.0), ("y".to_string(), labels.1)]
                .into_iter()
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn poset_construction_and_errors() {
        assert!(LabeledPoset::new(
            vec!["a".into(), "a".into()],
            &[],
            &[("a".to_string(), 1)].into_iter().collect()
        )
        .is_err());
        let cyc = LabeledPoset::new(
            vec!["a".into(), "b".into()],
            &[("a".into(), "b".into()), ("b".into(), "a".into())],
            &[("a".to_string(), 1), ("b".to_string(), 2)]
                .into_iter()
                .collect(),
        );
        assert!(cyc.is_err());
        // Transitivity through a middle element.
        let p = LabeledPoset::new(
            vec!["a".into(), "b".into(), "c".into()],
            &[("a".into(), "b".into()), ("b".into(), "c".into())],
            &[
                ("a".to_string(), 1),
                ("b".to_string(), 2),
                ("c".to_string(), 3),
            ]
            .into_iter()
            .collect(),
        )
        .unwrap();
        assert!(p.lt(0, 2));
    }

    #[test]
    fn chain_enriched_partitions() {
        // Chain x < y with gamma(x) < gamma(y) over half:1: equal odd
        // values are excluded, equal even values allowed.
        let a = alpha("half:1");
        let p = chain2((1, 2));
        let sigmas = enumerate_enriched(&p, &a).unwrap();
        let shown: Vec<String> = sigmas
            .iter()
            .map(|s| Word(s.0.clone()).display(&a))
            .collect();
        assert_eq!(shown, ["1/2 1", "1 1"]);

        // A single element takes every letter; the empty poset one map.
        let single = LabeledPoset::new(
            vec!["x".into()],
            &[],
            &[("x".to_string(), 1)].into_iter().collect(),
        )
        .unwrap();
        assert_eq!(enumerate_enriched(&single, &a).unwrap().len(), 2);
        let empty = LabeledPoset::new(vec![], &[], &BTreeMap::new()).unwrap();
        assert_eq!(enumerate_enriched(&empty, &a).unwrap().len(), 1);
    }

    #[test]
    fn embed_word_uses_decreasing_labels() {
        let a = alpha("half:1");
        // Antichain {a, b} with gamma(a) = 2 > gamma(b) = 1.
        let p = LabeledPoset::new(
            vec!["a".into(), "b".into()],
            &[],
            &[("a".to_string(), 2), ("b".to_string(), 1)]
                .into_iter()
                .collect(),
        )
        .unwrap();
        let sigma = EnrichedPartition(vec![
            a.parse_letter("1/2").unwrap(),
            a.parse_letter("1").unwrap(),
        ]);
        assert_eq!(embed_word(&sigma, &p).display(&a), "1/2 1");
        assert!(embed_word(&EnrichedPartition(vec![]), &empty_poset()).is_empty());
    }

    fn empty_poset() -> LabeledPoset {
        LabeledPoset::new(vec![], &[], &BTreeMap::new()).unwrap()
    }

    /// Every poset on three labeled elements (all acyclic cover sets),
    /// under two labelings each, plus two-element chains and a
    /// four-element diamond.
    fn small_poset_family() -> Vec<LabeledPoset> {
        let mut out = vec![chain2((1, 2)), chain2((2, 1))];
        let names: Vec<String> = vec!["a".into(), "b".into(), "c".into()];
        let arcs = [
            ("a", "b"),
            ("a", "c"),
            ("b", "a"),
            ("b", "c"),
            ("c", "a"),
            ("c", "b"),
        ];
        for mask in 0u32..(1 << arcs.len()) {
            let covers: Vec<(String, String)> = arcs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, (x, y))| (x.to_string(), y.to_string()))
                .collect();
            for labels in [[1u64, 2, 3], [3, 1, 2]] {
                let gamma: BTreeMap<String, u64> = names.iter().cloned().zip(labels).collect();
                if let Ok(p) = LabeledPoset::new(names.clone(), &covers, &gamma) {
                    out.push(p);
                }
            }
        }
        out.push(
            LabeledPoset::new(
                vec!["a".into(), "b".into(), "c".into(), "d".into()],
                &[
                    ("a".into(), "b".into()),
                    ("a".into(), "c".into()),
                    ("b".into(), "d".into()),
                    ("c".into(), "d".into()),
                ],
                &[
                    ("a".to_string(), 2),
                    ("b".to_string(), 4),
                    ("c".to_string(), 1),
                    ("d".to_string(), 3),
                ]
                .into_iter()
                .collect(),
            )
            .unwrap(),
        );
        out
    }

    #[test]
    fn enriched_image_is_operator_closed_and_decomposes_by_extensions() {
        // Decomposition check over half:2: the multiplicity of each
        // shape among the components equals the number of linear
        // extensions with that descent composition, across every poset in
        // the small family.
        let a = alpha("half:2");
        for p in small_poset_family() {
            let sigmas = enumerate_enriched(&p, &a).unwrap();
            let words: Vec<Word> = sigmas.iter().map(|s| embed_word(s, &p)).collect();
            let comps = decompose(&a, &words).unwrap();

            let mut by_shape: BTreeMap<Composition, usize> = BTreeMap::new();
            for c in comps {
                let hw = c.highest_weights();
                assert_eq!(hw.len(), 1);
                let shape = decode_kite_weight(&hw[0], &a).unwrap();
                *by_shape.entry(shape.tail().clone()).or_default() += 1;
            }
            let mut expected: BTreeMap<Composition, usize> = BTreeMap::new();
            for ext in p.linear_extensions() {
                *expected.entry(p.descent_composition(&ext)).or_default() += 1;
            }
            assert_eq!(by_shape, expected);
        }
    }

    #[test]
    fn pi_commutes_with_operators() {
        use crate::crystal::{apply, BOTH_OPS};
        let a = alpha("half:2");
        let p = LabeledPoset::new(
            vec!["a".into(), "b".into(), "c".into()],
            &[("a".into(), "b".into())],
            &[
                ("a".to_string(), 3),
                ("b".to_string(), 1),
                ("c".to_string(), 2),
            ]
            .into_iter()
            .collect(),
        )
        .unwrap();
        let sigmas = enumerate_enriched(&p, &a).unwrap();
        let by_word: HashMap<Word, &EnrichedPartition> =
            sigmas.iter().map(|s| (embed_word(s, &p), s)).collect();
        for s in &sigmas {
            let w = embed_word(s, &p);
            let ext = pi_decompose(s, &p, &a);
            for r in 0..a.num_roots() {
                for op in BOTH_OPS {
                    if let Some(w2) = apply(op, &a, &a.root(r), &w).unwrap() {
                        // Closure (the image is stable)...
                        let s2 = by_word.get(&w2).expect("image not closed");
                        // ...and pi is constant along operators.
                        assert_eq!(pi_decompose(s2, &p, &a), ext);
                    }
                }
            }
        }
    }

    #[test]
    fn pi_tie_breaking() {
        let a = alpha("half:1");
        // Two incomparable elements with equal even value: gamma
        // increasing.
        let p = LabeledPoset::new(
            vec!["a".into(), "b".into()],
            &[],
            &[("a".to_string(), 5), ("b".to_string(), 2)]
                .into_iter()
                .collect(),
        )
        .unwrap();
        let one = a.parse_letter("1").unwrap();
        let half = a.parse_letter("1/2").unwrap();
        let even = EnrichedPartition(vec![one, one]);
        assert_eq!(pi_decompose(&even, &p, &a), vec![1, 0]);
        let odd = EnrichedPartition(vec![half, half]);
        assert_eq!(pi_decompose(&odd, &p, &a), vec![0, 1]);
        // Distinct values sort by value.
        let mixed = EnrichedPartition(vec![one, half]);
        assert_eq!(pi_decompose(&mixed, &p, &a), vec![1, 0]);
    }

    #[test]
    fn linear_extension_descents() {
        let p = chain2((1, 2));
        let exts = p.linear_extensions();
        assert_eq!(exts.len(), 1);
        assert!(p.descents(&exts[0]).is_empty());

        let anti = LabeledPoset::new(
            vec!["a".into(), "b".into()],
            &[],
            &[("a".to_string(), 1), ("b".to_string(), 2)]
                .into_iter()
                .collect(),
        )
        .unwrap();
        let exts = anti.linear_extensions();
        assert_eq!(exts.len(), 2);
        let descents: BTreeSet<BTreeSet<usize>> = exts.iter().map(|e| anti.descents(e)).collect();
        assert!(descents.contains(&BTreeSet::new()));
        assert!(descents.contains(&[1].into_iter().collect()));
    }

    #[test]
    fn shuffle_decompose_examples() {
        let got = shuffle_decompose(&comp(&[1]), &comp(&[1]));
        assert_eq!(got, vec![comp(&[1, 1]), comp(&[2])]);
        // An empty factor is the identity.
        assert_eq!(
            shuffle_decompose(&Composition::empty(), &comp(&[2, 1])),
            vec![comp(&[2, 1])]
        );
    }

    #[test]
    fn shuffle_decompose_matches_the_tensor_crystal() {
        let a = alpha("half:2");
        for total in 0..=4usize {
            for r1 in 0..=total {
                for s1 in Composition::all_of(r1) {
                    for s2 in Composition::all_of(total - r1) {
                        let mut words = Vec::new();
                        for t1 in enumerate_qr(&s1, &a) {
                            for t2 in enumerate_qr(&s2, &a) {
                                words.push(t1.reading_word().concat(&t2.reading_word()));
                            }
                        }
                        let comps = decompose(&a, &words).unwrap();
                        let mut got: Vec<Composition> = comps
                            .iter()
                            .map(|c| {
                                let hw = c.highest_weights();
                                assert_eq!(hw.len(), 1);
                                decode_kite_weight(&hw[0], &a).unwrap().tail().clone()
                            })
                            .collect();
                        got.sort();
                        // Over the truncation, shapes with too many
                        // corners cannot appear.
                        let expected: Vec<Composition> = shuffle_decompose(&s1, &s2)
                            .into_iter()
                            .filter(|c| c.corners() <= 4)
                            .collect();
                        assert_eq!(got, expected, "{s1} (x) {s2}");
                    }
                }
            }
        }
    }

    #[test]
    fn lr_examples() {
        // mu empty forces S = H_lambda.
        let lam = part(&[2, 1]);
        let s = lr_tableaux(&lam, &Partition::empty(), &lam, 2).unwrap();
        assert_eq!(s.len(), 1);
        let a = alpha("mn:2,0");
        assert_eq!(s[0], ssyt_highest(&lam, &a).unwrap());

        // c^{(2,1)}_{(1),(1,1)} = 1.
        assert_eq!(
            lr_tableaux(&part(&[2, 1]), &part(&[1]), &part(&[1, 1]), 2)
                .unwrap()
                .len(),
            1
        );
        // Incompatible sizes: empty.
        assert!(lr_tableaux(&part(&[2]), &part(&[2]), &part(&[1]), 2)
            .unwrap()
            .is_empty());
        // Classical check: c^{(2,1)}_{(1),(2)} = 1, c^{(3)}_{(1),(2)} = 1.
        assert_eq!(
            lr_tableaux(&part(&[2, 1]), &part(&[1]), &part(&[2]), 2)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            lr_tableaux(&part(&[3]), &part(&[1]), &part(&[2]), 2)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn decode_kite_weights() {
        let a = alpha("mixed:1,2");
        // eps_{-1} + eps_{1/2} decodes to body (1), tail (1).
        let mut w = Weight::zero();
        w.add_letter(a.parse_letter("-1").unwrap(), 1);
        w.add_letter(a.parse_letter("1/2").unwrap(), 1);
        let k = decode_kite_weight(&w, &a).unwrap();
        assert_eq!(k.body().parts(), &[1]);
        assert_eq!(k.tail().parts(), &[1]);

        // A gap in the positive support does not decode.
        let mut w = Weight::zero();
        w.add_letter(a.parse_letter("1".to_string().as_str()).unwrap(), 1);
        assert!(decode_kite_weight(&w, &a).is_none());

        // Tail without a full body does not decode.
        let mut w = Weight::zero();
        w.add_letter(a.parse_letter("1/2").unwrap(), 1);
        let k = decode_kite_weight(&w, &a);
        assert!(k.is_none());

        // Round trip through every admissible highest kite weight.
        for shape in KiteShape::all_up_to(1, 3, 3) {
            if shape.tail().corners() > 4 {
                continue;
            }
            let h = crate::tableau::kite_highest(&shape, &a).unwrap();
            assert_eq!(decode_kite_weight(&h.weight(), &a).as_ref(), Some(&shape));
        }
    }

    #[test]
    fn kite_tensor_multiplicity_single_boxes() {
        // B((1)) (x) B((1)) over N(1): targets ((2); ()) and ((1); (1)).
        let f = KiteShape::new(1, part(&[1]), Composition::empty()).unwrap();
        let t_row = KiteShape::new(1, part(&[2]), Composition::empty()).unwrap();
        let t_kite = KiteShape::new(1, part(&[1]), comp(&[1])).unwrap();
        let (c1, c2) = kite_tensor_multiplicity(&t_row, &f, &f, 1, 2).unwrap();
        assert_eq!((c1, c2), (1, 1));
        let (c1, c2) = kite_tensor_multiplicity(&t_kite, &f, &f, 1, 2).unwrap();
        assert_eq!((c1, c2), (1, 1));
        // A target that does not occur.
        let t_absent = KiteShape::new(1, part(&[1]), comp(&[2])).unwrap();
        let (c1, c2) = kite_tensor_multiplicity(&t_absent, &f, &f, 1, 2).unwrap();
        assert_eq!((c1, c2), (0, 0));
    }

    #[test]
    fn kite_tensor_reduces_to_classical_lr() {
        // With empty tails the multiplicities are the classical
        // Littlewood-Richardson numbers.
        let m = 2;
        let f1 = KiteShape::new(m, part(&[2, 1]), Composition::empty()).unwrap();
        let f2 = KiteShape::new(m, part(&[1]), Composition::empty()).unwrap();
        for lam in Partition::all_of(4) {
            if lam.len() > m {
                continue;
            }
            let target = KiteShape::new(m, lam.clone(), Composition::empty()).unwrap();
            let (c1, c2) = kite_tensor_multiplicity(&target, &f1, &f2, m, 2).unwrap();
            let lr = lr_tableaux(&lam, &part(&[2, 1]), &part(&[1]), m)
                .unwrap()
                .len() as u64;
            assert_eq!(c1, lr, "oracle vs LR at {lam}");
            assert_eq!(c2, lr, "quadruples vs LR at {lam}");
        }
    }

    #[test]
    fn kite_tensor_identity_factor() {
        // An empty second factor: multiplicity 1 exactly at the first
        // factor.
        let f1 = KiteShape::new(1, part(&[1]), comp(&[2])).unwrap();
        let id = KiteShape::new(1, Partition::empty(), Composition::empty()).unwrap();
        let (c1, c2) = kite_tensor_multiplicity(&f1, &f1, &id, 1, 2).unwrap();
        assert_eq!((c1, c2), (1, 1));
        let other = KiteShape::new(1, part(&[1]), comp(&[1, 1])).unwrap();
        let (c1, c2) = kite_tensor_multiplicity(&other, &f1, &id, 1, 2).unwrap();
        assert_eq!((c1, c2), (0, 0));
    }

    #[test]
    fn kite_tensor_small_mixed_cases_agree() {
        // The two computations agree on every target for small factors
        // with tails over N(1).
        let m = 1;
        let a = mixed_alphabet(1, 2).unwrap();
        let shapes = vec![
            KiteShape::new(m, part(&[1]), Composition::empty()).unwrap(),
            KiteShape::new(m, part(&[1]), comp(&[1])).unwrap(),
            KiteShape::new(m, part(&[2]), comp(&[1])).unwrap(),
        ];
        for f1 in &shapes {
            for f2 in &shapes {
                // Collect every target that the oracle sees, then compare
                // counts on each.
                let mut targets: BTreeMap<KiteShape, u64> = BTreeMap::new();
                for w in kite_tensor_words(f1, f2, &a) {
                    if crystal::is_highest(&a, &w).unwrap() {
                        let shape = decode_kite_weight(&w.weight(), &a).unwrap();
                        *targets.entry(shape).or_default() += 1;
                    }
                }
                assert!(!targets.is_empty());
                for (target, count) in targets {
                    let (c1, c2) = kite_tensor_multiplicity(&target, f1, f2, m, 2).unwrap();
                    assert_eq!(c1, count, "oracle self-check {f1} (x) {f2} -> {target}");
                    assert_eq!(c2, count, "quadruples {f1} (x) {f2} -> {target}");
                }
            }
        }
    }

    #[test]
    fn kite_tensor_two_row_bodies_agree() {
        // m = 2 exercises the row-m body letters in the quadruple rule:
        // every target seen by the crystal oracle is matched by the
        // combinatorial count.
        let m = 2;
        let a = mixed_alphabet(2, 2).unwrap();
        let f1 = KiteShape::new(m, part(&[1, 1]), comp(&[1])).unwrap();
        let f2s = vec![
            KiteShape::new(m, part(&[1]), Composition::empty()).unwrap(),
            KiteShape::new(m, part(&[1, 1]), comp(&[1])).unwrap(),
        ];
        for f2 in &f2s {
            let mut targets: BTreeMap<KiteShape, u64> = BTreeMap::new();
            for w in kite_tensor_words(&f1, f2, &a) {
                if crystal::is_highest(&a, &w).unwrap() {
                    let shape = decode_kite_weight(&w.weight(), &a).unwrap();
                    *targets.entry(shape).or_default() += 1;
                }
            }
            assert!(!targets.is_empty());
            for (target, count) in targets {
                let (c1, c2) = kite_tensor_multiplicity(&target, &f1, f2, m, 2).unwrap();
                assert_eq!(c1, count, "oracle {f1} (x) {f2} -> {target}");
                assert_eq!(c2, count, "quadruples {f1} (x) {f2} -> {target}");
            }
        }
    }

    #[test]
    fn shuffle_case_of_kite_multiplicity() {
        // m = 0 reduces to the shuffle rule.
        let t = KiteShape::new(0, Partition::empty(), comp(&[2])).unwrap();
        let f = KiteShape::new(0, Partition::empty(), comp(&[1])).unwrap();
        let (c1, c2) = kite_tensor_multiplicity(&t, &f, &f, 0, 2).unwrap();
        assert_eq!((c1, c2), (1, 1));
    }
}
