//! The batch command-line interface: enumerate tableaux, explore and
//! decompose crystals, run insertions and RSK, compute characters, test
//! membership, and run the verification suites.
//!
//! Every invocation is deterministic: enumerations are sorted, JSON keys
//! ordered, and DOT output canonical.

use std::collections::BTreeMap;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::alphabet::{Family, GradedAlphabet};
use crate::character::{qsym_membership, CharacterPoly};
use crate::crystal::{decompose, explore_component, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::insertion::qr_pq;
use crate::ppartition::decode_kite_weight;
use crate::rsk::{rsk, SuperMatrix};
use crate::shape::{Composition, KiteShape, Partition};
use crate::tableau::{
    enumerate_kite, enumerate_qr, enumerate_ssyt, kite_highest, qr_highest, ssyt_highest,
};
use crate::verify::run_suite;
use crate::word::Word;

#[derive(Parser, Debug)]
#[command(
    name = "superqsym",
    about = "Crystals over graded alphabets: tableaux, insertion, RSK, characters",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List all tableaux of a shape over an alphabet as JSON.
    Enumerate {
        /// Alphabet spec: mn:4,2 | half:2 | mixed:1,2 | perm:mn:4,2:omega.
        #[arg(long)]
        alphabet: String,
        /// Composition or partition, e.g. 2,1.
        #[arg(long)]
        shape: Option<String>,
        /// Kite body (with --tail), e.g. 2,1.
        #[arg(long)]
        body: Option<String>,
        /// Kite tail, e.g. 1,2.
        #[arg(long)]
        tail: Option<String>,
        /// qr | ssyt (defaults by alphabet family).
        #[arg(long)]
        kind: Option<String>,
    },
    /// Explore the connected component of a seed and print it.
    Component {
        #[arg(long)]
        alphabet: String,
        /// Seed at the highest tableau of this shape.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        body: Option<String>,
        #[arg(long)]
        tail: Option<String>,
        /// Seed word, space-separated letters.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// dot | json.
        #[arg(long, default_value = "dot")]
        out: String,
    },
    /// Decompose a tableau crystal or a tensor product into components.
    Decompose {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        body: Option<String>,
        #[arg(long)]
        tail: Option<String>,
        #[arg(long)]
        kind: Option<String>,
        /// Two shapes separated by ';' for a tensor product of ribbon
        /// crystals, e.g. "2,1;1".
        #[arg(long)]
        tensor: Option<String>,
        /// text | json.
        #[arg(long, default_value = "text")]
        out: String,
    },
    /// Insert a word and print its P and Q tableaux.
    Insert {
        #[arg(long)]
        word: String,
        /// Defaults to the smallest truncation containing the letters.
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Run the RSK map on a matrix read from a JSON file.
    Rsk {
        /// Path to {"entries": [["row","col",count], ...]}.
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Print the character polynomial of a tableau crystal.
    Character {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        body: Option<String>,
        #[arg(long)]
        tail: Option<String>,
        #[arg(long)]
        kind: Option<String>,
        /// text | json.
        #[arg(long, default_value = "text")]
        out: String,
    },
    /// Test membership in the character ring over a mixed truncation.
    Membership {
        /// Polynomial, e.g. "z[1/2]*z[1] + z[1]^2".
        #[arg(long)]
        poly: String,
        #[arg(long)]
        m: usize,
        /// Truncation bound as a letter display, e.g. 2 or 3/2.
        #[arg(long)]
        n: String,
    },
    /// Run a named verification suite (or `all`).
    Verify {
        #[arg(long)]
        suite: String,
    },
}

/// Runs the CLI on an argument vector and returns (exit code, stdout).
/// Exit codes: 0 success, 1 verification failure, 2 bad input.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes by convention.
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match dispatch(cli) {
        Ok((code, out)) => (code, out),
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::BadInput(format!("bad shape part `{p}`")))
        })
        .collect()
}

fn parse_composition(s: &str) -> Result<Composition> {
    Composition::new(parse_parts(s)?)
}

fn parse_partition(s: &str) -> Result<Partition> {
    Partition::new(parse_parts(s)?)
}

enum ShapeArg {
    Qr(Composition),
    Ssyt(Partition),
    Kite(KiteShape),
}

fn resolve_shape(
    alphabet: &GradedAlphabet,
    shape: Option<&str>,
    body: Option<&str>,
    tail: Option<&str>,
    kind: Option<&str>,
) -> Result<ShapeArg> {
    if body.is_some() || tail.is_some() {
        let m = alphabet
            .mixed_m()
            .ok_or_else(|| Error::BadInput("kite shapes need a mixed or half alphabet".into()))?;
        let body = parse_partition(body.unwrap_or(""))?;
        let tail = parse_composition(tail.unwrap_or(""))?;
        return Ok(ShapeArg::Kite(KiteShape::new(m, body, tail)?));
    }
    let shape = shape
        .ok_or_else(|| Error::BadInput("one of --shape or --body/--tail is required".into()))?;
    let kind = match kind {
        Some(k) => k.to_string(),
        None => match alphabet.family() {
            Family::Half { .. } => "qr".to_string(),
            _ => "ssyt".to_string(),
        },
    };
    match kind.as_str() {
        "qr" => Ok(ShapeArg::Qr(parse_composition(shape)?)),
        "ssyt" => Ok(ShapeArg::Ssyt(parse_partition(shape)?)),
        other => Err(Error::BadInput(format!("unknown kind `{other}`"))),
    }
}

/// The smallest truncation of N containing all letters of a
/// space-separated word.
fn infer_half_alphabet(word: &str) -> Result<GradedAlphabet> {
    let mut bound = 0i64;
    for tok in word.split_whitespace() {
        let v = crate::alphabet::parse_letter_value2(tok)?;
        if v <= 0 {
            return Err(Error::BadInput(format!(
                "letter `{tok}` is not positive; give --alphabet explicitly"
            )));
        }
        bound = bound.max(v);
    }
    if bound == 0 {
        bound = 1;
    }
    GradedAlphabet::build(&crate::alphabet::AlphabetSpec::HalfTrunc(bound))
}

fn dispatch(cli: Cli) -> Result<(i32, String)> {
    match cli.cmd {
        Cmd::Enumerate {
            alphabet,
            shape,
            body,
            tail,
            kind,
        } => {
            let a = GradedAlphabet::parse(&alphabet)?;
            let items: Vec<serde_json::Value> = match resolve_shape(
                &a,
                shape.as_deref(),
                body.as_deref(),
                tail.as_deref(),
                kind.as_deref(),
            )? {
                ShapeArg::Qr(s) => enumerate_qr(&s, &a).iter().map(|t| t.to_json(&a)).collect(),
                ShapeArg::Ssyt(s) => enumerate_ssyt(&s, &a)
                    .iter()
                    .map(|t| t.to_json(&a))
                    .collect(),
                ShapeArg::Kite(s) => enumerate_kite(&s, &a)
                    .iter()
                    .map(|t| t.to_json(&a))
                    .collect(),
            };
            Ok((
                0,
                format!("{}\n", serde_json::to_string_pretty(&json!(items)).unwrap()),
            ))
        }
        Cmd::Component {
            alphabet,
            shape,
            body,
            tail,
            word,
            cap,
            out,
        } => {
            let a = GradedAlphabet::parse(&alphabet)?;
            let seed = match word {
                Some(w) => Word::parse(&w, &a)?,
                None => match resolve_shape(
                    &a,
                    shape.as_deref(),
                    body.as_deref(),
                    tail.as_deref(),
                    None,
                )? {
                    ShapeArg::Qr(s) => qr_highest(&s, &a)?.reading_word(),
                    ShapeArg::Ssyt(s) => ssyt_highest(&s, &a)?.reading_word(),
                    ShapeArg::Kite(s) => kite_highest(&s, &a)?.reading_word(),
                },
            };
            let component = explore_component(&a, &seed, cap)?;
            match out.as_str() {
                "dot" => Ok((0, component.to_dot(&a))),
                "json" => {
                    let value = json!({
                        "elements": component
                            .elements
                            .iter()
                            .map(|w| w.display(&a))
                            .collect::<Vec<_>>(),
                        "edges": component
                            .edges
                            .iter()
                            .map(|(s, r, t)| {
                                json!([
                                    component.elements[*s].display(&a),
                                    a.root_display(&a.root(*r)),
                                    component.elements[*t].display(&a),
                                ])
                            })
                            .collect::<Vec<_>>(),
                        "highest": component
                            .highest_words()
                            .iter()
                            .map(|w| w.display(&a))
                            .collect::<Vec<_>>(),
                        "truncated": component.truncated,
                    });
                    Ok((
                        0,
                        format!("{}\n", serde_json::to_string_pretty(&value).unwrap()),
                    ))
                }
                other => Err(Error::BadInput(format!("unknown output `{other}`"))),
            }
        }
        Cmd::Decompose {
            alphabet,
            shape,
            body,
            tail,
            kind,
            tensor,
            out,
        } => {
            let a = GradedAlphabet::parse(&alphabet)?;
            let words: Vec<Word> = match &tensor {
                Some(pair) => {
                    let (s1, s2) = pair
                        .split_once(';')
                        .ok_or_else(|| Error::BadInput("tensor wants `shape;shape`".into()))?;
                    let s1 = parse_composition(s1)?;
                    let s2 = parse_composition(s2)?;
                    let mut words = Vec::new();
                    for t1 in enumerate_qr(&s1, &a) {
                        for t2 in enumerate_qr(&s2, &a) {
                            words.push(t1.reading_word().concat(&t2.reading_word()));
                        }
                    }
                    words
                }
                None => match resolve_shape(
                    &a,
                    shape.as_deref(),
                    body.as_deref(),
                    tail.as_deref(),
                    kind.as_deref(),
                )? {
                    ShapeArg::Qr(s) => enumerate_qr(&s, &a)
                        .iter()
                        .map(|t| t.reading_word())
                        .collect(),
                    ShapeArg::Ssyt(s) => enumerate_ssyt(&s, &a)
                        .iter()
                        .map(|t| t.reading_word())
                        .collect(),
                    ShapeArg::Kite(s) => enumerate_kite(&s, &a)
                        .iter()
                        .map(|t| t.reading_word())
                        .collect(),
                },
            };
            let comps = decompose(&a, &words)?;
            let mut multiset: BTreeMap<String, (usize, usize, String)> = BTreeMap::new();
            for c in &comps {
                let hw = c.highest_weights();
                let label = match hw.as_slice() {
                    [w] => match decode_kite_weight(w, &a) {
                        Some(k) => format!("B{k}"),
                        None => format!("hw {}", w.display(&a)),
                    },
                    _ => format!("{} highest elements", hw.len()),
                };
                let entry = multiset
                    .entry(label)
                    .or_insert((0, c.size(), String::new()));
                entry.0 += 1;
                if let [w] = hw.as_slice() {
                    entry.2 = w.display(&a);
                }
            }
            match out.as_str() {
                "text" => {
                    let mut s = format!("{} elements, {} components\n", words.len(), comps.len());
                    for (label, (mult, size, hw)) in &multiset {
                        s.push_str(&format!(
                            "{mult} x {label} (size {size}, highest weight {hw})\n"
                        ));
                    }
                    Ok((0, s))
                }
                "json" => {
                    let value = json!({
                        "elements": words.len(),
                        "components": multiset
                            .iter()
                            .map(|(label, (mult, size, hw))| {
                                json!({
                                    "component": label,
                                    "multiplicity": mult,
                                    "size": size,
                                    "highest_weight": hw,
                                })
                            })
                            .collect::<Vec<_>>(),
                    });
                    Ok((
                        0,
                        format!("{}\n", serde_json::to_string_pretty(&value).unwrap()),
                    ))
                }
                other => Err(Error::BadInput(format!("unknown output `{other}`"))),
            }
        }
        Cmd::Insert { word, alphabet } => {
            let a = match alphabet {
                Some(spec) => GradedAlphabet::parse(&spec)?,
                None => infer_half_alphabet(&word)?,
            };
            let w = Word::parse(&word, &a)?;
            let (p, q) = qr_pq(&w, &a)?;
            let value = json!({
                "word": w.display(&a),
                "p": p.to_json(&a),
                "q": q.to_json(),
                "shape": p.shape().parts(),
            });
            Ok((
                0,
                format!("{}\n", serde_json::to_string_pretty(&value).unwrap()),
            ))
        }
        Cmd::Rsk { matrix, alphabet } => {
            let text = std::fs::read_to_string(&matrix)
                .map_err(|e| Error::BadInput(format!("cannot read `{matrix}`: {e}")))?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| Error::BadInput(format!("bad JSON in `{matrix}`: {e}")))?;
            let a = match alphabet {
                Some(spec) => GradedAlphabet::parse(&spec)?,
                None => {
                    // Smallest truncation containing every letter named in
                    // the file.
                    let mut displays = Vec::new();
                    if let Some(entries) = value.get("entries").and_then(|e| e.as_array()) {
                        for e in entries {
                            if let Some(t) = e.as_array() {
                                for cell in t.iter().take(2) {
                                    if let Some(s) = cell.as_str() {
                                        displays.push(s.to_string());
                                    }
                                }
                            }
                        }
                    }
                    infer_half_alphabet(&displays.join(" "))?
                }
            };
            let m = SuperMatrix::from_json(&value, &a)?;
            let (p1, p2) = rsk(&m, &a)?;
            let out = json!({
                "p1": p1.to_json(&a),
                "p2": p2.to_json(&a),
                "shapes": [p1.shape().parts(), p2.shape().parts()],
            });
            Ok((
                0,
                format!("{}\n", serde_json::to_string_pretty(&out).unwrap()),
            ))
        }
        Cmd::Character {
            alphabet,
            shape,
            body,
            tail,
            kind,
            out,
        } => {
            let a = GradedAlphabet::parse(&alphabet)?;
            let poly: CharacterPoly = match resolve_shape(
                &a,
                shape.as_deref(),
                body.as_deref(),
                tail.as_deref(),
                kind.as_deref(),
            )? {
                ShapeArg::Qr(s) => crate::character::ch_qr(&s, &a)?,
                ShapeArg::Ssyt(s) => crate::character::ch_ssyt(&s, &a)?,
                ShapeArg::Kite(s) => crate::character::ch_kite(&s, &a)?,
            };
            match out.as_str() {
                "text" => Ok((0, format!("{}\n", poly.display()))),
                "json" => Ok((
                    0,
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&poly.to_json()).unwrap()
                    ),
                )),
                other => Err(Error::BadInput(format!("unknown output `{other}`"))),
            }
        }
        Cmd::Membership { poly, m, n } => {
            let f = CharacterPoly::parse(&poly)?;
            let bound2 = crate::alphabet::parse_letter_value2(&n)?;
            let verdict = qsym_membership(&f, m, bound2)?;
            let mut s = format!("{}\n", verdict.member);
            if let Some(w) = &verdict.witness {
                s.push_str(&format!("witness: {w}\n"));
            }
            Ok((0, s))
        }
        Cmd::Verify { suite } => {
            let results = run_suite(&suite)?;
            let mut s = String::new();
            let mut ok = true;
            for r in &results {
                ok &= r.passed;
                s.push_str(&format!(
                    "{} {} — {}\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                ));
            }
            Ok((if ok { 0 } else { 1 }, s))
        }
    }
}
