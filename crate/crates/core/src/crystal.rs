//! Kashiwara operators on words and tableaux, tensor-product statistics, and crystal graphs.
//!
//! Words are read as tensor products `b1 ⊗ b2 ⊗ …` in Kashiwara's convention:
//! `f_i` acts on `b1` when `φ_i(b1) > ε_i(b2)`, and `e_i` acts on `b1` when `φ_i(b1) ≥ ε_i(b2)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::admissibility::is_admissible_tableau;
use crate::error::{Error, Result};
use crate::lr::enumerate::kn_tableaux;
use crate::partition::Partition;
use crate::tableau::{word_weight, Alphabet, LieType, Letter, Tableau, TableauDoc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    E,
    F,
}

fn check_index(i: usize, alphabet: &Alphabet) -> Result<()> {
    if i == 0 || i > alphabet.num_operators() {
        return Err(Error::InvalidAlphabet(format!("operator index {i} out of range")));
    }
    Ok(())
}

/// `f_i` on a single letter of the vector representation.
pub fn letter_f(i: usize, b: Letter, alphabet: &Alphabet) -> Option<Letter> {
    let n = alphabet.rank() as i32;
    let i = i as i32;
    let v = b.value();
    if i < n {
        if v == i {
            return Some(Letter::new(i + 1));
        }
        if v == -(i + 1) && alphabet.lie_type() != LieType::A {
            return Some(Letter::new(-i));
        }
        return None;
    }
    if i != n {
        return None;
    }
    match alphabet.lie_type() {
        LieType::A => None,
        LieType::C => (v == n).then_some(Letter::new(-n)),
        LieType::B => match v {
            x if x == n => Some(Letter::ZERO),
            0 => Some(Letter::new(-n)),
            _ => None,
        },
        LieType::D => {
            if v == n - 1 {
                Some(Letter::new(-n))
            } else if v == n {
                Some(Letter::new(-(n - 1)))
            } else {
                None
            }
        }
    }
}

/// `e_i` on a single letter, the inverse of [`letter_f`].
pub fn letter_e(i: usize, b: Letter, alphabet: &Alphabet) -> Option<Letter> {
    alphabet.letters().into_iter().find(|&a| letter_f(i, a, alphabet) == Some(b))
}

/// `(ε_i(b), φ_i(b))` for a single letter.
pub fn letter_eps_phi(i: usize, b: Letter, alphabet: &Alphabet) -> (usize, usize) {
    let mut eps = 0;
    let mut cur = b;
    while let Some(x) = letter_e(i, cur, alphabet) {
        eps += 1;
        cur = x;
    }
    let mut phi = 0;
    let mut cur = b;
    while let Some(x) = letter_f(i, cur, alphabet) {
        phi += 1;
        cur = x;
    }
    (eps, phi)
}

/// `⟨h_i, wt⟩` for a weight in the `ε`-basis.
pub fn coroot_pairing(i: usize, wt: &[i64], alphabet: &Alphabet) -> i64 {
    let n = alphabet.rank();
    let w = |k: usize| wt.get(k - 1).copied().unwrap_or(0);
    if i < n {
        return w(i) - w(i + 1);
    }
    match alphabet.lie_type() {
        LieType::A => 0,
        LieType::C => w(n),
        LieType::B => 2 * w(n),
        LieType::D => w(n - 1) + w(n),
    }
}

/// Signature scan: positions where `e_i` / `f_i` act, and the word's `(ε_i, φ_i)`.
struct Bracket {
    e_pos: Option<usize>,
    f_pos: Option<usize>,
    eps: usize,
    phi: usize,
}

fn bracket(word: &[Letter], i: usize, alphabet: &Alphabet) -> Bracket {
    // Each letter contributes -^ε then +^φ; a + cancels a later -.
    let mut open: Vec<(usize, usize)> = Vec::new();
    let mut e_pos = None;
    let mut eps = 0;
    for (k, &b) in word.iter().enumerate() {
        let (mut minus, plus) = letter_eps_phi(i, b, alphabet);
        while minus > 0 {
            match open.last_mut() {
                Some(top) => {
                    top.1 -= 1;
                    minus -= 1;
                    if top.1 == 0 {
                        open.pop();
                    }
                }
                None => break,
            }
        }
        if minus > 0 {
            e_pos = Some(k);
            eps += minus;
        }
        if plus > 0 {
            open.push((k, plus));
        }
    }
    let phi = open.iter().map(|x| x.1).sum();
    Bracket { e_pos, f_pos: open.first().map(|x| x.0), eps, phi }
}

/// `(ε_i, φ_i)` of a word by the signature rule.
pub fn word_eps_phi(word: &[Letter], i: usize, alphabet: &Alphabet) -> (usize, usize) {
    let b = bracket(word, i, alphabet);
    (b.eps, b.phi)
}

/// `(ε_i, φ_i)` of a word by folding the tensor-product formulas letter by letter.
pub fn word_eps_phi_folded(word: &[Letter], i: usize, alphabet: &Alphabet) -> (i64, i64) {
    let mut acc: Option<(i64, i64, Vec<i64>)> = None;
    for &b in word {
        let (e2, p2) = letter_eps_phi(i, b, alphabet);
        let (e2, p2) = (e2 as i64, p2 as i64);
        let w2 = word_weight(&[b], alphabet.rank());
        acc = Some(match acc {
            None => (e2, p2, w2),
            Some((e1, p1, w1)) => {
                let eps = e1.max(e2 - coroot_pairing(i, &w1, alphabet));
                let phi = p2.max(p1 + coroot_pairing(i, &w2, alphabet));
                let w: Vec<i64> = w1.iter().zip(&w2).map(|(a, b)| a + b).collect();
                (eps, phi, w)
            }
        });
    }
    acc.map_or((0, 0), |(e, p, _)| (e, p))
}

/// Apply `e_i` or `f_i` to a word; `None` is the zero element.
pub fn apply_word(op: Op, i: usize, word: &[Letter], alphabet: &Alphabet) -> Result<Option<Vec<Letter>>> {
    check_index(i, alphabet)?;
    for &m in word {
        alphabet.check_letter(m)?;
    }
    let b = bracket(word, i, alphabet);
    let (pos, act): (Option<usize>, fn(usize, Letter, &Alphabet) -> Option<Letter>) = match op {
        Op::E => (b.e_pos, letter_e),
        Op::F => (b.f_pos, letter_f),
    };
    let Some(k) = pos else { return Ok(None) };
    let mut out = word.to_vec();
    out[k] = act(i, word[k], alphabet).ok_or_else(|| Error::Contract("signature picked an inert letter".into()))?;
    Ok(Some(out))
}

pub fn is_highest_weight(word: &[Letter], alphabet: &Alphabet) -> bool {
    (1..=alphabet.num_operators()).all(|i| bracket(word, i, alphabet).eps == 0)
}

/// Apply `e_i` / `f_i` to a KN tableau through its far-eastern reading.
pub fn apply_tableau(op: Op, i: usize, t: &Tableau, alphabet: &Alphabet) -> Result<Option<Tableau>> {
    let Some(w) = apply_word(op, i, &t.fe_word(), alphabet)? else {
        return Ok(None);
    };
    let out = Tableau::from_word(t.shape(), t.inner(), &w)?;
    if t.is_straight() && is_admissible_tableau(t, alphabet) && !is_admissible_tableau(&out, alphabet) {
        return Err(Error::Contract("Kashiwara operator left the set of KN tableaux".into()));
    }
    Ok(Some(out))
}

/// Highest weight tableaux of `B(λ)`: column `x` filled with `1..len`. For type D with
/// `l(λ) = n` there is a second one with `n̄` at the bottom of every full column.
pub fn highest_weight_tableaux(shape: &Partition, alphabet: &Alphabet) -> Result<Vec<Tableau>> {
    let n = alphabet.rank();
    if shape.len() > n {
        return Err(Error::InvalidPartition(format!("{shape} has more than {n} rows")));
    }
    let cols = shape.transpose();
    let make = |flip: bool| {
        let columns = cols
            .parts()
            .iter()
            .map(|&len| {
                let mut c: Vec<Letter> = (1..=len as i32).map(Letter::new).collect();
                if flip && len == n {
                    c[n - 1] = Letter::new(-(n as i32));
                }
                crate::tableau::Column(c)
            })
            .collect();
        Tableau::straight(shape.clone(), columns)
    };
    let mut out = vec![make(false)?];
    if alphabet.lie_type() == LieType::D && shape.len() == n {
        out.push(make(true)?);
    }
    Ok(out)
}

/// A weight with nonnegative weakly decreasing coordinates, as a partition.
pub fn weight_to_partition(wt: &[i64]) -> Option<Partition> {
    if wt.iter().any(|&w| w < 0) {
        return None;
    }
    Partition::new(wt.iter().map(|&w| w as usize).collect()).ok()
}

/// Multiplicities of highest weight elements of `B(μ) ⊗ B(ν)`, keyed by highest weight.
///
/// For type D with `l(μ) = n` the KN tableaux of shape `μ` hold two components; the left
/// factor is taken from the one with highest weight `μ`. Highest weights whose last
/// coordinate is negative are not partitions and are left out.
pub fn decompose_tensor(mu: &Partition, nu: &Partition, alphabet: &Alphabet) -> Result<BTreeMap<Partition, usize>> {
    let left = kn_tableaux(mu, alphabet)?;
    let right = kn_tableaux(nu, alphabet)?;
    let n = alphabet.rank();
    let mut out = BTreeMap::new();
    for t1 in &left {
        let w1 = t1.fe_word();
        // Every prefix of a highest weight word is highest weight.
        if !is_highest_weight(&w1, alphabet) || weight_to_partition(&t1.weight(n)).as_ref() != Some(mu) {
            continue;
        }
        for t2 in &right {
            let mut w = w1.clone();
            w.extend(t2.fe_word());
            if is_highest_weight(&w, alphabet) {
                if let Some(lam) = weight_to_partition(&word_weight(&w, n)) {
                    *out.entry(lam).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(out)
}

/// Tableaux reachable from `seeds` by `e_i` and `f_i`.
pub fn connected_closure(seeds: &[Tableau], alphabet: &Alphabet) -> Result<BTreeSet<Tableau>> {
    let mut seen: BTreeSet<Tableau> = seeds.iter().cloned().collect();
    let mut stack: Vec<Tableau> = seeds.to_vec();
    while let Some(t) = stack.pop() {
        for i in 1..=alphabet.num_operators() {
            for op in [Op::E, Op::F] {
                if let Some(w) = apply_word(op, i, &t.fe_word(), alphabet)? {
                    let u = Tableau::from_word(t.shape(), t.inner(), &w)?;
                    if seen.insert(u.clone()) {
                        stack.push(u);
                    }
                }
            }
        }
    }
    Ok(seen)
}

/// DOT rendering of the crystal graph of `B(λ)` with `f_i` arrows labelled by `i`.
pub fn crystal_graph_dot(shape: &Partition, alphabet: &Alphabet) -> Result<String> {
    let nodes = kn_tableaux(shape, alphabet)?;
    let index: BTreeMap<&Tableau, usize> = nodes.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut s = String::new();
    let _ = writeln!(s, "digraph crystal {{");
    for (k, t) in nodes.iter().enumerate() {
        let label = serde_json::to_string(&TableauDoc::from_tableau(t, alphabet).rows).expect("rows serialize");
        let _ = writeln!(s, "  n{k} [label=\"{}\"];", label.replace('"', "\\\""));
    }
    for (k, t) in nodes.iter().enumerate() {
        for i in 1..=alphabet.num_operators() {
            if let Some(u) = apply_tableau(Op::F, i, t, alphabet)? {
                let j = index
                    .get(&u)
                    .ok_or_else(|| Error::Contract("f_i image outside the enumerated crystal".into()))?;
                let _ = writeln!(s, "  n{k} -> n{j} [label=\"{i}\"];");
            }
        }
    }
    s.push_str("}\n");
    Ok(s)
}
