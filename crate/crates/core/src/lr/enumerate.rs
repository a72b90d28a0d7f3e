//! Backtracking generation of (KN) tableaux of a fixed shape, optionally restricted to
//! fillings whose far-eastern word is smooth on a starting shape.
//!
//! Columns are filled right to left and each column top to bottom, so every partial
//! filling is a prefix of the far-eastern word and smoothness can prune immediately.

use std::collections::BTreeMap;

use crate::admissibility::{adjacent_columns_ok, d_parity, one_column_ok, DConventions};
use crate::error::{Error, Result};
use crate::partition::{Partition, ShapeCursor};
use crate::tableau::{Alphabet, Column, LieType, Letter, Tableau};

/// What to generate.
#[derive(Debug, Clone)]
pub struct FillSpec {
    pub alphabet: Alphabet,
    pub shape: Partition,
    /// Candidate letters; they are tried in the order of [`Alphabet::letters`].
    pub letters: Vec<Letter>,
    /// Impose the KN conditions of the alphabet's type.
    pub admissible: bool,
    /// Require the reading to be smooth on this shape.
    pub start: Option<Partition>,
}

impl FillSpec {
    pub fn kn(shape: &Partition, alphabet: &Alphabet) -> Self {
        FillSpec {
            alphabet: *alphabet,
            shape: shape.clone(),
            letters: alphabet.letters(),
            admissible: true,
            start: None,
        }
    }

    pub fn smooth_on(mut self, start: &Partition) -> Self {
        self.start = Some(start.clone());
        self
    }

    pub fn with_letters(mut self, keep: impl Fn(Letter) -> bool) -> Self {
        self.letters.retain(|&m| keep(m));
        self
    }
}

struct Search<'a, F: FnMut(&[Vec<Letter>], Option<Partition>)> {
    spec: &'a FillSpec,
    lens: Vec<usize>,
    cells: Vec<(usize, usize)>,
    cols: Vec<Vec<Letter>>,
    visit: F,
}

impl<F: FnMut(&[Vec<Letter>], Option<Partition>)> Search<'_, F> {
    fn cell_ok(&self, x: usize, i: usize, m: Letter) -> bool {
        let a = &self.spec.alphabet;
        if i > 0 && !a.column_step_ok(self.cols[x][i - 1], m) {
            return false;
        }
        if x + 1 < self.lens.len() && i < self.lens[x + 1] && !a.row_step_ok(m, self.cols[x + 1][i]) {
            return false;
        }
        if a.lie_type() == LieType::D && m.index() == a.rank() {
            let clash = (x + 1..self.lens.len())
                .take_while(|&y| i < self.lens[y])
                .any(|y| self.cols[y][i] == m.bar());
            if clash {
                return false;
            }
        }
        true
    }

    fn column_done_ok(&self, x: usize, conv: &mut DConventions) -> bool {
        let a = &self.spec.alphabet;
        let c = &self.cols[x];
        if !one_column_ok(c, a) {
            return false;
        }
        if a.lie_type() == LieType::D {
            *conv = conv.and(d_parity(c, a.rank()));
            if !conv.any() {
                return false;
            }
        }
        x + 1 >= self.lens.len() || adjacent_columns_ok(c, &self.cols[x + 1], a)
    }

    fn rec(&mut self, idx: usize, cursor: Option<ShapeCursor>, conv: DConventions) {
        if idx == self.cells.len() {
            let end = cursor.and_then(|c| c.partition());
            (self.visit)(&self.cols, end);
            return;
        }
        let (x, i) = self.cells[idx];
        for k in 0..self.spec.letters.len() {
            let m = self.spec.letters[k];
            if !self.cell_ok(x, i, m) {
                continue;
            }
            let mut next = cursor.clone();
            if let Some(c) = next.as_mut() {
                if !c.push(m) {
                    continue;
                }
            }
            self.cols[x].push(m);
            let mut conv2 = conv;
            let ok = i + 1 < self.lens[x] || !self.spec.admissible || self.column_done_ok(x, &mut conv2);
            if ok {
                self.rec(idx + 1, next, conv2);
            }
            self.cols[x].pop();
        }
    }
}

/// Run the search; `visit` receives the columns and, when smoothness is tracked, the end shape.
pub fn fill(spec: &FillSpec, visit: impl FnMut(&[Vec<Letter>], Option<Partition>)) -> Result<()> {
    let n = spec.alphabet.rank();
    if spec.shape.len() > n {
        return Err(Error::InvalidPartition(format!("{} has more than {n} rows", spec.shape)));
    }
    if let Some(s) = &spec.start {
        if s.len() > n {
            return Err(Error::InvalidPartition(format!("{s} has more than {n} rows")));
        }
    }
    let lens = spec.shape.transpose().parts().to_vec();
    let cells: Vec<(usize, usize)> = (0..lens.len()).rev().flat_map(|x| (0..lens[x]).map(move |i| (x, i))).collect();
    let mut letters = spec.letters.clone();
    letters.sort_by_key(|&m| spec.alphabet.letter_rank(m));
    letters.dedup();
    let spec = FillSpec { letters, ..spec.clone() };
    let cursor = spec.start.as_ref().map(|s| ShapeCursor::new(s, n));
    let mut search = Search {
        spec: &spec,
        cols: lens.iter().map(|&l| Vec::with_capacity(l)).collect(),
        lens,
        cells,
        visit,
    };
    search.rec(0, cursor, DConventions::BOTH);
    Ok(())
}

fn build(shape: &Partition, cols: &[Vec<Letter>]) -> Tableau {
    Tableau::straight(shape.clone(), cols.iter().map(|c| Column(c.clone())).collect())
        .expect("search fills every cell of the shape")
}

fn sort_canonical(ts: &mut [Tableau], alphabet: &Alphabet) {
    ts.sort_by_cached_key(|t| alphabet.canonical_key(t));
}

/// All tableaux matching `spec`, in canonical order.
pub fn collect(spec: &FillSpec) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    fill(spec, |cols, _| out.push(build(&spec.shape, cols)))?;
    sort_canonical(&mut out, &spec.alphabet);
    Ok(out)
}

/// Smooth fillings grouped by the shape they reach, each group in canonical order.
pub fn collect_by_end(spec: &FillSpec) -> Result<BTreeMap<Partition, Vec<Tableau>>> {
    if spec.start.is_none() {
        return Err(Error::Contract("grouping by end shape needs a start shape".into()));
    }
    let mut out: BTreeMap<Partition, Vec<Tableau>> = BTreeMap::new();
    fill(spec, |cols, end| {
        if let Some(end) = end {
            out.entry(end).or_default().push(build(&spec.shape, cols));
        }
    })?;
    for v in out.values_mut() {
        sort_canonical(v, &spec.alphabet);
    }
    Ok(out)
}

/// All KN tableaux of shape `λ`, i.e. the elements of `B(λ)`, in canonical order.
pub fn kn_tableaux(shape: &Partition, alphabet: &Alphabet) -> Result<Vec<Tableau>> {
    collect(&FillSpec::kn(shape, alphabet))
}
