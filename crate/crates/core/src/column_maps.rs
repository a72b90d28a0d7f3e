//! The column bijections `φ` (admissible to coadmissible) and `ψ = φ⁻¹`, and their
//! liftings `φ^{(x,y)}`, `ψ^{(x,y)}`, `Φ`, `Ψ` to tableaux of type C.

use serde::Serialize;

use crate::admissibility::{is_admissible_column, is_coadmissible_column, require_admissible, require_coadmissible};
use crate::error::{Error, Result};
use crate::tableau::{Alphabet, Column, LieType, Letter, Tableau};

/// Which algorithm computes the column map. Both give the same result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    /// Swap one pair at a time and re-sort the column.
    First,
    /// Positional block moves, keeping the rest of the column in place.
    #[default]
    Second,
}

/// State of slot `k` in the filling diagram of a working column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Slot {
    Empty,
    Plus,
    Minus,
    PlusMinus,
    /// A pair created by the current pass.
    Cross,
}

/// Slot table of a column: slot `k` records whether `k` and `k̄` are present.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FillingDiagram {
    pub slots: Vec<Slot>,
}

impl FillingDiagram {
    pub fn of(col: &[Letter], n: usize, created: &[usize]) -> Self {
        let slots = (1..=n)
            .map(|k| {
                let plus = col.iter().any(|m| m.value() == k as i32);
                let minus = col.iter().any(|m| m.value() == -(k as i32));
                match (plus, minus) {
                    (true, true) if created.contains(&k) => Slot::Cross,
                    (true, true) => Slot::PlusMinus,
                    (true, false) => Slot::Plus,
                    (false, true) => Slot::Minus,
                    (false, false) => Slot::Empty,
                }
            })
            .collect();
        FillingDiagram { slots }
    }

    /// Number of slots of the given kind strictly between `lo` and `hi` (1-based letters).
    pub fn count_between(&self, lo: usize, hi: usize, kind: Slot) -> usize {
        (lo + 1..hi).filter(|&k| self.slots[k - 1] == kind).count()
    }
}

/// One relocation `l → l*` (or `l → l†`) with the working column before and after.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColumnStep {
    pub from: usize,
    pub to: usize,
    pub before: Column,
    pub after: Column,
    pub diagram: FillingDiagram,
}

fn sort_c(col: &mut [Letter], n: usize) {
    let a = Alphabet::new(LieType::C, n).expect("rank checked by caller");
    a.sort_column(col);
}

fn swap_pairs(col: &Column, n: usize, moves: &[(usize, usize)]) -> (Column, Vec<ColumnStep>) {
    let mut work = col.0.clone();
    let mut steps = Vec::with_capacity(moves.len());
    let mut created = Vec::new();
    for &(from, to) in moves {
        let before = Column(work.clone());
        for m in work.iter_mut() {
            if m.index() == from {
                *m = Letter::new(m.value().signum() * to as i32);
            }
        }
        sort_c(&mut work, n);
        created.push(to);
        steps.push(ColumnStep {
            from,
            to,
            before,
            after: Column(work.clone()),
            diagram: FillingDiagram::of(&work, n, &created),
        });
    }
    (Column(work), steps)
}

fn position(work: &[Letter], v: i32) -> Result<usize> {
    work.iter()
        .position(|m| m.value() == v)
        .ok_or_else(|| Error::Contract(format!("letter {v} missing from working column")))
}

/// One block move of the positional algorithm.
///
/// `down` selects the direction of the unbarred block: for `φ` the block sits above `l`
/// and the new letter goes on top; for `ψ` it sits below and the new letter goes at the bottom.
fn block_move(work: &mut Vec<Letter>, l: usize, target: usize, pending: &[usize], phi: bool) -> Result<()> {
    let (lo, hi) = if target < l { (target, l) } else { (l, target) };
    let inside = |m: Letter| m.index() > lo && m.index() < hi;
    let li = l as i32;
    let t = target as i32;

    // Unbarred side.
    let p = position(work, li)?;
    if phi {
        let mut start = p;
        while start > 0 && work[start - 1].is_unbarred() && inside(work[start - 1]) {
            start -= 1;
        }
        let block: Vec<Letter> = work[start..p].to_vec();
        let (ls, rest): (Vec<Letter>, Vec<Letter>) = block.into_iter().partition(|m| pending.contains(&m.index()));
        let mut new = ls;
        new.push(Letter::new(t));
        new.extend(rest);
        work.splice(start..=p, new);
    } else {
        let mut end = p;
        while end + 1 < work.len() && work[end + 1].is_unbarred() && inside(work[end + 1]) {
            end += 1;
        }
        let block: Vec<Letter> = work[p + 1..=end].to_vec();
        let (ls, rest): (Vec<Letter>, Vec<Letter>) = block.into_iter().partition(|m| pending.contains(&m.index()));
        let mut new = rest;
        new.push(Letter::new(t));
        new.extend(ls);
        work.splice(p..=end, new);
    }

    // Barred side.
    let q = position(work, -li)?;
    if phi {
        let mut end = q;
        while end + 1 < work.len() && work[end + 1].is_barred() && inside(work[end + 1]) {
            end += 1;
        }
        let block: Vec<Letter> = work[q + 1..=end].to_vec();
        let (ls, rest): (Vec<Letter>, Vec<Letter>) = block.into_iter().partition(|m| pending.contains(&m.index()));
        let mut new = rest;
        new.push(Letter::new(-t));
        new.extend(ls);
        work.splice(q..=end, new);
    } else {
        let mut start = q;
        while start > 0 && work[start - 1].is_barred() && inside(work[start - 1]) {
            start -= 1;
        }
        let block: Vec<Letter> = work[start..q].to_vec();
        let (ls, rest): (Vec<Letter>, Vec<Letter>) = block.into_iter().partition(|m| pending.contains(&m.index()));
        let mut new = ls;
        new.push(Letter::new(-t));
        new.extend(rest);
        work.splice(start..=q, new);
    }
    Ok(())
}

fn blocks(col: &Column, n: usize, moves: &[(usize, usize)], phi: bool) -> Result<(Column, Vec<ColumnStep>)> {
    let mut work = col.0.clone();
    let mut steps = Vec::with_capacity(moves.len());
    let mut created = Vec::new();
    let mut pending: Vec<usize> = moves.iter().map(|m| m.0).collect();
    for &(from, to) in moves {
        pending.retain(|&x| x != from);
        let before = Column(work.clone());
        block_move(&mut work, from, to, &pending, phi)?;
        created.push(to);
        steps.push(ColumnStep {
            from,
            to,
            before,
            after: Column(work.clone()),
            diagram: FillingDiagram::of(&work, n, &created),
        });
    }
    let mut sorted = work.clone();
    sort_c(&mut sorted, n);
    if sorted != work {
        return Err(Error::Contract("positional algorithm ended on an unsorted column".into()));
    }
    Ok((Column(work), steps))
}

/// `φ` with the per-pass trace.
pub fn phi_column_traced(col: &Column, n: usize, variant: Variant) -> Result<(Column, Vec<ColumnStep>)> {
    let s = require_admissible(col, n)?;
    let star = s.l_star.ok_or(Error::NotAdmissible)?;
    let moves: Vec<(usize, usize)> = s.l.iter().copied().zip(star).rev().collect();
    match variant {
        Variant::First => Ok(swap_pairs(col, n, &moves)),
        Variant::Second => blocks(col, n, &moves, true),
    }
}

/// `φ`: replace every `L`-pair by its `L*`-pair.
pub fn phi_column(col: &Column, n: usize, variant: Variant) -> Result<Column> {
    phi_column_traced(col, n, variant).map(|r| r.0)
}

/// `ψ` with the per-pass trace.
pub fn psi_column_traced(col: &Column, n: usize, variant: Variant) -> Result<(Column, Vec<ColumnStep>)> {
    let s = require_coadmissible(col, n)?;
    let dag = s.l_dag.ok_or(Error::NotCoadmissible)?;
    let moves: Vec<(usize, usize)> = s.l.iter().copied().zip(dag).collect();
    match variant {
        Variant::First => Ok(swap_pairs(col, n, &moves)),
        Variant::Second => blocks(col, n, &moves, false),
    }
}

/// `ψ`: replace every `L`-pair by its `L†`-pair.
pub fn psi_column(col: &Column, n: usize, variant: Variant) -> Result<Column> {
    psi_column_traced(col, n, variant).map(|r| r.0)
}

/// One stage of `Φ` or `Ψ`: the synthesized column `C^{(x,y)}` before and after the map,
/// and the tableau after the stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauStep {
    pub x: usize,
    pub y: usize,
    pub before: Column,
    pub after: Column,
    pub tableau: Tableau,
}

#[derive(Clone, Copy)]
enum Dir {
    Phi,
    Psi,
}

fn check_letters(t: &Tableau, n: usize) -> Result<()> {
    let a = Alphabet::new(LieType::C, n)?;
    for c in t.columns() {
        for &m in c.entries() {
            a.check_letter(m)?;
        }
    }
    Ok(())
}

fn stage(t: &Tableau, x: usize, y: usize, n: usize, dir: Dir) -> Result<Option<(Tableau, TableauStep)>> {
    let nc = t.num_columns();
    if x == 0 || x > y || y > nc {
        return Err(Error::IndexOutOfRange { x, y, columns: nc });
    }
    check_letters(t, n)?;
    let plus = t.column(y - 1).plus_part().to_vec();
    let minus = t.column(x - 1).minus_part().to_vec();
    let mut synth = plus.clone();
    synth.extend_from_slice(&minus);
    let synth = Column(synth);
    let image = match dir {
        Dir::Phi => {
            if !is_admissible_column(&synth, &Alphabet::new(LieType::C, n)?) {
                return Ok(None);
            }
            phi_column(&synth, n, Variant::Second)?
        }
        Dir::Psi => {
            if !is_coadmissible_column(&synth, n) {
                return Ok(None);
            }
            psi_column(&synth, n, Variant::Second)?
        }
    };
    let k = image.plus_len();
    if k != plus.len() {
        return Err(Error::Contract("column map changed the size of the unbarred part".into()));
    }
    let mut out = t.clone();
    {
        let cols = out.columns_mut();
        let cy = &mut cols[y - 1].0;
        cy.splice(0..plus.len(), image.0[..k].iter().copied());
        let cx = &mut cols[x - 1].0;
        let start = cx.len() - minus.len();
        cx.splice(start.., image.0[k..].iter().copied());
    }
    let step = TableauStep { x, y, before: synth, after: image, tableau: out.clone() };
    Ok(Some((out, step)))
}

/// `φ^{(x,y)}` with 1-based column indices; `None` is the undefined value.
pub fn phi_xy(t: &Tableau, x: usize, y: usize, n: usize) -> Result<Option<Tableau>> {
    Ok(stage(t, x, y, n, Dir::Phi)?.map(|r| r.0))
}

/// `ψ^{(x,y)}` with 1-based column indices; `None` is the undefined value.
pub fn psi_xy(t: &Tableau, x: usize, y: usize, n: usize) -> Result<Option<Tableau>> {
    Ok(stage(t, x, y, n, Dir::Psi)?.map(|r| r.0))
}

/// Stage order of `Φ`: `Φ^{(n_c)}` first; inside `Φ^{(x)}`, `y` runs from `x` up to `n_c`.
pub fn phi_schedule(nc: usize) -> Vec<(usize, usize)> {
    (1..=nc).rev().flat_map(|x| (x..=nc).map(move |y| (x, y))).collect()
}

/// Stage order of `Ψ`: `Ψ^{(1)}` first; inside `Ψ^{(x)}`, `y` runs from `n_c` down to `x`.
pub fn psi_schedule(nc: usize) -> Vec<(usize, usize)> {
    (1..=nc).flat_map(|x| (x..=nc).rev().map(move |y| (x, y))).collect()
}

/// Interleaved order of the stages of `Φ^{(x)} ∘ Φ^{(x+1)}`, alternating between the two columns.
pub fn phi_pair_interleaved(x: usize, nc: usize) -> Vec<(usize, usize)> {
    let mut out = vec![(x, x)];
    for y in x + 1..=nc {
        out.push((x + 1, y));
        out.push((x, y));
    }
    out
}

/// Interleaved order of the stages of `Ψ^{(x)} ∘ Ψ^{(x-1)}`.
pub fn psi_pair_interleaved(x: usize, nc: usize) -> Vec<(usize, usize)> {
    let mut out = vec![(x - 1, nc)];
    for y in (x..=nc).rev() {
        out.push((x, y));
        out.push((x - 1, y - 1));
    }
    out
}

fn run(t: &Tableau, n: usize, schedule: &[(usize, usize)], dir: Dir) -> Result<(Tableau, Vec<TableauStep>)> {
    let mut cur = t.clone();
    let mut steps = Vec::with_capacity(schedule.len());
    for &(x, y) in schedule {
        match stage(&cur, x, y, n, dir)? {
            Some((next, step)) => {
                cur = next;
                steps.push(step);
            }
            None => return Err(Error::Undefined { x, y }),
        }
    }
    Ok((cur, steps))
}

/// Apply `φ^{(x,y)}` stages in the given order; `Error::Undefined` names the failing stage.
pub fn apply_phi_schedule(t: &Tableau, n: usize, schedule: &[(usize, usize)]) -> Result<Tableau> {
    run(t, n, schedule, Dir::Phi).map(|r| r.0)
}

/// Apply `ψ^{(x,y)}` stages in the given order.
pub fn apply_psi_schedule(t: &Tableau, n: usize, schedule: &[(usize, usize)]) -> Result<Tableau> {
    run(t, n, schedule, Dir::Psi).map(|r| r.0)
}

pub fn phi_tableau_traced(t: &Tableau, n: usize) -> Result<(Tableau, Vec<TableauStep>)> {
    run(t, n, &phi_schedule(t.num_columns()), Dir::Phi)
}

pub fn psi_tableau_traced(t: &Tableau, n: usize) -> Result<(Tableau, Vec<TableauStep>)> {
    run(t, n, &psi_schedule(t.num_columns()), Dir::Psi)
}

/// `Φ`. An undefined stage on an admissible tableau is reported as a contract violation.
pub fn phi_tableau(t: &Tableau, n: usize) -> Result<Tableau> {
    match phi_tableau_traced(t, n) {
        Ok((out, _)) => Ok(out),
        Err(Error::Undefined { x, y }) => Err(Error::Contract(format!("phi stage ({x},{y}) undefined"))),
        Err(e) => Err(e),
    }
}

/// `Ψ`. An undefined stage is reported with its `(x, y)`.
pub fn psi_tableau(t: &Tableau, n: usize) -> Result<Tableau> {
    psi_tableau_traced(t, n).map(|r| r.0)
}
