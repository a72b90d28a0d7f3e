//! Jeu de taquin on skew tableaux in the order `1 ≺ … ≺ n ≺ n̄ ≺ … ≺ 1̄`.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{Letter, Tableau};

/// Which inside corner is slid next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CornerPolicy {
    #[default]
    Topmost,
    Bottommost,
}

fn key(m: Letter) -> i64 {
    let v = m.value() as i64;
    if v > 0 {
        v
    } else {
        1_000_000 + v
    }
}

struct Grid {
    outer: Vec<usize>,
    inner: Vec<usize>,
    cells: Vec<Vec<Option<Letter>>>,
}

impl Grid {
    fn new(t: &Tableau) -> Self {
        let rows = t.shape().len();
        let outer: Vec<usize> = (0..rows).map(|i| t.shape().part(i)).collect();
        let inner: Vec<usize> = (0..rows).map(|i| t.inner().part(i)).collect();
        let cells = (0..rows).map(|i| (0..outer[i]).map(|j| t.entry(i, j)).collect()).collect();
        Grid { outer, inner, cells }
    }

    fn corners(&self) -> Vec<usize> {
        (0..self.inner.len())
            .filter(|&i| self.inner[i] > 0 && self.inner.get(i + 1).copied().unwrap_or(0) < self.inner[i])
            .collect()
    }

    fn filled(&self, i: usize, j: usize) -> Option<Letter> {
        self.cells.get(i).and_then(|r| r.get(j)).copied().flatten()
    }

    fn slide(&mut self, row: usize) {
        let (mut i, mut j) = (row, self.inner[row] - 1);
        self.inner[row] -= 1;
        loop {
            let right = self.filled(i, j + 1);
            let below = self.filled(i + 1, j);
            let down = match (right, below) {
                (None, None) => break,
                (Some(_), None) => false,
                (None, Some(_)) => true,
                (Some(r), Some(b)) => key(b) <= key(r),
            };
            let (ni, nj) = if down { (i + 1, j) } else { (i, j + 1) };
            self.cells[i][j] = self.cells[ni][nj].take();
            i = ni;
            j = nj;
        }
        self.cells[i].truncate(j);
        self.outer[i] = j;
        while self.outer.last() == Some(&0) {
            self.outer.pop();
            self.cells.pop();
        }
    }

    fn to_tableau(&self) -> Result<Tableau> {
        let outer = Partition::new(self.outer.clone())?;
        let inner = Partition::new(self.inner.clone())?;
        let rows: Vec<Vec<Letter>> = self.cells.iter().map(|r| r.iter().flatten().copied().collect()).collect();
        Tableau::from_rows(outer, inner, &rows)
    }
}

fn check(skew: &Tableau) -> Result<()> {
    if skew.columns().iter().flat_map(|c| c.entries()).any(|m| !m.is_barred()) {
        return Err(Error::InvalidTableau("rectification expects barred letters only".into()));
    }
    Ok(())
}

/// Slide a skew tableau step by step; returns every intermediate tableau, starting with the input.
pub fn rectify_traced(skew: &Tableau, policy: CornerPolicy) -> Result<Vec<Tableau>> {
    check(skew)?;
    let mut g = Grid::new(skew);
    let mut out = vec![skew.clone()];
    loop {
        let corners = g.corners();
        let pick = match policy {
            CornerPolicy::Topmost => corners.first(),
            CornerPolicy::Bottommost => corners.last(),
        };
        let Some(&row) = pick else { break };
        g.slide(row);
        out.push(g.to_tableau()?);
    }
    Ok(out)
}

pub fn rectify_with(skew: &Tableau, policy: CornerPolicy) -> Result<Tableau> {
    Ok(rectify_traced(skew, policy)?.pop().expect("trace holds the input"))
}

/// Rectification with the topmost inside corner first.
pub fn rectify(skew: &Tableau) -> Result<Tableau> {
    rectify_with(skew, CornerPolicy::Topmost)
}

/// Semistandard fillings of `outer / inner` with the letters `n̄ ≺ … ≺ 1̄`.
pub fn barred_skew_tableaux(outer: &Partition, inner: &Partition, n: usize) -> Result<Vec<Tableau>> {
    if !outer.contains(inner) {
        return Err(Error::InvalidPartition(format!("{inner} is not inside {outer}")));
    }
    let rows = outer.len();
    let cells: Vec<(usize, usize)> = (0..rows).flat_map(|i| (inner.part(i)..outer.part(i)).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<Option<Letter>>> = (0..rows).map(|i| vec![None; outer.part(i)]).collect();
    let mut out = Vec::new();

    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<Option<Letter>>>,
        n: i32,
        outer: &Partition,
        inner: &Partition,
        out: &mut Vec<Tableau>,
    ) -> Result<()> {
        let Some(&(i, j)) = cells.get(k) else {
            let rows: Vec<Vec<Letter>> = grid.iter().map(|r| r.iter().flatten().copied().collect()).collect();
            out.push(Tableau::from_rows(outer.clone(), inner.clone(), &rows)?);
            return Ok(());
        };
        let left = if j > 0 { grid[i][j - 1] } else { None };
        let above = if i > 0 { grid[i - 1][j] } else { None };
        for v in -n..0 {
            if left.is_some_and(|l| l.value() > v) || above.is_some_and(|a| a.value() >= v) {
                continue;
            }
            grid[i][j] = Some(Letter::new(v));
            rec(k + 1, cells, grid, n, outer, inner, out)?;
        }
        grid[i][j] = None;
        Ok(())
    }
    rec(0, &cells, &mut grid, n as i32, outer, inner, &mut out)?;
    Ok(out)
}
