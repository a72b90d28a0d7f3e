//! KN-admissibility of columns and tableaux, coadmissibility, and the splitting letters.

use crate::error::{Error, Result};
use crate::tableau::{Alphabet, Column, LieType, Letter, Tableau};

/// Letters of a type C column relevant to splitting.
///
/// `i_set` holds the unbarred letters, `j_set` the indices of barred letters, and `l` their
/// intersection in increasing order. `l_star` / `l_dag` are the replacement letters for `l`
/// when they exist. `n_star` pairs each `l` with the number of entries `x` with `l ⪯ x ⪯ l̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitData {
    pub i_set: Vec<usize>,
    pub j_set: Vec<usize>,
    pub l: Vec<usize>,
    pub l_star: Option<Vec<usize>>,
    pub l_dag: Option<Vec<usize>>,
    pub n_star: Vec<(usize, usize)>,
}

/// Compute `I`, `J`, `L`, `L*`, `L†` and `N*` for a type C column of rank `n`.
pub fn split_letters(col: &Column, n: usize) -> Result<SplitData> {
    let alphabet = Alphabet::new(LieType::C, n)?;
    for &m in col.entries() {
        alphabet.check_letter(m)?;
    }
    let i_set: Vec<usize> = sorted(col.entries().iter().filter(|m| m.is_unbarred()).map(|m| m.index()));
    let j_set: Vec<usize> = sorted(col.entries().iter().filter(|m| m.is_barred()).map(|m| m.index()));
    let l: Vec<usize> = i_set.iter().copied().filter(|x| j_set.contains(x)).collect();
    let used = |x: usize| i_set.contains(&x) || j_set.contains(&x);

    let mut star = vec![0usize; l.len()];
    let mut ok = true;
    for k in (0..l.len()).rev() {
        match (1..l[k]).rev().find(|&x| !used(x) && !star[k + 1..].contains(&x)) {
            Some(x) => star[k] = x,
            None => {
                ok = false;
                break;
            }
        }
    }
    let l_star = ok.then_some(star);

    let mut dag = vec![0usize; l.len()];
    let mut ok = true;
    for k in 0..l.len() {
        match (l[k] + 1..=n).find(|&x| !used(x) && !dag[..k].contains(&x)) {
            Some(x) => dag[k] = x,
            None => {
                ok = false;
                break;
            }
        }
    }
    let l_dag = ok.then_some(dag);

    let n_star = l
        .iter()
        .map(|&x| (x, col.entries().iter().filter(|m| m.index() >= x).count()))
        .collect();
    Ok(SplitData { i_set, j_set, l, l_star, l_dag, n_star })
}

fn sorted(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    v.sort_unstable();
    v
}

/// One-column condition for types C, B and D, in the general form over every
/// unbarred `a` at `p` and barred `b̄` at `q > p`: `(q - p) + max(a, b) > N`.
pub fn column_condition_general(col: &[Letter]) -> bool {
    let len = col.len();
    for p in 0..len {
        if !col[p].is_unbarred() {
            continue;
        }
        for q in p + 1..len {
            if col[q].is_barred() && (q - p) + col[p].index().max(col[q].index()) <= len {
                return false;
            }
        }
    }
    true
}

/// One-column condition restricted to pairs `i` at `p`, `ī` at `q`: `(q - p) + i > N`.
pub fn column_condition_pairs(col: &[Letter]) -> bool {
    let len = col.len();
    for p in 0..len {
        if !col[p].is_unbarred() {
            continue;
        }
        if let Some(q) = (p + 1..len).find(|&q| col[q] == col[p].bar()) {
            if (q - p) + col[p].index() <= len {
                return false;
            }
        }
    }
    true
}

/// Which full-length column conventions of type D a column (or tableau) satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DConventions {
    pub plus: bool,
    pub minus: bool,
}

impl DConventions {
    pub const BOTH: DConventions = DConventions { plus: true, minus: true };

    pub fn and(self, other: DConventions) -> DConventions {
        DConventions { plus: self.plus && other.plus, minus: self.minus && other.minus }
    }

    pub fn any(self) -> bool {
        self.plus || self.minus
    }
}

/// Parity pattern of `n` / `n̄` in a column of rank `n`. Columns shorter than `n` satisfy both.
pub fn d_parity(col: &[Letter], n: usize) -> DConventions {
    if col.len() != n {
        return DConventions::BOTH;
    }
    let mut out = DConventions::BOTH;
    for (idx, m) in col.iter().enumerate() {
        if m.index() != n {
            continue;
        }
        let k = idx + 1;
        let even = (n - k).is_multiple_of(2);
        // T+ wants n at even n-k and n̄ at odd n-k; T- the opposite.
        let plus_ok = if m.is_unbarred() { even } else { !even };
        out.plus &= plus_ok;
        out.minus &= !plus_ok;
    }
    out
}

/// Single-column admissibility (the one-column condition plus semistandardness).
/// For type D the parity pattern is also required to match at least one convention.
pub fn is_admissible_column(col: &Column, alphabet: &Alphabet) -> bool {
    let c = col.entries();
    if !alphabet.column_ok(c) || c.len() > alphabet.rank() {
        return false;
    }
    one_column_ok(c, alphabet) && (alphabet.lie_type() != LieType::D || d_parity(c, alphabet.rank()).any())
}

/// `N*(l) ≤ n - l + 1` for every `l ∈ L`.
pub fn is_coadmissible_column(col: &Column, n: usize) -> bool {
    let alphabet = match Alphabet::new(LieType::C, n) {
        Ok(a) => a,
        Err(_) => return false,
    };
    if !alphabet.column_ok(col.entries()) {
        return false;
    }
    match split_letters(col, n) {
        Ok(s) => s.n_star.iter().all(|&(l, cnt)| cnt + l <= n + 1),
        Err(_) => false,
    }
}

/// The one-column condition of the alphabet's type, without the type D parity test.
pub(crate) fn one_column_ok(c: &[Letter], alphabet: &Alphabet) -> bool {
    match alphabet.lie_type() {
        LieType::A => true,
        LieType::C => column_condition_general(c),
        LieType::B | LieType::D => column_condition_pairs(c),
    }
}

/// Two-column condition for type C in the general form with `a1 ≤ b1`, `a2 ≤ b2`.
pub fn c2_general(left: &[Letter], right: &[Letter]) -> bool {
    two_column_scan(left, right, |a1, b1, b2, a2| (b1.max(b2), a1.min(a2)))
}

/// Two-column condition of type C restricted to `a1 = a2`, `b1 = b2`.
pub fn c2_classic(left: &[Letter], right: &[Letter]) -> bool {
    classic_pairs(left, right, usize::MAX - 1)
}

/// Two-column condition in the form with `a1 = a2 = a`, `b1 = b2 = b` and `b < bound`.
fn classic_pairs(left: &[Letter], right: &[Letter], bound: usize) -> bool {
    two_column_scan(left, right, |a1, b1, b2, a2| {
        if a1 == a2 && b1 == b2 && b1 < bound {
            (b1, a1)
        } else {
            (usize::MAX, 0)
        }
    })
}

/// Scan both configurations of the two-column conditions.
///
/// `bounds(a1, b1, b2, a2)` returns `(hi, lo)` and the constraint is
/// `(q - p) + (s - r) < hi - lo`. Returning `hi = usize::MAX` disables the check.
fn two_column_scan(left: &[Letter], right: &[Letter], bounds: impl Fn(usize, usize, usize, usize) -> (usize, usize)) -> bool {
    let check = |p: usize, q: usize, r: usize, s: usize, a1: Letter, b1: Letter, b2: Letter, a2: Letter| -> bool {
        if !(a1.is_unbarred() && b1.is_unbarred() && b2.is_barred() && a2.is_barred()) {
            return true;
        }
        let (a1, b1, b2, a2) = (a1.index(), b1.index(), b2.index(), a2.index());
        if a1 > b1 || a2 > b2 {
            return true;
        }
        let (hi, lo) = bounds(a1, b1, b2, a2);
        if hi == usize::MAX {
            return true;
        }
        (q - p) + (s - r) + lo < hi
    };
    for p in 0..left.len() {
        if !left[p].is_unbarred() {
            continue;
        }
        // a1 at p in the left column; b1, b̄2, ā2 in the right column.
        for q in p..right.len() {
            for r in q + 1..right.len() {
                for s in r..right.len() {
                    if !check(p, q, r, s, left[p], right[q], right[r], right[s]) {
                        return false;
                    }
                }
            }
        }
        // a1, b1, b̄2 in the left column; ā2 in the right column.
        for q in p..left.len() {
            for r in q + 1..left.len() {
                for s in r..right.len() {
                    if !check(p, q, r, s, left[p], left[q], left[r], right[s]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn b3_ok(left: &[Letter], right: &[Letter], n: usize) -> bool {
    let ni = n as i32;
    let middle = |x: Letter, y: Letter| {
        matches!((x.value(), y.value()), (u, v) if (u == ni && v == -ni) || (u == ni && v == 0) || (u == 0 && v == 0) || (u == 0 && v == -ni))
    };
    for p in 0..left.len() {
        let a = left[p];
        if !a.is_unbarred() || a.index() >= n {
            continue;
        }
        for s in p..right.len() {
            if right[s] != a.bar() {
                continue;
            }
            let bad = s.checked_sub(p + 1).is_some_and(|d| d >= n - a.index());
            if !bad {
                continue;
            }
            // Middle pair at rows q, q+1 with p ≤ q and q+1 ≤ s, in either column.
            for q in p..s {
                if q + 1 < right.len() && middle(right[q], right[q + 1]) {
                    return false;
                }
                if q + 1 < left.len() && middle(left[q], left[q + 1]) {
                    return false;
                }
            }
        }
    }
    true
}

fn b4_ok(left: &[Letter], right: &[Letter], n: usize) -> bool {
    let ni = n as i32;
    for p in 0..left.len() {
        for s in p + 1..right.len() {
            let pair = (left[p].value(), right[s].value());
            if pair == (ni, -ni) || pair == (ni, 0) || pair == (0, 0) || pair == (0, -ni) {
                return false;
            }
        }
    }
    true
}

fn d5_ok(left: &[Letter], right: &[Letter], n: usize) -> bool {
    let middle = |x: Letter, y: Letter| x.index() == n && y.index() == n && x != y;
    for p in 0..left.len() {
        let a = left[p];
        if !a.is_unbarred() || a.index() >= n {
            continue;
        }
        for s in p..right.len() {
            if right[s] != a.bar() {
                continue;
            }
            let bad = s.checked_sub(p + 1).is_some_and(|d| d >= n - a.index());
            if !bad {
                continue;
            }
            for q in p..s {
                if q + 1 < right.len() && middle(right[q], right[q + 1]) {
                    return false;
                }
                if q + 1 < left.len() && middle(left[q], left[q + 1]) {
                    return false;
                }
            }
        }
    }
    true
}

fn d6_ok(left: &[Letter], right: &[Letter], n: usize) -> bool {
    for p in 0..left.len() {
        for s in p + 1..right.len() {
            if left[p].index() == n && right[s].index() == n {
                return false;
            }
        }
    }
    true
}

fn d7_ok(left: &[Letter], right: &[Letter], n: usize) -> bool {
    for p in 0..left.len() {
        let a = left[p];
        if !a.is_unbarred() || a.index() >= n {
            continue;
        }
        for s in p..right.len() {
            if right[s] != a.bar() || s - p < n - a.index() {
                continue;
            }
            for q in p..right.len() {
                if right[q].index() != n {
                    continue;
                }
                for r in q + 1..=s.min(left.len().saturating_sub(1)) {
                    if left[r].index() != n {
                        continue;
                    }
                    let odd = (r - q + 1) % 2 == 1;
                    let same = left[r] == right[q];
                    // Odd gap: left and right carry opposite signs; even gap: the same sign.
                    if odd != same {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Conditions on a pair of adjacent columns of a straight tableau.
pub fn adjacent_columns_ok(left: &[Letter], right: &[Letter], alphabet: &Alphabet) -> bool {
    let n = alphabet.rank();
    match alphabet.lie_type() {
        LieType::A => true,
        LieType::C => c2_general(left, right),
        LieType::B => classic_pairs(left, right, n) && b3_ok(left, right, n) && b4_ok(left, right, n),
        LieType::D => {
            classic_pairs(left, right, n) && d5_ok(left, right, n) && d6_ok(left, right, n) && d7_ok(left, right, n)
        }
    }
}

/// Outcome of the tableau-level check. For type D, `conventions` records which of the
/// two full-column parity conventions hold across all full-length columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub conventions: Option<DConventions>,
}

pub fn admissibility(t: &Tableau, alphabet: &Alphabet) -> AdmissibilityReport {
    let fail = AdmissibilityReport { admissible: false, conventions: None };
    if !t.is_straight() || t.shape().len() > alphabet.rank() || !t.is_semistandard(alphabet) {
        return fail;
    }
    let cols = t.columns();
    if !cols.iter().all(|c| one_column_ok(c.entries(), alphabet)) {
        return fail;
    }
    if !cols.windows(2).all(|w| adjacent_columns_ok(w[0].entries(), w[1].entries(), alphabet)) {
        return fail;
    }
    if alphabet.lie_type() == LieType::D {
        let conv = cols
            .iter()
            .map(|c| d_parity(c.entries(), alphabet.rank()))
            .fold(DConventions::BOTH, DConventions::and);
        return AdmissibilityReport { admissible: conv.any(), conventions: Some(conv) };
    }
    AdmissibilityReport { admissible: true, conventions: None }
}

pub fn is_admissible_tableau(t: &Tableau, alphabet: &Alphabet) -> bool {
    admissibility(t, alphabet).admissible
}

/// Error unless `col` is an admissible type C column.
pub(crate) fn require_admissible(col: &Column, n: usize) -> Result<SplitData> {
    let a = Alphabet::new(LieType::C, n)?;
    if !is_admissible_column(col, &a) {
        return Err(Error::NotAdmissible);
    }
    split_letters(col, n)
}

/// Error unless `col` is a coadmissible type C column.
pub(crate) fn require_coadmissible(col: &Column, n: usize) -> Result<SplitData> {
    if !is_coadmissible_column(col, n) {
        return Err(Error::NotCoadmissible);
    }
    split_letters(col, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(v: &[i32]) -> Column {
        Column::from_values(v)
    }

    fn c(n: usize) -> Alphabet {
        Alphabet::new(LieType::C, n).unwrap()
    }

    #[test]
    fn split_letters_small_example() {
        let s = split_letters(&col(&[2, 5, 6, 7, -7, -5, -4]), 7).unwrap();
        assert_eq!(s.l, vec![5, 7]);
        assert_eq!(s.l_star, Some(vec![1, 3]));
        assert_eq!(s.l_dag, None);
    }

    #[test]
    fn split_letters_large_example() {
        let s = split_letters(&col(&[4, 7, 8, 9, -9, -8, -7, -2, -1]), 9).unwrap();
        assert_eq!(s.l, vec![7, 8, 9]);
        assert_eq!(s.l_star, Some(vec![3, 5, 6]));
    }

    #[test]
    fn no_barred_letters_always_split() {
        let s = split_letters(&col(&[1, 2, 3]), 3).unwrap();
        assert!(s.l.is_empty());
        assert_eq!(s.l_star, Some(vec![]));
        assert!(is_admissible_column(&col(&[1, 2, 3]), &c(3)));
    }

    #[test]
    fn smallest_violations() {
        assert!(!is_admissible_column(&col(&[1, -1]), &c(1)));
        assert!(!is_coadmissible_column(&col(&[1, -1]), 1));
        assert!(is_admissible_column(&col(&[2, -2]), &c(2)));
        assert!(is_admissible_column(&col(&[-1]), &c(1)));
    }

    #[test]
    fn d_parity_small() {
        let l = |v: &[i32]| v.iter().map(|&x| Letter::new(x)).collect::<Vec<_>>();
        assert_eq!(d_parity(&l(&[1, 2]), 2), DConventions { plus: true, minus: false });
        assert_eq!(d_parity(&l(&[1, -2]), 2), DConventions { plus: false, minus: true });
        assert_eq!(d_parity(&l(&[-2, 2]), 2), DConventions { plus: true, minus: false });
        assert_eq!(d_parity(&l(&[2, -2]), 2), DConventions { plus: false, minus: true });
        assert_eq!(d_parity(&l(&[2]), 2), DConventions::BOTH);
    }
}
