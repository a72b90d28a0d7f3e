//! Letters, alphabets, columns and (skew) tableaux, with the far-eastern reading and JSON I/O.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl LieType {
    pub fn as_char(self) -> char {
        match self {
            LieType::A => 'A',
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::InvalidAlphabet(format!("unknown type {other:?}"))),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A letter encoded as a signed integer: `k` is `k`, `-k` is `k̄` and `0` is the type B zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(i32);

impl Letter {
    pub const ZERO: Letter = Letter(0);

    pub const fn new(v: i32) -> Self {
        Letter(v)
    }

    pub const fn value(self) -> i32 {
        self.0
    }

    /// `|v|`, the index of the letter.
    pub const fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub const fn is_unbarred(self) -> bool {
        self.0 > 0
    }

    pub const fn is_barred(self) -> bool {
        self.0 < 0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn bar(self) -> Letter {
        Letter(-self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 0 {
            write!(f, "{}\u{0304}", -self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// The ordered alphabet of the vector representation for a type and rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    lie_type: LieType,
    rank: usize,
}

impl Alphabet {
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        let min = if lie_type == LieType::D { 2 } else { 1 };
        if rank < min {
            return Err(Error::InvalidAlphabet(format!("type {lie_type} needs rank at least {min}")));
        }
        if rank > 64 {
            return Err(Error::InvalidAlphabet(format!("rank {rank} is too large")));
        }
        Ok(Alphabet { lie_type, rank })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of Kashiwara operators `e_i`, `f_i`.
    pub fn num_operators(&self) -> usize {
        match self.lie_type {
            LieType::A => self.rank - 1,
            _ => self.rank,
        }
    }

    pub fn contains(&self, m: Letter) -> bool {
        let v = m.value();
        match self.lie_type {
            LieType::A => v >= 1 && v as usize <= self.rank,
            LieType::B => m.index() <= self.rank,
            LieType::C | LieType::D => v != 0 && m.index() <= self.rank,
        }
    }

    pub fn check_letter(&self, m: Letter) -> Result<()> {
        if self.contains(m) {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange {
                letter: m.value(),
                lie_type: self.lie_type.as_char(),
                rank: self.rank,
            })
        }
    }

    /// All letters in increasing order; for type D, `n` precedes `n̄` here.
    pub fn letters(&self) -> Vec<Letter> {
        let n = self.rank as i32;
        let mut out: Vec<Letter> = (1..=n).map(Letter).collect();
        match self.lie_type {
            LieType::A => return out,
            LieType::B => out.push(Letter::ZERO),
            _ => {}
        }
        out.extend((1..=n).rev().map(|k| Letter(-k)));
        out
    }

    /// Position in the chain; in type D, `n` and `n̄` share a level.
    pub fn level(&self, m: Letter) -> usize {
        let n = self.rank;
        let v = m.value();
        match self.lie_type {
            LieType::A | LieType::C => {
                if v > 0 {
                    v as usize
                } else {
                    2 * n + 1 - m.index()
                }
            }
            LieType::B => {
                if v > 0 {
                    v as usize
                } else if v == 0 {
                    n + 1
                } else {
                    2 * n + 2 - m.index()
                }
            }
            LieType::D => {
                if v > 0 {
                    v as usize
                } else if m.index() == n {
                    n
                } else {
                    2 * n + 1 - m.index()
                }
            }
        }
    }

    /// Position in [`Alphabet::letters`]; a total order refining the level order.
    pub fn letter_rank(&self, m: Letter) -> usize {
        let n = self.rank;
        if self.lie_type == LieType::D && m.value() == -(n as i32) {
            return n + 1;
        }
        self.level(m)
    }

    /// Canonical sort key of a tableau: entries column by column, left to right, top to bottom.
    pub fn canonical_key(&self, t: &Tableau) -> Vec<usize> {
        t.columns().iter().flat_map(|c| c.entries().iter().map(|&m| self.letter_rank(m))).collect()
    }

    /// Compare two letters; `None` for the incomparable pair `n`, `n̄` of type D.
    pub fn compare(&self, a: Letter, b: Letter) -> Option<Ordering> {
        if a == b {
            return Some(Ordering::Equal);
        }
        match self.level(a).cmp(&self.level(b)) {
            Ordering::Equal => None,
            o => Some(o),
        }
    }

    /// `a ⪯ b` in the level order (for type D, `n` and `n̄` are mutually weakly below each other).
    pub fn weakly_below(&self, a: Letter, b: Letter) -> bool {
        self.level(a) <= self.level(b)
    }

    /// Allowed vertical neighbours (`upper` directly above `lower`).
    pub fn column_step_ok(&self, upper: Letter, lower: Letter) -> bool {
        if self.level(upper) < self.level(lower) {
            return true;
        }
        match self.lie_type {
            LieType::B => upper.is_zero() && lower.is_zero(),
            LieType::D => {
                let n = self.rank;
                upper != lower && upper.index() == n && lower.index() == n
            }
            _ => false,
        }
    }

    /// Allowed horizontal neighbours (`left` directly left of `right`).
    /// The type D rule forbidding `n` and `n̄` in the same row is checked per row.
    pub fn row_step_ok(&self, left: Letter, right: Letter) -> bool {
        if self.level(left) > self.level(right) {
            return false;
        }
        !(self.lie_type == LieType::B && left.is_zero() && right.is_zero())
    }

    pub fn row_ok(&self, row: &[Letter]) -> bool {
        if !row.windows(2).all(|w| self.row_step_ok(w[0], w[1])) {
            return false;
        }
        if self.lie_type == LieType::D {
            let n = self.rank as i32;
            let has_n = row.iter().any(|m| m.value() == n);
            let has_nbar = row.iter().any(|m| m.value() == -n);
            return !(has_n && has_nbar);
        }
        true
    }

    pub fn column_ok(&self, col: &[Letter]) -> bool {
        col.iter().all(|&m| self.contains(m)) && col.windows(2).all(|w| self.column_step_ok(w[0], w[1]))
    }

    /// Sort letters into a column using the total order of types A, B and C.
    pub fn sort_column(&self, col: &mut [Letter]) {
        col.sort_by_key(|&m| self.level(m));
    }
}

/// A column read top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Column(pub Vec<Letter>);

impl Column {
    pub fn from_values(values: &[i32]) -> Self {
        Column(values.iter().map(|&v| Letter(v)).collect())
    }

    pub fn entries(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> Vec<i32> {
        self.0.iter().map(|m| m.value()).collect()
    }

    /// Number of leading unbarred entries.
    pub fn plus_len(&self) -> usize {
        self.0.iter().take_while(|m| m.is_unbarred()).count()
    }

    pub fn plus_part(&self) -> &[Letter] {
        &self.0[..self.plus_len()]
    }

    pub fn minus_part(&self) -> &[Letter] {
        &self.0[self.plus_len()..]
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v.value())?;
        }
        write!(f, "]")
    }
}

/// A (skew) tableau of shape `shape / inner`, stored column by column.
///
/// Column `x` (0-based) holds the cells of rows `inner'_x .. shape'_x` top to bottom,
/// where `'` denotes the transposed partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    inner: Partition,
    columns: Vec<Column>,
}

impl Tableau {
    pub fn new(shape: Partition, inner: Partition, columns: Vec<Column>) -> Result<Self> {
        if !shape.contains(&inner) {
            return Err(Error::InvalidTableau(format!("inner shape {inner} not inside {shape}")));
        }
        let st = shape.transpose();
        let it = inner.transpose();
        if columns.len() != st.len() {
            return Err(Error::InvalidTableau(format!(
                "expected {} columns, got {}",
                st.len(),
                columns.len()
            )));
        }
        for (x, c) in columns.iter().enumerate() {
            if c.len() != st.part(x) - it.part(x) {
                return Err(Error::InvalidTableau(format!("column {} has wrong length", x + 1)));
            }
        }
        Ok(Tableau { shape, inner, columns })
    }

    pub fn straight(shape: Partition, columns: Vec<Column>) -> Result<Self> {
        Tableau::new(shape, Partition::empty(), columns)
    }

    /// Build from rows; row `i` lists the cells of columns `inner_i .. shape_i`.
    pub fn from_rows(shape: Partition, inner: Partition, rows: &[Vec<Letter>]) -> Result<Self> {
        if rows.len() != shape.len() {
            return Err(Error::InvalidTableau(format!(
                "expected {} rows, got {}",
                shape.len(),
                rows.len()
            )));
        }
        let mut columns = vec![Vec::new(); shape.part(0)];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.part(i) - inner.part(i).min(shape.part(i)) {
                return Err(Error::InvalidTableau(format!("row {} has wrong length", i + 1)));
            }
            for (k, &m) in row.iter().enumerate() {
                columns[inner.part(i) + k].push(m);
            }
        }
        Tableau::new(shape, inner, columns.into_iter().map(Column).collect())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, x: usize) -> &Column {
        &self.columns[x]
    }

    pub(crate) fn columns_mut(&mut self) -> &mut [Column] {
        &mut self.columns
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of filled cells.
    pub fn size(&self) -> usize {
        self.columns.iter().map(Column::len).sum()
    }

    /// Top row index (0-based) of column `x`.
    pub fn column_start(&self, x: usize) -> usize {
        self.inner.transpose().part(x)
    }

    /// Entry at 0-based `(row, col)`, if that cell is filled.
    pub fn entry(&self, row: usize, col: usize) -> Option<Letter> {
        let c = self.columns.get(col)?;
        let start = self.column_start(col);
        row.checked_sub(start).and_then(|k| c.0.get(k)).copied()
    }

    pub fn rows(&self) -> Vec<Vec<Letter>> {
        (0..self.shape.len())
            .map(|i| (self.inner.part(i)..self.shape.part(i)).filter_map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Far-eastern reading: columns right to left, each top to bottom.
    pub fn fe_word(&self) -> Vec<Letter> {
        self.columns.iter().rev().flat_map(|c| c.0.iter().copied()).collect()
    }

    /// Inverse of [`Tableau::fe_word`] for a given skew shape.
    pub fn from_word(shape: &Partition, inner: &Partition, word: &[Letter]) -> Result<Self> {
        if !shape.contains(inner) {
            return Err(Error::InvalidTableau(format!("inner shape {inner} not inside {shape}")));
        }
        if word.len() != shape.size() - inner.size() {
            return Err(Error::InvalidTableau("word length does not match shape".into()));
        }
        let st = shape.transpose();
        let it = inner.transpose();
        let mut columns = vec![Column(Vec::new()); st.len()];
        let mut pos = 0;
        for x in (0..st.len()).rev() {
            let len = st.part(x) - it.part(x);
            columns[x] = Column(word[pos..pos + len].to_vec());
            pos += len;
        }
        Tableau::new(shape.clone(), inner.clone(), columns)
    }

    /// Rows weakly increase and columns strictly increase in the order of `alphabet`.
    pub fn is_semistandard(&self, alphabet: &Alphabet) -> bool {
        self.columns.iter().all(|c| alphabet.column_ok(&c.0)) && self.rows().iter().all(|r| alphabet.row_ok(r))
    }

    /// `wt(T)_i` = number of `i` minus number of `ī`; zero contributes nothing.
    pub fn weight(&self, rank: usize) -> Vec<i64> {
        word_weight(&self.fe_word(), rank)
    }

    pub fn values_by_column(&self) -> Vec<Vec<i32>> {
        self.columns.iter().map(Column::values).collect()
    }

    /// Sub-tableau of unbarred entries (a straight tableau when `self` is semistandard).
    pub fn plus_part(&self) -> Result<Tableau> {
        if !self.is_straight() {
            return Err(Error::InvalidTableau("plus part needs a straight shape".into()));
        }
        let cols: Vec<Column> = self
            .columns
            .iter()
            .map(|c| Column(c.plus_part().to_vec()))
            .filter(|c| !c.is_empty())
            .collect();
        let shape = Partition::new(cols.iter().map(Column::len).collect::<Vec<_>>())?.transpose();
        Tableau::straight(shape, cols)
    }

    /// Skew sub-tableau of barred entries, of shape `shape / shape(plus_part)`.
    pub fn minus_part(&self) -> Result<Tableau> {
        let plus = self.plus_part()?;
        let inner = plus.shape().clone();
        let cols = self.columns.iter().map(|c| Column(c.minus_part().to_vec())).collect();
        Tableau::new(self.shape.clone(), inner, cols)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut cells: Vec<String> = vec![".".to_string(); self.inner.part(i)];
            cells.extend(row.iter().map(|m| m.to_string()));
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn word_weight(word: &[Letter], rank: usize) -> Vec<i64> {
    let mut w = vec![0i64; rank];
    for m in word {
        let v = m.value();
        if v != 0 && m.index() <= rank {
            w[m.index() - 1] += v.signum() as i64;
        }
    }
    w
}

/// JSON document form of a tableau together with its alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauDoc {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub n: usize,
    pub shape: Vec<usize>,
    pub inner: Vec<usize>,
    pub rows: Vec<Vec<i32>>,
}

impl TableauDoc {
    pub fn from_tableau(t: &Tableau, alphabet: &Alphabet) -> Self {
        TableauDoc {
            lie_type: alphabet.lie_type(),
            n: alphabet.rank(),
            shape: t.shape().parts().to_vec(),
            inner: t.inner().parts().to_vec(),
            rows: t.rows().iter().map(|r| r.iter().map(|m| m.value()).collect()).collect(),
        }
    }

    pub fn into_tableau(self) -> Result<(Tableau, Alphabet)> {
        let alphabet = Alphabet::new(self.lie_type, self.n)?;
        let shape = Partition::new(self.shape)?;
        let inner = Partition::new(self.inner)?;
        let rows: Vec<Vec<Letter>> = self.rows.iter().map(|r| r.iter().map(|&v| Letter::new(v)).collect()).collect();
        for m in rows.iter().flatten() {
            alphabet.check_letter(*m)?;
        }
        let t = Tableau::from_rows(shape, inner, &rows)?;
        Ok((t, alphabet))
    }
}

pub fn tableau_to_json(t: &Tableau, alphabet: &Alphabet) -> String {
    serde_json::to_string(&TableauDoc::from_tableau(t, alphabet)).expect("tableau document serializes")
}

pub fn tableau_from_json(s: &str) -> Result<(Tableau, Alphabet)> {
    let doc: TableauDoc = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
    doc.into_tableau()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(v: &[i32]) -> Column {
        Column::from_values(v)
    }

    fn t1() -> Tableau {
        let shape = Partition::new(vec![3, 2, 1, 1]).unwrap();
        Tableau::straight(shape, vec![col(&[2, 3, -4, -3]), col(&[3, 4]), col(&[-2])]).unwrap()
    }

    #[test]
    fn orders() {
        let c = Alphabet::new(LieType::C, 3).unwrap();
        let ls = c.letters();
        assert!(ls.windows(2).all(|w| c.compare(w[0], w[1]) == Some(Ordering::Less)));
        let b = Alphabet::new(LieType::B, 3).unwrap();
        let ls = b.letters();
        assert_eq!(ls[3], Letter::ZERO);
        assert!(ls.windows(2).all(|w| b.compare(w[0], w[1]) == Some(Ordering::Less)));
        let d = Alphabet::new(LieType::D, 3).unwrap();
        assert_eq!(d.compare(Letter::new(3), Letter::new(-3)), None);
        assert_eq!(d.compare(Letter::new(2), Letter::new(-3)), Some(Ordering::Less));
        assert_eq!(d.compare(Letter::new(-3), Letter::new(-2)), Some(Ordering::Less));
        assert!(Alphabet::new(LieType::D, 1).is_err());
    }

    #[test]
    fn type_rules() {
        let b = Alphabet::new(LieType::B, 2).unwrap();
        assert!(b.column_ok(&[Letter::new(1), Letter::ZERO, Letter::ZERO, Letter::new(-1)]));
        assert!(!b.row_ok(&[Letter::ZERO, Letter::ZERO]));
        let d = Alphabet::new(LieType::D, 3).unwrap();
        assert!(d.column_ok(&[Letter::new(3), Letter::new(-3), Letter::new(3)]));
        assert!(!d.column_ok(&[Letter::new(3), Letter::new(3)]));
        assert!(!d.row_ok(&[Letter::new(3), Letter::new(-3)]));
        assert!(d.row_ok(&[Letter::new(3), Letter::new(3)]));
    }

    #[test]
    fn fe_reading_and_inverse() {
        let t = t1();
        let w: Vec<i32> = t.fe_word().iter().map(|m| m.value()).collect();
        assert_eq!(w, vec![-2, 3, 4, 2, 3, -4, -3]);
        let back = Tableau::from_word(t.shape(), t.inner(), &t.fe_word()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn skew_reading_skips_empty_cells() {
        let shape = Partition::new(vec![3, 3, 2]).unwrap();
        let inner = Partition::new(vec![2, 1]).unwrap();
        let rows = vec![vec![Letter::new(-3)], vec![Letter::new(-2), Letter::new(-1)], vec![Letter::new(-3), Letter::new(-1)]];
        let w = Tableau::from_rows(shape, inner, &rows).unwrap();
        let fe: Vec<i32> = w.fe_word().iter().map(|m| m.value()).collect();
        assert_eq!(fe, vec![-3, -1, -2, -1, -3]);
        assert_eq!(w.entry(0, 1), None);
        assert_eq!(w.entry(1, 1), Some(Letter::new(-2)));
    }

    #[test]
    fn json_round_trip() {
        let c4 = Alphabet::new(LieType::C, 4).unwrap();
        let s = tableau_to_json(&t1(), &c4);
        assert_eq!(s, r#"{"type":"C","n":4,"shape":[3,2,1,1],"inner":[],"rows":[[2,3,-2],[3,4],[-4],[-3]]}"#);
        let (t, a) = tableau_from_json(&s).unwrap();
        assert_eq!(t, t1());
        assert_eq!(a, c4);
        assert_eq!(t.weight(4), vec![0, 0, 1, 0]);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(tableau_from_json(r#"{"type":"C","n":2,"shape":[1],"inner":[],"rows":[[3]]}"#).is_err());
        assert!(tableau_from_json(r#"{"type":"C","n":2,"shape":[2],"inner":[],"rows":[[1]]}"#).is_err());
        assert!(tableau_from_json("{").is_err());
    }

    #[test]
    fn plus_minus_parts() {
        let t = t1();
        let p = t.plus_part().unwrap();
        assert_eq!(p.shape().parts(), &[2, 2]);
        let m = t.minus_part().unwrap();
        assert_eq!(m.inner().parts(), &[2, 2]);
        assert_eq!(m.size(), 3);
    }
}
