//! LR crystals of types A, B, C and D, LR coefficients, the branching identity, the fiber
//! structure of `T ↦ (Φ(T)^{(+)}, Rect(Φ(T)^{(−)}))`, and the stable-range comparison of
//! types B, C and D.

pub mod enumerate;
pub mod jdt;
pub mod sweep;

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::column_maps::{phi_tableau, psi_tableau};
use crate::error::{Error, Result};
use crate::partition::{apply_word, Partition, ShapeStep};
use crate::tableau::{Alphabet, LieType, Letter, Tableau, TableauDoc};
use enumerate::{collect, collect_by_end, FillSpec};
pub use jdt::{barred_skew_tableaux, rectify, rectify_traced, rectify_with, CornerPolicy};

/// The set of shape-`ν` KN tableaux whose reading is smooth on `μ` and reaches `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LrCrystal {
    pub alphabet: Alphabet,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub elements: Vec<Tableau>,
}

fn check_shapes(n: usize, shapes: &[&Partition]) -> Result<()> {
    for s in shapes {
        if s.len() > n {
            return Err(Error::InvalidPartition(format!("{s} has more than {n} rows")));
        }
    }
    Ok(())
}

pub fn enumerate_lr(lie_type: LieType, n: usize, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<LrCrystal> {
    let alphabet = Alphabet::new(lie_type, n)?;
    check_shapes(n, &[lambda, mu, nu])?;
    let mut by_end = enumerate_lr_all(&alphabet, mu, nu)?;
    Ok(LrCrystal {
        alphabet,
        lambda: lambda.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        elements: by_end.remove(lambda).unwrap_or_default(),
    })
}

/// LR crystals for every reachable `λ` at once.
pub fn enumerate_lr_all(alphabet: &Alphabet, mu: &Partition, nu: &Partition) -> Result<BTreeMap<Partition, Vec<Tableau>>> {
    check_shapes(alphabet.rank(), &[mu, nu])?;
    collect_by_end(&FillSpec::kn(nu, alphabet).smooth_on(mu))
}

fn lr_rank(lambda: &Partition, mu: &Partition) -> usize {
    lambda.len().max(mu.len()).max(1)
}

fn coefficient_guard(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    mu.size() + nu.size() == lambda.size() && lambda.contains(mu) && lambda.contains(nu)
}

/// Elements of `B^{(+)}(ν)_μ^λ`: unbarred fillings of `ν` smooth on `μ` reaching `λ`.
pub fn plus_crystal(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Vec<Tableau>> {
    if !coefficient_guard(lambda, mu, nu) {
        return Ok(Vec::new());
    }
    let a = Alphabet::new(LieType::A, lr_rank(lambda, mu))?;
    let spec = FillSpec { admissible: false, ..FillSpec::kn(nu, &a) }.smooth_on(mu);
    Ok(collect_by_end(&spec)?.remove(lambda).unwrap_or_default())
}

/// Elements of `B^{(−)}(ν)_λ^μ`: barred fillings of `ν` smooth on `λ` reaching `μ`.
pub fn minus_crystal(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Vec<Tableau>> {
    if !coefficient_guard(lambda, mu, nu) {
        return Ok(Vec::new());
    }
    let a = Alphabet::new(LieType::C, lr_rank(lambda, mu))?;
    let spec = FillSpec { admissible: false, ..FillSpec::kn(nu, &a) }
        .with_letters(|m| m.is_barred())
        .smooth_on(lambda);
    Ok(collect_by_end(&spec)?.remove(mu).unwrap_or_default())
}

/// `c^λ_{μν}` as the size of the unbarred LR crystal. Size mismatches give 0.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    plus_crystal(lambda, mu, nu).map_or(0, |v| v.len() as u64)
}

/// `c^λ_{μν}` through the barred LR crystal.
pub fn lr_coefficient_dual(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    minus_crystal(lambda, mu, nu).map_or(0, |v| v.len() as u64)
}

/// Memoized LR coefficients.
#[derive(Debug, Default)]
pub struct LrTable {
    cache: HashMap<(Partition, Partition, Partition), u64>,
}

impl LrTable {
    pub fn get(&mut self, lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        if !coefficient_guard(lambda, mu, nu) {
            return 0;
        }
        // c is symmetric in μ and ν.
        let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
        let k = (lambda.clone(), a.clone(), b.clone());
        if let Some(&v) = self.cache.get(&k) {
            return v;
        }
        let v = lr_coefficient(lambda, a, b);
        self.cache.insert(k, v);
        v
    }
}

fn intersect(a: &Partition, b: &Partition) -> Partition {
    Partition::new((0..a.len().min(b.len())).map(|i| a.part(i).min(b.part(i))).collect()).expect("meet of partitions")
}

fn subs_of_size(outer: &Partition, size: usize, n: usize) -> Vec<Partition> {
    outer.subpartitions().into_iter().filter(|p| p.size() == size && p.len() <= n).collect()
}

/// `Σ c^λ_{ξζ} c^μ_{ζη} c^ν_{ηξ}` over `ξ, ζ, η` with at most `n` rows.
pub fn branching_rhs_with(table: &mut LrTable, lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> u64 {
    let mut total = 0;
    let ln = intersect(lambda, nu);
    let lm = intersect(lambda, mu);
    let mn = intersect(mu, nu);
    for xi in ln.subpartitions() {
        if xi.len() > n || xi.size() > lambda.size() || nu.size() < xi.size() {
            continue;
        }
        let zeta_size = lambda.size() - xi.size();
        let eta_size = nu.size() - xi.size();
        if zeta_size + eta_size != mu.size() {
            continue;
        }
        for zeta in subs_of_size(&lm, zeta_size, n) {
            let c1 = table.get(lambda, &xi, &zeta);
            if c1 == 0 {
                continue;
            }
            for eta in subs_of_size(&mn, eta_size, n) {
                let c2 = table.get(mu, &zeta, &eta);
                if c2 == 0 {
                    continue;
                }
                total += c1 * c2 * table.get(nu, &eta, &xi);
            }
        }
    }
    total
}

pub fn branching_rhs(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> u64 {
    branching_rhs_with(&mut LrTable::default(), lambda, mu, nu, n)
}

/// Whether `l(μ) + l(ν) ≤ n`.
pub fn is_stable(mu: &Partition, nu: &Partition, n: usize) -> bool {
    mu.len() + nu.len() <= n
}

/// Image of an LR-crystal element under `T ↦ (Φ(T)^{(+)}, Rect(Φ(T)^{(−)}))`, with its shapes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Projection {
    pub xi: Partition,
    pub eta: Partition,
    pub zeta: Partition,
    pub plus: Tableau,
    pub rect_minus: Tableau,
}

fn reach(start: &Partition, word: &[Letter], alphabet: &Alphabet) -> Result<Option<Partition>> {
    Ok(match apply_word(start, word, alphabet)? {
        ShapeStep::Valid(p) => Some(p),
        ShapeStep::Invalid => None,
    })
}

/// Project an element of the type C LR crystal for `(λ, μ)` onto its fiber key.
pub fn phi_projection(t: &Tableau, mu: &Partition, lambda: &Partition, n: usize) -> Result<Projection> {
    let c = Alphabet::new(LieType::C, n)?;
    if reach(mu, &t.fe_word(), &c)?.as_ref() != Some(lambda) {
        return Err(Error::NotSmooth);
    }
    let image = phi_tableau(t, n)?;
    let plus = image.plus_part()?;
    let rect_minus = rectify(&image.minus_part()?)?;
    let zeta = reach(mu, &rect_minus.fe_word(), &c)?
        .ok_or_else(|| Error::Contract("barred part is not smooth on μ".into()))?;
    if reach(&zeta, &plus.fe_word(), &c)?.as_ref() != Some(lambda) {
        return Err(Error::Contract("unbarred part does not carry ζ to λ".into()));
    }
    Ok(Projection {
        xi: plus.shape().clone(),
        eta: rect_minus.shape().clone(),
        zeta,
        plus,
        rect_minus,
    })
}

/// One equivalence class of the LR crystal under equal projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberClass {
    pub key: Projection,
    pub members: Vec<Tableau>,
}

pub fn classify_fibers(crystal: &LrCrystal) -> Result<Vec<FiberClass>> {
    if crystal.alphabet.lie_type() != LieType::C {
        return Err(Error::InvalidAlphabet("fibers are defined for type C".into()));
    }
    let mut groups: BTreeMap<Projection, Vec<Tableau>> = BTreeMap::new();
    for t in &crystal.elements {
        let key = phi_projection(t, &crystal.mu, &crystal.lambda, crystal.alphabet.rank())?;
        groups.entry(key).or_default().push(t.clone());
    }
    let mut out: Vec<FiberClass> = groups.into_iter().map(|(key, members)| FiberClass { key, members }).collect();
    let a = crystal.alphabet;
    out.sort_by_cached_key(|f| {
        (
            f.key.xi.clone(),
            f.key.eta.clone(),
            f.key.zeta.clone(),
            a.canonical_key(&f.key.plus),
            a.canonical_key(&f.key.rect_minus),
        )
    });
    Ok(out)
}

/// Barred fillings of `outer / inner` with the same letters as `content`, semistandard in `≺`.
fn skew_fillings(outer: &Partition, inner: &Partition, content: &[Letter]) -> Result<Vec<Tableau>> {
    let mut letters: Vec<Letter> = content.to_vec();
    letters.sort();
    letters.dedup();
    let mut remaining: BTreeMap<Letter, usize> = BTreeMap::new();
    for &m in content {
        *remaining.entry(m).or_default() += 1;
    }
    let ot = outer.transpose();
    let it = inner.transpose();
    let cells: Vec<(usize, usize)> = (0..ot.len()).rev().flat_map(|x| (it.part(x)..ot.part(x)).map(move |i| (x, i))).collect();
    if cells.len() != content.len() {
        return Ok(Vec::new());
    }
    let mut grid: HashMap<(usize, usize), Letter> = HashMap::new();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        letters: &[Letter],
        remaining: &mut BTreeMap<Letter, usize>,
        grid: &mut HashMap<(usize, usize), Letter>,
        outer: &Partition,
        inner: &Partition,
        out: &mut Vec<Tableau>,
    ) -> Result<()> {
        if k == cells.len() {
            let rows: Vec<Vec<Letter>> = (0..outer.len())
                .map(|i| (inner.part(i)..outer.part(i)).map(|j| grid[&(j, i)]).collect())
                .collect();
            out.push(Tableau::from_rows(outer.clone(), inner.clone(), &rows)?);
            return Ok(());
        }
        let (x, i) = cells[k];
        for &m in letters {
            if remaining[&m] == 0 {
                continue;
            }
            // Barred letters only: value order is the order ≺.
            if i > 0 && grid.get(&(x, i - 1)).is_some_and(|&u| u.value() >= m.value()) {
                continue;
            }
            if grid.get(&(x + 1, i)).is_some_and(|&r| m.value() > r.value()) {
                continue;
            }
            *remaining.get_mut(&m).expect("letter present") -= 1;
            grid.insert((x, i), m);
            rec(k + 1, cells, letters, remaining, grid, outer, inner, out)?;
            grid.remove(&(x, i));
            *remaining.get_mut(&m).expect("letter present") += 1;
        }
        Ok(())
    }
    rec(0, &cells, &letters, &mut remaining, &mut grid, outer, inner, &mut out)?;
    Ok(out)
}

/// Shape-`ν` tableaux with unbarred part `plus` and barred part rectifying to `rect_minus`.
pub fn fiber_fillings(plus: &Tableau, rect_minus: &Tableau, nu: &Partition) -> Result<Vec<Tableau>> {
    if !nu.contains(plus.shape()) {
        return Ok(Vec::new());
    }
    let content: Vec<Letter> = rect_minus.fe_word();
    let mut out = Vec::new();
    for skew in skew_fillings(nu, plus.shape(), &content)? {
        if rectify(&skew)? != *rect_minus {
            continue;
        }
        let cols = (0..nu.part(0))
            .map(|x| {
                let mut c = if x < plus.num_columns() { plus.column(x).0.clone() } else { Vec::new() };
                c.extend_from_slice(skew.column(x).entries());
                crate::tableau::Column(c)
            })
            .collect();
        out.push(Tableau::straight(nu.clone(), cols)?);
    }
    Ok(out)
}

/// `Ψ(filling)`, after checking that `filling` has unbarred part `plus` and barred part
/// rectifying to `rect_minus`.
pub fn psi_reconstruct(plus: &Tableau, rect_minus: &Tableau, nu: &Partition, filling: &Tableau, n: usize) -> Result<Tableau> {
    if filling.shape() != nu || !filling.is_straight() {
        return Err(Error::InvalidTableau("filling must have shape ν".into()));
    }
    if filling.plus_part()? != *plus {
        return Err(Error::InvalidTableau("unbarred part of the filling differs".into()));
    }
    if rectify(&filling.minus_part()?)? != *rect_minus {
        return Err(Error::InvalidTableau("barred part of the filling rectifies elsewhere".into()));
    }
    psi_tableau(filling, n)
}

/// Preimages of a fiber key: `Ψ` of every compatible filling.
pub fn reconstruct_fiber(plus: &Tableau, rect_minus: &Tableau, nu: &Partition, n: usize) -> Result<Vec<Tableau>> {
    fiber_fillings(plus, rect_minus, nu)?
        .iter()
        .map(|f| psi_reconstruct(plus, rect_minus, nu, f, n))
        .collect()
}

/// Comparison of the LR crystals of types B, C and D for one triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableReport {
    pub stable: bool,
    pub size_c: usize,
    pub size_b: usize,
    pub size_d: usize,
    pub equal: bool,
    pub b_zero_free: bool,
    pub d_order_ok: bool,
}

impl StableReport {
    pub fn ok(&self) -> bool {
        self.equal && self.b_zero_free && self.d_order_ok
    }
}

fn value_sets(ts: &[Tableau]) -> Vec<Vec<Vec<i32>>> {
    let mut v: Vec<Vec<Vec<i32>>> = ts.iter().map(Tableau::values_by_column).collect();
    v.sort();
    v
}

/// In the FE reading, no `n̄` precedes an `n`.
fn n_before_nbar(t: &Tableau, n: usize) -> bool {
    let w = t.fe_word();
    let ni = n as i32;
    match w.iter().position(|m| m.value() == -ni) {
        Some(k) => !w[k..].iter().any(|m| m.value() == ni),
        None => true,
    }
}

/// Compare the type B, C and D LR crystals on one triple.
pub fn verify_stable_bd_from(
    c: &[Tableau],
    b: &[Tableau],
    d: &[Tableau],
    stable: bool,
    n: usize,
) -> StableReport {
    let sc = value_sets(c);
    StableReport {
        stable,
        size_c: c.len(),
        size_b: b.len(),
        size_d: d.len(),
        equal: sc == value_sets(b) && sc == value_sets(d),
        b_zero_free: b.iter().all(|t| t.fe_word().iter().all(|m| !m.is_zero())),
        d_order_ok: d.iter().all(|t| n_before_nbar(t, n)),
    }
}

pub fn verify_stable_bd(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<StableReport> {
    let c = enumerate_lr(LieType::C, n, lambda, mu, nu)?;
    let b = enumerate_lr(LieType::B, n, lambda, mu, nu)?;
    let d = enumerate_lr(LieType::D, n, lambda, mu, nu)?;
    Ok(verify_stable_bd_from(&c.elements, &b.elements, &d.elements, is_stable(mu, nu, n), n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberSummary {
    pub xi: Vec<usize>,
    pub eta: Vec<usize>,
    pub zeta: Vec<usize>,
    pub size: usize,
}

/// Report document for one triple: both sides of the branching identity, the fibers and the elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub lhs: u64,
    pub rhs: u64,
    pub fibers: Vec<FiberSummary>,
    pub elements: Vec<TableauDoc>,
}

pub fn report(crystal: &LrCrystal) -> Result<Report> {
    let n = crystal.alphabet.rank();
    let fibers = if crystal.alphabet.lie_type() == LieType::C && is_stable(&crystal.mu, &crystal.nu, n) {
        classify_fibers(crystal)?
            .into_iter()
            .map(|f| FiberSummary {
                xi: f.key.xi.parts().to_vec(),
                eta: f.key.eta.parts().to_vec(),
                zeta: f.key.zeta.parts().to_vec(),
                size: f.members.len(),
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(Report {
        lhs: crystal.elements.len() as u64,
        rhs: branching_rhs(&crystal.lambda, &crystal.mu, &crystal.nu, n),
        fibers,
        elements: crystal.elements.iter().map(|t| TableauDoc::from_tableau(t, &crystal.alphabet)).collect(),
    })
}

/// KN tableaux of shape `λ` for a type and rank; the elements of `B(λ)`.
pub fn crystal_elements(lambda: &Partition, alphabet: &Alphabet) -> Result<Vec<Tableau>> {
    collect(&FillSpec::kn(lambda, alphabet))
}
