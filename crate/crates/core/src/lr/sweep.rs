//! Sweeps over ranges of triples, shared by the CLI and the test suites.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{branching_rhs_with, enumerate_lr_all, is_stable, verify_stable_bd_from, LrTable, StableReport};
use crate::column_maps::{phi_tableau, psi_tableau};
use crate::crystal::decompose_tensor;
use crate::error::Result;
use crate::partition::Partition;
use crate::tableau::{Alphabet, LieType, Tableau};

/// Pairs `(μ, ν)` with `|μ|, |ν| ≤ max_size` and `l(μ) + l(ν) ≤ n`.
pub fn stable_pairs(n: usize, max_size: usize) -> Vec<(Partition, Partition)> {
    let shapes = Partition::up_to_size(max_size, n);
    let mut out = Vec::new();
    for mu in &shapes {
        for nu in &shapes {
            if is_stable(mu, nu, n) {
                out.push((mu.clone(), nu.clone()));
            }
        }
    }
    out
}

/// Keep `k` pairs chosen by a seeded shuffle, or all of them when `k` is `None`.
pub fn sample<T: Clone>(items: &[T], k: Option<usize>, seed: u64) -> Vec<T> {
    match k {
        Some(k) if k < items.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut idx: Vec<usize> = (0..items.len()).collect();
            idx.shuffle(&mut rng);
            let mut idx = idx[..k].to_vec();
            idx.sort_unstable();
            idx.into_iter().map(|i| items[i].clone()).collect()
        }
        _ => items.to_vec(),
    }
}

/// Both sides of the branching identity and the tensor product oracle for one triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub n: usize,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub lhs: u64,
    pub rhs: u64,
    pub oracle: u64,
    /// `Ψ(Φ(T)) = T` with shape and weight preserved, for every element.
    pub roundtrip: bool,
}

impl IdentityRow {
    pub fn ok(&self) -> bool {
        self.lhs == self.rhs && self.lhs == self.oracle && self.roundtrip
    }
}

fn roundtrip_ok(elements: &[Tableau], n: usize) -> bool {
    elements.iter().all(|t| match phi_tableau(t, n) {
        Ok(image) => {
            image.shape() == t.shape()
                && image.weight(n) == t.weight(n)
                && psi_tableau(&image, n).is_ok_and(|back| back == *t)
        }
        Err(_) => false,
    })
}

/// Every `λ` reached by either the LR crystal or the tensor product oracle for `(μ, ν)`.
pub fn identity_rows(n: usize, mu: &Partition, nu: &Partition, check_roundtrip: bool) -> Result<Vec<IdentityRow>> {
    let c = Alphabet::new(LieType::C, n)?;
    let crystals = enumerate_lr_all(&c, mu, nu)?;
    let oracle = decompose_tensor(mu, nu, &c)?;
    let mut lambdas: Vec<Partition> = crystals.keys().chain(oracle.keys()).cloned().collect();
    lambdas.sort();
    lambdas.dedup();
    let mut table = LrTable::default();
    Ok(lambdas
        .into_iter()
        .map(|lambda| {
            let elements = crystals.get(&lambda).map(Vec::as_slice).unwrap_or_default();
            IdentityRow {
                n,
                lhs: elements.len() as u64,
                rhs: branching_rhs_with(&mut table, &lambda, mu, nu, n),
                oracle: oracle.get(&lambda).copied().unwrap_or(0) as u64,
                roundtrip: !check_roundtrip || roundtrip_ok(elements, n),
                lambda,
                mu: mu.clone(),
                nu: nu.clone(),
            }
        })
        .collect())
}

/// Rows for every pair in `pairs` at every rank in `ranks`, sorted.
pub fn identity_sweep(ranks: &[usize], pairs_of: impl Fn(usize) -> Vec<(Partition, Partition)>, check_roundtrip: bool) -> Result<Vec<IdentityRow>> {
    let jobs: Vec<(usize, Partition, Partition)> = ranks
        .iter()
        .flat_map(|&n| pairs_of(n).into_iter().map(move |(mu, nu)| (n, mu, nu)))
        .collect();
    let parts: Vec<Vec<IdentityRow>> = jobs
        .par_iter()
        .map(|(n, mu, nu)| identity_rows(*n, mu, nu, check_roundtrip))
        .collect::<Result<_>>()?;
    let mut rows: Vec<IdentityRow> = parts.into_iter().flatten().collect();
    rows.sort_by(|a, b| (a.n, &a.mu, &a.nu, &a.lambda).cmp(&(b.n, &b.mu, &b.nu, &b.lambda)));
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableRow {
    pub n: usize,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub report: StableReport,
}

/// B, C and D LR crystals compared for every `λ` reachable from `(μ, ν)`.
pub fn stable_rows(n: usize, mu: &Partition, nu: &Partition) -> Result<Vec<StableRow>> {
    let by = |t| -> Result<_> { enumerate_lr_all(&Alphabet::new(t, n)?, mu, nu) };
    let (c, b, d) = (by(LieType::C)?, by(LieType::B)?, by(LieType::D)?);
    let mut lambdas: Vec<&Partition> = c.keys().chain(b.keys()).chain(d.keys()).collect();
    lambdas.sort();
    lambdas.dedup();
    let get = |m: &std::collections::BTreeMap<Partition, Vec<Tableau>>, l: &Partition| m.get(l).cloned().unwrap_or_default();
    Ok(lambdas
        .into_iter()
        .map(|lambda| StableRow {
            n,
            lambda: lambda.clone(),
            mu: mu.clone(),
            nu: nu.clone(),
            report: verify_stable_bd_from(&get(&c, lambda), &get(&b, lambda), &get(&d, lambda), is_stable(mu, nu, n), n),
        })
        .collect())
}

pub fn stable_sweep(ranks: &[usize], pairs_of: impl Fn(usize) -> Vec<(Partition, Partition)>) -> Result<Vec<StableRow>> {
    let jobs: Vec<(usize, Partition, Partition)> = ranks
        .iter()
        .flat_map(|&n| pairs_of(n).into_iter().map(move |(mu, nu)| (n, mu, nu)))
        .collect();
    let parts: Vec<Vec<StableRow>> = jobs.par_iter().map(|(n, mu, nu)| stable_rows(*n, mu, nu)).collect::<Result<_>>()?;
    let mut rows: Vec<StableRow> = parts.into_iter().flatten().collect();
    rows.sort_by(|a, b| (a.n, &a.mu, &a.nu, &a.lambda).cmp(&(b.n, &b.mu, &b.nu, &b.lambda)));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_respect_length_bound() {
        let pairs = stable_pairs(2, 2);
        assert!(pairs.iter().all(|(m, v)| m.len() + v.len() <= 2));
        assert!(pairs.contains(&(Partition::empty(), Partition::new(vec![1, 1]).unwrap())));
    }

    #[test]
    fn sampling_is_reproducible() {
        let v: Vec<usize> = (0..50).collect();
        assert_eq!(sample(&v, Some(5), 7), sample(&v, Some(5), 7));
        assert_eq!(sample(&v, None, 7), v);
    }

    #[test]
    fn small_sweep_agrees() {
        let rows = identity_sweep(&[2], |n| stable_pairs(n, 2), true).unwrap();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(IdentityRow::ok), "{rows:?}");
        let rows = stable_sweep(&[2], |n| stable_pairs(n, 2)).unwrap();
        assert!(rows.iter().all(|r| r.report.ok()), "{rows:?}");
    }
}
