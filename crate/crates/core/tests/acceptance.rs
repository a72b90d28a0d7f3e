//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use kncrystal::admissibility::{is_admissible_column, is_admissible_tableau, is_coadmissible_column};
use kncrystal::column_maps::{phi_column, psi_column, Variant};
use kncrystal::crystal::{apply_tableau, apply_word, coroot_pairing, Op};
use kncrystal::lr::enumerate::kn_tableaux;
use kncrystal::lr::sweep::{identity_sweep, stable_pairs, stable_sweep};
use kncrystal::lr::{
    barred_skew_tableaux, branching_rhs, classify_fibers, enumerate_lr, rectify_traced, CornerPolicy,
};
use kncrystal::partition::is_smooth;
use kncrystal::tableau::word_weight;
use kncrystal::{Alphabet, Column, LieType, Letter, Partition, Tableau};

type Check = Result<String, String>;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn rows(shape: &[usize], r: &[&[i32]]) -> Tableau {
    let r: Vec<Vec<Letter>> = r.iter().map(|x| x.iter().map(|&v| Letter::new(v)).collect()).collect();
    Tableau::from_rows(p(shape), Partition::empty(), &r).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let (lambda, mu, nu) = (p(&[3, 3, 1]), p(&[3, 3]), p(&[3, 2, 1, 1]));
    let crystal = enumerate_lr(LieType::C, 6, &lambda, &mu, &nu).map_err(|e| e.to_string())?;
    let shape = [3, 2, 1, 1];
    let t1 = rows(&shape, &[&[2, 3, -2], &[3, 4], &[-4], &[-3]]);
    let t2 = rows(&shape, &[&[2, 3, 3], &[4, -2], &[-4], &[-3]]);
    let t3 = rows(&shape, &[&[2, 3, -2], &[3, -3], &[4], &[-4]]);
    let t4 = rows(&shape, &[&[1, 3, -2], &[2, -1], &[4], &[-4]]);
    let mut expected = vec![t1, t2, t3, t4];
    let a = crystal.alphabet;
    expected.sort_by_key(|t| a.canonical_key(t));
    ensure(crystal.elements == expected, || format!("elements differ: got {} tableaux", crystal.elements.len()))?;
    let rhs = branching_rhs(&lambda, &mu, &nu, 6);
    ensure(rhs == 4, || format!("rhs = {rhs}"))?;
    let fibers = classify_fibers(&crystal).map_err(|e| e.to_string())?;
    let mut sizes: Vec<usize> = fibers.iter().map(|f| f.members.len()).collect();
    sizes.sort_unstable();
    ensure(sizes == [1, 1, 2], || format!("fiber sizes {sizes:?}"))?;
    let e21 = p(&[2, 1]);
    ensure(fibers.iter().all(|f| f.key.zeta == e21 && f.key.eta == e21), || "ζ or η differs from (2,1)".into())?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("4 elements, rhs 4, fibers {sizes:?} in {:.0?}", start.elapsed()))
}

fn criterion_2() -> Check {
    let cases = [
        (7, vec![2, 5, 6, 7, -7, -5, -4], vec![1, 2, 3, 6, -4, -3, -1], Variant::First),
        (7, vec![2, 5, 6, 7, -7, -5, -4], vec![1, 2, 3, 6, -4, -3, -1], Variant::Second),
        (9, vec![4, 7, 8, 9, -9, -8, -7, -2, -1], vec![3, 4, 5, 6, -6, -5, -3, -2, -1], Variant::Second),
    ];
    for (n, input, expected, v) in cases {
        let c = Column::from_values(&input);
        let out = phi_column(&c, n, v).map_err(|e| e.to_string())?;
        ensure(out.values() == expected, || format!("φ{input:?} = {:?}", out.values()))?;
        let back = psi_column(&out, n, v).map_err(|e| e.to_string())?;
        ensure(back == c, || format!("ψ{expected:?} = {:?}", back.values()))?;
    }
    Ok("both columns".into())
}

fn criterion_3_and_5() -> (Check, Check) {
    let start = Instant::now();
    let rows = match identity_sweep(&[3, 4, 5], |n| stable_pairs(n, 4), true) {
        Ok(r) => r,
        Err(e) => return (Err(e.to_string()), Err(e.to_string())),
    };
    let took = start.elapsed();
    let bad3: Vec<_> = rows.iter().filter(|r| !(r.lhs == r.rhs && r.lhs == r.oracle)).collect();
    let bad5 = rows.iter().filter(|r| !r.roundtrip).count();
    let elements: u64 = rows.iter().map(|r| r.lhs).sum();
    let c3 = if bad3.is_empty() {
        Ok(format!("{} triples, 0 mismatches in {took:.1?}", rows.len()))
    } else {
        let r = bad3[0];
        Err(format!(
            "{} mismatches, first n={} λ={} μ={} ν={}: d={} rhs={} tensor={}",
            bad3.len(),
            r.n,
            r.lambda,
            r.mu,
            r.nu,
            r.lhs,
            r.rhs,
            r.oracle
        ))
    };
    let c5 = if bad5 == 0 {
        Ok(format!("{elements} elements, Ψ∘Φ = id"))
    } else {
        Err(format!("{bad5} triples with a roundtrip failure"))
    };
    (c3, c5)
}

/// Strictly increasing columns of length `len` in the order `1 < … < n < n̄ < … < 1̄`.
fn c_columns(n: usize, len: usize) -> Vec<Column> {
    let letters: Vec<i32> = (1..=n as i32).chain((1..=n as i32).rev().map(|x| -x)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(from: usize, len: usize, letters: &[i32], cur: &mut Vec<i32>, out: &mut Vec<Column>) {
        if cur.len() == len {
            out.push(Column::from_values(cur));
            return;
        }
        for k in from..letters.len() {
            cur.push(letters[k]);
            rec(k + 1, len, letters, cur, out);
            cur.pop();
        }
    }
    rec(0, len, &letters, &mut cur, &mut out);
    out
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let (mut adm, mut coadm) = (0usize, 0usize);
    for n in 1..=5 {
        let c = Alphabet::new(LieType::C, n).unwrap();
        for len in 0..=5 {
            let (mut a_count, mut co_count) = (0, 0);
            for col in c_columns(n, len) {
                if is_admissible_column(&col, &c) {
                    a_count += 1;
                    let first = phi_column(&col, n, Variant::First).map_err(|e| format!("{col}: {e}"))?;
                    let second = phi_column(&col, n, Variant::Second).map_err(|e| format!("{col}: {e}"))?;
                    ensure(first == second, || format!("φ kinds differ on {col}: {first} vs {second}"))?;
                    ensure(is_coadmissible_column(&first, n), || format!("φ({col}) = {first} not coadmissible"))?;
                    let back = psi_column(&first, n, Variant::Second).map_err(|e| e.to_string())?;
                    ensure(back == col, || format!("ψφ({col}) = {back}"))?;
                }
                if is_coadmissible_column(&col, n) {
                    co_count += 1;
                    let first = psi_column(&col, n, Variant::First).map_err(|e| format!("{col}: {e}"))?;
                    let second = psi_column(&col, n, Variant::Second).map_err(|e| format!("{col}: {e}"))?;
                    ensure(first == second, || format!("ψ kinds differ on {col}: {first} vs {second}"))?;
                    ensure(is_admissible_column(&first, &c), || format!("ψ({col}) = {first} not admissible"))?;
                    let back = phi_column(&first, n, Variant::Second).map_err(|e| e.to_string())?;
                    ensure(back == col, || format!("φψ({col}) = {back}"))?;
                }
            }
            ensure(a_count == co_count, || format!("n={n} len={len}: {a_count} admissible, {co_count} coadmissible"))?;
            adm += a_count;
            coadm += co_count;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{adm} admissible and {coadm} coadmissible columns"))
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let rows = stable_sweep(&[3, 4, 5], |n| stable_pairs(n, 4)).map_err(|e| e.to_string())?;
    let bad: Vec<_> = rows.iter().filter(|r| !r.report.ok()).collect();
    if let Some(r) = bad.first() {
        return Err(format!(
            "{} mismatches, first n={} λ={} μ={} ν={}: {:?}",
            bad.len(),
            r.n,
            r.lambda,
            r.mu,
            r.nu,
            r.report
        ));
    }
    Ok(format!("{} triples equal across B, C, D in {:.1?}", rows.len(), start.elapsed()))
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut jobs = Vec::new();
    for outer in Partition::up_to_size(9, 9) {
        for inner in outer.subpartitions() {
            let s = outer.size() - inner.size();
            if (1..=6).contains(&s) {
                jobs.push((outer.clone(), inner));
            }
        }
    }
    let results: Vec<Result<(usize, usize), String>> = jobs
        .par_iter()
        .map(|(outer, inner)| {
            let mut checked = (0, 0);
            for n in 1..=4 {
                if outer.transpose().parts().iter().zip(inner.transpose().parts().iter().chain(std::iter::repeat(&0))).any(|(o, i)| o - i > n) {
                    continue;
                }
                let alph = Alphabet::new(LieType::C, n).unwrap();
                let mus = Partition::up_to_size(6, n);
                for skew in barred_skew_tableaux(outer, inner, n).map_err(|e| e.to_string())? {
                    let top = rectify_traced(&skew, CornerPolicy::Topmost).map_err(|e| e.to_string())?;
                    let bottom = rectify_traced(&skew, CornerPolicy::Bottommost).map_err(|e| e.to_string())?;
                    let (rt, rb) = (top.last().unwrap(), bottom.last().unwrap());
                    ensure(rt == rb && rt.is_straight(), || format!("policies disagree on {skew:?}"))?;
                    checked.0 += 1;
                    for mu in &mus {
                        for trace in [&top, &bottom] {
                            let smooth: Vec<bool> = trace.iter().map(|s| is_smooth(mu, &s.fe_word(), &alph).unwrap()).collect();
                            for w in smooth.windows(2) {
                                ensure(!w[0] || w[1], || format!("smoothness lost on μ={mu} while sliding {skew:?}"))?;
                            }
                            checked.1 += 1;
                        }
                    }
                }
            }
            Ok(checked)
        })
        .collect();
    let (mut tabs, mut pairs) = (0, 0);
    for r in results {
        let (a, b) = r?;
        tabs += a;
        pairs += b;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{tabs} skew tableaux, {pairs} slide sequences against μ in {:.1?}", start.elapsed()))
}

/// `(ε_i, φ_i)` by iterating the operators, as in the definition of a crystal.
fn iterated(op_len: impl Fn(Op) -> usize) -> (usize, usize) {
    (op_len(Op::E), op_len(Op::F))
}

fn tableau_stats(i: usize, t: &Tableau, a: &Alphabet) -> (usize, usize) {
    iterated(|op| {
        let mut k = 0;
        let mut cur = t.clone();
        while let Some(next) = apply_tableau(op, i, &cur, a).unwrap() {
            cur = next;
            k += 1;
        }
        k
    })
}

fn word_stats(i: usize, w: &[Letter], a: &Alphabet) -> (usize, usize) {
    iterated(|op| {
        let mut k = 0;
        let mut cur = w.to_vec();
        while let Some(next) = apply_word(op, i, &cur, a).unwrap() {
            cur = next;
            k += 1;
        }
        k
    })
}

fn simple_root(i: usize, a: &Alphabet) -> Vec<i64> {
    let n = a.rank();
    let mut r = vec![0i64; n];
    if i < n {
        r[i - 1] = 1;
        r[i] = -1;
    } else {
        match a.lie_type() {
            LieType::C => r[n - 1] = 2,
            LieType::B => r[n - 1] = 1,
            LieType::D => {
                r[n - 2] = 1;
                r[n - 1] = 1;
            }
            LieType::A => unreachable!(),
        }
    }
    r
}

fn add(a: &[i64], b: &[i64], sign: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + sign * y).collect()
}

fn tensor_axioms(t1: &Tableau, t2: &Tableau, a: &Alphabet) -> Result<(), String> {
    let n = a.rank();
    let w: Vec<Letter> = t1.fe_word().into_iter().chain(t2.fe_word()).collect();
    let split = |w: &[Letter]| -> Result<(Tableau, Tableau), String> {
        let (w1, w2) = w.split_at(t1.size());
        let u1 = Tableau::from_word(t1.shape(), t1.inner(), w1).map_err(|e| e.to_string())?;
        let u2 = Tableau::from_word(t2.shape(), t2.inner(), w2).map_err(|e| e.to_string())?;
        Ok((u1, u2))
    };
    let wt = word_weight(&w, n);
    for i in 1..=a.num_operators() {
        let (eps, phi) = word_stats(i, &w, a);
        let h = coroot_pairing(i, &wt, a);
        ensure(phi as i64 == eps as i64 + h, || format!("φ ≠ ε + ⟨h, wt⟩ at i={i} on {w:?}"))?;
        let (e1, p1) = tableau_stats(i, t1, a);
        let (e2, p2) = tableau_stats(i, t2, a);
        let h1 = coroot_pairing(i, &t1.weight(n), a);
        let h2 = coroot_pairing(i, &t2.weight(n), a);
        ensure(eps as i64 == (e1 as i64).max(e2 as i64 - h1), || format!("tensor ε at i={i} on {w:?}"))?;
        ensure(phi as i64 == (p1 as i64 + h2).max(p2 as i64), || format!("tensor φ at i={i} on {w:?}"))?;
        let alpha = simple_root(i, a);
        for op in [Op::E, Op::F] {
            let by_rule = match op {
                Op::E if p1 >= e2 => apply_tableau(op, i, t1, a).unwrap().map(|u| (u, t2.clone())),
                Op::E => apply_tableau(op, i, t2, a).unwrap().map(|u| (t1.clone(), u)),
                Op::F if p1 > e2 => apply_tableau(op, i, t1, a).unwrap().map(|u| (u, t2.clone())),
                Op::F => apply_tableau(op, i, t2, a).unwrap().map(|u| (t1.clone(), u)),
            };
            let direct = apply_word(op, i, &w, a).map_err(|e| e.to_string())?;
            let direct_pair = direct.as_deref().map(split).transpose()?;
            ensure(by_rule == direct_pair, || format!("tensor rule for {op:?}_{i} on {w:?}"))?;
            let Some(v) = direct else { continue };
            let (u1, u2) = direct_pair.unwrap();
            ensure(is_admissible_tableau(&u1, a) && is_admissible_tableau(&u2, a), || format!("{op:?}_{i} left B on {w:?}"))?;
            let (eps2, phi2) = word_stats(i, &v, a);
            let (sign, de, dp): (i64, i64, i64) = if op == Op::E { (1, -1, 1) } else { (-1, 1, -1) };
            ensure(word_weight(&v, n) == add(&wt, &alpha, sign), || format!("weight shift for {op:?}_{i} on {w:?}"))?;
            ensure(eps2 as i64 == eps as i64 + de && phi2 as i64 == phi as i64 + dp, || format!("ε/φ shift for {op:?}_{i} on {w:?}"))?;
            let inverse = if op == Op::E { Op::F } else { Op::E };
            ensure(apply_word(inverse, i, &v, a).unwrap().as_deref() == Some(&w[..]), || format!("{op:?}_{i} not inverted on {w:?}"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let mut jobs = Vec::new();
    for t in [LieType::A, LieType::B, LieType::C, LieType::D] {
        for n in 1..=3 {
            let Ok(a) = Alphabet::new(t, n) else { continue };
            for mu in Partition::up_to_size(4, n) {
                for nu in Partition::up_to_size(4 - mu.size(), n) {
                    jobs.push((a, mu.clone(), nu));
                }
            }
        }
    }
    let mut cache: BTreeMap<(LieType, usize, Partition), Vec<Tableau>> = BTreeMap::new();
    for (a, mu, nu) in &jobs {
        for s in [mu, nu] {
            cache
                .entry((a.lie_type(), a.rank(), s.clone()))
                .or_insert_with(|| kn_tableaux(s, a).unwrap());
        }
    }
    let counts: Vec<Result<usize, String>> = jobs
        .par_iter()
        .map(|(a, mu, nu)| {
            let left = &cache[&(a.lie_type(), a.rank(), mu.clone())];
            let right = &cache[&(a.lie_type(), a.rank(), nu.clone())];
            for t1 in left {
                for t2 in right {
                    tensor_axioms(t1, t2, a)?;
                }
            }
            Ok(left.len() * right.len())
        })
        .collect();
    let mut total = 0;
    for c in counts {
        total += c?;
    }
    Ok(format!("{total} tensor elements over {} (type, rank, μ, ν) in {:.1?}", jobs.len(), start.elapsed()))
}

fn main() {
    let (c3, c5) = criterion_3_and_5();
    let results: Vec<(u32, &str, Check)> = vec![
        (1, "LR crystal example", criterion_1()),
        (2, "column goldens", criterion_2()),
        (3, "identity sweep", c3),
        (4, "column bijections", criterion_4()),
        (5, "Φ/Ψ roundtrip", c5),
        (6, "stable B/D = C", criterion_6()),
        (7, "jeu de taquin", criterion_7()),
        (8, "crystal axioms", criterion_8()),
    ];
    let mut failed = 0;
    for (k, name, r) in &results {
        match r {
            Ok(msg) => println!("criterion {k} ({name}): PASS - {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {k} ({name}): FAIL - {msg}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
