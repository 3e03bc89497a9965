//! Deterministic symbolic suites over free pre-Lie algebras, reported in the
//! same pass/fail shape as the cochain suites.

use super::identities::{adjoint_expansion, evaluate, jacobi_sum, labeled_tree_count, power_law_defect, restricted_sum_sides, restriction_correction};
use super::lie::{lie_image, lie_rank, left_combed, lyndon_brackets, render_combed, vertical_decompose, LieWord};
use super::{parse_tree, Alphabet, Generator, TreePoly};
use crate::error::{Error, Result};
use crate::hochschild::{random_cochain, trial_rng, AssocAlgebra, Cochain};
use crate::ring::{binom_int, Ring};
use crate::surjection::Parity;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicReport {
    pub suite: String,
    pub p: Option<u32>,
    pub checks: Vec<SymbolicCheck>,
}

impl SymbolicReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&SymbolicCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

fn check(name: &str, pass: bool, detail: String) -> SymbolicCheck {
    SymbolicCheck { name: name.into(), pass, detail }
}

/// Collects the first failure message of a list of sub-checks.
fn all_of(name: &str, items: impl IntoIterator<Item = (bool, String)>) -> SymbolicCheck {
    let mut count = 0;
    for (ok, what) in items {
        if !ok {
            return check(name, false, what);
        }
        count += 1;
    }
    check(name, true, format!("{count} cases"))
}

fn mixed() -> Alphabet {
    Alphabet::new(vec![Generator::even("a"), Generator::odd("b"), Generator::even("c"), Generator::odd("d")]).expect("valid")
}

/// Single generators and sums of two distinct generators of equal parity.
fn homogeneous_samples(alpha: &Alphabet, ring: Ring) -> Vec<TreePoly> {
    let n = alpha.len();
    let gens: Vec<TreePoly> = (0..n).map(|i| TreePoly::generator(alpha, ring, alpha.name(i as u8)).unwrap()).collect();
    let mut out = gens.clone();
    for i in 0..n {
        for j in i + 1..n {
            if alpha.is_odd(i as u8) == alpha.is_odd(j as u8) {
                out.push(gens[i].add(&gens[j]));
            }
        }
    }
    out
}

/// Identities that hold in every pre-Lie algebra, checked on free ones, plus
/// the dimension and vertical-basis computations.
pub fn identity_suite() -> Result<SymbolicReport> {
    let mut checks = Vec::new();

    checks.push(all_of(
        "graded-jacobi",
        (0..8u32).map(|parities| {
            let gens: Vec<Generator> = (0..3)
                .map(|i| Generator { name: format!("x{i}"), parity: if parities & (1 << i) != 0 { Parity::Odd } else { Parity::Even } })
                .collect();
            let alpha = Alphabet::new(gens).unwrap();
            let g: Vec<TreePoly> = (0..3).map(|i| TreePoly::generator(&alpha, Ring::Integers, &format!("x{i}")).unwrap()).collect();
            let j = jacobi_sum(&g[0], &g[1], &g[2]);
            let j2 = jacobi_sum(&g[0].graft(&g[1]), &g[2], &g[0]);
            (j.is_zero() && j2.is_zero(), format!("parities {parities:03b}: {j} / {j2}"))
        }),
    ));

    let alpha = mixed();
    let f2 = Ring::prime_field(2)?;
    checks.push(all_of(
        "self-bracket-char-2",
        homogeneous_samples(&alpha, f2).into_iter().map(|x| {
            let s = x.bracket(&x);
            (s.is_zero(), format!("[x,x] = {s} for x = {x}"))
        }),
    ));
    let f3 = Ring::prime_field(3)?;
    checks.push(all_of(
        "triple-bracket-char-3",
        homogeneous_samples(&alpha, f3).into_iter().map(|x| {
            let s = x.bracket(&x).bracket(&x);
            (s.is_zero(), format!("[[x,x],x] = {s} for x = {x}"))
        }),
    ));

    let mut adj = Vec::new();
    for n in 1..=4 {
        let r = adjoint_expansion(n, Ring::Integers)?;
        let expect: Vec<i64> = (0..=n as u64).map(|i| (if i % 2 == 1 { -binom_int(n as u64, i) } else { binom_int(n as u64, i) }).as_i64().unwrap()).collect();
        adj.push((r.holds && r.coefficients == expect, format!("N={n} over Z: holds={} coefficients {:?}", r.holds, r.coefficients)));
    }
    for p in [3u32, 5] {
        let r = adjoint_expansion(p as usize - 1, Ring::prime_field(p)?)?;
        adj.push((r.holds && r.coefficients.iter().all(|&c| c == 1), format!("N={} mod {p}: holds={} coefficients {:?}", p - 1, r.holds, r.coefficients)));
    }
    checks.push(all_of("adjoint-expansion", adj));

    let mut sums = Vec::new();
    for p in [2u32, 3] {
        let (l, r) = restricted_sum_sides(p, None)?;
        sums.push((l == r, format!("p={p}: difference {}", l.sub(&r))));
    }
    checks.push(all_of("restricted-sum", sums));
    let mut needed = Vec::new();
    for p in [2u32, 3] {
        for i in 1..p as usize {
            let (l, r) = restricted_sum_sides(p, Some(i))?;
            needed.push((l != r, format!("p={p}: the identity survives dropping term {i}")));
        }
    }
    checks.push(all_of("restricted-sum-terms-needed", needed));

    let xs = |n: usize| Alphabet::new((1..=n).map(|i| Generator::even(&format!("x{i}"))).collect()).unwrap();
    let al3 = xs(3);
    let example = LieWord::parse("[x1,[x2,x3]]", &al3)?;
    let rendered = render_combed(&vertical_decompose(&example, &al3, Ring::Integers)?, &al3);
    let expect = ["+(x1∘x2)∘x3", "-(x1∘x3)∘x2", "-(x2∘x3)∘x1", "+(x3∘x2)∘x1"];
    checks.push(check("vertical-basis-example", rendered == expect, format!("[x1,[x2,x3]] = {}", rendered.join(" "))));

    let mut vd = Vec::new();
    for n in 2..=5 {
        let al = xs(n);
        for l in lyndon_brackets(n) {
            let d = vertical_decompose(&l, &al, Ring::Integers)?;
            let mut via = TreePoly::zero(&al, Ring::Integers);
            for (w, c) in d.iter() {
                via = via.add(&left_combed(w, &al, Ring::Integers)?.scale_int(c));
            }
            vd.push((via == lie_image(&l, &al, Ring::Integers)?, format!("{}", l.render(&al))));
        }
    }
    checks.push(all_of("vertical-decomposition", vd));

    checks.push(all_of(
        "labeled-tree-count",
        (1..=5usize).map(|n| {
            let c = labeled_tree_count(n);
            (c == n.pow(n as u32 - 1), format!("n={n}: {c} trees"))
        }),
    ));
    checks.push(all_of(
        "lie-dimension",
        (1..=5usize).map(|n| {
            let r = lie_rank(n);
            (r == (1..n).product::<usize>(), format!("n={n}: rank {r}"))
        }),
    ));
    Ok(SymbolicReport { suite: "prelie".into(), p: None, checks })
}

fn image_vanishes(poly: &TreePoly, values: &[Cochain]) -> Result<bool> {
    Ok(evaluate(poly, values)?.is_none_or(|c| c.is_zero()))
}

/// Relations that fail in free pre-Lie algebras over 𝔽_p while holding for
/// braces: each defect must be nonzero as a tree polynomial and vanish on
/// seeded Hochschild cochains. The power-law checks apply at `p = 2` only.
pub fn counterexample_suite(p: u32, seed: u64) -> Result<SymbolicReport> {
    let ring = Ring::prime_field(p)?;
    if p > 5 {
        return Err(Error::OutOfRange(format!("p={p}; the restriction defect is computed for p ≤ 5")));
    }
    let algs = [AssocAlgebra::dual_numbers(ring), AssocAlgebra::upper_triangular2(ring), AssocAlgebra::matrices2(ring)];
    let mut checks = Vec::new();
    if p == 2 {
        for (name, parity, k, l, arities) in [("power-law-even", Parity::Even, 1, 1, [1usize, 3]), ("power-law-odd", Parity::Odd, 0, 1, [2, 2])] {
            let d = power_law_defect(p, k, l, parity)?;
            checks.push(check(&format!("{name}-nonzero"), !d.is_zero(), format!("({k},{l}) defect: {d}")));
            let mut cases = Vec::new();
            for (ai, alg) in algs.iter().enumerate() {
                for (t, &m) in arities.iter().enumerate() {
                    if alg.dim() > 2 && m > 1 {
                        continue;
                    }
                    let x = random_cochain(alg, m, &mut trial_rng(seed, (ai * 2 + t) as u64));
                    cases.push((image_vanishes(&d, &[x])?, format!("defect survives on arity-{m} cochain, algebra {ai}, seed {seed}")));
                }
            }
            checks.push(all_of(&format!("{name}-brace-image"), cases));
        }
    }
    let c = restriction_correction(p)?;
    let shape_ok = c.root == "a" && c.a_vertices == 1 && c.b_vertices == p as usize && c.coefficient.abs() == 1;
    checks.push(check("restriction-defect-monomial", shape_ok, format!("{}·{}", c.coefficient, c.tree)));
    let alpha = Alphabet::new(vec![Generator::even("a"), Generator::even("b")])?;
    let tree = TreePoly::from_tree(&alpha, ring, &parse_tree(&c.tree, &alpha)?, c.coefficient)?;
    let mut cases = Vec::new();
    for (ai, alg) in algs.iter().enumerate() {
        let mut rng = trial_rng(seed, 100 + ai as u64);
        let ma = if alg.dim() > 2 { 1 } else { 3 };
        let vals = [random_cochain(alg, ma, &mut rng), random_cochain(alg, 1, &mut rng)];
        cases.push((image_vanishes(&tree, &vals)?, format!("defect survives on algebra {ai}, seed {seed}")));
    }
    checks.push(all_of("restriction-defect-brace-image", cases));
    Ok(SymbolicReport { suite: "prelie-counterexamples".into(), p: Some(p), checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counterexamples_at_three() {
        let r = counterexample_suite(3, 1).unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(r.checks.len(), 2);
    }
}
