//! One pass/fail line per acceptance criterion, with wall time against its
//! budget. Exits nonzero if any criterion fails.

use braceops::cells::{b2_eps_complex, bockstein_formula, bockstein_formula_inverse_form, eps_top, verify_chain_map, verify_quasi_iso, Coefficients};
use braceops::hochschild::{identity_suite, jacobson_suite, power_law_suite, zeta_bockstein_suite, AssocAlgebra, SuiteReport};
use braceops::prelie::{counterexample_suite, identity_suite as prelie_identities, restriction_correction};
use braceops::surjection::{coinvariant_complex, xi1_chain, zeta1_chain};
use braceops::{bockstein, Ring};
use std::time::{Duration, Instant};

const SEED: u64 = 20240601;

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn twisted_configuration_homology() -> Check {
    for p in [2u32, 3, 5, 7] {
        let h = b2_eps_complex(p as usize, Coefficients::Twisted, Ring::PrimeField(p)).map_err(e)?.homology().map_err(e)?;
        let got = h.nonzero();
        let want = [(p as i64 - 2, 1), (p as i64 - 1, 1)].into_iter().collect();
        ensure(got == want, || format!("p={p}: betti {got:?}"))?;
    }
    Ok(())
}

/// (p−1)!/(i!(p−i)!) mod p by integer arithmetic.
fn binomial_form(p: u64, i: u64) -> u64 {
    let f = |n: u64| (1..=n).product::<u64>();
    f(p - 1) / (f(i) * f(p - i)) % p
}

fn bockstein_of_top_cell() -> Check {
    for p in [3u32, 5, 7] {
        let c = b2_eps_complex(p as usize, Coefficients::Twisted, Ring::Integers).map_err(e)?;
        let b = bockstein(&c, p, &eps_top(p as usize)).map_err(e)?;
        ensure(b == bockstein_formula(p) && b == bockstein_formula_inverse_form(p), || format!("p={p}: {b:?}"))?;
        // cells (i, p−i) sort by i
        let coeffs: Vec<u64> = b.iter().map(|(_, v)| v.rem_euclid_u64(p as u64)).collect();
        let want: Vec<u64> = (1..p as u64).map(|i| binomial_form(p as u64, i)).collect();
        ensure(coeffs == want, || format!("p={p}: coefficients {coeffs:?}, expected {want:?}"))?;
    }
    Ok(())
}

fn inclusion_is_chain_map() -> Check {
    for n in 2..=4 {
        let r = verify_chain_map(n);
        ensure(r.pass, || format!("n={n}: fails on {:?}", r.counterexample))?;
    }
    Ok(())
}

/// Unsigned Stirling numbers of the first kind, c(n, n−d) for d = 0..n.
fn stirling_row(n: usize) -> Vec<usize> {
    let mut row = vec![1usize];
    for m in 0..n {
        // c(m+1, k) = m·c(m, k) + c(m, k−1)
        let mut next = vec![0; row.len() + 1];
        for (k, &v) in row.iter().enumerate() {
            next[k + 1] += v;
            next[k] += m * v;
        }
        row = next;
    }
    // row[k] = c(n, k); degree d holds c(n, n−d)
    (0..n).map(|d| row[n - d]).collect()
}

fn permutation_cells_match_surjections() -> Check {
    let expect = [vec![1], vec![1, 1], vec![1, 3, 2], vec![1, 6, 11, 6]];
    for n in 1..=4 {
        ensure(stirling_row(n) == expect[n - 1], || format!("stirling oracle n={n}: {:?}", stirling_row(n)))?;
        for p in [2u32, 3, 5] {
            let r = verify_quasi_iso(n, p).map_err(e)?;
            ensure(r.pass && r.betti_f2 == expect[n - 1], || format!("n={n} p={p}: {r:?}"))?;
        }
    }
    Ok(())
}

fn coinvariant_homology() -> Check {
    for p in [2u32, 3] {
        let f = Ring::PrimeField(p);
        let c = coinvariant_complex(p as usize, f, true).map_err(e)?;
        let got = c.homology().map_err(e)?.nonzero();
        let want = [(p as i64 - 2, 1), (p as i64 - 1, 1)].into_iter().collect();
        ensure(got == want, || format!("p={p}: betti {got:?}"))?;
        let xi = xi1_chain(p, f).map_err(e)?.project(true);
        let ok = c.is_cycle(&xi).map_err(e)? && !c.is_boundary(&xi).map_err(e)? && c.degree_of(&xi).map_err(e)? == Some(p as i64 - 1);
        ensure(ok, || format!("p={p}: ξ₁ chain is not a nonbounding cycle of degree p−1"))?;
        if p == 3 {
            let z = zeta1_chain(p, f).map_err(e)?.project(true);
            let ok = c.is_cycle(&z).map_err(e)? && !c.is_boundary(&z).map_err(e)? && c.degree_of(&z).map_err(e)? == Some(p as i64 - 2);
            ensure(ok, || "ζ₁ chain is not a nonbounding cycle of degree p−2".into())?;
        }
    }
    Ok(())
}

fn suite_ok(r: SuiteReport) -> Check {
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(format!("{} {} p={}: {} failed: {:?}", r.suite, r.algebra, r.p, c.name, c.witness)),
    }
}

fn hochschild_identity_suites() -> Check {
    for p in [2u32, 3, 5] {
        let f = Ring::PrimeField(p);
        for alg in [AssocAlgebra::dual_numbers(f), AssocAlgebra::matrices2(f), AssocAlgebra::truncated_polynomials(f)] {
            suite_ok(identity_suite(&alg, 100, SEED).map_err(e)?)?;
            suite_ok(jacobson_suite(p, &alg, 100, SEED).map_err(e)?)?;
            if p == 2 {
                suite_ok(power_law_suite(&alg, 100, SEED).map_err(e)?)?;
            }
        }
    }
    Ok(())
}

fn zeta_against_bockstein() -> Check {
    for alg in [AssocAlgebra::upper_triangular2(Ring::Integers), AssocAlgebra::matrices2(Ring::Integers)] {
        suite_ok(zeta_bockstein_suite(&alg, 3, 25, SEED).map_err(e)?)?;
    }
    Ok(())
}

fn prelie_suite() -> Check {
    let r = prelie_identities().map_err(e)?;
    ensure(r.pass(), || format!("{:?}", r.first_failure()))?;
    for p in [2, 3] {
        let r = counterexample_suite(p, SEED).map_err(e)?;
        ensure(r.pass(), || format!("p={p}: {:?}", r.first_failure()))?;
        let c = restriction_correction(p).map_err(e)?;
        ensure(c.a_vertices == 1 && c.b_vertices == p as usize, || format!("p={p}: {c:?}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, u64, fn() -> Check); 8] = [
        ("twisted configuration-space homology, p in {2,3,5,7}", 1, twisted_configuration_homology),
        ("Bockstein of the top cell, p in {3,5,7}", 1, bockstein_of_top_cell),
        ("cell inclusion is a chain map, n <= 4", 10, inclusion_is_chain_map),
        ("permutation cells and surjections: equal Betti numbers, full-rank inclusion", 60, permutation_cells_match_surjections),
        ("coinvariant homology and nonbounding operation cycles, p in {2,3}", 10, coinvariant_homology),
        ("Hochschild identity suites, 100 trials per (algebra, p)", 60, hochschild_identity_suites),
        ("zeta1 = beta(xi1) - ad^(p-1) at p=3, 25 lifted cochains", 30, zeta_against_bockstein),
        ("pre-Lie symbolic suite", 30, prelie_suite),
    ];
    let mut failed = 0;
    for (i, (label, budget, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = f();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*budget);
        let status = if r.is_ok() && !over { "PASS" } else { "FAIL" };
        let mut line = format!("criterion {}: {status} {label} ({:.2}s, budget {budget}s)", i + 1, took.as_secs_f64());
        if let Err(msg) = &r {
            line.push_str(&format!(": {msg}"));
        } else if over {
            line.push_str(": over budget");
        }
        if status == "FAIL" {
            failed += 1;
        }
        println!("{line}");
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
