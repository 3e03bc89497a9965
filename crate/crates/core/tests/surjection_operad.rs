use braceops::surjection::*;
use braceops::{bockstein, FreeElement, Ring};
use proptest::prelude::*;

const Z: Ring = Ring::Integers;

// Independent enumeration: all words, filtered afterwards.
fn brute_basis(n: usize, deg: usize) -> Vec<Vec<u8>> {
    let len = n + deg;
    let mut out = Vec::new();
    let total = n.pow(len as u32);
    for mut code in 0..total {
        let mut w = Vec::with_capacity(len);
        for _ in 0..len {
            w.push((code % n) as u8 + 1);
            code /= n;
        }
        let surj = (1..=n as u8).all(|v| w.contains(&v));
        let nondeg = w.windows(2).all(|p| p[0] != p[1]);
        let mut cx = 0;
        for i in 1..=n as u8 {
            for j in i + 1..=n as u8 {
                let sub: Vec<u8> = w.iter().copied().filter(|&x| x == i || x == j).collect();
                let mut collapsed = sub.clone();
                collapsed.dedup();
                cx = cx.max(collapsed.len().saturating_sub(1));
            }
        }
        if surj && nondeg && cx <= 2 {
            out.push(w);
        }
    }
    out.sort();
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=4 {
        for d in 0..n {
            let fast: Vec<Vec<u8>> = basis(n, d).iter().map(|u| u.seq().to_vec()).collect();
            assert_eq!(fast, brute_basis(n, d), "n={n} d={d}");
        }
    }
}

fn catalan(n: usize) -> usize {
    let mut c = 1usize;
    for i in 0..n {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

#[test]
fn top_degree_dimension_is_factorial_times_catalan() {
    for n in 1..=5 {
        let fact: usize = (1..=n).product();
        assert_eq!(basis(n, n - 1).len(), fact * catalan(n - 1), "n={n}");
    }
    assert!(basis(3, 3).is_empty());
}

#[test]
fn d_squared_vanishes_up_to_arity_five() {
    for n in 1..=5 {
        for d in 0..n {
            for u in basis(n, d) {
                let c = OperadChain::basis(u.clone(), Z);
                assert!(c.differential().differential().is_zero(), "{u}");
            }
        }
    }
}

#[test]
fn complexes_verify() {
    for n in 1..=4 {
        assert!(s2_complex(n, Z).unwrap().verify().unwrap());
        assert!(coinvariant_complex(n, Z, true).unwrap().verify().unwrap());
        assert!(coinvariant_complex(n, Z, false).unwrap().verify().unwrap());
    }
}

#[test]
fn orbits_are_free() {
    for d in 0..3 {
        for u in basis(3, d) {
            let mut orbit = std::collections::BTreeSet::new();
            for sigma in [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]] {
                orbit.insert(sn_act(&u, &sigma));
            }
            assert_eq!(orbit.len(), 6);
        }
    }
}

#[test]
fn coinvariant_dimensions_divide() {
    for n in 1..=4 {
        let fact: usize = (1..=n).product();
        let full = s2_complex(n, Z).unwrap();
        let co = coinvariant_complex(n, Z, true).unwrap();
        for d in 0..n as i64 {
            assert_eq!(co.dim(d) * fact, full.dim(d));
        }
    }
}

#[test]
fn coinvariant_homology_with_sign_coefficients() {
    let h2 = coinvariant_complex(2, Ring::PrimeField(2), true).unwrap().homology().unwrap();
    assert_eq!(h2.betti_vec(), vec![1, 1]);
    let h3 = coinvariant_complex(3, Ring::PrimeField(3), true).unwrap().homology().unwrap();
    assert_eq!(h3.betti_vec(), vec![0, 1, 1]);
}

fn all_basis(max_n: usize) -> Vec<Surjection> {
    let mut v = Vec::new();
    for n in 1..=max_n {
        for d in 0..n {
            v.extend(basis(n, d));
        }
    }
    v
}

fn deg(c: &OperadChain) -> usize {
    c.degree().unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn differential_is_a_derivation(a in 0usize..1000, b in 0usize..1000, slot in 0usize..4) {
        let pool = all_basis(3);
        let u = &pool[a % pool.len()];
        let v = &pool[b % pool.len()];
        let i = slot % u.arity() + 1;
        let x = OperadChain::basis(u.clone(), Z);
        let y = OperadChain::basis(v.clone(), Z);
        let lhs = x.compose(i, &y).differential();
        let s = if deg(&x) % 2 == 0 { 1 } else { -1 };
        let rhs = x.differential().compose(i, &y).add(&x.compose(i, &y.differential()).scale(s));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sequential_composition_is_associative(a in 0usize..1000, b in 0usize..1000, c in 0usize..1000, s1 in 0usize..4, s2 in 0usize..4) {
        let pool = all_basis(2);
        let x = OperadChain::basis(pool[a % pool.len()].clone(), Z);
        let y = OperadChain::basis(pool[b % pool.len()].clone(), Z);
        let z = OperadChain::basis(pool[c % pool.len()].clone(), Z);
        let i = s1 % x.arity() + 1;
        let j = s2 % y.arity() + 1;
        let lhs = x.compose(i, &y).compose(i + j - 1, &z);
        let rhs = x.compose(i, &y.compose(j, &z));
        prop_assert_eq!(lhs, rhs);
    }
}

fn shuffle_parity(i: &[u8], j: &[u8]) -> bool {
    let w: Vec<u8> = i.iter().chain(j).copied().collect();
    perm_sign(&w) == -1
}

#[test]
fn differential_of_brace_monomial_splits_into_cups() {
    for n in 2..=5usize {
        let lhs = brace_monomial(n, Z).differential();
        let mut rhs = OperadChain::zero(n, Z);
        for mask in 1..(1u32 << n) - 1 {
            let i: Vec<u8> = (1..=n as u8).filter(|v| mask & (1 << (v - 1)) != 0).collect();
            let j: Vec<u8> = (1..=n as u8).filter(|v| mask & (1 << (v - 1)) == 0).collect();
            let k = i.len();
            let l = n - k;
            let q = cup_chains(&brace_monomial(k, Z), &brace_monomial(l, Z)).scale(if (k - 1) * (l - 1) % 2 == 0 { 1 } else { -1 });
            let labels: Vec<u8> = i.iter().chain(&j).copied().collect();
            let sgn = (shuffle_parity(&i, &j) as usize + k + 1) % 2;
            rhs = rhs.add(&q.relabel(&labels).scale(if sgn == 0 { 1 } else { -1 }));
        }
        assert_eq!(lhs, rhs, "n={n}");
    }
}

#[test]
fn xi1_projects_to_a_nonbounding_cycle() {
    for p in [2u32, 3] {
        let f = Ring::PrimeField(p);
        let c = coinvariant_complex(p as usize, f, true).unwrap();
        let xi = xi1_chain(p, f).unwrap().project(true);
        assert!(c.is_cycle(&xi).unwrap());
        assert!(!c.is_boundary(&xi).unwrap());
        assert_eq!(c.degree_of(&xi).unwrap(), Some(p as i64 - 1));
    }
}

#[test]
fn zeta1_projects_to_a_nonbounding_cycle() {
    let f = Ring::PrimeField(3);
    let c = coinvariant_complex(3, f, true).unwrap();
    let z = zeta1_chain(3, f).unwrap().project(true);
    assert!(c.is_cycle(&z).unwrap());
    assert!(!c.is_boundary(&z).unwrap());
    assert_eq!(c.degree_of(&z).unwrap(), Some(1));
}

#[test]
fn bockstein_of_xi1_is_zeta1_exactly() {
    for p in [3u32, 5] {
        let cz = coinvariant_complex(p as usize, Z, true).unwrap();
        let xi = xi1_chain(p, Z).unwrap().project(true);
        let dxi = cz.apply(&xi).unwrap();
        let y: FreeElement<Surjection> = FreeElement::from_terms(Z, dxi.iter().map(|(k, c)| (k.clone(), c.div_exact(p as i64).unwrap())));
        let zeta = zeta1_chain(p, Z).unwrap().project(true);
        assert_eq!(y, zeta, "p={p}");
        let fp = Ring::PrimeField(p);
        assert_eq!(bockstein(&cz, p, &xi).unwrap(), zeta.change_ring(fp));
        // another lift changes β by a boundary only
        let b = bockstein(&cz, p, &xi.change_ring(fp)).unwrap();
        let cp = coinvariant_complex(p as usize, fp, true).unwrap();
        assert!(cp.is_boundary(&b.sub(&zeta.change_ring(fp))).unwrap());
        assert!(cp.is_cycle(&b).unwrap());
    }
}
