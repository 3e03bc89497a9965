use braceops::hochschild::{brace1, random_cochain, trial_rng, AssocAlgebra, Cochain};
use braceops::prelie::*;
use braceops::surjection::Parity;
use braceops::{Int, Ring};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

fn mixed() -> Alphabet {
    Alphabet::new(vec![Generator::even("a"), Generator::odd("b"), Generator::even("c"), Generator::odd("d")]).unwrap()
}

fn random_tree(rng: &mut ChaCha8Rng, sizes: std::ops::RangeInclusive<usize>, labels: &[u8]) -> Tree {
    let size = rng.gen_range(sizes);
    let mut verts: Vec<(u8, Option<usize>)> = vec![(*labels.choose(rng).unwrap(), None)];
    for i in 1..size {
        verts.push((*labels.choose(rng).unwrap(), Some(rng.gen_range(0..i))));
    }
    fn build(v: usize, verts: &[(u8, Option<usize>)]) -> Tree {
        let kids = (0..verts.len()).filter(|&u| verts[u].1 == Some(v)).map(|u| build(u, verts)).collect();
        Tree::new(verts[v].0, kids)
    }
    build(0, &verts)
}

/// A random homogeneous element of the given parity.
fn random_poly(rng: &mut ChaCha8Rng, alpha: &Alphabet, ring: Ring, parity: Parity) -> TreePoly {
    let mut p = TreePoly::zero(alpha, ring);
    for _ in 0..rng.gen_range(1..=3) {
        loop {
            let t = random_tree(rng, 1..=3, &[0, 1, 2, 3]);
            if t.parity(alpha) == parity {
                p = p.add(&TreePoly::from_tree(alpha, ring, &t, rng.gen_range(-2..=2)).unwrap());
                break;
            }
        }
    }
    p
}

fn odd(p: &TreePoly) -> bool {
    p.parity() == Some(Parity::Odd)
}

fn right_symmetry_defect(a: &TreePoly, b: &TreePoly, c: &TreePoly) -> TreePoly {
    let assoc = |x: &TreePoly, y: &TreePoly, z: &TreePoly| x.graft(y).graft(z).sub(&x.graft(&y.graft(z)));
    let s = if odd(b) && odd(c) { -1 } else { 1 };
    assoc(a, b, c).sub(&assoc(a, c, b).scale(s))
}

fn bracket_insertion_defect(a: &TreePoly, b: &TreePoly, c: &TreePoly) -> TreePoly {
    let s = if odd(b) && odd(c) { -1 } else { 1 };
    let rhs = a.graft(b).graft(c).sub(&a.graft(c).graft(b).scale(s));
    a.graft(&b.bracket(c)).sub(&rhs)
}

#[test]
fn pre_lie_axiom_on_random_elements() {
    let alpha = mixed();
    for t in 0..100 {
        let mut rng = trial_rng(21, t);
        let par = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.5) { Parity::Odd } else { Parity::Even };
        let (pa, pb, pc) = (par(&mut rng), par(&mut rng), par(&mut rng));
        let a = random_poly(&mut rng, &alpha, Ring::Integers, pa);
        let b = random_poly(&mut rng, &alpha, Ring::Integers, pb);
        let c = random_poly(&mut rng, &alpha, Ring::Integers, pc);
        assert!(right_symmetry_defect(&a, &b, &c).is_zero(), "trial {t}");
        assert!(bracket_insertion_defect(&a, &b, &c).is_zero(), "trial {t}");
    }
}

fn all_trees(max: usize, labels: &[u8]) -> Vec<Tree> {
    let mut by_size: Vec<Vec<Tree>> = vec![vec![], labels.iter().map(|&l| Tree::leaf(l)).collect()];
    for n in 2..=max {
        let mut out = Vec::new();
        for t in &by_size[n - 1] {
            for extra in by_size[1].clone() {
                // attach a leaf anywhere
                for v in 0..t.size() {
                    let mut u = t.clone();
                    attach(&mut u, &mut v.clone(), &extra);
                    out.push(u);
                }
            }
        }
        out.sort();
        out.dedup();
        by_size.push(out);
    }
    by_size.concat()
}

fn attach(t: &mut Tree, target: &mut usize, leaf: &Tree) -> bool {
    if *target == 0 {
        t.children.push(leaf.clone());
        return true;
    }
    *target -= 1;
    t.children.iter_mut().any(|c| attach(c, target, leaf))
}

#[test]
fn pre_lie_axiom_on_all_small_monomials() {
    let alpha = Alphabet::new(vec![Generator::even("a"), Generator::odd("b")]).unwrap();
    let trees = all_trees(3, &[0, 1]);
    let polys: Vec<TreePoly> = trees.iter().map(|t| TreePoly::from_tree(&alpha, Ring::Integers, t, 1).unwrap()).filter(|p| !p.is_zero()).collect();
    let mut checked = 0;
    for a in &polys {
        for b in &polys {
            for c in &polys {
                let size = |p: &TreePoly| p.terms().next().unwrap().0.size();
                if size(a) + size(b) + size(c) > 5 {
                    continue;
                }
                assert!(right_symmetry_defect(a, b, c).is_zero());
                assert!(bracket_insertion_defect(a, b, c).is_zero());
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

/// AHU shape string of an unlabeled tree.
fn shape(t: &Tree) -> String {
    let mut kids: Vec<String> = t.children.iter().map(shape).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// `a^[k]` for one even generator counted through recursive trees: vertex
/// `j` attaches to any earlier vertex.
fn recursive_tree_shapes(k: usize) -> BTreeMap<String, i64> {
    let mut out = BTreeMap::new();
    let mut parents = vec![0usize; k];
    fn rec(j: usize, k: usize, parents: &mut Vec<usize>, out: &mut BTreeMap<String, i64>) {
        if j == k {
            fn build(v: usize, parents: &[usize]) -> Tree {
                Tree::new(0, (1..parents.len()).filter(|&u| parents[u] == v && u != v).map(|u| build(u, parents)).collect())
            }
            *out.entry(shape(&build(0, parents))).or_default() += 1;
            return;
        }
        for p in 0..j {
            parents[j] = p;
            rec(j + 1, k, parents, out);
        }
    }
    rec(1, k, &mut parents, &mut out);
    out
}

#[test]
fn left_powers_match_recursive_tree_counts() {
    let alpha = Alphabet::new(vec![Generator::even("a")]).unwrap();
    let a = TreePoly::generator(&alpha, Ring::Integers, "a").unwrap();
    for k in 1..=6 {
        let got: BTreeMap<String, i64> = a.left_power(k).terms().map(|(t, c)| (shape(t), c.as_i64().unwrap())).collect();
        assert_eq!(got, recursive_tree_shapes(k), "k={k}");
    }
    let cube = a.left_power(3);
    assert_eq!(cube.len(), 2);
    assert_eq!(cube.to_string(), "a(a,a) + a(a(a))");
}

#[test]
fn graded_jacobi_and_small_characteristic_relations() {
    for parities in 0..8u32 {
        let gens: Vec<Generator> = (0..3)
            .map(|i| Generator { name: format!("x{i}"), parity: if parities & (1 << i) != 0 { Parity::Odd } else { Parity::Even } })
            .collect();
        let alpha = Alphabet::new(gens).unwrap();
        let g: Vec<TreePoly> = (0..3).map(|i| TreePoly::generator(&alpha, Ring::Integers, &format!("x{i}")).unwrap()).collect();
        assert!(jacobi_sum(&g[0], &g[1], &g[2]).is_zero(), "parities {parities:03b}");
        let sq = g[0].graft(&g[1]);
        assert!(jacobi_sum(&sq, &g[2], &g[0]).is_zero());
    }
    let f2 = Ring::prime_field(2).unwrap();
    let alpha = mixed();
    let gen = |r: Ring, n: &str| TreePoly::generator(&alpha, r, n).unwrap();
    for x in [gen(f2, "a").add(&gen(f2, "c")), gen(f2, "b").add(&gen(f2, "d")), gen(f2, "b")] {
        assert!(x.bracket(&x).is_zero());
    }
    let f3 = Ring::prime_field(3).unwrap();
    let x = gen(f3, "b").add(&gen(f3, "d"));
    assert!(x.bracket(&x).bracket(&x).is_zero());
    // over ℤ the odd self-bracket survives; Jacobi forces 3·[[x,x],x] = 0
    let xz = gen(Ring::Integers, "b").add(&gen(Ring::Integers, "d"));
    assert!(!xz.bracket(&xz).is_zero());
    assert!(xz.bracket(&xz).bracket(&xz).is_zero());
}

fn f2_cochain(arity: usize, seed: u64) -> Cochain {
    let alg = AssocAlgebra::matrices2(Ring::prime_field(2).unwrap());
    random_cochain(&alg, arity, &mut trial_rng(seed, 0))
}

#[test]
fn power_laws_fail_for_trees_but_hold_for_braces() {
    let d = power_law_defect(2, 1, 1, Parity::Even).unwrap();
    assert!(!d.is_zero());
    for (arity, seed) in [(1, 1), (1, 2), (3, 3)] {
        let x = f2_cochain(arity, seed);
        assert!(evaluate(&d, &[x]).unwrap().is_none_or(|c| c.is_zero()));
    }
    assert!(power_law_defect(2, 1, 0, Parity::Even).unwrap().is_zero());
    assert!(power_law_defect(2, 0, 1, Parity::Even).unwrap().is_zero());
    let d = power_law_defect(2, 0, 1, Parity::Odd).unwrap();
    assert!(!d.is_zero());
    for seed in 0..3 {
        let y = f2_cochain(2, seed);
        assert!(evaluate(&d, &[y]).unwrap().is_none_or(|c| c.is_zero()));
    }
}

#[test]
fn restriction_correction_is_one_corolla() {
    for p in [2, 3] {
        let c = restriction_correction(p).unwrap();
        assert_eq!((c.a_vertices, c.b_vertices), (1, p as usize));
        assert_eq!(c.root, "a");
        assert_eq!(c.depth, 2);
        assert_eq!(c.tree, format!("a({})", vec!["b"; p as usize].join(",")));
        assert_eq!(c.coefficient, 1);
    }
    // in a brace algebra the corolla symmetrizes to p!·a{b,…,b} = 0
    let r = Ring::prime_field(3).unwrap();
    let alpha = Alphabet::new(vec![Generator::even("a"), Generator::even("b")]).unwrap();
    let corolla = TreePoly::from_tree(&alpha, r, &parse_tree("a(b,b,b)", &alpha).unwrap(), 1).unwrap();
    let alg = AssocAlgebra::upper_triangular2(r);
    let mut rng = trial_rng(5, 5);
    let vals = [random_cochain(&alg, 3, &mut rng), random_cochain(&alg, 1, &mut rng)];
    assert!(evaluate(&corolla, &vals).unwrap().unwrap().is_zero());
}

#[test]
fn adjoint_expansion_binomial_pattern() {
    for n in 1..=4 {
        let r = adjoint_expansion(n, Ring::Integers).unwrap();
        assert!(r.holds, "N={n}");
        let expect: Vec<i64> = (0..=n).map(|i| (if i % 2 == 1 { -1 } else { 1 }) * binom(n, i)).collect();
        assert_eq!(r.coefficients, expect);
    }
    assert_eq!(adjoint_expansion(2, Ring::Integers).unwrap().coefficients, vec![1, -2, 1]);
    for p in [3u32, 5] {
        let r = adjoint_expansion(p as usize - 1, Ring::prime_field(p).unwrap()).unwrap();
        assert!(r.holds);
        assert!(r.coefficients.iter().all(|&c| c == 1), "{:?}", r.coefficients);
    }
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

#[test]
fn restricted_sum_identity_holds_symbolically() {
    for p in [2, 3] {
        let (l, r) = restricted_sum_sides(p, None).unwrap();
        assert_eq!(l, r, "p={p}");
        for i in 1..p as usize {
            let (l, r) = restricted_sum_sides(p, Some(i)).unwrap();
            assert_ne!(l, r, "p={p} without d_{i}");
        }
    }
    // at p=2 the single correction term is the bracket
    let f2 = Ring::prime_field(2).unwrap();
    let alpha = Alphabet::new(vec![Generator::even("c0"), Generator::even("c1")]).unwrap();
    let c0 = TreePoly::generator(&alpha, f2, "c0").unwrap();
    let c1 = TreePoly::generator(&alpha, f2, "c1").unwrap();
    let (l, _) = restricted_sum_sides(2, None).unwrap();
    assert_eq!(l, c1.left_power(2).add(&c0.left_power(2)).add(&c1.bracket(&c0)));
}

fn xs(n: usize) -> Alphabet {
    Alphabet::new((1..=n).map(|i| Generator::even(&format!("x{i}"))).collect()).unwrap()
}

#[test]
fn vertical_decomposition_matches_direct_brackets() {
    for n in 2..=5 {
        let alpha = xs(n);
        for l in lyndon_brackets(n) {
            let d = vertical_decompose(&l, &alpha, Ring::Integers).unwrap();
            let mut via_words = TreePoly::zero(&alpha, Ring::Integers);
            for (w, c) in d.iter() {
                let mut sorted = w.clone();
                sorted.sort();
                assert_eq!(sorted, (0..n as u8).collect::<Vec<_>>());
                via_words = via_words.add(&left_combed(w, &alpha, Ring::Integers).unwrap().scale_int(c));
            }
            assert_eq!(via_words, lie_image(&l, &alpha, Ring::Integers).unwrap(), "{}", l.render(&alpha));
        }
    }
}

#[test]
fn nested_bracket_example_and_antisymmetry() {
    let alpha = xs(3);
    let l = LieWord::parse("[x1,[x2,x3]]", &alpha).unwrap();
    let d = vertical_decompose(&l, &alpha, Ring::Integers).unwrap();
    let render: Vec<String> = d
        .iter()
        .map(|(w, c)| {
            let names: Vec<&str> = w.iter().map(|&g| alpha.name(g)).collect();
            format!("{}({}∘{})∘{}", if c.is_negative() { "-" } else { "+" }, names[0], names[1], names[2])
        })
        .collect();
    assert_eq!(render, ["+(x1∘x2)∘x3", "-(x1∘x3)∘x2", "-(x2∘x3)∘x1", "+(x3∘x2)∘x1"]);
    let a = vertical_decompose(&LieWord::parse("[x1,x2]", &alpha).unwrap(), &alpha, Ring::Integers).unwrap();
    let b = vertical_decompose(&LieWord::parse("[x2,x1]", &alpha).unwrap(), &alpha, Ring::Integers).unwrap();
    assert_eq!(a, b.neg());
    assert_eq!(a.coeff(&vec![0, 1]), Int::ONE);
}

#[test]
fn free_dimensions() {
    for n in 1..=5 {
        assert_eq!(labeled_tree_count(n), n.pow(n as u32 - 1), "trees on {n} labels");
        assert_eq!(lie_rank(n), (1..n).product::<usize>(), "Lie({n})");
        assert_eq!(lyndon_brackets(n).len(), (1..n).product::<usize>());
    }
}

#[test]
fn evaluation_into_braces_is_a_morphism() {
    let r = Ring::prime_field(5).unwrap();
    let alg = AssocAlgebra::dual_numbers(r);
    let alpha = mixed();
    for t in 0..30 {
        let mut rng = trial_rng(31, t);
        // even |·| ↔ odd arity
        let vals: Vec<Cochain> = [1usize, 2, 1, 2].iter().map(|&m| random_cochain(&alg, m, &mut rng)).collect();
        let x = TreePoly::from_tree(&alpha, r, &random_tree(&mut rng, 1..=3, &[0, 1, 2, 3]), 1).unwrap();
        let y = TreePoly::from_tree(&alpha, r, &random_tree(&mut rng, 1..=2, &[0, 1, 2, 3]), 1).unwrap();
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let ex = evaluate(&x, &vals).unwrap();
        let ey = evaluate(&y, &vals).unwrap();
        let lhs = evaluate(&x.graft(&y), &vals).unwrap();
        match (ex, ey) {
            (Some(ex), Some(ey)) => {
                let rhs = brace1(&ex, &ey);
                assert!(lhs.map_or(rhs.is_zero(), |l| l == rhs), "trial {t}: {x} ∘ {y}");
            }
            _ => assert!(lhs.is_none_or(|l| l.is_zero())),
        }
    }
}

#[test]
fn canonical_form_ignores_child_storage_order() {
    let alpha = mixed();
    for t in 0..50 {
        let mut rng = trial_rng(41, t);
        let tree = random_tree(&mut rng, 2..=6, &[0, 1, 2, 3]);
        let base = TreePoly::from_tree(&alpha, Ring::Integers, &tree, 1).unwrap();
        let other = TreePoly::from_tree(&alpha, Ring::Integers, &random_tree(&mut rng, 2..=2, &[0, 1]), 1).unwrap();
        let mut shuffled = tree.clone();
        shuffle(&mut shuffled, &mut rng);
        let again = TreePoly::from_tree(&alpha, Ring::Integers, &shuffled, 1).unwrap();
        // equal up to the Koszul sign of the reshuffle
        assert!(again == base || again == base.neg());
        let sign = if again == base { 1 } else { -1 };
        assert_eq!(again.graft(&other), base.graft(&other).scale(sign));
    }
}

fn shuffle(t: &mut Tree, rng: &mut ChaCha8Rng) {
    t.children.shuffle(rng);
    for c in &mut t.children {
        shuffle(c, rng);
    }
}

#[test]
fn tree_text_and_json_for_polynomials() {
    let alpha = Alphabet::new(vec![Generator::even("a"), Generator::even("b")]).unwrap();
    let t = parse_tree("a(b,b)", &alpha).unwrap();
    let json = serde_json::to_value(TreeJson::from_tree(&t, &alpha)).unwrap();
    assert_eq!(json["label"], "a");
    assert_eq!(json["children"].as_array().unwrap().len(), 2);
    let alpha_json = serde_json::to_string(&alpha).unwrap();
    assert_eq!(alpha_json, r#"[{"name":"a","parity":"even"},{"name":"b","parity":"even"}]"#);
    let back: Alphabet = serde_json::from_str(&alpha_json).unwrap();
    assert_eq!(back, alpha);
    assert!(serde_json::from_str::<Alphabet>(r#"[{"name":"a","parity":"even"},{"name":"a","parity":"odd"}]"#).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn right_symmetric_associator(seed in any::<u64>()) {
        let alpha = mixed();
        let mut rng = trial_rng(seed, 0);
        let ps: Vec<TreePoly> = (0..3).map(|_| {
            let par = if rng.gen_bool(0.5) { Parity::Odd } else { Parity::Even };
            random_poly(&mut rng, &alpha, Ring::Integers, par)
        }).collect();
        prop_assert!(right_symmetry_defect(&ps[0], &ps[1], &ps[2]).is_zero());
    }

    #[test]
    fn bracket_is_graded_antisymmetric(seed in any::<u64>()) {
        let alpha = mixed();
        let mut rng = trial_rng(seed, 1);
        let pa = if rng.gen_bool(0.5) { Parity::Odd } else { Parity::Even };
        let pb = if rng.gen_bool(0.5) { Parity::Odd } else { Parity::Even };
        let a = random_poly(&mut rng, &alpha, Ring::Integers, pa);
        let b = random_poly(&mut rng, &alpha, Ring::Integers, pb);
        let s = if odd(&a) && odd(&b) { 1 } else { -1 };
        prop_assert_eq!(a.bracket(&b), b.bracket(&a).scale(s));
    }
}

#[test]
fn symbolic_suites_pass() {
    let r = identity_suite().unwrap();
    assert!(r.pass(), "{:?}", r.first_failure());
    assert_eq!(r.checks.len(), 10);
    for p in [2, 3, 5] {
        let r = counterexample_suite(p, 9).unwrap();
        assert!(r.pass(), "p={p}: {:?}", r.first_failure());
    }
    let names: Vec<String> = counterexample_suite(2, 0).unwrap().checks.into_iter().map(|c| c.name).collect();
    assert_eq!(names.len(), 6);
    assert!(counterexample_suite(7, 0).is_err());
}
