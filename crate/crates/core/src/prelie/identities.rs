//! Symbolic identity checks in free pre-Lie algebras and evaluation into
//! Hochschild cochains.

use super::{canonicalize, Alphabet, Generator, Tree, TreePoly};
use crate::error::{Error, Result};
use crate::hochschild::{brace_opt, Cochain};
use crate::ring::{binom_int, inv_mod, Ring};
use crate::surjection::Parity;
use serde::Serialize;
use std::collections::BTreeSet;

fn odd(p: &TreePoly) -> bool {
    p.parity() == Some(Parity::Odd)
}

/// (−1)^{|a₁||a₃|}[[a₁,a₂],a₃] + cyclic.
pub fn jacobi_sum(a1: &TreePoly, a2: &TreePoly, a3: &TreePoly) -> TreePoly {
    let s = |x: &TreePoly, y: &TreePoly| if odd(x) && odd(y) { -1 } else { 1 };
    a1.bracket(a2).bracket(a3).scale(s(a1, a3))
        .add(&a2.bracket(a3).bracket(a1).scale(s(a2, a1)))
        .add(&a3.bracket(a1).bracket(a2).scale(s(a3, a2)))
}

fn ad_pow(y: &TreePoly, x: &TreePoly, k: usize) -> TreePoly {
    let mut r = y.clone();
    for _ in 0..k {
        r = r.bracket(x);
    }
    r
}

/// `(a^[p^k])^[p^l] − a^[p^{k+l}]` for one even generator `a`, or
/// `(b^[2p^k])^[p^l] − b^[2p^{k+l}]` for one odd generator `b`, over 𝔽_p.
pub fn power_law_defect(p: u32, k: u32, l: u32, parity: Parity) -> Result<TreePoly> {
    let ring = Ring::prime_field(p)?;
    let base = if parity == Parity::Odd { 2 } else { 1 };
    let inner = base * (p as usize).pow(k);
    let outer = (p as usize).pow(l);
    if inner * outer > 16 {
        return Err(Error::OutOfRange(format!("power {} exceeds 16", inner * outer)));
    }
    let gen = Generator { name: if parity == Parity::Odd { "b" } else { "a" }.into(), parity };
    let alpha = Alphabet::new(vec![gen.clone()])?;
    let x = TreePoly::generator(&alpha, ring, &gen.name)?;
    Ok(x.left_power(inner).left_power(outer).sub(&x.left_power(inner * outer)))
}

/// The single tree by which `[a,b^[p]]` falls short of `[⋯[a,b],⋯,b]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Correction {
    pub p: u32,
    /// The tree in text form, root first.
    pub tree: String,
    /// Coefficient of the tree in `[⋯[a,b],⋯,b] − [a,b^[p]]`, balanced.
    pub coefficient: i64,
    pub root: String,
    pub a_vertices: usize,
    pub b_vertices: usize,
    pub depth: usize,
}

pub fn restriction_correction(p: u32) -> Result<Correction> {
    let ring = Ring::prime_field(p)?;
    let alpha = Alphabet::new(vec![Generator::even("a"), Generator::even("b")])?;
    let a = TreePoly::generator(&alpha, ring, "a")?;
    let b = TreePoly::generator(&alpha, ring, "b")?;
    let delta = ad_pow(&a, &b, p as usize).sub(&a.bracket(&b.left_power(p as usize)));
    if delta.len() != 1 {
        return Err(Error::Invalid(format!("difference has {} terms: {delta}", delta.len())));
    }
    let (t, c) = delta.terms().next().unwrap();
    Ok(Correction {
        p,
        tree: super::render_tree(t, &alpha),
        coefficient: ring.balanced(c).as_i64().unwrap(),
        root: alpha.name(t.label).into(),
        a_vertices: t.count_label(0),
        b_vertices: t.count_label(1),
        depth: t.depth(),
    })
}

/// Both sides of `(c₁+c₀)^[p] = c₁^[p] + c₀^[p] + Σ d_i(c₁,c₀)` for even
/// generators over 𝔽_p; `skip` omits one `d_i`.
pub fn restricted_sum_sides(p: u32, skip: Option<usize>) -> Result<(TreePoly, TreePoly)> {
    let ring = Ring::prime_field(p)?;
    let alpha = Alphabet::new(vec![Generator::even("c0"), Generator::even("c1")])?;
    let c0 = TreePoly::generator(&alpha, ring, "c0")?;
    let c1 = TreePoly::generator(&alpha, ring, "c1")?;
    let pp = p as usize;
    let lhs = c1.add(&c0).left_power(pp);
    let mut rhs = c1.left_power(pp).add(&c0.left_power(pp));
    let base = c1.bracket(&c0);
    let mut sums = vec![TreePoly::zero(&alpha, ring); pp];
    for eps in 0u32..1 << pp.saturating_sub(2) {
        let mut t = base.clone();
        for k in 0..pp.saturating_sub(2) {
            t = t.bracket(if eps & (1 << k) != 0 { &c1 } else { &c0 });
        }
        let i = eps.count_ones() as usize + 1;
        sums[i] = sums[i].add(&t);
    }
    for (i, s) in sums.iter().enumerate().skip(1) {
        if Some(i) != skip {
            rhs = rhs.add(&s.scale(inv_mod(i as u64, p as u64) as i64));
        }
    }
    Ok((lhs, rhs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjointExpansion {
    pub n: usize,
    /// `(−1)^i·C(N,i)` reduced in the ring, for `i = 0..=N`.
    pub coefficients: Vec<i64>,
    pub holds: bool,
}

/// `[⋯[[a,b],b]⋯,b]` (`N` brackets) against
/// `Σ_i (−1)^i C(N,i) (⋯((b^[i]∘a)∘b)⋯)∘b` with `N − i` trailing factors,
/// where `b^[0]∘a` reads as `a`.
pub fn adjoint_expansion(n: usize, ring: Ring) -> Result<AdjointExpansion> {
    let alpha = Alphabet::new(vec![Generator::even("a"), Generator::even("b")])?;
    let a = TreePoly::generator(&alpha, ring, "a")?;
    let b = TreePoly::generator(&alpha, ring, "b")?;
    let lhs = ad_pow(&a, &b, n);
    let mut rhs = TreePoly::zero(&alpha, ring);
    let mut coefficients = Vec::new();
    for i in 0..=n {
        let c = ring.reduce(if i % 2 == 1 { -binom_int(n as u64, i as u64) } else { binom_int(n as u64, i as u64) });
        coefficients.push(ring.balanced(&c).as_i64().unwrap());
        let mut t = if i == 0 { a.clone() } else { b.left_power(i).graft(&a) };
        for _ in 0..n - i {
            t = t.graft(&b);
        }
        rhs = rhs.add(&t.scale_int(&c));
    }
    Ok(AdjointExpansion { n, coefficients, holds: lhs == rhs })
}

/// Number of distinct rooted trees whose vertices carry the labels `1..n`
/// once each, enumerated from parent functions.
pub fn labeled_tree_count(n: usize) -> usize {
    let alpha = Alphabet::new((1..=n).map(|i| Generator::even(&format!("x{i}"))).collect()).unwrap();
    let mut seen = BTreeSet::new();
    let mut parent = vec![0usize; n];
    for root in 0..n {
        let others: Vec<usize> = (0..n).filter(|&v| v != root).collect();
        let total = n.pow(others.len() as u32);
        for code in 0..total {
            let mut c = code;
            for &v in &others {
                parent[v] = c % n;
                c /= n;
            }
            if others.iter().any(|&v| parent[v] == v) {
                continue;
            }
            // every vertex must reach the root
            let acyclic = others.iter().all(|&v| {
                let mut u = v;
                for _ in 0..n {
                    if u == root {
                        return true;
                    }
                    u = parent[u];
                }
                u == root
            });
            if !acyclic {
                continue;
            }
            let t = build(root, &parent, &others);
            seen.insert(canonicalize(&t, &alpha, false).unwrap().0);
        }
    }
    seen.len()
}

fn build(v: usize, parent: &[usize], others: &[usize]) -> Tree {
    let kids = others.iter().filter(|&&u| parent[u] == v).map(|&u| build(u, parent, others)).collect();
    Tree::new(v as u8, kids)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Tree `t` evaluated by sending a vertex with children `c₁…c_k` to the
/// symmetrized brace `Σ_σ ± x{c_{σ1},…,c_{σk}}`. `None` when every term
/// vanishes because braces do not fit.
fn eval_tree(t: &Tree, alpha: &Alphabet, values: &[Cochain]) -> Option<Cochain> {
    let root = &values[t.label as usize];
    if t.children.is_empty() {
        return Some(root.clone());
    }
    let kids: Vec<Cochain> = t.children.iter().map(|c| eval_tree(c, alpha, values)).collect::<Option<_>>()?;
    let odd: Vec<bool> = t.children.iter().map(|c| c.odd_vertices(alpha) % 2 == 1).collect();
    let mut acc: Option<Cochain> = None;
    for sigma in permutations(kids.len()) {
        let mut neg = false;
        for i in 0..sigma.len() {
            for j in i + 1..sigma.len() {
                if sigma[i] > sigma[j] && odd[sigma[i]] && odd[sigma[j]] {
                    neg = !neg;
                }
            }
        }
        let args: Vec<&Cochain> = sigma.iter().map(|&i| &kids[i]).collect();
        let v = brace_opt(root, &args)?;
        let v = if neg { v.neg() } else { v };
        acc = Some(match acc {
            None => v,
            Some(a) => a.add(&v),
        });
    }
    acc
}

/// The image of `poly` in a brace algebra of Hochschild cochains, sending
/// generator `i` to `values[i]`. Generators of even `|·|` need odd-arity
/// cochains and vice versa. Returns `None` when every term vanishes for
/// lack of inputs.
pub fn evaluate(poly: &TreePoly, values: &[Cochain]) -> Result<Option<Cochain>> {
    let alpha = poly.alphabet();
    if values.len() != alpha.len() {
        return Err(Error::DimensionMismatch(format!("{} values for {} generators", values.len(), alpha.len())));
    }
    for (g, v) in alpha.generators().iter().zip(values) {
        if Parity::of(v.arity() + 1) != g.parity {
            return Err(Error::Hypothesis(format!("a cochain of {} |·| for {}", if g.parity == Parity::Odd { "odd" } else { "even" }, g.name)));
        }
        if v.ring() != poly.ring() {
            return Err(Error::RingMismatch(v.ring().name(), poly.ring().name()));
        }
    }
    let mut acc: Option<Cochain> = None;
    for (t, c) in poly.terms() {
        let Some(v) = eval_tree(t, alpha, values) else { continue };
        let v = v.scale_int(c);
        acc = Some(match acc {
            None => v,
            Some(a) => {
                if a.arity() != v.arity() {
                    return Err(Error::Invalid("terms of different arities".into()));
                }
                a.add(&v)
            }
        });
    }
    Ok(acc)
}
