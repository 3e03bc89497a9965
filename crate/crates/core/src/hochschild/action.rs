//! Action of surjections on Hochschild cochains: a surjection is read as a
//! cup product of nested braces, with a sign depending on input degrees.

use super::cochain::{brace_opt, AssocAlgebra, Cochain};
use crate::surjection::{action_sign, parse_forest, BraceTree, OperadChain, Surjection};

fn eval_forest(alg: &AssocAlgebra, forest: &[BraceTree], xs: &[&Cochain]) -> Option<Cochain> {
    let mut acc: Option<Cochain> = None;
    for t in forest {
        let mut args = Vec::with_capacity(t.gaps.len());
        for g in &t.gaps {
            args.push(eval_forest(alg, g, xs)?);
        }
        let refs: Vec<&Cochain> = args.iter().collect();
        let tv = brace_opt(xs[t.value as usize - 1], &refs)?;
        acc = Some(match acc {
            None => tv,
            Some(a) => alg.cup(&a, &tv).expect("same algebra"),
        });
    }
    acc
}

/// `u(x₁,…,x_n)`; `None` when a brace has more arguments than inputs, i.e.
/// the value is the zero cochain of no definite arity.
pub fn act(alg: &AssocAlgebra, u: &Surjection, xs: &[&Cochain]) -> Option<Cochain> {
    assert_eq!(xs.len(), u.arity(), "{} inputs for an arity-{} surjection", xs.len(), u.arity());
    assert!(u.complexity() <= 2, "{u} has complexity {} and does not act", u.complexity());
    let ms: Vec<usize> = xs.iter().map(|x| x.degree() % 2).collect();
    let v = eval_forest(alg, &parse_forest(u.seq()), xs)?;
    Some(if action_sign(u, &ms) < 0 { v.neg() } else { v })
}

/// Linear extension of [`act`]; terms that vanish identically are skipped.
pub fn act_chain(alg: &AssocAlgebra, ch: &OperadChain, xs: &[&Cochain]) -> Option<Cochain> {
    let mut acc: Option<Cochain> = None;
    for (u, c) in ch.terms() {
        let Some(v) = act(alg, u, xs) else { continue };
        let t = v.scale_int(c);
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t),
        });
    }
    acc
}
