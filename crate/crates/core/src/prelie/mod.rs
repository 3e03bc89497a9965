//! Free graded pre-Lie algebras as linear combinations of labeled rooted
//! trees, with `x∘y` grafting the root of `y` onto every vertex of `x`.
//!
//! Signs for odd generators follow the preorder of vertices: a tree stands
//! for its vertices read root first, children left to right, and `x∘y`
//! places the vertices of `y` after those of `x`. Canonical forms sort
//! children, picking up the Koszul sign of the block permutation.

mod identities;
mod lie;
mod suite;
mod text;

pub use identities::{
    adjoint_expansion, evaluate, jacobi_sum, labeled_tree_count, power_law_defect, restricted_sum_sides,
    restriction_correction, AdjointExpansion, Correction,
};
pub use lie::{lie_image, lie_rank, left_combed, lyndon_brackets, render_combed, vertical_decompose, LieWord};
pub use suite::{counterexample_suite, identity_suite, SymbolicCheck, SymbolicReport};
pub use text::{parse_tree, render_tree, TreeJson};

use crate::error::{Error, Result};
use crate::free::FreeElement;
use crate::int::Int;
use crate::ring::Ring;
use crate::surjection::Parity;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub parity: Parity,
}

impl Generator {
    pub fn even(name: &str) -> Self {
        Generator { name: name.into(), parity: Parity::Even }
    }

    pub fn odd(name: &str) -> Self {
        Generator { name: name.into(), parity: Parity::Odd }
    }
}

/// An ordered set of generators; trees refer to generators by index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Generator>", into = "Vec<Generator>")]
pub struct Alphabet {
    gens: Vec<Generator>,
}

impl TryFrom<Vec<Generator>> for Alphabet {
    type Error = Error;
    fn try_from(g: Vec<Generator>) -> Result<Self> {
        Alphabet::new(g)
    }
}

impl From<Alphabet> for Vec<Generator> {
    fn from(a: Alphabet) -> Self {
        a.gens
    }
}

impl Alphabet {
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        if gens.is_empty() || gens.len() > 255 {
            return Err(Error::Invalid(format!("{} generators; need 1..=255", gens.len())));
        }
        for (i, g) in gens.iter().enumerate() {
            if g.name.is_empty() || !g.name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::Invalid(format!("generator name {:?}", g.name)));
            }
            if gens[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::Invalid(format!("duplicate generator {:?}", g.name)));
            }
        }
        Ok(Alphabet { gens })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<u8> {
        self.gens.iter().position(|g| g.name == name).map(|i| i as u8)
    }

    pub fn name(&self, label: u8) -> &str {
        &self.gens[label as usize].name
    }

    pub fn is_odd(&self, label: u8) -> bool {
        self.gens[label as usize].parity == Parity::Odd
    }
}

/// A rooted tree with labeled vertices. Trees stored in a [`TreePoly`] are
/// canonical: children sorted ascending by the derived order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    pub label: u8,
    pub children: Vec<Tree>,
}

impl Tree {
    pub fn leaf(label: u8) -> Self {
        Tree { label, children: Vec::new() }
    }

    pub fn new(label: u8, children: Vec<Tree>) -> Self {
        Tree { label, children }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Tree::size).sum::<usize>()
    }

    pub fn preorder(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.size());
        self.preorder_into(&mut out);
        out
    }

    fn preorder_into(&self, out: &mut Vec<u8>) {
        out.push(self.label);
        for c in &self.children {
            c.preorder_into(out);
        }
    }

    pub fn count_label(&self, label: u8) -> usize {
        (self.label == label) as usize + self.children.iter().map(|c| c.count_label(label)).sum::<usize>()
    }

    pub fn odd_vertices(&self, alpha: &Alphabet) -> usize {
        alpha.is_odd(self.label) as usize + self.children.iter().map(|c| c.odd_vertices(alpha)).sum::<usize>()
    }

    pub fn parity(&self, alpha: &Alphabet) -> Parity {
        Parity::of(self.odd_vertices(alpha))
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(Tree::depth).max().unwrap_or(0)
    }

    fn push_at(&mut self, target: &mut usize, b: &Tree) -> bool {
        if *target == 0 {
            self.children.push(b.clone());
            return true;
        }
        *target -= 1;
        for c in &mut self.children {
            if c.push_at(target, b) {
                return true;
            }
        }
        false
    }
}

/// Canonical form of a planar tree and whether reordering flipped the sign;
/// `None` when an automorphism permutes odd vertices oddly (the monomial is
/// then 2-torsion, treated as zero away from characteristic 2).
pub fn canonicalize(t: &Tree, alpha: &Alphabet, char2: bool) -> Option<(Tree, bool)> {
    let mut neg = false;
    let mut kids = Vec::with_capacity(t.children.len());
    for c in &t.children {
        let (cc, s) = canonicalize(c, alpha, char2)?;
        neg ^= s;
        let odd = cc.odd_vertices(alpha) % 2 == 1;
        kids.push((cc, odd));
    }
    for i in 0..kids.len() {
        for j in i + 1..kids.len() {
            if kids[i].0 > kids[j].0 && kids[i].1 && kids[j].1 {
                neg = !neg;
            }
            if !char2 && kids[i].1 && kids[i].0 == kids[j].0 {
                return None;
            }
        }
    }
    kids.sort_by(|a, b| a.0.cmp(&b.0));
    Some((Tree::new(t.label, kids.into_iter().map(|k| k.0).collect()), neg))
}

/// Element of the free pre-Lie algebra over `alphabet`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePoly {
    alphabet: Alphabet,
    elem: FreeElement<Tree>,
}

impl TreePoly {
    pub fn zero(alphabet: &Alphabet, ring: Ring) -> Self {
        TreePoly { alphabet: alphabet.clone(), elem: FreeElement::zero(ring) }
    }

    pub fn generator(alphabet: &Alphabet, ring: Ring, name: &str) -> Result<Self> {
        let i = alphabet.index(name).ok_or_else(|| Error::Invalid(format!("unknown generator {name:?}")))?;
        Ok(TreePoly { alphabet: alphabet.clone(), elem: FreeElement::basis(ring, Tree::leaf(i)) })
    }

    /// `coeff · t` for a tree given in any child order.
    pub fn from_tree(alphabet: &Alphabet, ring: Ring, t: &Tree, coeff: i64) -> Result<Self> {
        check_labels(t, alphabet)?;
        let mut p = Self::zero(alphabet, ring);
        if let Some((c, neg)) = canonicalize(t, alphabet, ring.characteristic() == 2) {
            p.elem.add_term(c, Int::from(if neg { -coeff } else { coeff }));
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn ring(&self) -> Ring {
        self.elem.ring()
    }

    pub fn element(&self) -> &FreeElement<Tree> {
        &self.elem
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tree, &Int)> {
        self.elem.iter()
    }

    pub fn coeff(&self, t: &Tree) -> Int {
        self.elem.coeff(t)
    }

    pub fn len(&self) -> usize {
        self.elem.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elem.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    /// Parity of `|·|` when every term has the same one.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.elem.keys().map(|t| t.parity(&self.alphabet));
        let first = it.next()?;
        it.all(|q| q == first).then_some(first)
    }

    fn check(&self, o: &TreePoly) {
        assert_eq!(self.alphabet, o.alphabet, "tree polynomials over different alphabets");
        assert_eq!(self.ring(), o.ring(), "tree polynomials over different rings");
    }

    pub fn add(&self, o: &TreePoly) -> TreePoly {
        self.check(o);
        TreePoly { alphabet: self.alphabet.clone(), elem: self.elem.add(&o.elem) }
    }

    pub fn sub(&self, o: &TreePoly) -> TreePoly {
        self.check(o);
        TreePoly { alphabet: self.alphabet.clone(), elem: self.elem.sub(&o.elem) }
    }

    pub fn scale(&self, c: i64) -> TreePoly {
        self.scale_int(&Int::from(c))
    }

    pub fn scale_int(&self, c: &Int) -> TreePoly {
        TreePoly { alphabet: self.alphabet.clone(), elem: self.elem.scale(c) }
    }

    pub fn change_ring(&self, ring: Ring) -> TreePoly {
        // canonical forms may differ between characteristic 2 and others
        let mut out = TreePoly::zero(&self.alphabet, ring);
        for (t, c) in self.terms() {
            if let Some((k, neg)) = canonicalize(t, &self.alphabet, ring.characteristic() == 2) {
                out.elem.add_term(k, if neg { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    /// The pre-Lie product `self ∘ o`.
    pub fn graft(&self, o: &TreePoly) -> TreePoly {
        self.check(o);
        let char2 = self.ring().characteristic() == 2;
        let mut out = TreePoly::zero(&self.alphabet, self.ring());
        for (a, ca) in self.terms() {
            for (b, cb) in o.terms() {
                let c = ca * cb;
                for (t, neg) in graft_trees(a, b, &self.alphabet, char2) {
                    out.elem.add_term(t, if neg { -c.clone() } else { c.clone() });
                }
            }
        }
        out
    }

    /// `[a,b] = a∘b − (−1)^{|a||b|} b∘a`, extended bilinearly over
    /// homogeneous terms.
    pub fn bracket(&self, o: &TreePoly) -> TreePoly {
        self.check(o);
        let mut out = TreePoly::zero(&self.alphabet, self.ring());
        for (a, ca) in self.terms() {
            let pa = TreePoly { alphabet: self.alphabet.clone(), elem: FreeElement::basis(self.ring(), a.clone()) };
            for (b, cb) in o.terms() {
                let pb = TreePoly { alphabet: self.alphabet.clone(), elem: FreeElement::basis(self.ring(), b.clone()) };
                let odd = a.odd_vertices(&self.alphabet) % 2 == 1 && b.odd_vertices(&self.alphabet) % 2 == 1;
                let ba = pb.graft(&pa);
                let t = pa.graft(&pb).add(&if odd { ba } else { ba.neg() });
                out = out.add(&t.scale_int(&(ca * cb)));
            }
        }
        out
    }

    pub fn neg(&self) -> TreePoly {
        TreePoly { alphabet: self.alphabet.clone(), elem: self.elem.neg() }
    }

    /// `x^[k] = (⋯((x∘x)∘x)⋯)∘x` with `k` factors.
    pub fn left_power(&self, k: usize) -> TreePoly {
        assert!(k >= 1, "left_power needs k ≥ 1");
        let mut r = self.clone();
        for _ in 1..k {
            r = r.graft(self);
        }
        r
    }
}

impl fmt::Display for TreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms().enumerate() {
            let c = self.ring().balanced(c);
            let (neg, abs) = if c.is_negative() { (true, -c) } else { (false, c) };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs != Int::ONE {
                write!(f, "{abs}·")?;
            }
            write!(f, "{}", render_tree(t, &self.alphabet))?;
        }
        Ok(())
    }
}

fn check_labels(t: &Tree, alpha: &Alphabet) -> Result<()> {
    if t.label as usize >= alpha.len() {
        return Err(Error::Invalid(format!("label {} outside an alphabet of {}", t.label, alpha.len())));
    }
    t.children.iter().try_for_each(|c| check_labels(c, alpha))
}

/// Every grafting of `b` onto a vertex of `a`, canonicalized, with signs.
fn graft_trees(a: &Tree, b: &Tree, alpha: &Alphabet, char2: bool) -> Vec<(Tree, bool)> {
    let order = a.preorder();
    let b_odd = b.odd_vertices(alpha) % 2 == 1;
    // subtree_end[v]: one past the last preorder index of v's subtree
    let mut subtree_end = vec![0; order.len()];
    fn ends(t: &Tree, next: &mut usize, out: &mut [usize]) {
        let me = *next;
        *next += 1;
        for c in &t.children {
            ends(c, next, out);
        }
        out[me] = *next;
    }
    ends(a, &mut 0, &mut subtree_end);
    let mut odd_suffix = vec![0usize; order.len() + 1];
    for i in (0..order.len()).rev() {
        odd_suffix[i] = odd_suffix[i + 1] + alpha.is_odd(order[i]) as usize;
    }
    let mut out = Vec::with_capacity(order.len());
    for v in 0..order.len() {
        let mut t = a.clone();
        t.push_at(&mut v.clone(), b);
        let moved = b_odd && odd_suffix[subtree_end[v]] % 2 == 1;
        if let Some((c, neg)) = canonicalize(&t, alpha, char2) {
            out.push((c, neg ^ moved));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(vec![Generator::even("a"), Generator::even("b")]).unwrap()
    }

    #[test]
    fn square_of_a_generator_is_the_two_vertex_tree() {
        let a = TreePoly::generator(&ab(), Ring::Integers, "a").unwrap();
        let sq = a.graft(&a);
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.coeff(&Tree::new(0, vec![Tree::leaf(0)])), Int::ONE);
    }

    #[test]
    fn cube_is_chain_plus_corolla() {
        let a = TreePoly::generator(&ab(), Ring::Integers, "a").unwrap();
        let c = a.left_power(3);
        assert_eq!(c.to_string(), "a(a,a) + a(a(a))");
    }

    #[test]
    fn swapping_identical_odd_subtrees_kills_the_monomial() {
        let al = Alphabet::new(vec![Generator::even("a"), Generator::odd("b")]).unwrap();
        let t = Tree::new(0, vec![Tree::leaf(1), Tree::leaf(1)]);
        assert!(canonicalize(&t, &al, false).is_none());
        assert!(canonicalize(&t, &al, true).is_some());
    }

    #[test]
    fn odd_children_sort_with_a_sign() {
        let al = Alphabet::new(vec![Generator::odd("a"), Generator::odd("b")]).unwrap();
        let t = Tree::new(0, vec![Tree::leaf(1), Tree::leaf(0)]);
        let (c, neg) = canonicalize(&t, &al, false).unwrap();
        assert_eq!(c, Tree::new(0, vec![Tree::leaf(0), Tree::leaf(1)]));
        assert!(neg);
    }

    #[test]
    fn alphabet_rejects_duplicates_and_bad_names() {
        assert!(Alphabet::new(vec![Generator::even("a"), Generator::odd("a")]).is_err());
        assert!(Alphabet::new(vec![Generator::even("a(b")]).is_err());
        assert!(Alphabet::new(vec![]).is_err());
    }
}
