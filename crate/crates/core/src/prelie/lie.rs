//! Lie words and their rewriting into left-combed pre-Lie monomials
//! `(((x_{σ₁}∘x_{σ₂})∘x_{σ₃})∘⋯)`.

use super::{Alphabet, Generator, TreePoly};
use crate::error::{Error, Result};
use crate::free::FreeElement;
use crate::ring::Ring;
use crate::sparse::ColumnReducer;
use crate::surjection::Parity;
use std::collections::BTreeMap;

/// A fully bracketed Lie word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieWord {
    Gen(u8),
    Bracket(Box<LieWord>, Box<LieWord>),
}

impl LieWord {
    pub fn bracket(a: LieWord, b: LieWord) -> LieWord {
        LieWord::Bracket(Box::new(a), Box::new(b))
    }

    pub fn letters(&self) -> Vec<u8> {
        match self {
            LieWord::Gen(g) => vec![*g],
            LieWord::Bracket(a, b) => [a.letters(), b.letters()].concat(),
        }
    }

    pub fn render(&self, alpha: &Alphabet) -> String {
        match self {
            LieWord::Gen(g) => alpha.name(*g).to_string(),
            LieWord::Bracket(a, b) => format!("[{},{}]", a.render(alpha), b.render(alpha)),
        }
    }

    /// Parses `[x1,[x2,x3]]`.
    pub fn parse(text: &str, alpha: &Alphabet) -> Result<LieWord> {
        let s: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut pos = 0;
        let w = parse_word(&s, &mut pos, alpha, 0, text.len())?;
        if pos != s.len() {
            return Err(Error::Parse { pos: s[pos].0, msg: "trailing input".into() });
        }
        Ok(w)
    }
}

fn parse_word(s: &[(usize, char)], pos: &mut usize, alpha: &Alphabet, depth: usize, end: usize) -> Result<LieWord> {
    let at = |p: usize| s.get(p).map_or(end, |c| c.0);
    if depth > 256 {
        return Err(Error::Parse { pos: at(*pos), msg: "nesting too deep".into() });
    }
    if s.get(*pos).map(|c| c.1) == Some('[') {
        *pos += 1;
        let a = parse_word(s, pos, alpha, depth + 1, end)?;
        if s.get(*pos).map(|c| c.1) != Some(',') {
            return Err(Error::Parse { pos: at(*pos), msg: "expected ','".into() });
        }
        *pos += 1;
        let b = parse_word(s, pos, alpha, depth + 1, end)?;
        if s.get(*pos).map(|c| c.1) != Some(']') {
            return Err(Error::Parse { pos: at(*pos), msg: "expected ']'".into() });
        }
        *pos += 1;
        return Ok(LieWord::bracket(a, b));
    }
    let start = *pos;
    while *pos < s.len() && (s[*pos].1.is_alphanumeric() || s[*pos].1 == '_') {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::Parse { pos: at(start), msg: "expected a generator or '['".into() });
    }
    let name: String = s[start..*pos].iter().map(|c| c.1).collect();
    alpha.index(&name).map(LieWord::Gen).ok_or_else(|| Error::Parse { pos: at(start), msg: format!("unknown generator {name:?}") })
}

type Combed = FreeElement<Vec<u8>>;

/// `W ∘ l` for a combination `W` of left-combed words, rewritten by
/// `w∘[u,v] = (w∘u)∘v − (w∘v)∘u`.
fn right_multiply(w: &Combed, l: &LieWord) -> Combed {
    match l {
        LieWord::Gen(g) => w.map_keys(|k| Some(([k.as_slice(), &[*g]].concat(), 1))),
        LieWord::Bracket(u, v) => right_multiply(&right_multiply(w, u), v).sub(&right_multiply(&right_multiply(w, v), u)),
    }
}

/// The image of a Lie word in distinct even generators, in the left-combed
/// basis (words list the factors left to right).
pub fn vertical_decompose(l: &LieWord, alpha: &Alphabet, ring: Ring) -> Result<FreeElement<Vec<u8>>> {
    let letters = l.letters();
    for (i, g) in letters.iter().enumerate() {
        if letters[..i].contains(g) {
            return Err(Error::Invalid(format!("generator {} repeats", alpha.name(*g))));
        }
        if alpha.is_odd(*g) {
            return Err(Error::Hypothesis("even generators".into()));
        }
    }
    Ok(decompose(l, ring))
}

fn decompose(l: &LieWord, ring: Ring) -> Combed {
    match l {
        LieWord::Gen(g) => FreeElement::basis(ring, vec![*g]),
        LieWord::Bracket(u, v) => right_multiply(&decompose(u, ring), v).sub(&right_multiply(&decompose(v, ring), u)),
    }
}

/// Signed terms of a left-combed combination, e.g. `+(x1∘x2)∘x3`.
pub fn render_combed(d: &FreeElement<Vec<u8>>, alpha: &Alphabet) -> Vec<String> {
    d.iter()
        .map(|(w, c)| {
            let mut s = alpha.name(w[0]).to_string();
            for (i, &g) in w.iter().enumerate().skip(1) {
                s = if i + 1 < w.len() { format!("({s}∘{})", alpha.name(g)) } else { format!("{s}∘{}", alpha.name(g)) };
            }
            let mag = if c.is_negative() { -c } else { c.clone() };
            let lead = if c.is_negative() { "-" } else { "+" };
            if mag == crate::int::Int::ONE { format!("{lead}{s}") } else { format!("{lead}{mag}·{s}") }
        })
        .collect()
}

/// The left-combed product `(((x_{w₁}∘x_{w₂})∘⋯)∘x_{w_n})` as trees.
pub fn left_combed(word: &[u8], alpha: &Alphabet, ring: Ring) -> Result<TreePoly> {
    let gen = |g: u8| TreePoly::generator(alpha, ring, alpha.name(g));
    let mut r = gen(word[0])?;
    for &g in &word[1..] {
        r = r.graft(&gen(g)?);
    }
    Ok(r)
}

/// The Lie word evaluated with `[x,y] = x∘y − (−1)^{|x||y|} y∘x`.
pub fn lie_image(l: &LieWord, alpha: &Alphabet, ring: Ring) -> Result<TreePoly> {
    match l {
        LieWord::Gen(g) => TreePoly::generator(alpha, ring, alpha.name(*g)),
        LieWord::Bracket(u, v) => Ok(lie_image(u, alpha, ring)?.bracket(&lie_image(v, alpha, ring)?)),
    }
}

/// Standard bracketings of the multilinear Lyndon words on `0..n`: every
/// arrangement starting with the smallest letter, split at its longest
/// proper Lyndon suffix.
pub fn lyndon_brackets(n: usize) -> Vec<LieWord> {
    let mut out = Vec::new();
    let rest: Vec<u8> = (1..n as u8).collect();
    permute(&rest, &mut vec![0], &mut |w| out.push(standard_bracketing(w)));
    out
}

fn permute(rest: &[u8], cur: &mut Vec<u8>, f: &mut dyn FnMut(&[u8])) {
    if rest.is_empty() {
        f(cur);
        return;
    }
    for i in 0..rest.len() {
        cur.push(rest[i]);
        let r: Vec<u8> = rest.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
        permute(&r, cur, f);
        cur.pop();
    }
}

fn is_lyndon(w: &[u8]) -> bool {
    (1..w.len()).all(|i| w[i..] > *w && w < &w[i..])
}

fn standard_bracketing(w: &[u8]) -> LieWord {
    if w.len() == 1 {
        return LieWord::Gen(w[0]);
    }
    let split = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("a one-letter suffix is Lyndon");
    LieWord::bracket(standard_bracketing(&w[..split]), standard_bracketing(&w[split..]))
}

/// Rank of the left-combed decompositions of the Lyndon brackets on `n`
/// letters, computed modulo a large prime.
pub fn lie_rank(n: usize) -> usize {
    const P: u64 = 1_000_003;
    let alpha = Alphabet::new((1..=n).map(|i| Generator { name: format!("x{i}"), parity: Parity::Even }).collect()).unwrap();
    let mut index: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    let mut red = ColumnReducer::new(P, false);
    for (id, l) in lyndon_brackets(n).iter().enumerate() {
        let d = vertical_decompose(l, &alpha, Ring::Integers).expect("distinct even letters");
        let mut v: Vec<(usize, u64)> = d
            .iter()
            .map(|(w, c)| {
                let next = index.len();
                (*index.entry(w.clone()).or_insert(next), c.rem_euclid_u64(P))
            })
            .collect();
        v.sort();
        red.push(&v, id);
    }
    red.rank()
}
