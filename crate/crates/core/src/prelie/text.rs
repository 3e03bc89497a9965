//! Tree text `a(b,c(d))` and its JSON mirror `{label, children}`.

use super::{Alphabet, Tree};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

const MAX_DEPTH: usize = 256;

pub fn render_tree(t: &Tree, alpha: &Alphabet) -> String {
    let mut s = alpha.name(t.label).to_string();
    if !t.children.is_empty() {
        s.push('(');
        for (i, c) in t.children.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&render_tree(c, alpha));
        }
        s.push(')');
    }
    s
}

/// Parses a planar tree; whitespace is ignored. The child order is kept as
/// written, so callers canonicalize through [`super::TreePoly::from_tree`].
pub fn parse_tree(text: &str, alpha: &Alphabet) -> Result<Tree> {
    let bytes: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut pos = 0;
    let t = parse_node(&bytes, &mut pos, alpha, 0, text.len())?;
    if pos != bytes.len() {
        return Err(Error::Parse { pos: bytes[pos].0, msg: "trailing input".into() });
    }
    Ok(t)
}

fn parse_node(s: &[(usize, char)], pos: &mut usize, alpha: &Alphabet, depth: usize, end: usize) -> Result<Tree> {
    let at = |p: usize| s.get(p).map_or(end, |c| c.0);
    if depth > MAX_DEPTH {
        return Err(Error::Parse { pos: at(*pos), msg: "nesting too deep".into() });
    }
    let start = *pos;
    while *pos < s.len() && (s[*pos].1.is_alphanumeric() || s[*pos].1 == '_') {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::Parse { pos: at(start), msg: "expected a generator name".into() });
    }
    let name: String = s[start..*pos].iter().map(|c| c.1).collect();
    let label = alpha.index(&name).ok_or_else(|| Error::Parse { pos: at(start), msg: format!("unknown generator {name:?}") })?;
    let mut children = Vec::new();
    if s.get(*pos).map(|c| c.1) == Some('(') {
        *pos += 1;
        loop {
            children.push(parse_node(s, pos, alpha, depth + 1, end)?);
            match s.get(*pos).map(|c| c.1) {
                Some(',') => *pos += 1,
                Some(')') => {
                    *pos += 1;
                    break;
                }
                _ => return Err(Error::Parse { pos: at(*pos), msg: "expected ',' or ')'".into() }),
            }
        }
    }
    Ok(Tree::new(label, children))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub label: String,
    #[serde(default)]
    pub children: Vec<TreeJson>,
}

impl TreeJson {
    pub fn from_tree(t: &Tree, alpha: &Alphabet) -> Self {
        TreeJson { label: alpha.name(t.label).into(), children: t.children.iter().map(|c| TreeJson::from_tree(c, alpha)).collect() }
    }

    pub fn to_tree(&self, alpha: &Alphabet) -> Result<Tree> {
        self.to_tree_at(alpha, 0)
    }

    fn to_tree_at(&self, alpha: &Alphabet, depth: usize) -> Result<Tree> {
        if depth > MAX_DEPTH {
            return Err(Error::Invalid("tree nesting too deep".into()));
        }
        let label = alpha.index(&self.label).ok_or_else(|| Error::Invalid(format!("unknown generator {:?}", self.label)))?;
        let children = self.children.iter().map(|c| c.to_tree_at(alpha, depth + 1)).collect::<Result<_>>()?;
        Ok(Tree::new(label, children))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prelie::Generator;

    fn ab() -> Alphabet {
        Alphabet::new(vec![Generator::even("a"), Generator::odd("b")]).unwrap()
    }

    #[test]
    fn text_roundtrip() {
        let al = ab();
        for s in ["a", "a(b,b)", "b(a(a),b)", "a(b(a(b)))"] {
            assert_eq!(render_tree(&parse_tree(s, &al).unwrap(), &al), s);
        }
        assert_eq!(render_tree(&parse_tree(" a ( b , b ) ", &al).unwrap(), &al), "a(b,b)");
    }

    #[test]
    fn text_errors_carry_positions() {
        let al = ab();
        assert_eq!(parse_tree("a(b,", &al), Err(Error::Parse { pos: 4, msg: "expected a generator name".into() }));
        assert!(matches!(parse_tree("a(c)", &al), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_tree("a)", &al), Err(Error::Parse { pos: 1, .. })));
        assert!(parse_tree("", &al).is_err());
        assert!(parse_tree("a()", &al).is_err());
    }

    #[test]
    fn deep_nesting_is_rejected() {
        let al = ab();
        let s = "a(".repeat(400) + "a" + &")".repeat(400);
        assert!(parse_tree(&s, &al).is_err());
    }

    #[test]
    fn json_mirror() {
        let al = ab();
        let t = parse_tree("a(b,a(b))", &al).unwrap();
        let j = serde_json::to_string(&TreeJson::from_tree(&t, &al)).unwrap();
        assert_eq!(j, r#"{"label":"a","children":[{"label":"b","children":[]},{"label":"a","children":[{"label":"b","children":[]}]}]}"#);
        let back: TreeJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.to_tree(&al).unwrap(), t);
        let leaf: TreeJson = serde_json::from_str(r#"{"label":"b"}"#).unwrap();
        assert_eq!(leaf.to_tree(&al).unwrap(), Tree::leaf(1));
    }
}
