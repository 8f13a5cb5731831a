//! Element labels.
//!
//! Every vertex, edge and incidence carries an [`Elem`]. Atoms are the
//! user-visible string labels; products build tagged tuples such as
//! `(1, x, y)`, and exponentials label their elements by the morphisms or
//! functions that define them.
//!
//! The canonical text form is:
//!
//! ```text
//! elem  := item (":" item)*          a tuple when more than one item
//! item  := atom | "(" elem ")" | "{" [elem ">" elem (";" elem ">" elem)*] "}"
//!        | "[" [elem (";" elem)*] "]"
//! ```
//!
//! so the Laplacian-product incidence `(2, i0, e1)` prints as `2:i0:e1` and a
//! nested one as `1:(3:e0:i1):v0`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::Error;

const RESERVED: &[char] = &[':', '(', ')', '{', '}', '[', ']', ';', '>'];

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Elem {
    Atom(Arc<str>),
    Tuple(Arc<[Elem]>),
    /// Graph of a finite function, sorted by key.
    Map(Arc<[(Elem, Elem)]>),
    /// Finite set, sorted and deduplicated.
    Set(Arc<[Elem]>),
}

impl Elem {
    pub fn atom(s: impl AsRef<str>) -> Self {
        Elem::Atom(Arc::from(s.as_ref()))
    }

    /// The label `1` used by every singleton generator.
    pub fn one() -> Self {
        Elem::atom("1")
    }

    pub fn tuple(items: impl IntoIterator<Item = Elem>) -> Self {
        Elem::Tuple(items.into_iter().collect())
    }

    pub fn pair(a: Elem, b: Elem) -> Self {
        Elem::Tuple(Arc::from(vec![a, b]))
    }

    /// `(tag, x, y)`, the shape used by every product.
    pub fn tagged(tag: u8, x: Elem, y: Elem) -> Self {
        Elem::Tuple(Arc::from(vec![Elem::atom(tag.to_string()), x, y]))
    }

    /// `(tag, x)`, used by disjoint unions such as the bipartite quiver.
    pub fn tagged1(tag: u8, x: Elem) -> Self {
        Elem::Tuple(Arc::from(vec![Elem::atom(tag.to_string()), x]))
    }

    pub fn map(entries: impl IntoIterator<Item = (Elem, Elem)>) -> Self {
        let mut v: Vec<(Elem, Elem)> = entries.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        Elem::Map(v.into())
    }

    pub fn set(items: impl IntoIterator<Item = Elem>) -> Self {
        let mut v: Vec<Elem> = items.into_iter().collect();
        v.sort();
        v.dedup();
        Elem::Set(v.into())
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Elem::Atom(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_tuple(&self) -> Option<&[Elem]> {
        match self {
            Elem::Tuple(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Elem, &Elem)> {
        match self.as_tuple()? {
            [a, b] => Some((a, b)),
            _ => None,
        }
    }

    /// Splits `(tag, x, y)` with a numeric tag.
    pub fn as_tagged(&self) -> Option<(u8, &Elem, &Elem)> {
        match self.as_tuple()? {
            [t, x, y] => Some((t.as_atom()?.parse().ok()?, x, y)),
            _ => None,
        }
    }

    pub fn as_tagged1(&self) -> Option<(u8, &Elem)> {
        match self.as_tuple()? {
            [t, x] => Some((t.as_atom()?.parse().ok()?, x)),
            _ => None,
        }
    }

    pub fn as_map(&self) -> Option<&[(Elem, Elem)]> {
        match self {
            Elem::Map(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_set(&self) -> Option<&[Elem]> {
        match self {
            Elem::Set(s) => Some(s),
            _ => None,
        }
    }

    /// Looks up `key` in a map element.
    pub fn apply(&self, key: &Elem) -> Option<&Elem> {
        let m = self.as_map()?;
        m.binary_search_by(|(k, _)| k.cmp(key))
            .ok()
            .map(|ix| &m[ix].1)
    }

    fn rank(&self) -> u8 {
        match self {
            Elem::Atom(_) => 0,
            Elem::Tuple(_) => 1,
            Elem::Map(_) => 2,
            Elem::Set(_) => 3,
        }
    }

    fn write_item(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Tuple(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

/// Natural ordering on atoms: digit runs compare numerically, so `v2 < v10`.
fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut x, mut y) = (a.as_bytes(), b.as_bytes());
    loop {
        match (x.first(), y.first()) {
            (None, None) => return a.cmp(b),
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(p), Some(q)) if p.is_ascii_digit() && q.is_ascii_digit() => {
                let dx = x.iter().take_while(|c| c.is_ascii_digit()).count();
                let dy = y.iter().take_while(|c| c.is_ascii_digit()).count();
                let nx = trim_zeros(&x[..dx]);
                let ny = trim_zeros(&y[..dy]);
                let ord = nx.len().cmp(&ny.len()).then_with(|| nx.cmp(ny));
                if ord != Ordering::Equal {
                    return ord;
                }
                x = &x[dx..];
                y = &y[dy..];
            }
            (Some(p), Some(q)) => {
                if p != q {
                    return p.cmp(q);
                }
                x = &x[1..];
                y = &y[1..];
            }
        }
    }
}

fn trim_zeros(d: &[u8]) -> &[u8] {
    let n = d.iter().take_while(|&&c| c == b'0').count();
    if n == d.len() {
        &d[d.len().saturating_sub(1)..]
    } else {
        &d[n..]
    }
}

impl Ord for Elem {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Elem::Atom(a), Elem::Atom(b)) if a == b => Ordering::Equal,
            (Elem::Atom(a), Elem::Atom(b)) => natural_cmp(a, b),
            (Elem::Tuple(a), Elem::Tuple(b)) | (Elem::Set(a), Elem::Set(b)) if Arc::ptr_eq(a, b) => Ordering::Equal,
            (Elem::Tuple(a), Elem::Tuple(b)) | (Elem::Set(a), Elem::Set(b)) => a.iter().cmp(b.iter()),
            (Elem::Map(a), Elem::Map(b)) if Arc::ptr_eq(a, b) => Ordering::Equal,
            (Elem::Map(a), Elem::Map(b)) => a.iter().cmp(b.iter()),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Elem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Atom(s) => f.write_str(s),
            Elem::Tuple(items) => {
                for (ix, it) in items.iter().enumerate() {
                    if ix > 0 {
                        f.write_str(":")?;
                    }
                    it.write_item(f)?;
                }
                Ok(())
            }
            Elem::Map(entries) => {
                f.write_str("{")?;
                for (ix, (k, v)) in entries.iter().enumerate() {
                    if ix > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{k}>{v}")?;
                }
                f.write_str("}")
            }
            Elem::Set(items) => {
                f.write_str("[")?;
                for (ix, it) in items.iter().enumerate() {
                    if ix > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{it}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<&str> for Elem {
    fn from(s: &str) -> Self {
        Elem::atom(s)
    }
}

impl FromStr for Elem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { src: s, pos: 0 };
        let e = p.elem()?;
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Label {
            label: self.src.to_string(),
            reason: format!("{what} at byte {}", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn elem(&mut self) -> Result<Elem, Error> {
        let mut items = vec![self.item()?];
        while self.eat(':') {
            items.push(self.item()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Elem::tuple(items)
        })
    }

    fn item(&mut self) -> Result<Elem, Error> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.elem()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some('{') => {
                self.pos += 1;
                let mut entries = Vec::new();
                if !self.eat('}') {
                    loop {
                        let k = self.elem()?;
                        if !self.eat('>') {
                            return Err(self.err("expected '>'"));
                        }
                        let v = self.elem()?;
                        entries.push((k, v));
                        if self.eat('}') {
                            break;
                        }
                        if !self.eat(';') {
                            return Err(self.err("expected ';' or '}'"));
                        }
                    }
                }
                Ok(Elem::map(entries))
            }
            Some('[') => {
                self.pos += 1;
                let mut items = Vec::new();
                if !self.eat(']') {
                    loop {
                        items.push(self.elem()?);
                        if self.eat(']') {
                            break;
                        }
                        if !self.eat(';') {
                            return Err(self.err("expected ';' or ']'"));
                        }
                    }
                }
                Ok(Elem::set(items))
            }
            _ => {
                let rest = &self.src[self.pos..];
                let len = rest.find(RESERVED).unwrap_or(rest.len());
                if len == 0 {
                    return Err(self.err("empty label"));
                }
                self.pos += len;
                Ok(Elem::atom(&rest[..len]))
            }
        }
    }
}

/// Serialized as its printed form.
impl serde::Serialize for Elem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Elem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_order_on_atoms() {
        let mut v: Vec<Elem> = ["v10", "v2", "v1", "e0", "v02"].iter().map(|s| Elem::atom(s)).collect();
        v.sort();
        let s: Vec<String> = v.iter().map(|e| e.to_string()).collect();
        assert_eq!(s, ["e0", "v1", "v02", "v2", "v10"]);
    }

    #[test]
    fn tagged_display_and_parse() {
        let inner = Elem::tagged(3, "e0".into(), "i1".into());
        let e = Elem::tagged(1, inner, "v0".into());
        assert_eq!(e.to_string(), "1:(3:e0:i1):v0");
        assert_eq!(e.to_string().parse::<Elem>().unwrap(), e);
        let (t, x, _) = e.as_tagged().unwrap();
        assert_eq!(t, 1);
        assert_eq!(x.as_tagged().unwrap().0, 3);
    }

    #[test]
    fn maps_and_sets_round_trip() {
        let m = Elem::map([("b".into(), Elem::pair("x".into(), "y".into())), ("a".into(), "z".into())]);
        let e = Elem::tuple([m.clone(), Elem::set(["q".into(), "p".into()])]);
        let text = e.to_string();
        assert_eq!(text, "{a>z;b>x:y}:[p;q]");
        assert_eq!(text.parse::<Elem>().unwrap(), e);
        assert_eq!(m.apply(&"b".into()).unwrap().to_string(), "x:y");
    }

    #[test]
    fn rejects_malformed_labels() {
        assert!("".parse::<Elem>().is_err());
        assert!("a:".parse::<Elem>().is_err());
        assert!("(a".parse::<Elem>().is_err());
        assert!("{a}".parse::<Elem>().is_err());
    }
}
