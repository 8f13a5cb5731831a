use std::fmt;

use rustc_hash::FxHashMap;

use crate::elem::Elem;

/// First violated constraint found while checking an object or a morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub detail: String,
}

impl Violation {
    pub fn new(rule: &'static str, detail: impl Into<String>) -> Self {
        Violation { rule, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule, self.detail)
    }
}

impl std::error::Error for Violation {}

/// Which sort of an object an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SortKind {
    Vertex,
    Edge,
    Incidence,
}

impl SortKind {
    pub fn name(self) -> &'static str {
        match self {
            SortKind::Vertex => "vertices",
            SortKind::Edge => "edges",
            SortKind::Incidence => "incidences",
        }
    }
}

/// A finite set of labels kept in canonical (sorted) order, with an index.
#[derive(Clone, Debug, Default)]
pub struct Sort {
    elems: Vec<Elem>,
    index: FxHashMap<Elem, usize>,
}

impl Sort {
    pub fn new(kind: SortKind, items: impl IntoIterator<Item = Elem>) -> Result<Self, Violation> {
        let mut elems: Vec<Elem> = items.into_iter().collect();
        if !elems.windows(2).all(|w| w[0] < w[1]) {
            elems.sort();
        }
        if let Some(w) = elems.windows(2).find(|w| w[0] == w[1]) {
            return Err(Violation::new(
                "duplicate label",
                format!("`{}` appears twice in {}", w[0], kind.name()),
            ));
        }
        let index = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Ok(Sort { elems, index })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn get(&self, e: &Elem) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn elem(&self, ix: usize) -> &Elem {
        &self.elems[ix]
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Elem> {
        self.elems.iter()
    }

    pub fn contains(&self, e: &Elem) -> bool {
        self.index.contains_key(e)
    }
}

impl PartialEq for Sort {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl Eq for Sort {}

/// Resolves labels of `domain` through `f` into indices of `codomain`.
pub(crate) fn resolve<F>(domain: &Sort, codomain: &Sort, kind: SortKind, f: F) -> Result<Vec<usize>, Violation>
where
    F: Fn(&Elem) -> Option<Elem>,
{
    domain
        .iter()
        .map(|x| {
            let y = f(x).ok_or_else(|| {
                Violation::new("map not total", format!("{} map undefined at `{x}`", kind.name()))
            })?;
            codomain.get(&y).ok_or_else(|| {
                Violation::new("image out of range", format!("{} map sends `{x}` to unknown `{y}`", kind.name()))
            })
        })
        .collect()
}

pub(crate) fn check_range(map: &[usize], domain: &Sort, codomain: &Sort, kind: SortKind) -> Result<(), Violation> {
    if map.len() != domain.len() {
        return Err(Violation::new(
            "map not total",
            format!("{} map has {} entries for {} elements", kind.name(), map.len(), domain.len()),
        ));
    }
    if let Some((x, &y)) = map.iter().enumerate().find(|(_, &y)| y >= codomain.len()) {
        return Err(Violation::new(
            "image out of range",
            format!("{} map sends `{}` to index {y}", kind.name(), domain.elem(x)),
        ));
    }
    Ok(())
}

pub(crate) fn compose_maps(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&x| outer[x]).collect()
}

/// Inverse of a bijection `map: domain -> codomain` of sizes `n -> n`.
pub(crate) fn invert(map: &[usize], codomain_len: usize) -> Option<Vec<usize>> {
    if map.len() != codomain_len {
        return None;
    }
    let mut inv = vec![usize::MAX; codomain_len];
    for (x, &y) in map.iter().enumerate() {
        if inv[y] != usize::MAX {
            return None;
        }
        inv[y] = x;
    }
    Some(inv)
}

pub(crate) fn map_elem(map: &[usize], domain: &Sort, codomain: &Sort) -> Elem {
    Elem::map(
        map.iter()
            .enumerate()
            .map(|(x, &y)| (domain.elem(x).clone(), codomain.elem(y).clone())),
    )
}

pub(crate) fn is_injective(map: &[usize], codomain_len: usize) -> bool {
    let mut seen = vec![false; codomain_len];
    map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
}
