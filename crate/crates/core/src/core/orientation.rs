use super::incidence::IncidenceHypergraph;
use super::sort::Violation;
use crate::elem::Elem;

/// A ±1 sign on every incidence of a fixed carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    signs: Vec<i8>,
}

impl Orientation {
    pub fn all_plus(g: &IncidenceHypergraph) -> Self {
        Orientation { signs: vec![1; g.incidences().len()] }
    }

    pub fn all_minus(g: &IncidenceHypergraph) -> Self {
        Orientation { signs: vec![-1; g.incidences().len()] }
    }

    /// Signs indexed like `g.incidences()`.
    pub fn from_signs(g: &IncidenceHypergraph, signs: Vec<i8>) -> Result<Self, Violation> {
        if signs.len() != g.incidences().len() {
            return Err(Violation::new(
                "orientation not total",
                format!("{} signs for {} incidences", signs.len(), g.incidences().len()),
            ));
        }
        if let Some((i, s)) = signs.iter().enumerate().find(|(_, s)| !matches!(s, 1 | -1)) {
            return Err(Violation::new(
                "sign out of range",
                format!("incidence `{}` has sign {s}", g.incidences().elem(i)),
            ));
        }
        Ok(Orientation { signs })
    }

    /// Signs keyed by incidence label; every incidence must be listed once.
    pub fn from_labels(g: &IncidenceHypergraph, pairs: &[(Elem, i8)]) -> Result<Self, Violation> {
        let mut signs = vec![0i8; g.incidences().len()];
        for (label, s) in pairs {
            let ix = g.incidences().get(label).ok_or_else(|| {
                Violation::new("orientation out of range", format!("unknown incidence `{label}`"))
            })?;
            if signs[ix] != 0 {
                return Err(Violation::new("duplicate label", format!("incidence `{label}` signed twice")));
            }
            signs[ix] = *s;
        }
        if let Some(i) = signs.iter().position(|&s| s == 0) {
            return Err(Violation::new(
                "orientation not total",
                format!("incidence `{}` has no sign", g.incidences().elem(i)),
            ));
        }
        Self::from_signs(g, signs)
    }

    pub fn sign(&self, i: usize) -> i64 {
        self.signs[i] as i64
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn negated(&self) -> Self {
        Orientation { signs: self.signs.iter().map(|s| -s).collect() }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }
}
