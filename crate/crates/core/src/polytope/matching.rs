//! Matching computed facets against a reference list, modulo the
//! equalities of the affine hull.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::form::{FormKind, LinearForm};
use super::hull::{AffineHull, HRepresentation};
use super::linear::{rank, Rational};
use crate::golden;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    /// `(reference label, index into the computed inequalities)`.
    pub pairs: Vec<(usize, usize)>,
    pub unmatched_reference: Vec<usize>,
    pub unmatched_computed: Vec<usize>,
    /// Reference equalities span exactly the hull's equality space.
    pub equalities_match: bool,
}

impl Matching {
    pub fn is_bijection(&self) -> bool {
        self.unmatched_reference.is_empty()
            && self.unmatched_computed.is_empty()
            && self.pairs.len()
                == self
                    .pairs
                    .iter()
                    .map(|p| p.1)
                    .collect::<std::collections::BTreeSet<_>>()
                    .len()
    }

    pub fn computed_for(&self, label: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.0 == label).map(|p| p.1)
    }
}

fn key(hull: &AffineHull, f: &LinearForm) -> Option<LinearForm> {
    let r = hull.reduce(f);
    if r.coefficients.iter().all(Zero::is_zero) {
        // constant on the hull: not a facet of anything
        return None;
    }
    Some(r.canonical())
}

fn affine_row(f: &LinearForm) -> Vec<Rational> {
    let mut row = f.coefficients.clone();
    row.push(f.constant.clone());
    row
}

/// Whether `forms` span the same affine equality space as the hull.
pub fn equalities_span(hull: &AffineHull, forms: &[LinearForm]) -> bool {
    let ours: Vec<Vec<Rational>> = hull.equalities.iter().map(affine_row).collect();
    let theirs: Vec<Vec<Rational>> = forms.iter().map(affine_row).collect();
    let both: Vec<Vec<Rational>> = ours.iter().chain(&theirs).cloned().collect();
    let r = rank(&ours);
    rank(&theirs) == r && rank(&both) == r
}

/// Matches labelled reference inequalities to `h.inequalities`. Two forms
/// match when their difference lies in the span of the hull equalities,
/// up to a positive scale.
pub fn match_forms(
    h: &HRepresentation,
    reference: &[(usize, LinearForm)],
    reference_equalities: &[LinearForm],
) -> Matching {
    let mut index: BTreeMap<LinearForm, Vec<usize>> = BTreeMap::new();
    for (i, f) in h.inequalities.iter().enumerate() {
        if let Some(k) = key(&h.hull, f) {
            index.entry(k).or_default().push(i);
        }
    }
    let mut pairs = Vec::new();
    let mut unmatched_reference = Vec::new();
    let mut used = vec![false; h.inequalities.len()];
    for (label, f) in reference {
        let hit = key(&h.hull, f)
            .and_then(|k| index.get(&k))
            .and_then(|c| c.first().copied());
        match hit {
            Some(i) => {
                used[i] = true;
                pairs.push((*label, i));
            }
            None => unmatched_reference.push(*label),
        }
    }
    let unmatched_computed = (0..used.len()).filter(|&i| !used[i]).collect();
    Matching {
        pairs,
        unmatched_reference,
        unmatched_computed,
        equalities_match: equalities_span(&h.hull, reference_equalities),
    }
}

pub fn reference_inequalities() -> Vec<(usize, LinearForm)> {
    golden::INEQUALITIES
        .iter()
        .map(|(n, c, a)| (*n, LinearForm::inequality(c, *a)))
        .collect()
}

pub fn reference_equalities() -> Vec<LinearForm> {
    golden::EQUALITIES
        .iter()
        .map(|(c, a)| LinearForm::from_ints(c, *a, FormKind::Equality).expect("nonzero"))
        .collect()
}

/// Matches an H-representation of the nine-pair MEP configuration against
/// the reference 28 inequalities and 2 equalities.
pub fn match_reference_inequalities(h: &HRepresentation) -> Matching {
    match_forms(h, &reference_inequalities(), &reference_equalities())
}
