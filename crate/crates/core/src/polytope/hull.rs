//! Vertex → half-space conversion in exact arithmetic.
//!
//! The affine hull is computed first. Its equalities are kept in an
//! echelon basis pivoting on the highest-index coordinates; the pivot
//! coordinates are affine functions of the remaining "free" ones, so the
//! polytope projected onto the free coordinates is full-dimensional. Facets
//! are found there by the double description method and lifted back with
//! zero coefficients on the pivot coordinates.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::form::{FormKind, LinearForm};
use super::linear::{dot, inverse, nullspace, primitive, primitive_int, rank, rref_from_right, Rational};

/// Affine hull of a finite point set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AffineHull {
    pub ambient_dimension: usize,
    pub dimension: usize,
    /// Canonical equalities; `equalities[i]` eliminates `pivots[i]`.
    pub equalities: Vec<LinearForm>,
    pub pivots: Vec<usize>,
}

impl AffineHull {
    /// Coordinates not eliminated by an equality.
    pub fn free_coordinates(&self) -> Vec<usize> {
        (0..self.ambient_dimension)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Adds multiples of the equalities to `form` so that every pivot
    /// coefficient becomes zero. Two forms agree on the hull exactly when
    /// their reductions agree.
    pub fn reduce(&self, form: &LinearForm) -> LinearForm {
        let mut coefficients = form.coefficients.clone();
        let mut constant = form.constant.clone();
        for (eq, &p) in self.equalities.iter().zip(&self.pivots) {
            if coefficients[p].is_zero() {
                continue;
            }
            let f = &coefficients[p] / &eq.coefficients[p];
            for (c, e) in coefficients.iter_mut().zip(&eq.coefficients) {
                *c -= &f * e;
            }
            constant -= &f * &eq.constant;
        }
        LinearForm {
            coefficients,
            constant,
            kind: form.kind,
        }
    }
}

fn to_rational(points: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    points
        .iter()
        .map(|p| p.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect()
}

pub fn affine_hull(points: &[Vec<i64>]) -> AffineHull {
    affine_hull_rational(&to_rational(points))
}

pub fn affine_hull_rational(points: &[Vec<Rational>]) -> AffineHull {
    assert!(!points.is_empty(), "affine hull of an empty point set");
    let d = points[0].len();
    let base = &points[0];
    let diffs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(x, b)| x - b).collect())
        .collect();
    let dimension = rank(&diffs);
    let normals = nullspace(&diffs, d);
    let (rows, pivots) = rref_from_right(&normals);
    let equalities = rows
        .into_iter()
        .map(|c| {
            let a = -dot(&c, base);
            LinearForm {
                coefficients: c,
                constant: a,
                kind: FormKind::Equality,
            }
            .canonical()
        })
        .collect();
    AffineHull {
        ambient_dimension: d,
        dimension,
        equalities,
        pivots,
    }
}

/// Complete irredundant half-space description of a polytope.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HRepresentation {
    pub ambient_dimension: usize,
    pub dimension: usize,
    pub equalities: Vec<LinearForm>,
    pub inequalities: Vec<LinearForm>,
    #[serde(skip)]
    pub hull: AffineHull,
}

impl HRepresentation {
    /// Equalities followed by inequalities.
    pub fn forms(&self) -> Vec<LinearForm> {
        self.equalities.iter().chain(&self.inequalities).cloned().collect()
    }

    pub fn face_count(&self) -> usize {
        self.equalities.len() + self.inequalities.len()
    }
}

pub fn facet_enumeration(points: &[Vec<i64>]) -> HRepresentation {
    facet_enumeration_rational(&to_rational(points))
}

pub fn facet_enumeration_rational(points: &[Vec<Rational>]) -> HRepresentation {
    let hull = affine_hull_rational(points);
    let free = hull.free_coordinates();
    let mut inequalities = Vec::new();
    if hull.dimension > 0 {
        // homogenized rows (x_free, 1); a facet (c, a) has row·(c, a) ≥ 0
        let rows: Vec<Vec<BigInt>> = points
            .iter()
            .map(|p| {
                let mut r: Vec<Rational> = free.iter().map(|&j| p[j].clone()).collect();
                r.push(Rational::one());
                primitive(&r)
            })
            .collect();
        for ray in double_description(&rows, free.len() + 1) {
            let mut coefficients = vec![Rational::zero(); hull.ambient_dimension];
            for (k, &j) in free.iter().enumerate() {
                coefficients[j] = Rational::from_integer(ray[k].clone());
            }
            let constant = Rational::from_integer(ray[free.len()].clone());
            let form = LinearForm {
                coefficients,
                constant,
                kind: FormKind::InequalityGe,
            };
            inequalities.push(form.canonical());
        }
    }
    inequalities.sort_by(LinearForm::lex_cmp);
    inequalities.dedup();
    let mut equalities = hull.equalities.clone();
    equalities.sort_by(LinearForm::lex_cmp);
    HRepresentation {
        ambient_dimension: hull.ambient_dimension,
        dimension: hull.dimension,
        equalities,
        inequalities,
        hull,
    }
}

// ---------------------------------------------------------------------------
// Double description

#[derive(Clone, Debug)]
struct Ray {
    v: Vec<BigInt>,
    /// Indices of processed constraints the ray is tight on.
    zeros: Vec<u64>,
}

fn bit_set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn bits_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bits_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn bits_count(a: &[u64]) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}

fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays of the pointed cone `{y ∈ R^dim : A y ≥ 0}`.
///
/// Starts from a simplicial cone on `dim` independent constraints and
/// inserts the rest one at a time, combining adjacent positive/negative
/// ray pairs. Adjacency is decided combinatorially: two rays are adjacent
/// iff no third ray is tight on every constraint they share.
pub(crate) fn double_description(a: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let words = a.len().div_ceil(64).max(1);
    let as_rat = |r: &Vec<BigInt>| -> Vec<Rational> { r.iter().cloned().map(Rational::from_integer).collect() };

    // greedy choice of `dim` linearly independent rows
    let mut basis: Vec<usize> = Vec::new();
    let mut basis_rows: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in a.iter().enumerate() {
        if basis.len() == dim {
            break;
        }
        basis_rows.push(as_rat(row));
        if rank(&basis_rows) == basis_rows.len() {
            basis.push(i);
        } else {
            basis_rows.pop();
        }
    }
    assert_eq!(basis.len(), dim, "constraint matrix must have full column rank");
    let inv = inverse(&basis_rows).expect("independent rows");

    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let col: Vec<Rational> = (0..dim).map(|i| inv[i][j].clone()).collect();
            let v = primitive(&col);
            let mut zeros = vec![0u64; words];
            for (k, &b) in basis.iter().enumerate() {
                if k != j {
                    bit_set(&mut zeros, b);
                }
            }
            Ray { v, zeros }
        })
        .collect();

    for (i, row) in a.iter().enumerate() {
        if basis.contains(&i) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| int_dot(row, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_negative()).collect();

        let mut created = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = bits_and(&rays[p].zeros, &rays[n].zeros);
                if bits_count(&common) + 2 < dim {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != n && bits_subset(&common, &r.zeros));
                if blocked {
                    continue;
                }
                let v: Vec<BigInt> = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(x, y)| &values[p] * x - &values[n] * y)
                    .collect();
                let mut zeros = common;
                bit_set(&mut zeros, i);
                created.push(Ray {
                    v: primitive_int(&v),
                    zeros,
                });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            if values[k].is_zero() {
                bit_set(&mut r.zeros, i);
                next.push(r);
            } else if values[k].is_positive() {
                next.push(r);
            }
        }
        next.extend(created);
        rays = next;
    }
    rays.into_iter().map(|r| r.v).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point() {
        let h = facet_enumeration(&[vec![1, -1, 1]]);
        assert_eq!(h.dimension, 0);
        assert_eq!(h.equalities.len(), 3);
        assert!(h.inequalities.is_empty());
    }

    #[test]
    fn segment() {
        let h = facet_enumeration(&[vec![-1], vec![1]]);
        assert_eq!(h.dimension, 1);
        assert!(h.equalities.is_empty());
        assert_eq!(
            h.inequalities,
            vec![LinearForm::inequality(&[-1], 1), LinearForm::inequality(&[1], 1)]
        );
    }

    #[test]
    fn two_points_in_plane() {
        let h = facet_enumeration(&[vec![1, 1], vec![-1, -1]]);
        assert_eq!(h.dimension, 1);
        assert_eq!(
            h.equalities,
            vec![LinearForm::from_ints(&[1, -1], 0, FormKind::Equality).unwrap()]
        );
        assert_eq!(h.inequalities.len(), 2);
    }

    #[test]
    fn square_and_cube() {
        let sq = facet_enumeration(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(sq.inequalities.len(), 4);
        let mut cube = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    cube.push(vec![x, y, z]);
                }
            }
        }
        // interior point must not disturb anything
        cube.push(vec![0, 0, 0]);
        let h = facet_enumeration(&cube);
        assert_eq!(h.dimension, 3);
        assert_eq!(h.inequalities.len(), 6);
        for f in &h.inequalities {
            assert_eq!(f.constant, Rational::one());
        }
    }

    #[test]
    fn cross_polytope() {
        let mut pts = Vec::new();
        for i in 0..3 {
            for s in [-1, 1] {
                let mut p = vec![0; 3];
                p[i] = s;
                pts.push(p);
            }
        }
        let h = facet_enumeration(&pts);
        assert_eq!(h.inequalities.len(), 8);
    }

    #[test]
    fn reduction_modulo_equalities() {
        let hull = affine_hull(&[vec![1, 1, 0], vec![-1, -1, 0], vec![1, 1, 1]]);
        assert_eq!(hull.dimension, 2);
        assert_eq!(hull.pivots, vec![1]);
        // w1 + w2 ≥ 0 equals 2 w1 ≥ 0 on the hull w2 = w1
        let f = LinearForm::inequality(&[1, 1, 0], 0);
        assert_eq!(hull.reduce(&f).canonical(), LinearForm::inequality(&[1, 0, 0], 0));
    }
}
