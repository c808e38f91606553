//! Real three-dimensional geometry: vectors as rays, projectors,
//! Householder reflections, a Jacobi eigensolver, and the faithful
//! orthogonal representations (FORs) of the built-in hypergraphs.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};

pub const DEFAULT_TOL_ZERO: f64 = 1e-9;
pub const DEFAULT_TOL_MARGIN: f64 = 1e-6;
pub const DEFAULT_EIGEN_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 3]", into = "[f64; 3]")]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl From<[f64; 3]> for Vec3 {
    fn from([x, y, z]: [f64; 3]) -> Self {
        Vec3 { x, y, z }
    }
}

impl From<Vec3> for [f64; 3] {
    fn from(v: Vec3) -> Self {
        [v.x, v.y, v.z]
    }
}

impl Vec3 {
    pub const X: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const Y: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const Z: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn to_array(self) -> [f64; 3] {
        self.into()
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }

    pub fn normalized(self) -> Result<Vec3> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(self.scale(1.0 / n))
    }

    /// Unit representative of the ray through `self`, with the first
    /// non-negligible coordinate positive.
    pub fn ray(self) -> Result<Vec3> {
        let u = self.normalized()?;
        let lead = u
            .to_array()
            .into_iter()
            .find(|c| c.abs() > 1e-12)
            .expect("unit vector has a nonzero coordinate");
        Ok(if lead < 0.0 { -u } else { u })
    }

    pub fn max_abs_diff(self, o: Vec3) -> f64 {
        let d = self - o;
        d.x.abs().max(d.y.abs()).max(d.z.abs())
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        self.scale(-1.0)
    }
}

impl Index<usize> for Vec3 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        match i {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("Vec3 index {i} out of range"),
        }
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.6}, {:.6}, {:.6})", self.x, self.y, self.z)
    }
}

/// Row-major 3×3 real matrix.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
    pub const ZERO: Mat3 = Mat3([[0.0; 3]; 3]);

    pub fn diag(a: f64, b: f64, c: f64) -> Mat3 {
        Mat3([[a, 0.0, 0.0], [0.0, b, 0.0], [0.0, 0.0, c]])
    }

    pub fn outer(u: Vec3, v: Vec3) -> Mat3 {
        let mut m = Mat3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = u[i] * v[j];
            }
        }
        m
    }

    pub fn transpose(&self) -> Mat3 {
        let mut t = Mat3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                t.0[i][j] = self.0[j][i];
            }
        }
        t
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn scale(&self, s: f64) -> Mat3 {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|x| *x *= s);
        m
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |a, &x| a.max(x.abs()))
    }

    pub fn max_abs_diff(&self, o: &Mat3) -> f64 {
        (*self - *o).max_abs()
    }

    pub fn asymmetry(&self) -> f64 {
        self.max_abs_diff(&self.transpose())
    }

    pub fn symmetrized(&self) -> Mat3 {
        (*self + self.transpose()).scale(0.5)
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn apply(&self, v: Vec3) -> Vec3 {
        let r = |i: usize| self.0[i][0] * v.x + self.0[i][1] * v.y + self.0[i][2] * v.z;
        Vec3::new(r(0), r(1), r(2))
    }

    /// `⟨v|M|v⟩` for a unit `v`.
    pub fn quadratic_form(&self, v: Vec3) -> f64 {
        v.dot(self.apply(v))
    }
}

impl Add for Mat3 {
    type Output = Mat3;
    fn add(mut self, o: Mat3) -> Mat3 {
        self += o;
        self
    }
}

impl AddAssign for Mat3 {
    fn add_assign(&mut self, o: Mat3) {
        for i in 0..3 {
            for j in 0..3 {
                self.0[i][j] += o.0[i][j];
            }
        }
    }
}

impl Sub for Mat3 {
    type Output = Mat3;
    fn sub(self, o: Mat3) -> Mat3 {
        self + o.scale(-1.0)
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, o: Mat3) -> Mat3 {
        let mut m = Mat3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = (0..3).map(|k| self.0[i][k] * o.0[k][j]).sum();
            }
        }
        m
    }
}

impl Mul<Vec3> for Mat3 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        self.apply(v)
    }
}

impl Index<(usize, usize)> for Mat3 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat3 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.0[i][j]
    }
}

/// Right-handed rotation about the z axis.
pub fn rotation_z(angle: f64) -> Mat3 {
    let (s, c) = angle.sin_cos();
    Mat3([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
}

/// `E = |v⟩⟨v| / ⟨v|v⟩`.
pub fn projector(v: Vec3) -> Result<Mat3> {
    let u = v.normalized()?;
    Ok(Mat3::outer(u, u))
}

/// `𝟙 − 2|x̂⟩⟨x̂|`: eigenvalue −1 on `x`, +1 on its orthogonal plane.
pub fn householder(x: Vec3) -> Result<Mat3> {
    Ok(Mat3::IDENTITY - projector(x)?.scale(2.0))
}

// ---------------------------------------------------------------------------
// The cycle-closing angle

/// Argument of the square root in the closed form of the rotation angle:
/// `11/9 + ∛(2262816 − 69984√69)/81 + 2^{5/3}/9 · ∛(97 + 3√69)`.
pub fn mep_alpha_radicand() -> f64 {
    let r69 = 69f64.sqrt();
    11.0 / 9.0 + (2_262_816.0 - 69_984.0 * r69).cbrt() / 81.0 + 2f64.powf(5.0 / 3.0) / 9.0 * (97.0 + 3.0 * r69).cbrt()
}

/// Rotation angle taking the first tripod onto the second so that the
/// cross-product chain closes (`v_5 ⟂ v_7`).
pub fn mep_alpha() -> f64 {
    // acot(x) = atan(1/x) for x > 0
    2.0 * (1.0 / mep_alpha_radicand().sqrt()).atan()
}

/// Closed form of the doubly degenerate eigenvalue of `E_5 + E_11 + E_17`:
/// `(10 − 10∛(2/(3√69 − 11)) + 2^{2/3}∛(3√69 − 11)) / 6`.
pub fn pseudocontext_eigenvalue_closed_form() -> f64 {
    let k = 3.0 * 69f64.sqrt() - 11.0;
    (10.0 - 10.0 * (2.0 / k).cbrt() + 2f64.powf(2.0 / 3.0) * k.cbrt()) / 6.0
}

// ---------------------------------------------------------------------------
// Labeled representations

/// Vertex ↦ vector. Vectors are ray representatives and need not be unit.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct LabeledFor {
    pub vectors: BTreeMap<VertexId, Vec3>,
}

impl LabeledFor {
    pub fn new() -> Self {
        LabeledFor::default()
    }

    pub fn insert(&mut self, label: impl Into<VertexId>, v: Vec3) {
        self.vectors.insert(label.into(), v);
    }

    pub fn get(&self, v: &VertexId) -> Result<Vec3> {
        self.vectors
            .get(v)
            .copied()
            .ok_or_else(|| Error::MissingLabel(v.to_string()))
    }

    /// Lookup by integer label.
    pub fn at(&self, n: u32) -> Vec3 {
        self.vectors[&VertexId::from(n)]
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn projector(&self, v: &VertexId) -> Result<Mat3> {
        projector(self.get(v)?)
    }

    pub fn householder(&self, v: &VertexId) -> Result<Mat3> {
        householder(self.get(v)?)
    }

    /// `label x y z` per line, 17 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.vectors {
            out.push_str(&format!("{} {:.16e} {:.16e} {:.16e}\n", k, v.x, v.y, v.z));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut f = LabeledFor::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let err = |column: usize, message: String| Error::Parse {
                line: i + 1,
                column,
                message,
            };
            if fields.len() != 4 {
                return Err(err(1, format!("expected `label x y z`, found {} fields", fields.len())));
            }
            let mut xyz = [0.0; 3];
            for (k, s) in fields[1..].iter().enumerate() {
                xyz[k] = s.parse().map_err(|_| {
                    let col = raw.find(s).map(|p| p + 1).unwrap_or(1);
                    err(col, format!("not a number: `{s}`"))
                })?;
            }
            let label = VertexId::new(fields[0])?;
            if f.vectors.insert(label, xyz.into()).is_some() {
                return Err(err(1, format!("duplicate label `{}`", fields[0])));
            }
        }
        Ok(f)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("finite vectors serialize")
    }
}

/// FOR of the Möbius–Escher–Penrose hypergraph: a tripod rotated about z
/// by [`mep_alpha`], then closed off with cross products.
pub fn build_mep_for() -> LabeledFor {
    let (r2, r3) = (2f64.sqrt(), 3f64.sqrt());
    let rot = rotation_z(mep_alpha());
    let mut v: BTreeMap<u32, Vec3> = BTreeMap::new();
    v.insert(4, Vec3::new(r2, 0.0, 1.0));
    v.insert(16, Vec3::new(-1.0, r3, r2));
    v.insert(10, Vec3::new(-1.0, -r3, r2));
    v.insert(2, rot * v[&4]);
    v.insert(14, rot * v[&16]);
    v.insert(8, rot * v[&10]);
    let chain: [(u32, u32, u32); 12] = [
        (3, 4, 2),
        (15, 16, 14),
        (9, 10, 8),
        (5, 3, 4),
        (17, 15, 16),
        (11, 9, 10),
        (1, 3, 2),
        (13, 15, 14),
        (7, 9, 8),
        (6, 7, 5),
        (12, 13, 11),
        (18, 1, 17),
    ];
    for (target, a, b) in chain {
        let c = v[&a].cross(v[&b]);
        v.insert(target, c);
    }
    to_labeled(v)
}

/// FOR of variant (a): the context `{1,17,18}` and its two rotations about
/// z by 2π/3 and 4π/3, completed by cross products.
pub fn build_variant_a_for() -> LabeledFor {
    let s3 = 3f64.sqrt();
    let mut v: BTreeMap<u32, Vec3> = BTreeMap::new();
    v.insert(1, Vec3::Y);
    v.insert(17, Vec3::new(1.0 / s3, 0.0, -(2.0f64 / 3.0).sqrt()));
    v.insert(18, Vec3::new((2.0f64 / 3.0).sqrt(), 0.0, 1.0 / s3));
    for (turns, [a, b, c]) in [(1.0, [7, 5, 6]), (2.0, [13, 11, 12])] {
        let rot = rotation_z(turns * 2.0 * PI / 3.0);
        v.insert(a, rot * v[&1]);
        v.insert(b, rot * v[&17]);
        v.insert(c, rot * v[&18]);
    }
    // (apex, partner, middle, left, right): middle ∝ apex × partner,
    // left = apex × middle, right = partner × middle.
    for (apex, partner, mid, left, right) in [(1, 5, 3, 2, 4), (7, 11, 9, 8, 10), (13, 17, 15, 14, 16)] {
        let m = v[&apex]
            .cross(v[&partner])
            .normalized()
            .expect("apex and partner are not parallel");
        v.insert(mid, m);
        v.insert(left, v[&apex].cross(m));
        v.insert(right, v[&partner].cross(m));
    }
    to_labeled(v)
}

/// A FOR of the pruned gadget `{1,2,3},{1,4,5},{2,6,7},{3,8,9}`: the
/// standard basis for `{1,2,3}` and each leg rotated by its own angle in
/// the plane orthogonal to its foot.
pub fn build_gadget_for() -> LabeledFor {
    let mut v: BTreeMap<u32, Vec3> = BTreeMap::new();
    v.insert(1, Vec3::X);
    v.insert(2, Vec3::Y);
    v.insert(3, Vec3::Z);
    let (a, b, c) = (0.4f64, 0.7f64, 1.1f64);
    // plane ⟂ x spanned by y, z
    v.insert(4, Vec3::new(0.0, a.cos(), a.sin()));
    v.insert(5, Vec3::new(0.0, -a.sin(), a.cos()));
    // plane ⟂ y spanned by z, x
    v.insert(6, Vec3::new(b.sin(), 0.0, b.cos()));
    v.insert(7, Vec3::new(b.cos(), 0.0, -b.sin()));
    // plane ⟂ z spanned by x, y
    v.insert(8, Vec3::new(c.cos(), c.sin(), 0.0));
    v.insert(9, Vec3::new(-c.sin(), c.cos(), 0.0));
    to_labeled(v)
}

fn to_labeled(v: BTreeMap<u32, Vec3>) -> LabeledFor {
    LabeledFor {
        vectors: v.into_iter().map(|(k, x)| (VertexId::from(k), x)).collect(),
    }
}

// ---------------------------------------------------------------------------
// Verification

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// Co-contextual vertices whose vectors are not orthogonal.
    NotOrthogonal,
    /// Vertices sharing no context whose vectors are (nearly) orthogonal.
    SpuriousOrthogonality,
    /// Distinct vertices labelled by the same ray.
    SameRay,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ForViolation {
    pub u: VertexId,
    pub v: VertexId,
    pub kind: ViolationKind,
    /// `|⟨û|v̂⟩|`
    pub overlap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FaithfulnessReport {
    pub faithful: bool,
    pub pairs_checked: usize,
    pub violations: Vec<ForViolation>,
    /// Largest `|⟨û|v̂⟩|` over co-contextual pairs.
    pub max_adjacent_overlap: f64,
    /// Smallest `|⟨û|v̂⟩|` over non-adjacent pairs.
    pub min_margin: f64,
    /// Smallest `1 − |⟨û|v̂⟩|` over all pairs.
    pub min_ray_separation: f64,
}

pub fn verify_for(h: &Hypergraph, f: &LabeledFor, tol_zero: f64, tol_margin: f64) -> Result<FaithfulnessReport> {
    if tol_zero.partial_cmp(&tol_margin) != Some(std::cmp::Ordering::Less) {
        return Err(Error::InvalidTolerance { tol_zero, tol_margin });
    }
    let rays = h
        .vertices()
        .iter()
        .map(|v| f.get(v)?.ray())
        .collect::<Result<Vec<_>>>()?;
    let adj = h.adjacency();
    let labels = h.vertices();
    let mut report = FaithfulnessReport {
        faithful: true,
        pairs_checked: 0,
        violations: Vec::new(),
        max_adjacent_overlap: 0.0,
        min_margin: f64::INFINITY,
        min_ray_separation: f64::INFINITY,
    };
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            report.pairs_checked += 1;
            let overlap = rays[i].dot(rays[j]).abs();
            report.min_ray_separation = report.min_ray_separation.min(1.0 - overlap);
            let kind = if adj[i][j] {
                report.max_adjacent_overlap = report.max_adjacent_overlap.max(overlap);
                (overlap > tol_zero).then_some(ViolationKind::NotOrthogonal)
            } else {
                report.min_margin = report.min_margin.min(overlap);
                if overlap < tol_margin {
                    Some(ViolationKind::SpuriousOrthogonality)
                } else if 1.0 - overlap < tol_margin {
                    Some(ViolationKind::SameRay)
                } else {
                    None
                }
            };
            if let Some(kind) = kind {
                report.violations.push(ForViolation {
                    u: labels[i].clone(),
                    v: labels[j].clone(),
                    kind,
                    overlap,
                });
            }
        }
    }
    report.faithful = report.violations.is_empty();
    Ok(report)
}

// ---------------------------------------------------------------------------
// Eigen-decomposition

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SymEigen {
    /// Descending.
    pub values: [f64; 3],
    /// Unit eigenvectors matching `values`, each with the ray sign
    /// convention applied.
    pub vectors: [Vec3; 3],
}

impl SymEigen {
    pub fn min(&self) -> (f64, Vec3) {
        (self.values[2], self.vectors[2])
    }

    pub fn max(&self) -> (f64, Vec3) {
        (self.values[0], self.vectors[0])
    }
}

fn off_diagonal_norm(a: &Mat3) -> f64 {
    (2.0 * (a[(0, 1)].powi(2) + a[(0, 2)].powi(2) + a[(1, 2)].powi(2))).sqrt()
}

/// Cyclic Jacobi diagonalization of a symmetric 3×3 matrix.
///
/// Sweeps rotate away `(0,1)`, `(0,2)`, `(1,2)` in turn until the
/// off-diagonal Frobenius norm drops to `tol` (scaled by `max(1, ‖m‖_max)`).
pub fn eigen_sym3(m: &Mat3, tol: f64) -> Result<SymEigen> {
    let scale = m.max_abs().max(1.0);
    let asym = m.asymmetry();
    if asym > tol * scale {
        return Err(Error::NotSymmetric(asym));
    }
    let mut a = m.symmetrized();
    let mut v = Mat3::IDENTITY;
    for _sweep in 0..64 {
        if off_diagonal_norm(&a) <= tol * scale {
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            let apq = a[(p, q)];
            if apq == 0.0 {
                continue;
            }
            let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
            let mut rot = Mat3::IDENTITY;
            rot[(p, p)] = c;
            rot[(q, q)] = c;
            rot[(p, q)] = s;
            rot[(q, p)] = -s;
            a = rot.transpose() * a * rot;
            a[(p, q)] = 0.0;
            a[(q, p)] = 0.0;
            v = v * rot;
        }
    }
    let mut pairs: Vec<(f64, Vec3)> = (0..3)
        .map(|k| (a[(k, k)], Vec3::new(v[(0, k)], v[(1, k)], v[(2, k)])))
        .collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    let vectors = [pairs[0].1.ray()?, pairs[1].1.ray()?, pairs[2].1.ray()?];
    Ok(SymEigen {
        values: [pairs[0].0, pairs[1].0, pairs[2].0],
        vectors,
    })
}
