//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's search, hull or coloring code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use contextuality::Hypergraph;

/// Context membership as vertex indices.
pub fn contexts(h: &Hypergraph) -> Vec<Vec<usize>> {
    h.contexts()
        .iter()
        .map(|c| c.members().iter().map(|m| h.index_of(m).unwrap()).collect())
        .collect()
}

/// All 0/1 rows with exactly one 1 per context, in descending
/// lexicographic order.
pub fn exhaustive_states(h: &Hypergraph) -> Vec<Vec<u8>> {
    let n = h.vertex_count();
    assert!(n <= 20, "exhaustive filter limited to 20 vertices");
    let ctx = contexts(h);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let row: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
        if ctx.iter().all(|c| c.iter().map(|&i| row[i] as u32).sum::<u32>() == 1) {
            out.push(row);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Every assignment in `{1..k}^n` checked for rainbow contexts.
pub fn naive_colorings(h: &Hypergraph, k: u8) -> BTreeSet<Vec<u8>> {
    let n = h.vertex_count();
    let ctx = contexts(h);
    let total = (k as u64).pow(n as u32);
    let mut out = BTreeSet::new();
    for mut code in 0..total {
        let mut row = vec![0u8; n];
        for x in row.iter_mut() {
            *x = (code % k as u64) as u8 + 1;
            code /= k as u64;
        }
        let rainbow = ctx.iter().all(|c| {
            let s: BTreeSet<u8> = c.iter().map(|&i| row[i]).collect();
            s.len() == c.len()
        });
        if rainbow {
            out.insert(row);
        }
    }
    out
}

/// Colorings of a hypergraph whose contexts all have size 3: each color
/// class is a two-valued state and the three classes partition the
/// vertices, so colorings are ordered triples of disjoint states.
pub fn colorings_from_states(states: &[Vec<u8>]) -> BTreeSet<Vec<u8>> {
    let mut out = BTreeSet::new();
    for a in states {
        for b in states {
            for c in states {
                let ok = (0..a.len()).all(|i| a[i] + b[i] + c[i] == 1);
                if ok {
                    out.insert((0..a.len()).map(|i| a[i] + 2 * b[i] + 3 * c[i]).collect());
                }
            }
        }
    }
    out
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Row-reduces in place and returns the pivot columns.
fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(m: &[Vec<BigRational>]) -> usize {
    rref(&mut m.to_vec()).len()
}

/// Basis of `{x : m x = 0}` for a matrix with `cols` columns.
pub fn nullspace(m: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); cols];
            x[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -a[r][f].clone();
            }
            x
        })
        .collect()
}

fn lifted(points: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    points
        .iter()
        .map(|p| std::iter::once(q(1)).chain(p.iter().map(|&x| q(x))).collect())
        .collect()
}

pub fn affine_dimension(points: &[Vec<i64>]) -> usize {
    rank(&lifted(points)) - 1
}

/// Scales a rational vector to coprime integers, keeping the sign.
pub fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Facets of `conv(points)` as their slack vectors over the points,
/// normalized to coprime nonnegative integers. A slack vector determines
/// a facet independently of how its inequality is written.
///
/// Every facet contains `dim` affinely independent points, so all
/// `dim`-subsets are tried.
pub fn brute_force_facets(points: &[Vec<i64>]) -> (usize, BTreeSet<Vec<BigInt>>) {
    let rows = lifted(points);
    let cols = rows[0].len();
    let dim = rank(&rows) - 1;
    let mut facets = BTreeSet::new();
    if dim == 0 {
        return (0, facets);
    }
    let mut subset: Vec<usize> = (0..dim).collect();
    loop {
        let sub: Vec<Vec<BigRational>> = subset.iter().map(|&i| rows[i].clone()).collect();
        if rank(&sub) == dim {
            for h in nullspace(&sub, cols) {
                let slack: Vec<BigRational> = rows
                    .iter()
                    .map(|r| r.iter().zip(&h).map(|(a, b)| a * b).sum())
                    .collect();
                if slack.iter().all(Zero::is_zero) {
                    continue;
                }
                let oriented: Vec<BigRational> = if slack.iter().all(|s| !s.is_negative()) {
                    slack
                } else if slack.iter().all(|s| !s.is_positive()) {
                    slack.into_iter().map(|s| -s).collect()
                } else {
                    // the hyperplane through this subset is unique on the
                    // hull, so one basis vector decides
                    break;
                };
                facets.insert(primitive(&oriented));
                break;
            }
        }
        // next combination
        let n = points.len();
        let mut i = dim;
        loop {
            if i == 0 {
                return (dim, facets);
            }
            i -= 1;
            if subset[i] < n - dim + i {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..dim {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Slack vector of a library form over the points, normalized as in
/// [`brute_force_facets`].
pub fn slack_key(form: &contextuality::polytope::LinearForm, points: &[Vec<i64>]) -> Vec<BigInt> {
    let slack: Vec<BigRational> = points.iter().map(|p| form.evaluate_int(p)).collect();
    primitive(&slack)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Soundness and tightness of an H-representation against its points:
/// equalities vanish on every point, inequalities hold on every point,
/// and each inequality is tight on a face of dimension `dim - 1`.
pub fn cross_validate(rep: &contextuality::polytope::HRepresentation, points: &[Vec<i64>]) -> Result<(), String> {
    let dim = affine_dimension(points);
    if rep.dimension != dim {
        return Err(format!("dimension {} but points span {dim}", rep.dimension));
    }
    if rep.equalities.len() + dim != rep.ambient_dimension {
        return Err(format!("{} equalities for dimension {dim}", rep.equalities.len()));
    }
    for e in &rep.equalities {
        if !points.iter().all(|p| e.evaluate_int(p).is_zero()) {
            return Err(format!("equality {e} fails on a vertex"));
        }
    }
    for f in &rep.inequalities {
        let slack: Vec<BigRational> = points.iter().map(|p| f.evaluate_int(p)).collect();
        if slack.iter().any(Signed::is_negative) {
            return Err(format!("{f} cuts a vertex"));
        }
        let tight: Vec<Vec<i64>> = points
            .iter()
            .zip(&slack)
            .filter(|(_, s)| s.is_zero())
            .map(|(p, _)| p.clone())
            .collect();
        if tight.is_empty() || affine_dimension(&tight) + 1 != dim {
            return Err(format!("{f} is not a facet"));
        }
    }
    Ok(())
}
