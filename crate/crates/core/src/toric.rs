//! Rational convex polygons, Delzant smoothness, integral-affine
//! normalization, weight sequences and ECH capacities of the associated
//! convex toric domains.
//!
//! A polygon in standard position (origin corner, edges leaving it along
//! the positive axes) is enclosed by the standard triangle `T(h)` with
//! `h = max(x + y)`. The two components of `T(h) ∖ Ω` at the corners
//! `(h,0)` and `(0,h)` are carried by integral-affine corner maps to
//! standard-position concave regions, and expanded recursively: largest
//! inscribed standard triangle first, then the two residual pieces. The
//! collected triangle sizes are the weight sequence, and the ECH
//! capacities of the domain come from one integer minimization over that
//! sequence, which is the same index-constrained lattice problem the
//! capacity solver already handles.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::capacity::capacity_fk;
use crate::cremona::{reduce, Reduced};
use crate::lattice::CohomClass;
use crate::rational::{format_rational, parse_rational};
use crate::Error;

type Pt = (BigRational, BigRational);

fn pt_sub(a: &Pt, b: &Pt) -> Pt {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn cross(a: &Pt, b: &Pt) -> BigRational {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn coord_sum(p: &Pt) -> BigRational {
    &p.0 + &p.1
}

/// Primitive integer direction of a nonzero rational vector.
fn primitive(d: &Pt) -> crate::Result<(i64, i64)> {
    let denom = d.0.denom().lcm(d.1.denom());
    let nx = (&d.0 * BigRational::from_integer(denom.clone())).to_integer();
    let ny = (&d.1 * BigRational::from_integer(denom)).to_integer();
    let g = nx.gcd(&ny);
    if g.is_zero() {
        return Err(Error::InvalidPolygon("zero-length edge".into()));
    }
    let px = (&nx / &g)
        .to_i64()
        .ok_or_else(|| Error::MagnitudeOverflow("edge direction exceeds i64".into()))?;
    let py = (&ny / &g)
        .to_i64()
        .ok_or_else(|| Error::MagnitudeOverflow("edge direction exceeds i64".into()))?;
    Ok((px, py))
}

/// A strictly convex rational polygon with counterclockwise vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<Pt>,
}

impl Polygon {
    pub fn new(vertices: Vec<Pt>) -> crate::Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon(format!(
                "need at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let n = vertices.len();
        for i in 0..n {
            let p = &vertices[i];
            let q = &vertices[(i + 1) % n];
            let r = &vertices[(i + 2) % n];
            let turn = cross(&pt_sub(q, p), &pt_sub(r, q));
            if !turn.is_positive() {
                return Err(Error::InvalidPolygon(format!(
                    "vertices must be in strictly convex counterclockwise position \
                     (violated at index {})",
                    (i + 1) % n
                )));
            }
        }
        Ok(Polygon { vertices })
    }

    /// Builds a polygon from integer coordinates.
    pub fn from_ints(coords: &[(i64, i64)]) -> crate::Result<Self> {
        Polygon::new(
            coords
                .iter()
                .map(|&(x, y)| {
                    (
                        BigRational::from_integer(x.into()),
                        BigRational::from_integer(y.into()),
                    )
                })
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[Pt] {
        &self.vertices
    }

    /// Euclidean area by the shoelace formula (positive for CCW input).
    pub fn area(&self) -> BigRational {
        let n = self.vertices.len();
        let mut acc = BigRational::zero();
        for i in 0..n {
            acc += cross(&self.vertices[i], &self.vertices[(i + 1) % n]);
        }
        acc / BigRational::from_integer(2.into())
    }

    /// JSON form `{"vertices": [["p/q", "r/s"], …]}` with exact rationals.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self
                .vertices
                .iter()
                .map(|(x, y)| vec![format_rational(x), format_rational(y)])
                .collect::<Vec<_>>()
        })
    }

    pub fn from_json(v: &serde_json::Value) -> crate::Result<Self> {
        let arr = v
            .get("vertices")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse("polygon JSON needs a \"vertices\" array".into()))?;
        let mut vertices = Vec::with_capacity(arr.len());
        for item in arr {
            let pair = item
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Parse("each vertex must be a [x, y] pair".into()))?;
            let coord = |v: &serde_json::Value| -> crate::Result<BigRational> {
                match v {
                    serde_json::Value::String(s) => parse_rational(s),
                    serde_json::Value::Number(num) => num
                        .as_i64()
                        .map(|i| BigRational::from_integer(i.into()))
                        .ok_or_else(|| Error::Parse("non-integer numeric coordinate".into())),
                    _ => Err(Error::Parse("vertex coordinate must be string or integer".into())),
                }
            };
            vertices.push((coord(&pair[0])?, coord(&pair[1])?));
        }
        Polygon::new(vertices)
    }

    /// Primitive directions of the two edges leaving vertex `i`.
    fn corner_dirs(&self, i: usize) -> crate::Result<((i64, i64), (i64, i64))> {
        let n = self.vertices.len();
        let v = &self.vertices[i];
        let next = &self.vertices[(i + 1) % n];
        let prev = &self.vertices[(i + n - 1) % n];
        Ok((primitive(&pt_sub(next, v))?, primitive(&pt_sub(prev, v))?))
    }
}

/// Delzant smoothness: the primitive directions of the two edges at
/// every corner form a basis of the integer lattice.
pub fn is_delzant(p: &Polygon) -> bool {
    (0..p.vertices.len()).all(|i| match p.corner_dirs(i) {
        Ok((u, v)) => (u.0 * v.1 - u.1 * v.0).abs() == 1,
        Err(_) => false,
    })
}

/// True when the polygon already has its corner at the origin with the
/// two adjacent edges along the positive axes.
pub(crate) fn is_standard_position(p: &Polygon) -> bool {
    let origin = (BigRational::zero(), BigRational::zero());
    let Some(i) = p.vertices.iter().position(|v| *v == origin) else {
        return false;
    };
    match p.corner_dirs(i) {
        Ok((u, v)) => u == (1, 0) && v == (0, 1),
        Err(_) => false,
    }
}

/// All placements of the polygon with a unimodular corner at the origin
/// and its edges along the positive axes (both edge-to-axis assignments,
/// canonicalized to CCW order starting at the origin).
pub fn normalizations(p: &Polygon) -> crate::Result<Vec<Polygon>> {
    let n = p.vertices.len();
    let mut out = Vec::new();
    for i in 0..n {
        let (u1, u2) = p.corner_dirs(i)?;
        let det = u1.0 * u2.1 - u1.1 * u2.0;
        if det.abs() != 1 {
            continue;
        }
        // Send (u1, u2) to the two target assignments; M = T·U⁻¹ is
        // integral because the corner is unimodular.
        for (t1, t2) in [((1i64, 0i64), (0i64, 1i64)), ((0, 1), (1, 0))] {
            let inv = [
                [u2.1 * det, -u2.0 * det],
                [-u1.1 * det, u1.0 * det],
            ];
            // U⁻¹ = adj(U)/det with det = ±1 folded in.
            let m = [
                [
                    t1.0 * inv[0][0] + t2.0 * inv[1][0],
                    t1.0 * inv[0][1] + t2.0 * inv[1][1],
                ],
                [
                    t1.1 * inv[0][0] + t2.1 * inv[1][0],
                    t1.1 * inv[0][1] + t2.1 * inv[1][1],
                ],
            ];
            let base = p.vertices[i].clone();
            let mapped: Vec<Pt> = p
                .vertices
                .iter()
                .map(|v| {
                    let d = pt_sub(v, &base);
                    (
                        &d.0 * BigRational::from_integer(m[0][0].into())
                            + &d.1 * BigRational::from_integer(m[0][1].into()),
                        &d.0 * BigRational::from_integer(m[1][0].into())
                            + &d.1 * BigRational::from_integer(m[1][1].into()),
                    )
                })
                .collect();
            let m_det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            let oriented: Vec<Pt> = if m_det < 0 {
                mapped.into_iter().rev().collect()
            } else {
                mapped
            };
            let origin = (BigRational::zero(), BigRational::zero());
            let start = oriented
                .iter()
                .position(|v| *v == origin)
                .expect("corner maps to the origin");
            let rotated: Vec<Pt> = oriented[start..]
                .iter()
                .chain(&oriented[..start])
                .cloned()
                .collect();
            let candidate = Polygon::new(rotated)?;
            debug_assert!(is_standard_position(&candidate));
            if !out.contains(&candidate) {
                out.push(candidate);
            }
        }
    }
    if out.is_empty() {
        return Err(Error::NonDelzantCorner);
    }
    Ok(out)
}

/// Canonical normalization: the lexicographically smallest vertex list
/// over all admissible corner placements.
pub fn normalize(p: &Polygon) -> crate::Result<Polygon> {
    let mut all = normalizations(p)?;
    all.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    Ok(all.into_iter().next().unwrap())
}

/// A weight sequence `(head; left; right)`: the enclosing triangle size
/// and the expansion weights of the two corner components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSequence {
    head: BigRational,
    left: Vec<BigRational>,
    right: Vec<BigRational>,
}

impl WeightSequence {
    pub fn new(
        head: BigRational,
        left: Vec<BigRational>,
        right: Vec<BigRational>,
    ) -> crate::Result<Self> {
        if !head.is_positive() {
            return Err(Error::InvalidWeights("head must be positive".into()));
        }
        for w in left.iter().chain(&right) {
            if !w.is_positive() {
                return Err(Error::InvalidWeights("weights must be positive".into()));
            }
            if *w >= head {
                return Err(Error::InvalidWeights(format!(
                    "weight {} is not smaller than the head {}",
                    format_rational(w),
                    format_rational(&head)
                )));
            }
        }
        Ok(WeightSequence { head, left, right })
    }

    pub fn head(&self) -> &BigRational {
        &self.head
    }

    pub fn left(&self) -> &[BigRational] {
        &self.left
    }

    pub fn right(&self) -> &[BigRational] {
        &self.right
    }

    /// Number of blowups of the associated closed surface.
    pub fn n(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// The unsorted cohomology vector `(head | left ++ right)`.
    pub fn to_cohom(&self) -> CohomClass {
        let mut x = self.left.clone();
        x.extend(self.right.iter().cloned());
        CohomClass::new(self.head.clone(), x)
    }

    /// The tail weights as one multiset (sorted descending), the part of
    /// the sequence that is invariant under the left/right split.
    pub fn tail_multiset(&self) -> Vec<BigRational> {
        let mut all: Vec<BigRational> = self.left.iter().chain(&self.right).cloned().collect();
        all.sort_by(|a, b| b.cmp(a));
        all
    }
}

impl fmt::Display for WeightSequence {
    /// Text form `head;b1,b2;c1,c2` (empty sections allowed).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_list = |l: &[BigRational]| {
            l.iter().map(format_rational).collect::<Vec<_>>().join(",")
        };
        write!(
            f,
            "{};{};{}",
            format_rational(&self.head),
            fmt_list(&self.left),
            fmt_list(&self.right)
        )
    }
}

impl FromStr for WeightSequence {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        let parts: Vec<&str> = s.trim().split(';').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(
                "weight sequence must be head;b1,b2,...;c1,c2,...".into(),
            ));
        }
        let head = parse_rational(parts[0])?;
        let list = |p: &str| -> crate::Result<Vec<BigRational>> {
            let t = p.trim();
            if t.is_empty() {
                return Ok(Vec::new());
            }
            t.split(',').map(parse_rational).collect()
        };
        WeightSequence::new(head, list(parts[1])?, list(parts[2])?)
    }
}

const EXPANSION_STEP_CAP: usize = 100_000;

/// A concave standard-position region, stored as its upper boundary path
/// from the y-axis endpoint `(0, q)` to the x-axis endpoint `(p, 0)`;
/// the path turns left and the region lies beneath it.
struct ConcavePath(Vec<Pt>);

impl ConcavePath {
    fn expand(self, weights: &mut Vec<BigRational>, steps: &mut usize) -> crate::Result<()> {
        let path = self.0;
        if path.len() < 2 {
            return Ok(());
        }
        *steps += 1;
        if *steps > EXPANSION_STEP_CAP {
            return Err(Error::ExpansionStepCap(EXPANSION_STEP_CAP));
        }
        debug_assert!(path.first().unwrap().0.is_zero() && path.last().unwrap().1.is_zero());
        if path.first().unwrap().1.is_zero() || path.last().unwrap().0.is_zero() {
            return Ok(());
        }
        // Size of the largest inscribed standard triangle.
        let m = path.iter().map(coord_sum).min().unwrap();
        if m.is_zero() {
            // The path passes through the origin; no area, no weights.
            return Ok(());
        }
        weights.push(m.clone());
        let lo = path.iter().position(|v| coord_sum(v) == m).unwrap();
        let hi = path.len() - 1 - path.iter().rev().position(|v| coord_sum(v) == m).unwrap();
        debug_assert!((lo..hi).all(|i| coord_sum(&path[i]) == m));

        if lo >= 1 {
            // Component against the y-axis: shear x+y = m down to the
            // x-axis, keeping the y-axis fixed.
            let left: Vec<Pt> = path[..=lo]
                .iter()
                .map(|(x, y)| (x.clone(), x + y - &m))
                .collect();
            ConcavePath(left).expand(weights, steps)?;
        }
        if hi + 1 < path.len() {
            // Component against the x-axis: shear x+y = m onto the
            // y-axis, keeping the x-axis fixed.
            let right: Vec<Pt> = path[hi..]
                .iter()
                .map(|(x, y)| (x + y - &m, y.clone()))
                .collect();
            ConcavePath(right).expand(weights, steps)?;
        }
        Ok(())
    }
}

/// Computes the weight sequence of a polygon in standard position.
///
/// The head is `max(x + y)` over the vertices (the smallest enclosing
/// standard triangle); `left` collects the expansion of the complement
/// component at `(head, 0)`, `right` the one at `(0, head)`. Only the
/// multiset `{head} ∪ left ∪ right` is geometrically meaningful.
pub fn weight_sequence(p: &Polygon) -> crate::Result<WeightSequence> {
    if !is_standard_position(p) {
        return Err(Error::InvalidPolygon(
            "weight expansion needs a polygon in standard position \
             (origin corner with edges along the positive axes); normalize first"
                .into(),
        ));
    }
    let verts = p.vertices();
    let origin_idx = verts
        .iter()
        .position(|v| v.0.is_zero() && v.1.is_zero())
        .unwrap();
    // Upper boundary from the x-axis endpoint CCW to the y-axis endpoint.
    let path: Vec<Pt> = (1..verts.len())
        .map(|off| verts[(origin_idx + off) % verts.len()].clone())
        .collect();
    let head = path.iter().map(coord_sum).max().unwrap();
    let lo = path.iter().position(|v| coord_sum(v) == head).unwrap();
    let hi = path.len() - 1 - path.iter().rev().position(|v| coord_sum(v) == head).unwrap();

    let mut steps = 0usize;
    // Component at (head, 0): polygon boundary from the x-axis endpoint
    // up to the first contact with the hypotenuse, reflected so the
    // hypotenuse becomes the y-axis.
    let mut left = Vec::new();
    if lo >= 1 {
        let mapped: Vec<Pt> = path[..=lo]
            .iter()
            .rev()
            .map(|(x, y)| (&head - x - y, y.clone()))
            .collect();
        ConcavePath(mapped).expand(&mut left, &mut steps)?;
    }
    // Component at (0, head): boundary from the last contact to the
    // y-axis endpoint, reflected so the hypotenuse becomes the x-axis.
    let mut right = Vec::new();
    if hi + 1 < path.len() {
        let mapped: Vec<Pt> = path[hi..]
            .iter()
            .rev()
            .map(|(x, y)| (x.clone(), &head - x - y))
            .collect();
        ConcavePath(mapped).expand(&mut right, &mut steps)?;
    }
    WeightSequence::new(head, left, right)
}

/// `c_k` of the ball `B(a)`: `d·a` where `d(d+1) ≤ 2k ≤ d(d+3)`.
pub fn ball_capacity(a: &BigRational, k: u32) -> BigRational {
    if k == 0 {
        return BigRational::zero();
    }
    let two_k = 2 * k as u64;
    let mut d: u64 = 1;
    while d * (d + 3) < two_k {
        d += 1;
    }
    debug_assert!(d * (d + 1) <= two_k && two_k <= d * (d + 3));
    a * BigRational::from_integer(d.into())
}

/// ECH capacity of the convex toric domain with the given weight
/// sequence: the minimum of `x·head − Σ yᵢ·leftᵢ − Σ zⱼ·rightⱼ` over
/// non-negative integers subject to
/// `x(x+3) − Σ yᵢ(yᵢ+1) − Σ zⱼ(zⱼ+1) ≥ 2k`, which is exactly the
/// index-constrained minimization the capacity solver performs on the
/// class `xH − Σ yᵢEᵢ − Σ zⱼE_{k+j}` against `(head | left, right)`.
pub fn ech_capacity(w: &WeightSequence, k: u32) -> crate::Result<BigRational> {
    if k == 0 {
        return Ok(BigRational::zero());
    }
    Ok(capacity_fk(&w.to_cohom(), k)?.value)
}

/// Sorts and Cremona-reduces `(head | left ++ right)` into the closed
/// fundamental domain; the result is the symplectic class of the closed
/// toric surface, with the boundary flag set for limit cases.
pub fn weights_to_class(w: &WeightSequence) -> crate::Result<Reduced> {
    reduce(&w.to_cohom())
}

/// One row of a polygon capacity table.
#[derive(Debug, Clone, PartialEq)]
pub struct CapacityRow {
    pub k: u32,
    pub ech: BigRational,
    /// `f_k` of the closed surface, when the crosscheck ran.
    pub fk: Option<BigRational>,
    pub equal: Option<bool>,
}

/// Computes `c_k` for each `k`, optionally cross-checking against `f_k`
/// of the closed toric surface obtained from the same weights.
///
/// The crosscheck path requires a Delzant polygon; the ECH-only path
/// accepts any rational convex polygon that is in (or can be brought
/// into) standard position.
pub fn capacities_of_polygon(
    p: &Polygon,
    ks: std::ops::RangeInclusive<u32>,
    crosscheck: bool,
) -> crate::Result<Vec<CapacityRow>> {
    if crosscheck && !is_delzant(p) {
        return Err(Error::InvalidPolygon(
            "the f_k crosscheck requires a Delzant polygon; rerun without crosscheck".into(),
        ));
    }
    let standard = if is_standard_position(p) {
        p.clone()
    } else {
        normalize(p)?
    };
    let w = weight_sequence(&standard)?;
    let omega = w.to_cohom();
    use rayon::prelude::*;
    let ks: Vec<u32> = ks.collect();
    ks.par_iter()
        .map(|&k| {
            let ech = ech_capacity(&w, k)?;
            let (fk, equal) = if crosscheck {
                let f = capacity_fk(&omega, k)?.value;
                let eq = f == ech;
                (Some(f), Some(eq))
            } else {
                (None, None)
            };
            Ok(CapacityRow { k, ech, fk, equal })
        })
        .collect()
}

/// Chops the corner at `vertex` by size `t`: replaces the vertex with
/// the two points at lattice distance `t` along its edges. Fails when
/// `t` reaches either adjacent edge's length.
pub fn chop(p: &Polygon, vertex: usize, t: &BigRational) -> crate::Result<Polygon> {
    if !t.is_positive() {
        return Err(Error::InvalidPolygon("chop size must be positive".into()));
    }
    let n = p.vertices.len();
    if vertex >= n {
        return Err(Error::InvalidPolygon(format!(
            "vertex index {vertex} out of range"
        )));
    }
    let v = &p.vertices[vertex];
    let next = &p.vertices[(vertex + 1) % n];
    let prev = &p.vertices[(vertex + n - 1) % n];
    let (d_out, d_in) = p.corner_dirs(vertex)?;
    let lattice_len = |target: &Pt, dir: (i64, i64)| -> BigRational {
        let d = pt_sub(target, v);
        if dir.0 != 0 {
            &d.0 / BigRational::from_integer(dir.0.into())
        } else {
            &d.1 / BigRational::from_integer(dir.1.into())
        }
    };
    if *t >= lattice_len(next, d_out) || *t >= lattice_len(prev, d_in) {
        return Err(Error::InvalidPolygon(format!(
            "chop size {} swallows an adjacent edge",
            format_rational(t)
        )));
    }
    let shift = |dir: (i64, i64)| -> Pt {
        (
            &v.0 + t * BigRational::from_integer(dir.0.into()),
            &v.1 + t * BigRational::from_integer(dir.1.into()),
        )
    };
    let mut vertices = Vec::with_capacity(n + 1);
    for (i, u) in p.vertices.iter().enumerate() {
        if i == vertex {
            vertices.push(shift(d_in));
            vertices.push(shift(d_out));
        } else {
            vertices.push(u.clone());
        }
    }
    Polygon::new(vertices)
}

/// The standard triangle `T(a)` with vertices `(0,0), (a,0), (0,a)`.
pub fn standard_triangle(a: &BigRational) -> Polygon {
    Polygon::new(vec![
        (BigRational::zero(), BigRational::zero()),
        (a.clone(), BigRational::zero()),
        (BigRational::zero(), a.clone()),
    ])
    .expect("standard triangle is convex")
}

/// Axis-aligned rectangle `[0, w] × [0, h]`.
pub fn rectangle(w: &BigRational, h: &BigRational) -> Polygon {
    Polygon::new(vec![
        (BigRational::zero(), BigRational::zero()),
        (w.clone(), BigRational::zero()),
        (w.clone(), h.clone()),
        (BigRational::zero(), h.clone()),
    ])
    .expect("rectangle is convex")
}

/// The built-in Delzant corpus used by the verification runner and the
/// crosscheck suites: simplices, rectangles, and iterated corner chops
/// of T(5) and T(7), including the four-chop reconstruction with weight
/// multiset {7; 3,1; 2,1}.
pub fn standard_corpus() -> Vec<(String, Polygon)> {
    let r = |v: i64| BigRational::from_integer(v.into());
    let rf = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let mut out: Vec<(String, Polygon)> = Vec::new();

    for a in [1i64, 2, 3, 5] {
        out.push((format!("T({a})"), standard_triangle(&r(a))));
    }
    out.push(("unit square".into(), rectangle(&r(1), &r(1))));
    out.push(("2x1 rectangle".into(), rectangle(&r(2), &r(1))));
    out.push(("3x2 rectangle".into(), rectangle(&r(3), &r(2))));
    out.push(("half square".into(), rectangle(&rf(1, 2), &rf(1, 2))));

    let t5 = standard_triangle(&r(5));
    // T(5) with one corner chop of size 1 at (5, 0).
    let t5c1 = chop(&t5, 1, &r(1)).unwrap();
    out.push(("T(5) chop 1".into(), t5c1));
    // T(5) chopped by 2 at (5,0) and 1 at (0,5).
    let t5c2 = chop(&chop(&t5, 1, &r(2)).unwrap(), 3, &r(1)).unwrap();
    out.push(("T(5) chop 2+1".into(), t5c2));
    // T(5) chopped by 1 at every corner, including the origin.
    let t5c3 = chop(
        &chop(&chop(&t5, 0, &r(1)).unwrap(), 2, &r(1)).unwrap(),
        4,
        &r(1),
    )
    .unwrap();
    out.push(("T(5) three corners".into(), t5c3));

    let t7 = standard_triangle(&r(7));
    // Chops 3 then 1 near (0,7) and 2 then 1 near (7,0); the weight
    // multiset is {7; 3,1; 2,1} and the surface class (7 | 3,2,1,1).
    let heptagon = {
        let s1 = chop(&t7, 2, &r(3)).unwrap(); // (0,0),(7,0),(3,4),(0,4)
        let s2 = chop(&s1, 2, &r(1)).unwrap(); // adds (4,3),(2,4)
        let s3 = chop(&s2, 1, &r(2)).unwrap(); // chops (7,0) by 2
        chop(&s3, 1, &r(1)).unwrap() // chops (5,0) by 1
    };
    out.push(("chopped T(7)".into(), heptagon));
    out.push((
        "T(7) chop 3".into(),
        chop(&t7, 2, &r(3)).unwrap(),
    ));
    // Hexagon: T(3) with all three corners chopped by 1.
    let hex = chop(
        &chop(&chop(&standard_triangle(&r(3)), 0, &r(1)).unwrap(), 2, &r(1)).unwrap(),
        4,
        &r(1),
    )
    .unwrap();
    out.push(("hexagon".into(), hex));

    out
}
