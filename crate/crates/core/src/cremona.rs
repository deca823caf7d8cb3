//! The symmetry group of the blowup lattice and its cone geometry.
//!
//! The group preserving the canonical class `K₀` is generated by
//! coordinate swaps of the `Eᵢ` and by reflections along the square `−2`
//! classes `H − Eᵢ − Eⱼ − Eₖ` (Cremona moves). This module implements the
//! reflections on homology and cohomology, the reduction of a symplectic
//! class to the fundamental domain of that action, the reduced / c₁-nef
//! cone predicates, the vertex pattern of the normalized c₁-nef polytope,
//! and the dominance partial order on classes decided by vertex
//! evaluation.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::lattice::{CohomClass, HomologyClass};
use crate::rational::bit_size;
use crate::Error;

/// One move of a reduction: a coordinate permutation or a Cremona
/// reflection along `H − Eᵢ − Eⱼ − Eₖ`.
///
/// `Sort { perm }` sends coordinate vector `x` to `y` with
/// `y[m] = x[perm[m]]`; indices in `perm` and in `Cremona` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionStep {
    Sort { perm: Vec<usize> },
    Cremona { i: usize, j: usize, k: usize },
}

/// An ordered list of moves; replaying it on the input reproduces the
/// output, and replaying the inverse list on the output recovers the
/// input.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionTrace {
    steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn steps(&self) -> &[ReductionStep] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    fn push(&mut self, step: ReductionStep) {
        self.steps.push(step);
    }

    /// Replays the trace on a cohomology class.
    pub fn replay_cohom(&self, w: &CohomClass) -> crate::Result<CohomClass> {
        let mut cur = w.clone();
        for step in &self.steps {
            cur = apply_step_cohom(&cur, step)?;
        }
        Ok(cur)
    }

    /// Replays the trace on a homology class (the paired action).
    pub fn replay_class(&self, a: &HomologyClass) -> crate::Result<HomologyClass> {
        let mut cur = a.clone();
        for step in &self.steps {
            cur = apply_step_class(&cur, step)?;
        }
        Ok(cur)
    }

    /// Replays the inverse trace, undoing the reduction.
    pub fn replay_cohom_inverse(&self, w: &CohomClass) -> crate::Result<CohomClass> {
        let mut cur = w.clone();
        for step in self.steps.iter().rev() {
            cur = apply_step_cohom(&cur, &invert_step(step))?;
        }
        Ok(cur)
    }

    pub fn replay_class_inverse(&self, a: &HomologyClass) -> crate::Result<HomologyClass> {
        let mut cur = a.clone();
        for step in self.steps.iter().rev() {
            cur = apply_step_class(&cur, &invert_step(step))?;
        }
        Ok(cur)
    }

    /// JSON form: a list of `{"op":"sort","perm":[…]}` and
    /// `{"op":"cremona","ijk":[i,j,k]}` objects.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.steps
                .iter()
                .map(|s| match s {
                    ReductionStep::Sort { perm } => serde_json::json!({"op": "sort", "perm": perm}),
                    ReductionStep::Cremona { i, j, k } => {
                        serde_json::json!({"op": "cremona", "ijk": [i, j, k]})
                    }
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> crate::Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("trace must be a JSON array".into()))?;
        let mut steps = Vec::with_capacity(arr.len());
        for item in arr {
            let op = item
                .get("op")
                .and_then(|o| o.as_str())
                .ok_or_else(|| Error::Parse("trace step missing \"op\"".into()))?;
            match op {
                "sort" => {
                    let perm = item
                        .get("perm")
                        .and_then(|p| p.as_array())
                        .ok_or_else(|| Error::Parse("sort step missing \"perm\"".into()))?
                        .iter()
                        .map(|x| {
                            x.as_u64()
                                .map(|u| u as usize)
                                .ok_or_else(|| Error::Parse("bad permutation entry".into()))
                        })
                        .collect::<crate::Result<Vec<usize>>>()?;
                    steps.push(ReductionStep::Sort { perm });
                }
                "cremona" => {
                    let ijk = item
                        .get("ijk")
                        .and_then(|p| p.as_array())
                        .filter(|a| a.len() == 3)
                        .ok_or_else(|| Error::Parse("cremona step needs \"ijk\" of length 3".into()))?;
                    let idx: Vec<usize> = ijk
                        .iter()
                        .map(|x| {
                            x.as_u64()
                                .map(|u| u as usize)
                                .ok_or_else(|| Error::Parse("bad reflection index".into()))
                        })
                        .collect::<crate::Result<Vec<usize>>>()?;
                    steps.push(ReductionStep::Cremona {
                        i: idx[0],
                        j: idx[1],
                        k: idx[2],
                    });
                }
                other => return Err(Error::Parse(format!("unknown trace op {other:?}"))),
            }
        }
        Ok(ReductionTrace { steps })
    }
}

fn invert_step(step: &ReductionStep) -> ReductionStep {
    match step {
        // A reflection is an involution.
        ReductionStep::Cremona { i, j, k } => ReductionStep::Cremona { i: *i, j: *j, k: *k },
        ReductionStep::Sort { perm } => {
            let mut inv = vec![0; perm.len()];
            for (pos, &src) in perm.iter().enumerate() {
                inv[src - 1] = pos + 1;
            }
            ReductionStep::Sort { perm: inv }
        }
    }
}

fn apply_step_cohom(w: &CohomClass, step: &ReductionStep) -> crate::Result<CohomClass> {
    match step {
        ReductionStep::Sort { perm } => {
            if perm.len() != w.n() {
                return Err(Error::Parse("permutation length mismatch".into()));
            }
            let x = perm.iter().map(|&src| w.x()[src - 1].clone()).collect();
            Ok(CohomClass::new(w.x0().clone(), x))
        }
        ReductionStep::Cremona { i, j, k } => reflect_cohom(w, *i, *j, *k),
    }
}

fn apply_step_class(a: &HomologyClass, step: &ReductionStep) -> crate::Result<HomologyClass> {
    match step {
        ReductionStep::Sort { perm } => {
            if perm.len() != a.n() {
                return Err(Error::Parse("permutation length mismatch".into()));
            }
            let b = perm.iter().map(|&src| a.b()[src - 1]).collect();
            Ok(HomologyClass::new(a.a(), b))
        }
        ReductionStep::Cremona { i, j, k } => reflect_class(a, *i, *j, *k),
    }
}

fn check_indices(i: usize, j: usize, k: usize, n: usize) -> crate::Result<()> {
    let distinct = i != j && j != k && i != k;
    let in_range = i >= 1 && j >= 1 && k >= 1 && i <= n && j <= n && k <= n;
    if !distinct || !in_range || n < 3 {
        return Err(Error::InvalidReflectionIndices { i, j, k, n });
    }
    Ok(())
}

/// Reflection of a homology class along `C = H − Eᵢ − Eⱼ − Eₖ`:
/// `A ↦ A + (A·C)·C`. An involution preserving the intersection form,
/// the canonical class and the index.
pub fn reflect_class(a: &HomologyClass, i: usize, j: usize, k: usize) -> crate::Result<HomologyClass> {
    check_indices(i, j, k, a.n())?;
    let (bi, bj, bk) = (a.b()[i - 1], a.b()[j - 1], a.b()[k - 1]);
    // A·C = a − bᵢ − bⱼ − bₖ
    let d = a.a() - bi - bj - bk;
    let mut b = a.b().to_vec();
    b[i - 1] += d;
    b[j - 1] += d;
    b[k - 1] += d;
    Ok(HomologyClass::new(a.a() + d, b))
}

/// The dual reflection on cohomology, with the same coordinate formula;
/// pairings are preserved: `area(reflect(w), reflect(A)) = area(w, A)`.
pub fn reflect_cohom(w: &CohomClass, i: usize, j: usize, k: usize) -> crate::Result<CohomClass> {
    check_indices(i, j, k, w.n())?;
    let (xi, xj, xk) = (
        w.x()[i - 1].clone(),
        w.x()[j - 1].clone(),
        w.x()[k - 1].clone(),
    );
    let d = w.x0() - &xi - &xj - &xk;
    let mut x = w.x().to_vec();
    x[i - 1] += &d;
    x[j - 1] += &d;
    x[k - 1] += &d;
    Ok(CohomClass::new(w.x0() + &d, x))
}

/// Membership in the reduced cone (the fundamental domain of the
/// `K₀`-preserving action):
///
/// * `n = 0`: `x₀ > 0`;
/// * `n = 1`: `0 < x₁ < x₀`;
/// * `n = 2`: `0 < x₂ ≤ x₁`, `x₁ + x₂ < x₀`;
/// * `n ≥ 3`: `0 < xₙ ≤ … ≤ x₁`, `x₁+x₂+x₃ ≤ x₀` and `Σ xᵢ² < x₀²`.
pub fn is_reduced(w: &CohomClass) -> bool {
    let x0 = w.x0();
    if !x0.is_positive() {
        return false;
    }
    let x = w.x();
    let n = x.len();
    if n == 0 {
        return true;
    }
    if !x[n - 1].is_positive() {
        return false;
    }
    if x.windows(2).any(|p| p[0] < p[1]) {
        return false;
    }
    match n {
        1 => &x[0] < x0,
        2 => &(&x[0] + &x[1]) < x0,
        _ => {
            let triple = &x[0] + &x[1] + &x[2];
            triple <= *x0 && w.self_intersection().is_positive()
        }
    }
}

/// Strict c₁-nefness: `3x₀ − Σ xᵢ > 0`.
pub fn is_c1nef(w: &CohomClass) -> bool {
    w.c1_pairing().is_positive()
}

/// Closure variant: `3x₀ − Σ xᵢ ≥ 0`.
pub fn is_c1nef_closure(w: &CohomClass) -> bool {
    !w.c1_pairing().is_negative()
}

/// A class reduced into the closed fundamental domain, together with the
/// moves that got it there. `boundary` is set when the output sits on the
/// closure rather than the open domain (a zero coordinate, a saturated
/// linear wall, or a null self-intersection for `n ≥ 3`).
#[derive(Debug, Clone, PartialEq)]
pub struct Reduced {
    pub omega: CohomClass,
    pub trace: ReductionTrace,
    pub boundary: bool,
}

/// Reduces a symplectic class to the fundamental domain by alternating
/// descending sorts with `(1,2,3)`-reflections while `x₁+x₂+x₃ > x₀`.
///
/// Each reflection strictly decreases `x₀` inside a fixed discrete
/// subgroup of the rationals, so the loop terminates; the iteration cap
/// (ten times the bit size of the input) only trips on inputs outside the
/// cone-orbit and is reported as an error, never truncated.
pub fn reduce(w: &CohomClass) -> crate::Result<Reduced> {
    let n = w.n();
    let cap = 10 * bit_size(&w.all_coords()).max(8);
    let mut cur = w.clone();
    let mut trace = ReductionTrace::default();
    let mut reflections = 0usize;

    loop {
        if !cur.x0().is_positive() {
            return Err(Error::NotInSymplecticCone);
        }
        // Stable descending sort, recorded only when it moves something.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&p, &q| cur.x()[q].cmp(&cur.x()[p]).then(p.cmp(&q)));
        if order.iter().enumerate().any(|(pos, &src)| pos != src) {
            let perm: Vec<usize> = order.iter().map(|&src| src + 1).collect();
            let step = ReductionStep::Sort { perm };
            cur = apply_step_cohom(&cur, &step)?;
            trace.push(step);
        }
        if n >= 3 {
            let defect = &cur.x()[0] + &cur.x()[1] + &cur.x()[2] - cur.x0();
            if defect.is_positive() {
                reflections += 1;
                if reflections > cap {
                    return Err(Error::ReductionCapExceeded(cap));
                }
                let step = ReductionStep::Cremona { i: 1, j: 2, k: 3 };
                cur = apply_step_cohom(&cur, &step)?;
                trace.push(step);
                continue;
            }
        }
        break;
    }

    // The loop leaves a sorted vector with x₁+x₂+x₃ ≤ x₀ (n ≥ 3). Decide
    // between the open domain, its boundary, and the outside.
    if !closure_membership(&cur) {
        return Err(Error::NotInSymplecticCone);
    }
    let boundary = boundary_flag(&cur);
    Ok(Reduced {
        omega: cur,
        trace,
        boundary,
    })
}

/// Membership in the closed fundamental domain, assuming sorted input
/// with a non-positive reflection defect.
fn closure_membership(w: &CohomClass) -> bool {
    let x0 = w.x0();
    if !x0.is_positive() {
        return false;
    }
    let x = w.x();
    let n = x.len();
    if n == 0 {
        return true;
    }
    if x[n - 1].is_negative() {
        return false;
    }
    match n {
        1 => &x[0] <= x0,
        2 => &(&x[0] + &x[1]) <= x0,
        _ => !w.self_intersection().is_negative(),
    }
}

fn boundary_flag(w: &CohomClass) -> bool {
    let x = w.x();
    let n = x.len();
    if n == 0 {
        return false;
    }
    if x[n - 1].is_zero() {
        return true;
    }
    match n {
        1 => x[0] == *w.x0(),
        2 => (&x[0] + &x[1]) == *w.x0(),
        _ => {
            let triple = &x[0] + &x[1] + &x[2];
            triple == *w.x0() || w.self_intersection().is_zero()
        }
    }
}

/// The vertex pattern of the normalized (`x₀ = 1`) closed c₁-nef region.
///
/// For `n ≤ 9` these are `P₁ … P_{n+1}`; for `n ≥ 10` additionally the
/// cut points `Q_{ij}` of the wall `Σxᵢ = 3` with the simplex edges
/// `(Pᵢ, P_{j+1})`.
#[derive(Debug, Clone)]
pub struct ConeVertexSet {
    n: usize,
    vertices: Vec<CohomClass>,
    /// Per-vertex integer form `(denom, coords)` with
    /// `denom · vertex = (denom; coords)`, for overflow-free evaluation.
    scaled: Vec<(i64, Vec<i64>)>,
}

impl ConeVertexSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[CohomClass] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Evaluates `denom_v · area(v, class)` for every vertex `v`; the
    /// per-vertex scaling is fixed, so componentwise comparisons between
    /// classes are faithful.
    pub fn eval_scaled(&self, class: &HomologyClass) -> Vec<i128> {
        debug_assert_eq!(class.n(), self.n);
        self.scaled
            .iter()
            .map(|(denom, coords)| {
                let mut acc = *denom as i128 * class.a() as i128;
                for (c, &b) in coords.iter().zip(class.b()) {
                    acc -= *c as i128 * b as i128;
                }
                acc
            })
            .collect()
    }

    /// Scaled tail-coordinate matrix, one row per vertex.
    pub(crate) fn scaled_rows(&self) -> &[(i64, Vec<i64>)] {
        &self.scaled
    }
}

fn p_vertex(n: usize, m: usize) -> CohomClass {
    // P₁ = 0, P₂ = e₁, P₃ = (e₁+e₂)/2, P_m = (1/3, …, 1/3 | m−1 entries).
    let mut x = vec![BigRational::zero(); n];
    match m {
        1 => {}
        2 => x[0] = BigRational::one(),
        3 => {
            let half = BigRational::new(BigInt::one(), 2.into());
            x[0] = half.clone();
            x[1] = half;
        }
        _ => {
            let third = BigRational::new(BigInt::one(), 3.into());
            for xi in x.iter_mut().take(m - 1) {
                *xi = third.clone();
            }
        }
    }
    CohomClass::new(BigRational::one(), x)
}

fn tail_sum(v: &CohomClass) -> BigRational {
    v.x_sum()
}

fn build_vertex_set(n: usize) -> ConeVertexSet {
    let mut vertices: Vec<CohomClass> = Vec::new();
    let top = n.min(9) + 1;
    for m in 1..=top {
        vertices.push(p_vertex(n, m));
    }
    if n >= 10 {
        // Q_{ij} = t·Pᵢ + (1−t)·P_{j+1} with the tail coordinates of Q
        // summing to 3; t = (s_{j+1} − 3)/(s_{j+1} − sᵢ).
        let three = BigRational::from_integer(3.into());
        for i in 1..=9usize {
            let pi = p_vertex(n, i);
            let si = tail_sum(&pi);
            for j in 10..=n {
                let pj = p_vertex(n, j + 1);
                let sj = tail_sum(&pj);
                let t = (&sj - &three) / (&sj - &si);
                debug_assert!(t.is_positive() && t < BigRational::one());
                let one_minus_t = BigRational::one() - &t;
                let x: Vec<BigRational> = pi
                    .x()
                    .iter()
                    .zip(pj.x())
                    .map(|(a, b)| a * &t + b * &one_minus_t)
                    .collect();
                let q = CohomClass::new(BigRational::one(), x);
                debug_assert_eq!(tail_sum(&q), three);
                vertices.push(q);
            }
        }
        // Every simplex edge cut by the wall yields a genuine vertex;
        // assert distinctness rather than running a redundancy filter.
        debug_assert!({
            let mut seen = vertices.clone();
            seen.sort_by_key(|v| v.to_string());
            seen.windows(2).all(|w| w[0] != w[1])
        });
    }

    let scaled = vertices
        .iter()
        .map(|v| {
            let denom = crate::rational::lcm_of_denoms(&v.all_coords());
            let d = denom.to_i64().expect("vertex denominator fits i64");
            let coords = v
                .x()
                .iter()
                .map(|xi| {
                    (xi * BigRational::from_integer(denom.clone()))
                        .to_integer()
                        .to_i64()
                        .expect("vertex coordinate fits i64")
                })
                .collect();
            (d, coords)
        })
        .collect();

    ConeVertexSet { n, vertices, scaled }
}

/// Returns the (cached) vertex set of the normalized closed c₁-nef
/// region for `n` blowups. Safe for concurrent readers.
pub fn c1nef_vertices(n: usize) -> Arc<ConeVertexSet> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<ConeVertexSet>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = cache.read().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    let built = Arc::new(build_vertex_set(n));
    let mut map = cache.write().unwrap();
    Arc::clone(map.entry(n).or_insert(built))
}

/// Dominance order on classes: `A ≥ B` iff `ω(A) ≥ ω(B)` for every `ω`
/// in the c₁-nef cone, decided exactly by evaluation at the vertices of
/// the normalized region.
pub fn dominates(a: &HomologyClass, b: &HomologyClass) -> crate::Result<bool> {
    if a.n() != b.n() {
        return Err(Error::DegreeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let vs = c1nef_vertices(a.n());
    let va = vs.eval_scaled(a);
    let vb = vs.eval_scaled(b);
    Ok(va.iter().zip(&vb).all(|(x, y)| x >= y))
}
