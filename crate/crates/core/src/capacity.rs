//! The per-point capacity solver: `f_k` as the exact minimum of
//! symplectic area over the classes with index `≥ 2k` and positive
//! pairing with `H`, computed by a certified branch-and-bound over
//! reduced candidate classes.
//!
//! The solver first Cremona-reduces the input, clears denominators, and
//! then enumerates candidates `aH − Σ bᵢEᵢ` with `a ≥ 1`, `bᵢ ≥ 0`
//! sorted descending and (for `n ≥ 3`) `b₁+b₂+b₃ ≤ a`; each of those
//! restrictions is an area-non-increasing, index-non-decreasing move, so
//! the minimum over the restricted set equals the minimum over the whole
//! index-constrained lattice. Levels and subtrees are pruned with signed
//! Cauchy–Schwarz bounds compared exactly in squared integer form.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::cremona::{reduce, ReductionTrace};
use crate::lattice::{CohomClass, HomologyClass};
use crate::rational::{isqrt_u128, max_with_pronic_at_most, scale_to_integers};
use crate::Error;

/// Largest scaled coordinate the i128 fast path accepts.
const MAX_SCALED_COORD: i128 = 1 << 32;
/// Hard cap on the `a`-level loop; reaching it means the input magnitude
/// is outside the supported range.
const MAX_A_LEVEL: i128 = 1 << 24;

/// Membership in the optimization domain: index `≥ 2k` and `A·H > 0`.
pub fn in_u5(a: &HomologyClass, k: u32) -> bool {
    a.index() >= 2 * k as i64 && a.a() > 0
}

/// The numerically nef subset: index `≥ 2k`, `A·H > 0`, `A² ≥ 0` and
/// `A·E ≥ 0` for every exceptional class `E`. Only decidable for
/// `n ≤ 8`, where the exceptional set is finite.
pub fn in_u2(a: &HomologyClass, k: u32) -> crate::Result<bool> {
    let n = a.n();
    if n > 8 {
        return Err(Error::ExceptionalSetInfinite(n));
    }
    if !in_u5(a, k) || a.intersect(a)? < 0 {
        return Ok(false);
    }
    for e in exceptional_classes(n) {
        if a.intersect(e)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Complete list of exceptional classes (`E² = −1`, `K₀·E = −1`) for
/// `n ≤ 8`, sorted lexicographically.
pub fn enumerate_exceptional(n: usize) -> crate::Result<Vec<HomologyClass>> {
    if n > 8 {
        return Err(Error::ExceptionalSetInfinite(n));
    }
    Ok(exceptional_classes(n).to_vec())
}

fn exceptional_classes(n: usize) -> &'static [HomologyClass] {
    static CACHE: OnceLock<RwLock<HashMap<usize, &'static [HomologyClass]>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = cache.read().unwrap().get(&n) {
        return hit;
    }
    let built: &'static [HomologyClass] = Box::leak(build_exceptional(n).into_boxed_slice());
    let mut map = cache.write().unwrap();
    map.entry(n).or_insert(built)
}

/// Solves `a² − Σbᵢ² = −1`, `3a − Σbᵢ = 1` over the integers. The
/// Cauchy–Schwarz bound `(3a−1)² ≤ n(a²+1)` confines `a` to `[−1, 7]`
/// for `n ≤ 8`.
fn build_exceptional(n: usize) -> Vec<HomologyClass> {
    let mut out = Vec::new();
    let mut b = vec![0i64; n];
    for a in -1..=7i64 {
        let rem_sq = a * a + 1;
        let rem_sum = 3 * a - 1;
        fill_exceptional(a, 0, rem_sum, rem_sq, &mut b, &mut out);
    }
    out.sort();
    out
}

fn fill_exceptional(
    a: i64,
    pos: usize,
    rem_sum: i64,
    rem_sq: i64,
    b: &mut Vec<i64>,
    out: &mut Vec<HomologyClass>,
) {
    let n = b.len();
    if pos == n {
        if rem_sum == 0 && rem_sq == 0 {
            out.push(HomologyClass::new(a, b.clone()));
        }
        return;
    }
    let slots = (n - pos) as i64;
    // Cauchy–Schwarz feasibility for the remaining coordinates.
    if rem_sum * rem_sum > slots * rem_sq {
        return;
    }
    let limit = isqrt_u128(rem_sq as u128) as i64;
    for v in (-limit..=limit).rev() {
        b[pos] = v;
        fill_exceptional(a, pos + 1, rem_sum - v, rem_sq - v * v, b, out);
    }
    b[pos] = 0;
}

/// Result of a capacity computation: the exact minimum together with all
/// reduced optimal classes, the reduced evaluation point and the moves
/// that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct CapacityResult {
    pub value: BigRational,
    /// All reduced optimal classes, sorted lexicographically by
    /// `(a, b₁, …, bₙ)`.
    pub witnesses: Vec<HomologyClass>,
    pub k: u32,
    pub omega_reduced: CohomClass,
    pub trace: ReductionTrace,
}

/// Computes `f_k` at `w`: reduces `w` into the closed fundamental
/// domain, then returns the exact minimum area over classes of index
/// `≥ 2k` with positive `H`-pairing, with the full tie set of reduced
/// minimizers.
pub fn capacity_fk(w: &CohomClass, k: u32) -> crate::Result<CapacityResult> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let reduced = reduce(w)?;
    let omega = reduced.omega.clone();
    if !omega.self_intersection().is_positive() {
        return Err(Error::OutsideAdmissibleRegion(format!(
            "self-intersection of {omega} is not positive"
        )));
    }
    let scaled = ScaledOmega::build(&omega)?;
    let (min_scaled, witnesses) = solve_min(&scaled, k)?;
    let value = BigRational::new(BigInt::from(min_scaled), scaled.scale.clone());
    debug_assert!(value.is_positive(), "capacity must be positive");
    debug_assert!(witnesses
        .iter()
        .all(|c| in_u5(c, k) && omega.area(c).unwrap() == value));
    Ok(CapacityResult {
        value,
        witnesses,
        k,
        omega_reduced: omega,
        trace: reduced.trace,
    })
}

/// Denominator-cleared evaluation point for the integer search.
pub(crate) struct ScaledOmega {
    pub x0: i128,
    pub x: Vec<i128>,
    pub scale: BigInt,
    /// Suffix sums of squares `Σ_{j ≥ i} xⱼ²`, one entry past the end.
    suffix_sq: Vec<i128>,
}

impl ScaledOmega {
    pub(crate) fn build(omega: &CohomClass) -> crate::Result<Self> {
        let (scale, coords) = scale_to_integers(&omega.all_coords(), MAX_SCALED_COORD)?;
        let x0 = coords[0];
        let x = coords[1..].to_vec();
        let mut suffix_sq = vec![0i128; x.len() + 1];
        for i in (0..x.len()).rev() {
            suffix_sq[i] = suffix_sq[i + 1] + x[i] * x[i];
        }
        // Keeps every product in the pruning bounds inside i128.
        if suffix_sq[0] > 1 << 70 {
            return Err(Error::MagnitudeOverflow(
                "sum of squared coordinates exceeds the supported range".into(),
            ));
        }
        Ok(ScaledOmega { x0, x, scale, suffix_sq })
    }
}

struct SearchState<'a> {
    omega: &'a ScaledOmega,
    n: usize,
    incumbent: Option<i128>,
    witnesses: Vec<(i64, Vec<i64>)>,
    prefix: Vec<i64>,
}

impl<'a> SearchState<'a> {
    fn leaf(&mut self, a: i64, depth: usize, area: i128) {
        match self.incumbent {
            Some(inc) if area > inc => {}
            Some(inc) if area == inc => {
                self.witnesses.push((a, self.padded(depth)));
            }
            _ => {
                self.incumbent = Some(area);
                self.witnesses.clear();
                self.witnesses.push((a, self.padded(depth)));
            }
        }
    }

    fn padded(&self, depth: usize) -> Vec<i64> {
        let mut b = self.prefix[..depth].to_vec();
        b.resize(self.n, 0);
        b
    }

    /// Depth-first enumeration of descending non-negative tails with the
    /// remaining index budget `rem_beta`.
    fn dfs(&mut self, a: i64, depth: usize, max_val: i64, rem_beta: i128, area: i128) {
        if depth == self.n {
            self.leaf(a, depth, area);
            return;
        }
        let triple_cap = if self.n >= 3 && depth < 3 {
            a - self.prefix[..depth].iter().sum::<i64>()
        } else {
            i64::MAX
        };
        let budget_cap = match max_with_pronic_at_most(rem_beta) {
            None => return,
            Some(c) => c.min(i64::MAX as i128) as i64,
        };
        let hi = max_val.min(triple_cap).min(budget_cap);
        if hi < 0 {
            return;
        }
        for v in (0..=hi).rev() {
            if v == 0 {
                self.leaf(a, depth, area);
                break;
            }
            let vv = v as i128;
            let next_beta = rem_beta - vv * (vv + 1);
            let next_area = area - vv * self.omega.x[depth];
            // Cauchy–Schwarz cut: the tail can lower the area by at most
            // √(next_beta · Σ_{j>depth} xⱼ²), compared in squared form.
            if let Some(inc) = self.incumbent {
                let slack = next_area - inc;
                if slack > 0 {
                    let tail_sq = self.omega.suffix_sq[depth + 1];
                    if (slack as u128).pow(2) > (next_beta as u128) * (tail_sq as u128) {
                        continue;
                    }
                }
            }
            self.prefix[depth] = v;
            self.dfs(a, depth + 1, v, next_beta, next_area);
        }
        self.prefix[depth] = 0;
    }
}

/// Level-skip test: with incumbent `inc`, level `a` cannot contain a
/// class of area `≤ inc` when `a·x₀ − inc > 0` and
/// `(a·x₀ − inc)² > (a²+3a−2k)·Σxᵢ²`. Returns the quadratic's value for
/// the convexity-based stop rule.
fn level_prune(omega: &ScaledOmega, two_k: i128, a: i128, inc: i128) -> (bool, i128) {
    let beta = a * a + 3 * a - two_k;
    let s = omega.suffix_sq[0];
    let g = a * omega.x0 - inc;
    let q = g * g - beta * s;
    (g > 0 && q > 0, q)
}

fn solve_min(omega: &ScaledOmega, k: u32) -> crate::Result<(i128, Vec<HomologyClass>)> {
    let two_k = 2 * k as i128;
    let n = omega.x.len();
    let mut state = SearchState {
        omega,
        n,
        incumbent: None,
        witnesses: Vec::new(),
        prefix: vec![0; n],
    };

    // q(a) is convex in a with positive leading coefficient x₀² − Σxᵢ²,
    // so once two consecutive skipped levels show q non-decreasing, every
    // later level is skipped as well and the search is complete.
    let mut prev_skip_q: Option<i128> = None;
    let mut a: i128 = 1;
    loop {
        if a > MAX_A_LEVEL {
            return Err(Error::MagnitudeOverflow(
                "search level exceeded supported range".into(),
            ));
        }
        let beta = a * a + 3 * a - two_k;
        if beta < 0 {
            a += 1;
            continue;
        }
        if let Some(inc) = state.incumbent {
            let (skip, q) = level_prune(omega, two_k, a, inc);
            if skip {
                if let Some(pq) = prev_skip_q {
                    if q >= pq {
                        break;
                    }
                }
                prev_skip_q = Some(q);
                a += 1;
                continue;
            }
        }
        prev_skip_q = None;
        let area0 = a * omega.x0;
        state.dfs(a as i64, 0, a as i64, beta, area0);
        a += 1;
    }

    let min = state
        .incumbent
        .expect("the level aH with a(a+3) ≥ 2k always yields a candidate");
    let mut witnesses: Vec<HomologyClass> = state
        .witnesses
        .into_iter()
        .map(|(a, b)| HomologyClass::new(a, b))
        .collect();
    witnesses.sort();
    Ok((min, witnesses))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn cohom(s: &str) -> CohomClass {
        s.parse().unwrap()
    }

    fn class(s: &str) -> HomologyClass {
        s.parse().unwrap()
    }

    #[test]
    fn u5_examples() {
        // H + E₁ + E₂ in storage form: a = 1, b = (−1, −1).
        let a = class("1;-1,-1");
        assert_eq!(a.index(), 4);
        assert!(in_u5(&a, 2));
        assert!(!in_u5(&HomologyClass::e(1, 1), 1));
        assert!(in_u5(&class("2;2"), 2));
    }

    #[test]
    fn u2_examples() {
        assert!(!in_u2(&class("1;-1,-1"), 2).unwrap());
        assert!(in_u2(&class("2;1,1,1"), 1).unwrap());
        assert!(in_u2(&HomologyClass::h(2), 2).unwrap());
        assert!(matches!(
            in_u2(&HomologyClass::h(9), 1),
            Err(Error::ExceptionalSetInfinite(9))
        ));
    }

    #[test]
    fn exceptional_small_n() {
        assert_eq!(enumerate_exceptional(0).unwrap(), Vec::new());
        assert_eq!(
            enumerate_exceptional(1).unwrap(),
            vec![HomologyClass::e(1, 1)]
        );
        let two = enumerate_exceptional(2).unwrap();
        assert_eq!(two.len(), 3);
        assert!(two.contains(&HomologyClass::e(1, 2)));
        assert!(two.contains(&HomologyClass::e(2, 2)));
        assert!(two.contains(&class("1;1,1")));
        assert!(enumerate_exceptional(9).is_err());
    }

    #[test]
    fn exceptional_intersections_nonnegative_mutually() {
        // Distinct exceptional classes for small n pair ≥ 0 against H.
        for n in 0..=4 {
            for e in enumerate_exceptional(n).unwrap() {
                assert_eq!(e.intersect(&e).unwrap(), -1);
                assert_eq!(
                    crate::lattice::canonical_class(n).intersect(&e).unwrap(),
                    -1
                );
            }
        }
    }

    #[test]
    fn fk_tie_on_one_blowup() {
        let r = capacity_fk(&cohom("1;1/2"), 2).unwrap();
        assert_eq!(r.value, BigRational::one());
        assert_eq!(r.witnesses, vec![HomologyClass::h(1), class("2;2")]);
    }

    #[test]
    fn fk_on_plane_is_ball_like() {
        let r = capacity_fk(&cohom("1"), 6).unwrap();
        assert_eq!(r.value, BigRational::from_integer(3.into()));
        assert_eq!(r.witnesses, vec![class("3")]);
    }

    #[test]
    fn fk_four_blowups() {
        let r = capacity_fk(&cohom("7;3,2,1,1"), 1).unwrap();
        assert_eq!(r.value, BigRational::from_integer(4.into()));
        assert_eq!(r.witnesses, vec![class("1;1,0,0,0")]);
    }

    #[test]
    fn fk_reduces_first() {
        let r = capacity_fk(&cohom("8;5,3,3"), 1).unwrap();
        assert_eq!(r.omega_reduced, cohom("5;2,0,0"));
        assert_eq!(r.trace.steps().len(), 1);
        let direct = capacity_fk(&cohom("5;2,0,0"), 1).unwrap();
        assert_eq!(r.value, direct.value);
    }

    #[test]
    fn fk_rejects_bad_inputs() {
        assert!(matches!(capacity_fk(&cohom("1;1/2"), 0), Err(Error::InvalidK)));
        assert!(capacity_fk(&cohom("0;1"), 1).is_err());
        // Null self-intersection is outside the admissible region even
        // though it reduces into the closure.
        assert!(matches!(
            capacity_fk(&cohom("1;1"), 1),
            Err(Error::OutsideAdmissibleRegion(_))
        ));
    }

    #[test]
    fn fk_full_tie_set_on_boundary_input() {
        // On (2 | 1, 1) the wall x₁ + x₂ = x₀ is saturated and six
        // reduced classes share the minimum for k = 2.
        let r = capacity_fk(&cohom("2;1,1"), 2).unwrap();
        assert_eq!(r.value, BigRational::from_integer(2.into()));
        let want: Vec<HomologyClass> = ["1;0,0", "2;1,1", "2;2,0", "3;2,2", "3;3,1", "4;3,3"]
            .iter()
            .map(|s| class(s))
            .collect();
        assert_eq!(r.witnesses, want);
    }

    #[test]
    fn fk_boundary_input_accepted() {
        // (5 | 2, 0, 0) sits on the closure but has positive square.
        let r = capacity_fk(&cohom("5;2,0,0"), 1).unwrap();
        assert!(r.value.is_positive());
    }
}
