#![allow(dead_code)]

//! Shared oracles and generators for the integration suites.
//!
//! Everything here recomputes expected values through routes independent
//! of the library's solver paths: plain box enumeration for capacities,
//! dynamic programming for class counts, and direct formula evaluation
//! for weights.

use capcalc::lattice::{CohomClass, HomologyClass};
use capcalc::rational::lcm_of_denoms;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;

/// Brute-force minimum of `ω(A)` over the generous box
/// `1 ≤ a ≤ a_max`, `|bᵢ| ≤ a`, subject to `ind(A) ≥ 2k`. Enumerates the
/// whole box with only the exact budget cut `Σ bᵢ(bᵢ+1) ≤ a² + 3a − 2k`
/// (sound because `b(b+1) ≥ 0` for every integer `b`).
pub fn brute_force_capacity(omega: &CohomClass, k: u32, a_max: i64) -> BigRational {
    let coords = omega.all_coords();
    let scale = lcm_of_denoms(&coords);
    let ints: Vec<i64> = coords
        .iter()
        .map(|c| {
            (c * BigRational::from_integer(scale.clone()))
                .to_integer()
                .to_i64()
                .expect("oracle coordinates fit i64")
        })
        .collect();
    let x0 = ints[0];
    let x = &ints[1..];
    let mut best: Option<i64> = None;
    let mut b = vec![0i64; x.len()];
    for a in 1..=a_max {
        let beta = a * a + 3 * a - 2 * k as i64;
        if beta < 0 {
            continue;
        }
        box_scan(a, 0, beta, a * x0, x, &mut b, &mut best);
    }
    BigRational::new(
        BigInt::from(best.expect("box always contains some dH")),
        scale,
    )
}

fn box_scan(
    a: i64,
    pos: usize,
    beta_left: i64,
    area: i64,
    x: &[i64],
    b: &mut [i64],
    best: &mut Option<i64>,
) {
    if pos == x.len() {
        if best.is_none_or(|v| area < v) {
            *best = Some(area);
        }
        return;
    }
    // v(v+1) ≤ beta_left exactly delimits v ∈ [−vmax−1, vmax].
    let vmax = ((capcalc::rational::isqrt_u128(1 + 4 * beta_left as u128) - 1) / 2) as i64;
    let lo = (-vmax - 1).max(-a);
    let hi = vmax.min(a);
    for v in lo..=hi {
        let pronic = v * (v + 1);
        debug_assert!(pronic <= beta_left);
        b[pos] = v;
        box_scan(a, pos + 1, beta_left - pronic, area - v * x[pos], x, b, best);
    }
    b[pos] = 0;
}

/// Direct evaluation of the weight-sequence capacity formula:
/// minimum of `x·head − Σ yᵢ·wᵢ` over `0 ≤ x ≤ x_max`, `yᵢ ≥ 0`, subject
/// to `x(x+3) − Σ yᵢ(yᵢ+1) ≥ 2k`.
pub fn ech_formula_oracle(
    head: &BigRational,
    tails: &[BigRational],
    k: u32,
    x_max: i64,
) -> BigRational {
    let mut coords = vec![head.clone()];
    coords.extend(tails.iter().cloned());
    let scale = lcm_of_denoms(&coords);
    let ints: Vec<i64> = coords
        .iter()
        .map(|c| {
            (c * BigRational::from_integer(scale.clone()))
                .to_integer()
                .to_i64()
                .expect("oracle weights fit i64")
        })
        .collect();
    let mut best: Option<i64> = None;
    let mut y = vec![0i64; tails.len()];
    for xv in 1..=x_max {
        let beta = xv * xv + 3 * xv - 2 * k as i64;
        if beta < 0 {
            continue;
        }
        weight_scan(xv + 1, 0, beta, xv * ints[0], &ints[1..], &mut y, &mut best);
    }
    BigRational::new(BigInt::from(best.expect("dH candidates exist")), scale)
}

fn weight_scan(
    cap: i64,
    pos: usize,
    beta_left: i64,
    value: i64,
    w: &[i64],
    y: &mut [i64],
    best: &mut Option<i64>,
) {
    if pos == w.len() {
        if best.is_none_or(|v| value < v) {
            *best = Some(value);
        }
        return;
    }
    for v in 0..=cap {
        let pronic = v * (v + 1);
        if pronic > beta_left {
            break;
        }
        y[pos] = v;
        weight_scan(cap, pos + 1, beta_left - pronic, value - v * w[pos], w, y, best);
    }
    y[pos] = 0;
}

/// Counts integer vectors `b ∈ ℤⁿ` with `Σb = sum`, `Σb² = sq` by
/// dynamic programming over coordinates; used to re-derive exceptional
/// class counts independently of the enumerator.
pub fn count_solutions_dp(n: usize, sum: i64, sq: i64) -> u64 {
    use std::collections::HashMap;
    if sq < 0 {
        return 0;
    }
    let limit = (sq as f64).sqrt() as i64 + 1;
    let mut states: HashMap<(i64, i64), u64> = HashMap::new();
    states.insert((0, 0), 1);
    for _ in 0..n {
        let mut next: HashMap<(i64, i64), u64> = HashMap::new();
        for ((s, q), cnt) in states {
            for v in -limit..=limit {
                let (ns, nq) = (s + v, q + v * v);
                if nq <= sq {
                    *next.entry((ns, nq)).or_insert(0) += cnt;
                }
            }
        }
        states = next;
    }
    states.get(&(sum, sq)).copied().unwrap_or(0)
}

/// A uniformly-drawn rational in `(0, 1)` with denominator at most 9.
pub fn random_unit_rational<R: Rng>(rng: &mut R) -> BigRational {
    let q = rng.gen_range(2i64..=9);
    let p = rng.gen_range(1i64..q);
    BigRational::new(p.into(), q.into())
}

/// Rejection-samples a reduced rational class with `n` blowups. The tail
/// entries are drawn in `(0, 1)`, sorted descending, and the vector is
/// accepted when it satisfies the reduced-cone inequalities; the whole
/// class is then scaled by a random positive integer.
pub fn random_reduced<R: Rng>(rng: &mut R, n: usize) -> CohomClass {
    for _ in 0..100_000 {
        let mut x: Vec<BigRational> = (0..n).map(|_| random_unit_rational(rng)).collect();
        x.sort_by(|a, b| b.cmp(a));
        let w = CohomClass::new(BigRational::from_integer(1.into()), x);
        if capcalc::cremona::is_reduced(&w) {
            let lambda = BigRational::from_integer(rng.gen_range(1i64..=3).into());
            return w.scale(&lambda);
        }
    }
    panic!("rejection sampling failed to find a reduced class for n = {n}");
}

/// The index-two family on ten blowups witnessing the failure of the
/// tropical property outside the c₁-nef cone:
/// `N_a = 3H − E₁ − … − E₈ + (a²+a)/2 · (3H − E₁ − … − E₉) − a·E₁₀`.
pub fn n_family(a: i64) -> HomologyClass {
    let m = (a * a + a) / 2;
    let mut b = vec![1 + m; 8];
    b.push(m);
    b.push(a);
    HomologyClass::new(3 + 3 * m, b)
}

/// The companion evaluation points
/// `ω_a = (1 | (1−ε)/3 ×9, (3a+4)·ε)`.
pub fn omega_family(a: i64, eps: &BigRational) -> CohomClass {
    let one = BigRational::from_integer(1.into());
    let third = (&one - eps) / BigRational::from_integer(3.into());
    let mut x = vec![third; 9];
    x.push(BigRational::from_integer((3 * a + 4).into()) * eps);
    CohomClass::new(one, x)
}

/// A rational `ε_a` small enough that `ω_a` is reduced (sorted, inside
/// the quadratic wall) while staying outside the c₁-nef cone.
pub fn epsilon_for(a: i64) -> BigRational {
    let denom = (3 * a + 4) * (3 * a + 4) + (9 * a + 13);
    BigRational::new(1.into(), denom.into())
}

#[allow(dead_code)]
pub fn assert_positive(r: &BigRational) {
    assert!(r.is_positive(), "expected positive, got {r}");
}
