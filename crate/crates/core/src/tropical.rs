//! The tropical-polynomial presentation of the capacities over the
//! c₁-nef cone: each `f_k` is a finite minimum of areas
//! `min { ω(A₁), …, ω(A_m) }`, where the terms are the dominance-minimal
//! classes of the optimization domain.
//!
//! `minimizer_set` extracts that antichain by enumerating reduced
//! candidate classes up to a coefficient bound and filtering with the
//! dominance order. The bound is certified by `certify_bound` when the
//! instantiated constants are practical; otherwise enumeration falls
//! back to a caller-supplied budget and the result is flagged
//! uncertified.
//!
//! TODO: extraction over the full symplectic `K₀`-cone for `n ≤ 8` (the
//! orbit-closure of the c₁-nef terms under the finite reflection orbits)
//! is a planned extension; only the c₁-nef cone is covered here.

use num_rational::BigRational;

use crate::cremona::{c1nef_vertices, is_c1nef, is_reduced};
use crate::lattice::{CohomClass, HomologyClass};
use crate::rational::max_with_pronic_at_most;
use crate::Error;

/// Hard cap on enumeration work, counted in search-tree nodes. Hitting
/// it aborts the certified attempt (falling back to the budget snapshot
/// when one exists).
const NODE_CAP: u64 = 4_000_000;

/// A capacity function over the c₁-nef cone in tropical form: the finite
/// set of minimizer classes, each an affine form `ω ↦ ω(Aᵢ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalCapacity {
    n: usize,
    k: u32,
    terms: Vec<HomologyClass>,
    certified: bool,
}

impl TropicalCapacity {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The minimizers, sorted lexicographically by `(a, b₁, …, bₙ)`.
    pub fn terms(&self) -> &[HomologyClass] {
        &self.terms
    }

    /// Whether the enumeration bound was certified to contain every
    /// dominance-minimal class.
    pub fn certified(&self) -> bool {
        self.certified
    }
}

/// Evaluates the tropical polynomial at a point strictly inside the
/// c₁-nef part of the reduced cone. Outside that domain the minimum may
/// disagree with the capacity, so an explicit error is returned instead
/// of a number.
pub fn eval(tp: &TropicalCapacity, w: &CohomClass) -> crate::Result<BigRational> {
    if w.n() != tp.n {
        return Err(Error::DegreeMismatch {
            left: tp.n,
            right: w.n(),
        });
    }
    if !is_reduced(w) || !is_c1nef(w) {
        return Err(Error::OutOfDomain);
    }
    tp.terms
        .iter()
        .map(|t| w.area(t))
        .collect::<crate::Result<Vec<_>>>()?
        .into_iter()
        .min()
        .ok_or(Error::OutOfDomain)
}

/// A certified upper bound on the `H`-coefficient of every
/// dominance-minimal class for `(n, k)`.
///
/// The instantiation: testing a candidate against `kH − kE₁` at the
/// vertices of the normalized c₁-nef region shows a minimal class
/// satisfies `3a − Σ₁^{min(n,9)} bᵢ ≤ 3k`; rewriting in the basis
/// `H, E₁…E₈, (3H−E₁−…−E₈)−Eᵢ` then bounds every auxiliary coefficient
/// by `D = 9k` and yields `a ≤ D + 12D² + 3k` for `n ≥ 9` and the much
/// sharper `a ≤ k(n+1)` for `n ≤ 8`. The bound is correct but can be
/// loose; for `n ≥ 9` it is usually far beyond practical enumeration.
pub fn certify_bound(n: usize, k: u32) -> u64 {
    let k = k as u128;
    let bound: u128 = match n {
        0 => {
            // The only candidates are dH; the minimal one has the
            // smallest d with d(d+3) ≥ 2k.
            let mut d: u128 = 1;
            while d * (d + 3) < 2 * k {
                d += 1;
            }
            d
        }
        1..=8 => k * (n as u128 + 1),
        _ => {
            let d = 9 * k;
            let chain = d + 12 * d * d + 3 * k;
            // Vertex constants for the Q-family (only present for
            // n ≥ 10): a candidate with a − b₁ ≥ 8(2k−1)/3 beats
            // kH − kE₁ at every Q_{2j}, otherwise a ≥ k + 2(n−2)(2k−1)/3
            // does; Q_{3j} needs a ≥ 14(2k−1)/3.
            let q_const = if n >= 10 {
                let m = 2 * k - 1;
                let q2 = k + (2 * (n as u128 - 2) * m).div_ceil(3);
                let q3 = (14 * m).div_ceil(3);
                q2.max(q3)
            } else {
                k
            };
            chain.max(q_const)
        }
    };
    bound.min(u64::MAX as u128) as u64
}

/// Constants for the pruning rule that discards classes with a heavy
/// tail past the ninth coordinate (valid for `n ≥ 9`).
struct TailRule {
    /// Discard applies only when `3a − Σ₁⁹ bᵢ ≤ c`.
    c: i128,
    /// Threshold `4D² + k` on `Σ_{i ≥ 9} bᵢ`.
    threshold: i128,
}

/// Computes the minimizer antichain for `(n, k)`.
///
/// Enumeration runs toward the certified bound (or the budget, if
/// larger) under a node cap. Levels are processed in ascending order, so
/// when the cap trips past the budget level the antichain snapshot taken
/// there is exactly the budgeted answer and is returned with
/// `certified = false`; without a usable budget the call errors.
pub fn minimizer_set(n: usize, k: u32, budget: Option<u64>) -> crate::Result<TropicalCapacity> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let certified_bound = certify_bound(n, k);
    let attempt = certified_bound.max(budget.unwrap_or(0));
    let snapshot_at = budget.filter(|&b| b < certified_bound);
    match enumerate_minimal(n, k, attempt, snapshot_at)? {
        EnumOutcome::Complete(terms) => Ok(TropicalCapacity {
            n,
            k,
            terms,
            certified: true,
        }),
        EnumOutcome::BudgetOnly(terms) => Ok(TropicalCapacity {
            n,
            k,
            terms,
            certified: false,
        }),
        EnumOutcome::CapTripped => match budget {
            None => Err(Error::NoCertificateOrBudget {
                certified: certified_bound,
            }),
            Some(_) => Err(Error::EnumerationBudgetExceeded(NODE_CAP)),
        },
    }
}

enum EnumOutcome {
    /// Every level up to the requested bound was enumerated.
    Complete(Vec<HomologyClass>),
    /// The cap tripped past the snapshot level; these are the terms as
    /// of the budget bound.
    BudgetOnly(Vec<HomologyClass>),
    /// The cap tripped before even the snapshot level finished.
    CapTripped,
}

struct Enumerator {
    n: usize,
    /// Per-vertex `(denom, tail coordinates, suffix sums of coordinates)`.
    vertex_rows: Vec<(i64, Vec<i64>, Vec<i128>)>,
    /// Vertex values of the anchor class `kH − kE₁`, used to prune whole
    /// subtrees whose every completion it dominates.
    anchor_vals: Vec<i128>,
    /// Running prefix values `denom·a − Σ coords·bᵢ` per vertex.
    prefix_vals: Vec<i128>,
    antichain: Vec<(HomologyClass, Vec<i128>)>,
    prefix: Vec<i64>,
    tail_rule: Option<TailRule>,
    nodes: u64,
}

fn enumerate_minimal(
    n: usize,
    k: u32,
    a_max: u64,
    snapshot_at: Option<u64>,
) -> crate::Result<EnumOutcome> {
    let vs = c1nef_vertices(n);
    let vertex_rows: Vec<(i64, Vec<i64>, Vec<i128>)> = vs
        .scaled_rows()
        .iter()
        .map(|(denom, coords)| {
            let mut suffix = vec![0i128; coords.len() + 1];
            for i in (0..coords.len()).rev() {
                suffix[i] = suffix[i + 1] + coords[i] as i128;
            }
            (*denom, coords.clone(), suffix)
        })
        .collect();

    let anchor = (n >= 1).then(|| {
        let mut b = vec![0i64; n];
        b[0] = k as i64;
        HomologyClass::new(k as i64, b)
    });
    let anchor_vals = match &anchor {
        Some(c) => vs.eval_scaled(c),
        None => Vec::new(),
    };

    let tail_rule = (n >= 9).then(|| {
        let d = 9i128 * k as i128;
        TailRule {
            c: 3 * k as i128,
            threshold: 4 * d * d + k as i128,
        }
    });

    let mut en = Enumerator {
        n,
        vertex_rows,
        anchor_vals,
        prefix_vals: Vec::new(),
        antichain: Vec::new(),
        prefix: vec![0; n],
        tail_rule,
        nodes: 0,
    };
    if let Some(c) = &anchor {
        let vals = vs.eval_scaled(c);
        insert_antichain(&mut en.antichain, c.clone(), vals);
    }

    let two_k = 2 * k as i128;
    let mut snapshot: Option<Vec<(HomologyClass, Vec<i128>)>> = None;
    let mut tripped = false;
    for a in 1..=a_max {
        let level = (|| -> crate::Result<()> {
            en.bump_nodes()?;
            let a = a as i128;
            let beta = a * a + 3 * a - two_k;
            if beta < 0 {
                return Ok(());
            }
            en.prefix_vals = en
                .vertex_rows
                .iter()
                .map(|(denom, _, _)| *denom as i128 * a)
                .collect();
            en.dfs(a as i64, 0, a as i64, beta, 0)
        })();
        match level {
            Ok(()) => {
                if snapshot_at == Some(a) {
                    snapshot = Some(en.antichain.clone());
                }
            }
            Err(Error::EnumerationBudgetExceeded(_)) => {
                tripped = true;
                break;
            }
            Err(e) => return Err(e),
        }
    }

    let finish = |antichain: Vec<(HomologyClass, Vec<i128>)>| -> Vec<HomologyClass> {
        let mut terms: Vec<HomologyClass> = antichain.into_iter().map(|(c, _)| c).collect();
        terms.sort();
        debug_assert!(terms
            .iter()
            .all(|t| crate::capacity::in_u5(t, k) && 3 * t.a() - t.b_sum() >= 1));
        terms
    };
    if !tripped {
        return Ok(EnumOutcome::Complete(finish(en.antichain)));
    }
    match snapshot {
        Some(state) => Ok(EnumOutcome::BudgetOnly(finish(state))),
        None => Ok(EnumOutcome::CapTripped),
    }
}

impl Enumerator {
    fn bump_nodes(&mut self) -> crate::Result<()> {
        self.nodes += 1;
        if self.nodes > NODE_CAP {
            return Err(Error::EnumerationBudgetExceeded(NODE_CAP));
        }
        Ok(())
    }

    /// True when every completion of the current prefix with future
    /// values `≤ v` is dominated by (or equal to) the anchor.
    fn anchor_prunes(&self, depth: usize, v: i64) -> bool {
        if self.anchor_vals.is_empty() {
            return false;
        }
        self.vertex_rows
            .iter()
            .zip(&self.prefix_vals)
            .zip(&self.anchor_vals)
            .all(|(((_, _, suffix), pv), av)| pv - v as i128 * suffix[depth] >= *av)
    }

    fn dfs(&mut self, a: i64, depth: usize, max_val: i64, rem_beta: i128, b_sum: i64) -> crate::Result<()> {
        self.bump_nodes()?;
        if depth == self.n {
            self.leaf(a, depth, b_sum);
            return Ok(());
        }
        // Classes with Σb ≥ 3a are dominated by their anticanonical
        // translate; the sum only grows with depth.
        if b_sum as i128 >= 3 * a as i128 {
            return Ok(());
        }
        let triple_cap = if depth < 3 {
            a - self.prefix[..depth].iter().sum::<i64>()
        } else {
            i64::MAX
        };
        let budget_cap = match max_with_pronic_at_most(rem_beta) {
            None => return Ok(()),
            Some(c) => c.min(i64::MAX as i128) as i64,
        };
        let hi = max_val.min(triple_cap).min(budget_cap);
        if hi < 0 {
            return Ok(());
        }
        for v in (0..=hi).rev() {
            if self.anchor_prunes(depth, v) {
                // Lower values of v only raise the value bounds further.
                break;
            }
            if v == 0 {
                self.leaf(a, depth, b_sum);
                break;
            }
            let vv = v as i128;
            self.prefix[depth] = v;
            for (row, pv) in self.vertex_rows.iter().zip(self.prefix_vals.iter_mut()) {
                *pv -= row.1[depth] as i128 * vv;
            }
            self.dfs(a, depth + 1, v, rem_beta - vv * (vv + 1), b_sum + v)?;
            for (row, pv) in self.vertex_rows.iter().zip(self.prefix_vals.iter_mut()) {
                *pv += row.1[depth] as i128 * vv;
            }
        }
        self.prefix[depth] = 0;
        Ok(())
    }

    fn leaf(&mut self, a: i64, depth: usize, b_sum: i64) {
        // Minimal classes satisfy 3a − Σbᵢ ≥ 1.
        if 3 * a - b_sum <= 0 {
            return;
        }
        if let Some(rule) = &self.tail_rule {
            if a >= 4 {
                let first9: i64 = self.prefix[..depth.min(9)].iter().sum();
                let tail: i64 = if depth > 8 {
                    self.prefix[8..depth].iter().sum()
                } else {
                    0
                };
                if 3 * a as i128 - first9 as i128 <= rule.c && tail as i128 > rule.threshold {
                    return;
                }
            }
        }
        let mut b = self.prefix[..depth].to_vec();
        b.resize(self.n, 0);
        let class = HomologyClass::new(a, b);
        let vals: Vec<i128> = self
            .vertex_rows
            .iter()
            .map(|(denom, coords, _)| {
                let mut acc = *denom as i128 * a as i128;
                for (c, &bi) in coords.iter().zip(class.b()) {
                    acc -= *c as i128 * bi as i128;
                }
                acc
            })
            .collect();
        insert_antichain(&mut self.antichain, class, vals);
    }
}

fn ge_componentwise(a: &[i128], b: &[i128]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

fn insert_antichain(antichain: &mut Vec<(HomologyClass, Vec<i128>)>, c: HomologyClass, vals: Vec<i128>) {
    if antichain.iter().any(|(_, mv)| ge_componentwise(&vals, mv)) {
        return;
    }
    antichain.retain(|(_, mv)| !ge_componentwise(mv, &vals));
    antichain.push((c, vals));
}

/// The pairwise intersection abscissae of the terms over the normalized
/// one-blowup slice `ω = (1 | x)`, restricted to `(0, 1)`; these are the
/// only points where the minimum can switch terms.
pub fn breakpoints_unit_interval(tp: &TropicalCapacity) -> Vec<BigRational> {
    assert_eq!(tp.n, 1, "breakpoints are defined on the one-blowup slice");
    let mut out: Vec<BigRational> = Vec::new();
    let one = BigRational::from_integer(1.into());
    for (idx, s) in tp.terms.iter().enumerate() {
        for t in &tp.terms[idx + 1..] {
            let db = s.b()[0] - t.b()[0];
            if db == 0 {
                continue;
            }
            let x = BigRational::new((s.a() - t.a()).into(), db.into());
            if x.numer().sign() == num_bigint::Sign::Plus && x < one && !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out.sort();
    out
}
