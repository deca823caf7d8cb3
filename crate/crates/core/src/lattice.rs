//! Integer and rational linear algebra on the second (co)homology of
//! `CP² # n·CP̄²` with the standard basis `{H, E₁, …, Eₙ}`.
//!
//! The intersection form is `H² = 1`, `Eᵢ² = −1`, mixed pairings zero.
//! Homology classes carry integer coefficients, cohomology classes carry
//! arbitrary-precision rationals; all operations are exact.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::rational::{format_rational, parse_rational};
use crate::Error;

/// A second-homology class `a·H − Σᵢ bᵢ·Eᵢ` on the n-fold blowup.
///
/// The `Eᵢ`-coefficients are stored with the minus sign already factored
/// out, so the exceptional class `E₁` itself is `a = 0, b = (−1, 0, …)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyClass {
    a: i64,
    b: Vec<i64>,
}

impl HomologyClass {
    pub fn new(a: i64, b: Vec<i64>) -> Self {
        HomologyClass { a, b }
    }

    /// The line class `H` on the n-fold blowup.
    pub fn h(n: usize) -> Self {
        HomologyClass { a: 1, b: vec![0; n] }
    }

    /// The i-th exceptional class `Eᵢ` (1-based index).
    pub fn e(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i <= n, "exceptional index {i} out of range 1..={n}");
        let mut b = vec![0; n];
        b[i - 1] = -1;
        HomologyClass { a: 0, b }
    }

    pub fn zero(n: usize) -> Self {
        HomologyClass { a: 0, b: vec![0; n] }
    }

    /// Number of blowups this class lives on.
    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn scale(&self, c: i64) -> Self {
        HomologyClass {
            a: self.a * c,
            b: self.b.iter().map(|v| v * c).collect(),
        }
    }

    /// Intersection pairing with the form `diag(1, −1, …, −1)`.
    pub fn intersect(&self, other: &HomologyClass) -> crate::Result<i64> {
        if self.n() != other.n() {
            return Err(Error::DegreeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let mixed: i64 = self.b.iter().zip(&other.b).map(|(x, y)| x * y).sum();
        Ok(self.a * other.a - mixed)
    }

    /// The index `A² − K₀·A`, in closed form `a² + 3a − Σ(bᵢ² + bᵢ)`.
    ///
    /// Both routes are computed and compared in debug builds.
    pub fn index(&self) -> i64 {
        let closed = self.a * self.a + 3 * self.a
            - self.b.iter().map(|&v| v * v + v).sum::<i64>();
        debug_assert_eq!(
            closed,
            {
                let k0 = canonical_class(self.n());
                self.intersect(self).unwrap() - k0.intersect(self).unwrap()
            },
            "index formulas disagree for {self}"
        );
        closed
    }

    /// Sum of the stored `Eᵢ`-coefficients.
    pub fn b_sum(&self) -> i64 {
        self.b.iter().sum()
    }
}

impl Add for &HomologyClass {
    type Output = HomologyClass;
    fn add(self, rhs: &HomologyClass) -> HomologyClass {
        assert_eq!(self.n(), rhs.n(), "degree mismatch in class addition");
        HomologyClass {
            a: self.a + rhs.a,
            b: self.b.iter().zip(&rhs.b).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &HomologyClass {
    type Output = HomologyClass;
    fn sub(self, rhs: &HomologyClass) -> HomologyClass {
        assert_eq!(self.n(), rhs.n(), "degree mismatch in class subtraction");
        HomologyClass {
            a: self.a - rhs.a,
            b: self.b.iter().zip(&rhs.b).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Neg for &HomologyClass {
    type Output = HomologyClass;
    fn neg(self) -> HomologyClass {
        self.scale(-1)
    }
}

impl fmt::Display for HomologyClass {
    /// Text encoding `a;b1,b2,...,bn`; a bare `a` when `n = 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_empty() {
            return write!(f, "{}", self.a);
        }
        let tail: Vec<String> = self.b.iter().map(|v| v.to_string()).collect();
        write!(f, "{};{}", self.a, tail.join(","))
    }
}

impl fmt::Debug for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomologyClass({self})")
    }
}

impl FromStr for HomologyClass {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        let t = s.trim();
        let (head, tail) = match t.split_once(';') {
            None => (t, ""),
            Some((h, rest)) => (h, rest.trim()),
        };
        let a = head
            .trim()
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad H-coefficient {head:?}: {e}")))?;
        let b = if tail.is_empty() {
            Vec::new()
        } else {
            tail.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<i64>()
                        .map_err(|e| Error::Parse(format!("bad E-coefficient {p:?}: {e}")))
                })
                .collect::<crate::Result<Vec<i64>>>()?
        };
        Ok(HomologyClass::new(a, b))
    }
}

/// The standard canonical class `K₀ = −3H + E₁ + … + Eₙ`.
pub fn canonical_class(n: usize) -> HomologyClass {
    HomologyClass::new(-3, vec![-1; n])
}

/// A rational cohomology class `x₀·PD(H) − Σᵢ xᵢ·PD(Eᵢ)`, the evaluation
/// point for areas and the optimization parameter of the capacities.
#[derive(Clone, PartialEq, Eq)]
pub struct CohomClass {
    x0: BigRational,
    x: Vec<BigRational>,
}

impl CohomClass {
    pub fn new(x0: BigRational, x: Vec<BigRational>) -> Self {
        CohomClass { x0, x }
    }

    /// Builds a class from integer coordinates.
    pub fn from_ints(x0: i64, x: &[i64]) -> Self {
        CohomClass {
            x0: BigRational::from_integer(x0.into()),
            x: x.iter().map(|&v| BigRational::from_integer(v.into())).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x0(&self) -> &BigRational {
        &self.x0
    }

    pub fn x(&self) -> &[BigRational] {
        &self.x
    }

    /// Symplectic area `ω(A) = a·x₀ − Σᵢ bᵢ·xᵢ`.
    pub fn area(&self, class: &HomologyClass) -> crate::Result<BigRational> {
        if self.n() != class.n() {
            return Err(Error::DegreeMismatch {
                left: self.n(),
                right: class.n(),
            });
        }
        let mut acc = &self.x0 * BigRational::from_integer(class.a().into());
        for (xi, &bi) in self.x.iter().zip(class.b()) {
            acc -= xi * BigRational::from_integer(bi.into());
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CohomClass {
            x0: &self.x0 * c,
            x: self.x.iter().map(|v| v * c).collect(),
        }
    }

    /// `x₀² − Σ xᵢ²`, the self-pairing under the intersection form.
    pub fn self_intersection(&self) -> BigRational {
        let mut acc = &self.x0 * &self.x0;
        for xi in &self.x {
            acc -= xi * xi;
        }
        acc
    }

    /// Sum of the tail coordinates `x₁ + … + xₙ`.
    pub fn x_sum(&self) -> BigRational {
        self.x.iter().fold(BigRational::zero(), |acc, v| acc + v)
    }

    /// Pairing with the anticanonical class: `3x₀ − Σ xᵢ`.
    pub fn c1_pairing(&self) -> BigRational {
        &self.x0 * BigRational::from_integer(3.into()) - self.x_sum()
    }

    /// All coordinates including `x₀`, for denominator clearing.
    pub fn all_coords(&self) -> Vec<BigRational> {
        let mut v = Vec::with_capacity(self.n() + 1);
        v.push(self.x0.clone());
        v.extend(self.x.iter().cloned());
        v
    }

    pub fn is_positive_x0(&self) -> bool {
        self.x0.is_positive()
    }
}

impl fmt::Display for CohomClass {
    /// Text encoding `x0;x1,...,xn` with rationals written `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x.is_empty() {
            return write!(f, "{}", format_rational(&self.x0));
        }
        let tail: Vec<String> = self.x.iter().map(format_rational).collect();
        write!(f, "{};{}", format_rational(&self.x0), tail.join(","))
    }
}

impl fmt::Debug for CohomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CohomClass({self})")
    }
}

impl FromStr for CohomClass {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        let t = s.trim();
        let (head, tail) = match t.split_once(';') {
            None => (t, ""),
            Some((h, rest)) => (h, rest.trim()),
        };
        let x0 = parse_rational(head)?;
        let x = if tail.is_empty() {
            Vec::new()
        } else {
            tail.split(',')
                .map(parse_rational)
                .collect::<crate::Result<Vec<BigRational>>>()?
        };
        Ok(CohomClass::new(x0, x))
    }
}
