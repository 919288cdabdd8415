use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Highest supported degree.
pub const MAX_DEGREE: usize = 8;

/// `Q_l(a, b, ·)`: the degree-`l` polynomial orthogonal to all lower degrees
/// on `[0, 1]` for the weight `t^a (1 − t)^b`, normalized by `Q_l(1) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthoPolyQ {
    a: u32,
    b: u32,
    exact: Vec<BigRational>,
    coeffs: Vec<f64>,
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `∫_0^1 t^{p+a} (1 − t)^b dt = (p + a)! b! / (p + a + b + 1)!`.
fn moment(p: u32, a: u32, b: u32) -> BigRational {
    BigRational::new(factorial(p + a) * factorial(b), factorial(p + a + b + 1))
}

/// Exact weighted inner product of two coefficient vectors.
fn inner(p: &[BigRational], q: &[BigRational], a: u32, b: u32) -> BigRational {
    let mut acc = BigRational::zero();
    for (i, x) in p.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in q.iter().enumerate() {
            if !y.is_zero() {
                acc += x * y * moment((i + j) as u32, a, b);
            }
        }
    }
    acc
}

/// Gram–Schmidt on `1, t, t², …` with exact rational moments, then scaled so
/// that `Q(1) = 1`.
pub fn build_ortho_q(a: u32, b: u32, degree: usize) -> Result<OrthoPolyQ> {
    if degree > MAX_DEGREE {
        return Err(Error::Unsupported(format!(
            "orthogonal polynomial degree {degree} exceeds {MAX_DEGREE}"
        )));
    }
    let mut basis: Vec<Vec<BigRational>> = Vec::with_capacity(degree + 1);
    for l in 0..=degree {
        let mut p = vec![BigRational::zero(); l + 1];
        p[l] = BigRational::one();
        for q in &basis {
            let c = inner(&p, q, a, b) / inner(q, q, a, b);
            for (i, qi) in q.iter().enumerate() {
                p[i] -= &c * qi;
            }
        }
        basis.push(p);
    }
    let mut exact = basis.pop().expect("degree + 1 polynomials");
    let at_one: BigRational = exact.iter().cloned().sum();
    for c in exact.iter_mut() {
        *c /= at_one.clone();
    }
    let coeffs = exact.iter().map(|c| c.to_f64().expect("finite")).collect();
    Ok(OrthoPolyQ { a, b, exact, coeffs })
}

impl OrthoPolyQ {
    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Monomial coefficients, constant term first.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn exact_coeffs(&self) -> &[BigRational] {
        &self.exact
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
    }

    /// Exact `∫_0^1 Q Q' t^a (1 − t)^b dt` against another polynomial of the
    /// same weight.
    pub fn exact_inner(&self, other: &OrthoPolyQ) -> BigRational {
        inner(&self.exact, &other.exact, self.a, self.b)
    }
}
