//! Univariate rational polynomials: just enough to find rational roots of
//! characteristic polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Scalar;

/// Largest absolute coefficient for which divisor enumeration is attempted.
const ROOT_SEARCH_LIMIT: i64 = 1_000_000_000_000;

/// Evaluates `sum c_i x^i`.
pub fn eval(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
}

/// Distinct rational roots, sorted ascending. Coefficients are given from the
/// constant term upwards. Returns `None` when the coefficients are too large
/// for divisor enumeration.
pub fn rational_roots(coeffs: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut c: Vec<Scalar> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Some(Vec::new());
    }
    let mut roots = Vec::new();
    // strip factors of x
    let low = c.iter().position(|v| !v.is_zero()).unwrap();
    if low > 0 {
        roots.push(Scalar::zero());
        c.drain(..low);
    }
    if c.len() <= 1 {
        return Some(roots);
    }
    let mut l = BigInt::one();
    for v in &c {
        l = l.lcm(v.denom());
    }
    let ints: Vec<BigInt> = c.iter().map(|v| v.numer() * (&l / v.denom())).collect();
    let a0 = ints[0].abs().to_i64()?;
    let an = ints.last().unwrap().abs().to_i64()?;
    if a0 > ROOT_SEARCH_LIMIT || an > ROOT_SEARCH_LIMIT {
        return None;
    }
    let ps = divisors(a0);
    let qs = divisors(an);
    for p in &ps {
        for qd in &qs {
            for sign in [1i64, -1] {
                let cand = Scalar::new(BigInt::from(sign * p), BigInt::from(*qd));
                if !roots.contains(&cand) && eval(&c, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Some(roots)
}

fn divisors(n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut d = 1i64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{q, qf};

    #[test]
    fn finds_rational_roots() {
        // (x-1)(2x+3)x = 2x^3 + x^2 - 3x
        let c = vec![q(0), q(-3), q(1), q(2)];
        assert_eq!(rational_roots(&c).unwrap(), vec![qf(-3, 2), q(0), q(1)]);
        // x^2 - 2 has none
        assert!(rational_roots(&[q(-2), q(0), q(1)]).unwrap().is_empty());
    }
}
