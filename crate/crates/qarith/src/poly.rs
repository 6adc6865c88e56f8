//! Dense univariate polynomial helpers over Q (index = degree).
//!
//! Only what rational-function normalization needs: gcd via a primitive
//! pseudo-remainder sequence over Z, and exact division by a monic divisor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Degree of a trimmed dense polynomial (empty means zero, degree `None`).
fn degree<T>(p: &[T]) -> Option<usize> {
    p.len().checked_sub(1)
}

fn trim_int(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Scale a rational polynomial to a primitive integer polynomial with positive
/// leading coefficient.
fn to_primitive_int(p: &[BigRational]) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    primitive(ints)
}

fn primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    trim_int(&mut p);
    let mut content = BigInt::zero();
    for c in &p {
        content = content.gcd(c);
        if content.is_one() {
            break;
        }
    }
    if p.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    if !content.is_zero() && !content.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &content;
        }
    }
    p
}

/// Pseudo-remainder of `a` by `b` (both integer, `b` nonzero).
fn pseudo_rem(mut r: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        trim_int(&mut r);
    }
    r
}

/// Monic gcd of two nonzero rational polynomials.
pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    debug_assert!(!a.is_empty() && !b.is_empty());
    if a.len() == 1 || b.len() == 1 {
        return vec![BigRational::one()];
    }
    let mut x = to_primitive_int(a);
    let mut y = to_primitive_int(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        let r = pseudo_rem(x, &y);
        match degree(&r) {
            None => break,
            Some(0) => return vec![BigRational::one()],
            Some(_) => {
                x = y;
                y = primitive(r);
            }
        }
    }
    let lead = BigRational::from_integer(y.last().unwrap().clone());
    y.into_iter().map(|c| BigRational::from_integer(c) / &lead).collect()
}

/// Quotient of `a` by a monic `g`; the division is assumed exact.
pub(crate) fn div_monic(a: &[BigRational], g: &[BigRational]) -> Vec<BigRational> {
    debug_assert!(g.last().is_some_and(One::is_one));
    if g.len() == 1 {
        return a.to_vec();
    }
    let dg = g.len() - 1;
    let mut r = a.to_vec();
    let qlen = r.len() - dg;
    let mut q = vec![BigRational::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = std::mem::take(&mut r[k + dg]);
        if c.is_zero() {
            continue;
        }
        for (i, gc) in g[..dg].iter().enumerate() {
            if !gc.is_zero() {
                r[k + i] -= &c * gc;
            }
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
    q
}

pub(crate) fn is_one(p: &[BigRational]) -> bool {
    p.len() == 1 && p[0].is_one()
}
