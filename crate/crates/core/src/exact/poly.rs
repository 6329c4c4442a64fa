//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored low degree first. The zero polynomial is the
//! empty vector. This is enough machinery for cyclotomic polynomials,
//! reduction modulo a fixed minimal polynomial, and Sturm root counting.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn degree(p: &[Rat]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

pub fn mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn scale(a: &[Rat], k: &Rat) -> Vec<Rat> {
    trim(a.iter().map(|c| c * k).collect())
}

/// Quotient and remainder of `a` divided by nonzero `b`.
pub fn divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r: Vec<Rat> = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    let mut q = vec![Rat::zero(); a.len().saturating_sub(db)];
    while r.len() > db {
        let qc = r.last().unwrap() / lead;
        let shift = r.len() - 1 - db;
        if !qc.is_zero() {
            q[shift] = qc.clone();
            for (i, c) in b.iter().enumerate() {
                let delta = &qc * c;
                r[shift + i] -= delta;
            }
        }
        r.pop();
        r = trim(r);
        if r.len() <= db {
            break;
        }
    }
    (trim(q), trim(r))
}

/// Remainder of `a` modulo `b`; `b` must be nonzero.
pub fn rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    divmod(a, b).1
}

/// Extended Euclid: (g, u, v) with u*a + v*b = g, g the monic gcd.
pub fn ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut u0 = vec![Rat::one()];
    let mut u1: Vec<Rat> = Vec::new();
    let mut v0: Vec<Rat> = Vec::new();
    let mut v1 = vec![Rat::one()];
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1);
        let u = sub(&u0, &mul(&q, &u1));
        let v = sub(&v0, &mul(&q, &v1));
        r0 = core::mem::replace(&mut r1, r);
        u0 = core::mem::replace(&mut u1, u);
        v0 = core::mem::replace(&mut v1, v);
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = Rat::one() / lead;
        r0 = scale(&r0, &inv);
        u0 = scale(&u0, &inv);
        v0 = scale(&v0, &inv);
    }
    (r0, u0, v0)
}

pub fn derivative(p: &[Rat]) -> Vec<Rat> {
    if p.len() <= 1 {
        return Vec::new();
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
            .collect(),
    )
}

pub fn eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Interval extension of `eval` over `[lo, hi]` by Horner with interval steps.
pub fn eval_interval(p: &[Rat], lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    let mut alo = Rat::zero();
    let mut ahi = Rat::zero();
    for c in p.iter().rev() {
        // [alo, ahi] * [lo, hi]
        let p1 = &alo * lo;
        let p2 = &alo * hi;
        let p3 = &ahi * lo;
        let p4 = &ahi * hi;
        let mut mn = p1.clone();
        let mut mx = p1;
        for v in [p2, p3, p4] {
            if v < mn {
                mn = v.clone();
            }
            if v > mx {
                mx = v;
            }
        }
        alo = mn + c;
        ahi = mx + c;
    }
    (alo, ahi)
}

// ---- integer polynomials, used only to build cyclotomics ----

fn int_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Exact division of integer polynomials; panics if not exact.
fn int_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert!(!b.is_empty());
    let mut r: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); a.len().saturating_sub(db)];
    while r.len() > db {
        let (qc, exact) = {
            let l = r.last().unwrap();
            let d = &b[db];
            (l / d, (l % d).is_zero())
        };
        assert!(exact, "inexact integer polynomial division");
        let shift = r.len() - 1 - db;
        q[shift] = qc.clone();
        for (i, c) in b.iter().enumerate() {
            let delta = &qc * c;
            r[shift + i] -= delta;
        }
        r = int_trim(r);
    }
    assert!(r.is_empty(), "nonzero remainder in exact division");
    int_trim(q)
}

/// The n-th cyclotomic polynomial over the integers.
pub fn cyclotomic(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1 divided by Phi_d for all proper divisors d of n
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic(d);
            p = int_div_exact(&p, &phi_d);
        }
    }
    p
}

// ---- Sturm sequences ----

/// Sturm chain of a squarefree polynomial.
pub fn sturm_chain(p: &[Rat]) -> Vec<Vec<Rat>> {
    let mut chain = vec![p.to_vec(), derivative(p)];
    loop {
        let k = chain.len();
        if chain[k - 1].is_empty() {
            chain.pop();
            break;
        }
        let r = rem(&chain[k - 2], &chain[k - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.iter().map(|c| -c).collect());
    }
    chain
}

fn sign_variations(chain: &[Vec<Rat>], x: &Rat) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for p in chain {
        let v = eval(p, x);
        let s: i8 = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
pub fn count_roots(chain: &[Vec<Rat>], lo: &Rat, hi: &Rat) -> usize {
    sign_variations(chain, lo) - sign_variations(chain, hi)
}
