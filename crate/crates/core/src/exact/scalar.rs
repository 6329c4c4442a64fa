//! Exact arithmetic in the real cyclotomic field Q(c), c = 2cos(pi/N).
//!
//! N is the lcm of the finite Coxeter matrix entries >= 3 (N = 1 when there
//! are none, in which case every scalar is rational). Scalars are coefficient
//! vectors reduced modulo the minimal polynomial of c, so equality of scalars
//! is equality of vectors and the zero test is exact. Signs of nonzero
//! scalars are decided by interval refinement around a Sturm-isolated
//! enclosure of c.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{self, Rat};

/// Element of Q(c) as a reduced coefficient vector of length `ctx.degree()`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlgebraicScalar {
    coeffs: Vec<Rat>,
}

impl AlgebraicScalar {
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exact rational coefficient strings "p/q", constant term first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }
}

impl fmt::Display for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*c")?,
                _ => write!(f, "{c}*c^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Arithmetic context for one Coxeter system: the minimal polynomial of
/// c = 2cos(pi/N) and a certified isolating interval for c.
///
/// Shared read-only state; every operation is pure.
#[derive(Debug, Clone)]
pub struct FieldContext {
    root_order: u32,
    min_poly: Vec<Rat>,
    degree: usize,
    // Only for degree >= 2: rational endpoints with exactly one root of
    // min_poly (namely c, its largest real root) inside, f(lo) < 0 < f(hi).
    iso_lo: Rat,
    iso_hi: Rat,
}

impl FieldContext {
    /// Context for c = 2cos(pi/N); `n_root` = N >= 1.
    pub fn new(n_root: u32) -> Self {
        assert!(n_root >= 1);
        let min_poly = min_poly_two_cos(n_root);
        let degree = min_poly.len() - 1;
        let (iso_lo, iso_hi) = if degree >= 2 {
            isolate_largest_root(&min_poly)
        } else {
            (Rat::zero(), Rat::zero())
        };
        FieldContext {
            root_order: n_root,
            min_poly,
            degree,
            iso_lo,
            iso_hi,
        }
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> &[Rat] {
        &self.min_poly
    }

    fn make(&self, poly_coeffs: Vec<Rat>) -> AlgebraicScalar {
        let reduced = poly::rem(&poly_coeffs, &self.min_poly);
        let mut coeffs = reduced;
        coeffs.resize(self.degree, Rat::zero());
        AlgebraicScalar { coeffs }
    }

    pub fn zero(&self) -> AlgebraicScalar {
        AlgebraicScalar {
            coeffs: vec![Rat::zero(); self.degree],
        }
    }

    pub fn one(&self) -> AlgebraicScalar {
        self.from_rational(Rat::one())
    }

    pub fn from_int(&self, value: i64) -> AlgebraicScalar {
        self.from_rational(Rat::from_integer(BigInt::from(value)))
    }

    pub fn from_rational(&self, value: Rat) -> AlgebraicScalar {
        self.make(vec![value])
    }

    pub fn from_coeffs(&self, coeffs: Vec<Rat>) -> AlgebraicScalar {
        self.make(coeffs)
    }

    pub fn add(&self, a: &AlgebraicScalar, b: &AlgebraicScalar) -> AlgebraicScalar {
        AlgebraicScalar {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, a: &AlgebraicScalar, b: &AlgebraicScalar) -> AlgebraicScalar {
        AlgebraicScalar {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn neg(&self, a: &AlgebraicScalar) -> AlgebraicScalar {
        AlgebraicScalar {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, a: &AlgebraicScalar, b: &AlgebraicScalar) -> AlgebraicScalar {
        self.make(poly::mul(&a.coeffs, &b.coeffs))
    }

    /// Multiplicative inverse of a nonzero scalar, by the extended Euclid
    /// identity u*a + v*minpoly = 1 (the minimal polynomial is irreducible,
    /// so every nonzero reduced scalar is a unit).
    pub fn inv(&self, a: &AlgebraicScalar) -> AlgebraicScalar {
        assert!(!a.is_zero(), "inverse of zero");
        if self.degree == 1 {
            return self.from_rational(Rat::one() / &a.coeffs[0]);
        }
        let trimmed = poly::trim(a.coeffs.clone());
        let (g, u, _) = poly::ext_gcd(&trimmed, &self.min_poly);
        assert_eq!(g.len(), 1, "scalar is not a unit");
        self.make(poly::scale(&u, &(Rat::one() / &g[0])))
    }

    pub fn div(&self, a: &AlgebraicScalar, b: &AlgebraicScalar) -> AlgebraicScalar {
        self.mul(a, &self.inv(b))
    }

    /// The scalar 2cos(pi/m) for a finite matrix entry m >= 2.
    ///
    /// For m >= 3 this requires m | N, which holds by construction of N.
    pub fn two_cos_pi_over(&self, m: u32) -> AlgebraicScalar {
        assert!(m >= 2);
        if m == 2 {
            return self.zero();
        }
        assert!(
            self.root_order.is_multiple_of(m),
            "entry {m} does not divide the root order N={}",
            self.root_order
        );
        let k = self.root_order / m;
        self.make(cheb_like(k as usize))
    }

    /// Certified sign of a scalar: -1, 0, or +1.
    ///
    /// Zero is decided exactly from the coefficient vector; nonzero signs by
    /// refining the isolating interval of c until the interval image of the
    /// scalar's polynomial excludes zero. Termination is guaranteed: a
    /// nonzero reduced vector has degree below the minimal polynomial, so it
    /// cannot vanish at c.
    pub fn sign(&self, a: &AlgebraicScalar) -> i8 {
        if a.is_zero() {
            return 0;
        }
        if self.degree == 1 {
            // Scalars are plain rationals.
            return if a.coeffs[0].is_positive() { 1 } else { -1 };
        }
        let mut lo = self.iso_lo.clone();
        let mut hi = self.iso_hi.clone();
        for _ in 0..4096 {
            let (qlo, qhi) = poly::eval_interval(&a.coeffs, &lo, &hi);
            if qlo.is_positive() {
                return 1;
            }
            if qhi.is_negative() {
                return -1;
            }
            let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
            // min_poly has no rational roots when degree >= 2, so the sign
            // at mid is well-defined and tells which half contains c.
            if poly::eval(&self.min_poly, &mid).is_negative() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        unreachable!("sign refinement did not terminate");
    }
}

/// Polynomials p_k with p_k(2cos t) = 2cos(kt): p_0 = 2, p_1 = y,
/// p_{k+1} = y*p_k - p_{k-1}.
fn cheb_like(k: usize) -> Vec<Rat> {
    let two = Rat::from_integer(BigInt::from(2));
    let mut prev = vec![two];
    let mut cur = vec![Rat::zero(), Rat::one()];
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let mut next = poly::mul(&[Rat::zero(), Rat::one()], &cur);
        next = poly::sub(&next, &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Minimal polynomial of 2cos(pi/N) over Q.
///
/// For N >= 2 it is obtained from the 2N-th cyclotomic polynomial, which is
/// palindromic of even degree 2d, by rewriting x^k + x^-k in the basis
/// p_k(x + 1/x). For N = 1, c = -2.
fn min_poly_two_cos(n_root: u32) -> Vec<Rat> {
    if n_root == 1 {
        return vec![Rat::from_integer(BigInt::from(2)), Rat::one()];
    }
    let phi = poly::cyclotomic(2 * n_root);
    let deg = phi.len() - 1;
    assert!(deg.is_multiple_of(2));
    let d = deg / 2;
    let mut out = vec![Rat::from_integer(phi[d].clone())];
    for k in 1..=d {
        let pk = cheb_like(k);
        let ak = Rat::from_integer(phi[d + k].clone());
        out = poly::add(&out, &poly::scale(&pk, &ak));
    }
    assert_eq!(out.len() - 1, d);
    assert!(out[d].is_one(), "minimal polynomial must be monic");
    out
}

/// Isolating interval (lo, hi) for the largest real root of a squarefree
/// monic polynomial with all roots in (-2, 2), with f(lo) < 0 < f(hi).
fn isolate_largest_root(p: &[Rat]) -> (Rat, Rat) {
    let chain = poly::sturm_chain(p);
    let two = Rat::from_integer(BigInt::from(2));
    let mut lo = -two.clone();
    let mut hi = two;
    while poly::count_roots(&chain, &lo, &hi) > 1 {
        let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
        if poly::count_roots(&chain, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    assert_eq!(poly::count_roots(&chain, &lo, &hi), 1);
    // pre-refine so that per-call sign refinement rarely needs to bisect
    for _ in 0..12 {
        let mid = (&lo + &hi) / Rat::from_integer(BigInt::from(2));
        if poly::eval(p, &mid).is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    debug_assert!(poly::eval(p, &lo).is_negative() && poly::eval(p, &hi).is_positive());
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_context() {
        let ctx = FieldContext::new(1);
        assert_eq!(ctx.degree(), 1);
        let a = ctx.from_int(3);
        let b = ctx.from_int(-5);
        assert_eq!(ctx.sign(&a), 1);
        assert_eq!(ctx.sign(&b), -1);
        assert_eq!(ctx.sign(&ctx.add(&a, &ctx.from_int(-3))), 0);
    }

    #[test]
    fn n3_gives_integer_cos() {
        // 2cos(pi/3) = 1; minimal polynomial of c is linear.
        let ctx = FieldContext::new(3);
        assert_eq!(ctx.degree(), 1);
        assert_eq!(ctx.two_cos_pi_over(3), ctx.one());
    }

    #[test]
    fn n4_sqrt2() {
        // c = sqrt(2): min poly y^2 - 2
        let ctx = FieldContext::new(4);
        assert_eq!(ctx.degree(), 2);
        let c = ctx.two_cos_pi_over(4);
        let c2 = ctx.mul(&c, &c);
        assert_eq!(c2, ctx.from_int(2));
        assert_eq!(ctx.sign(&c), 1);
        // c - 1 > 0, c - 2 < 0
        assert_eq!(ctx.sign(&ctx.sub(&c, &ctx.from_int(1))), 1);
        assert_eq!(ctx.sign(&ctx.sub(&c, &ctx.from_int(2))), -1);
    }

    #[test]
    fn n5_golden_ratio() {
        // c = 2cos(pi/5) = (1+sqrt5)/2: c^2 = c + 1
        let ctx = FieldContext::new(5);
        assert_eq!(ctx.degree(), 2);
        let c = ctx.two_cos_pi_over(5);
        let c2 = ctx.mul(&c, &c);
        assert_eq!(c2, ctx.add(&c, &ctx.one()));
        // 1 < c < 2
        assert_eq!(ctx.sign(&ctx.sub(&c, &ctx.from_int(1))), 1);
        assert_eq!(ctx.sign(&ctx.sub(&c, &ctx.from_int(2))), -1);
    }

    #[test]
    fn n12_compound_entries() {
        // System mixing entries 3 and 4: N = 12, degree phi(24)/2 = 4.
        let ctx = FieldContext::new(12);
        assert_eq!(ctx.degree(), 4);
        let c3 = ctx.two_cos_pi_over(3);
        assert_eq!(c3, ctx.one());
        let c4 = ctx.two_cos_pi_over(4);
        assert_eq!(ctx.mul(&c4, &c4), ctx.from_int(2));
        let c6 = ctx.two_cos_pi_over(6);
        assert_eq!(ctx.mul(&c6, &c6), ctx.from_int(3));
        let c12 = ctx.two_cos_pi_over(12);
        // 2cos(pi/12) has minimal polynomial y^4 - 4y^2 + 1
        let c12_2 = ctx.mul(&c12, &c12);
        let c12_4 = ctx.mul(&c12_2, &c12_2);
        let lhs = ctx.add(
            &ctx.sub(&c12_4, &ctx.mul(&ctx.from_int(4), &c12_2)),
            &ctx.one(),
        );
        assert!(lhs.is_zero());
        assert_eq!(ctx.sign(&c12), 1);
    }
}
