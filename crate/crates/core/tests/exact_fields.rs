//! Field axioms and certified sign behavior of the exact scalar layer,
//! as property tests over the real cyclotomic contexts used by dihedral
//! and mixed-entry systems.

use dual_artin_core::exact::{AlgebraicScalar, FieldContext, Rat};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=9)
        .prop_map(|(n, d)| Rat::new(BigInt::from(n), BigInt::from(d)))
}

fn scalar_strategy(degree: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(rat_strategy(), degree)
}

fn contexts() -> Vec<FieldContext> {
    // degree 2 (golden ratio) and degree 4 (lcm of bonds 3 and 4)
    vec![FieldContext::new(5), FieldContext::new(12)]
}

fn make(ctx: &FieldContext, coeffs: &[Rat]) -> AlgebraicScalar {
    ctx.from_coeffs(coeffs.to_vec())
}

proptest! {
    #[test]
    fn ring_axioms(a in scalar_strategy(4), b in scalar_strategy(4), c in scalar_strategy(4)) {
        for ctx in contexts() {
            let d = ctx.degree();
            let (a, b, c) = (make(&ctx, &a[..d]), make(&ctx, &b[..d]), make(&ctx, &c[..d]));
            prop_assert_eq!(ctx.add(&a, &b), ctx.add(&b, &a));
            prop_assert_eq!(ctx.mul(&a, &b), ctx.mul(&b, &a));
            prop_assert_eq!(
                ctx.mul(&ctx.mul(&a, &b), &c),
                ctx.mul(&a, &ctx.mul(&b, &c))
            );
            prop_assert_eq!(
                ctx.mul(&a, &ctx.add(&b, &c)),
                ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c))
            );
            prop_assert_eq!(ctx.add(&a, &ctx.neg(&a)), ctx.zero());
            prop_assert_eq!(ctx.mul(&a, &ctx.one()), a);
        }
    }

    #[test]
    fn inverses_and_division(a in scalar_strategy(4), b in scalar_strategy(4)) {
        for ctx in contexts() {
            let d = ctx.degree();
            let a = make(&ctx, &a[..d]);
            let b = make(&ctx, &b[..d]);
            if !a.is_zero() {
                prop_assert_eq!(ctx.mul(&a, &ctx.inv(&a)), ctx.one());
            }
            if !b.is_zero() {
                prop_assert_eq!(ctx.mul(&ctx.div(&a, &b), &b), a);
            }
        }
    }

    #[test]
    fn sign_is_multiplicative_and_odd(a in scalar_strategy(4), b in scalar_strategy(4)) {
        for ctx in contexts() {
            let d = ctx.degree();
            let a = make(&ctx, &a[..d]);
            let b = make(&ctx, &b[..d]);
            let (sa, sb) = (ctx.sign(&a), ctx.sign(&b));
            prop_assert_eq!(ctx.sign(&ctx.mul(&a, &b)), sa * sb);
            prop_assert_eq!(ctx.sign(&ctx.neg(&a)), -sa);
            // squares are nonnegative, and zero only at zero
            let sq = ctx.mul(&a, &a);
            prop_assert_eq!(ctx.sign(&sq), if a.is_zero() { 0 } else { 1 });
        }
    }
}

#[test]
fn sign_orders_known_constants() {
    // c = 2cos(pi/12) = (sqrt6 + sqrt2)/2 lies strictly between the
    // values for pi/6 and pi/24-free rational bounds
    let ctx = FieldContext::new(12);
    let c12 = ctx.two_cos_pi_over(12);
    let c6 = ctx.two_cos_pi_over(6);
    let c4 = ctx.two_cos_pi_over(4);
    let c3 = ctx.two_cos_pi_over(3);
    // 2cos is decreasing in the angle: pi/12 > pi/6 > pi/4 > pi/3 values
    assert_eq!(ctx.sign(&ctx.sub(&c12, &c6)), 1);
    assert_eq!(ctx.sign(&ctx.sub(&c6, &c4)), 1);
    assert_eq!(ctx.sign(&ctx.sub(&c4, &c3)), 1);
    // and all lie in (1, 2)
    for c in [&c12, &c6, &c4] {
        assert_eq!(ctx.sign(&ctx.sub(c, &ctx.from_int(1))), 1);
        assert_eq!(ctx.sign(&ctx.sub(c, &ctx.from_int(2))), -1);
    }
}
