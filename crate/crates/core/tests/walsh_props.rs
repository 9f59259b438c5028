//! Spectrum-level properties: agreement with a direct cyclotomic summation
//! oracle, Walsh inversion, Parseval, and invariance of the classification
//! under relabeling b -> cb.

use bentsrg_core::bent::{
    catalog_hk, catalog_quadratic, catalog_sporadic_ternary, classify_regularity,
    walsh_transform, PFunc, WalshSpectrum,
};
use bentsrg_core::cyclotomic::CycInt;
use bentsrg_core::field::{make_field, FieldCtx};
use num_bigint::BigInt;

/// Independent oracle: accumulate zeta^(f(x) + tr(bx)) term by term in
/// Z[zeta_p], with none of the count-vector assembly of the hot path.
fn walsh_by_direct_summation(ctx: &FieldCtx, f: &PFunc) -> Vec<CycInt> {
    let p = ctx.p() as u8;
    ctx.elements()
        .map(|b| {
            let mut acc = CycInt::zero(p);
            for x in ctx.elements() {
                let e = (f.value(x) + ctx.abs_trace(ctx.mul(b, x))) % p;
                acc = acc.add(&CycInt::root_power(p, e));
            }
            acc
        })
        .collect()
}

#[test]
fn fast_transform_matches_direct_summation() {
    for (p, n) in [(3u64, 2u8), (5, 2), (7, 2)] {
        let ctx = make_field(p, n, None).unwrap();
        let f = catalog_quadratic(&ctx, ctx.generator()).unwrap();
        let fast = walsh_transform(&ctx, &f);
        let slow = walsh_by_direct_summation(&ctx, &f);
        assert_eq!(fast.values(), slow.as_slice(), "p={p} n={n}");
    }
}

#[test]
fn walsh_inversion_recovers_the_function() {
    // sum_b W(b) zeta^(-tr(bx)) = p^n zeta^(f(x)) for every x.
    for (p, n) in [(3u64, 2u8), (3, 4), (5, 2)] {
        let ctx = make_field(p, n, None).unwrap();
        let f = if n % 4 == 0 {
            catalog_hk(&ctx).unwrap()
        } else {
            catalog_quadratic(&ctx, ctx.one()).unwrap()
        };
        let spec = walsh_transform(&ctx, &f);
        let pc = p as u8;
        let order = BigInt::from(ctx.order());
        for x in ctx.elements() {
            let mut acc = CycInt::zero(pc);
            for b in ctx.elements() {
                let e = (pc - ctx.abs_trace(ctx.mul(b, x))) % pc;
                acc = acc.add(&spec.value(b).mul_root(e));
            }
            let expected = CycInt::root_power(pc, f.value(x)).scalar_mul(&order);
            assert_eq!(acc, expected, "inversion failed at x={} (p={p}, n={n})", x.id());
        }
    }
}

#[test]
fn parseval_for_catalog_functions() {
    // sum_b |W(b)|^2 = p^(2n), exactly.
    let mut cases: Vec<(FieldCtx, PFunc)> = Vec::new();
    for (p, n) in [(3u64, 2u8), (3, 4), (3, 6), (5, 2), (7, 2)] {
        let ctx = make_field(p, n, None).unwrap();
        let f = catalog_quadratic(&ctx, ctx.one()).unwrap();
        cases.push((ctx, f));
    }
    let ctx = make_field(3, 4, None).unwrap();
    let f = catalog_hk(&ctx).unwrap();
    cases.push((ctx, f));
    let ctx = make_field(3, 6, None).unwrap();
    let f = catalog_sporadic_ternary(&ctx).unwrap();
    cases.push((ctx, f));

    for (ctx, f) in &cases {
        let spec = walsh_transform(ctx, f);
        let mut total = BigInt::from(0);
        for w in spec.values() {
            total += w.mul(&w.conj()).as_integer().expect("|W|^2 is rational");
        }
        let order = BigInt::from(ctx.order());
        assert_eq!(total, &order * &order, "{}", f.name());
    }
}

#[test]
fn classification_invariant_under_input_relabeling() {
    // b -> cb permutes the spectrum values, so bentness, the regularity
    // class and epsilon are unchanged.
    let ctx = make_field(3, 4, None).unwrap();
    let f = catalog_hk(&ctx).unwrap();
    let spec = classify_regularity(walsh_transform(&ctx, &f)).unwrap();
    for c in ctx.elements().skip(1).take(10) {
        let relabeled: Vec<CycInt> = ctx
            .elements()
            .map(|b| spec.value(ctx.mul(c, b)).clone())
            .collect();
        let again =
            classify_regularity(WalshSpectrum::from_values(ctx.p(), ctx.n(), relabeled)).unwrap();
        assert_eq!(again.is_bent(), spec.is_bent());
        assert_eq!(again.regularity(), spec.regularity());
        assert_eq!(again.epsilon(), spec.epsilon());
    }
}

#[test]
fn odd_degree_classification_is_rejected() {
    let ctx = make_field(3, 1, None).unwrap();
    let f = catalog_quadratic(&ctx, ctx.one()).unwrap();
    let spec = walsh_transform(&ctx, &f);
    assert!(classify_regularity(spec).is_err());
}
