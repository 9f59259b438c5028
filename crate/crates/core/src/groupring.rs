//! Brute-force arithmetic in the group ring Z[zeta_p][G] for the additive
//! group G of GF(p^n). This is the exact oracle behind the group-ring
//! identities the constructions rest on; convolution is quadratic in |G|, so
//! it is capped and meant for identity verification, not scale.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cyclotomic::CycInt;
use crate::error::Error;
use crate::field::{make_field, quad_classes, FieldCtx, FieldElem};
use crate::pds::LevelSets;

/// Default cap on |G| for convolutions.
pub const CONVOLVE_CAP: u64 = 625;

/// A dense group-ring element: one cyclotomic coefficient per field element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrpElem {
    p: u8,
    order: u32,
    coeffs: Vec<CycInt>,
}

impl GrpElem {
    pub fn zero(ctx: &FieldCtx) -> Self {
        GrpElem {
            p: ctx.p() as u8,
            order: ctx.order(),
            coeffs: vec![CycInt::zero(ctx.p() as u8); ctx.order() as usize],
        }
    }

    /// Indicator element of a subset.
    pub fn from_subset(ctx: &FieldCtx, subset: &[FieldElem]) -> Self {
        let mut elem = Self::zero(ctx);
        for &x in subset {
            elem.coeffs[x.id() as usize] = CycInt::one(elem.p);
        }
        elem
    }

    /// The group identity 1_G (the delta at zero).
    pub fn identity(ctx: &FieldCtx) -> Self {
        let mut elem = Self::zero(ctx);
        elem.coeffs[0] = CycInt::one(elem.p);
        elem
    }

    /// The full group sum G.
    pub fn group_sum(ctx: &FieldCtx) -> Self {
        GrpElem {
            p: ctx.p() as u8,
            order: ctx.order(),
            coeffs: vec![CycInt::one(ctx.p() as u8); ctx.order() as usize],
        }
    }

    pub fn coeff(&self, x: FieldElem) -> &CycInt {
        &self.coeffs[x.id() as usize]
    }

    pub fn coeffs(&self) -> &[CycInt] {
        &self.coeffs
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.order, rhs.order, "mixed group rings");
        assert_eq!(self.p, rhs.p, "mixed cyclotomic orders");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        GrpElem {
            p: self.p,
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        GrpElem {
            p: self.p,
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &CycInt) -> Self {
        GrpElem {
            p: self.p,
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&CycInt::from_int(self.p, c))
    }
}

/// Group-ring product `(a * b)[g] = sum_h a[h] b[g - h]` under the additive
/// law, with the default size cap.
pub fn convolve(ctx: &FieldCtx, a: &GrpElem, b: &GrpElem) -> Result<GrpElem, Error> {
    convolve_with_cap(ctx, a, b, CONVOLVE_CAP)
}

/// Same with an explicit cap on |G|.
pub fn convolve_with_cap(
    ctx: &FieldCtx,
    a: &GrpElem,
    b: &GrpElem,
    cap: u64,
) -> Result<GrpElem, Error> {
    a.check(b);
    assert_eq!(a.order, ctx.order(), "element belongs to another group");
    if u64::from(ctx.order()) > cap {
        return Err(Error::CapExceeded { size: u64::from(ctx.order()), cap });
    }
    let mut out = GrpElem::zero(ctx);
    for h in ctx.elements() {
        let ah = a.coeff(h);
        if ah.is_zero() {
            continue;
        }
        for j in ctx.elements() {
            let bj = b.coeff(j);
            if bj.is_zero() {
                continue;
            }
            let g = ctx.add(h, j).id() as usize;
            out.coeffs[g] = out.coeffs[g].add(&ah.mul(bj));
        }
    }
    Ok(out)
}

/// `a^(-1)` support reversal: coefficient at g becomes the one at -g,
/// conjugated when `conjugate_coefficients` is set (needed for L_t, plain
/// reversal for subset indicators).
pub fn inverse_support(ctx: &FieldCtx, a: &GrpElem, conjugate_coefficients: bool) -> GrpElem {
    let mut out = GrpElem::zero(ctx);
    for g in ctx.elements() {
        let src = a.coeff(ctx.neg(g));
        out.coeffs[g.id() as usize] =
            if conjugate_coefficients { src.conj() } else { src.clone() };
    }
    out
}

/// `L_t = sum_i D_i zeta^(it)`: the element whose coefficient at x is
/// zeta^(t f(x)). `L_0` is the full group sum.
pub fn build_lt(ctx: &FieldCtx, levels: &LevelSets, t: u8) -> GrpElem {
    assert!(u32::from(t) < ctx.p());
    let p = ctx.p() as u8;
    let mut out = GrpElem::zero(ctx);
    for value in 0..p {
        let root = CycInt::root_power(p, (value * t) % p);
        for &x in levels.members(value) {
            out.coeffs[x.id() as usize] = root.clone();
        }
    }
    out
}

/// Outcome of checking the square / non-square identities in Z[F_p] and the
/// quadratic Gauss-sum relation in Z[zeta_p] for one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIdentityReport {
    pub p: u64,
    /// p mod 4 selects which closed forms apply.
    pub residue_class: u64,
    pub squares_squared_ok: bool,
    pub nonsquares_squared_ok: bool,
    pub mixed_product_ok: bool,
    /// -m(1+m) with m = sum_{i in S} zeta^(-i) equals -(p-1)/4 or (p+1)/4.
    pub m_identity_ok: bool,
}

impl PrimeIdentityReport {
    pub fn all_pass(&self) -> bool {
        self.squares_squared_ok
            && self.nonsquares_squared_ok
            && self.mixed_product_ok
            && self.m_identity_ok
    }
}

/// Verify, for an odd prime p <= 101, the closed forms for S^2, T^2 and ST
/// in the group ring Z[F_p] (S the nonzero squares, T the non-squares), and
/// the rational value of -m(1+m) in Z[zeta_p].
pub fn prime_group_identities(p: u64) -> Result<PrimeIdentityReport, Error> {
    if p > 101 {
        return Err(Error::CapExceeded { size: p, cap: 101 });
    }
    let ctx = make_field(p, 1, None)?;
    let qc = quad_classes(p)?;
    let as_elems = |rs: &[u8]| -> Vec<FieldElem> {
        rs.iter().map(|&r| ctx.elem(u32::from(r))).collect()
    };
    let s = GrpElem::from_subset(&ctx, &as_elems(qc.squares()));
    let t = GrpElem::from_subset(&ctx, &as_elems(qc.nonsquares()));
    let one = GrpElem::identity(&ctx);
    let all = GrpElem::group_sum(&ctx);

    let cap = p;
    let s2 = convolve_with_cap(&ctx, &s, &s, cap)?;
    let t2 = convolve_with_cap(&ctx, &t, &t, cap)?;
    let st = convolve_with_cap(&ctx, &s, &t, cap)?;
    let ts = convolve_with_cap(&ctx, &t, &s, cap)?;
    assert_eq!(st, ts, "the group ring is commutative");

    let pi = p as i64;
    let (s2_expect, t2_expect, st_expect) = if p % 4 == 1 {
        (
            one.scale_int((pi - 1) / 2)
                .add(&s.scale_int((pi - 5) / 4))
                .add(&t.scale_int((pi - 1) / 4)),
            one.scale_int((pi - 1) / 2)
                .add(&s.scale_int((pi - 1) / 4))
                .add(&t.scale_int((pi - 5) / 4)),
            s.add(&t).scale_int((pi - 1) / 4),
        )
    } else {
        (
            s.scale_int((pi - 3) / 4).add(&t.scale_int((pi + 1) / 4)),
            s.scale_int((pi + 1) / 4).add(&t.scale_int((pi - 3) / 4)),
            one.scale_int((pi + 1) / 4).add(&all.scale_int((pi - 3) / 4)),
        )
    };

    // m = sum_{i in S} zeta^(-i)
    let pc = p as u8;
    let mut m = CycInt::zero(pc);
    for &i in qc.squares() {
        m = m.add(&CycInt::root_power(pc, ((p as u8) - i) % pc));
    }
    let value = m.mul(&CycInt::one(pc).add(&m)).neg();
    let expected = if p % 4 == 1 { -((pi - 1) / 4) } else { (pi + 1) / 4 };
    let m_identity_ok = value.as_integer() == Some(BigInt::from(expected));

    Ok(PrimeIdentityReport {
        p,
        residue_class: p % 4,
        squares_squared_ok: s2 == s2_expect,
        nonsquares_squared_ok: t2 == t2_expect,
        mixed_product_ok: st == st_expect,
        m_identity_ok,
    })
}
