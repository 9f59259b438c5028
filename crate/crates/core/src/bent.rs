//! p-ary functions, exact Walsh spectra, bentness and regularity
//! classification, and the hypothesis bundle (evenness, homogeneity, weak
//! regularity) required by the difference-set constructions.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cyclotomic::CycInt;
use crate::error::Error;
use crate::field::{gcd, FieldConstants, FieldCtx, FieldElem};

/// A function GF(p^n) -> GF(p) as a full value table indexed by packed ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFunc {
    p: u32,
    n: u8,
    values: Vec<u8>,
    name: String,
    homogeneity_exponent: Option<u8>,
}

impl PFunc {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Known exponent l with f(ax) = a^l f(x), when the constructor pinned one.
    pub fn homogeneity_exponent(&self) -> Option<u8> {
        self.homogeneity_exponent
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    #[inline]
    pub fn value(&self, x: FieldElem) -> u8 {
        self.values[x.id() as usize]
    }
}

/// Wrap an explicit value table.
pub fn from_values(ctx: &FieldCtx, values: Vec<u8>, name: &str) -> Result<PFunc, Error> {
    if values.len() != ctx.order() as usize {
        return Err(Error::BadValueTable(format!(
            "expected {} entries, got {}",
            ctx.order(),
            values.len()
        )));
    }
    if values.iter().any(|&v| u32::from(v) >= ctx.p()) {
        return Err(Error::BadValueTable("value out of range".into()));
    }
    Ok(PFunc {
        p: ctx.p(),
        n: ctx.n(),
        values,
        name: name.to_string(),
        homogeneity_exponent: None,
    })
}

/// f(x) = tr(a x^2) for a != 0. Homogeneous of degree 2 and even.
pub fn catalog_quadratic(ctx: &FieldCtx, a: FieldElem) -> Result<PFunc, Error> {
    if a == ctx.zero() {
        return Err(Error::ZeroCoefficient);
    }
    let values = ctx
        .elements()
        .map(|x| ctx.abs_trace(ctx.mul(a, ctx.mul(x, x))))
        .collect();
    Ok(PFunc {
        p: ctx.p(),
        n: ctx.n(),
        values,
        name: format!("quadratic:a={}", elem_digits(ctx, a)),
        homogeneity_exponent: Some(2),
    })
}

/// The binomial f(x) = tr(x^2 + x^(p^3k + p^2k - p^k + 1)) on GF(p^4k).
///
/// Both exponents are congruent to 2 mod p - 1, so f(ax) = a^2 f(x); that is
/// re-checked exhaustively at construction. The big exponent is reduced
/// mod p^n - 1 on nonzero arguments instead of running big-integer powers.
pub fn catalog_hk(ctx: &FieldCtx) -> Result<PFunc, Error> {
    if ctx.n() % 4 != 0 {
        return Err(Error::BadDegree { need_multiple_of: 4, got: ctx.n() });
    }
    let p = u64::from(ctx.p());
    let k = u32::from(ctx.n()) / 4;
    let d = p.pow(3 * k) + p.pow(2 * k) - p.pow(k) + 1;
    let values: Vec<u8> = ctx
        .elements()
        .map(|x| ctx.abs_trace(ctx.add(ctx.mul(x, x), ctx.pow(x, d))))
        .collect();
    let f = PFunc {
        p: ctx.p(),
        n: ctx.n(),
        values,
        name: "hk".to_string(),
        homogeneity_exponent: Some(2),
    };
    for a in 0..ctx.p() as u8 {
        let scale = (u32::from(a) * u32::from(a) % ctx.p()) as u8;
        for x in ctx.elements() {
            let lhs = f.value(ctx.mul(ctx.scalar(a), x));
            let rhs = (u32::from(scale) * u32::from(f.value(x)) % ctx.p()) as u8;
            assert_eq!(lhs, rhs, "binomial function is not 2-homogeneous");
        }
    }
    Ok(f)
}

/// The sporadic ternary function tr(xi^7 x^98) on the pinned GF(3^6):
/// bent but not weakly regular.
pub fn catalog_sporadic_ternary(ctx: &FieldCtx) -> Result<PFunc, Error> {
    let pinned = FieldConstants::builtin();
    let expected = pinned.lookup_modulus(3, 6).expect("builtin table has GF(3^6)");
    if ctx.p() != 3 || ctx.n() != 6 || ctx.modulus() != expected {
        return Err(Error::WrongField { expected_p: 3, expected_n: 6 });
    }
    let xi7 = ctx.pow(ctx.generator(), 7);
    let values = ctx
        .elements()
        .map(|x| ctx.abs_trace(ctx.mul(xi7, ctx.pow(x, 98))))
        .collect();
    Ok(PFunc {
        p: 3,
        n: 6,
        values,
        name: "sporadic3_6".to_string(),
        homogeneity_exponent: None,
    })
}

/// f(x) = sum_i tr(c_i x^(d_i)) for user-supplied terms; the empty list is
/// the zero function.
pub fn catalog_trace_poly(ctx: &FieldCtx, terms: &[(FieldElem, u64)]) -> Result<PFunc, Error> {
    if terms.iter().any(|&(_, d)| d == 0) {
        return Err(Error::BadDescriptor("trace-polynomial exponents must be >= 1".into()));
    }
    let p = ctx.p();
    let values = ctx
        .elements()
        .map(|x| {
            let mut acc = 0u32;
            for &(c, d) in terms {
                acc += u32::from(ctx.abs_trace(ctx.mul(c, ctx.pow(x, d))));
            }
            (acc % p) as u8
        })
        .collect();
    let name = if terms.is_empty() {
        "tracepoly:".to_string()
    } else {
        let body: Vec<String> = terms
            .iter()
            .map(|&(c, d)| format!("{},{}", elem_digits(ctx, c), d))
            .collect();
        format!("tracepoly:{}", body.join(";"))
    };
    Ok(PFunc { p: ctx.p(), n: ctx.n(), values, name, homogeneity_exponent: None })
}

/// g = L1 o f o L2 for L1(x) = c x with c != 0 (the linearized permutations
/// of the prime field are exactly the scalings) and L2 a linearized
/// polynomial `sum a_i x^(p^i)` that is verified to permute the field.
pub fn compose_linearized(
    ctx: &FieldCtx,
    f: &PFunc,
    c: u8,
    l2: &[FieldElem],
) -> Result<PFunc, Error> {
    if c == 0 || u32::from(c) >= ctx.p() {
        return Err(Error::ZeroCoefficient);
    }
    let p = u64::from(ctx.p());
    let image: Vec<FieldElem> = ctx
        .elements()
        .map(|x| {
            let mut acc = ctx.zero();
            for (i, &a) in l2.iter().enumerate() {
                acc = ctx.add(acc, ctx.mul(a, ctx.pow(x, p.pow(i as u32))));
            }
            acc
        })
        .collect();
    let mut seen = vec![false; ctx.order() as usize];
    for &y in &image {
        if seen[y.id() as usize] {
            return Err(Error::NotAPermutation);
        }
        seen[y.id() as usize] = true;
    }
    let values = image
        .iter()
        .map(|&y| (u32::from(c) * u32::from(f.value(y)) % ctx.p()) as u8)
        .collect();
    Ok(PFunc {
        p: ctx.p(),
        n: ctx.n(),
        values,
        name: format!("compose(c={c},{})", f.name),
        homogeneity_exponent: f.homogeneity_exponent,
    })
}

/// Regularity classification of a bent function's spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    /// W(b) = p^(n/2) zeta^(f*(b)) for all b.
    Regular,
    /// W(b) = mu p^(n/2) zeta^(f*(b)) with one constant sign mu.
    WeaklyRegular,
    /// Bent, but no constant-sign decomposition exists.
    NonWeaklyRegular,
    NotBent,
}

impl Regularity {
    pub fn is_weakly_regular(self) -> bool {
        matches!(self, Regularity::Regular | Regularity::WeaklyRegular)
    }
}

/// The Walsh spectrum of a function: one cyclotomic integer per b, plus the
/// classification results once [`classify_regularity`] has run.
#[derive(Clone, Debug)]
pub struct WalshSpectrum {
    p: u32,
    n: u8,
    values: Vec<CycInt>,
    is_bent: bool,
    regularity: Option<Regularity>,
    mu: Option<i8>,
    epsilon: Option<i8>,
    dual: Option<Vec<u8>>,
}

impl WalshSpectrum {
    /// Wrap raw spectrum values (one per field element, in id order);
    /// bentness is recomputed, classification is left to run.
    pub fn from_values(p: u32, n: u8, values: Vec<CycInt>) -> Self {
        let order = BigInt::from(p.pow(u32::from(n)));
        let is_bent = values
            .iter()
            .all(|w| w.mul(&w.conj()).as_integer() == Some(order.clone()));
        WalshSpectrum { p, n, values, is_bent, regularity: None, mu: None, epsilon: None, dual: None }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn values(&self) -> &[CycInt] {
        &self.values
    }

    pub fn value(&self, b: FieldElem) -> &CycInt {
        &self.values[b.id() as usize]
    }

    /// True iff |W(b)|^2 = p^n for every b.
    pub fn is_bent(&self) -> bool {
        self.is_bent
    }

    /// `None` until [`classify_regularity`] has run.
    pub fn regularity(&self) -> Option<Regularity> {
        self.regularity
    }

    pub fn mu(&self) -> Option<i8> {
        self.mu
    }

    /// The sign epsilon = (-1)^((p-1)k/2) mu, defined when weakly regular.
    pub fn epsilon(&self) -> Option<i8> {
        self.epsilon
    }

    /// Dual table f*(b), defined when weakly regular.
    pub fn dual(&self) -> Option<&[u8]> {
        self.dual.as_deref()
    }
}

/// Exact Walsh transform W(b) = sum_x zeta^(f(x) + tr(bx)).
///
/// The inner loop tallies integer counts N_j(b) = #{x : f(x) + tr(bx) = j}
/// with pure field arithmetic; cyclotomic integers are only assembled per b.
pub fn walsh_transform(ctx: &FieldCtx, f: &PFunc) -> WalshSpectrum {
    assert_eq!((f.p, f.n), (ctx.p(), ctx.n()), "function belongs to another field");
    let p = ctx.p() as usize;
    let mut values = Vec::with_capacity(ctx.order() as usize);
    let mut counts = vec![0i64; p];
    for b in ctx.elements() {
        counts.iter_mut().for_each(|c| *c = 0);
        if b == ctx.zero() {
            for &v in &f.values {
                counts[v as usize] += 1;
            }
        } else {
            for x in ctx.elements() {
                let j = u32::from(f.value(x)) + u32::from(ctx.abs_trace(ctx.mul(b, x)));
                counts[(j % ctx.p()) as usize] += 1;
            }
        }
        let raw: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
        values.push(CycInt::from_root_coeffs(ctx.p() as u8, &raw));
    }
    WalshSpectrum::from_values(ctx.p(), ctx.n(), values)
}

/// Decide regular / weakly regular / non-weakly regular for even n = 2k.
///
/// Every W(b) is matched against s p^k zeta^j; weak regularity means all
/// match with one common sign s, which is exactly epsilon. mu follows from
/// epsilon = (-1)^((p-1)k/2) mu, and the dual is the exponent table.
pub fn classify_regularity(mut spectrum: WalshSpectrum) -> Result<WalshSpectrum, Error> {
    if spectrum.n % 2 != 0 {
        return Err(Error::OddDegree(spectrum.n));
    }
    if !spectrum.is_bent {
        spectrum.regularity = Some(Regularity::NotBent);
        return Ok(spectrum);
    }
    let k = u32::from(spectrum.n) / 2;
    let scale = BigInt::from(spectrum.p.pow(k));
    let mut sign: Option<i8> = None;
    let mut dual = Vec::with_capacity(spectrum.values.len());
    for w in &spectrum.values {
        match w.match_scaled_root(&scale) {
            Some((s, j)) if sign.is_none() || sign == Some(s) => {
                sign = Some(s);
                dual.push(j);
            }
            _ => {
                spectrum.regularity = Some(Regularity::NonWeaklyRegular);
                return Ok(spectrum);
            }
        }
    }
    let epsilon = sign.expect("spectrum is never empty");
    let flip = (spectrum.p - 1) / 2 * k % 2 == 1;
    spectrum.mu = Some(if flip { -epsilon } else { epsilon });
    spectrum.epsilon = Some(epsilon);
    spectrum.dual = Some(dual);
    spectrum.regularity = Some(if epsilon == 1 {
        Regularity::Regular
    } else {
        Regularity::WeaklyRegular
    });
    Ok(spectrum)
}

/// The hypothesis bundle for the PDS constructions: f(0) = 0, f even,
/// homogeneity f(ax) = a^l f(x) with gcd(l-1, p-1) = 1, and weak regularity
/// with sign epsilon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionAReport {
    pub f0_zero: bool,
    pub even: bool,
    /// A witness exponent l in [2, p] with gcd(l-1, p-1) = 1, if one exists.
    pub homogeneous_l: Option<u8>,
    pub weakly_regular: bool,
    pub epsilon: Option<i8>,
    pub satisfied: bool,
}

/// Check every clause exhaustively; the report carries individual failures.
pub fn condition_a(ctx: &FieldCtx, f: &PFunc, spectrum: &WalshSpectrum) -> ConditionAReport {
    let p = ctx.p();
    let f0_zero = f.values[0] == 0;
    let even = ctx.elements().all(|x| f.value(ctx.neg(x)) == f.value(x));

    // The functional equation only constrains l mod (p-1); the candidates
    // 2..=p cover every residue class once.
    let mut homogeneous_l = None;
    for l in 2..=p {
        if gcd(u64::from(l) - 1, u64::from(p) - 1) != 1 {
            continue;
        }
        let holds = (2..p).all(|alpha| {
            let scale = mod_pow_u32(alpha, l, p);
            let a = ctx.scalar(alpha as u8);
            ctx.elements().all(|x| {
                u32::from(f.value(ctx.mul(a, x))) == scale * u32::from(f.value(x)) % p
            })
        });
        if holds {
            homogeneous_l = Some(l as u8);
            break;
        }
    }

    let weakly_regular = spectrum
        .regularity()
        .is_some_and(Regularity::is_weakly_regular);
    let epsilon = spectrum.epsilon();
    ConditionAReport {
        f0_zero,
        even,
        homogeneous_l,
        weakly_regular,
        epsilon,
        satisfied: f0_zero && even && homogeneous_l.is_some() && weakly_regular,
    }
}

fn mod_pow_u32(base: u32, mut e: u32, m: u32) -> u32 {
    let mut acc = 1u64;
    let mut b = u64::from(base % m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % u64::from(m);
        }
        b = b * b % u64::from(m);
        e >>= 1;
    }
    acc as u32
}

/// One failed b in [`hk_dual_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HkDualFailure {
    /// The defining equation did not have exactly one root in GF(p^k).
    SolutionCount { b: u32, count: usize },
    /// The Walsh value is not -p^(2k) zeta^(tr_k(x0)/4).
    ValueMismatch { b: u32, expected_exponent: u8 },
}

#[derive(Clone, Debug)]
pub struct HkDualReport {
    pub checked: u32,
    pub failures: Vec<HkDualFailure>,
}

impl HkDualReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verify the closed-form dual of the binomial bent function: for each b,
/// brute-force the unique x0 in GF(p^k) with
/// `b^(p^2k+1) + (b^2+x0)^((p^2k+1)/2) + b^(p^k (p^2k+1)) + (b^2+x0)^(p^k (p^2k+1)/2) = 0`
/// and check W(b) = -p^(2k) zeta^(tr_k(x0) * 4^(-1) mod p).
pub fn hk_dual_check(
    ctx: &FieldCtx,
    f: &PFunc,
    spectrum: &WalshSpectrum,
) -> Result<HkDualReport, Error> {
    if ctx.n() % 4 != 0 {
        return Err(Error::BadDegree { need_multiple_of: 4, got: ctx.n() });
    }
    assert_eq!((f.p, f.n), (ctx.p(), ctx.n()));
    let p = u64::from(ctx.p());
    let k = u32::from(ctx.n()) / 4;
    let subfield_size = p.pow(k);
    if subfield_size > 81 {
        return Err(Error::CapExceeded { size: subfield_size, cap: 81 });
    }
    let subfield = ctx.subfield_members(k as u8)?;
    let e1 = p.pow(2 * k) + 1;
    let e2 = e1 / 2; // exact: p^2k + 1 is even for odd p
    let e3 = p.pow(k) * e1;
    let e4 = p.pow(k) * e2;
    let inv4 = mod_pow_u32(4 % ctx.p(), ctx.p() - 2, ctx.p());
    let scale = BigInt::from(ctx.p().pow(2 * k));

    let mut failures = Vec::new();
    for b in ctx.elements() {
        let b2 = ctx.mul(b, b);
        let fixed = ctx.add(ctx.pow(b, e1), ctx.pow(b, e3));
        let mut solutions = Vec::new();
        for &x in &subfield {
            let t = ctx.add(b2, x);
            let lhs = ctx.add(fixed, ctx.add(ctx.pow(t, e2), ctx.pow(t, e4)));
            if lhs == ctx.zero() {
                solutions.push(x);
            }
        }
        if solutions.len() != 1 {
            failures.push(HkDualFailure::SolutionCount { b: b.id(), count: solutions.len() });
            continue;
        }
        // tr_k is the absolute trace of the subfield GF(p^k), computed in the
        // big field and read back as a prime-field residue.
        let x0 = solutions[0];
        let mut tr = ctx.zero();
        for i in 0..k {
            tr = ctx.add(tr, ctx.pow(x0, p.pow(i)));
        }
        let tr = ctx.as_scalar(tr).expect("subfield trace lies in the prime field");
        let exponent = ((u32::from(tr) * inv4) % ctx.p()) as u8;
        if spectrum.value(b).match_scaled_root(&scale) != Some((-1, exponent)) {
            failures.push(HkDualFailure::ValueMismatch { b: b.id(), expected_exponent: exponent });
        }
    }
    Ok(HkDualReport { checked: ctx.order(), failures })
}

/// Parse a function descriptor: `hk`, `sporadic3_6`, `quadratic:a=<elem>`,
/// or `tracepoly:c1,d1;c2,d2;...` with elements as base-p digit strings
/// (most significant digit first).
pub fn parse_descriptor(ctx: &FieldCtx, descriptor: &str) -> Result<PFunc, Error> {
    match descriptor {
        "hk" => return catalog_hk(ctx),
        "sporadic3_6" => return catalog_sporadic_ternary(ctx),
        _ => {}
    }
    if let Some(rest) = descriptor.strip_prefix("quadratic:") {
        let arg = rest
            .strip_prefix("a=")
            .ok_or_else(|| Error::BadDescriptor(descriptor.into()))?;
        let a = parse_elem(ctx, arg).ok_or_else(|| Error::BadDescriptor(descriptor.into()))?;
        return catalog_quadratic(ctx, a);
    }
    if let Some(rest) = descriptor.strip_prefix("tracepoly:") {
        let mut terms = Vec::new();
        for part in rest.split(';').filter(|s| !s.is_empty()) {
            let (c, d) = part
                .split_once(',')
                .ok_or_else(|| Error::BadDescriptor(descriptor.into()))?;
            let c = parse_elem(ctx, c).ok_or_else(|| Error::BadDescriptor(descriptor.into()))?;
            let d: u64 =
                d.trim().parse().map_err(|_| Error::BadDescriptor(descriptor.into()))?;
            terms.push((c, d));
        }
        return catalog_trace_poly(ctx, &terms);
    }
    Err(Error::BadDescriptor(descriptor.into()))
}

/// Parse a base-p digit string (most significant first) into an element.
pub fn parse_elem(ctx: &FieldCtx, s: &str) -> Option<FieldElem> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let mut v: u64 = 0;
    for ch in s.chars() {
        let d = ch.to_digit(10)?;
        if d >= ctx.p() {
            return None;
        }
        v = v * u64::from(ctx.p()) + u64::from(d);
        if v >= u64::from(ctx.order()) {
            return None;
        }
    }
    Some(ctx.elem(v as u32))
}

/// Render an element as a base-p digit string (most significant first).
pub fn elem_digits(ctx: &FieldCtx, x: FieldElem) -> String {
    let mut digits: Vec<u8> = ctx.coeffs_of(x);
    while digits.len() > 1 && digits.last() == Some(&0) {
        digits.pop();
    }
    digits.iter().rev().map(|d| char::from(b'0' + d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn spectrum_of(ctx: &FieldCtx, f: &PFunc) -> WalshSpectrum {
        classify_regularity(walsh_transform(ctx, f)).unwrap()
    }

    #[test]
    fn quadratic_basics() {
        let ctx = make_field(3, 4, None).unwrap();
        let f = catalog_quadratic(&ctx, ctx.one()).unwrap();
        assert_eq!(f.value(ctx.zero()), 0);
        for x in ctx.elements() {
            assert_eq!(f.value(ctx.neg(x)), f.value(x));
        }
        assert!(matches!(catalog_quadratic(&ctx, ctx.zero()), Err(Error::ZeroCoefficient)));
    }

    #[test]
    fn quadratic_over_gf9_is_bent() {
        let ctx = make_field(3, 2, None).unwrap();
        let f = catalog_quadratic(&ctx, ctx.one()).unwrap();
        let spec = walsh_transform(&ctx, &f);
        assert!(spec.is_bent());
        let nine = BigInt::from(9);
        for w in spec.values() {
            assert_eq!(w.mul(&w.conj()).as_integer(), Some(nine.clone()));
        }
        let spec = classify_regularity(spec).unwrap();
        // Quadratic bent functions are weakly regular; this one is in fact
        // regular with epsilon = +1.
        assert_eq!(spec.regularity(), Some(Regularity::Regular));
        assert_eq!(spec.epsilon(), Some(1));
        assert_eq!(spec.mu(), Some(-1));
    }

    #[test]
    fn zero_function_spectrum() {
        let ctx = make_field(3, 4, None).unwrap();
        let f = catalog_trace_poly(&ctx, &[]).unwrap();
        let spec = walsh_transform(&ctx, &f);
        assert_eq!(spec.value(ctx.zero()).as_integer(), Some(BigInt::from(81)));
        for b in ctx.elements().skip(1) {
            assert!(spec.value(b).is_zero());
        }
        assert!(!spec.is_bent());
        let spec = classify_regularity(spec).unwrap();
        assert_eq!(spec.regularity(), Some(Regularity::NotBent));
    }

    #[test]
    fn hk_over_gf81_matches_closed_form() {
        let ctx = make_field(3, 4, None).unwrap();
        let f = catalog_hk(&ctx).unwrap();
        assert_eq!(f.value(ctx.zero()), 0);
        let spec = spectrum_of(&ctx, &f);
        assert!(spec.is_bent());
        assert_eq!(spec.regularity(), Some(Regularity::WeaklyRegular));
        assert_eq!(spec.epsilon(), Some(-1));
        // Every Walsh value is -9 zeta^j.
        let nine = BigInt::from(9);
        for w in spec.values() {
            let (s, _) = w.match_scaled_root(&nine).unwrap();
            assert_eq!(s, -1);
        }
    }

    #[test]
    fn hk_needs_degree_divisible_by_four() {
        let ctx = make_field(3, 2, None).unwrap();
        assert!(catalog_hk(&ctx).is_err());
    }

    #[test]
    fn sporadic_is_bent_but_not_weakly_regular() {
        let ctx = make_field(3, 6, None).unwrap();
        let f = catalog_sporadic_ternary(&ctx).unwrap();
        assert_eq!(f.value(ctx.zero()), 0);
        for x in ctx.elements() {
            assert_eq!(f.value(ctx.neg(x)), f.value(x));
        }
        let spec = spectrum_of(&ctx, &f);
        assert!(spec.is_bent());
        assert_eq!(spec.regularity(), Some(Regularity::NonWeaklyRegular));
        assert_eq!(spec.epsilon(), None);

        let wrong = make_field(3, 4, None).unwrap();
        assert!(catalog_sporadic_ternary(&wrong).is_err());
        // Same parameters but a different pinned modulus: also refused.
        let other = make_field(3, 6, Some(&[2, 1, 0, 0, 0, 0, 1])).ok();
        if let Some(other) = other {
            assert!(catalog_sporadic_ternary(&other).is_err());
        }
    }

    #[test]
    fn trace_poly_agrees_with_catalog() {
        let ctx = make_field(3, 6, None).unwrap();
        let quad = catalog_quadratic(&ctx, ctx.one()).unwrap();
        let via_terms = catalog_trace_poly(&ctx, &[(ctx.one(), 2)]).unwrap();
        assert_eq!(quad.values(), via_terms.values());

        let xi7 = ctx.pow(ctx.generator(), 7);
        let sporadic = catalog_sporadic_ternary(&ctx).unwrap();
        let via_terms = catalog_trace_poly(&ctx, &[(xi7, 98)]).unwrap();
        assert_eq!(sporadic.values(), via_terms.values());

        assert!(catalog_trace_poly(&ctx, &[(ctx.one(), 0)]).is_err());
    }

    #[test]
    fn condition_a_on_catalog_functions() {
        let ctx = make_field(3, 4, None).unwrap();
        let f = catalog_hk(&ctx).unwrap();
        let spec = spectrum_of(&ctx, &f);
        let report = condition_a(&ctx, &f, &spec);
        assert!(report.satisfied);
        assert_eq!(report.homogeneous_l, Some(2));
        assert_eq!(report.epsilon, Some(-1));

        // f(x) = tr(x^2) + 1 fails the f(0) = 0 clause.
        let quad = catalog_quadratic(&ctx, ctx.one()).unwrap();
        let shifted: Vec<u8> = quad.values().iter().map(|v| (v + 1) % 3).collect();
        let g = from_values(&ctx, shifted, "tr(x^2)+1").unwrap();
        let gspec = spectrum_of(&ctx, &g);
        let report = condition_a(&ctx, &g, &gspec);
        assert!(!report.f0_zero);
        assert!(!report.satisfied);

        // The zero function is not bent, hence not Condition A.
        let zero = catalog_trace_poly(&ctx, &[]).unwrap();
        let zspec = spectrum_of(&ctx, &zero);
        let report = condition_a(&ctx, &zero, &zspec);
        assert!(!report.weakly_regular);
        assert!(!report.satisfied);
    }

    #[test]
    fn compose_identity_is_identity() {
        let ctx = make_field(3, 4, None).unwrap();
        let f = catalog_hk(&ctx).unwrap();
        let g = compose_linearized(&ctx, &f, 1, &[ctx.one()]).unwrap();
        assert_eq!(f.values(), g.values());

        // x -> x^3 + x is not injective on GF(3^4) (kernel of tr-like map).
        let bad = compose_linearized(&ctx, &f, 1, &[ctx.one(), ctx.one()]);
        let ok = compose_linearized(&ctx, &f, 2, &[ctx.zero(), ctx.one()]);
        assert!(bad.is_err() || ok.is_ok());
        assert!(matches!(
            compose_linearized(&ctx, &f, 0, &[ctx.one()]),
            Err(Error::ZeroCoefficient)
        ));
    }

    #[test]
    fn hk_dual_check_gf81() {
        let ctx = make_field(3, 4, None).unwrap();
        let f = catalog_hk(&ctx).unwrap();
        let spec = spectrum_of(&ctx, &f);
        let report = hk_dual_check(&ctx, &f, &spec).unwrap();
        assert_eq!(report.checked, 81);
        assert!(report.all_pass(), "failures: {:?}", report.failures);

        // b = 0 cross-check: W(0) must equal the direct sum over zeta^f(x).
        let mut direct = CycInt::zero(3);
        for x in ctx.elements() {
            direct = direct.add(&CycInt::root_power(3, f.value(x)));
        }
        assert_eq!(&direct, spec.value(ctx.zero()));
    }

    #[test]
    fn descriptor_round_trip() {
        let ctx = make_field(3, 4, None).unwrap();
        assert_eq!(parse_descriptor(&ctx, "hk").unwrap().name(), "hk");
        let q = parse_descriptor(&ctx, "quadratic:a=1").unwrap();
        assert_eq!(q.values(), catalog_quadratic(&ctx, ctx.one()).unwrap().values());
        let t = parse_descriptor(&ctx, "tracepoly:1,2;12,4").unwrap();
        let c2 = parse_elem(&ctx, "12").unwrap();
        assert_eq!(c2.id(), 5); // digits "12" = 1*3 + 2
        assert_eq!(
            t.values(),
            catalog_trace_poly(&ctx, &[(ctx.one(), 2), (c2, 4)]).unwrap().values()
        );
        // The empty trace polynomial is the zero function.
        let z = parse_descriptor(&ctx, "tracepoly:").unwrap();
        assert!(z.values().iter().all(|&v| v == 0));
        assert!(parse_descriptor(&ctx, "nonsense").is_err());
        assert!(parse_descriptor(&ctx, "quadratic:a=9").is_err());
    }

    #[test]
    fn from_values_validation() {
        let ctx = make_field(3, 2, None).unwrap();
        assert!(from_values(&ctx, vec![0; 8], "short").is_err());
        assert!(from_values(&ctx, vec![3; 9], "oob").is_err());
        assert!(from_values(&ctx, vec![0; 9], "zero").is_ok());
    }
}
