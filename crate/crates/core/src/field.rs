//! Exact arithmetic in GF(p) and GF(p^n) for odd primes p.
//!
//! An element with polynomial-basis coefficients `(c_0, ..., c_{n-1})` is
//! packed into the integer id `sum c_i * p^i`. Ids double as vertex labels,
//! table indices and export labels downstream, so results are reproducible
//! bit for bit as long as the modulus is pinned. Default moduli are Conway
//! polynomials from a checked-in constants file; both irreducibility and
//! generator primitivity are re-verified at construction time.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// Discrete-log tables are only built up to this order.
pub const LOG_TABLE_CAP: u64 = 1 << 22;

/// Contents of the checked-in constants file.
pub const BUILTIN_CONSTANTS: &str = include_str!("field_constants.txt");

/// An element of GF(p^n), stored as its packed base-p id.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldElem(u32);

impl FieldElem {
    /// Packed id: `sum c_i * p^i` over the polynomial-basis coefficients.
    pub fn id(self) -> u32 {
        self.0
    }
}

/// One `(p, n, modulus, generator)` record from a constants file.
#[derive(Clone, Debug)]
pub struct FieldConstants {
    entries: Vec<(u64, u8, Vec<u8>, Vec<u8>)>,
}

impl FieldConstants {
    /// Parse the line-oriented constants format. Lines are
    /// `p n modulus generator` with comma-separated coefficient lists,
    /// lowest degree first; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: &str| Error::ConstantsParse {
                line: idx + 1,
                reason: reason.to_string(),
            };
            let mut parts = line.split_whitespace();
            let p: u64 = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| err("missing p"))?;
            let n: u8 = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| err("missing n"))?;
            let coeffs = |field: Option<&str>, len: usize, what: &str| -> Result<Vec<u8>, Error> {
                let s = field.ok_or_else(|| err(what))?;
                let v: Option<Vec<u8>> = s.split(',').map(|t| t.trim().parse().ok()).collect();
                let v = v.ok_or_else(|| err(what))?;
                if v.len() != len || v.iter().any(|&c| u64::from(c) >= p) {
                    return Err(err(what));
                }
                Ok(v)
            };
            let modulus = coeffs(parts.next(), n as usize + 1, "bad modulus list")?;
            let generator = coeffs(parts.next(), n as usize, "bad generator list")?;
            entries.push((p, n, modulus, generator));
        }
        Ok(FieldConstants { entries })
    }

    /// The constants compiled into the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_CONSTANTS).expect("builtin constants file is well-formed")
    }

    fn lookup(&self, p: u64, n: u8) -> Option<(&[u8], &[u8])> {
        self.entries
            .iter()
            .find(|e| e.0 == p && e.1 == n)
            .map(|e| (e.2.as_slice(), e.3.as_slice()))
    }

    /// The pinned modulus for `(p, n)`, if any.
    pub fn lookup_modulus(&self, p: u64, n: u8) -> Option<&[u8]> {
        self.lookup(p, n).map(|(m, _)| m)
    }

    /// Supported `(p, n)` pairs, in file order.
    pub fn supported(&self) -> impl Iterator<Item = (u64, u8)> + '_ {
        self.entries.iter().map(|e| (e.0, e.1))
    }
}

/// Arithmetic context for GF(p^n): pinned modulus, a verified primitive
/// element, and lookup tables (log/antilog, trace, negation) when the order
/// is small enough.
///
/// Immutable after construction; all operations are pure.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    n: u8,
    order: u32,
    modulus: Vec<u8>,
    generator: FieldElem,
    // Lookup tables, empty above LOG_TABLE_CAP; operations fall back to
    // polynomial arithmetic then.
    tabled: bool,
    log: Vec<u32>,
    antilog: Vec<u32>,
    trace: Vec<u8>,
    neg: Vec<u32>,
}

/// Build GF(p^n). With `modulus = None` the pinned constants are used
/// (derived on the fly for n = 1); an explicit modulus is validated and a
/// primitive element is searched for.
pub fn make_field(p: u64, n: u8, modulus: Option<&[u8]>) -> Result<FieldCtx, Error> {
    make_field_from(p, n, modulus, &FieldConstants::builtin())
}

/// Same as [`make_field`] but with a caller-supplied constants table.
pub fn make_field_from(
    p: u64,
    n: u8,
    modulus: Option<&[u8]>,
    constants: &FieldConstants,
) -> Result<FieldCtx, Error> {
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(Error::BadCharacteristic(p));
    }
    if n == 0 {
        return Err(Error::BadModulus("degree must be at least 1".into()));
    }
    p.checked_pow(n as u32)
        .filter(|&q| q <= u64::from(u32::MAX / 2))
        .ok_or(Error::CapExceeded { size: u64::MAX, cap: u64::from(u32::MAX / 2) })?;

    match modulus {
        Some(m) => {
            let m = validate_modulus(p, n, m)?;
            let generator = search_generator(p, n, &m)?;
            FieldCtx::build(p, n, m, generator)
        }
        None => {
            if let Some((m, g)) = constants.lookup(p, n) {
                let m = validate_modulus(p, n, m)?;
                let gen_id = pack(p, g);
                if !is_primitive(p, n, &m, gen_id) {
                    return Err(Error::BadGenerator);
                }
                return FieldCtx::build(p, n, m, gen_id);
            }
            if n == 1 {
                // Prime field: modulus x - r for the smallest primitive root r.
                let r = smallest_primitive_root(p);
                let m = vec![((p - r) % p) as u8, 1];
                return FieldCtx::build(p, 1, m, r as u32);
            }
            Err(Error::UnknownField { p, n })
        }
    }
}

fn validate_modulus(p: u64, n: u8, m: &[u8]) -> Result<Vec<u8>, Error> {
    if m.len() != n as usize + 1 {
        return Err(Error::BadModulus(format!(
            "expected {} coefficients, got {}",
            n as usize + 1,
            m.len()
        )));
    }
    if m[n as usize] != 1 {
        return Err(Error::BadModulus("must be monic".into()));
    }
    if m.iter().any(|&c| u64::from(c) >= p) {
        return Err(Error::BadModulus("coefficient out of range".into()));
    }
    if n > 1 && !poly_is_irreducible(p, m) {
        return Err(Error::ReducibleModulus);
    }
    Ok(m.to_vec())
}

impl FieldCtx {
    fn build(p: u64, n: u8, modulus: Vec<u8>, generator_id: u32) -> Result<FieldCtx, Error> {
        let order = p.pow(n as u32) as u32;
        let pu = p as u32;
        let tabled = u64::from(order) <= LOG_TABLE_CAP;

        let mut ctx = FieldCtx {
            p: pu,
            n,
            order,
            modulus,
            generator: FieldElem(generator_id),
            tabled,
            log: Vec::new(),
            antilog: Vec::new(),
            trace: Vec::new(),
            neg: Vec::new(),
        };
        if !tabled {
            return Ok(ctx);
        }

        // antilog[i] = generator^i, log inverse; generator primitivity was
        // checked by the caller, the full-cycle assertion below re-checks it.
        let mut antilog = vec![0u32; (order - 1) as usize];
        let mut log = vec![u32::MAX; order as usize];
        let mut cur = 1u32;
        for (i, slot) in antilog.iter_mut().enumerate() {
            *slot = cur;
            assert!(
                log[cur as usize] == u32::MAX,
                "generator cycle shorter than order - 1"
            );
            log[cur as usize] = i as u32;
            cur = poly_mul_ids(pu, n, &ctx.modulus, cur, generator_id);
        }
        assert_eq!(cur, 1, "generator does not close its cycle");
        ctx.log = log;
        ctx.antilog = antilog;

        let mut neg = Vec::with_capacity(order as usize);
        for x in 0..order {
            neg.push(ctx.neg_by_digits(x));
        }
        ctx.neg = neg;

        let mut trace = Vec::with_capacity(order as usize);
        for x in 0..order {
            trace.push(ctx.trace_by_powers(FieldElem(x)));
        }
        ctx.trace = trace;

        Ok(ctx)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// p^n.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// The pinned primitive element.
    pub fn generator(&self) -> FieldElem {
        self.generator
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    /// Element with the given packed id.
    pub fn elem(&self, id: u32) -> FieldElem {
        assert!(id < self.order, "id {id} out of range for this field");
        FieldElem(id)
    }

    /// All field elements in id order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order).map(FieldElem)
    }

    /// Polynomial-basis coefficients, lowest degree first.
    pub fn coeffs_of(&self, x: FieldElem) -> Vec<u8> {
        let mut v = x.0;
        let mut out = Vec::with_capacity(self.n as usize);
        for _ in 0..self.n {
            out.push((v % self.p) as u8);
            v /= self.p;
        }
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u8]) -> Result<FieldElem, Error> {
        if coeffs.len() > self.n as usize {
            return Err(Error::BadModulus("too many coefficients".into()));
        }
        if coeffs.iter().any(|&c| u32::from(c) >= self.p) {
            return Err(Error::BadModulus("coefficient out of range".into()));
        }
        Ok(FieldElem(pack(u64::from(self.p), coeffs)))
    }

    /// The constant `c` as a field element.
    pub fn scalar(&self, c: u8) -> FieldElem {
        FieldElem(u32::from(c) % self.p)
    }

    /// `Some(c)` iff `x` lies in the prime subfield.
    pub fn as_scalar(&self, x: FieldElem) -> Option<u8> {
        (x.0 < self.p).then_some(x.0 as u8)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.n {
            let mut s = x % self.p + y % self.p;
            if s >= self.p {
                s -= self.p;
            }
            out += s * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElem(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.tabled {
            FieldElem(self.neg[a.0 as usize])
        } else {
            FieldElem(self.neg_by_digits(a.0))
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    fn neg_by_digits(&self, id: u32) -> u32 {
        let mut v = id;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.n {
            let d = v % self.p;
            out += if d == 0 { 0 } else { self.p - d } * place;
            v /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        if self.tabled {
            let e = self.log[a.0 as usize] + self.log[b.0 as usize];
            let m = self.order - 1;
            FieldElem(self.antilog[(if e >= m { e - m } else { e }) as usize])
        } else {
            FieldElem(poly_mul_ids(self.p, self.n, &self.modulus, a.0, b.0))
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.0 == 0 {
            return None;
        }
        if self.tabled {
            let l = self.log[a.0 as usize];
            let m = self.order - 1;
            Some(FieldElem(self.antilog[((m - l) % m) as usize]))
        } else {
            Some(self.pow(a, u64::from(self.order) - 2))
        }
    }

    /// `a^e` with the exponent reduced mod p^n - 1 for nonzero `a`;
    /// `0^0 = 1`, `0^e = 0` otherwise.
    #[inline]
    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if a.0 == 0 {
            return if e == 0 { FieldElem(1) } else { FieldElem(0) };
        }
        let m = u64::from(self.order - 1);
        if self.tabled {
            let l = u64::from(self.log[a.0 as usize]);
            FieldElem(self.antilog[((l * (e % m)) % m) as usize])
        } else {
            FieldElem(poly_pow_id(self.p, self.n, &self.modulus, a.0, e % m))
        }
    }

    /// Frobenius x -> x^p.
    pub fn frobenius(&self, a: FieldElem) -> FieldElem {
        self.pow(a, u64::from(self.p))
    }

    /// Absolute trace onto GF(p), as a residue.
    #[inline]
    pub fn abs_trace(&self, x: FieldElem) -> u8 {
        if self.tabled {
            self.trace[x.0 as usize]
        } else {
            self.trace_by_powers(x)
        }
    }

    fn trace_by_powers(&self, x: FieldElem) -> u8 {
        let mut acc = FieldElem(0);
        let mut power = x;
        for _ in 0..self.n {
            acc = self.add(acc, power);
            power = self.pow(power, u64::from(self.p));
        }
        debug_assert!(acc.0 < self.p, "absolute trace landed outside GF(p)");
        acc.0 as u8
    }

    /// Relative trace onto the subfield GF(p^m); requires `m | n`.
    pub fn rel_trace(&self, x: FieldElem, m: u8) -> Result<FieldElem, Error> {
        if m == 0 || self.n % m != 0 {
            return Err(Error::NotASubfieldDegree { m, n: self.n });
        }
        let step = u64::from(self.p).pow(u32::from(m));
        let mut acc = FieldElem(0);
        let mut power = x;
        for _ in 0..self.n / m {
            acc = self.add(acc, power);
            power = self.pow(power, step);
        }
        debug_assert_eq!(self.pow(acc, step), acc, "relative trace left the subfield");
        Ok(acc)
    }

    /// Elements of the subfield GF(p^m) inside this field; requires `m | n`.
    pub fn subfield_members(&self, m: u8) -> Result<Vec<FieldElem>, Error> {
        if m == 0 || self.n % m != 0 {
            return Err(Error::NotASubfieldDegree { m, n: self.n });
        }
        let step = u64::from(self.p).pow(u32::from(m));
        Ok(self.elements().filter(|&y| self.pow(y, step) == y).collect())
    }
}

/// The nonzero squares S and non-squares T of GF(p), sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadClasses {
    p: u32,
    squares: Vec<u8>,
    nonsquares: Vec<u8>,
    is_square: Vec<bool>,
}

impl QuadClasses {
    pub fn squares(&self) -> &[u8] {
        &self.squares
    }

    pub fn nonsquares(&self) -> &[u8] {
        &self.nonsquares
    }

    /// True iff `r` is a nonzero square mod p.
    #[inline]
    pub fn is_square(&self, r: u8) -> bool {
        self.is_square[r as usize]
    }
}

/// Split GF(p)* into squares and non-squares, cross-checked against the
/// Euler criterion.
pub fn quad_classes(p: u64) -> Result<QuadClasses, Error> {
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(Error::BadCharacteristic(p));
    }
    let mut is_square = vec![false; p as usize];
    for a in 1..p {
        is_square[((a * a) % p) as usize] = true;
    }
    let mut squares = Vec::new();
    let mut nonsquares = Vec::new();
    for r in 1..p {
        let euler = mod_pow(r, (p - 1) / 2, p) == 1;
        assert_eq!(euler, is_square[r as usize], "Euler criterion cross-check");
        if is_square[r as usize] {
            squares.push(r as u8);
        } else {
            nonsquares.push(r as u8);
        }
    }
    Ok(QuadClasses { p: p as u32, squares, nonsquares, is_square })
}

/// Legendre symbol of `a` mod p via the Euler criterion: 0, 1 or -1.
pub fn legendre(a: u64, p: u64) -> i8 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if mod_pow(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

// --- integer helpers ---------------------------------------------------

pub(crate) fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x % 2 == 0 {
        return x == 2;
    }
    let mut d = 3;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= x {
        if x % d == 0 {
            out.push(d);
            while x % d == 0 {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn mod_pow(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

fn smallest_primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&r| factors.iter().all(|&q| mod_pow(r, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

fn pack(p: u64, coeffs: &[u8]) -> u32 {
    let mut v = 0u64;
    for &c in coeffs.iter().rev() {
        v = v * p + u64::from(c);
    }
    v as u32
}

// --- polynomial arithmetic over GF(p), used for construction only -------

/// Multiply two packed ids as polynomials mod the modulus.
fn poly_mul_ids(p: u32, n: u8, modulus: &[u8], a: u32, b: u32) -> u32 {
    let n = n as usize;
    let unpack = |mut v: u32| {
        let mut c = [0u32; 16];
        for slot in c.iter_mut().take(n) {
            *slot = v % p;
            v /= p;
        }
        c
    };
    let ca = unpack(a);
    let cb = unpack(b);
    let mut prod = [0u32; 31];
    for i in 0..n {
        if ca[i] == 0 {
            continue;
        }
        for j in 0..n {
            prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        }
    }
    for i in (n..2 * n - 1).rev() {
        let c = prod[i];
        if c != 0 {
            prod[i] = 0;
            for j in 0..n {
                let sub = c * u32::from(modulus[j]) % p;
                prod[i - n + j] = (prod[i - n + j] + p - sub) % p;
            }
        }
    }
    let mut out = 0u32;
    for i in (0..n).rev() {
        out = out * p + prod[i];
    }
    out
}

fn poly_pow_id(p: u32, n: u8, modulus: &[u8], base: u32, mut e: u64) -> u32 {
    let mut acc = 1u32;
    let mut b = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_ids(p, n, modulus, acc, b);
        }
        b = poly_mul_ids(p, n, modulus, b, b);
        e >>= 1;
    }
    acc
}

/// Irreducibility over GF(p): x^(p^n) = x mod f, and x^(p^(n/q)) != x for
/// every prime q | n.
fn poly_is_irreducible(p: u64, modulus: &[u8]) -> bool {
    let n = modulus.len() - 1;
    let pu = p as u32;
    let x = pu; // the element "x" has id p
    let q = p.pow(n as u32);
    if poly_pow_id(pu, n as u8, modulus, x, q) != x {
        return false;
    }
    for f in prime_factors(n as u64) {
        let m = p.pow((n as u64 / f) as u32);
        if poly_pow_id(pu, n as u8, modulus, x, m) == x {
            return false;
        }
    }
    true
}

fn is_primitive(p: u64, n: u8, modulus: &[u8], id: u32) -> bool {
    if id < 2 {
        return false;
    }
    let order = p.pow(n as u32) - 1;
    let pu = p as u32;
    prime_factors(order)
        .iter()
        .all(|&q| poly_pow_id(pu, n, modulus, id, order / q) != 1)
}

fn search_generator(p: u64, n: u8, modulus: &[u8]) -> Result<u32, Error> {
    let order = p.pow(n as u32);
    (2..order as u32)
        .find(|&id| is_primitive(p, n, modulus, id))
        .ok_or(Error::BadGenerator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prime_field_trace_is_identity() {
        let f = make_field(3, 1, None).unwrap();
        assert_eq!(f.order(), 3);
        for x in f.elements() {
            assert_eq!(u32::from(f.abs_trace(x)), x.id());
        }
    }

    #[test]
    fn generator_order_by_repeated_multiplication() {
        // Independent oracle: multiply out the generator's full cycle.
        let f = make_field(3, 4, None).unwrap();
        let g = f.generator();
        let mut y = g;
        let mut ord = 1u32;
        while y != f.one() {
            y = f.mul(y, g);
            ord += 1;
        }
        assert_eq!(ord, 80);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^4 factors as x * x * x * x.
        assert!(matches!(
            make_field(3, 4, Some(&[0, 0, 0, 0, 1])),
            Err(Error::ReducibleModulus)
        ));
    }

    #[test]
    fn bad_characteristic_rejected() {
        assert!(matches!(make_field(2, 4, None), Err(Error::BadCharacteristic(2))));
        assert!(matches!(make_field(9, 2, None), Err(Error::BadCharacteristic(9))));
        assert!(matches!(make_field(1, 1, None), Err(Error::BadCharacteristic(1))));
    }

    #[test]
    fn custom_irreducible_modulus_works() {
        // x^2 + 1 is irreducible over GF(3).
        let f = make_field(3, 2, Some(&[1, 0, 1])).unwrap();
        assert_eq!(f.order(), 9);
        let x = f.elem(3); // the class of x
        assert_eq!(f.mul(x, x), f.neg(f.one()));
    }

    #[test]
    fn all_builtin_constants_validate() {
        for (p, n) in FieldConstants::builtin().supported() {
            let f = make_field(p, n, None).unwrap();
            assert_eq!(u64::from(f.order()), p.pow(u32::from(n)));
        }
    }

    #[test]
    fn field_axioms_on_random_elements() {
        let f = make_field(3, 4, None).unwrap();
        assert_eq!(f.inv(f.one()), Some(f.one()));
        assert_eq!(f.inv(f.zero()), None);
        assert_eq!(f.pow(f.generator(), 80), f.one());

        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let a = f.elem(rng.gen_range(1..f.order()));
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        for _ in 0..10_000 {
            let a = f.elem(rng.gen_range(0..f.order()));
            let b = f.elem(rng.gen_range(0..f.order()));
            let c = f.elem(rng.gen_range(0..f.order()));
            assert_eq!(f.mul(a, b), f.mul(b, a));
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
    }

    #[test]
    fn trace_basics() {
        let f = make_field(3, 4, None).unwrap();
        assert_eq!(f.abs_trace(f.zero()), 0);
        assert_eq!(u32::from(f.abs_trace(f.one())), 4 % 3);
        for x in f.elements() {
            // Frobenius invariance and additivity, exhaustively.
            assert_eq!(f.abs_trace(f.frobenius(x)), f.abs_trace(x));
            for y in f.elements() {
                let lhs = f.abs_trace(f.add(x, y));
                let rhs = (f.abs_trace(x) + f.abs_trace(y)) % 3;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn trace_additivity_sampled_large_field() {
        let f = make_field(3, 8, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let x = f.elem(rng.gen_range(0..f.order()));
            let y = f.elem(rng.gen_range(0..f.order()));
            assert_eq!(
                f.abs_trace(f.add(x, y)),
                (f.abs_trace(x) + f.abs_trace(y)) % 3
            );
        }
    }

    #[test]
    fn frobenius_permutes_and_fixes_prime_field() {
        for (p, n) in [(3u64, 4u8), (5, 2)] {
            let f = make_field(p, n, None).unwrap();
            let mut seen = vec![false; f.order() as usize];
            let mut fixed = 0u64;
            for x in f.elements() {
                let y = f.frobenius(x);
                assert!(!seen[y.id() as usize]);
                seen[y.id() as usize] = true;
                if y == x {
                    fixed += 1;
                }
            }
            assert_eq!(fixed, p);
        }
    }

    #[test]
    fn relative_trace_tower() {
        let f = make_field(3, 4, None).unwrap();
        assert!(f.rel_trace(f.one(), 3).is_err());
        for x in f.elements() {
            assert_eq!(f.rel_trace(x, 4).unwrap(), x);
        }
        assert_eq!(f.rel_trace(f.zero(), 2).unwrap(), f.zero());

        // Transitivity: tr_{3^4/3}(x) = tr_{3^2/3}(rel_trace(x, 2)). The
        // absolute trace of the subfield GF(9), computed inside the big
        // field, is y + y^3.
        for x in f.elements() {
            let y = f.rel_trace(x, 2).unwrap();
            let sub_trace = f.add(y, f.pow(y, 3));
            assert_eq!(f.as_scalar(sub_trace).unwrap(), f.abs_trace(x));
        }
    }

    #[test]
    fn subfield_enumeration() {
        let f = make_field(3, 4, None).unwrap();
        let sub = f.subfield_members(2).unwrap();
        assert_eq!(sub.len(), 9);
        for &y in &sub {
            assert_eq!(f.pow(y, 9), y);
        }
    }

    #[test]
    fn quad_classes_small_primes() {
        // Brute-force squares oracle.
        for p in [3u64, 5, 7, 11, 13] {
            let mut squares: Vec<u8> = (1..p).map(|a| ((a * a) % p) as u8).collect();
            squares.sort_unstable();
            squares.dedup();
            let qc = quad_classes(p).unwrap();
            assert_eq!(qc.squares(), squares.as_slice());
            assert_eq!(qc.squares().len(), ((p - 1) / 2) as usize);
            assert_eq!(qc.nonsquares().len(), ((p - 1) / 2) as usize);
        }
        let qc3 = quad_classes(3).unwrap();
        assert_eq!((qc3.squares(), qc3.nonsquares()), ([1].as_slice(), [2].as_slice()));
        let qc5 = quad_classes(5).unwrap();
        assert_eq!((qc5.squares(), qc5.nonsquares()), ([1, 4].as_slice(), [2, 3].as_slice()));
        let qc7 = quad_classes(7).unwrap();
        assert_eq!((qc7.squares(), qc7.nonsquares()), ([1, 2, 4].as_slice(), [3, 5, 6].as_slice()));
    }

    #[test]
    fn minus_one_square_iff_p_mod_4_is_1() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            let qc = quad_classes(p).unwrap();
            assert_eq!(qc.is_square((p - 1) as u8), p % 4 == 1);
        }
    }

    #[test]
    fn contexts_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<FieldCtx>();
        assert_send_sync::<FieldElem>();
        assert_send_sync::<QuadClasses>();
    }

    #[test]
    fn packed_ids_round_trip_coefficients() {
        let f = make_field(5, 4, None).unwrap();
        for x in f.elements().step_by(17) {
            let c = f.coeffs_of(x);
            assert_eq!(f.from_coeffs(&c).unwrap(), x);
        }
        assert_eq!(f.scalar(3).id(), 3);
        assert_eq!(f.as_scalar(f.elem(4)), Some(4));
        assert_eq!(f.as_scalar(f.elem(5)), None);
    }
}
