//! Exact arithmetic in the ring of cyclotomic integers Z[zeta_p].
//!
//! Elements are kept in the power basis `1, zeta, ..., zeta^(p-2)` with
//! `zeta^(p-1)` rewritten as `-(1 + zeta + ... + zeta^(p-2))`, so equality is
//! plain coefficient equality. Coefficients are arbitrary-precision integers:
//! Walsh sums stay far inside 64 bits at desk scale, but big integers remove
//! the overflow analysis entirely, and no hot loop runs through this module.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of Z[zeta_p] in canonical power-basis form (p - 1 coefficients).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycInt {
    p: u8,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(p: u8) -> Self {
        CycInt { p, coeffs: vec![BigInt::zero(); p as usize - 1] }
    }

    pub fn one(p: u8) -> Self {
        Self::from_int(p, 1)
    }

    pub fn from_int(p: u8, c: i64) -> Self {
        Self::from_bigint(p, BigInt::from(c))
    }

    pub fn from_bigint(p: u8, c: BigInt) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = c;
        z
    }

    /// Canonicalize a redundant length-p coefficient vector for
    /// `sum c_j zeta^j` by rewriting the `zeta^(p-1)` term.
    pub fn from_root_coeffs(p: u8, coeffs: &[BigInt]) -> Self {
        assert_eq!(coeffs.len(), p as usize, "expected one coefficient per p-th root");
        let last = &coeffs[p as usize - 1];
        CycInt {
            p,
            coeffs: coeffs[..p as usize - 1].iter().map(|c| c - last).collect(),
        }
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    /// Coefficients in the canonical power basis, length p - 1.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// zeta_p^j, canonicalized.
    pub fn root_power(p: u8, j: u8) -> Self {
        let mut raw = vec![BigInt::zero(); p as usize];
        raw[(j % p) as usize] = BigInt::one();
        Self::from_root_coeffs(p, &raw)
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.p, rhs.p, "mixed cyclotomic orders");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        CycInt {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        CycInt {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CycInt { p: self.p, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        CycInt { p: self.p, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Ring product: convolution mod x^p - 1 followed by canonicalization.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let p = self.p as usize;
        let mut raw = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[(i + j) % p] += a * b;
            }
        }
        Self::from_root_coeffs(self.p, &raw)
    }

    /// Multiply by zeta^j (a coefficient rotation, cheaper than `mul`).
    pub fn mul_root(&self, j: u8) -> Self {
        let p = self.p as usize;
        let j = (j % self.p) as usize;
        let mut raw = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            raw[(i + j) % p] = a.clone();
        }
        Self::from_root_coeffs(self.p, &raw)
    }

    /// Complex conjugation zeta -> zeta^(-1).
    pub fn conj(&self) -> Self {
        let p = self.p as usize;
        let mut raw = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            raw[(p - i) % p] = a.clone();
        }
        Self::from_root_coeffs(self.p, &raw)
    }

    /// `Some(c)` iff this element is the rational integer `c`.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Decompose as `s * c * zeta^j` with `s = +-1`, `0 <= j < p`, if possible.
    /// The 2p candidates are pairwise distinct ring elements for c > 0, so the
    /// decomposition is unique when it exists.
    pub fn match_scaled_root(&self, c: &BigInt) -> Option<(i8, u8)> {
        assert!(c.is_positive(), "scale must be positive");
        for j in 0..self.p {
            for s in [1i8, -1] {
                let scale = if s == 1 { c.clone() } else { -c.clone() };
                let cand = Self::root_power(self.p, j).scalar_mul(&scale);
                if *self == cand {
                    return Some((s, j));
                }
            }
        }
        None
    }
}

impl fmt::Display for CycInt {
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
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        CycInt::add(self, rhs)
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        CycInt::sub(self, rhs)
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        CycInt::mul(self, rhs)
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn root_powers() {
        assert_eq!(CycInt::root_power(5, 0), CycInt::one(5));
        // zeta^2 = -1 - zeta for p = 3.
        let z2 = CycInt::root_power(3, 2);
        assert_eq!(z2.coeffs(), &[BigInt::from(-1), BigInt::from(-1)]);
        // All p-th roots sum to zero.
        for p in [3u8, 5, 7] {
            let mut acc = CycInt::zero(p);
            for j in 0..p {
                acc = acc.add(&CycInt::root_power(p, j));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn ring_identities() {
        let p = 5;
        let z = CycInt::root_power(p, 1);
        let mut zp = CycInt::one(p);
        for _ in 0..p - 1 {
            zp = zp.mul(&z);
        }
        // zeta * zeta^(p-1) = 1
        assert_eq!(z.mul(&zp), CycInt::one(p));
        let w = CycInt::from_int(p, 7).add(&CycInt::root_power(p, 3));
        assert_eq!(w.mul(&CycInt::one(p)), w);
    }

    /// Independent product oracle: plain convolution over a length-p vector
    /// followed by one rewrite of the top coefficient.
    fn mul_oracle(a: &CycInt, b: &CycInt) -> CycInt {
        let p = a.p() as usize;
        let expand = |z: &CycInt| {
            let mut v: Vec<BigInt> = z.coeffs().to_vec();
            v.push(BigInt::zero());
            v
        };
        let (ea, eb) = (expand(a), expand(b));
        let mut raw = vec![BigInt::zero(); 2 * p];
        for i in 0..p {
            for j in 0..p {
                let t = &ea[i] * &eb[j];
                raw[i + j] += t;
            }
        }
        for i in (p..2 * p).rev() {
            let c = raw[i].clone();
            raw[i - p] += c;
            raw[i] = BigInt::zero();
        }
        CycInt::from_root_coeffs(a.p(), &raw[..p])
    }

    #[test]
    fn mul_matches_convolution_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for p in [3u8, 5, 7] {
            for _ in 0..1000 {
                let rand_elem = |rng: &mut ChaCha8Rng| {
                    let coeffs: Vec<BigInt> = (0..p - 1)
                        .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
                        .collect();
                    CycInt { p, coeffs }
                };
                let a = rand_elem(&mut rng);
                let b = rand_elem(&mut rng);
                assert_eq!(a.mul(&b), mul_oracle(&a, &b));
                assert_eq!(a.mul(&b), b.mul(&a));
            }
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(CycInt::one(7).conj(), CycInt::one(7));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let p = 5u8;
            let coeffs: Vec<BigInt> =
                (0..p - 1).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
            let z = CycInt { p, coeffs };
            assert_eq!(z.conj().conj(), z);
            let coeffs: Vec<BigInt> =
                (0..p - 1).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
            let w = CycInt { p, coeffs };
            // conj is a ring homomorphism
            assert_eq!(z.mul(&w).conj(), z.conj().mul(&w.conj()));
        }
    }

    #[test]
    fn as_integer_detects_rationals() {
        assert_eq!(CycInt::from_int(5, 7).as_integer(), Some(BigInt::from(7)));
        assert_eq!(CycInt::root_power(5, 1).as_integer(), None);
        // zeta^(p-1) rewritten is not rational either
        assert_eq!(CycInt::root_power(5, 4).as_integer(), None);
    }

    #[test]
    fn match_scaled_root_cases() {
        let p = 3u8;
        let z = CycInt::root_power(p, 2).scalar_mul(&BigInt::from(-9));
        assert_eq!(z.match_scaled_root(&BigInt::from(9)), Some((-1, 2)));

        // In Z[zeta_3] the two-term 9(1 + zeta) IS -9 zeta^2; canonical
        // equality sees through the rewrite.
        let w = CycInt::from_int(p, 9).add(&CycInt::root_power(p, 1).scalar_mul(&BigInt::from(9)));
        assert_eq!(w.match_scaled_root(&BigInt::from(9)), Some((-1, 2)));
        // Over p = 5 a genuine two-term element matches nothing.
        let w5 =
            CycInt::from_int(5, 9).add(&CycInt::root_power(5, 1).scalar_mul(&BigInt::from(9)));
        assert_eq!(w5.match_scaled_root(&BigInt::from(9)), None);

        // j = p - 1 exercises the rewritten form.
        let v = CycInt::root_power(5, 4).scalar_mul(&BigInt::from(25));
        assert_eq!(v.match_scaled_root(&BigInt::from(25)), Some((1, 4)));
    }

    #[test]
    fn match_implies_square_norm_but_not_conversely() {
        // When a decomposition exists, z * conj(z) = c^2 ...
        let z = CycInt::root_power(7, 3).scalar_mul(&BigInt::from(-49));
        let c = BigInt::from(49);
        assert!(z.match_scaled_root(&c).is_some());
        assert_eq!(z.mul(&z.conj()).as_integer(), Some(&c * &c));

        // ... but a rational square norm does not force the form s*c*zeta^j:
        // 8 + 5*zeta in Z[zeta_3] has norm 49 and matches nothing.
        let w = CycInt::from_int(3, 8).add(&CycInt::root_power(3, 1).scalar_mul(&BigInt::from(5)));
        assert_eq!(w.mul(&w.conj()).as_integer(), Some(BigInt::from(49)));
        assert_eq!(w.match_scaled_root(&BigInt::from(7)), None);
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let p = 7u8;
            let raw: Vec<BigInt> =
                (0..p).map(|_| BigInt::from(rng.gen_range(-20i64..=20))).collect();
            let z = CycInt::from_root_coeffs(p, &raw);
            let mut again = z.coeffs().to_vec();
            again.push(BigInt::zero());
            assert_eq!(CycInt::from_root_coeffs(p, &again), z);
        }
    }
}
