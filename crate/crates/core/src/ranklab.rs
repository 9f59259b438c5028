//! GF(p) rank of dense matrices by exact row reduction, sized for adjacency
//! matrices with thousands of rows.
//!
//! GF(3) matrices are bitsliced into two planes per row (a bit for "entry is
//! 1", a bit for "entry is 2"), so a row operation is a handful of bitwise
//! ops per 64 entries; that keeps the 6561 x 6561 eliminations in the
//! minutes range. Other primes use byte entries with scalar row updates.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::is_prime;
use crate::pds::Graph;

/// Dense matrix over GF(p), entries in [0, p).
#[derive(Clone, Debug)]
pub struct GFpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    repr: Repr,
}

#[derive(Clone, Debug)]
enum Repr {
    /// Two bit planes per row: (1-plane, 2-plane); 0 is (0, 0).
    Packed3 { lo: Vec<u64>, hi: Vec<u64>, limbs: usize },
    Bytes(Vec<u8>),
}

impl GFpMatrix {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Build from row-major entries (reduced mod p).
    pub fn from_entries(p: u64, rows: usize, cols: usize, data: &[u8]) -> Result<Self, Error> {
        if p < 3 || !is_prime(p) || p % 2 == 0 {
            return Err(Error::BadCharacteristic(p));
        }
        if data.len() != rows * cols {
            return Err(Error::BadValueTable("entry count mismatch".into()));
        }
        let mut m = Self::zeroed(p as u32, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, (u64::from(data[r * cols + c]) % p) as u8);
            }
        }
        Ok(m)
    }

    /// Adjacency matrix of a graph with entries viewed in GF(p).
    pub fn from_graph(graph: &Graph, p: u64) -> Result<Self, Error> {
        if p < 3 || !is_prime(p) || p % 2 == 0 {
            return Err(Error::BadCharacteristic(p));
        }
        let v = graph.vertex_count() as usize;
        let mut m = Self::zeroed(p as u32, v, v);
        match &mut m.repr {
            Repr::Packed3 { lo, limbs, .. } => {
                // A 0/1 matrix lives entirely in the 1-plane, and the graph's
                // row bitsets are already in the right layout.
                for r in 0..v {
                    lo[r * *limbs..(r + 1) * *limbs].copy_from_slice(graph.row(r as u32));
                }
            }
            Repr::Bytes(data) => {
                for (u, w) in graph.edges() {
                    data[u as usize * v + w as usize] = 1;
                    data[w as usize * v + u as usize] = 1;
                }
            }
        }
        Ok(m)
    }

    fn zeroed(p: u32, rows: usize, cols: usize) -> Self {
        let repr = if p == 3 {
            let limbs = cols.div_ceil(64);
            Repr::Packed3 { lo: vec![0; rows * limbs], hi: vec![0; rows * limbs], limbs }
        } else {
            Repr::Bytes(vec![0; rows * cols])
        };
        GFpMatrix { p, rows, cols, repr }
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        match &self.repr {
            Repr::Packed3 { lo, hi, limbs } => {
                let idx = r * limbs + c / 64;
                let bit = c % 64;
                (((lo[idx] >> bit) & 1) + 2 * ((hi[idx] >> bit) & 1)) as u8
            }
            Repr::Bytes(data) => data[r * self.cols + c],
        }
    }

    fn set(&mut self, r: usize, c: usize, value: u8) {
        match &mut self.repr {
            Repr::Packed3 { lo, hi, limbs } => {
                let idx = r * *limbs + c / 64;
                let mask = 1u64 << (c % 64);
                lo[idx] &= !mask;
                hi[idx] &= !mask;
                match value {
                    0 => {}
                    1 => lo[idx] |= mask,
                    2 => hi[idx] |= mask,
                    _ => unreachable!("entry out of range"),
                }
            }
            Repr::Bytes(data) => data[r * self.cols + c] = value,
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeroed(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    out.set(c, r, v);
                }
            }
        }
        out
    }

    /// Number of pivots in the row echelon form: deterministic elimination
    /// with the first nonzero entry of each column as pivot.
    pub fn rank(&self) -> usize {
        match &self.repr {
            Repr::Packed3 { lo, hi, limbs } => {
                rank_packed3(lo.clone(), hi.clone(), self.rows, self.cols, *limbs)
            }
            Repr::Bytes(data) => rank_bytes(data.clone(), self.p, self.rows, self.cols),
        }
    }
}

/// Bitsliced GF(3) sum of two trits (a1,b1) + (a2,b2) per bit position.
#[inline]
fn trit_add(a1: u64, b1: u64, a2: u64, b2: u64) -> (u64, u64) {
    let t = (a1 | b2) ^ (a2 | b1);
    (t ^ (b1 | b2), t ^ (a1 | a2))
}

fn rank_packed3(mut lo: Vec<u64>, mut hi: Vec<u64>, rows: usize, cols: usize, limbs: usize) -> usize {
    let mut piv_lo = vec![0u64; limbs];
    let mut piv_hi = vec![0u64; limbs];
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let limb = col / 64;
        let bit = col % 64;
        let entry = |lo: &[u64], hi: &[u64], r: usize| -> u8 {
            (((lo[r * limbs + limb] >> bit) & 1) + 2 * ((hi[r * limbs + limb] >> bit) & 1)) as u8
        };
        let Some(pivot_row) = (rank..rows).find(|&r| entry(&lo, &hi, r) != 0) else {
            continue;
        };
        if pivot_row != rank {
            for l in 0..limbs {
                lo.swap(rank * limbs + l, pivot_row * limbs + l);
                hi.swap(rank * limbs + l, pivot_row * limbs + l);
            }
        }
        // Normalize the pivot to 1: multiplying by 2 is negation, which
        // swaps the planes. Entries left of `col` are already zero.
        if entry(&lo, &hi, rank) == 2 {
            for l in limb..limbs {
                let idx = rank * limbs + l;
                core::mem::swap(&mut lo[idx], &mut hi[idx]);
            }
        }
        piv_lo[limb..limbs].copy_from_slice(&lo[rank * limbs + limb..(rank + 1) * limbs]);
        piv_hi[limb..limbs].copy_from_slice(&hi[rank * limbs + limb..(rank + 1) * limbs]);

        for r in rank + 1..rows {
            let e = entry(&lo, &hi, r);
            if e == 0 {
                continue;
            }
            // row -= e * pivot: subtract for e = 1, add for e = 2.
            let base = r * limbs;
            if e == 1 {
                for l in limb..limbs {
                    // x - y = x + (-y), negation swaps the pivot planes.
                    let (c1, c2) = trit_add(lo[base + l], hi[base + l], piv_hi[l], piv_lo[l]);
                    lo[base + l] = c1;
                    hi[base + l] = c2;
                }
            } else {
                for l in limb..limbs {
                    let (c1, c2) = trit_add(lo[base + l], hi[base + l], piv_lo[l], piv_hi[l]);
                    lo[base + l] = c1;
                    hi[base + l] = c2;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_bytes(mut data: Vec<u8>, p: u32, rows: usize, cols: usize) -> usize {
    // Row updates compute entry + mult * pivot_entry <= (p-1) + (p-1)^2,
    // small enough for a lookup table instead of a division per byte.
    let mod_table: Vec<u8> = (0..(p - 1) * (p - 1) + p).map(|v| (v % p) as u8).collect();
    let mut pivot = vec![0u8; cols];
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if pivot_row != rank {
            let (a, b) = data.split_at_mut(pivot_row * cols);
            a[rank * cols..rank * cols + cols].swap_with_slice(&mut b[..cols]);
        }
        let inv = mod_inverse(u32::from(data[rank * cols + col]), p);
        if inv != 1 {
            for c in col..cols {
                let idx = rank * cols + c;
                data[idx] = (u32::from(data[idx]) * inv % p) as u8;
            }
        }
        pivot[col..cols].copy_from_slice(&data[rank * cols + col..rank * cols + cols]);

        for r in rank + 1..rows {
            let e = u32::from(data[r * cols + col]);
            if e == 0 {
                continue;
            }
            let mult = u16::from((p - e) as u8); // row += (p - e) * pivot
            let base = r * cols;
            for c in col..cols {
                let v = u16::from(data[base + c]) + mult * u16::from(pivot[c]);
                data[base + c] = mod_table[v as usize];
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2) mod p.
    let mut acc = 1u64;
    let mut b = u64::from(a % p);
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % u64::from(p);
        }
        b = b * b % u64::from(p);
        e >>= 1;
    }
    acc as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent oracle: naive elimination on i64 entries.
    fn rank_oracle(p: i64, rows: usize, cols: usize, data: &[u8]) -> usize {
        let mut m: Vec<Vec<i64>> = (0..rows)
            .map(|r| (0..cols).map(|c| i64::from(data[r * cols + c]) % p).collect())
            .collect();
        let mut rank = 0;
        for col in 0..cols {
            let Some(piv) = (rank..rows).find(|&r| m[r][col] % p != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = (0..p).find(|&x| (x * m[rank][col]) % p == 1).unwrap();
            for c in 0..cols {
                m[rank][c] = m[rank][c] * inv % p;
            }
            for r in 0..rows {
                if r != rank && m[r][col] != 0 {
                    let f = m[r][col];
                    for c in 0..cols {
                        m[r][c] = ((m[r][c] - f * m[rank][c]) % p + p * p) % p;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    #[test]
    fn identity_has_full_rank() {
        for p in [3u64, 5, 7] {
            let n = 100;
            let mut data = vec![0u8; n * n];
            for i in 0..n {
                data[i * n + i] = 1;
            }
            let m = GFpMatrix::from_entries(p, n, n, &data).unwrap();
            assert_eq!(m.rank(), 100);
        }
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let m = GFpMatrix::from_entries(3, 10, 10, &[0u8; 100]).unwrap();
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn complete_graph_k4_over_gf3() {
        // J - I on 4 vertices; hand elimination gives rank 3 over GF(3).
        let mut data = vec![1u8; 16];
        for i in 0..4 {
            data[i * 4 + i] = 0;
        }
        let m = GFpMatrix::from_entries(3, 4, 4, &data).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(rank_oracle(3, 4, 4, &data), 3);
    }

    #[test]
    fn packed_and_bytes_match_oracle_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for p in [3u64, 5, 7] {
            for _ in 0..8 {
                let rows = rng.gen_range(1..60);
                let cols = rng.gen_range(1..60);
                let data: Vec<u8> =
                    (0..rows * cols).map(|_| rng.gen_range(0..p as u8)).collect();
                let m = GFpMatrix::from_entries(p, rows, cols, &data).unwrap();
                assert_eq!(m.rank(), rank_oracle(p as i64, rows, cols, &data), "p={p}");
            }
        }
    }

    #[test]
    fn rank_equals_transpose_rank_and_permutation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for p in [3u64, 5] {
            let n = 200;
            let data: Vec<u8> = (0..n * n).map(|_| rng.gen_range(0..p as u8)).collect();
            let m = GFpMatrix::from_entries(p, n, n, &data).unwrap();
            let base = m.rank();
            assert_eq!(base, m.transpose().rank());

            // Random row and column permutation.
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let mut permuted = vec![0u8; n * n];
            for r in 0..n {
                for c in 0..n {
                    permuted[perm[r] * n + perm[c]] = data[r * n + c];
                }
            }
            let pm = GFpMatrix::from_entries(p, n, n, &permuted).unwrap();
            assert_eq!(pm.rank(), base);
        }
    }

    #[test]
    fn entries_round_trip_both_representations() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for p in [3u64, 5] {
            let (rows, cols) = (9, 70);
            let data: Vec<u8> = (0..rows * cols).map(|_| rng.gen_range(0..p as u8)).collect();
            let m = GFpMatrix::from_entries(p, rows, cols, &data).unwrap();
            for r in 0..rows {
                for c in 0..cols {
                    assert_eq!(m.get(r, c), data[r * cols + c]);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_characteristic() {
        assert!(GFpMatrix::from_entries(4, 2, 2, &[0; 4]).is_err());
        assert!(GFpMatrix::from_entries(2, 2, 2, &[0; 4]).is_err());
    }
}
