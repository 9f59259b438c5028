//! Difference sets from level sets of a bent function, closed-form parameter
//! prediction, and exhaustive verification: difference counting for the PDS
//! property and common-neighbour counting for strong regularity of the
//! associated Cayley graphs.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bent::PFunc;
use crate::error::Error;
use crate::field::{quad_classes, FieldCtx, FieldElem};

/// Hard cap on |D| for quadratic-cost difference counting.
pub const COUNTING_CAP: usize = 20_000;

/// Partition of the field by function value: `members[i] = {x : f(x) = i}`,
/// each list sorted by id.
#[derive(Clone, Debug)]
pub struct LevelSets {
    p: u32,
    order: u32,
    members: Vec<Vec<FieldElem>>,
}

impl LevelSets {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn members(&self, value: u8) -> &[FieldElem] {
        &self.members[value as usize]
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.members.iter().map(|m| m.len() as u64).collect()
    }
}

pub fn level_sets(ctx: &FieldCtx, f: &PFunc) -> LevelSets {
    assert_eq!((f.p(), f.n()), (ctx.p(), ctx.n()), "function belongs to another field");
    let mut members = vec![Vec::new(); ctx.p() as usize];
    for x in ctx.elements() {
        members[f.value(x) as usize].push(x);
    }
    LevelSets { p: ctx.p(), order: ctx.order(), members }
}

/// Closed-form level-set sizes for a Condition-A function on GF(p^2k):
/// `(|D_0|, |D_i|)` with `|D_0| = p^(2k-1) + eps (p^k - p^(k-1))` and
/// `|D_i| = p^(2k-1) - eps p^(k-1)` for i != 0.
pub fn expected_level_sizes(p: u64, k: u32, epsilon: i8) -> (i64, i64) {
    let e = i64::from(epsilon);
    let pk = p.pow(k) as i64;
    let pk1 = p.pow(k - 1) as i64;
    let p2k1 = p.pow(2 * k - 1) as i64;
    (p2k1 + e * (pk - pk1), p2k1 - e * pk1)
}

/// Do the observed level sizes match [`expected_level_sizes`]?
pub fn level_sizes_match(levels: &LevelSets, k: u32, epsilon: i8) -> bool {
    let (d0, di) = expected_level_sizes(u64::from(levels.p), k, epsilon);
    let sizes = levels.sizes();
    sizes[0] as i64 == d0 && sizes[1..].iter().all(|&s| s as i64 == di)
}

/// Which of the four connection sets to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DsetKind {
    /// Nonzero roots of f.
    D,
    /// Preimages of the nonzero squares.
    DS,
    /// Preimages of all squares (D united with D_S).
    DSPrime,
    /// Preimages of the non-squares.
    DN,
}

impl DsetKind {
    pub const ALL: [DsetKind; 4] = [DsetKind::D, DsetKind::DS, DsetKind::DSPrime, DsetKind::DN];

    pub fn label(self) -> &'static str {
        match self {
            DsetKind::D => "D",
            DsetKind::DS => "D_S",
            DsetKind::DSPrime => "D_S'",
            DsetKind::DN => "D_N",
        }
    }

    pub fn parse(s: &str) -> Option<DsetKind> {
        match s {
            "D" => Some(DsetKind::D),
            "D_S" => Some(DsetKind::DS),
            "D_S'" | "D_Sprime" | "D_SPrime" => Some(DsetKind::DSPrime),
            "D_N" => Some(DsetKind::DN),
            _ => None,
        }
    }
}

impl core::fmt::Display for DsetKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}

/// A connection set: sorted nonzero element list plus provenance.
#[derive(Clone, Debug)]
pub struct DSet {
    pub kind: DsetKind,
    pub members: Vec<FieldElem>,
    pub source: String,
    /// Sign from the classified spectrum, used for parameter prediction;
    /// `None` when the source function is not weakly regular.
    pub epsilon: Option<i8>,
}

impl DSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Select members by function value according to the kind. The zero element
/// is always excluded, whatever f(0) is.
pub fn build_dset(
    levels: &LevelSets,
    kind: DsetKind,
    source: &str,
    epsilon: Option<i8>,
) -> DSet {
    let qc = quad_classes(u64::from(levels.p)).expect("level sets exist only over odd primes");
    let keep = |value: u8| match kind {
        DsetKind::D => value == 0,
        DsetKind::DS => qc.is_square(value),
        DsetKind::DSPrime => value == 0 || qc.is_square(value),
        DsetKind::DN => value != 0 && !qc.is_square(value),
    };
    let mut members = Vec::new();
    for value in 0..levels.p as u8 {
        if keep(value) {
            members.extend(levels.members(value).iter().copied().filter(|x| x.id() != 0));
        }
    }
    members.sort_unstable();
    DSet { kind, members, source: source.to_string(), epsilon }
}

/// Latin / negative Latin square parameter shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatinType {
    Latin,
    NegativeLatin,
    Neither,
}

impl core::fmt::Display for LatinType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            LatinType::Latin => "L.",
            LatinType::NegativeLatin => "n.L.",
            LatinType::Neither => "-",
        })
    }
}

/// A `(v, d, lambda_1, lambda_2)` parameter tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PdsParams {
    pub v: i64,
    pub d: i64,
    pub lambda1: i64,
    pub lambda2: i64,
    pub latin_type: LatinType,
}

impl core::fmt::Display for PdsParams {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.d, self.lambda1, self.lambda2)
    }
}

/// Does `(v,d,l1,l2)` match the shape `(N^2, r(N+e2), -e2 N + r^2 + 3 e2 r,
/// r^2 + e2 r)` for the given shape sign (`e2 = -1` is Latin, `+1` negative
/// Latin)?
pub fn matches_latin_shape(v: i64, d: i64, l1: i64, l2: i64, which: LatinType) -> bool {
    let e2: i64 = match which {
        LatinType::Latin => -1,
        LatinType::NegativeLatin => 1,
        LatinType::Neither => return false,
    };
    let n = isqrt(v);
    if n * n != v {
        return false;
    }
    let denom = n + e2;
    if denom <= 0 || d % denom != 0 {
        return false;
    }
    let r = d / denom;
    l1 == -e2 * n + r * r + 3 * e2 * r && l2 == r * r + e2 * r
}

fn isqrt(v: i64) -> i64 {
    if v < 0 {
        return -1;
    }
    let mut x = v;
    let mut y = (x + 1) / 2;
    while y < x {
        x = y;
        y = (x + v / x) / 2;
    }
    x
}

/// Predicted parameters for each kind, with k = n/2.
///
/// All three constructions share one shape: d = r (p^k - eps),
/// lambda_1 = r^2 - 3 eps r + eps p^k, lambda_2 = r (r - eps), where
/// r = p^(k-1) + eps for D, (p^k - p^(k-1))/2 for D_S and D_N, and
/// (p^k + p^(k-1) + 2 eps)/2 for D_S'. The divisions by two are exact for
/// odd p. A vanishing d marks the degenerate empty set, reported as the
/// trivial (0, 0) PDS.
pub fn predict_params(kind: DsetKind, p: u64, k: u32, epsilon: i8) -> PdsParams {
    assert!(epsilon == 1 || epsilon == -1, "epsilon must be a sign");
    let e = i64::from(epsilon);
    let pk = p.pow(k) as i64;
    let pk1 = p.pow(k - 1) as i64;
    let r = match kind {
        DsetKind::D => pk1 + e,
        DsetKind::DS | DsetKind::DN => {
            debug_assert_eq!((pk - pk1) % 2, 0);
            (pk - pk1) / 2
        }
        DsetKind::DSPrime => {
            debug_assert_eq!((pk + pk1) % 2, 0);
            (pk + pk1 + 2 * e) / 2
        }
    };
    let v = pk * pk;
    let d = r * (pk - e);
    if d == 0 {
        return PdsParams { v, d: 0, lambda1: 0, lambda2: 0, latin_type: LatinType::Neither };
    }
    let lambda1 = r * r - 3 * e * r + e * pk;
    let lambda2 = r * (r - e);
    // Shape sign is the negative of the spectrum sign.
    let latin_type = if epsilon == -1 { LatinType::NegativeLatin } else { LatinType::Latin };
    debug_assert!(matches_latin_shape(v, d, lambda1, lambda2, latin_type));
    PdsParams { v, d, lambda1, lambda2, latin_type }
}

/// Result of exhaustive difference counting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountOutcome {
    /// Differences hit members lambda_1 times and non-members lambda_2 times.
    Pds { lambda1: u64, lambda2: u64 },
    /// Constancy broke: `witness` was hit `count` times but the first
    /// element of its class was hit `reference` times.
    NotPds { witness: u32, count: u64, member: bool, reference: u64 },
}

/// Tally the difference multiset {g - h : g, h in D, g != h} and test the
/// defining property. The empty set counts as the trivial (0, 0) PDS.
pub fn verify_pds_counting(ctx: &FieldCtx, dset: &DSet) -> Result<CountOutcome, Error> {
    if dset.len() > COUNTING_CAP {
        return Err(Error::CapExceeded { size: dset.len() as u64, cap: COUNTING_CAP as u64 });
    }
    if dset.is_empty() {
        return Ok(CountOutcome::Pds { lambda1: 0, lambda2: 0 });
    }
    let order = ctx.order() as usize;
    let mut counts = vec![0u32; order];
    for &g in &dset.members {
        for &h in &dset.members {
            counts[ctx.sub(g, h).id() as usize] += 1;
        }
    }
    // The g = h pairs all landed on zero; difference counts ignore them.
    counts[0] -= dset.len() as u32;

    let mut member = vec![false; order];
    for &g in &dset.members {
        member[g.id() as usize] = true;
    }
    let mut lambda1: Option<u32> = None;
    let mut lambda2: Option<u32> = None;
    for x in 1..order {
        let slot = if member[x] { &mut lambda1 } else { &mut lambda2 };
        match *slot {
            None => *slot = Some(counts[x]),
            Some(reference) if reference != counts[x] => {
                return Ok(CountOutcome::NotPds {
                    witness: x as u32,
                    count: u64::from(counts[x]),
                    member: member[x],
                    reference: u64::from(reference),
                });
            }
            _ => {}
        }
    }
    Ok(CountOutcome::Pds {
        lambda1: u64::from(lambda1.unwrap_or(0)),
        lambda2: u64::from(lambda2.unwrap_or(0)),
    })
}

/// Dense undirected graph on the field elements, stored as a symmetric
/// adjacency bitset.
#[derive(Clone, Debug)]
pub struct Graph {
    v: u32,
    row_limbs: usize,
    bits: Vec<u64>,
    provenance: String,
}

impl Graph {
    pub fn vertex_count(&self) -> u32 {
        self.v
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    #[inline]
    pub fn row(&self, u: u32) -> &[u64] {
        let start = u as usize * self.row_limbs;
        &self.bits[start..start + self.row_limbs]
    }

    #[inline]
    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        self.row(u)[v as usize / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: u32) -> u64 {
        self.row(u).iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn edge_count(&self) -> u64 {
        (0..self.v).map(|u| self.degree(u)).sum::<u64>() / 2
    }

    /// Common neighbours of two vertices.
    pub fn common_neighbors(&self, u: u32, v: u32) -> u64 {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| u64::from((a & b).count_ones()))
            .sum()
    }

    /// All edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.v).flat_map(move |u| {
            self.row(u)
                .iter()
                .enumerate()
                .flat_map(move |(limb, &word)| {
                    let mut word = word;
                    // Mask off v <= u within this limb.
                    if limb == u as usize / 64 {
                        word &= !0u64 << (u % 64) << 1;
                    } else if limb < u as usize / 64 {
                        word = 0;
                    }
                    core::iter::from_fn(move || {
                        if word == 0 {
                            return None;
                        }
                        let bit = word.trailing_zeros();
                        word &= word - 1;
                        Some((u, limb as u32 * 64 + bit))
                    })
                })
        })
    }

    fn set_edge(&mut self, u: u32, v: u32) {
        let idx = u as usize * self.row_limbs + v as usize / 64;
        self.bits[idx] |= 1u64 << (v % 64);
        let idx = v as usize * self.row_limbs + u as usize / 64;
        self.bits[idx] |= 1u64 << (u % 64);
    }

    /// Rebuild a graph from an explicit edge list on `v` vertices.
    pub fn from_edges(
        v: u32,
        edges: impl IntoIterator<Item = (u32, u32)>,
        provenance: &str,
    ) -> Result<Graph, Error> {
        let row_limbs = (v as usize).div_ceil(64);
        let mut graph = Graph {
            v,
            row_limbs,
            bits: vec![0u64; v as usize * row_limbs],
            provenance: provenance.to_string(),
        };
        for (a, b) in edges {
            if a >= v || b >= v {
                return Err(Error::BadConnectionSet(format!(
                    "edge ({a}, {b}) out of range for {v} vertices"
                )));
            }
            if a == b {
                return Err(Error::BadConnectionSet(format!("self-loop at {a}")));
            }
            graph.set_edge(a, b);
        }
        Ok(graph)
    }
}

/// Cayley graph of the additive group with connection set `dset`: x ~ y iff
/// x - y is a member. Requires a negation-closed set that excludes zero.
pub fn cayley_graph(ctx: &FieldCtx, dset: &DSet) -> Result<Graph, Error> {
    let order = ctx.order();
    let mut member = vec![false; order as usize];
    for &g in &dset.members {
        if g.id() == 0 {
            return Err(Error::BadConnectionSet("contains the identity".into()));
        }
        member[g.id() as usize] = true;
    }
    for &g in &dset.members {
        if !member[ctx.neg(g).id() as usize] {
            return Err(Error::BadConnectionSet(format!(
                "not negation-closed at element {}",
                g.id()
            )));
        }
    }
    let row_limbs = (order as usize).div_ceil(64);
    let mut graph = Graph {
        v: order,
        row_limbs,
        bits: vec![0u64; order as usize * row_limbs],
        provenance: format!("{}/{}", dset.source, dset.kind.label()),
    };
    for x in ctx.elements() {
        for &d in &dset.members {
            let y = ctx.add(x, d);
            if y.id() > x.id() {
                graph.set_edge(x.id(), y.id());
            }
        }
    }
    Ok(graph)
}

/// Why a graph failed strong regularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SrgFailure {
    IrregularDegree { vertex: u32, degree: u64, expected: u64 },
    CommonCountMismatch { u: u32, v: u32, count: u64, reference: u64, adjacent: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SrgOutcome {
    Srg { k: u64, lambda: u64, mu: u64 },
    NotSrg(SrgFailure),
}

/// Exhaustive common-neighbour counting over every vertex pair.
pub fn verify_srg(graph: &Graph) -> SrgOutcome {
    let v = graph.vertex_count();
    let k = graph.degree(0);
    for u in 1..v {
        let d = graph.degree(u);
        if d != k {
            return SrgOutcome::NotSrg(SrgFailure::IrregularDegree {
                vertex: u,
                degree: d,
                expected: k,
            });
        }
    }
    let mut lambda: Option<u64> = None;
    let mut mu: Option<u64> = None;
    for u in 0..v {
        for w in u + 1..v {
            let c = graph.common_neighbors(u, w);
            let adjacent = graph.adjacent(u, w);
            let slot = if adjacent { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(reference) if reference != c => {
                    return SrgOutcome::NotSrg(SrgFailure::CommonCountMismatch {
                        u,
                        v: w,
                        count: c,
                        reference,
                        adjacent,
                    });
                }
                _ => {}
            }
        }
    }
    SrgOutcome::Srg { k, lambda: lambda.unwrap_or(0), mu: mu.unwrap_or(0) }
}

/// The affine polar comparison sets: D_S and D_S' of the nondegenerate
/// quadratic tr(x^2) on the same field.
pub fn affine_polar_baseline(ctx: &FieldCtx) -> Result<(DSet, DSet), Error> {
    let f = crate::bent::catalog_quadratic(ctx, ctx.one())?;
    let spectrum = crate::bent::classify_regularity(crate::bent::walsh_transform(ctx, &f))?;
    let levels = level_sets(ctx, &f);
    let eps = spectrum.epsilon();
    let ds = build_dset(&levels, DsetKind::DS, f.name(), eps);
    let dsp = build_dset(&levels, DsetKind::DSPrime, f.name(), eps);
    Ok((ds, dsp))
}
