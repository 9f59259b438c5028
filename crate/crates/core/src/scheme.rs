//! Verification that {0}, D, D_S, D_N induce a 3-class association scheme
//! on the additive group, with the amorphic criterion: every one- and
//! two-class fusion is strongly regular of one common Latin type.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bent::{ConditionAReport, PFunc};
use crate::error::Error;
use crate::field::{quad_classes, FieldCtx, FieldElem};
use crate::pds::{
    cayley_graph, matches_latin_shape, verify_srg, DSet, DsetKind, LatinType, SrgOutcome,
};

/// Class labels: 0 = {0}, 1 = D, 2 = D_S, 3 = D_N.
pub const CLASS_COUNT: usize = 4;

/// The four difference classes as a label per field element. The relation
/// (x, y) lies in class i iff x - y does.
#[derive(Clone, Debug)]
pub struct SchemeRelations {
    order: u32,
    class_of: Vec<u8>,
    sizes: [u64; CLASS_COUNT],
    source: String,
}

impl SchemeRelations {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    #[inline]
    pub fn class_of(&self, x: FieldElem) -> u8 {
        self.class_of[x.id() as usize]
    }

    pub fn sizes(&self) -> [u64; CLASS_COUNT] {
        self.sizes
    }

    /// Members of one class, ascending by id.
    pub fn class_members(&self, ctx: &FieldCtx, class: u8) -> Vec<FieldElem> {
        ctx.elements().filter(|&x| self.class_of(x) == class).collect()
    }
}

/// Partition the field into {0}, D, D_S, D_N by function value. The
/// partition exists for any function; Condition A is what makes it a scheme.
pub fn build_relations(ctx: &FieldCtx, f: &PFunc) -> SchemeRelations {
    assert_eq!((f.p(), f.n()), (ctx.p(), ctx.n()), "function belongs to another field");
    let qc = quad_classes(u64::from(ctx.p())).expect("p is an odd prime");
    let mut class_of = vec![0u8; ctx.order() as usize];
    let mut sizes = [0u64; CLASS_COUNT];
    for x in ctx.elements() {
        let class = if x.id() == 0 {
            0
        } else {
            let v = f.value(x);
            if v == 0 {
                1
            } else if qc.is_square(v) {
                2
            } else {
                3
            }
        };
        class_of[x.id() as usize] = class;
        sizes[class as usize] += 1;
    }
    SchemeRelations { order: ctx.order(), class_of, sizes, source: f.name().to_string() }
}

/// [`build_relations`], refusing functions that fail Condition A.
pub fn build_relations_checked(
    ctx: &FieldCtx,
    f: &PFunc,
    report: &ConditionAReport,
) -> Result<SchemeRelations, Error> {
    if !report.satisfied {
        return Err(Error::BadConnectionSet("function fails Condition A".into()));
    }
    Ok(build_relations(ctx, f))
}

/// Intersection numbers p_ij^k, indexed `[k][i][j]`.
pub type IntersectionTensor = [[[i64; CLASS_COUNT]; CLASS_COUNT]; CLASS_COUNT];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchemeOutcome {
    Scheme(IntersectionTensor),
    /// Count for (i, j) over a pair in class `class` differed from the
    /// reference count established by the class's first pair.
    NotScheme { class: u8, i: u8, j: u8, x: u32, y: u32, count: i64, reference: i64 },
}

/// How to sweep the pairs of each relation class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeMode {
    /// Fix x = 0 and sweep y over the class. Exact for these relations:
    /// they are translation-invariant by construction.
    TranslationReduced,
    /// Sweep every pair (x, y); quadratic in the order times the order.
    /// Guards the reduction itself; capped to small fields.
    FullPairs,
}

/// Cap on |G| for the full-pair audit sweep.
pub const FULL_PAIRS_CAP: u64 = 100;

/// Check that the counts `|{z : (x,z) in R_i, (z,y) in R_j}|` are constant
/// over the pairs of each class, and return the intersection tensor.
pub fn verify_scheme(
    ctx: &FieldCtx,
    rel: &SchemeRelations,
    mode: SchemeMode,
) -> Result<SchemeOutcome, Error> {
    assert_eq!(rel.order, ctx.order(), "relations belong to another field");
    if mode == SchemeMode::FullPairs && u64::from(ctx.order()) > FULL_PAIRS_CAP {
        return Err(Error::CapExceeded { size: u64::from(ctx.order()), cap: FULL_PAIRS_CAP });
    }
    let mut tensor: IntersectionTensor = [[[0; CLASS_COUNT]; CLASS_COUNT]; CLASS_COUNT];
    let mut have_reference = [false; CLASS_COUNT];

    let mut counts = [[0i64; CLASS_COUNT]; CLASS_COUNT];
    let pair_counts = |x: FieldElem, y: FieldElem, counts: &mut [[i64; CLASS_COUNT]; CLASS_COUNT]| {
        counts.iter_mut().for_each(|row| row.fill(0));
        for z in ctx.elements() {
            let i = rel.class_of(ctx.sub(x, z));
            let j = rel.class_of(ctx.sub(z, y));
            counts[i as usize][j as usize] += 1;
        }
    };

    let mut check_pair = |x: FieldElem,
                          y: FieldElem,
                          tensor: &mut IntersectionTensor,
                          counts: &mut [[i64; CLASS_COUNT]; CLASS_COUNT]|
     -> Option<SchemeOutcome> {
        let k = rel.class_of(ctx.sub(x, y)) as usize;
        pair_counts(x, y, counts);
        if !have_reference[k] {
            tensor[k] = *counts;
            have_reference[k] = true;
            return None;
        }
        for i in 0..CLASS_COUNT {
            for j in 0..CLASS_COUNT {
                if tensor[k][i][j] != counts[i][j] {
                    return Some(SchemeOutcome::NotScheme {
                        class: k as u8,
                        i: i as u8,
                        j: j as u8,
                        x: x.id(),
                        y: y.id(),
                        count: counts[i][j],
                        reference: tensor[k][i][j],
                    });
                }
            }
        }
        None
    };

    match mode {
        SchemeMode::TranslationReduced => {
            let x = ctx.zero();
            for y in ctx.elements() {
                if let Some(fail) = check_pair(x, y, &mut tensor, &mut counts) {
                    return Ok(fail);
                }
            }
        }
        SchemeMode::FullPairs => {
            for x in ctx.elements() {
                for y in ctx.elements() {
                    if let Some(fail) = check_pair(x, y, &mut tensor, &mut counts) {
                        return Ok(fail);
                    }
                }
            }
        }
    }
    Ok(SchemeOutcome::Scheme(tensor))
}

/// One fused relation and what became of it.
#[derive(Clone, Debug)]
pub struct FusionReport {
    /// Which of the classes 1..3 were united.
    pub classes: Vec<u8>,
    pub label: String,
    pub outcome: FusionOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FusionOutcome {
    /// Union is empty; contributes nothing.
    Empty,
    /// Union is all of G \ {0}: the complete graph, excluded from the check.
    Complete,
    Srg { k: u64, lambda: u64, mu: u64, latin: bool, negative_latin: bool },
    NotSrg,
}

#[derive(Clone, Debug)]
pub struct AmorphicReport {
    pub fusions: Vec<FusionReport>,
    /// Tag shared by every nonempty, noncomplete fusion, if any.
    pub uniform_tag: Option<LatinType>,
    pub amorphic: bool,
}

/// Check the amorphic criterion: D, D_S, D_N and their pairwise unions all
/// generate strongly regular graphs carrying one common Latin square type.
pub fn verify_amorphic(ctx: &FieldCtx, rel: &SchemeRelations) -> AmorphicReport {
    let groups: [&[u8]; 6] = [&[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3]];
    let mut fusions = Vec::new();
    let mut all_srg = true;
    let mut all_latin = true;
    let mut all_negative_latin = true;
    let mut seen_proper = false;

    for classes in groups {
        let mut members: Vec<FieldElem> = Vec::new();
        for &c in classes {
            members.extend(rel.class_members(ctx, c));
        }
        members.sort_unstable();
        let names: Vec<&str> = classes
            .iter()
            .map(|&c| match c {
                1 => "D",
                2 => "D_S",
                _ => "D_N",
            })
            .collect();
        let label = names.join("+");

        let outcome = if members.is_empty() {
            FusionOutcome::Empty
        } else if members.len() as u32 == rel.order - 1 {
            FusionOutcome::Complete
        } else {
            let dset = DSet {
                kind: DsetKind::D,
                members,
                source: format!("{}/fusion {}", rel.source, label),
                epsilon: None,
            };
            let graph = cayley_graph(ctx, &dset).expect("classes are negation-closed");
            match verify_srg(&graph) {
                SrgOutcome::Srg { k, lambda, mu } => {
                    let v = i64::from(rel.order);
                    let latin =
                        matches_latin_shape(v, k as i64, lambda as i64, mu as i64, LatinType::Latin);
                    let negative_latin = matches_latin_shape(
                        v,
                        k as i64,
                        lambda as i64,
                        mu as i64,
                        LatinType::NegativeLatin,
                    );
                    seen_proper = true;
                    all_latin &= latin;
                    all_negative_latin &= negative_latin;
                    FusionOutcome::Srg { k, lambda, mu, latin, negative_latin }
                }
                SrgOutcome::NotSrg(_) => {
                    all_srg = false;
                    FusionOutcome::NotSrg
                }
            }
        };
        fusions.push(FusionReport { classes: classes.to_vec(), label, outcome });
    }

    let uniform_tag = if !seen_proper || !all_srg {
        None
    } else if all_negative_latin {
        Some(LatinType::NegativeLatin)
    } else if all_latin {
        Some(LatinType::Latin)
    } else {
        None
    };
    AmorphicReport { fusions, uniform_tag, amorphic: all_srg && uniform_tag.is_some() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bent::{
        catalog_hk, catalog_quadratic, catalog_sporadic_ternary, classify_regularity, condition_a,
        walsh_transform,
    };
    use crate::field::make_field;

    fn relations_for(p: u64, n: u8, quadratic: bool) -> (crate::field::FieldCtx, SchemeRelations) {
        let ctx = make_field(p, n, None).unwrap();
        let f = if quadratic {
            catalog_quadratic(&ctx, ctx.one()).unwrap()
        } else {
            catalog_hk(&ctx).unwrap()
        };
        let rel = build_relations(&ctx, &f);
        (ctx, rel)
    }

    #[test]
    fn class_sizes_partition_the_field() {
        let (_, rel) = relations_for(3, 4, false);
        assert_eq!(rel.sizes(), [1, 20, 30, 30]);
        assert_eq!(rel.sizes().iter().sum::<u64>(), 81);
    }

    #[test]
    fn relations_respect_negation() {
        let (ctx, rel) = relations_for(5, 2, true);
        for x in ctx.elements() {
            assert_eq!(rel.class_of(ctx.neg(x)), rel.class_of(x));
        }
    }

    #[test]
    fn identity_class_rows_are_deltas() {
        let (ctx, rel) = relations_for(3, 4, false);
        let tensor = match verify_scheme(&ctx, &rel, SchemeMode::TranslationReduced).unwrap() {
            SchemeOutcome::Scheme(t) => t,
            other => panic!("not a scheme: {other:?}"),
        };
        // p_00^0 = 1 and p_0j^k = delta_jk.
        assert_eq!(tensor[0][0][0], 1);
        for k in 0..CLASS_COUNT {
            if rel.sizes()[k] == 0 {
                continue;
            }
            for j in 0..CLASS_COUNT {
                assert_eq!(tensor[k][0][j], i64::from(j == k));
            }
        }
    }

    #[test]
    fn scheme_tensor_symmetry_and_row_sums() {
        let (ctx, rel) = relations_for(3, 4, false);
        let tensor = match verify_scheme(&ctx, &rel, SchemeMode::TranslationReduced).unwrap() {
            SchemeOutcome::Scheme(t) => t,
            other => panic!("not a scheme: {other:?}"),
        };
        for k in 0..CLASS_COUNT {
            if rel.sizes()[k] == 0 {
                continue;
            }
            for i in 0..CLASS_COUNT {
                for j in 0..CLASS_COUNT {
                    assert_eq!(tensor[k][i][j], tensor[k][j][i]);
                }
                let row: i64 = tensor[k][i].iter().sum();
                assert_eq!(row, rel.sizes()[i] as i64);
            }
        }
    }

    #[test]
    fn full_pair_audit_agrees_with_reduction() {
        for (p, n) in [(3u64, 2u8), (5, 2)] {
            let (ctx, rel) = relations_for(p, n, true);
            let reduced = verify_scheme(&ctx, &rel, SchemeMode::TranslationReduced).unwrap();
            let full = verify_scheme(&ctx, &rel, SchemeMode::FullPairs).unwrap();
            assert_eq!(reduced, full);
            assert!(matches!(reduced, SchemeOutcome::Scheme(_)));
        }
        let (ctx, rel) = relations_for(3, 4, false);
        let reduced = verify_scheme(&ctx, &rel, SchemeMode::TranslationReduced).unwrap();
        let full = verify_scheme(&ctx, &rel, SchemeMode::FullPairs).unwrap();
        assert_eq!(reduced, full);
    }

    #[test]
    fn full_pair_audit_is_capped() {
        let (ctx, rel) = relations_for(5, 4, false);
        assert!(matches!(
            verify_scheme(&ctx, &rel, SchemeMode::FullPairs),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn sporadic_relations_fail() {
        let ctx = make_field(3, 6, None).unwrap();
        let f = catalog_sporadic_ternary(&ctx).unwrap();
        let rel = build_relations(&ctx, &f);
        match verify_scheme(&ctx, &rel, SchemeMode::TranslationReduced).unwrap() {
            SchemeOutcome::NotScheme { count, reference, .. } => assert_ne!(count, reference),
            SchemeOutcome::Scheme(_) => panic!("sporadic relations should not form a scheme"),
        }
    }

    #[test]
    fn checked_constructor_requires_condition_a() {
        let ctx = make_field(3, 6, None).unwrap();
        let f = catalog_sporadic_ternary(&ctx).unwrap();
        let spec = classify_regularity(walsh_transform(&ctx, &f)).unwrap();
        let report = condition_a(&ctx, &f, &spec);
        assert!(!report.satisfied);
        assert!(build_relations_checked(&ctx, &f, &report).is_err());
    }

    #[test]
    fn amorphic_on_hk_gf81() {
        let (ctx, rel) = relations_for(3, 4, false);
        let report = verify_amorphic(&ctx, &rel);
        assert!(report.amorphic);
        assert_eq!(report.uniform_tag, Some(LatinType::NegativeLatin));
        assert_eq!(report.fusions.len(), 6);
        for fusion in &report.fusions {
            assert!(
                matches!(fusion.outcome, FusionOutcome::Srg { .. }),
                "{}: {:?}",
                fusion.label,
                fusion.outcome
            );
        }
    }

    #[test]
    fn amorphic_handles_empty_class() {
        // Quadratic on GF(5^2): D is empty, D_S union D_N is complete.
        let (ctx, rel) = relations_for(5, 2, true);
        assert_eq!(rel.sizes()[1], 0);
        let report = verify_amorphic(&ctx, &rel);
        assert!(report.amorphic, "{report:?}");
        let by_label = |l: &str| {
            report.fusions.iter().find(|f| f.label == l).map(|f| f.outcome.clone()).unwrap()
        };
        assert_eq!(by_label("D"), FusionOutcome::Empty);
        assert_eq!(by_label("D_S+D_N"), FusionOutcome::Complete);
        assert!(matches!(by_label("D_S"), FusionOutcome::Srg { .. }));
    }
}
