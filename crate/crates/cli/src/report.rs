//! JSON report schemas. Serialization round-trips exactly: every report
//! type derives both directions plus equality, and the CLI tests feed the
//! emitted JSON back through the parser.

use bentsrg_core::pds::{LatinType, PdsParams};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct FieldReport {
    pub p: u64,
    pub n: u8,
    pub modulus: Vec<u8>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct ParamsReport {
    pub v: i64,
    pub d: i64,
    pub lambda1: i64,
    pub lambda2: i64,
    pub latin_type: String,
}

impl From<PdsParams> for ParamsReport {
    fn from(p: PdsParams) -> Self {
        ParamsReport {
            v: p.v,
            d: p.d,
            lambda1: p.lambda1,
            lambda2: p.lambda2,
            latin_type: match p.latin_type {
                LatinType::Latin => "Latin".into(),
                LatinType::NegativeLatin => "negative-Latin".into(),
                LatinType::Neither => "neither".into(),
            },
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct WitnessReport {
    pub element: u32,
    pub count: u64,
    pub member: bool,
    pub reference: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct CountedReport {
    pub lambda1: Option<u64>,
    pub lambda2: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessReport>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct SrgReport {
    pub function: String,
    pub field: FieldReport,
    pub kind: String,
    pub predicted: Option<ParamsReport>,
    pub counted: CountedReport,
    pub verdict: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct ConditionAJson {
    pub f0_zero: bool,
    pub even: bool,
    pub homogeneous_l: Option<u8>,
    pub weakly_regular: bool,
    pub epsilon: Option<i8>,
    pub satisfied: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct AnalyzeReport {
    pub function: String,
    pub field: FieldReport,
    pub bent: bool,
    pub regularity: Option<String>,
    pub mu: Option<i8>,
    pub epsilon: Option<i8>,
    pub condition_a: Option<ConditionAJson>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct FusionJson {
    pub label: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<ParamsReport>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct SchemeReport {
    pub function: String,
    pub field: FieldReport,
    pub classes: Vec<u64>,
    /// p_ij^k indexed tensor[k][i][j]; all zeros for an empty class k.
    pub tensor: Option<Vec<Vec<Vec<i64>>>>,
    pub scheme: bool,
    pub amorphic: bool,
    pub fusions: Vec<FusionJson>,
    pub verdict: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct RankReport {
    pub p: u64,
    pub v: u64,
    pub rank: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct TableRowReport {
    pub table: u8,
    pub construction: String,
    pub field: String,
    pub kind: String,
    pub expected_params: ParamsReport,
    pub counted_params: Option<ParamsReport>,
    pub expected_rank: u64,
    pub computed_rank: Option<u64>,
    /// "external": automorphism-group orders are not computed here.
    pub aut_order: String,
    pub status: String,
}
