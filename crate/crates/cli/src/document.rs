use burnside_core::tambara::{PairAdmissibility, SplittingReport, TheoremAReport};
use serde::{Deserialize, Serialize};

/// Everything one invocation produces. Rationals are strings `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub group: GroupInfo,
    pub primes: String,
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub label: String,
    pub order: usize,
    pub degree: usize,
    pub generators: Vec<String>,
    pub subgroups: usize,
    pub classes: Vec<ClassInfo>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub label: String,
    pub order: usize,
    pub size: usize,
    pub generators: String,
    pub normal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Marks(MarksPayload),
    Idempotents(IdempotentsPayload),
    Norm(NormPayload),
    TheoremA(TheoremAPayload),
    IndexingSystems(IndexingSystemsPayload),
    Splitting(SplittingReport),
    Report(Box<FullReport>),
}

/// `rows[j].marks[i]` is the number of points of `G/H_j` fixed by `H_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarksPayload {
    pub classes: Vec<String>,
    pub rows: Vec<MarksRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarksRow {
    pub orbit: String,
    pub marks: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentsPayload {
    pub classes: Vec<String>,
    pub perfect_classes: Vec<String>,
    pub idempotents: Vec<IdempotentEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentEntry {
    pub l: String,
    pub generators: String,
    pub normal: bool,
    pub marks: Vec<String>,
    pub orbit_coefficients: Vec<String>,
    pub p_local: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRef {
    pub class: String,
    pub subgroup: String,
    pub order: usize,
    pub generators: String,
}

/// `N_K^H` on the orbit basis of `A(K)`, with `K ≤ H` moved by one element
/// so that `H` is its class representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormPayload {
    pub from: SubgroupRef,
    pub to: SubgroupRef,
    pub conjugator: String,
    /// Classes of subgroups of `H`, the coordinates of `norm_marks`.
    pub target_classes: Vec<String>,
    pub images: Vec<NormImage>,
    pub descent: Vec<DescentRow>,
    pub verdict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormImage {
    pub orbit: String,
    pub norm_marks: Vec<String>,
    pub norm_orbit_coefficients: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentRow {
    pub l: String,
    pub star: bool,
    pub diamond: bool,
    pub division: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremAPayload {
    pub report: TheoremAReport,
    pub admissible: Vec<FactorPairs>,
}

/// Proper admissible pairs of one indexing system, up to conjugacy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorPairs {
    pub l: String,
    pub complete: bool,
    pub minimal: bool,
    pub pairs: Vec<PairAdmissibility>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexingSystemsPayload {
    pub systems: Vec<FactorPairs>,
    pub shared: FactorPairs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullReport {
    pub marks: MarksPayload,
    pub idempotents: IdempotentsPayload,
    pub theorem_a: TheoremAPayload,
    pub indexing_systems: IndexingSystemsPayload,
    pub splitting: SplittingReport,
}

impl Payload {
    /// Whether every check carried by the payload passed.
    pub fn verified(&self) -> bool {
        match self {
            Payload::Marks(_) | Payload::Idempotents(_) | Payload::IndexingSystems(_) => true,
            Payload::Norm(n) => n.verdict,
            Payload::TheoremA(t) => t.report.verdict,
            Payload::Splitting(s) => s.verdict,
            Payload::Report(r) => r.theorem_a.report.verdict && r.splitting.verdict,
        }
    }
}
