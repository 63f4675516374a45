use std::sync::Arc;

use burnside_core::group::{build_group_with_cap, SubgroupId, SubgroupLattice};
use burnside_core::perm::parse_generators;
use burnside_core::rational;
use burnside_core::tambara::PairAdmissibility;
use burnside_core::{Burnside, Error, IndexingSystem, NormAnalysis};

use crate::config::{Command, Config};
use crate::document::*;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_VERIFICATION: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

#[derive(Debug, thiserror::Error)]
#[error(transparent)]
pub struct RunError(#[from] pub Error);

impl RunError {
    pub fn exit_code(&self) -> u8 {
        match self.0 {
            Error::OrderCap { .. } => EXIT_CAP,
            Error::GroupSpec { .. } | Error::PrimeSpec { .. } | Error::NotAnElement(_) | Error::NotContained { .. } => {
                EXIT_USAGE
            }
            _ => EXIT_INTERNAL,
        }
    }
}

impl ReportDocument {
    pub fn exit_code(&self) -> u8 {
        if self.payload.verified() {
            EXIT_OK
        } else {
            EXIT_VERIFICATION
        }
    }
}

pub fn run(config: &Config) -> Result<ReportDocument, RunError> {
    let group = build_group_with_cap(&config.group_spec, config.max_order)?;
    let burnside = Arc::new(Burnside::for_group(group));
    let analysis = NormAnalysis::new(burnside.clone(), &config.primes)?;
    let payload = match &config.command {
        Command::Marks => Payload::Marks(marks(&burnside)),
        Command::Idempotents => Payload::Idempotents(idempotents(&analysis)),
        Command::Norm { from, to } => Payload::Norm(norm(&analysis, from, to)?),
        Command::TheoremA => Payload::TheoremA(theorem_a(&analysis)?),
        Command::IndexingSystems => Payload::IndexingSystems(indexing_systems(&analysis)?),
        Command::Splitting => Payload::Splitting(analysis.splitting_report()?),
        Command::Report => Payload::Report(Box::new(FullReport {
            marks: marks(&burnside),
            idempotents: idempotents(&analysis),
            theorem_a: theorem_a(&analysis)?,
            indexing_systems: indexing_systems(&analysis)?,
            splitting: analysis.splitting_report()?,
        })),
    };
    Ok(ReportDocument {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        command: config.command.name().to_string(),
        group: group_info(burnside.lattice()),
        primes: analysis.primes().to_string(),
        payload,
    })
}

fn group_info(lattice: &SubgroupLattice) -> GroupInfo {
    let g = lattice.group();
    GroupInfo {
        label: g.label().to_string(),
        order: g.order(),
        degree: g.degree(),
        generators: g.generators().iter().map(|&x| g.perm(x).to_string()).collect(),
        subgroups: lattice.len(),
        classes: lattice
            .classes()
            .iter()
            .map(|c| ClassInfo {
                label: c.label.clone(),
                order: c.order,
                size: c.members.len(),
                generators: lattice.subgroup(c.representative).describe(g),
                normal: c.members.len() == 1,
            })
            .collect(),
    }
}

fn class_labels(lattice: &SubgroupLattice) -> Vec<String> {
    lattice.classes().iter().map(|c| c.label.clone()).collect()
}

fn marks(burnside: &Burnside) -> MarksPayload {
    let lattice = burnside.lattice();
    let table = burnside.table_of_marks(burnside.top());
    MarksPayload {
        classes: class_labels(lattice),
        rows: (0..table.len())
            .map(|j| MarksRow { orbit: lattice.class(lattice.class_of(table.representatives[j])).label.clone(), marks: table.column(j) })
            .collect(),
    }
}

fn idempotents(analysis: &NormAnalysis) -> IdempotentsPayload {
    let lattice = analysis.lattice();
    let burnside = analysis.burnside();
    IdempotentsPayload {
        classes: class_labels(lattice),
        perfect_classes: analysis.perfect_classes().iter().map(|&l| lattice.class(l).label.clone()).collect(),
        idempotents: analysis
            .idempotents()
            .iter()
            .map(|(l, e)| {
                let rep = lattice.class(*l).representative;
                IdempotentEntry {
                    l: lattice.class(*l).label.clone(),
                    generators: lattice.subgroup(rep).describe(lattice.group()),
                    normal: lattice.is_normal(rep),
                    marks: e.marks().iter().map(rational::format).collect(),
                    orbit_coefficients: burnside.to_orbit_basis(e).iter().map(rational::format).collect(),
                    p_local: burnside.is_p_local(e, analysis.primes()),
                }
            })
            .collect(),
    }
}

fn resolve(lattice: &SubgroupLattice, gens: &str) -> Result<SubgroupId, Error> {
    let g = lattice.group();
    let perms = parse_generators(gens, g.degree())?;
    let elements = perms
        .iter()
        .map(|p| if p.degree() > g.degree() { None } else { g.element_of(p) }.ok_or_else(|| Error::NotAnElement(p.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(lattice.id_of(&g.closure(&elements)).expect("closures are subgroups"))
}

fn subgroup_ref(lattice: &SubgroupLattice, s: SubgroupId) -> SubgroupRef {
    SubgroupRef {
        class: lattice.class(lattice.class_of(s)).label.clone(),
        subgroup: lattice.subgroup_label(s),
        order: lattice.order_of(s),
        generators: lattice.subgroup(s).describe(lattice.group()),
    }
}

fn norm(analysis: &NormAnalysis, from: &str, to: &str) -> Result<NormPayload, Error> {
    let lattice = analysis.lattice();
    let burnside = analysis.burnside();
    let g = lattice.group();
    let k_given = resolve(lattice, from)?;
    let h_given = resolve(lattice, to)?;
    analysis.pair(k_given, h_given)?;
    // move H onto its class representative and K as low as the same move allows
    let h = lattice.class(lattice.class_of(h_given)).representative;
    let z = (0..g.order())
        .filter(|&z| lattice.conjugate_id(h_given, z) == h)
        .min_by_key(|&z| (lattice.conjugate_id(k_given, z), z))
        .expect("class members are conjugate");
    let k = lattice.conjugate_id(k_given, z);
    let pair = analysis.pair(k, h)?;

    let source = burnside.ring(k);
    let target = burnside.ring(h);
    let images = (0..source.rank())
        .map(|j| {
            let orbit = burnside.orbit(k, source.representative(j))?;
            let image = burnside.norm(&orbit, h)?;
            Ok(NormImage {
                orbit: lattice.subgroup_label(source.representative(j)),
                norm_marks: image.marks().iter().map(rational::format).collect(),
                norm_orbit_coefficients: burnside.to_orbit_basis(&image).iter().map(rational::format).collect(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let descent = analysis
        .perfect_classes()
        .iter()
        .map(|&l| {
            Ok(DescentRow {
                l: lattice.class(l).label.clone(),
                star: analysis.condition_star(l, pair),
                diamond: analysis.condition_diamond(l, pair)?,
                division: analysis.norm_descends(l, pair)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let verdict = descent.iter().all(|d| d.star == d.diamond && d.diamond == d.division);
    Ok(NormPayload {
        from: subgroup_ref(lattice, k),
        to: subgroup_ref(lattice, h),
        conjugator: g.perm(z).to_string(),
        target_classes: (0..target.rank()).map(|i| lattice.subgroup_label(target.representative(i))).collect(),
        images,
        descent,
        verdict,
    })
}

fn factor_pairs(analysis: &NormAnalysis, l: String, system: &IndexingSystem) -> FactorPairs {
    let lattice = analysis.lattice();
    let pairs = lattice
        .pair_representatives()
        .into_iter()
        .filter(|(k, h)| k != h)
        .map(|(k, h)| PairAdmissibility {
            k: lattice.class(lattice.class_of(k)).label.clone(),
            h: lattice.class(lattice.class_of(h)).label.clone(),
            k_subgroup: lattice.subgroup_label(k),
            h_subgroup: lattice.subgroup_label(h),
            admissible: system.is_admissible(k, h),
        })
        .collect();
    FactorPairs { l, complete: system.is_complete(), minimal: system.is_minimal(), pairs }
}

fn factor_systems(analysis: &NormAnalysis) -> Result<Vec<FactorPairs>, Error> {
    let lattice = analysis.lattice();
    analysis
        .perfect_classes()
        .iter()
        .map(|&l| Ok(factor_pairs(analysis, lattice.class(l).label.clone(), &analysis.indexing_system(l)?)))
        .collect()
}

fn theorem_a(analysis: &NormAnalysis) -> Result<TheoremAPayload, Error> {
    Ok(TheoremAPayload { report: analysis.verify_theorem_a()?, admissible: factor_systems(analysis)? })
}

fn indexing_systems(analysis: &NormAnalysis) -> Result<IndexingSystemsPayload, Error> {
    Ok(IndexingSystemsPayload {
        systems: factor_systems(analysis)?,
        shared: factor_pairs(analysis, "shared".into(), &analysis.shared_indexing_system()?),
    })
}
