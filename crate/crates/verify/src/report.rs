//! The commands. Each builds a report value, then renders it as JSON, CSV or
//! text; mismatches are collected separately and decide the exit code.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use paley_core::constructions::{
    construct, paper_tower_bounded, s0_matches, verify_construction, Label, Orientation,
    VerificationReport,
};
use paley_core::field::squares_and_s0;
use paley_core::graph::{srg_parameters, subfield_clique};
use paley_core::group::{orbit_of, orbit_partition, stabilizer};
use paley_core::{build_graph, group_order, Census, Error, FieldCtx, OrbitRecord, PaleyGraph};
use serde::Serialize;

use crate::census::census;
use crate::cli::{Command, Format, RunConfig};
use crate::formats::{
    clique_csv_line, clique_json_line, elem, elems, indices, Elem, LineRepr, OrbitCsvRow,
    OrbitJson, TowerRepr,
};

/// Orbit counts of the second-largest maximal cliques.
pub const EXPECTED_ORBITS: [(u32, usize); 6] =
    [(9, 3), (11, 3), (13, 4), (17, 9), (19, 4), (23, 4)];

pub fn expected_orbits(q: u32) -> usize {
    EXPECTED_ORBITS
        .iter()
        .find(|e| e.0 == q)
        .map(|e| e.1)
        .expect("supported q")
}

#[derive(Debug)]
pub enum RunError {
    /// Bad configuration; exit code 2.
    Usage(String),
    /// A check could not complete, e.g. a gap violation; exit code 1.
    Check(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e)
    }
}

impl From<csv::Error> for RunError {
    fn from(e: csv::Error) -> Self {
        RunError::Io(e.into())
    }
}

fn check(e: Error) -> RunError {
    match e {
        Error::UnsupportedSize { .. } => RunError::Usage(e.to_string()),
        _ => RunError::Check(e.to_string()),
    }
}

/// A rendered report and the mismatches found while producing it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub mismatches: Vec<String>,
}

pub struct Setup {
    pub ctx: FieldCtx,
    pub graph: PaleyGraph,
}

fn setup(q: u32, cfg: &RunConfig) -> Result<Setup, RunError> {
    let ctx = paper_tower_bounded(q, cfg.table_bound).map_err(check)?;
    let graph = build_graph(&ctx);
    Ok(Setup { ctx, graph })
}

fn orientation(ctx: &FieldCtx) -> Orientation {
    Label::for_q(ctx.q())
        .filter_map(|l| construct(ctx, l).ok())
        .map(|(_, o)| o)
        .next()
        .unwrap_or_default()
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data");
    s.push('\n');
    s
}

fn csv_rows<T: Serialize>(rows: &[T]) -> Result<String, RunError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| RunError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

pub fn run_command(cfg: &RunConfig) -> Result<Output, RunError> {
    match cfg.command {
        Command::Build => build(cfg),
        Command::Census => census_cmd(cfg),
        Command::Orbits => orbits(cfg),
        Command::VerifyPaper => verify_paper(cfg),
        Command::Table1 => table1(cfg),
        Command::DumpGraph => dump_graph(cfg),
    }
}

// build

#[derive(Clone, Debug, Serialize)]
pub struct SrgRepr {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BuildReport {
    pub q: u32,
    pub tower: TowerRepr,
    pub vertices: usize,
    pub group_order: u64,
    pub srg: SrgRepr,
    pub srg_matches_formula: bool,
    /// The `x` with `x + α ∈ S0`, as `F_p` digits.
    pub s0_shifts: Vec<Vec<u32>>,
    pub s0_matches_listed: bool,
    pub subfield_stabilizer_order: u64,
}

#[derive(Serialize)]
struct BuildCsvRow {
    q: u32,
    p: u32,
    m: u32,
    delta: String,
    alpha_square: String,
    field_poly: String,
    vertices: usize,
    group_order: u64,
    srg: String,
    s0_matches_listed: bool,
    subfield_stabilizer_order: u64,
}

fn digits(v: &[u32]) -> String {
    v.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn build(cfg: &RunConfig) -> Result<Output, RunError> {
    let mut reports = Vec::new();
    let mut mismatches = Vec::new();
    for &q in &cfg.qs {
        let Setup { ctx, graph } = setup(q, cfg)?;
        let srg = srg_parameters(&graph).map_err(check)?;
        let n = ctx.size();
        let srg_ok =
            (srg.v, srg.k, srg.lambda, srg.mu) == (n, (n - 1) / 2, (n - 5) / 4, (n - 1) / 4);
        let s0_ok = s0_matches(&ctx, q).map_err(check)?;
        let sets = squares_and_s0(&ctx).map_err(check)?;
        if !srg_ok {
            mismatches.push(format!("q={q}: SRG parameters {srg:?}"));
        }
        if !s0_ok {
            mismatches.push(format!("q={q}: S0 differs from the listed set"));
        }
        let sub = subfield_clique(&ctx, &graph);
        reports.push(BuildReport {
            q,
            tower: TowerRepr::new(&ctx, orientation(&ctx)),
            vertices: n,
            group_order: group_order(&ctx),
            srg: SrgRepr {
                v: srg.v,
                k: srg.k,
                lambda: srg.lambda,
                mu: srg.mu,
            },
            srg_matches_formula: srg_ok,
            s0_shifts: sets
                .s0_shifts(&ctx)
                .into_iter()
                .map(|c| ctx.fq_digits(c))
                .collect(),
            s0_matches_listed: s0_ok,
            subfield_stabilizer_order: stabilizer(&ctx, &sub).len() as u64,
        });
    }
    let body = match cfg.format {
        Format::Json => json(&reports),
        Format::Csv => csv_rows(
            &reports
                .iter()
                .map(|r| BuildCsvRow {
                    q: r.q,
                    p: r.tower.p,
                    m: r.tower.m,
                    delta: digits(&r.tower.delta_coeffs),
                    alpha_square: digits(&r.tower.alpha_square_coeffs),
                    field_poly: digits(&r.tower.field_poly_coeffs),
                    vertices: r.vertices,
                    group_order: r.group_order,
                    srg: format!("{} {} {} {}", r.srg.v, r.srg.k, r.srg.lambda, r.srg.mu),
                    s0_matches_listed: r.s0_matches_listed,
                    subfield_stabilizer_order: r.subfield_stabilizer_order,
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(
                    s,
                    "q={} p={} m={} delta=[{}] alpha^2=[{}] poly=[{}] |V|={} |Aut|={} srg=({},{},{},{}) S0 {} |Stab(F_q)|={}",
                    r.q,
                    r.tower.p,
                    r.tower.m,
                    digits(&r.tower.delta_coeffs),
                    digits(&r.tower.alpha_square_coeffs),
                    digits(&r.tower.field_poly_coeffs),
                    r.vertices,
                    r.group_order,
                    r.srg.v,
                    r.srg.k,
                    r.srg.lambda,
                    r.srg.mu,
                    if r.s0_matches_listed { "ok" } else { "MISMATCH" },
                    r.subfield_stabilizer_order
                );
            }
            s
        }
    };
    Ok(Output { body, mismatches })
}

// census

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub q: u32,
    pub tower: TowerRepr,
    pub clique_size: usize,
    pub census_count: usize,
    pub orbit_count: usize,
    pub expected_orbit_count: usize,
    pub orbit_sizes_sorted: Vec<u64>,
    pub max_clique_size: usize,
    pub max_clique_count: u64,
    /// `|Aut| / |Stab(F_q)|`
    pub expected_max_clique_count: u64,
}

#[derive(Serialize)]
struct CensusCsvRow {
    q: u32,
    clique_size: usize,
    census_count: usize,
    orbit_count: usize,
    expected_orbit_count: usize,
    orbit_sizes_sorted: String,
    max_clique_size: usize,
    max_clique_count: u64,
    expected_max_clique_count: u64,
}

struct CensusRun {
    setup: Setup,
    census: Census,
    orbits: Vec<OrbitRecord>,
}

fn run_census(q: u32, cfg: &RunConfig) -> Result<CensusRun, RunError> {
    let setup = setup(q, cfg)?;
    let census = census(&setup.ctx, &setup.graph, true).map_err(check)?;
    let orbits = orbit_partition(&setup.ctx, &census.cliques).map_err(check)?;
    Ok(CensusRun {
        setup,
        census,
        orbits,
    })
}

fn census_report(run: &CensusRun) -> CensusReport {
    let ctx = &run.setup.ctx;
    let q = ctx.q();
    let mut sizes: Vec<u64> = run.orbits.iter().map(|o| o.orbit_size).collect();
    sizes.sort_unstable();
    let sub = subfield_clique(ctx, &run.setup.graph);
    CensusReport {
        q,
        tower: TowerRepr::new(ctx, orientation(ctx)),
        clique_size: run.census.clique_size,
        census_count: run.census.count(),
        orbit_count: run.orbits.len(),
        expected_orbit_count: expected_orbits(q),
        orbit_sizes_sorted: sizes,
        max_clique_size: run.census.max_clique_size,
        max_clique_count: run.census.max_clique_count,
        expected_max_clique_count: group_order(ctx) / stabilizer(ctx, &sub).len() as u64,
    }
}

fn census_mismatches(r: &CensusReport) -> Vec<String> {
    let mut out = Vec::new();
    if r.orbit_count != r.expected_orbit_count {
        out.push(format!(
            "q={}: {} orbits, expected {}",
            r.q, r.orbit_count, r.expected_orbit_count
        ));
    }
    if r.max_clique_size != r.q as usize {
        out.push(format!("q={}: largest clique {}", r.q, r.max_clique_size));
    }
    if r.max_clique_count != r.expected_max_clique_count {
        out.push(format!(
            "q={}: {} maximum cliques, expected {}",
            r.q, r.max_clique_count, r.expected_max_clique_count
        ));
    }
    out
}

fn dump_path(base: &Path, q: u32, several: bool) -> PathBuf {
    if !several {
        return base.to_path_buf();
    }
    let stem = base
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match base.extension() {
        Some(ext) => format!("{stem}.q{q}.{}", ext.to_string_lossy()),
        None => format!("{stem}.q{q}"),
    };
    base.with_file_name(name)
}

fn census_cmd(cfg: &RunConfig) -> Result<Output, RunError> {
    let mut reports = Vec::new();
    let mut mismatches = Vec::new();
    for &q in &cfg.qs {
        let run = run_census(q, cfg)?;
        if let Some(base) = &cfg.dump_cliques {
            let mut s = String::new();
            for c in &run.census.cliques {
                s.push_str(&match cfg.format {
                    Format::Csv => clique_csv_line(c),
                    _ => clique_json_line(&run.setup.ctx, c),
                });
                s.push('\n');
            }
            std::fs::write(dump_path(base, q, cfg.qs.len() > 1), s)?;
        }
        let r = census_report(&run);
        mismatches.extend(census_mismatches(&r));
        reports.push(r);
    }
    let body = match cfg.format {
        Format::Json => json(&reports),
        Format::Csv => csv_rows(
            &reports
                .iter()
                .map(|r| CensusCsvRow {
                    q: r.q,
                    clique_size: r.clique_size,
                    census_count: r.census_count,
                    orbit_count: r.orbit_count,
                    expected_orbit_count: r.expected_orbit_count,
                    orbit_sizes_sorted: digits_u64(&r.orbit_sizes_sorted),
                    max_clique_size: r.max_clique_size,
                    max_clique_count: r.max_clique_count,
                    expected_max_clique_count: r.expected_max_clique_count,
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(
                    s,
                    "q={} clique_size={} cliques={} orbits={} (expected {}) orbit_sizes=[{}] max_clique={}x{}",
                    r.q,
                    r.clique_size,
                    r.census_count,
                    r.orbit_count,
                    r.expected_orbit_count,
                    digits_u64(&r.orbit_sizes_sorted),
                    r.max_clique_size,
                    r.max_clique_count
                );
            }
            s
        }
    };
    Ok(Output { body, mismatches })
}

fn digits_u64(v: &[u64]) -> String {
    v.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

// orbits

fn orbits(cfg: &RunConfig) -> Result<Output, RunError> {
    let mut records = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for &q in &cfg.qs {
        let run = run_census(q, cfg)?;
        let ctx = &run.setup.ctx;
        for o in &run.orbits {
            records.push(OrbitJson::new(ctx, o));
            rows.push(OrbitCsvRow::new(q, o));
            let _ = writeln!(
                text,
                "q={q} orbit={} stabilizer={} {} representative=[{}] digest={:016x}",
                o.orbit_size,
                o.stabilizer_order,
                o.stabilizer_type,
                indices(&o.representative),
                o.members_digest
            );
        }
    }
    let body = match cfg.format {
        Format::Json => json(&records),
        Format::Csv => csv_rows(&rows)?,
        Format::Text => text,
    };
    Ok(Output {
        body,
        mismatches: Vec::new(),
    })
}

// verify-paper

#[derive(Clone, Debug, Serialize)]
pub struct TableJson {
    pub map: &'static str,
    pub rows: usize,
    pub mismatched_rows: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CollinearJson {
    pub members: Vec<Elem>,
    pub line: LineRepr,
    pub listed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyJson {
    pub parameter_tuples: u64,
    pub distinct: u64,
    pub multiplicity: u64,
    pub explicit_orbit_size: u64,
    pub all_in_orbit: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub label: String,
    pub q: u32,
    pub h: Option<String>,
    pub recipe: String,
    pub clique: Vec<Elem>,
    pub clique_indices: Vec<usize>,
    pub size: usize,
    pub expected_size: usize,
    pub is_maximal_clique: bool,
    pub stabilizer_order: u64,
    pub expected_stabilizer_order: u64,
    pub stabilizer_type: String,
    pub expected_stabilizer_type: String,
    pub orbit_size: u64,
    pub expected_orbit_size: u64,
    pub named_maps_generate: bool,
    pub tables: Vec<TableJson>,
    pub collinear: Vec<CollinearJson>,
    pub remarks_found: usize,
    pub remarks_listed: usize,
    pub family: FamilyJson,
    pub all_match: bool,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusBlock {
    pub q: u32,
    pub tower: TowerRepr,
    pub clique_size: usize,
    pub orbit_count: usize,
    pub expected_orbit_count: usize,
    pub orbit_sizes_sorted: Vec<u64>,
    /// Each named construction is in the census, in an orbit of its own.
    pub named_in_distinct_orbits: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyPaperReport {
    pub constructions: Vec<ConstructionReport>,
    pub census: Vec<CensusBlock>,
}

#[derive(Serialize)]
struct ConstructionCsvRow {
    label: String,
    q: u32,
    h: String,
    recipe: String,
    size: usize,
    stabilizer_order: u64,
    stabilizer_type: String,
    orbit_size: u64,
    computed_size: usize,
    computed_maximal: bool,
    computed_stabilizer_order: u64,
    computed_stabilizer_type: String,
    computed_orbit_size: u64,
    tables_ok: bool,
    remarks: String,
    family_ok: bool,
    all_match: bool,
}

pub fn construction_report(ctx: &FieldCtx, r: &VerificationReport) -> ConstructionReport {
    let spec = r.label.spec();
    let unlisted = r.unlisted(ctx);
    let mut mismatches = Vec::new();
    let mut diff = |ok: bool, what: String| {
        if !ok {
            mismatches.push(format!("{}: {what}", r.label));
        }
    };
    diff(r.is_maximal_clique, "not a maximal clique".into());
    diff(
        r.size == r.expected.size,
        format!("size {} vs {}", r.size, r.expected.size),
    );
    diff(
        r.stabilizer_order == r.expected.stabilizer_order,
        format!(
            "stabilizer order {} vs {}",
            r.stabilizer_order, r.expected.stabilizer_order
        ),
    );
    diff(
        r.stabilizer_type == r.expected.stabilizer_type,
        format!(
            "stabilizer type {} vs {}",
            r.stabilizer_type, r.expected.stabilizer_type
        ),
    );
    diff(
        r.orbit_size == r.expected.orbit_size,
        format!("orbit size {} vs {}", r.orbit_size, r.expected.orbit_size),
    );
    diff(
        r.named_maps_generate,
        "listed maps do not generate the stabilizer".into(),
    );
    diff(r.tables_ok(), "action table rows differ".into());
    diff(
        r.remarks_ok(),
        format!("remarks found {}/{}", r.remarks_found, r.remarks_listed),
    );
    diff(r.family_ok(), format!("orbit family {:?}", r.family));
    ConstructionReport {
        label: r.label.to_string(),
        q: r.q,
        h: spec.h_text(),
        recipe: spec.recipe(),
        clique: elems(ctx, &r.clique),
        clique_indices: r.clique.indices().collect(),
        size: r.size,
        expected_size: r.expected.size,
        is_maximal_clique: r.is_maximal_clique,
        stabilizer_order: r.stabilizer_order,
        expected_stabilizer_order: r.expected.stabilizer_order,
        stabilizer_type: r.stabilizer_type.to_string(),
        expected_stabilizer_type: r.expected.stabilizer_type.to_string(),
        orbit_size: r.orbit_size,
        expected_orbit_size: r.expected.orbit_size,
        named_maps_generate: r.named_maps_generate,
        tables: r
            .tables
            .iter()
            .map(|t| TableJson {
                map: t.map,
                rows: t.rows,
                mismatched_rows: t.mismatched_rows.clone(),
            })
            .collect(),
        collinear: r
            .collinear
            .iter()
            .map(|c| CollinearJson {
                members: c.members.iter().map(|&x| elem(ctx, x)).collect(),
                line: LineRepr::new(ctx, &c.line),
                listed: !unlisted.contains(&c),
            })
            .collect(),
        remarks_found: r.remarks_found,
        remarks_listed: r.remarks_listed,
        family: FamilyJson {
            parameter_tuples: r.family.raw,
            distinct: r.family.distinct,
            multiplicity: spec.family.multiplicity,
            explicit_orbit_size: r.family.explicit_orbit_size,
            all_in_orbit: r.family.all_in_orbit,
        },
        all_match: r.all_match(),
        mismatches,
    }
}

fn verify_paper(cfg: &RunConfig) -> Result<Output, RunError> {
    let mut constructions = Vec::new();
    let mut blocks = Vec::new();
    let mut mismatches = Vec::new();
    for &q in &cfg.qs {
        let run = run_census(q, cfg)?;
        let ctx = &run.setup.ctx;
        let labels: Vec<Label> = match cfg.construction {
            Some(l) => vec![l],
            None => Label::for_q(q).collect(),
        };
        let mut hit = Vec::new();
        let mut in_census = true;
        for l in Label::for_q(q) {
            let (c, _) = construct(ctx, l).map_err(check)?;
            in_census &= run.census.cliques.binary_search(&c).is_ok();
            let rep = orbit_of(ctx, &c).swap_remove(0);
            hit.push(run.orbits.iter().position(|o| o.representative == rep));
        }
        let n = hit.len();
        let mut distinct: Vec<usize> = hit.iter().flatten().copied().collect();
        distinct.sort_unstable();
        distinct.dedup();
        let named_ok = in_census && distinct.len() == n;
        for l in labels {
            let v = verify_construction(ctx, &run.setup.graph, l).map_err(check)?;
            let r = construction_report(ctx, &v);
            mismatches.extend(r.mismatches.iter().cloned());
            constructions.push(r);
        }
        let rep = census_report(&run);
        mismatches.extend(census_mismatches(&rep));
        if !named_ok {
            mismatches.push(format!(
                "q={q}: named constructions do not fill distinct census orbits"
            ));
        }
        blocks.push(CensusBlock {
            q,
            tower: rep.tower,
            clique_size: rep.clique_size,
            orbit_count: rep.orbit_count,
            expected_orbit_count: rep.expected_orbit_count,
            orbit_sizes_sorted: rep.orbit_sizes_sorted,
            named_in_distinct_orbits: named_ok,
        });
    }
    let body = match cfg.format {
        Format::Json => json(&VerifyPaperReport {
            constructions,
            census: blocks,
        }),
        Format::Csv => csv_rows(
            &constructions
                .iter()
                .map(|r| ConstructionCsvRow {
                    label: r.label.clone(),
                    q: r.q,
                    h: r.h.clone().unwrap_or_else(|| "-".into()),
                    recipe: r.recipe.clone(),
                    size: r.expected_size,
                    stabilizer_order: r.expected_stabilizer_order,
                    stabilizer_type: r.expected_stabilizer_type.clone(),
                    orbit_size: r.expected_orbit_size,
                    computed_size: r.size,
                    computed_maximal: r.is_maximal_clique,
                    computed_stabilizer_order: r.stabilizer_order,
                    computed_stabilizer_type: r.stabilizer_type.clone(),
                    computed_orbit_size: r.orbit_size,
                    tables_ok: r.tables.iter().all(|t| t.mismatched_rows.is_empty()),
                    remarks: format!("{}/{}", r.remarks_found, r.remarks_listed),
                    family_ok: r.mismatches.iter().all(|m| !m.contains("orbit family")),
                    all_match: r.all_match,
                })
                .collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut s = String::new();
            for r in &constructions {
                let _ = writeln!(
                    s,
                    "{:<5} q={:<2} size={} maximal={} stabilizer={} {} orbit={} tables={}/{} remarks={}/{} family={}/{} {}",
                    r.label,
                    r.q,
                    r.size,
                    r.is_maximal_clique,
                    r.stabilizer_order,
                    r.stabilizer_type,
                    r.orbit_size,
                    r.tables.iter().filter(|t| t.mismatched_rows.is_empty()).count(),
                    r.tables.len(),
                    r.remarks_found,
                    r.remarks_listed,
                    r.family.distinct,
                    r.family.explicit_orbit_size,
                    if r.all_match { "ok".to_string() } else { format!("MISMATCH ({})", r.mismatches.join("; ")) }
                );
            }
            for b in &blocks {
                let _ = writeln!(
                    s,
                    "q={} clique_size={} orbits={} (expected {}) orbit_sizes=[{}] named_in_distinct_orbits={}",
                    b.q,
                    b.clique_size,
                    b.orbit_count,
                    b.expected_orbit_count,
                    digits_u64(&b.orbit_sizes_sorted),
                    b.named_in_distinct_orbits
                );
            }
            s
        }
    };
    Ok(Output { body, mismatches })
}

// table1

#[derive(Clone, Debug, Serialize)]
pub struct Table1Row {
    pub q: u32,
    pub clique_size: usize,
    pub census_count: usize,
    pub orbit_count: usize,
    pub expected_orbit_count: usize,
    pub matches: bool,
}

fn table1(cfg: &RunConfig) -> Result<Output, RunError> {
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for &q in &cfg.qs {
        let run = run_census(q, cfg)?;
        let r = census_report(&run);
        let m = census_mismatches(&r);
        rows.push(Table1Row {
            q,
            clique_size: r.clique_size,
            census_count: r.census_count,
            orbit_count: r.orbit_count,
            expected_orbit_count: r.expected_orbit_count,
            matches: m.is_empty(),
        });
        mismatches.extend(m);
    }
    let body = match cfg.format {
        Format::Json => json(&rows),
        Format::Csv => csv_rows(&rows)?,
        Format::Text => {
            let mut s = String::new();
            let _ = write!(s, "{:<18}", "q");
            for r in &rows {
                let _ = write!(s, "{:>8}", r.q);
            }
            let _ = write!(s, "\n{:<18}", "clique size");
            for r in &rows {
                let _ = write!(s, "{:>8}", r.clique_size);
            }
            let _ = write!(s, "\n{:<18}", "number of orbits");
            for r in &rows {
                let _ = write!(s, "{:>8}", r.orbit_count);
            }
            let _ = write!(s, "\n{:<18}", "cliques");
            for r in &rows {
                let _ = write!(s, "{:>8}", r.census_count);
            }
            s.push('\n');
            s
        }
    };
    Ok(Output { body, mismatches })
}

// dump-graph

#[derive(Serialize)]
struct GraphJson {
    q: u32,
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct EdgeRow {
    q: u32,
    u: usize,
    v: usize,
}

fn dump_graph(cfg: &RunConfig) -> Result<Output, RunError> {
    let mut graphs = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for &q in &cfg.qs {
        let Setup { graph, .. } = setup(q, cfg)?;
        let n = graph.n();
        let mut edges = Vec::new();
        let _ = writeln!(text, "# q={q} n={n}");
        for i in 0..n {
            for j in 0..i {
                text.push(if graph.adjacent(i, j) { '1' } else { '0' });
                if graph.adjacent(i, j) {
                    edges.push([j, i]);
                }
            }
            text.push('\n');
        }
        edges.sort_unstable();
        rows.extend(edges.iter().map(|&[u, v]| EdgeRow { q, u, v }));
        graphs.push(GraphJson { q, n, edges });
    }
    let body = match cfg.format {
        Format::Json => json(&graphs),
        Format::Csv => csv_rows(&rows)?,
        Format::Text => text,
    };
    Ok(Output {
        body,
        mismatches: Vec::new(),
    })
}
