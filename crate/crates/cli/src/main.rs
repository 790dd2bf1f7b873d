//! Command-line front-end: parse field/group/idempotent JSON, run orbit,
//! splitting, classification and code analyses, and print table or JSON
//! reports.
//!
//! Exit codes: 0 success, 1 computation error, 2 parse/input error,
//! 3 budget exceeded (a bounds-only report is still printed where one
//! exists), 4 a required hypothesis assertion is absent.

use clap::{Args, Parser, Subcommand};
use ecid::algebra::AlgebraElement;
use ecid::classify::{self, ClassificationReport, ClassifyError, WedderburnData};
use ecid::codes::{self, AnalysisContext, CodeReport, CodesError, DistanceOutcome};
use ecid::cyclotomic;
use ecid::field::FiniteField;
use ecid::group::Group;
use ecid::json::{FieldSpec, GroupSpec, IdempotentSpec, SpecError};
use ecid::Ratio;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

mod render;

#[derive(Parser)]
#[command(
    name = "ecid",
    version,
    about = "Exact analysis of group algebras over finite fields and their idempotent codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Field spec: inline JSON or a file path, e.g. '{"p":5,"degree":2,"modulus":[2,4,1]}'
    #[arg(long)]
    field: String,
    /// Group spec: inline JSON or a file path, e.g. '{"abelian":[2,16,9,3]}'
    #[arg(long)]
    group: String,
    /// Emit JSON instead of the table rendering
    #[arg(long)]
    json: bool,
    /// Emit the table rendering (the default)
    #[arg(long, conflicts_with = "json")]
    table: bool,
}

#[derive(Subcommand)]
enum Command {
    /// q-orbit data of an abelian group: orbit sizes t_g, their lcm l, and
    /// the maximal-order witness
    Orbits {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Splitting-field tests: the full equivalence for abelian groups
    /// (with --t), the necessary condition exp(H/H') | q - 1 otherwise
    Splitting {
        #[command(flatten)]
        io: IoArgs,
        /// Extension index t of the field GF(q^t) to test
        #[arg(long)]
        t: Option<u64>,
    },
    /// Minimal-ECD / ECID classification of the group algebra
    Classify {
        #[command(flatten)]
        io: IoArgs,
        /// Wedderburn data: inline JSON or a file path
        #[arg(long)]
        wedderburn: Option<String>,
        /// Assert that the field splits the group (checked against the
        /// necessary condition)
        #[arg(long)]
        assert_splitting: bool,
        /// In the modular case, run the exhaustive idempotent census
        #[arg(long)]
        modular_exhaustive: bool,
        /// Candidate budget for the exhaustive census
        #[arg(long, default_value_t = codes::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Component arithmetic: gamma, b0, the square-root window, and the
    /// square-sum solver
    Wedderburn {
        /// Non-commutative dimension gamma = |H| - [H:H']
        #[arg(long)]
        gamma: Option<u64>,
        /// Number of non-commutative components
        #[arg(long)]
        s: Option<u64>,
        /// Field spec (needed when deriving gamma and s from a group)
        #[arg(long)]
        field: Option<String>,
        /// Group spec to derive gamma (and s, over a splitting field) from
        #[arg(long)]
        group: Option<String>,
        /// Assert the field splits the group; required to derive s from
        /// the conjugacy class count
        #[arg(long)]
        assert_splitting: bool,
        /// Enumerate the multisets {n_j} with sum of squares gamma
        #[arg(long)]
        solve: bool,
        /// Emit JSON instead of the table rendering
        #[arg(long)]
        json: bool,
    },
    /// Dimension, distance and bound reports for idempotent-generated codes
    Code {
        #[command(flatten)]
        io: IoArgs,
        /// Idempotents: inline JSON or file paths
        #[arg(long, alias = "idempotent", num_args = 1..)]
        idempotents: Vec<String>,
        /// Which index subsets to analyze: "all", or lists like "1,2;1,3"
        /// (1-based); default: each idempotent separately
        #[arg(long)]
        subsets: Option<String>,
        #[arg(long)]
        wedderburn: Option<String>,
        #[arg(long)]
        assert_splitting: bool,
        /// Codeword budget for exact distance enumeration
        #[arg(long, default_value_t = codes::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exhaustive idempotent census with dimensions and primitivity flags
    Search {
        #[command(flatten)]
        io: IoArgs,
        /// Candidate budget (the census enumerates q^|G| vectors)
        #[arg(long, default_value_t = codes::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Bound package for one idempotent, without distance enumeration
    Bounds {
        #[command(flatten)]
        io: IoArgs,
        /// The idempotent: inline JSON or a file path
        #[arg(long)]
        idempotent: String,
        #[arg(long)]
        wedderburn: Option<String>,
    },
}

enum CliError {
    Parse(String),
    Budget(String),
    AssertionRequired(String),
    Other(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Budget(_) => 3,
            CliError::AssertionRequired(_) => 4,
            CliError::Other(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m)
            | CliError::Budget(m)
            | CliError::AssertionRequired(m)
            | CliError::Other(m) => m,
        }
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> CliError {
        CliError::Parse(e.to_string())
    }
}

impl From<CodesError> for CliError {
    fn from(e: CodesError) -> CliError {
        match e {
            CodesError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Other(e.to_string()),
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> CliError {
        match e {
            ClassifyError::Codes(CodesError::BudgetExceeded { .. }) => {
                CliError::Budget(e.to_string())
            }
            _ => CliError::Other(e.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.exit_code());
        }
    }
}

/// Inline JSON (starts with '{') or the content of the named file.
fn read_spec(arg: &str) -> Result<String, CliError> {
    let trimmed = arg.trim();
    if trimmed.starts_with('{') {
        Ok(trimmed.to_string())
    } else {
        std::fs::read_to_string(trimmed)
            .map_err(|e| CliError::Parse(format!("cannot read {trimmed}: {e}")))
    }
}

fn load_field(arg: &str) -> Result<FiniteField, CliError> {
    Ok(FieldSpec::parse(&read_spec(arg)?)?.build()?)
}

fn load_group(arg: &str) -> Result<Group, CliError> {
    Ok(GroupSpec::parse(&read_spec(arg)?)?.build()?)
}

fn load_idempotent(
    arg: &str,
    field: &FiniteField,
    group: &Group,
) -> Result<AlgebraElement, CliError> {
    Ok(IdempotentSpec::parse(&read_spec(arg)?)?.build(field, group)?)
}

fn load_wedderburn(arg: &Option<String>) -> Result<Option<WedderburnData>, CliError> {
    match arg {
        None => Ok(None),
        Some(s) => Ok(Some(ecid::json::parse_wedderburn(&read_spec(s)?)?)),
    }
}

fn emit<T: Serialize>(json: bool, value: &T, table: String) -> Result<(), CliError> {
    if json {
        let text = serde_json::to_string_pretty(value)
            .map_err(|e| CliError::Other(e.to_string()))?;
        println!("{text}");
    } else {
        print!("{table}");
    }
    Ok(())
}

#[derive(Serialize)]
struct GroupSummary {
    order: usize,
    abelian: bool,
    exponent: u64,
    /// "exhaustive", or "sampled(seed=0x...)" for large tables
    associativity_check: String,
}

fn group_summary(group: &Group) -> GroupSummary {
    GroupSummary {
        order: group.order(),
        abelian: group.is_abelian(),
        exponent: group.exponent().0,
        associativity_check: match group.associativity_check() {
            ecid::group::AssocCheck::ByConstruction => "by-construction".to_string(),
            ecid::group::AssocCheck::Exhaustive => "exhaustive".to_string(),
            ecid::group::AssocCheck::Sampled(seed) => format!("sampled(seed=0x{seed:X})"),
        },
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Orbits { io } => cmd_orbits(io),
        Command::Splitting { io, t } => cmd_splitting(io, t),
        Command::Classify {
            io,
            wedderburn,
            assert_splitting,
            modular_exhaustive,
            budget,
        } => cmd_classify(io, wedderburn, assert_splitting, modular_exhaustive, budget),
        Command::Wedderburn {
            gamma,
            s,
            field,
            group,
            assert_splitting,
            solve,
            json,
        } => cmd_wedderburn(gamma, s, field, group, assert_splitting, solve, json),
        Command::Code {
            io,
            idempotents,
            subsets,
            wedderburn,
            assert_splitting,
            budget,
        } => cmd_code(io, idempotents, subsets, wedderburn, assert_splitting, budget),
        Command::Search { io, budget } => cmd_search(io, budget),
        Command::Bounds {
            io,
            idempotent,
            wedderburn,
        } => cmd_bounds(io, idempotent, wedderburn),
    }
}

// ---------------------------------------------------------------------------
// orbits

#[derive(Serialize)]
struct OrbitsReport {
    field: String,
    group: GroupSummary,
    witness: usize,
    witness_label: String,
    t_w: u64,
    l: u64,
    orbit_count: usize,
    orbit_sizes: Vec<u64>,
    orbits: Vec<Vec<usize>>,
    t: Vec<u64>,
    generator_class_sizes: Vec<u64>,
}

fn cmd_orbits(io: IoArgs) -> Result<(), CliError> {
    let field = load_field(&io.field)?;
    let group = load_group(&io.group)?;
    let data = cyclotomic::qorbits(&group, field.prime_power())
        .map_err(|e| CliError::Other(e.to_string()))?;
    let report = OrbitsReport {
        field: field.to_string(),
        group: group_summary(&group),
        witness: data.w,
        witness_label: group.label(data.w).to_string(),
        t_w: data.t_w,
        l: data.l,
        orbit_count: data.orbits.len(),
        orbit_sizes: data.orbits.iter().map(|o| o.len() as u64).collect(),
        orbits: data.orbits.clone(),
        t: data.t.clone(),
        generator_class_sizes: data.gen_class_sizes.clone(),
    };
    let table = render::orbits_table(&report, &group);
    emit(io.json, &report, table)
}

// ---------------------------------------------------------------------------
// splitting

#[derive(Serialize)]
struct SplittingReport {
    field: String,
    group: GroupSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    splitting: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exp_divides_qt_minus_1: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tw_divides_t: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_w: Option<u64>,
    necessary_condition: bool,
    quotient_exponent: u64,
}

fn cmd_splitting(io: IoArgs, t: Option<u64>) -> Result<(), CliError> {
    let field = load_field(&io.field)?;
    let group = load_group(&io.group)?;
    let q = field.prime_power();
    let necessary = cyclotomic::splitting_necessary_condition(&group, q)
        .map_err(|e| CliError::Other(e.to_string()))?;
    let quotient_exponent = if group.is_abelian() {
        group.exponent().0
    } else {
        group.commutator_subgroup().1.exponent().0
    };
    let mut report = SplittingReport {
        field: field.to_string(),
        group: group_summary(&group),
        t,
        splitting: None,
        exp_divides_qt_minus_1: None,
        tw_divides_t: None,
        t_w: None,
        necessary_condition: necessary,
        quotient_exponent,
    };
    if let Some(t) = t {
        let evidence = cyclotomic::is_splitting_field(&group, q, t)
            .map_err(|e| CliError::Other(e.to_string()))?;
        report.splitting = Some(evidence.verdict);
        report.exp_divides_qt_minus_1 = Some(evidence.exp_divides_qt_minus_1);
        report.tw_divides_t = Some(evidence.tw_divides_t);
        report.t_w = Some(evidence.t_w);
    }
    let table = render::splitting_table(&report);
    emit(io.json, &report, table)
}

// ---------------------------------------------------------------------------
// classify

#[derive(Serialize)]
struct CensusSummary {
    idempotents: usize,
    primitive: usize,
    dims: BTreeMap<u64, usize>,
}

#[derive(Serialize)]
struct ClassifyOutput {
    field: String,
    group: GroupSummary,
    report: ClassificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    census: Option<CensusSummary>,
}

fn census_summary(search: &codes::IdempotentSearch) -> CensusSummary {
    let mut dims = BTreeMap::new();
    for e in &search.entries {
        *dims.entry(e.dim).or_insert(0) += 1;
    }
    CensusSummary {
        idempotents: search.entries.len(),
        primitive: search.primitives().count(),
        dims,
    }
}

fn cmd_classify(
    io: IoArgs,
    wedderburn: Option<String>,
    assert_splitting: bool,
    modular_exhaustive: bool,
    budget: u64,
) -> Result<(), CliError> {
    let field = load_field(&io.field)?;
    let group = load_group(&io.group)?;
    let wd = load_wedderburn(&wedderburn)?;
    let modular = group.order() as u64 % field.p() == 0;
    let (report, census) = if modular {
        if modular_exhaustive {
            let result = classify::classify_modular_exhaustive(&group, &field, budget)?;
            let census = census_summary(&result.search);
            (result.report, Some(census))
        } else {
            (classify::classify_modular_necessary(&group, &field)?, None)
        }
    } else if group.is_abelian() {
        (classify::classify_abelian_semisimple(&group, &field)?, None)
    } else {
        (
            classify::classify_nonabelian_semisimple(&group, &field, wd.as_ref(), assert_splitting)?,
            None,
        )
    };
    let output = ClassifyOutput {
        field: field.to_string(),
        group: group_summary(&group),
        report,
        census,
    };
    let table = render::classify_table(&output);
    emit(io.json, &output, table)
}

// ---------------------------------------------------------------------------
// wedderburn

#[derive(Serialize)]
struct WedderburnOutput {
    gamma: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    b0: Option<u64>,
    sqrt_gamma_floor: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sqrt_gamma_over_s_ceil: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    solutions: Option<Vec<Vec<u64>>>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_wedderburn(
    gamma: Option<u64>,
    s: Option<u64>,
    field: Option<String>,
    group: Option<String>,
    assert_splitting: bool,
    solve: bool,
    json: bool,
) -> Result<(), CliError> {
    let (gamma, s) = match (gamma, &group) {
        (Some(g), _) => (g, s),
        (None, Some(spec)) => {
            let group = load_group(spec)?;
            if group.is_abelian() {
                return Err(CliError::Other(
                    "the non-commutative part of an abelian group algebra is empty".into(),
                ));
            }
            let (_, quotient) = group.commutator_subgroup();
            let gamma = group.order() as u64 - quotient.order() as u64;
            let s = match s {
                Some(s) => Some(s),
                None => {
                    // deriving s from the class count assumes a splitting field
                    if !assert_splitting {
                        return Err(CliError::AssertionRequired(
                            "deriving the component count from conjugacy classes needs \
                             --assert-splitting"
                                .into(),
                        ));
                    }
                    let f = field.as_ref().ok_or_else(|| {
                        CliError::Parse("--field is required with --assert-splitting".into())
                    })?;
                    let f = load_field(f)?;
                    let qexp = quotient.exponent().0;
                    if (f.q() - 1) % qexp != 0 {
                        return Err(CliError::Other(
                            "the splitting assertion contradicts exp(H/H') | q - 1".into(),
                        ));
                    }
                    Some(group.conjugacy_class_count() as u64 - quotient.order() as u64)
                }
            };
            (gamma, s)
        }
        (None, None) => {
            return Err(CliError::Parse("either --gamma or --group is required".into()))
        }
    };
    let solutions = if solve {
        match s {
            Some(s) => Some(classify::wedderburn_solver(gamma, s)),
            None => {
                return Err(CliError::Parse(
                    "--solve needs --s (or a group with --assert-splitting)".into(),
                ))
            }
        }
    } else {
        None
    };
    let output = WedderburnOutput {
        gamma,
        b0: classify::b0(gamma).ok(),
        sqrt_gamma_floor: classify::sqrt_gamma_floor(gamma),
        s,
        sqrt_gamma_over_s_ceil: s.map(|s| classify::sqrt_gamma_over_s_ceil(gamma, s)),
        solution_count: solutions.as_ref().map(|v| v.len()),
        solutions,
    };
    let table = render::wedderburn_table(&output);
    emit(json, &output, table)
}

// ---------------------------------------------------------------------------
// code

#[derive(Serialize)]
struct CodeRow {
    subset: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda1: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order_times_lambda1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim_formula: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order_over_dim: Option<Ratio>,
    report: CodeReport,
}

#[derive(Serialize)]
struct CodeOutput {
    field: String,
    group: GroupSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    classification: Option<ClassificationReport>,
    rows: Vec<CodeRow>,
}

fn parse_subsets(spec: &Option<String>, k: usize) -> Result<Vec<Vec<usize>>, CliError> {
    match spec.as_deref() {
        None => Ok((0..k).map(|i| vec![i]).collect()),
        Some("all") => {
            if k > 16 {
                return Err(CliError::Parse(
                    "refusing to enumerate subsets of more than 16 idempotents".into(),
                ));
            }
            Ok((1..(1u32 << k))
                .map(|mask| (0..k).filter(|i| mask & (1 << i) != 0).collect())
                .collect())
        }
        Some(lists) => {
            let mut out = Vec::new();
            for part in lists.split(';') {
                let mut subset = Vec::new();
                for idx in part.split(',') {
                    let i: usize = idx
                        .trim()
                        .parse()
                        .map_err(|_| CliError::Parse(format!("bad subset index {idx:?}")))?;
                    if i == 0 || i > k {
                        return Err(CliError::Parse(format!(
                            "subset index {i} out of range 1..={k}"
                        )));
                    }
                    subset.push(i - 1);
                }
                subset.sort_unstable();
                subset.dedup();
                out.push(subset);
            }
            Ok(out)
        }
    }
    .map(|mut subsets: Vec<Vec<usize>>| {
        subsets.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        subsets
    })
}

fn subset_label(subset: &[usize]) -> String {
    let parts: Vec<String> = subset.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn cmd_code(
    io: IoArgs,
    idempotents: Vec<String>,
    subsets: Option<String>,
    wedderburn: Option<String>,
    assert_splitting: bool,
    budget: u64,
) -> Result<(), CliError> {
    if idempotents.is_empty() {
        return Err(CliError::Parse("at least one --idempotents entry is required".into()));
    }
    let field = load_field(&io.field)?;
    let group = load_group(&io.group)?;
    let wd = load_wedderburn(&wedderburn)?;
    let gens: Vec<AlgebraElement> = idempotents
        .iter()
        .map(|spec| load_idempotent(spec, &field, &group))
        .collect::<Result<_, _>>()?;
    let n = group.order() as u64;
    let p = field.p();
    let classification = if n % p != 0 {
        Some(if group.is_abelian() {
            classify::classify_abelian_semisimple(&group, &field)?
        } else {
            classify::classify_nonabelian_semisimple(&group, &field, wd.as_ref(), assert_splitting)?
        })
    } else {
        None
    };
    let subsets = parse_subsets(&subsets, gens.len())?;
    // Wedderburn data derived during classification serves the analysis too.
    let effective_wd = wd.or_else(|| {
        classification
            .as_ref()
            .and_then(|c| c.wedderburn.clone())
    });
    let actx = AnalysisContext {
        classification: classification.as_ref(),
        wedderburn: effective_wd.as_ref(),
        budget,
        ..Default::default()
    };
    let mut rows = Vec::new();
    let mut any_budget_exceeded = false;
    for subset in &subsets {
        let mut sum = AlgebraElement::zero(&field, &group);
        for &i in subset {
            sum = sum.add(&gens[i]).map_err(|e| CliError::Other(e.to_string()))?;
        }
        let report = codes::analyze_code(&sum, &actx)?;
        if report.distance == DistanceOutcome::BoundsOnly {
            any_budget_exceeded = true;
        }
        let (lambda1, order_times_lambda1, dim_formula) = if subset.len() == 1 {
            let lam = sum.lambda1();
            let prod = lam.prime_subfield_value().map(|v| n * v);
            (
                Some(lam.to_string()),
                prod,
                prod.map(|x| ecid::algebra::dimension_formula_d(x, p)),
            )
        } else {
            (None, None, None)
        };
        rows.push(CodeRow {
            subset: subset_label(subset),
            lambda1,
            order_times_lambda1,
            dim_formula,
            order_over_dim: report.dim.filter(|&d| d > 0).map(|d| Ratio::new(n, d)),
            report,
        });
    }
    let output = CodeOutput {
        field: field.to_string(),
        group: group_summary(&group),
        classification,
        rows,
    };
    let table = render::code_table(&output);
    emit(io.json, &output, table)?;
    if any_budget_exceeded {
        return Err(CliError::Budget(
            "one or more distance enumerations exceeded the budget; bounds-only rows were reported"
                .into(),
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// search

#[derive(Serialize)]
struct SearchRow {
    element: String,
    coeffs: Vec<Vec<u64>>,
    dim: u64,
    primitive: bool,
}

#[derive(Serialize)]
struct SearchOutput {
    field: String,
    group: GroupSummary,
    census: CensusSummary,
    entries: Vec<SearchRow>,
}

fn cmd_search(io: IoArgs, budget: u64) -> Result<(), CliError> {
    let field = load_field(&io.field)?;
    let group = load_group(&io.group)?;
    let search = codes::idempotent_search(&group, &field, budget)?;
    let entries = search
        .entries
        .iter()
        .map(|e| SearchRow {
            element: e.element.to_string(),
            coeffs: e
                .element
                .coeff_elements()
                .iter()
                .map(|c| c.coeffs().to_vec())
                .collect(),
            dim: e.dim,
            primitive: e.primitive,
        })
        .collect();
    let output = SearchOutput {
        field: field.to_string(),
        group: group_summary(&group),
        census: census_summary(&search),
        entries,
    };
    let table = render::search_table(&output);
    emit(io.json, &output, table)
}

// ---------------------------------------------------------------------------
// bounds

#[derive(Serialize)]
struct BoundsOutput {
    field: String,
    group: GroupSummary,
    idempotent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<u64>,
    bounds: Vec<codes::Bound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    congruence: Option<codes::CongruenceSet>,
}

fn cmd_bounds(io: IoArgs, idempotent: String, wedderburn: Option<String>) -> Result<(), CliError> {
    let field = load_field(&io.field)?;
    let group = load_group(&io.group)?;
    let wd = load_wedderburn(&wedderburn)?;
    let e = load_idempotent(&idempotent, &field, &group)?;
    let is_idem = e.is_idempotent();
    let dim = Some(e.ideal_dimension() as u64);
    let mut bounds = Vec::new();
    if let Some(d) = dim.filter(|&d| d > 0) {
        bounds.push(codes::Bound {
            value: Ratio::new(group.order() as u64, d),
            rule: "order-over-dim".into(),
            assumes_primitive: false,
            conditions: vec![],
        });
    }
    let semisimple = group.order() as u64 % field.p() != 0;
    if semisimple && group.is_abelian() {
        bounds.extend(codes::abelian_bounds(&e)?);
    }
    if semisimple && !group.is_abelian() {
        if let Some(wd) = &wd {
            // threshold for the non-primitivity cut: primitive idempotents
            // satisfy d >= |H|/max(t_w, max n_j d_j)
            let (_, quotient) = group.commutator_subgroup();
            let t_w = ecid::cyclotomic::witness_orbit_size(
                quotient.exponent().0,
                field.prime_power(),
            );
            let a = t_w.max(wd.max_component_dim());
            bounds.push(codes::Bound {
                value: Ratio::new(group.order() as u64, a),
                rule: "order-over-component-max".into(),
                assumes_primitive: true,
                conditions: vec!["supplied decomposition data".into()],
            });
        }
    }
    let congruence = if is_idem && !e.is_zero() && !e.is_one() {
        Some(codes::dimension_congruence_set(&e)?)
    } else {
        None
    };
    let output = BoundsOutput {
        field: field.to_string(),
        group: group_summary(&group),
        idempotent: is_idem,
        dim,
        bounds,
        congruence,
    };
    let table = render::bounds_table(&output);
    emit(io.json, &output, table)
}

// shared with render
pub(crate) fn fmt_kv(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<26} {value}");
}
