//! Command implementations behind the `ringstore` binary. `run` returns the
//! rendered output so commands stay testable without spawning a process.

pub mod error;
pub mod format;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ringstore_core::construct::binomial;
use ringstore_core::{
    build_cauchy_mds, build_ed_matrix, cut_constraints, encode, execute_reconstruction,
    execute_repair, greedy_mds_columns, make_scheme, plan_reconstruction, plan_repair,
    reconstruct_lower_bound, sim_new, validate_ordss, CutConstraint, Endpoint, FieldSpec, Lcg,
    LinkTransfer, Scheme,
};

pub use error::CliError;
pub use format::{scheme_parse, scheme_serialize};

#[derive(Debug, Parser)]
#[command(
    name = "ringstore",
    version,
    about = "Build, validate, and simulate storage schemes for unidirectional ring networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// Binary matrix from the Euclidean division chain of (n*alpha, M).
    Ed,
    /// Systematic Cauchy MDS matrix over GF(q).
    MdsCauchy,
    /// Seeded greedy MDS column search over GF(q).
    MdsGreedy,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Construction::Ed => "ed",
            Construction::MdsCauchy => "mds-cauchy",
            Construction::MdsGreedy => "mds-greedy",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a scheme and write it to a file.
    Build {
        #[arg(long, value_enum)]
        construction: Construction,
        /// Number of storage nodes.
        #[arg(short = 'n')]
        nodes: usize,
        /// Per-node capacity in symbols.
        #[arg(short = 'a')]
        alpha: usize,
        /// Original data size in symbols.
        #[arg(short = 'M')]
        data_len: usize,
        /// Field modulus; ignored for ed (always 2), defaults to the
        /// smallest usable prime otherwise.
        #[arg(long)]
        q: Option<u64>,
        /// Seed for the greedy construction's column draws.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output scheme file.
        #[arg(short = 'o')]
        output: PathBuf,
    },
    /// Check the two window conditions and print the verdict.
    Validate { file: PathBuf },
    /// Print the bandwidth lower bounds and the cut-constraint table.
    Bounds {
        #[arg(short = 'n')]
        nodes: usize,
        #[arg(short = 'a')]
        alpha: usize,
        #[arg(short = 'M')]
        data_len: usize,
    },
    /// Plan and execute a reconstruction for one user.
    Reconstruct {
        file: PathBuf,
        /// User index (attached to the node with the same index).
        #[arg(long)]
        user: usize,
        /// Comma-separated data symbols; drawn from --seed when absent.
        #[arg(long, conflicts_with = "seed")]
        data: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Plan and execute the exact repair of one node.
    Repair {
        file: PathBuf,
        /// Failed node index.
        #[arg(long)]
        node: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run a scripted simulation and print the event log and stats.
    Simulate {
        file: PathBuf,
        #[arg(long)]
        seed: u64,
        /// Comma-separated operations, e.g. read:1,fail:2,read:3
        #[arg(long)]
        script: String,
    },
}

pub fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Build {
            construction,
            nodes,
            alpha,
            data_len,
            q,
            seed,
            output,
        } => build(construction, nodes, alpha, data_len, q, seed, &output),
        Command::Validate { file } => validate(&file),
        Command::Bounds {
            nodes,
            alpha,
            data_len,
        } => bounds(nodes, alpha, data_len),
        Command::Reconstruct {
            file,
            user,
            data,
            seed,
            json,
        } => reconstruct(&file, user, data.as_deref(), seed, json),
        Command::Repair {
            file,
            node,
            seed,
            json,
        } => repair(&file, node, seed, json),
        Command::Simulate { file, seed, script } => simulate(&file, seed, &script),
    }
}

fn build(
    construction: Construction,
    n: usize,
    alpha: usize,
    m: usize,
    q: Option<u64>,
    seed: u64,
    output: &Path,
) -> Result<String, CliError> {
    if n == 0 || alpha == 0 || m == 0 {
        return Err(CliError::BadArguments(
            "n, alpha and M must be positive".into(),
        ));
    }
    let n_cols = (n * alpha) as u64;
    let g = match construction {
        Construction::Ed => build_ed_matrix(m as u64, n_cols)?,
        Construction::MdsCauchy => {
            let field = match q {
                Some(q) => prime_field(q)?,
                None => smallest_prime_field(n_cols)?,
            };
            build_cauchy_mds(m as u64, n_cols, field)?
        }
        Construction::MdsGreedy => {
            let field = match q {
                Some(q) => prime_field(q)?,
                None => {
                    let bound = binomial(n_cols - 1, m as u64 - 1);
                    let min = u64::try_from(bound.saturating_add(1)).map_err(|_| {
                        CliError::BadArguments(format!(
                            "default field bound for greedy construction overflows ({bound} subsets)"
                        ))
                    })?;
                    smallest_prime_field(min)?
                }
            };
            greedy_mds_columns(m as u64, n_cols, field, seed)?
        }
    };
    let scheme = make_scheme(g, n, alpha)?;
    fs::write(output, scheme_serialize(&scheme)).map_err(|source| CliError::Io {
        path: output.display().to_string(),
        source,
    })?;
    Ok(format!(
        "wrote {} ({}, {})\n",
        output.display(),
        construction,
        params_line(&scheme),
    ))
}

fn validate(file: &Path) -> Result<String, CliError> {
    let scheme = load(file)?;
    let report = validate_ordss(&scheme);
    let mut out = format!("{}\nORDSS: {}\n", params_line(&scheme), report.is_ordss);
    if !report.failed_window_condition_i.is_empty() {
        out.push_str(&format!(
            "condition (i) failing start nodes: {}\n",
            join(&report.failed_window_condition_i)
        ));
    }
    if !report.failed_window_condition_ii.is_empty() {
        out.push_str(&format!(
            "condition (ii) failing start nodes: {}\n",
            join(&report.failed_window_condition_ii)
        ));
    }
    Ok(out)
}

fn bounds(n: usize, alpha: usize, m: usize) -> Result<String, CliError> {
    let reconstruct = reconstruct_lower_bound(n, alpha, m)?;
    let cuts = cut_constraints(n, alpha, m)?;
    let k = m.div_ceil(alpha);
    let gamma = m - (k - 1) * alpha;
    let mut out = format!(
        "n={n} alpha={alpha} M={m}\nk={k} gamma={gamma}\n\
         reconstruct lower bound: {reconstruct}\nrepair lower bound: {m}\n\
         cut constraints (user at N1):\n"
    );
    for cut in &cuts {
        out.push_str(&format!(
            "  {} -> {}: >= {}\n",
            Endpoint::Node(cut.from_node),
            cut_target(cut),
            cut.min_symbols
        ));
    }
    Ok(out)
}

fn reconstruct(
    file: &Path,
    user: usize,
    data: Option<&str>,
    seed: Option<u64>,
    json: bool,
) -> Result<String, CliError> {
    let scheme = load(file)?;
    let x = match data {
        Some(csv) => parse_data(csv, &scheme)?,
        None => seeded_data(&scheme, seed.unwrap_or(0)),
    };
    let stored = encode(&scheme, &x)?;
    let plan = plan_reconstruction(&scheme, user)?;
    let (recovered, bandwidth) = execute_reconstruction(&scheme, &stored, &plan)?;
    let exact = recovered == x;
    if !exact {
        return Err(CliError::Internal(
            "reconstruction did not return the encoded data".into(),
        ));
    }
    let lower = reconstruct_lower_bound(scheme.node_count(), scheme.alpha(), scheme.data_len())?;
    if json {
        let value = json!({
            "scheme": scheme_json(&scheme),
            "user": user,
            "hops": hops_json(plan.hops()),
            "bandwidth": bandwidth,
            "lower_bound": lower,
            "data": x,
            "recovered": recovered,
            "exact": exact,
        });
        return Ok(format!("{value:#}\n"));
    }
    let mut out = format!("scheme: {}\nuser: {user}\n", params_line(&scheme));
    out.push_str(&render_hops(plan.hops()));
    out.push_str(&format!("bandwidth: {bandwidth} (lower bound: {lower})\n"));
    out.push_str(&format!("data: {}\n", join(&x)));
    out.push_str(&format!("recovered: {}\n", join(&recovered)));
    out.push_str(&format!("exact: {exact}\n"));
    Ok(out)
}

fn repair(file: &Path, node: usize, seed: u64, json: bool) -> Result<String, CliError> {
    let scheme = load(file)?;
    let x = seeded_data(&scheme, seed);
    let stored = encode(&scheme, &x)?;
    let plan = plan_repair(&scheme, node)?;
    let (repaired, bandwidth) = execute_repair(&scheme, &stored, &plan)?;
    let original = stored.node(node).to_vec();
    let exact = repaired == original;
    if !exact {
        return Err(CliError::Internal(
            "repair did not reproduce the stored symbols".into(),
        ));
    }
    let lower = scheme.data_len() as u64;
    if json {
        let value = json!({
            "scheme": scheme_json(&scheme),
            "node": node,
            "hops": hops_json(plan.hops()),
            "bandwidth": bandwidth,
            "lower_bound": lower,
            "stored": original,
            "repaired": repaired,
            "exact": exact,
        });
        return Ok(format!("{value:#}\n"));
    }
    let mut out = format!("scheme: {}\nfailed node: {node}\n", params_line(&scheme));
    out.push_str(&render_hops(plan.hops()));
    out.push_str(&format!("bandwidth: {bandwidth} (lower bound: {lower})\n"));
    out.push_str(&format!("stored: {}\n", join(&original)));
    out.push_str(&format!("repaired: {}\n", join(&repaired)));
    out.push_str(&format!("exact: {exact}\n"));
    Ok(out)
}

fn simulate(file: &Path, seed: u64, script: &str) -> Result<String, CliError> {
    let scheme = load(file)?;
    let ops = parse_script(script)?;
    let mut sim = sim_new(scheme, seed)?;
    for op in ops {
        match op {
            ScriptOp::Read(user) => {
                sim.user_read(user)?;
            }
            ScriptOp::Fail(node) => {
                sim.fail_and_repair(node)?;
            }
        }
    }
    let mut out = format!("scheme: {}\nseed: {seed}\n", params_line(sim.scheme()));
    out.push_str("events:\n");
    for (i, e) in sim.events().iter().enumerate() {
        out.push_str(&format!(
            "  {} {} node={} bandwidth={} success={}\n",
            i + 1,
            e.kind,
            e.node_or_user,
            e.bandwidth,
            e.success
        ));
    }
    let stats = sim.stats();
    out.push_str("link totals:\n");
    for (from, to, total) in &stats.per_link {
        out.push_str(&format!("  {from} -> {to}: {total}\n"));
    }
    out.push_str("kind totals:\n");
    for (kind, count, bandwidth) in &stats.per_kind {
        out.push_str(&format!("  {kind}: count={count} bandwidth={bandwidth}\n"));
    }
    out.push_str(&format!("events total: {}\n", stats.event_count));
    Ok(out)
}

enum ScriptOp {
    Read(usize),
    Fail(usize),
}

fn parse_script(script: &str) -> Result<Vec<ScriptOp>, CliError> {
    script
        .split(',')
        .map(|op| {
            let (kind, index) = op.split_once(':').ok_or_else(|| {
                CliError::BadArguments(format!("bad op '{op}', expected read:<i> or fail:<i>"))
            })?;
            let index: usize = index
                .parse()
                .map_err(|_| CliError::BadArguments(format!("bad index in op '{op}'")))?;
            match kind {
                "read" => Ok(ScriptOp::Read(index)),
                "fail" => Ok(ScriptOp::Fail(index)),
                other => Err(CliError::BadArguments(format!("unknown op '{other}'"))),
            }
        })
        .collect()
}

fn load(file: &Path) -> Result<Scheme, CliError> {
    let text = fs::read_to_string(file).map_err(|source| CliError::Io {
        path: file.display().to_string(),
        source,
    })?;
    scheme_parse(&text)
}

fn prime_field(q: u64) -> Result<FieldSpec, CliError> {
    FieldSpec::new(q).map_err(|e| CliError::BadArguments(format!("bad field modulus: {e}")))
}

fn smallest_prime_field(min: u64) -> Result<FieldSpec, CliError> {
    FieldSpec::smallest_prime_at_least(min)
        .map_err(|e| CliError::BadArguments(format!("no usable field: {e}")))
}

fn parse_data(csv: &str, scheme: &Scheme) -> Result<Vec<u64>, CliError> {
    let values: Vec<u64> = csv
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| CliError::BadArguments(format!("bad data symbol '{t}'")))
        })
        .collect::<Result<_, _>>()?;
    if values.len() != scheme.data_len() {
        return Err(CliError::BadArguments(format!(
            "expected {} data symbols, got {}",
            scheme.data_len(),
            values.len()
        )));
    }
    let q = scheme.field().prime();
    if let Some(bad) = values.iter().find(|&&v| v >= q) {
        return Err(CliError::BadArguments(format!(
            "data symbol {bad} is outside [0, {q})"
        )));
    }
    Ok(values)
}

fn seeded_data(scheme: &Scheme, seed: u64) -> Vec<u64> {
    Lcg::new(seed).vector_mod(scheme.field().prime(), scheme.data_len())
}

fn params_line(s: &Scheme) -> String {
    format!(
        "n={} alpha={} M={} q={}",
        s.node_count(),
        s.alpha(),
        s.data_len(),
        s.field().prime()
    )
}

fn cut_target(cut: &CutConstraint) -> Endpoint {
    match cut.to_node {
        Some(node) => Endpoint::Node(node),
        None => Endpoint::User(1),
    }
}

fn render_hops(hops: &[LinkTransfer]) -> String {
    let mut out = String::from("hops:\n");
    for hop in hops {
        out.push_str(&format!("  {} -> {}: {} symbols\n", hop.from, hop.to, hop.size()));
        for vector in &hop.payload {
            out.push_str(&format!("    [{}]\n", join(vector)));
        }
    }
    out
}

fn scheme_json(s: &Scheme) -> serde_json::Value {
    json!({
        "n": s.node_count(),
        "alpha": s.alpha(),
        "M": s.data_len(),
        "q": s.field().prime(),
    })
}

fn hops_json(hops: &[LinkTransfer]) -> serde_json::Value {
    json!(hops
        .iter()
        .map(|hop| {
            json!({
                "from": hop.from.to_string(),
                "to": hop.to.to_string(),
                "size": hop.size(),
                "payload": hop.payload,
            })
        })
        .collect::<Vec<_>>())
}

fn join<T: fmt::Display>(values: &[T]) -> String {
    values
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
