mod inputs;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use greedyconv::arith::factorize;
use greedyconv::bfile::compare_bfile;
use greedyconv::density::{
    default_checkpoints, density_valuation_class, density_valuation_product, empirical_density,
};
use greedyconv::experiments::{primitive_gap_series, run_sift_search_d4};
use greedyconv::ring::Convolution;
use greedyconv::sift::{oracle_p_pk, oracle_pk, oracle_pq, oracle_valuation_parity, PairSet};
use greedyconv::suite;
use greedyconv::tables::{format_part, table_emit, TableName, TableParams};
use greedyconv::{ssift, GreedyTable};
use serde_json::{json, Value};

use inputs::{parse_function, parse_list, parse_rule};
use output::{emit, resolve_output, Format, Report};

#[derive(Parser)]
#[command(
    name = "greedyconv",
    version,
    about = "Greedy regular convolutions, selective sifting and densities"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Directory for relative --output paths.
    #[arg(
        long,
        env = "GREEDYCONV_OUTPUT_DIR",
        global = true,
        hide_env_values = true
    )]
    output_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Greedy partition of length D: parts, primitives, heights or gaps.
    Greedy(GreedyArgs),
    /// Selective sifting of 1..=N by a finite set.
    Sift(SiftArgs),
    /// Convolution ring operations for a regular convolution.
    Conv(ConvArgs),
    /// Exact valuation-class densities or empirical densities.
    Density(DensityArgs),
    /// Run the acceptance checks.
    Verify(VerifyArgs),
    /// Greedy sifting-set search for the length-4 rank-4 primitives.
    #[command(name = "conjecture-d4")]
    ConjectureD4 {
        #[arg(long, default_value_t = 4000)]
        n: u64,
    },
    /// Emit one of the standard tables.
    Table(TableArgs),
    /// Compare a computed sequence with a b-file.
    #[command(name = "bfile-compare")]
    BfileCompare(BfileArgs),
}

#[derive(Args)]
struct GreedyArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n: u64,
    /// Parts whose leader is at most N/D (default view).
    #[arg(long, conflicts_with_all = ["primitives", "heights", "gaps"])]
    parts: bool,
    #[arg(long, conflicts_with_all = ["heights", "gaps"])]
    primitives: bool,
    #[arg(long, conflicts_with = "gaps")]
    heights: bool,
    #[arg(long)]
    gaps: bool,
    /// Restrict primitives or gaps to this rank.
    #[arg(long)]
    rank: Option<usize>,
    /// Stop after this many rows.
    #[arg(long)]
    count: Option<usize>,
}

#[derive(Args)]
struct SiftArgs {
    /// Comma-separated sifting set, e.g. 2,3,6.
    #[arg(long)]
    set: String,
    #[arg(long)]
    n: u64,
    /// Compare against the closed form for this shape of set.
    #[arg(long)]
    check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvOp {
    Convolve,
    Mobius,
    Axioms,
    Divisors,
}

#[derive(Args)]
struct ConvArgs {
    /// dirichlet, unitary, ternary, greedy:D or parts:1,2/3,6
    #[arg(long)]
    rule: String,
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value_t = ConvOp::Convolve)]
    op: ConvOp,
    /// zeta, id, mu, e:K, values:1,0,-1/2 or file:PATH
    #[arg(long)]
    f: Option<String>,
    #[arg(long)]
    g: Option<String>,
}

#[derive(Args)]
struct DensityArgs {
    /// Exact density of {n : val_p(n) = res mod m}.
    #[arg(long, conflicts_with = "empirical", requires_all = ["p", "modulus", "res"])]
    closed: bool,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long = "mod")]
    modulus: Option<u64>,
    #[arg(long)]
    res: Option<u64>,
    /// Second prime for a joint class.
    #[arg(long, requires_all = ["q_mod", "q_res"])]
    q: Option<u64>,
    #[arg(long)]
    q_mod: Option<u64>,
    #[arg(long)]
    q_res: Option<u64>,
    /// Counting density of greedy primitives (--d) or of a sifted set (--set).
    #[arg(long, requires = "n")]
    empirical: bool,
    #[arg(long, conflicts_with = "set")]
    d: Option<usize>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    set: Option<String>,
    #[arg(long)]
    n: Option<u64>,
    /// Comma-separated checkpoints; defaults to powers of ten.
    #[arg(long)]
    checkpoints: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Only these criteria, comma separated.
    #[arg(long)]
    only: Option<String>,
}

#[derive(Args)]
struct TableArgs {
    /// ternary_parts, ternary_primitives, d3_parts, d3_primitives, d4_matrix,
    /// d4_primitives or first_of_rank
    name: String,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    bound: Option<u64>,
    #[arg(long)]
    max_length: Option<usize>,
    #[arg(long)]
    search_bound: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqKind {
    Primitives,
    Heights,
    Sift,
}

#[derive(Args)]
struct BfileArgs {
    #[arg(long, value_enum)]
    seq: SeqKind,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    set: Option<String>,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    bfile: PathBuf,
}

/// Bad input; exit code 2.
struct Usage(String);

impl From<greedyconv::Error> for Usage {
    fn from(e: greedyconv::Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<String> for Usage {
    fn from(e: String) -> Self {
        Usage(e)
    }
}

impl From<&str> for Usage {
    fn from(e: &str) -> Self {
        Usage(e.into())
    }
}

/// The report and whether every check it contains held.
type Outcome = Result<(Report, bool), Usage>;

fn ok(report: Report) -> Outcome {
    Ok((report, true))
}

fn greedy(a: &GreedyArgs) -> Outcome {
    let limit = a.count.unwrap_or(usize::MAX);
    let base = |cmd: &str, cols: &[&str]| {
        Report::new(cmd, cols)
            .meta("d", a.d)
            .meta("n_max", a.n)
            .meta("rank", json!(a.rank))
    };
    if a.heights {
        let t = GreedyTable::build(a.d, a.n)?;
        let mut r = base("greedy heights", &["n", "height", "leader"]);
        for n in (1..=a.n).take(limit) {
            let h = t.height(n)? as u64;
            r.push(vec![json!(n), json!(h), json!(n / h)]);
        }
        return ok(r);
    }
    if a.gaps {
        let mut r = base("greedy gaps", &["index", "leader", "gap", "mean"]);
        for g in primitive_gap_series(a.d, a.n, a.rank)?
            .into_iter()
            .take(limit)
        {
            r.push(vec![
                json!(g.index),
                json!(g.leader),
                json!(g.gap),
                json!(g.mean),
            ]);
        }
        return ok(r);
    }
    if a.primitives {
        // Ranks are only final up to N/D, so a rank filter builds further.
        let t = match a.rank {
            Some(_) => GreedyTable::build(a.d, a.d as u64 * a.n)?,
            None => GreedyTable::build(a.d, a.n)?,
        };
        let mut r = base("greedy primitives", &["primitive"]);
        for m in t.primitives(a.rank).take_while(|&m| m <= a.n).take(limit) {
            r.push(vec![json!(m)]);
        }
        return ok(r);
    }
    let t = GreedyTable::build(a.d, a.n)?;
    let mut r = base("greedy parts", &["leader", "size", "part"]);
    for p in t
        .parts()
        .take_while(|p| p.leader <= t.certified_bound())
        .take(limit)
    {
        r.push(vec![json!(p.leader), json!(p.size), json!(format_part(&p))]);
    }
    r.text = Some(
        r.rows
            .iter()
            .map(|row| format!("{}\n", output::plain(&row[2])))
            .collect(),
    );
    ok(r)
}

type Oracle = Box<dyn Fn(u64) -> bool>;

/// The closed form matching the shape of `set`, if any.
fn sift_oracle(set: &[u64]) -> Option<(String, Oracle)> {
    let prime_power = |n: u64| match factorize(n).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    };
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let unwrap = |r: greedyconv::Result<bool>| r.unwrap_or(false);
    match *set.as_slice() {
        [a] => {
            let (p, k) = prime_power(a)?;
            if k == 1 {
                return Some((
                    format!("val_{p} even"),
                    Box::new(move |n| unwrap(oracle_valuation_parity(p, n))),
                ));
            }
            Some((
                format!("val_{p} mod {} in the even residues below {k}", 2 * k),
                Box::new(move |n| unwrap(oracle_pk(p, k, n))),
            ))
        }
        [a, b] => {
            let ((p, 1), (q, l)) = (prime_power(a)?, prime_power(b)?) else {
                return None;
            };
            if p == q {
                Some((
                    format!("val_{p} classes mod {}", l + 1),
                    Box::new(move |n| unwrap(oracle_p_pk(p, l, n))),
                ))
            } else if l == 1 {
                Some((
                    format!("val_{p} = val_{q} mod 2"),
                    Box::new(move |n| unwrap(oracle_pq(p, q, PairSet::Primes, n))),
                ))
            } else {
                None
            }
        }
        [a, b, c] => {
            let ((p, 1), (q, 1)) = (prime_power(a)?, prime_power(b)?) else {
                return None;
            };
            (p != q && c == p * q).then(|| {
                (
                    format!("val_{p} and val_{q} both even"),
                    Box::new(move |n| unwrap(oracle_pq(p, q, PairSet::PrimesAndProduct, n)))
                        as Oracle,
                )
            })
        }
        _ => None,
    }
}

fn sift(a: &SiftArgs) -> Outcome {
    let set = parse_list(&a.set)?;
    let result = ssift(&set, a.n)?;
    if !a.check {
        let mut r = Report::new("sift", &["n"])
            .meta("set", set)
            .meta("n_max", a.n);
        for m in result.members() {
            r.push(vec![json!(m)]);
        }
        return ok(r);
    }
    let Some((name, oracle)) = sift_oracle(&set) else {
        return Err(Usage(format!(
            "no closed form for {set:?}; --check supports {{p^k}}, {{p,p^k}}, {{p,q}} and {{p,q,pq}}"
        )));
    };
    let disagreement = (1..=a.n).find(|&n| oracle(n) != result.contains(n));
    let mut r = Report::new(
        "sift check",
        &["oracle", "checked_up_to", "agrees", "first_disagreement"],
    )
    .meta("set", set)
    .meta("n_max", a.n);
    r.push(vec![
        json!(name),
        json!(a.n),
        json!(disagreement.is_none()),
        json!(disagreement),
    ]);
    Ok((r, disagreement.is_none()))
}

fn rational(x: &num_rational::BigRational) -> Value {
    json!(x.to_string())
}

fn conv(a: &ConvArgs) -> Outcome {
    let rule = parse_rule(&a.rule)?;
    let kind = rule.kind().to_string();
    let conv = Convolution::new(rule, a.n)?;
    let base = |cmd: &str, cols: &[&str]| {
        Report::new(cmd, cols)
            .meta("rule", kind.clone())
            .meta("n_max", a.n)
    };
    match a.op {
        ConvOp::Divisors => {
            let mut r = base("conv divisors", &["n", "divisors"]);
            for n in 1..=a.n {
                r.push(vec![json!(n), json!(conv.divisor_set(n))]);
            }
            ok(r)
        }
        ConvOp::Mobius => {
            let mut r = base("conv mobius", &["n", "mu"]);
            for (n, v) in (1u64..).zip(conv.mobius().values()) {
                r.push(vec![json!(n), rational(v)]);
            }
            ok(r)
        }
        ConvOp::Axioms => {
            let rep = conv.check_axioms();
            let mut r = base(
                "conv axioms",
                &["checked_up_to", "passed", "axiom", "n", "witness"],
            );
            let v = rep.violation;
            r.push(vec![
                json!(rep.checked_up_to),
                json!(rep.passed()),
                json!(v.map(|v| v.axiom.to_string())),
                json!(v.map(|v| v.n)),
                json!(v.map(|v| v.witness)),
            ]);
            Ok((r, rep.passed()))
        }
        ConvOp::Convolve => {
            let (Some(fs), Some(gs)) = (&a.f, &a.g) else {
                return Err(Usage("convolve needs --f and --g".into()));
            };
            let f = parse_function(fs, &conv)?;
            let g = parse_function(gs, &conv)?;
            let h = conv.convolve(&f, &g)?;
            let mut r = base("conv convolve", &["n", "value"])
                .meta("f", fs.as_str())
                .meta("g", gs.as_str());
            for (n, v) in (1u64..).zip(h.values()) {
                r.push(vec![json!(n), rational(v)]);
            }
            ok(r)
        }
    }
}

fn density(a: &DensityArgs) -> Outcome {
    if a.closed {
        let (p, m, res) = (a.p.unwrap_or(0), a.modulus.unwrap_or(0), a.res.unwrap_or(0));
        let value = match a.q {
            Some(q) => {
                density_valuation_product(p, q, m, a.q_mod.unwrap_or(0), res, a.q_res.unwrap_or(0))?
            }
            None => density_valuation_class(p, m, res)?,
        };
        let mut r = Report::new("density closed", &["density"])
            .meta("p", p)
            .meta("modulus", m)
            .meta("residue", res)
            .meta("q", json!(a.q))
            .meta("q_modulus", json!(a.q_mod))
            .meta("q_residue", json!(a.q_res));
        r.push(vec![rational(&value)]);
        return ok(r);
    }
    if !a.empirical {
        return Err(Usage("density needs --closed or --empirical".into()));
    }
    let n = a.n.unwrap_or(0);
    let (bitmap, source) = match (a.d, &a.set) {
        (Some(d), None) => {
            let bits = match a.rank {
                Some(rank) => GreedyTable::build(d, d as u64 * n)?.rank_bitmap(rank, n)?,
                None => GreedyTable::build(d, n)?.primitive_bitmap(),
            };
            (bits, json!({ "d": d, "rank": a.rank }))
        }
        (None, Some(s)) => {
            let set = parse_list(s)?;
            (ssift(&set, n)?.bitmap().to_vec(), json!({ "set": set }))
        }
        _ => return Err(Usage("--empirical needs --d or --set".into())),
    };
    let checkpoints = match &a.checkpoints {
        Some(c) => parse_list(c)?,
        None => default_checkpoints(n),
    };
    let est = empirical_density(&bitmap, &checkpoints)?;
    let mut r = Report::new(
        "density empirical",
        &[
            "n_max",
            "count",
            "density",
            "value",
            "running_min",
            "running_max",
        ],
    )
    .meta("source", source)
    .meta("n_max", n)
    .meta("checkpoints", checkpoints);
    r.push(vec![
        json!(est.n_max),
        json!(est.count),
        json!(est.as_f64()),
        rational(&est.value),
        rational(&est.running_min),
        rational(&est.running_max),
    ]);
    ok(r)
}

fn verify(a: &VerifyArgs) -> Outcome {
    let only = a.only.as_deref().map(parse_list).transpose()?;
    let mut r =
        Report::new("verify", &["id", "title", "passed", "notes"]).meta("only", json!(only));
    let mut text = String::new();
    let mut all = true;
    for (id, title, check) in suite::CHECKS {
        if only.as_ref().is_some_and(|o| !o.contains(&u64::from(id))) {
            continue;
        }
        let rep = check().unwrap_or_else(|e| suite::CheckReport {
            id,
            title,
            passed: false,
            notes: vec![format!("FAIL  could not run: {e}")],
        });
        all &= rep.passed;
        text.push_str(&format!("{rep}\n"));
        r.push(vec![
            json!(rep.id),
            json!(rep.title),
            json!(rep.passed),
            json!(rep.notes),
        ]);
    }
    r.text = Some(text);
    Ok((r, all))
}

fn conjecture_d4(n: u64) -> Outcome {
    let rep = run_sift_search_d4(n)?;
    let forms: Vec<Value> = rep
        .sporadic_forms()
        .into_iter()
        .map(|(s, p)| json!({ "value": s, "odd_prime_over_256": p }))
        .collect();
    let mut r = Report::new("conjecture-d4", &["field", "values"]).meta("n_max", n);
    r.push(vec![json!("initial_set"), json!(rep.initial_set)]);
    r.push(vec![json!("sift_set"), json!(rep.sift_set)]);
    r.push(vec![json!("sporadic"), json!(rep.sporadic)]);
    r.push(vec![json!("extra"), json!(rep.extra)]);
    r = r.meta("sporadic_forms", forms);
    let list = |v: &[u64]| {
        if v.is_empty() {
            "(none)".to_string()
        } else {
            v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
        }
    };
    let mut text = format!(
        "n_max: {n}\nsifting set: {}\nrank-4 primitives not kept: {}\nsurvivors outside the rank-4 primitives: {}\n",
        list(&rep.sift_set),
        list(&rep.sporadic),
        list(&rep.extra)
    );
    for (s, p) in rep.sporadic_forms() {
        match p {
            Some(p) => text.push_str(&format!("  {s} = 256 * {p}\n")),
            None => text.push_str(&format!("  {s} is not 256 times an odd prime\n")),
        }
    }
    r.text = Some(text);
    ok(r)
}

fn table(a: &TableArgs) -> Outcome {
    let name: TableName = a.name.parse().map_err(|e: greedyconv::Error| {
        let names: Vec<&str> = TableName::ALL.iter().map(TableName::as_str).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })?;
    let params = TableParams {
        count: a.count,
        bound: a.bound,
        max_length: a.max_length,
        search_bound: a.search_bound,
    };
    let r = Report::from_table("table", table_emit(name, &params)?)
        .meta("name", name.as_str())
        .meta("count", json!(a.count))
        .meta("bound", json!(a.bound));
    ok(r)
}

fn bfile_compare(a: &BfileArgs) -> Outcome {
    let seq: Vec<u64> = match a.seq {
        SeqKind::Primitives => {
            let d = a.d.ok_or("--seq primitives needs --d")?;
            let t = match a.rank {
                Some(_) => GreedyTable::build(d, d as u64 * a.n)?,
                None => GreedyTable::build(d, a.n)?,
            };
            t.primitives(a.rank).take_while(|&m| m <= a.n).collect()
        }
        SeqKind::Heights => {
            let d = a.d.ok_or("--seq heights needs --d")?;
            let t = GreedyTable::build(d, a.n)?;
            t.heights()[1..].iter().map(|&h| u64::from(h)).collect()
        }
        SeqKind::Sift => {
            let set = parse_list(a.set.as_deref().ok_or("--seq sift needs --set")?)?;
            ssift(&set, a.n)?.members().collect()
        }
    };
    let c = compare_bfile(&seq, &a.bfile)?;
    let m = c.first_mismatch;
    let mut r = Report::new(
        "bfile-compare",
        &["compared", "matches", "index", "expected", "found"],
    )
    .meta("bfile", a.bfile.display().to_string())
    .meta("n_max", a.n)
    .meta("d", json!(a.d))
    .meta("rank", json!(a.rank))
    .meta("set", json!(a.set));
    r.push(vec![
        json!(c.compared),
        json!(c.matches()),
        json!(m.map(|m| m.index)),
        json!(m.map(|m| m.expected.to_string())),
        json!(m.map(|m| m.found)),
    ]);
    Ok((r, c.matches()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Greedy(a) => greedy(a),
        Command::Sift(a) => sift(a),
        Command::Conv(a) => conv(a),
        Command::Density(a) => density(a),
        Command::Verify(a) => verify(a),
        Command::ConjectureD4 { n } => conjecture_d4(*n),
        Command::Table(a) => table(a),
        Command::BfileCompare(a) => bfile_compare(a),
    };
    let (report, passed) = match outcome {
        Ok(done) => done,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let path = cli
        .output
        .as_deref()
        .map(|p| resolve_output(p, cli.output_dir.as_deref()));
    if let Err(e) = emit(&report.render(cli.format), path.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
