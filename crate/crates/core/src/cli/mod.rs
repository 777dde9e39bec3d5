//! The `jcards` command line.
//!
//! Results go to stdout as JSON unless `--human` is given. Exit status is 0
//! on success, 1 when `verify` rejects its input, and 2 on usage or input
//! errors.

mod json;

use std::collections::BTreeMap;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::bijections::{
    compose_plus_two, cover_partial_order, cover_to_multigraph, cover_to_sequence, decompose_plus_two,
    digraph_to_family, dyck_to_minimal, family_to_digraph, family_to_sequence, minimal_to_dyck,
    multigraph_to_cover, partition_to_sequence, sequence_to_family, sequence_to_partition, DyckPath,
};
use crate::cards::{
    arrangement_of, crossings, is_minimal, l_of, sequence_permutation, siteswap_of, throw_pattern,
    CardSequence, Siteswap,
};
use crate::counting::{
    catalan, gen_stirling, js_count, narayana, p0, p2, p4, q_from_p, stirling1, stirling2, BigCount,
};
use crate::enumeration::{census, cycle_census, enumerate, CardFamily, Query};
use crate::error::{Error, Result};
use crate::render::{render_svg, RenderSpec};
use crate::stochastic::{
    cycle_type_limit, estimate_single_cycle_probability, exact_step_distribution, map_total_variation,
    rational_string, sample_sequence, total_variation, GeneratorDistribution, GroupDistribution,
};

pub use json::{parse_permutation, parse_sequence, SequenceJson};

#[derive(Debug, Parser)]
#[command(
    name = "jcards",
    version,
    about = "Juggling card sequences: count, convert, verify, enumerate, sample"
)]
pub struct Cli {
    /// Plain text instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a counting formula exactly.
    Count(CountArgs),
    /// Convert between sequences and the structures they biject with.
    Convert(ConvertArgs),
    /// Check a siteswap, cover matrix, Dyck path or minimal sequence.
    Verify(VerifyArgs),
    /// Draw a card sequence as SVG.
    Render(RenderArgs),
    /// Count sequences by exhaustive search.
    Census(CensusArgs),
    /// List sequences by exhaustive search, one JSON object per line.
    Enumerate(EnumerateArgs),
    /// Draw random sequences.
    Sample(SampleArgs),
    /// Evolve the random walk on `S_b` exactly, or estimate it.
    Walk(WalkArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    Stirling2,
    Stirling1,
    GenStirling,
    Js,
    Narayana,
    Catalan,
    G,
    P0,
    P2,
    P4,
    Qd,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub kind: CountKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    /// `L(σ)` for `js`, when no arrangement is given.
    #[arg(long)]
    pub l: Option<usize>,
    /// Extra crossings for `qd`.
    #[arg(long)]
    pub d: Option<usize>,
    /// Final arrangement for `js`, bottom to top, e.g. `3,1,4,2`.
    #[arg(long)]
    pub arrangement: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Repr {
    Sequence,
    Partition,
    Family,
    Digraph,
    Cover,
    Multigraph,
    Order,
    Dyck,
    Siteswap,
    Permutation,
    Throws,
    PlusTwo,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[arg(long)]
    pub from: Repr,
    #[arg(long)]
    pub to: Repr,
    /// The object to convert; read from stdin when absent.
    pub payload: Option<String>,
    /// Final arrangement, bottom to top, when building a sequence.
    #[arg(long)]
    pub target: Option<String>,
    /// Ball count of a sequence given as text.
    #[arg(long)]
    pub b: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Siteswap,
    Cover,
    Dyck,
    Minimal,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub kind: VerifyKind,
    /// Read from stdin when absent.
    pub payload: Option<String>,
    #[arg(long)]
    pub b: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Read from stdin when absent.
    pub sequence: Option<String>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long, default_value_t = 60)]
    pub card_width: u32,
    #[arg(long, default_value_t = 15)]
    pub card_padding: u32,
    #[arg(long, default_value_t = 30)]
    pub level_spacing: u32,
    #[arg(long)]
    pub no_ball_labels: bool,
    #[arg(long)]
    pub no_thrown_labels: bool,
    /// Write here instead of stdout.
    #[arg(long, short)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct Filters {
    #[arg(long)]
    pub b: usize,
    #[arg(long)]
    pub n: usize,
    /// `single`, `ordered:M` or `order-preserving:M`.
    #[arg(long, default_value = "single")]
    pub family: CardFamily,
    /// Required `π_A`: `id`, cycle notation, or one-line image.
    #[arg(long, conflicts_with = "arrangement")]
    pub perm: Option<String>,
    /// Required final arrangement, bottom to top.
    #[arg(long)]
    pub arrangement: Option<String>,
    #[arg(long)]
    pub crossings: Option<usize>,
    /// Some card is `C_b`.
    #[arg(long)]
    pub uses_top: bool,
    /// No card is `C_1`.
    #[arg(long)]
    pub primitive: bool,
    /// Shorthand for `--perm id --uses-top --crossings b(b-1)+D`.
    #[arg(long, value_name = "D", conflicts_with_all = ["perm", "arrangement", "crossings"])]
    pub plus: Option<usize>,
}

impl Filters {
    fn query(&self) -> Result<Query> {
        let mut q = match self.plus {
            Some(d) => Query::identity_with_crossings(self.b, d),
            None => Query::all(),
        };
        if let Some(p) = &self.perm {
            q = q.with_permutation(&parse_permutation(p, Some(self.b))?);
        }
        if let Some(a) = &self.arrangement {
            let arr = json::parse_arrangement(a)?;
            if arr.len() != self.b {
                return Err(Error::BallCountMismatch {
                    expected: self.b,
                    found: arr.len(),
                });
            }
            q.arrangement = Some(arr.order().to_vec());
        }
        if let Some(c) = self.crossings {
            q = q.with_crossings(c);
        }
        q.uses_top |= self.uses_top;
        q.primitive |= self.primitive;
        Ok(q)
    }
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[command(flatten)]
    pub filters: Filters,
    /// Tally all `b^n` sequences by cycle count of `π_A` instead.
    #[arg(long)]
    pub cycles: bool,
    #[arg(long, env = "JCARDS_JOBS", default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub filters: Filters,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub b: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "single")]
    pub family: CardFamily,
    /// Positive integer weights, one per card of the family, e.g. `1,2,3`.
    #[arg(long)]
    pub weights: Option<String>,
    /// Estimate the single-cycle probability over this many sequences.
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long, env = "JCARDS_JOBS", default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct WalkArgs {
    #[arg(long)]
    pub b: usize,
    #[arg(long)]
    pub steps: usize,
    #[arg(long, default_value = "single")]
    pub family: CardFamily,
    /// Exact rational convolution (`b ≤ 6`).
    #[arg(long)]
    pub exact: bool,
    /// Include the full distribution in the exact output.
    #[arg(long, requires = "exact")]
    pub distribution: bool,
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, env = "JCARDS_JOBS", default_value_t = 1)]
    pub jobs: usize,
}

/// What a subcommand produced.
enum Output {
    Json(Value),
    /// JSON lines, or one text line each with `--human`.
    Lines(Vec<(Value, String)>),
    Text(String),
    Verdict {
        report: Value,
        text: String,
        ok: bool,
    },
}

/// Parse `args` (program name first) and run. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(output) => emit(output, cli.human, out),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit(output: Output, human: bool, out: &mut dyn Write) -> i32 {
    let result = match output {
        Output::Json(v) => {
            if human {
                writeln!(out, "{}", human_json(&v))
            } else {
                writeln!(out, "{v}")
            }
        }
        Output::Lines(lines) => lines.iter().try_for_each(|(v, t)| {
            if human {
                writeln!(out, "{t}")
            } else {
                writeln!(out, "{v}")
            }
        }),
        Output::Text(t) => out.write_all(t.as_bytes()),
        Output::Verdict { report, text, ok } => {
            let r = if human {
                writeln!(out, "{text}")
            } else {
                writeln!(out, "{report}")
            };
            if r.is_ok() {
                return if ok { 0 } else { 1 };
            }
            r
        }
    };
    if result.is_err() {
        return 2;
    }
    0
}

/// Top-level keys one per line; nested values stay compact.
fn human_json(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn payload(arg: &Option<String>) -> Result<String> {
    match arg {
        Some(p) if p != "-" => Ok(p.clone()),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
            Ok(s.trim().to_string())
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Count(a) => cmd_count(a),
        Command::Convert(a) => cmd_convert(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Render(a) => cmd_render(a),
        Command::Census(a) => cmd_census(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Sample(a) => cmd_sample(a),
        Command::Walk(a) => cmd_walk(a),
    }
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidInput(format!("this count needs --{flag}")))
}

fn count_value(a: &CountArgs) -> Result<BigCount> {
    Ok(match a.kind {
        CountKind::Stirling2 => stirling2(need(a.n, "n")?, need(a.k, "k")?),
        CountKind::Stirling1 => stirling1(need(a.n, "n")?, need(a.k, "k")?),
        CountKind::GenStirling => gen_stirling(need(a.n, "n")?, need(a.k, "k")?, a.m),
        CountKind::Js => {
            let (l, b) = match &a.arrangement {
                Some(text) => {
                    let arr = json::parse_arrangement(text)?;
                    (l_of(&arr.permutation()), arr.len())
                }
                None => (need(a.l, "l")?, need(a.b, "b")?),
            };
            js_count(l, need(a.n, "n")?, b, a.m)?
        }
        CountKind::Narayana => narayana(need(a.b, "b")?, need(a.n, "n")?)?,
        CountKind::Catalan => catalan(need(a.n, "n")?),
        CountKind::G => crate::counting::g_count(need(a.b, "b")?, need(a.n, "n")?),
        CountKind::P0 => p0(need(a.n, "n")?, need(a.b, "b")?)?,
        CountKind::P2 => p2(need(a.n, "n")?, need(a.b, "b")?),
        CountKind::P4 => p4(need(a.n, "n")?, need(a.b, "b")?)?,
        CountKind::Qd => {
            let (n, b) = (need(a.n, "n")?, need(a.b, "b")?);
            match need(a.d, "d")? {
                0 => q_from_p(0, n, b, p0)?,
                2 => q_from_p(2, n, b, |n, b| Ok(p2(n, b)))?,
                4 => q_from_p(4, n, b, p4)?,
                d => {
                    return Err(Error::Unsupported(format!(
                        "qd is available for d ∈ {{0, 2, 4}}, not {d}"
                    )))
                }
            }
        }
    })
}

fn cmd_count(a: &CountArgs) -> Result<Output> {
    Ok(Output::Text(format!("{}\n", count_value(a)?)))
}

fn seq_value(seq: &CardSequence) -> Value {
    serde_json::to_value(SequenceJson::from(seq)).expect("plain data")
}

fn need_target(a: &ConvertArgs) -> Result<crate::cards::Arrangement> {
    let t = a
        .target
        .as_deref()
        .ok_or_else(|| Error::InvalidInput("building a sequence needs --target".into()))?;
    json::parse_arrangement(t)
}

fn cmd_convert(a: &ConvertArgs) -> Result<Output> {
    use Repr::*;
    let text = payload(&a.payload)?;
    let (value, human): (Value, String) = match (a.from, a.to) {
        (Partition, Sequence) => {
            let target = need_target(a)?;
            let b = target.len();
            let seq = partition_to_sequence(&json::parse_partition(&text)?, &target, b)?;
            (seq_value(&seq), seq.to_string())
        }
        (Sequence, Partition) => {
            let p = sequence_to_partition(&parse_sequence(&text, a.b)?)?;
            (json::partition_json(&p), p.to_string())
        }
        (Family, Sequence) => {
            let target = need_target(a)?;
            let b = target.len();
            let seq = family_to_sequence(&json::parse_family(&text)?, &target, b)?;
            (seq_value(&seq), seq.to_string())
        }
        (Sequence, Family) => {
            let f = sequence_to_family(&parse_sequence(&text, a.b)?)?;
            let v = json::family_json(&f);
            (v.clone(), v.to_string())
        }
        (Digraph, Family) => {
            let f = digraph_to_family(&json::parse_digraph(&text)?)?;
            let v = json::family_json(&f);
            (v.clone(), v.to_string())
        }
        (Family, Digraph) => {
            let g = family_to_digraph(&json::parse_family(&text)?)?;
            let v = json::digraph_json(&g);
            (v.clone(), v.to_string())
        }
        (Digraph, Sequence) => {
            let target = need_target(a)?;
            let b = target.len();
            let f = digraph_to_family(&json::parse_digraph(&text)?)?;
            let seq = family_to_sequence(&f, &target, b)?;
            (seq_value(&seq), seq.to_string())
        }
        (Sequence, Digraph) => {
            let g = family_to_digraph(&sequence_to_family(&parse_sequence(&text, a.b)?)?)?;
            let v = json::digraph_json(&g);
            (v.clone(), v.to_string())
        }
        (Cover, Sequence) => {
            let seq = cover_to_sequence(&json::parse_cover(&text)?, &need_target(a)?)?;
            (seq_value(&seq), seq.to_string())
        }
        (Cover, Order) => {
            let o = cover_partial_order(&json::parse_cover(&text)?).to_string();
            (Value::String(o.clone()), o)
        }
        (Cover, Multigraph) => {
            let g = cover_to_multigraph(&json::parse_cover(&text)?)?;
            let v = json::multigraph_json(&g);
            (v.clone(), v.to_string())
        }
        (Multigraph, Cover) => {
            let c = multigraph_to_cover(&json::parse_multigraph(&text)?)?;
            let v = json::cover_json(&c);
            (v.clone(), v.to_string())
        }
        (Sequence, Dyck) => {
            let d = minimal_to_dyck(&parse_sequence(&text, a.b)?)?.to_string();
            (Value::String(d.clone()), d)
        }
        (Dyck, Sequence) => {
            let d: DyckPath = serde_json::from_str::<String>(&text).unwrap_or(text).parse()?;
            let seq = dyck_to_minimal(&d)?;
            (seq_value(&seq), seq.to_string())
        }
        (Sequence, Siteswap) => {
            let s = siteswap_of(&parse_sequence(&text, a.b)?)?;
            (json!(s.throws), s.to_string())
        }
        (Sequence, Permutation) => {
            let p = sequence_permutation(&parse_sequence(&text, a.b)?);
            let arr = arrangement_of(&p);
            let v = json!({
                "cycles": p.to_string(),
                "image": p.image(),
                "arrangement": arr.order(),
                "L": l_of(&p),
            });
            (v, format!("{p} arrangement {arr}"))
        }
        (Sequence, Throws) => {
            let seq = parse_sequence(&text, a.b)?;
            let t = throw_pattern(&seq);
            let v = json!(t.throws());
            (v.clone(), v.to_string())
        }
        (Throws, PlusTwo) => {
            let balls: Vec<usize> = serde_json::from_str(&text)
                .or_else(|_| json::parse_list(&text))
                .map_err(|_| Error::Parse("expected a list of balls".into()))?;
            let parts = decompose_plus_two(&balls)?;
            let v = json!({
                "pieces": parts.pieces,
                "i1": parts.i1,
                "special": parts.special,
                "cuts": parts.cuts,
            });
            (v.clone(), v.to_string())
        }
        (PlusTwo, Throws) => {
            #[derive(serde::Deserialize)]
            struct Parts {
                pieces: [Vec<usize>; 4],
                i1: usize,
            }
            let p: Parts = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("plus-two: {e}")))?;
            let balls = compose_plus_two(&p.pieces, p.i1)?;
            (json!(balls), format!("{balls:?}"))
        }
        (from, to) => {
            return Err(Error::Unsupported(format!(
                "no conversion from {} to {}",
                repr_name(from),
                repr_name(to)
            )))
        }
    };
    Ok(Output::Lines(vec![(value, human)]))
}

fn repr_name(r: Repr) -> String {
    r.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn verdict(kind: &str, failure: Option<String>) -> Output {
    let ok = failure.is_none();
    let text = match &failure {
        None => format!("{kind}: pass"),
        Some(r) => format!("{kind}: fail: {r}"),
    };
    Output::Verdict {
        report: json!({"kind": kind, "valid": ok, "reason": failure}),
        text,
        ok,
    }
}

fn siteswap_failure(t: &Siteswap) -> Option<String> {
    let n = t.period();
    let mut first: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, &ti) in t.throws.iter().enumerate() {
        let r = (i + 1 + ti) % n;
        if let Some(&j) = first.get(&r) {
            return Some(format!(
                "throws {j} and {} both land at time ≡ {} (mod {n})",
                i + 1,
                if r == 0 { n } else { r }
            ));
        }
        first.insert(r, i + 1);
    }
    None
}

fn minimal_failure(seq: &CardSequence) -> Option<String> {
    let b = seq.b();
    if !seq.is_single_throw() {
        return Some("some card throws more than one ball".into());
    }
    if !seq.cards().iter().any(|c| c.targets() == [b]) {
        return Some(format!("the top card C{b} is never used"));
    }
    let p = sequence_permutation(seq);
    if !p.is_identity() {
        return Some(format!("π_A = {p} is not the identity"));
    }
    let cr = crossings(seq);
    if cr != b * (b - 1) {
        return Some(format!("{cr} crossings, expected b(b-1) = {}", b * (b - 1)));
    }
    debug_assert!(is_minimal(seq));
    None
}

fn cmd_verify(a: &VerifyArgs) -> Result<Output> {
    let text = payload(&a.payload)?;
    Ok(match a.kind {
        VerifyKind::Siteswap => {
            let t = Siteswap::parse(&text)?;
            verdict("siteswap", siteswap_failure(&t))
        }
        VerifyKind::Cover => {
            let _: Vec<Vec<u8>> =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("cover: {e}")))?;
            verdict("cover", json::parse_cover(&text).err().map(|e| e.to_string()))
        }
        VerifyKind::Dyck => match text.parse::<DyckPath>() {
            Ok(_) => verdict("dyck", None),
            Err(e @ Error::Parse(_)) => return Err(e),
            Err(e) => verdict("dyck", Some(e.to_string())),
        },
        VerifyKind::Minimal => verdict("minimal", minimal_failure(&parse_sequence(&text, a.b)?)),
    })
}

fn cmd_render(a: &RenderArgs) -> Result<Output> {
    let seq = parse_sequence(&payload(&a.sequence)?, a.b)?;
    let spec = RenderSpec {
        card_width: a.card_width,
        card_padding: a.card_padding,
        level_spacing: a.level_spacing,
        ball_labels: !a.no_ball_labels,
        thrown_labels: !a.no_thrown_labels,
    };
    let svg = render_svg(&seq, &spec)?;
    match &a.output {
        Some(path) => {
            std::fs::write(path, &svg)
                .map_err(|e| Error::InvalidInput(format!("writing {}: {e}", path.display())))?;
            Ok(Output::Lines(vec![(
                json!({"written": path.display().to_string(), "cards": seq.len(), "crossings": crossings(&seq)}),
                format!("wrote {}", path.display()),
            )]))
        }
        None => Ok(Output::Text(svg)),
    }
}

fn cmd_census(a: &CensusArgs) -> Result<Output> {
    let f = &a.filters;
    if a.cycles {
        if f.family != CardFamily::SingleThrow {
            return Err(Error::Unsupported(
                "--cycles tallies single-throw sequences only".into(),
            ));
        }
        let tally = cycle_census(f.b, f.n)?;
        let map: BTreeMap<String, String> = tally
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        return Ok(Output::Json(json!({"b": f.b, "n": f.n, "cycles": map})));
    }
    let count = census(f.b, f.n, f.family, &f.query()?, a.jobs)?;
    Ok(Output::Text(format!("{count}\n")))
}

fn cmd_enumerate(a: &EnumerateArgs) -> Result<Output> {
    let f = &a.filters;
    let seqs = enumerate(f.b, f.n, f.family, &f.query()?)?;
    Ok(Output::Lines(
        seqs.iter().map(|s| (seq_value(s), s.to_string())).collect(),
    ))
}

fn cmd_sample(a: &SampleArgs) -> Result<Output> {
    if let Some(trials) = a.trials {
        let e = estimate_single_cycle_probability(a.b, a.n, a.family, trials, a.seed, a.jobs)?;
        let p = 1.0 / a.b as f64;
        return Ok(Output::Json(json!({
            "b": a.b,
            "n": a.n,
            "family": a.family.to_string(),
            "seed": a.seed,
            "trials": e.trials,
            "hits": e.hits,
            "estimate": e.mean(),
            "predicted": rational_string(&BigRational::new(1.into(), (a.b as i64).into())),
            "std_error": e.std_error(p),
        })));
    }
    let weights = a.weights.as_deref().map(json::parse_list).transpose()?;
    let weights: Option<Vec<u64>> = weights.map(|w| w.into_iter().map(|x| x as u64).collect());
    let seq = sample_sequence(a.b, a.n, a.family, weights.as_deref(), a.seed)?;
    let p = sequence_permutation(&seq);
    let mut v = seq_value(&seq);
    v["permutation"] = json!(p.to_string());
    v["single_cycle"] = json!(p.is_full_cycle());
    Ok(Output::Lines(vec![(v, format!("{seq}  π = {p}"))]))
}

fn rational_map(m: &BTreeMap<usize, BigRational>) -> BTreeMap<String, String> {
    m.iter()
        .map(|(k, v)| (k.to_string(), rational_string(v)))
        .collect()
}

fn cmd_walk(a: &WalkArgs) -> Result<Output> {
    if !a.exact {
        let e = estimate_single_cycle_probability(a.b, a.steps, a.family, a.trials, a.seed, a.jobs)?;
        return Ok(Output::Json(json!({
            "b": a.b,
            "steps": a.steps,
            "family": a.family.to_string(),
            "trials": e.trials,
            "hits": e.hits,
            "single_cycle_estimate": e.mean(),
        })));
    }
    let gd = GeneratorDistribution::uniform_cards(a.b, a.family)?;
    let d = exact_step_distribution(&gd, a.steps)?;
    let marginal = d.cycle_count_marginal();
    let limit = cycle_type_limit(a.b)?;
    let tv = total_variation(&d, &GroupDistribution::uniform(a.b)?)?;
    let tv_cycles = map_total_variation(&marginal, &limit);
    let mass = d.single_cycle_mass();
    let mut v = json!({
        "b": a.b,
        "steps": a.steps,
        "family": a.family.to_string(),
        "single_cycle_mass": rational_string(&mass),
        "cycle_counts": rational_map(&marginal),
        "cycle_limit": rational_map(&limit),
        "tv_to_uniform": rational_string(&tv),
        "tv_cycle_counts_to_limit": rational_string(&tv_cycles),
    });
    if a.distribution {
        v["distribution"] = json!(d.to_string_map());
    }
    let mut t = format!(
        "b = {}, steps = {}, cards = {}\nsingle-cycle mass {}\nTV to uniform {} ≈ {:.3e}\n\n ℓ  P(ℓ cycles)      limit\n",
        a.b,
        a.steps,
        a.family,
        rational_string(&mass),
        rational_string(&tv),
        tv.to_f64().unwrap_or(f64::NAN)
    );
    for (l, q) in &marginal {
        t.push_str(&format!(
            "{l:>2}  {:<15.12}  {:.12}\n",
            q.to_f64().unwrap_or(f64::NAN),
            limit[l].to_f64().unwrap_or(f64::NAN)
        ));
    }
    Ok(Output::Lines(vec![(v, t.trim_end().to_string())]))
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
