use std::fmt;
use std::io::Read;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use powerdom::exact::{self, Budget, ExactOptions};
use powerdom::generators;
use powerdom::io::{load_graph, GraphFormat};
use powerdom::milp::{self, ModelFormat, SolveBudget};
use powerdom::propagation::{is_connected_set, is_power_dominating};
use powerdom::spread::{self, SpreadOp};
use powerdom::structural::{decompose_cpds, solve_cpds, solve_pds};
use powerdom::{Error, Graph, Method, SolveResult, Vertex, VertexSet};
use serde_json::Value;

use crate::output::{Output, OutputFormat, Record};
use crate::{Cli, Command, Family, FormatArg, GadgetKind, InputFormat, MethodArg, OpArg, Problem};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
    Lib(Error),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Io(m) => f.write_str(m),
            Failure::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Library errors meaning "no answer within the rules" rather than bad input.
fn is_infeasible(e: &Error) -> bool {
    matches!(e, Error::BudgetExceeded(_) | Error::NotPowerDominating | Error::Disconnected)
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(e) if is_infeasible(e) => 2,
            _ => 1,
        }
    }
}

type Outcome = Result<(Output, u8), Failure>;

struct Ctx {
    opts: ExactOptions,
    input_format: Option<InputFormat>,
    output: OutputFormat,
}

impl Ctx {
    fn load(&self, path: &Path) -> Result<Graph, Failure> {
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
        };
        let format = match self.input_format {
            Some(InputFormat::Edgelist) => GraphFormat::EdgeList,
            Some(InputFormat::Dimacs) => GraphFormat::Dimacs,
            Some(InputFormat::Mtx) => GraphFormat::MatrixMarket,
            None => GraphFormat::from_extension(&path.to_string_lossy()),
        };
        load_graph(&text, format).map_err(|e| match e {
            Error::Parse { .. } | Error::EmptyGraph => Failure::Usage(format!("{}: {e}", path.display())),
            other => Failure::Lib(other),
        })
    }

    fn model_budget(&self) -> SolveBudget {
        SolveBudget::from_exact(&self.opts.budget)
    }
}

fn method(m: MethodArg) -> Option<Method> {
    match m {
        MethodArg::Auto => None,
        MethodArg::Tree => Some(Method::Tree),
        MethodArg::Block => Some(Method::Block),
        MethodArg::Cactus => Some(Method::Cactus),
        MethodArg::Decompose => Some(Method::Decomposition),
        MethodArg::Brute => Some(Method::Brute),
        MethodArg::Milp => Some(Method::Milp),
    }
}

fn problem_name(p: Problem) -> &'static str {
    match p {
        Problem::Pd => "pd",
        Problem::Cpd => "cpd",
    }
}

fn labels(g: &Graph, vs: &[Vertex]) -> Value {
    Value::from(g.label_set(vs))
}

fn trace_lines(g: &Graph, r: &SolveResult) -> Value {
    Value::from(r.trace.render(g).lines().map(str::to_string).collect::<Vec<_>>())
}

fn parse_labels(g: &Graph, list: &str) -> Result<Vec<Vertex>, Failure> {
    let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if names.is_empty() {
        return Err(Failure::Usage("empty vertex list".into()));
    }
    g.vertices_by_label(&names).map_err(|e| Failure::Usage(e.to_string()))
}

pub fn run(cli: &Cli) -> Outcome {
    let budget = match cli.global.budget_n {
        Some(n) => Budget::with_max_vertices(n),
        None => Budget::from_env(),
    };
    let ctx = Ctx { opts: ExactOptions::with_budget(budget), input_format: cli.global.input_format, output: cli.global.output };
    match &cli.command {
        Command::Solve { input, problem, method: m, t, trace } => solve(&ctx, input, *problem, *m, *t, *trace),
        Command::Ppt { input, connected, method: m, trace } => ppt(&ctx, input, *connected, *m, *trace),
        Command::Spread { input, op, target, method: m } => spread_cmd(&ctx, input, *op, target, *m),
        Command::Model { input, problem, t, format, out } => model(&ctx, input, *problem, *t, *format, out.as_deref()),
        Command::Decompose { input } => decompose(&ctx, input),
        Command::Gadget { kind } => gadget(&ctx, kind),
        Command::Check { input, set, problem, trace } => check(&ctx, input, set, *problem, *trace),
        Command::Batch { inputs, method: m, timing, jobs } => batch(&ctx, inputs, *m, *timing, *jobs),
    }
}

fn solve(ctx: &Ctx, input: &Path, problem: Problem, m: MethodArg, t: Option<usize>, trace: bool) -> Outcome {
    let g = ctx.load(input)?;
    let connected = problem == Problem::Cpd;
    let res = match (t, m) {
        (Some(t), MethodArg::Milp) => milp::solve_graph(&g, connected, Some(t), &ctx.model_budget())?,
        (Some(t), MethodArg::Brute | MethodArg::Auto) if connected => exact::l_round_cpd(&g, t, &ctx.opts)?,
        (Some(t), MethodArg::Brute | MethodArg::Auto) => exact::l_round_pd(&g, t, &ctx.opts)?,
        (Some(_), _) => return Err(Failure::Usage("--T needs --method brute or milp".into())),
        (None, _) if connected => solve_cpds(&g, method(m), &ctx.opts)?,
        (None, _) => solve_pds(&g, method(m), &ctx.opts).map_err(|e| match e {
            Error::InvalidArgument(msg) => Failure::Usage(msg),
            other => Failure::Lib(other),
        })?,
    };
    let mut r = Record::new()
        .with("problem", problem_name(problem))
        .with("method", res.method.to_string())
        .with("n", g.n())
        .with("m", g.m());
    if let Some(t) = t {
        r.push("rounds", t);
    }
    r.push("optimum", res.optimum);
    r.push("witness", labels(&g, &res.witness));
    r.push("ppt_of_witness", res.trace.last_timestep());
    if trace {
        r.push("trace", trace_lines(&g, &res));
    }
    Ok((Output::Record(r), 0))
}

fn ppt(ctx: &Ctx, input: &Path, connected: bool, m: MethodArg, trace: bool) -> Outcome {
    let g = ctx.load(input)?;
    let (value, set, optimum) = match m {
        MethodArg::Brute | MethodArg::Auto => {
            let p = if connected { exact::ppt_connected(&g, &ctx.opts)? } else { exact::ppt(&g, &ctx.opts)? };
            (p.ppt, p.set, p.optimum)
        }
        MethodArg::Milp => {
            let b = ctx.model_budget();
            let value = milp::ppt_by_search(&g, connected, &b)?;
            let res = milp::solve_graph(&g, connected, Some(value), &b)?;
            (value, res.witness.clone(), res.optimum)
        }
        _ => return Err(Failure::Usage("ppt supports --method brute or milp".into())),
    };
    let chosen = VertexSet::from_vertices(g.n(), set.iter().copied());
    let (_, tr) = is_power_dominating(&g, &chosen);
    let mut r = Record::new()
        .with("problem", if connected { "cpd" } else { "pd" })
        .with("ppt", value)
        .with("optimum", optimum)
        .with("set", labels(&g, &set));
    if trace {
        r.push("trace", Value::from(tr.render(&g).lines().map(str::to_string).collect::<Vec<_>>()));
    }
    Ok((Output::Record(r), 0))
}

fn spread_cmd(ctx: &Ctx, input: &Path, op: OpArg, target: &str, m: MethodArg) -> Outcome {
    let g = ctx.load(input)?;
    let op = match op {
        OpArg::DeleteVertex => SpreadOp::DeleteVertex,
        OpArg::DeleteEdge => SpreadOp::DeleteEdge,
        OpArg::ContractEdge => SpreadOp::ContractEdge,
        OpArg::SubdivideEdge => SpreadOp::SubdivideEdge,
    };
    let target = parse_labels(&g, target)?;
    let chosen = method(m);
    let opts = &ctx.opts;
    let solver = move |h: &Graph| solve_cpds(h, chosen, opts);
    let rep = spread::spread(&g, op, &target, &solver).map_err(|e| match e {
        Error::InvalidArgument(msg) => Failure::Usage(msg),
        Error::CutVertex(v) => Failure::Usage(format!("{v} is a cut vertex")),
        Error::CutEdge(u, v) => Failure::Usage(format!("{u}-{v} is a cut edge")),
        other => Failure::Lib(other),
    })?;
    let r = Record::new()
        .with("operation", rep.operation.to_string())
        .with("target", rep.target.clone())
        .with("before", rep.before.optimum)
        .with("after", rep.after.optimum)
        .with("spread", rep.spread)
        .with("before_witness", labels(&g, &rep.before.witness))
        .with("method", rep.before.method.to_string());
    Ok((Output::Record(r), 0))
}

fn model(ctx: &Ctx, input: &Path, problem: Problem, t: Option<usize>, format: FormatArg, out: Option<&Path>) -> Outcome {
    let g = ctx.load(input)?;
    let t = t.unwrap_or(g.n());
    if t == 0 {
        return Err(Failure::Usage("--T must be at least 1".into()));
    }
    let m = milp::build_model(&g, t, problem == Problem::Cpd)?;
    let fmt = match format {
        FormatArg::Lp => ModelFormat::Lp,
        FormatArg::Mps => ModelFormat::Mps,
    };
    let text = milp::export(&m, fmt)?;
    let summary = |r: Record| {
        r.with("problem", problem_name(problem))
            .with("horizon", t)
            .with("format", if fmt == ModelFormat::Lp { "lp" } else { "mps" })
            .with("variables", m.variables.len())
            .with("binaries", m.binary_count())
            .with("constraints", m.constraints.len())
    };
    match (out, ctx.output) {
        (Some(path), _) => {
            std::fs::write(path, &text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            Ok((Output::Record(summary(Record::new().with("file", path.display().to_string()))), 0))
        }
        (None, OutputFormat::Text) => Ok((Output::Raw(text), 0)),
        (None, OutputFormat::JsonLines) => Ok((Output::Record(summary(Record::new()).with("model", text)), 0)),
    }
}

fn decompose(ctx: &Ctx, input: &Path) -> Outcome {
    let g = ctx.load(input)?;
    let d = decompose_cpds(&g, &ctx.opts).map_err(|e| match e {
        Error::IsPath | Error::NoCutVertex => Failure::Usage(e.to_string()),
        other => Failure::Lib(other),
    })?;
    let rows = d
        .blocks
        .iter()
        .map(|b| {
            Record::new()
                .with("block", b.block)
                .with("vertices", labels(&g, &b.vertices))
                .with("anchors", labels(&g, &b.anchors))
                .with("optimum", b.optimum)
                .with("method", b.method.to_string())
                .with("witness", labels(&g, &b.witness))
        })
        .collect();
    let shared: i64 = d.mu.iter().map(|&m| m as i64 - 1).sum();
    let summary = Record::new()
        .with("m", labels(&g, &d.m))
        .with("mu", d.mu.clone())
        .with("uncovered", labels(&g, &d.uncovered))
        .with("block_sum", d.blocks.iter().map(|b| b.optimum).sum::<usize>())
        .with("shared", shared)
        .with("optimum", d.result.optimum)
        .with("witness", labels(&g, &d.result.witness));
    Ok((Output::Table(rows, Some(summary)), 0))
}

fn graph_output(ctx: &Ctx, g: &Graph, header: Option<(&str, usize)>) -> Output {
    match ctx.output {
        OutputFormat::Text => {
            let mut s = String::new();
            if let Some((k, v)) = header {
                s.push_str(&format!("# {k} {v}\n"));
            }
            s.push_str(&g.to_edgelist());
            Output::Raw(s)
        }
        OutputFormat::JsonLines => {
            let edges: Vec<Value> = g.edges().map(|(u, v)| Value::from(vec![g.label(u), g.label(v)])).collect();
            let mut r = Record::new().with("n", g.n()).with("m", g.m());
            if let Some((k, v)) = header {
                r.push(k, v);
            }
            r.push("vertices", Value::from(g.labels().to_vec()));
            r.push("edges", Value::from(edges));
            Output::Record(r)
        }
    }
}

fn gadget(ctx: &Ctx, kind: &GadgetKind) -> Outcome {
    let usage = |e: Error| match e {
        Error::InvalidArgument(m) => Failure::Usage(m),
        other => Failure::Lib(other),
    };
    let out = match kind {
        GadgetKind::Path { c } => graph_output(ctx, &spread::make_path_gadget(*c).map_err(usage)?, None),
        GadgetKind::Cycle { c } => graph_output(ctx, &spread::make_cycle_gadget(*c).map_err(usage)?, None),
        GadgetKind::Reduction { input, k } => {
            let g = ctx.load(input)?;
            if *k == 0 || *k > g.n() {
                return Err(Failure::Usage(format!("k must lie in 1..={}", g.n())));
            }
            let r = exact::zf_to_cpd_gadget(&g, *k);
            graph_output(ctx, &r.graph, Some(("target", r.k)))
        }
        GadgetKind::Random { family, n, seed, p, max_piece } => {
            if *n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            if !(0.0..=1.0).contains(p) {
                return Err(Failure::Usage("--p must lie in [0, 1]".into()));
            }
            let mut rng = generators::rng(*seed);
            let g = match family {
                Family::Tree => generators::random_tree(*n, &mut rng),
                Family::Connected => generators::random_connected(*n, *p, &mut rng),
                Family::Block => generators::random_block_graph(*n, *max_piece, &mut rng),
                Family::Cactus => generators::random_cactus(*n, *max_piece, &mut rng),
                Family::CutVertex => {
                    if *n < 3 {
                        return Err(Failure::Usage("the cut-vertex family needs --n >= 3".into()));
                    }
                    generators::random_with_cut_vertex(*n, *p, &mut rng)
                }
            };
            graph_output(ctx, &g, None)
        }
    };
    Ok((out, 0))
}

fn check(ctx: &Ctx, input: &Path, set: &str, problem: Problem, trace: bool) -> Outcome {
    let g = ctx.load(input)?;
    let mut vs = parse_labels(&g, set)?;
    vs.sort_unstable();
    vs.dedup();
    let s = VertexSet::from_vertices(g.n(), vs.iter().copied());
    let (pd, tr) = is_power_dominating(&g, &s);
    let connected = is_connected_set(&g, &s);
    let valid = pd && (problem == Problem::Pd || connected);
    let mut r = Record::new()
        .with("problem", problem_name(problem))
        .with("set", labels(&g, &vs))
        .with("size", vs.len())
        .with("power_dominating", pd)
        .with("connected", connected)
        .with("valid", valid)
        .with("colored", tr.final_colored.len());
    r.push("rounds", if pd { Value::from(tr.last_timestep()) } else { Value::Null });
    if trace {
        r.push("trace", Value::from(tr.render(&g).lines().map(str::to_string).collect::<Vec<_>>()));
    }
    Ok((Output::Record(r), if valid { 0 } else { 2 }))
}

struct RowResult {
    record: Record,
    ok: bool,
}

fn batch_row(ctx: &Ctx, path: &Path, m: MethodArg, timing: bool) -> RowResult {
    let start = Instant::now();
    let mut errors: Vec<String> = Vec::new();
    let mut record = Record::new().with("name", path.display().to_string());
    let g = match ctx.load(path) {
        Ok(g) => Some(g),
        Err(e) => {
            errors.push(e.to_string());
            None
        }
    };
    let mut note = |r: powerdom::Result<Value>| match r {
        Ok(v) => v,
        Err(e) => {
            errors.push(e.to_string());
            Value::Null
        }
    };
    let (n, size, gp, gpc, pt, meth) = match &g {
        None => (Value::Null, Value::Null, Value::Null, Value::Null, Value::Null, Value::Null),
        Some(g) => {
            let milp_all = m == MethodArg::Milp;
            let b = ctx.model_budget();
            let gp = note(if milp_all {
                milp::round_number(g, g.n(), false, &b).map(Value::from)
            } else {
                exact::min_pds(g, &ctx.opts).map(|r| Value::from(r.optimum))
            });
            let cpd = solve_cpds(g, method(m), &ctx.opts);
            let meth = cpd.as_ref().map_or(Value::Null, |r| Value::from(r.method.to_string()));
            let gpc = note(cpd.map(|r| Value::from(r.optimum)));
            let pt = note(if milp_all {
                milp::ppt_by_search(g, false, &b).map(Value::from)
            } else {
                exact::ppt(g, &ctx.opts).map(|p| Value::from(p.ppt))
            });
            (Value::from(g.n()), Value::from(g.m()), gp, gpc, pt, meth)
        }
    };
    record.push("n", n);
    record.push("m", size);
    record.push("gamma_p", gp);
    record.push("gamma_pc", gpc);
    record.push("ppt", pt);
    record.push("method", meth);
    if timing {
        record.push("time_ms", start.elapsed().as_millis() as u64);
    }
    errors.dedup();
    let ok = errors.is_empty();
    record.push("status", if ok { "ok".to_string() } else { format!("error: {}", errors.join("; ")) });
    RowResult { record, ok }
}

fn batch(ctx: &Ctx, inputs: &[std::path::PathBuf], m: MethodArg, timing: bool, jobs: usize) -> Outcome {
    let slots: Vec<Mutex<Option<RowResult>>> = inputs.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.clamp(1, inputs.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= inputs.len() {
                    break;
                }
                let row = batch_row(ctx, &inputs[i], m, timing);
                *slots[i].lock().expect("row slot") = Some(row);
            });
        }
    });
    let rows: Vec<RowResult> = slots.into_iter().map(|s| s.into_inner().expect("row slot").expect("row computed")).collect();
    let all_ok = rows.iter().all(|r| r.ok);
    Ok((Output::Table(rows.into_iter().map(|r| r.record).collect(), None), if all_ok { 0 } else { 2 }))
}
