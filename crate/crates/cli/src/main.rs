use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cascade_kit::biparabolic::{borel, make_biparabolic};
use cascade_kit::cascade::kostant_cascade;
use cascade_kit::checker::{
    check_half_set, integrality_sweep, max_rank_from_env, type_a_shortcut, CertifyReport, Shortcut, Status, Verdict,
    Witness,
};
use cascade_kit::diophantine::{
    hilbert_basis_with_budget, is_free_monoid, HilbertOutcome, MonoidProblem, DEGREE_BUDGET,
};
use cascade_kit::frobenius_pairs::{borel_constraints, frobenius_h, frobenius_sweep};
use cascade_kit::integral_pairs::{
    canonical_half_set, compute_pi1_z, compute_pi_z, reduce_half_set, w_orbit, HalfSet, PiZ,
};
use cascade_kit::semiinvariant_weights::{
    composite_orbits, coroots_of, generator_weights, integral_generators, parabolic_generators, GeneratorInfo,
};
use cascade_kit::{Error, Family, NodeSet, RootSystem, RootVec, SimpleSystem};

#[derive(Parser)]
#[command(
    name = "cascade-kit",
    version,
    about = "Kostant cascades, Frobenius biparabolics and the type-C integrality checker"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Args)]
struct System {
    /// Type label, e.g. C, C6, E7, G2.
    #[arg(value_name = "TYPE")]
    label: String,
    rank: Option<usize>,
}

impl System {
    fn build(&self) -> Result<RootSystem, Error> {
        RootSystem::parse(&self.label, self.rank)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Kostant cascade of π or of a subset.
    Cascade {
        #[command(flatten)]
        system: System,
        #[arg(long, default_value = "all")]
        nodes: String,
    },
    /// h for a Frobenius biparabolic; for a non-Frobenius Borel, the constraints on h.
    Frobenius {
        #[command(flatten)]
        system: System,
        #[arg(long, conflicts_with_all = ["pi1", "pi2"])]
        borel: bool,
        #[arg(long, default_value = "")]
        pi1: String,
        #[arg(long, default_value = "all")]
        pi2: String,
    },
    /// Every Frobenius biparabolic of a root system, with findings.
    FrobeniusSweep {
        #[command(flatten)]
        system: System,
    },
    /// π^Z for a half set, and π₁^Z when --pi1 is given (type C).
    PiZ {
        #[command(flatten)]
        system: System,
        #[arg(long, default_value = "")]
        half: String,
        #[arg(long)]
        pi1: Option<String>,
    },
    /// Normal form of a half set under the Weyl group of π₁.
    Reduce {
        #[command(flatten)]
        system: System,
        #[arg(long, default_value = "")]
        pi1: String,
        #[arg(long, default_value = "")]
        half: String,
    },
    /// Semi-invariant generator weights and coroot pairings.
    Weights {
        #[command(flatten)]
        system: System,
        #[arg(long, default_value = "")]
        pi1: String,
        #[arg(long, default_value = "")]
        half: String,
        /// Coroot labels to pair against (default: h_Γ, or none for the parabolic).
        #[arg(long)]
        coroots: Option<String>,
        /// Explicit mode: the integral simple system, roots as `1,0,0;0,1,0`.
        #[arg(long, requires_all = ["side1", "side2"])]
        all: Option<String>,
        #[arg(long)]
        side1: Option<String>,
        #[arg(long)]
        side2: Option<String>,
    },
    /// Hilbert basis of {m ∈ ℕ^k : Σ m_i a_i = 0}, vectors as `2;-1;-2`.
    Hilbert {
        #[arg(long, allow_hyphen_values = true)]
        vectors: String,
        #[arg(long, default_value_t = DEGREE_BUDGET)]
        budget: u32,
    },
    /// Runs the exclusion pipeline on one half set.
    Check {
        #[command(flatten)]
        system: System,
        #[arg(long, default_value = "")]
        pi1: String,
        #[arg(long, default_value = "")]
        half: String,
    },
    /// Runs the pipeline on every half set of a type-C parabolic.
    Certify {
        #[command(flatten)]
        system: System,
        #[arg(long, default_value = "")]
        pi1: String,
        /// Rank guard (default: CASCADE_KIT_MAX_RANK or 8).
        #[arg(long)]
        max_rank: Option<usize>,
    },
    /// Integrality when every component of π₁ and π₂ is of type A.
    Shortcut {
        #[command(flatten)]
        system: System,
        #[arg(long, default_value = "")]
        pi1: String,
        #[arg(long, default_value = "all")]
        pi2: String,
    },
}

struct Output {
    text: String,
    tsv: String,
    json: serde_json::Value,
    code: u8,
}

impl Output {
    fn ok(text: String, tsv: String, json: serde_json::Value) -> Output {
        Output { text, tsv, json, code: 0 }
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::UnknownType(format!("index `{t}`"))))
        .collect()
}

fn nodes(rs: &RootSystem, s: &str) -> Result<NodeSet, Error> {
    if s.trim() == "all" {
        return Ok(NodeSet::full(rs.rank()));
    }
    NodeSet::new(rs.rank(), &parse_list(s)?)
}

fn half_set(rs: &RootSystem, s: &str) -> Result<HalfSet, Error> {
    HalfSet::new(rs.rank(), &parse_list(s)?)
}

fn parse_vectors(s: &str) -> Result<Vec<Vec<i64>>, Error> {
    s.split(';')
        .map(|v| {
            v.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::UnknownType(format!("integer `{t}`"))))
                .collect()
        })
        .collect()
}

fn parse_roots(rs: &RootSystem, s: &str) -> Result<SimpleSystem, Error> {
    let roots = parse_vectors(s)?.into_iter().map(RootVec).collect();
    SimpleSystem::new(rs, roots)
}

fn join<T: ToString>(v: impl IntoIterator<Item = T>, sep: &str) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn root_strings(v: &[RootVec]) -> Vec<String> {
    v.iter().map(RootVec::to_string).collect()
}

fn cmd_cascade(rs: &RootSystem, nodes_s: &str) -> Result<Output, Error> {
    let ns = nodes(rs, nodes_s)?;
    let c = kostant_cascade(rs, &SimpleSystem::from_nodes(rs, &ns));
    let text = format!("{} cascade of {}: {}\n", rs.label(), ns, join(root_strings(c.roots()), ", "));
    let mut tsv = String::from("index\troot\tcoefficients\n");
    for (i, b) in c.roots().iter().enumerate() {
        writeln!(tsv, "{}\t{}\t{}", i + 1, b, join(&b.0, ",")).unwrap();
    }
    Ok(Output::ok(text, tsv, json!({ "system": rs.label(), "nodes": ns, "cascade": c.roots() })))
}

fn cmd_frobenius(rs: &RootSystem, is_borel: bool, pi1: &str, pi2: &str) -> Result<Output, Error> {
    let bp = if is_borel { borel(rs) } else { make_biparabolic(rs, nodes(rs, pi1)?, nodes(rs, pi2)?)? };
    match frobenius_h(&bp) {
        Ok(fh) => {
            let vals = fh.h.values_as_strings();
            let text = format!(
                "{} pi1={} pi2={}\nh on π = ({})\nh = {}\nmax|h| = {}, m = {}\n",
                rs.label(),
                bp.pi1(),
                bp.pi2(),
                vals.join(", "),
                fh.h,
                fh.max_abs,
                fh.bound_m
            );
            let header: Vec<String> = (1..=rs.rank()).map(|i| format!("h(a{i})")).collect();
            let tsv = format!("type\t{}\n{}\t{}\n", header.join("\t"), rs.label(), vals.join("\t"));
            let j = json!({ "system": rs.label(), "pi1": bp.pi1(), "pi2": bp.pi2(), "frobenius": fh });
            Ok(Output::ok(text, tsv, j))
        }
        Err(Error::NotFrobenius) if is_borel => {
            let c = borel_constraints(rs);
            let mut text = format!(
                "{} Borel is not Frobenius; h(β) = 1 on the cascade leaves {} free parameter(s)\n",
                rs.label(),
                c.solution_dimension
            );
            let mut tsv = String::from("type\ti\th(a_i)\n");
            for (i, v) in c.determined.iter().enumerate() {
                if let Some(v) = v {
                    writeln!(text, "h(a{}) = {v}", i + 1).unwrap();
                    writeln!(tsv, "{}\t{}\t{v}", rs.label(), i + 1).unwrap();
                }
            }
            for o in &c.orbit_sums {
                let s = o.sum.clone().unwrap_or_else(|| "free".into());
                writeln!(text, "h(a{}) + h(a{}) = {s}", o.i, o.j).unwrap();
                writeln!(tsv, "{}\t{}+{}\t{s}", rs.label(), o.i, o.j).unwrap();
            }
            Ok(Output::ok(text, tsv, json!({ "system": rs.label(), "constraints": c })))
        }
        Err(e) => Err(e),
    }
}

fn cmd_frobenius_sweep(rs: &RootSystem) -> Result<Output, Error> {
    let t = frobenius_sweep(rs)?;
    let non_integral = t.rows.iter().filter(|r| !r.integral).count();
    let beyond = t.rows.iter().filter(|r| !r.within_bound).count();
    let mut text = format!(
        "{}: {} pairs, {} Frobenius, {} non-integral, {} beyond the bound m\n",
        t.label,
        t.pairs_examined,
        t.rows.len(),
        non_integral,
        beyond
    );
    for f in &t.findings {
        writeln!(text, "finding {:?}: pi1={} pi2={} h=({}) {}", f.kind, f.pi1, f.pi2, f.h_values.join(","), f.detail)
            .unwrap();
    }
    let mut tsv = String::from("pi1\tpi2\th\tvalue_set\tintegral\tm\twithin_bound\n");
    for r in &t.rows {
        writeln!(
            tsv,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.pi1,
            r.pi2,
            r.h.values_as_strings().join(","),
            r.value_set.join(","),
            r.integral,
            r.bound_m,
            r.within_bound
        )
        .unwrap();
    }
    Ok(Output::ok(text, tsv, serde_json::to_value(&t).expect("serializable")))
}

fn cmd_pi_z(rs: &RootSystem, half_s: &str, pi1_s: Option<&str>) -> Result<Output, Error> {
    let half = half_set(rs, half_s)?;
    let pz = compute_pi_z(rs, &half)?;
    let Some(pi1_s) = pi1_s else {
        return Ok(match pz {
            PiZ::Admissible(ss) => {
                let text = format!("pi^Z = {{{}}}\n", join(root_strings(ss.elements()), ", "));
                let tsv = format!("root\n{}\n", join(root_strings(ss.elements()), "\n"));
                Output::ok(text, tsv, json!({ "system": rs.label(), "half": half, "pi_z": ss.elements() }))
            }
            PiZ::Inadmissible => Output::ok(
                format!("{half} admits no regular integral pair\n"),
                "root\n".into(),
                json!({ "system": rs.label(), "half": half, "pi_z": null }),
            ),
        });
    };
    let pi1 = nodes(rs, pi1_s)?;
    let d = compute_pi1_z(rs, &pi1, &half)?;
    let text = format!(
        "pi^Z = {{{}}}\npi1^Z = {{{}}}\nbar half = {}\n",
        join(root_strings(d.pi_z.elements()), ", "),
        join(root_strings(d.pi1_z.elements()), ", "),
        d.reduced_half_set
    );
    let mut tsv = String::from("root\tin_pi1_z\n");
    for x in d.pi_z.elements() {
        writeln!(tsv, "{x}\t{}", d.pi1_z.contains(x)).unwrap();
    }
    let j = json!({
        "system": rs.label(), "half": half, "pi1": pi1, "pi_z": d.pi_z.elements(), "pi1_z": d.pi1_z.elements(),
        "bar_half": d.reduced_half_set, "beta_ir_in_pi1_z": d.beta_ir_in_pi1z,
    });
    Ok(Output::ok(text, tsv, j))
}

fn cmd_reduce(rs: &RootSystem, pi1_s: &str, half_s: &str) -> Result<Output, Error> {
    let pi1 = nodes(rs, pi1_s)?;
    let half = half_set(rs, half_s)?;
    let r = reduce_half_set(rs, &pi1, &half)?;
    let orbit = w_orbit(rs, &pi1, &half);
    let canon = canonical_half_set(rs, &pi1, &half);
    let text = format!("{half} reduces to {r} (orbit of {} half sets, canonical {canon})\n", orbit.len());
    let tsv = format!("half\treduced\torbit_size\tcanonical\n{half}\t{r}\t{}\t{canon}\n", orbit.len());
    Ok(Output::ok(text, tsv, json!({ "half": half, "reduced": r, "orbit": orbit, "canonical": canon })))
}

fn weights_output(gens: &[GeneratorInfo], coroot_labels: &[String]) -> Output {
    let mut text = String::new();
    let mut tsv = format!("generator\tweight\t{}\n", join(coroot_labels.iter().map(|c| format!("{c}(weight)")), "\t"));
    for g in gens {
        writeln!(text, "{}\t{}\t({})", g.label, g.weight, join(&g.pairing_vector, ", ")).unwrap();
        writeln!(tsv, "{}\t{}\t{}", g.label, g.weight, join(&g.pairing_vector, "\t")).unwrap();
    }
    Output::ok(text, tsv, json!({ "coroots": coroot_labels, "generators": gens }))
}

#[allow(clippy::too_many_arguments)]
fn cmd_weights(
    rs: &RootSystem,
    pi1_s: &str,
    half_s: &str,
    coroots: Option<&str>,
    all: Option<&str>,
    side1: Option<&str>,
    side2: Option<&str>,
) -> Result<Output, Error> {
    let explicit_labels = coroots.map(parse_list).transpose()?;
    let names = |l: &[usize]| l.iter().map(|i| format!("a{i}^v")).collect::<Vec<_>>();
    if let (Some(all), Some(s1), Some(s2)) = (all, side1, side2) {
        let (all, s1, s2) = (parse_roots(rs, all)?, parse_roots(rs, s1)?, parse_roots(rs, s2)?);
        let labels = explicit_labels.unwrap_or_default();
        let orbits = composite_orbits(rs, &all, &s1, &s2);
        let gens = generator_weights(rs, &s1, &s2, &orbits, &coroots_of(rs, &labels)?)?;
        return Ok(weights_output(&gens, &names(&labels)));
    }
    let pi1 = nodes(rs, pi1_s)?;
    let half = half_set(rs, half_s)?;
    if half.is_empty() {
        let labels = explicit_labels.unwrap_or_default();
        let gens = parabolic_generators(rs, &pi1, &coroots_of(rs, &labels)?)?;
        return Ok(weights_output(&gens, &names(&labels)));
    }
    let reduced = reduce_half_set(rs, &pi1, &half)?;
    let data = compute_pi1_z(rs, &pi1, &reduced)?;
    let labels = explicit_labels.unwrap_or_else(|| {
        reduced.indices().iter().copied().filter(|&i| pi1.contains(i) && data.reduced_half_set.contains(i)).collect()
    });
    let gens = integral_generators(rs, &data, &coroots_of(rs, &labels)?)?;
    let mut out = weights_output(&gens, &names(&labels));
    if reduced != half {
        out.text = format!("{half} reduced to {reduced}\n{}", out.text);
    }
    Ok(out)
}

fn cmd_hilbert(vectors: &str, budget: u32) -> Result<Output, Error> {
    let p = MonoidProblem::new(parse_vectors(vectors)?)?;
    let names: Vec<String> = (1..=p.k()).map(|i| format!("p{i}")).collect();
    match hilbert_basis_with_budget(&p, budget) {
        HilbertOutcome::Basis(b) => {
            let f = is_free_monoid(&b);
            let mut text = format!("Hilbert basis: {}\n", join(b.iter().map(|e| e.monomial(&names)), ", "));
            writeln!(text, "free: {} (rank {}, {} elements)", f.free, f.rank, b.len()).unwrap();
            if let Some(r) = &f.relation {
                let side = |c: &[u64]| {
                    join(
                        c.iter().zip(&b).filter(|(k, _)| **k > 0).map(|(k, e)| {
                            if *k == 1 {
                                format!("({})", e.monomial(&names))
                            } else {
                                format!("({})^{k}", e.monomial(&names))
                            }
                        }),
                        "",
                    )
                };
                writeln!(text, "relation: {} = {}", side(&r.lhs), side(&r.rhs)).unwrap();
            }
            let mut tsv = format!("{}\tmonomial\n", names.join("\t"));
            for e in &b {
                writeln!(tsv, "{}\t{}", join(&e.0, "\t"), e.monomial(&names)).unwrap();
            }
            Ok(Output::ok(text, tsv, json!({ "basis": b, "freeness": f })))
        }
        HilbertOutcome::BudgetExceeded { budget, found } => Ok(Output {
            text: format!("budget exceeded at total degree {budget}; {} minimal solutions found so far\n", found.len()),
            tsv: String::new(),
            json: json!({ "budget_exceeded": budget, "found": found }),
            code: 1,
        }),
    }
}

fn verdict_text(rs: &RootSystem, pi1: &NodeSet, v: &Verdict) -> String {
    let mut t = format!("{} pi1={} half={}\n", rs.label(), pi1, v.half_set);
    if v.reduced != v.half_set {
        writeln!(t, "reduced: {}", v.reduced).unwrap();
    }
    if v.status == Status::IntegralTrivially {
        writeln!(t, "verdict: IntegralTrivially").unwrap();
        return t;
    }
    writeln!(t, "h_gamma: {}", join(v.h_gamma.iter().map(|i| format!("a{i}^v")), ", ")).unwrap();
    if let Some(c) = &v.counts {
        writeln!(
            t,
            "counts: rl={} rl_Z={} s={} s_Z={} diff={} dim h_gamma={}",
            c.rl, c.rl_z, c.s, c.s_z, c.diff, c.dim_h_gamma
        )
        .unwrap();
    }
    for g in &v.generators {
        writeln!(t, "  {}\t{}\t({})", g.label, g.weight, join(&g.pairing_vector, ", ")).unwrap();
    }
    let names = v.generator_names();
    match &v.witness {
        Witness::NotFree { basis, relation, .. } => {
            writeln!(t, "Hilbert basis: {}", join(basis.iter().map(|e| e.monomial(&names)), ", ")).unwrap();
            let side = |c: &[u64]| {
                join(c.iter().zip(basis).filter(|(k, _)| **k > 0).map(|(_, e)| format!("({})", e.monomial(&names))), "")
            };
            writeln!(t, "relation: {} = {}", side(&relation.lhs), side(&relation.rhs)).unwrap();
        }
        Witness::Factorization { basis, report, .. } => {
            writeln!(t, "Hilbert basis: {}", join(basis.iter().map(|e| e.monomial(&names)), ", ")).unwrap();
            writeln!(t, "legal partitions: {}", report.legal_partitions).unwrap();
            for f in &report.failures {
                let q = join(f.q.iter().map(|&i| names[i].clone()), ",");
                writeln!(t, "  Q={{{q}}}: {} {:?}", basis[f.element].monomial(&names), f.violation).unwrap();
            }
        }
        Witness::BudgetExceeded { budget, .. } => writeln!(t, "Hilbert basis exceeded degree {budget}").unwrap(),
        Witness::Counts(_) | Witness::None => {}
    }
    writeln!(t, "verdict: {}", status_str(v.status)).unwrap();
    t
}

fn status_str(s: Status) -> String {
    match s {
        Status::Excluded(stage) => format!("Excluded({stage:?})"),
        other => format!("{other:?}"),
    }
}

fn cmd_check(rs: &RootSystem, pi1_s: &str, half_s: &str) -> Result<Output, Error> {
    let pi1 = nodes(rs, pi1_s)?;
    let half = half_set(rs, half_s)?;
    let v = check_half_set(rs, &pi1, &half)?;
    let tsv = format!("half\treduced\tverdict\n{}\t{}\t{}\n", v.half_set, v.reduced, status_str(v.status));
    let code = u8::from(v.status == Status::Inconclusive);
    Ok(Output { text: verdict_text(rs, &pi1, &v), tsv, json: serde_json::to_value(&v).expect("serializable"), code })
}

fn certify_text(r: &CertifyReport) -> String {
    let nonempty = r.classes.iter().filter(|c| !c.representative.is_empty()).count();
    let mut t = format!("{} pi1={} rl(q)={}: {} reduced classes\n", r.label, r.pi1, r.rl_q, nonempty);
    for c in &r.classes {
        let members = join(c.members.iter().map(|m| m.to_string()), " ");
        writeln!(t, "  {}\t{}\t[{}]", c.representative, status_str(c.verdict.status), members).unwrap();
    }
    if r.certified {
        t.push_str("integrality certified\n");
    } else {
        writeln!(t, "inconclusive: {}", join(r.inconclusive.iter().map(|h| h.to_string()), " ")).unwrap();
    }
    t
}

fn cmd_certify(rs: &RootSystem, pi1_s: &str, max_rank: Option<usize>) -> Result<Output, Error> {
    let pi1 = nodes(rs, pi1_s)?;
    let r = integrality_sweep(rs, &pi1, max_rank.unwrap_or_else(max_rank_from_env))?;
    let mut tsv = String::from("representative\tverdict\tmembers\n");
    for c in &r.classes {
        writeln!(
            tsv,
            "{}\t{}\t{}",
            c.representative,
            status_str(c.verdict.status),
            join(c.members.iter().map(|m| m.to_string()), " ")
        )
        .unwrap();
    }
    let code = u8::from(!r.certified);
    Ok(Output { text: certify_text(&r), tsv, json: serde_json::to_value(&r).expect("serializable"), code })
}

fn cmd_shortcut(rs: &RootSystem, pi1_s: &str, pi2_s: &str) -> Result<Output, Error> {
    let (pi1, pi2) = (nodes(rs, pi1_s)?, nodes(rs, pi2_s)?);
    let s = type_a_shortcut(rs, &pi1, &pi2)?;
    let msg = match s {
        Shortcut::Integral => "integral: every component of pi1 and pi2 is of type A",
        Shortcut::NotApplicable => "not applicable",
    };
    let text = format!("{} pi1={} pi2={}: {msg}\n", rs.label(), pi1, pi2);
    let tsv = format!("pi1\tpi2\tshortcut\n{pi1}\t{pi2}\t{s:?}\n");
    Ok(Output::ok(text, tsv, json!({ "system": rs.label(), "pi1": pi1, "pi2": pi2, "shortcut": s })))
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Cascade { system, nodes } => cmd_cascade(&system.build()?, nodes),
        Command::Frobenius { system, borel, pi1, pi2 } => cmd_frobenius(&system.build()?, *borel, pi1, pi2),
        Command::FrobeniusSweep { system } => cmd_frobenius_sweep(&system.build()?),
        Command::PiZ { system, half, pi1 } => cmd_pi_z(&system.build()?, half, pi1.as_deref()),
        Command::Reduce { system, pi1, half } => cmd_reduce(&system.build()?, pi1, half),
        Command::Weights { system, pi1, half, coroots, all, side1, side2 } => cmd_weights(
            &system.build()?,
            pi1,
            half,
            coroots.as_deref(),
            all.as_deref(),
            side1.as_deref(),
            side2.as_deref(),
        ),
        Command::Hilbert { vectors, budget } => cmd_hilbert(vectors, *budget),
        Command::Check { system, pi1, half } => cmd_check(&system.build()?, pi1, half),
        Command::Certify { system, pi1, max_rank } => {
            let rs = system.build()?;
            if rs.family() != Family::C {
                return Err(Error::Unsupported("a type C root system".into()));
            }
            cmd_certify(&rs, pi1, *max_rank)
        }
        Command::Shortcut { system, pi1, pi2 } => cmd_shortcut(&system.build()?, pi1, pi2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Tsv => print!("{}", out.tsv),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
