//! Command-line surface for the psdecomp library: datum inspection,
//! certificate checking, table generation, vertex-pair enumeration and the
//! root-system lemma suites.
//!
//! Exit codes: 0 certified / 1 refuted / 3 undecided / 2 invalid input.
//! All output is deterministic for a fixed invocation (flags and seed),
//! independent of the worker thread count.

use clap::{Args, Parser, Subcommand};
use psdecomp::decomp::{self, FieldType, Verdict};
use psdecomp::intertwine::AffineLine;
use psdecomp::multi::{self, PairMode};
use psdecomp::rootsys::{build_root_datum, rat, Family, Mark, RootDatum, Weight};
use psdecomp::weyl;
use std::collections::BTreeMap;
use std::process::ExitCode;

const EXIT_CERTIFIED: u8 = 0;
const EXIT_REFUTED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(
    name = "psdecomp",
    about = "Certify direct-sum decomposition points of principal-series inductions",
    after_help = "Environment:\n  PSDECOMP_LEMMA_CAP  override the Weyl-group order below which the lemma\n                      suites run exhaustively (default 10000)"
)]
struct Cli {
    /// Output format: text or json.
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Worker thread count (default: all cores). Output is identical for
    /// any value.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct TypeArg {
    /// Simple type, e.g. A2, D4, E6.
    #[arg(long = "type")]
    datum: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect a root datum: counts, Cartan matrix, Dynkin diagram.
    Roots {
        #[command(flatten)]
        datum: TypeArg,
    },
    /// Check the decomposition assumptions for (lambda0, alpha, w0).
    Check {
        #[command(flatten)]
        datum: TypeArg,
        /// Base point in fundamental-weight coordinates, e.g. "-1,1,-1,-1".
        #[arg(long, allow_hyphen_values = true)]
        lambda0: String,
        /// Distinguished simple root (1-based node index).
        #[arg(long)]
        alpha: usize,
        /// Stabilizer element as a digit string of node indices, applied
        /// right to left: "134" = w1 w3 w4.
        #[arg(long)]
        w0: String,
        /// Optional line direction in fundamental-weight coordinates.
        #[arg(long, allow_hyphen_values = true)]
        direction: Option<String>,
        /// Local field: p-adic, real, or complex.
        #[arg(long, default_value = "p-adic")]
        field: String,
    },
    /// Emit decomposition tables (all configurations of a datum, or the
    /// published reference tables).
    Table {
        /// Simple type; omitted when --paper-tables is given.
        #[arg(long = "type")]
        datum: Option<String>,
        /// Reproduce the published rank-2 and SL4 tables from scratch.
        #[arg(long)]
        paper_tables: bool,
        /// Free parameter value for the unconstrained nodes.
        #[arg(long, default_value = "1")]
        t: String,
    },
    /// Enumerate simultaneous vertex-pair configurations.
    Multi {
        #[command(flatten)]
        datum: TypeArg,
        /// Pair selection: direct (exact) or graph (published heuristic).
        #[arg(long, default_value = "direct")]
        mode: String,
    },
    /// Run the root-system lemma property suites.
    Lemmas {
        #[command(flatten)]
        datum: TypeArg,
        /// Random samples for the non-exhaustive parts.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// RNG seed.
        #[arg(long, default_value_t = 20240817)]
        seed: u64,
    },
}

fn parse_type(s: &str) -> Result<RootDatum, String> {
    let s = s.trim();
    let mut chars = s.chars();
    let letter = chars.next().ok_or("empty type")?;
    let family = Family::from_letter(letter).ok_or_else(|| format!("unknown family {letter:?}"))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| format!("bad rank in {s:?}"))?;
    build_root_datum(family, rank).map_err(|e| e.to_string())
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    let json = match cli.format.as_str() {
        "json" => true,
        "text" => false,
        other => return Err(format!("unknown format {other:?}")),
    };

    match cli.cmd {
        Cmd::Roots { datum } => {
            let d = parse_type(&datum.datum)?;
            cmd_roots(&d, json)
        }
        Cmd::Check {
            datum,
            lambda0,
            alpha,
            w0,
            direction,
            field,
        } => {
            let d = parse_type(&datum.datum)?;
            cmd_check(&d, &lambda0, alpha, &w0, direction.as_deref(), &field, json)
        }
        Cmd::Table {
            datum,
            paper_tables,
            t,
        } => {
            if paper_tables {
                cmd_paper_tables(json)
            } else {
                let name = datum.ok_or("either --type or --paper-tables is required")?;
                let d = parse_type(&name)?;
                let t: psdecomp::Rat = t.parse().map_err(|_| format!("bad rational {t:?}"))?;
                cmd_table(&d, t, json)
            }
        }
        Cmd::Multi { datum, mode } => {
            let d = parse_type(&datum.datum)?;
            let mode = PairMode::parse(&mode).map_err(|e| e.to_string())?;
            cmd_multi(&d, mode, json)
        }
        Cmd::Lemmas {
            datum,
            samples,
            seed,
        } => {
            let d = parse_type(&datum.datum)?;
            cmd_lemmas(&d, samples, seed, json)
        }
    }
}

fn cmd_roots(d: &RootDatum, json: bool) -> Result<u8, String> {
    let order = weyl::weyl_order(d);
    if json {
        let mut v = d.to_json();
        v["weyl_order"] = serde_json::json!(order.to_string());
        v["symmetrizer"] = serde_json::json!(d.symmetrizer);
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!(
            "{}: rank {}, {} positive roots, Weyl order {}",
            d.id(),
            d.rank,
            d.positive_roots.len(),
            order
        );
        println!("Cartan matrix:");
        for row in &d.cartan {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            println!("  {}", cells.join(" "));
        }
        println!("Symmetrizer: {:?}", d.symmetrizer);
        print!("{}", d.render_dynkin(&[]).map_err(|e| e.to_string())?);
    }
    Ok(EXIT_CERTIFIED)
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::HoldsBySufficientCondition => "holds_by_sufficient_condition",
        Verdict::Unknown => "unknown",
    }
}

fn cmd_check(
    d: &RootDatum,
    lambda0: &str,
    alpha: usize,
    w0: &str,
    direction: Option<&str>,
    field: &str,
    json: bool,
) -> Result<u8, String> {
    let lambda0 = Weight::parse(lambda0).map_err(|e| e.to_string())?;
    if lambda0.rank() != d.rank {
        return Err(format!(
            "lambda0 has {} coordinates, datum has rank {}",
            lambda0.rank(),
            d.rank
        ));
    }
    let word = weyl::parse_word(w0).map_err(|e| e.to_string())?;
    let w0 = weyl::from_word(d, &word).map_err(|e| e.to_string())?;
    let field = FieldType::parse(field).map_err(|e| e.to_string())?;
    let line = match direction {
        Some(v) => {
            let v = Weight::parse(v).map_err(|e| e.to_string())?;
            Some(AffineLine::new(lambda0.clone(), v).map_err(|e| e.to_string())?)
        }
        None => None,
    };
    let cert = decomp::check_assumptions(d, &lambda0, alpha, &w0, line, field, None)
        .map_err(|e| e.to_string())?;

    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&cert.to_json()).unwrap()
        );
    } else {
        println!(
            "Certificate for {}: lambda0={}, alpha={}, w0={}",
            cert.datum,
            cert.lambda0.render(),
            cert.alpha,
            cert.w0
        );
        for (id, v) in &cert.verdicts {
            println!("  {id:<4} {}", verdict_str(*v));
        }
        if let Some(k) = cert.kappa1 {
            println!("kappa1 = {k}");
        }
        if let Some((a, b)) = cert.eigenvalues {
            println!("eigenvalues: {a}, {b}");
        }
        println!("chi0 = {}", cert.chi0.render());
        println!(
            "S = {{{}}}",
            cert.s_set
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        println!("summands:");
        for s in &cert.summands {
            println!("  {s}");
        }
        if !cert.witnesses.is_empty() {
            println!(
                "stabilizer witnesses: {}",
                cert.witnesses
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
        }
        for n in &cert.notes {
            println!("note: {n}");
        }
        println!(
            "decomposition {}",
            if cert.decomposition_holds {
                "holds"
            } else {
                "not certified"
            }
        );
    }

    if cert.decomposition_holds {
        Ok(EXIT_CERTIFIED)
    } else if cert.verdicts.values().any(|v| *v == Verdict::Fails) {
        Ok(EXIT_REFUTED)
    } else {
        Ok(EXIT_UNKNOWN)
    }
}

fn diagram_line(d: &RootDatum, alpha: usize, s: &[usize]) -> Result<String, String> {
    let mut marks = vec![(alpha, Mark::Alpha)];
    for &b in s {
        marks.push((b, Mark::InS));
    }
    let art = d.render_dynkin(&marks).map_err(|e| e.to_string())?;
    Ok(art.lines().next().unwrap_or_default().to_string())
}

fn cmd_paper_tables(json: bool) -> Result<u8, String> {
    // Rank-2 sweep.
    let rank2: Vec<(String, usize, String)> = {
        let mut rows = Vec::new();
        for (family, label) in [
            (Family::A, "A2"),
            (Family::B, "B2=C2"),
            (Family::G, "G2"),
        ] {
            let d = build_root_datum(family, 2).map_err(|e| e.to_string())?;
            for alpha in 1..=2 {
                let cert = decomp::key_example(&d, alpha).map_err(|e| e.to_string())?;
                if !cert.decomposition_holds {
                    return Err(format!("{label} alpha={alpha}: key example not certified"));
                }
                rows.push((label.to_string(), alpha, cert.lambda0.render()));
            }
        }
        rows
    };

    // SL4 rows (alpha_3 omitted: mirror of alpha_1).
    let a3 = build_root_datum(Family::A, 3).map_err(|e| e.to_string())?;
    let sl4_configs: [(usize, &[usize]); 5] =
        [(1, &[2]), (1, &[2, 3]), (2, &[1]), (2, &[3]), (2, &[1, 3])];
    let mut sl4_rows = Vec::new();
    for (alpha, s) in sl4_configs {
        let sol = decomp::system_iv_solve(&a3, alpha, s, &BTreeMap::new())
            .map_err(|e| e.to_string())?;
        let witnesses = decomp::stabilizer_noncommuting_witnesses(&a3, &sol.lambda_prime, alpha)
            .map_err(|e| e.to_string())?;
        sl4_rows.push((
            alpha,
            diagram_line(&a3, alpha, s)?,
            s.to_vec(),
            witnesses
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<String>>(),
            sol.lambda0.render(),
        ));
    }

    if json {
        let v = serde_json::json!({
            "rank2": rank2.iter().map(|(ty, alpha, l0)| serde_json::json!({
                "type": ty, "alpha": alpha, "lambda0": l0,
            })).collect::<Vec<_>>(),
            "sl4": sl4_rows.iter().map(|(alpha, _, s, ws, l0)| serde_json::json!({
                "alpha": alpha, "s": s, "witnesses": ws, "lambda0": l0,
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
        return Ok(EXIT_CERTIFIED);
    }

    println!("Rank-2 key examples (lambda0 = -w_alpha . omega_alpha)");
    println!();
    println!("type   alpha  lambda0");
    for (ty, alpha, l0) in &rank2 {
        println!("{ty:<6} {alpha:<6} {l0}");
    }
    println!();
    println!("SL4 configurations (t = 1)");
    println!();
    println!("alpha  diagram    S      witnesses          lambda0");
    for (alpha, art, s, ws, l0) in &sl4_rows {
        let s_str = format!(
            "{{{}}}",
            s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        );
        let w_str = ws.join(",");
        println!("{alpha:<6} {art:<10} {s_str:<6} {w_str:<18} {l0}");
    }
    Ok(EXIT_CERTIFIED)
}

fn cmd_table(d: &RootDatum, t: psdecomp::Rat, json: bool) -> Result<u8, String> {
    if t <= rat(0, 1) {
        return Err(format!("t must be positive, got {t}"));
    }
    let certs = decomp::search(d, t).map_err(|e| e.to_string())?;
    if json {
        let v: Vec<serde_json::Value> = certs.iter().map(|c| c.to_json()).collect();
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("{} configurations for {} (t = {})", certs.len(), d.id(), t);
        println!();
        println!("alpha  S          lambda0          certified");
        for c in &certs {
            let s_str = format!(
                "{{{}}}",
                c.s_set
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            println!(
                "{:<6} {:<10} {:<16} {}",
                c.alpha,
                s_str,
                c.lambda0.render(),
                if c.decomposition_holds { "yes" } else { "no" }
            );
        }
    }
    let all = certs.iter().all(|c| c.decomposition_holds);
    Ok(if all { EXIT_CERTIFIED } else { EXIT_REFUTED })
}

fn cmd_multi(d: &RootDatum, mode: PairMode, json: bool) -> Result<u8, String> {
    let configs = multi::enumerate_pairs(d, mode).map_err(|e| e.to_string())?;
    let warnings = multi::compare_with_reference(d, &configs);
    if json {
        let v = serde_json::json!({
            "datum": d.id(),
            "mode": match mode {
                PairMode::DirectCommutation => "direct-commutation",
                PairMode::GraphConditions => "graph-conditions",
            },
            "configs": configs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "warnings": warnings,
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!(
            "{} vertex-pair configuration(s) for {} ({} mode)",
            configs.len(),
            d.id(),
            match mode {
                PairMode::DirectCommutation => "direct-commutation",
                PairMode::GraphConditions => "graph-conditions (heuristic)",
            }
        );
        for c in &configs {
            println!();
            let theta = c
                .theta
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let sets = c
                .pieces
                .iter()
                .map(|p| {
                    format!(
                        "S{}={{{}}}",
                        p.alpha,
                        p.s_set
                            .iter()
                            .map(|i| i.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                })
                .collect::<Vec<_>>()
                .join("  ");
            println!(
                "theta={{{theta}}}  {sets}  lambda0={}  commuting={}",
                c.lambda0.render(),
                if c.commuting { "yes" } else { "no" }
            );
            for line in c.render_dynkin(d).map_err(|e| e.to_string())?.lines() {
                println!("  {line}");
            }
        }
        println!();
        if warnings.is_empty() {
            println!("published-list comparison: ok");
        } else {
            for w in &warnings {
                println!("warning: {w}");
            }
        }
    }
    Ok(EXIT_CERTIFIED)
}

fn cmd_lemmas(d: &RootDatum, samples: usize, seed: u64, json: bool) -> Result<u8, String> {
    let cap = match std::env::var("PSDECOMP_LEMMA_CAP") {
        Ok(v) => v
            .parse::<u128>()
            .map_err(|_| format!("bad PSDECOMP_LEMMA_CAP {v:?}"))?,
        Err(_) => weyl::EXHAUSTIVE_LEMMA_CAP,
    };
    let report = weyl::lemma_suite_with_cap(d, samples, seed, cap);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!(report)).unwrap()
        );
    } else {
        println!(
            "Lemma suite for {} ({} over {} element(s), seed {})",
            report.datum,
            if report.exhaustive {
                "exhaustive"
            } else {
                "randomized"
            },
            report.elements_used,
            report.seed
        );
        for l in &report.lemmas {
            println!(
                "  {}: {} case(s), {} counterexample(s)",
                l.name, l.cases, l.counterexamples
            );
            for detail in &l.detail {
                println!("    counterexample: {detail}");
            }
        }
        println!(
            "{}",
            if report.pass() {
                "all lemmas pass"
            } else {
                "LEMMA FAILURES FOUND"
            }
        );
    }
    Ok(if report.pass() {
        EXIT_CERTIFIED
    } else {
        EXIT_REFUTED
    })
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}
