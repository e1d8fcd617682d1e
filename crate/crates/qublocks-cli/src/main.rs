//! Command-line front end: enumerate characters and blocks, map them across
//! the type-A / type-C correspondence, and run the audit suite.
//!
//! Exit status: 0 on success, 1 if an audit fails, 2 on usage or regime
//! errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qublocks::blocks::{
    correspond_block, correspond_block_inv, enumerate_blocks, BlockLabel, BlockReport, CoreRepr,
    Family, Regime,
};
use qublocks::characters::{
    correspond_char, correspond_char_inv, enumerate_gl, enumerate_sp, GlFamily, GlTuple, QuCharGl,
    QuCharSp, SpTuple,
};
use qublocks::partitions::Bipartition;
use qublocks::symbols::Symbol;
use qublocks::verify::{run_suite, SuiteOptions};

#[derive(Parser)]
#[command(
    name = "qublocks",
    version,
    about = "Quadratic unipotent characters and l-blocks of GL(n,q), U(n,q) and Sp(2n,q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the quadratic unipotent characters of a group
    Chars {
        /// Group family: gl, u or sp
        family: String,
        /// Rank: n for gl/u, m for sp (the group is Sp(2m,q))
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
        /// Write to this file instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Enumerate the l-blocks of a group in a regime
    Blocks {
        /// Group family: gl, u or sp
        family: String,
        /// Rank: n for gl/u, m for sp
        #[arg(long)]
        n: u32,
        /// Order of q^2 mod l
        #[arg(long)]
        f: Option<u32>,
        /// Sign eps with l | q^f - eps: +1 or -1
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<i8>,
        /// Prime power q (with --ell, derives or checks f and eps)
        #[arg(long)]
        q: Option<u64>,
        /// Odd prime l not dividing q
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Map a character or block across the type-A / type-C correspondence
    Map {
        /// Family of the source: gl, u or sp
        #[arg(long)]
        family: String,
        /// Character in pair coordinates: a bipartition [[..],[..]] for
        /// gl/u, or a pair of symbols for sp
        #[arg(long)]
        pair: Option<String>,
        /// Character in 4-tuple coordinates: [m1,m2,rho1,rho2] for gl/u or
        /// [h1,h2,rho1,rho2] for sp
        #[arg(long, allow_hyphen_values = true)]
        tuple: Option<String>,
        /// Block core: {"m1":..,"m2":..,"sigma1":..,"sigma2":..} for gl/u
        /// or {"symbols":[..,..]} for sp; requires --weights and a regime
        #[arg(long)]
        block: Option<String>,
        /// Block weights M1,M2
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        f: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<i8>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        ell: Option<u64>,
        /// Target family for the inverse direction (gl or u)
        #[arg(long)]
        target: Option<String>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the exhaustive audit suite
    Verify {
        /// Window for gl/u audits (ambient rank n)
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        /// Window for sp audits (ambient rank m)
        #[arg(long, default_value_t = 4)]
        max_m: u32,
        /// Twist contract window
        #[arg(long, default_value_t = 3)]
        max_e: u32,
        /// Largest f for audited regimes
        #[arg(long, default_value_t = 2)]
        max_f: u32,
        /// Witness pair q,l (repeatable); defaults to 3,5 3,7 5,3
        #[arg(long = "witness")]
        witnesses: Vec<String>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    });
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Chars { family, n, format, output } => cmd_chars(&family, n, format, &output),
        Command::Blocks { family, n, f, eps, q, ell, format, output } => {
            cmd_blocks(&family, n, f, eps, q, ell, format, &output)
        }
        Command::Map {
            family,
            pair,
            tuple,
            block,
            weights,
            f,
            eps,
            q,
            ell,
            target,
            format,
            output,
        } => cmd_map(&family, pair, tuple, block, weights, f, eps, q, ell, target, format, &output),
        Command::Verify { max_n, max_m, max_e, max_f, witnesses, format, output } => {
            cmd_verify(max_n, max_m, max_e, max_f, witnesses, format, &output)
        }
    }
}

fn format_or_default(format: Option<OutputFormat>) -> OutputFormat {
    format.unwrap_or_else(|| match std::env::var("QUBLOCKS_FORMAT").as_deref() {
        Ok("json") => OutputFormat::Json,
        _ => OutputFormat::Table,
    })
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<(), String> {
    match output {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => {
            let mut file = std::fs::File::create(path).map_err(|e| e.to_string())?;
            writeln!(file, "{text}").map_err(|e| e.to_string())
        }
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).map_err(|e| e.to_string())
}

fn parse_gl_family(s: &str) -> Result<GlFamily, String> {
    match parse_family(s)? {
        Family::Gl => Ok(GlFamily::Gl),
        Family::U => Ok(GlFamily::U),
        Family::Sp => Err("expected gl or u".into()),
    }
}

fn resolve_regime(
    family: Family,
    f: Option<u32>,
    eps: Option<i8>,
    q: Option<u64>,
    ell: Option<u64>,
) -> Result<Regime, String> {
    let result = match (f, eps, q, ell) {
        (Some(f), Some(eps), None, None) => Regime::new(family, f, eps),
        (Some(f), Some(eps), Some(q), Some(ell)) => Regime::with_witness(family, f, eps, q, ell),
        (None, None, Some(q), Some(ell)) => Regime::from_witness(family, q, ell),
        _ => {
            return Err(
                "specify the regime as --f and --eps, as --q and --ell, or as all four".into(),
            )
        }
    };
    result.map_err(|e| e.to_string())
}

fn render_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let fmt_row = |cells: &[String]| {
        cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:<width$}", c, width = widths[i]))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = Vec::new();
    out.push(fmt_row(&header.iter().map(|s| s.to_string()).collect::<Vec<_>>()));
    out.push(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "));
    for row in rows {
        out.push(fmt_row(row));
    }
    out.join("\n")
}

fn chars_gl_rows(chars: &[QuCharGl]) -> Vec<Vec<String>> {
    chars
        .iter()
        .map(|c| {
            let t = c.tuple();
            vec![
                c.pair().to_string(),
                t.m1.to_string(),
                t.m2.to_string(),
                t.rho1.to_string(),
                t.rho2.to_string(),
                if c.is_unipotent() { "yes".into() } else { String::new() },
            ]
        })
        .collect()
}

fn chars_sp_rows(chars: &[QuCharSp]) -> Vec<Vec<String>> {
    chars
        .iter()
        .map(|c| {
            let t = c.tuple();
            let (s1, s2) = c.symbols();
            vec![
                format!("{s1} {s2}"),
                t.h1.to_string(),
                t.h2.to_string(),
                t.rho1.to_string(),
                t.rho2.to_string(),
                if c.is_unipotent() { "yes".into() } else { String::new() },
            ]
        })
        .collect()
}

fn cmd_chars(
    family: &str,
    n: u32,
    format: Option<OutputFormat>,
    output: &Option<PathBuf>,
) -> Result<i32, String> {
    let family = parse_family(family)?;
    let format = format_or_default(format);
    let text = match family {
        Family::Gl | Family::U => {
            let gl = if family == Family::Gl { GlFamily::Gl } else { GlFamily::U };
            let chars = enumerate_gl(gl, n);
            match format {
                OutputFormat::Json => serde_json::to_string_pretty(&chars).unwrap(),
                OutputFormat::Table => render_table(
                    &["pair", "m1", "m2", "rho1", "rho2", "unipotent"],
                    &chars_gl_rows(&chars),
                ),
            }
        }
        Family::Sp => {
            let chars = enumerate_sp(n);
            match format {
                OutputFormat::Json => serde_json::to_string_pretty(&chars).unwrap(),
                OutputFormat::Table => render_table(
                    &["symbols", "h1", "h2", "rho1", "rho2", "unipotent"],
                    &chars_sp_rows(&chars),
                ),
            }
        }
    };
    emit(&text, output)?;
    Ok(0)
}

fn block_rows(reports: &[BlockReport]) -> Vec<Vec<String>> {
    reports
        .iter()
        .map(|r| {
            let core = match &r.core {
                CoreRepr::Gl { m1, m2, sigma1, sigma2 } => {
                    format!("({m1},{m2},{sigma1},{sigma2})")
                }
                CoreRepr::Sp { symbols } => format!("{} {}", symbols.0, symbols.1),
            };
            vec![
                core,
                format!("({},{})", r.weights.0, r.weights.1),
                r.size.to_string(),
                r.defect_exponent.map(|d| d.to_string()).unwrap_or_default(),
                r.endoscopic.to_string(),
            ]
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_blocks(
    family: &str,
    n: u32,
    f: Option<u32>,
    eps: Option<i8>,
    q: Option<u64>,
    ell: Option<u64>,
    format: Option<OutputFormat>,
    output: &Option<PathBuf>,
) -> Result<i32, String> {
    let family = parse_family(family)?;
    let regime = resolve_regime(family, f, eps, q, ell)?;
    let format = format_or_default(format);
    let blocks = enumerate_blocks(&regime, n).map_err(|e| e.to_string())?;
    let reports: Vec<BlockReport> = blocks.iter().map(BlockLabel::report).collect();
    let text = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&reports).unwrap(),
        OutputFormat::Table => render_table(
            &["core", "weights", "size", "defect", "endoscopic"],
            &block_rows(&reports),
        ),
    };
    emit(&text, output)?;
    Ok(0)
}

fn gl_rank_equation(chi: &QuCharGl) -> String {
    let t = chi.tuple();
    format!(
        "{}({}+1)/2 + {}({}+1)/2 + 2*{} + 2*{} = {}",
        t.m1,
        t.m1,
        t.m2,
        t.m2,
        t.rho1.size(),
        t.rho2.size(),
        chi.n()
    )
}

fn sp_rank_equation(psi: &QuCharSp) -> String {
    let t = psi.tuple();
    format!(
        "{}({}+1) + ({})^2 + {} + {} = {}",
        t.h1,
        t.h1,
        t.h2,
        t.rho1.size(),
        t.rho2.size(),
        psi.rank()
    )
}

fn render_char_map(
    chi: &QuCharGl,
    psi: &QuCharSp,
    sp_is_source: bool,
    format: OutputFormat,
) -> String {
    let (source, image) = if sp_is_source {
        (serde_json::to_value(psi).unwrap(), serde_json::to_value(chi).unwrap())
    } else {
        (serde_json::to_value(chi).unwrap(), serde_json::to_value(psi).unwrap())
    };
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(&json!({
            "source": source,
            "image": image,
            "rank_equations": {
                "type_a": gl_rank_equation(chi),
                "type_c": sp_rank_equation(psi),
            },
        }))
        .unwrap(),
        OutputFormat::Table => {
            let (s1, s2) = psi.symbols();
            let gl_line = format!(
                "{} n={} pair {} tuple {}",
                chi.family(),
                chi.n(),
                chi.pair(),
                chi.tuple()
            );
            let sp_line = format!(
                "sp m={} symbols {s1} {s2} tuple {}",
                psi.rank(),
                psi.tuple()
            );
            let (src, img) = if sp_is_source { (&sp_line, &gl_line) } else { (&gl_line, &sp_line) };
            [
                format!("source: {src}"),
                format!("image:  {img}"),
                format!(
                    "rank equations: {}  |  {}",
                    gl_rank_equation(chi),
                    sp_rank_equation(psi)
                ),
            ]
            .join("\n")
        }
    }
}

fn render_block_map(source: &BlockLabel, image: &BlockLabel, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(&json!({
            "source": source.report(),
            "image": image.report(),
        }))
        .unwrap(),
        OutputFormat::Table => format!("source: {source}\nimage:  {image}"),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_map(
    family: &str,
    pair: Option<String>,
    tuple: Option<String>,
    block: Option<String>,
    weights: Option<String>,
    f: Option<u32>,
    eps: Option<i8>,
    q: Option<u64>,
    ell: Option<u64>,
    target: Option<String>,
    format: Option<OutputFormat>,
    output: &Option<PathBuf>,
) -> Result<i32, String> {
    let family = parse_family(family)?;
    let format = format_or_default(format);
    let target_family = match &target {
        Some(t) => parse_gl_family(t)?,
        None => GlFamily::Gl,
    };
    let given = [pair.is_some(), tuple.is_some(), block.is_some()]
        .iter()
        .filter(|b| **b)
        .count();
    if given != 1 {
        return Err("specify exactly one of --pair, --tuple or --block".into());
    }

    if let Some(desc) = block {
        let core: CoreRepr = serde_json::from_str(&desc).map_err(|e| e.to_string())?;
        let weights = weights.ok_or("--block requires --weights M1,M2")?;
        let (w1, w2) = weights
            .split_once(',')
            .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
            .ok_or("--weights expects two nonnegative integers M1,M2")?;
        let regime = resolve_regime(family, f, eps, q, ell)?;
        let label = match core {
            CoreRepr::Gl { m1, m2, sigma1, sigma2 } => {
                BlockLabel::new_gl(&regime, m1, m2, sigma1, sigma2, (w1, w2))
            }
            CoreRepr::Sp { symbols } => BlockLabel::new_sp(&regime, symbols.0, symbols.1, (w1, w2)),
        }
        .map_err(|e| e.to_string())?;
        let image = match family {
            Family::Gl | Family::U => correspond_block(&label),
            Family::Sp => correspond_block_inv(&label, target_family),
        }
        .map_err(|e| e.to_string())?;
        emit(&render_block_map(&label, &image, format), output)?;
        return Ok(0);
    }

    match family {
        Family::Gl | Family::U => {
            let gl = if family == Family::Gl { GlFamily::Gl } else { GlFamily::U };
            let chi = if let Some(text) = pair {
                let pair: Bipartition = serde_json::from_str(&text).map_err(|e| e.to_string())?;
                QuCharGl::from_pair(gl, pair)
            } else {
                let (m1, m2, rho1, rho2): (u32, u32, Bipartition, Bipartition) =
                    serde_json::from_str(&tuple.unwrap()).map_err(|e| e.to_string())?;
                QuCharGl::from_tuple(gl, GlTuple { m1, m2, rho1, rho2 })
            };
            let psi = correspond_char(&chi);
            emit(&render_char_map(&chi, &psi, false, format), output)?;
        }
        Family::Sp => {
            let psi = if let Some(text) = pair {
                let (s1, s2): (Symbol, Symbol) =
                    serde_json::from_str(&text).map_err(|e| e.to_string())?;
                QuCharSp::from_pair(s1, s2).map_err(|e| e.to_string())?
            } else {
                let (h1, h2, rho1, rho2): (u32, i64, Bipartition, Bipartition) =
                    serde_json::from_str(&tuple.unwrap()).map_err(|e| e.to_string())?;
                QuCharSp::from_tuple(SpTuple { h1, h2, rho1, rho2 })
            };
            let chi = correspond_char_inv(&psi, target_family);
            emit(&render_char_map(&chi, &psi, true, format), output)?;
        }
    }
    Ok(0)
}

fn cmd_verify(
    max_n: u32,
    max_m: u32,
    max_e: u32,
    max_f: u32,
    witnesses: Vec<String>,
    format: Option<OutputFormat>,
    output: &Option<PathBuf>,
) -> Result<i32, String> {
    let format = format_or_default(format);
    let witnesses = if witnesses.is_empty() {
        vec![(3, 5), (3, 7), (5, 3)]
    } else {
        witnesses
            .iter()
            .map(|w| {
                w.split_once(',')
                    .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                    .ok_or_else(|| format!("--witness expects q,l, got '{w}'"))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    let opts = SuiteOptions {
        max_n,
        max_m,
        max_symbol_rank: max_n.min(5),
        max_e,
        max_f,
        witnesses,
    };
    let reports = run_suite(&opts).map_err(|e| e.to_string())?;
    let all_pass = reports.iter().all(|r| r.passed());
    let text = match format {
        OutputFormat::Json => serde_json::to_string_pretty(&reports).unwrap(),
        OutputFormat::Table => {
            let mut out: Vec<String> = reports.iter().map(|r| r.table()).collect();
            out.push(format!(
                "{} of {} audits passed",
                reports.iter().filter(|r| r.passed()).count(),
                reports.len()
            ));
            out.join("\n")
        }
    };
    emit(&text, output)?;
    Ok(if all_pass { 0 } else { 1 })
}
