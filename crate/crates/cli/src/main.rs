mod args;
mod io;

use std::process::ExitCode;

use clap::Parser;
use num_bigint::BigInt;
use serde_json::{json, Value};

use zc_core::almkvist::{l_map, tr_map, w0_add, w0_from_matrix, w0_from_witt, w0_mul};
use zc_core::dynamics::{
    am_zeta, cyclotomic_factorization, fix_count, morse_smale_hadamard, morse_smale_witt, predicted_period,
};
use zc_core::hadamard::{
    lrs_add, lrs_counit, lrs_delta, lrs_hadamard_mul, lrs_is_grouplike, lrs_is_primitive, LinRecSeq,
};
use zc_core::motive::{
    c_morphism, f1_zeta, kapranov_zeta, motive_adams, motive_delta, CountingMeasure,
};
use zc_core::variety::{
    count_points_with_budget, frobenius_fixed_count_with_budget, product_variety, weil_zeta_with_budget, AffineVariety,
};
use zc_core::witt::{adams, ghost, ghost_inverse, witt_add, witt_mul, witt_neg, GhostVector, WittElement};

use args::{Cli, Command, DynsysCmd, Format, HadamardCmd, MotiveCmd, Ring, VarietyCmd, W0Cmd, WittCmd};
use io::{CliResult, Output};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("zc: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("zc: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// The default Padé degree bound: the largest `d` with `2d + 2 <= order`.
fn default_max_deg(order: usize) -> usize {
    order.saturating_sub(2) / 2
}

fn run(cli: &Cli) -> CliResult<Output> {
    let order = cli.order as usize;
    match &cli.command {
        Command::Witt(cmd) => witt_cmd(cmd, order, cli.inverse_input),
        Command::W0(cmd) => w0_cmd(cmd, order, cli.inverse_input),
        Command::Hadamard(cmd) => hadamard_cmd(cmd, order),
        Command::Motive(cmd) => motive_cmd(cmd, order),
        Command::Variety(cmd) => variety_cmd(cmd, order, cli.budget),
        Command::Dynsys(cmd) => dynsys_cmd(cmd, order),
    }
}

fn witt_cmd(cmd: &WittCmd, order: usize, inverse: bool) -> CliResult<Output> {
    let parse = |s: &str| io::witt(s, order, inverse);
    let w = match cmd {
        WittCmd::Add(p) => witt_add(&parse(&p.a)?, &parse(&p.b)?),
        WittCmd::Mul(p) => witt_mul(&parse(&p.a)?, &parse(&p.b)?)?,
        WittCmd::Neg(s) => witt_neg(&parse(&s.a)?),
        WittCmd::Ghost(s) => return Ok(io::rational_list_out(ghost(&parse(&s.a)?).components())),
        WittCmd::GhostInv { ghost } => {
            let g = io::rationals(&io::parse_json(ghost, "ghost vector")?, "ghost vector")?;
            ghost_inverse(&GhostVector::new(g))
        }
        WittCmd::Adams { a, n } => {
            if *n == 0 {
                return io::input_err("Adams index must be at least 1");
            }
            adams(&parse(a)?, *n)?
        }
    };
    Ok(io::witt_out(&w))
}

fn w0_cmd(cmd: &W0Cmd, order: usize, inverse: bool) -> CliResult<Output> {
    match cmd {
        W0Cmd::FromMatrix { matrix } => {
            let m = io::matrix(&io::parse_json(matrix, "matrix")?)?;
            Ok(io::w0_out(&w0_from_matrix(&m)))
        }
        W0Cmd::Add(p) => Ok(io::w0_out(&w0_add(&io::w0(&p.a)?, &io::w0(&p.b)?))),
        W0Cmd::Mul(p) => Ok(io::w0_out(&w0_mul(&io::w0(&p.a)?, &io::w0(&p.b)?))),
        W0Cmd::L(s) => Ok(io::witt_out(&l_map(&io::w0(&s.a)?, order))),
        W0Cmd::Tr(s) => Ok(io::integer_list_out(&tr_map(&io::w0(&s.a)?, order)?.terms(order))),
        W0Cmd::Detect { series, max_deg } => {
            let w = io::witt(series, order, inverse)?;
            let d = max_deg.unwrap_or(default_max_deg(order));
            Ok(io::detected_out(w0_from_witt(&w, d)?, d))
        }
    }
}

fn hadamard_cmd(cmd: &HadamardCmd, order: usize) -> CliResult<Output> {
    let seq = match cmd {
        HadamardCmd::New { init, charpoly, terms } => match (init, charpoly, terms) {
            (Some(i), Some(c), None) => LinRecSeq::new(
                io::integers(&io::parse_json(i, "init")?, "init")?,
                io::int_poly(&io::parse_json(c, "charpoly")?, "charpoly")?,
            )?,
            (None, None, Some(t)) => LinRecSeq::from_terms(&io::integers(&io::parse_json(t, "terms")?, "terms")?)?,
            _ => return io::input_err("give --init with --charpoly, or --terms"),
        },
        HadamardCmd::Terms(s) => io::lrs(&s.a)?,
        HadamardCmd::Add(p) => lrs_add(&io::lrs(&p.a)?, &io::lrs(&p.b)?)?,
        HadamardCmd::Mul(p) => lrs_hadamard_mul(&io::lrs(&p.a)?, &io::lrs(&p.b)?)?,
        HadamardCmd::Delta { a, window } => {
            let d = lrs_delta(&io::lrs(a)?, *window)?;
            let pairs: Vec<Value> = d
                .pairs
                .iter()
                .map(|(b, c)| json!({ "left": io::lrs_json(b, order), "right": io::lrs_json(c, order) }))
                .collect();
            let mut text = format!("rank {} on a {w}x{w} window", d.rank(), w = d.window);
            for (b, c) in &d.pairs {
                text.push_str(&format!("\n({}) (x) ({})", io::joined(&b.terms(order)), io::joined(&c.terms(order))));
            }
            return Ok(Output::new(text, json!({ "rank": d.rank(), "window": d.window, "pairs": pairs })));
        }
        HadamardCmd::Classify { a, window } => {
            let a = io::lrs(a)?;
            let counit = lrs_counit(&a);
            let primitive = lrs_is_primitive(&a, *window)?;
            let grouplike = lrs_is_grouplike(&a, *window)?;
            let text = format!("counit: {counit}\nprimitive: {primitive}\ngroup-like: {grouplike}");
            let j = json!({ "counit": counit.to_string(), "primitive": primitive, "grouplike": grouplike });
            return Ok(Output::new(text, j));
        }
    };
    Ok(io::lrs_out(&seq, order))
}

fn motive_cmd(cmd: &MotiveCmd, order: usize) -> CliResult<Output> {
    let motive = |m: &args::MotiveInput| io::motive(m.tori.as_deref(), m.poly.as_deref());
    match cmd {
        MotiveCmd::FromTori { tori } => Ok(io::motive_out(&io::motive(Some(tori), None)?)),
        MotiveCmd::Count { motive: m, n, l } => {
            let mu = match (n, l) {
                (Some(n), None) => CountingMeasure::f1n(*n),
                (None, Some(l)) => CountingMeasure::new(BigInt::from(*l)),
                _ => return io::input_err("give exactly one of --n or --l"),
            };
            let c = mu.apply(&motive(m)?);
            Ok(Output::new(c.to_string(), json!(c.to_string())))
        }
        MotiveCmd::F1Zeta { tori } => Ok(io::witt_out(&f1_zeta(&io::tori(tori)?, order))),
        MotiveCmd::Kapranov { motive: m, l } => {
            let z = kapranov_zeta(&motive(m)?, &CountingMeasure::new(BigInt::from(*l)), order)?;
            Ok(io::witt_out(&z))
        }
        MotiveCmd::Adams { motive: m, n } => {
            if *n == 0 {
                return io::input_err("Adams index must be at least 1");
            }
            Ok(io::motive_out(&motive_adams(&motive(m)?, *n)))
        }
        MotiveCmd::Delta { motive: m } => {
            let d = motive_delta(&motive(m)?);
            let terms: Vec<Value> = d.terms().map(|((i, j), c)| json!([i, j, c.to_string()])).collect();
            Ok(Output::new(d.to_string(), Value::Array(terms)))
        }
        MotiveCmd::CMap { motive: m, c } => {
            let seq = c_morphism(&motive(m)?, &BigInt::from(*c), order)?;
            Ok(io::lrs_out(&seq, order))
        }
    }
}

fn variety(path: &str) -> CliResult<AffineVariety> {
    Ok(AffineVariety::from_json(&io::read_file(path)?)?)
}

fn variety_cmd(cmd: &VarietyCmd, order: usize, budget: u64) -> CliResult<Output> {
    let count_out = |c: BigInt| Output::new(c.to_string(), json!(c.to_string()));
    match cmd {
        VarietyCmd::Count { file, n } => Ok(count_out(count_points_with_budget(&variety(file)?, *n, budget)?)),
        VarietyCmd::Frobenius { file, n, m } => {
            Ok(count_out(frobenius_fixed_count_with_budget(&variety(file)?, *n, *m, budget)?))
        }
        VarietyCmd::Zeta { file, detect, max_deg } => {
            let z = weil_zeta_with_budget(&variety(file)?, order, budget)?;
            zeta_out(&z, *detect, max_deg.unwrap_or(default_max_deg(order)))
        }
        VarietyCmd::Product { file, other } => {
            let v = product_variety(&variety(file)?, &variety(other)?)?.to_json();
            let text = serde_json::to_string(&v).expect("serializable");
            Ok(Output::new(text, v))
        }
    }
}

fn zeta_out(z: &WittElement, detect: bool, max_deg: usize) -> CliResult<Output> {
    if detect {
        Ok(io::detected_out(w0_from_witt(z, max_deg)?, max_deg))
    } else {
        Ok(io::witt_out(z))
    }
}

fn dynsys_cmd(cmd: &DynsysCmd, order: usize) -> CliResult<Output> {
    match cmd {
        DynsysCmd::Fix { system, n } => {
            if *n == 0 {
                return io::input_err("iterate index must be at least 1");
            }
            let s = io::system(system.map.as_deref(), system.file.as_deref())?;
            let c = fix_count(&s, *n);
            Ok(Output::new(c.to_string(), json!(c.to_string())))
        }
        DynsysCmd::Zeta { system, detect, max_deg } => {
            let s = io::system(system.map.as_deref(), system.file.as_deref())?;
            zeta_out(&am_zeta(&s, order), *detect, max_deg.unwrap_or(default_max_deg(order)))
        }
        DynsysCmd::QuasiUnipotent { homology } => {
            let h = io::homology(homology.file.as_deref(), homology.matrix.as_deref())?;
            let mut lines = Vec::new();
            let mut entries = Vec::new();
            for (k, m) in h.matrices.iter().enumerate() {
                let factors = cyclotomic_factorization(m);
                let period = predicted_period(m);
                lines.push(match (&factors, period) {
                    (Some(f), Some(p)) => format!("H_{k}: quasi-unipotent, cyclotomic indices {f:?}, period {p}"),
                    _ => format!("H_{k}: not quasi-unipotent"),
                });
                entries.push(json!({
                    "degree": k,
                    "quasi_unipotent": factors.is_some(),
                    "cyclotomic": factors,
                    "period": period,
                }));
            }
            Ok(Output::new(lines.join("\n"), Value::Array(entries)))
        }
        DynsysCmd::MorseSmale { homology, ring } => {
            let h = io::homology(homology.file.as_deref(), homology.matrix.as_deref())?;
            let mut lines = Vec::new();
            let (body, warnings) = match ring {
                Ring::Witt => {
                    let ms = morse_smale_witt(&h, order)?;
                    let mut items = Vec::new();
                    for inv in &ms.invariants {
                        lines.push(format!("H_{}: {}", inv.degree, io::joined(inv.generator.coeffs())));
                        for (i, img) in inv.adams_images.iter().enumerate() {
                            lines.push(format!("  Psi_{}: {}", i + 2, io::joined(img.coeffs())));
                        }
                        let images: Vec<Value> = inv.adams_images.iter().map(|w| io::witt_out(w).json).collect();
                        items.push(json!({
                            "degree": inv.degree,
                            "generator": io::witt_out(&inv.generator).json,
                            "adams": images,
                        }));
                    }
                    (json!({ "invariants": items }), ms.warnings)
                }
                Ring::Hadamard => {
                    let ms = morse_smale_hadamard(&h, order)?;
                    let mut items = Vec::new();
                    for (k, s) in ms.sequences.iter().enumerate() {
                        lines.push(format!("H_{k}: {}", io::joined(&s.terms(order))));
                        items.push(io::lrs_json(s, order));
                    }
                    (json!({ "sequences": items }), ms.warnings)
                }
            };
            lines.extend(warnings.iter().map(|w| format!("warning: {w}")));
            let mut j = body;
            j["warnings"] = json!(warnings);
            Ok(Output::new(lines.join("\n"), j))
        }
    }
}
