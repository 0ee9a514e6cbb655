use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;

use hpade::continuation::{oracle_continue, continue_via_hp, PathSpec, Scheme};
use hpade::hp::{self, MultiIndex};
use hpade::io;
use hpade::potential::{self, DiscreteMeasure};
use hpade::precision::PrecisionConfig;
use hpade::presets::{self, Preset};
use hpade::series::{Center, PowerSeries, SZParams};
use hpade::{Error, Result};

#[derive(Parser)]
#[command(
    name = "hpade",
    about = "Pade / Hermite-Pade approximants and multi-sheet continuation from a power-series germ"
)]
struct Cli {
    /// Working precision in bits (default: 128 + 12 n)
    #[arg(long, global = true)]
    bits: Option<u32>,
    /// Approximant order
    #[arg(long, global = true, default_value_t = 20)]
    n: usize,
    /// Parameter preset: example1, example2, example3, real-ab
    #[arg(long, global = true)]
    preset: Option<String>,
    /// Output directory (created if missing)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit the germ coefficients as JSON
    Germ {
        /// Real factor position A (with --B selects the real two-point case)
        #[arg(long = "A")]
        big_a: Option<f64>,
        /// Real factor position B
        #[arg(long = "B")]
        big_b: Option<f64>,
        /// Expansion point: infinity or zero
        #[arg(long, default_value = "infinity")]
        at: String,
    },
    /// Diagonal Pade pair P, Q
    Pade,
    /// Type I Hermite-Pade solve
    Hp1 {
        /// Multiindex: full, tuple1, tuple2, primed1, primed2, primed3, pair
        #[arg(long, default_value = "full")]
        idx: String,
    },
    /// Type II Hermite-Pade solve over [f, ..., f^m]
    Hp2 {
        #[arg(long, default_value_t = 3)]
        m: usize,
    },
    /// S-polynomials from the two neighboring type I solves
    Spolys,
    /// Zero sets of the requested polynomial families
    Zeros {
        /// Comma-separated: pade, partial, hp2_2, hp2_3, hp1_2, hp1_3, s2n
        #[arg(long)]
        families: String,
    },
    /// Continuation along the real axis via approximants
    Continue {
        /// Scheme: pade, two-sheet, three-sheet
        #[arg(long)]
        scheme: String,
        /// Real endpoint of the path from 0
        #[arg(long)]
        to: f64,
        /// Also run the path-tracking oracle and print the difference
        #[arg(long)]
        compare: bool,
    },
    /// Solve the equilibrium problem and export the measures
    Equilibrium {
        #[arg(long = "A", default_value_t = 2.0)]
        big_a: f64,
        #[arg(long = "B", default_value_t = 3.0)]
        big_b: f64,
        /// Collocation size
        #[arg(long = "N", default_value_t = 48)]
        nodes: usize,
        /// Compare a zero family (e.g. hp2_3) against its predicted limit
        #[arg(long)]
        verify_zeros: Option<String>,
    },
    /// Run quick built-in consistency checks
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidInput(_) | Error::CenterMismatch => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn out_dir(cli: &Cli) -> Result<PathBuf> {
    let dir = cli.out.clone().unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir)?;
    Ok(dir)
}

fn precision(cli: &Cli) -> Result<PrecisionConfig> {
    match cli.bits {
        Some(b) => PrecisionConfig::new(b),
        None => Ok(PrecisionConfig::for_order(cli.n)),
    }
}

fn preset_of(cli: &Cli) -> Result<Preset> {
    let name = cli
        .preset
        .as_deref()
        .ok_or_else(|| Error::InvalidInput("this command requires --preset".into()))?;
    presets::by_name(name)
}

fn germ_of(cli: &Cli) -> Result<(Preset, PowerSeries)> {
    let preset = preset_of(cli)?;
    let germ = preset.germ_with(cli.n, precision(cli)?)?;
    Ok((preset, germ))
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.cmd {
        Cmd::Germ { big_a, big_b, at } => cmd_germ(cli, *big_a, *big_b, at),
        Cmd::Pade => cmd_pade(cli),
        Cmd::Hp1 { idx } => cmd_hp1(cli, idx),
        Cmd::Hp2 { m } => cmd_hp2(cli, *m),
        Cmd::Spolys => cmd_spolys(cli),
        Cmd::Zeros { families } => cmd_zeros(cli, families),
        Cmd::Continue { scheme, to, compare } => cmd_continue(cli, scheme, *to, *compare),
        Cmd::Equilibrium {
            big_a,
            big_b,
            nodes,
            verify_zeros,
        } => cmd_equilibrium(cli, *big_a, *big_b, *nodes, verify_zeros.as_deref()),
        Cmd::Verify => cmd_verify(cli),
    }
}

fn cmd_germ(cli: &Cli, big_a: Option<f64>, big_b: Option<f64>, at: &str) -> Result<()> {
    let germ = if cli.preset.is_some() {
        germ_of(cli)?.1
    } else {
        let (a, b) = match (big_a, big_b) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::InvalidInput(
                    "germ needs either --preset or both --A and --B".into(),
                ))
            }
        };
        let params = SZParams::markov(a, b)?;
        let order = hpade::series::default_order(cli.n);
        match at {
            "infinity" => hpade::series::germ_at_infinity(&params, order, precision(cli)?)?,
            "zero" => {
                return Err(Error::InvalidInput(
                    "the real two-point case expands at infinity".into(),
                ))
            }
            other => return Err(Error::InvalidInput(format!("unknown expansion point {other:?}"))),
        }
    };
    let path = out_dir(cli)?.join("germ.json");
    io::write_germ(&path, &germ)?;
    println!("wrote {} ({} coefficients)", path.display(), germ.order() + 1);
    Ok(())
}

fn cmd_pade(cli: &Cli) -> Result<()> {
    let (_, germ) = germ_of(cli)?;
    let (p, q) = hp::pade_pair(&germ, cli.n)?;
    let dir = out_dir(cli)?;
    io::write_polynomial(&dir.join("pade_P.json"), "pade_P", cli.n, &p)?;
    io::write_polynomial(&dir.join("pade_Q.json"), "pade_Q", cli.n, &q)?;
    println!("wrote pade_P.json, pade_Q.json (n = {})", cli.n);
    Ok(())
}

fn hp1_index(name: &str, n: usize, center: Center) -> Result<(MultiIndex, usize)> {
    Ok(match name {
        "full" => (MultiIndex::full(n, center), 3),
        "tuple1" => (MultiIndex::tuple1(n, center), 3),
        "tuple2" => (MultiIndex::tuple2(n, center), 3),
        "primed1" => (MultiIndex::primed(n, 1, center), 3),
        "primed2" => (MultiIndex::primed(n, 2, center), 3),
        "primed3" => (MultiIndex::primed(n, 3, center), 3),
        "pair" => (MultiIndex::balanced(vec![n, n, n], center), 2),
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown multiindex {other:?}"
            )))
        }
    })
}

fn cmd_hp1(cli: &Cli, idx_name: &str) -> Result<()> {
    let (_, germ) = germ_of(cli)?;
    let (idx, max_power) = hp1_index(idx_name, cli.n, germ.center())?;
    let tuple = hp::power_tuple(&germ, max_power)?;
    let rep = hp::hp_type1(&tuple, &idx)?;
    let dir = out_dir(cli)?;
    for (j, q) in rep.polynomials.iter().enumerate() {
        let kind = format!("hp1_Qn{j}");
        io::write_polynomial(&dir.join(format!("{kind}.json")), &kind, cli.n, q)?;
    }
    println!(
        "wrote {} components; attained vanishing order {} (requested {}), nullity {}",
        rep.polynomials.len(),
        rep.residual_order,
        idx.vanish_order,
        rep.nullity
    );
    Ok(())
}

fn cmd_hp2(cli: &Cli, m: usize) -> Result<()> {
    if !(1..=3).contains(&m) {
        return Err(Error::InvalidInput("supported powers: m in 1..=3".into()));
    }
    let (_, germ) = germ_of(cli)?;
    let tuple = hp::power_tuple(&germ, m)?;
    let rep = hp::hp_type2(&tuple[1..], cli.n)?;
    let dir = out_dir(cli)?;
    io::write_polynomial(&dir.join("hp2_Q.json"), &format!("hp2_Q{m}n"), cli.n, &rep.polynomials[0])?;
    for k in 1..=m {
        let kind = format!("hp2_P{k}");
        io::write_polynomial(&dir.join(format!("{kind}.json")), &kind, cli.n, &rep.polynomials[k])?;
    }
    println!(
        "wrote denominator and {m} numerators; attained vanishing order {}",
        rep.residual_order
    );
    Ok(())
}

fn cmd_spolys(cli: &Cli) -> Result<()> {
    let (_, germ) = germ_of(cli)?;
    let tuple = hp::power_tuple(&germ, 3)?;
    let sol1 = hp::hp_type1(&tuple, &MultiIndex::tuple1(cli.n, germ.center()))?;
    let sol2 = hp::hp_type1(&tuple, &MultiIndex::tuple2(cli.n, germ.center()))?;
    let (s1, s2) = hp::s_polys(&sol1, &sol2)?;
    let dir = out_dir(cli)?;
    io::write_polynomial(&dir.join("S2n1.json"), "S2n1", cli.n, &s1)?;
    io::write_polynomial(&dir.join("S2n2.json"), "S2n2", cli.n, &s2)?;
    println!("wrote S2n1.json, S2n2.json (degree bound {})", 2 * cli.n - 1);
    Ok(())
}

fn family_roots(germ: &PowerSeries, n: usize, family: &str) -> Result<Vec<(String, Vec<Complex64>)>> {
    let center = germ.center();
    Ok(match family {
        "pade" => {
            let (_, q) = hp::pade_pair(germ, n)?;
            vec![("pade".into(), hpade::roots::all_roots(&q)?)]
        }
        "partial" => vec![("partial".into(), hp::partial_sum_zeros(germ, n)?)],
        "hp2_2" => {
            let tuple = hp::power_tuple(germ, 2)?;
            let rep = hp::hp_type2(&tuple[1..], n)?;
            vec![("hp2_2".into(), hpade::roots::all_roots(&rep.polynomials[0])?)]
        }
        "hp2_3" => {
            let tuple = hp::power_tuple(germ, 3)?;
            let rep = hp::hp_type2(&tuple[1..], n)?;
            vec![("hp2_3".into(), hpade::roots::all_roots(&rep.polynomials[0])?)]
        }
        "hp1_2" => {
            let tuple = hp::power_tuple(germ, 2)?;
            let rep = hp::hp_type1(&tuple, &MultiIndex::balanced(vec![n, n, n], center))?;
            rep.polynomials
                .iter()
                .enumerate()
                .map(|(j, q)| Ok((format!("hp1_2_Q{j}"), hpade::roots::all_roots(q)?)))
                .collect::<Result<Vec<_>>>()?
        }
        "hp1_3" => {
            let tuple = hp::power_tuple(germ, 3)?;
            let rep = hp::hp_type1(&tuple, &MultiIndex::full(n, center))?;
            rep.polynomials
                .iter()
                .enumerate()
                .map(|(j, q)| Ok((format!("hp1_3_Q{j}"), hpade::roots::all_roots(q)?)))
                .collect::<Result<Vec<_>>>()?
        }
        "s2n" => {
            let tuple = hp::power_tuple(germ, 3)?;
            let sol1 = hp::hp_type1(&tuple, &MultiIndex::tuple1(n, center))?;
            let sol2 = hp::hp_type1(&tuple, &MultiIndex::tuple2(n, center))?;
            let (s1, s2) = hp::s_polys(&sol1, &sol2)?;
            vec![
                ("s2n1".into(), hpade::roots::all_roots(&s1)?),
                ("s2n2".into(), hpade::roots::all_roots(&s2)?),
            ]
        }
        other => return Err(Error::InvalidInput(format!("unknown family {other:?}"))),
    })
}

fn cmd_zeros(cli: &Cli, families: &str) -> Result<()> {
    let list: Vec<&str> = families
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if list.is_empty() {
        return Err(Error::InvalidInput("empty family list".into()));
    }
    let (_, germ) = germ_of(cli)?;
    let dir = out_dir(cli)?;
    for family in list {
        for (kind, roots) in family_roots(&germ, cli.n, family)? {
            let path = dir.join(format!("zeros_{kind}.json"));
            io::write_roots(&path, &kind, cli.n, &roots)?;
            println!("wrote {} ({} points)", path.display(), roots.len());
        }
    }
    Ok(())
}

fn parse_scheme(name: &str) -> Result<Scheme> {
    Ok(match name {
        "pade" => Scheme::Pade,
        "two-sheet" => Scheme::TwoSheet,
        "three-sheet" => Scheme::ThreeSheet,
        other => return Err(Error::InvalidInput(format!("unknown scheme {other:?}"))),
    })
}

fn cmd_continue(cli: &Cli, scheme: &str, to: f64, compare: bool) -> Result<()> {
    let scheme = parse_scheme(scheme)?;
    let (preset, germ) = germ_of(cli)?;
    if germ.center() != Center::AtZero {
        return Err(Error::InvalidInput(
            "continuation paths start at the zeta = 0 expansion point".into(),
        ));
    }
    let path = PathSpec::real_axis(to, 0.05)?;
    let res = continue_via_hp(&germ, &path, cli.n, scheme)?;
    let json = io::continuation_json(&res)?;
    println!("{json}");
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("continuation.json"), &json)?;
    }
    if compare {
        let oracle = oracle_continue(&preset.params, &path)?;
        println!(
            "oracle = {:+.12e} {:+.12e}i, approximant = {:+.12e} {:+.12e}i, |difference| = {:.3e}",
            oracle.re,
            oracle.im,
            res.value.re,
            res.value.im,
            (oracle - res.value).norm()
        );
    }
    Ok(())
}

fn cmd_equilibrium(
    cli: &Cli,
    big_a: f64,
    big_b: f64,
    nodes: usize,
    verify_zeros: Option<&str>,
) -> Result<()> {
    let params = SZParams::markov(big_a, big_b)?;
    let (a, b) = params.delta2()?;
    let sol = potential::solve_equilibrium(a, b, nodes)?;
    let dir = out_dir(cli)?;
    io::write_measure_csv(&dir.join("lambda.csv"), &sol.lambda)?;
    io::write_measure_csv(&dir.join("lambda1.csv"), &sol.lambda1)?;
    io::write_measure_csv(&dir.join("lambda2.csv"), &sol.lambda2)?;
    io::write_equilibrium_report(
        &dir.join("equilibrium.json"),
        &io::EquilibriumReport {
            a,
            b,
            gamma: sol.gamma,
            residual: sol.residual,
            n: nodes,
        },
    )?;
    println!(
        "[{a}, {b}]: gamma = {:.9}, residual = {:.3e}",
        sol.gamma, sol.residual
    );
    if let Some(family) = verify_zeros {
        let order = hpade::series::default_order(cli.n);
        let germ = hpade::series::germ_at_infinity(&params, order, precision(cli)?)?;
        let sets = family_roots(&germ, cli.n, family)?;
        for (kind, roots) in sets {
            let emp = DiscreteMeasure::counting(&roots);
            let target = match family {
                "hp2_3" | "hp2_2" => sol.lambda2.clone(),
                "hp1_3" | "hp1_2" => sol.lambda1.clone(),
                "s2n" => sol.lambda.clone(),
                "pade" => potential::robin_measure(400)?,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "no predicted limit for family {other:?}"
                    )))
                }
            };
            let d = potential::measure_distance(&emp, &target)?;
            println!("{kind}: Kolmogorov distance to prediction = {d:.4}");
        }
    }
    Ok(())
}

fn cmd_verify(cli: &Cli) -> Result<()> {
    let mut failures = 0;
    let mut report = |name: &str, ok: bool, detail: String| {
        println!("{}: {} ({detail})", name, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };

    let prec = PrecisionConfig::new(256)?;
    let params = SZParams::markov(2.0, 3.0)?;
    let germ = hpade::series::germ_at_infinity(&params, 80, prec)?;
    let c0 = hpade::precision::to_c64(germ.coeff(0));
    report(
        "germ constant term",
        (c0.re - 1.0 / 6.0f64.sqrt()).abs() < 1e-12,
        format!("c0 = {:.12}", c0.re),
    );

    let (p, q) = hp::pade_pair(&germ, 12)?;
    let z = Complex64::new(2.0, 0.0);
    let v = hpade::approx::eval_ratio(&p, &q, z)?;
    let oracle = hpade::continuation::oracle_sheet_values_real(&params, z)?[0];
    report(
        "pade value at z=2",
        (v - oracle).norm() < 1e-6,
        format!("|difference| = {:.3e}", (v - oracle).norm()),
    );

    let (a, b) = params.delta2()?;
    let sol = potential::solve_equilibrium(a, b, 48)?;
    report(
        "equilibrium residual",
        sol.residual < 1e-6,
        format!("residual = {:.3e}", sol.residual),
    );

    let _ = cli;
    if failures > 0 {
        return Err(Error::IllConditioned(format!("{failures} check(s) failed")));
    }
    Ok(())
}
