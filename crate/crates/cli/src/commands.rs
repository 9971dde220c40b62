use serde_json::{json, Value};

use suppos_core::constructions::*;
use suppos_core::random::{self, random_sp_expr};
use suppos_core::resolution::*;
use suppos_core::support::{polarized_support_family, sigma_conditions_hold_literal};
use suppos_core::*;

use crate::input::*;
use crate::{
    BettiArgs, CheckCmd, Cli, Command, ConstructCmd, DepolarizeArgs, ExportArgs, Family, Format,
    Kind, Method, PolarizeArgs, SupportPosetArgs,
};

pub fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::SupportPoset(a) => support_poset_cmd(a),
        Command::Betti(a) => betti_cmd(a),
        Command::Construct { which, format } => construct_cmd(which, format),
        Command::Polarize(a) => polarize_cmd(a),
        Command::Depolarize(a) => depolarize_cmd(a),
        Command::Check { which } => check_cmd(which),
        Command::Export(a) => export_cmd(a),
    }
}

fn no_dot(format: Format, what: &str) -> CliResult<()> {
    if format == Format::Dot {
        return Err(CliError::Usage(format!("{what} has no DOT output")));
    }
    Ok(())
}

fn ideal_json(i: &MonomialIdeal) -> Value {
    let gens: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
    json!({ "n": i.ambient(), "generators": gens })
}

fn render_ideal(i: &MonomialIdeal, format: Format) -> CliResult<String> {
    match format {
        Format::Text => Ok(format!("{i}\n")),
        Format::Json => Ok(format!("{}\n", ideal_json(i))),
        Format::Dot => Err(CliError::Usage("ideals have no DOT output".into())),
    }
}

fn poset_json(p: &Poset) -> Value {
    let covers: Vec<[&str; 2]> = p
        .covers()
        .iter()
        .map(|&(a, b)| [p.label(a), p.label(b)])
        .collect();
    json!({ "elements": p.labels(), "covers": covers })
}

fn family_json(f: &SupportFamily) -> Value {
    serde_json::from_str(&f.to_json()).expect("library emits valid JSON")
}

fn parse_order(list: &str) -> CliResult<Vec<usize>> {
    list.split(',')
        .map(|t| {
            let t = t.trim();
            t.trim_start_matches('x')
                .parse()
                .map_err(|_| CliError::Usage(format!("bad variable `{t}` in --ordered")))
        })
        .collect()
}

fn support_poset_cmd(a: SupportPosetArgs) -> CliResult<String> {
    let ideal = read_ideal(&a.ideal)?;
    let family = if ideal.is_squarefree() {
        support_family(&ideal)?
    } else {
        polarized_support_family(&ideal)
    };
    let sp = SupportPoset::from_family(&family);
    let ordered = match &a.ordered {
        Some(list) => Some(ordered_support_poset(&family, &parse_order(list)?)?),
        None => None,
    };
    let dot = match &ordered {
        Some(p) => p.to_dot(),
        None => sp.to_dot(),
    };
    if let Some(path) = &a.dot {
        // `--dot -` makes the diagram the whole standard output
        if let Some(text) = write_or_return(path, dot.clone())? {
            return Ok(text);
        }
    }
    let body = match a.format {
        Format::Dot => dot,
        Format::Text => {
            let mut s = String::new();
            if !ideal.is_squarefree() {
                s.push_str("# indices refer to the polarization variables x{i}_{s} in order\n");
            }
            for (i, c) in family.iter() {
                s.push_str(&format!("# C_{i} = {c}\n"));
            }
            match &ordered {
                Some(p) => s.push_str(&format!("{p}\n")),
                None => s.push_str(&format!("{}\n", sp.poset)),
            }
            s
        }
        Format::Json => {
            let classes: Vec<Value> = sp
                .classes
                .iter()
                .zip(&sp.members)
                .zip(sp.poset.labels())
                .map(|((c, m), l)| {
                    json!({
                        "label": l,
                        "members": m.iter().collect::<Vec<_>>(),
                        "C": c.iter().collect::<Vec<_>>(),
                    })
                })
                .collect();
            let mut v = json!({
                "family": family_json(&family),
                "classes": classes,
                "poset": poset_json(&sp.poset),
                "is_forest": sp.poset.is_forest(),
            });
            if let Some(p) = &ordered {
                v["ordered"] = poset_json(p);
            }
            format!("{v}\n")
        }
    };
    Ok(body)
}

fn family_ideal(args: &BettiArgs) -> CliResult<MonomialIdeal> {
    match (&args.ideal, args.family) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either an ideal or --family, not both".into())),
        (Some(path), None) => read_ideal(path),
        (None, Some(Family::Lines)) => {
            let (n, m) = need_nm(args)?;
            Ok(lines_depolarized(n, m)?)
        }
        (None, Some(Family::Diamonds)) => {
            let m = args.m.ok_or_else(|| CliError::Usage("--family diamonds needs --m".into()))?;
            Ok(diamonds_depolarized(m)?)
        }
        (None, None) => Err(CliError::Usage("give an ideal or --family".into())),
    }
}

fn need_nm(args: &BettiArgs) -> CliResult<(usize, usize)> {
    match (args.n, args.m) {
        (Some(n), Some(m)) => Ok((n, m)),
        _ => Err(CliError::Usage("--family lines needs --n and --m".into())),
    }
}

fn pivot_order(name: &str, args: &BettiArgs) -> CliResult<PivotOrder> {
    match name {
        "lines-standard" => {
            let (n, m) = need_nm(args)?;
            Ok(PivotOrder::lines_standard(n, m)?)
        }
        "diamonds-standard" => {
            let m = args.m.ok_or_else(|| CliError::Usage("diamonds-standard needs --m".into()))?;
            Ok(PivotOrder::diamonds_standard(m)?)
        }
        other => Ok(PivotOrder::from_name(other)?),
    }
}

fn totals_text(totals: &[String]) -> String {
    let header: Vec<String> = std::iter::once("deg".to_string())
        .chain((0..totals.len()).map(|d| d.to_string()))
        .collect();
    let total: Vec<String> = std::iter::once("total".to_string()).chain(totals.iter().cloned()).collect();
    let widths: Vec<usize> = (0..header.len()).map(|c| header[c].len().max(total[c].len())).collect();
    let fmt_row = |r: &[String]| {
        r.iter()
            .enumerate()
            .map(|(c, s)| format!("{s:>w$}", w = widths[c]))
            .collect::<Vec<_>>()
            .join("  ")
    };
    format!("{}\n{}\n", fmt_row(&header), fmt_row(&total))
}

fn invariants_text(t: &BettiTable) -> CliResult<String> {
    let inv = derived_invariants(t)?;
    Ok(format!("projdim: {}\nregularity: {}\n", inv.projdim, inv.regularity))
}

fn betti_cmd(args: BettiArgs) -> CliResult<String> {
    if args.dot.is_some() && args.method != Method::Mvt {
        return Err(CliError::Usage("--dot draws the Mayer-Vietoris tree; use --method mvt".into()));
    }
    if args.method == Method::Mvt && args.format == Format::Dot {
        return Err(CliError::Usage("use --dot <PATH> for the tree".into()));
    }
    no_dot(args.format, "betti")?;
    match args.method {
        Method::Oracle => {
            let ideal = family_ideal(&args)?;
            let t = betti_oracle(&ideal)?;
            Ok(match args.format {
                Format::Json => {
                    let mut v = json!({ "method": "oracle", "table": table_json(&t), "totals": t.totals() });
                    if args.invariants {
                        let inv = derived_invariants(&t)?;
                        v["projdim"] = json!(inv.projdim);
                        v["regularity"] = json!(inv.regularity);
                    }
                    format!("{v}\n")
                }
                _ => {
                    let mut s = t.to_text();
                    if args.invariants {
                        s.push_str(&invariants_text(&t)?);
                    }
                    s
                }
            })
        }
        Method::Mvt => {
            let ideal = family_ideal(&args)?;
            let order = pivot_order(&args.order, &args)?;
            let tree = mvt_build(&ideal, &order)?;
            let b = suppos_core::resolution::mvt::bounds_from_tree(&tree);
            let mut out = String::new();
            if let Some(path) = &args.dot {
                if let Some(text) = write_or_return(path, tree.to_dot())? {
                    out.push_str(&text);
                    return Ok(out);
                }
            }
            out.push_str(&match args.format {
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "method": "mvt",
                        "nodes": tree.len(),
                        "exact": b.is_exact(),
                        "lower": table_json(&b.lower),
                        "upper": table_json(&b.upper),
                    })
                ),
                _ => format!(
                    "nodes: {}\nexact: {}\nlower\n{}upper\n{}",
                    tree.len(),
                    b.is_exact(),
                    b.lower.to_text(),
                    b.upper.to_text()
                ),
            });
            Ok(out)
        }
        Method::Formula => {
            if args.ideal.is_some() {
                return Err(CliError::Usage("--method formula takes --family, not an ideal".into()));
            }
            let fam = args.family.ok_or_else(|| CliError::Usage("--method formula needs --family".into()))?;
            let (totals, note, projdim, reg): (Vec<String>, Option<String>, usize, usize) = match fam {
                Family::Lines => {
                    let (n, m) = need_nm(&args)?;
                    lines_depolarized(n, m)?;
                    let t = (0..n).map(|i| lines_betti_formula(n, m, i).to_string()).collect();
                    (t, None, lines_projdim(n), lines_regularity(n, m))
                }
                Family::Diamonds => {
                    let m = args.m.ok_or_else(|| CliError::Usage("--family diamonds needs --m".into()))?;
                    if m == 2 {
                        // the closed form needs K^m with a negative index here
                        let t = betti_oracle(&diamonds_depolarized(2)?)?;
                        let inv = derived_invariants(&t)?;
                        let totals = t.totals().iter().map(ToString::to_string).collect();
                        let note = "note: no closed form at m = 2; values from the homology oracle".to_string();
                        (totals, Some(note), inv.projdim, inv.regularity as usize)
                    } else {
                        let pd = diamonds_projdim(m);
                        let t = (0..=pd)
                            .map(|i| diamonds_betti_formula(m, i).map(|v| v.to_string()))
                            .collect::<Result<Vec<_>>>()?;
                        (t, None, pd, diamonds_regularity(m))
                    }
                }
            };
            if let Some(n) = &note {
                eprintln!("{n}");
            }
            Ok(match args.format {
                Format::Json => {
                    let mut v = json!({ "method": "formula", "totals": totals });
                    if args.invariants {
                        v["projdim"] = json!(projdim);
                        v["regularity"] = json!(reg);
                    }
                    format!("{v}\n")
                }
                _ => {
                    let mut s = totals_text(&totals);
                    if args.invariants {
                        s.push_str(&format!("projdim: {projdim}\nregularity: {reg}\n"));
                    }
                    s
                }
            })
        }
    }
}

fn table_json(t: &BettiTable) -> Value {
    serde_json::from_str(&t.to_json()).expect("library emits valid JSON")
}

fn construct_cmd(which: ConstructCmd, format: Format) -> CliResult<String> {
    let ideal = match which {
        ConstructCmd::Lines { n, m, squarefree } => {
            if squarefree {
                lines_squarefree(n, m)?
            } else {
                lines_depolarized(n, m)?
            }
        }
        ConstructCmd::Diamonds { m, squarefree } => {
            if squarefree {
                diamonds_squarefree(m)?
            } else {
                diamonds_depolarized(m)?
            }
        }
        ConstructCmd::Leaf { poset } => leaf_ideal(&read_poset(&poset)?)?,
        ConstructCmd::ConsecutiveKn { k, n, copolar } => {
            if copolar {
                copolar_kn(k, n)?
            } else {
                consecutive_kn(k, n)?
            }
        }
        ConstructCmd::KOutOfN { k, n } => k_out_of_n(k, n)?,
        ConstructCmd::Sp { expr, forest, show_expr } => {
            let e: SpExpr = match (expr, forest) {
                (Some(e), None) => e.parse()?,
                (None, Some(f)) => sp_from_forest(&read_poset(&f)?)?,
                _ => return Err(CliError::Usage("give an expression or --forest".into())),
            };
            let i = sp_ideal(&e)?;
            if show_expr {
                return Ok(match format {
                    Format::Json => {
                        let mut v = ideal_json(&i);
                        v["expr"] = json!(e.to_string());
                        format!("{v}\n")
                    }
                    _ => format!("# {e}\n{}", render_ideal(&i, format)?),
                });
            }
            i
        }
    };
    render_ideal(&ideal, format)
}

fn polarize_cmd(a: PolarizeArgs) -> CliResult<String> {
    let ideal = read_ideal(&a.ideal)?;
    let p = polarize(&ideal);
    match a.format {
        Format::Json => {
            let names: Vec<String> = (1..=p.map.target_ambient()).map(|k| p.map.name(k)).collect();
            let mut v = ideal_json(&p.ideal);
            v["variables"] = json!(names);
            Ok(format!("{v}\n"))
        }
        f => render_ideal(&p.ideal, f),
    }
}

fn depolarize_cmd(a: DepolarizeArgs) -> CliResult<String> {
    let ideal = read_ideal(&a.ideal)?;
    let chains: ChainPartition = a.chains.parse()?;
    render_ideal(&depolarize_by_chains(&ideal, &chains)?, a.format)
}

fn flag(b: bool) -> String {
    format!("{b}\n")
}

fn check_cmd(which: CheckCmd) -> CliResult<String> {
    match which {
        CheckCmd::Forest { ideal, poset, random_sp, seed, max_vars } => {
            if let Some(count) = random_sp {
                let seed = seed.ok_or_else(|| CliError::Usage("--random-sp needs --seed".into()))?;
                if !(1..=60).contains(&max_vars) {
                    return Err(CliError::Usage("--max-vars must be in 1..=60".into()));
                }
                let mut rng = random::rng(seed);
                for k in 0..count {
                    let e = random_sp_expr(&mut rng, max_vars);
                    if !support_poset(&sp_ideal(&e)?).poset.is_forest() {
                        return Ok(format!("false\n# counterexample {k}: {e}\n"));
                    }
                }
                return Ok(flag(true));
            }
            let p = match (ideal, poset) {
                (Some(i), None) => support_poset(&read_ideal(&i)?).poset,
                (None, Some(p)) => read_poset(&p)?,
                _ => return Err(CliError::Usage("give --ideal, --poset or --random-sp".into())),
            };
            Ok(flag(p.is_forest()))
        }
        CheckCmd::Copolar { left, right } => {
            Ok(flag(are_copolar(&read_ideal(&left)?, &read_ideal(&right)?)))
        }
        CheckCmd::Realizable { family } => {
            let f = read_family(&family)?;
            Ok(match brute_force_realizability(&f)? {
                Some(i) => format!("true\n{i}\n"),
                None => flag(false),
            })
        }
        CheckCmd::TaylorMinimal { ideal } => Ok(flag(taylor_is_minimal(&read_ideal(&ideal)?)?)),
        CheckCmd::Sigma { family, sigma, literal } => {
            let f = read_family(&family)?;
            let s = read_sigma(&sigma)?;
            let ok = if literal {
                sigma_conditions_hold_literal(&f, &s)
            } else {
                sigma_conditions_hold(&f, &s)
            };
            if ok && f.is_full() {
                Ok(format!("true\n{}\n", ideal_from_sigma(&f, &s)?))
            } else {
                Ok(flag(ok))
            }
        }
    }
}

fn export_cmd(a: ExportArgs) -> CliResult<String> {
    match a.kind {
        Kind::Poset => {
            let p = read_poset(&a.input)?;
            Ok(match a.format {
                Format::Dot => p.to_dot(),
                Format::Json => format!("{}\n", poset_json(&p)),
                Format::Text => format!("{p}\n"),
            })
        }
        Kind::Ideal => render_ideal(&read_ideal(&a.input)?, a.format),
        Kind::Family => {
            let f = read_family(&a.input)?;
            let sp = SupportPoset::from_family(&f);
            Ok(match a.format {
                Format::Dot => sp.to_dot(),
                Format::Json => format!("{}\n", family_json(&f)),
                Format::Text => format!("{}\n", sp.poset),
            })
        }
    }
}
