use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use serde_json::json;

use gallai_lab::constructions::{build_extremal_odd, build_ramsey_cycle_lower, random_gallai};
use gallai_lab::detect::{colored_path_split, dirac_hamiltonian, erdos_gallai_path, find_mono_cycle, find_rainbow_triangle};
use gallai_lab::format::{parse, to_text, to_text_with_comments};
use gallai_lab::search::{
    search_gallai_ramsey, search_ramsey, verify_certificate, Family, SearchLimits, SearchOptions, SearchReport,
    Validity,
};
use gallai_lab::structure::{gallai_partition, recolor_small_parts};
use gallai_lab::{Error, VertexSubset, WideColoring, Witness};

use super::{CheckArgs, Cli, Command, GenCommand, LemmaCommand, Output, PartitionArgs, SearchCommand, SearchOpts};

pub const CLEAN: u8 = 0;
pub const FOUND: u8 = 1;
pub const USAGE: u8 = 2;

pub fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen(g) => gen(g),
        Command::Check(a) => check(a),
        Command::Partition(a) => partition(a),
        Command::Lemmas(l) => lemmas(l),
        Command::Search(s) => search(s),
        Command::Verify(v) => verify(&v.report),
    }
}

fn emit(out: &Output, text: &str) -> Result<()> {
    match &out.output {
        Some(path) => fs::write(path, text).with_context(|| format!("-o: cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_coloring(path: &Path) -> Result<WideColoring> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse(&text).with_context(|| path.display().to_string())
}

fn gen(cmd: GenCommand) -> Result<u8> {
    let (g, comments, out): (WideColoring, Vec<String>, Output) = match cmd {
        GenCommand::ExtremalOdd { ell, k, out } => {
            let (g, recipe) = build_extremal_odd(ell as usize, k as usize).context("--ell/--k")?;
            (g, vec![recipe.to_comment()], out)
        }
        GenCommand::RamseyLower { m, n, out } => {
            let (g, recipe) = build_ramsey_cycle_lower(m, n).context("--m/--n")?;
            (g, vec![recipe.to_comment()], out)
        }
        GenCommand::RandomGallai { n, k, seed, out } => {
            let g = random_gallai(n as usize, k as usize, seed).context("--n/--k")?;
            (g, vec![format!("random-gallai n={n} k={k} seed={seed}")], out)
        }
    };
    emit(&out, &to_text_with_comments(&g, &comments))?;
    Ok(CLEAN)
}

fn check(args: CheckArgs) -> Result<u8> {
    let g = read_coloring(&args.file)?;
    let rainbow = find_rainbow_triangle(&g);
    let mut cycles: Vec<(u8, Option<Witness>)> = Vec::new();
    if let Some(m) = args.cycle {
        for c in 1..=g.palette() as u8 {
            cycles.push((c, find_mono_cycle(&g, c, m as usize)));
        }
    }
    let found = rainbow.is_some() || cycles.iter().any(|(_, w)| w.is_some());

    if args.json {
        let report = json!({
            "n": g.n(),
            "rainbow_triangle": rainbow,
            "cycle": args.cycle,
            "mono_cycles": cycles.iter().map(|(c, w)| json!({"color": c, "witness": w})).collect::<Vec<_>>(),
        });
        println!("{report}");
    } else {
        match &rainbow {
            Some(w) => println!("rainbow triangle: {}", w.to_json()),
            None => println!("rainbow triangle: none"),
        }
        if let Some(m) = args.cycle {
            for (c, w) in &cycles {
                match w {
                    Some(w) => println!("color {c}: C_{m} {}", w.to_json()),
                    None => println!("color {c}: no C_{m}"),
                }
            }
            if cycles.iter().all(|(_, w)| w.is_none()) {
                println!("C_{m} absent in all colors");
            }
        }
    }
    Ok(if found { FOUND } else { CLEAN })
}

fn partition(args: PartitionArgs) -> Result<u8> {
    let g = read_coloring(&args.file)?;
    let p = match gallai_partition(&g, !args.finest) {
        Ok(p) => p,
        Err(Error::NotGallai(w)) => {
            println!("not a Gallai coloring: rainbow triangle {}", w.to_json());
            return Ok(FOUND);
        }
        Err(e) => return Err(e).context(args.file.display().to_string()),
    };
    let json = p.to_json();
    if args.out.output.is_some() {
        emit(&args.out, &format!("{json}\n"))?;
    }
    if args.json {
        println!("{json}");
    } else if args.out.output.is_none() {
        println!("{} parts, between colors {:?}", p.len(), p.between_colors());
        for (i, part) in p.parts().iter().enumerate() {
            let vs: Vec<String> = part.iter().map(|v| v.to_string()).collect();
            println!("part {i} ({} vertices): {}", part.len(), vs.join(" "));
        }
    }
    Ok(CLEAN)
}

/// Prints a failed-hypothesis report. Preconditions are part of the input,
/// so this is a usage error.
fn precondition_failed(e: &Error) -> u8 {
    println!("{}", json!({ "precondition_failed": e.to_string() }));
    USAGE
}

fn parse_set(n: usize, text: &str, flag: &str) -> Result<VertexSubset<u128>> {
    let vs = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| anyhow!("{flag}: {s:?} is not a vertex")))
        .collect::<Result<Vec<_>>>()?;
    VertexSubset::new(n, vs).context(flag.to_string())
}

fn color_arg(g: &WideColoring, c: u8, flag: &str) -> Result<u8> {
    if c == 0 || c as usize > g.palette() {
        bail!("{flag}: color {c} outside palette 1..={}", g.palette());
    }
    Ok(c)
}

fn lemmas(cmd: LemmaCommand) -> Result<u8> {
    let result = match cmd {
        LemmaCommand::Dirac { file, color } => {
            let g = read_coloring(&file)?;
            let h = g.color_class(color_arg(&g, color, "--color")?).to_graph();
            dirac_hamiltonian(&h).map(Some)
        }
        LemmaCommand::EgPath { file, color, edges } => {
            let g = read_coloring(&file)?;
            let h = g.color_class(color_arg(&g, color, "--color")?).to_graph();
            erdos_gallai_path(&h, edges).map(|w| w.map(|w| Witness { color: Some(color), ..w }))
        }
        LemmaCommand::ColoredSplit { file, red, blue, a, b } => {
            let g = read_coloring(&file)?;
            colored_path_split(&g, color_arg(&g, red, "--red")?, color_arg(&g, blue, "--blue")?, a, b).map(Some)
        }
        LemmaCommand::Recolor { file, a_set, b_sets, k, m, out } => {
            let g = read_coloring(&file)?;
            let a = parse_set(g.n(), &a_set, "--a-set")?;
            let bs = b_sets
                .split(';')
                .map(|s| parse_set(g.n(), s, "--b-sets"))
                .collect::<Result<Vec<_>>>()?;
            return match recolor_small_parts(&g, &a, &bs, k, m) {
                Ok(h) => {
                    emit(&out, &to_text(&h))?;
                    Ok(CLEAN)
                }
                Err(e) => Ok(precondition_failed(&e)),
            };
        }
    };
    match result {
        Ok(Some(w)) => {
            println!("{}", w.to_json());
            Ok(FOUND)
        }
        Ok(None) => {
            println!("none");
            Ok(CLEAN)
        }
        Err(e @ (Error::DiracPreconditionFailed { .. } | Error::DegreePreconditionFailed { .. })) => {
            Ok(precondition_failed(&e))
        }
        Err(e) => Err(e.into()),
    }
}

fn options(opts: &SearchOpts) -> Result<SearchOptions> {
    let mut limits = SearchLimits::from_env().context(gallai_lab::search::LIMITS_ENV)?;
    if let Some(overrides) = &opts.limits {
        limits.apply_overrides(overrides).context("--limits")?;
    }
    Ok(SearchOptions {
        n_max: opts.n_max,
        budget: opts.budget,
        threads: opts.threads as usize,
        seed: opts.seed,
        limits,
    })
}

fn witness_path(report: &Path) -> PathBuf {
    let stem = report.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "report".into());
    report.with_file_name(format!("{stem}.witness.txt"))
}

fn describe(r: &SearchReport) -> String {
    let name = match r.family {
        Family::Ramsey => format!("R(C_{}, C_{})", r.params["m"], r.params["n"]),
        Family::GallaiRamsey => format!("gr_{}(K_3 : C_{})", r.params["k"], r.params["m"]),
    };
    match r.value {
        Some(v) => format!("{name} = {v}"),
        None => format!("{name} >= {}", r.lower),
    }
}

fn search(cmd: SearchCommand) -> Result<u8> {
    let (result, opts) = match &cmd {
        SearchCommand::Ramsey { m, n, opts } => (search_ramsey(*m, *n, &options(opts)?), opts),
        SearchCommand::GallaiRamsey { m, k, opts } => (search_gallai_ramsey(*m, *k, &options(opts)?), opts),
    };
    let mut report = match result {
        Ok(r) => r,
        Err(e @ Error::OverLimit { .. }) => {
            return Err(anyhow!(e)).context("--n-max (raise with --limits or GALLAI_LAB_LIMITS, at your own runtime risk)")
        }
        Err(e @ Error::BadParameters(_)) => return Err(anyhow!(e)).context("--m/--n/--k"),
        Err(e) => return Err(e.into()),
    };
    if opts.no_timing {
        report = report.without_timing();
    }
    if let Some(path) = &opts.out.output {
        let wpath = witness_path(path);
        report.witness_file = wpath.file_name().map(|s| s.to_string_lossy().into_owned());
        let witness = report.witness.as_ref().expect("search attaches a witness");
        fs::write(&wpath, to_text_with_comments(witness, &[describe(&report)]))
            .with_context(|| format!("-o: cannot write {}", wpath.display()))?;
        fs::write(path, format!("{}\n", report.to_json()))
            .with_context(|| format!("-o: cannot write {}", path.display()))?;
    }
    if opts.json {
        println!("{}", report.to_json());
    } else {
        println!("{}", describe(&report));
        let s = report.stats;
        println!("nodes {} canonical {} rejected {} ms {}", s.nodes, s.canonical, s.rejected, s.ms);
    }
    Ok(CLEAN)
}

fn verify(path: &Path) -> Result<u8> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut report = SearchReport::from_json(&text).with_context(|| path.display().to_string())?;
    if let Some(file) = &report.witness_file {
        let wpath = path.parent().unwrap_or(Path::new(".")).join(file);
        report.witness = Some(read_coloring(&wpath)?);
    }
    match verify_certificate(&report) {
        Validity::Valid => {
            println!("valid: {}", describe(&report));
            Ok(CLEAN)
        }
        Validity::Invalid { reason, witness } => {
            println!("invalid: {reason}");
            if let Some(w) = witness {
                println!("{}", w.to_json());
            }
            Ok(FOUND)
        }
    }
}
