use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use tope_committees::committees::{
    enumerate_all_with, enumerate_layer_with, minimal_committees_with, verify_prop8_with, verify_thm9_with,
    Committee, CommitteeFamily,
};
use tope_committees::farey::{
    farey_boolean, farey_boolean_oracle_with, farey_numerator_bounded, farey_sequence, map_fm_to_half,
    map_half_to_fm, neighbor_general, verify_suite, Direction, FareyError, FareySeq, Orientation, Side,
};
use tope_committees::om::{from_central_arrangement, parse_arrangement, parse_topes, Arrangement, ToposSystem};
use tope_committees::schemes::{
    closed_form_p, crosspolytope_whitney, scheme_oracle_table, valency, verify_schemes_with, SchemeKind,
};
use tope_committees::{Fraction, Guard, Report, Strategy};

use crate::error::CliError;
use crate::{Cli, Command, CommitteesCmd, FamilyOpts, FareyCmd, OmCmd, SchemeName, SchemeOpts, SchemesCmd, SeqKind, VerifyCmd};

/// Largest `--m-max` for `farey verify` without `--force`.
const FAREY_VERIFY_MAX_M: u64 = 256;
/// Range `verify all` runs the Farey suite over.
const ALL_FAREY_M_MAX: u64 = 64;

type Result<T = ()> = std::result::Result<T, CliError>;

/// Writes to stdout; a closed pipe ends the process quietly.
fn emit(s: &str) {
    use std::io::{ErrorKind, Write};
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(s.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write output: {e}");
        std::process::exit(2);
    }
}

macro_rules! out {
    ($($t:tt)*) => { emit(&format!($($t)*)) };
}

macro_rules! outln {
    ($($t:tt)*) => { emit(&format!("{}\n", format_args!($($t)*))) };
}

pub fn run(cli: Cli) -> Result {
    let strategy = if cli.sequential { Strategy::Sequential } else { Strategy::default() };
    match cli.command {
        Command::Farey(cmd) => farey(cmd, strategy),
        Command::Om(cmd) => om(cmd),
        Command::Committees(cmd) => committees(cmd, strategy),
        Command::Schemes(cmd) => schemes(cmd),
        Command::Verify(cmd) => verify(cmd, strategy),
    }
}

fn guard(force: bool) -> Guard {
    if force {
        eprintln!("warning: --force overrides the resource guard; this run may be slow or exhaust memory");
        Guard::Override
    } else {
        Guard::Enforce
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))
}

fn read_topes(path: &str) -> Result<ToposSystem> {
    parse_topes(&read(path)?).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn print_json(v: &Value) {
    outln!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn fractions_json(seq: &FareySeq) -> Value {
    Value::Array(seq.entries().iter().map(|f| Value::String(f.to_string())).collect())
}

fn print_seq(seq: &FareySeq) {
    let mut out = String::new();
    for f in seq.entries() {
        writeln!(out, "{f}").unwrap();
    }
    out!("{out}");
}

fn farey(cmd: FareyCmd, strategy: Strategy) -> Result {
    match cmd {
        FareyCmd::Gen { kind, n, m, json } => {
            let need_m = || m.ok_or_else(|| CliError::Usage(format!("--kind {kind:?} requires --m").to_lowercase()));
            let (seq, label) = match kind {
                SeqKind::Standard => (farey_sequence(n)?, "standard"),
                SeqKind::Boolean => (farey_boolean(n, need_m()?)?, "boolean"),
                SeqKind::Numbound => (farey_numerator_bounded(n, need_m()?)?, "numbound"),
            };
            if json {
                let mut obj = json!({ "v": 1, "kind": label, "n": n, "fractions": fractions_json(&seq) });
                if let Some(m) = m.filter(|_| kind != SeqKind::Standard) {
                    obj["m"] = json!(m);
                }
                print_json(&obj);
            } else {
                print_seq(&seq);
            }
        }
        FareyCmd::Neighbors { m, frac, json } => {
            let f: Fraction = frac.parse()?;
            let n = m.checked_mul(2).ok_or(FareyError::Overflow)?;
            let seq = farey_boolean(n, m)?;
            let side = |dir| match neighbor_general(&seq, f, dir) {
                Ok(g) => Ok(Some(g)),
                Err(FareyError::NoNeighbor { .. }) => Ok(None),
                Err(e) => Err(CliError::from(e)),
            };
            let (pred, succ) = (side(Direction::Pred)?, side(Direction::Succ)?);
            let show = |g: Option<Fraction>| g.map_or_else(|| "none".to_string(), |g| g.to_string());
            if json {
                let val = |g: Option<Fraction>| g.map_or(Value::Null, |g| Value::String(g.to_string()));
                print_json(&json!({ "v": 1, "m": m, "fraction": f.to_string(), "pred": val(pred), "succ": val(succ) }));
            } else {
                outln!("pred {}, succ {}", show(pred), show(succ));
            }
        }
        FareyCmd::Maps { m } => {
            let n = m.checked_mul(2).ok_or(FareyError::Overflow)?;
            let seq = farey_boolean(n, m)?;
            let fm = farey_sequence(m)?;
            let mut out = String::new();
            for side in [Side::Left, Side::Right] {
                let half = match side {
                    Side::Left => seq.left_half(),
                    Side::Right => seq.right_half(),
                };
                for orientation in [Orientation::Preserving, Orientation::Reversing] {
                    writeln!(out, "# {side} half -> F_{m}, {}", orientation_name(orientation)).unwrap();
                    for &f in half {
                        writeln!(out, "{f} -> {}", map_half_to_fm(f, side, orientation)?).unwrap();
                    }
                    writeln!(out, "# F_{m} -> {side} half, {}", orientation_name(orientation)).unwrap();
                    for &f in fm.entries() {
                        writeln!(out, "{f} -> {}", map_fm_to_half(f, side, orientation)?).unwrap();
                    }
                }
            }
            out!("{out}");
        }
        FareyCmd::Verify { m_max, force } => {
            let g = guard(force);
            if g.enforced() && m_max > FAREY_VERIFY_MAX_M {
                return Err(CliError::Guard(format!(
                    "resource guard: --m-max {m_max} exceeds {FAREY_VERIFY_MAX_M} (use --force)"
                )));
            }
            let report = verify_suite(m_max, strategy);
            if report.passed() {
                outln!("OK");
            } else {
                return finish(&report);
            }
        }
        FareyCmd::Oracle { n, m, force } => print_seq(&farey_boolean_oracle_with(n, m, guard(force))?),
    }
    Ok(())
}

fn orientation_name(o: Orientation) -> &'static str {
    match o {
        Orientation::Preserving => "order-preserving",
        Orientation::Reversing => "order-reversing",
    }
}

fn om(cmd: OmCmd) -> Result {
    match cmd {
        OmCmd::FromArrangement { file } => {
            let arr = parse_arrangement(&read(&file)?).map_err(|e| CliError::Input(format!("{file}: {e}")))?;
            out!("{}", from_central_arrangement(&arr)?.serialize());
        }
        OmCmd::Validate { file } => {
            let sys = read_topes(&file)?;
            outln!("valid t={} |T|={}", sys.t(), sys.len());
        }
        OmCmd::Info { file, json } => {
            let sys = read_topes(&file)?;
            let sizes: Vec<usize> = (1..=sys.t()).map(|e| sys.positive_halfspace(e).map(|h| h.len())).collect::<std::result::Result<_, _>>()?;
            if json {
                print_json(&json!({
                    "v": 1, "t": sys.t(), "topes": sys.len(), "acyclic": sys.is_acyclic(), "halfspaces": sizes,
                }));
            } else {
                outln!("t={} |T|={} acyclic={}", sys.t(), sys.len(), sys.is_acyclic());
                let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
                outln!("halfspaces {}", sizes.join(" "));
            }
        }
    }
    Ok(())
}

fn committee_json(sys: &ToposSystem, c: &Committee) -> Value {
    Value::Array(c.topes(sys).into_iter().map(|t| Value::String(t.to_string())).collect())
}

fn print_layers<'a>(sys: &ToposSystem, layers: impl Iterator<Item = (usize, &'a [Committee])>, json: bool) {
    if json {
        let mut map = Map::new();
        for (k, cs) in layers {
            map.insert(k.to_string(), Value::Array(cs.iter().map(|c| committee_json(sys, c)).collect()));
        }
        print_json(&json!({ "v": 1, "layers": map }));
    } else {
        let mut out = String::new();
        for (_, cs) in layers {
            for c in cs {
                writeln!(out, "{}", c.render(sys)).unwrap();
            }
        }
        out!("{out}");
    }
}

fn print_family(sys: &ToposSystem, fam: &CommitteeFamily, json: bool) {
    print_layers(sys, fam.layers().iter().map(|(&k, v)| (k, v.as_slice())), json);
}

fn committees(cmd: CommitteesCmd, strategy: Strategy) -> Result {
    match cmd {
        CommitteesCmd::Enumerate { opts: FamilyOpts { file, json, force }, layer, no_opposites } => {
            let sys = read_topes(&file)?;
            let cs = enumerate_layer_with(&sys, layer, no_opposites, guard(force), strategy)?;
            print_layers(&sys, std::iter::once((layer, cs.as_slice())), json);
        }
        CommitteesCmd::Minimal { opts: FamilyOpts { file, json, force } } => {
            let sys = read_topes(&file)?;
            print_family(&sys, &minimal_committees_with(&sys, guard(force), strategy)?, json);
        }
        CommitteesCmd::All { opts: FamilyOpts { file, json, force }, no_opposites } => {
            let sys = read_topes(&file)?;
            print_family(&sys, &enumerate_all_with(&sys, no_opposites, guard(force), strategy)?, json);
        }
    }
    Ok(())
}

fn scheme_kind(o: &SchemeOpts) -> Result<SchemeKind> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("--scheme {} requires --{flag}", scheme_name(o.scheme))))
    };
    let kind = match o.scheme {
        SchemeName::Johnson => SchemeKind::Johnson { n: need(o.n, "n")?, d: need(o.d, "d")? },
        SchemeName::Crosspolytope => SchemeKind::Crosspolytope { m: need(o.m, "m")?, d: need(o.d, "d")? },
        SchemeName::Hamming => SchemeKind::Hamming { m: need(o.m, "m")? },
    };
    Ok(kind.validate()?)
}

fn scheme_name(s: SchemeName) -> &'static str {
    match s {
        SchemeName::Johnson => "johnson",
        SchemeName::Crosspolytope => "crosspolytope",
        SchemeName::Hamming => "hamming",
    }
}

fn schemes(cmd: SchemesCmd) -> Result {
    match cmd {
        SchemesCmd::P { scheme, i, j, k } => {
            let kind = scheme_kind(&scheme)?;
            match closed_form_p(kind, i, j, k)? {
                Some(p) => outln!("{p}"),
                None => {
                    return Err(CliError::Input(format!(
                        "{kind}: no closed form for p^k_ij below full rank; use 'schemes oracle'"
                    )))
                }
            }
        }
        SchemesCmd::Valency { scheme } => {
            let kind = scheme_kind(&scheme)?;
            for i in 0..=kind.diameter() {
                outln!("n_{i} {}", valency(kind, i)?);
            }
        }
        SchemesCmd::Whitney { m, d } => outln!("{}", crosspolytope_whitney(m, d)?),
        SchemesCmd::Oracle { scheme, i, j, k, force } => {
            let kind = scheme_kind(&scheme)?;
            let r = kind.diameter();
            if i > r || j > r || k > r {
                return Err(CliError::Input(format!("indices ({i},{j},{k}) exceed {r} for {kind}")));
            }
            let table = scheme_oracle_table(kind, k, guard(force))?;
            outln!("count {}", table.counts[i][j]);
            outln!("well_defined {}", table.well_defined);
            outln!("pairs_sampled {}", table.pairs_sampled);
        }
    }
    Ok(())
}

/// Prints a report and maps it to an exit status.
fn finish(report: &Report) -> Result {
    out!("{report}");
    if !report.hypothesis_holds() {
        Err(CliError::Hypothesis)
    } else if report.passed() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn builtin(rows: &[&[i64]]) -> ToposSystem {
    let arr = Arrangement::from_integers(rows).expect("built-in arrangement is valid");
    from_central_arrangement(&arr).expect("built-in arrangement is realizable")
}

fn verify(cmd: VerifyCmd, strategy: Strategy) -> Result {
    match cmd {
        VerifyCmd::Prop8 { file, force } => {
            let sys = read_topes(&file)?;
            finish(&verify_prop8_with(&sys, guard(force), strategy)?)
        }
        VerifyCmd::Thm9 { file, force } => {
            let sys = read_topes(&file)?;
            finish(&verify_thm9_with(&sys, guard(force), strategy)?)
        }
        VerifyCmd::Schemes { max_n, max_m, force } => {
            finish(&verify_schemes_with(max_n, max_m, guard(force), strategy)?)
        }
        VerifyCmd::All => {
            let triangle = builtin(&[&[1, 0], &[-1, 1], &[-1, -1]]);
            let fourlines = builtin(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, -1]]);
            let mut reports = vec![
                ("farey suite, 2 <= m <= 64".to_string(), verify_suite(ALL_FAREY_M_MAX, strategy)),
                ("schemes, n <= 10, m <= 6".to_string(), verify_schemes_with(10, 6, Guard::Enforce, strategy)?),
            ];
            for (name, sys) in [("triangle", &triangle), ("four lines", &fourlines)] {
                reports.push((format!("committees, {name}"), verify_prop8_with(sys, Guard::Enforce, strategy)?));
                reports.push((
                    format!("opposite-free committees, {name}"),
                    verify_thm9_with(sys, Guard::Enforce, strategy)?,
                ));
            }
            let mut ok = true;
            for (title, report) in &reports {
                outln!("== {title}");
                out!("{report}");
                ok &= report.passed();
            }
            if ok {
                Ok(())
            } else {
                Err(CliError::Failed)
            }
        }
    }
}
