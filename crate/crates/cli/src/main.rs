use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use wreath::characters::char_table;
use wreath::colored_perm::{ColoredPermutation, DEFAULT_MAX_ORDER};
use wreath::model::{conjecture_experiment, decompose_model, ConjectureReport, ModelBasis};
use wreath::rsk::colored_rsk;
use wreath::shapes::MultiPartition;
use wreath::verify::{
    check_homomorphism, model_character_table, sqroots_row_for, sqroots_table, verify_all, CheckResult,
    ClassCharacterCheck, SqrootRow, VerificationReport, VerifyOptions,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact character theory, absolute square roots and the signed Gelfand
/// model of the wreath products Z_r wr S_n.
#[derive(Parser)]
#[command(name = "wreath", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Refuse groups with r^n n! above this
    #[arg(long, global = true, env = "WREATH_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    max_order: u64,

    /// Seed for sampled checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Clone, Copy)]
struct Group {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Character table with class sizes and exact cyclotomic values
    Chartable(Group),
    /// Absolute square root counts per class: brute force, formula, character sum
    Sqroots {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: Option<usize>,
        /// Restrict to one element, as {"r":..,"n":..,"perm":[..],"colors":[..]}
        #[arg(long)]
        element: Option<String>,
    },
    /// Gelfand model checks
    #[command(subcommand)]
    Model(ModelCommand),
    /// Colored RSK pair of one element
    Rsk {
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        element: String,
    },
    /// Blocks of the model by number of 2-cycles against RSK shapes
    Conjecture(Group),
    /// Every check for one group
    VerifyAll(Group),
}

#[derive(Subcommand)]
enum ModelCommand {
    /// Homomorphism, character identity and multiplicities
    Verify {
        #[command(flatten)]
        group: Group,
        /// Check all pairs for the homomorphism, not a sample
        #[arg(long)]
        exhaustive: bool,
    },
    /// Same as the top-level `conjecture`
    Conjecture(Group),
}

enum Failure {
    Usage(String),
    Verification,
    /// stdout went away, e.g. piped into `head`
    Closed,
}

impl From<wreath::error::Error> for Failure {
    fn from(e: wreath::error::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(e) => e.into(),
            other => Failure::Usage(format!("{other:?}")),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(EXIT_FAIL),
        Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let opts = VerifyOptions {
        max_order: cli.max_order,
        seed: cli.seed,
        ..Default::default()
    };
    match &cli.command {
        Command::Chartable(g) => chartable(cli, g),
        Command::Sqroots { r, n, element } => sqroots(cli, *r, *n, element.as_deref()),
        Command::Model(ModelCommand::Verify { group, exhaustive }) => model_verify(
            cli,
            group,
            &VerifyOptions {
                exhaustive: *exhaustive,
                ..opts
            },
        ),
        Command::Model(ModelCommand::Conjecture(g)) | Command::Conjecture(g) => conjecture(cli, g),
        Command::Rsk { r, element } => rsk(cli, *r, element),
        Command::VerifyAll(g) => {
            let report = verify_all(g.r, g.n, &opts)?;
            emit_report(cli.format, &report)?;
            pass_or_fail(report.all_pass())
        }
    }
}

fn pass_or_fail(pass: bool) -> Outcome {
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn print_json<T: Serialize>(value: &T) -> Outcome {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| match e.io_error_kind() {
        Some(kind) => io::Error::from(kind).into(),
        None => Failure::Usage(e.to_string()),
    })?;
    writeln!(out)?;
    Ok(())
}

fn csv_out(header: &[String], rows: impl IntoIterator<Item = Vec<String>>) -> Outcome {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn text_out(header: &[String], rows: impl IntoIterator<Item = Vec<String>>) -> Outcome {
    let rows: Vec<Vec<String>> = rows.into_iter().collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i].chars().count())
                .chain([header[i].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = io::stdout().lock();
    for row in std::iter::once(header.to_vec()).chain(rows) {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", cells.join("  ").trim_end())?;
    }
    Ok(())
}

fn table(format: Format, header: &[&str], rows: Vec<Vec<String>>) -> Outcome {
    let header: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    match format {
        Format::Csv => csv_out(&header, rows),
        _ => text_out(&header, rows),
    }
}

fn parse_element(s: &str) -> Result<ColoredPermutation, Failure> {
    ColoredPermutation::from_json_str(s).map_err(|e| Failure::Usage(format!("--element: {e}")))
}

fn chartable(cli: &Cli, g: &Group) -> Outcome {
    let t = char_table(g.r, g.n, cli.max_order)?;
    if cli.format == Format::Json {
        return print_json(&t);
    }
    let mut header = vec!["character".to_string()];
    header.extend(t.classes.iter().map(|c| c.class_type.by_color.to_string()));
    let mut rows = vec![std::iter::once("size".to_string())
        .chain(t.classes.iter().map(|c| c.size.to_string()))
        .collect()];
    for (shape, values) in t.rows.iter().zip(&t.values) {
        rows.push(
            std::iter::once(shape.to_string())
                .chain(values.iter().map(|v| v.to_string()))
                .collect(),
        );
    }
    match cli.format {
        Format::Csv => csv_out(&header, rows),
        _ => text_out(&header, rows),
    }
}

fn sqroots(cli: &Cli, r: usize, n: Option<usize>, element: Option<&str>) -> Outcome {
    let rows: Vec<SqrootRow> = match (element, n) {
        (Some(s), _) => {
            let g = parse_element(s)?;
            if g.r() != r || n.is_some_and(|n| n != g.n()) {
                return Err(Failure::Usage("--element does not match --r/--n".into()));
            }
            vec![sqroots_row_for(&g, cli.max_order)?]
        }
        (None, Some(n)) => sqroots_table(r, n, cli.max_order)?,
        (None, None) => return Err(Failure::Usage("sqroots needs --n or --element".into())),
    };
    let pass = rows.iter().all(|row| row.pass);
    if cli.format == Format::Json {
        print_json(&json!({ "r": r, "rows": rows, "pass": pass }))?;
    } else {
        let body = rows
            .iter()
            .map(|row| {
                vec![
                    row.class.to_string(),
                    row.representative.to_string(),
                    row.bruteforce.to_string(),
                    row.formula.to_string(),
                    row.character_sum.to_string(),
                    pass_label(row.pass),
                ]
            })
            .collect();
        table(
            cli.format,
            &[
                "class",
                "representative",
                "bruteforce",
                "formula",
                "character_sum",
                "result",
            ],
            body,
        )?;
    }
    pass_or_fail(pass)
}

fn pass_label(pass: bool) -> String {
    if pass { "pass" } else { "FAIL" }.to_string()
}

#[derive(Serialize)]
struct ModelReport {
    r: usize,
    n: usize,
    homomorphism: CheckResult,
    character_identity: Vec<ClassCharacterCheck>,
    multiplicities: Vec<Multiplicity>,
    pass: bool,
}

#[derive(Serialize)]
struct Multiplicity {
    shape: MultiPartition,
    multiplicity: i64,
}

fn model_verify(cli: &Cli, g: &Group, opts: &VerifyOptions) -> Outcome {
    let basis = ModelBasis::new(g.r, g.n, opts.max_order)?;
    let homomorphism = check_homomorphism(&basis, opts)?;
    let character_identity = model_character_table(&basis, opts.max_order)?;
    let multiplicities: Vec<Multiplicity> = decompose_model(g.r, g.n, opts.max_order)?
        .into_iter()
        .map(|(shape, multiplicity)| Multiplicity { shape, multiplicity })
        .collect();
    let pass = homomorphism.pass
        && character_identity.iter().all(|c| c.pass)
        && multiplicities.iter().all(|m| m.multiplicity == 1);
    let report = ModelReport {
        r: g.r,
        n: g.n,
        homomorphism,
        character_identity,
        multiplicities,
        pass,
    };
    if cli.format == Format::Json {
        print_json(&report)?;
    } else {
        let mut rows = vec![vec![
            "homomorphism".into(),
            format!("{:?}", report.homomorphism.scope).to_lowercase(),
            report.homomorphism.cases.to_string(),
            String::new(),
            pass_label(report.homomorphism.pass),
        ]];
        for c in &report.character_identity {
            rows.push(vec![
                format!("class {}", c.class),
                c.model_character.to_string(),
                c.character_sum.to_string(),
                String::new(),
                pass_label(c.pass),
            ]);
        }
        for m in &report.multiplicities {
            rows.push(vec![
                format!("irreducible {}", m.shape),
                m.multiplicity.to_string(),
                "1".into(),
                String::new(),
                pass_label(m.multiplicity == 1),
            ]);
        }
        table(cli.format, &["check", "value", "expected", "", "result"], rows)?;
    }
    pass_or_fail(pass)
}

fn conjecture(cli: &Cli, g: &Group) -> Outcome {
    let report: ConjectureReport = conjecture_experiment(g.r, g.n, cli.max_order)?;
    if cli.format == Format::Json {
        print_json(&report)?;
    } else {
        let rows = report
            .groups
            .iter()
            .map(|b| {
                vec![
                    b.two_cycles.to_string(),
                    b.total_cycles.to_string(),
                    b.dimension.to_string(),
                    b.shape_dimension.to_string(),
                    b.shapes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "),
                    b.invariant.to_string(),
                    b.character_matches.to_string(),
                ]
            })
            .collect();
        table(
            cli.format,
            &[
                "two_cycles",
                "total_cycles",
                "dimension",
                "shape_dimension",
                "shapes",
                "invariant",
                "character_matches",
            ],
            rows,
        )?;
    }
    // agreement is only reported; invariance is a theorem
    pass_or_fail(report.all_invariant() && report.traces_add_up)
}

fn rsk(cli: &Cli, r: Option<usize>, element: &str) -> Outcome {
    let pi = parse_element(element)?;
    if r.is_some_and(|r| r != pi.r()) {
        return Err(Failure::Usage("--element does not match --r".into()));
    }
    let pair = colored_rsk(&pi);
    if cli.format == Format::Json {
        return print_json(&pair);
    }
    let fmt = |t: &wreath::shapes::Tableau| serde_json::to_string(t).expect("tableau serializes");
    let rows = pair
        .p
        .0
        .iter()
        .zip(&pair.q.0)
        .enumerate()
        .map(|(c, (p, q))| vec![c.to_string(), fmt(p), fmt(q)])
        .collect();
    table(cli.format, &["component", "p", "q"], rows)
}

fn emit_report(format: Format, report: &VerificationReport) -> Outcome {
    if format == Format::Json {
        return print_json(report);
    }
    let rows = report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                format!("{:?}", c.scope).to_lowercase(),
                c.cases.to_string(),
                format!("{:.1}", c.wall_time_ms),
                pass_label(c.pass),
                c.counterexample.as_ref().map(|v| v.to_string()).unwrap_or_default(),
            ]
        })
        .collect();
    table(
        format,
        &["check", "scope", "cases", "ms", "result", "counterexample"],
        rows,
    )
}
