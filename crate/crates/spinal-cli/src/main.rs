//! Command-line front end: exact counts, tables, enumeration, the two
//! codecs, the token transformation, the brute-force oracle, and a
//! verification harness over the identities connecting them.

use std::fs;
use std::io;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::One;
use spinal::{
    canonical_form, check_ode_residual, count_c1_classes, count_c2_classes, count_nlsctc,
    count_nlstc, count_nlstc_via_marked, count_pair_partitions, count_stc, count_stc_naive,
    count_stc_via_lemma, count_stc_via_marked, decode_nlsctc, decode_nlstc, encode_nlsctc,
    encode_nlstc, enumerate_c1_classes, enumerate_c2_classes, enumerate_nlsctc,
    enumerate_nlstc, enumerate_stc, expected_series_coeff, isomorphic,
    labeled_marked_tree_count, network_from_json, network_to_dot, network_to_json,
    oracle_nlstc, oracle_stc, series_expand_s, unlabeled_marked_tree_count,
    EnumerationBudget, ExactCount, LrqWord, PhyloNetwork, Word,
};

#[derive(Parser)]
#[command(name = "spinal", version, about = "Spinal tree-child network toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact count with its provenance.
    Count(CountArgs),
    /// Print a rectangular table of counts as CSV or JSON.
    Table(TableArgs),
    /// Generate all objects of a family at one parameter point.
    Enumerate(EnumerateArgs),
    /// Encode a network file into its word.
    Encode(EncodeArgs),
    /// Decode a word file into its network.
    Decode(DecodeArgs),
    /// Run the token-to-word transformation.
    Transform(TransformArgs),
    /// Check every identity connecting the modules.
    Verify(VerifyArgs),
    /// Count or emit networks via the brute-force oracle.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Labeled strictly spinal tree-child networks.
    Stc,
    /// Unlabeled strictly spinal tree-child networks.
    Nlstc,
    /// Unlabeled spinal caterpillar tree-child networks.
    Nlsctc,
    /// Word classes with adjacent repeated occurrences.
    C1,
    /// Word classes separated only by high letters.
    C2,
    /// Partitions into singletons and pairs (Bessel triangle).
    Bessel,
    /// Labeled marked trees.
    S,
    /// Unlabeled marked trees.
    D,
}

impl Family {
    fn count(self, n: u32, k: u32) -> ExactCount {
        match self {
            Family::Stc => count_stc(n, k),
            Family::Nlstc => count_nlstc(n, k),
            Family::Nlsctc => count_nlsctc(n, k),
            Family::C1 => count_c1_classes(n, k),
            Family::C2 => count_c2_classes(n, k),
            Family::Bessel => count_pair_partitions(n, k),
            Family::S => labeled_marked_tree_count(n, k),
            Family::D => unlabeled_marked_tree_count(n, k),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Word,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WordClassArg {
    /// Spinal networks; adjacent repeated occurrences.
    C1,
    /// Caterpillar networks; high-separated occurrences.
    C2,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    family: Family,
    /// Largest n; rows cover 0..=n.
    #[arg(long)]
    n: u32,
    /// Largest k; columns cover 0..=k.
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Wall-clock limit for the generation itself.
    #[arg(long, default_value_t = 60)]
    budget_seconds: u64,
    /// Largest number of generated objects.
    #[arg(long, default_value_t = 1_000_000)]
    max_objects: u64,
    /// Report object and distinct-certificate counts on stderr.
    #[arg(long)]
    dedup_report: bool,
}

#[derive(Args)]
struct EncodeArgs {
    /// Network JSON file.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = WordClassArg::C1)]
    class: WordClassArg,
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Decode the result again and require an isomorphic network.
    #[arg(long)]
    roundtrip: bool,
}

#[derive(Args)]
struct DecodeArgs {
    /// Word text file ("n=4 k=2" header, then comma-separated letters).
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = WordClassArg::C1)]
    class: WordClassArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Encode the result again and require the canonical input word.
    #[arg(long)]
    roundtrip: bool,
}

#[derive(Args)]
struct TransformArgs {
    /// Token file, e.g. "L R1 L R2 L Q1 Q2 L".
    input: PathBuf,
    /// Also print the intermediate stages.
    #[arg(long)]
    steps: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Wall-clock limit; cells past it are reported as skipped.
    #[arg(long, default_value_t = 60)]
    budget_seconds: u64,
    /// Largest number of generated objects per cell.
    #[arg(long, default_value_t = 1_000_000)]
    max_objects: u64,
    /// Run a single identity by name.
    #[arg(long)]
    only: Option<String>,
    /// Perturb the named identity by one to prove mismatches surface.
    #[arg(long)]
    inject_fault: Option<String>,
}

#[derive(Args)]
struct OracleArgs {
    /// Network family; only stc and nlstc have oracles.
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long, default_value_t = 60)]
    budget_seconds: u64,
    #[arg(long, default_value_t = 1_000_000)]
    max_objects: u64,
}

/// A terminal failure: machine-parseable code, message, process exit.
struct Failure {
    code: &'static str,
    message: String,
    exit: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: "usage", message: message.into(), exit: 1 }
    }

    fn verification(message: impl Into<String>) -> Self {
        Failure { code: "verification-failure", message: message.into(), exit: 2 }
    }

    fn io(message: impl Into<String>) -> Self {
        Failure { code: "io", message: message.into(), exit: 1 }
    }
}

impl From<spinal::Error> for Failure {
    fn from(err: spinal::Error) -> Self {
        let exit = match err {
            spinal::Error::BudgetExceeded(_) => 3,
            _ => 1,
        };
        Failure { code: err.code(), message: err.to_string(), exit }
    }
}

fn main() -> ExitCode {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let kind = err.kind();
            if kind == ErrorKind::DisplayHelp || kind == ErrorKind::DisplayVersion {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            let rendered = err.render().to_string();
            let mut lines = rendered.lines();
            let mut message = lines
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ")
                .to_string();
            if message.ends_with(':') {
                let detail: Vec<&str> = lines
                    .map(str::trim)
                    .take_while(|line| !line.is_empty())
                    .collect();
                message = format!("{message} {}", detail.join(", "));
            }
            eprintln!("error[usage]: {message}");
            return ExitCode::from(1);
        }
    };
    let result = match cli.command {
        Command::Count(args) => cmd_count(args),
        Command::Table(args) => cmd_table(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Encode(args) => cmd_encode(args),
        Command::Decode(args) => cmd_decode(args),
        Command::Transform(args) => cmd_transform(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Oracle(args) => cmd_oracle(args),
    };
    match result {
        Ok(exit) => ExitCode::from(exit),
        Err(failure) => {
            eprintln!("error[{}]: {}", failure.code, failure.message);
            ExitCode::from(failure.exit)
        }
    }
}

fn budget(seconds: u64, max_objects: u64) -> EnumerationBudget {
    EnumerationBudget {
        max_objects,
        time_limit: Duration::from_secs(seconds),
        ..EnumerationBudget::default()
    }
}

fn write_output(target: Option<&PathBuf>, content: &str) -> Result<(), Failure> {
    match target {
        Some(path) => fs::write(path, content)
            .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::Read::read_to_string(&mut io::stdin(), &mut text)
            .map_err(|e| Failure::io(format!("cannot read standard input: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))
}

fn count_row(n: u32, k: u32, count: &ExactCount) -> String {
    format!("{n},{k},{},{}", count.value, count.provenance)
}

fn count_json(n: u32, k: u32, count: &ExactCount) -> serde_json::Value {
    serde_json::json!({
        "n": n,
        "k": k,
        "value": count.value.to_string(),
        "provenance": count.provenance.to_string(),
    })
}

fn cmd_count(args: CountArgs) -> Result<u8, Failure> {
    let count = args.family.count(args.n, args.k);
    match args.format {
        Format::Csv => println!("{}", count_row(args.n, args.k, &count)),
        Format::Json => {
            let value = count_json(args.n, args.k, &count);
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        _ => return Err(Failure::usage("count supports --format csv or json")),
    }
    Ok(0)
}

fn cmd_table(args: TableArgs) -> Result<u8, Failure> {
    match args.format {
        Format::Csv => {
            println!("n,k,value,provenance");
            for n in 0..=args.n {
                for k in 0..=args.k {
                    println!("{}", count_row(n, k, &args.family.count(n, k)));
                }
            }
        }
        Format::Json => {
            let mut rows = Vec::new();
            for n in 0..=args.n {
                for k in 0..=args.k {
                    rows.push(count_json(n, k, &args.family.count(n, k)));
                }
            }
            let value = serde_json::Value::Array(rows);
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        _ => return Err(Failure::usage("table supports --format csv or json")),
    }
    Ok(0)
}

fn words_to_text(n: u32, k: u32, words: &[Word]) -> String {
    let mut out = format!("n={n} k={k}\n");
    for word in words {
        out.push_str(&word.letters_csv());
        out.push('\n');
    }
    out
}

fn words_to_csv(words: &[Word]) -> String {
    let mut out = String::from("n,k,letters\n");
    for word in words {
        out.push_str(&format!("{},{},\"{}\"\n", word.n, word.k, word.letters_csv()));
    }
    out
}

fn words_to_json(n: u32, k: u32, words: &[Word]) -> String {
    let letters: Vec<&Vec<u32>> = words.iter().map(|w| &w.letters).collect();
    let value = serde_json::json!({ "n": n, "k": k, "letters": letters });
    let mut text = serde_json::to_string_pretty(&value).unwrap();
    text.push('\n');
    text
}

fn networks_to_json(nets: &[PhyloNetwork]) -> Result<String, Failure> {
    let mut records = Vec::new();
    for net in nets {
        let text = network_to_json(net);
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| Failure::io(format!("internal serialization error: {e}")))?;
        records.push(value);
    }
    let mut text =
        serde_json::to_string_pretty(&serde_json::Value::Array(records)).unwrap();
    text.push('\n');
    Ok(text)
}

fn networks_to_csv(nets: &[PhyloNetwork]) -> String {
    let mut out = String::from("index,leaves,reticulations,vertices,arcs\n");
    for (i, net) in nets.iter().enumerate() {
        out.push_str(&format!(
            "{i},{},{},{},{}\n",
            net.leaf_count(),
            net.reticulation_count(),
            net.vertex_count(),
            net.arc_count()
        ));
    }
    out
}

fn dedup_report(nets: &[PhyloNetwork]) -> Result<String, Failure> {
    let mut certificates = std::collections::BTreeSet::new();
    for net in nets {
        certificates.insert(canonical_form(net)?);
    }
    Ok(format!("dedup: {} objects, {} distinct certificates", nets.len(), certificates.len()))
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8, Failure> {
    let limits = budget(args.budget_seconds, args.max_objects);
    match args.family {
        Family::C1 | Family::C2 => {
            let words = match args.family {
                Family::C1 => enumerate_c1_classes(args.n, args.k, &limits)?,
                _ => enumerate_c2_classes(args.n, args.k, &limits)?,
            };
            let format = args.format.unwrap_or(Format::Word);
            let text = match format {
                Format::Word => words_to_text(args.n, args.k, &words),
                Format::Csv => words_to_csv(&words),
                Format::Json => words_to_json(args.n, args.k, &words),
                Format::Dot => {
                    return Err(Failure::usage("dot output applies to networks; decode a word instead"))
                }
            };
            print!("{text}");
            if args.dedup_report {
                let distinct: std::collections::BTreeSet<&Vec<u32>> =
                    words.iter().map(|w| &w.letters).collect();
                eprintln!("dedup: {} objects, {} distinct certificates", words.len(), distinct.len());
            }
        }
        Family::Stc | Family::Nlstc | Family::Nlsctc => {
            let nets = match args.family {
                Family::Stc => enumerate_stc(args.n, args.k, &limits)?,
                Family::Nlstc => enumerate_nlstc(args.n, args.k, &limits)?,
                _ => enumerate_nlsctc(args.n, args.k, &limits)?,
            };
            let format = args.format.unwrap_or(Format::Json);
            let text = match format {
                Format::Json => networks_to_json(&nets)?,
                Format::Csv => networks_to_csv(&nets),
                Format::Word => {
                    let words = nets
                        .iter()
                        .map(|net| match args.family {
                            Family::Nlstc => encode_nlstc(net),
                            Family::Nlsctc => encode_nlsctc(net),
                            _ => Err(spinal::Error::LabeledInput),
                        })
                        .collect::<Result<Vec<Word>, _>>()
                        .map_err(|_| {
                            Failure::usage("word output applies to unlabeled families")
                        })?;
                    words_to_text(args.n.saturating_sub(1), args.k, &words)
                }
                Format::Dot => {
                    return Err(Failure::usage("dot output applies to a single decoded network"))
                }
            };
            print!("{text}");
            if args.dedup_report {
                eprintln!("{}", dedup_report(&nets)?);
            }
        }
        Family::Bessel | Family::S | Family::D => {
            return Err(Failure::usage(
                "enumerate supports stc, nlstc, nlsctc, c1, and c2; use count for the rest",
            ))
        }
    }
    Ok(0)
}

fn cmd_encode(args: EncodeArgs) -> Result<u8, Failure> {
    let text = read_input(&args.input)?;
    let net = network_from_json(&text)?;
    let word = match args.class {
        WordClassArg::C1 => encode_nlstc(&net)?,
        WordClassArg::C2 => encode_nlsctc(&net)?,
    };
    if args.roundtrip {
        let again = match args.class {
            WordClassArg::C1 => decode_nlstc(&word)?,
            WordClassArg::C2 => decode_nlsctc(&word)?,
        };
        let reference = if net.is_labeled() { net.strip_labels() } else { net.clone() };
        if !isomorphic(&reference, &again)? {
            return Err(Failure::verification(
                "decoding the encoded word gave a non-isomorphic network".to_string(),
            ));
        }
        eprintln!("roundtrip ok");
    }
    write_output(args.output.as_ref(), &format!("{word}\n"))?;
    Ok(0)
}

fn cmd_decode(args: DecodeArgs) -> Result<u8, Failure> {
    let text = read_input(&args.input)?;
    let word: Word = text.parse()?;
    let net = match args.class {
        WordClassArg::C1 => decode_nlstc(&word)?,
        WordClassArg::C2 => decode_nlsctc(&word)?,
    };
    if args.roundtrip {
        let again = match args.class {
            WordClassArg::C1 => encode_nlstc(&net)?,
            WordClassArg::C2 => encode_nlsctc(&net)?,
        };
        if again != word.canonicalize_tilde()? {
            return Err(Failure::verification(
                "re-encoding the decoded network changed the word".to_string(),
            ));
        }
        eprintln!("roundtrip ok");
    }
    let rendered = match args.format {
        Format::Json => {
            let mut text = network_to_json(&net);
            text.push('\n');
            text
        }
        Format::Dot => network_to_dot(&net),
        _ => return Err(Failure::usage("decode supports --format json or dot")),
    };
    write_output(args.output.as_ref(), &rendered)?;
    Ok(0)
}

fn cmd_transform(args: TransformArgs) -> Result<u8, Failure> {
    let text = read_input(&args.input)?;
    let tokens: LrqWord = text.trim().parse()?;
    let (word, steps) = tokens.transform_with_steps()?;
    if args.steps {
        println!("substituted: {}", steps.substituted_display());
        println!("assigned: {}", steps.assigned_display());
        let reversed: Vec<String> = steps.reversed.iter().map(|x| x.to_string()).collect();
        println!("reversed: {}", reversed.join(","));
    }
    println!("{word}");
    Ok(0)
}

fn cmd_oracle(args: OracleArgs) -> Result<u8, Failure> {
    let limits = budget(args.budget_seconds, args.max_objects);
    let nets = match args.family {
        Family::Nlstc => oracle_nlstc(args.n, args.k, &limits)?,
        Family::Stc => oracle_stc(args.n, args.k, &limits)?,
        _ => {
            return Err(Failure::usage("the oracle covers the stc and nlstc families"));
        }
    };
    match args.format {
        Format::Csv => {
            let count = ExactCount::oracle(BigUint::from(nets.len() as u64));
            println!("{}", count_row(args.n, args.k, &count));
        }
        Format::Json => print!("{}", networks_to_json(&nets)?),
        _ => return Err(Failure::usage("oracle supports --format csv or json")),
    }
    Ok(0)
}

enum CellOutcome {
    Pass,
    Fail(String),
}

struct Identity {
    name: &'static str,
    cells: Vec<(u32, u32)>,
    run: fn(u32, u32, bool, &EnumerationBudget) -> spinal::Result<CellOutcome>,
}

fn compare(label: &str, left: BigUint, right: BigUint, fault: bool) -> CellOutcome {
    let left = if fault { left + BigUint::one() } else { left };
    if left == right {
        CellOutcome::Pass
    } else {
        CellOutcome::Fail(format!("{label}: {left} vs {right}"))
    }
}

fn grid(n_range: std::ops::RangeInclusive<u32>, k_cap: u32) -> Vec<(u32, u32)> {
    let mut cells = Vec::new();
    for n in n_range {
        for k in 0..n.min(k_cap + 1) {
            cells.push((n, k));
        }
    }
    cells
}

fn identities() -> Vec<Identity> {
    vec![
        Identity {
            name: "labeled-count-naive",
            cells: grid(2..=8, 7),
            run: |n, k, fault, _| {
                Ok(compare(
                    "direct vs naive",
                    count_stc(n, k).value,
                    count_stc_naive(n, k).value,
                    fault,
                ))
            },
        },
        Identity {
            name: "labeled-count-relation",
            cells: grid(2..=8, 7),
            run: |n, k, fault, _| {
                Ok(compare(
                    "direct vs unlabeled relation",
                    count_stc(n, k).value,
                    count_stc_via_lemma(n, k).value,
                    fault,
                ))
            },
        },
        Identity {
            name: "labeled-count-marked",
            cells: grid(2..=8, 7),
            run: |n, k, fault, _| {
                Ok(compare(
                    "direct vs marked trees",
                    count_stc(n, k).value,
                    count_stc_via_marked(n, k).value,
                    fault,
                ))
            },
        },
        Identity {
            name: "unlabeled-count-marked",
            cells: grid(2..=8, 7),
            run: |n, k, fault, _| {
                Ok(compare(
                    "direct vs marked trees",
                    count_nlstc(n, k).value,
                    count_nlstc_via_marked(n, k).value,
                    fault,
                ))
            },
        },
        Identity {
            name: "unlabeled-count-words",
            cells: grid(2..=8, 7),
            run: |n, k, fault, _| {
                Ok(compare(
                    "networks vs word classes",
                    count_nlstc(n, k).value,
                    count_c1_classes(n - 1, k).value,
                    fault,
                ))
            },
        },
        Identity {
            name: "caterpillar-count-words",
            cells: grid(2..=8, 7),
            run: |n, k, fault, _| {
                Ok(compare(
                    "networks vs word classes",
                    count_nlsctc(n, k).value,
                    count_c2_classes(n - 1, k).value,
                    fault,
                ))
            },
        },
        Identity {
            name: "spinal-roundtrip",
            cells: grid(1..=5, 2),
            run: |n, k, fault, limits| {
                if fault {
                    return Ok(CellOutcome::Fail("injected fault".into()));
                }
                for word in enumerate_c1_classes(n - 1, k, limits)? {
                    let net = decode_nlstc(&word)?;
                    if encode_nlstc(&net)? != word {
                        return Ok(CellOutcome::Fail(format!("word {} changed", word.letters_csv())));
                    }
                }
                Ok(CellOutcome::Pass)
            },
        },
        Identity {
            name: "caterpillar-roundtrip",
            cells: grid(1..=5, 2),
            run: |n, k, fault, limits| {
                if fault {
                    return Ok(CellOutcome::Fail("injected fault".into()));
                }
                for word in enumerate_c2_classes(n - 1, k, limits)? {
                    let net = decode_nlsctc(&word)?;
                    if encode_nlsctc(&net)? != word {
                        return Ok(CellOutcome::Fail(format!("word {} changed", word.letters_csv())));
                    }
                }
                Ok(CellOutcome::Pass)
            },
        },
        Identity {
            name: "unlabeled-oracle",
            cells: grid(2..=4, 3),
            run: |n, k, fault, limits| {
                let nets = oracle_nlstc(n, k, limits)?;
                Ok(compare(
                    "oracle vs formula",
                    BigUint::from(nets.len() as u64),
                    count_nlstc(n, k).value,
                    fault,
                ))
            },
        },
        Identity {
            name: "labeled-oracle",
            cells: grid(2..=4, 3),
            run: |n, k, fault, limits| {
                let nets = oracle_stc(n, k, limits)?;
                Ok(compare(
                    "oracle vs formula",
                    BigUint::from(nets.len() as u64),
                    count_stc(n, k).value,
                    fault,
                ))
            },
        },
        Identity {
            name: "network-shape",
            cells: grid(2..=4, 3),
            run: |n, k, fault, limits| {
                if fault {
                    return Ok(CellOutcome::Fail("injected fault".into()));
                }
                for net in oracle_nlstc(n, k, limits)? {
                    let spines = net.find_spines()?;
                    let metrics = net.spine_metrics(&spines[0])?;
                    if metrics.tree_vertex_count != (n + k - 1) as usize
                        || metrics.spine_length != (n + 2 * k) as usize
                    {
                        return Ok(CellOutcome::Fail(format!(
                            "network has {} tree vertices and spine length {}",
                            metrics.tree_vertex_count, metrics.spine_length
                        )));
                    }
                }
                Ok(CellOutcome::Pass)
            },
        },
        Identity {
            name: "series-closed-form",
            cells: vec![(8, 8)],
            run: |n, k, fault, _| {
                if fault {
                    return Ok(CellOutcome::Fail("injected fault".into()));
                }
                let table = series_expand_s(n as usize, k as usize)?;
                for i in 0..=n {
                    for j in 0..=k {
                        if table.coeff(i as usize, j as usize)
                            != &expected_series_coeff(i, j)
                        {
                            return Ok(CellOutcome::Fail(format!(
                                "coefficient of x^{i} z^{j} differs"
                            )));
                        }
                    }
                }
                if let Some((i, j)) = check_ode_residual(&table) {
                    return Ok(CellOutcome::Fail(format!(
                        "differential equation fails at x^{i} z^{j}"
                    )));
                }
                Ok(CellOutcome::Pass)
            },
        },
    ]
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let all = identities();
    let known: Vec<&str> = all.iter().map(|i| i.name).collect();
    for selector in [&args.only, &args.inject_fault] {
        if let Some(name) = selector {
            if !known.contains(&name.as_str()) {
                return Err(Failure::usage(format!(
                    "unknown identity {name:?}; known: {}",
                    known.join(", ")
                )));
            }
        }
    }
    let start = Instant::now();
    let deadline = Duration::from_secs(args.budget_seconds);
    let mut passed = 0u32;
    let mut failed = 0u32;
    let mut skipped = 0u32;
    for identity in &all {
        if let Some(only) = &args.only {
            if identity.name != only.as_str() {
                continue;
            }
        }
        let fault = args.inject_fault.as_deref() == Some(identity.name);
        for &(n, k) in &identity.cells {
            if start.elapsed() >= deadline {
                println!("{} n={n} k={k}: skipped (budget exhausted)", identity.name);
                skipped += 1;
                continue;
            }
            let remaining = deadline.saturating_sub(start.elapsed());
            let limits = EnumerationBudget {
                max_objects: args.max_objects,
                time_limit: remaining,
                ..EnumerationBudget::default()
            };
            match (identity.run)(n, k, fault, &limits) {
                Ok(CellOutcome::Pass) => {
                    println!("{} n={n} k={k}: pass", identity.name);
                    passed += 1;
                }
                Ok(CellOutcome::Fail(msg)) => {
                    println!("{} n={n} k={k}: fail ({msg})", identity.name);
                    failed += 1;
                }
                Err(spinal::Error::BudgetExceeded(reason)) => {
                    println!("{} n={n} k={k}: skipped ({reason})", identity.name);
                    skipped += 1;
                }
                Err(err) => {
                    println!("{} n={n} k={k}: fail ({err})", identity.name);
                    failed += 1;
                }
            }
        }
    }
    println!("summary: {passed} pass, {failed} fail, {skipped} skipped");
    if failed > 0 {
        return Err(Failure::verification(format!("{failed} identity cells failed")));
    }
    if skipped > 0 {
        return Err(Failure {
            code: "budget-exceeded",
            message: format!("{skipped} identity cells skipped"),
            exit: 3,
        });
    }
    Ok(0)
}
