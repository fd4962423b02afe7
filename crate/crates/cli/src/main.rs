use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use pbr_core::abelianization::linking;
use pbr_core::catalog::{verify_all_identities, verify_identity, IdentityFamily};
use pbr_core::dihedral::{abelianization_rank, k_subgroup_rank, reidemeister_schreier};
use pbr_core::oracle::normal_form_suite;
use pbr_core::presentation::{
    box_relations, commutator_relations, enumerate_generators, phi, realize, verify_generation,
    verify_phi_well_defined, verify_relations, verify_witnesses, PresentationWord, Relation, SymbolKind,
};
use pbr_core::{normal_form, BraidWord, Error, GarsideNormalForm, VerificationReport};

/// Throughout, `--n` is the rank of the `A_n` diagram; braids live on
/// `n + 1` strands.
#[derive(Parser)]
#[command(name = "pbr", version, about = "Pure braid presentations by squares of longest elements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Box,
    Commutator,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// List interval generators and relations of the presentation over A_n
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        kind: Kind,
    },
    /// Check a family of identities in the braid group
    Verify {
        #[arg(long)]
        n: usize,
        /// relations | phi | generation | witnesses | oracle | lemma:<name> | lemma:all
        #[arg(long)]
        family: String,
        /// Comma-separated parameters for a single lemma instance
        #[arg(long)]
        params: Option<String>,
        /// Seed for the randomized oracle checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random words for the oracle checks
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Garside left normal form of a braid word on n + 1 strands
    Normalize {
        #[arg(long)]
        n: usize,
        /// Whitespace-separated signed generator indices, e.g. "1 2 -1"
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// A second word; exits 1 unless both represent the same braid
        #[arg(long, allow_hyphen_values = true)]
        against: Option<String>,
    },
    /// Push a word in the classical generators A_ij through φ
    Rewrite {
        #[arg(long)]
        n: usize,
        /// Tokens like "A1,3 A2,3^-1"
        #[arg(long)]
        word: String,
    },
    /// Linking numbers of a pure braid on n + 1 strands
    Abelianize {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Pure subgroup of the dihedral Artin group with label n
    Dihedral {
        #[arg(long)]
        n: usize,
        /// Include the Schreier generators and relators
        #[arg(long)]
        presentation: bool,
        /// Only the abelianization of the pure subgroup
        #[arg(long)]
        ab_rank: bool,
        /// Only the rank of the wall-monodromy subgroup
        #[arg(long)]
        k_rank: bool,
    },
}

enum Failure {
    Usage(String),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Serialize)]
struct RelationOut {
    id: String,
    kind: &'static str,
    lhs: String,
    rhs: String,
}

impl From<&Relation> for RelationOut {
    fn from(r: &Relation) -> Self {
        Self {
            id: r.id.clone(),
            kind: r.kind.name(),
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
        }
    }
}

fn check_ambient(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    Ok(())
}

fn normal_form_json(nf: &GarsideNormalForm) -> Value {
    json!({
        "strands": nf.strands(),
        "infimum": nf.infimum(),
        "factors": nf.factors().iter().map(|f| f.one_based()).collect::<Vec<_>>(),
        "word": nf.to_word().to_string(),
    })
}

fn enumerate(n: usize, kind: Kind) -> Result<Value, Failure> {
    check_ambient(n)?;
    let generators: Vec<String> = enumerate_generators(n).iter().map(|g| g.to_string()).collect();
    let commutators = match kind {
        Kind::Box => Vec::new(),
        _ => commutator_relations(n),
    };
    let boxes = match kind {
        Kind::Commutator => Vec::new(),
        _ => box_relations(n),
    };
    let relations: Vec<RelationOut> = commutators.iter().chain(&boxes).map(RelationOut::from).collect();
    Ok(json!({
        "command": "enumerate",
        "ambient": n,
        "counts": {
            "generators": generators.len(),
            "commutators": commutators.len(),
            "boxes": boxes.len(),
        },
        "generators": generators,
        "relations": relations,
    }))
}

fn verify(n: usize, family: &str, params: Option<&str>, seed: u64, trials: usize) -> Result<Value, Failure> {
    check_ambient(n)?;
    let report: VerificationReport = match family {
        "relations" => verify_relations(n),
        "phi" => verify_phi_well_defined(n),
        "generation" => verify_generation(n),
        "witnesses" => verify_witnesses(n),
        "oracle" => normal_form_suite(trials, n + 1, seed),
        "lemma:all" => verify_all_identities(n)?,
        other => match other.strip_prefix("lemma:") {
            Some(name) => {
                let fam = IdentityFamily::parse(name)?;
                let parsed = params
                    .map(|p| {
                        p.split(',')
                            .map(|t| t.trim().parse::<usize>())
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|e| Failure::Usage(format!("bad --params: {e}")))
                    })
                    .transpose()?;
                verify_identity(fam, n, parsed.as_deref())?
            }
            None => return Err(Failure::Usage(format!("unknown family {other:?}"))),
        },
    };
    let value = serde_json::to_value(&report).expect("report serializes");
    if report.is_pass() {
        Ok(value)
    } else {
        Err(Failure::Verification(value))
    }
}

fn normalize(n: usize, word: &str, against: Option<&str>) -> Result<Value, Failure> {
    check_ambient(n)?;
    let w = BraidWord::parse(n + 1, word)?;
    let nf = normal_form(&w);
    let mut out = json!({
        "command": "normalize",
        "ambient": n,
        "input": w.to_string(),
        "normal_form": normal_form_json(&nf),
    });
    let Some(other) = against else {
        return Ok(out);
    };
    let v = BraidWord::parse(n + 1, other)?;
    let other_nf = normal_form(&v);
    let equal = other_nf == nf;
    out["against"] = json!({"input": v.to_string(), "normal_form": normal_form_json(&other_nf)});
    out["equal"] = Value::from(equal);
    if equal {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn rewrite(n: usize, word: &str) -> Result<Value, Failure> {
    check_ambient(n)?;
    let w = PresentationWord::parse(n, word)?;
    if w.kind() == Some(SymbolKind::Interval) {
        return Err(Failure::Usage("rewrite expects classical generators A_ij".into()));
    }
    let image = phi(&w)?;
    let reduced = image.free_reduce();
    let braid = realize(&reduced);
    Ok(json!({
        "command": "rewrite",
        "ambient": n,
        "input": w.to_string(),
        "interval_word": image.to_string(),
        "reduced": reduced.to_string(),
        "braid_word": braid.to_string(),
        "normal_form": normal_form_json(&normal_form(&braid)),
    }))
}

fn abelianize(n: usize, word: &str) -> Result<Value, Failure> {
    check_ambient(n)?;
    let w = BraidWord::parse(n + 1, word)?;
    let v = linking(&w)?;
    Ok(json!({
        "command": "abelianize",
        "ambient": n,
        "input": w.to_string(),
        "linking": v,
    }))
}

fn dihedral(n: usize, presentation: bool, ab_rank: bool, k_rank: bool) -> Result<Value, Failure> {
    let p = reidemeister_schreier(n)?;
    let all = !(presentation || ab_rank || k_rank);
    let mut out = json!({
        "command": "dihedral",
        "label": n,
        "index": p.index,
        "generator_count": p.generator_count,
        "transversal": p.transversal.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
    });
    if presentation || all {
        let gens: Vec<Value> = p
            .generators
            .iter()
            .map(|g| json!({"coset": g.coset, "letter": g.letter, "word": g.word.to_string()}))
            .collect();
        out["generators"] = Value::from(gens);
        out["relators"] = serde_json::to_value(&p.relators).expect("relators serialize");
    }
    if ab_rank || all {
        let inv = abelianization_rank(&p);
        out["abelianization"] = serde_json::to_value(&inv).expect("invariants serialize");
    }
    if k_rank || all {
        let k = k_subgroup_rank(n)?;
        out["k_subgroup"] = serde_json::to_value(&k).expect("rank serializes");
    }
    Ok(out)
}

fn summary(value: &Value) -> String {
    let command = value["command"].as_str().unwrap_or("pbr");
    if let (Some(t), Some(p)) = (value["total"].as_u64(), value["passed"].as_u64()) {
        return format!("{command}: {p}/{t} passed");
    }
    if let Some(eq) = value["equal"].as_bool() {
        return format!("{command}: {}", if eq { "equal" } else { "different" });
    }
    if let Some(c) = value.get("counts") {
        return format!(
            "{command}: {} generators, {} commutators, {} boxes",
            c["generators"], c["commutators"], c["boxes"]
        );
    }
    format!("{command}: done")
}

fn emit(value: &Value) {
    let mut out = io::stdout().lock();
    let _ = serde_json::to_writer_pretty(&mut out, value);
    let _ = writeln!(out);
    if io::stderr().is_terminal() {
        eprintln!("{}", summary(value));
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Enumerate { n, kind } => enumerate(n, kind),
        Command::Verify { n, family, params, seed, trials } => {
            verify(n, &family, params.as_deref(), seed, trials)
        }
        Command::Normalize { n, word, against } => normalize(n, &word, against.as_deref()),
        Command::Rewrite { n, word } => rewrite(n, &word),
        Command::Abelianize { n, word } => abelianize(n, &word),
        Command::Dihedral { n, presentation, ab_rank, k_rank } => dihedral(n, presentation, ab_rank, k_rank),
    };
    match result {
        Ok(value) => {
            emit(&value);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(value)) => {
            emit(&value);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
