//! Command-line front end: every verifier and computation of the library as
//! a subcommand, with text or JSON output.
//!
//! Exit codes: 0 on success (and on positive verdicts), 1 when a
//! verification or boolean query fails or an input violates an operation's
//! precondition, 2 on usage errors.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use deer_core::deer::{self, DeerParams};
use deer_core::garside::{self, GarsideIdentity};
use deer_core::parse::{
    parse_artin_word, parse_atilde_word, parse_deer_word, parse_presentation_file,
};
use deer_core::periodic::{
    is_periodic, lambda_periodic, mu_element, verify_rotation_identity, RotationIdentity,
};
use deer_core::presentations::{
    catalog, positive_presentation, verify_presentation, verify_s1b_commutes_sigma1,
    verify_tau_power_of_s2, word_to_string, PresentationId,
};
use deer_core::reflection::{degrees_codegrees, expected_order, group_order_bfs, is_regular};
use deer_core::reversing::{
    GenId, LcmOutcome, PositivePresentation, ReversingOutcome, DEFAULT_FUEL,
};

#[derive(Parser)]
#[command(
    name = "deer",
    about = "Exact computation in the braid groups B(de,e,r) and their generic cover",
    version
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    /// Parameter d (immaterial for braid-group questions)
    #[arg(long, default_value_t = 2)]
    d: u32,
    /// Parameter e
    #[arg(long, default_value_t = 1)]
    e: u32,
    /// Rank r; the braid model lives on r+1 strands
    #[arg(long)]
    r: u32,
}

impl ParamArgs {
    fn params(&self) -> Result<DeerParams, CliError> {
        DeerParams::new(self.d, self.e, self.r).map_err(|e| CliError::Input(e.to_string()))
    }
}

#[derive(Args, Clone, Copy)]
struct FuelArg {
    /// Reversing step budget; the DEER_FUEL variable overrides the default
    #[arg(long)]
    fuel: Option<u64>,
}

impl FuelArg {
    fn fuel(&self) -> u64 {
        self.fuel
            .or_else(|| std::env::var("DEER_FUEL").ok().and_then(|v| v.parse().ok()))
            .unwrap_or(DEFAULT_FUEL)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Alphabet {
    Deer,
    Artin,
    Atilde,
}

#[derive(Clone, Copy, ValueEnum)]
enum PresChoice {
    #[value(alias = "cp_eer")]
    CpEer,
    #[value(alias = "shi_inf")]
    ShiInf,
    #[value(alias = "new_inf")]
    NewInf,
    #[value(alias = "bmr_deer")]
    BmrDeer,
    #[value(alias = "new_deer")]
    NewDeer,
    #[value(alias = "g_deer")]
    GDeer,
    #[value(alias = "atilde_deer")]
    AtildeDeer,
    #[value(alias = "type_b")]
    TypeB,
    #[value(alias = "atilde_artin")]
    AtildeArtin,
}

impl PresChoice {
    fn id(self) -> PresentationId {
        match self {
            PresChoice::CpEer => PresentationId::CpEer,
            PresChoice::ShiInf => PresentationId::ShiInf,
            PresChoice::NewInf => PresentationId::NewInf,
            PresChoice::BmrDeer => PresentationId::BmrDeer,
            PresChoice::NewDeer => PresentationId::NewDeer,
            PresChoice::GDeer => PresentationId::GDeer,
            PresChoice::AtildeDeer => PresentationId::AtildeDeer,
            PresChoice::TypeB => PresentationId::TypeB,
            PresChoice::AtildeArtin => PresentationId::AtildeArtin,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LemmaId {
    /// Λ equals the alternate factorization (A t_r)⋯(A t_1)
    AltFactorization,
    /// Λ g ≐ τ^r(g) Λ for a chosen generator
    TwistCommutation,
    /// t_i (A t_i) ≐ (A t_i) s_3
    LocalShiftT,
    /// s_j (A t_i) ≐ (A t_i) s_{j+1}
    LocalShiftS,
    /// type-B relations hold under b_1 ↦ t_1 t_0, b_i ↦ s_{i+1}
    PsiEmbedding,
    /// A t_k ⋯ A t_1 = σ1^{-2k} ε^k
    PowerProduct,
    /// (A t_1 t_0)^{r-1} = σ1^{-2r} Δ^2
    FullTwist,
    /// (A t_1 t_0)^{r-1} = A t_{j+r} ⋯ A t_{j+1}
    ShiftedProduct,
    /// s_1 B and the s_j commute with σ1
    S1bCommutes,
    /// τ^k(s_2) equals the cyclic-power quotient of s_1 B
    TauPowerS2,
}

#[derive(Subcommand)]
enum Command {
    /// Left-canonical normal form of an Artin word
    Nf {
        #[arg(long)]
        strands: usize,
        word: String,
    },
    /// Equality of two words
    Eq {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Alphabet::Deer)]
        alphabet: Alphabet,
        /// Strand count for the artin alphabet (defaults to r+1)
        #[arg(long)]
        strands: Option<usize>,
        left: String,
        right: String,
    },
    /// Braid image of a word
    Embed {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Alphabet::Deer)]
        alphabet: Alphabet,
        word: String,
    },
    /// Winding number of a 1-pure Artin word
    Wd {
        #[arg(long)]
        strands: usize,
        word: String,
    },
    /// Membership of an Artin word in the embedded B(de,e,r)
    Member {
        #[command(flatten)]
        params: ParamArgs,
        word: String,
    },
    /// Rewrite a member braid over {z, t_i, s_j}
    Rewrite {
        #[command(flatten)]
        params: ParamArgs,
        word: String,
    },
    /// Split a word as z^m · (z-free tail)
    Semidirect {
        #[command(flatten)]
        params: ParamArgs,
        word: String,
    },
    /// Apply the index-shift automorphism
    Tau {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
        word: String,
    },
    /// Generator of the center
    Center {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Does the word commute with every generator?
    Central {
        #[command(flatten)]
        params: ParamArgs,
        word: String,
    },
    /// The periodic rotation λ (an e-th rotation power)
    Lambda {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// The central element μ = z^r (A t_1 t_0)^{e(r-1)}
    Mu {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Periodicity verdict for a word
    Periodic {
        #[command(flatten)]
        params: ParamArgs,
        word: String,
    },
    /// Windowed left/right divisor report for a positive word
    Divisors {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 3)]
        window: i64,
        /// Length cap for divisor candidates (defaults to the word length)
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        fuel: FuelArg,
        /// Positive word; defaults to the Garside element Λ
        word: Option<String>,
    },
    /// Right lcm of two positive words via reversing
    Lcm {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = PresChoice::NewDeer)]
        pres: PresChoice,
        #[arg(long, default_value_t = 8)]
        window: i64,
        #[command(flatten)]
        fuel: FuelArg,
        left: String,
        right: String,
    },
    /// Right-reverse u^{-1} v over a presentation
    Reverse {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = PresChoice::NewDeer)]
        pres: PresChoice,
        #[arg(long, default_value_t = 8)]
        window: i64,
        /// Load the presentation from a file instead of the catalog
        #[arg(long)]
        pres_file: Option<String>,
        #[command(flatten)]
        fuel: FuelArg,
        left: String,
        right: String,
    },
    /// Cube coherence condition over all generator triples
    Cube {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = PresChoice::NewInf)]
        pres: PresChoice,
        #[arg(long, default_value_t = 4)]
        window: i64,
        #[arg(long)]
        pres_file: Option<String>,
        #[command(flatten)]
        fuel: FuelArg,
    },
    /// Order of the reflection group by breadth-first closure
    Order {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 10_000_000)]
        cap: usize,
    },
    /// Degrees, codegrees and Coxeter number
    Degrees {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Regular-number test for p (or a table over p ≤ 2er)
    Regular {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        p: Option<u32>,
    },
    /// List the instantiated relations of a presentation
    Catalog {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        pres: PresChoice,
        #[arg(long, default_value_t = 6)]
        window: i64,
    },
    /// Verify every relation of a presentation in its model
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        pres: PresChoice,
        #[arg(long, default_value_t = 6)]
        window: i64,
    },
    /// Check one of the named structural identities
    Lemma {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        id: LemmaId,
        /// Power for power-product / tau-power-s2
        #[arg(long, default_value_t = 1)]
        k: i64,
        /// Shift for shifted-product / local-shift-s
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        j: i64,
        /// t-index for the local shifts
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        i: i64,
        /// Generator token for twist-commutation (e.g. `t[0]`, `s3`, `z`)
        #[arg(long, default_value = "t[0]")]
        gen: String,
        #[command(flatten)]
        fuel: FuelArg,
    },
}

enum CliError {
    Input(String),
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Print a line, ignoring a closed pipe so `deer ... | head` stays quiet.
fn out_line(line: &str) {
    let _ = writeln!(std::io::stdout(), "{line}");
}

fn emit<T: Serialize>(json: bool, value: &T, text: String) {
    if json {
        out_line(&serde_json::to_string_pretty(value).expect("report types serialize"));
    } else {
        out_line(&text);
    }
}

#[derive(Serialize)]
struct BoolReport<'a> {
    query: &'a str,
    verdict: bool,
}

fn verdict_exit(json: bool, query: &str, verdict: bool, yes: &str, no: &str) -> ExitCode {
    emit(
        json,
        &BoolReport { query, verdict },
        (if verdict { yes } else { no }).to_string(),
    );
    if verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Deer-word argument with an optional `d:e:r` prefix overriding the flags.
fn deer_word_arg(
    text: &str,
    fallback: ParamArgs,
) -> Result<(DeerParams, deer_core::deer::DeerWord), CliError> {
    let (prefix, rest) = deer_core::parse::split_params_prefix(text)?;
    let p = match prefix {
        Some(p) => p,
        None => fallback.params()?,
    };
    Ok((p, parse_deer_word(rest, p)?))
}

fn pres_word(pres: &PositivePresentation, text: &str) -> Result<Vec<GenId>, CliError> {
    text.split_whitespace()
        .map(|tok| {
            pres.generator_id(tok)
                .ok_or_else(|| CliError::Input(format!("unknown generator `{tok}`")))
        })
        .collect()
}

fn load_presentation(
    pres_file: Option<&str>,
    choice: PresChoice,
    params: DeerParams,
    window: i64,
) -> Result<PositivePresentation, CliError> {
    match pres_file {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
            Ok(parse_presentation_file(&text)?)
        }
        None => Ok(positive_presentation(choice.id(), params, window)?),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let json = cli.json;
    match cli.command {
        Command::Nf { strands, word } => {
            let w = parse_artin_word(&word, strands)?;
            let nf = w.normal_form();
            let text = format!("{nf}");
            emit(json, &nf, text);
        }
        Command::Eq {
            params,
            alphabet,
            strands,
            left,
            right,
        } => {
            let verdict = match alphabet {
                Alphabet::Deer => {
                    let p = params.params()?;
                    parse_deer_word(&left, p)?.equal(&parse_deer_word(&right, p)?)?
                }
                Alphabet::Artin => {
                    let n = strands.unwrap_or(params.r as usize + 1);
                    parse_artin_word(&left, n)?.equal(&parse_artin_word(&right, n)?)?
                }
                Alphabet::Atilde => {
                    let p = params.params()?;
                    parse_atilde_word(&left, p)?
                        .embed()
                        .equal(&parse_atilde_word(&right, p)?.embed())?
                }
            };
            return Ok(verdict_exit(json, "equal", verdict, "equal", "not equal"));
        }
        Command::Embed {
            params,
            alphabet,
            word,
        } => {
            let braid = match alphabet {
                Alphabet::Deer => deer_word_arg(&word, params)?.1.embed(),
                Alphabet::Atilde => parse_atilde_word(&word, params.params()?)?.embed(),
                Alphabet::Artin => return Err(CliError::Input("word is already artin".into())),
            };
            emit(json, &braid, braid.to_string());
        }
        Command::Wd { strands, word } => {
            let w = parse_artin_word(&word, strands)?;
            let wd = w.winding()?;
            emit(json, &wd, wd.to_string());
        }
        Command::Member { params, word } => {
            let p = params.params()?;
            let w = parse_artin_word(&word, p.strands())?;
            let verdict = deer::is_member(&w, p)?;
            return Ok(verdict_exit(
                json,
                "member",
                verdict,
                "member",
                "not a member",
            ));
        }
        Command::Rewrite { params, word } => {
            let p = params.params()?;
            let w = parse_artin_word(&word, p.strands())?;
            let dw = deer::rewrite_to_deer(&w, p)?;
            emit(json, &dw, dw.to_string());
        }
        Command::Semidirect { params, word } => {
            let (_, w) = deer_word_arg(&word, params)?;
            let sf = w.semidirect_form();
            #[derive(Serialize)]
            struct Out {
                z_exponent: i64,
                tail: String,
            }
            let out = Out {
                z_exponent: sf.z_exponent,
                tail: sf.tail.to_string(),
            };
            emit(json, &out, format!("z^{} · {}", sf.z_exponent, sf.tail));
        }
        Command::Tau {
            params,
            power,
            word,
        } => {
            let (_, w) = deer_word_arg(&word, params)?;
            let out = w.tau_pow(power);
            emit(json, &out, out.to_string());
        }
        Command::Center { params } => {
            let p = params.params()?;
            let c = deer::center_element(p);
            emit(json, &c, c.to_string());
        }
        Command::Central { params, word } => {
            let (_, w) = deer_word_arg(&word, params)?;
            let verdict = w.is_central()?;
            return Ok(verdict_exit(
                json,
                "central",
                verdict,
                "central",
                "not central",
            ));
        }
        Command::Lambda { params } => {
            let p = params.params()?;
            let l = lambda_periodic(p);
            emit(json, &l, l.to_string());
        }
        Command::Mu { params } => {
            let p = params.params()?;
            let m = mu_element(p);
            emit(json, &m, m.to_string());
        }
        Command::Periodic { params, word } => {
            let (_, w) = deer_word_arg(&word, params)?;
            let v = is_periodic(&w);
            let text = if v.periodic {
                format!(
                    "periodic: full-twist exponent p = {}, rotation exponent q = {}",
                    v.epsilon_power.unwrap(),
                    v.lambda_power.unwrap()
                )
            } else {
                "not periodic".to_string()
            };
            emit(json, &v, text);
        }
        Command::Divisors {
            params,
            window,
            cap,
            fuel,
            word,
        } => {
            let (_, w) = match word {
                Some(text) => deer_word_arg(&text, params)?,
                None => {
                    let p = params.params()?;
                    (p, garside::lambda_element(p))
                }
            };
            let cap = cap.unwrap_or(w.len());
            let report = garside::divisors(&w, window, cap, fuel.fuel())?;
            let text = report.to_string();
            emit(json, &report, text);
        }
        Command::Lcm {
            params,
            pres,
            window,
            fuel,
            left,
            right,
        } => {
            let p = params.params()?;
            let pp = positive_presentation(pres.id(), p, window)?;
            let u = pres_word(&pp, &left)?;
            let v = pres_word(&pp, &right)?;
            match pp.right_lcm(&u, &v, fuel.fuel())? {
                LcmOutcome::Found {
                    lcm,
                    complement_of_left,
                    complement_of_right,
                } => {
                    #[derive(Serialize)]
                    struct Out {
                        lcm: String,
                        complement_of_left: String,
                        complement_of_right: String,
                    }
                    let out = Out {
                        lcm: pp.word_to_string(&lcm),
                        complement_of_left: pp.word_to_string(&complement_of_left),
                        complement_of_right: pp.word_to_string(&complement_of_right),
                    };
                    let text = format!(
                        "lcm: {}\n  u-complement: {}\n  v-complement: {}",
                        out.lcm, out.complement_of_left, out.complement_of_right
                    );
                    emit(json, &out, text);
                }
                LcmOutcome::NoCommonMultiple { reason } => {
                    emit(
                        json,
                        &format!("no common multiple ({reason:?})"),
                        format!("no common multiple within the window ({reason:?})"),
                    );
                    return Ok(ExitCode::from(1));
                }
                LcmOutcome::Inconclusive => {
                    emit(json, &"fuel exhausted", "fuel exhausted".to_string());
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Command::Reverse {
            params,
            pres,
            window,
            pres_file,
            fuel,
            left,
            right,
        } => {
            let p = params.params()?;
            let pp = load_presentation(pres_file.as_deref(), pres, p, window)?;
            let u = pres_word(&pp, &left)?;
            let v = pres_word(&pp, &right)?;
            let outcome = pp.right_reverse(&u, &v, fuel.fuel())?;
            #[derive(Serialize)]
            #[serde(tag = "outcome")]
            enum Out {
                Completed {
                    left_complement: String,
                    right_complement: String,
                },
                Stuck {
                    position: usize,
                    reason: String,
                },
                FuelExhausted,
            }
            let (out, text) = match outcome {
                ReversingOutcome::Completed {
                    left_complement,
                    right_complement,
                } => {
                    let l = pp.word_to_string(&left_complement);
                    let rr = pp.word_to_string(&right_complement);
                    (
                        Out::Completed {
                            left_complement: l.clone(),
                            right_complement: rr.clone(),
                        },
                        format!("completed: u·{l} = v·{rr}"),
                    )
                }
                ReversingOutcome::Stuck { position, reason } => (
                    Out::Stuck {
                        position,
                        reason: format!("{reason:?}"),
                    },
                    format!("stuck at position {position} ({reason:?})"),
                ),
                ReversingOutcome::FuelExhausted => {
                    (Out::FuelExhausted, "fuel exhausted".to_string())
                }
            };
            emit(json, &out, text);
        }
        Command::Cube {
            params,
            pres,
            window,
            pres_file,
            fuel,
        } => {
            let p = params.params()?;
            let pp = load_presentation(pres_file.as_deref(), pres, p, window)?;
            let report = pp.cube_condition(fuel.fuel());
            let text = report.to_string();
            let ok = report.passed();
            emit(json, &report, text);
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Order { params, cap } => {
            let p = params.params()?;
            let order = group_order_bfs(p, cap)?;
            let expected = expected_order(p);
            #[derive(Serialize)]
            struct Out {
                order: usize,
                expected: u128,
            }
            emit(
                json,
                &Out { order, expected },
                format!("order: {order} (product formula: {expected})"),
            );
            if order as u128 != expected {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Degrees { params } => {
            let p = params.params()?;
            let (degrees, codegrees, h) = degrees_codegrees(p)?;
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct Out {
                degrees: Vec<u32>,
                codegrees: Vec<u32>,
                coxeter_number: u32,
            }
            let out = Out {
                degrees: degrees.clone(),
                codegrees: codegrees.clone(),
                coxeter_number: h,
            };
            emit(
                json,
                &out,
                format!("degrees: {degrees:?}\ncodegrees: {codegrees:?}\ncoxeter number: {h}"),
            );
        }
        Command::Regular { params, p } => {
            let dp = params.params()?;
            match p {
                Some(p) => {
                    let v = is_regular(p, dp)?;
                    let text = format!(
                        "p = {p}: {} (degrees divisible: {}, codegrees divisible: {})",
                        if v.regular { "regular" } else { "not regular" },
                        v.degrees_divisible,
                        v.codegrees_divisible
                    );
                    emit(json, &v, text);
                    if !v.regular {
                        return Ok(ExitCode::from(1));
                    }
                }
                None => {
                    let mut rows = Vec::new();
                    for q in 1..=2 * dp.e * dp.r {
                        rows.push((q, is_regular(q, dp)?));
                    }
                    let text = rows
                        .iter()
                        .map(|(q, v)| {
                            format!(
                                "p = {q}: {} ({}/{})",
                                if v.regular { "regular" } else { "-" },
                                v.degrees_divisible,
                                v.codegrees_divisible
                            )
                        })
                        .collect::<Vec<_>>()
                        .join("\n");
                    emit(json, &rows, text);
                }
            }
        }
        Command::Catalog {
            params,
            pres,
            window,
        } => {
            let p = params.params()?;
            let rels = catalog(pres.id(), p, window)?;
            let text = rels
                .iter()
                .map(|r| {
                    format!(
                        "{}: {} = {}",
                        r.label,
                        word_to_string(&r.lhs),
                        word_to_string(&r.rhs)
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            emit(json, &rels, text);
        }
        Command::Verify {
            params,
            pres,
            window,
        } => {
            let p = params.params()?;
            let report = verify_presentation(pres.id(), p, window)?;
            let ok = report.all_pass();
            let text = report
                .relations
                .iter()
                .map(|v| {
                    format!(
                        "{} {} [{}]",
                        if v.verdict { "pass" } else { "FAIL" },
                        v.label,
                        v.model
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            emit(json, &report, text);
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Lemma {
            params,
            id,
            k,
            j,
            i,
            gen,
            fuel,
        } => {
            let p = params.params()?;
            let verdict = match id {
                LemmaId::AltFactorization
                | LemmaId::TwistCommutation
                | LemmaId::LocalShiftT
                | LemmaId::LocalShiftS
                | LemmaId::PsiEmbedding => {
                    let gid = match id {
                        LemmaId::AltFactorization => GarsideIdentity::AltFactorization,
                        LemmaId::TwistCommutation => {
                            let w = parse_deer_word(&gen, p)?;
                            let &[letter] = w.letters() else {
                                return Err(CliError::Input(
                                    "twist-commutation expects a single generator".into(),
                                ));
                            };
                            if letter.sign == deer_core::artin::Sign::Neg {
                                return Err(CliError::Input(
                                    "twist-commutation expects a positive generator".into(),
                                ));
                            }
                            GarsideIdentity::TwistCommutation(letter.gen)
                        }
                        LemmaId::LocalShiftT => GarsideIdentity::LocalShiftT(i),
                        LemmaId::LocalShiftS => GarsideIdentity::LocalShiftS { j: j as u32, i },
                        _ => GarsideIdentity::PsiEmbedding,
                    };
                    let checks = garside::verify_garside_identity(gid, p, fuel.fuel())?;
                    if json {
                        out_line(&serde_json::to_string_pretty(&checks).unwrap());
                    }
                    checks.iter().all(|c| c.doubly_confirmed())
                }
                LemmaId::PowerProduct => {
                    verify_rotation_identity(RotationIdentity::PowerProduct { k }, p.r)?
                }
                LemmaId::FullTwist => verify_rotation_identity(RotationIdentity::FullTwist, p.r)?,
                LemmaId::ShiftedProduct => {
                    verify_rotation_identity(RotationIdentity::ShiftedProduct { j }, p.r)?
                }
                LemmaId::S1bCommutes => verify_s1b_commutes_sigma1(p)?,
                LemmaId::TauPowerS2 => {
                    if k < 1 {
                        return Err(CliError::Input("k must be ≥ 1".into()));
                    }
                    verify_tau_power_of_s2(p, k as u32)?
                }
            };
            return Ok(verdict_exit(json, "identity", verdict, "holds", "FAILS"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
