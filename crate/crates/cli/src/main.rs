use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use krullstar::classify::{classify_ring_bounded, localize_classify, LocalKind};
use krullstar::dsl::{self, ParseError};
use krullstar::factor::{factor_principal_capped, factor_u_ideal_capped, factor_zero, u_divisors, FactorCert};
use krullstar::ideal::{AtomIdeal, FracIdeal, PrimeRef};
use krullstar::json;
use krullstar::nagata::{content, dedekind_mertens_n_capped, in_nu, in_nv, is_mccoy_regular, PolyOverR, DEFAULT_POLY_DEGREE_CAP};
use krullstar::polyfactor::DEFAULT_DEGREE_CAP;
use krullstar::quad::{self, DEFAULT_CLASS_GROUP_BOUND};
use krullstar::star::{closure, is_rgv, is_star_invertible, maximal_u_ideals_over, StarOp, UMaxOver};
use krullstar::{Error, RingDesc};
use krullstar_harness::{find_suite, run_suite, suites, GenConfig, DEFAULT_CASES};

/// Overrides the degree caps of polynomial factorization and Dedekind-Mertens.
const DEGREE_CAP_VAR: &str = "KRULLSTAR_DEGREE_CAP";

#[derive(Parser)]
#[command(name = "krullstar", version)]
#[command(about = "Star operations, u-factorization and ring classification on finite direct sums of Z, Q, Z/p^k, O_d and F_p[X,Y]")]
struct Cli {
    /// Print machine-readable JSON
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closure of a fractional ideal under a star operation
    Closure {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
        /// d, v, t, w, wprime or u
        #[arg(long, default_value = "u")]
        op: StarOp,
    },
    /// Whether (I I^-1)_op = R
    Invertible {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value = "u")]
        op: StarOp,
    },
    /// Membership of an ideal in the regular Glaz-Vasconcelos family
    RgvCheck {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
    },
    /// Maximal u-ideals containing an integral ideal
    UmaxOver {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
    },
    /// Factor a principal ideal (--elem) or a u-ideal (--ideal) into primes
    Factor {
        #[arg(long)]
        ring: String,
        #[arg(long, conflicts_with = "ideal", required_unless_present = "ideal")]
        elem: Option<String>,
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Factor the zero ideal into minimal primes
    FactorZero {
        #[arg(long)]
        ring: String,
    },
    /// All u-ideals containing an integral u-ideal
    UDivisors {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ideal: String,
    },
    /// Dimensions, class and Picard groups, and structure flags
    Classify {
        #[arg(long)]
        ring: String,
        /// Largest |d| for which quadratic class groups are computed
        #[arg(long, default_value_t = DEFAULT_CLASS_GROUP_BOUND)]
        bound: u64,
    },
    /// Ideal class group of the imaginary quadratic order O_d
    ClassGroup {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, default_value_t = DEFAULT_CLASS_GROUP_BOUND)]
        bound: u64,
    },
    /// Structure of the localization at a maximal u-ideal
    Local {
        #[arg(long)]
        ring: String,
        /// The prime, as an ideal literal
        #[arg(long)]
        prime: String,
    },
    /// Content ideal of a polynomial over R
    NagataContent {
        #[arg(long)]
        ring: String,
        /// Coefficients c0, c1, ...: `poly: [c0], [c1], ...`
        #[arg(long)]
        poly: String,
    },
    /// Membership of a polynomial in N_u, with N_v and McCoy regularity
    InNu {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        poly: String,
    },
    /// Least n with c(f)^(n+1) c(g) = c(f)^n c(fg)
    DmN {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Run a seeded property suite
    Test {
        /// Suite name; `all` runs every suite
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CASES)]
        cases: usize,
        /// List the registered suites
        #[arg(long)]
        list: bool,
    },
}

enum Failure {
    /// Bad input text or arguments: exit status 2.
    Usage(String),
    /// A mathematical error from the library: exit status 1.
    Domain(Error),
    /// A property suite failed: exit status 1.
    Suite,
}

type Outcome = Result<(Value, String), Failure>;

fn parse_failure(flag: &str, input: &str, e: ParseError) -> Failure {
    let caret = " ".repeat(e.pos.min(input.chars().count()));
    Failure::Usage(format!("cannot parse --{flag} {e}\n  {input}\n  {caret}^"))
}

fn ring(s: &str) -> Result<RingDesc, Failure> {
    dsl::parse_ring(s).map_err(|e| parse_failure("ring", s, e))
}

fn ideal(r: &RingDesc, s: &str) -> Result<FracIdeal, Failure> {
    dsl::parse_ideal(r, s).map_err(|e| parse_failure("ideal", s, e))
}

fn poly(r: &RingDesc, flag: &str, s: &str) -> Result<PolyOverR, Failure> {
    dsl::parse_poly(r, s).map_err(|e| parse_failure(flag, s, e))
}

fn domain<T>(r: krullstar::Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::Domain)
}

fn degree_cap(default: u32) -> Result<u32, Failure> {
    match std::env::var(DEGREE_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{DEGREE_CAP_VAR} must be a nonnegative integer, got `{v}`"))),
        Err(_) => Ok(default),
    }
}

fn show_ideal(i: &FracIdeal) -> String {
    match dsl::ideal_literal(i) {
        Some(lit) => format!("{i}    {lit}"),
        None => i.to_string(),
    }
}

fn factor_text(c: &FactorCert) -> String {
    let r = c.input.ring();
    let mut out = format!("{} = ", c.input);
    if c.factors.is_empty() {
        out.push_str("R");
    }
    let terms: Vec<String> = c
        .factors
        .iter()
        .map(|(p, e)| if *e == 1 { format!("[{}]", p.display(r)) } else { format!("[{}]^{e}", p.display(r)) })
        .collect();
    out.push_str(&terms.join(" "));
    if c.product_op != StarOp::D {
        out.push_str(&format!("  ({}-product)", c.product_op));
    }
    out.push_str(&format!("\nverified: {}", c.verified));
    out
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Closure { ring: rs, ideal: is, op } => {
            let r = ring(&rs)?;
            let i = ideal(&r, &is)?;
            let c = closure(op, &i);
            let v = json!({
                "ring": r.to_string(),
                "op": op.name(),
                "input": json::ideal_to_json(&i),
                "closure": json::ideal_to_json(&c),
                "closed": c == i,
            });
            Ok((v, show_ideal(&c)))
        }
        Command::Invertible { ring: rs, ideal: is, op } => {
            let r = ring(&rs)?;
            let i = ideal(&r, &is)?;
            let prod = closure(op, &domain(i.product(&i.inverse()))?);
            let inv = is_star_invertible(&i, op);
            let v = json!({
                "ring": r.to_string(),
                "op": op.name(),
                "ideal": json::ideal_to_json(&i),
                "product_closure": json::ideal_to_json(&prod),
                "invertible": inv,
            });
            Ok((v, format!("{op}-invertible: {inv}\n(I I^-1)_{op} = {prod}")))
        }
        Command::RgvCheck { ring: rs, ideal: is } => {
            let r = ring(&rs)?;
            let c = is_rgv(&ideal(&r, &is)?);
            let text = format!(
                "rGV: {}\nfinitely generated: {}\nregular: {}\ninverse is R: {}",
                c.is_member(),
                c.finitely_generated,
                c.is_regular,
                c.inverse_is_r
            );
            Ok((json::rgv_json(&c), text))
        }
        Command::UmaxOver { ring: rs, ideal: is } => {
            let r = ring(&rs)?;
            let u = domain(maximal_u_ideals_over(&ideal(&r, &is)?))?;
            let text = match &u {
                UMaxOver::InfiniteFamily => "infinitely many: a zero part of positive dimension lies in every height-one prime".to_string(),
                UMaxOver::Primes(ps) if ps.is_empty() => "none: the u-closure is R".to_string(),
                UMaxOver::Primes(ps) => ps.iter().map(|p| p.display(&r).to_string()).collect::<Vec<_>>().join("\n"),
            };
            Ok((json::umax_json(&r, &u), text))
        }
        Command::Factor { ring: rs, elem, ideal: is } => {
            let r = ring(&rs)?;
            let cap = degree_cap(DEFAULT_DEGREE_CAP)?;
            let cert = match (elem, is) {
                (Some(e), _) => {
                    let a = dsl::parse_element(&r, &e).map_err(|err| parse_failure("elem", &e, err))?;
                    domain(factor_principal_capped(&r, &a, cap))?
                }
                (None, Some(is)) => domain(factor_u_ideal_capped(&ideal(&r, &is)?, cap))?,
                (None, None) => return Err(Failure::Usage("factor needs --elem or --ideal".into())),
            };
            Ok((json::factor_cert_json(&cert), factor_text(&cert)))
        }
        Command::FactorZero { ring: rs } => {
            let cert = factor_zero(&ring(&rs)?);
            Ok((json::factor_cert_json(&cert), factor_text(&cert)))
        }
        Command::UDivisors { ring: rs, ideal: is } => {
            let r = ring(&rs)?;
            let ds = domain(u_divisors(&ideal(&r, &is)?))?;
            let v = json!({"count": ds.len(), "divisors": ds.iter().map(json::ideal_to_json).collect::<Vec<_>>()});
            let mut text = format!("{} u-divisors", ds.len());
            for d in &ds {
                text.push_str(&format!("\n{d}"));
            }
            Ok((v, text))
        }
        Command::Classify { ring: rs, bound } => {
            let r = ring(&rs)?;
            let rep = domain(classify_ring_bounded(&r, bound))?;
            let mut text = format!(
                "ring: {r}\ndim: {}  reg-dim: {}  dim T(R): {}\nclass group: {}\npicard group: {}",
                rep.dims.krull_dim, rep.dims.reg_dim, rep.dims.dim_t, rep.class_group_total, rep.picard_group_total
            );
            for p in &rep.witnesses {
                text.push_str(&format!("\nwitness: {}", p.display(&r)));
            }
            for (k, v) in rep.flags.pairs() {
                text.push_str(&format!("\n{k}: {v}"));
            }
            Ok((json::class_report_json(&r, &rep), text))
        }
        Command::ClassGroup { d, bound } => {
            let cg = domain(quad::class_group(d, bound))?;
            let gens: Vec<Value> = cg.generators.iter().map(|g| json!({"ideal": json::part_json(&AtomIdeal::Quad(g.clone())), "text": g.to_string()})).collect();
            let v = json!({"d": d, "group": json::group_json(&cg.group), "generators": gens});
            let mut text = format!("Cl(O_{d}) = {}", cg.group);
            for g in &cg.generators {
                text.push_str(&format!("\ngenerator: {g}"));
            }
            Ok((v, text))
        }
        Command::Local { ring: rs, prime } => {
            let r = ring(&rs)?;
            let i = dsl::parse_ideal(&r, &prime).map_err(|e| parse_failure("prime", &prime, e))?;
            let p = PrimeRef::from_ideal(&i).ok_or_else(|| Failure::Domain(Error::NotAPrime(i.to_string())))?;
            let l = domain(localize_classify(&r, &p))?;
            let kind = match &l.kind {
                LocalKind::Dvr { uniformizer } => format!("DVR with uniformizer {uniformizer}"),
                LocalKind::Spr { nilpotency } => format!("SPR with maximal ideal of nilpotency {nilpotency}"),
                LocalKind::Field => "field".to_string(),
            };
            Ok((json::local_class_json(&r, &l), format!("R_P at {}: {kind}", p.display(&r))))
        }
        Command::NagataContent { ring: rs, poly: ps } => {
            let r = ring(&rs)?;
            let f = poly(&r, "poly", &ps)?;
            let c = content(&f);
            let v = json!({"poly": f.to_string(), "content": json::ideal_to_json(&c)});
            Ok((v, show_ideal(&c)))
        }
        Command::InNu { ring: rs, poly: ps } => {
            let r = ring(&rs)?;
            let f = poly(&r, "poly", &ps)?;
            let (nu, nv, mc) = (in_nu(&f), in_nv(&f), is_mccoy_regular(&f));
            let v = json!({"poly": f.to_string(), "in_nu": nu, "in_nv": nv, "mccoy_regular": mc});
            Ok((v, format!("in N_u: {nu}\nin N_v: {nv}\nMcCoy regular: {mc}")))
        }
        Command::DmN { ring: rs, f, g } => {
            let r = ring(&rs)?;
            let (pf, pg) = (poly(&r, "f", &f)?, poly(&r, "g", &g)?);
            let n = domain(dedekind_mertens_n_capped(&pf, &pg, degree_cap(DEFAULT_POLY_DEGREE_CAP)?))?;
            let deg = pg.degree();
            let v = json!({"f": pf.to_string(), "g": pg.to_string(), "n": n, "deg_g": deg});
            Ok((v, format!("n = {n}")))
        }
        Command::Test { suite, seed, cases, list } => {
            if list {
                let v = json!(suites().iter().map(|s| json!({"name": s.name, "about": s.about})).collect::<Vec<_>>());
                let text = suites().iter().map(|s| format!("{:<18} {}", s.name, s.about)).collect::<Vec<_>>().join("\n");
                return Ok((v, text));
            }
            let name = suite.expect("clap requires --suite without --list");
            let names: Vec<&str> = if name == "all" {
                suites().iter().map(|s| s.name).collect()
            } else {
                if find_suite(&name).is_none() {
                    return Err(Failure::Usage(format!("UnknownSuite: `{name}` (try `test --list`)")));
                }
                vec![name.as_str()]
            };
            let cfg = GenConfig { seed, ..GenConfig::default() };
            let mut reports = Vec::new();
            let mut text = String::new();
            let mut ok = true;
            for n in names {
                let rep = run_suite(n, cases, &cfg).map_err(|e| Failure::Usage(e.to_string()))?;
                ok &= rep.ok();
                text.push_str(&rep.to_string());
                reports.push(json!({
                    "suite": rep.name,
                    "seed": rep.seed,
                    "cases": rep.cases,
                    "passed": rep.passed,
                    "failures": rep.failures.iter().map(|f| json!({
                        "index": f.index,
                        "case_seed": f.seed,
                        "message": f.message,
                        "shrunk": f.shrunk.as_ref().map(|s| json!({
                            "max_components": s.max_components,
                            "coeff_bound": s.coeff_bound,
                            "poly_degree": s.poly_degree,
                            "nagata_degree": s.nagata_degree,
                            "max_generators": s.max_generators,
                            "message": s.message,
                        })),
                    })).collect::<Vec<_>>(),
                }));
            }
            let v = json!({"pass": ok, "reports": reports});
            if ok {
                Ok((v, text.trim_end().to_string()))
            } else {
                emit(true, &v, &text);
                Err(Failure::Suite)
            }
        }
    }
}

fn emit(json_mode: bool, v: &Value, text: &str) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
    } else {
        println!("{}", text.trim_end());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_mode = cli.json;
    match run(cli.command) {
        Ok((v, text)) => {
            emit(json_mode, &v, &text);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            if json_mode {
                println!("{}", json!({"error": {"kind": e.name(), "message": e.to_string()}}));
            }
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Suite) => ExitCode::from(1),
    }
}
