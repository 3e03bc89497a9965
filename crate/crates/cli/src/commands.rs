use crate::{Cli, CochainOp, Command, ComplexKind, HochschildArgs, HomologyArgs, Suite, VerifyArgs};
use braceops::cells::{b2_e_complex, b2_eps_complex, bockstein_formula, bockstein_formula_inverse_form, eps_top, f2_complex, verify_chain_map, verify_quasi_iso, Coefficients};
use braceops::hochschild::suites::{identity_suite, jacobson_suite, kpower_suite, operations_suite, power_law_suite, zeta_bockstein_suite};
use braceops::hochschild::{bracket, power, xi1, zeta1, AssocAlgebra, Cochain};
use braceops::io::{algebra_from_json, builtin_algebra, cochain_from_json, cochain_to_json};
use braceops::prelie::{counterexample_suite, identity_suite as prelie_identity_suite};
use braceops::surjection::{coinvariant_complex, s2_complex, xi1_chain, zeta1_chain};
use braceops::{bockstein, ChainComplex, Ring};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

pub struct Outcome {
    pub pass: bool,
    pub result: Value,
    pub summary: String,
}

#[derive(Debug)]
pub struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<braceops::Error> for CliError {
    fn from(e: braceops::Error) -> Self {
        CliError(e.to_string())
    }
}

fn fail<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError(msg.into()))
}

type Res<T> = Result<T, CliError>;

const MAX_N_CELLS: usize = 6;
const MAX_N_OPERAD: usize = 4;
const MAX_P: u32 = 7;
const LIMITS: &str = "limits: n ≤ 6 for b2, b2-e, f2 and chain-map; n ≤ 4 for s2, s2-coinv and quasi-iso; p ≤ 7; pass --unsafe-bounds to override";

struct Bounds {
    lifted: bool,
}

impl Bounds {
    fn n(&self, what: &str, n: usize, max: usize) -> Res<()> {
        if n == 0 {
            return fail(format!("{what}: n must be at least 1"));
        }
        if !self.lifted && n > max {
            return fail(format!("{what}: n={n} is out of bounds ({LIMITS})"));
        }
        Ok(())
    }

    fn p(&self, p: u32) -> Res<()> {
        if !self.lifted && p > MAX_P {
            return fail(format!("p={p} is out of bounds ({LIMITS})"));
        }
        Ok(())
    }
}

pub fn run(cli: &Cli) -> Res<Outcome> {
    let b = Bounds { lifted: cli.unsafe_bounds };
    match &cli.command {
        Command::Homology(a) => homology(a, &b),
        Command::Verify(a) => verify(a, &b),
        Command::Hochschild(a) => hochschild(a, &b),
    }
}

fn field(p: u32, b: &Bounds) -> Res<Ring> {
    b.p(p)?;
    Ok(Ring::prime_field(p)?)
}

fn betti_of<K: braceops::complex::Key>(c: &ChainComplex<K>) -> Res<(BTreeMap<i64, usize>, BTreeMap<i64, usize>)> {
    let h = c.homology()?;
    let dims = c.degrees().map(|d| (d, c.dim(d))).collect();
    let betti = c.degrees().map(|d| (d, h.betti(d))).collect();
    Ok((dims, betti))
}

fn homology(a: &HomologyArgs, b: &Bounds) -> Res<Outcome> {
    let ring = field(a.p, b)?;
    let coeff = if a.twisted { Coefficients::Twisted } else { Coefficients::Constant };
    let name = a.complex.to_possible_value_name();
    if a.twisted && matches!(a.complex, ComplexKind::F2 | ComplexKind::S2) {
        return fail(format!("--twisted applies to b2, b2-e and s2-coinv, not {name}"));
    }
    let (dims, betti) = match a.complex {
        ComplexKind::B2 => {
            b.n(&name, a.n, MAX_N_CELLS)?;
            betti_of(&b2_eps_complex(a.n, coeff, ring)?)?
        }
        ComplexKind::B2E => {
            b.n(&name, a.n, MAX_N_CELLS)?;
            betti_of(&b2_e_complex(a.n, coeff, ring)?)?
        }
        ComplexKind::F2 => {
            b.n(&name, a.n, MAX_N_CELLS)?;
            betti_of(&f2_complex(a.n, ring)?)?
        }
        ComplexKind::S2 => {
            b.n(&name, a.n, MAX_N_OPERAD)?;
            betti_of(&s2_complex(a.n, ring)?)?
        }
        ComplexKind::S2Coinv => {
            b.n(&name, a.n, MAX_N_OPERAD)?;
            betti_of(&coinvariant_complex(a.n, ring, a.twisted)?)?
        }
    };
    let nonzero: Vec<String> = betti.iter().filter(|(_, v)| **v > 0).map(|(d, v)| format!("{d}:{v}")).collect();
    Ok(Outcome {
        pass: true,
        summary: format!("{name} n={} over {ring}: betti {{{}}}", a.n, nonzero.join(", ")),
        result: json!({ "complex": name, "n": a.n, "p": a.p, "twisted": a.twisted, "dimensions": dims, "betti": betti }),
    })
}

trait PossibleValueName {
    fn to_possible_value_name(&self) -> String;
}

impl<T: clap::ValueEnum> PossibleValueName for T {
    fn to_possible_value_name(&self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

fn load_algebra(spec: &str, ring: Ring) -> Res<AssocAlgebra> {
    if spec.ends_with(".json") || Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| CliError(format!("{spec}: {e}")))?;
        let alg = algebra_from_json(&text).map_err(|e| CliError(format!("{spec}: {e}")))?;
        if alg.ring() == ring {
            return Ok(alg);
        }
        // an integral table serves every prime
        if alg.ring() == Ring::Integers {
            return Ok(alg.change_ring(ring)?);
        }
        return fail(format!("{spec} is over {} but the run needs {ring}", alg.ring()));
    }
    Ok(builtin_algebra(spec, ring)?)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn verify(a: &VerifyArgs, b: &Bounds) -> Res<Outcome> {
    let suite = a.suite.to_possible_value_name();
    let need_p = || a.p.ok_or_else(|| CliError(format!("suite {suite} needs --p")));
    let (pass, result, first) = match a.suite {
        Suite::ChainMap => {
            let n = a.n.unwrap_or(4);
            b.n(&suite, n, MAX_N_CELLS)?;
            let r = verify_chain_map(n);
            let first = r.counterexample.as_ref().map(|c| format!("cell {c}"));
            (r.pass, to_value(&r), first)
        }
        Suite::QuasiIso => {
            let n = a.n.unwrap_or(4);
            b.n(&suite, n, MAX_N_OPERAD)?;
            let p = need_p()?;
            b.p(p)?;
            let r = verify_quasi_iso(n, p)?;
            (r.pass, to_value(&r), (!r.pass).then(|| format!("betti {:?} vs {:?}, ranks {:?}", r.betti_f2, r.betti_s2, r.induced_ranks)))
        }
        Suite::Bockstein => {
            let p = need_p()?;
            let fp = field(p, b)?;
            b.n("bockstein", p as usize, MAX_N_CELLS)?;
            let c = b2_eps_complex(p as usize, Coefficients::Twisted, Ring::Integers)?;
            let beta = bockstein(&c, p, &eps_top(p as usize))?;
            let cp = c.change_ring(fp);
            let binomial = beta == bockstein_formula(p);
            let inverse = beta == bockstein_formula_inverse_form(p);
            let nonbounding = cp.is_cycle(&beta)? && !cp.is_boundary(&beta)?;
            let terms: Vec<Value> = beta.iter().map(|(k, v)| json!({ "cell": k, "coeff": v })).collect();
            let pass = binomial && inverse && nonbounding;
            let r = json!({ "p": p, "bockstein": terms, "matches_binomial_form": binomial, "matches_inverse_form": inverse, "nonbounding_cycle": nonbounding });
            (pass, r, (!pass).then(|| "bockstein of the top cell differs from the closed forms".to_string()))
        }
        Suite::OperadCycles => {
            let p = need_p()?;
            let fp = field(p, b)?;
            b.n(&suite, p as usize, MAX_N_OPERAD)?;
            let c = coinvariant_complex(p as usize, fp, true)?;
            let mut entries = BTreeMap::new();
            let mut pass = true;
            let mut chains = vec![("xi1", xi1_chain(p, fp)?)];
            if p != 2 {
                chains.push(("zeta1", zeta1_chain(p, fp)?));
            }
            for (name, ch) in chains {
                let z = ch.project(true);
                let cycle = c.is_cycle(&z)?;
                let nonbounding = cycle && !c.is_boundary(&z)?;
                pass &= nonbounding;
                entries.insert(name, json!({ "degree": c.degree_of(&z)?, "cycle": cycle, "nonbounding": nonbounding }));
            }
            if p != 2 {
                let cz = coinvariant_complex(p as usize, Ring::Integers, true)?;
                let beta = bockstein(&cz, p, &xi1_chain(p, Ring::Integers)?.project(true))?;
                let ok = beta == zeta1_chain(p, Ring::Integers)?.project(true).change_ring(fp);
                pass &= ok;
                entries.insert("bockstein_of_xi1_is_zeta1", json!(ok));
            }
            (pass, json!({ "p": p, "chains": entries }), (!pass).then(|| "an operation chain bounds or is not a cycle".to_string()))
        }
        Suite::Identities | Suite::Jacobson | Suite::PowerLaws | Suite::Kpower | Suite::Operations | Suite::ZetaBockstein => {
            let p = need_p()?;
            let fp = field(p, b)?;
            let r = match a.suite {
                Suite::Identities => identity_suite(&load_algebra(&a.algebra, fp)?, a.trials, a.seed)?,
                Suite::Jacobson => jacobson_suite(p, &load_algebra(&a.algebra, fp)?, a.trials, a.seed)?,
                Suite::PowerLaws => {
                    if p != 2 {
                        return fail("suite power-laws is stated at p=2; use kpower for other primes");
                    }
                    power_law_suite(&load_algebra(&a.algebra, fp)?, a.trials, a.seed)?
                }
                Suite::Kpower => kpower_suite(p, a.k, a.l, &load_algebra(&a.algebra, fp)?, a.trials, a.seed)?,
                Suite::Operations => operations_suite(&load_algebra(&a.algebra, fp)?, a.trials, a.seed)?,
                _ => zeta_bockstein_suite(&load_algebra(&a.algebra, Ring::Integers)?, p, a.trials, a.seed)?,
            };
            let first = r.first_failure().map(|c| format!("{}: {}", c.name, c.witness.as_ref().map_or("", |w| w.detail.as_str())));
            (r.pass(), to_value(&r), first)
        }
        Suite::Prelie => {
            let r = prelie_identity_suite()?;
            let first = r.first_failure().map(|c| format!("{}: {}", c.name, c.detail));
            (r.pass(), to_value(&r), first)
        }
        Suite::PrelieCounterexamples => {
            let p = need_p()?;
            b.p(p)?;
            let r = counterexample_suite(p, a.seed)?;
            let first = r.first_failure().map(|c| format!("{}: {}", c.name, c.detail));
            (r.pass(), to_value(&r), first)
        }
    };
    let summary = match first {
        None => format!("{suite}: pass"),
        Some(f) => format!("{suite}: FAIL, {f}"),
    };
    Ok(Outcome { pass, result, summary })
}

fn read_cochain(path: &Path, alg: &AssocAlgebra) -> Res<Cochain> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    cochain_from_json(&text, alg).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn hochschild(a: &HochschildArgs, b: &Bounds) -> Res<Outcome> {
    let ring = match a.p {
        None | Some(0) => Ring::Integers,
        Some(p) => field(p, b)?,
    };
    let alg = if a.p.is_none() && (a.algebra.ends_with(".json") || Path::new(&a.algebra).is_file()) {
        let text = std::fs::read_to_string(&a.algebra).map_err(|e| CliError(format!("{}: {e}", a.algebra)))?;
        algebra_from_json(&text).map_err(|e| CliError(format!("{}: {e}", a.algebra)))?
    } else {
        load_algebra(&a.algebra, ring)?
    };
    if let Ring::PrimeField(p) = alg.ring() {
        b.p(p)?;
    }
    let x = read_cochain(&a.input, &alg)?;
    let second = || -> Res<Cochain> {
        let path = a.input2.as_ref().ok_or_else(|| CliError("this operation needs --input2".into()))?;
        read_cochain(path, &alg)
    };
    let prime = || match alg.ring() {
        Ring::PrimeField(p) => Ok(p),
        Ring::Integers => fail("this operation needs an algebra over a prime field"),
    };
    let mut checks = BTreeMap::new();
    let input_cocycle = alg.differential(&x)?.is_zero();
    let y = match a.op {
        CochainOp::Xi1 => xi1(&x, prime()?)?,
        CochainOp::Zeta1 => zeta1(&alg, &x, prime()?)?,
        CochainOp::Bracket => bracket(&x, &second()?),
        CochainOp::Cup => alg.cup(&x, &second()?)?,
        CochainOp::Diff => alg.differential(&x)?,
        CochainOp::Power => {
            let k = a.k.ok_or_else(|| CliError("power needs --k".into()))?;
            if k == 0 {
                return fail("power needs k ≥ 1");
            }
            let out = (k * x.arity()).saturating_sub(k - 1);
            if !b.lifted && alg.dim().checked_pow(out as u32 + 1).is_none_or(|s| s > braceops::io::MAX_TENSOR) {
                return fail(format!("x^[{k}] has arity {out}, beyond the tensor limit; pass --unsafe-bounds to override"));
            }
            power(&x, k)
        }
    };
    let output_cocycle = alg.differential(&y)?.is_zero();
    checks.insert("input_is_cocycle", input_cocycle);
    checks.insert("output_is_cocycle", output_cocycle);
    // the operations on cohomology need cocycle inputs and give cocycles
    let pass = !matches!(a.op, CochainOp::Xi1 | CochainOp::Zeta1) || !input_cocycle || output_cocycle;
    std::fs::write(&a.output, cochain_to_json(&y)).map_err(|e| CliError(format!("{}: {e}", a.output.display())))?;
    let op = a.op.to_possible_value_name();
    Ok(Outcome {
        pass,
        summary: format!("{op}: arity {} → arity {}, written to {}", x.arity(), y.arity(), a.output.display()),
        result: json!({ "op": op, "algebra_ring": alg.ring().to_string(), "input_arity": x.arity(), "output_arity": y.arity(), "output_is_zero": y.is_zero(), "checks": checks }),
    })
}
