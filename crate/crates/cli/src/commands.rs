use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;

use cylchroma_core::involution::{enumerate_b, phi, trace_line};
use cylchroma_core::poset::Poset;
use cylchroma_core::shapes::{
    to_gessel_krattenthaler, to_postnikov_mcnamara, CylindricShape, Partition,
};
use cylchroma_core::symx::{
    chromatic_x, corollary_sum, e_coeff_length_sums, e_coeffs, sink_counts,
};
use cylchroma_core::tableaux::{count_standard_cylindric, enum_cylindric_p_tableaux};
use cylchroma_core::upoly::{s_p_cylindric, UPolynomial};
use cylchroma_core::Error;
use num_bigint::BigInt;
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::RunConfig;

pub struct Report {
    pub text: String,
    pub tsv: String,
    pub json: Value,
    pub verified: bool,
}

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub const MISMATCH: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const SIZE: u8 = 3;

    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: Self::INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Size { .. } => Self::SIZE,
            _ => Self::INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn load_poset(cfg: &RunConfig) -> Result<Poset, Failure> {
    let path = cfg
        .poset
        .as_ref()
        .ok_or_else(|| Failure::input("--poset is required"))?;
    let text =
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    text.parse::<Poset>()
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_shape(cfg: &RunConfig) -> Result<CylindricShape, Failure> {
    let s = cfg
        .shape
        .as_ref()
        .ok_or_else(|| Failure::input("--shape is required"))?;
    Ok(s.parse::<CylindricShape>()?)
}

fn paren(p: &Partition) -> String {
    format!("({p})")
}

fn parts(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn check31(cfg: &RunConfig) -> Outcome {
    let p = load_poset(cfg)?;
    let report = match p.find_31() {
        None => Report {
            text: "31-free: true\n".into(),
            tsv: "31_free\ttrue\n".into(),
            json: json!({ "free": true }),
            verified: true,
        },
        Some(([a, b, c], x)) => Report {
            text: format!("31-free: false, witness: {{{a},{b},{c} | {x}}}\n"),
            tsv: format!("31_free\tfalse\nchain\t{a},{b},{c}\npoint\t{x}\n"),
            json: json!({ "free": false, "witness": { "chain": [a, b, c], "point": x } }),
            verified: true,
        },
    };
    Ok(report)
}

pub fn chromatic(cfg: &RunConfig) -> Outcome {
    let p = load_poset(cfg)?;
    let g = p.inc_graph();
    let m = chromatic_x(&g)?;
    let e = e_coeffs(&g)?;
    let (mut text, mut tsv) = (String::new(), String::from("basis\tpartition\tcoeff\n"));
    let (mut ej, mut mj) = (Map::new(), Map::new());
    for (lam, c) in &e {
        writeln!(text, "e: {} -> {c}", paren(lam)).unwrap();
        writeln!(tsv, "e\t{lam}\t{c}").unwrap();
        ej.insert(lam.to_string(), json!(c.to_string()));
    }
    for (lam, c) in m.terms() {
        writeln!(text, "m: {} -> {c}", paren(lam)).unwrap();
        writeln!(tsv, "m\t{lam}\t{c}").unwrap();
        mj.insert(lam.to_string(), json!(c.to_string()));
    }
    Ok(Report {
        text,
        tsv,
        json: json!({ "n": p.len(), "e": ej, "m": mj }),
        verified: true,
    })
}

fn tableau_sum(cs: &CylindricShape, p: &Poset) -> Result<UPolynomial, Failure> {
    let n = p.len();
    let mut sum = UPolynomial::zero(n);
    for t in enum_cylindric_p_tableaux(cs, p)? {
        sum.add_term(t.u_weight(n), BigInt::from(1));
    }
    Ok(sum)
}

pub fn verify_main(cfg: &RunConfig) -> Outcome {
    let p = load_poset(cfg)?;
    let cs = load_shape(cfg)?;
    let det = s_p_cylindric(&cs, &p)?;
    let sum = tableau_sum(&cs, &p)?;
    let monomials: BTreeSet<_> = det
        .terms()
        .chain(sum.terms())
        .map(|(m, _)| m.clone())
        .collect();
    let mut diff = Vec::new();
    for m in monomials.iter().rev() {
        let (a, b) = (det.coeff(m), sum.coeff(m));
        if a != b {
            diff.push((m.to_string(), a, b));
        }
    }
    let equal = diff.is_empty();
    let mut text = String::from(if equal { "EQUAL\n" } else { "DIFFER\n" });
    let mut tsv = String::from("monomial\tdeterminant\ttableaux\n");
    for (m, a, b) in &diff {
        writeln!(text, "{m}: determinant {a}, tableaux {b}").unwrap();
        writeln!(tsv, "{m}\t{a}\t{b}").unwrap();
    }
    let diff_json: Vec<Value> = diff
        .iter()
        .map(|(m, a, b)| json!({ "monomial": m, "determinant": a.to_string(), "tableaux": b.to_string() }))
        .collect();
    Ok(Report {
        text,
        tsv,
        json: json!({
            "shape": cs.to_string(),
            "equal": equal,
            "determinant": det.to_string(),
            "tableaux": sum.to_string(),
            "diff": diff_json,
        }),
        verified: equal,
    })
}

/// The rectangle or partial-sum identity that applies to `cs`, if any, as
/// `(label, c-side, tableau count)`.
fn special_identity(
    cs: &CylindricShape,
    p: &Poset,
) -> Result<Option<(String, BigInt, BigInt)>, Failure> {
    let lam = cs.outer();
    if !cs.inner().is_empty() || lam.is_empty() {
        return Ok(None);
    }
    let r = lam.first();
    let rows = lam.parts();
    let body = &rows[..rows.len() - 1];
    let rectangle = rows.iter().all(|&x| x == r);
    let c = e_coeffs(&p.inc_graph())?;
    let count = BigInt::from(count_standard_cylindric(cs, p)?);
    match cs.shift() {
        0 if rectangle => {
            let coeff = c.get(lam).cloned().unwrap_or_default();
            Ok(Some((format!("rectangle: c_{}", paren(lam)), coeff, count)))
        }
        1 if body.iter().all(|&x| x == r) => {
            let partial: BigInt = c
                .iter()
                .filter(|(l, _)| l.first() <= r)
                .map(|(_, x)| x)
                .sum();
            Ok(Some((
                format!("partial sum: sum of c_nu over nu_1 <= {r}"),
                partial,
                count,
            )))
        }
        _ => Ok(None),
    }
}

pub fn corollary(cfg: &RunConfig) -> Outcome {
    let p = load_poset(cfg)?;
    let cs = load_shape(cfg)?;
    let check = corollary_sum(&p, &cs)?;
    let special = special_identity(&cs, &p)?;
    let mut verified = check.holds();
    let mut text = format!(
        "lhs: {}\nrhs: {}\ndet: {}\nholds: {}\n",
        check.lhs,
        check.rhs,
        check.det_coeff,
        check.holds()
    );
    let mut tsv = format!(
        "lhs\t{}\nrhs\t{}\ndet\t{}\nholds\t{}\n",
        check.lhs,
        check.rhs,
        check.det_coeff,
        check.holds()
    );
    let mut j = json!({
        "shape": cs.to_string(),
        "lhs": check.lhs.to_string(),
        "rhs": check.rhs.to_string(),
        "det": check.det_coeff.to_string(),
        "holds": check.holds(),
    });
    if let Some((label, coeff, count)) = special {
        let ok = coeff == count;
        verified &= ok;
        writeln!(
            text,
            "{label} = {coeff}, standard tableaux = {count}, holds: {ok}"
        )
        .unwrap();
        writeln!(tsv, "identity\t{label}\t{coeff}\t{count}\t{ok}").unwrap();
        j["identity"] = json!({
            "label": label,
            "coeff": coeff.to_string(),
            "tableaux": count.to_string(),
            "holds": ok,
        });
    }
    Ok(Report {
        text,
        tsv,
        json: j,
        verified,
    })
}

pub fn sinks(cfg: &RunConfig) -> Outcome {
    let p = load_poset(cfg)?;
    let g = p.inc_graph();
    let hist = sink_counts(&g)?;
    let sums = e_coeff_length_sums(&e_coeffs(&g)?);
    let (mut text, mut tsv) = (String::new(), String::from("j\tsinks\te_sum\n"));
    let mut rows = Vec::new();
    let mut verified = true;
    for j in 1..=p.len() {
        let s = hist.get(&j).copied().unwrap_or(0);
        let e = sums.get(&j).cloned().unwrap_or_default();
        verified &= BigInt::from(s) == e;
        writeln!(text, "j={j}: sinks={s} e-sum={e}").unwrap();
        writeln!(tsv, "{j}\t{s}\t{e}").unwrap();
        rows.push(json!({ "j": j, "sinks": s, "e_sum": e.to_string() }));
    }
    Ok(Report {
        text,
        tsv,
        json: json!({ "rows": rows, "holds": verified }),
        verified,
    })
}

pub fn convert(cfg: &RunConfig) -> Outcome {
    let cs = load_shape(cfg)?;
    let gk = to_gessel_krattenthaler(&cs)?;
    let pm = to_postnikov_mcnamara(&cs)?;
    let text = format!(
        "GK: nu={} eta={} m={}\nPM: nu={} m={} theta={} k={} n={}\n",
        paren(&gk.nu),
        paren(&gk.eta),
        gk.m,
        paren(&pm.nu),
        pm.m,
        paren(&pm.theta),
        pm.k,
        pm.n
    );
    let tsv = format!(
        "form\tnu\teta_or_theta\tm\tk\tn\nGK\t{}\t{}\t{}\t\t\nPM\t{}\t{}\t{}\t{}\t{}\n",
        gk.nu, gk.eta, gk.m, pm.nu, pm.theta, pm.m, pm.k, pm.n
    );
    let json = json!({
        "shape": cs.to_string(),
        "gk": { "nu": parts(&gk.nu), "eta": parts(&gk.eta), "m": gk.m },
        "pm": { "nu": parts(&pm.nu), "m": pm.m, "theta": parts(&pm.theta), "k": pm.k, "n": pm.n },
    });
    Ok(Report {
        text,
        tsv,
        json,
        verified: true,
    })
}

pub fn involution_trace(cfg: &RunConfig) -> Outcome {
    let p = load_poset(cfg)?;
    let cs = load_shape(cfg)?;
    if cfg.kbound < 0 {
        return Err(Failure::input("--kbound must be non-negative"));
    }
    let en = enumerate_b(&cs, &p, cfg.kbound)?;
    let chosen: Vec<usize> = match cfg.sample {
        Some(s) if s < en.b.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut idx = index::sample(&mut rng, en.b.len(), s).into_vec();
            idx.sort_unstable();
            idx
        }
        _ => (0..en.b.len()).collect(),
    };
    let (mut text, mut tsv) = (String::new(), String::from("line\tinvolutive\n"));
    let mut lines = Vec::new();
    let mut verified = true;
    for &i in &chosen {
        let t = &en.b[i];
        let line = trace_line(t, &p)?;
        let image = phi(t, &p)?;
        let ok = image.sign() == -t.sign() && phi(&image, &p)? == *t;
        verified &= ok;
        writeln!(text, "{line}").unwrap();
        writeln!(tsv, "{line}\t{ok}").unwrap();
        lines.push(json!({ "line": line, "involutive": ok }));
    }
    writeln!(
        text,
        "traced {} of {} triples, {} fixed, truncated: {}",
        chosen.len(),
        en.b.len(),
        en.rest.len(),
        en.truncated
    )
    .unwrap();
    let json = json!({
        "shape": cs.to_string(),
        "kbound": cfg.kbound,
        "seed": cfg.seed,
        "total": en.b.len(),
        "fixed": en.rest.len(),
        "truncated": en.truncated,
        "trace": lines,
        "holds": verified,
    });
    Ok(Report {
        text,
        tsv,
        json,
        verified,
    })
}
