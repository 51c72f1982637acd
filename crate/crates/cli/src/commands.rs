use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use zplane::analytic::{exp_theta, polar_decompose, pow_moivre, RealElement};
use zplane::classify::{classify, Classification};
use zplane::euclid::{decompose, div_rem, ideal_contains, FGIdeal};
use zplane::factor::{diff_two_squares, factor};
use zplane::oracle::{divisors, oracle_irreducible_verdict, oracle_prime, OracleVerdict, Verdict};
use zplane::quadratic::{canonicalize, classify_quadratic, QuadraticPoly};
use zplane::{Element, Error, RingKind};

use crate::args::{Cli, Command, OracleMode};
use crate::error::{CliError, MAX_TABLE_BOUND};
use crate::render::{self, fields, int, Output, Style};

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli, style: Style) -> Result<Output> {
    let hint = cli.ring;
    match &cli.command {
        Command::Classify { element } => cmd_classify(&parse(element, hint)?, style),
        Command::Factor { element } => cmd_factor(&parse(element, hint)?),
        Command::Divmod { a, b } => {
            let (a, b) = parse_pair(a, b, hint)?;
            cmd_divmod(&a, &b, style)
        }
        Command::Norm { element } => cmd_norm(&parse(element, hint)?),
        Command::Dts { n_max } => cmd_dts(*n_max),
        Command::Ideal {
            generators,
            contains,
        } => cmd_ideal(generators, contains.as_deref(), hint, style),
        Command::Oracle {
            mode,
            element,
            bound,
        } => cmd_oracle(*mode, &parse(element, hint)?, *bound),
        Command::ClassifyPoly { a, b, c } => cmd_classify_poly(a, b, c),
        Command::Exp { x, y } => cmd_exp(require_ring(hint, "exp")?, *x, *y),
        Command::Pow { x, y, n } => cmd_pow(require_ring(hint, "pow")?, *x, *y, *n),
        Command::Table { bound } => cmd_table(require_ring(hint, "table")?, *bound),
    }
}

fn parse(text: &str, hint: Option<RingKind>) -> Result<Element> {
    Element::parse(text, hint).map_err(|source| CliError::Element {
        input: text.to_string(),
        source,
    })
}

/// Parses several elements; plain integers borrow the ring of the others.
fn parse_all(texts: &[&str], hint: Option<RingKind>) -> Result<Vec<Element>> {
    let hint = hint.or_else(|| {
        texts
            .iter()
            .find_map(|t| Element::parse(t, None).ok().map(|e| e.kind()))
    });
    let out: Vec<Element> = texts.iter().map(|t| parse(t, hint)).collect::<Result<_>>()?;
    if let Some(first) = out.first() {
        if let Some(other) = out.iter().find(|e| e.kind() != first.kind()) {
            return Err(CliError::Domain(Error::KindMismatch {
                left: first.kind(),
                right: other.kind(),
            }));
        }
    }
    Ok(out)
}

fn parse_pair(a: &str, b: &str, hint: Option<RingKind>) -> Result<(Element, Element)> {
    let mut v = parse_all(&[a, b], hint)?;
    let b = v.pop().expect("two elements");
    let a = v.pop().expect("two elements");
    Ok((a, b))
}

fn require_ring(hint: Option<RingKind>, command: &str) -> Result<RingKind> {
    hint.ok_or_else(|| CliError::Usage(format!("`{command}` needs --ring i|j|k")))
}

fn classification_json(c: &Classification) -> Value {
    json!({
        "is_zero": c.is_zero,
        "is_unit": c.is_unit,
        "is_zero_divisor": c.is_zero_divisor,
        "is_prime": c.is_prime,
        "is_irreducible": c.is_irreducible,
        "is_reducible": c.is_reducible,
    })
}

fn cmd_classify(z: &Element, style: Style) -> Result<Output> {
    let c = classify(z);
    let canonical = z.canonical();
    let mut labels = Vec::new();
    for (on, label) in [
        (c.is_zero, "zero"),
        (c.is_unit, "unit"),
        (c.is_zero_divisor, "zero-divisor"),
        (c.is_prime, "prime"),
        (c.is_irreducible, "irreducible"),
        (c.is_reducible, "reducible"),
    ] {
        if on {
            labels.push(label);
        }
    }
    if !c.is_zero && !c.is_unit && !c.is_prime {
        labels.push("not prime");
    }
    let text = fields(&[
        ("element", format!("{z} in {}", z.kind().name())),
        ("summary", style.bold(&labels.join(", "))),
        ("zero", style.yes_no(c.is_zero)),
        ("unit", style.yes_no(c.is_unit)),
        ("zero divisor", style.yes_no(c.is_zero_divisor)),
        ("prime", style.yes_no(c.is_prime)),
        ("irreducible", style.yes_no(c.is_irreducible)),
        ("reducible", style.yes_no(c.is_reducible)),
        ("eta", z.eta().to_string()),
        ("eta+", z.eta_plus().to_string()),
        ("canonical", canonical.to_string()),
    ]);
    let json = json!({
        "element": render::element(z),
        "classification": classification_json(&c),
        "eta": int(&z.eta()),
        "eta_plus": int(&z.eta_plus()),
        "canonical": render::element(&canonical),
    });
    Ok(Output { text, json })
}

fn cmd_factor(z: &Element) -> Result<Output> {
    let f = factor(z)?;
    let mut text = format!("{z} = ");
    if !f.unit.is_one() {
        let _ = write!(text, "({})·", f.unit);
    }
    text.push_str(&render::join(&f.factors, "·"));
    text.push('\n');
    if f.zero_divisor_extension {
        text.push_str("note: zero divisor of Z[k], factored as y·k\n");
    }
    let json = json!({
        "element": render::element(z),
        "unit": render::element(&f.unit),
        "factors": render::elements(&f.factors),
        "zero_divisor_extension": f.zero_divisor_extension,
    });
    Ok(Output { text, json })
}

fn cmd_divmod(a: &Element, b: &Element, style: Style) -> Result<Output> {
    let r = div_rem(a, b)?;
    let rho = r.remainder.eta_plus();
    let bound = b.eta_plus();
    let half_bound = &rho * 2u32 <= bound;
    let strict = rho < bound;
    if &(&r.quotient * b) + &r.remainder != *a || !strict {
        return Err(CliError::Usage(format!(
            "internal check failed for {a} / {b}; please report this"
        )));
    }
    let text = fields(&[
        ("a", a.to_string()),
        ("b", b.to_string()),
        ("quotient", r.quotient.to_string()),
        ("remainder", r.remainder.to_string()),
        ("eta+(r)", rho.to_string()),
        ("eta+(b)", bound.to_string()),
        ("eta+(r) < eta+(b)", style.yes_no(strict)),
        ("2·eta+(r) <= eta+(b)", style.yes_no(half_bound)),
    ]);
    let json = json!({
        "a": render::element(a),
        "b": render::element(b),
        "quotient": render::element(&r.quotient),
        "remainder": render::element(&r.remainder),
        "eta_plus_remainder": int(&rho),
        "eta_plus_divisor": int(&bound),
        "remainder_smaller": strict,
        "half_bound": half_bound,
    });
    Ok(Output { text, json })
}

fn cmd_norm(z: &Element) -> Result<Output> {
    let n = z.norm_data();
    let assoc = z.normalize_associate();
    let text = fields(&[
        ("element", z.to_string()),
        ("conjugate", z.conj().to_string()),
        ("eta", n.eta.to_string()),
        ("eta+", n.eta_plus.to_string()),
        ("trace", n.tau.to_string()),
        ("canonical", assoc.canonical.to_string()),
        ("unit", assoc.unit.to_string()),
    ]);
    let json = json!({
        "element": render::element(z),
        "conjugate": render::element(&z.conj()),
        "eta": int(&n.eta),
        "eta_plus": int(&n.eta_plus),
        "trace": int(&n.tau),
        "canonical": render::element(&assoc.canonical),
        "unit": render::element(&assoc.unit),
    });
    Ok(Output { text, json })
}

fn cmd_dts(n_max: u64) -> Result<Output> {
    if n_max == 0 {
        return Err(CliError::Usage("N_MAX must be at least 1".into()));
    }
    let mut text = format!("{:>8} {:>4} {:>4} {:>10} {:>10}\n", "n", "v2", "dts", "r", "s");
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let nu2 = n.trailing_zeros();
        let rep = diff_two_squares(&BigInt::from(n))?;
        let (r, s) = match &rep {
            Some((r, s)) => (r.to_string(), s.to_string()),
            None => ("-".into(), "-".into()),
        };
        let yes = if rep.is_some() { "yes" } else { "no" };
        let _ = writeln!(text, "{n:>8} {nu2:>4} {yes:>4} {r:>10} {s:>10}");
        rows.push(json!({
            "n": n.to_string(),
            "nu2": nu2,
            "representable": rep.is_some(),
            "r": rep.as_ref().map(|(r, _)| int(r)),
            "s": rep.as_ref().map(|(_, s)| int(s)),
        }));
    }
    Ok(Output {
        text,
        json: json!({ "rows": rows }),
    })
}

fn cmd_ideal(
    generators: &[String],
    contains: Option<&str>,
    hint: Option<RingKind>,
    style: Style,
) -> Result<Output> {
    let mut texts: Vec<&str> = generators.iter().map(String::as_str).collect();
    if let Some(c) = contains {
        texts.push(c);
    }
    let mut elements = parse_all(&texts, hint)?;
    let target = contains.map(|_| elements.pop().expect("pushed above"));
    let kind = elements[0].kind();
    let ideal = FGIdeal::new(kind, elements.clone())?;
    let dec = decompose(&ideal);
    let member = target
        .as_ref()
        .map(|z| ideal_contains(&dec, z))
        .transpose()?;

    let alpha = dec
        .alpha
        .as_ref()
        .map_or_else(|| "none (ideal lies in the zero divisors)".to_string(), Element::to_string);
    let mut rows = vec![
        ("ring", kind.name().to_string()),
        (
            "generators",
            elements.iter().map(Element::to_string).collect::<Vec<_>>().join(", "),
        ),
        ("alpha", alpha),
    ];
    match kind {
        RingKind::Hyperbolic => {
            rows.push(("D+ generator", dec.dplus_gen.to_string()));
            rows.push(("D- generator", dec.dminus_gen.to_string()));
        }
        RingKind::Parabolic => rows.push(("D0 generator", dec.d0_gen.to_string())),
        RingKind::Elliptic => {}
    }
    if let (Some(z), Some(m)) = (&target, member) {
        rows.push(("contains", format!("{z}: {}", style.yes_no(m))));
    }
    let text = fields(&rows);
    let json = json!({
        "ring": kind.unit_symbol().to_string(),
        "generators": render::elements(&elements),
        "alpha": dec.alpha.as_ref().map(render::element),
        "dplus_gen": int(&dec.dplus_gen),
        "dminus_gen": int(&dec.dminus_gen),
        "d0_gen": int(&dec.d0_gen),
        "contains": target.as_ref().map(|z| json!({
            "element": render::element(z),
            "member": member,
        })),
    });
    Ok(Output { text, json })
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Confirmed => "confirmed",
        Verdict::Refuted => "refuted",
        Verdict::NoCounterexampleFound => "no counterexample found",
    }
}

fn verdict_output(mode: &str, z: &Element, v: &OracleVerdict, extra: &[(&str, String)]) -> Output {
    let mut rows = vec![("element", z.to_string()), ("verdict", verdict_name(v.verdict).to_string())];
    if let Some((a, b)) = &v.witness {
        rows.push(("witness", format!("{a}, {b}")));
    }
    rows.extend(extra.iter().cloned());
    Output {
        text: fields(&rows),
        json: json!({
            "mode": mode,
            "element": render::element(z),
            "verdict": verdict_name(v.verdict),
            "witness": render::pair(&v.witness),
        }),
    }
}

fn cmd_oracle(mode: OracleMode, z: &Element, bound: u32) -> Result<Output> {
    match mode {
        OracleMode::Irreducible => {
            let v = oracle_irreducible_verdict(z)?;
            Ok(verdict_output("irreducible", z, &v, &[]))
        }
        OracleMode::Prime => {
            let v = oracle_prime(z, bound)?;
            let mut out = verdict_output("prime", z, &v, &[("box", bound.to_string())]);
            out.json["box"] = json!(bound);
            Ok(out)
        }
        OracleMode::Divisors => {
            let ds = divisors(z)?;
            let mut text = format!("{} divisors of {z} up to associates\n", ds.len());
            for d in &ds {
                let _ = writeln!(text, "  {d}");
            }
            let json = json!({
                "mode": "divisors",
                "element": render::element(z),
                "divisors": render::elements(&ds),
            });
            Ok(Output { text, json })
        }
    }
}

fn rational(text: &str) -> Result<BigRational> {
    let trimmed = text.trim();
    let parsed = match trimmed.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad_rational(text))?;
            let q: BigInt = q.trim().parse().map_err(|_| bad_rational(text))?;
            if q == BigInt::from(0) {
                return Err(bad_rational(text));
            }
            BigRational::new(p, q)
        }
        None => BigRational::from_integer(trimmed.parse().map_err(|_| bad_rational(text))?),
    };
    Ok(parsed)
}

fn bad_rational(text: &str) -> CliError {
    CliError::Usage(format!("`{text}` is not an integer or a fraction p/q"))
}

fn cmd_classify_poly(a: &str, b: &str, c: &str) -> Result<Output> {
    let poly = QuadraticPoly::new(rational(a)?, rational(b)?, rational(c)?)?;
    let kind = classify_quadratic(&poly);
    let params = poly.params();
    let canon = canonicalize(&params);
    let text = fields(&[
        ("ring", format!("{} ({}² = {})", kind.name(), kind.unit_symbol(), kind.mu())),
        ("b² − 4ac", poly.disc().to_string()),
        ("θ²", format!("{} + ({})θ", params.alpha, params.beta)),
        (
            "basis change",
            format!("θ' = (θ − {}) / {}", canon.shift, canon.scale),
        ),
    ]);
    let json = json!({
        "ring": kind.unit_symbol().to_string(),
        "disc": poly.disc().to_string(),
        "alpha": params.alpha.to_string(),
        "beta": params.beta.to_string(),
        "shift": canon.shift,
        "scale": canon.scale,
    });
    Ok(Output { text, json })
}

fn real_element(kind: RingKind, x: f64, y: f64) -> Result<RealElement> {
    Ok(RealElement::new(kind, x, y)?)
}

fn show_real(z: &RealElement) -> String {
    let sign = if z.y.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}{}", z.x, sign, z.y.abs(), z.kind.unit_symbol())
}

fn real_json(z: &RealElement) -> Value {
    json!({ "ring": z.kind.unit_symbol().to_string(), "x": z.x, "y": z.y })
}

fn cmd_exp(kind: RingKind, x: f64, y: f64) -> Result<Output> {
    let z = real_element(kind, x, y)?;
    let w = exp_theta(&z)?;
    Ok(Output {
        text: format!("exp({}) = {}\n", show_real(&z), show_real(&w)),
        json: json!({ "input": real_json(&z), "exp": real_json(&w) }),
    })
}

fn cmd_pow(kind: RingKind, x: f64, y: f64, n: i32) -> Result<Output> {
    let z = real_element(kind, x, y)?;
    if kind == RingKind::Hyperbolic {
        let polar = polar_decompose(&z)?;
        let w = pow_moivre(&z, n)?;
        let text = fields(&[
            ("z", show_real(&z)),
            ("polar", format!("{}·(cosh {} + j sinh {})", polar.r, polar.alpha, polar.alpha)),
            ("z^n", show_real(&w)),
        ]);
        let json = json!({
            "input": real_json(&z),
            "n": n,
            "r": polar.r,
            "alpha": polar.alpha,
            "power": real_json(&w),
        });
        return Ok(Output { text, json });
    }
    let base = if n < 0 {
        let eta = z.eta();
        if eta == 0.0 {
            return Err(CliError::Domain(Error::NotInvertible));
        }
        z.conj().scale(1.0 / eta)
    } else {
        z
    };
    let w = base.powi(n.unsigned_abs());
    let w = real_element(kind, w.x, w.y).map_err(|_| CliError::Domain(Error::Overflow))?;
    Ok(Output {
        text: fields(&[("z", show_real(&z)), ("z^n", show_real(&w))]),
        json: json!({ "input": real_json(&z), "n": n, "power": real_json(&w) }),
    })
}

fn cmd_table(kind: RingKind, bound: u32) -> Result<Output> {
    if bound > MAX_TABLE_BOUND {
        return Err(CliError::BoundTooLarge(bound));
    }
    let b = i64::from(bound);
    let mut rows = Vec::new();
    for x in -b..=b {
        for y in -b..=b {
            let z = Element::from_i64(kind, x, y);
            if !z.is_zero() && z.canonical() == z {
                rows.push(z);
            }
        }
    }
    let mut units = 0;
    let mut primes = 0;
    let mut irreducible_non_primes = 0;
    let mut zero_divisors = 0;
    let mut csv = csv::Writer::from_writer(Vec::new());
    let mut json_rows = Vec::new();
    csv.write_record([
        "element", "x", "y", "eta", "eta_plus", "unit", "zero_divisor", "prime", "irreducible",
        "reducible",
    ])
    .expect("in-memory write");
    for z in &rows {
        let c = classify(z);
        units += usize::from(c.is_unit);
        primes += usize::from(c.is_prime);
        irreducible_non_primes += usize::from(c.is_irreducible && !c.is_prime);
        zero_divisors += usize::from(c.is_zero_divisor);
        let flag = |b: bool| if b { "1" } else { "0" };
        csv.write_record([
            z.to_string(),
            z.x().to_string(),
            z.y().to_string(),
            z.eta().to_string(),
            z.eta_plus().to_string(),
            flag(c.is_unit).into(),
            flag(c.is_zero_divisor).into(),
            flag(c.is_prime).into(),
            flag(c.is_irreducible).into(),
            flag(c.is_reducible).into(),
        ])
        .expect("in-memory write");
        json_rows.push(json!({
            "element": render::element(z),
            "eta": int(&z.eta()),
            "eta_plus": int(&z.eta_plus()),
            "classification": classification_json(&c),
        }));
    }
    let body = String::from_utf8(csv.into_inner().expect("in-memory flush")).expect("utf-8");
    let mut text = String::new();
    let _ = writeln!(
        text,
        "# {} with |x|, |y| <= {bound}; one row per associate class (counts are orbit counts)",
        kind.name()
    );
    let _ = writeln!(
        text,
        "# classes={} units={units} primes={primes} irreducible_non_primes={irreducible_non_primes} zero_divisors={zero_divisors}",
        rows.len()
    );
    text.push_str(&body);
    let json = json!({
        "ring": kind.unit_symbol().to_string(),
        "bound": bound,
        "note": "one row per associate class; counts are orbit counts",
        "summary": {
            "classes": rows.len(),
            "units": units,
            "primes": primes,
            "irreducible_non_primes": irreducible_non_primes,
            "zero_divisors": zero_divisors,
        },
        "rows": json_rows,
    });
    Ok(Output { text, json })
}
