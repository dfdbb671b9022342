use std::fs;

use num_bigint::BigInt;
use serde_json::{json, Value};

use localarith::arith::{fmt_q, parse_q};
use localarith::bernoulli::{self, BernoulliTable};
use localarith::extensions::{
    classify_tame, count_tame_extensions, eisenstein_invariants, splitting_degree_of_unity, unit_group_structure,
    TameExtensionDescriptor,
};
use localarith::padic::{newton_lift, sqrt, teichmuller, Padic};
use localarith::poly::{
    hensel_lift_factors, newton_polygon, slope_factorization, weierstrass_prepare, QPoly, TruncatedSeries,
};
use localarith::ramification::{cyclotomic_group, FilteredGroup};
use localarith::valuations::{
    ff_valuation, product_formula_report, sum_formula_check, vp_rational, weak_approximation, ApproxTarget,
    FiniteField, FqPoly, FunctionFieldPlace, RationalFunction, RationalPlace,
};
use localarith::{Error, Result};

use crate::{Cli, CmdResult, Command, ExtensionsCmd, Output, PolyInput, RamificationCmd};

fn out(text: impl Into<String>, json: Value) -> CmdResult {
    Ok(Output { text: text.into(), json })
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn read_poly(input: &PolyInput) -> Result<QPoly> {
    let src = match (&input.poly, &input.file) {
        (Some(s), None) => s.clone(),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?,
        (Some(_), Some(_)) => return Err(Error::invalid("give the polynomial inline or with --file, not both")),
        (None, None) => return Err(Error::invalid("missing polynomial")),
    };
    QPoly::parse(src.trim())
}

fn parse_fq(field: &FiniteField, s: &str) -> Result<FqPoly> {
    let c = s
        .split(',')
        .map(|t| {
            let v: u64 = t.trim().parse().map_err(|_| Error::invalid(format!("bad coefficient '{t}'")))?;
            if v >= field.size() {
                return Err(Error::invalid(format!("coefficient {v} is not an element of F_{}", field.size())));
            }
            Ok(v)
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(FqPoly::new(c))
}

fn integer_coeffs(f: &QPoly) -> Result<Vec<BigInt>> {
    f.coeffs()
        .iter()
        .map(|c| if c.is_integer() { Ok(c.to_integer()) } else { Err(Error::invalid("lift needs integer coefficients")) })
        .collect()
}

pub fn run(cli: &Cli) -> CmdResult {
    let prec = cli.prec;
    if prec == 0 {
        return Err(Error::invalid("precision must be positive"));
    }
    match &cli.command {
        Command::Vp { p, x } => {
            let xq = parse_q(x)?;
            let v = vp_rational(*p, &xq)?;
            let jv = match v.finite() {
                Some(k) => json!(k),
                None => json!("+inf"),
            };
            out(v.to_string(), json!({ "p": p, "x": fmt_q(&xq), "valuation": jv }))
        }
        Command::ProductFormula { x } => {
            let r = product_formula_report(&parse_q(x)?)?;
            out(r.to_string(), to_json(&r))
        }
        Command::FfVal { q, num, den, place } => {
            let field = FiniteField::new(*q)?;
            let x = RationalFunction::new(parse_fq(&field, num)?, parse_fq(&field, den)?)?;
            match place {
                Some(pl) => {
                    let place = if pl == "inf" {
                        FunctionFieldPlace::infinite(&field)
                    } else {
                        FunctionFieldPlace::finite(&field, parse_fq(&field, pl)?)?
                    };
                    let v = ff_valuation(&field, &place, &x)?;
                    out(v.to_string(), json!({ "q": q, "place": place.to_string(), "degree": place.degree(), "valuation": v }))
                }
                None => {
                    let r = sum_formula_check(&field, &x)?;
                    out(r.to_string(), to_json(&r))
                }
            }
        }
        Command::WeakApprox { targets } => {
            let ts = targets.iter().map(|t| parse_target(t)).collect::<Result<Vec<_>>>()?;
            let y = weak_approximation(&ts)?;
            out(fmt_q(&y), json!({ "value": fmt_q(&y) }))
        }
        Command::Bernoulli { k } => {
            let b = bernoulli::bernoulli(*k);
            out(fmt_q(&b), json!({ "k": k, "value": fmt_q(&b) }))
        }
        Command::StaudtClausen { k } => {
            let (w, d, primes) = bernoulli::staudt_clausen(&mut BernoulliTable::new(), *k)?;
            let ps: Vec<String> = primes.iter().map(|l| l.to_string()).collect();
            out(
                format!("W_{k} = {w}\nD_{k} = {d}\nprimes: {}", ps.join(", ")),
                json!({ "k": k, "w": w.to_string(), "denominator": d.to_string(), "primes": primes }),
            )
        }
        Command::Padic { p, x } => {
            let v = Padic::from_rational(*p, &parse_q(x)?, prec)?;
            if v.is_exact_zero() {
                return out("0", json!({ "value": to_json(&v), "digits": null }));
            }
            let d = v.expansion(prec)?;
            let ds: Vec<String> = d.digits.iter().map(|x| x.to_string()).collect();
            out(
                format!("{v}\ndigits from p^{}: {}", d.start, ds.join(" ")),
                json!({ "value": to_json(&v), "digits": to_json(&d) }),
            )
        }
        Command::Sqrt { p, x } => {
            let v = Padic::from_rational(*p, &parse_q(x)?, prec)?;
            let r = sqrt(&v)?;
            out(r.to_string(), json!({ "input": to_json(&v), "root": to_json(&r) }))
        }
        Command::Teichmuller { p, a } => {
            let t = teichmuller(*p, *a, prec)?;
            out(t.to_string(), json!({ "p": p, "residue": a, "value": to_json(&t) }))
        }
        Command::Lift { p, input, a0 } => {
            let f = read_poly(input)?;
            let a = newton_lift(&integer_coeffs(&f)?, &Padic::from_int(*p, *a0, prec)?, prec)?;
            out(a.to_string(), json!({ "poly": f.to_string(), "root": to_json(&a) }))
        }
        Command::Polygon { p, input } => {
            let f = read_poly(input)?;
            let np = newton_polygon(&f.to_padic(*p, prec)?)?;
            out(np.type_string(), to_json(&np))
        }
        Command::FactorLift { p, input, g0, h0, alpha } => {
            let f = read_poly(input)?;
            let (g, h) = hensel_lift_factors(*p, &f, &QPoly::parse(g0)?, &QPoly::parse(h0)?, *alpha, prec)?;
            out(
                format!("g = {g}\nh = {h}\nmodulo {p}^{prec}"),
                json!({ "g": g.coeff_strings(), "h": h.coeff_strings(), "modulus_exponent": prec }),
            )
        }
        Command::SlopeFactor { p, input } => {
            let f = read_poly(input)?;
            let parts = slope_factorization(&f.to_padic(*p, prec)?, prec)?;
            let lines: Vec<String> =
                parts.iter().map(|s| format!("({},{}): {}", s.length, fmt_q(&s.slope), s.factor)).collect();
            out(lines.join("\n"), to_json(&parts))
        }
        Command::Weierstrass { p, input, tail } => {
            let f = read_poly(input)?;
            let series = TruncatedSeries { coeffs: f.to_padic(*p, prec)?, tail_bound: *tail };
            let w = weierstrass_prepare(&series, prec)?;
            let h = &w.h.coeffs;
            out(
                format!("N_f = {}\ng = {}\nh = {}\nmodulo {p}^{}", w.n_f, w.g, h, w.precision),
                json!({
                    "n_f": w.n_f,
                    "g": to_json(&w.g.coeffs()),
                    "h": to_json(&h.coeffs()),
                    "h_tail_bound": w.h.tail_bound,
                    "precision": w.precision,
                }),
            )
        }
        Command::Resultant { g, h, p } => {
            let r = QPoly::resultant(&QPoly::parse(g)?, &QPoly::parse(h)?)?;
            let mut text = fmt_q(&r);
            let mut j = json!({ "resultant": fmt_q(&r) });
            if let Some(p) = p {
                let v = vp_rational(*p, &r)?;
                text.push_str(&format!("\nv_{p} = {v}"));
                j["valuation"] = match v.finite() {
                    Some(k) => json!(k),
                    None => json!("+inf"),
                };
            }
            out(text, j)
        }
        Command::Eisenstein { p, input } => {
            let inv = eisenstein_invariants(*p, &read_poly(input)?)?;
            out(
                format!(
                    "e = {}\nf = {}\nroot valuation = {}\nnorm of uniformiser = {}",
                    inv.e,
                    inv.f,
                    fmt_q(&inv.root_valuation),
                    fmt_q(&inv.uniformiser_norm)
                ),
                to_json(&inv),
            )
        }
        Command::Ramification(RamificationCmd::Cyclotomic { p, n }) => cyclotomic(*p, *n),
        Command::Extensions(cmd) => extensions(cmd),
        Command::Reproduce { all, bernoulli, polygon, cyclotomic, extensions } => {
            let any = *bernoulli || *polygon || *cyclotomic || *extensions;
            if !*all && !any {
                return Err(Error::invalid("choose --all or at least one table"));
            }
            crate::reproduce::run(*all || *bernoulli, *all || *polygon, *all || *cyclotomic, *all || *extensions)
        }
    }
}

fn parse_target(s: &str) -> Result<ApproxTarget> {
    let parts: Vec<&str> = s.split(':').collect();
    let [place, value, eps] = parts.as_slice() else {
        return Err(Error::invalid(format!("target '{s}' is not PLACE:VALUE:EPS")));
    };
    let place = if *place == "inf" {
        RationalPlace::Infinite
    } else {
        RationalPlace::prime(place.parse().map_err(|_| Error::invalid(format!("bad place '{place}'")))?)?
    };
    Ok(ApproxTarget { place, value: parse_q(value)?, eps: parse_q(eps)? })
}

pub fn cyclotomic_table(g: &FilteredGroup) -> Vec<String> {
    let mut lines = Vec::new();
    for (n, s) in g.lower_filtration() {
        let labels: Vec<&str> = s.iter().map(|&i| g.label(i)).collect();
        lines.push(format!("G_{n}: order {} {{{}}}", s.len(), labels.join(",")));
    }
    lines
}

pub fn cyclotomic_json(p: u64, n: u32, g: &FilteredGroup) -> Result<Value> {
    let report = g.report(1)?;
    let filtration: Vec<Value> = g
        .lower_filtration()
        .into_iter()
        .map(|(k, s)| {
            let labels: Vec<&str> = s.iter().map(|&i| g.label(i)).collect();
            json!({ "n": k, "order": s.len(), "elements": labels })
        })
        .collect();
    let ig: Vec<Value> = (0..g.order()).map(|i| json!({ "element": g.label(i), "i_G": to_json(&g.ig(i)) })).collect();
    Ok(json!({ "p": p, "n": n, "order": g.order(), "i_G": ig, "filtration": filtration, "report": to_json(&report) }))
}

fn cyclotomic(p: u64, n: u32) -> CmdResult {
    let g = cyclotomic_group(p, n)?;
    let report = g.report(1)?;
    let mut lines = cyclotomic_table(&g);
    lines.push(report.to_string());
    out(lines.join("\n"), cyclotomic_json(p, n, &g)?)
}

fn extensions(cmd: &ExtensionsCmd) -> CmdResult {
    match cmd {
        ExtensionsCmd::Count { q, e, f } => {
            let c = count_tame_extensions(*q, *e, *f)?;
            out(c.to_string(), json!({ "q": q, "e": e, "f": f, "count": c }))
        }
        ExtensionsCmd::Classify { q, e, f, r } => {
            let c = classify_tame(&TameExtensionDescriptor::new(*q, *e, *f, *r)?)?;
            let mut lines = vec![
                format!("degree: {}", c.degree),
                format!("g: {}", c.g),
                format!("galois: {}", c.galois),
                format!("abelian: {}", c.abelian),
            ];
            if let Some(pres) = &c.presentation {
                lines.push(format!("presentation: <s, t | {}>", pres.relations.join(", ")));
            }
            out(lines.join("\n"), to_json(&c))
        }
        ExtensionsCmd::Splitting { q, n } => {
            let g = splitting_degree_of_unity(*q, *n)?;
            out(g.to_string(), json!({ "q": q, "n": n, "degree": g }))
        }
        ExtensionsCmd::Units { p, n } => {
            let s = unit_group_structure(*p, *n)?;
            s.verify()?;
            let fs: Vec<String> = s.invariants.iter().map(|k| format!("Z/{k}")).collect();
            let gs: Vec<String> = s.generators.iter().map(|g| g.to_string()).collect();
            out(format!("{}\ngenerators: {}", fs.join(" x "), gs.join(", ")), to_json(&s))
        }
    }
}
