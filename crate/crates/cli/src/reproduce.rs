//! Reference tables: Bernoulli numbers, the Newton polygon of the truncated
//! exponential over Q_2, cyclotomic ramification, and tame extension counts.

use serde_json::{json, Value};

use localarith::arith::{fmt_q, q, qi};
use localarith::bernoulli::BernoulliTable;
use localarith::extensions::count_tame_extensions;
use localarith::poly::{newton_polygon, QPoly};
use localarith::ramification::cyclotomic_group;
use localarith::Result;

use crate::commands::{cyclotomic_json, cyclotomic_table};
use crate::CmdResult;
use crate::Output;

pub const CYCLOTOMIC_CASES: [(u64, u32); 7] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)];
pub const EXTENSION_FIELDS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

fn bernoulli() -> (Vec<String>, Value) {
    let mut t = BernoulliTable::new();
    let mut lines = vec!["# Bernoulli numbers B_k = N_k / D_k".to_string()];
    let mut rows = Vec::new();
    for k in (2..=20).step_by(2) {
        let b = t.get(k);
        lines.push(format!("k = {k:2}  N_k = {:>8}  D_k = {:>5}", b.numer(), b.denom()));
        rows.push(json!({ "k": k, "numerator": b.numer().to_string(), "denominator": b.denom().to_string() }));
    }
    (lines, Value::Array(rows))
}

fn polygon() -> Result<(Vec<String>, Value)> {
    let mut fact = 1i64;
    let mut c = vec![qi(1)];
    for j in 1..=7 {
        fact *= j;
        c.push(q(1, fact));
    }
    let f = QPoly::from_q(c);
    let np = newton_polygon(&f.to_padic(2, 32)?)?;
    let verts: Vec<String> = np.vertices.iter().map(|(x, y)| format!("({x},{})", fmt_q(y))).collect();
    let lines = vec![
        "# Newton polygon over Q_2 of 1 + T + ... + T^7/7!".to_string(),
        format!("vertices: {}", verts.join(" ")),
        format!("type: {}", np.type_string()),
    ];
    Ok((lines, json!({ "poly": f.to_string(), "polygon": serde_json::to_value(&np).unwrap() })))
}

fn cyclotomic() -> Result<(Vec<String>, Value)> {
    let mut lines = vec!["# Ramification of Q_p(zeta_{p^n}) | Q_p".to_string()];
    let mut rows = Vec::new();
    for (p, n) in CYCLOTOMIC_CASES {
        let g = cyclotomic_group(p, n)?;
        let r = g.report(1)?;
        lines.push(format!("## p = {p}, n = {n}"));
        lines.extend(cyclotomic_table(&g));
        let lj: Vec<String> = r.lower_jumps.iter().map(|j| j.to_string()).collect();
        let uj: Vec<String> = r.upper_jumps.iter().map(fmt_q).collect();
        lines.push(format!("lower jumps: {}", lj.join(", ")));
        lines.push(format!("upper jumps: {}", uj.join(", ")));
        lines.push(format!("different exponent: {}", r.different_exponent));
        rows.push(cyclotomic_json(p, n, &g)?);
    }
    Ok((lines, Value::Array(rows)))
}

fn extensions() -> Result<(Vec<String>, Value)> {
    let mut lines = vec!["# Tame extensions with invariants (e, f), e <= 12, f <= 3".to_string()];
    let mut rows = Vec::new();
    for qq in EXTENSION_FIELDS {
        let p = localarith::arith::prime_power(qq).unwrap().0;
        for f in 1..=3u32 {
            let mut cells = Vec::new();
            for e in 1..=12u64 {
                if e % p == 0 {
                    cells.push("  -".to_string());
                    continue;
                }
                let c = count_tame_extensions(qq, e, f)?;
                cells.push(format!("{c:3}"));
                rows.push(json!({ "q": qq, "e": e, "f": f, "count": c }));
            }
            lines.push(format!("q = {qq} f = {f}: {}", cells.join("")));
        }
    }
    Ok((lines, Value::Array(rows)))
}

pub fn run(b: bool, p: bool, c: bool, e: bool) -> CmdResult {
    let mut text: Vec<String> = Vec::new();
    let mut obj = serde_json::Map::new();
    if b {
        let (l, j) = bernoulli();
        text.extend(l);
        obj.insert("bernoulli".into(), j);
    }
    let sections: [(bool, &str, fn() -> Result<(Vec<String>, Value)>); 3] =
        [(p, "polygon", polygon), (c, "cyclotomic", cyclotomic), (e, "extensions", extensions)];
    for (on, name, f) in sections {
        if on {
            let (l, j) = f()?;
            if !text.is_empty() {
                text.push(String::new());
            }
            text.extend(l);
            obj.insert(name.into(), j);
        }
    }
    Ok(Output { text: text.join("\n"), json: Value::Object(obj) })
}
