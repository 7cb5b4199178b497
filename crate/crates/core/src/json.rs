//! JSON encoding of ideals and certificates.
//!
//! Ideal schema: `{"ring": <ring text>, "parts": [part, ...]}` with one part per
//! component:
//!
//! - `{"kind": "zero"}`, `{"kind": "whole"}` (the total quotient of a domain atom)
//! - `{"kind": "int", "generator": "6"}` (a rational, as text)
//! - `{"kind": "spr", "exponent": j}` for `(p^j)`
//! - `{"kind": "quad", "den": d, "hnf": [a, 0, b, c]}` for `(1/d)·(aZ + (b + cω)Z)`
//! - `{"kind": "poly", "den": poly, "basis": [poly, ...]}` where a polynomial is a
//!   sorted list of `[x_exp, y_exp, coeff]` terms
//!
//! Integers that do not fit in 64 bits are written as strings.
//!
//! A factorization certificate is `{"input", "factors", "canonicalized",
//! "product", "recomputed", "verified"}` where each factor is
//! `{"component": c, "prime": {"kind", "ideal", "text"}, "exp": e}` with
//! one-based component indices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::classify::{ClassReport, GeneralKrullCert, LocalClass, LocalKind};
use crate::dsl;
use crate::factor::FactorCert;
use crate::ideal::{AtomIdeal, FracIdeal, PrimeRef};
use crate::poly::Poly;
use crate::polyideal::PolyIdeal;
use crate::quad::{AbelianGroup, QuadIdeal};
use crate::ring::{Atom, RingDesc};
use crate::star::{RgvCertificate, UMaxOver};

pub fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn int_from(v: &Value) -> Result<BigInt, String> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| format!("not an integer: {n}")),
        Value::String(s) => s.parse().map_err(|_| format!("not an integer: {s}")),
        _ => Err(format!("expected an integer, found {v}")),
    }
}

pub fn poly_json(f: &Poly) -> Value {
    Value::Array(f.terms().iter().map(|(m, c)| json!([m[0], m[1], c])).collect())
}

fn poly_from(p: u32, v: &Value) -> Result<Poly, String> {
    let terms = v.as_array().ok_or("polynomial must be a list of terms")?;
    let mut out = Vec::new();
    for t in terms {
        let t = t.as_array().filter(|t| t.len() == 3).ok_or("term must be [x_exp, y_exp, coeff]")?;
        let e = |i: usize| t[i].as_u64().and_then(|x| u16::try_from(x).ok()).ok_or("bad exponent");
        let c = t[2].as_i64().ok_or("bad coefficient")?;
        out.push(([e(0)?, e(1)?, 0], c));
    }
    Ok(Poly::from_terms(p, out))
}

/// One component of an ideal, in the part schema above.
pub fn part_json(part: &AtomIdeal) -> Value {
    match part {
        AtomIdeal::Zero => json!({"kind": "zero"}),
        AtomIdeal::Whole => json!({"kind": "whole"}),
        AtomIdeal::Int(q) => json!({"kind": "int", "generator": q.to_string()}),
        AtomIdeal::Spr(j) => json!({"kind": "spr", "exponent": j}),
        AtomIdeal::Quad(q) => json!({
            "kind": "quad",
            "den": int_json(&q.den),
            "hnf": [int_json(&q.a), 0, int_json(&q.b), int_json(&q.c)],
        }),
        AtomIdeal::Poly(q) => json!({
            "kind": "poly",
            "den": poly_json(q.den()),
            "basis": q.basis().iter().map(poly_json).collect::<Vec<_>>(),
        }),
    }
}

fn part_from(a: &Atom, v: &Value) -> Result<AtomIdeal, String> {
    let kind = v.get("kind").and_then(Value::as_str).ok_or("part needs a `kind`")?;
    let field = |k: &str| v.get(k).ok_or_else(|| format!("`{kind}` part needs `{k}`"));
    Ok(match (kind, a) {
        ("zero", Atom::ModPrimePower { k, .. }) => AtomIdeal::Spr(*k),
        ("zero", _) => AtomIdeal::Zero,
        ("whole", _) => AtomIdeal::total(a),
        ("int", Atom::Integer | Atom::Rational) => {
            let s = field("generator")?.as_str().ok_or("`generator` must be text")?;
            let q: BigRational = s.parse().map_err(|_| format!("bad rational `{s}`"))?;
            AtomIdeal::from_generators(a, &[crate::ring::Scalar::Rat(q)])
        }
        ("spr", Atom::ModPrimePower { k, .. }) => {
            let j = field("exponent")?.as_u64().ok_or("`exponent` must be a number")?;
            AtomIdeal::Spr((j as u32).min(*k))
        }
        ("quad", Atom::Quadratic(r)) => {
            let h = field("hnf")?.as_array().filter(|h| h.len() == 4).ok_or("`hnf` must have 4 entries")?;
            if int_from(&h[1])? != BigInt::from(0) {
                return Err("`hnf` must be lower triangular".into());
            }
            let q = QuadIdeal::from_hnf(*r, int_from(field("den")?)?, int_from(&h[0])?, int_from(&h[2])?, int_from(&h[3])?)
                .map_err(|e| e.to_string())?;
            AtomIdeal::Quad(q)
        }
        ("poly", Atom::Poly { p }) => {
            let den = poly_from(*p, field("den")?)?;
            let basis = field("basis")?
                .as_array()
                .ok_or("`basis` must be a list")?
                .iter()
                .map(|b| poly_from(*p, b))
                .collect::<Result<Vec<_>, _>>()?;
            AtomIdeal::Poly(PolyIdeal::from_parts(den, basis).ok_or("empty or malformed polynomial ideal")?)
        }
        _ => return Err(format!("part kind `{kind}` does not fit {a}")),
    })
}

pub fn ideal_to_json(i: &FracIdeal) -> Value {
    json!({
        "ring": i.ring().to_string(),
        "parts": i.parts().iter().map(part_json).collect::<Vec<_>>(),
        "text": i.to_string(),
    })
}

pub fn ideal_from_json(v: &Value) -> Result<FracIdeal, String> {
    let ring = v.get("ring").and_then(Value::as_str).ok_or("ideal needs a `ring`")?;
    let ring = dsl::parse_ring(ring).map_err(|e| format!("ring {e}"))?;
    let parts = v.get("parts").and_then(Value::as_array).ok_or("ideal needs `parts`")?;
    if parts.len() != ring.len() {
        return Err(format!("expected {} parts, found {}", ring.len(), parts.len()));
    }
    let parts = ring.atoms().iter().zip(parts).map(|(a, p)| part_from(a, p)).collect::<Result<Vec<_>, _>>()?;
    FracIdeal::from_parts(&ring, parts).map_err(|e| e.to_string())
}

/// One-based component index, prime kind and the prime as an ideal of its atom.
pub fn prime_json(r: &RingDesc, p: &PrimeRef) -> Value {
    let a = r.atom(p.component);
    json!({
        "component": p.component + 1,
        "kind": p.prime.kind_name(),
        "ideal": part_json(&p.prime.to_atom_ideal(a)),
        "text": p.display(r).to_string(),
    })
}

pub fn factor_cert_json(c: &FactorCert) -> Value {
    let r = c.input.ring();
    let factors: Vec<Value> = c
        .factors
        .iter()
        .map(|(p, e)| {
            let a = r.atom(p.component);
            json!({
                "component": p.component + 1,
                "prime": {
                    "kind": p.prime.kind_name(),
                    "ideal": part_json(&p.prime.to_atom_ideal(a)),
                    "text": p.display(r).to_string(),
                },
                "exp": e,
            })
        })
        .collect();
    json!({
        "input": ideal_to_json(&c.input),
        "factors": factors,
        "canonicalized": c.canonicalized,
        "product": c.product_op.name(),
        "recomputed": ideal_to_json(&c.recomputed),
        "verified": c.verified,
    })
}

pub fn group_json(g: &AbelianGroup) -> Value {
    json!({"invariants": g.invariants, "order": g.order(), "text": g.to_string()})
}

pub fn class_report_json(r: &RingDesc, rep: &ClassReport) -> Value {
    let flags: serde_json::Map<String, Value> =
        rep.flags.pairs().iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    json!({
        "ring": r.to_string(),
        "dims": rep.dims,
        "class_group": {
            "components": rep.class_group.iter().map(group_json).collect::<Vec<_>>(),
            "total": group_json(&rep.class_group_total),
        },
        "picard_group": {
            "components": rep.picard_group.iter().map(group_json).collect::<Vec<_>>(),
            "total": group_json(&rep.picard_group_total),
        },
        "flags": flags,
        "witnesses": rep.witnesses.iter().map(|p| prime_json(r, p)).collect::<Vec<_>>(),
        "total_quotient_ring": rep.total_quotient_ring,
    })
}

pub fn local_class_json(r: &RingDesc, l: &LocalClass) -> Value {
    let kind = match &l.kind {
        LocalKind::Dvr { uniformizer } => json!({"type": "DVR", "uniformizer": uniformizer.to_string()}),
        LocalKind::Spr { nilpotency } => json!({"type": "SPR", "nilpotency": nilpotency}),
        LocalKind::Field => json!({"type": "Field"}),
    };
    json!({"at": prime_json(r, &l.at), "kind": kind})
}

pub fn general_krull_json(r: &RingDesc, c: &GeneralKrullCert) -> Value {
    json!({
        "dim_t": c.dim_t,
        "minimal_primes": c.minimal_primes.iter().map(|m| json!({
            "prime": prime_json(r, &m.prime),
            "generator": m.generator.to_string(),
            "generates": m.generates,
        })).collect::<Vec<_>>(),
        "samples_verified": c.samples.iter().filter(|s| s.verified).count(),
        "samples": c.samples.len(),
        "krull_clause": c.krull_clause,
        "pass": c.pass,
    })
}

pub fn rgv_json(c: &RgvCertificate) -> Value {
    json!({
        "ideal": ideal_to_json(&c.witness),
        "finitely_generated": c.finitely_generated,
        "regular": c.is_regular,
        "inverse_is_r": c.inverse_is_r,
        "member": c.is_member(),
    })
}

pub fn umax_json(r: &RingDesc, u: &UMaxOver) -> Value {
    match u {
        UMaxOver::Primes(ps) => json!({"infinite": false, "primes": ps.iter().map(|p| prime_json(r, p)).collect::<Vec<_>>()}),
        UMaxOver::InfiniteFamily => json!({"infinite": true, "primes": []}),
    }
}
