//! Analyses over a document. Each produces a [`Report`] holding a JSON
//! value, a text rendering and an optional verdict.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Value};

use veronese_core::betti::{BettiTable, GradingKind};
use veronese_core::closed_forms::{
    betti_power_formula, betti_two_fat_points, betti_two_veronese, build_uv_split, classify_two_veronese,
    ekf_identity_check, verify_splitting,
};
use veronese_core::geometry::{is_sequentially_cm, SimplicialComplexSpec};
use veronese_core::linearity::{
    is_polymatroidal, linear_quotients_in_order, search_linear_quotients, sort_generators, ExchangeWitness,
    OrderDirection, QuotientCertificate, QuotientSearch,
};
use veronese_core::oracle::{
    betti, betti_total, bound_as_f64, hilbert_numerator_inclusion_exclusion, hilbert_numerator_recursive,
    is_componentwise_linear, multiplicity, multiplicity_upper_bound_check, CwlReport,
};
use veronese_core::{Error, FieldChoice, Monomial, MonomialIdeal, RingCtx};

use crate::document::{IdealDocument, Payload};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BettiSource {
    Formula,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeTarget {
    Degree(u32),
    /// Every degree from the least generator degree to the regularity.
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Build,
    Betti(BettiSource),
    Cwl,
    Polymatroidal(DegreeTarget),
    /// With an order, checks that order only; otherwise searches.
    LinearQuotients(Option<OrderDirection>),
    Split,
    Dual,
    SeqCm,
    MultBound,
    Hilbert,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Build => "build",
            Command::Betti(_) => "betti",
            Command::Cwl => "cwl",
            Command::Polymatroidal(_) => "polymatroidal",
            Command::LinearQuotients(_) => "linear-quotients",
            Command::Split => "split",
            Command::Dual => "dual",
            Command::SeqCm => "seqcm",
            Command::MultBound => "mult-bound",
            Command::Hilbert => "hilbert",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub field: FieldChoice,
    pub grading: GradingKind,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            field: FieldChoice::Prime(32003),
            grading: GradingKind::Total,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub verdict: Option<bool>,
}

impl Report {
    /// 0 on success, 1 on a negative verdict.
    pub fn exit_code(&self) -> i32 {
        if self.verdict == Some(false) {
            1
        } else {
            0
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("reports serialize")
    }
}

/// `"0"` for the rationals or a supported prime.
pub fn parse_field(s: &str) -> Result<FieldChoice, CliError> {
    let p: u32 = s
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("field must be 0 or a prime, got {s:?}")))?;
    FieldChoice::from_characteristic(p).ok_or_else(|| {
        CliError::Usage(format!(
            "unsupported field characteristic {p}; use 0 or one of {:?}",
            veronese_core::scalar::SUPPORTED_PRIMES
        ))
    })
}

pub fn run(command: Command, doc: &IdealDocument, flags: &Flags) -> Result<Report, CliError> {
    let ideal = doc.ideal()?;
    let (mut json, text, verdict) = match command {
        Command::Build => build(&ideal),
        Command::Betti(source) => betti_cmd(doc, &ideal, source, flags)?,
        Command::Cwl => cwl(&ideal, flags)?,
        Command::Polymatroidal(target) => polymatroidal(&ideal, target, flags)?,
        Command::LinearQuotients(order) => linear_quotients(&ideal, order)?,
        Command::Split => split(doc, &ideal, flags)?,
        Command::Dual => dual(&ideal)?,
        Command::SeqCm => seqcm(doc, &ideal, flags)?,
        Command::MultBound => mult_bound(&ideal, flags)?,
        Command::Hilbert => hilbert(&ideal)?,
    };
    let obj = json.as_object_mut().expect("reports are objects");
    obj.insert("command".into(), json!(command.name()));
    obj.insert("field".into(), json!(flags.field.characteristic()));
    obj.insert("verdict".into(), json!(verdict));
    Ok(Report { json, text, verdict })
}

type Parts = (Value, String, Option<bool>);

fn mono(ring: &RingCtx, m: &Monomial) -> String {
    m.display(ring).to_string()
}

fn monos(ring: &RingCtx, ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(|m| mono(ring, m)).collect()
}

fn grading_name(kind: GradingKind) -> &'static str {
    match kind {
        GradingKind::Fine => "fine",
        GradingKind::Block => "block",
        GradingKind::Total => "total",
    }
}

fn table_json(t: &BettiTable) -> Value {
    let entries: Vec<Value> = match t.grading().kind() {
        GradingKind::Total => t.total_triples().into_iter().map(|(i, j, r)| json!([i, j, r])).collect(),
        _ => t.entries().map(|(i, d, r)| json!([i, d, r])).collect(),
    };
    json!({
        "grading": grading_name(t.grading().kind()),
        "entries": entries,
        "pdim": t.pdim(),
        "regularity": t.regularity(),
    })
}

fn table_text(t: &BettiTable) -> String {
    let mut s = String::new();
    if t.grading().kind() != GradingKind::Total {
        for (i, d, r) in t.entries() {
            let d: Vec<String> = d.iter().map(u32::to_string).collect();
            let _ = writeln!(s, "beta_{i},({}) = {r}", d.join(","));
        }
        s.push('\n');
    }
    let _ = write!(s, "{t}");
    s
}

fn poly_text(p: &[i64]) -> String {
    let mut s = String::new();
    for (k, &c) in p.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if s.is_empty() {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        match (k, mag) {
            (0, _) => s.push_str(&mag.to_string()),
            (_, 1) => {}
            _ => s.push_str(&mag.to_string()),
        }
        match k {
            0 => {}
            1 => s.push('t'),
            _ => {
                let _ = write!(s, "t^{k}");
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn nonzero(ideal: &MonomialIdeal) -> Result<(), CliError> {
    if ideal.is_zero() {
        Err(Error::ZeroIdeal.into())
    } else {
        Ok(())
    }
}

fn build(ideal: &MonomialIdeal) -> Parts {
    let ring = ideal.ring();
    let gens = monos(ring, ideal.gens());
    let exps: Vec<&[u32]> = ideal.gens().iter().map(Monomial::exponents).collect();
    let json = json!({
        "variables": ring.names(),
        "blocks": ring.blocks(),
        "generators": gens,
        "exponents": exps,
        "min_degree": ideal.min_gen_degree(),
        "max_degree": ideal.max_gen_degree(),
    });
    let mut text = format!("{ideal}\n{} generators", ideal.ngens());
    if let (Some(lo), Some(hi)) = (ideal.min_gen_degree(), ideal.max_gen_degree()) {
        let _ = write!(text, " in degrees {lo}..{hi}");
    }
    text.push('\n');
    (json, text, None)
}

fn formula_table(doc: &IdealDocument) -> Result<BettiTable, CliError> {
    let no_form = || CliError::Usage(format!("no closed form for a {} document of this shape", doc.payload.kind()));
    match &doc.payload {
        Payload::Veronese(comps) => {
            let set = |s: &[usize]| s.iter().map(|v| v - 1).collect::<BTreeSet<usize>>();
            match comps.as_slice() {
                [c] => Ok(betti_power_formula(set(&c.support).len() as u32, c.power)?),
                [c1, c2] => Ok(betti_two_veronese(&set(&c1.support), &set(&c2.support), c1.power, c2.power)?),
                _ => Err(no_form()),
            }
        }
        Payload::FatPoints(f) => {
            let dims: Vec<u32> = doc.ring.blocks.iter().map(|&b| b as u32 - 1).collect();
            match f.mults.as_slice() {
                [a] => Ok(betti_power_formula(dims.iter().sum(), *a)?),
                [a, b] => Ok(betti_two_fat_points(&dims, *a.max(b), *a.min(b))?),
                _ => Err(no_form()),
            }
        }
        _ => Err(no_form()),
    }
}

fn betti_cmd(doc: &IdealDocument, ideal: &MonomialIdeal, source: BettiSource, flags: &Flags) -> Result<Parts, CliError> {
    nonzero(ideal)?;
    let table = match source {
        BettiSource::Formula => {
            if flags.grading != GradingKind::Total {
                return Err(CliError::Usage("closed forms give total-graded tables only".into()));
            }
            formula_table(doc)?
        }
        BettiSource::Oracle => betti(ideal, flags.field)?.coarsen(flags.grading)?,
    };
    let source = match source {
        BettiSource::Formula => "formula",
        BettiSource::Oracle => "oracle",
    };
    let json = json!({ "source": source, "table": table_json(&table) });
    Ok((json, table_text(&table), None))
}

fn cwl_json(r: &CwlReport) -> Value {
    json!({
        "componentwise_linear": r.componentwise_linear,
        "regularity": r.regularity,
        "failing_degree": r.failing_degree,
        "components": r.components.iter().map(|c| json!({
            "degree": c.degree,
            "generators": c.generators,
            "linear": c.linear,
        })).collect::<Vec<_>>(),
    })
}

fn cwl_text(r: &CwlReport) -> String {
    let mut s = String::new();
    for c in &r.components {
        let _ = writeln!(
            s,
            "degree {}: {} generators, {}",
            c.degree,
            c.generators,
            if c.linear { "linear" } else { "not linear" }
        );
    }
    let _ = writeln!(s, "regularity {}", r.regularity);
    let _ = writeln!(s, "componentwise linear: {}", r.componentwise_linear);
    s
}

fn cwl(ideal: &MonomialIdeal, flags: &Flags) -> Result<Parts, CliError> {
    let r = is_componentwise_linear(ideal, flags.field)?;
    Ok((cwl_json(&r), cwl_text(&r), Some(r.componentwise_linear)))
}

fn witness_json(ring: &RingCtx, w: &ExchangeWitness) -> Value {
    json!({
        "u": mono(ring, &w.u),
        "v": mono(ring, &w.v),
        "i": ring.names()[w.i],
        "tried": w.tried.iter().map(|(j, m, ok)| json!({
            "j": ring.names()[*j],
            "candidate": mono(ring, m),
            "in_ideal": ok,
        })).collect::<Vec<_>>(),
    })
}

fn polymatroidal(ideal: &MonomialIdeal, target: DegreeTarget, flags: &Flags) -> Result<Parts, CliError> {
    nonzero(ideal)?;
    let ring = ideal.ring();
    let alpha = ideal.min_gen_degree().expect("nonzero ideal");
    let degrees: Vec<u32> = match target {
        DegreeTarget::Degree(d) => {
            if d < alpha {
                return Err(CliError::Usage(format!("degree {d} is below the least generator degree {alpha}")));
            }
            vec![d]
        }
        DegreeTarget::All => {
            let reg = betti_total(ideal, flags.field)?.regularity().expect("nonzero table");
            (alpha..=reg.max(alpha as i64) as u32).collect()
        }
    };
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut all = true;
    for d in degrees {
        let comp = ideal.degree_component(d);
        let v = is_polymatroidal(&comp);
        all &= v.polymatroidal;
        let _ = writeln!(
            text,
            "degree {d}: {} generators, {}",
            comp.ngens(),
            if v.polymatroidal { "polymatroidal" } else { "not polymatroidal" }
        );
        if let Some(reason) = &v.reason {
            let _ = writeln!(text, "  {reason}");
        }
        if let Some(w) = &v.witness {
            let _ = writeln!(text, "  witness u = {}, v = {}, i = {}", mono(ring, &w.u), mono(ring, &w.v), ring.names()[w.i]);
            for (j, m, ok) in &w.tried {
                let _ = writeln!(text, "    {}: {} {}", ring.names()[*j], mono(ring, m), if *ok { "in ideal" } else { "not in ideal" });
            }
        }
        rows.push(json!({
            "degree": d,
            "generators": comp.ngens(),
            "polymatroidal": v.polymatroidal,
            "reason": v.reason,
            "witness": v.witness.as_ref().map(|w| witness_json(ring, w)),
        }));
    }
    Ok((json!({ "components": rows }), text, Some(all)))
}

fn certificate_json(ring: &RingCtx, c: &QuotientCertificate) -> Value {
    json!({
        "order": monos(ring, &c.ordered_gens),
        "colons": c.colon_gens_per_step.iter().map(|g| monos(ring, g)).collect::<Vec<_>>(),
        "linear": c.verdict,
        "failing_index": c.failing_index,
    })
}

fn certificate_text(ring: &RingCtx, c: &QuotientCertificate) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "order: {}", monos(ring, &c.ordered_gens).join(", "));
    for (k, g) in c.colon_gens_per_step.iter().enumerate() {
        let _ = writeln!(s, "  colon {}: ({})", k + 2, monos(ring, g).join(", "));
    }
    if let Some(k) = c.failing_index {
        let _ = writeln!(s, "  generator {k} has a nonlinear colon");
    }
    s
}

fn linear_quotients(ideal: &MonomialIdeal, order: Option<OrderDirection>) -> Result<Parts, CliError> {
    nonzero(ideal)?;
    let ring = ideal.ring();
    if let Some(dir) = order {
        let mut gens = ideal.gens().to_vec();
        // keep degrees nondecreasing, order within each degree
        gens.sort_by_key(Monomial::total_degree);
        let mut start = 0;
        while start < gens.len() {
            let d = gens[start].total_degree();
            let end = start + gens[start..].iter().take_while(|m| m.total_degree() == d).count();
            sort_generators(&mut gens[start..end], dir);
            start = end;
        }
        let c = linear_quotients_in_order(&gens)?;
        let json = json!({ "outcome": "checked", "certificate": certificate_json(ring, &c) });
        let mut text = certificate_text(ring, &c);
        let _ = writeln!(text, "linear quotients: {}", c.verdict);
        return Ok((json, text, Some(c.verdict)));
    }
    Ok(match search_linear_quotients(ideal)? {
        QuotientSearch::Found { certificate } => {
            let json = json!({ "outcome": "found", "certificate": certificate_json(ring, &certificate) });
            let text = certificate_text(ring, &certificate) + "linear quotients: true\n";
            (json, text, Some(true))
        }
        QuotientSearch::Exhausted => (
            json!({ "outcome": "exhausted", "certificate": null }),
            "no order has linear quotients\nlinear quotients: false\n".into(),
            Some(false),
        ),
        QuotientSearch::Undetermined => (
            json!({ "outcome": "undetermined", "certificate": null }),
            "standard orders fail and the exhaustive search is over its cap\nlinear quotients: undetermined\n".into(),
            Some(false),
        ),
    })
}

fn split(doc: &IdealDocument, ideal: &MonomialIdeal, flags: &Flags) -> Result<Parts, CliError> {
    let comps = match &doc.payload {
        Payload::Veronese(c) if c.len() == 2 => c,
        _ => return Err(CliError::Usage("split needs a veronese document with two components".into())),
    };
    let set = |s: &[usize]| s.iter().map(|v| v - 1).collect::<BTreeSet<usize>>();
    let (j, k) = (set(&comps[0].support), set(&comps[1].support));
    let (a, b) = (comps[0].power, comps[1].power);
    let ring = ideal.ring();
    let case = classify_two_veronese(&j, &k, a, b)?;
    let pair = build_uv_split(ring, &j, &k, a, b)?;
    let ver = verify_splitting(ideal, &pair);
    let ekf = ekf_identity_check(ideal, &pair, flags.field)?;
    let holds = ver.holds && ekf;
    let json = json!({
        "case": case.tag,
        "swapped": case.swapped,
        "u": monos(ring, pair.u.gens()),
        "v": monos(ring, pair.v.gens()),
        "intersection": monos(ring, pair.intersection.gens()),
        "maps": pair.phi_psi.iter().map(|(w, p, q)| json!([mono(ring, w), mono(ring, p), mono(ring, q)])).collect::<Vec<_>>(),
        "generators_partition": ver.generators_partition,
        "lcm_condition": ver.lcm_condition,
        "subset_condition": ver.subset_condition,
        "subset_method": ver.method,
        "ekf_identity": ekf,
    });
    let mut text = String::new();
    let _ = writeln!(text, "U = {}", pair.u);
    let _ = writeln!(text, "V = {}", pair.v);
    let _ = writeln!(text, "U ∩ V = {}", pair.intersection);
    for (w, p, q) in &pair.phi_psi {
        let _ = writeln!(text, "  {} -> ({}, {})", mono(ring, w), mono(ring, p), mono(ring, q));
    }
    let _ = writeln!(text, "generators partition: {}", ver.generators_partition);
    let _ = writeln!(text, "lcm condition: {}", ver.lcm_condition);
    let _ = writeln!(text, "subset condition ({:?}): {:?}", ver.method, ver.subset_condition);
    let _ = writeln!(text, "betti additivity: {ekf}");
    let _ = writeln!(text, "splitting: {holds}");
    Ok((json, text, Some(holds)))
}

fn dual(ideal: &MonomialIdeal) -> Result<Parts, CliError> {
    let d = ideal.alexander_dual()?;
    let ring = d.ring();
    let json = json!({ "generators": monos(ring, d.gens()) });
    Ok((json, format!("{d}\n"), None))
}

fn seqcm(doc: &IdealDocument, ideal: &MonomialIdeal, flags: &Flags) -> Result<Parts, CliError> {
    let spec = match doc.complex()? {
        Some(spec) => spec,
        None => {
            if !ideal.is_squarefree() {
                return Err(CliError::Usage("seqcm needs a complex or a squarefree ideal".into()));
            }
            let nonfaces = ideal.gens().iter().map(|g| g.support().into_iter().collect()).collect();
            SimplicialComplexSpec::new(ideal.ring().nvars(), nonfaces)?
        }
    };
    let r = is_sequentially_cm(&spec, flags.field)?;
    let d = ideal.alexander_dual()?;
    let json = json!({
        "dual": monos(d.ring(), d.gens()),
        "dual_cwl": cwl_json(&r),
        "sequentially_cm": r.componentwise_linear,
    });
    let mut text = format!("Alexander dual {d}\n");
    text.push_str(&cwl_text(&r));
    let _ = writeln!(text, "sequentially Cohen-Macaulay: {}", r.componentwise_linear);
    Ok((json, text, Some(r.componentwise_linear)))
}

fn mult_bound(ideal: &MonomialIdeal, flags: &Flags) -> Result<Parts, CliError> {
    let r = multiplicity_upper_bound_check(ideal, flags.field)?;
    let cwl = is_componentwise_linear(ideal, flags.field)?.componentwise_linear;
    let json = json!({
        "multiplicity": r.multiplicity,
        "codim": r.codim,
        "max_shifts": r.max_shifts,
        "bound": [r.bound.0, r.bound.1],
        "holds": r.holds,
        "componentwise_linear": cwl,
    });
    let approx = bound_as_f64(&r).map(|x| format!(" ~ {x:.4}")).unwrap_or_default();
    let text = format!(
        "e = {}, codim {}, max shifts {:?}\nbound {}/{}{approx}\nholds: {}\ncomponentwise linear: {cwl}\n",
        r.multiplicity, r.codim, r.max_shifts, r.bound.0, r.bound.1, r.holds
    );
    Ok((json, text, Some(r.holds)))
}

fn hilbert(ideal: &MonomialIdeal) -> Result<Parts, CliError> {
    let rec = hilbert_numerator_recursive(ideal);
    let ie = match hilbert_numerator_inclusion_exclusion(ideal) {
        Ok(p) => Some(p),
        Err(Error::Capacity { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let agree = ie.as_ref().map(|p| *p == rec);
    let summary = if ideal.is_zero() || ideal.is_unit() { None } else { Some(multiplicity(ideal)?) };
    let n = ideal.ring().nvars();
    let json = json!({
        "numerator": rec,
        "numerator_inclusion_exclusion": ie,
        "methods_agree": agree,
        "nvars": n,
        "codim": summary.as_ref().map(|s| s.codim),
        "multiplicity": summary.as_ref().map(|s| s.multiplicity),
    });
    let mut text = format!("HS(R/I) = ({}) / (1-t)^{n}\n", poly_text(&rec));
    if let Some(s) = &summary {
        let _ = writeln!(text, "codim {}, multiplicity {}", s.codim, s.multiplicity);
    }
    match agree {
        Some(a) => {
            let _ = writeln!(text, "inclusion-exclusion agrees: {a}");
        }
        None => text.push_str("inclusion-exclusion skipped: too many generators\n"),
    }
    Ok((json, text, agree))
}
