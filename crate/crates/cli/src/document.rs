//! Ideal documents: the JSON input format.
//!
//! ```json
//! {"ring": {"blocks": [5]},
//!  "veronese": [{"support": [1, 2, 3], "power": 1}, {"support": [1, 4, 5], "power": 1}]}
//! ```
//!
//! Exactly one payload among `veronese`, `generators`, `fatpoints` and
//! `complex`. Variable and vertex indices are 1-based.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use veronese_core::geometry::{FatPointScheme, SimplicialComplexSpec};
use veronese_core::{veronese_ideal, Monomial, MonomialIdeal, RingCtx, VeroneseComponent, VeroneseSpec};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub blocks: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VeroneseEntry {
    pub support: Vec<usize>,
    pub power: u32,
}

/// A generator as an exponent vector or as text like `"x1*x3^2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorEntry {
    Exponents(Vec<u32>),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FatPointsEntry {
    pub mults: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexEntry {
    pub nonfaces: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Veronese(Vec<VeroneseEntry>),
    Generators(Vec<GeneratorEntry>),
    FatPoints(FatPointsEntry),
    Complex(ComplexEntry),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Veronese(_) => "veronese",
            Payload::Generators(_) => "generators",
            Payload::FatPoints(_) => "fatpoints",
            Payload::Complex(_) => "complex",
        }
    }
}

/// Wire shape; every payload optional so that duplicates can be reported.
#[derive(Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    ring: Option<RingSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    veronese: Option<Vec<VeroneseEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<GeneratorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    fatpoints: Option<FatPointsEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    complex: Option<ComplexEntry>,
}

/// A validated document. Build the ring and ideal with [`IdealDocument::ring`]
/// and [`IdealDocument::ideal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDocument {
    pub ring: RingSpec,
    pub payload: Payload,
}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Invalid {
        field: field.into(),
        message: message.into(),
    }
}

pub fn parse_document(text: &str) -> Result<IdealDocument, CliError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let ring = raw.ring.ok_or_else(|| invalid("ring", "missing"))?;
    let mut payloads = Vec::new();
    if let Some(v) = raw.veronese {
        payloads.push(Payload::Veronese(v));
    }
    if let Some(g) = raw.generators {
        payloads.push(Payload::Generators(g));
    }
    if let Some(f) = raw.fatpoints {
        payloads.push(Payload::FatPoints(f));
    }
    if let Some(c) = raw.complex {
        payloads.push(Payload::Complex(c));
    }
    let payload = match payloads.len() {
        0 => return Err(invalid("document", "needs one of veronese, generators, fatpoints, complex")),
        1 => payloads.pop().expect("one payload"),
        _ => {
            let kinds: Vec<&str> = payloads.iter().map(Payload::kind).collect();
            return Err(invalid("document", format!("duplicate payloads: {}", kinds.join(", "))));
        }
    };
    let doc = IdealDocument { ring, payload };
    doc.validate()?;
    Ok(doc)
}

impl IdealDocument {
    pub fn to_json(&self) -> String {
        let mut raw = RawDocument {
            ring: Some(self.ring.clone()),
            ..RawDocument::default()
        };
        match &self.payload {
            Payload::Veronese(v) => raw.veronese = Some(v.clone()),
            Payload::Generators(g) => raw.generators = Some(g.clone()),
            Payload::FatPoints(f) => raw.fatpoints = Some(f.clone()),
            Payload::Complex(c) => raw.complex = Some(c.clone()),
        }
        serde_json::to_string(&raw).expect("documents serialize")
    }

    pub fn nvars(&self) -> usize {
        self.ring.blocks.iter().sum()
    }

    fn validate(&self) -> Result<(), CliError> {
        let n = self.nvars();
        if self.ring.blocks.is_empty() || self.ring.blocks.contains(&0) {
            return Err(invalid("ring.blocks", "block sizes must be positive"));
        }
        if let Some(names) = &self.ring.names {
            if names.len() != n {
                return Err(invalid("ring.names", format!("{} names for {n} variables", names.len())));
            }
        }
        let index = |field: String, v: usize| -> Result<usize, CliError> {
            if v == 0 || v > n {
                Err(invalid(field, format!("index {v} out of range 1..={n}")))
            } else {
                Ok(v - 1)
            }
        };
        match &self.payload {
            Payload::Veronese(comps) => {
                if comps.is_empty() {
                    return Err(invalid("veronese", "needs at least one component"));
                }
                for (k, c) in comps.iter().enumerate() {
                    if c.support.is_empty() {
                        return Err(invalid(format!("veronese[{k}].support"), "empty support"));
                    }
                    for (m, &v) in c.support.iter().enumerate() {
                        index(format!("veronese[{k}].support[{m}]"), v)?;
                    }
                    if c.power == 0 {
                        return Err(invalid(format!("veronese[{k}].power"), "powers must be positive"));
                    }
                }
            }
            Payload::Generators(gens) => {
                let ring = self.ring()?;
                for (k, g) in gens.iter().enumerate() {
                    to_monomial(&ring, g).map_err(|m| invalid(format!("generators[{k}]"), m))?;
                }
            }
            Payload::FatPoints(f) => {
                if f.mults.is_empty() || f.mults.contains(&0) {
                    return Err(invalid("fatpoints.mults", "multiplicities must be positive"));
                }
            }
            Payload::Complex(c) => {
                for (k, face) in c.nonfaces.iter().enumerate() {
                    if face.is_empty() {
                        return Err(invalid(format!("complex.nonfaces[{k}]"), "empty nonface"));
                    }
                    for (m, &v) in face.iter().enumerate() {
                        index(format!("complex.nonfaces[{k}][{m}]"), v)?;
                    }
                }
            }
        }
        // core-level checks (ring names, fat point counts, antichains)
        self.ideal().map(|_| ())
    }

    pub fn ring(&self) -> Result<Arc<RingCtx>, CliError> {
        let n = self.nvars();
        let names = match (&self.ring.names, &self.payload) {
            (Some(names), _) => names.clone(),
            (None, Payload::FatPoints(_)) => {
                let mut names = Vec::with_capacity(n);
                for (i, &b) in self.ring.blocks.iter().enumerate() {
                    names.extend((0..b).map(|j| format!("x{}_{}", i + 1, j)));
                }
                names
            }
            (None, _) => (1..=n).map(|i| format!("x{i}")).collect(),
        };
        Ok(RingCtx::new(names, self.ring.blocks.clone())?)
    }

    /// Veronese components with 0-based supports.
    pub fn veronese_spec(&self) -> Result<Option<VeroneseSpec>, CliError> {
        Ok(match &self.payload {
            Payload::Veronese(comps) => Some(VeroneseSpec::new(
                self.ring()?,
                comps
                    .iter()
                    .map(|c| VeroneseComponent {
                        support: c.support.iter().map(|v| v - 1).collect(),
                        power: c.power,
                    })
                    .collect(),
            )?),
            Payload::FatPoints(f) => Some(FatPointScheme::in_ring(self.ring()?, f.mults.clone())?.veronese_spec()),
            _ => None,
        })
    }

    pub fn complex(&self) -> Result<Option<SimplicialComplexSpec>, CliError> {
        Ok(match &self.payload {
            Payload::Complex(c) => Some(SimplicialComplexSpec::new(
                self.nvars(),
                c.nonfaces.iter().map(|f| f.iter().map(|v| v - 1).collect::<BTreeSet<_>>()).collect(),
            )?),
            _ => None,
        })
    }

    pub fn ideal(&self) -> Result<MonomialIdeal, CliError> {
        let ring = self.ring()?;
        match &self.payload {
            Payload::Veronese(_) | Payload::FatPoints(_) => {
                Ok(veronese_ideal(&self.veronese_spec()?.expect("veronese payload")))
            }
            Payload::Generators(gens) => {
                let gens = gens
                    .iter()
                    .enumerate()
                    .map(|(k, g)| to_monomial(&ring, g).map_err(|m| invalid(format!("generators[{k}]"), m)))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(MonomialIdeal::new(ring, gens)?)
            }
            Payload::Complex(_) => {
                let spec = self.complex()?.expect("complex payload");
                let gens = veronese_core::geometry::stanley_reisner_ideal(&spec).gens().to_vec();
                Ok(MonomialIdeal::new(ring, gens)?)
            }
        }
    }
}

fn to_monomial(ring: &RingCtx, g: &GeneratorEntry) -> Result<Monomial, String> {
    match g {
        GeneratorEntry::Exponents(e) => {
            if e.len() != ring.nvars() {
                return Err(format!("{} exponents for {} variables", e.len(), ring.nvars()));
            }
            Ok(Monomial::new(e.clone()))
        }
        GeneratorEntry::Text(s) => parse_monomial(ring, s),
    }
}

/// Parses `x1*x3^2` (or `1`) against the ring's variable names.
pub fn parse_monomial(ring: &RingCtx, text: &str) -> Result<Monomial, String> {
    let mut exps = vec![0u32; ring.nvars()];
    let text = text.trim();
    if text == "1" {
        return Ok(Monomial::new(exps));
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, power) = match factor.split_once('^') {
            Some((name, p)) => (name.trim(), p.trim().parse::<u32>().map_err(|_| format!("bad exponent in {factor:?}"))?),
            None => (factor, 1),
        };
        let i = ring.index_of(name).ok_or_else(|| format!("unknown variable {name:?}"))?;
        exps[i] = exps[i].checked_add(power).ok_or("exponent overflow")?;
    }
    Ok(Monomial::new(exps))
}
