//! JSON carriers for curves and stratum representatives.

use std::str::FromStr;

use kf_core::arith::{
    format_rational, parse_rational, Field, FieldDescriptor, FieldElement, Rational,
};
use kf_core::forms::{BinaryForm, FormSpace, ProjPoint};
use kf_core::strata::{stratum_space, StratumId, StratumParams};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

/// A rational as an integer literal or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

/// A field element: a rational, or its residue coefficients `c₀ + c₁θ + …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Scalar(Scalar),
    Residue(Vec<Scalar>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    /// Monic minimal polynomial, constant term first.
    pub minpoly: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub degree: usize,
    pub basis: Vec<Vec<Coef>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Coef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Coef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Coef>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub stratum: String,
    pub n: usize,
    #[serde(default)]
    pub params: ParamSpec,
}

/// Either input form, after validation.
#[derive(Clone, Debug)]
pub enum Input {
    Curve(FormSpace),
    Stratum(StratumId, StratumParams),
}

impl Input {
    pub fn space(&self) -> CliResult<FormSpace> {
        match self {
            Input::Curve(l) => Ok(l.clone()),
            Input::Stratum(id, p) => Ok(stratum_space(*id, p)?),
        }
    }
}

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::malformed(msg)
}

fn scalar(s: &Scalar) -> CliResult<Rational> {
    match s {
        Scalar::Int(v) => Ok(Rational::from_integer(BigInt::from(*v))),
        Scalar::Text(t) => Ok(parse_rational(t)?),
    }
}

fn integer(s: &Scalar) -> CliResult<BigInt> {
    let q = scalar(s)?;
    if !q.is_integer() {
        return Err(malformed(format!(
            "minimal polynomial coefficients must be integers, got {}",
            format_rational(&q)
        )));
    }
    Ok(q.to_integer())
}

pub fn field_of(spec: &Option<FieldSpec>) -> CliResult<Field> {
    match spec {
        None => Ok(FieldDescriptor::rationals()),
        Some(fs) => {
            let coeffs = fs
                .minpoly
                .iter()
                .map(integer)
                .collect::<CliResult<Vec<_>>>()?;
            Ok(FieldDescriptor::new(coeffs)?)
        }
    }
}

pub fn element(field: &Field, c: &Coef) -> CliResult<FieldElement> {
    match c {
        Coef::Scalar(s) => Ok(FieldElement::from_rational(field, scalar(s)?)),
        Coef::Residue(v) => {
            if v.len() > field.degree() {
                return Err(malformed(format!(
                    "residue has {} coefficients but the field has degree {}",
                    v.len(),
                    field.degree()
                )));
            }
            let coeffs = v.iter().map(scalar).collect::<CliResult<Vec<_>>>()?;
            Ok(FieldElement::from_residue(field, coeffs))
        }
    }
}

fn scalar_of(q: &Rational) -> Scalar {
    if q.is_integer() {
        if let Ok(v) = i64::try_from(q.to_integer()) {
            return Scalar::Int(v);
        }
    }
    Scalar::Text(format_rational(q))
}

/// Canonical wire form of a field element.
pub fn coef_of(x: &FieldElement) -> Coef {
    match x.as_rational() {
        Some(q) if x.field().is_rational() => Coef::Scalar(Scalar::Text(format_rational(&q))),
        _ => Coef::Residue(
            x.residue()
                .iter()
                .map(|q| Scalar::Text(format_rational(q)))
                .collect(),
        ),
    }
}

fn field_spec_of(field: &Field) -> Option<FieldSpec> {
    if field.is_rational() {
        return None;
    }
    let minpoly = field
        .minpoly()
        .iter()
        .map(|c| scalar_of(&Rational::from_integer(c.clone())))
        .collect();
    Some(FieldSpec { minpoly })
}

impl CurveSpec {
    pub fn to_space(&self) -> CliResult<FormSpace> {
        let field = field_of(&self.field)?;
        if self.basis.is_empty() {
            return Err(malformed("basis is empty"));
        }
        let mut forms = Vec::with_capacity(self.basis.len());
        for (i, row) in self.basis.iter().enumerate() {
            if row.len() != self.degree + 1 {
                return Err(malformed(format!(
                    "basis row {i} has {} coefficients, expected {}",
                    row.len(),
                    self.degree + 1
                )));
            }
            let coeffs = row
                .iter()
                .map(|c| element(&field, c))
                .collect::<CliResult<Vec<_>>>()?;
            forms.push(BinaryForm::new(&field, coeffs)?);
        }
        FormSpace::from_basis(&field, self.degree, &forms)
            .map_err(|e| malformed(format!("basis does not describe a linear series: {e}")))
    }

    /// The reduced echelon basis of `l`.
    pub fn of_space(l: &FormSpace) -> CurveSpec {
        CurveSpec {
            field: field_spec_of(l.field()),
            degree: l.degree(),
            basis: l
                .rows()
                .iter()
                .map(|r| r.iter().map(coef_of).collect())
                .collect(),
        }
    }
}

impl StratumSpec {
    pub fn resolve(&self) -> CliResult<(StratumId, StratumParams)> {
        let id = StratumId::from_str(&self.stratum)?;
        let field = field_of(&self.field)?;
        let get = |c: &Option<Coef>| match c {
            Some(c) => element(&field, c),
            None => Ok(FieldElement::zero(&field)),
        };
        let p = StratumParams::new(
            id,
            self.n,
            get(&self.params.a)?,
            get(&self.params.b)?,
            get(&self.params.c)?,
        )?;
        Ok((id, p))
    }
}

/// Parses either input form, telling them apart by the `stratum` key.
pub fn parse_input(text: &str) -> CliResult<Input> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| malformed(format!("malformed JSON: {e}")))?;
    if v.get("stratum").is_some() {
        let s: StratumSpec =
            serde_json::from_value(v).map_err(|e| malformed(format!("bad stratum spec: {e}")))?;
        let (id, p) = s.resolve()?;
        Ok(Input::Stratum(id, p))
    } else {
        let c: CurveSpec =
            serde_json::from_value(v).map_err(|e| malformed(format!("bad curve spec: {e}")))?;
        Ok(Input::Curve(c.to_space()?))
    }
}

fn element_text(field: &Field, s: &str) -> CliResult<FieldElement> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let coeffs = inner
            .split(',')
            .map(|t| parse_rational(t).map_err(CliError::from))
            .collect::<CliResult<Vec<_>>>()?;
        return element(
            field,
            &Coef::Residue(
                coeffs
                    .iter()
                    .map(|q| Scalar::Text(format_rational(q)))
                    .collect(),
            ),
        );
    }
    Ok(FieldElement::from_rational(field, parse_rational(s)?))
}

/// Parses `alpha:beta`; either part may be a rational or a bracketed
/// residue list such as `[0,1]`.
pub fn parse_point(field: &Field, s: &str) -> CliResult<ProjPoint> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| malformed(format!("expected a point as alpha:beta, got {s:?}")))?;
    Ok(ProjPoint::new(
        element_text(field, a)?,
        element_text(field, b)?,
    )?)
}
