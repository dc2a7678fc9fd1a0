//! Catalog of Bernoulli identities and their exact verification.
//!
//! Every identity is checked by building both sides exactly and subtracting.
//! A case whose statement admits more than one reading (a misprint or an
//! ambiguous definition) is evaluated under every candidate reading; the
//! first reading is always the one as stated.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bernoulli::GenBernTable;
use crate::error::{Error, Result};
use crate::poly::{AlphaScalar, BiPoly, RatPoly};
use crate::rational::Rational;

mod applications;
mod classical;
pub mod sums;
pub mod theorem;

pub use applications::{agoh_leibniz_rhs, cor1_lhs, nielsen_f10_lhs, nielsen_f10_rhs};
pub use sums::{
    gessel_rhs_t230, gessel_rhs_t4, gessel_rhs_t5, gessel_rhs_tg4, ges1_rhs, p_k1, p_k3, q_k,
    rem1_sum, sum_s, sum_s_at, sum_s_classical, t5_lhs, QBase,
};
pub use theorem::{
    lambda_certify, proof_replay, theorem_lhs, theorem_rhs, LambdaCertificate, ProofReplay,
};

macro_rules! case_ids {
    ($($variant:ident => $name:literal),+ $(,)?) => {
        /// Identifier of one identity family in the catalog.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CaseId {
            $($variant),+
        }

        impl CaseId {
            pub const ALL: &'static [CaseId] = &[$(CaseId::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CaseId::$variant => $name),+
                }
            }
        }

        impl FromStr for CaseId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(CaseId::$variant),)+
                    other => Err(Error::Usage(format!("unknown case id `{other}`"))),
                }
            }
        }
    };
}

case_ids! {
    T3 => "t3",
    T4 => "t4",
    Tg4 => "tg4",
    T5 => "t5",
    Ges1 => "ges1",
    Rem1 => "rem1",
    P1 => "p1",
    E1 => "e1",
    E2 => "e2",
    K5 => "k5",
    K3 => "k3",
    S3 => "s3",
    T230 => "t230",
    T24 => "t24",
    C1 => "c1",
    Vassilev => "vassilev",
    NetoCorrected => "neto_corrected",
    F20 => "f20",
    F21 => "f21",
    F22 => "f22",
    PolySum => "bsum",
    EvenRecurrence => "b2n",
    T9 => "t9",
    T6 => "t6",
    TheoremLe1 => "theorem_le1",
    ProofReplay => "proof_replay",
    LambdaCertify => "lambda_certify",
    App1 => "app1",
    NielsenF10 => "nielsen_f10",
    AgohLeibniz => "agoh_leibniz",
    S1 => "s1",
    S2 => "s2",
    S4 => "s4",
    Cor3a => "cor3a",
    Cor3b => "cor3b",
    S20 => "s20",
    Cor1 => "cor1",
    Fi2 => "fi2",
}

/// Parameter names a case ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    N,
    L,
    R,
    S,
    M,
    Lambda,
    X,
    Y,
    T,
    Beta,
    Alpha,
}

impl CaseId {
    /// Parameters enumerated by a sweep for this case.
    pub fn params(self) -> &'static [Param] {
        use CaseId::*;
        use Param::*;
        match self {
            T3 | S3 | AgohLeibniz => &[N, L, R],
            T4 | Tg4 => &[N, L, R, M],
            T5 | Ges1 => &[N, R, M],
            Rem1 => &[M, R, S],
            P1 | F20 | F21 | F22 | PolySum | EvenRecurrence | K5 | K3 | T9 | T6 => &[N],
            E1 | E2 | Vassilev | NetoCorrected => &[N, L],
            T230 => &[N, L, M],
            T24 | C1 => &[N, M],
            TheoremLe1 | ProofReplay => &[N, L, R, S, Lambda],
            LambdaCertify => &[N, L, R, S],
            App1 => &[N, L, R, S, Lambda, X],
            NielsenF10 => &[N, L, R, M, Beta],
            S1 | S2 | Cor3a => &[N, L, R, X, Y, Alpha],
            S4 => &[N, L, R, S, X, Y],
            Cor3b => &[N, L, R, T],
            S20 => &[N, R, T, Alpha],
            Cor1 => &[N, R, X],
            Fi2 => &[N, R],
        }
    }

    /// Whether the statement is evaluated under several readings.
    pub fn is_adjudicated(self) -> bool {
        use CaseId::*;
        matches!(
            self,
            T24 | K5 | NielsenF10 | Ges1 | C1 | Cor3a | Cor3b | Cor1 | PolySum | EvenRecurrence
        )
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for CaseId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The order parameter: kept symbolic, or fixed to a rational value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum AlphaMode {
    #[default]
    Symbolic,
    Value(Rational),
}

impl AlphaMode {
    /// Specializes an element of Q[a] according to the mode.
    pub fn specialize(&self, p: &AlphaScalar) -> AlphaScalar {
        match self {
            AlphaMode::Symbolic => p.clone(),
            AlphaMode::Value(a) => AlphaScalar::constant(p.eval(a)),
        }
    }

    /// The order itself as an element of Q[a].
    pub fn as_scalar(&self) -> AlphaScalar {
        match self {
            AlphaMode::Symbolic => AlphaScalar::alpha(),
            AlphaMode::Value(a) => AlphaScalar::constant(a.clone()),
        }
    }
}

impl fmt::Display for AlphaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaMode::Symbolic => f.write_str("symbolic"),
            AlphaMode::Value(q) => write!(f, "{q}"),
        }
    }
}

impl FromStr for AlphaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "symbolic" => Ok(AlphaMode::Symbolic),
            other => Ok(AlphaMode::Value(other.parse()?)),
        }
    }
}

impl Serialize for AlphaMode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AlphaMode {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(AlphaMode::Value(Rational::from(n))),
        }
    }
}

/// Parameters selecting one instance of an identity. Only the fields a case
/// uses are set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SumSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<AlphaMode>,
}

/// One identity instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdentityCase {
    pub id: CaseId,
    pub params: SumSpec,
}

impl IdentityCase {
    pub fn new(id: CaseId, params: SumSpec) -> Self {
        IdentityCase { id, params }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// The stated identity holds exactly.
    Verified,
    /// No reading of the identity holds.
    Counterexample,
    /// The parameters fall outside the identity's domain.
    NotApplicable,
    /// The stated reading fails but a corrected reading holds.
    Adjudicated,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::NotApplicable => "not_applicable",
            Status::Adjudicated => "adjudicated",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReadingOutcome {
    pub reading: String,
    pub verified: bool,
}

/// Outcome of evaluating every reading of an ambiguous statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Adjudication {
    pub readings: Vec<ReadingOutcome>,
    /// First reading that verifies, if any.
    pub verifying: Option<String>,
}

#[derive(Debug, Clone)]
pub struct VerificationResult {
    pub case: IdentityCase,
    pub status: Status,
    /// Exact LHS - RHS of the stated reading.
    pub residual: BiPoly,
    pub adjudication: Option<Adjudication>,
    /// Why the case was not applicable.
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl VerificationResult {
    pub fn is_failure(&self) -> bool {
        self.status == Status::Counterexample
    }
}

/// Raw result of evaluating a case before status assignment.
pub(crate) enum Outcome {
    NotApplicable(String),
    Residual(BiPoly),
    /// `(reading, residual)` pairs; the first entry is the stated reading.
    Readings(Vec<(&'static str, BiPoly)>),
}

impl Outcome {
    pub(crate) fn rational(q: Rational) -> Self {
        Outcome::Residual(rat(q))
    }

    pub(crate) fn not_applicable(why: impl Into<String>) -> Self {
        Outcome::NotApplicable(why.into())
    }
}

pub(crate) fn rat(q: Rational) -> BiPoly {
    BiPoly::constant(AlphaScalar::constant(q))
}

pub(crate) fn alpha_res(a: AlphaScalar) -> BiPoly {
    BiPoly::constant(a)
}

pub(crate) fn rat_poly_res(p: &RatPoly) -> BiPoly {
    BiPoly::from_rat_poly(p)
}

/// First nonzero residual of a chain of equalities, or zero.
pub(crate) fn chain(residuals: impl IntoIterator<Item = BiPoly>) -> BiPoly {
    residuals
        .into_iter()
        .find(|p| !p.is_zero())
        .unwrap_or_default()
}

/// Typed access to the parameters a case requires.
pub(crate) struct Args<'a> {
    case: &'static str,
    p: &'a SumSpec,
}

macro_rules! required {
    ($($name:ident: $ty:ty),+) => {
        $(
            pub(crate) fn $name(&self) -> Result<$ty> {
                self.p.$name.clone().ok_or(Error::MissingParam {
                    case: self.case,
                    param: stringify!($name),
                })
            }
        )+
    };
}

impl<'a> Args<'a> {
    required!(n: u32, l: u32, r: u32, s: u32, m: u32, lambda: Rational, x: Rational, y: Rational, t: Rational, beta: Rational);

    pub(crate) fn z(&self) -> Option<Rational> {
        self.p.z.clone()
    }

    pub(crate) fn alpha(&self) -> AlphaMode {
        self.p.alpha.clone().unwrap_or_default()
    }
}

/// Verifies one identity instance against a shared Bernoulli table.
pub fn verify(case: &IdentityCase, table: &GenBernTable) -> Result<VerificationResult> {
    let start = Instant::now();
    let args = Args {
        case: case.id.as_str(),
        p: &case.params,
    };
    let outcome = evaluate(case.id, &args, table)?;
    let (status, residual, adjudication, note) = match outcome {
        Outcome::NotApplicable(why) => (Status::NotApplicable, BiPoly::zero(), None, Some(why)),
        Outcome::Residual(res) => {
            let status = if res.is_zero() {
                Status::Verified
            } else {
                Status::Counterexample
            };
            (status, res, None, None)
        }
        Outcome::Readings(readings) => {
            let outcomes: Vec<ReadingOutcome> = readings
                .iter()
                .map(|(name, res)| ReadingOutcome {
                    reading: name.to_string(),
                    verified: res.is_zero(),
                })
                .collect();
            let verifying = outcomes.iter().find(|o| o.verified).map(|o| o.reading.clone());
            let stated = readings.into_iter().next().map(|(_, r)| r).unwrap_or_default();
            let status = match (stated.is_zero(), verifying.is_some()) {
                (true, _) => Status::Verified,
                (false, true) => Status::Adjudicated,
                (false, false) => Status::Counterexample,
            };
            let adjudication = Adjudication {
                readings: outcomes,
                verifying,
            };
            (status, stated, Some(adjudication), None)
        }
    };
    Ok(VerificationResult {
        case: case.clone(),
        status,
        residual,
        adjudication,
        note,
        elapsed: start.elapsed(),
    })
}

fn evaluate(id: CaseId, a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    use CaseId::*;
    match id {
        T3 | S3 => classical::agoh(a, table),
        T4 => classical::gessel_t4(a, table, false),
        Tg4 => classical::gessel_t4(a, table, true),
        T5 => classical::gessel_t5(a, table),
        Ges1 => classical::ges1(a, table),
        Rem1 => classical::rem1(a),
        P1 => classical::p1(a, table),
        F20 => classical::f20(a, table),
        F21 => classical::f21(a, table),
        F22 => classical::f22(a, table),
        PolySum => classical::poly_sum(a, table),
        EvenRecurrence => classical::even_recurrence(a, table),
        E1 => classical::e1(a, table),
        E2 => classical::e2(a, table),
        K5 => classical::k5(a, table),
        K3 => classical::k3(a, table),
        T230 => classical::t230(a, table),
        T24 => classical::t24(a, table),
        C1 => classical::c1(a, table),
        Vassilev => classical::vassilev(a, table),
        NetoCorrected => classical::neto(a, table),
        T9 => classical::lemma_t9(a, table),
        T6 => classical::lemma_t6(a, table),
        TheoremLe1 => {
            let (n, l, r, s, lam) = (a.n()?, a.l()?, a.r()?, a.s()?, a.lambda()?);
            let res = theorem_lhs(table, n, l, r, s, &lam).sub(&theorem_rhs(table, n, l, r, s, &lam));
            Ok(Outcome::Residual(res))
        }
        ProofReplay => {
            let rep = proof_replay(table, a.n()?, a.l()?, a.r()?, a.s()?, &a.lambda()?);
            Ok(Outcome::Residual(rep.residual()))
        }
        LambdaCertify => {
            let cert = lambda_certify(table, a.n()?, a.l()?, a.r()?, a.s()?);
            Ok(Outcome::Residual(cert.failure.map(|(_, r)| r).unwrap_or_default()))
        }
        App1 => applications::app1(a, table),
        NielsenF10 => applications::nielsen_f10(a, table),
        AgohLeibniz => applications::agoh_leibniz(a),
        S1 => applications::s1(a, table),
        S2 => applications::s2(a, table),
        S4 => applications::s4(a, table),
        Cor3a => applications::cor3a(a, table),
        Cor3b => applications::cor3b(a, table),
        S20 => applications::s20(a, table),
        Cor1 => applications::cor1(a, table),
        Fi2 => applications::fi2(a, table),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_ids_round_trip() {
        for id in CaseId::ALL {
            assert_eq!(id.as_str().parse::<CaseId>().unwrap(), *id);
        }
        assert!("nope".parse::<CaseId>().is_err());
    }

    #[test]
    fn alpha_mode_parsing() {
        assert_eq!("symbolic".parse::<AlphaMode>().unwrap(), AlphaMode::Symbolic);
        assert_eq!(
            "-3/2".parse::<AlphaMode>().unwrap(),
            AlphaMode::Value(Rational::new(-3, 2))
        );
        assert!("3/0".parse::<AlphaMode>().is_err());
        let json = serde_json::to_string(&AlphaMode::Value(Rational::new(1, 2))).unwrap();
        assert_eq!(json, "\"1/2\"");
        let back: AlphaMode = serde_json::from_str("\"symbolic\"").unwrap();
        assert_eq!(back, AlphaMode::Symbolic);
    }

    #[test]
    fn missing_parameter_is_reported() {
        let case = IdentityCase::new(CaseId::T3, SumSpec { n: Some(1), ..Default::default() });
        let err = verify(&case, GenBernTable::global()).unwrap_err();
        assert!(matches!(err, Error::MissingParam { case: "t3", param: "l" }));
    }
}
