//! Both sides of the main identity
//!
//! ```text
//! sum_{k=0}^{n+r} λ^{n+r-k} C(n+r,k) C(l+k+r,r) B_{l+k}^(a)(x)
//!   + (-1)^{l+n+r+1} sum_{k=0}^{l+r} λ^{l+r-k} C(l+r,k) C(n+k+r,r) B_{n+k}^(a)(a+s-λ-x)
//!   = Omega_{a-1}( D^{r+1}/r! sum_{k=1}^{s} (x-k)^{l+r} (x+λ-k)^{n+r} )
//! ```
//!
//! together with a replay of its telescoping proof and a certification over
//! all `λ` by interpolation points.

use num_bigint::BigInt;

use crate::bernoulli::{GenBernTable, OmegaOperator};
use crate::poly::{binom, BiPoly, RatPoly};
use crate::rational::Rational;

fn factorial(r: u32) -> Rational {
    Rational::from((1..=r as i64).map(BigInt::from).product::<BigInt>())
}

pub fn theorem_lhs(table: &GenBernTable, n: u32, l: u32, r: u32, s: u32, lambda: &Rational) -> BiPoly {
    let (ni, li, ri) = (n as i64, l as i64, r as i64);
    let mut acc = BiPoly::zero();
    for k in 0..=ni + ri {
        let w = lambda.pow((ni + ri - k) as u32) * binom(ni + ri, k) * binom(li + k + ri, ri);
        if !w.is_zero() {
            acc = acc.add(&table.poly((li + k) as usize).scale_by(&w));
        }
    }
    // B_{n+k}^(a)(a + s - λ - x)
    let c = Rational::from(s) - lambda;
    let sign = Rational::sign_power(li + ni + ri + 1);
    for k in 0..=li + ri {
        let w = &sign * &(lambda.pow((li + ri - k) as u32) * binom(li + ri, k) * binom(ni + k + ri, ri));
        if !w.is_zero() {
            acc = acc.add(&table.reflected((ni + k) as usize, &c).scale_by(&w));
        }
    }
    acc
}

/// `(x-k)^{l+r} (x+λ-k)^{n+r}`.
fn summand(n: u32, l: u32, r: u32, k: u32, lambda: &Rational) -> RatPoly {
    let k = Rational::from(k);
    RatPoly::linear(-&k)
        .power(l + r)
        .mul(&RatPoly::linear(lambda - &k).power(n + r))
}

/// `sum_{k=1}^{s} (x-k)^{l+r} (x+λ-k)^{n+r}`.
pub fn theorem_rhs_argument(n: u32, l: u32, r: u32, s: u32, lambda: &Rational) -> RatPoly {
    (1..=s).fold(RatPoly::zero(), |acc, k| acc.add(&summand(n, l, r, k, lambda)))
}

pub fn theorem_rhs(table: &GenBernTable, n: u32, l: u32, r: u32, s: u32, lambda: &Rational) -> BiPoly {
    let q = theorem_rhs_argument(n, l, r, s, lambda);
    let inner = q
        .derive(r as usize + 1)
        .scale_by(&factorial(r).recip().expect("r! > 0"));
    OmegaOperator::new(-1, table).apply_rat(&inner)
}

/// The four polynomials produced while replaying the proof.
#[derive(Debug, Clone)]
pub struct ProofReplay {
    /// `Omega_a(Delta P)`.
    pub delta_side: BiPoly,
    /// `Omega_{a-1}(D P)`.
    pub derivative_side: BiPoly,
    pub lhs: BiPoly,
    pub rhs: BiPoly,
    /// `Delta P - (P_0 - P_s)`, which telescoping forces to zero.
    pub telescoping_residual: RatPoly,
}

impl ProofReplay {
    pub fn holds(&self) -> bool {
        self.delta_side == self.derivative_side
            && self.delta_side == self.lhs
            && self.derivative_side == self.rhs
            && self.telescoping_residual.is_zero()
    }

    /// First nonzero difference among the checked equalities.
    pub fn residual(&self) -> BiPoly {
        [
            self.delta_side.sub(&self.derivative_side),
            self.delta_side.sub(&self.lhs),
            self.derivative_side.sub(&self.rhs),
            BiPoly::from_rat_poly(&self.telescoping_residual),
        ]
        .into_iter()
        .find(|p| !p.is_zero())
        .unwrap_or_default()
    }
}

/// `P_k = D^r/r! ((x-k)^{l+r} (x+λ-k)^{n+r})`.
fn p_k(n: u32, l: u32, r: u32, k: u32, lambda: &Rational) -> RatPoly {
    summand(n, l, r, k, lambda)
        .derive(r as usize)
        .scale_by(&factorial(r).recip().expect("r! > 0"))
}

pub fn proof_replay(table: &GenBernTable, n: u32, l: u32, r: u32, s: u32, lambda: &Rational) -> ProofReplay {
    let p = (1..=s).fold(RatPoly::zero(), |acc, k| acc.add(&p_k(n, l, r, k, lambda)));
    let delta_p = p.delta();
    let telescoped = p_k(n, l, r, 0, lambda).sub(&p_k(n, l, r, s, lambda));
    ProofReplay {
        delta_side: OmegaOperator::new(0, table).apply_rat(&delta_p),
        derivative_side: OmegaOperator::new(-1, table).apply_rat(&p.derive(1)),
        lhs: theorem_lhs(table, n, l, r, s, lambda),
        rhs: theorem_rhs(table, n, l, r, s, lambda),
        telescoping_residual: delta_p.sub(&telescoped),
    }
}

/// Outcome of checking the identity at the interpolation points.
#[derive(Debug, Clone)]
pub struct LambdaCertificate {
    pub points: Vec<Rational>,
    /// Residual at the first failing point, if any.
    pub failure: Option<(Rational, BiPoly)>,
}

impl LambdaCertificate {
    pub fn verified(&self) -> bool {
        self.failure.is_none()
    }
}

/// Both sides are polynomials in `λ` of degree at most `n+l+2r+1`, so
/// agreement at `λ = 0, 1, ..., n+l+2r+1` proves agreement for every `λ`.
pub fn lambda_certify(table: &GenBernTable, n: u32, l: u32, r: u32, s: u32) -> LambdaCertificate {
    let count = (n + l + 2 * r + 2) as i64;
    let points: Vec<Rational> = (0..count).map(Rational::from).collect();
    let failure = points.iter().find_map(|lam| {
        let res = theorem_lhs(table, n, l, r, s, lam).sub(&theorem_rhs(table, n, l, r, s, lam));
        (!res.is_zero()).then(|| (lam.clone(), res))
    });
    LambdaCertificate { points, failure }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_bipoly;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn trivial_instances() {
        let t = GenBernTable::with_max(12);
        assert!(theorem_lhs(&t, 0, 0, 0, 0, &Rational::zero()).is_zero());
        for lam in [q(0, 1), q(3, 1), q(-7, 5)] {
            assert!(theorem_lhs(&t, 1, 1, 1, 0, &lam).is_zero());
            assert!(theorem_rhs(&t, 2, 1, 3, 0, &lam).is_zero());
        }
        let lhs = theorem_lhs(&t, 1, 0, 0, 1, &Rational::one());
        assert_eq!(lhs, theorem_rhs(&t, 1, 0, 0, 1, &Rational::one()));
    }

    #[test]
    fn hand_expanded_rhs() {
        // n = l = 1, r = 0, s = 1, λ = 0:
        // Omega_{a-1}(D (x-1)^2) = 2 B_1^(a-1)(x) - 2 = 2x - (a-1) - 2
        let t = GenBernTable::with_max(8);
        let rhs = theorem_rhs(&t, 1, 1, 0, 1, &Rational::zero());
        assert_eq!(rhs, parse_bipoly("2*x - (a - 1) - 2").unwrap());
        assert_eq!(rhs, theorem_lhs(&t, 1, 1, 0, 1, &Rational::zero()));
        // with n = l = r = 0 the summand is constant, so both sides vanish
        assert!(theorem_rhs(&t, 0, 0, 0, 1, &Rational::zero()).is_zero());
        assert!(theorem_lhs(&t, 0, 0, 0, 1, &Rational::zero()).is_zero());
    }

    #[test]
    fn replay_small() {
        let t = GenBernTable::with_max(12);
        let empty = proof_replay(&t, 2, 1, 1, 0, &q(3, 1));
        assert!(empty.delta_side.is_zero() && empty.rhs.is_zero() && empty.lhs.is_zero());
        let rep = proof_replay(&t, 1, 1, 1, 1, &q(2, 1));
        assert!(rep.holds(), "{:?}", rep.residual());
    }

    #[test]
    fn certify_point_counts() {
        let t = GenBernTable::with_max(16);
        let c = lambda_certify(&t, 0, 0, 0, 0);
        assert!(c.verified());
        assert_eq!(c.points.len(), 2);
        let c = lambda_certify(&t, 1, 2, 1, 2);
        assert!(c.verified());
        assert_eq!(c.points.len(), 7);
        let c = lambda_certify(&t, 2, 2, 3, 1);
        assert!(c.verified());
        assert_eq!(c.points.len(), 12);
    }

    #[test]
    fn broken_rhs_is_caught() {
        let t = GenBernTable::with_max(12);
        let lam = q(1, 2);
        let good = theorem_rhs(&t, 1, 2, 1, 2, &lam);
        let bad = good.add(&BiPoly::var().scale_by(&q(1, 1000)));
        assert!(!theorem_lhs(&t, 1, 2, 1, 2, &lam).sub(&bad).is_zero());
        assert!(!good.sub(&BiPoly::one()).is_zero());
    }
}
