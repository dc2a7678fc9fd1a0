//! Identities on classical Bernoulli numbers that specialize `S`, plus the
//! basic Bernoulli laws they rest on.

use crate::bernoulli::{GenBernTable, OmegaOperator};
use crate::error::Result;
use crate::poly::{binom, AlphaScalar, RatPoly, Ring};
use crate::rational::Rational;

use super::sums::{
    gessel_rhs_t230, gessel_rhs_t4, gessel_rhs_t5, gessel_rhs_tg4, ges1_rhs, p_k1,
    p_k3, rem1_sum, sum_s, sum_s_classical, t5_lhs, QBase,
};
use super::{alpha_res, chain, rat, rat_poly_res, Args, Outcome};

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn delta_one(n: u32) -> Rational {
    if n == 1 {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `sum_{k=0}^{n} C(n,k) B_k`.
fn binomial_transform(b: &[Rational], n: u32) -> Rational {
    (0..=n as i64).fold(Rational::zero(), |acc, k| acc + binom(n as i64, k) * &b[k as usize])
}

fn no_m(m: u32) -> Option<Outcome> {
    (m == 0).then(|| Outcome::not_applicable("m must be at least 1"))
}

fn no_even_r(r: u32) -> Option<Outcome> {
    r.is_multiple_of(2).then(|| Outcome::not_applicable("r must be odd"))
}

pub(super) fn agoh(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, l, r) = (a.n()?, a.l()?, a.r()?);
    let b = table.classical_numbers((n + l + r) as usize);
    let zero = Rational::zero();
    Ok(Outcome::rational(sum_s_classical(&b, n, l, r, &Rational::one(), &zero, &zero)))
}

pub(super) fn gessel_t4(a: &Args<'_>, table: &GenBernTable, tg: bool) -> Result<Outcome> {
    let (n, l, r, m) = (a.n()?, a.l()?, a.r()?, a.m()?);
    if let Some(na) = no_m(m) {
        return Ok(na);
    }
    let b = table.classical_numbers((n + l + r) as usize);
    let zero = Rational::zero();
    let lhs = sum_s_classical(&b, n, l, r, &q(m as i64), &zero, &zero);
    let rhs = if tg {
        gessel_rhs_tg4(n, l, r, m)?
    } else {
        gessel_rhs_t4(n, l, r, m)?
    };
    Ok(Outcome::rational(lhs - rhs))
}

pub(super) fn gessel_t5(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, r, m) = (a.n()?, a.r()?, a.m()?);
    if let Some(na) = no_m(m).or_else(|| no_even_r(r)) {
        return Ok(na);
    }
    let b = table.classical_numbers((2 * n + r) as usize);
    Ok(Outcome::rational(t5_lhs(&b, n, r, m) - gessel_rhs_t5(n, r, m)?))
}

/// `S_{n,n,r}(m,0,0) = sum_{k=1}^{m-1} q_k(m,r,n)`. The left side is read
/// either as the full sum or as its first half, and the leading base of
/// `q_k` as `k(m-k)` or `k(k-m)`.
pub(super) fn ges1(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, r, m) = (a.n()?, a.r()?, a.m()?);
    if let Some(na) = no_m(m).or_else(|| no_even_r(r)) {
        return Ok(na);
    }
    let b = table.classical_numbers((2 * n + r) as usize);
    let zero = Rational::zero();
    let full = sum_s_classical(&b, n, n, r, &q(m as i64), &zero, &zero);
    let half = t5_lhs(&b, n, r, m);
    let printed = ges1_rhs(n, r, m, QBase::KTimesMMinusK)?;
    let corrected = ges1_rhs(n, r, m, QBase::KTimesKMinusM)?;
    let t5 = gessel_rhs_t5(n, r, m)?;
    Ok(Outcome::Readings(vec![
        ("stated", rat(&full - &printed)),
        ("half sum", rat(&half - &printed)),
        ("base k(k-m)", rat(&full - &corrected)),
        ("half sum, base k(k-m)", chain([rat(&half - &corrected), rat(t5 - corrected)])),
    ]))
}

pub(super) fn rem1(a: &Args<'_>) -> Result<Outcome> {
    let (m, r, s) = (a.m()?, a.r()?, a.s()?);
    if (r + s) % 2 == 1 {
        return Ok(Outcome::not_applicable("r + s must be even"));
    }
    Ok(Outcome::rational(rem1_sum(m, r, s)))
}

pub(super) fn p1(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let n = a.n()?;
    let b = table.classical_numbers(n as usize);
    let rhs = Rational::sign_power(n as i64) * &b[n as usize];
    Ok(Outcome::rational(binomial_transform(&b, n) - rhs))
}

pub(super) fn f20(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let n = a.n()?;
    let b = table.classical_numbers(n as usize);
    Ok(Outcome::rational(binomial_transform(&b, n) - &b[n as usize] - delta_one(n)))
}

pub(super) fn f21(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let n = a.n()?;
    let b = table.classical(n as usize);
    Ok(Outcome::rational(Rational::sign_power(n as i64) * &b - &b - delta_one(n)))
}

pub(super) fn f22(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let n = a.n()?;
    if n == 0 {
        return Ok(Outcome::not_applicable("n must be at least 1"));
    }
    Ok(Outcome::rational(table.classical((2 * n + 1) as usize)))
}

/// `sum_k C(n,k) B_k(x) = B_n(x) + x^n`, which only holds once `x^n` is read
/// as `n x^{n-1}` (the left side is `B_n(x+1)`).
pub(super) fn poly_sum(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let n = a.n()?;
    let lhs = (0..=n as i64).fold(RatPoly::zero(), |acc, k| {
        acc.add(&table.classical_poly(k as usize).scale_by(&binom(n as i64, k)))
    });
    let bn = table.classical_poly(n as usize);
    let stated = bn.add(&RatPoly::monomial(Rational::one(), n as usize));
    let corrected = match n {
        0 => bn,
        _ => bn.add(&RatPoly::monomial(q(n as i64), n as usize - 1)),
    };
    Ok(Outcome::Readings(vec![
        ("stated", rat_poly_res(&lhs.sub(&stated))),
        ("n x^{n-1}", rat_poly_res(&lhs.sub(&corrected))),
    ]))
}

/// `B_{2n} = -1/(n+1) sum_{j=0}^{2n-1} C(2n+1,j) B_j`, whose factor is
/// `-1/(2n+1)` in the recurrence that actually holds.
pub(super) fn even_recurrence(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let n = a.n()?;
    if n == 0 {
        return Ok(Outcome::not_applicable("n must be at least 1"));
    }
    let ni = n as i64;
    let b = table.classical_numbers(2 * n as usize);
    let sum = (0..2 * ni).fold(Rational::zero(), |acc, j| acc + binom(2 * ni + 1, j) * &b[j as usize]);
    let b2n = &b[2 * n as usize];
    Ok(Outcome::Readings(vec![
        ("stated", rat(b2n + &(&sum / &q(ni + 1)))),
        ("factor 1/(2n+1)", rat(b2n + &(&sum / &q(2 * ni + 1)))),
    ]))
}

pub(super) fn e1(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, l) = (a.n()? as i64, a.l()? as i64);
    let b = table.classical_numbers((n + l) as usize);
    let first = (0..=n).fold(Rational::zero(), |acc, k| acc + binom(n, k) * &b[(l + k) as usize]);
    let second = (0..=l).fold(Rational::zero(), |acc, k| acc + binom(l, k) * &b[(n + k) as usize]);
    Ok(Outcome::rational(first + Rational::sign_power(l + n + 1) * second))
}

pub(super) fn e2(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, l) = (a.n()?, a.l()?);
    let b = table.classical_numbers((n + l) as usize);
    let zero = Rational::zero();
    Ok(Outcome::rational(sum_s_classical(&b, n, l, 0, &Rational::one(), &zero, &zero)))
}

/// `sum_{k=0}^{top} C(n+1,k)(n+k+1) m^{n+1-k} B_{n+k}`.
fn lucas_sum(b: &[Rational], n: u32, top: u32, m: u32) -> Rational {
    let (n, m) = (n as i64, q(m as i64));
    (0..=top as i64).fold(Rational::zero(), |acc, k| {
        acc + m.pow((n + 1 - k) as u32) * binom(n + 1, k) * q(n + k + 1) * &b[(n + k) as usize]
    })
}

/// `(n+1) S_{n,n+1,0}(1,0,0) = sum_{k=0}^{n+1} C(n+1,k)(n+k+1) B_{n+k} = 0`.
pub(super) fn k5(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let n = a.n()?;
    let b = table.classical_numbers((2 * n + 1) as usize);
    let zero = Rational::zero();
    let s = sum_s_classical(&b, n, n + 1, 0, &Rational::one(), &zero, &zero) * q(n as i64 + 1);
    let shown = lucas_sum(&b, n, n + 1, 1);
    Ok(Outcome::Readings(vec![
        ("stated", chain([rat(&s - &shown), rat(shown.clone())])),
        ("displayed sum only", rat(shown)),
    ]))
}

pub(super) fn k3(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let n = a.n()?;
    if n == 0 {
        return Ok(Outcome::not_applicable("n must be at least 1"));
    }
    let b = table.classical_numbers((2 * n + 1) as usize);
    Ok(Outcome::rational(lucas_sum(&b, n, n, 1)))
}

pub(super) fn t230(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, l, m) = (a.n()?, a.l()?, a.m()?);
    if let Some(na) = no_m(m) {
        return Ok(na);
    }
    let b = table.classical_numbers((n + l) as usize);
    let zero = Rational::zero();
    let lhs = sum_s_classical(&b, n, l, 0, &q(m as i64), &zero, &zero);
    Ok(Outcome::rational(lhs - gessel_rhs_t230(n, l, m)))
}

/// `(n+1) S_{n,n+1,r}(m,0,0) = sum_{k=0}^{n+1} m^{n+1-k} C(n+1,k)(n+k+1) B_{n+k}
/// = sum_{k=1}^{m-1} p_k(m,1,n)`, stated with `r = 1`.
pub(super) fn t24(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, m) = (a.n()?, a.m()?);
    if let Some(na) = no_m(m) {
        return Ok(na);
    }
    let b = table.classical_numbers((2 * n + 2) as usize);
    let zero = Rational::zero();
    let mq = q(m as i64);
    let scale = q(n as i64 + 1);
    let shown = lucas_sum(&b, n, n + 1, m);
    let p_sum = (1..m).try_fold(Rational::zero(), |acc, k| Ok::<_, crate::Error>(acc + p_k1(k, m, n)?))?;
    let s1 = sum_s_classical(&b, n, n + 1, 1, &mq, &zero, &zero) * &scale;
    let s0 = sum_s_classical(&b, n, n + 1, 0, &mq, &zero, &zero) * &scale;
    Ok(Outcome::Readings(vec![
        ("stated", chain([rat(&s1 - &shown), rat(&shown - &p_sum)])),
        ("r = 0", chain([rat(&s0 - &shown), rat(&shown - &p_sum)])),
    ]))
}

/// `S_{n,n,3}(m,0,0) := sum_{k=0}^{n+3} ... = sum_{k=1}^{m-1} p_k(m,3,n)`.
pub(super) fn c1(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, m) = (a.n()?, a.m()?);
    if let Some(na) = no_m(m) {
        return Ok(na);
    }
    let b = table.classical_numbers((2 * n + 3) as usize);
    let zero = Rational::zero();
    let full = sum_s_classical(&b, n, n, 3, &q(m as i64), &zero, &zero);
    let half = t5_lhs(&b, n, 3, m);
    let sum_p = |base| {
        (1..m).try_fold(Rational::zero(), |acc, k| Ok::<_, crate::Error>(acc + p_k3(k, m, n, base)?))
    };
    let printed = sum_p(QBase::KTimesMMinusK)?;
    let corrected = sum_p(QBase::KTimesKMinusM)?;
    Ok(Outcome::Readings(vec![
        ("stated", chain([rat(&full - &half), rat(&half - &printed)])),
        ("half sum", rat(&half - &printed)),
        ("half sum, base k(k-m)", rat(half - corrected)),
    ]))
}

pub(super) fn vassilev(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, l) = (a.n()?, a.l()?);
    if n == 0 || l == 0 {
        return Ok(Outcome::not_applicable("n and l must be at least 1"));
    }
    let (ni, li) = (n as i64, l as i64);
    let b = table.classical_numbers((n + l) as usize);
    let first = (0..ni).fold(Rational::zero(), |acc, k| acc + binom(ni, k) * &b[(li + k) as usize]);
    let second = (0..li).fold(Rational::zero(), |acc, k| acc + binom(li, k) * &b[(ni + k) as usize]);
    let direct = first + Rational::sign_power(li + ni + 1) * second;
    let zero = Rational::zero();
    let via_s = sum_s_classical(&b, n, l, 0, &Rational::one(), &zero, &zero)
        - (Rational::one() - Rational::sign_power(li + ni)) * &b[(n + l) as usize];
    Ok(Outcome::Residual(chain([rat(direct), rat(via_s)])))
}

/// `S_{n,l,0}^(a)(a,0,0) = 0`, with the order symbolic or fixed.
pub(super) fn neto(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, l) = (a.n()?, a.l()?);
    let mode = a.alpha();
    let x = mode.as_scalar();
    let zero = AlphaScalar::zero();
    let s = mode.specialize(&sum_s(table, n, l, 0, &x, &zero, &zero));
    // the same sum written with the numbers B_j^(a) directly
    let part = |n: i64, l: i64| {
        (0..=n).fold(AlphaScalar::zero(), |acc, k| {
            acc.add(&x.pow((n - k) as u32).mul(&table.number((l + k) as usize)).scale_by(&binom(n, k)))
        })
    };
    let (ni, li) = (n as i64, l as i64);
    let literal = part(ni, li).add(&part(li, ni).scale_by(&Rational::sign_power(li + ni + 1)));
    Ok(Outcome::Residual(chain([alpha_res(s), alpha_res(mode.specialize(&literal))])))
}

/// `D Omega_a(x^n) = Omega_a(D x^n)`.
pub(super) fn lemma_t9(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let n = a.n()? as usize;
    let xn = RatPoly::monomial(Rational::one(), n);
    let omega = OmegaOperator::new(0, table);
    Ok(Outcome::Residual(omega.apply_rat(&xn).derive(1).sub(&omega.apply_rat(&xn.derive(1)))))
}

/// `Omega_a(Delta x^n) = Omega_{a-1}(D x^n)`.
pub(super) fn lemma_t6(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let n = a.n()? as usize;
    let xn = RatPoly::monomial(Rational::one(), n);
    let lhs = OmegaOperator::new(0, table).apply_rat(&xn.delta());
    let rhs = OmegaOperator::new(-1, table).apply_rat(&xn.derive(1));
    Ok(Outcome::Residual(lhs.sub(&rhs)))
}
