//! Corollaries of the main identity: specializations of `λ`, `s` and the
//! arguments that recover classical results.

use crate::bernoulli::{GenBernTable, OmegaOperator};
use crate::error::{Error, Result};
use crate::poly::{binom, AlphaScalar, BiPoly, RatPoly, Ring};
use crate::rational::Rational;

use super::sums::{classical_bern_at, gessel_rhs_t4, guarded_term, sum_s_classical};
use super::theorem::theorem_lhs;
use super::{alpha_res, chain, rat, rat_poly_res, AlphaMode, Args, Outcome};

fn factorial(r: u32) -> Rational {
    (1..=r as i64).fold(Rational::one(), |acc, k| acc * Rational::from(k))
}

fn odd_r(r: u32) -> Option<Outcome> {
    r.is_multiple_of(2).then(|| Outcome::not_applicable("r must be odd"))
}

/// `(r+1) sum_{k=1}^{s} sum_{j=0}^{r+1} C(n+r,j) C(l+r,r+1-j) (u-k)^{l+j-1} (u+v-k)^{n+r-j}`.
fn leibniz_double_sum(n: u32, l: u32, r: u32, s: u32, u: &Rational, v: &Rational, context: &'static str) -> Result<Rational> {
    let (n, l, r) = (n as i64, l as i64, r as i64);
    let mut acc = Rational::zero();
    for k in 1..=s as i64 {
        let a = u - &Rational::from(k);
        let b = &(u + v) - &Rational::from(k);
        for j in 0..=r + 1 {
            let c = binom(n + r, j) * binom(l + r, r + 1 - j);
            acc = acc + guarded_term(c, &[(&a, l + j - 1), (&b, n + r - j)], context)?;
        }
    }
    Ok(acc * Rational::from(r + 1))
}

/// The main identity at order 1, where `Omega_0` is the identity and the
/// right side expands by the Leibniz rule.
pub(super) fn app1(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, l, r, s) = (a.n()?, a.l()?, a.r()?, a.s()?);
    let (lambda, x0) = (a.lambda()?, a.x()?);
    let b = table.classical_numbers((n + l + r) as usize);
    let (ni, li, ri) = (n as i64, l as i64, r as i64);
    let mut lhs = Rational::zero();
    for k in 0..=ni + ri {
        let w = lambda.pow((ni + ri - k) as u32) * binom(ni + ri, k) * binom(li + k + ri, ri);
        lhs = lhs + w * classical_bern_at(&b, (li + k) as usize, &x0);
    }
    let z = &(Rational::from(1 + s) - &lambda) - &x0;
    let sign = Rational::sign_power(li + ni + ri + 1);
    for k in 0..=li + ri {
        let w = lambda.pow((li + ri - k) as u32) * binom(li + ri, k) * binom(ni + k + ri, ri);
        lhs = lhs + &sign * &(w * classical_bern_at(&b, (ni + k) as usize, &z));
    }
    let rhs = leibniz_double_sum(n, l, r, s, &x0, &lambda, "app1")?;
    let mut residuals = vec![rat(&lhs - &rhs)];
    // λ = m, s = m - 1, x = 0 gives back the first Gessel formula
    if x0.is_zero() && lambda.is_integer() && lambda == i64::from(s) + 1 {
        residuals.push(rat(lhs - gessel_rhs_t4(n, l, r, s + 1)?));
    }
    Ok(Outcome::Residual(chain(residuals)))
}

fn f10_parts(table: &GenBernTable, n: u32, l: u32, r: u32, m: u32, beta: &Rational) -> (BiPoly, Vec<(i64, BiPoly)>) {
    let (ni, li, ri) = (n as i64, l as i64, r as i64);
    let lam = Rational::from(m) - beta * &Rational::from(2);
    let mut first = BiPoly::zero();
    for k in 0..=ni + ri {
        let w = lam.pow((ni + ri - k) as u32) * binom(ni + ri, k) * binom(li + k + ri, ri);
        first = first.add(&table.shifted((li + k) as usize, beta).scale_by(&w));
    }
    let arg = Rational::from(m as i64 - 1) - beta;
    let second = (0..=li + ri)
        .map(|k| {
            let w = lam.pow((li + ri - k) as u32) * binom(li + ri, k) * binom(ni + k + ri, ri);
            (k, table.shifted((ni + k) as usize, &arg).scale_by(&w))
        })
        .collect();
    (first, second)
}

/// Left side with the per-term sign `-(-1)^{r+l+k}` on the second sum.
pub fn nielsen_f10_lhs(table: &GenBernTable, n: u32, l: u32, r: u32, m: u32, beta: &Rational) -> BiPoly {
    let (first, second) = f10_parts(table, n, l, r, m, beta);
    second.into_iter().fold(first, |acc, (k, term)| {
        acc.add(&term.scale_by(&-Rational::sign_power((r + l) as i64 + k)))
    })
}

/// Left side with the single sign `(-1)^{l+n+r+1}` in front of the second sum.
fn nielsen_f10_lhs_global(table: &GenBernTable, n: u32, l: u32, r: u32, m: u32, beta: &Rational) -> BiPoly {
    let (first, second) = f10_parts(table, n, l, r, m, beta);
    let sign = Rational::sign_power((l + n + r + 1) as i64);
    second
        .into_iter()
        .fold(first, |acc, (_, term)| acc.add(&term.scale_by(&sign)))
}

/// `Omega_{a-1}(D^{r+1}/r! (x+β-1)^{l+r} (x-β+m-1)^{n+r})`.
pub fn nielsen_f10_rhs(table: &GenBernTable, n: u32, l: u32, r: u32, m: u32, beta: &Rational) -> BiPoly {
    let one = Rational::one();
    let p = RatPoly::linear(beta - &one)
        .power(l + r)
        .mul(&RatPoly::linear(&(Rational::from(m) - beta) - &one).power(n + r));
    let inner = p.derive(r as usize + 1).scale_by(&factorial(r).recip().expect("r! > 0"));
    OmegaOperator::new(-1, table).apply_rat(&inner)
}

pub(super) fn nielsen_f10(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, l, r, m, beta) = (a.n()?, a.l()?, a.r()?, a.m()?, a.beta()?);
    let rhs = nielsen_f10_rhs(table, n, l, r, m, &beta);
    let stated = nielsen_f10_lhs(table, n, l, r, m, &beta);
    let lam = Rational::from(m) - &beta * &Rational::from(2);
    let from_theorem = theorem_lhs(table, n, l, r, 1, &lam).shift_x(&beta);
    let global = nielsen_f10_lhs_global(table, n, l, r, m, &beta);
    Ok(Outcome::Readings(vec![
        ("stated", chain([stated.sub(&rhs), stated.sub(&from_theorem)])),
        ("global sign", chain([global.sub(&rhs), global.sub(&from_theorem)])),
    ]))
}

/// `(n+r) sum_{k=0}^{r} C(n+r-1,k) C(l+r,r-k) x^{n+r-k-1} (x-1)^{l+k}
///  + (l+r) sum_{k=0}^{r} C(l+r-1,k) C(n+r,r-k) x^{n+k} (x-1)^{l+r-k-1}`.
pub fn agoh_leibniz_rhs(n: u32, l: u32, r: u32) -> RatPoly {
    let (n, l, r) = (n as i64, l as i64, r as i64);
    let xm1 = RatPoly::linear(-Rational::one());
    let mono = |e: i64| RatPoly::monomial(Rational::one(), e as usize);
    let mut acc = RatPoly::zero();
    if n + r > 0 {
        for k in 0..=r {
            let c = Rational::from(n + r) * binom(n + r - 1, k) * binom(l + r, r - k);
            if !c.is_zero() {
                acc = acc.add(&mono(n + r - k - 1).mul(&xm1.power((l + k) as u32)).scale_by(&c));
            }
        }
    }
    if l + r > 0 {
        for k in 0..=r {
            let c = Rational::from(l + r) * binom(l + r - 1, k) * binom(n + r, r - k);
            if !c.is_zero() {
                acc = acc.add(&mono(n + k).mul(&xm1.power((l + r - k - 1) as u32)).scale_by(&c));
            }
        }
    }
    acc
}

pub(super) fn agoh_leibniz(a: &Args<'_>) -> Result<Outcome> {
    let (n, l, r) = (a.n()?, a.l()?, a.r()?);
    let p = RatPoly::linear(-Rational::one())
        .power(l + r)
        .mul(&RatPoly::monomial(Rational::one(), (n + r) as usize));
    let lhs = p.derive(r as usize + 1).scale_by(&factorial(r).recip().expect("r! > 0"));
    Ok(Outcome::Residual(rat_poly_res(&lhs.sub(&agoh_leibniz_rhs(n, l, r)))))
}

/// `sum_{k=0}^{top} C(n+r,k) C(l+k+r,r) x^{n+r-k} B_{l+k}^(a)(y)` with `y` in Q[a].
fn partial_half(table: &GenBernTable, n: u32, l: u32, r: u32, top: i64, x: &AlphaScalar, y: &AlphaScalar) -> AlphaScalar {
    let (n, l, r) = (n as i64, l as i64, r as i64);
    (0..=top).fold(AlphaScalar::zero(), |acc, k| {
        let w = binom(n + r, k) * binom(l + k + r, r);
        let b = table.poly((l + k) as usize).eval(y);
        acc.add(&x.pow((n + r - k) as u32).mul(&b).scale_by(&w))
    })
}

fn full_half(table: &GenBernTable, n: u32, l: u32, r: u32, x: &AlphaScalar, y: &AlphaScalar) -> AlphaScalar {
    partial_half(table, n, l, r, (n + r) as i64, x, y)
}

/// `z = a - x - y`, or the reason a user-supplied `z` cannot satisfy it.
fn constrained_z(a: &Args<'_>, mode: &AlphaMode, x: &Rational, y: &Rational) -> std::result::Result<AlphaScalar, Outcome> {
    let target = mode.as_scalar().sub(&AlphaScalar::constant(x + y));
    match (a.z(), mode) {
        (None, _) => Ok(target),
        (Some(_), AlphaMode::Symbolic) => Err(Outcome::not_applicable(
            "x + y + z = alpha has no rational z while alpha is symbolic",
        )),
        (Some(z), AlphaMode::Value(_)) if AlphaScalar::constant(z.clone()) == target => Ok(target),
        (Some(_), AlphaMode::Value(_)) => Err(Outcome::not_applicable("requires x + y + z = alpha")),
    }
}

struct Args3 {
    n: u32,
    l: u32,
    r: u32,
    mode: AlphaMode,
    x: AlphaScalar,
    y: AlphaScalar,
    z: AlphaScalar,
}

fn args3(a: &Args<'_>) -> Result<std::result::Result<Args3, Outcome>> {
    let (n, l, r, x, y) = (a.n()?, a.l()?, a.r()?, a.x()?, a.y()?);
    let mode = a.alpha();
    Ok(constrained_z(a, &mode, &x, &y).map(|z| Args3 {
        n,
        l,
        r,
        mode,
        x: AlphaScalar::constant(x),
        y: AlphaScalar::constant(y),
        z,
    }))
}

/// `(-1)^n sum ... B_{l+k}^(a)(y) = (-1)^{l+r} sum ... B_{n+k}^(a)(z)` on `x + y + z = a`.
pub(super) fn s1(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let p = match args3(a)? {
        Ok(p) => p,
        Err(na) => return Ok(na),
    };
    let lhs = full_half(table, p.n, p.l, p.r, &p.x, &p.y).scale_by(&Rational::sign_power(p.n as i64));
    let rhs = full_half(table, p.l, p.n, p.r, &p.x, &p.z).scale_by(&Rational::sign_power((p.l + p.r) as i64));
    Ok(Outcome::Residual(alpha_res(p.mode.specialize(&lhs.sub(&rhs)))))
}

/// `sum ... x^{n+r-k} B_{l+k}^(a)(y) = sum ... (-x)^{l+r-k} B_{n+k}^(a)(x+y)`, together with
/// the reflection `B_j^(a)(z) = (-1)^j B_j^(a)(x+y)` that links it to the previous form.
pub(super) fn s2(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let p = match args3(a)? {
        Ok(p) => p,
        Err(na) => return Ok(na),
    };
    let xy = p.x.add(&p.y);
    let lhs = full_half(table, p.n, p.l, p.r, &p.x, &p.y);
    let rhs = full_half(table, p.l, p.n, p.r, &p.x.neg(), &xy);
    let mut residuals = vec![alpha_res(p.mode.specialize(&lhs.sub(&rhs)))];
    for j in p.n..=p.n + p.l + p.r {
        let poly = table.poly(j as usize);
        let reflected = poly.eval(&xy).scale_by(&Rational::sign_power(j as i64));
        residuals.push(alpha_res(p.mode.specialize(&poly.eval(&p.z).sub(&reflected))));
    }
    Ok(Outcome::Residual(chain(residuals)))
}

/// `S^(1)_{n,l,r}(x,y,z) = (r+1) sum_k sum_j ...` on `x + y + z = s + 1`.
pub(super) fn s4(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, l, r, s, x, y) = (a.n()?, a.l()?, a.r()?, a.s()?, a.x()?, a.y()?);
    let z = &(Rational::from(s + 1) - &x) - &y;
    if a.z().is_some_and(|given| given != z) {
        return Ok(Outcome::not_applicable("requires x + y + z = s + 1"));
    }
    let b = table.classical_numbers((n + l + r) as usize);
    let lhs = sum_s_classical(&b, n, l, r, &x, &y, &z);
    let rhs = leibniz_double_sum(n, l, r, s, &y, &x, "s4")?;
    Ok(Outcome::rational(lhs - rhs))
}

/// Truncated sums against `(-1)^n C(l+n+2r,r) (B_j^(a)(x+y) - B_j^(a)(y))`, where
/// the index `j` is stated as `n+l+1` and corrected to `n+l+r`.
pub(super) fn cor3a(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let p = match args3(a)? {
        Ok(p) => p,
        Err(na) => return Ok(na),
    };
    if p.r == 0 {
        return Ok(Outcome::not_applicable("r must be at least 1"));
    }
    let (n, l, r) = (p.n, p.l, p.r);
    let lhs = partial_half(table, n, l, r, (n + r) as i64 - 1, &p.x, &p.y)
        .scale_by(&Rational::sign_power(n as i64))
        .add(
            &partial_half(table, l, n, r, (l + r) as i64 - 1, &p.x, &p.z)
                .scale_by(&Rational::sign_power((l + r + 1) as i64)),
        );
    let xy = p.x.add(&p.y);
    let scale = Rational::sign_power(n as i64) * binom((l + n + 2 * r) as i64, r as i64);
    let rhs = |j: u32| {
        let poly = table.poly(j as usize);
        poly.eval(&xy).sub(&poly.eval(&p.y)).scale_by(&scale)
    };
    let res = |j| alpha_res(p.mode.specialize(&lhs.sub(&rhs(j))));
    Ok(Outcome::Readings(vec![
        ("stated", res(n + l + 1)),
        ("index n+l+r", res(n + l + r)),
    ]))
}

/// The previous corollary at order 1 with `x = 1`, `y = t`, `z = -t`; the
/// right side is stated as `(n+l+1) t^{n+l}` and corrected to
/// `(n+l+r) t^{n+l+r-1}`.
pub(super) fn cor3b(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, l, r, t) = (a.n()?, a.l()?, a.r()?, a.t()?);
    if r == 0 {
        return Ok(Outcome::not_applicable("r must be at least 1"));
    }
    let (ni, li, ri) = (n as i64, l as i64, r as i64);
    let b = table.classical_numbers((n + l + r) as usize);
    let neg_t = -&t;
    let first = (0..ni + ri).fold(Rational::zero(), |acc, k| {
        acc + binom(ni + ri, k) * binom(li + k + ri, ri) * classical_bern_at(&b, (li + k) as usize, &t)
    });
    let second = (0..li + ri).fold(Rational::zero(), |acc, k| {
        acc + binom(li + ri, k) * binom(ni + k + ri, ri) * classical_bern_at(&b, (ni + k) as usize, &neg_t)
    });
    let lhs = Rational::sign_power(ni) * first + Rational::sign_power(li + ri + 1) * second;
    let scale = Rational::sign_power(ni) * binom(ni + li + 2 * ri, ri);
    let stated = &scale * &Rational::from(ni + li + 1) * t.pow(n + l);
    let corrected = &scale * &Rational::from(ni + li + ri) * t.pow(n + l + r - 1);
    Ok(Outcome::Readings(vec![
        ("stated", rat(&lhs - &stated)),
        ("power n+l+r-1", rat(lhs - corrected)),
    ]))
}

/// `sum_{k<n+r} C(n+r,k) C(n+k+r,r) (a-2t)^{n+r-k} B_{n+k}^(a)(t) = -C(2n+2r,r) B_{2n+r}^(a)(t)`, `r` odd.
pub(super) fn s20(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, r, t) = (a.n()?, a.r()?, a.t()?);
    if let Some(na) = odd_r(r) {
        return Ok(na);
    }
    let mode = a.alpha();
    let tt = AlphaScalar::constant(t.clone());
    let base = mode.as_scalar().sub(&AlphaScalar::constant(&t * &Rational::from(2)));
    let lhs = partial_half(table, n, n, r, (n + r) as i64 - 1, &base, &tt);
    let rhs = table
        .poly((2 * n + r) as usize)
        .eval(&tt)
        .scale_by(&-binom((2 * n + 2 * r) as i64, r as i64));
    Ok(Outcome::Residual(alpha_res(mode.specialize(&lhs.sub(&rhs)))))
}

/// `sum_{k=0}^{n+r} C(n+r,k) C(n+k+r,r) B_{n+k}(x) / (2^k (1-x)^{n+k-1})`.
pub fn cor1_lhs(b: &[Rational], n: u32, r: u32, x0: &Rational) -> Result<Rational> {
    let one_minus = &Rational::one() - x0;
    if one_minus.is_zero() {
        return Err(Error::Usage("cor1 needs x != 1".into()));
    }
    let (n, r) = (n as i64, r as i64);
    let half = Rational::new(1, 2);
    Ok((0..=n + r).fold(Rational::zero(), |acc, k| {
        acc + binom(n + r, k)
            * binom(n + k + r, r)
            * classical_bern_at(b, (n + k) as usize, x0)
            * half.pow(k as u32)
            * one_minus.powi(1 - n - k).expect("1 - x != 0")
    }))
}

pub(super) fn cor1(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, r, x0) = (a.n()?, a.r()?, a.x()?);
    if let Some(na) = odd_r(r) {
        return Ok(na);
    }
    if x0 == 1 {
        return Ok(Outcome::not_applicable("x must differ from 1"));
    }
    let b = table.classical_numbers((2 * n + r) as usize);
    let lhs = cor1_lhs(&b, n, r, &x0)?;
    let (ni, ri) = (n as i64, r as i64);
    let c = binom(ni + ri, (ri + 1) / 2) * Rational::from(ri + 1);
    let half = Rational::new(1, 2);
    let stated = Rational::sign_power(ni + (ri + 1) / 2) * half.pow(n + r) * &c;
    let corrected = Rational::sign_power(ni + (ri - 1) / 2) * half.pow(n + r + 1) * c;
    Ok(Outcome::Readings(vec![
        ("stated", rat(&lhs - &stated)),
        ("sign and power corrected", rat(lhs - corrected)),
    ]))
}

/// `sum_{k=n}^{2n+r} C(n+r,k-n) C(k+r,r) B_k / 2^k = (-1)^{n+(r-1)/2} (r+1) / 2^{2n+r+1} C(n+r,(r+1)/2)`.
pub(super) fn fi2(a: &Args<'_>, table: &GenBernTable) -> Result<Outcome> {
    let (n, r) = (a.n()?, a.r()?);
    if let Some(na) = odd_r(r) {
        return Ok(na);
    }
    let (ni, ri) = (n as i64, r as i64);
    let b = table.classical_numbers((2 * n + r) as usize);
    let half = Rational::new(1, 2);
    let lhs = (ni..=2 * ni + ri).fold(Rational::zero(), |acc, k| {
        acc + binom(ni + ri, k - ni) * binom(k + ri, ri) * &b[k as usize] * half.pow(k as u32)
    });
    let rhs = Rational::sign_power(ni + (ri - 1) / 2)
        * Rational::from(ri + 1)
        * half.pow(2 * n + r + 1)
        * binom(ni + ri, (ri + 1) / 2);
    Ok(Outcome::rational(lhs - rhs))
}
