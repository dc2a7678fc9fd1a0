//! The sum `S_{n,l,r}^(a)(x, y, z)` and the closed forms it is compared against.

use crate::bernoulli::GenBernTable;
use crate::error::{Error, Result};
use crate::poly::{binom, AlphaScalar, Ring};
use crate::rational::Rational;

/// `S_{n,l,r}^(a)(x, y, z)` with arguments that may themselves depend on `a`:
///
/// `sum_{k=0}^{n+r} x^{n+r-k} C(n+r,k) C(l+k+r,r) B_{l+k}^(a)(y)
///  + (-1)^{l+n+r+1} sum_{k=0}^{l+r} x^{l+r-k} C(l+r,k) C(n+k+r,r) B_{n+k}^(a)(z)`.
pub fn sum_s(
    table: &GenBernTable,
    n: u32,
    l: u32,
    r: u32,
    x: &AlphaScalar,
    y: &AlphaScalar,
    z: &AlphaScalar,
) -> AlphaScalar {
    let first = half_sum(table, n, l, r, x, y);
    let second = half_sum(table, l, n, r, x, z);
    let sign = Rational::sign_power((l + n + r + 1) as i64);
    first.add(&second.scale_by(&sign))
}

/// `sum_{k=0}^{n+r} x^{n+r-k} C(n+r,k) C(l+k+r,r) B_{l+k}^(a)(y)`.
pub(crate) fn half_sum(
    table: &GenBernTable,
    n: u32,
    l: u32,
    r: u32,
    x: &AlphaScalar,
    y: &AlphaScalar,
) -> AlphaScalar {
    let (n, l, r) = (n as i64, l as i64, r as i64);
    (0..=n + r).fold(AlphaScalar::zero(), |acc, k| {
        let w = binom(n + r, k) * binom(l + k + r, r);
        let b = table.poly((l + k) as usize).eval(y);
        acc.add(&x.pow((n + r - k) as u32).mul(&b).scale_by(&w))
    })
}

/// `S_{n,l,r}^(a)(x, y, z)` at rational arguments, specialized at a rational order.
#[allow(clippy::too_many_arguments)]
pub fn sum_s_at(
    table: &GenBernTable,
    n: u32,
    l: u32,
    r: u32,
    alpha: &Rational,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Rational {
    let c = |v: &Rational| AlphaScalar::constant(v.clone());
    sum_s(table, n, l, r, &c(x), &c(y), &c(z)).eval(alpha)
}

/// `B_m(v)` from a table of classical numbers.
pub fn classical_bern_at(classical: &[Rational], m: usize, v: &Rational) -> Rational {
    (0..=m).fold(Rational::zero(), |acc, j| {
        acc + binom(m as i64, j as i64) * &classical[j] * v.pow((m - j) as u32)
    })
}

/// `S_{n,l,r}^(1)(x, y, z)` straight from the classical Bernoulli table.
pub fn sum_s_classical(
    classical: &[Rational],
    n: u32,
    l: u32,
    r: u32,
    x: &Rational,
    y: &Rational,
    z: &Rational,
) -> Rational {
    let part = |n: i64, l: i64, v: &Rational| {
        let r = r as i64;
        (0..=n + r).fold(Rational::zero(), |acc, k| {
            acc + x.pow((n + r - k) as u32)
                * binom(n + r, k)
                * binom(l + k + r, r)
                * classical_bern_at(classical, (l + k) as usize, v)
        })
    };
    let sign = Rational::sign_power((l + n + r + 1) as i64);
    part(n as i64, l as i64, y) + sign * part(l as i64, n as i64, z)
}

/// `coeff * prod base^exp`, where a negative exponent is only tolerated when
/// the coefficient vanishes.
pub(crate) fn guarded_term(
    coeff: Rational,
    factors: &[(&Rational, i64)],
    context: &'static str,
) -> Result<Rational> {
    if coeff.is_zero() {
        return Ok(coeff);
    }
    let mut acc = coeff;
    for &(base, exp) in factors {
        if exp < 0 {
            return Err(Error::ExponentHazard { context, exponent: exp });
        }
        acc = acc * base.pow(exp as u32);
    }
    Ok(acc)
}

/// `(r+1) sum_{k=1}^{m-1} sum_{j=0}^{r+1} (-1)^{l+j-1} C(n+r,j) C(l+r,r+1-j) k^{l+j-1} (m-k)^{n+r-j}`.
pub fn gessel_rhs_t4(n: u32, l: u32, r: u32, m: u32) -> Result<Rational> {
    let (n, l, r, m) = (n as i64, l as i64, r as i64, m as i64);
    let mut acc = Rational::zero();
    for k in 1..m {
        let kq = Rational::from(k);
        let mk = Rational::from(m - k);
        for j in 0..=r + 1 {
            let c = Rational::sign_power(l + j - 1) * binom(n + r, j) * binom(l + r, r + 1 - j);
            acc = acc + guarded_term(c, &[(&kq, l + j - 1), (&mk, n + r - j)], "t4")?;
        }
    }
    Ok(acc * Rational::from(r + 1))
}

/// `(r+1) sum_{k=1}^{m-1} sum_{j=0}^{r+1} C(n+r,j) C(l+r,r+1-j) k^{n+r-j} (k-m)^{l+j-1}`.
pub fn gessel_rhs_tg4(n: u32, l: u32, r: u32, m: u32) -> Result<Rational> {
    let (n, l, r, m) = (n as i64, l as i64, r as i64, m as i64);
    let mut acc = Rational::zero();
    for k in 1..m {
        let kq = Rational::from(k);
        let km = Rational::from(k - m);
        for j in 0..=r + 1 {
            let c = binom(n + r, j) * binom(l + r, r + 1 - j);
            acc = acc + guarded_term(c, &[(&kq, n + r - j), (&km, l + j - 1)], "tg4")?;
        }
    }
    Ok(acc * Rational::from(r + 1))
}

/// Left side of the `n = l`, odd-`r` specialization:
/// `sum_{k=0}^{n+r} m^{n+r-k} C(n+r,k) C(n+k+r,r) B_{n+k}`, which is half of
/// `S_{n,n,r}^(1)(m,0,0)` when `r` is odd.
pub fn t5_lhs(classical: &[Rational], n: u32, r: u32, m: u32) -> Rational {
    let (n, r) = (n as i64, r as i64);
    let m = Rational::from(m);
    (0..=n + r).fold(Rational::zero(), |acc, k| {
        acc + m.pow((n + r - k) as u32)
            * binom(n + r, k)
            * binom(n + k + r, r)
            * &classical[(n + k) as usize]
    })
}

fn require_odd(r: u32, context: &str) -> Result<()> {
    if r % 2 == 1 {
        Ok(())
    } else {
        Err(Error::Usage(format!("{context} requires odd r, got {r}")))
    }
}

/// `(1/2)(r+1) sum_{k=1}^{m-1} sum_{j=0}^{r+1} C(n+r,j) C(n+r,r+1-j) k^{j+n-1} (k-m)^{n+r-j}`, `r` odd.
pub fn gessel_rhs_t5(n: u32, r: u32, m: u32) -> Result<Rational> {
    require_odd(r, "t5")?;
    let (n, r, m) = (n as i64, r as i64, m as i64);
    let mut acc = Rational::zero();
    for k in 1..m {
        let kq = Rational::from(k);
        let km = Rational::from(k - m);
        for j in 0..=r + 1 {
            let c = binom(n + r, j) * binom(n + r, r + 1 - j);
            acc = acc + guarded_term(c, &[(&kq, j + n - 1), (&km, n + r - j)], "t5")?;
        }
    }
    Ok(acc * Rational::new(r + 1, 2))
}

/// Which base the leading term of `q_k(m, r, n)` is raised on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QBase {
    /// `(k(m-k))^{n+(r-1)/2}`, as printed.
    KTimesMMinusK,
    /// `(k(k-m))^{n+(r-1)/2}`.
    KTimesKMinusM,
}

/// `q_k(m,r,n) = (r+1)/2 C(n+r,(r+1)/2)^2 base^{n+(r-1)/2}
///   + (r+1) sum_{j=0}^{(r-1)/2} C(n+r,j) C(n+r,r+1-j) k^{j+n-1} (k-m)^{n+r-j}`, `r` odd.
pub fn q_k(k: u32, m: u32, r: u32, n: u32, base: QBase) -> Result<Rational> {
    require_odd(r, "q_k")?;
    let (k, m, r, n) = (k as i64, m as i64, r as i64, n as i64);
    let h = (r - 1) / 2;
    let b = match base {
        QBase::KTimesMMinusK => Rational::from(k * (m - k)),
        QBase::KTimesKMinusM => Rational::from(k * (k - m)),
    };
    let mid = binom(n + r, h + 1);
    let mut acc = Rational::new(r + 1, 2) * &mid * &mid * b.pow((n + h) as u32);
    let kq = Rational::from(k);
    let km = Rational::from(k - m);
    for j in 0..=h {
        let c = Rational::from(r + 1) * binom(n + r, j) * binom(n + r, r + 1 - j);
        acc = acc + guarded_term(c, &[(&kq, j + n - 1), (&km, n + r - j)], "q_k")?;
    }
    Ok(acc)
}

/// `sum_{k=1}^{m-1} q_k(m, r, n)`.
pub fn ges1_rhs(n: u32, r: u32, m: u32, base: QBase) -> Result<Rational> {
    (1..m).try_fold(Rational::zero(), |acc, k| Ok(acc + q_k(k, m, r, n, base)?))
}

/// `p_k(m,1,n) = (n+1)^2 k^n (k-m)^n + n(n+1) k^{n+1} (k-m)^{n-1}`.
pub fn p_k1(k: u32, m: u32, n: u32) -> Result<Rational> {
    let (k, m, n) = (k as i64, m as i64, n as i64);
    let kq = Rational::from(k);
    let km = Rational::from(k - m);
    let a = guarded_term(Rational::from((n + 1) * (n + 1)), &[(&kq, n), (&km, n)], "p_k(m,1,n)")?;
    let b = guarded_term(Rational::from(n * (n + 1)), &[(&kq, n + 1), (&km, n - 1)], "p_k(m,1,n)")?;
    Ok(a + b)
}

/// `p_k(m,3,n) = q_k(m,3,n) + C(n+3,3)(3n+11)(k^{n+2}(k-m)^n - k^n(k-m)^{n+2})`.
pub fn p_k3(k: u32, m: u32, n: u32, base: QBase) -> Result<Rational> {
    let q = q_k(k, m, 3, n, base)?;
    let (ki, mi, ni) = (k as i64, m as i64, n as i64);
    let kq = Rational::from(ki);
    let km = Rational::from(ki - mi);
    let extra = binom(ni + 3, 3)
        * Rational::from(3 * ni + 11)
        * (kq.pow(n + 2) * km.pow(n) - kq.pow(n) * km.pow(n + 2));
    Ok(q + extra)
}

/// `sum_{k=1}^{m-1} (k^r (k-m)^s - k^s (k-m)^r)`; vanishes whenever `r + s` is even.
pub fn rem1_sum(m: u32, r: u32, s: u32) -> Rational {
    (1..m as i64).fold(Rational::zero(), |acc, k| {
        let kq = Rational::from(k);
        let km = Rational::from(k - m as i64);
        acc + kq.pow(r) * km.pow(s) - kq.pow(s) * km.pow(r)
    })
}

/// `sum_{k=1}^{m-1} ((n+l)k - mn) k^{n-1} (k-m)^{l-1}`; negative powers are
/// well defined because `k` and `k - m` never vanish on the range.
pub fn gessel_rhs_t230(n: u32, l: u32, m: u32) -> Rational {
    let (n, l, m) = (n as i64, l as i64, m as i64);
    (1..m).fold(Rational::zero(), |acc, k| {
        let kq = Rational::from(k);
        let km = Rational::from(k - m);
        acc + Rational::from((n + l) * k - m * n)
            * kq.powi(n - 1).expect("k > 0")
            * km.powi(l - 1).expect("k < m")
    })
}
