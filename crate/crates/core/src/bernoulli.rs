//! Classical and generalized Bernoulli numbers and polynomials.
//!
//! `B_n^(a)(x)` is the coefficient family of `(t/(e^t - 1))^a e^{tx}`, kept
//! symbolic in `a` as elements of Q[a][x].

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::poly::{binom, AlphaScalar, BiPoly, Poly, RatPoly};
use crate::rational::Rational;

/// `[B_0, ..., B_max]` from `B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k`.
pub fn classical_bernoulli_numbers(max: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(max + 1);
    b.push(Rational::one());
    for n in 1..=max {
        let n_i = n as i64;
        let sum = (0..n).fold(Rational::zero(), |acc, k| {
            acc + binom(n_i + 1, k as i64) * &b[k]
        });
        b.push(-(sum / Rational::from(n_i + 1)));
    }
    b
}

/// `B_n(x) = sum_k C(n, k) B_k x^{n-k}` from a classical number table.
pub fn classical_bernoulli_poly(numbers: &[Rational], n: usize) -> RatPoly {
    assert!(numbers.len() > n, "classical table too short for n = {n}");
    let coeffs = (0..=n)
        .map(|j| binom(n as i64, (n - j) as i64) * &numbers[n - j])
        .collect();
    Poly::from_coeffs(coeffs)
}

/// `[B_0^(a), ..., B_max^(a)]`, symbolic in `a`.
///
/// With `f(t) = t/(e^t - 1) = sum a_k t^k` (`a_k = B_k/k!`), the coefficients
/// `c_n` of `f^a` satisfy `n c_n = sum_{k=1}^n ((a+1)k - n) a_k c_{n-k}`,
/// `c_0 = 1`, and `B_n^(a) = n! c_n`.
pub fn gen_bernoulli_numbers_symbolic(max: usize) -> Vec<AlphaScalar> {
    let classical = classical_bernoulli_numbers(max);
    let mut factorial = vec![Rational::one()];
    for k in 1..=max {
        factorial.push(&factorial[k - 1] * &Rational::from(k as i64));
    }
    let series: Vec<Rational> = (0..=max).map(|k| &classical[k] / &factorial[k]).collect();

    let mut c: Vec<AlphaScalar> = Vec::with_capacity(max + 1);
    c.push(AlphaScalar::one());
    for n in 1..=max {
        let mut acc = AlphaScalar::zero();
        for k in 1..=n {
            if series[k].is_zero() {
                continue;
            }
            // (a+1)k - n = k a + (k - n)
            let weight = Poly::from_coeffs(vec![
                Rational::from(k as i64 - n as i64),
                Rational::from(k as i64),
            ]);
            acc = acc.add(&weight.mul(&c[n - k]).scale_by(&series[k]));
        }
        c.push(acc.scale_by(&Rational::new(1, n as i64)));
    }
    c.into_iter()
        .enumerate()
        .map(|(n, cn)| cn.scale_by(&factorial[n]))
        .collect()
}

/// Appell expansion `B_n^(a)(x) = sum_k C(n, k) B_k^(a) x^{n-k}`.
pub fn appell_poly(numbers: &[AlphaScalar], n: usize) -> BiPoly {
    let coeffs = (0..=n)
        .map(|j| numbers[n - j].scale_by(&binom(n as i64, (n - j) as i64)))
        .collect();
    Poly::from_coeffs(coeffs)
}

/// `[B_0^(a), ..., B_max^(a)]` for a fixed integer order `a >= 0`, by raising
/// the truncated series `sum_{k<=max} B_k t^k/k!` to the `a`-th power through
/// repeated multiplication.
pub fn integer_alpha_oracle(max: usize, a: u32) -> Vec<Rational> {
    let classical = classical_bernoulli_numbers(max);
    let mut factorial = vec![Rational::one()];
    for k in 1..=max {
        factorial.push(&factorial[k - 1] * &Rational::from(k as i64));
    }
    let series: Vec<Rational> = (0..=max).map(|k| &classical[k] / &factorial[k]).collect();
    let mut power = vec![Rational::zero(); max + 1];
    power[0] = Rational::one();
    for _ in 0..a {
        let mut next = vec![Rational::zero(); max + 1];
        for (i, p) in power.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, s) in series.iter().enumerate().take(max + 1 - i) {
                next[i + j] = &next[i + j] + &(p * s);
            }
        }
        power = next;
    }
    power
        .into_iter()
        .zip(factorial)
        .map(|(c, f)| c * f)
        .collect()
}

#[derive(Default)]
struct TableInner {
    classical: Vec<Rational>,
    numbers: Vec<AlphaScalar>,
    polys: Vec<Arc<BiPoly>>,
    offset_polys: HashMap<i64, Vec<Arc<BiPoly>>>,
}

/// Memoized table of `B_n^(a)` and `B_n^(a)(x)`, grown on demand.
///
/// Entries are symbolic in `a`, so one table serves every order. Growth
/// happens under a write lock; readers never observe a partially grown table.
pub struct GenBernTable {
    inner: RwLock<TableInner>,
}

impl Default for GenBernTable {
    fn default() -> Self {
        Self::new()
    }
}

impl GenBernTable {
    pub fn new() -> Self {
        let table = GenBernTable {
            inner: RwLock::new(TableInner::default()),
        };
        table.ensure(0);
        table
    }

    pub fn with_max(max_n: usize) -> Self {
        let table = Self::new();
        table.ensure(max_n);
        table
    }

    /// Process-wide shared table.
    pub fn global() -> &'static GenBernTable {
        static TABLE: OnceLock<GenBernTable> = OnceLock::new();
        TABLE.get_or_init(GenBernTable::new)
    }

    /// Largest index currently stored.
    pub fn max_n(&self) -> usize {
        self.inner.read().unwrap().numbers.len() - 1
    }

    /// Grows the table so that every index `<= n` is present.
    pub fn ensure(&self, n: usize) {
        if self.inner.read().unwrap().numbers.len() > n {
            return;
        }
        let mut inner = self.inner.write().unwrap();
        if inner.numbers.len() > n {
            return;
        }
        // Grow geometrically so repeated small extensions stay cheap.
        let target = n.max(2 * inner.numbers.len()).max(8);
        let numbers = gen_bernoulli_numbers_symbolic(target);
        let polys = (0..=target)
            .map(|k| Arc::new(appell_poly(&numbers, k)))
            .collect();
        inner.classical = classical_bernoulli_numbers(target);
        inner.numbers = numbers;
        inner.polys = polys;
        inner.offset_polys.clear();
    }

    /// `B_n^(a)`.
    pub fn number(&self, n: usize) -> AlphaScalar {
        self.ensure(n);
        self.inner.read().unwrap().numbers[n].clone()
    }

    /// `[B_0^(a), ..., B_n^(a)]`.
    pub fn numbers(&self, n: usize) -> Vec<AlphaScalar> {
        self.ensure(n);
        self.inner.read().unwrap().numbers[..=n].to_vec()
    }

    /// Classical `B_n`.
    pub fn classical(&self, n: usize) -> Rational {
        self.ensure(n);
        self.inner.read().unwrap().classical[n].clone()
    }

    pub fn classical_numbers(&self, n: usize) -> Vec<Rational> {
        self.ensure(n);
        self.inner.read().unwrap().classical[..=n].to_vec()
    }

    /// `B_n^(a)(x)`.
    pub fn poly(&self, n: usize) -> Arc<BiPoly> {
        self.ensure(n);
        self.inner.read().unwrap().polys[n].clone()
    }

    /// `B_n^(a + offset)(x)`, obtained by substituting `a -> a + offset`.
    pub fn poly_with_offset(&self, n: usize, offset: i64) -> Arc<BiPoly> {
        if offset == 0 {
            return self.poly(n);
        }
        self.ensure(n);
        {
            let inner = self.inner.read().unwrap();
            if let Some(p) = inner.offset_polys.get(&offset).and_then(|v| v.get(n)) {
                return p.clone();
            }
        }
        let mut inner = self.inner.write().unwrap();
        let shift = Rational::from(offset);
        let base: Vec<Arc<BiPoly>> = inner.polys.clone();
        let entry = inner.offset_polys.entry(offset).or_default();
        while entry.len() <= n {
            let k = entry.len();
            entry.push(Arc::new(base[k].shift_alpha(&shift)));
        }
        entry[n].clone()
    }

    /// `B_n(x)` with rational coefficients.
    pub fn classical_poly(&self, n: usize) -> RatPoly {
        classical_bernoulli_poly(&self.classical_numbers(n), n)
    }

    /// `B_n^(a)(x + c) = sum_k C(n, k) c^{n-k} B_k^(a)(x)`.
    pub fn shifted(&self, n: usize, c: &Rational) -> BiPoly {
        (0..=n).fold(BiPoly::zero(), |acc, k| {
            let w = binom(n as i64, k as i64) * c.pow((n - k) as u32);
            acc.add(&self.poly(k).scale_by(&w))
        })
    }

    /// `B_n^(a)(a + c - x)`, written as `(-1)^n B_n^(a)(x - c)`.
    pub fn reflected(&self, n: usize, c: &Rational) -> BiPoly {
        self.shifted(n, &-c)
            .scale_by(&Rational::sign_power(n as i64))
    }
}

/// `B_n^(a)`, computed directly (no memoization).
pub fn gen_bernoulli_poly(n: usize) -> BiPoly {
    appell_poly(&gen_bernoulli_numbers_symbolic(n), n)
}

/// `B_n^(a)(x + c)`.
pub fn gen_bern_poly_shifted(table: &GenBernTable, n: usize, c: &Rational) -> BiPoly {
    table.shifted(n, c)
}

/// `B_n^(a)(a + c - x)`.
pub fn gen_bern_poly_reflected(table: &GenBernTable, n: usize, c: &Rational) -> BiPoly {
    table.reflected(n, c)
}

/// The umbral operator `Omega_{a + offset}`: the linear map sending `x^k`
/// to `B_k^(a + offset)(x)`.
#[derive(Clone, Copy)]
pub struct OmegaOperator<'t> {
    pub offset: i64,
    pub table: &'t GenBernTable,
}

impl<'t> OmegaOperator<'t> {
    pub fn new(offset: i64, table: &'t GenBernTable) -> Self {
        OmegaOperator { offset, table }
    }

    /// Applies the operator; coefficients of `p` that depend on `a` multiply through.
    pub fn apply(&self, p: &BiPoly) -> BiPoly {
        if let Some(d) = p.degree() {
            self.table.ensure(d);
        }
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(BiPoly::zero(), |acc, (k, c)| {
                let image = self.table.poly_with_offset(k, self.offset);
                let term = match c.as_constant() {
                    Some(q) => image.scale_by(&q),
                    None => image.scale(c),
                };
                acc.add(&term)
            })
    }

    pub fn apply_rat(&self, p: &RatPoly) -> BiPoly {
        self.apply(&BiPoly::from_rat_poly(p))
    }
}
