//! Truncated trivariate formal power series in `x, y, z`.
//!
//! Truncation is by `x`-degree only. The generating function expanded here
//! never produces a `y` or `z` power larger than the matching `x` power, so
//! bounding `x` bounds the whole expansion.

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;
use thiserror::Error;

use crate::counting::{Cell, CountTable};
use crate::scalar::Scalar;
use crate::{Count, Rational};

/// Largest `x`-degree expanded unless the caller raises the bound.
pub const DEFAULT_GF_BOUND: u32 = 12;

/// Exponents of `x`, `y`, `z`.
pub type Exponent = (u32, u32, u32);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("square root needs an x-free part equal to 1")]
    SqrtLeadingTerm,
    #[error("inverse needs an x-free part that is a nonzero constant")]
    InverseLeadingTerm,
    #[error("expansion order {requested} exceeds the bound {bound}")]
    BoundExceeded { requested: u32, bound: u32 },
    #[error("coefficient of x^{n} y^{i} z^{j} is not a nonnegative integer: {value}")]
    NonIntegral {
        n: u32,
        i: u32,
        j: u32,
        value: String,
    },
    #[error("term x^{n} y^{i} z^{j} has a y or z degree above its x degree")]
    DegreeEscape { n: u32, i: u32, j: u32 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Sparse truncated series; no stored term has `x`-degree above `order`
/// and no stored coefficient is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Series3<C> {
    order: u32,
    terms: BTreeMap<Exponent, C>,
}

type Slice<C> = BTreeMap<(u32, u32), C>;

fn add_into<K: Ord + Copy, C: Scalar>(acc: &mut BTreeMap<K, C>, key: K, value: C) {
    let sum = match acc.remove(&key) {
        Some(prev) => prev + value,
        None => value,
    };
    if !sum.is_zero() {
        acc.insert(key, sum);
    }
}

fn slice_mul<C: Scalar>(a: &Slice<C>, b: &Slice<C>, acc: &mut Slice<C>) {
    for (&(ai, aj), ac) in a {
        for (&(bi, bj), bc) in b {
            add_into(acc, (ai + bi, aj + bj), ac.clone() * bc.clone());
        }
    }
}

fn slice_scale<C: Scalar>(s: Slice<C>, c: &C) -> Slice<C> {
    s.into_iter()
        .map(|(k, v)| (k, v * c.clone()))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

impl<C: Scalar> Series3<C> {
    pub fn zero(order: u32) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: u32) -> Self {
        Self::monomial(c, (0, 0, 0), order)
    }

    pub fn monomial(c: C, exp: Exponent, order: u32) -> Self {
        let mut s = Self::zero(order);
        if exp.0 <= order && !c.is_zero() {
            s.terms.insert(exp, c);
        }
        s
    }

    pub fn x(order: u32) -> Self {
        Self::monomial(C::one(), (1, 0, 0), order)
    }

    pub fn y(order: u32) -> Self {
        Self::monomial(C::one(), (0, 1, 0), order)
    }

    pub fn z(order: u32) -> Self {
        Self::monomial(C::one(), (0, 0, 1), order)
    }

    /// Builds a series from terms, summing duplicates and truncating.
    pub fn from_terms(order: u32, terms: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut s = Self::zero(order);
        for (exp, c) in terms {
            if exp.0 <= order {
                add_into(&mut s.terms, exp, c);
            }
        }
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coefficient(&self, n: u32, i: u32, j: u32) -> C {
        self.terms.get(&(n, i, j)).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn truncate(&self, order: u32) -> Self {
        Self::from_terms(
            order.min(self.order),
            self.terms.iter().map(|(k, v)| (*k, v.clone())),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::from_terms(
            order,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(k, v)| (*k, v.clone())),
        )
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(
            self.order,
            self.terms.iter().map(|(k, v)| (*k, v.clone() * c.clone())),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for (&(an, ai, aj), ac) in &self.terms {
            for (&(bn, bi, bj), bc) in &other.terms {
                if an + bn <= order {
                    add_into(
                        &mut out.terms,
                        (an + bn, ai + bi, aj + bj),
                        ac.clone() * bc.clone(),
                    );
                }
            }
        }
        out
    }

    /// Coefficients grouped by `x`-degree, `0..=order`.
    fn slices(&self) -> Vec<Slice<C>> {
        let mut out = vec![Slice::new(); self.order as usize + 1];
        for (&(n, i, j), c) in &self.terms {
            out[n as usize].insert((i, j), c.clone());
        }
        out
    }

    fn from_slices(order: u32, slices: Vec<Slice<C>>) -> Self {
        let terms = slices
            .into_iter()
            .enumerate()
            .flat_map(|(n, s)| s.into_iter().map(move |((i, j), c)| ((n as u32, i, j), c)));
        Self::from_terms(order, terms)
    }

    /// Square root with `x`-free part 1, by the coefficient recursion
    /// `2 r_n = a_n - sum_{k=1}^{n-1} r_k r_{n-k}` on `x`-slices.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let a = self.slices();
        let unit: Slice<C> = [((0, 0), C::one())].into_iter().collect();
        if a[0] != unit {
            return Err(SeriesError::SqrtLeadingTerm);
        }
        let half = C::one() / C::from_int(2);
        let mut r = vec![unit];
        for n in 1..a.len() {
            let mut acc = Slice::new();
            for k in 1..n {
                slice_mul(&r[k], &r[n - k], &mut acc);
            }
            let mut rn = a[n].clone();
            for (k, v) in acc {
                add_into(&mut rn, k, -v);
            }
            r.push(slice_scale(rn, &half));
        }
        Ok(Self::from_slices(self.order, r))
    }

    /// Multiplicative inverse; the `x`-free part must be a nonzero constant.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let a = self.slices();
        let c0 = match a[0].iter().next() {
            Some((&(0, 0), c)) if a[0].len() == 1 => c.clone(),
            _ => return Err(SeriesError::InverseLeadingTerm),
        };
        let inv_c0 = C::one() / c0;
        let neg_inv = -inv_c0.clone();
        let mut b: Vec<Slice<C>> = vec![[((0, 0), inv_c0)].into_iter().collect()];
        for n in 1..a.len() {
            let mut acc = Slice::new();
            for k in 1..=n {
                slice_mul(&a[k], &b[n - k], &mut acc);
            }
            b.push(slice_scale(acc, &neg_inv));
        }
        Ok(Self::from_slices(self.order, b))
    }
}

impl<C: Scalar> Add for &Series3<C> {
    type Output = Series3<C>;
    fn add(self, rhs: Self) -> Series3<C> {
        Series3::add(self, rhs)
    }
}

impl<C: Scalar> Sub for &Series3<C> {
    type Output = Series3<C>;
    fn sub(self, rhs: Self) -> Series3<C> {
        Series3::add(self, &-rhs)
    }
}

impl<C: Scalar> Neg for &Series3<C> {
    type Output = Series3<C>;
    fn neg(self) -> Series3<C> {
        self.scale(&-C::one())
    }
}

impl<C: Scalar> Mul for &Series3<C> {
    type Output = Series3<C>;
    fn mul(self, rhs: Self) -> Series3<C> {
        Series3::mul(self, rhs)
    }
}

impl<T> Series3<Ratio<T>>
where
    T: Clone + Integer + Display + std::str::FromStr,
    Ratio<T>: Scalar,
{
    /// One line `n i j numerator/denominator` per stored term, sorted by
    /// `(n, i, j)`.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (&(n, i, j), c) in &self.terms {
            out.push_str(&format!("{n} {i} {j} {}/{}\n", c.numer(), c.denom()));
        }
        out
    }

    pub fn from_lines(order: u32, text: &str) -> Result<Self, SeriesError> {
        let mut terms = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let bad = |message: &str| SeriesError::Parse {
                line,
                message: message.to_string(),
            };
            if raw.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = raw.split_whitespace().collect();
            let [n, i, j, frac] = fields[..] else {
                return Err(bad("expected `n i j numerator/denominator`"));
            };
            let exp = |s: &str| s.parse::<u32>().map_err(|_| bad("bad exponent"));
            let (num, den) = frac.split_once('/').ok_or_else(|| bad("missing '/'"))?;
            let num: T = num.parse().map_err(|_| bad("bad numerator"))?;
            let den: T = den.parse().map_err(|_| bad("bad denominator"))?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            terms.push(((exp(n)?, exp(i)?, exp(j)?), Ratio::new(num, den)));
        }
        Ok(Self::from_terms(order, terms))
    }
}

impl<C: Scalar + Display> Display for Series3<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (&(n, i, j), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})x^{n}y^{i}z^{j}")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}

/// Expands `2 / (2 - y (1 - x(1-z) - sqrt(1 - 2x(1+z) + x^2 (1-z)^2)))` to
/// `x`-degree `order`, under [`DEFAULT_GF_BOUND`].
pub fn gf_expand<C: Scalar>(order: u32) -> Result<Series3<C>, SeriesError> {
    gf_expand_bounded(order, DEFAULT_GF_BOUND)
}

pub fn gf_expand_bounded<C: Scalar>(order: u32, bound: u32) -> Result<Series3<C>, SeriesError> {
    if order > bound {
        return Err(SeriesError::BoundExceeded {
            requested: order,
            bound,
        });
    }
    let one = Series3::<C>::one(order);
    let two = Series3::constant(C::from_int(2), order);
    let x = Series3::x(order);
    let y = Series3::y(order);
    let z = Series3::z(order);

    let one_plus_z = &one + &z;
    let one_minus_z = &one - &z;
    let x_omz = &x * &one_minus_z;
    let radicand = &(&one - &(&x * &one_plus_z).scale(&C::from_int(2))) + &(&x_omz * &x_omz);
    let inner = &(&one - &x_omz) - &radicand.sqrt()?;
    let gf = &two * &(&two - &(&y * &inner)).inv()?;

    for (&(n, i, j), c) in gf.terms() {
        if i > n || j > n {
            return Err(SeriesError::DegreeEscape { n, i, j });
        }
        match c.as_exact_integer() {
            Some(v) if !v.is_negative() => {}
            _ => {
                return Err(SeriesError::NonIntegral {
                    n,
                    i,
                    j,
                    value: format!("{c:?}"),
                })
            }
        }
    }
    Ok(gf)
}

/// The `x^n y^i z^j` coefficient of the generating function, as an integer.
pub fn gf_coefficient(n: u32, i: u32, j: u32) -> Result<Count, SeriesError> {
    let gf = gf_expand::<Rational>(n)?;
    Ok(integer_coefficient(&gf, (n, i, j)))
}

fn integer_coefficient<C: Scalar>(gf: &Series3<C>, (n, i, j): Exponent) -> BigInt {
    gf.coefficient(n, i, j)
        .as_exact_integer()
        .expect("gf_expand checks integrality")
}

/// Coefficients with `x`-degree `1..=order` as a count table keyed by
/// `(i, n, j)`. Out-of-domain terms are kept so that callers can flag them.
pub fn gf_table(order: u32) -> Result<CountTable<Count>, SeriesError> {
    gf_table_bounded(order, DEFAULT_GF_BOUND)
}

pub fn gf_table_bounded(order: u32, bound: u32) -> Result<CountTable<Count>, SeriesError> {
    let gf = gf_expand_bounded::<Rational>(order, bound)?;
    let mut table = CountTable::new();
    for (&(n, i, j), _) in gf.terms() {
        if n >= 1 {
            table.insert(Cell { n, i, j }, integer_coefficient(&gf, (n, i, j)));
        }
    }
    Ok(table)
}
