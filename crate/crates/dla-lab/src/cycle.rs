//! Closed forms for the cycle graph `C_n`: the `3n - 1` orbit basis, the
//! orbit commutator table, the center, the `(AB)^k` powers and the explicit
//! `su(2)` components.
//!
//! Orbit `X` is `i Σ_j X_j`, `X^{n-1}` is `i Σ_j X_j ⋯ X_{j+n-2}`, and
//! `ZX^tZ`, `YX^tY`, `YX^tZ` are `i` times the sum of the distinct rotations
//! (and, for `YX^tZ`, reflections) of `Z X⋯X Z`, `Y X⋯X Y`, `Y X⋯X Z`. Every
//! distinct string carries coefficient 1.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::fmt::{self, Debug};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, PauliVector};

/// Scalars usable as orbit coefficients.
pub trait Coefficient:
    Clone
    + PartialEq
    + Debug
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;
}

impl Coefficient for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl Coefficient for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Coefficient for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Coefficient for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Basis orbit of `g_{C_n}`; indices lie in `0..=n-2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CycleOrbit {
    X,
    XPow,
    Zxz(usize),
    Yxy(usize),
    Yxz(usize),
}

/// The three indexed families, for extended indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitKind {
    Yxy,
    Zxz,
    Yxz,
}

impl fmt::Display for CycleOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleOrbit::X => f.write_str("X"),
            CycleOrbit::XPow => f.write_str("X^(n-1)"),
            CycleOrbit::Zxz(t) => write!(f, "ZX^{t}Z"),
            CycleOrbit::Yxy(t) => write!(f, "YX^{t}Y"),
            CycleOrbit::Yxz(t) => write!(f, "YX^{t}Z"),
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
    }
    if n > 64 {
        return Err(Error::SizeCap { what: "cycle orbits", cap: 64, n });
    }
    Ok(())
}

impl CycleOrbit {
    pub fn is_valid(&self, n: usize) -> bool {
        match *self {
            CycleOrbit::X | CycleOrbit::XPow => true,
            CycleOrbit::Zxz(t) | CycleOrbit::Yxy(t) | CycleOrbit::Yxz(t) => t + 2 <= n,
        }
    }

    /// `(sign, kind, index)` with `X = -YX^{-1}Y` and `X^{n-1} = ZX^{n-1}Z`.
    fn as_extended(&self, n: usize) -> (i64, OrbitKind, i64) {
        match *self {
            CycleOrbit::X => (-1, OrbitKind::Yxy, -1),
            CycleOrbit::XPow => (1, OrbitKind::Zxz, n as i64 - 1),
            CycleOrbit::Zxz(t) => (1, OrbitKind::Zxz, t as i64),
            CycleOrbit::Yxy(t) => (1, OrbitKind::Yxy, t as i64),
            CycleOrbit::Yxz(t) => (1, OrbitKind::Yxz, t as i64),
        }
    }

    /// Orbit size: `2n` for `YX^tZ`, `n` otherwise.
    pub fn size(&self, n: usize) -> usize {
        match self {
            CycleOrbit::Yxz(_) => 2 * n,
            _ => n,
        }
    }

    /// The distinct strings of the orbit.
    pub fn strings(&self, n: usize) -> Result<Vec<PauliString>> {
        check_n(n)?;
        if !self.is_valid(n) {
            return Err(Error::InvalidArgument(format!("orbit {self} out of range for n = {n}")));
        }
        let word = |j: usize, ends: (Pauli, Pauli), t: usize| {
            let mut sites = vec![(j, ends.0)];
            sites.extend((1..=t).map(|i| ((j + i) % n, Pauli::X)));
            sites.push(((j + t + 1) % n, ends.1));
            PauliString::from_sites(n, &sites)
        };
        let mut set = BTreeSet::new();
        for j in 0..n {
            match *self {
                CycleOrbit::X => {
                    set.insert(PauliString::from_sites(n, &[(j, Pauli::X)])?);
                }
                CycleOrbit::XPow => {
                    let sites: Vec<_> = (0..n - 1).map(|i| ((j + i) % n, Pauli::X)).collect();
                    set.insert(PauliString::from_sites(n, &sites)?);
                }
                CycleOrbit::Zxz(t) => {
                    set.insert(word(j, (Pauli::Z, Pauli::Z), t)?);
                }
                CycleOrbit::Yxy(t) => {
                    set.insert(word(j, (Pauli::Y, Pauli::Y), t)?);
                }
                CycleOrbit::Yxz(t) => {
                    set.insert(word(j, (Pauli::Y, Pauli::Z), t)?);
                    set.insert(word(j, (Pauli::Z, Pauli::Y), t)?);
                }
            }
        }
        Ok(set.into_iter().collect())
    }
}

/// Extended orbit `kind` at any integer index, reduced to the basis. Period
/// `2n`; `YX^{-1}Y = ZX^{-1}Z = -X`, `YX^{n-1}Y = ZX^{n-1}Z = X^{n-1}`,
/// `YX^{-1}Z = YX^{n-1}Z = 0`, and indices in `n..=2n-2` reflect to
/// `2n - k - 2` with `Y ↔ Z` (and a sign flip for `YX^kZ`).
pub fn extended(n: usize, kind: OrbitKind, k: i64) -> Option<(i64, CycleOrbit)> {
    let nn = n as i64;
    let mut k = k.rem_euclid(2 * nn);
    if k == 2 * nn - 1 {
        k = -1;
    }
    if k == -1 {
        return (kind != OrbitKind::Yxz).then_some((-1, CycleOrbit::X));
    }
    if k == nn - 1 {
        return (kind != OrbitKind::Yxz).then_some((1, CycleOrbit::XPow));
    }
    if k <= nn - 2 {
        let t = k as usize;
        return Some(match kind {
            OrbitKind::Yxy => (1, CycleOrbit::Yxy(t)),
            OrbitKind::Zxz => (1, CycleOrbit::Zxz(t)),
            OrbitKind::Yxz => (1, CycleOrbit::Yxz(t)),
        });
    }
    let m = (2 * nn - k - 2) as usize;
    Some(match kind {
        OrbitKind::Yxy => (1, CycleOrbit::Zxz(m)),
        OrbitKind::Zxz => (1, CycleOrbit::Yxy(m)),
        OrbitKind::Yxz => (-1, CycleOrbit::Yxz(m)),
    })
}

// Extended-index commutator table.
fn table(n: usize, a: OrbitKind, s: i64, b: OrbitKind, t: i64) -> Vec<(i64, CycleOrbit)> {
    use OrbitKind::*;
    let raw: Vec<(i64, OrbitKind, i64)> = match (a, b) {
        (Yxy, Yxy) => vec![(-2, Yxz, s - t - 1)],
        (Yxy, Zxz) => vec![(-2, Yxz, s + t + 1)],
        (Yxy, Yxz) => vec![(4, Zxz, t - s - 1), (-4, Yxy, t + s + 1)],
        (Zxz, Yxy) => vec![(2, Yxz, s + t + 1)],
        (Zxz, Zxz) => vec![(2, Yxz, s - t - 1)],
        (Zxz, Yxz) => vec![(4, Zxz, t + s + 1), (-4, Yxy, t - s - 1)],
        (Yxz, Yxy) => vec![(4, Yxy, t + s + 1), (-4, Zxz, s - t - 1)],
        (Yxz, Zxz) => vec![(4, Yxy, s - t - 1), (-4, Zxz, t + s + 1)],
        (Yxz, Yxz) => vec![],
    };
    raw.into_iter().filter_map(|(c, kind, k)| extended(n, kind, k).map(|(sign, o)| (c * sign, o))).collect()
}

fn bracket_terms(n: usize, a: &CycleOrbit, b: &CycleOrbit) -> Vec<(i64, CycleOrbit)> {
    let (sa, ka, ia) = a.as_extended(n);
    let (sb, kb, ib) = b.as_extended(n);
    let mut out: BTreeMap<CycleOrbit, i64> = BTreeMap::new();
    for (c, o) in table(n, ka, ia, kb, ib) {
        *out.entry(o).or_insert(0) += c * sa * sb;
    }
    out.into_iter().filter(|&(_, c)| c != 0).map(|(o, c)| (c, o)).collect()
}

/// `[a, b]` in orbit coordinates, exact.
pub fn orbit_bracket(n: usize, a: CycleOrbit, b: CycleOrbit) -> Result<CycleOrbitSum<i64>> {
    let a = CycleOrbitSum::unit(n, a)?;
    let b = CycleOrbitSum::unit(n, b)?;
    a.bracket(&b)
}

/// All `3n - 1` basis orbits.
pub fn cycle_basis(n: usize) -> Result<Vec<CycleOrbit>> {
    check_n(n)?;
    let mut out = vec![CycleOrbit::X, CycleOrbit::XPow];
    for t in 0..=n - 2 {
        out.extend([CycleOrbit::Zxz(t), CycleOrbit::Yxy(t), CycleOrbit::Yxz(t)]);
    }
    Ok(out)
}

/// Sparse combination of cycle orbits.
#[derive(Clone, PartialEq)]
pub struct CycleOrbitSum<T> {
    n: usize,
    terms: BTreeMap<CycleOrbit, T>,
}

impl<T: Coefficient> Debug for CycleOrbitSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(o, c)| (o.to_string(), c))).finish()
    }
}

impl<T: Coefficient> CycleOrbitSum<T> {
    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n, terms: BTreeMap::new() })
    }

    pub fn unit(n: usize, o: CycleOrbit) -> Result<Self> {
        let mut s = Self::zero(n)?;
        s.add_term(o, T::from_i64(1))?;
        Ok(s)
    }

    pub fn from_terms<I: IntoIterator<Item = (CycleOrbit, T)>>(n: usize, terms: I) -> Result<Self> {
        let mut s = Self::zero(n)?;
        for (o, c) in terms {
            s.add_term(o, c)?;
        }
        Ok(s)
    }

    /// Adds `c` times the extended orbit `kind` at index `k`.
    pub fn add_extended(&mut self, kind: OrbitKind, k: i64, c: T) {
        if let Some((sign, o)) = extended(self.n, kind, k) {
            self.add_unchecked(o, T::from_i64(sign) * c);
        }
    }

    pub fn add_term(&mut self, o: CycleOrbit, c: T) -> Result<()> {
        if !o.is_valid(self.n) {
            return Err(Error::InvalidArgument(format!("orbit {o} out of range for n = {}", self.n)));
        }
        self.add_unchecked(o, c);
        Ok(())
    }

    fn add_unchecked(&mut self, o: CycleOrbit, c: T) {
        let v = match self.terms.remove(&o) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(o, v);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CycleOrbit, &T)> {
        self.terms.iter()
    }

    pub fn get(&self, o: &CycleOrbit) -> T {
        self.terms.get(o).cloned().unwrap_or_else(T::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &T) -> Self {
        let mut out = Self { n: self.n, terms: BTreeMap::new() };
        for (o, v) in &self.terms {
            out.add_unchecked(*o, v.clone() * c.clone());
        }
        out
    }

    fn same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let mut out = self.clone();
        for (o, v) in &other.terms {
            out.add_unchecked(*o, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let mut out = self.clone();
        for (o, v) in &other.terms {
            out.add_unchecked(*o, -v.clone());
        }
        Ok(out)
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let mut out = Self { n: self.n, terms: BTreeMap::new() };
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                for (c, o) in bracket_terms(self.n, a, b) {
                    out.add_unchecked(o, T::from_i64(c) * ca.clone() * cb.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn map<U: Coefficient>(&self, f: impl Fn(&T) -> U) -> CycleOrbitSum<U> {
        let mut out = CycleOrbitSum { n: self.n, terms: BTreeMap::new() };
        for (o, v) in &self.terms {
            out.add_unchecked(*o, f(v));
        }
        out
    }

    /// Raw Pauli coefficients.
    pub fn expand_terms(&self) -> Result<Vec<(PauliString, T)>> {
        let mut out = Vec::new();
        for (o, c) in &self.terms {
            out.extend(o.strings(self.n)?.into_iter().map(|p| (p, c.clone())));
        }
        Ok(out)
    }
}

impl CycleOrbitSum<f64> {
    pub fn max_abs(&self) -> f64 {
        self.terms.values().fold(0.0, |m, v| m.max(v.abs()))
    }
}

impl<T: Coefficient + Into<BigInt>> CycleOrbitSum<T> {
    pub fn expand(&self) -> Result<PauliVector> {
        let terms = self.expand_terms()?;
        PauliVector::from_terms(self.n, terms.into_iter().map(|(p, c)| (p, BigRational::from_integer(c.into()))))
    }
}

impl CycleOrbitSum<BigInt> {
    pub fn to_f64(&self) -> CycleOrbitSum<f64> {
        self.map(|c| c.to_f64().unwrap_or(f64::NAN))
    }
}

/// `re + i·im`, the complex combinations of orbits used for `U_k`, `V_k`
/// and `H_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexOrbitSum {
    pub re: CycleOrbitSum<f64>,
    pub im: CycleOrbitSum<f64>,
}

impl ComplexOrbitSum {
    pub fn zero(n: usize) -> Result<Self> {
        Ok(Self { re: CycleOrbitSum::zero(n)?, im: CycleOrbitSum::zero(n)? })
    }

    pub fn real(re: CycleOrbitSum<f64>) -> Result<Self> {
        let n = re.n();
        Ok(Self { re, im: CycleOrbitSum::zero(n)? })
    }

    pub fn imaginary(im: CycleOrbitSum<f64>) -> Result<Self> {
        let n = im.n();
        Ok(Self { re: CycleOrbitSum::zero(n)?, im })
    }

    /// Multiplies by `a + ib`.
    pub fn scaled(&self, a: f64, b: f64) -> Result<Self> {
        Ok(Self { re: self.re.scaled(&a).sub(&self.im.scaled(&b))?, im: self.re.scaled(&b).add(&self.im.scaled(&a))? })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self { re: self.re.add(&other.re)?, im: self.im.add(&other.im)? })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self { re: self.re.sub(&other.re)?, im: self.im.sub(&other.im)? })
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            re: self.re.bracket(&other.re)?.sub(&self.im.bracket(&other.im)?)?,
            im: self.re.bracket(&other.im)?.add(&self.im.bracket(&other.re)?)?,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.re.is_empty() && self.im.is_empty()
    }

    pub fn max_abs(&self) -> f64 {
        self.re.max_abs().max(self.im.max_abs())
    }
}

/// The two generators `A = X` and `B = ZZ`.
pub fn generators<T: Coefficient>(n: usize) -> Result<(CycleOrbitSum<T>, CycleOrbitSum<T>)> {
    Ok((CycleOrbitSum::unit(n, CycleOrbit::X)?, CycleOrbitSum::unit(n, CycleOrbit::Zxz(0))?))
}

/// Basis `(c_1, c_2)` of the center.
pub fn cycle_center(n: usize) -> Result<(CycleOrbitSum<i64>, CycleOrbitSum<i64>)> {
    check_n(n)?;
    let mut c1 = CycleOrbitSum::unit(n, CycleOrbit::X)?.scaled(&-1);
    let mut c2 = CycleOrbitSum::zero(n)?;
    let pair = |s: &mut CycleOrbitSum<i64>, t: usize| -> Result<()> {
        s.add_term(CycleOrbit::Zxz(t), 1)?;
        s.add_term(CycleOrbit::Yxy(t), 1)
    };
    if n % 2 == 1 {
        for t in 1..=(n - 1) / 2 {
            pair(&mut c1, 2 * t - 1)?;
        }
        c2.add_term(CycleOrbit::XPow, 1)?;
        for t in 0..=(n - 3) / 2 {
            pair(&mut c2, 2 * t)?;
        }
    } else {
        c1.add_term(CycleOrbit::XPow, 1)?;
        for t in 1..=(n - 2) / 2 {
            pair(&mut c1, 2 * t - 1)?;
        }
        for t in 0..=(n - 2) / 2 {
            pair(&mut c2, 2 * t)?;
        }
    }
    Ok((c1, c2))
}

/// `(AB)^k = (ad_A ad_B)^{k-1} [A, B]` with `A = X`, `B = ZZ`, by explicit
/// bracketing.
pub fn ab_power(n: usize, k: usize) -> Result<CycleOrbitSum<BigInt>> {
    check_n(n)?;
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("(AB)^k needs 1 <= k <= n, got k = {k}")));
    }
    let (a, b) = generators::<BigInt>(n)?;
    let mut p = a.bracket(&b)?;
    for _ in 1..k {
        p = a.bracket(&b.bracket(&p)?)?;
    }
    Ok(p)
}

/// `c_{k,j}` for `k = 1..=n` (row `k - 1`) and `j = 0..=n-2`, from
/// `c_{1,0} = 2` and `c_{k,j} = 8(c_{k-1,j-1} + c_{k-1,j+1})`.
pub fn ab_power_coeffs(n: usize) -> Result<Vec<Vec<BigInt>>> {
    check_n(n)?;
    let width = n - 1;
    let mut rows = vec![vec![BigInt::zero(); width]];
    rows[0][0] = BigInt::from(2);
    for k in 2..=n {
        let prev = &rows[k - 2];
        let row = (0..width)
            .map(|j| {
                let left = if j >= 1 { prev[j - 1].clone() } else { BigInt::zero() };
                let right = if j + 1 < width { prev[j + 1].clone() } else { BigInt::zero() };
                (left + right) * 8
            })
            .collect();
        rows.push(row);
    }
    Ok(rows)
}

/// `c_{k,j} = (2^{4k-2}/n) Σ_{j'} sin((j+1)j'π/n) sin(j'π/n) cos^{k-1}(j'π/n)`.
pub fn ab_power_coeff_trig(n: usize, k: usize, j: usize) -> f64 {
    let nf = n as f64;
    let s: f64 = (1..n)
        .map(|jp| {
            let th = jp as f64 * PI / nf;
            ((j + 1) as f64 * th).sin() * th.sin() * th.cos().powi(k as i32 - 1)
        })
        .sum();
    2f64.powi(4 * k as i32 - 2) / nf * s
}

/// Elementary symmetric polynomials `σ_0..=σ_m` of `values`.
pub fn elementary_symmetric(values: &[f64]) -> Vec<f64> {
    let mut sigma = vec![0.0; values.len() + 1];
    sigma[0] = 1.0;
    for (i, v) in values.iter().enumerate() {
        for m in (1..=i + 1).rev() {
            sigma[m] += sigma[m - 1] * v;
        }
    }
    sigma
}

/// `λ_k = 16 cos(kπ/n)` for `k = 1..n`.
pub fn lambdas(n: usize) -> Vec<f64> {
    (1..n).map(|k| 16.0 * (k as f64 * PI / n as f64).cos()).collect()
}

/// `a_k` (index `k - 1`, `k = 1..n`) in `(AB)^n = Σ a_k (AB)^k`:
/// `a_k = (-1)^{n-k+1} σ_{n-k}(λ_1, …, λ_{n-1})`.
pub fn ab_power_expansion_coeffs(n: usize) -> Result<Vec<f64>> {
    check_n(n)?;
    let sigma = elementary_symmetric(&lambdas(n));
    Ok((1..n)
        .map(|k| {
            let sign = if (n - k + 1) % 2 == 0 { 1.0 } else { -1.0 };
            sign * sigma[n - k]
        })
        .collect())
}

/// Coefficients of `ν_k H_k` on `YX^{j-1}Z` (`k, j = 1..n`, zero-based
/// rows and columns) obtained by inverting the Vandermonde system
/// `(AB)^m = Σ_k λ_k^{m-1} ν_k H_k` with the explicit inverse.
pub fn nu_h_from_vandermonde(n: usize) -> Result<Vec<Vec<f64>>> {
    let c = ab_power_coeffs(n)?;
    let lam = lambdas(n);
    let m = n - 1;
    let mut out = vec![vec![0.0; m]; m];
    for k in 0..m {
        let others: Vec<f64> = lam.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &l)| l).collect();
        let sigma = elementary_symmetric(&others);
        let pk: f64 = others.iter().map(|l| lam[k] - l).product();
        for mm in 1..=m {
            let e = n - 1 - mm;
            let sign = if e % 2 == 0 { 1.0 } else { -1.0 };
            let inv = sign * sigma[e] / pk;
            for j in 0..m {
                out[k][j] += inv * c[mm - 1][j].to_f64().unwrap_or(f64::NAN);
            }
        }
    }
    Ok(out)
}

/// `ν_k H_k = (4 sin(kπ/n)/n) Σ_j sin(kjπ/n) YX^{j-1}Z`, as the same table.
pub fn nu_h_closed_form(n: usize) -> Result<Vec<Vec<f64>>> {
    check_n(n)?;
    let nf = n as f64;
    Ok((1..n)
        .map(|k| (1..n).map(|j| 4.0 * (k as f64 * PI / nf).sin() / nf * ((k * j) as f64 * PI / nf).sin()).collect())
        .collect())
}

fn angle(n: usize, m: i64) -> f64 {
    m as f64 * PI / n as f64
}

/// `sl(2, C)` triple `(H_k, U_k, V_k)`.
#[derive(Clone, Debug)]
pub struct CanonicalTriple {
    pub k: usize,
    pub h: ComplexOrbitSum,
    pub u: ComplexOrbitSum,
    pub v: ComplexOrbitSum,
}

/// `su(2)` triple `(X̃_k, Ỹ_k, Z̃_k)`.
#[derive(Clone, Debug)]
pub struct Su2Triple {
    pub k: usize,
    pub x: CycleOrbitSum<f64>,
    pub y: CycleOrbitSum<f64>,
    pub z: CycleOrbitSum<f64>,
}

/// `H_k = -(i/2n) Σ_{j=1}^{n-1} sin(kjπ/n) YX^{j-1}Z`,
/// `U_k = -(1/4n) Σ_{j=0}^{n-1} (e^{-ik(j+1)π/n} YX^{j-1}Y + e^{ikjπ/n} ZX^jZ)`,
/// `V_k = (1/4n) Σ_{j=0}^{n-1} (e^{ik(j+1)π/n} YX^{j-1}Y + e^{-ikjπ/n} ZX^jZ)`.
pub fn canonical_basis(n: usize) -> Result<Vec<CanonicalTriple>> {
    check_n(n)?;
    let nf = n as f64;
    (1..n)
        .map(|k| {
            let ki = k as i64;
            let mut h = CycleOrbitSum::zero(n)?;
            for j in 1..n as i64 {
                h.add_extended(OrbitKind::Yxz, j - 1, -angle(n, ki * j).sin() / (2.0 * nf));
            }
            let (mut ur, mut ui, mut vr, mut vi) =
                (CycleOrbitSum::zero(n)?, CycleOrbitSum::zero(n)?, CycleOrbitSum::zero(n)?, CycleOrbitSum::zero(n)?);
            let q = 1.0 / (4.0 * nf);
            for j in 0..n as i64 {
                let a = angle(n, ki * (j + 1));
                let b = angle(n, ki * j);
                ur.add_extended(OrbitKind::Yxy, j - 1, -q * a.cos());
                ui.add_extended(OrbitKind::Yxy, j - 1, q * a.sin());
                ur.add_extended(OrbitKind::Zxz, j, -q * b.cos());
                ui.add_extended(OrbitKind::Zxz, j, -q * b.sin());
                vr.add_extended(OrbitKind::Yxy, j - 1, q * a.cos());
                vi.add_extended(OrbitKind::Yxy, j - 1, q * a.sin());
                vr.add_extended(OrbitKind::Zxz, j, q * b.cos());
                vi.add_extended(OrbitKind::Zxz, j, -q * b.sin());
            }
            Ok(CanonicalTriple {
                k,
                h: ComplexOrbitSum::imaginary(h)?,
                u: ComplexOrbitSum { re: ur, im: ui },
                v: ComplexOrbitSum { re: vr, im: vi },
            })
        })
        .collect()
}

/// `Z̃_k = iH_k`, `X̃_k = i(U_k + V_k)`, `Ỹ_k = V_k - U_k`, in their explicit
/// orbit forms.
pub fn su2_basis(n: usize) -> Result<Vec<Su2Triple>> {
    check_n(n)?;
    let nf = n as f64;
    (1..n)
        .map(|k| {
            let ki = k as i64;
            let q = 1.0 / (2.0 * nf);
            let (mut x, mut y, mut z) = (CycleOrbitSum::zero(n)?, CycleOrbitSum::zero(n)?, CycleOrbitSum::zero(n)?);
            for j in 1..n as i64 {
                z.add_extended(OrbitKind::Yxz, j - 1, q * angle(n, ki * j).sin());
            }
            for j in 0..n as i64 {
                let a = angle(n, ki * (j + 1));
                let b = angle(n, ki * j);
                x.add_extended(OrbitKind::Yxy, j - 1, -q * a.sin());
                x.add_extended(OrbitKind::Zxz, j, q * b.sin());
                y.add_extended(OrbitKind::Yxy, j - 1, q * a.cos());
                y.add_extended(OrbitKind::Zxz, j, q * b.cos());
            }
            Ok(Su2Triple { k, x, y, z })
        })
        .collect()
}

/// Named residuals of a verification run.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub name: String,
    pub value: f64,
    /// Whether the quantity is required to vanish exactly.
    pub exact: bool,
}

impl Residual {
    fn new(name: impl Into<String>, value: f64) -> Self {
        Self { name: name.into(), value, exact: false }
    }

    fn exact(name: impl Into<String>, zero: bool) -> Self {
        Self { name: name.into(), value: if zero { 0.0 } else { f64::INFINITY }, exact: true }
    }

    pub fn passes(&self, tolerance: f64) -> bool {
        if self.exact {
            self.value == 0.0
        } else {
            self.value < tolerance
        }
    }
}

/// The nine relation families of a canonical basis, as maximal residuals;
/// `[H_k, H_l]` must vanish exactly.
pub fn verify_canonical(n: usize) -> Result<Vec<Residual>> {
    let basis = canonical_basis(n)?;
    let mut within = [0.0f64; 3];
    let mut cross = [0.0f64; 5];
    let mut hh_exact = true;
    for a in &basis {
        within[0] = within[0].max(a.h.bracket(&a.u)?.sub(&a.u.scaled(2.0, 0.0)?)?.max_abs());
        within[1] = within[1].max(a.h.bracket(&a.v)?.add(&a.v.scaled(2.0, 0.0)?)?.max_abs());
        within[2] = within[2].max(a.u.bracket(&a.v)?.sub(&a.h)?.max_abs());
        for b in &basis {
            if a.k == b.k {
                continue;
            }
            let pairs = [(&a.u, &b.u), (&a.u, &b.v), (&a.h, &b.u), (&a.v, &b.v), (&a.h, &b.v)];
            for (slot, (x, y)) in pairs.iter().enumerate() {
                cross[slot] = cross[slot].max(x.bracket(y)?.max_abs());
            }
            hh_exact &= a.h.bracket(&b.h)?.is_empty();
        }
    }
    Ok(vec![
        Residual::new("[H_k,U_k]=2U_k", within[0]),
        Residual::new("[H_k,V_k]=-2V_k", within[1]),
        Residual::new("[U_k,V_k]=H_k", within[2]),
        Residual::new("[U_k,U_l]=0", cross[0]),
        Residual::new("[U_k,V_l]=0", cross[1]),
        Residual::new("[H_k,U_l]=0", cross[2]),
        Residual::new("[V_k,V_l]=0", cross[3]),
        Residual::new("[H_k,V_l]=0", cross[4]),
        Residual::exact("[H_k,H_l]=0", hh_exact),
    ])
}

/// `su(2)` relations, agreement with the canonical triples and with the
/// commutator forms `X̃_k = ¼[ZZ, Z̃_k]`, `Ỹ_k = [Z̃_k, X + cos(kπ/n) ZZ]/(4 sin(kπ/n))`,
/// and the construction of `U_k`, `V_k` from `H_k` with `d_k = 8 sin(kπ/n)`.
pub fn verify_su2(n: usize) -> Result<Vec<Residual>> {
    let su2 = su2_basis(n)?;
    let canon = canonical_basis(n)?;
    let (a, b) = generators::<f64>(n)?;
    let (ca, cb) = (ComplexOrbitSum::real(a.clone())?, ComplexOrbitSum::real(b.clone())?);
    let mut rel = 0.0f64;
    let mut cross = 0.0f64;
    let mut link = 0.0f64;
    let mut compact = 0.0f64;
    let mut construct = 0.0f64;
    for (t, c) in su2.iter().zip(&canon) {
        rel = rel
            .max(t.x.bracket(&t.y)?.sub(&t.z.scaled(&2.0))?.max_abs())
            .max(t.y.bracket(&t.z)?.sub(&t.x.scaled(&2.0))?.max_abs())
            .max(t.z.bracket(&t.x)?.sub(&t.y.scaled(&2.0))?.max_abs());
        for s in &su2 {
            if s.k != t.k {
                for p in [&t.x, &t.y, &t.z] {
                    for q in [&s.x, &s.y, &s.z] {
                        cross = cross.max(p.bracket(q)?.max_abs());
                    }
                }
            }
        }
        let z = ComplexOrbitSum::real(t.z.clone())?;
        let x = ComplexOrbitSum::real(t.x.clone())?;
        let y = ComplexOrbitSum::real(t.y.clone())?;
        link = link
            .max(c.h.scaled(0.0, 1.0)?.sub(&z)?.max_abs())
            .max(c.u.add(&c.v)?.scaled(0.0, 1.0)?.sub(&x)?.max_abs())
            .max(c.v.sub(&c.u)?.sub(&y)?.max_abs());
        let th = t.k as f64 * PI / n as f64;
        compact = compact
            .max(b.bracket(&t.z)?.scaled(&0.25).sub(&t.x)?.max_abs())
            .max(t.z.bracket(&a.add(&b.scaled(&th.cos()))?)?.scaled(&(1.0 / (4.0 * th.sin()))).sub(&t.y)?.max_abs());
        let d = 8.0 * th.sin();
        let ut = c.h.bracket(&ca.add(&cb.scaled(th.cos(), -th.sin())?)?)?.scaled(0.0, -1.0 / d)?;
        let vt = c.h.bracket(&ca.add(&cb.scaled(th.cos(), th.sin())?)?)?.scaled(0.0, 1.0 / d)?;
        construct = construct.max(ut.sub(&c.u)?.max_abs()).max(vt.sub(&c.v)?.max_abs());
    }
    Ok(vec![
        Residual::new("su(2) relations", rel),
        Residual::new("su(2) components commute", cross),
        Residual::new("su(2) from canonical triple", link),
        Residual::new("su(2) commutator forms", compact),
        Residual::new("U_k,V_k from H_k and generators", construct),
    ])
}

/// Checks on `h = span{YX^tZ}`: commutativity, dimension, the `-16`
/// eigen-relation for `(AB)^k`, and the three descriptions of its basis.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanReport {
    pub n: usize,
    pub commuting: bool,
    pub dimension: usize,
    pub eigen_relation: bool,
    /// `(AB)^k` computed by bracketing equals the recursion coefficients.
    pub recursion_matches: bool,
    /// Max deviation of `Σ_j sin(kjπ/n) sin(ljπ/n)` from `(n/2)δ_{kl}`; an
    /// invertible change of basis between `H_k` and `YX^tZ`.
    pub h_span_residual: f64,
}

pub fn verify_cartan(n: usize) -> Result<CartanReport> {
    check_n(n)?;
    let mut commuting = true;
    for s in 0..=n - 2 {
        for t in 0..=n - 2 {
            commuting &= orbit_bracket(n, CycleOrbit::Yxz(s), CycleOrbit::Yxz(t))?.is_empty();
        }
    }
    let (a, b) = generators::<BigInt>(n)?;
    let coeffs = ab_power_coeffs(n)?;
    let mut eigen = true;
    let mut recursion = true;
    let mut ledger = crate::linalg::LinearLedger::with_budget(usize::MAX);
    for k in 1..n {
        let p = ab_power(n, k)?;
        let m16 = p.scaled(&BigInt::from(-16));
        eigen &= a.bracket(&a.bracket(&p)?)? == m16 && b.bracket(&b.bracket(&p)?)? == m16;
        let expected = CycleOrbitSum::from_terms(
            n,
            coeffs[k - 1].iter().enumerate().map(|(j, c)| (CycleOrbit::Yxz(j), c.clone())),
        )?;
        recursion &= p == expected;
        let row = crate::linalg::SparseRow::from_terms(p.terms().map(|(o, c)| (*o, c.clone())));
        let _ = ledger.insert(&row);
    }
    let nf = n as f64;
    let mut span = 0.0f64;
    for k in 1..n {
        for l in 1..n {
            let s: f64 = (1..n).map(|j| angle(n, (k * j) as i64).sin() * angle(n, (l * j) as i64).sin()).sum();
            let target = if k == l { nf / 2.0 } else { 0.0 };
            span = span.max((s - target).abs());
        }
    }
    Ok(CartanReport {
        n,
        commuting,
        dimension: ledger.rank(),
        eigen_relation: eigen,
        recursion_matches: recursion,
        h_span_residual: span,
    })
}

/// Residuals of the `(AB)^k` machinery: recursion vs trigonometric form
/// (relative), the expansion of `(AB)^n` (relative), and the Vandermonde
/// reconstruction of `ν_k H_k` (absolute).
pub fn verify_ab_powers(n: usize) -> Result<Vec<Residual>> {
    let c = ab_power_coeffs(n)?;
    let scale = c.iter().flatten().map(|v| v.to_f64().unwrap_or(f64::NAN).abs()).fold(0.0, f64::max);
    let mut trig = 0.0f64;
    for (k, row) in c.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            trig = trig.max((v.to_f64().unwrap_or(f64::NAN) - ab_power_coeff_trig(n, k + 1, j)).abs() / scale);
        }
    }
    let a = ab_power_expansion_coeffs(n)?;
    let last = &c[n - 1];
    let last_scale = last.iter().map(|v| v.to_f64().unwrap_or(f64::NAN).abs()).fold(0.0, f64::max);
    let mut expansion = 0.0f64;
    for j in 0..n - 1 {
        let s: f64 = (1..n).map(|k| a[k - 1] * c[k - 1][j].to_f64().unwrap_or(f64::NAN)).sum();
        expansion = expansion.max((last[j].to_f64().unwrap_or(f64::NAN) - s).abs() / last_scale);
    }
    let v = nu_h_from_vandermonde(n)?;
    let w = nu_h_closed_form(n)?;
    let vander = v.iter().flatten().zip(w.iter().flatten()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    Ok(vec![
        Residual::new("(AB)^k recursion vs trigonometric form", trig),
        Residual::new("(AB)^n expansion", expansion),
        Residual::new("nu_k H_k Vandermonde reconstruction", vander),
    ])
}
