//! Exact arithmetic in cyclotomic fields ℚ(ζ_m).
//!
//! Elements are stored in the power basis 1, ζ_m, …, ζ_m^{φ(m)−1} of
//! ℚ[x]/Φ_m(x), so every value has a unique normal form and equality
//! testing is exact. Values of different orders interoperate by embedding
//! into ℚ(ζ_lcm) first.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact rational scalar. Always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("division by zero in ℚ(ζ_{0})")]
    DivisionByZero(u32),
    #[error("order {src} does not divide target order {dst}")]
    BadEmbedding { src: u32, dst: u32 },
    #[error("value does not lie in ℚ(ζ_{0})")]
    NotInSubfield(u32),
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
}

/// Euler totient.
pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(m: u32) -> Vec<u32> {
    let mut ds: Vec<u32> = (1..=m).filter(|d| m % d == 0).collect();
    ds.sort_unstable();
    ds
}

/// Coefficients of the m-th cyclotomic polynomial Φ_m, ascending degree.
/// Computed by iterated exact division of x^d − 1 by the Φ_{d'} for d' | d.
fn cyclotomic_poly(m: u32) -> Vec<BigInt> {
    let mut table: HashMap<u32, Vec<BigInt>> = HashMap::new();
    for d in divisors(m) {
        // x^d - 1
        let mut poly = vec![BigInt::zero(); d as usize + 1];
        poly[0] = -BigInt::one();
        poly[d as usize] = BigInt::one();
        for d2 in divisors(d) {
            if d2 < d {
                let phi_d2 = table[&d2].clone();
                poly = int_poly_div_exact(&poly, &phi_d2);
            }
        }
        table.insert(d, poly);
    }
    table.remove(&m).unwrap()
}

/// Exact division of integer polynomials; panics if not exact (never happens
/// for cyclotomic factors).
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd);
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone() / den[dd].clone();
        quot[k] = c.clone();
        for j in 0..=dd {
            rem[k + j] -= &c * &den[j];
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// Precomputed data for one cyclotomic order: Φ_m and the reductions of
/// x^k mod Φ_m for every exponent that can arise in products and Galois maps.
struct CycloContext {
    #[allow(dead_code)]
    order: u32,
    phi: usize,
    /// power_table[k] = coordinates of x^k mod Φ_m, for k in 0..2m.
    power_table: Vec<Vec<BigInt>>,
}

impl CycloContext {
    fn new(order: u32) -> Self {
        let phi = euler_phi(order) as usize;
        let cyc = cyclotomic_poly(order);
        debug_assert_eq!(cyc.len(), phi + 1);
        let max_exp = (2 * order as usize).max(2 * phi);
        let mut power_table: Vec<Vec<BigInt>> = Vec::with_capacity(max_exp);
        for k in 0..max_exp {
            if k < phi {
                let mut row = vec![BigInt::zero(); phi];
                row[k] = BigInt::one();
                power_table.push(row);
            } else {
                // x^k = x * x^(k-1), then substitute x^phi = -(lower terms of Φ).
                let prev = power_table[k - 1].clone();
                let mut row = vec![BigInt::zero(); phi];
                for j in 0..phi - 1 {
                    row[j + 1] = prev[j].clone();
                }
                let lead = prev[phi - 1].clone();
                if !lead.is_zero() {
                    for j in 0..phi {
                        row[j] -= &lead * &cyc[j];
                    }
                }
                power_table.push(row);
            }
        }
        CycloContext { order, phi, power_table }
    }

    fn reduce_exponent(&self, k: usize) -> &[BigInt] {
        &self.power_table[k]
    }
}

fn context(order: u32) -> Arc<CycloContext> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloContext>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(order)
        .or_insert_with(|| Arc::new(CycloContext::new(order)))
        .clone()
}

/// An element of ℚ(ζ_m) in the power basis modulo Φ_m.
#[derive(Clone)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<Rational>, // length φ(order)
}

impl Cyclo {
    /// Builds an element from power-basis coordinates; `coeffs` must have
    /// length φ(order).
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        assert_eq!(
            coeffs.len(),
            euler_phi(order) as usize,
            "coefficient vector must have length φ(order)"
        );
        Cyclo { order, coeffs }
    }

    pub fn zero() -> Self {
        Cyclo { order: 1, coeffs: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        Cyclo { order: 1, coeffs: vec![Rational::one()] }
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclo { order: 1, coeffs: vec![q] }
    }

    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(k)))
    }

    /// The primitive m-th root of unity ζ_m.
    pub fn zeta(m: u32) -> Self {
        assert!(m >= 1);
        Self::root_of_unity(m, 1)
    }

    /// ζ_m^k, reduced to normal form.
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        assert!(m >= 1);
        let ctx = context(m);
        let e = k.rem_euclid(m as i64) as usize;
        let row = ctx.reduce_exponent(e);
        let coeffs = row
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        Cyclo { order: m, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Returns the value as a rational if it lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Image under ζ_order ↦ ζ_target^{target/order}. Errors unless
    /// order | target.
    pub fn embed(&self, target: u32) -> Result<Cyclo, CycloError> {
        if target % self.order != 0 {
            return Err(CycloError::BadEmbedding { src: self.order, dst: target });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = (target / self.order) as usize;
        let ctx = context(target);
        let mut out = vec![Rational::zero(); ctx.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = ctx.reduce_exponent(k * step);
            for (o, r) in out.iter_mut().zip(row.iter()) {
                if !r.is_zero() {
                    *o += c * Rational::from_integer(r.clone());
                }
            }
        }
        Ok(Cyclo { order: target, coeffs: out })
    }

    /// Writes the value in ℚ(ζ_target) if possible, for target | order.
    /// Inverse of `embed` on its image.
    pub fn project(&self, target: u32) -> Result<Cyclo, CycloError> {
        if target == 0 {
            return Err(CycloError::ZeroOrder);
        }
        if self.order % target != 0 {
            return Err(CycloError::BadEmbedding { src: target, dst: self.order });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        // Solve for coordinates over the embedded basis ζ_target^j by
        // Gaussian elimination on the φ(order) × φ(target) system.
        let phi_t = euler_phi(target) as usize;
        let step = (self.order / target) as usize;
        let ctx = context(self.order);
        let phi = ctx.phi;
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(phi_t);
        for j in 0..phi_t {
            let row = ctx.reduce_exponent(j * step);
            cols.push(row.iter().map(|c| Rational::from_integer(c.clone())).collect());
        }
        let mut sol = vec![Rational::zero(); phi_t];
        let m = phi;
        let nvar = phi_t;
        let mut a: Vec<Vec<Rational>> = vec![vec![Rational::zero(); nvar + 1]; m];
        for i in 0..m {
            for (j, col) in cols.iter().enumerate() {
                a[i][j] = col[i].clone();
            }
            a[i][nvar] = self.coeffs[i].clone();
        }
        let mut row = 0usize;
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for col in 0..nvar {
            if let Some(pr) = (row..m).find(|&i| !a[i][col].is_zero()) {
                a.swap(row, pr);
                let inv = a[row][col].clone();
                for j in col..=nvar {
                    a[row][j] = &a[row][j] / &inv;
                }
                for i in 0..m {
                    if i != row && !a[i][col].is_zero() {
                        let f = a[i][col].clone();
                        for j in col..=nvar {
                            let t = &f * &a[row][j];
                            a[i][j] = &a[i][j] - &t;
                        }
                    }
                }
                pivots.push((row, col));
                row += 1;
            }
        }
        // Inconsistent rows mean the value is outside the subfield.
        for i in row..m {
            if !a[i][nvar].is_zero() {
                return Err(CycloError::NotInSubfield(target));
            }
        }
        for &(r, c) in &pivots {
            sol[c] = a[r][nvar].clone();
        }
        Ok(Cyclo { order: target, coeffs: sol })
    }

    /// Smallest order m' | order such that the value lies in ℚ(ζ_{m'}).
    pub fn reduced(&self) -> Cyclo {
        for d in divisors(self.order) {
            if let Ok(v) = self.project(d) {
                return v;
            }
        }
        self.clone()
    }

    fn binop(&self, other: &Cyclo, f: impl Fn(&Rational, &Rational) -> Rational) -> Cyclo {
        let m = self.order.lcm(&other.order);
        let a = self.embed(m).unwrap();
        let b = other.embed(m).unwrap();
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| f(x, y))
            .collect();
        Cyclo { order: m, coeffs }
    }

    pub fn mul_rational(&self, q: &Rational) -> Cyclo {
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Applies the Galois automorphism ζ_m ↦ ζ_m^k; requires gcd(k, m) = 1.
    pub fn galois(&self, k: u32) -> Cyclo {
        assert_eq!(
            (k as i64).gcd(&(self.order as i64)),
            1,
            "Galois exponent must be coprime to the order"
        );
        let ctx = context(self.order);
        let mut out = vec![Rational::zero(); ctx.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = ctx.reduce_exponent((j * k as usize) % self.order as usize);
            for (o, r) in out.iter_mut().zip(row.iter()) {
                if !r.is_zero() {
                    *o += c * Rational::from_integer(r.clone());
                }
            }
        }
        Cyclo { order: self.order, coeffs: out }
    }

    /// Complex conjugation, ζ_m ↦ ζ_m^{−1}.
    pub fn conjugate(&self) -> Cyclo {
        if self.order <= 2 {
            return self.clone();
        }
        self.galois(self.order - 1)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_m.
    pub fn inverse(&self) -> Result<Cyclo, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero(self.order));
        }
        if let Some(q) = self.as_rational() {
            return Ok(Cyclo {
                order: self.order,
                coeffs: {
                    let mut v = vec![Rational::zero(); self.coeffs.len()];
                    v[0] = Rational::one() / q;
                    v
                },
            });
        }
        let phi_poly: Vec<Rational> = cyclotomic_poly(self.order)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let inv = poly_mod_inverse(&self.coeffs, &phi_poly)
            .ok_or(CycloError::DivisionByZero(self.order))?;
        let mut coeffs = inv;
        coeffs.resize(self.coeffs.len(), Rational::zero());
        Ok(Cyclo { order: self.order, coeffs })
    }

    pub fn pow(&self, e: i64) -> Cyclo {
        if e < 0 {
            return self.inverse().expect("negative power of zero").pow(-e);
        }
        let mut acc = Cyclo::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Floating-point rendering (re, im) for human inspection only.
    pub fn approx(&self) -> (f64, f64) {
        let m = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = rational_to_f64(c);
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / m;
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }
}

fn rational_to_f64(q: &Rational) -> f64 {
    let num = q.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let den = q.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    num / den
}

/// Inverse of `a` modulo the monic polynomial `mod_poly`, both over ℚ,
/// via extended Euclid. Returns None when gcd ≠ 1 (cannot happen for
/// nonzero elements of a field).
fn poly_mod_inverse(a: &[Rational], mod_poly: &[Rational]) -> Option<Vec<Rational>> {
    fn deg(p: &[Rational]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
        while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
            p.pop();
        }
        p
    }
    fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        trim(out)
    }
    fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let mut out = vec![Rational::zero(); n];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] -= y;
        }
        trim(out)
    }
    fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let db = deg(b).expect("division by zero polynomial");
        let mut rem = a.to_vec();
        let mut quot = vec![Rational::zero(); a.len().max(db + 1)];
        while let Some(dr) = deg(&rem) {
            if dr < db {
                break;
            }
            let c = &rem[dr] / &b[db];
            quot[dr - db] = c.clone();
            for j in 0..=db {
                let t = &c * &b[j];
                rem[dr - db + j] = &rem[dr - db + j] - &t;
            }
        }
        (trim(quot), trim(rem))
    }

    let a = trim(a.to_vec());
    // r0 = mod_poly, r1 = a; track s only for the Bezout coefficient of a.
    let mut r0 = mod_poly.to_vec();
    let mut r1 = a;
    let mut s0 = vec![Rational::zero()];
    let mut s1 = vec![Rational::one()];
    while deg(&r1).is_some() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        if deg(&r1).is_none() {
            break;
        }
        if deg(&r1) == Some(0) {
            // gcd is the constant r1; divide through.
            let c = r1[0].clone();
            let inv_c = Rational::one() / c;
            let bez: Vec<Rational> = s1.iter().map(|x| x * &inv_c).collect();
            let (_, reduced) = poly_divmod(&bez, mod_poly);
            return Some(reduced);
        }
    }
    // gcd ended in r0.
    if deg(&r0) == Some(0) {
        let inv_c = Rational::one() / r0[0].clone();
        let bez: Vec<Rational> = s0.iter().map(|x| x * &inv_c).collect();
        let (_, reduced) = poly_divmod(&bez, mod_poly);
        return Some(reduced);
    }
    None
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let m = self.order.lcm(&other.order);
        self.embed(m).unwrap().coeffs == other.embed(m).unwrap().coeffs
    }
}

impl Eq for Cyclo {}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        self.binop(rhs, |a, b| a + b)
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self.binop(rhs, |a, b| a - b)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        let m = self.order.lcm(&rhs.order);
        let a = self.embed(m).unwrap();
        let b = rhs.embed(m).unwrap();
        let ctx = context(m);
        let phi = ctx.phi;
        let mut prod = vec![Rational::zero(); 2 * phi - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut out = vec![Rational::zero(); phi];
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < phi {
                out[k] += c;
            } else {
                let row = ctx.reduce_exponent(k);
                for (o, r) in out.iter_mut().zip(row.iter()) {
                    if !r.is_zero() {
                        *o += &c * Rational::from_integer(r.clone());
                    }
                }
            }
        }
        Cyclo { order: m, coeffs: out }
    }
}

impl Div for &Cyclo {
    type Output = Cyclo;
    fn div(self, rhs: &Cyclo) -> Cyclo {
        let m = self.order.lcm(&rhs.order);
        let inv = rhs.embed(m).unwrap().inverse().expect("division by zero");
        &self.embed(m).unwrap() * &inv
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = if k == 0 {
                String::new()
            } else if k == 1 {
                format!("z{}", self.order)
            } else {
                format!("z{}^{}", self.order, k)
            };
            let s = if var.is_empty() {
                format!("{}", c)
            } else if c.is_one() {
                var
            } else if (-c).is_one() {
                format!("-{}", var)
            } else {
                format!("{}*{}", c, var)
            };
            terms.push(s);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            if let Some(stripped) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        write!(f, "{}", out)
    }
}

fn rational_to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn rational_from_string(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = n.parse().ok()?;
    let den: BigInt = d.parse().ok()?;
    if den.is_zero() || den.is_negative() {
        return None;
    }
    Some(Rational::new(num, den))
}

impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Cyclo", 2)?;
        st.serialize_field("order", &self.order)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(rational_to_string).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            order: u32,
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.order == 0 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        if raw.coeffs.len() != euler_phi(raw.order) as usize {
            return Err(D::Error::custom("coefficient vector must have length φ(order)"));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| rational_from_string(s).ok_or_else(|| D::Error::custom("bad rational")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cyclo::from_coeffs(raw.order, coeffs))
    }
}

/// Total order used only for canonical sort keys (eigenvalue labelling,
/// deterministic output); embeds to a common order and compares coordinates.
pub fn canonical_cmp(a: &Cyclo, b: &Cyclo) -> Ordering {
    let m = a.order().lcm(&b.order());
    let ea = a.embed(m).unwrap();
    let eb = b.embed(m).unwrap();
    for (x, y) in ea.coeffs.iter().zip(eb.coeffs.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}
