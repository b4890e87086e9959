//! Algebraic number fields Q(w) presented by a monic minimal polynomial.
//!
//! Elements are residue classes modulo the minimal polynomial, stored as
//! coefficient vectors of degree < d.  A degree-1 polynomial gives plain Q.

use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

// ---------------------------------------------------------------------------
// dense univariate polynomials over Q, used for minimal-polynomial checks
// and for arithmetic modulo the minimal polynomial
// ---------------------------------------------------------------------------

fn uni_trim(v: &mut Vec<Rat>) {
    while v.last().map_or(false, Zero::is_zero) {
        v.pop();
    }
}

fn uni_deg(v: &[Rat]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn uni_derivative(v: &[Rat]) -> Vec<Rat> {
    let mut out = Vec::with_capacity(v.len().saturating_sub(1));
    for (i, c) in v.iter().enumerate().skip(1) {
        out.push(c * rat(i as i64));
    }
    uni_trim(&mut out);
    out
}

/// Remainder of a by b (b nonzero), over Q.
fn uni_rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let db = uni_deg(b).expect("division by zero polynomial");
    let lead = b[db].clone();
    let mut r = a.to_vec();
    uni_trim(&mut r);
    while let Some(dr) = uni_deg(&r) {
        if dr < db {
            break;
        }
        let q = &r[dr] / &lead;
        for j in 0..=db {
            let t = &q * &b[j];
            r[dr - db + j] = &r[dr - db + j] - t;
        }
        uni_trim(&mut r);
    }
    r
}

/// Monic gcd of a and b over Q.
fn uni_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    uni_trim(&mut x);
    uni_trim(&mut y);
    while !y.is_empty() {
        let r = uni_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = uni_deg(&x) {
        let lead = x[d].clone();
        for c in x.iter_mut() {
            *c = &*c / &lead;
        }
    }
    x
}

/// Extended gcd: returns (g, u) with u*a = g modulo m, g monic.
fn uni_half_xgcd(a: &[Rat], m: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    uni_trim(&mut r0);
    uni_trim(&mut r1);
    let mut u0: Vec<Rat> = vec![];
    let mut u1: Vec<Rat> = vec![Rat::one()];
    while !r1.is_empty() {
        // r0 = q*r1 + r2
        let db = uni_deg(&r1).unwrap();
        let lead = r1[db].clone();
        let mut q: Vec<Rat> = vec![Rat::zero(); uni_deg(&r0).map_or(0, |d| d.saturating_sub(db)) + 1];
        let mut r2 = r0.clone();
        while let Some(dr) = uni_deg(&r2) {
            if dr < db {
                break;
            }
            let c = &r2[dr] / &lead;
            q[dr - db] = c.clone();
            for j in 0..=db {
                let t = &c * &r1[j];
                r2[dr - db + j] = &r2[dr - db + j] - t;
            }
            uni_trim(&mut r2);
        }
        // u2 = u0 - q*u1
        let mut u2 = u0.clone();
        let need = q.len() + u1.len();
        u2.resize(u2.len().max(need), Rat::zero());
        for (i, qc) in q.iter().enumerate() {
            if qc.is_zero() {
                continue;
            }
            for (j, uc) in u1.iter().enumerate() {
                let t = qc * uc;
                u2[i + j] = &u2[i + j] - t;
            }
        }
        uni_trim(&mut u2);
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
    }
    // r0 = g, u0*a = g (mod m); make g monic
    if let Some(d) = uni_deg(&r0) {
        let lead = r0[d].clone();
        for c in r0.iter_mut() {
            *c = &*c / &lead;
        }
        for c in u0.iter_mut() {
            *c = &*c / &lead;
        }
    }
    (r0, u0)
}

/// Does the rational polynomial have a rational root?  Decides by the
/// rational-root theorem on the cleared integer polynomial.
fn has_rational_root(p: &[Rat]) -> Option<Rat> {
    let mut lcm = BigInt::one();
    for c in p {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    if ints.first().map_or(true, Zero::is_zero) {
        return Some(Rat::zero());
    }
    let a0 = ints[0].abs();
    let an = ints[ints.len() - 1].abs();
    let eval = |x: &Rat| -> Rat {
        let mut acc = Rat::zero();
        for c in p.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    for num_d in divisors(&a0) {
        for den_d in divisors(&an) {
            for sign in [1i64, -1] {
                let cand = Rat::new(&num_d * BigInt::from(sign), den_d.clone());
                if eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = vec![];
    let mut d = BigInt::one();
    loop {
        let dd = &d * &d;
        if dd > *n {
            break;
        }
        if (n % &d).is_zero() {
            out.push(d.clone());
            let q = n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out
}

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

/// A field Q(w) with w a root of a monic squarefree polynomial without
/// rational roots (for degree >= 2).  Degree 1 is plain Q.
#[derive(Debug)]
pub struct NumberField {
    generator: String,
    /// minpoly[i] is the coefficient of w^i; monic, so the last entry is 1.
    minpoly: Vec<Rat>,
}

pub type Field = Arc<NumberField>;

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly && self.generator == other.generator
    }
}
impl Eq for NumberField {}

impl NumberField {
    pub fn new(generator: &str, minpoly: Vec<Rat>) -> Result<Field> {
        if minpoly.len() < 2 || !minpoly.last().unwrap().is_one() {
            return Err(Error::BadMinimalPolynomial);
        }
        let g = uni_gcd(&minpoly, &uni_derivative(&minpoly));
        if uni_deg(&g) != Some(0) {
            return Err(Error::NotSquarefree);
        }
        if minpoly.len() > 2 {
            if let Some(r) = has_rational_root(&minpoly) {
                return Err(Error::RationalRootFound(r.to_string()));
            }
        }
        Ok(Arc::new(NumberField {
            generator: generator.to_string(),
            minpoly,
        }))
    }

    /// The rational field, presented as Q[w]/(w).
    pub fn rationals() -> Field {
        NumberField::new("w", vec![Rat::zero(), Rat::one()]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn generator_name(&self) -> &str {
        &self.generator
    }

    pub fn minpoly(&self) -> &[Rat] {
        &self.minpoly
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }
}

pub fn same_field(a: &Field, b: &Field) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

// ---------------------------------------------------------------------------
// NfElem
// ---------------------------------------------------------------------------

/// An element of a number field: coefficient vector of length equal to the
/// field degree, index i holding the coefficient of w^i.
#[derive(Debug, Clone)]
pub struct NfElem {
    field: Field,
    coeffs: Vec<Rat>,
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.coeffs == other.coeffs
    }
}
impl Eq for NfElem {}

impl std::hash::Hash for NfElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for c in &self.coeffs {
            c.numer().hash(state);
            c.denom().hash(state);
        }
    }
}

impl NfElem {
    pub fn zero(field: &Field) -> Self {
        NfElem {
            field: field.clone(),
            coeffs: vec![Rat::zero(); field.degree()],
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_rat(field, Rat::one())
    }

    pub fn from_rat(field: &Field, q: Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); field.degree()];
        coeffs[0] = q;
        NfElem {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_i64(field: &Field, n: i64) -> Self {
        Self::from_rat(field, rat(n))
    }

    /// The generator w; fails for the rational field where no generator exists.
    pub fn generator(field: &Field) -> Result<Self> {
        if field.degree() < 2 {
            return Err(Error::UnknownSymbol(field.generator_name().to_string()));
        }
        let mut coeffs = vec![Rat::zero(); field.degree()];
        coeffs[1] = Rat::one();
        Ok(NfElem {
            field: field.clone(),
            coeffs,
        })
    }

    /// Builds an element from an arbitrary-length coefficient list, reducing
    /// modulo the minimal polynomial.
    pub fn from_coeffs(field: &Field, coeffs: Vec<Rat>) -> Self {
        let mut e = NfElem {
            field: field.clone(),
            coeffs,
        };
        e.reduce();
        e
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        let d = self.field.degree();
        let m = &self.field.minpoly;
        while self.coeffs.len() > d {
            let top = self.coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = self.coeffs.len() - d;
            for j in 0..d {
                let t = &top * &m[j];
                self.coeffs[k + j] = &self.coeffs[k + j] - t;
            }
        }
        self.coeffs.resize(d, Rat::zero());
    }

    fn check_field(&self, other: &Self) {
        assert!(
            same_field(&self.field, &other.field),
            "number field mismatch"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_field(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        NfElem {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_field(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        NfElem {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        NfElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_field(other);
        let d = self.field.degree();
        if d == 1 {
            return NfElem {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            };
        }
        let mut conv = vec![Rat::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] = &conv[i + j] + a * b;
            }
        }
        let mut e = NfElem {
            field: self.field.clone(),
            coeffs: conv,
        };
        e.reduce();
        e
    }

    pub fn mul_rat(&self, q: &Rat) -> Self {
        NfElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.field.degree();
        if d == 1 {
            return Ok(NfElem {
                field: self.field.clone(),
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        let mut a = self.coeffs.clone();
        uni_trim(&mut a);
        let (g, u) = uni_half_xgcd(&a, &self.field.minpoly);
        if uni_deg(&g) != Some(0) {
            return Err(Error::NotInvertible);
        }
        Ok(NfElem::from_coeffs(&self.field, u))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = NfElem::one(&self.field);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let w = self.field.generator_name();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "{}", w)?;
                } else {
                    write!(f, "{}^{}", w, i)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi() -> Field {
        // w^2 + 1
        NumberField::new("w", vec![rat(1), rat(0), rat(1)]).unwrap()
    }

    #[test]
    fn degree_one_is_plain_q() {
        let q = NumberField::rationals();
        assert!(q.is_rational());
        let a = NfElem::from_rat(&q, ratio(2, 3));
        let b = NfElem::from_rat(&q, ratio(1, 6));
        assert_eq!(a.add(&b), NfElem::from_rat(&q, ratio(5, 6)));
    }

    #[test]
    fn sqrt_minus_three_squares() {
        let f = NumberField::new("w", vec![rat(3), rat(0), rat(1)]).unwrap();
        let w = NfElem::generator(&f).unwrap();
        assert_eq!(w.mul(&w), NfElem::from_i64(&f, -3));
        // (1+w)(1-w) = 1 - w^2 = 4
        let one = NfElem::one(&f);
        assert_eq!(one.add(&w).mul(&one.sub(&w)), NfElem::from_i64(&f, 4));
    }

    #[test]
    fn quartic_relation() {
        // w = sqrt(-1) - sqrt(3) satisfies w^4 - 4 w^2 + 16 = 0
        let f = NumberField::new("w", vec![rat(16), rat(0), rat(-4), rat(0), rat(1)]).unwrap();
        let w = NfElem::generator(&f).unwrap();
        let w2 = w.mul(&w);
        let w4 = w2.mul(&w2);
        let rhs = w2.mul_rat(&rat(4)).sub(&NfElem::from_i64(&f, 16));
        assert_eq!(w4, rhs);
    }

    #[test]
    fn complex_inverse() {
        let f = qi();
        let one = NfElem::one(&f);
        let i = NfElem::generator(&f).unwrap();
        let z = one.add(&i);
        let inv = z.inv().unwrap();
        // (1-i)/2
        let expect = one.sub(&i).mul_rat(&ratio(1, 2));
        assert_eq!(inv, expect);
        assert!(z.mul(&inv).is_one());
    }

    #[test]
    fn rejects_non_fields() {
        assert_eq!(
            NumberField::new("w", vec![rat(1), rat(2), rat(1)]).unwrap_err(),
            Error::NotSquarefree
        );
        assert_eq!(
            NumberField::new("w", vec![rat(-1), rat(0), rat(1)]).unwrap_err(),
            Error::RationalRootFound("1".into())
        );
        assert!(NumberField::new("w", vec![rat(1), rat(0), rat(2)]).is_err());
    }

    #[test]
    fn display_roundtrips_visually() {
        let f = qi();
        let e = NfElem::from_coeffs(&f, vec![ratio(-1, 2), rat(3)]);
        assert_eq!(e.to_string(), "3*w - 1/2");
    }
}
