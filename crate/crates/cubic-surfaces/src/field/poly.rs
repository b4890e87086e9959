//! Sparse multivariate polynomials over a number field.
//!
//! The variable universe is fixed: the four coordinates x, y, z, t of P^3,
//! the five family parameters b, c, d, e, f, and three auxiliary variables
//! u0, u1, u2 used internally to parametrize planes and lines.  Terms are
//! kept in degree-lexicographic order with x > y > z > t > b > c > d > e > f,
//! so printing and equality are deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use super::numfield::{Field, NfElem, Rat};

pub const NVARS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
    T = 3,
    B = 4,
    C = 5,
    D = 6,
    E = 7,
    F = 8,
    U0 = 9,
    U1 = 10,
    U2 = 11,
}

pub const COORD_VARS: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::T];
pub const PARAM_VARS: [Var; 5] = [Var::B, Var::C, Var::D, Var::E, Var::F];

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::T => "t",
            Var::B => "b",
            Var::C => "c",
            Var::D => "d",
            Var::E => "e",
            Var::F => "f",
            Var::U0 => "u0",
            Var::U1 => "u1",
            Var::U2 => "u2",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Some(match s {
            "x" => Var::X,
            "y" => Var::Y,
            "z" => Var::Z,
            "t" => Var::T,
            "b" => Var::B,
            "c" => Var::C,
            "d" => Var::D,
            "e" => Var::E,
            "f" => Var::F,
            _ => return None,
        })
    }

    pub fn all() -> [Var; NVARS] {
        [
            Var::X,
            Var::Y,
            Var::Z,
            Var::T,
            Var::B,
            Var::C,
            Var::D,
            Var::E,
            Var::F,
            Var::U0,
            Var::U1,
            Var::U2,
        ]
    }
}

/// Exponent tuple over the fixed variable universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono(pub [u16; NVARS]);

impl Mono {
    pub fn one() -> Self {
        Mono([0; NVARS])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v as usize] = 1;
        Mono(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        vars.iter().map(|&v| self.0[v as usize] as u32).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for i in 0..NVARS {
            e[i] += other.0[i];
        }
        Mono(e)
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quot(&self, other: &Mono) -> Mono {
        let mut e = other.0;
        for i in 0..NVARS {
            e[i] -= self.0[i];
        }
        Mono(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// Degree-lexicographic order: compare total degree first, then exponents
/// from x downwards (a larger exponent on an earlier variable wins).
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A multivariate polynomial; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    terms: BTreeMap<Mono, NfElem>,
}

impl Poly {
    pub fn zero(field: &Field) -> Self {
        Poly {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &Field) -> Self {
        Poly::constant(NfElem::one(field))
    }

    pub fn constant(c: NfElem) -> Self {
        let mut terms = BTreeMap::new();
        let field = c.field().clone();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { field, terms }
    }

    pub fn from_i64(field: &Field, n: i64) -> Self {
        Poly::constant(NfElem::from_i64(field, n))
    }

    pub fn var(field: &Field, v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(v), NfElem::one(field));
        Poly {
            field: field.clone(),
            terms,
        }
    }

    pub fn monomial(field: &Field, m: Mono, c: NfElem) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly {
            field: field.clone(),
            terms,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &NfElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn as_constant(&self) -> Option<NfElem> {
        if self.terms.is_empty() {
            Some(NfElem::zero(&self.field))
        } else if self.is_constant() {
            Some(self.terms.values().next().unwrap().clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Mono::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms
            .keys()
            .map(|m| m.0[v as usize])
            .max()
            .unwrap_or(0)
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.0[v as usize] > 0)
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::all()
            .into_iter()
            .filter(|&v| self.uses_var(v))
            .collect()
    }

    /// Leading term in the degree-lexicographic order.
    pub fn leading(&self) -> Option<(&Mono, &NfElem)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Mono) -> NfElem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| NfElem::zero(&self.field))
    }

    fn insert_add(&mut self, m: Mono, c: NfElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(&self.field);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &NfElem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    pub fn div_scalar(&self, c: &NfElem) -> Poly {
        let inv = c.inv().expect("division by zero scalar");
        self.mul_scalar(&inv)
    }

    pub fn mul_mono(&self, m: &Mono) -> Poly {
        let mut out = Poly::zero(&self.field);
        for (ma, ca) in &self.terms {
            out.terms.insert(ma.mul(m), ca.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(&self.field);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division: returns Some(r) with self = q * r, or None when the
    /// division is not exact.
    pub fn exact_div(&self, q: &Poly) -> Option<Poly> {
        assert!(!q.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero(&self.field));
        }
        if let Some(c) = q.as_constant() {
            return Some(self.div_scalar(&c));
        }
        let (qm, qc) = q.leading().unwrap();
        let qc_inv = qc.inv().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.field);
        while let Some((rm, rc)) = rem.leading() {
            if !qm.divides(rm) {
                return None;
            }
            let m = qm.quot(rm);
            let c = rc.mul(&qc_inv);
            let t = Poly::monomial(&self.field, m, c);
            rem = rem.sub(&t.mul(q));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// True iff self = lambda * other for some nonzero scalar of the
    /// coefficient field, decided by cross-multiplying coefficient pairs.
    pub fn proportional(&self, other: &Poly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let (m0, a0) = self.leading().unwrap();
        let (n0, b0) = other.leading().unwrap();
        if m0 != n0 {
            return false;
        }
        for ((ma, ca), (mb, cb)) in self.terms.iter().zip(&other.terms) {
            if ma != mb || ca.mul(b0) != cb.mul(a0) {
                return false;
            }
        }
        true
    }

    /// True iff the polynomial is homogeneous of the given degree in the
    /// listed variables (all other variables are treated as constants).
    pub fn is_homogeneous_in(&self, vars: &[Var], degree: u32) -> bool {
        self.terms.keys().all(|m| m.degree_in(vars) == degree)
    }

    /// Substitutes variables by field elements (given as fractions is the
    /// caller's job; here values are polynomials).  Unlisted variables stay.
    pub fn substitute_polys(&self, map: &BTreeMap<Var, Poly>) -> Poly {
        let mut out = Poly::zero(&self.field);
        let mut powers: BTreeMap<(Var, u16), Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut factor = Poly::constant(c.clone());
            for (&v, sub) in map {
                let e = m.0[v as usize];
                if e == 0 {
                    continue;
                }
                rest.0[v as usize] = 0;
                let p = powers
                    .entry((v, e))
                    .or_insert_with(|| sub.pow(e as u32))
                    .clone();
                factor = factor.mul(&p);
            }
            out = out.add(&factor.mul_mono(&rest));
        }
        out
    }

    /// Full numeric evaluation of a polynomial in the given variables;
    /// panics if other variables remain.
    pub fn eval(&self, map: &BTreeMap<Var, NfElem>) -> NfElem {
        let mut acc = NfElem::zero(&self.field);
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for v in Var::all() {
                let e = m.0[v as usize];
                if e == 0 {
                    continue;
                }
                let val = map
                    .get(&v)
                    .unwrap_or_else(|| panic!("unbound variable {}", v.name()));
                term = term.mul(&val.pow(e as u32));
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Scales the polynomial to an integral primitive representative:
    /// all rational components of all coefficients are cleared to integers,
    /// divided by their gcd, and the leading coefficient's lowest nonzero
    /// component is made positive.  The result generates the same ideal.
    pub fn canonical_integral(&self) -> Poly {
        use num::bigint::BigInt;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            for q in c.coeffs() {
                lcm = num::integer::lcm(lcm, q.denom().clone());
            }
        }
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            for q in c.coeffs() {
                let n = q.numer() * (&lcm / q.denom());
                gcd = num::integer::gcd(gcd, n);
            }
        }
        if gcd.is_zero() {
            gcd = BigInt::one();
        }
        let mut scale = Rat::new(lcm, gcd);
        let lead = self.leading().unwrap().1;
        let first = lead
            .coeffs()
            .iter()
            .find(|q| !q.is_zero())
            .expect("nonzero leading coefficient");
        if (first * &scale).is_negative() {
            scale = -scale;
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.mul_rat(&scale);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            // render the coefficient; pull a leading minus out when it is
            // a pure rational, to print `- 2*x` rather than `+ (-2)*x`
            let (sign_neg, coeff_str) = match c.as_rational() {
                Some(q) => (q.is_negative(), q.abs().to_string()),
                None => (false, format!("({})", c)),
            };
            if first {
                if sign_neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut printed = false;
            if m.is_one() {
                write!(f, "{}", coeff_str)?;
                printed = true;
            } else if coeff_str != "1" {
                write!(f, "{}", coeff_str)?;
                printed = true;
            }
            for v in Var::all() {
                let e = m.0[v as usize];
                if e == 0 {
                    continue;
                }
                if printed {
                    write!(f, "*")?;
                }
                printed = true;
                if e == 1 {
                    write!(f, "{}", v.name())?;
                } else {
                    write!(f, "{}^{}", v.name(), e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::numfield::NumberField;
    use super::*;

    fn q() -> Field {
        NumberField::rationals()
    }

    fn v(field: &Field, var: Var) -> Poly {
        Poly::var(field, var)
    }

    #[test]
    fn deglex_order_and_display() {
        let f = q();
        let x = v(&f, Var::X);
        let y = v(&f, Var::Y);
        let p = x.mul(&x).sub(&y.mul(&y)).add(&Poly::from_i64(&f, 1));
        assert_eq!(p.to_string(), "x^2 - y^2 + 1");
        let (lead, _) = p.leading().unwrap();
        assert_eq!(*lead, Mono::var(Var::X).mul(&Mono::var(Var::X)));
    }

    #[test]
    fn exact_division_difference_of_squares() {
        let f = q();
        let x = v(&f, Var::X);
        let y = v(&f, Var::Y);
        let p = x.mul(&x).sub(&y.mul(&y));
        let d = x.sub(&y);
        assert_eq!(p.exact_div(&d).unwrap(), x.add(&y));
        assert!(p.exact_div(&x.add(&Poly::from_i64(&f, 1))).is_none());
    }

    #[test]
    fn proportionality() {
        let f = q();
        let x = v(&f, Var::X);
        let y = v(&f, Var::Y);
        let p = x.mul(&y).add(&y.mul(&y));
        assert!(p.proportional(&p.mul_scalar(&NfElem::from_i64(&f, 5))));
        let x3 = x.pow(3);
        assert!(!p.proportional(&p.add(&x3)));
    }

    #[test]
    fn homogeneity_flag() {
        let f = q();
        let x = v(&f, Var::X);
        let c = v(&f, Var::C);
        let p = x.pow(3).add(&x.pow(3).mul(&c));
        assert!(p.is_homogeneous_in(&COORD_VARS, 3));
        assert!(!p.add(&x.pow(2)).is_homogeneous_in(&COORD_VARS, 3));
    }
}
