//! The fraction field of the polynomial ring: scalars for all geometry.
//!
//! A value is a reduced pair num/den with the denominator in canonical
//! integral-primitive form (so equality is plain structural equality).
//! Constant denominators are always folded into the numerator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gcd::poly_gcd;
use super::numfield::{Field, NfElem};
use super::poly::{Poly, Var};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fe {
    num: Poly,
    den: Poly,
}

impl Fe {
    pub fn new(num: Poly, den: Poly) -> Result<Fe> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Fe::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Fe {
        if num.is_zero() {
            return Fe {
                den: Poly::one(num.field()),
                num,
            };
        }
        if let Some(c) = den.as_constant() {
            return Fe {
                num: num.div_scalar(&c),
                den: Poly::one(num.field()),
            };
        }
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        if let Some(c) = den.as_constant() {
            return Fe {
                num: num.div_scalar(&c),
                den: Poly::one(num.field()),
            };
        }
        let den_c = den.canonical_integral();
        let scale = den_c
            .leading()
            .unwrap()
            .1
            .div(den.leading().unwrap().1)
            .expect("leading coefficient invertible");
        num = num.mul_scalar(&scale);
        den = den_c;
        Fe { num, den }
    }

    pub fn from_poly(p: Poly) -> Fe {
        Fe {
            den: Poly::one(p.field()),
            num: p,
        }
    }

    pub fn from_nf(c: NfElem) -> Fe {
        Fe::from_poly(Poly::constant(c))
    }

    pub fn from_i64(field: &Field, n: i64) -> Fe {
        Fe::from_poly(Poly::from_i64(field, n))
    }

    pub fn zero(field: &Field) -> Fe {
        Fe::from_poly(Poly::zero(field))
    }

    pub fn one(field: &Field) -> Fe {
        Fe::from_poly(Poly::one(field))
    }

    pub fn var(field: &Field, v: Var) -> Fe {
        Fe::from_poly(Poly::var(field, v))
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.as_constant().map_or(false, |c| c.is_one())
            && self.num.as_constant().map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<NfElem> {
        if self.den.is_constant() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den.as_constant().map_or(false, |c| c.is_one()) {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Fe> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Fe::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Fe) -> Result<Fe> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, n: i32) -> Result<Fe> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        let mut acc = Fe::one(self.field());
        for _ in 0..n {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Substitutes parameter variables by fraction values; variables not in
    /// the map are kept.
    pub fn substitute(&self, map: &std::collections::BTreeMap<Var, Fe>) -> Fe {
        let n = substitute_poly(&self.num, map);
        let d = substitute_poly(&self.den, map);
        n.checked_div(&d).expect("denominator specialized to zero")
    }
}

/// Substitutes fraction values into a polynomial, term by term.
pub fn substitute_poly(p: &Poly, map: &std::collections::BTreeMap<Var, Fe>) -> Fe {
    let field = p.field();
    let mut acc = Fe::zero(field);
    let mut powers: std::collections::BTreeMap<(Var, u16), Fe> = Default::default();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut term = Fe::from_nf(c.clone());
        for (&v, val) in map {
            let e = m.0[v as usize];
            if e == 0 {
                continue;
            }
            rest.0[v as usize] = 0;
            let p = powers
                .entry((v, e))
                .or_insert_with(|| val.pow(e as i32).expect("nonnegative power"))
                .clone();
            term = &term * &p;
        }
        let mono = Fe::from_poly(Poly::monomial(field, rest, NfElem::one(field)));
        acc = &acc + &(&term * &mono);
    }
    acc
}

impl Add for &Fe {
    type Output = Fe;
    fn add(self, other: &Fe) -> Fe {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Fe::reduced(num, den)
    }
}

impl Sub for &Fe {
    type Output = Fe;
    fn sub(self, other: &Fe) -> Fe {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Fe::reduced(num, den)
    }
}

impl Mul for &Fe {
    type Output = Fe;
    fn mul(self, other: &Fe) -> Fe {
        if self.is_zero() || other.is_zero() {
            return Fe::zero(self.field());
        }
        Fe::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }
}

impl Div for &Fe {
    type Output = Fe;
    fn div(self, other: &Fe) -> Fe {
        self.checked_div(other).expect("division by zero")
    }
}

impl Neg for &Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        Fe {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().map_or(false, |c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            let n = if self.num.num_terms() > 1 {
                format!("({})", self.num)
            } else {
                format!("{}", self.num)
            };
            let d = if self.den.num_terms() > 1 {
                format!("({})", self.den)
            } else {
                format!("{}", self.den)
            };
            write!(f, "{}/{}", n, d)
        }
    }
}

/// The four binary scalar operations, with error reporting suitable for the
/// public API: operands must share a field and division by zero is refused.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn elem_arith(a: &Fe, b: &Fe, op: BinOp) -> Result<Fe> {
    if !super::numfield::same_field(a.field(), b.field()) {
        return Err(Error::FieldMismatch);
    }
    match op {
        BinOp::Add => Ok(a + b),
        BinOp::Sub => Ok(a - b),
        BinOp::Mul => Ok(a * b),
        BinOp::Div => a.checked_div(b),
    }
}

#[cfg(test)]
mod tests {
    use super::super::numfield::NumberField;
    use super::*;

    #[test]
    fn reduction_is_canonical() {
        let f = NumberField::rationals();
        let c = Fe::var(&f, Var::C);
        let e = Fe::var(&f, Var::E);
        let a = &(&c * &c) / &(&c * &e); // c/e
        let b = &c / &e;
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "c/e");
    }

    #[test]
    fn add_then_subtract_returns_original() {
        let f = NumberField::rationals();
        let c = Fe::var(&f, Var::C);
        let e = Fe::var(&f, Var::E);
        let x = &Fe::one(&f) / &(&c + &e);
        let y = &c / &e;
        let back = &(&x + &y) - &y;
        assert_eq!(back, x);
    }

    #[test]
    fn mismatch_and_zero_division_are_reported() {
        let q = NumberField::rationals();
        let f2 = NumberField::new("w", vec![super::super::numfield::rat(3), super::super::numfield::rat(0), super::super::numfield::rat(1)]).unwrap();
        let a = Fe::one(&q);
        let b = Fe::one(&f2);
        assert_eq!(elem_arith(&a, &b, BinOp::Add).unwrap_err(), Error::FieldMismatch);
        let z = Fe::zero(&q);
        assert_eq!(elem_arith(&a, &z, BinOp::Div).unwrap_err(), Error::DivisionByZero);
    }
}
