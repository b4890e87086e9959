//! Multivariate polynomial gcd by primitive pseudo-remainder sequences.
//!
//! Used to keep fractions reduced and projective coordinate vectors
//! primitive.  The polynomials appearing here are small (a handful of
//! variables, modest degrees), so the classical recursive PRS is enough.

use super::numfield::NfElem;
use super::poly::{Mono, Poly, Var};

/// Coefficients of p viewed as a univariate polynomial in v; index = power
/// of v, entries free of v.
fn uni_view(p: &Poly, v: Var) -> Vec<Poly> {
    let d = p.degree_in(v) as usize;
    let mut out = vec![Poly::zero(p.field()); d + 1];
    for (m, c) in p.terms() {
        let e = m.0[v as usize] as usize;
        let mut rest = *m;
        rest.0[v as usize] = 0;
        out[e] = out[e].add(&Poly::monomial(p.field(), rest, c.clone()));
    }
    out
}


/// Content of p with respect to v: the gcd of its univariate-view
/// coefficients.
fn content_wrt(p: &Poly, v: Var) -> Poly {
    let coeffs = uni_view(p, v);
    let mut g = Poly::zero(p.field());
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = poly_gcd(&g, &c);
        if g.is_constant() {
            break;
        }
    }
    if g.is_zero() {
        Poly::one(p.field())
    } else {
        g
    }
}

/// Pseudo-remainder of a by b with respect to v (deg_v a >= deg_v b > 0).
fn pseudo_rem(a: &Poly, b: &Poly, v: Var) -> Poly {
    let db = b.degree_in(v);
    let bv = uni_view(b, v);
    let lead_b = bv[db as usize].clone();
    let mut r = a.clone();
    loop {
        let dr = r.degree_in(v);
        if r.is_zero() || dr < db {
            return r;
        }
        let rv = uni_view(&r, v);
        let lead_r = rv[dr as usize].clone();
        let mut shift = Mono::one();
        shift.0[v as usize] = dr - db;
        // r := lead_b * r - lead_r * v^(dr-db) * b
        r = lead_b.mul(&r).sub(&lead_r.mul(&b.mul_mono(&shift)));
    }
}

/// Gcd of two polynomials, returned in canonical integral-primitive form.
/// The gcd of anything with a nonzero constant is 1 (coefficients lie in a
/// field).
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let field = a.field().clone();
    if a.is_zero() {
        return if b.is_zero() {
            Poly::zero(&field)
        } else {
            b.canonical_integral()
        };
    }
    if b.is_zero() {
        return a.canonical_integral();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(&field);
    }
    // main variable: first one appearing in either operand
    let v = Var::all()
        .into_iter()
        .find(|&v| a.uses_var(v) || b.uses_var(v))
        .expect("nonconstant polynomial has a variable");
    if !a.uses_var(v) || !b.uses_var(v) {
        // v cannot divide the gcd; recurse into the coefficients
        let ca = content_wrt(a, v);
        let cb = content_wrt(b, v);
        return poly_gcd(&ca, &cb);
    }
    let ca = content_wrt(a, v);
    let cb = content_wrt(b, v);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let cont_gcd = poly_gcd(&ca, &cb);

    let (mut r0, mut r1) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    while !r1.is_zero() {
        let rem = pseudo_rem(&r0, &r1, v);
        r0 = r1;
        r1 = if rem.is_zero() {
            rem
        } else {
            let c = content_wrt(&rem, v);
            rem.exact_div(&c).expect("content divides")
        };
    }
    let pp_gcd = if r0.degree_in(v) == 0 {
        Poly::one(&field)
    } else {
        let c = content_wrt(&r0, v);
        r0.exact_div(&c).expect("content divides")
    };
    cont_gcd.mul(&pp_gcd).canonical_integral()
}

pub fn poly_gcd_many(polys: &[Poly]) -> Poly {
    let mut g = Poly::zero(polys[0].field());
    for p in polys {
        g = poly_gcd(&g, p);
        if !g.is_zero() && g.is_constant() {
            break;
        }
    }
    g
}

/// Divides every entry by the gcd of all entries and rescales to the
/// canonical integral form; used for projective coordinate vectors.
pub fn make_primitive(entries: &mut [Poly]) {
    if entries.iter().all(Poly::is_zero) {
        return;
    }
    let g = poly_gcd_many(entries);
    if !g.is_constant() {
        for e in entries.iter_mut() {
            *e = e.exact_div(&g).expect("gcd divides");
        }
    }
    // common rational rescale, keyed to the first nonzero entry
    let first = entries.iter().find(|e| !e.is_zero()).unwrap();
    let lead = first.leading().unwrap().1.clone();
    let target = first.canonical_integral().leading().unwrap().1.clone();
    let scale = target
        .div(&lead)
        .expect("leading coefficient is invertible");
    if scale.is_one() {
        return;
    }
    for e in entries.iter_mut() {
        *e = e.mul_scalar(&scale);
    }
}

/// Scales a projective vector of constants so the first nonzero entry is 1.
pub fn scale_first_to_one(entries: &mut [Poly]) -> bool {
    let first = match entries.iter().find(|e| !e.is_zero()) {
        Some(e) => e,
        None => return false,
    };
    match first.as_constant() {
        Some(c) => {
            let inv = c.inv().expect("nonzero");
            for e in entries.iter_mut() {
                *e = e.mul_scalar(&inv);
            }
            true
        }
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::super::numfield::{NfElem, NumberField};
    use super::*;

    #[test]
    fn gcd_of_products() {
        let f = NumberField::rationals();
        let x = Poly::var(&f, Var::X);
        let y = Poly::var(&f, Var::Y);
        let g = x.add(&y);
        let a = g.mul(&x.sub(&y));
        let b = g.mul(&x.mul(&x).add(&Poly::one(&f)));
        let got = poly_gcd(&a, &b);
        assert!(got.proportional(&g));
    }

    #[test]
    fn coprime_gives_one() {
        let f = NumberField::rationals();
        let x = Poly::var(&f, Var::X);
        let y = Poly::var(&f, Var::Y);
        let got = poly_gcd(&x, &y);
        assert!(got.proportional(&Poly::one(&f)));
    }

    #[test]
    fn primitive_vector() {
        let f = NumberField::rationals();
        let x = Poly::var(&f, Var::X);
        let y = Poly::var(&f, Var::Y);
        let mut v = [
            x.mul(&x).mul_scalar(&NfElem::from_i64(&f, 2)),
            x.mul(&y).mul_scalar(&NfElem::from_i64(&f, 4)),
        ];
        make_primitive(&mut v);
        assert_eq!(v[0].to_string(), "x");
        assert_eq!(v[1].to_string(), "2*y");
    }
}
