//! Projective geometry of P^3 over an exact field: points, planes, Plücker
//! lines, incidence, L-sets, and the unique projectivity between two L-sets.
//!
//! Every object stores a primitive polynomial coordinate vector (canonical
//! under projective rescaling), so structural equality decides projective
//! equality.  The Plücker order is [p01, p02, p03, p12, p13, p23].

use crate::error::{Error, Result};
use crate::field::gcd::{make_primitive, poly_gcd_many};
use crate::field::{Fe, Field, NfElem, Poly, Var};

/// Canonical projective normalization: divide the entries by their common
/// polynomial gcd, scale the first nonzero entry's leading coefficient to 1,
/// then rescale by the unique positive rational giving an integral primitive
/// vector.  Two proportional vectors normalize identically.
pub fn normalize_projective(entries: &mut [Poly]) {
    if entries.iter().all(Poly::is_zero) {
        return;
    }
    make_primitive(entries);
    let lead = entries
        .iter()
        .find(|e| !e.is_zero())
        .unwrap()
        .leading()
        .unwrap()
        .1
        .clone();
    if !lead.is_one() {
        let inv = lead.inv().expect("nonzero leading coefficient");
        for e in entries.iter_mut() {
            *e = e.mul_scalar(&inv);
        }
    }
    // integral rescale, common to all entries
    use num::bigint::BigInt;
    use num::{One, Signed, Zero};
    let mut lcm = BigInt::one();
    let mut gcd = BigInt::zero();
    for e in entries.iter() {
        for c in e.terms().map(|(_, c)| c) {
            for q in c.coeffs() {
                if q.is_zero() {
                    continue;
                }
                lcm = num::integer::lcm(lcm, q.denom().clone());
            }
        }
    }
    for e in entries.iter() {
        for c in e.terms().map(|(_, c)| c) {
            for q in c.coeffs() {
                if q.is_zero() {
                    continue;
                }
                gcd = num::integer::gcd(gcd, (q.numer() * (&lcm / q.denom())).abs());
            }
        }
    }
    if gcd.is_zero() {
        return;
    }
    let scale = crate::field::Rat::new(lcm, gcd);
    if scale.is_one() {
        return;
    }
    for e in entries.iter_mut() {
        *e = e.mul_scalar(&NfElem::from_rat(e.field(), scale.clone()));
    }
}

fn fe_vec(v: &[Poly]) -> Vec<Fe> {
    v.iter().map(|p| Fe::from_poly(p.clone())).collect()
}

/// Clears a fraction vector to a primitive polynomial vector.
pub fn clear_fractions(v: &[Fe]) -> Vec<Poly> {
    let field = v[0].field();
    let mut den = Poly::one(field);
    for e in v {
        den = den.mul(e.den());
    }
    let mut out: Vec<Poly> = v
        .iter()
        .map(|e| {
            let cof = den.exact_div(e.den()).expect("product of denominators");
            e.num().mul(&cof)
        })
        .collect();
    normalize_projective(&mut out);
    out
}

// ---------------------------------------------------------------------------
// points, planes
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point(pub [Poly; 4]);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane(pub [Poly; 4]);

impl Point {
    pub fn new(mut coords: [Poly; 4]) -> Result<Point> {
        normalize_projective(&mut coords);
        if coords.iter().all(Poly::is_zero) {
            return Err(Error::Other("zero coordinate vector".into()));
        }
        Ok(Point(coords))
    }

    pub fn from_ints(field: &Field, v: [i64; 4]) -> Point {
        Point::new([
            Poly::from_i64(field, v[0]),
            Poly::from_i64(field, v[1]),
            Poly::from_i64(field, v[2]),
            Poly::from_i64(field, v[3]),
        ])
        .expect("nonzero")
    }

    pub fn field(&self) -> &Field {
        self.0[0].field()
    }

    pub fn on_plane(&self, pl: &Plane) -> bool {
        dot4(&self.0, &pl.0).is_zero()
    }
}

impl Plane {
    pub fn new(mut coeffs: [Poly; 4]) -> Result<Plane> {
        normalize_projective(&mut coeffs);
        if coeffs.iter().all(Poly::is_zero) {
            return Err(Error::Other("zero plane vector".into()));
        }
        Ok(Plane(coeffs))
    }

    /// The linear form a*x + b*y + c*z + d*t.
    pub fn form(&self) -> Poly {
        let field = self.0[0].field();
        let mut out = Poly::zero(field);
        for (i, v) in [Var::X, Var::Y, Var::Z, Var::T].iter().enumerate() {
            out = out.add(&Poly::var(field, *v).mul(&self.0[i]));
        }
        out
    }

    /// Builds a plane from a linear form in x, y, z, t.
    pub fn from_form(form: &Poly) -> Result<Plane> {
        let field = form.field();
        let mut coeffs = [
            Poly::zero(field),
            Poly::zero(field),
            Poly::zero(field),
            Poly::zero(field),
        ];
        for (m, c) in form.terms() {
            let mut which = None;
            for (i, v) in [Var::X, Var::Y, Var::Z, Var::T].iter().enumerate() {
                if m.0[*v as usize] == 1 && m.degree_in(&crate::field::COORD_VARS) == 1 {
                    which = Some(i);
                }
            }
            let i = which.ok_or_else(|| Error::Other("form is not linear".into()))?;
            let mut rest = *m;
            rest.0[Var::X as usize + i] = 0;
            coeffs[i] = coeffs[i].add(&Poly::monomial(field, rest, c.clone()));
        }
        Plane::new(coeffs)
    }
}

pub fn dot4(a: &[Poly; 4], b: &[Poly; 4]) -> Poly {
    let mut acc = Poly::zero(a[0].field());
    for i in 0..4 {
        acc = acc.add(&a[i].mul(&b[i]));
    }
    acc
}

// ---------------------------------------------------------------------------
// lines
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Line {
    plu: [Poly; 6],
    span: Option<Box<(Point, Point)>>,
}

impl PartialEq for Line {
    fn eq(&self, other: &Self) -> bool {
        self.plu == other.plu
    }
}
impl Eq for Line {}

/// Index pairs behind the Plücker order [p01, p02, p03, p12, p13, p23].
const PLU_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl Line {
    pub fn from_points(a: &Point, b: &Point) -> Result<Line> {
        let mut plu: [Poly; 6] = core::array::from_fn(|k| {
            let (i, j) = PLU_PAIRS[k];
            a.0[i].mul(&b.0[j]).sub(&a.0[j].mul(&b.0[i]))
        });
        if plu.iter().all(Poly::is_zero) {
            return Err(Error::CoincidentPoints);
        }
        normalize_projective(&mut plu);
        Ok(Line {
            plu,
            span: Some(Box::new((a.clone(), b.clone()))),
        })
    }

    /// Reconstructs a line (with span points) from its Plücker vector; the
    /// quadric relation is checked and span points are recovered from the
    /// columns of the antisymmetric Plücker matrix.
    pub fn from_plucker(plu_in: [Poly; 6]) -> Result<Line> {
        let mut plu = plu_in;
        if plu.iter().all(Poly::is_zero) {
            return Err(Error::NotAPluckerVector);
        }
        normalize_projective(&mut plu);
        let q = plu[0]
            .mul(&plu[5])
            .sub(&plu[1].mul(&plu[4]))
            .add(&plu[2].mul(&plu[3]));
        if !q.is_zero() {
            return Err(Error::NotAPluckerVector);
        }
        let field = plu[0].field().clone();
        // columns of the Plücker matrix are points of the line
        let mut mat = vec![vec![Poly::zero(&field); 4]; 4];
        for (k, &(i, j)) in PLU_PAIRS.iter().enumerate() {
            mat[i][j] = plu[k].clone();
            mat[j][i] = plu[k].neg();
        }
        let mut pts: Vec<Point> = vec![];
        for col in 0..4 {
            let v: [Poly; 4] = core::array::from_fn(|r| mat[r][col].clone());
            if v.iter().all(Poly::is_zero) {
                continue;
            }
            let p = Point::new(v)?;
            if !pts.contains(&p) {
                pts.push(p);
            }
            if pts.len() == 2 {
                break;
            }
        }
        if pts.len() < 2 {
            return Err(Error::NotAPluckerVector);
        }
        let b = pts.pop().unwrap();
        let a = pts.pop().unwrap();
        let line = Line::from_points(&a, &b)?;
        if line.plu != plu {
            return Err(Error::NotAPluckerVector);
        }
        Ok(line)
    }

    pub fn plucker(&self) -> &[Poly; 6] {
        &self.plu
    }

    pub fn span(&self) -> (&Point, &Point) {
        let s = self.span.as_ref().expect("line carries span points");
        (&s.0, &s.1)
    }

    pub fn field(&self) -> &Field {
        self.plu[0].field()
    }

    /// The bilinear pairing whose vanishing is incidence.
    pub fn pairing(&self, other: &Line) -> Poly {
        let p = &self.plu;
        let q = &other.plu;
        p[0].mul(&q[5])
            .sub(&p[1].mul(&q[4]))
            .add(&p[2].mul(&q[3]))
            .add(&p[3].mul(&q[2]))
            .sub(&p[4].mul(&q[1]))
            .add(&p[5].mul(&q[0]))
    }

    pub fn meets(&self, other: &Line) -> bool {
        self.pairing(other).is_zero()
    }

    /// The four components of the wedge of the Plücker vector with a point;
    /// they all vanish exactly when the point lies on the line.
    pub fn wedge_conditions(&self, p: &Point) -> [Poly; 4] {
        let pl = &self.plu;
        let q = &p.0;
        // triples (i<j<k) of {0,1,2,3}: p_ij q_k - p_ik q_j + p_jk q_i
        let idx = |i: usize, j: usize| -> &Poly {
            let k = PLU_PAIRS.iter().position(|&(a, b)| (a, b) == (i, j)).unwrap();
            &pl[k]
        };
        [
            idx(0, 1).mul(&q[2]).sub(&idx(0, 2).mul(&q[1])).add(&idx(1, 2).mul(&q[0])),
            idx(0, 1).mul(&q[3]).sub(&idx(0, 3).mul(&q[1])).add(&idx(1, 3).mul(&q[0])),
            idx(0, 2).mul(&q[3]).sub(&idx(0, 3).mul(&q[2])).add(&idx(2, 3).mul(&q[0])),
            idx(1, 2).mul(&q[3]).sub(&idx(1, 3).mul(&q[2])).add(&idx(2, 3).mul(&q[1])),
        ]
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.wedge_conditions(p).iter().all(Poly::is_zero)
    }

    /// Two independent planes through the line, from the kernel of the
    /// span-point matrix.
    pub fn plane_pair(&self) -> (Plane, Plane) {
        let (a, b) = self.span();
        let rows = vec![fe_vec(&a.0), fe_vec(&b.0)];
        let ker = kernel_basis(&rows);
        assert_eq!(ker.len(), 2, "a line lies on a 2-dimensional pencil of planes");
        let p1 = clear_fractions(&ker[0]);
        let p2 = clear_fractions(&ker[1]);
        (
            Plane::new([p1[0].clone(), p1[1].clone(), p1[2].clone(), p1[3].clone()]).unwrap(),
            Plane::new([p2[0].clone(), p2[1].clone(), p2[2].clone(), p2[3].clone()]).unwrap(),
        )
    }
}

/// Common point of two distinct meeting lines.
pub fn meet_point(l: &Line, m: &Line) -> Result<Point> {
    if l == m {
        return Err(Error::EqualLines);
    }
    if !l.meets(m) {
        return Err(Error::SkewLines);
    }
    let (a, b) = l.span();
    let (c, d) = m.span();
    // alpha*A + beta*B = gamma*C + delta*D
    let rows: Vec<Vec<Fe>> = (0..4)
        .map(|i| {
            vec![
                Fe::from_poly(a.0[i].clone()),
                Fe::from_poly(b.0[i].clone()),
                Fe::from_poly(c.0[i].neg()),
                Fe::from_poly(d.0[i].neg()),
            ]
        })
        .collect();
    let ker = kernel_basis(&rows);
    if ker.len() != 1 {
        return Err(Error::NonUniqueSolution);
    }
    let coeffs = clear_fractions(&ker[0]);
    let pt: [Poly; 4] = core::array::from_fn(|i| {
        a.0[i].mul(&coeffs[0]).add(&b.0[i].mul(&coeffs[1]))
    });
    Point::new(pt)
}

/// Common plane of two distinct meeting lines.
pub fn span_plane(l: &Line, m: &Line) -> Result<Plane> {
    if l == m {
        return Err(Error::EqualLines);
    }
    if !l.meets(m) {
        return Err(Error::SkewLines);
    }
    let (a, b) = l.span();
    let (c, d) = m.span();
    let rows = vec![fe_vec(&a.0), fe_vec(&b.0), fe_vec(&c.0), fe_vec(&d.0)];
    let ker = kernel_basis(&rows);
    if ker.len() != 1 {
        return Err(Error::NonUniqueSolution);
    }
    let v = clear_fractions(&ker[0]);
    Plane::new([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()])
}

// ---------------------------------------------------------------------------
// L-sets
// ---------------------------------------------------------------------------

/// The geometric L-set pattern: l2 meets l1, l3, l5; l4 meets l1, l3; no
/// other pair meets; all five distinct.
pub fn is_lset(lines: &[Line]) -> bool {
    if lines.len() != 5 && lines.len() != 6 {
        return false;
    }
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            if lines[i] == lines[j] {
                return false;
            }
        }
    }
    let meets = |i: usize, j: usize| lines[i].meets(&lines[j]);
    let base = meets(0, 1)
        && meets(1, 2)
        && meets(1, 4)
        && meets(0, 3)
        && meets(2, 3)
        && !meets(0, 2)
        && !meets(0, 4)
        && !meets(2, 4)
        && !meets(3, 4)
        && !meets(1, 3);
    if !base {
        return false;
    }
    if lines.len() == 6 {
        meets(5, 1) && meets(5, 3) && !meets(5, 0) && !meets(5, 2) && !meets(5, 4)
    } else {
        true
    }
}

/// The four frame points l1∩l2, l2∩l3, l3∩l4, l4∩l1 of an L-set.
pub fn frame_points(lines: &[Line; 5]) -> Result<[Point; 4]> {
    Ok([
        meet_point(&lines[0], &lines[1])?,
        meet_point(&lines[1], &lines[2])?,
        meet_point(&lines[2], &lines[3])?,
        meet_point(&lines[3], &lines[0])?,
    ])
}

// ---------------------------------------------------------------------------
// projectivities
// ---------------------------------------------------------------------------

/// An invertible 4x4 matrix up to scale, entries in canonical primitive
/// polynomial form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projectivity {
    pub m: [[Poly; 4]; 4],
}

impl Projectivity {
    pub fn new(mut m: [[Poly; 4]; 4]) -> Projectivity {
        let mut flat: Vec<Poly> = m
            .iter()
            .flat_map(|row| row.iter().cloned())
            .collect();
        normalize_projective(&mut flat);
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = flat[4 * i + j].clone();
            }
        }
        Projectivity { m }
    }

    pub fn identity(field: &Field) -> Projectivity {
        let mut m: [[Poly; 4]; 4] = core::array::from_fn(|_| core::array::from_fn(|_| Poly::zero(field)));
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Poly::one(field);
        }
        Projectivity { m }
    }

    pub fn is_identity(&self) -> bool {
        *self == Projectivity::identity(self.field())
    }

    pub fn field(&self) -> &Field {
        self.m[0][0].field()
    }

    pub fn det(&self) -> Poly {
        det4(&self.m)
    }

    pub fn adjugate(&self) -> Projectivity {
        Projectivity::new(adjugate4(&self.m))
    }

    /// The inverse as a projectivity (the adjugate, up to scale).
    pub fn inverse(&self) -> Projectivity {
        self.adjugate()
    }

    pub fn compose(&self, other: &Projectivity) -> Projectivity {
        let field = self.field();
        let mut out: [[Poly; 4]; 4] =
            core::array::from_fn(|_| core::array::from_fn(|_| Poly::zero(field)));
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    out[i][j] = out[i][j].add(&self.m[i][k].mul(&other.m[k][j]));
                }
            }
        }
        Projectivity::new(out)
    }

    pub fn proportional_to(&self, other: &Projectivity) -> bool {
        self == other || {
            // normalization is canonical, so proportional matrices are equal
            false
        }
    }

    pub fn apply_point(&self, p: &Point) -> Point {
        let v: [Poly; 4] = core::array::from_fn(|i| {
            let mut acc = Poly::zero(self.field());
            for j in 0..4 {
                acc = acc.add(&self.m[i][j].mul(&p.0[j]));
            }
            acc
        });
        Point::new(v).expect("invertible matrix maps points to points")
    }

    pub fn apply_plane(&self, u: &Plane) -> Plane {
        // inverse-transpose action, with the adjugate standing in for the
        // inverse (projective scale is irrelevant)
        let adj = self.adjugate();
        let v: [Poly; 4] = core::array::from_fn(|i| {
            let mut acc = Poly::zero(self.field());
            for j in 0..4 {
                acc = acc.add(&adj.m[j][i].mul(&u.0[j]));
            }
            acc
        });
        Plane::new(v).expect("invertible matrix maps planes to planes")
    }

    pub fn apply_line(&self, l: &Line) -> Line {
        let (a, b) = l.span();
        Line::from_points(&self.apply_point(a), &self.apply_point(b))
            .expect("invertible matrix maps distinct points to distinct points")
    }

    /// F(M x): substitution of the matrix into a form in x, y, z, t.
    pub fn pullback_form(&self, form: &Poly) -> Poly {
        let field = self.field();
        let coords = [Var::X, Var::Y, Var::Z, Var::T];
        let mut map = std::collections::BTreeMap::new();
        for (i, v) in coords.iter().enumerate() {
            let mut lin = Poly::zero(field);
            for (j, w) in coords.iter().enumerate() {
                lin = lin.add(&Poly::var(field, *w).mul(&self.m[i][j]));
            }
            map.insert(*v, lin);
        }
        form.substitute_polys(&map)
    }

    /// The image of a surface form under the projectivity: F ∘ M^{-1} up to
    /// scale, realized with the adjugate.
    pub fn pushforward_form(&self, form: &Poly) -> Poly {
        self.adjugate().pullback_form(form)
    }
}

pub fn det3(m: &[[Poly; 3]; 3]) -> Poly {
    let a = m[0][0].mul(&m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1])));
    let b = m[0][1].mul(&m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0])));
    let c = m[0][2].mul(&m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0])));
    a.sub(&b).add(&c)
}

pub fn det4(m: &[[Poly; 4]; 4]) -> Poly {
    let field = m[0][0].field();
    let mut acc = Poly::zero(field);
    for j in 0..4 {
        let minor = minor3(m, 0, j);
        let term = m[0][j].mul(&det3(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn minor3(m: &[[Poly; 4]; 4], del_r: usize, del_c: usize) -> [[Poly; 3]; 3] {
    let rows: Vec<usize> = (0..4).filter(|&r| r != del_r).collect();
    let cols: Vec<usize> = (0..4).filter(|&c| c != del_c).collect();
    core::array::from_fn(|i| core::array::from_fn(|j| m[rows[i]][cols[j]].clone()))
}

pub fn adjugate4(m: &[[Poly; 4]; 4]) -> [[Poly; 4]; 4] {
    core::array::from_fn(|i| {
        core::array::from_fn(|j| {
            // adj[i][j] = cofactor[j][i]
            let d = det3(&minor3(m, j, i));
            if (i + j) % 2 == 0 {
                d
            } else {
                d.neg()
            }
        })
    })
}

// ---------------------------------------------------------------------------
// exact linear algebra
// ---------------------------------------------------------------------------

/// Basis of the solution space of `rows * x = 0`, by Gauss-Jordan
/// elimination over the fraction field; deterministic pivoting.
pub fn kernel_basis(rows: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
    let n = rows[0].len();
    let field = rows[0][0].field().clone();
    let mut mat: Vec<Vec<Fe>> = rows.to_vec();
    let mut pivots: Vec<usize> = vec![];
    let mut r = 0;
    for col in 0..n {
        // find pivot row
        let mut pivot = None;
        for i in r..mat.len() {
            if !mat[i][col].is_zero() {
                pivot = Some(i);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        mat.swap(r, p);
        let inv = mat[r][col].inv().expect("pivot is nonzero");
        for j in col..n {
            mat[r][j] = &mat[r][j] * &inv;
        }
        for i in 0..mat.len() {
            if i == r || mat[i][col].is_zero() {
                continue;
            }
            let factor = mat[i][col].clone();
            for j in col..n {
                let t = &factor * &mat[r][j];
                mat[i][j] = &mat[i][j] - &t;
            }
        }
        pivots.push(col);
        r += 1;
        if r == mat.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = vec![];
    for &fc in &free {
        let mut v = vec![Fe::zero(&field); n];
        v[fc] = Fe::one(&field);
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -&mat[ri][fc];
        }
        basis.push(v);
    }
    basis
}

/// The unique projectivity sending the first L-set to the second, line by
/// line.  The matrix is assembled from the frame of four meet points: with
/// R = [P1 P2 P3 P4] and R' the target frame, M = R' diag(λ) R^{-1}, where
/// λ is pinned (projectively) by the two span points of l5 landing on l5'.
pub fn find_projectivity(from: &[Line; 5], to: &[Line; 5]) -> Result<Projectivity> {
    if !is_lset(from) || !is_lset(to) {
        return Err(Error::InvalidLSet);
    }
    let field = from[0].field().clone();
    let f = frame_points(from)?;
    let g = frame_points(to)?;
    let r: [[Poly; 4]; 4] = core::array::from_fn(|i| core::array::from_fn(|k| f[k].0[i].clone()));
    if det4(&r).is_zero() {
        return Err(Error::DegenerateFrame);
    }
    let adj_r = adjugate4(&r);
    let (a, b) = from[4].span();
    let ra: [Poly; 4] = core::array::from_fn(|k| {
        let mut acc = Poly::zero(&field);
        for j in 0..4 {
            acc = acc.add(&adj_r[k][j].mul(&a.0[j]));
        }
        acc
    });
    let rb: [Poly; 4] = core::array::from_fn(|k| {
        let mut acc = Poly::zero(&field);
        for j in 0..4 {
            acc = acc.add(&adj_r[k][j].mul(&b.0[j]));
        }
        acc
    });
    let (pi1, pi2) = to[4].plane_pair();
    // conditions: sum_k lambda_k (pi . P'_k) (R^{-1} X)_k = 0
    let mut rows: Vec<Vec<Fe>> = vec![];
    for pi in [&pi1, &pi2] {
        for x in [&ra, &rb] {
            let row: Vec<Fe> = (0..4)
                .map(|k| Fe::from_poly(dot4(&pi.0, &g[k].0).mul(&x[k])))
                .collect();
            rows.push(row);
        }
    }
    let ker = kernel_basis(&rows);
    if ker.len() != 1 {
        return Err(Error::NonUniqueSolution);
    }
    let lambda = clear_fractions(&ker[0]);
    // M = R' diag(lambda) adj(R)
    let m: [[Poly; 4]; 4] = core::array::from_fn(|i| {
        core::array::from_fn(|j| {
            let mut acc = Poly::zero(&field);
            for k in 0..4 {
                acc = acc.add(&g[k].0[i].mul(&lambda[k]).mul(&adj_r[k][j]));
            }
            acc
        })
    });
    let m = Projectivity::new(m);
    if m.det().is_zero() {
        return Err(Error::PostCheckFailed);
    }
    for i in 0..5 {
        if m.apply_line(&from[i]) != to[i] {
            return Err(Error::PostCheckFailed);
        }
    }
    Ok(m)
}

/// The geometric basic L-set: V(y,z), V(x,y), V(x,t), V(x-t, y-z),
/// V(x-y, z+t).  These five lines lie on every member of the parametric
/// cubic family and carry the labels E1, G4, E2, G3, E3.
pub fn basic_lines(field: &Field) -> [Line; 5] {
    let p = |v: [i64; 4]| Point::from_ints(field, v);
    [
        Line::from_points(&p([1, 0, 0, 0]), &p([0, 0, 0, 1])).unwrap(),
        Line::from_points(&p([0, 0, 1, 0]), &p([0, 0, 0, 1])).unwrap(),
        Line::from_points(&p([0, 1, 0, 0]), &p([0, 0, 1, 0])).unwrap(),
        Line::from_points(&p([1, 0, 0, 1]), &p([0, 1, 1, 0])).unwrap(),
        Line::from_points(&p([1, 1, 0, 0]), &p([0, 0, 1, -1])).unwrap(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::NumberField;

    fn q() -> Field {
        NumberField::rationals()
    }

    fn ints_line(field: &Field, a: [i64; 4], b: [i64; 4]) -> Line {
        Line::from_points(&Point::from_ints(field, a), &Point::from_ints(field, b)).unwrap()
    }

    #[test]
    fn plucker_of_coordinate_lines() {
        let f = q();
        let l1 = ints_line(&f, [1, 0, 0, 0], [0, 0, 0, 1]);
        let as_ints: Vec<String> = l1.plucker().iter().map(|p| p.to_string()).collect();
        assert_eq!(as_ints, ["0", "0", "1", "0", "0", "0"]);
        let l2 = ints_line(&f, [0, 0, 1, 0], [0, 0, 0, 1]);
        let as_ints: Vec<String> = l2.plucker().iter().map(|p| p.to_string()).collect();
        assert_eq!(as_ints, ["0", "0", "0", "0", "0", "1"]);
        // swapping the points gives the same normalized line
        let l1r = ints_line(&f, [0, 0, 0, 1], [1, 0, 0, 0]);
        assert_eq!(l1, l1r);
        assert!(l1.meets(&l2));
        assert!(l1.meets(&l1));
    }

    #[test]
    fn coincident_points_rejected() {
        let f = q();
        let a = Point::from_ints(&f, [1, 2, 3, 4]);
        let b = Point::from_ints(&f, [2, 4, 6, 8]);
        assert_eq!(Line::from_points(&a, &b).unwrap_err(), Error::CoincidentPoints);
    }

    #[test]
    fn meet_and_span_of_basic_pair() {
        let f = q();
        let l = basic_lines(&f);
        let p = meet_point(&l[0], &l[1]).unwrap();
        assert_eq!(p, Point::from_ints(&f, [0, 0, 0, 1]));
        let pl = span_plane(&l[0], &l[1]).unwrap();
        assert_eq!(pl.form().to_string(), "y");
        // skew pair
        assert_eq!(meet_point(&l[0], &l[2]).unwrap_err(), Error::SkewLines);
        assert!(!l[0].meets(&l[2]));
        assert!(!l[0].pairing(&l[2]).is_zero());
    }

    #[test]
    fn basic_lines_form_an_lset() {
        let f = q();
        let l = basic_lines(&f);
        assert!(is_lset(&l));
        // swapping l1 and l3 breaks the geometric pattern
        let swapped = [l[2].clone(), l[1].clone(), l[0].clone(), l[3].clone(), l[4].clone()];
        assert!(!is_lset(&swapped));
        let copies = [l[0].clone(), l[0].clone(), l[0].clone(), l[0].clone(), l[0].clone()];
        assert!(!is_lset(&copies));
    }

    #[test]
    fn identity_projectivity_from_equal_lsets() {
        let f = q();
        let l = basic_lines(&f);
        let m = find_projectivity(&l, &l).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn recovers_random_matrices_up_to_scale() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let f = q();
        let l = basic_lines(&f);
        let mut done = 0;
        while done < 12 {
            let m: [[Poly; 4]; 4] = core::array::from_fn(|_| {
                core::array::from_fn(|_| Poly::from_i64(&f, rng.gen_range(-5..=5)))
            });
            if det4(&m).is_zero() {
                continue;
            }
            let pr = Projectivity::new(m);
            let img: [Line; 5] = core::array::from_fn(|i| pr.apply_line(&l[i]));
            if !is_lset(&img) {
                continue;
            }
            let rec = find_projectivity(&l, &img).unwrap();
            assert_eq!(rec, pr, "normalized matrices must agree");
            // and the composition with the reverse is the identity
            let back = find_projectivity(&img, &l).unwrap();
            assert!(rec.compose(&back).is_identity() || back.compose(&rec).is_identity());
            done += 1;
        }
    }

    #[test]
    fn group_action_on_objects() {
        let f = q();
        let l = basic_lines(&f);
        let m = Projectivity::new(core::array::from_fn(|i| {
            core::array::from_fn(|j| Poly::from_i64(&f, [[1, 2, 0, 1], [0, 1, 1, 0], [3, 0, 1, 0], [0, 0, 1, 1]][i][j]))
        }));
        let n = Projectivity::new(core::array::from_fn(|i| {
            core::array::from_fn(|j| Poly::from_i64(&f, [[1, 0, 0, 2], [1, 1, 0, 0], [0, 2, 1, 0], [0, 0, 0, 1]][i][j]))
        }));
        assert!(!m.det().is_zero());
        assert!(!n.det().is_zero());
        let mn = m.compose(&n);
        for line in &l {
            assert_eq!(mn.apply_line(line), m.apply_line(&n.apply_line(line)));
        }
        let pt = Point::from_ints(&f, [1, 2, -1, 3]);
        assert_eq!(mn.apply_point(&pt), m.apply_point(&n.apply_point(&pt)));
        // incidence is preserved
        assert!(m.apply_line(&l[0]).meets(&m.apply_line(&l[1])));
        // plane transform is compatible with point transform
        let pl = span_plane(&l[0], &l[1]).unwrap();
        let q0 = meet_point(&l[0], &l[1]).unwrap();
        assert!(m.apply_point(&q0).on_plane(&m.apply_plane(&pl)));
    }

    #[test]
    fn frame_points_are_in_general_position() {
        let f = q();
        let l = basic_lines(&f);
        let fr = frame_points(&l).unwrap();
        let r: [[Poly; 4]; 4] =
            core::array::from_fn(|i| core::array::from_fn(|k| fr[k].0[i].clone()));
        assert!(!det4(&r).is_zero());
    }

    #[test]
    fn plucker_roundtrip_with_span_recovery() {
        let f = q();
        let l = ints_line(&f, [1, 2, 3, 4], [0, 1, -1, 2]);
        let rebuilt = Line::from_plucker(l.plucker().clone()).unwrap();
        assert_eq!(rebuilt, l);
        // quadric violation is rejected
        let mut bad = l.plucker().clone();
        bad[0] = Poly::from_i64(&f, 1);
        bad[5] = Poly::from_i64(&f, 1);
        bad[1] = Poly::zero(&f);
        bad[4] = Poly::zero(&f);
        bad[2] = Poly::from_i64(&f, 1);
        bad[3] = Poly::from_i64(&f, 1);
        assert_eq!(Line::from_plucker(bad).unwrap_err(), Error::NotAPluckerVector);
    }
}
