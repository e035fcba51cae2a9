//! Exact-arithmetic verification of the three Morin normal forms and their
//! Thom-Boardman strata.
//!
//! The three local models for maps between 3-manifolds are
//!
//! ```text
//! fold:        (x, y, z) -> (x^2,             y, z)
//! cusp:        (x, y, z) -> (x^3 + x y,       y, z)
//! swallowtail: (x, y, z) -> (x^4 + x^2 y + x z, y, z)
//! ```
//!
//! Everything here runs over exact rationals: a point is in a stratum or it
//! is not, and no tolerance parameters exist in this module. The first-order
//! stratum is where the Jacobian drops rank; for these models it is cut out
//! by the single polynomial g = det(J) with nonzero gradient, and the
//! second-order symbol measures whether the Jacobian kernel is tangent to
//! {g = 0}. The third-order evaluation applies the same step once more and
//! is available for maps in the prenormal shape (q(x,y,z), y, z), where the
//! kernel field along the singular locus is constantly the x-direction.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact scalar for this module.
pub type Rational = BigRational;

fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// A point of Q^3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl RationalPoint3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        RationalPoint3 { x, y, z }
    }

    /// Point with integer coordinates.
    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        RationalPoint3::new(rat(x), rat(y), rat(z))
    }

    /// Point with coordinates (xn/d, yn/d, zn/d).
    pub fn from_fractions(xn: i64, yn: i64, zn: i64, d: i64) -> Self {
        assert!(d != 0);
        RationalPoint3::new(
            BigRational::new(BigInt::from(xn), BigInt::from(d)),
            BigRational::new(BigInt::from(yn), BigInt::from(d)),
            BigRational::new(BigInt::from(zn), BigInt::from(d)),
        )
    }
}

/// Sparse polynomial in x, y, z with exact rational coefficients. Terms are
/// keyed by exponent triples; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly3 {
    terms: BTreeMap<(u32, u32, u32), Rational>,
}

impl Poly3 {
    pub fn zero() -> Self {
        Poly3::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Builds a polynomial from (coefficient, (ex, ey, ez)) pairs.
    pub fn from_terms(terms: &[(i64, (u32, u32, u32))]) -> Self {
        let mut p = Poly3::zero();
        for &(c, e) in terms {
            p.add_term(rat(c), e);
        }
        p
    }

    pub fn var_x() -> Self {
        Poly3::from_terms(&[(1, (1, 0, 0))])
    }

    pub fn var_y() -> Self {
        Poly3::from_terms(&[(1, (0, 1, 0))])
    }

    pub fn var_z() -> Self {
        Poly3::from_terms(&[(1, (0, 0, 1))])
    }

    fn add_term(&mut self, coeff: Rational, exp: (u32, u32, u32)) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Poly3) -> Poly3 {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(c.clone(), e);
        }
        out
    }

    pub fn mul(&self, other: &Poly3) -> Poly3 {
        let mut out = Poly3::zero();
        for (&(a1, a2, a3), ca) in &self.terms {
            for (&(b1, b2, b3), cb) in &other.terms {
                out.add_term(ca * cb, (a1 + b1, a2 + b2, a3 + b3));
            }
        }
        out
    }

    pub fn neg(&self) -> Poly3 {
        let mut out = Poly3::zero();
        for (&e, c) in &self.terms {
            out.add_term(-c.clone(), e);
        }
        out
    }

    /// Partial derivative along the `axis`-th coordinate (0 = x, 1 = y,
    /// 2 = z).
    pub fn derivative(&self, axis: usize) -> Poly3 {
        let mut out = Poly3::zero();
        for (&(ex, ey, ez), c) in &self.terms {
            let (e, rest) = match axis {
                0 => (ex, (ex.wrapping_sub(1), ey, ez)),
                1 => (ey, (ex, ey.wrapping_sub(1), ez)),
                _ => (ez, (ex, ey, ez.wrapping_sub(1))),
            };
            if e > 0 {
                out.add_term(c * rat(e as i64), rest);
            }
        }
        out
    }

    pub fn eval(&self, p: &RationalPoint3) -> Rational {
        let mut acc = Rational::zero();
        for (&(ex, ey, ez), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..ex {
                term *= &p.x;
            }
            for _ in 0..ey {
                term *= &p.y;
            }
            for _ in 0..ez {
                term *= &p.z;
            }
            acc += term;
        }
        acc
    }
}

/// A polynomial self-map of 3-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap3 {
    pub components: [Poly3; 3],
}

impl PolyMap3 {
    pub fn new(components: [Poly3; 3]) -> Self {
        PolyMap3 { components }
    }

    /// (x, y, z) -> (x^2, y, z)
    pub fn fold() -> Self {
        PolyMap3::new([
            Poly3::from_terms(&[(1, (2, 0, 0))]),
            Poly3::var_y(),
            Poly3::var_z(),
        ])
    }

    /// (x, y, z) -> (x^3 + xy, y, z)
    pub fn cusp() -> Self {
        PolyMap3::new([
            Poly3::from_terms(&[(1, (3, 0, 0)), (1, (1, 1, 0))]),
            Poly3::var_y(),
            Poly3::var_z(),
        ])
    }

    /// (x, y, z) -> (x^4 + x^2 y + x z, y, z)
    pub fn swallowtail() -> Self {
        PolyMap3::new([
            Poly3::from_terms(&[(1, (4, 0, 0)), (1, (2, 1, 0)), (1, (1, 0, 1))]),
            Poly3::var_y(),
            Poly3::var_z(),
        ])
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "fold" => Ok(PolyMap3::fold()),
            "cusp" => Ok(PolyMap3::cusp()),
            "swallowtail" => Ok(PolyMap3::swallowtail()),
            other => Err(Error::InvalidInput(format!(
                "unknown model '{other}' (expected fold, cusp or swallowtail)"
            ))),
        }
    }

    /// True when the map has the shape (q(x,y,z), y, z).
    pub fn is_prenormal(&self) -> bool {
        self.components[1] == Poly3::var_y() && self.components[2] == Poly3::var_z()
    }
}

/// Exact 3x3 Jacobian matrix of polynomials.
pub fn jacobian(map: &PolyMap3) -> [[Poly3; 3]; 3] {
    [0, 1, 2].map(|i| [0, 1, 2].map(|j| map.components[i].derivative(j)))
}

fn eval_matrix(m: &[[Poly3; 3]; 3], p: &RationalPoint3) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|row| row.iter().map(|q| q.eval(p)).collect())
        .collect()
}

/// Rank of an exact rational matrix by Gaussian elimination.
fn rational_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] / &pivot;
                for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                    let sub = &factor * pv;
                    row[c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// dim ker df at a point: 3 minus the exact rank of the evaluated Jacobian.
pub fn kernel_dim_at(map: &PolyMap3, p: &RationalPoint3) -> usize {
    3 - rational_rank(eval_matrix(&jacobian(map), p))
}

/// The determinant of the Jacobian: the single polynomial cutting out the
/// first-order stratum for the three models.
pub fn jacobian_determinant(map: &PolyMap3) -> Poly3 {
    let j = jacobian(map);
    let mut det = Poly3::zero();
    // Cofactor expansion along the first row.
    let minors = [
        j[1][1].mul(&j[2][2]).add(&j[1][2].mul(&j[2][1]).neg()),
        j[1][0].mul(&j[2][2]).add(&j[1][2].mul(&j[2][0]).neg()),
        j[1][0].mul(&j[2][1]).add(&j[1][1].mul(&j[2][0]).neg()),
    ];
    det = det.add(&j[0][0].mul(&minors[0]));
    det = det.add(&j[0][1].mul(&minors[1]).neg());
    det = det.add(&j[0][2].mul(&minors[2]));
    det
}

fn gradient_at(g: &Poly3, p: &RationalPoint3) -> [Rational; 3] {
    [0, 1, 2].map(|axis| g.derivative(axis).eval(p))
}

/// Second-order Thom-Boardman symbol prefix at a first-order singular point.
///
/// With g = det(J) cutting out the singular locus, the second index is the
/// dimension of ker df(p) intersected with ker dg(p). Requires the kernel to
/// be one-dimensional (`NotRankDropOne`) and the gradient of g to be nonzero
/// at p (`DegenerateLocus`).
pub fn second_order_symbol(map: &PolyMap3, p: &RationalPoint3) -> Result<(usize, usize)> {
    if kernel_dim_at(map, p) != 1 {
        return Err(Error::NotRankDropOne);
    }
    let g = jacobian_determinant(map);
    let grad = gradient_at(&g, p);
    if grad.iter().all(|c| c.is_zero()) {
        return Err(Error::DegenerateLocus);
    }
    let mut rows = eval_matrix(&jacobian(map), p);
    rows.push(grad.to_vec());
    let i2 = 3 - rational_rank(rows);
    Ok((1, i2))
}

/// Third-order symbol prefix for prenormal maps (q(x,y,z), y, z).
///
/// On such maps the kernel of df along the singular locus is the constant
/// x-direction, so the stratum chain is cut out by successive x-derivatives
/// of g = det(J) and the third index is the dimension of ker df intersected
/// with the tangent space of {g = 0, dg/dx = 0}.
pub fn third_order_symbol(map: &PolyMap3, p: &RationalPoint3) -> Result<(usize, usize, usize)> {
    if !map.is_prenormal() {
        return Err(Error::DegenerateLocus);
    }
    let (_, i2) = second_order_symbol(map, p)?;
    if i2 != 1 {
        return Err(Error::NotRankDropOne);
    }
    let g = jacobian_determinant(map);
    let h = g.derivative(0);
    let grad_g = gradient_at(&g, p);
    let grad_h = gradient_at(&h, p);
    if grad_h.iter().all(|c| c.is_zero()) {
        return Err(Error::DegenerateLocus);
    }
    let mut rows = eval_matrix(&jacobian(map), p);
    rows.push(grad_g.to_vec());
    rows.push(grad_h.to_vec());
    let i3 = 3 - rational_rank(rows);
    Ok((1, 1, i3))
}

/// Classifies one grid point of one of the three models against the known
/// strata; used by the verification report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StratumClass {
    Regular,
    Fold,
    Cusp,
    Swallowtail,
}

/// Full symbol-based classification of a point under a prenormal model.
pub fn classify(map: &PolyMap3, p: &RationalPoint3) -> Result<StratumClass> {
    match kernel_dim_at(map, p) {
        0 => Ok(StratumClass::Regular),
        1 => {
            let (_, i2) = second_order_symbol(map, p)?;
            if i2 == 0 {
                return Ok(StratumClass::Fold);
            }
            let (_, _, i3) = third_order_symbol(map, p)?;
            if i3 == 0 {
                Ok(StratumClass::Cusp)
            } else {
                Ok(StratumClass::Swallowtail)
            }
        }
        _ => Err(Error::NotRankDropOne),
    }
}

/// Outcome of sweeping one model over a rational grid plus parametric
/// on-locus samples.
#[derive(Clone, Debug)]
pub struct GridReport {
    pub model: String,
    /// Half-integer grid points checked (computed stratum vs the hand-known
    /// locus equations).
    pub grid_points: usize,
    pub grid_mismatches: usize,
    /// Grid points that landed on the singular locus.
    pub singular_grid_points: usize,
    /// Parametric points placed exactly on the strata.
    pub locus_samples: usize,
    pub locus_mismatches: usize,
    /// Computed stratum counts over all checked points.
    pub regular: usize,
    pub folds: usize,
    pub cusps: usize,
    pub swallowtails: usize,
}

impl GridReport {
    pub fn all_ok(&self) -> bool {
        self.grid_mismatches == 0 && self.locus_mismatches == 0
    }

    fn tally(&mut self, computed: StratumClass) {
        match computed {
            StratumClass::Regular => self.regular += 1,
            StratumClass::Fold => self.folds += 1,
            StratumClass::Cusp => self.cusps += 1,
            StratumClass::Swallowtail => self.swallowtails += 1,
        }
    }
}

/// The stratum a point of one of the three models belongs to, read off the
/// explicit locus equations (independent of the Jacobian machinery):
///
/// ```text
/// fold:        S1 = {x = 0},            no deeper strata
/// cusp:        S1 = {3x^2 + y = 0},     S11 = {x = y = 0}
/// swallowtail: S1 = {4x^3 + 2xy + z = 0},
///              S11 = {y = -6x^2, z = 8x^3},  S111 = {x = y = z = 0}
/// ```
pub fn expected_stratum(model: &str, p: &RationalPoint3) -> Result<StratumClass> {
    let x = &p.x;
    let y = &p.y;
    let z = &p.z;
    match model {
        "fold" => Ok(if x.is_zero() {
            StratumClass::Fold
        } else {
            StratumClass::Regular
        }),
        "cusp" => {
            if !(rat(3) * x * x + y).is_zero() {
                Ok(StratumClass::Regular)
            } else if x.is_zero() && y.is_zero() {
                Ok(StratumClass::Cusp)
            } else {
                Ok(StratumClass::Fold)
            }
        }
        "swallowtail" => {
            if !(rat(4) * x * x * x + rat(2) * x * y + z).is_zero() {
                Ok(StratumClass::Regular)
            } else if !(y + rat(6) * x * x).is_zero() || !(z - rat(8) * x * x * x).is_zero() {
                Ok(StratumClass::Fold)
            } else if !x.is_zero() {
                Ok(StratumClass::Cusp)
            } else {
                Ok(StratumClass::Swallowtail)
            }
        }
        other => Err(Error::InvalidInput(format!(
            "unknown model '{other}' (expected fold, cusp or swallowtail)"
        ))),
    }
}

fn half(n: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(2))
}

/// Sweeps the named model over the half-integer grid
/// `{-n/2, ..., n/2}^3` ((2n+1)^3 points) and over parametric samples placed
/// exactly on each stratum, comparing the computed Thom-Boardman symbols
/// against the explicit locus equations.
pub fn verify_model_on_grid(model: &str, n: i64) -> Result<GridReport> {
    let map = PolyMap3::by_name(model)?;
    let mut report = GridReport {
        model: model.to_string(),
        grid_points: 0,
        grid_mismatches: 0,
        singular_grid_points: 0,
        locus_samples: 0,
        locus_mismatches: 0,
        regular: 0,
        folds: 0,
        cusps: 0,
        swallowtails: 0,
    };

    for i in -n..=n {
        for j in -n..=n {
            for k in -n..=n {
                let p = RationalPoint3::new(half(i), half(j), half(k));
                let computed = classify(&map, &p)?;
                let expected = expected_stratum(model, &p)?;
                report.grid_points += 1;
                if computed != StratumClass::Regular {
                    report.singular_grid_points += 1;
                }
                if computed != expected {
                    report.grid_mismatches += 1;
                }
                report.tally(computed);
            }
        }
    }

    // Parametric samples exactly on the strata, which a plain grid mostly
    // misses.
    let mut on_locus = Vec::new();
    for t_num in -n..=n {
        let t = half(t_num);
        match model {
            "fold" => {
                on_locus.push(RationalPoint3::new(
                    Rational::zero(),
                    t.clone(),
                    half(t_num.rem_euclid(3) - 1),
                ));
            }
            "cusp" => {
                // Singular parabola y = -3x^2 at several heights.
                for z_num in [-1i64, 0, 1] {
                    on_locus.push(RationalPoint3::new(
                        t.clone(),
                        -rat(3) * &t * &t,
                        half(z_num),
                    ));
                }
            }
            "swallowtail" => {
                // Fold sheet z = -4x^3 - 2xy and cusp curve
                // (t, -6t^2, 8t^3).
                for u_num in -2i64..=2 {
                    let u = half(u_num);
                    on_locus.push(RationalPoint3::new(
                        t.clone(),
                        u.clone(),
                        -rat(4) * &t * &t * &t - rat(2) * &t * &u,
                    ));
                }
                on_locus.push(RationalPoint3::new(
                    t.clone(),
                    -rat(6) * &t * &t,
                    rat(8) * &t * &t * &t,
                ));
            }
            _ => unreachable!("model validated above"),
        }
    }
    for p in on_locus {
        let computed = classify(&map, &p)?;
        let expected = expected_stratum(model, &p)?;
        report.locus_samples += 1;
        if computed != expected {
            report.locus_mismatches += 1;
        }
        report.tally(computed);
    }
    Ok(report)
}
