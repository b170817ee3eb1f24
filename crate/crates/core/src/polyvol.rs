//! Exact volumes of rational polyhedra.
//!
//! Bounded H-polytopes are measured with Lasserre's recursion carried out in
//! exact rationals: each facet is projected along its first nonzero
//! coordinate, giving
//!
//! ```text
//! Vol_d(P) = 1/d · Σ_i  (b_i / |a_{i,k_i}|) · Vol_{d-1}(proj_{k_i} F_i)
//! ```
//!
//! Regions of the form `C \ ∪_j (u_j + C)` are measured by inclusion–exclusion
//! over intersections of translates, each of which is again a polytope once a
//! bounding box is added.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{factorial, int, sign, Rational};

pub mod mesh;

/// `⟨normal, x⟩ ≤ offset`, or `<` when `strict`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSpace {
    pub normal: Vec<i64>,
    pub offset: Rational,
    pub strict: bool,
}

impl HalfSpace {
    pub fn new(normal: Vec<i64>, offset: Rational) -> Self {
        debug_assert!(
            normal.iter().any(|&v| v != 0),
            "half-space normal must be nonzero"
        );
        HalfSpace {
            normal,
            offset,
            strict: false,
        }
    }

    pub fn strict(normal: Vec<i64>, offset: Rational) -> Self {
        HalfSpace {
            strict: true,
            ..HalfSpace::new(normal, offset)
        }
    }

    /// `⟨normal, x⟩ ≥ offset` written in `≤` form.
    pub fn at_least(normal: &[i64], offset: Rational) -> Self {
        HalfSpace::new(normal.iter().map(|v| -v).collect(), -offset)
    }

    pub fn value(&self, x: &[Rational]) -> Rational {
        self.normal.iter().zip(x).map(|(&a, v)| int(a) * v).sum()
    }

    /// Membership honoring strictness.
    pub fn contains(&self, x: &[Rational]) -> bool {
        let v = self.value(x);
        if self.strict {
            v < self.offset
        } else {
            v <= self.offset
        }
    }

    pub fn contains_closed(&self, x: &[Rational]) -> bool {
        self.value(x) <= self.offset
    }

    /// The closure of the complement, `⟨normal, x⟩ ≥ offset`.
    pub fn complement_closure(&self) -> HalfSpace {
        HalfSpace::at_least(&self.normal, self.offset.clone())
    }

    /// `u + H`.
    pub fn translated(&self, u: &[i64]) -> HalfSpace {
        let shift: i64 = self.normal.iter().zip(u).map(|(a, b)| a * b).sum();
        HalfSpace {
            offset: &self.offset + int(shift),
            ..self.clone()
        }
    }

    pub fn compile(&self) -> CompiledHalfSpace {
        let num = i128::try_from(self.offset.numer()).expect("offset numerator fits i128");
        let den = i128::try_from(self.offset.denom()).expect("offset denominator fits i128");
        CompiledHalfSpace {
            normal: self.normal.iter().map(|&v| v as i128).collect(),
            normal_f: self.normal.iter().map(|&v| v as f64).collect(),
            num,
            den,
            offset_f: num as f64 / den as f64,
            strict: self.strict,
        }
    }
}

/// Machine-integer and float form of a [`HalfSpace`] for sampling oracles.
#[derive(Debug, Clone)]
pub struct CompiledHalfSpace {
    normal: Vec<i128>,
    normal_f: Vec<f64>,
    num: i128,
    den: i128,
    offset_f: f64,
    strict: bool,
}

impl CompiledHalfSpace {
    /// Exact test of `z / m`.
    pub fn contains_scaled(&self, z: &[i64], m: i64) -> bool {
        let lhs: i128 = self
            .normal
            .iter()
            .zip(z)
            .map(|(a, &b)| a * b as i128)
            .sum::<i128>()
            * self.den;
        let rhs = self.num * m as i128;
        if self.strict {
            lhs < rhs
        } else {
            lhs <= rhs
        }
    }

    /// Closed-form test of `z / m`, ignoring strictness.
    pub fn contains_scaled_closed(&self, z: &[i64], m: i64) -> bool {
        let lhs: i128 = self
            .normal
            .iter()
            .zip(z)
            .map(|(a, &b)| a * b as i128)
            .sum::<i128>()
            * self.den;
        lhs <= self.num * m as i128
    }

    pub fn contains_f64(&self, x: &[f64]) -> bool {
        let v: f64 = self.normal_f.iter().zip(x).map(|(a, b)| a * b).sum();
        if self.strict {
            v < self.offset_f
        } else {
            v <= self.offset_f
        }
    }
}

/// A finite intersection of half-spaces in `R^dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
}

impl HPolytope {
    pub fn new(dim: usize, halfspaces: Vec<HalfSpace>) -> Result<Self> {
        for h in &halfspaces {
            if h.normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: h.normal.len(),
                });
            }
            if h.normal.iter().all(|&v| v == 0) {
                return Err(Error::InvalidParameter("half-space normal is zero"));
            }
        }
        Ok(HPolytope { dim, halfspaces })
    }

    /// `[0, 1]^d`.
    pub fn unit_cube(dim: usize) -> Self {
        HPolytope::box_between(&vec![0; dim], &vec![1; dim])
    }

    pub fn box_between(lo: &[i64], hi: &[i64]) -> Self {
        let dim = lo.len();
        let mut hs = Vec::with_capacity(2 * dim);
        for k in 0..dim {
            let mut e = vec![0; dim];
            e[k] = 1;
            hs.push(HalfSpace::at_least(&e, int(lo[k])));
            hs.push(HalfSpace::new(e, int(hi[k])));
        }
        HPolytope {
            dim,
            halfspaces: hs,
        }
    }

    /// `conv(0, e_1, ..., e_d)`.
    pub fn standard_simplex(dim: usize) -> Self {
        let mut hs = Vec::with_capacity(dim + 1);
        for k in 0..dim {
            let mut e = vec![0; dim];
            e[k] = 1;
            hs.push(HalfSpace::at_least(&e, Rational::zero()));
        }
        hs.push(HalfSpace::new(vec![1; dim], Rational::one()));
        HPolytope {
            dim,
            halfspaces: hs,
        }
    }

    /// H-representation of the simplex with the given `d + 1` affinely
    /// independent vertices.
    pub fn simplex(vertices: &[Vec<Rational>]) -> Result<Self> {
        let dim = vertices.len().saturating_sub(1);
        if dim == 0 || vertices.iter().any(|v| v.len() != dim) {
            return Err(Error::InvalidParameter("simplex needs d + 1 points in R^d"));
        }
        let v0 = &vertices[0];
        // Columns v_i - v_0; barycentric coordinates are rows of the inverse.
        let mut m = vec![vec![Rational::zero(); dim]; dim];
        for (j, v) in vertices[1..].iter().enumerate() {
            for i in 0..dim {
                m[i][j] = &v[i] - &v0[i];
            }
        }
        let mut inverse_rows: Vec<Vec<Rational>> = Vec::with_capacity(dim);
        for i in 0..dim {
            // Row i of M^{-1} solves M^T y = e_i.
            let mt: Vec<Vec<Rational>> = (0..dim)
                .map(|r| (0..dim).map(|c| m[c][r].clone()).collect())
                .collect();
            let mut e = vec![Rational::zero(); dim];
            e[i] = Rational::one();
            let row = linalg::solve(&mt, &e).ok_or(Error::InvalidParameter(
                "simplex vertices are affinely dependent",
            ))?;
            inverse_rows.push(row);
        }
        let mut hs = Vec::with_capacity(dim + 1);
        let dot = |a: &[Rational], b: &[Rational]| -> Rational {
            a.iter().zip(b).map(|(x, y)| x * y).sum()
        };
        for row in &inverse_rows {
            // λ_i = row · (x - v0) ≥ 0.
            hs.push(integer_halfspace(
                &row.iter().map(|v| -v).collect::<Vec<_>>(),
                -dot(row, v0),
            )?);
        }
        let sum: Vec<Rational> = (0..dim)
            .map(|c| inverse_rows.iter().map(|r| r[c].clone()).sum())
            .collect();
        hs.push(integer_halfspace(&sum, Rational::one() + dot(&sum, v0))?);
        Ok(HPolytope {
            dim,
            halfspaces: hs,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn push(&mut self, h: HalfSpace) {
        debug_assert_eq!(h.normal.len(), self.dim);
        self.halfspaces.push(h);
    }

    pub fn with(mut self, h: HalfSpace) -> Self {
        self.push(h);
        self
    }

    pub fn intersect(&self, other: &HPolytope) -> HPolytope {
        let mut hs = self.halfspaces.clone();
        hs.extend(other.halfspaces.iter().cloned());
        HPolytope {
            dim: self.dim,
            halfspaces: hs,
        }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.halfspaces.iter().all(|h| h.contains(x))
    }

    pub fn contains_closed(&self, x: &[Rational]) -> bool {
        self.halfspaces.iter().all(|h| h.contains_closed(x))
    }

    /// `P + v`.
    pub fn translated(&self, v: &[Rational]) -> HPolytope {
        let hs = self
            .halfspaces
            .iter()
            .map(|h| HalfSpace {
                offset: &h.offset + h.value(v),
                ..h.clone()
            })
            .collect();
        HPolytope {
            dim: self.dim,
            halfspaces: hs,
        }
    }

    /// `λ P` for `λ > 0`.
    pub fn dilated(&self, lambda: &Rational) -> HPolytope {
        assert!(lambda.is_positive(), "dilation factor must be positive");
        let hs = self
            .halfspaces
            .iter()
            .map(|h| HalfSpace {
                offset: &h.offset * lambda,
                ..h.clone()
            })
            .collect();
        HPolytope {
            dim: self.dim,
            halfspaces: hs,
        }
    }

    fn rows(&self) -> Vec<Row> {
        self.halfspaces
            .iter()
            .map(|h| Row {
                coef: h.normal.iter().map(|&v| int(v)).collect(),
                rhs: h.offset.clone(),
            })
            .collect()
    }

    /// No nonzero direction `y` with `⟨normal, y⟩ ≤ 0` for every half-space.
    pub fn is_bounded(&self) -> bool {
        recession_is_trivial(&self.rows(), self.dim)
    }

    pub fn vertices(&self) -> Result<Vec<Vec<Rational>>> {
        vertices(self)
    }

    pub fn volume(&self) -> Result<Rational> {
        volume_exact(self)
    }
}

fn integer_halfspace(normal: &[Rational], offset: Rational) -> Result<HalfSpace> {
    let den = crate::rational::common_denominator(normal);
    let scaled: Vec<BigInt> = normal
        .iter()
        .map(|v| (v * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let g = scaled
        .iter()
        .fold(BigInt::zero(), |acc, v| num_integer::Integer::gcd(&acc, v));
    if g.is_zero() {
        return Err(Error::InvalidParameter("zero normal"));
    }
    let normal = scaled
        .iter()
        .map(|v| i64::try_from(v / &g).map_err(|_| Error::Overflow))
        .collect::<Result<Vec<i64>>>()?;
    Ok(HalfSpace::new(normal, offset * Rational::new(den, g)))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Row {
    coef: Vec<Rational>,
    rhs: Rational,
}

/// Scales each row so its first nonzero coefficient is ±1, drops trivially
/// satisfied rows and keeps the tightest of parallel rows. `None` means a
/// row `0 ≤ negative` made the system infeasible.
fn normalize(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut tightest: BTreeMap<Vec<Rational>, Rational> = BTreeMap::new();
    for row in rows {
        let Some(k) = row.coef.iter().position(|c| !c.is_zero()) else {
            if row.rhs.is_negative() {
                return None;
            }
            continue;
        };
        let scale = row.coef[k].abs().recip();
        let coef: Vec<Rational> = row.coef.iter().map(|c| c * &scale).collect();
        let rhs = row.rhs * scale;
        tightest
            .entry(coef)
            .and_modify(|r| {
                if rhs < *r {
                    *r = rhs.clone();
                }
            })
            .or_insert(rhs);
    }
    Some(
        tightest
            .into_iter()
            .map(|(coef, rhs)| Row { coef, rhs })
            .collect(),
    )
}

/// Lasserre's recursion over the facets that actually carry `d` or more
/// vertices; `verts` are the vertices of the current (projected) polytope.
fn lasserre(rows: Vec<Row>, verts: Vec<Vec<Rational>>, dim: usize) -> Rational {
    if verts.len() < dim + 1 {
        return Rational::zero();
    }
    if dim == 1 {
        let lo = verts.iter().map(|v| &v[0]).min().unwrap();
        let hi = verts.iter().map(|v| &v[0]).max().unwrap();
        return hi - lo;
    }
    let Some(rows) = normalize(rows) else {
        return Rational::zero();
    };
    let mut total = Rational::zero();
    for (i, facet) in rows.iter().enumerate() {
        if facet.rhs.is_zero() {
            continue;
        }
        let on: Vec<&Vec<Rational>> = verts
            .iter()
            .filter(|v| row_value(facet, v) == facet.rhs)
            .collect();
        if on.len() < dim {
            continue;
        }
        let k = facet
            .coef
            .iter()
            .position(|c| !c.is_zero())
            .expect("normalized row");
        // x_k = c (rhs - Σ_{j≠k} a_j x_j) with c = ±1.
        let c = &facet.coef[k];
        let projected: Vec<Row> = rows
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != i)
            .map(|(_, row)| {
                let factor = &row.coef[k] * c;
                let coef = (0..dim)
                    .filter(|&j| j != k)
                    .map(|j| &row.coef[j] - &factor * &facet.coef[j])
                    .collect();
                Row {
                    coef,
                    rhs: &row.rhs - &factor * &facet.rhs,
                }
            })
            .collect();
        let sub_verts: BTreeSet<Vec<Rational>> = on
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let sub = lasserre(projected, sub_verts.into_iter().collect(), dim - 1);
        if !sub.is_zero() {
            total += &facet.rhs * sub;
        }
    }
    total / int(dim as i64)
}

fn row_value(row: &Row, x: &[Rational]) -> Rational {
    row.coef.iter().zip(x).map(|(a, b)| a * b).sum()
}

/// Feasible solutions of every `d`-subset of constraint hyperplanes.
fn vertex_set(rows: &[Row], dim: usize) -> Vec<Vec<Rational>> {
    let rows = normalize(rows.to_vec()).unwrap_or_default();
    let mut out: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for_each_subset(rows.len(), dim, &mut |subset| {
        let m: Vec<Vec<Rational>> = subset.iter().map(|&i| rows[i].coef.clone()).collect();
        let b: Vec<Rational> = subset.iter().map(|&i| rows[i].rhs.clone()).collect();
        if let Some(x) = linalg::solve(&m, &b) {
            if rows.iter().all(|r| row_value(r, &x) <= r.rhs) {
                out.insert(x);
            }
        }
    });
    out.into_iter().collect()
}

/// Volume of a polytope already known to be bounded.
fn bounded_volume(p: &HPolytope) -> Rational {
    let rows = p.rows();
    if normalize(rows.clone()).is_none() {
        return Rational::zero();
    }
    let verts = vertex_set(&rows, p.dim);
    lasserre(rows, verts, p.dim)
}

fn recession_is_trivial(rows: &[Row], dim: usize) -> bool {
    let coefs: Vec<Vec<Rational>> = rows.iter().map(|r| r.coef.clone()).collect();
    if linalg::rank(&coefs) < dim {
        return false;
    }
    // Extreme rays of the pointed cone {A y ≤ 0} are cut out by d - 1
    // independent rows.
    let mut found_ray = false;
    for_each_subset(coefs.len(), dim - 1, &mut |subset| {
        if found_ray {
            return;
        }
        let sub: Vec<Vec<Rational>> = subset.iter().map(|&i| coefs[i].clone()).collect();
        let ns = linalg::null_space(&sub, dim);
        if ns.len() != 1 {
            return;
        }
        let ray = &ns[0];
        let signs: Vec<Sign> = coefs
            .iter()
            .map(|c| sign(&c.iter().zip(ray).map(|(a, b)| a * b).sum::<Rational>()))
            .collect();
        if signs.iter().all(|&s| s != Sign::Plus) || signs.iter().all(|&s| s != Sign::Minus) {
            found_ray = true;
        }
    });
    !found_ray
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    if k > n {
        return;
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// All vertices of a bounded polytope, from every `d`-subset of bounding
/// hyperplanes whose solution satisfies all constraints (closed).
pub fn vertices(p: &HPolytope) -> Result<Vec<Vec<Rational>>> {
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    let out = vertex_set(&p.rows(), p.dim);
    if out.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    Ok(out)
}

/// Euclidean volume of the closure of a bounded polytope. Empty and
/// lower-dimensional polytopes have volume zero.
pub fn volume_exact(p: &HPolytope) -> Result<Rational> {
    if p.dim == 0 {
        return Err(Error::InvalidParameter("dimension must be at least 1"));
    }
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    Ok(bounded_volume(p))
}

/// `|det(v_1 - v_0, ..., v_d - v_0)| / d!`.
pub fn simplex_volume(vertices: &[Vec<Rational>]) -> Rational {
    let d = vertices.len() - 1;
    let v0 = &vertices[0];
    let m: Vec<Vec<Rational>> = vertices[1..]
        .iter()
        .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
        .collect();
    linalg::determinant(&m).abs() / Rational::from_integer(factorial(d))
}

/// `C \ ∪_j (u_j + C)` for a polyhedral cone `C`, measured inside `[0, M]^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionDifference {
    dim: usize,
    ambient: Vec<HalfSpace>,
    translates: Vec<Vec<i64>>,
    bound: i64,
}

impl RegionDifference {
    /// Uses the default box `M = 2 (1 + max coordinate of the apexes)`.
    pub fn new(dim: usize, ambient: Vec<HalfSpace>, translates: Vec<Vec<i64>>) -> Result<Self> {
        for h in &ambient {
            if h.normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: h.normal.len(),
                });
            }
        }
        for u in &translates {
            if u.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: u.len(),
                });
            }
        }
        let max = translates
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0)
            .max(0);
        Ok(RegionDifference {
            dim,
            ambient,
            translates,
            bound: 2 * (1 + max),
        })
    }

    pub fn with_bound(mut self, bound: i64) -> Self {
        self.bound = bound;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn ambient(&self) -> &[HalfSpace] {
        &self.ambient
    }

    pub fn translates(&self) -> &[Vec<i64>] {
        &self.translates
    }

    fn translate_halfspaces(&self, u: &[i64]) -> Vec<HalfSpace> {
        self.ambient
            .iter()
            .map(|h| HalfSpace {
                strict: false,
                ..h.translated(u)
            })
            .collect()
    }

    /// `x ∈ C` and, for every `j`, `x ∉ u_j + C`.
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.ambient.iter().all(|h| h.contains(x))
            && self
                .translates
                .iter()
                .all(|u| !self.translate_halfspaces(u).iter().all(|h| h.contains(x)))
    }

    /// Machine-integer form of the membership test.
    pub fn compile(&self) -> CompiledRegion {
        CompiledRegion {
            ambient: self.ambient.iter().map(HalfSpace::compile).collect(),
            translates: self
                .translates
                .iter()
                .map(|u| {
                    self.translate_halfspaces(u)
                        .iter()
                        .map(HalfSpace::compile)
                        .collect()
                })
                .collect(),
        }
    }

    fn boxed(&self, bound: i64) -> HPolytope {
        let mut hs: Vec<HalfSpace> = self
            .ambient
            .iter()
            .map(|h| HalfSpace {
                strict: false,
                ..h.clone()
            })
            .collect();
        for k in 0..self.dim {
            let mut e = vec![0; self.dim];
            e[k] = 1;
            hs.push(HalfSpace::at_least(&e, Rational::zero()));
            hs.push(HalfSpace::new(e, int(bound)));
        }
        HPolytope {
            dim: self.dim,
            halfspaces: hs,
        }
    }

    /// Signed inclusion–exclusion terms `(coefficient, C ∩ Box ∩ T_J)`.
    /// Subsets with identical intersections are merged.
    pub fn terms(&self, bound: i64) -> Vec<(BigInt, HPolytope)> {
        let base: Vec<Rational> = self.ambient.iter().map(|h| h.offset.clone()).collect();
        let mut terms: BTreeMap<Vec<Rational>, BigInt> = BTreeMap::new();
        terms.insert(base, BigInt::one());
        for u in &self.translates {
            let shifted: Vec<Rational> = self
                .translate_halfspaces(u)
                .into_iter()
                .map(|h| h.offset)
                .collect();
            let mut next = terms.clone();
            for (key, coef) in &terms {
                let k: Vec<Rational> = key
                    .iter()
                    .zip(&shifted)
                    .map(|(a, b)| if a < b { a.clone() } else { b.clone() })
                    .collect();
                let e = next.entry(k).or_insert_with(BigInt::zero);
                *e -= coef;
            }
            next.retain(|_, c| !c.is_zero());
            terms = next;
        }
        let boxed = self.boxed(bound);
        terms
            .into_iter()
            .map(|(offsets, coef)| {
                let mut p = boxed.clone();
                for (h, o) in p.halfspaces.iter_mut().zip(offsets) {
                    h.offset = o;
                }
                (coef, p)
            })
            .collect()
    }

    /// Inclusion–exclusion volume inside `[0, bound]^d`, without the
    /// doubling check.
    pub fn volume_with_bound(&self, bound: i64) -> Result<Rational> {
        let mut total = Rational::zero();
        for (coef, p) in self.terms(bound) {
            total += Rational::from_integer(coef) * bounded_volume(&p);
        }
        Ok(total)
    }

    /// Convex cells with disjoint interiors whose union is the closure of the
    /// region (inside the box).
    pub fn cells(&self) -> Result<Vec<HPolytope>> {
        let mut cells = vec![self.boxed(self.bound)];
        for u in &self.translates {
            let translate = self.translate_halfspaces(u);
            let mut next = Vec::new();
            for cell in cells {
                let mut overlap = cell.clone();
                for h in &translate {
                    overlap.push(h.clone());
                }
                if volume_exact(&overlap)?.is_zero() {
                    next.push(cell);
                    continue;
                }
                for k in 0..translate.len() {
                    let mut piece = cell.clone();
                    for h in &translate[..k] {
                        piece.push(h.clone());
                    }
                    piece.push(translate[k].complement_closure());
                    if volume_exact(&piece)?.is_positive() {
                        next.push(piece);
                    }
                }
            }
            cells = next;
        }
        Ok(cells)
    }
}

/// Sampling form of a [`RegionDifference`].
#[derive(Debug, Clone)]
pub struct CompiledRegion {
    ambient: Vec<CompiledHalfSpace>,
    translates: Vec<Vec<CompiledHalfSpace>>,
}

impl CompiledRegion {
    /// Exact membership of `z / m`, honoring strictness (the translates are
    /// removed as closed sets).
    pub fn contains_scaled(&self, z: &[i64], m: i64) -> bool {
        self.ambient.iter().all(|h| h.contains_scaled(z, m))
            && self
                .translates
                .iter()
                .all(|t| !t.iter().all(|h| h.contains_scaled_closed(z, m)))
    }

    pub fn contains_f64(&self, x: &[f64]) -> bool {
        self.ambient.iter().all(|h| h.contains_f64(x))
            && self
                .translates
                .iter()
                .all(|t| !t.iter().all(|h| h.contains_f64(x)))
    }
}

/// Volume of a region difference, certified by checking that doubling the
/// bounding box leaves the value unchanged.
pub fn volume_region_difference(region: &RegionDifference) -> Result<Rational> {
    let volume = region.volume_with_bound(region.bound)?;
    let doubled = region.volume_with_bound(2 * region.bound)?;
    if volume != doubled {
        return Err(Error::BoxTooSmall {
            bound: region.bound,
            volume: Box::new(volume),
            doubled: Box::new(doubled),
        });
    }
    Ok(volume)
}

/// `#{z ∈ Z^d : z/m ∈ region} / m^d` over the integer box `[lo m, hi m]`.
/// The predicate receives the scaled point `z`.
pub fn lattice_count_volume(
    mut contains: impl FnMut(&[i64]) -> bool,
    lo: &[i64],
    hi: &[i64],
    m: i64,
) -> Rational {
    assert!(m >= 1, "lattice scale must be positive");
    let d = lo.len();
    let lo: Vec<i64> = lo.iter().map(|v| v * m).collect();
    let hi: Vec<i64> = hi.iter().map(|v| v * m).collect();
    let mut z = lo.clone();
    let mut count: u64 = 0;
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return Rational::zero();
    }
    'outer: loop {
        if contains(&z) {
            count += 1;
        }
        for k in 0..d {
            if z[k] < hi[k] {
                z[k] += 1;
                continue 'outer;
            }
            z[k] = lo[k];
        }
        break;
    }
    Rational::new(BigInt::from(count), num_traits::pow(BigInt::from(m), d))
}
