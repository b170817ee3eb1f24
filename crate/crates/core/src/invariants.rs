//! The invariants of `B(a, b)` from their volume characterizations, the
//! closed forms where they apply, and the assembled report.
//!
//! * Hilbert–Samuel: `e = h - 1`, certified by `(n+2)! Σ Vol(S_i)` over the
//!   simplices `S_i = conv(0, e_3, ..., e_{n+2}, u_i, u_{i+1})`.
//! * F-signature: `Vol(P_σ)` with `P_σ = {x : 0 ≤ ⟨x, v⟩ < 1}` over the
//!   primitive vectors of `σ`.
//! * Hilbert–Kunz: `Vol(C \ ∪_{g ∈ G ∪ {e_k}} (g + C))`.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cones::sigma_generators;
use crate::error::{Error, Result};
use crate::fan_hilbert::{
    generator_set, hilbert_set, lift, reduce_degenerate, ExponentPair, HilbertPoint, HilbertSet,
};
use crate::formulas;
use crate::linalg::smith_diagonal;
use crate::polyvol::{
    volume_exact, volume_region_difference, HPolytope, HalfSpace, RegionDifference,
};
use crate::rational::{factorial, int, Rational};

/// `C = {x : ⟨v, x⟩ ≥ 0}` over the primitive vectors `v` of `σ`.
pub fn cone_halfspaces(pair: &ExponentPair) -> Result<Vec<HalfSpace>> {
    Ok(sigma_generators(pair)?
        .all()
        .iter()
        .map(|v| HalfSpace::at_least(v, Rational::zero()))
        .collect())
}

/// Vertex lists of the simplices `S_i`, one per consecutive pair of the
/// Hilbert set. Each pair must span a unimodular cone.
pub fn hs_simplices(pair: &ExponentPair, hilbert: &HilbertSet) -> Result<Vec<Vec<Vec<Rational>>>> {
    let d = pair.n() + 2;
    let mut out = Vec::with_capacity(hilbert.h().saturating_sub(1));
    for (i, w) in hilbert.merged.windows(2).enumerate() {
        if w[0].det(w[1]).abs() != 1 {
            return Err(Error::NonUnimodularPair { index: i });
        }
        let mut verts = vec![vec![Rational::zero(); d]];
        for k in 2..d {
            let mut e = vec![Rational::zero(); d];
            e[k] = Rational::one();
            verts.push(e);
        }
        for v in w {
            verts.push(lift(*v, pair).into_iter().map(int).collect());
        }
        out.push(verts);
    }
    Ok(out)
}

/// `e(m, B) = h - 1`, cross-checked against the simplex volumes.
pub fn hilbert_samuel(pair: &ExponentPair) -> Result<usize> {
    let hilbert = hilbert_set(pair)?;
    let e = hilbert.h() - 1;
    let volume = hilbert_samuel_volume(pair, &hilbert)?;
    let scaled = volume * Rational::from_integer(factorial(pair.n() + 2));
    if scaled != int(e as i64) {
        return Err(Error::MethodDisagreement {
            invariant: "hilbertSamuel",
            exact: Box::new(scaled),
            closed_form: Box::new(int(e as i64)),
        });
    }
    Ok(e)
}

/// `Σ Vol(S_i)`, the raw volume of `C \ P(m)`.
pub fn hilbert_samuel_volume(pair: &ExponentPair, hilbert: &HilbertSet) -> Result<Rational> {
    let mut total = Rational::zero();
    for verts in hs_simplices(pair, hilbert)? {
        total += volume_exact(&HPolytope::simplex(&verts)?)?;
    }
    Ok(total)
}

/// Divisor class group as the cokernel of `Z^{n+2} → Z^{2n+2}`, `x ↦ (⟨v, x⟩)_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroup {
    pub rank: usize,
    /// Smith invariants of the map, including the ones equal to 1.
    pub smith_invariants: Vec<BigInt>,
}

impl ClassGroup {
    pub fn torsion_free(&self) -> bool {
        self.smith_invariants
            .iter()
            .all(|d| d.is_zero() || d.is_one())
    }
}

pub fn class_group(pair: &ExponentPair) -> Result<ClassGroup> {
    let rows: Vec<Vec<BigInt>> = sigma_generators(pair)?
        .all()
        .iter()
        .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let diag = smith_diagonal(&rows);
    let image_rank = diag.iter().filter(|d| !d.is_zero()).count();
    Ok(ClassGroup {
        rank: rows.len() - image_rank,
        smith_invariants: diag,
    })
}

pub fn is_q_gorenstein(pair: &ExponentPair) -> bool {
    pair.a() == pair.b()
}

/// `P_σ` with its strict upper bounds.
pub fn fsig_polytope(pair: &ExponentPair) -> Result<HPolytope> {
    let prims = sigma_generators(pair)?.all();
    let d = pair.n() + 2;
    let mut hs = Vec::with_capacity(2 * prims.len());
    for v in &prims {
        hs.push(HalfSpace::at_least(v, Rational::zero()));
        hs.push(HalfSpace::strict(v.clone(), Rational::one()));
    }
    HPolytope::new(d, hs)
}

pub fn f_signature_exact(pair: &ExponentPair) -> Result<Rational> {
    volume_exact(&fsig_polytope(pair)?)
}

/// `C` minus the translates by every monomial generator of `m`.
pub fn hk_region(pair: &ExponentPair) -> Result<RegionDifference> {
    let hilbert = hilbert_set(pair)?;
    let gens = generator_set(pair, &hilbert);
    RegionDifference::new(
        pair.n() + 2,
        cone_halfspaces(pair)?,
        gens.all().cloned().collect(),
    )
}

pub fn hilbert_kunz_exact(pair: &ExponentPair) -> Result<Rational> {
    volume_region_difference(&hk_region(pair)?)
}

/// `a = k b` componentwise for some integer `k ≥ 1`.
fn multiple_of(a: &[i64], b: &[i64]) -> Option<i64> {
    if b[0] == 0 || a[0] % b[0] != 0 {
        return None;
    }
    let k = a[0] / b[0];
    (k >= 1 && a.iter().zip(b).all(|(x, y)| *x == k * y)).then_some(k)
}

fn sorted_desc(v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

/// Closed-form F-signature when a formula covers `pair`.
pub fn f_signature_closed_form(pair: &ExponentPair) -> Option<Result<Rational>> {
    let (a, b) = (pair.a(), pair.b());
    if pair.n() == 1 {
        let (x, y) = if a[0] >= b[0] {
            (a[0], b[0])
        } else {
            (b[0], a[0])
        };
        return Some(formulas::f_signature_formula_n1(x, y));
    }
    if let Some(k) = multiple_of(a, b) {
        return Some(formulas::f_signature_formula_kb(k, &sorted_desc(b)));
    }
    multiple_of(b, a).map(|k| formulas::f_signature_formula_kb(k, &sorted_desc(a)))
}

/// Closed-form Hilbert–Kunz multiplicity when a formula covers `pair`.
pub fn hilbert_kunz_closed_form(pair: &ExponentPair) -> Option<Result<Rational>> {
    let (a, b) = (pair.a(), pair.b());
    if a == b {
        return Some(formulas::hk_formula_a_eq_b(a));
    }
    if pair.n() != 1 {
        return None;
    }
    if let Some(k) = multiple_of(a, b) {
        return Some(formulas::hk_formula_kb(k, b[0]));
    }
    multiple_of(b, a).map(|k| formulas::hk_formula_kb(k, a[0]))
}

/// How an invariant value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ExactVolume,
    ClosedForm,
    /// Both were computed and are equal.
    BothAgree,
    /// Fixed value of a polynomial ring.
    Regular,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ExactVolume => "exact-volume",
            Method::ClosedForm => "closed-form",
            Method::BothAgree => "both-agree",
            Method::Regular => "regular",
        }
    }
}

/// Which invariants to compute. Hilbert number, embedding dimension,
/// dimension and q-Gorenstein flag are always filled in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Selection {
    pub hilbert_samuel: bool,
    pub class_group: bool,
    pub f_signature: bool,
    pub hilbert_kunz: bool,
}

impl Selection {
    pub fn all() -> Self {
        Selection {
            hilbert_samuel: true,
            class_group: true,
            f_signature: true,
            hilbert_kunz: true,
        }
    }

    pub fn none() -> Self {
        Selection {
            hilbert_samuel: false,
            class_group: false,
            f_signature: false,
            hilbert_kunz: false,
        }
    }
}

impl Default for Selection {
    fn default() -> Self {
        Selection::all()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub select: Selection,
    /// Compute volumes. When off, uncovered regimes still fall back to them.
    pub exact: bool,
    pub closed_form: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            select: Selection::all(),
            exact: true,
            closed_form: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    /// Input vectors as given.
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    /// Positive part in fan order; `None` for a polynomial ring.
    pub pair: Option<ExponentPair>,
    /// 1-based indices of variables split off as polynomial variables.
    pub adjoined_variables: Vec<usize>,
    pub polynomial_ring_only: bool,
    pub dimension: usize,
    pub hilbert_number: usize,
    pub embedding_dimension: usize,
    pub hilbert_samuel: Option<usize>,
    /// `e / dim!`, the raw volume of the Hilbert–Samuel region.
    pub hilbert_samuel_volume: Option<Rational>,
    pub class_group: Option<ClassGroup>,
    pub q_gorenstein: bool,
    pub f_signature: Option<Rational>,
    pub hilbert_kunz: Option<Rational>,
    pub f_signature_method: Option<Method>,
    pub hilbert_kunz_method: Option<Method>,
}

fn resolve(
    name: &'static str,
    options: &ReportOptions,
    closed: Option<Result<Rational>>,
    exact: impl FnOnce() -> Result<Rational>,
) -> Result<(Rational, Method)> {
    let closed = if options.closed_form {
        closed.transpose()?
    } else {
        None
    };
    match closed {
        Some(c) if options.exact => {
            let e = exact()?;
            if e != c {
                return Err(Error::MethodDisagreement {
                    invariant: name,
                    exact: Box::new(e),
                    closed_form: Box::new(c),
                });
            }
            Ok((e, Method::BothAgree))
        }
        Some(c) => Ok((c, Method::ClosedForm)),
        None => Ok((exact()?, Method::ExactVolume)),
    }
}

/// Computes the selected invariants of `B(a, b)` for any valid input,
/// splitting off polynomial variables first.
pub fn invariant_report(a: &[i64], b: &[i64], options: &ReportOptions) -> Result<InvariantReport> {
    let reduction = reduce_degenerate(a, b)?;
    let n = a.len();
    let dimension = n + 2;
    let sel = options.select;
    let mut report = InvariantReport {
        a: a.to_vec(),
        b: b.to_vec(),
        pair: reduction.core.clone(),
        adjoined_variables: reduction.adjoined_variables.clone(),
        polynomial_ring_only: reduction.polynomial_ring_only,
        dimension,
        hilbert_number: 2,
        embedding_dimension: n + 2,
        hilbert_samuel: None,
        hilbert_samuel_volume: None,
        class_group: None,
        q_gorenstein: true,
        f_signature: None,
        hilbert_kunz: None,
        f_signature_method: None,
        hilbert_kunz_method: None,
    };
    let Some(pair) = reduction.core else {
        if sel.hilbert_samuel {
            report.hilbert_samuel = Some(1);
            report.hilbert_samuel_volume = Some(Rational::new(BigInt::one(), factorial(dimension)));
        }
        if sel.class_group {
            report.class_group = Some(ClassGroup {
                rank: 0,
                smith_invariants: Vec::new(),
            });
        }
        if sel.f_signature {
            report.f_signature = Some(Rational::one());
            report.f_signature_method = Some(Method::Regular);
        }
        if sel.hilbert_kunz {
            report.hilbert_kunz = Some(Rational::one());
            report.hilbert_kunz_method = Some(Method::Regular);
        }
        return Ok(report);
    };

    let hilbert = hilbert_set(&pair)?;
    report.hilbert_number = hilbert.h();
    report.embedding_dimension = n + hilbert.h();
    report.q_gorenstein = is_q_gorenstein(&pair);
    if sel.hilbert_samuel {
        let e = hilbert_samuel(&pair)?;
        report.hilbert_samuel = Some(e);
        report.hilbert_samuel_volume = Some(Rational::new(BigInt::from(e), factorial(dimension)));
    }
    if sel.class_group {
        report.class_group = Some(class_group(&pair)?);
    }
    if sel.f_signature {
        let (v, m) = resolve(
            "fSignature",
            options,
            f_signature_closed_form(&pair),
            || f_signature_exact(&pair),
        )?;
        report.f_signature = Some(v);
        report.f_signature_method = Some(m);
    }
    if sel.hilbert_kunz {
        let (v, m) = resolve(
            "hilbertKunz",
            options,
            hilbert_kunz_closed_form(&pair),
            || hilbert_kunz_exact(&pair),
        )?;
        report.hilbert_kunz = Some(v);
        report.hilbert_kunz_method = Some(m);
    }
    check_report(&report)?;
    Ok(report)
}

/// Structural relations every report must satisfy.
pub fn check_report(r: &InvariantReport) -> Result<()> {
    let n = r.a.len();
    if let Some(e) = r.hilbert_samuel {
        if e + n + 1 != r.embedding_dimension || e + 1 != r.hilbert_number {
            return Err(Error::MethodDisagreement {
                invariant: "hilbertSamuel",
                exact: Box::new(int(e as i64)),
                closed_form: Box::new(int(r.embedding_dimension as i64 - n as i64 - 1)),
            });
        }
    }
    if let Some(s) = &r.f_signature {
        if !s.is_positive() || *s > Rational::one() {
            return Err(Error::InvalidParameter("F-signature outside (0, 1]"));
        }
    }
    if let Some(hk) = &r.hilbert_kunz {
        if *hk < Rational::one() {
            return Err(Error::InvalidParameter("Hilbert-Kunz multiplicity below 1"));
        }
    }
    if let (true, Some(s), Some(hk)) = (r.q_gorenstein, &r.f_signature, &r.hilbert_kunz) {
        if s + hk != int(2) {
            return Err(Error::MethodDisagreement {
                invariant: "fSignature + hilbertKunz",
                exact: Box::new(s + hk),
                closed_form: Box::new(int(2)),
            });
        }
    }
    Ok(())
}

/// The three regions whose volumes define `e`, `s` and `e_HK`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionKind {
    HilbertSamuel,
    FSignature,
    HilbertKunz,
}

impl RegionKind {
    pub const ALL: [RegionKind; 3] = [
        RegionKind::HilbertSamuel,
        RegionKind::FSignature,
        RegionKind::HilbertKunz,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RegionKind::HilbertSamuel => "hilbert-samuel",
            RegionKind::FSignature => "f-signature",
            RegionKind::HilbertKunz => "hilbert-kunz",
        }
    }

    /// Exact volume of the region.
    pub fn exact_volume(self, pair: &ExponentPair) -> Result<Rational> {
        match self {
            RegionKind::HilbertSamuel => hilbert_samuel_volume(pair, &hilbert_set(pair)?),
            RegionKind::FSignature => f_signature_exact(pair),
            RegionKind::HilbertKunz => hilbert_kunz_exact(pair),
        }
    }
}

/// Coordinates `(r, s, t')` with `t'_k = t_k - max(a_k r, b_k s)`.
///
/// The shear has unit Jacobian and maps `Z^{n+2}` onto itself. All three
/// regions sit inside the box `[0, R] × [0, S] × [0, 1]^n` of this frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShearedFrame {
    a: Vec<i64>,
    b: Vec<i64>,
    /// Upper corner of the box; the lower corner is the origin.
    pub upper: Vec<i64>,
}

impl ShearedFrame {
    pub fn new(pair: &ExponentPair, kind: RegionKind) -> Result<Self> {
        pair.require_positive()?;
        let (r, s) = match kind {
            RegionKind::FSignature => (1, 1),
            _ => {
                // Every Hilbert element, and the apex of every region point's
                // cell, lies in the parallelogram of its segment's rays.
                let rays = pair.rays();
                let mut r = 0;
                let mut s = 0;
                for w in rays.windows(2) {
                    r = r.max(w[0].r + w[1].r);
                    s = s.max(w[0].s + w[1].s);
                }
                (r, s)
            }
        };
        let mut upper = vec![r, s];
        upper.extend(core::iter::repeat_n(1, pair.n()));
        Ok(ShearedFrame {
            a: pair.a().to_vec(),
            b: pair.b().to_vec(),
            upper,
        })
    }

    pub fn box_volume(&self) -> i64 {
        self.upper.iter().product()
    }

    /// Sheared integer point to ambient coordinates (same scale).
    pub fn unshear_scaled(&self, z: &[i64], out: &mut Vec<i64>) {
        out.clear();
        out.extend_from_slice(z);
        for k in 0..self.a.len() {
            out[k + 2] += (self.a[k] * z[0]).max(self.b[k] * z[1]);
        }
    }

    pub fn unshear_f64(&self, x: &[f64], out: &mut Vec<f64>) {
        out.clear();
        out.extend_from_slice(x);
        for k in 0..self.a.len() {
            out[k + 2] += (self.a[k] as f64 * x[0]).max(self.b[k] as f64 * x[1]);
        }
    }
}

#[derive(Debug, Clone)]
struct Sector {
    v: HilbertPoint,
    w: HilbertPoint,
}

/// Membership in the union of the simplices `S_i`, half-open along the far
/// facet so that lattice counts of adjacent cells do not overlap.
#[derive(Debug, Clone)]
pub struct HsRegion {
    a: Vec<i64>,
    b: Vec<i64>,
    sectors: Vec<Sector>,
}

impl HsRegion {
    pub fn new(pair: &ExponentPair) -> Result<Self> {
        let hilbert = hilbert_set(pair)?;
        let mut sectors = Vec::new();
        for (i, w) in hilbert.merged.windows(2).enumerate() {
            if w[0].det(w[1]) != 1 {
                return Err(Error::NonUnimodularPair { index: i });
            }
            sectors.push(Sector { v: w[0], w: w[1] });
        }
        Ok(HsRegion {
            a: pair.a().to_vec(),
            b: pair.b().to_vec(),
            sectors,
        })
    }

    /// Exact test of `z / m`.
    pub fn contains_scaled(&self, z: &[i64], m: i64) -> bool {
        let (r, s) = (z[0] as i128, z[1] as i128);
        let mut excess: i128 = 0;
        for k in 0..self.a.len() {
            let lam = z[k + 2] as i128 - (self.a[k] as i128 * r).max(self.b[k] as i128 * s);
            if lam < 0 {
                return false;
            }
            excess += lam;
        }
        self.sectors.iter().any(|sec| {
            // (r, s) = γ v + θ w with det(v, w) = 1.
            let gamma = r * sec.w.s as i128 - s * sec.w.r as i128;
            let theta = sec.v.r as i128 * s - sec.v.s as i128 * r;
            gamma >= 0 && theta >= 0 && gamma + theta + excess < m as i128
        })
    }

    pub fn contains_f64(&self, x: &[f64]) -> bool {
        let (r, s) = (x[0], x[1]);
        let mut excess = 0.0;
        for k in 0..self.a.len() {
            let lam = x[k + 2] - (self.a[k] as f64 * r).max(self.b[k] as f64 * s);
            if lam < 0.0 {
                return false;
            }
            excess += lam;
        }
        self.sectors.iter().any(|sec| {
            let gamma = r * sec.w.s as f64 - s * sec.w.r as f64;
            let theta = sec.v.r as f64 * s - sec.v.s as f64 * r;
            gamma >= 0.0 && theta >= 0.0 && gamma + theta + excess < 1.0
        })
    }
}

/// Membership predicates of the three regions in ambient coordinates.
#[derive(Debug, Clone)]
pub enum RegionPredicate {
    HilbertSamuel(HsRegion),
    FSignature(Vec<crate::polyvol::CompiledHalfSpace>),
    HilbertKunz(crate::polyvol::CompiledRegion),
}

impl RegionPredicate {
    pub fn new(pair: &ExponentPair, kind: RegionKind) -> Result<Self> {
        Ok(match kind {
            RegionKind::HilbertSamuel => RegionPredicate::HilbertSamuel(HsRegion::new(pair)?),
            RegionKind::FSignature => RegionPredicate::FSignature(
                fsig_polytope(pair)?
                    .halfspaces()
                    .iter()
                    .map(HalfSpace::compile)
                    .collect(),
            ),
            RegionKind::HilbertKunz => RegionPredicate::HilbertKunz(hk_region(pair)?.compile()),
        })
    }

    pub fn contains_scaled(&self, z: &[i64], m: i64) -> bool {
        match self {
            RegionPredicate::HilbertSamuel(r) => r.contains_scaled(z, m),
            RegionPredicate::FSignature(hs) => hs.iter().all(|h| h.contains_scaled(z, m)),
            RegionPredicate::HilbertKunz(r) => r.contains_scaled(z, m),
        }
    }

    pub fn contains_f64(&self, x: &[f64]) -> bool {
        match self {
            RegionPredicate::HilbertSamuel(r) => r.contains_f64(x),
            RegionPredicate::FSignature(hs) => hs.iter().all(|h| h.contains_f64(x)),
            RegionPredicate::HilbertKunz(r) => r.contains_f64(x),
        }
    }
}

/// Lattice-count estimate `#{z : z/m ∈ region} / m^{n+2}`, enumerated in the
/// sheared frame.
pub fn lattice_count_region(pair: &ExponentPair, kind: RegionKind, m: i64) -> Result<Rational> {
    let frame = ShearedFrame::new(pair, kind)?;
    let pred = RegionPredicate::new(pair, kind)?;
    let lo = vec![0; frame.upper.len()];
    let mut buf = Vec::with_capacity(lo.len());
    Ok(crate::polyvol::lattice_count_volume(
        |z| {
            frame.unshear_scaled(z, &mut buf);
            pred.contains_scaled(&buf, m)
        },
        &lo,
        &frame.upper,
        m,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan_hilbert::validate_and_order;
    use crate::rational::frac;

    fn pair(a: &[i64], b: &[i64]) -> ExponentPair {
        validate_and_order(a, b).unwrap()
    }

    #[test]
    fn hilbert_samuel_values() {
        assert_eq!(hilbert_samuel(&pair(&[5, 2], &[3, 2])).unwrap(), 5);
        assert_eq!(hilbert_samuel(&pair(&[5, 2], &[2, 3])).unwrap(), 7);
        assert_eq!(hilbert_samuel(&pair(&[3], &[2])).unwrap(), 4);
        for a in [&[1][..], &[3, 1], &[2, 2, 1]] {
            assert_eq!(hilbert_samuel(&pair(a, a)).unwrap(), 2);
        }
        for k in 1..5 {
            assert_eq!(
                hilbert_samuel(&pair(&[2 * k], &[2])).unwrap(),
                k as usize + 1
            );
        }
    }

    #[test]
    fn non_unimodular_pair_is_rejected() {
        let p = pair(&[3], &[2]);
        let mut hs = hilbert_set(&p).unwrap();
        // Dropping (1, 1) leaves (1, 0), (2, 3) with determinant 3.
        hs.merged.remove(1);
        assert_eq!(
            hs_simplices(&p, &hs),
            Err(Error::NonUnimodularPair { index: 0 })
        );
    }

    #[test]
    fn class_groups() {
        let c = class_group(&pair(&[3], &[2])).unwrap();
        assert_eq!(c.rank, 1);
        assert!(c.torsion_free());
        let c = class_group(&pair(&[5, 2], &[3, 2])).unwrap();
        assert_eq!(c.rank, 2);
        assert!(c.torsion_free());
        assert_eq!(class_group(&pair(&[1], &[1])).unwrap().rank, 1);
    }

    #[test]
    fn q_gorenstein() {
        assert!(is_q_gorenstein(&pair(&[2, 3], &[2, 3])));
        assert!(!is_q_gorenstein(&pair(&[3], &[2])));
        assert!(!is_q_gorenstein(&pair(&[4], &[2])));
    }

    #[test]
    fn f_signature_values() {
        assert_eq!(f_signature_exact(&pair(&[3], &[2])).unwrap(), frac(11, 36));
        assert_eq!(f_signature_exact(&pair(&[1], &[1])).unwrap(), frac(2, 3));
        assert_eq!(
            f_signature_exact(&pair(&[2, 1], &[2, 1])).unwrap(),
            frac(17, 48)
        );
    }

    #[test]
    fn hilbert_kunz_values() {
        assert_eq!(hilbert_kunz_exact(&pair(&[3], &[2])).unwrap(), frac(41, 18));
        assert_eq!(hilbert_kunz_exact(&pair(&[1], &[1])).unwrap(), frac(4, 3));
        assert_eq!(hilbert_kunz_exact(&pair(&[2], &[2])).unwrap(), frac(19, 12));
        assert_eq!(hilbert_kunz_exact(&pair(&[4], &[2])).unwrap(), frac(33, 16));
    }

    #[test]
    fn closed_form_routing() {
        assert_eq!(
            f_signature_closed_form(&pair(&[2], &[3])).unwrap().unwrap(),
            frac(11, 36)
        );
        assert!(f_signature_closed_form(&pair(&[5, 2], &[3, 2])).is_none());
        assert_eq!(
            f_signature_closed_form(&pair(&[2, 4], &[1, 2]))
                .unwrap()
                .unwrap(),
            formulas::f_signature_formula_kb(2, &[2, 1]).unwrap()
        );
        assert!(hilbert_kunz_closed_form(&pair(&[3], &[2])).is_none());
        assert_eq!(
            hilbert_kunz_closed_form(&pair(&[2], &[6]))
                .unwrap()
                .unwrap(),
            formulas::hk_formula_kb(3, 2).unwrap()
        );
    }

    #[test]
    fn report_for_3_2() {
        let r = invariant_report(&[3], &[2], &ReportOptions::default()).unwrap();
        assert_eq!(r.hilbert_number, 5);
        assert_eq!(r.embedding_dimension, 6);
        assert_eq!(r.hilbert_samuel, Some(4));
        assert_eq!(r.class_group.as_ref().unwrap().rank, 1);
        assert_eq!(r.f_signature, Some(frac(11, 36)));
        assert_eq!(r.f_signature_method, Some(Method::BothAgree));
        assert_eq!(r.hilbert_kunz, Some(frac(41, 18)));
        assert_eq!(r.hilbert_kunz_method, Some(Method::ExactVolume));
        assert!(!r.q_gorenstein);
    }

    #[test]
    fn report_for_polynomial_ring() {
        let r = invariant_report(&[2, 0], &[0, 3], &ReportOptions::default()).unwrap();
        assert!(r.polynomial_ring_only);
        assert_eq!(r.hilbert_samuel, Some(1));
        assert_eq!(r.f_signature, Some(int(1)));
        assert_eq!(r.hilbert_kunz, Some(int(1)));
        assert_eq!(r.class_group.unwrap().rank, 0);
        assert_eq!(r.embedding_dimension, 4);
    }

    #[test]
    fn report_with_adjoined_variable() {
        let r = invariant_report(&[3, 0], &[2, 5], &ReportOptions::default()).unwrap();
        assert_eq!(r.adjoined_variables, vec![2]);
        assert_eq!(r.dimension, 4);
        assert_eq!(r.hilbert_number, 5);
        assert_eq!(r.embedding_dimension, 7);
        assert_eq!(r.hilbert_samuel, Some(4));
        assert_eq!(r.f_signature, Some(frac(11, 36)));
    }

    #[test]
    fn lattice_counts_approach_volumes() {
        let p = pair(&[1], &[1]);
        let hs = lattice_count_region(&p, RegionKind::HilbertSamuel, 20).unwrap();
        assert!((hs - frac(1, 3)).abs() < frac(5, 100));
        let fs = lattice_count_region(&p, RegionKind::FSignature, 20).unwrap();
        assert!((fs - frac(2, 3)).abs() < frac(5, 100));
    }
}
