//! Fan ordering of the exponent vectors, reduction of degenerate inputs and
//! the Hilbert bases of the plane fan segments.
//!
//! For positive `a`, `b` the fan of `B(a, b)` lives in the `(r, s)` plane and
//! has rays `(0, 1)`, `(b_1, a_1)`, ..., `(b_n, a_n)`, `(1, 0)`; segment `i`
//! is the cone between rays `i` and `i + 1`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Compares the fan ratios `a1/b1` and `a2/b2` with `k/0 = ∞`. Pairs must not
/// be doubly zero.
fn ratio_cmp(a1: i64, b1: i64, a2: i64, b2: i64) -> Ordering {
    (a1 as i128 * b2 as i128).cmp(&(a2 as i128 * b1 as i128))
}

/// Exponent vectors in fan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentPair {
    a: Vec<i64>,
    b: Vec<i64>,
    permutation: Vec<usize>,
    nondegenerate: bool,
}

impl ExponentPair {
    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    /// `permutation[j]` is the original (0-based) index now at position `j`.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    pub fn is_positive(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&v| v > 0)
    }

    pub(crate) fn require_positive(&self) -> Result<()> {
        for (i, (a, b)) in self.a.iter().zip(&self.b).enumerate() {
            if *a <= 0 || *b <= 0 {
                return Err(Error::NonPositiveEntry { index: i });
            }
        }
        Ok(())
    }

    /// The pair `(b, a)`, i.e. `B(b, a) ≅ B(a, b)` with `u` and `v` swapped.
    pub fn swapped(&self) -> ExponentPair {
        validate_and_order(&self.b, &self.a).expect("swap of a valid pair is valid")
    }

    /// Fan rays `(0,1), (b_1,a_1), ..., (b_n,a_n), (1,0)` as primitive points.
    pub fn rays(&self) -> Vec<HilbertPoint> {
        let mut rays = Vec::with_capacity(self.n() + 2);
        rays.push(HilbertPoint { r: 0, s: 1 });
        for (&a, &b) in self.a.iter().zip(&self.b) {
            rays.push(HilbertPoint { r: b, s: a }.primitive());
        }
        rays.push(HilbertPoint { r: 1, s: 0 });
        rays
    }
}

/// Validates `a`, `b` and sorts the index pairs so that `a_i / b_i` is
/// non-increasing. Ties keep their original order.
pub fn validate_and_order(a: &[i64], b: &[i64]) -> Result<ExponentPair> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            a: a.len(),
            b: b.len(),
        });
    }
    if a.is_empty() {
        return Err(Error::EmptyInput);
    }
    for (i, (&x, &y)) in a.iter().zip(b).enumerate() {
        if x < 0 || y < 0 {
            return Err(Error::NegativeEntry { index: i });
        }
        if x == 0 && y == 0 {
            return Err(Error::DoublyZeroIndex { index: i });
        }
    }
    let mut permutation: Vec<usize> = (0..a.len()).collect();
    permutation.sort_by(|&i, &j| ratio_cmp(a[j], b[j], a[i], b[i]));
    let a: Vec<i64> = permutation.iter().map(|&i| a[i]).collect();
    let b: Vec<i64> = permutation.iter().map(|&i| b[i]).collect();

    // Sentinels a_0/b_0 = 1/0 and a_{n+1}/b_{n+1} = 0/1.
    let mut sa = Vec::with_capacity(a.len() + 2);
    let mut sb = Vec::with_capacity(a.len() + 2);
    sa.push(1);
    sb.push(0);
    sa.extend_from_slice(&a);
    sb.extend_from_slice(&b);
    sa.push(0);
    sb.push(1);
    let nondegenerate = (0..sa.len() - 1)
        .all(|i| ratio_cmp(sa[i], sb[i], sa[i + 1], sb[i + 1]) == Ordering::Greater);

    Ok(ExponentPair {
        a,
        b,
        permutation,
        nondegenerate,
    })
}

/// Outcome of removing zero exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// Pair with all entries positive, or `None` when nothing is left.
    pub core: Option<ExponentPair>,
    /// Original 1-based indices of the variables adjoined polynomially.
    pub adjoined_variables: Vec<usize>,
    /// `B(a, b)` is a polynomial ring in `n + 2` variables.
    pub polynomial_ring_only: bool,
}

/// Splits off the variables that do not interact with both ideals.
///
/// An index with `b_i = 0` only contributes `x_i^{a_i}` to the `u` generator
/// and one with `a_i = 0` only to the `v` generator; both become free
/// polynomial variables, as do indices with `a_i = b_i = 0`. The remaining
/// positive indices form the core pair.
pub fn reduce_degenerate(a: &[i64], b: &[i64]) -> Result<Reduction> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            a: a.len(),
            b: b.len(),
        });
    }
    if a.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(i) = a.iter().chain(b).position(|&v| v < 0) {
        return Err(Error::NegativeEntry { index: i % a.len() });
    }
    let mut adjoined = Vec::new();
    let mut core_idx = Vec::new();
    for i in 0..a.len() {
        if a[i] > 0 && b[i] > 0 {
            core_idx.push(i);
        } else {
            adjoined.push(i + 1);
        }
    }
    if core_idx.is_empty() {
        return Ok(Reduction {
            core: None,
            adjoined_variables: adjoined,
            polynomial_ring_only: true,
        });
    }
    let ca: Vec<i64> = core_idx.iter().map(|&i| a[i]).collect();
    let cb: Vec<i64> = core_idx.iter().map(|&i| b[i]).collect();
    let mut core = validate_and_order(&ca, &cb)?;
    // Report the permutation in terms of the caller's indices.
    core.permutation = core.permutation.iter().map(|&j| core_idx[j]).collect();
    Ok(Reduction {
        core: Some(core),
        adjoined_variables: adjoined,
        polynomial_ring_only: false,
    })
}

/// A nonzero lattice point `(r, s)` of the first quadrant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HilbertPoint {
    pub r: i64,
    pub s: i64,
}

impl HilbertPoint {
    pub fn new(r: i64, s: i64) -> Result<Self> {
        if r < 0 || s < 0 {
            return Err(Error::NegativeEntry {
                index: if r < 0 { 0 } else { 1 },
            });
        }
        if r == 0 && s == 0 {
            return Err(Error::ZeroGenerator);
        }
        Ok(HilbertPoint { r, s })
    }

    pub fn primitive(self) -> Self {
        let g = self.r.gcd(&self.s);
        if g <= 1 {
            self
        } else {
            HilbertPoint {
                r: self.r / g,
                s: self.s / g,
            }
        }
    }

    /// `det(self, other) = r s' - s r'`.
    pub fn det(self, other: HilbertPoint) -> i64 {
        self.r * other.s - self.s * other.r
    }

    /// Counterclockwise order: by slope `s/r`, with `(0, 1)` last.
    pub fn ccw_cmp(&self, other: &HilbertPoint) -> Ordering {
        (self.s as i128 * other.r as i128)
            .cmp(&(other.s as i128 * self.r as i128))
            .then_with(|| (self.r + self.s).cmp(&(other.r + other.s)))
    }
}

impl Ord for HilbertPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ccw_cmp(other)
    }
}

impl PartialOrd for HilbertPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Hilbert basis of `Cone(g1, g2) ∩ N²`, sorted counterclockwise.
///
/// Every irreducible element lies in the closed parallelogram spanned by the
/// primitive generators, and any decomposition of a parallelogram point stays
/// in the parallelogram, so irreducibility is decided there.
pub fn hilbert_basis_cone(g1: HilbertPoint, g2: HilbertPoint) -> Result<Vec<HilbertPoint>> {
    if (g1.r == 0 && g1.s == 0) || (g2.r == 0 && g2.s == 0) {
        return Err(Error::ZeroGenerator);
    }
    let p1 = g1.primitive();
    let p2 = g2.primitive();
    if p1 == p2 {
        return Ok(alloc::vec![p1]);
    }
    let d = p1.det(p2);
    if d == 0 {
        return Err(Error::InvalidParameter("cone generators are opposite"));
    }
    let mut candidates = BTreeSet::new();
    for r in 0..=(p1.r + p2.r) {
        for s in 0..=(p1.s + p2.s) {
            if r == 0 && s == 0 {
                continue;
            }
            let x = HilbertPoint { r, s };
            // x = alpha p1 + beta p2 with alpha = det(x, p2)/d, beta = det(p1, x)/d.
            let alpha = x.det(p2);
            let beta = p1.det(x);
            let inside = |v: i64| {
                if d > 0 {
                    0 <= v && v <= d
                } else {
                    d <= v && v <= 0
                }
            };
            if inside(alpha) && inside(beta) {
                candidates.insert((r, s));
            }
        }
    }
    let mut basis: Vec<HilbertPoint> = candidates
        .iter()
        .filter(|&&(r, s)| {
            !candidates
                .iter()
                .any(|&(qr, qs)| (qr, qs) != (r, s) && candidates.contains(&(r - qr, s - qs)))
        })
        .map(|&(r, s)| HilbertPoint { r, s })
        .collect();
    basis.sort();
    Ok(basis)
}

/// Segment Hilbert bases and their counterclockwise union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSet {
    /// `segments[i]` is the basis of the cone between rays `i` and `i + 1`;
    /// `segments[0]` touches `(0, 1)` and `segments[n]` touches `(1, 0)`.
    pub segments: Vec<Vec<HilbertPoint>>,
    /// Union of the segment bases, from `(1, 0)` to `(0, 1)`.
    pub merged: Vec<HilbertPoint>,
}

impl HilbertSet {
    /// The Hilbert number `h`.
    pub fn h(&self) -> usize {
        self.merged.len()
    }
}

pub fn hilbert_set(pair: &ExponentPair) -> Result<HilbertSet> {
    pair.require_positive()?;
    let rays = pair.rays();
    let segments = rays
        .windows(2)
        .map(|w| hilbert_basis_cone(w[0], w[1]))
        .collect::<Result<Vec<_>>>()?;
    let merged: BTreeSet<HilbertPoint> = segments.iter().flatten().copied().collect();
    Ok(HilbertSet {
        segments,
        merged: merged.into_iter().collect(),
    })
}

/// `t(v) = (max(a_i r, b_i s))_i`.
pub fn t_vector(v: HilbertPoint, pair: &ExponentPair) -> Vec<i64> {
    pair.a
        .iter()
        .zip(&pair.b)
        .map(|(&a, &b)| (a * v.r).max(b * v.s))
        .collect()
}

/// `u(v) = (r, s, t(v))`.
pub fn lift(v: HilbertPoint, pair: &ExponentPair) -> Vec<i64> {
    let mut u = Vec::with_capacity(pair.n() + 2);
    u.push(v.r);
    u.push(v.s);
    u.extend(t_vector(v, pair));
    u
}

/// Monomial generators of the maximal ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    /// `u(v)` for `v` in the merged Hilbert set, counterclockwise.
    pub generators: Vec<Vec<i64>>,
    /// `e_3, ..., e_{n+2}`, the variables `x_1, ..., x_n`.
    pub coordinate: Vec<Vec<i64>>,
}

impl GeneratorSet {
    pub fn all(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.generators.iter().chain(&self.coordinate)
    }

    pub fn len(&self) -> usize {
        self.generators.len() + self.coordinate.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn generator_set(pair: &ExponentPair, hilbert: &HilbertSet) -> GeneratorSet {
    let d = pair.n() + 2;
    let generators = hilbert.merged.iter().map(|&v| lift(v, pair)).collect();
    let coordinate = (2..d)
        .map(|k| {
            let mut e = alloc::vec![0; d];
            e[k] = 1;
            e
        })
        .collect();
    GeneratorSet {
        generators,
        coordinate,
    }
}

/// `ν(B) = n + h`.
pub fn embedding_dimension(pair: &ExponentPair) -> Result<usize> {
    Ok(pair.n() + hilbert_set(pair)?.h())
}
