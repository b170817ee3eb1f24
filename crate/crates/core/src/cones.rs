//! The cone `σ` spanned by the primitive vectors, its dual `C = σ∨` and the
//! affine semigroup `Q = C ∩ Z^{n+2}`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::fan_hilbert::ExponentPair;
use crate::rational::{frac, int, Rational};

/// `e_1, e_2, α_1..α_n, β_1..β_n` in `Z^{n+2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveVectors {
    pub e1: Vec<i64>,
    pub e2: Vec<i64>,
    pub alphas: Vec<Vec<i64>>,
    pub betas: Vec<Vec<i64>>,
}

impl PrimitiveVectors {
    /// All `2n + 2` vectors in the order `e_1, e_2, α_1.., β_1..`.
    pub fn all(&self) -> Vec<Vec<i64>> {
        let mut v = vec![self.e1.clone(), self.e2.clone()];
        v.extend(self.alphas.iter().cloned());
        v.extend(self.betas.iter().cloned());
        v
    }
}

pub fn sigma_generators(pair: &ExponentPair) -> Result<PrimitiveVectors> {
    pair.require_positive()?;
    let n = pair.n();
    let d = n + 2;
    let unit = |k: usize| {
        let mut e = vec![0; d];
        e[k] = 1;
        e
    };
    let alphas = (0..n)
        .map(|i| {
            let mut v = unit(i + 2);
            v[0] = -pair.a()[i];
            v
        })
        .collect();
    let betas = (0..n)
        .map(|i| {
            let mut v = unit(i + 2);
            v[1] = -pair.b()[i];
            v
        })
        .collect();
    Ok(PrimitiveVectors {
        e1: unit(0),
        e2: unit(1),
        alphas,
        betas,
    })
}

/// Ray generators of `C`: the coordinate rays `e_3..e_{n+2}` and
/// `w_0, ..., w_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualConeGenerators {
    pub coordinate_rays: Vec<Vec<i64>>,
    /// `w_0 = (1, 0, a)`, `w_i = (1, λ_i, a_1..a_i, λ_i b_{i+1}..λ_i b_n)`,
    /// `w_{n+1} = (0, 1, b)` with `λ_i = a_i / b_i`.
    pub w: Vec<Vec<Rational>>,
}

impl DualConeGenerators {
    pub fn all(&self) -> Vec<Vec<Rational>> {
        let mut v: Vec<Vec<Rational>> = self
            .coordinate_rays
            .iter()
            .map(|e| e.iter().map(|&x| int(x)).collect())
            .collect();
        v.extend(self.w.iter().cloned());
        v
    }

    /// `w` scaled to primitive integer vectors.
    pub fn w_primitive(&self) -> Vec<Vec<i64>> {
        self.w
            .iter()
            .map(|w| {
                crate::rational::primitive_integer(w)
                    .expect("w vectors are nonzero")
                    .iter()
                    .map(|v| i64::try_from(v).expect("small entries"))
                    .collect()
            })
            .collect()
    }
}

pub fn dual_generators(pair: &ExponentPair) -> Result<DualConeGenerators> {
    pair.require_positive()?;
    let n = pair.n();
    let d = n + 2;
    let (a, b) = (pair.a(), pair.b());
    let coordinate_rays = (2..d)
        .map(|k| {
            let mut e = vec![0; d];
            e[k] = 1;
            e
        })
        .collect();
    let mut w = Vec::with_capacity(n + 2);
    let mut w0 = vec![int(1), int(0)];
    w0.extend(a.iter().map(|&x| int(x)));
    w.push(w0);
    for i in 0..n {
        let lambda = frac(a[i], b[i]);
        let mut wi = vec![int(1), lambda.clone()];
        for k in 0..n {
            wi.push(if k <= i {
                int(a[k])
            } else {
                &lambda * int(b[k])
            });
        }
        w.push(wi);
    }
    let mut last = vec![int(0), int(1)];
    last.extend(b.iter().map(|&x| int(x)));
    w.push(last);
    Ok(DualConeGenerators { coordinate_rays, w })
}

fn pairing(w: &[Rational], p: &[i64]) -> Rational {
    w.iter().zip(p).map(|(x, &y)| x * int(y)).sum()
}

/// Why a duality check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualityCertificate {
    /// `⟨generator, primitive⟩ < 0`.
    NegativePairing {
        generator: Vec<Rational>,
        primitive: Vec<i64>,
        value: Rational,
    },
    /// A sample point of `C` has no nonnegative decomposition.
    NotReconstructed { point: Vec<Rational> },
}

/// Checks `σ∨ = C` for the computed generators.
pub fn verify_duality(pair: &ExponentPair) -> Result<core::result::Result<(), DualityCertificate>> {
    let prims = sigma_generators(pair)?;
    let gens = dual_generators(pair)?;
    Ok(check_duality(pair, &prims, &gens))
}

/// Checks (i) every generator pairs nonnegatively with every primitive vector
/// and (ii) a fixed sample of points of `C` splits as
/// `γ w + θ w' + Σ τ_k e_k` with consecutive `w, w'` (ordered by the slope
/// `s / r`) and `γ, θ, τ ≥ 0`. The sample holds every generator, every
/// pairwise midpoint of generators and the boundary points
/// `(r, s, max(a r, b s))` for `0 ≤ r, s ≤ 4`.
pub fn check_duality(
    pair: &ExponentPair,
    prims: &PrimitiveVectors,
    gens: &DualConeGenerators,
) -> core::result::Result<(), DualityCertificate> {
    let all = gens.all();
    for g in &all {
        for p in prims.all() {
            let value = pairing(g, &p);
            if value.is_negative() {
                return Err(DualityCertificate::NegativePairing {
                    generator: g.clone(),
                    primitive: p,
                    value,
                });
            }
        }
    }
    // Chain by decreasing slope: w_{n+1}, w_1, ..., w_n, w_0.
    let m = gens.w.len();
    let mut chain: Vec<&Vec<Rational>> = Vec::with_capacity(m);
    chain.push(&gens.w[m - 1]);
    chain.extend(gens.w[1..m - 1].iter());
    chain.push(&gens.w[0]);

    let mut samples: Vec<Vec<Rational>> = all.clone();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            samples.push(
                all[i]
                    .iter()
                    .zip(&all[j])
                    .map(|(x, y)| (x + y) / int(2))
                    .collect(),
            );
        }
    }
    for r in 0..=4i64 {
        for s in 0..=4i64 {
            let mut u = vec![int(r), int(s)];
            u.extend(
                pair.a()
                    .iter()
                    .zip(pair.b())
                    .map(|(&a, &b)| int((a * r).max(b * s))),
            );
            samples.push(u);
        }
    }
    for u in samples {
        if !reconstructs(&u, &chain) {
            return Err(DualityCertificate::NotReconstructed { point: u });
        }
    }
    Ok(())
}

fn reconstructs(u: &[Rational], chain: &[&Vec<Rational>]) -> bool {
    let (r, s) = (&u[0], &u[1]);
    if r.is_negative() || s.is_negative() {
        return false;
    }
    let residual_ok = |gamma: &Rational, p: &[Rational], theta: &Rational, q: &[Rational]| {
        !gamma.is_negative()
            && !theta.is_negative()
            && (2..u.len()).all(|k| !(&u[k] - gamma * &p[k] - theta * &q[k]).is_negative())
    };
    if r.is_zero() && s.is_zero() {
        return u[2..].iter().all(|t| !t.is_negative());
    }
    for pair in chain.windows(2) {
        let (p, q) = (pair[0], pair[1]);
        // Solve γ (p_r, p_s) + θ (q_r, q_s) = (r, s).
        let det = &p[0] * &q[1] - &p[1] * &q[0];
        if det.is_zero() {
            continue;
        }
        let gamma = (r * &q[1] - s * &q[0]) / &det;
        let theta = (&p[0] * s - &p[1] * r) / &det;
        if residual_ok(&gamma, p, &theta, q) {
            return true;
        }
    }
    false
}

/// `r, s ≥ 0` and `t_i ≥ max(a_i r, b_i s)`.
pub fn semigroup_contains(pair: &ExponentPair, point: &[i64]) -> bool {
    if point.len() != pair.n() + 2 {
        return false;
    }
    let (r, s) = (point[0], point[1]);
    r >= 0
        && s >= 0
        && pair
            .a()
            .iter()
            .zip(pair.b())
            .zip(&point[2..])
            .all(|((&a, &b), &t)| t >= (a * r).max(b * s))
}

/// Pairs `(p, q)` of members of `Q` with `p - q = e_k`, one per standard
/// basis vector, witnessing `gp(Q) = Z^{n+2}`.
pub fn group_witnesses(pair: &ExponentPair) -> Vec<(Vec<i64>, Vec<i64>)> {
    let n = pair.n();
    let d = n + 2;
    let top: Vec<i64> = pair
        .a()
        .iter()
        .zip(pair.b())
        .map(|(&a, &b)| a.max(b))
        .collect();
    let base = |r: i64, s: i64| {
        let mut v = vec![r, s];
        v.extend(top.iter().copied());
        v
    };
    let mut out = Vec::with_capacity(d);
    out.push((base(1, 0), base(0, 0)));
    out.push((base(0, 1), base(0, 0)));
    for k in 2..d {
        let q = base(1, 1);
        let mut p = q.clone();
        p[k] += 1;
        out.push((p, q));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan_hilbert::validate_and_order;

    fn pair(a: &[i64], b: &[i64]) -> ExponentPair {
        validate_and_order(a, b).unwrap()
    }

    #[test]
    fn primitive_vectors() {
        let p = sigma_generators(&pair(&[3], &[2])).unwrap();
        assert_eq!(
            p.all(),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![-3, 0, 1], vec![0, -2, 1]]
        );
        let p = sigma_generators(&pair(&[5, 2], &[3, 2])).unwrap();
        assert_eq!(p.all().len(), 6);
        assert!(p.alphas.contains(&vec![-5, 0, 1, 0]));
        assert!(p.betas.contains(&vec![0, -2, 0, 1]));
        let p = sigma_generators(&pair(&[1], &[1])).unwrap();
        assert_eq!(
            p.all(),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]
        );
    }

    #[test]
    fn dual_generators_of_3_2() {
        let g = dual_generators(&pair(&[3], &[2])).unwrap();
        assert_eq!(g.coordinate_rays, vec![vec![0, 0, 1]]);
        assert_eq!(
            g.w,
            vec![
                vec![int(1), int(0), int(3)],
                vec![int(1), frac(3, 2), int(3)],
                vec![int(0), int(1), int(2)],
            ]
        );
        assert_eq!(g.w_primitive()[1], vec![2, 3, 6]);
        let g = dual_generators(&pair(&[4], &[4])).unwrap();
        assert_eq!(g.w[1], vec![int(1), int(1), int(4)]);
        let g = dual_generators(&pair(&[5, 2], &[3, 2])).unwrap();
        assert_eq!(g.w[1], vec![int(1), frac(5, 3), int(5), frac(10, 3)]);
        assert_eq!(g.w[2], vec![int(1), int(1), int(5), int(2)]);
    }

    #[test]
    fn duality_holds() {
        for (a, b) in [
            (&[3][..], &[2][..]),
            (&[1], &[1]),
            (&[5, 2], &[3, 2]),
            (&[4, 4, 1], &[1, 2, 3]),
        ] {
            let p = pair(a, b);
            assert_eq!(verify_duality(&p).unwrap(), Ok(()), "{a:?} {b:?}");
        }
    }

    #[test]
    fn perturbed_generator_is_rejected() {
        let p = pair(&[3, 1], &[2, 2]);
        let prims = sigma_generators(&p).unwrap();
        let mut gens = dual_generators(&p).unwrap();
        let lambda = frac(3, 2) + int(1);
        gens.w[1] = vec![int(1), lambda.clone(), int(3), lambda * int(2)];
        match check_duality(&p, &prims, &gens) {
            Err(DualityCertificate::NegativePairing {
                primitive, value, ..
            }) => {
                assert_eq!(primitive, vec![0, -2, 1, 0]);
                assert_eq!(value, int(-2));
            }
            other => panic!("expected a negative pairing, got {other:?}"),
        }
    }

    #[test]
    fn dropped_generator_fails_reconstruction() {
        let p = pair(&[3], &[2]);
        let prims = sigma_generators(&p).unwrap();
        let mut gens = dual_generators(&p).unwrap();
        gens.w.remove(1);
        match check_duality(&p, &prims, &gens) {
            Err(DualityCertificate::NotReconstructed { point }) => {
                assert!(point[1].clone() * int(2) > point[0].clone(), "{point:?}");
            }
            other => panic!("expected a reconstruction failure, got {other:?}"),
        }
    }

    #[test]
    fn membership() {
        let p = pair(&[3], &[2]);
        assert!(semigroup_contains(&p, &[1, 1, 3]));
        assert!(!semigroup_contains(&p, &[1, 1, 2]));
        assert!(!semigroup_contains(&p, &[-1, 0, 0]));
        assert!(!semigroup_contains(&p, &[1, 1]));
    }

    #[test]
    fn witnesses_generate_the_group() {
        let p = pair(&[5, 2, 1], &[3, 2, 4]);
        let w = group_witnesses(&p);
        assert_eq!(w.len(), 5);
        for (k, (x, y)) in w.iter().enumerate() {
            assert!(semigroup_contains(&p, x) && semigroup_contains(&p, y));
            let diff: Vec<i64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
            let mut e = vec![0; 5];
            e[k] = 1;
            assert_eq!(diff, e);
        }
    }
}
