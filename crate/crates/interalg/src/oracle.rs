//! Sampling and counting estimates of region volumes, used to cross-check
//! the exact engine.

use interalg_core::fan_hilbert::ExponentPair;
use interalg_core::invariants::{RegionKind, RegionPredicate, ShearedFrame};
use interalg_core::Rational;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{CliError, Result};

/// Samples per independent RNG stream. Fixed, so estimates do not depend on
/// the number of threads.
const BATCH: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub standard_error: f64,
    pub hits: u64,
    pub samples: u64,
}

/// Hit-or-miss estimate of the volume of a region inside the box `[lo, hi]`.
///
/// `factory` builds one predicate per batch, so predicates may keep scratch
/// buffers. Batch `i` draws from ChaCha8 seeded with `seed` on stream `i`.
pub fn monte_carlo_volume<F, P>(
    factory: F,
    lo: &[f64],
    hi: &[f64],
    samples: u64,
    seed: u64,
) -> Result<McEstimate>
where
    F: Fn() -> P + Sync,
    P: FnMut(&[f64]) -> bool,
{
    if samples == 0 {
        return Err(CliError::Parse(String::from("samples must be at least 1")));
    }
    if lo.len() != hi.len() {
        return Err(interalg_core::Error::DimensionMismatch {
            expected: lo.len(),
            found: hi.len(),
        }
        .into());
    }
    let d = lo.len();
    let batches = samples.div_ceil(BATCH);
    let hits: u64 = (0..batches)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let mut pred = factory();
            let n = BATCH.min(samples - i * BATCH);
            let mut x = vec![0.0; d];
            let mut hits = 0u64;
            for _ in 0..n {
                for k in 0..d {
                    x[k] = lo[k] + (hi[k] - lo[k]) * rng.random::<f64>();
                }
                if pred(&x) {
                    hits += 1;
                }
            }
            hits
        })
        .sum();
    let volume: f64 = lo.iter().zip(hi).map(|(l, h)| h - l).product();
    let p = hits as f64 / samples as f64;
    Ok(McEstimate {
        estimate: volume * p,
        standard_error: volume * (p * (1.0 - p) / samples as f64).sqrt(),
        hits,
        samples,
    })
}

/// Monte Carlo estimate of one of the three invariant regions, sampled in
/// the sheared frame.
pub fn monte_carlo_region(
    pair: &ExponentPair,
    kind: RegionKind,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    let frame = ShearedFrame::new(pair, kind)?;
    let pred = RegionPredicate::new(pair, kind)?;
    let lo = vec![0.0; frame.upper.len()];
    let hi: Vec<f64> = frame.upper.iter().map(|&v| v as f64).collect();
    monte_carlo_volume(
        || {
            let mut buf = Vec::with_capacity(lo.len());
            let (frame, pred) = (&frame, &pred);
            move |x: &[f64]| {
                frame.unshear_f64(x, &mut buf);
                pred.contains_f64(&buf)
            }
        },
        &lo,
        &hi,
        samples,
        seed,
    )
}

/// `#{z ∈ Z^d : z/m ∈ region} / m^d` over `[lo m, hi m]`, split over the
/// first coordinate.
pub fn lattice_count_parallel<F, P>(factory: F, lo: &[i64], hi: &[i64], m: i64) -> Result<Rational>
where
    F: Fn() -> P + Sync,
    P: FnMut(&[i64]) -> bool,
{
    if m < 1 {
        return Err(CliError::Parse(String::from(
            "lattice scale must be at least 1",
        )));
    }
    let d = lo.len();
    let lo: Vec<i64> = lo.iter().map(|v| v * m).collect();
    let hi: Vec<i64> = hi.iter().map(|v| v * m).collect();
    if d == 0 || lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return Ok(Rational::from_integer(BigInt::from(0)));
    }
    let count: u64 = (lo[0]..=hi[0])
        .into_par_iter()
        .map(|first| {
            let mut pred = factory();
            let mut z = lo.clone();
            z[0] = first;
            let mut count = 0u64;
            'outer: loop {
                if pred(&z) {
                    count += 1;
                }
                for k in 1..d {
                    if z[k] < hi[k] {
                        z[k] += 1;
                        continue 'outer;
                    }
                    z[k] = lo[k];
                }
                break;
            }
            count
        })
        .sum();
    Ok(Rational::new(
        BigInt::from(count),
        num_traits::pow(BigInt::from(m), d),
    ))
}

/// Lattice-count estimate of one of the three invariant regions.
pub fn lattice_count_region(pair: &ExponentPair, kind: RegionKind, m: i64) -> Result<Rational> {
    let frame = ShearedFrame::new(pair, kind)?;
    let pred = RegionPredicate::new(pair, kind)?;
    let lo = vec![0; frame.upper.len()];
    lattice_count_parallel(
        || {
            let mut buf = Vec::with_capacity(lo.len());
            let (frame, pred) = (&frame, &pred);
            move |z: &[i64]| {
                frame.unshear_scaled(z, &mut buf);
                pred.contains_scaled(&buf, m)
            }
        },
        &lo,
        &frame.upper,
        m,
    )
}
