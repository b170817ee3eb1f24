//! Inclusion–exclusion with the subset terms evaluated on the rayon pool.

use interalg_core::polyvol::{volume_exact, RegionDifference};
use interalg_core::{Error, Rational};
use num_traits::Zero;
use rayon::prelude::*;

/// Same value as the sequential sum: the terms are mapped in parallel and
/// added in their fixed order.
pub fn volume_with_bound(region: &RegionDifference, bound: i64) -> Result<Rational, Error> {
    let terms = region.terms(bound);
    let parts: Vec<Rational> = terms
        .par_iter()
        .map(|(coef, p)| volume_exact(p).map(|v| Rational::from_integer(coef.clone()) * v))
        .collect::<Result<_, _>>()?;
    Ok(parts.into_iter().fold(Rational::zero(), |acc, v| acc + v))
}

/// Parallel counterpart of the certified region-difference volume.
pub fn volume_region_difference(region: &RegionDifference) -> Result<Rational, Error> {
    let (volume, doubled) = rayon::join(
        || volume_with_bound(region, region.bound()),
        || volume_with_bound(region, 2 * region.bound()),
    );
    let (volume, doubled) = (volume?, doubled?);
    if volume != doubled {
        return Err(Error::BoxTooSmall {
            bound: region.bound(),
            volume: Box::new(volume),
            doubled: Box::new(doubled),
        });
    }
    Ok(volume)
}
