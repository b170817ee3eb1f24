use std::fs;
use std::path::Path;

use interalg_core::fan_hilbert::{hilbert_set, ExponentPair};
use interalg_core::invariants::{
    fsig_polytope, hk_region, hs_simplices, invariant_report, RegionKind,
};
use interalg_core::polyvol::mesh::Mesh;
use interalg_core::polyvol::HPolytope;
use interalg_core::Rational;
use num_traits::{Signed, ToPrimitive};

use crate::config::{default_lattice_scale, OutputFormat, RunConfig};
use crate::error::{CliError, Result};
use crate::oracle::{lattice_count_region, monte_carlo_region};
use crate::report::{
    decimal, fraction, LatticeJson, MeshJson, MonteCarloJson, OracleJson, ReportJson,
};

/// Estimates further than this many standard errors from the exact value
/// fail a `--method all` run.
pub const ORACLE_SIGMAS: f64 = 4.0;

/// Computes the report for `config`, writes any meshes and returns the text
/// for standard output.
pub fn run(config: &RunConfig) -> Result<String> {
    let report = build_report(config)?;
    Ok(match config.output {
        OutputFormat::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        OutputFormat::Table => report.to_table(),
    })
}

pub fn build_report(config: &RunConfig) -> Result<ReportJson> {
    let options = config.method.report_options(config.invariants.selection);
    let core = invariant_report(&config.a, &config.b, &options)?;
    let mut json = ReportJson::from_report(&core, config.invariants.embedding_dimension);
    if config.method.runs_oracles() {
        if let Some(pair) = &core.pair {
            json.oracles = oracles(pair, config)?;
        }
    }
    if let Some(dir) = &config.mesh {
        let pair = match &core.pair {
            Some(p) if p.n() == 1 && core.adjoined_variables.is_empty() => p,
            _ => {
                return Err(CliError::Parse(String::from(
                    "mesh export needs a and b of length 1, both positive",
                )))
            }
        };
        json.meshes = write_meshes(pair, dir)?;
    }
    Ok(json)
}

fn oracles(pair: &ExponentPair, config: &RunConfig) -> Result<Vec<OracleJson>> {
    let sel = config.invariants.selection;
    let scale = config
        .lattice_scale
        .unwrap_or_else(|| default_lattice_scale(pair.n() + 2));
    let mut out = Vec::new();
    for (kind, key, on) in [
        (
            RegionKind::HilbertSamuel,
            "hilbertSamuelVolume",
            sel.hilbert_samuel,
        ),
        (RegionKind::FSignature, "fSignature", sel.f_signature),
        (RegionKind::HilbertKunz, "hilbertKunz", sel.hilbert_kunz),
    ] {
        if !on {
            continue;
        }
        let exact = kind.exact_volume(pair)?;
        let exact_f = exact.to_f64().unwrap_or(f64::NAN);
        let mc = monte_carlo_region(pair, kind, config.samples, config.seed)?;
        let diff = (mc.estimate - exact_f).abs();
        let sigmas = (mc.standard_error > 0.0).then(|| diff / mc.standard_error);
        if config.method == crate::config::MethodChoice::All {
            let far = match sigmas {
                Some(s) => s > ORACLE_SIGMAS,
                None => diff > 1e-12,
            };
            if far {
                return Err(CliError::OracleDisagreement {
                    invariant: key.to_string(),
                    exact: fraction(&exact),
                    estimate: mc.estimate,
                    sigmas: sigmas.unwrap_or(f64::INFINITY),
                });
            }
        }
        let lattice = lattice_count_region(pair, kind, scale)?;
        let deviation: Rational = (&lattice - &exact).abs();
        out.push(OracleJson {
            invariant: key.to_string(),
            region: kind.as_str().to_string(),
            exact: fraction(&exact),
            monte_carlo: MonteCarloJson {
                estimate: mc.estimate,
                standard_error: mc.standard_error,
                samples: mc.samples,
                seed: config.seed,
                sigmas,
            },
            lattice: LatticeJson {
                scale,
                value: fraction(&lattice),
                decimal: decimal(&lattice),
                deviation: decimal(&deviation),
            },
        });
    }
    Ok(out)
}

/// Boundary meshes of the three regions for `n = 1`.
pub fn region_meshes(pair: &ExponentPair) -> Result<Vec<(RegionKind, Mesh)>> {
    let hilbert = hilbert_set(pair)?;
    let simplices = hs_simplices(pair, &hilbert)?
        .iter()
        .map(|s| HPolytope::simplex(s).and_then(|p| Mesh::from_polytope(&p)))
        .collect::<Result<Vec<_>, _>>()?;
    let fsig = Mesh::from_polytope(&fsig_polytope(pair)?)?;
    let cells = hk_region(pair)?
        .cells()?
        .iter()
        .map(Mesh::from_polytope)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(vec![
        (RegionKind::HilbertSamuel, Mesh::union(&simplices)),
        (RegionKind::FSignature, fsig),
        (RegionKind::HilbertKunz, Mesh::union(&cells)),
    ])
}

fn write_meshes(pair: &ExponentPair, dir: &Path) -> Result<Vec<MeshJson>> {
    let io = |path: &Path, source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    let mut out = Vec::new();
    for (kind, mesh) in region_meshes(pair)? {
        let file = format!("{}.off", kind.as_str());
        let path = dir.join(&file);
        fs::write(&path, crate::off::write_off(&mesh)).map_err(|e| io(&path, e))?;
        out.push(MeshJson {
            region: kind.as_str().to_string(),
            file,
            vertices: mesh.vertices.len(),
            faces: mesh.faces.len(),
            volume: fraction(&mesh.signed_volume()),
        });
    }
    Ok(out)
}
