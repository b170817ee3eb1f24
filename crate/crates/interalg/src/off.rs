//! ASCII OFF meshes.

use std::fmt::Write as _;

use interalg_core::polyvol::mesh::Mesh;
use interalg_core::rational::to_decimal;

use crate::error::{CliError, Result};

/// `OFF`, the counts line, vertices with 12 significant digits and one
/// `3 i j k` line per triangle.
pub fn write_off(mesh: &Mesh) -> String {
    let mut out = String::from("OFF\n");
    let _ = writeln!(out, "{} {} 0", mesh.vertices.len(), mesh.faces.len());
    for v in &mesh.vertices {
        let coords: Vec<String> = v.iter().map(|c| to_decimal(c, 12)).collect();
        let _ = writeln!(out, "{}", coords.join(" "));
    }
    for f in &mesh.faces {
        let _ = writeln!(out, "3 {} {} {}", f[0], f[1], f[2]);
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct OffMesh {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<[usize; 3]>,
}

impl OffMesh {
    /// Enclosed volume from the divergence theorem.
    pub fn volume(&self) -> f64 {
        let mut total = 0.0;
        for f in &self.faces {
            let [p, q, r] = f.map(|i| self.vertices[i]);
            total += p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0])
                + p[2] * (q[0] * r[1] - q[1] * r[0]);
        }
        total / 6.0
    }
}

/// Reads triangle meshes in the format written by [`write_off`].
pub fn read_off(text: &str) -> Result<OffMesh> {
    let bad = |what: &str| CliError::Parse(format!("malformed OFF: {what}"));
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    if lines.next() != Some("OFF") {
        return Err(bad("missing header"));
    }
    let counts: Vec<usize> = lines
        .next()
        .ok_or_else(|| bad("missing counts"))?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad("counts")))
        .collect::<Result<_>>()?;
    let (nv, nf) = match counts[..] {
        [nv, nf, _] => (nv, nf),
        _ => return Err(bad("counts")),
    };
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let c: Vec<f64> = lines
            .next()
            .ok_or_else(|| bad("missing vertex"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("vertex")))
            .collect::<Result<_>>()?;
        let v: [f64; 3] = c.try_into().map_err(|_| bad("vertex arity"))?;
        vertices.push(v);
    }
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let idx: Vec<usize> = lines
            .next()
            .ok_or_else(|| bad("missing face"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("face")))
            .collect::<Result<_>>()?;
        match idx[..] {
            [3, i, j, k] if i < nv && j < nv && k < nv => faces.push([i, j, k]),
            _ => return Err(bad("face")),
        }
    }
    Ok(OffMesh { vertices, faces })
}
