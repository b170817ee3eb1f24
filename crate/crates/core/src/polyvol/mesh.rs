//! Boundary triangulations of 3-dimensional polytopes.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::{vertices, HPolytope};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Triangle mesh with outward (counterclockwise) orientation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Mesh {
    pub vertices: Vec<[Rational; 3]>,
    pub faces: Vec<[usize; 3]>,
}

fn sub(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn dot(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

impl Mesh {
    /// Fan-triangulates every facet of a bounded 3-polytope. Flat or empty
    /// polytopes give an empty mesh.
    pub fn from_polytope(p: &HPolytope) -> Result<Mesh> {
        if p.dim() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: p.dim(),
            });
        }
        let verts: Vec<[Rational; 3]> = match vertices(p) {
            Ok(v) => v
                .into_iter()
                .map(|v| [v[0].clone(), v[1].clone(), v[2].clone()])
                .collect(),
            Err(Error::EmptyPolytope) => return Ok(Mesh::default()),
            Err(e) => return Err(e),
        };
        if p.volume()?.is_zero() {
            return Ok(Mesh::default());
        }
        let mut mesh = Mesh {
            vertices: verts.clone(),
            faces: Vec::new(),
        };
        let mut seen_planes: Vec<([Rational; 3], Rational)> = Vec::new();
        for h in p.halfspaces() {
            let n = [int(h.normal[0]), int(h.normal[1]), int(h.normal[2])];
            let on: Vec<usize> = (0..verts.len())
                .filter(|&i| dot(&n, &verts[i]) == h.offset)
                .collect();
            if on.len() < 3 {
                continue;
            }
            // Parallel constraints through the same facet are one plane.
            let scale = n.iter().map(|c| c.abs()).max().unwrap().recip();
            let key = (
                [&n[0] * &scale, &n[1] * &scale, &n[2] * &scale],
                &h.offset * &scale,
            );
            if seen_planes.contains(&key) {
                continue;
            }
            seen_planes.push(key);
            let weight = int(on.len() as i64).recip();
            let mut centroid = [Rational::zero(), Rational::zero(), Rational::zero()];
            for &i in &on {
                for k in 0..3 {
                    centroid[k] += &verts[i][k] * &weight;
                }
            }
            let e = sub(&verts[on[0]], &centroid);
            let f = cross(&n, &e);
            let angle_key = |i: usize| {
                let d = sub(&verts[i], &centroid);
                (dot(&d, &e), dot(&d, &f))
            };
            let mut ring = on.clone();
            ring.sort_by(|&i, &j| {
                let (x1, y1) = angle_key(i);
                let (x2, y2) = angle_key(j);
                let half = |x: &Rational, y: &Rational| {
                    if y.is_positive() || (y.is_zero() && x.is_positive()) {
                        0
                    } else {
                        1
                    }
                };
                half(&x1, &y1).cmp(&half(&x2, &y2)).then_with(|| {
                    let c = &x1 * &y2 - &y1 * &x2;
                    if c.is_positive() {
                        Ordering::Less
                    } else if c.is_negative() {
                        Ordering::Greater
                    } else {
                        Ordering::Equal
                    }
                })
            });
            for w in 1..ring.len() - 1 {
                mesh.faces.push([ring[0], ring[w], ring[w + 1]]);
            }
        }
        Ok(mesh)
    }

    /// Concatenates meshes, merging equal vertices and cancelling pairs of
    /// oppositely oriented triangles on shared faces.
    pub fn union(parts: &[Mesh]) -> Mesh {
        let mut index: BTreeMap<[Rational; 3], usize> = BTreeMap::new();
        let mut out = Mesh::default();
        let mut faces: Vec<[usize; 3]> = Vec::new();
        for part in parts {
            let map: Vec<usize> = part
                .vertices
                .iter()
                .map(|v| {
                    *index.entry(v.clone()).or_insert_with(|| {
                        out.vertices.push(v.clone());
                        out.vertices.len() - 1
                    })
                })
                .collect();
            faces.extend(part.faces.iter().map(|f| [map[f[0]], map[f[1]], map[f[2]]]));
        }
        let canonical = |f: &[usize; 3]| {
            let m = (0..3).min_by_key(|&i| f[i]).unwrap();
            [f[m], f[(m + 1) % 3], f[(m + 2) % 3]]
        };
        let mut counts: BTreeMap<[usize; 3], i64> = BTreeMap::new();
        for f in &faces {
            *counts.entry(canonical(f)).or_default() += 1;
        }
        for (face, &count) in &counts {
            let opposite = canonical(&[face[0], face[2], face[1]]);
            let net = count - counts.get(&opposite).copied().unwrap_or(0);
            for _ in 0..net.max(0) {
                out.faces.push(*face);
            }
        }
        out
    }

    /// Enclosed volume by the divergence theorem, `Σ det(p, q, r) / 6`.
    pub fn signed_volume(&self) -> Rational {
        let mut total = Rational::zero();
        for f in &self.faces {
            let [p, q, r] = [
                &self.vertices[f[0]],
                &self.vertices[f[1]],
                &self.vertices[f[2]],
            ];
            total += dot(p, &cross(q, r));
        }
        total / int(6)
    }
}
