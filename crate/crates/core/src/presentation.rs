//! Binomial presentations of the hypersurface `B(a, a)`, of `B(kb, b)` and
//! of the rational normal scroll `B(a, 1)`.
//!
//! Every variable carries the exponent vector of the monomial it maps to, so
//! each relation can be checked as an identity in the semigroup.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    /// Image of the variable in the ambient lattice.
    pub exponent: Vec<i64>,
}

/// `lhs = rhs`, each side an exponent vector over the presentation's
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
}

impl Relation {
    /// Order in the standard grading: the smaller of the two side degrees.
    pub fn order(&self) -> u32 {
        let lhs: u32 = self.lhs.iter().sum();
        let rhs: u32 = self.rhs.iter().sum();
        lhs.min(rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub variables: Vec<Variable>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    /// Image of a monomial under the variable substitution.
    pub fn image(&self, monomial: &[u32]) -> Vec<i64> {
        let dim = self.variables.first().map_or(0, |v| v.exponent.len());
        let mut out = vec![0i64; dim];
        for (e, var) in monomial.iter().zip(&self.variables) {
            for (o, x) in out.iter_mut().zip(&var.exponent) {
                *o += *e as i64 * x;
            }
        }
        out
    }

    /// Index of the first relation that is not a nontrivial identity.
    pub fn verify(&self) -> core::result::Result<(), usize> {
        for (i, r) in self.relations.iter().enumerate() {
            if r.lhs == r.rhs || self.image(&r.lhs) != self.image(&r.rhs) {
                return Err(i);
            }
        }
        Ok(())
    }

    pub fn render_monomial(&self, monomial: &[u32]) -> String {
        let mut parts = Vec::new();
        for (e, var) in monomial.iter().zip(&self.variables) {
            match e {
                0 => {}
                1 => parts.push(var.name.clone()),
                _ => parts.push(format!("{}^{}", var.name, e)),
            }
        }
        if parts.is_empty() {
            return String::from("1");
        }
        parts.join("*")
    }

    /// One relation per line, `LHS = RHS`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.relations {
            out.push_str(&self.render_monomial(&r.lhs));
            out.push_str(" = ");
            out.push_str(&self.render_monomial(&r.rhs));
            out.push('\n');
        }
        out
    }
}

fn unit(len: usize, k: usize) -> Vec<i64> {
    let mut e = vec![0; len];
    e[k] = 1;
    e
}

fn monomial(len: usize, terms: &[(usize, u32)]) -> Vec<u32> {
    let mut m = vec![0; len];
    for &(i, e) in terms {
        m[i] += e;
    }
    m
}

/// `B(a, a) = k[x, A, B, C] / (AB - x^a C)` with `A = x^a u`, `B = x^a v`,
/// `C = x^a uv`, in coordinates `(r, s, t)`.
pub fn hypersurface_presentation(a: &[i64]) -> Result<Presentation> {
    if a.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(i) = a.iter().position(|&v| v < 1) {
        return Err(Error::NonPositiveEntry { index: i });
    }
    let n = a.len();
    let d = n + 2;
    let mut variables: Vec<Variable> = (0..n)
        .map(|i| Variable {
            name: format!("x{}", i + 1),
            exponent: unit(d, i + 2),
        })
        .collect();
    for (name, r, s) in [("A", 1, 0), ("B", 0, 1), ("C", 1, 1)] {
        let mut e = vec![r, s];
        e.extend_from_slice(a);
        variables.push(Variable {
            name: String::from(name),
            exponent: e,
        });
    }
    let len = variables.len();
    let lhs = monomial(len, &[(n, 1), (n + 1, 1)]);
    let mut rhs: Vec<u32> = a.iter().map(|&v| v as u32).collect();
    rhs.extend_from_slice(&[0, 0, 1]);
    Ok(Presentation {
        variables,
        relations: vec![Relation { lhs, rhs }],
    })
}

/// `M_{k,b}` and its 2×2 minors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterminantalPresentation {
    /// Entries as monomials over the presentation's variables.
    pub matrix: [Vec<Vec<u32>>; 2],
    pub presentation: Presentation,
}

impl DeterminantalPresentation {
    pub fn render_matrix(&self) -> String {
        let p = &self.presentation;
        let mut out = String::new();
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(|m| p.render_monomial(m)).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

fn determinantal(k: i64, b: i64, variables: Vec<Variable>) -> DeterminantalPresentation {
    let len = variables.len();
    let k = k as usize;
    let mut top = vec![monomial(len, &[(0, b as u32)]), monomial(len, &[(1, 1)])];
    top.extend((3..=k + 1).map(|i| monomial(len, &[(i, 1)])));
    let bottom: Vec<Vec<u32>> = core::iter::once(monomial(len, &[(2, 1)]))
        .chain((3..=k + 2).map(|i| monomial(len, &[(i, 1)])))
        .collect();
    let add = |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().zip(y).map(|(p, q)| p + q).collect() };
    let mut relations = Vec::new();
    for i in 0..=k {
        for j in (i + 1)..=k {
            relations.push(Relation {
                lhs: add(&top[i], &bottom[j]),
                rhs: add(&top[j], &bottom[i]),
            });
        }
    }
    DeterminantalPresentation {
        matrix: [top, bottom],
        presentation: Presentation {
            variables,
            relations,
        },
    }
}

/// `B(kb, b) = k[x_0, ..., x_{k+2}] / I_2(M_{k,b})` under `x_0 = x`,
/// `x_1 = x^{kb} u`, `x_2 = x^b v`, `x_{i+2} = x^{kb} u v^i`, in coordinates
/// `(r, s, t)`.
pub fn determinantal_presentation(k: i64, b: i64) -> Result<DeterminantalPresentation> {
    if k < 1 || b < 1 {
        return Err(Error::InvalidParameter("k and b must be positive"));
    }
    let a = k * b;
    let mut variables = vec![
        Variable {
            name: String::from("x0"),
            exponent: vec![0, 0, 1],
        },
        Variable {
            name: String::from("x1"),
            exponent: vec![1, 0, a],
        },
        Variable {
            name: String::from("x2"),
            exponent: vec![0, 1, b],
        },
    ];
    for i in 1..=k {
        variables.push(Variable {
            name: format!("x{}", i + 2),
            exponent: vec![1, i, a],
        });
    }
    Ok(determinantal(k, b, variables))
}

/// Generators `T, xT, xyT, yT, x^{-1}yT, ..., x^{-(a-1)}yT` of the rational
/// normal scroll, as exponent vectors in `(x, y, T)`.
pub fn scroll_generators(a: i64) -> Result<Vec<[i64; 3]>> {
    if a < 1 {
        return Err(Error::InvalidParameter("a must be positive"));
    }
    let mut gens = vec![[0, 0, 1], [1, 0, 1], [1, 1, 1], [0, 1, 1]];
    gens.extend((1..a).map(|j| [-j, 1, 1]));
    Ok(gens)
}

/// The minors of `M_{a,1}` over the scroll generators, under
/// `x_0 = xT`, `x_1 = xyT`, `x_2 = T`, `x_{i+2} = x^{-(i-1)} yT`.
pub fn scroll_presentation(a: i64) -> Result<DeterminantalPresentation> {
    let g = scroll_generators(a)?;
    let mut images = vec![g[1], g[2], g[0]];
    images.push(g[3]);
    images.extend_from_slice(&g[4..]);
    let variables = images
        .iter()
        .enumerate()
        .map(|(i, e)| Variable {
            name: format!("x{i}"),
            exponent: e.to_vec(),
        })
        .collect();
    Ok(determinantal(a, 1, variables))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypersurface() {
        let p = hypersurface_presentation(&[1]).unwrap();
        assert_eq!(p.render(), "A*B = x1*C\n");
        assert_eq!(p.verify(), Ok(()));
        let p = hypersurface_presentation(&[2, 3]).unwrap();
        assert_eq!(p.render(), "A*B = x1^2*x2^3*C\n");
        assert_eq!(p.relations[0].order(), 2);
        let p = hypersurface_presentation(&[4]).unwrap();
        let r = &p.relations[0];
        assert_eq!(p.image(&r.lhs), vec![1, 1, 8]);
        assert_eq!(p.image(&r.rhs), vec![1, 1, 8]);
    }

    #[test]
    fn determinantal_k1_is_the_hypersurface() {
        let d = determinantal_presentation(1, 3).unwrap();
        assert_eq!(d.render_matrix(), "x0^3 x1\nx2 x3\n");
        assert_eq!(d.presentation.render(), "x0^3*x3 = x1*x2\n");
        let h = hypersurface_presentation(&[3]).unwrap();
        let hr = &h.relations[0];
        assert_eq!(
            d.presentation.image(&d.presentation.relations[0].lhs),
            h.image(&hr.rhs)
        );
    }

    #[test]
    fn determinantal_minor_counts() {
        let d = determinantal_presentation(2, 1).unwrap();
        assert_eq!(d.presentation.relations.len(), 3);
        assert_eq!(d.presentation.verify(), Ok(()));
        let d = determinantal_presentation(3, 2).unwrap();
        assert_eq!(d.presentation.relations.len(), 6);
        assert_eq!(d.presentation.verify(), Ok(()));
        assert_eq!(d.render_matrix(), "x0^2 x1 x3 x4\nx2 x3 x4 x5\n");
    }

    #[test]
    fn scroll() {
        assert_eq!(
            scroll_generators(1).unwrap(),
            vec![[0, 0, 1], [1, 0, 1], [1, 1, 1], [0, 1, 1]]
        );
        let g = scroll_generators(2).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g[4], [-1, 1, 1]);
        assert_eq!(scroll_generators(3).unwrap().len(), 6);
        for a in 1..=6 {
            let p = scroll_presentation(a).unwrap();
            assert_eq!(p.presentation.verify(), Ok(()), "a={a}");
        }
    }

    #[test]
    fn broken_relation_is_caught() {
        let mut d = determinantal_presentation(2, 2).unwrap();
        d.presentation.relations[1].rhs[0] += 1;
        assert_eq!(d.presentation.verify(), Err(1));
    }
}
