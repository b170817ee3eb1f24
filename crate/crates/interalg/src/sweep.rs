//! Parameter sweeps over scalar exponents (`n = 1`), rendered as CSV.
//!
//! A spec is a comma-separated list of clauses over the names `k`, `a`, `b`:
//! `name=lo..hi`, `name=value`, or `name=other` to tie two names together.
//! With `k` present, `a = k b`. Examples: `k=1..3,b=1..3`, `a=b,a=1..4`,
//! `a=1..4,b=1`.

use std::fmt::Write as _;

use interalg_core::invariants::{invariant_report, ReportOptions};

use crate::config::InvariantSet;
use crate::error::{CliError, Result};
use crate::report::fraction;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Binding {
    Range(i64, i64),
    Alias(char),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    bindings: Vec<(char, Binding)>,
}

fn parse_name(s: &str) -> Result<char> {
    match s.trim() {
        "k" => Ok('k'),
        "a" => Ok('a'),
        "b" => Ok('b'),
        other => Err(CliError::Parse(format!(
            "unknown sweep variable {other:?} (k, a, b)"
        ))),
    }
}

impl SweepSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let mut bindings: Vec<(char, Binding)> = Vec::new();
        let mut ties: Vec<(char, char)> = Vec::new();
        for clause in s.split(',').map(str::trim).filter(|c| !c.is_empty()) {
            let (name, value) = clause
                .split_once('=')
                .ok_or_else(|| CliError::Parse(format!("sweep clause {clause:?} needs '='")))?;
            let name = parse_name(name)?;
            let value = value.trim();
            let int = |t: &str| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::Parse(format!("bad sweep bound {t:?}")))
            };
            let range = if let Some((lo, hi)) = value.split_once("..") {
                let (lo, hi) = (int(lo)?, int(hi)?);
                if lo > hi {
                    return Err(CliError::Parse(format!("empty sweep range {value}")));
                }
                (lo, hi)
            } else if let Ok(v) = value.parse::<i64>() {
                (v, v)
            } else {
                ties.push((name, parse_name(value)?));
                continue;
            };
            if bindings.iter().any(|(n, _)| *n == name) {
                return Err(CliError::Parse(format!(
                    "sweep variable {name} bound twice"
                )));
            }
            bindings.push((name, Binding::Range(range.0, range.1)));
        }
        // A tie `x=y` makes whichever side has no range follow the other.
        for (x, y) in ties {
            let ranged = |c: char| bindings.iter().any(|(n, _)| *n == c);
            let (follower, leader) = match (ranged(x), ranged(y)) {
                (false, true) => (x, y),
                (true, false) => (y, x),
                _ => {
                    return Err(CliError::Parse(format!(
                        "{x}={y} needs exactly one side with a range"
                    )))
                }
            };
            bindings.push((follower, Binding::Alias(leader)));
        }
        let spec = SweepSpec { bindings };
        spec.check()?;
        Ok(spec)
    }

    fn get(&self, name: char) -> Option<&Binding> {
        self.bindings
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, b)| b)
    }

    fn check(&self) -> Result<()> {
        let mut names: Vec<char> = self.bindings.iter().map(|(n, _)| *n).collect();
        names.sort_unstable();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(CliError::Parse(String::from("sweep variable bound twice")));
        }
        let has = |c| self.get(c).is_some();
        match (has('k'), has('a'), has('b')) {
            (true, false, true) | (false, true, true) => Ok(()),
            (true, true, _) => Err(CliError::Parse(String::from("give k and b, not k and a"))),
            _ => Err(CliError::Parse(String::from(
                "sweep needs b and one of k or a",
            ))),
        }
    }

    /// Independent variables, in the order given.
    fn free(&self) -> Vec<(char, i64, i64)> {
        self.bindings
            .iter()
            .filter_map(|(n, b)| match b {
                Binding::Range(lo, hi) => Some((*n, *lo, *hi)),
                Binding::Alias(_) => None,
            })
            .collect()
    }

    /// Parameter tuples `(k, a, b)` in row order; the first variable varies
    /// slowest.
    pub fn tuples(&self) -> Vec<(Option<i64>, i64, i64)> {
        let free = self.free();
        let mut out = Vec::new();
        let mut cur: Vec<i64> = free.iter().map(|f| f.1).collect();
        if free.is_empty() {
            return out;
        }
        loop {
            let value = |name: char| -> Option<i64> {
                let name = match self.get(name)? {
                    Binding::Alias(t) => *t,
                    Binding::Range(..) => name,
                };
                free.iter().position(|f| f.0 == name).map(|i| cur[i])
            };
            let b = value('b').expect("b is bound");
            let k = value('k');
            let a = k.map_or_else(|| value('a').expect("a is bound"), |k| k * b);
            out.push((k, a, b));
            let mut i = free.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < free[i].2 {
                    cur[i] += 1;
                    break;
                }
                cur[i] = free[i].1;
            }
        }
    }

    pub fn has_k(&self) -> bool {
        self.get('k').is_some()
    }
}

/// One CSV row per tuple with exact values as `p/q`.
pub fn sweep_csv(
    spec: &SweepSpec,
    invariants: InvariantSet,
    options: ReportOptions,
) -> Result<String> {
    let sel = invariants.selection;
    let mut header: Vec<&str> = Vec::new();
    if spec.has_k() {
        header.push("k");
    }
    header.extend(["a", "b"]);
    if invariants.embedding_dimension {
        header.push("embeddingDimension");
    }
    if sel.hilbert_samuel {
        header.push("hilbertSamuel");
    }
    if sel.class_group {
        header.push("classGroupRank");
    }
    if sel.f_signature {
        header.push("fSignature");
    }
    if sel.hilbert_kunz {
        header.push("hilbertKunz");
    }
    let mut out = header.join(",");
    out.push('\n');
    let options = ReportOptions {
        select: sel,
        ..options
    };
    for (k, a, b) in spec.tuples() {
        let r = invariant_report(&[a], &[b], &options)?;
        let mut row: Vec<String> = Vec::new();
        if let Some(k) = k {
            row.push(k.to_string());
        }
        row.push(a.to_string());
        row.push(b.to_string());
        if invariants.embedding_dimension {
            row.push(r.embedding_dimension.to_string());
        }
        if let Some(e) = r.hilbert_samuel {
            row.push(e.to_string());
        }
        if let Some(c) = &r.class_group {
            row.push(c.rank.to_string());
        }
        if let Some(s) = &r.f_signature {
            row.push(fraction(s));
        }
        if let Some(e) = &r.hilbert_kunz {
            row.push(fraction(e));
        }
        let _ = writeln!(out, "{}", row.join(","));
    }
    Ok(out)
}
