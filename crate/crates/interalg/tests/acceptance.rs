//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use interalg::oracle::{lattice_count_region, monte_carlo_region};
use interalg::run::region_meshes;
use interalg_core::fan_hilbert::{hilbert_set, validate_and_order, ExponentPair};
use interalg_core::formulas::{
    f_signature_formula_kb, f_signature_formula_n1, hk_formula_a_eq_b, hk_formula_kb, hk_scroll,
    integral_a, integral_b, sym_poly,
};
use interalg_core::invariants::{
    class_group, f_signature_exact, hilbert_kunz_exact, hk_region, hs_simplices, invariant_report,
    RegionKind, ReportOptions, Selection,
};
use interalg_core::polyvol::simplex_volume;
use interalg_core::presentation::{determinantal_presentation, hypersurface_presentation};
use interalg_core::rational::{factorial, format_fraction, frac, int};
use interalg_core::Rational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pair(a: &[i64], b: &[i64]) -> Result<ExponentPair, String> {
    validate_and_order(a, b).map_err(|e| e.to_string())
}

fn points(v: &[interalg_core::fan_hilbert::HilbertPoint]) -> BTreeSet<(i64, i64)> {
    v.iter().map(|p| (p.r, p.s)).collect()
}

fn set(v: &[(i64, i64)]) -> BTreeSet<(i64, i64)> {
    v.iter().copied().collect()
}

fn report_all(a: &[i64], b: &[i64]) -> Result<interalg_core::invariants::InvariantReport, String> {
    invariant_report(a, b, &ReportOptions::default()).map_err(|e| e.to_string())
}

fn random_pairs(
    count: usize,
    max_n: usize,
    max_entry: i64,
    seed: u64,
) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_n);
            let a = (0..n).map(|_| rng.random_range(1..=max_entry)).collect();
            let b = (0..n).map(|_| rng.random_range(1..=max_entry)).collect();
            (a, b)
        })
        .collect()
}

fn c1_hilbert_set_3_2() -> Outcome {
    let p = pair(&[3], &[2])?;
    let h = hilbert_set(&p).map_err(|e| e.to_string())?;
    let expected = set(&[(1, 0), (0, 1), (2, 3), (1, 1), (1, 2)]);
    ensure(points(&h.merged) == expected, || {
        format!("H = {:?}", points(&h.merged))
    })?;
    let r = report_all(&[3], &[2])?;
    ensure(
        r.hilbert_samuel == Some(4) && r.embedding_dimension == 6,
        || format!("e = {:?}, nu = {}", r.hilbert_samuel, r.embedding_dimension),
    )?;
    Ok("H has 5 elements, e = 4, nu = 6".into())
}

fn c2_example_5_2() -> Outcome {
    // The ideals (x^5 y^2), (x^2 y^3) give b = (2,3); the listed segment
    // bases and e, nu belong to that vector.
    let p = pair(&[5, 2], &[2, 3])?;
    let h = hilbert_set(&p).map_err(|e| e.to_string())?;
    let expected = [
        set(&[(0, 1), (1, 3), (2, 5)]),
        set(&[(1, 1), (1, 2), (2, 5), (3, 2)]),
        set(&[(1, 0), (2, 1), (3, 2)]),
    ];
    for (i, exp) in expected.iter().enumerate() {
        ensure(points(&h.segments[i]) == *exp, || {
            format!("H_{i} = {:?}", points(&h.segments[i]))
        })?;
    }
    let sel = ReportOptions {
        select: Selection {
            hilbert_samuel: true,
            ..Selection::none()
        },
        ..Default::default()
    };
    let r = invariant_report(&[5, 2], &[2, 3], &sel).map_err(|e| e.to_string())?;
    ensure(
        r.hilbert_samuel == Some(7) && r.embedding_dimension == 10 && r.dimension == 4,
        || {
            format!(
                "e = {:?}, nu = {}, dim = {}",
                r.hilbert_samuel, r.embedding_dimension, r.dimension
            )
        },
    )?;
    // The literal vector b = (3,2) is a different ring.
    let lit = invariant_report(&[5, 2], &[3, 2], &sel).map_err(|e| e.to_string())?;
    ensure(
        lit.hilbert_samuel == Some(5) && lit.embedding_dimension == 8,
        || {
            format!(
                "b=(3,2): e = {:?}, nu = {}",
                lit.hilbert_samuel, lit.embedding_dimension
            )
        },
    )?;
    Ok(
        "b=(2,3): H_0,H_1,H_2 as listed, e = 7, nu = 10, dim = 4; literal b=(3,2): e = 5, nu = 8"
            .into(),
    )
}

fn c3_f_signature_3_2() -> Outcome {
    let p = pair(&[3], &[2])?;
    let closed = f_signature_formula_n1(3, 2).map_err(|e| e.to_string())?;
    let exact = f_signature_exact(&p).map_err(|e| e.to_string())?;
    ensure(closed == frac(11, 36) && exact == frac(11, 36), || {
        format!(
            "closed {}, volume {}",
            format_fraction(&closed),
            format_fraction(&exact)
        )
    })?;
    Ok("closed form and volume of P_sigma both 11/36".into())
}

fn c4_hilbert_kunz_3_2() -> Outcome {
    let p = pair(&[3], &[2])?;
    let exact = hilbert_kunz_exact(&p).map_err(|e| e.to_string())?;
    ensure(exact == frac(41, 18), || {
        format!("volume {}", format_fraction(&exact))
    })?;
    let par =
        interalg::parallel::volume_region_difference(&hk_region(&p).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
    ensure(par == exact, || {
        format!("parallel volume {}", format_fraction(&par))
    })?;
    let target = 41.0 / 18.0;
    let mc = monte_carlo_region(&p, RegionKind::HilbertKunz, 1_000_000, 42)
        .map_err(|e| e.to_string())?;
    ensure((mc.estimate - target).abs() <= 0.02, || {
        format!("monte carlo {mc:?}")
    })?;
    let lat = lattice_count_region(&p, RegionKind::HilbertKunz, 30).map_err(|e| e.to_string())?;
    let lat_f = lat.to_f64().unwrap();
    ensure((lat_f - target).abs() <= 0.1, || format!("lattice {lat_f}"))?;
    Ok(format!(
        "exact 41/18, monte carlo {:.5} (se {:.5}), lattice m=30 {:.5}",
        mc.estimate, mc.standard_error, lat_f
    ))
}

fn c5_a_eq_b_1() -> Outcome {
    let r = report_all(&[1], &[1])?;
    let s = r.f_signature.clone().unwrap_or_default();
    let e = r.hilbert_kunz.clone().unwrap_or_default();
    ensure(r.hilbert_samuel == Some(2), || {
        format!("e = {:?}", r.hilbert_samuel)
    })?;
    ensure(
        s == frac(2, 3) && e == frac(4, 3) && &s + &e == int(2),
        || {
            format!(
                "s = {}, e_HK = {}",
                format_fraction(&s),
                format_fraction(&e)
            )
        },
    )?;
    let meshes = region_meshes(&pair(&[1], &[1])?).map_err(|e| e.to_string())?;
    let vols: Vec<Rational> = meshes.iter().map(|(_, m)| m.signed_volume()).collect();
    ensure(vols == vec![frac(1, 3), frac(2, 3), frac(4, 3)], || {
        format!("mesh volumes {vols:?}")
    })?;
    Ok("e = 2, s = 2/3, e_HK = 4/3, s + e_HK = 2; mesh volumes 1/3, 2/3, 4/3".into())
}

fn c6_hk_kb_sweep() -> Outcome {
    let mut ok = 0;
    for k in 1..=4 {
        for b in 1..=4 {
            let exact = hilbert_kunz_exact(&pair(&[k * b], &[b])?).map_err(|e| e.to_string())?;
            let num = (k + 1) - 6 * k * b + 3 * k * (k + 3) * b * b;
            let closed = frac(num, 6 * k * b * b);
            ensure(exact == closed, || {
                format!(
                    "k={k} b={b}: volume {} vs {}",
                    format_fraction(&exact),
                    format_fraction(&closed)
                )
            })?;
            ok += 1;
        }
    }
    Ok(format!("{ok}/16 cases exact"))
}

fn c7_scroll_sweep() -> Outcome {
    for a in 1..=5 {
        let kb = hk_formula_kb(a, 1).map_err(|e| e.to_string())?;
        let scroll = hk_scroll(a).map_err(|e| e.to_string())?;
        let exact = hilbert_kunz_exact(&pair(&[a], &[1])?).map_err(|e| e.to_string())?;
        ensure(kb == scroll && scroll == exact, || {
            format!(
                "a={a}: {} / {} / {}",
                format_fraction(&kb),
                format_fraction(&scroll),
                format_fraction(&exact)
            )
        })?;
    }
    Ok("a = 1..5, three values equal".into())
}

fn c8_two_variable_diagonal() -> Outcome {
    let mut cases = 0;
    for b1 in 1..=3i64 {
        for b2 in 1..=b1 {
            let b = [b1, b2];
            let exact = f_signature_exact(&pair(&b, &b)?).map_err(|e| e.to_string())?;
            let closed = frac(6 * b1 * b1 - 2 * b1 - 2 * b1 * b2 + b2, 6 * b1 * b1 * b1);
            let ab = int(2) * (integral_a(&b).unwrap() + integral_b(&b).unwrap());
            let kb_form = f_signature_formula_kb(1, &b).map_err(|e| e.to_string())?;
            ensure(exact == closed && closed == ab && ab == kb_form, || {
                format!(
                    "b={b:?}: volume {} closed form {}",
                    format_fraction(&exact),
                    format_fraction(&closed)
                )
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} vectors, volume = two-variable closed form = 2(A+B)"))
}

fn sorted_vectors(max_len: usize, max_entry: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = (1..=max_entry).map(|x| vec![x]).collect();
    let mut frontier = out.clone();
    for _ in 1..max_len {
        let mut next = Vec::new();
        for v in &frontier {
            for x in 1..=*v.last().unwrap() {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn c9_identities() -> Outcome {
    let mut checked = 0;
    for b in sorted_vectors(4, 6).into_iter().filter(|b| b[0] >= 2) {
        let s = sym_poly(&b);
        let b1 = b[0];
        let mut lhs = Rational::zero();
        for i in 0..=b.len() {
            let mut den = int(i as i64 + 1);
            for _ in 0..=i {
                den *= int(b1);
            }
            let t = Rational::from_integer(s.get(i as isize)) / den;
            if i % 2 == 0 {
                lhs += t;
            } else {
                lhs -= t;
            }
        }
        let rhs = frac(b1, b1 - 1) * integral_a(&b).unwrap();
        ensure(lhs == rhs, || format!("sum identity fails for {b:?}"))?;
        checked += 1;
    }
    for k in 1..=6 {
        for b in 1..=6 {
            let x = f_signature_formula_kb(k, &[b]).map_err(|e| e.to_string())?;
            let y = f_signature_formula_n1(k * b, b).map_err(|e| e.to_string())?;
            ensure(x == y, || {
                format!(
                    "k={k} b={b}: {} vs {}",
                    format_fraction(&x),
                    format_fraction(&y)
                )
            })?;
        }
    }
    for b in 1..=8 {
        let x = hk_formula_kb(1, b).map_err(|e| e.to_string())?;
        let y = hk_formula_a_eq_b(&[b]).map_err(|e| e.to_string())?;
        ensure(x == y, || {
            format!("b={b}: {} vs {}", format_fraction(&x), format_fraction(&y))
        })?;
    }
    Ok(format!(
        "sum identity on {checked} vectors, 36 + 8 cross-regime cases"
    ))
}

fn c10_class_groups() -> Outcome {
    for (a, b) in random_pairs(10, 3, 5, 10) {
        let p = pair(&a, &b)?;
        let c = class_group(&p).map_err(|e| e.to_string())?;
        ensure(c.rank == a.len() && c.torsion_free(), || {
            format!("a={a:?} b={b:?}: {c:?}")
        })?;
    }
    Ok("10 random pairs: Cl = Z^n".into())
}

fn c11_properties() -> Outcome {
    for (a, b) in random_pairs(20, 3, 5, 11) {
        let p = pair(&a, &b)?;
        let h = hilbert_set(&p).map_err(|e| e.to_string())?;
        for w in h.merged.windows(2) {
            ensure(w[0].det(w[1]).abs() == 1, || {
                format!("a={a:?} b={b:?}: det({:?},{:?})", w[0], w[1])
            })?;
        }
        let simplices = hs_simplices(&p, &h).map_err(|e| e.to_string())?;
        let total: Rational = simplices.iter().map(|s| simplex_volume(s)).sum();
        let scaled = total * Rational::from_integer(factorial(a.len() + 2));
        ensure(scaled == int(h.h() as i64 - 1), || {
            format!("a={a:?} b={b:?}: (n+2)! sum = {scaled}")
        })?;
        let sel = ReportOptions {
            select: Selection {
                hilbert_samuel: true,
                ..Selection::none()
            },
            ..Default::default()
        };
        let r = invariant_report(&a, &b, &sel).map_err(|e| e.to_string())?;
        ensure(
            r.hilbert_samuel == Some(r.embedding_dimension - a.len() - 1),
            || {
                format!(
                    "a={a:?} b={b:?}: e = {:?}, nu = {}",
                    r.hilbert_samuel, r.embedding_dimension
                )
            },
        )?;
    }
    Ok("20 random pairs: unimodular chains, simplex sums, e = nu - n - 1".into())
}

fn c12_presentations() -> Outcome {
    let mut relations = 0;
    for k in 1..=5 {
        for b in 1..=4 {
            let d = determinantal_presentation(k, b).map_err(|e| e.to_string())?;
            ensure(d.presentation.verify().is_ok(), || {
                format!("k={k} b={b}: {:?}", d.presentation.verify())
            })?;
            relations += d.presentation.relations.len();
        }
    }
    for b in 1..=4 {
        let h = hypersurface_presentation(&[b]).map_err(|e| e.to_string())?;
        ensure(h.verify().is_ok(), || format!("hypersurface a={b}"))?;
        let d = determinantal_presentation(1, b)
            .map_err(|e| e.to_string())?
            .presentation;
        let hv: BTreeSet<Vec<i64>> = h.variables.iter().map(|v| v.exponent.clone()).collect();
        let dv: BTreeSet<Vec<i64>> = d.variables.iter().map(|v| v.exponent.clone()).collect();
        let (hr, dr) = (&h.relations[0], &d.relations[0]);
        let hs: BTreeSet<Vec<i64>> = [h.image(&hr.lhs), h.image(&hr.rhs)].into();
        let ds: BTreeSet<Vec<i64>> = [d.image(&dr.lhs), d.image(&dr.rhs)].into();
        ensure(hv == dv && hs == ds && d.relations.len() == 1, || {
            format!("k=1, b={b}: minor differs")
        })?;
        relations += 1;
    }
    for a in [vec![2, 1], vec![3, 3, 1]] {
        ensure(
            hypersurface_presentation(&a)
                .map_err(|e| e.to_string())?
                .verify()
                .is_ok(),
            || format!("hypersurface a={a:?}"),
        )?;
    }
    Ok(format!(
        "{relations} relations verified, k=1 minor equals the hypersurface relation"
    ))
}

fn c13_doubling() -> Outcome {
    let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    for k in 1..=4 {
        for b in 1..=4 {
            pairs.push((vec![k * b], vec![b]));
        }
    }
    for a in 1..=5 {
        pairs.push((vec![a], vec![1]));
    }
    for b1 in 1..=3 {
        for b2 in 1..=b1 {
            pairs.push((vec![b1, b2], vec![b1, b2]));
        }
    }
    pairs.extend(random_pairs(6, 2, 4, 13));
    for (a, b) in &pairs {
        let region = hk_region(&pair(a, b)?).map_err(|e| e.to_string())?;
        let m = region.bound();
        let v1 = region.volume_with_bound(m).map_err(|e| e.to_string())?;
        let v2 = region.volume_with_bound(2 * m).map_err(|e| e.to_string())?;
        let par =
            interalg::parallel::volume_with_bound(&region, 2 * m).map_err(|e| e.to_string())?;
        ensure(v1 == v2 && v2 == par, || {
            format!(
                "a={a:?} b={b:?}: {} / {} / {}",
                format_fraction(&v1),
                format_fraction(&v2),
                format_fraction(&par)
            )
        })?;
    }
    Ok(format!("{} regions unchanged at 2M", pairs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("Hilbert set of B(3,2)", c1_hilbert_set_3_2),
        ("example a=(5,2): segment bases, e, nu, dim", c2_example_5_2),
        (
            "s(B(3,2)) = 11/36 by formula and volume",
            c3_f_signature_3_2,
        ),
        ("e_HK(B(3,2)) = 41/18 with oracles", c4_hilbert_kunz_3_2),
        ("a=b=1 values and s + e_HK = 2", c5_a_eq_b_1),
        ("e_HK(kb,b) sweep k,b in 1..4", c6_hk_kb_sweep),
        ("rational normal scroll sweep a in 1..5", c7_scroll_sweep),
        ("n=2 diagonal F-signature", c8_two_variable_diagonal),
        ("formula identities", c9_identities),
        ("class group of random pairs", c10_class_groups),
        ("property suite on random pairs", c11_properties),
        ("presentation identities", c12_presentations),
        ("bounding-box doubling", c13_doubling),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
