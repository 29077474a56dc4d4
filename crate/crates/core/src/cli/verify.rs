//! Parameter grids and the identity suite run by `hyperdet verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::budget::Budget;
use crate::check::Check;
use crate::error::{Error, Result};
use crate::hankel::{dyson_check, hankel_det_fast, top_coefficient, MomentSequence};
use crate::scalar::rational::{int, parse_rational, rat, sign_pow};
use crate::scalar::Rational;
use crate::selberg::{
    aomoto_closed_form, aomoto_via_jacobi, build_aomoto_tensor, build_selberg_tensor, dyson_ending_check,
    pascal_sign_matrix, selberg_closed_form_normalized, verify_aomoto_reflection, verify_beta_contiguity,
    verify_selberg_symmetry, verify_symmetric_form, SelbergParams,
};
use crate::tensor::{
    det_classical, det_permutation_oracle, det_wedge, expand_first_index, gl_action, minor_summation, Hypermatrix,
};

#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub points: Vec<SelbergParams>,
}

fn cartesian(a: &[Rational], b: &[Rational], k: &[usize], n: &[usize]) -> Result<Vec<SelbergParams>> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            for &kk in k {
                for &nn in n {
                    out.push(SelbergParams::new(x.clone(), y.clone(), kk, nn)?);
                }
            }
        }
    }
    Ok(out)
}

impl Grid {
    /// `(a,b) ∈ {1,2,3}²`, `k ∈ {1,2}`, `n ∈ {1,2,3}`, then `k=1, n=4`, then
    /// `a=1/2, b=3/2, k=1, n ≤ 3`.
    pub fn default_grid() -> Self {
        let ints: Vec<Rational> = (1..=3).map(int).collect();
        let mut points = cartesian(&ints, &ints, &[1, 2], &[1, 2, 3]).unwrap();
        points.extend(cartesian(&ints, &ints, &[1], &[4]).unwrap());
        points.extend(cartesian(&[rat(1, 2)], &[rat(3, 2)], &[1], &[1, 2, 3]).unwrap());
        Grid { points }
    }

    pub fn quick() -> Self {
        let ints: Vec<Rational> = (1..=2).map(int).collect();
        Grid {
            points: cartesian(&ints, &ints, &[1, 2], &[1, 2]).unwrap(),
        }
    }

    /// `default`, `quick`, or `a=1,2;b=3/2;k=1;n=1,2,3`.
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "default" => return Ok(Grid::default_grid()),
            "quick" => return Ok(Grid::quick()),
            _ => {}
        }
        let (mut a, mut b, mut k, mut n) = (None, None, None, None);
        for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, values) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("grid component {part:?} is not key=values")))?;
            let values: Vec<&str> = values.split(',').map(str::trim).collect();
            let ints = || -> Result<Vec<usize>> {
                values
                    .iter()
                    .map(|v| {
                        v.parse()
                            .map_err(|_| Error::Parse(format!("{key}: {v:?} is not an integer")))
                    })
                    .collect()
            };
            let rats = || -> Result<Vec<Rational>> { values.iter().map(|v| parse_rational(v)).collect() };
            match key.trim() {
                "a" => a = Some(rats()?),
                "b" => b = Some(rats()?),
                "k" => k = Some(ints()?),
                "n" => n = Some(ints()?),
                other => return Err(Error::Parse(format!("unknown grid key {other:?}"))),
            }
        }
        let missing = |name: &str| Error::Parse(format!("grid is missing {name}"));
        Ok(Grid {
            points: cartesian(
                &a.ok_or_else(|| missing("a"))?,
                &b.ok_or_else(|| missing("b"))?,
                &k.ok_or_else(|| missing("k"))?,
                &n.ok_or_else(|| missing("n"))?,
            )?,
        })
    }
}

fn prefixed(label: &str, mut c: Check) -> Check {
    c.name = format!("{label}: {}", c.name);
    c
}

/// Every identity at one parameter point.
pub fn point_checks(p: &SelbergParams, budget: &Budget) -> Result<Vec<Check>> {
    let label = p.to_string();
    let mut out = Vec::new();
    let sel = selberg_closed_form_normalized(p);
    out.push(Check::compare(
        "selberg",
        &det_wedge(&build_selberg_tensor(p), budget)?,
        &sel,
    ));
    let aomoto = aomoto_closed_form(p);
    out.push(Check::compare(
        "aomoto",
        &det_wedge(&build_aomoto_tensor(p), budget)?,
        &aomoto,
    ));
    out.push(Check::compare(
        "aomoto jacobi recurrence",
        &aomoto_via_jacobi(p),
        &aomoto,
    ));
    out.push(Check::compare(
        "aomoto leading coefficient",
        &aomoto.leading_coeff(),
        &sel,
    ));
    out.extend(verify_symmetric_form(p, budget)?);
    out.push(verify_selberg_symmetry(p, budget)?);
    out.extend(verify_aomoto_reflection(p, budget)?);
    for m in 0..=6 {
        out.push(verify_beta_contiguity(p, m));
    }
    out.extend(dyson_ending_check(p, budget)?);
    Ok(out.into_iter().map(|c| prefixed(&label, c)).collect())
}

/// Dyson constant term and truncation identity for one `(n, k)`.
pub fn dyson_checks(n: usize, k: usize, budget: &Budget) -> Result<Vec<Check>> {
    let label = format!("n={n} k={k}");
    let d = dyson_check(n, k, budget)?;
    let top = top_coefficient(n, k, budget)?;
    let last = k * (n - 1);
    let moments = MomentSequence::from_fn(2 * last + 1, |j| rat(1, j as i64 + 1));
    let t = rat(-7, 3);
    let truncated = hankel_det_fast(&moments.truncated(last, t.clone()), n, k, budget)?;
    let checks = vec![
        Check::compare("dyson direct vs multinomial", &d.direct, &d.closed_form),
        Check::compare("dyson vs top coefficient", &d.direct, &d.from_top_coefficient),
        Check::compare("truncation", &truncated, &(top * num_traits::pow(t, n))),
    ];
    Ok(checks.into_iter().map(|c| prefixed(&label, c)).collect())
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

pub fn random_hypermatrix(rng: &mut impl Rng, order: usize, dim: usize) -> Hypermatrix<Rational> {
    Hypermatrix::from_fn(order, dim, |_| random_rational(rng))
}

pub const RANDOM_SHAPES: [(usize, usize); 4] = [(2, 2), (2, 3), (4, 2), (4, 3)];

/// Algorithm agreement, minor summation and invariance on seeded random inputs.
pub fn random_checks(cases: usize, seed: u64, budget: &Budget) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for case in 0..cases {
        let (d, n) = RANDOM_SHAPES[case % RANDOM_SHAPES.len()];
        let m = random_hypermatrix(&mut rng, d, n);
        let label = format!("random #{case} d={d} n={n}");

        let oracle = det_permutation_oracle(&m, budget)?;
        let wedge = det_wedge(&m, budget)?;
        let expand = expand_first_index(&m, budget)?;
        out.push(Check::compare(format!("{label}: wedge vs oracle"), &wedge, &oracle));
        out.push(Check::compare(format!("{label}: expand vs oracle"), &expand, &oracle));

        let other = random_hypermatrix(&mut rng, d, n);
        let sum = det_wedge(&m.try_add(&other)?, budget)?;
        out.push(Check::compare(
            format!("{label}: minor summation"),
            &minor_summation(&m, &other, budget)?,
            &sum,
        ));

        let g_list: Vec<_> = (0..d).map(|_| random_hypermatrix(&mut rng, 2, n)).collect();
        let moved = det_wedge(&gl_action(&g_list, &m)?, budget)?;
        let mut expected = wedge.clone();
        for g in &g_list {
            expected *= det_classical(g)?;
        }
        out.push(Check::compare(format!("{label}: invariance"), &moved, &expected));
    }
    Ok(out)
}

pub fn pascal_checks() -> Result<Vec<Check>> {
    (1..=8usize)
        .map(|n| {
            let det = det_classical(&pascal_sign_matrix(n))?;
            Ok(Check::compare(
                format!("pascal det n={n}"),
                &det,
                &sign_pow((n * (n - 1) / 2) as u64),
            ))
        })
        .collect()
}

/// Runs the whole suite; points are processed in parallel, results kept in
/// grid order.
pub fn run_suite(grid: &Grid, random_cases: usize, seed: u64, budget: &Budget) -> Result<Vec<Check>> {
    let per_point: Vec<Result<Vec<Check>>> = grid.points.par_iter().map(|p| point_checks(p, budget)).collect();
    let mut out = Vec::new();
    for r in per_point {
        out.extend(r?);
    }
    let mut nk: Vec<(usize, usize)> = grid.points.iter().map(|p| (p.n, p.k)).collect();
    nk.sort_unstable();
    nk.dedup();
    for (n, k) in nk {
        out.extend(dyson_checks(n, k, budget)?);
    }
    out.extend(pascal_checks()?);
    out.extend(random_checks(random_cases, seed, budget)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        assert_eq!(Grid::parse("default").unwrap().points.len(), 54 + 9 + 3);
        assert_eq!(Grid::parse("quick").unwrap().points.len(), 16);
        let g = Grid::parse("a=1/2,1;b=3/2;k=1;n=1,2,3").unwrap();
        assert_eq!(g.points.len(), 6);
        assert_eq!(g.points[0].a, rat(1, 2));
        assert!(Grid::parse("a=1;b=1;k=1").is_err());
        assert!(Grid::parse("a=0;b=1;k=1;n=1").is_err());
        assert!(Grid::parse("a=1;b=1;k=x;n=1").is_err());
    }

    #[test]
    fn quick_suite_passes() {
        let checks = run_suite(&Grid::quick(), 8, 7, &Budget::default()).unwrap();
        let failed: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }
}
