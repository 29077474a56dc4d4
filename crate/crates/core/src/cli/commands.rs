use std::path::Path;

use crate::budget::Budget;
use crate::check::Check;
use crate::error::Result;
use crate::hankel::{c_lambda_table, dyson_check, table::NORMALIZATION};
use crate::io::{parse_hypermatrix, AnyHypermatrix};
use crate::quadrature::{close, default_order, denormalize, integrate_aomoto_numeric, integrate_selberg_numeric};
use crate::scalar::rational::{factorial, from_bigint, parse_rational, sign_pow, to_f64};
use crate::scalar::Rational;
use crate::selberg::{
    aomoto_closed_form, aomoto_via_jacobi, build_aomoto_tensor, build_selberg_tensor, selberg_closed_form_normalized,
    SelbergParams,
};
use crate::tensor::{det_wedge, hyperdeterminant, Algorithm};

use super::report::Report;
use super::verify::{run_suite, Grid};

fn param_report(command: &str, p: &SelbergParams) -> Report {
    let mut r = Report::new(command);
    r.param("a", &p.a).param("b", &p.b).param("k", p.k).param("n", p.n);
    r
}

fn numeric_check(name: &str, numeric: f64, exact: &Rational) -> Check {
    Check::flag(
        name,
        close(numeric, exact),
        format!("{numeric:e}"),
        format!("{:e}", to_f64(exact)),
    )
}

pub fn cmd_det(input: &Path, algorithm: Algorithm, budget: &Budget) -> Result<Report> {
    let text = std::fs::read_to_string(input)?;
    let m = parse_hypermatrix(&text)?;
    let mut r = Report::new("det");
    r.param("input", input.display()).param("algorithm", algorithm);
    match &m {
        AnyHypermatrix::Rational(m) => {
            r.param("order", m.order()).param("dim", m.dim());
            r.param("resolved", algorithm.resolve(m));
            r.result("det", hyperdeterminant(m, algorithm, budget)?);
        }
        AnyHypermatrix::Poly(m) => {
            r.param("order", m.order()).param("dim", m.dim());
            r.param("resolved", algorithm.resolve(m));
            r.result("det", hyperdeterminant(m, algorithm, budget)?);
        }
    }
    Ok(r)
}

pub fn cmd_selberg(p: &SelbergParams, check_tensor: bool, check_numeric: bool, budget: &Budget) -> Result<Report> {
    let mut r = param_report("selberg", p);
    let sel = selberg_closed_form_normalized(p);
    r.result("normalized", &sel);
    if p.a.is_integer() && p.b.is_integer() {
        r.result("integral", denormalize(p, &sel)?);
    }
    if check_tensor {
        let det = hyperdeterminant(&build_selberg_tensor(p), Algorithm::Auto, budget)?;
        r.result("tensor_det", &det);
        r.check(Check::compare("tensor determinant", &det, &sel));
    }
    if check_numeric {
        let m = default_order(p)?;
        let v = integrate_selberg_numeric(p, m)?;
        r.param("quadrature_order", m);
        r.check(numeric_check("quadrature", v, &denormalize(p, &sel)?));
    }
    Ok(r)
}

pub fn cmd_aomoto(
    p: &SelbergParams,
    at: Option<&str>,
    check_tensor: bool,
    check_numeric: bool,
    budget: &Budget,
) -> Result<Report> {
    let mut r = param_report("aomoto", p);
    let poly = aomoto_closed_form(p);
    r.result("polynomial", &poly);
    r.check(Check::compare("jacobi recurrence", &aomoto_via_jacobi(p), &poly));
    let y = at.map(parse_rational).transpose()?;
    if let Some(y) = &y {
        r.param("y", y);
        r.result("value", poly.eval(y));
    }
    if check_tensor {
        let det = det_wedge(&build_aomoto_tensor(p), budget)?;
        r.result("tensor_det", &det);
        r.check(Check::compare("tensor determinant", &det, &poly));
    }
    if check_numeric {
        let m = default_order(p)?;
        r.param("quadrature_order", m);
        let points: Vec<Rational> = match &y {
            Some(y) => vec![y.clone()],
            None => ["0", "1/4", "1/2", "1"]
                .iter()
                .map(|s| parse_rational(s).unwrap())
                .collect(),
        };
        for y in points {
            let v = integrate_aomoto_numeric(p, to_f64(&y), m)?;
            r.check(numeric_check(
                &format!("quadrature y={y}"),
                v,
                &denormalize(p, &poly.eval(&y))?,
            ));
        }
    }
    Ok(r)
}

pub fn cmd_dyson(n: usize, k: usize, budget: &Budget) -> Result<Report> {
    let mut r = Report::new("dyson");
    r.param("n", n).param("k", k);
    let d = dyson_check(n, k, budget)?;
    let n_fact = from_bigint(factorial(n as u64));
    r.result("constant_term", &d.direct);
    r.result("multinomial", &d.closed_form);
    r.result("top_coefficient", &d.top_coefficient);
    r.result("signed_relation", &d.from_top_coefficient);
    r.result(
        "relation_with_sign_(-1)^k",
        sign_pow(k as u64) * n_fact * &d.top_coefficient,
    );
    r.check(Check::compare("direct vs multinomial", &d.direct, &d.closed_form));
    r.check(Check::compare(
        "(-1)^(k n(n-1)/2) n! d",
        &d.from_top_coefficient,
        &d.direct,
    ));
    Ok(r)
}

pub fn cmd_expand(n: usize, k: usize, out: Option<&Path>, budget: &Budget) -> Result<Report> {
    let mut r = Report::new("expand");
    r.param("n", n).param("k", k);
    let table = c_lambda_table(n, k, budget)?;
    let json = serde_json::to_string(&table.to_json())?;
    r.result("terms", table.len());
    r.result("normalization", NORMALIZATION);
    r.result("top_coefficient", table.get(&vec![(k * (n - 1)) as u32; n]));
    match out {
        Some(path) => {
            std::fs::write(path, &json)?;
            r.param("out", path.display());
        }
        None => {
            r.result("table", json);
        }
    }
    Ok(r)
}

pub fn cmd_verify(grid_text: &str, random_cases: usize, seed: u64, budget: &Budget) -> Result<Report> {
    let grid = Grid::parse(grid_text)?;
    let mut r = Report::new("verify");
    r.param("grid", grid_text).param("points", grid.points.len());
    r.param("random_cases", random_cases).param("seed", seed);
    r.checks = run_suite(&grid, random_cases, seed, budget)?;
    r.result("passed", r.checks.len() - r.failures());
    r.result("failed", r.failures());
    Ok(r)
}
