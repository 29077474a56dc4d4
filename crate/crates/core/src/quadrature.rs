//! Tensor-product Gauss–Legendre integration on `(0,1)^n`.
//!
//! With integer `a`, `b` the Selberg and Aomoto integrands are polynomials,
//! so a rule of sufficient order integrates them exactly up to rounding.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::rational::{factorial, from_bigint, to_f64};
use crate::scalar::Rational;
use crate::selberg::SelbergParams;

pub const MAX_ORDER: usize = 64;
pub const MAX_GRID_POINTS: u64 = 10_000_000;
pub const REL_TOL: f64 = 1e-10;
pub const ABS_FLOOR: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        let mut sum = KahanSum::default();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum.add(w * f(*x));
        }
        sum.value()
    }
}

/// `m`-point Gauss–Legendre rule on `(0,1)`, nodes increasing.
pub fn gauss_legendre(m: usize) -> Result<QuadratureRule> {
    if m == 0 || m > MAX_ORDER {
        return Err(Error::InvalidParams(format!(
            "quadrature order must be in 1..={MAX_ORDER}, got {m}"
        )));
    }
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    let mf = m as f64;
    for i in 0..m.div_ceil(2) {
        // Chebyshev-like initial guess for the i-th largest root on (-1,1)
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (mf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(m, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(m, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map (-1,1) -> (0,1); root i is the i-th largest
        nodes[m - 1 - i] = (1.0 + x) / 2.0;
        nodes[i] = (1.0 - x) / 2.0;
        weights[m - 1 - i] = w / 2.0;
        weights[i] = w / 2.0;
    }
    Ok(QuadratureRule { nodes, weights })
}

fn legendre_with_derivative(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 2..=m {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    let d = m as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[derive(Default, Clone, Copy)]
struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    fn add(&mut self, v: f64) {
        // Neumaier's variant: also correct when |v| > |sum|
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn merge(mut self, other: KahanSum) -> KahanSum {
        self.add(other.sum);
        self.add(other.comp);
        self
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Per-variable polynomial degree of the Selberg integrand.
pub fn selberg_degree(a: u64, b: u64, k: usize, n: usize) -> usize {
    2 * k * (n - 1) + (a + b) as usize - 2
}

/// Smallest Gauss order exact for the given per-variable degree.
pub fn required_order(degree: usize) -> usize {
    degree / 2 + 1
}

fn integer_params(p: &SelbergParams) -> Result<(u64, u64)> {
    let conv = |x: &Rational, name: &str| {
        if x.is_integer() {
            u64::try_from(x.to_integer()).map_err(|_| Error::InvalidParams(format!("{name} too large")))
        } else {
            Err(Error::InvalidParams(format!(
                "numeric integration needs integer {name}, got {x}"
            )))
        }
    };
    Ok((conv(&p.a, "a")?, conv(&p.b, "b")?))
}

/// `∫_{(0,1)^n} f(x)` on the `m^n` product grid, in fixed chunk order.
fn integrate_grid(rule: &QuadratureRule, n: usize, f: impl Fn(&[f64]) -> f64 + Sync) -> Result<f64> {
    let m = rule.order();
    let points = (m as u64).checked_pow(n as u32).filter(|&p| p <= MAX_GRID_POINTS);
    let points = points.ok_or(Error::BudgetExceeded {
        what: "quadrature grid points",
        required: (m as u128).saturating_pow(n as u32),
        limit: MAX_GRID_POINTS as u128,
    })?;
    const CHUNK: u64 = 4096;
    let chunks = points.div_ceil(CHUNK);
    let partials: Vec<KahanSum> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = KahanSum::default();
            let mut x = vec![0.0; n];
            for flat in c * CHUNK..((c + 1) * CHUNK).min(points) {
                let mut rest = flat;
                let mut w = 1.0;
                for xi in x.iter_mut() {
                    let j = (rest % m as u64) as usize;
                    rest /= m as u64;
                    *xi = rule.nodes[j];
                    w *= rule.weights[j];
                }
                acc.add(w * f(&x));
            }
            acc
        })
        .collect();
    Ok(partials.into_iter().fold(KahanSum::default(), KahanSum::merge).value())
}

fn selberg_integrand(x: &[f64], a: u64, b: u64, k: usize) -> f64 {
    let mut v = 1.0;
    for (i, &xi) in x.iter().enumerate() {
        v *= xi.powi(a as i32 - 1) * (1.0 - xi).powi(b as i32 - 1);
        for &xj in &x[i + 1..] {
            v *= (xi - xj).powi(2 * k as i32);
        }
    }
    v
}

fn check_order(m: usize, degree: usize) -> Result<QuadratureRule> {
    if 2 * m < degree + 1 {
        return Err(Error::InsufficientQuadratureOrder { order: m, degree });
    }
    gauss_legendre(m)
}

/// `S_n(a,b;k)` by an `m`-point product rule; `a`, `b` must be positive integers.
pub fn integrate_selberg_numeric(p: &SelbergParams, m: usize) -> Result<f64> {
    let (a, b) = integer_params(p)?;
    let rule = check_order(m, selberg_degree(a, b, p.k, p.n))?;
    integrate_grid(&rule, p.n, |x| selberg_integrand(x, a, b, p.k))
}

/// `A_n(a,b;k)(y)` by an `m`-point product rule.
pub fn integrate_aomoto_numeric(p: &SelbergParams, y: f64, m: usize) -> Result<f64> {
    let (a, b) = integer_params(p)?;
    let rule = check_order(m, selberg_degree(a, b, p.k, p.n) + 1)?;
    integrate_grid(&rule, p.n, |x| {
        selberg_integrand(x, a, b, p.k) * x.iter().map(|&xi| y - xi).product::<f64>()
    })
}

/// `B(a,b) = (a-1)!(b-1)!/(a+b-1)!` for positive integers.
pub fn beta_integer(a: u64, b: u64) -> Rational {
    from_bigint(factorial(a - 1)) * from_bigint(factorial(b - 1)) / from_bigint(factorial(a + b - 1))
}

/// `n! B(a,b)^n · normalized`, the un-normalized integral value.
pub fn denormalize(p: &SelbergParams, normalized: &Rational) -> Result<Rational> {
    let (a, b) = integer_params(p)?;
    let beta = beta_integer(a, b);
    Ok(from_bigint(factorial(p.n as u64)) * num_traits::pow(beta, p.n) * normalized)
}

/// Minimum order that integrates the Aomoto integrand exactly.
pub fn default_order(p: &SelbergParams) -> Result<usize> {
    let (a, b) = integer_params(p)?;
    Ok(required_order(selberg_degree(a, b, p.k, p.n) + 1))
}

/// Relative tolerance with an absolute floor.
pub fn close(numeric: f64, exact: &Rational) -> bool {
    let e = to_f64(exact);
    (numeric - e).abs() <= (REL_TOL * e.abs()).max(ABS_FLOOR)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::{int, rat};
    use crate::selberg::{aomoto_closed_form, selberg_closed_form_normalized};

    fn params(a: i64, b: i64, k: usize, n: usize) -> SelbergParams {
        SelbergParams::new(int(a), int(b), k, n).unwrap()
    }

    #[test]
    fn small_rules() {
        let r = gauss_legendre(1).unwrap();
        assert_eq!(r.nodes(), &[0.5]);
        assert_eq!(r.weights(), &[1.0]);
        let r = gauss_legendre(2).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!((r.nodes()[0] - (1.0 - s) / 2.0).abs() < 1e-15);
        assert!((r.nodes()[1] - (1.0 + s) / 2.0).abs() < 1e-15);
        assert!((r.weights()[0] - 0.5).abs() < 1e-15);
        assert!((r.integrate(|x| x * x * x) - 0.25).abs() < 1e-15);
        assert!(gauss_legendre(0).is_err());
        assert!(gauss_legendre(65).is_err());
    }

    #[test]
    fn rule_invariants() {
        for m in 1..=MAX_ORDER {
            let r = gauss_legendre(m).unwrap();
            let total: f64 = r.weights().iter().sum();
            assert!((total - 1.0).abs() < 1e-14, "m={m} total={total}");
            assert!(r.nodes().windows(2).all(|w| w[0] < w[1]), "m={m}");
            assert!(r.nodes().iter().all(|&x| x > 0.0 && x < 1.0));
            // exact for x^{2m-1}
            let d = 2 * m - 1;
            let v = r.integrate(|x| x.powi(d as i32));
            assert!((v - 1.0 / (d as f64 + 1.0)).abs() < 1e-13, "m={m}");
        }
    }

    #[test]
    fn selberg_examples() {
        let v = integrate_selberg_numeric(&params(1, 1, 1, 2), 2).unwrap();
        assert!((v - 1.0 / 6.0).abs() < 1e-12);
        let v = integrate_selberg_numeric(&params(2, 1, 1, 1), 1).unwrap();
        assert!((v - 0.5).abs() < 1e-12);
        let v = integrate_selberg_numeric(&params(1, 1, 2, 2), 3).unwrap();
        assert!((v - 1.0 / 15.0).abs() < 1e-12);
        assert!(matches!(
            integrate_selberg_numeric(&params(1, 1, 2, 2), 2),
            Err(Error::InsufficientQuadratureOrder { .. })
        ));
        assert!(integrate_selberg_numeric(&SelbergParams::new(rat(1, 2), int(1), 1, 1).unwrap(), 4).is_err());
    }

    #[test]
    fn aomoto_examples() {
        let p = params(1, 1, 1, 1);
        assert!(integrate_aomoto_numeric(&p, 0.5, 1).unwrap().abs() < 1e-12);
        assert!((integrate_aomoto_numeric(&p, 1.0, 1).unwrap() - 0.5).abs() < 1e-12);
        let p = params(1, 1, 1, 2);
        let exact = denormalize(&p, &aomoto_closed_form(&p).coeff(0)).unwrap();
        assert!(close(
            integrate_aomoto_numeric(&p, 0.0, default_order(&p).unwrap()).unwrap(),
            &exact
        ));
    }

    #[test]
    fn against_closed_form_and_symmetry() {
        for (a, b, k, n) in [(2, 3, 2, 3), (3, 1, 1, 3), (1, 2, 2, 2)] {
            let p = params(a, b, k, n);
            let m = default_order(&p).unwrap();
            let exact = denormalize(&p, &selberg_closed_form_normalized(&p)).unwrap();
            let v = integrate_selberg_numeric(&p, m).unwrap();
            assert!(close(v, &exact), "{p}: {v} vs {exact}");
            let w = integrate_selberg_numeric(&p.swapped(), m).unwrap();
            assert!((v - w).abs() <= 1e-10 * v.abs());
        }
    }
}
