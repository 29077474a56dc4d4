use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::scalar::rational::{factorial, from_bigint};
use crate::scalar::Scalar;
use crate::tensor::action::split_sign_masks;
use crate::tensor::wedge::wedge_levels;
use crate::tensor::Hypermatrix;

/// `Det(M + N)` as `Σ_r Σ_{(I,J)} ε(I,J) Det(M[I]) Det(N[J])`, with `I` running
/// over `d`-tuples of `r`-subsets and `J` their complements.
///
/// The minors `Det(M[I])` for all `I` of a given size are read off one level
/// of the wedge power of `M` (divided by `r!`), so each side is computed once.
pub fn minor_summation<S: Scalar>(m: &Hypermatrix<S>, n: &Hypermatrix<S>, budget: &Budget) -> Result<S> {
    if m.order() != n.order() || m.dim() != n.dim() {
        return Err(Error::ShapeMismatch(format!(
            "order {}/dim {} vs order {}/dim {}",
            m.order(),
            m.dim(),
            n.order(),
            n.dim()
        )));
    }
    let dim = m.dim();
    let full = (1u32 << dim) - 1;
    let levels_m = wedge_levels(m, budget)?;
    let levels_n = wedge_levels(n, budget)?;

    let mut total = S::zero();
    for r in 0..=dim {
        let inv = from_bigint(factorial(r as u64) * factorial((dim - r) as u64)).recip();
        let lm = &levels_m[r];
        let ln = &levels_n[dim - r];
        let mut level_sum = S::zero();
        for (key, coeff) in lm.sorted_terms() {
            let masks = lm.unpack(key);
            let complement: Vec<u32> = masks.iter().map(|&x| !x & full).collect();
            let other = ln.coefficient(&complement);
            if other.is_zero() {
                continue;
            }
            let term = coeff.mul_ref(&other);
            if split_sign_masks(&masks, &complement) {
                level_sum.sub_assign_ref(&term);
            } else {
                level_sum.add_assign_ref(&term);
            }
        }
        total.add_assign_ref(&level_sum.scale(&inv));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;
    use crate::scalar::Rational;
    use crate::tensor::action::{subtensor, SubsetFamily};
    use crate::tensor::{det_permutation_oracle, det_wedge};

    fn sample(seed: i64) -> Hypermatrix<Rational> {
        Hypermatrix::from_fn(4, 2, |ix| {
            let v: i64 = ix
                .iter()
                .enumerate()
                .map(|(t, &i)| (seed + t as i64 * 3) * i as i64)
                .sum();
            rat(v % 7 - 3, 1 + (seed + ix[0] as i64) % 3)
        })
    }

    #[test]
    fn zero_partner() {
        let m = sample(5);
        let z = Hypermatrix::zeros(4, 2);
        let b = Budget::default();
        let det_m = det_wedge(&m, &b).unwrap();
        assert_eq!(minor_summation(&m, &z, &b).unwrap(), det_m);
        assert_eq!(minor_summation(&z, &m, &b).unwrap(), det_m);
    }

    #[test]
    fn equals_det_of_sum() {
        let b = Budget::default();
        let (m, n) = (sample(2), sample(11));
        let sum = m.try_add(&n).unwrap();
        assert_eq!(
            minor_summation(&m, &n, &b).unwrap(),
            det_permutation_oracle(&sum, &b).unwrap()
        );
    }

    #[test]
    fn wedge_levels_hold_minors() {
        let m = Hypermatrix::from_fn(4, 3, |ix| {
            rat(
                (ix[0] * 5 + ix[1] * 2 + ix[2] * 7 + ix[3] * 11) as i64 % 9 - 4,
                1 + ix[2] as i64,
            )
        });
        let b = Budget::default();
        let levels = wedge_levels(&m, &b).unwrap();
        for (key, coeff) in levels[2].sorted_terms() {
            let masks = levels[2].unpack(key);
            let fam = SubsetFamily::from_masks(&masks, 3);
            let minor = det_permutation_oracle(&subtensor(&m, &fam).unwrap(), &b).unwrap();
            assert_eq!(coeff.clone(), minor * rat(2, 1));
        }
    }
}
