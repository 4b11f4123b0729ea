//! Symmetry factors of 4-regular vacuum graphs, read off the Martin
//! polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::polynomial::{circuit_partition_polynomial, martin_polynomial};
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

fn require_quartic(g: &Multigraph) -> Result<()> {
    match g.regular_degree() {
        Some(4) => Ok(()),
        Some(d) => Err(Error::WrongDegree { expected: 4, found: d }),
        None => Err(Error::NotRegular),
    }
}

fn power_of_three(e: usize) -> BigRational {
    BigRational::from_integer(num_traits::pow(BigInt::from(3), e))
}

/// `S_G(N) = 3^(-n) J(G, N)` for a 4-regular graph `G`.
pub fn symmetry_factor(g: &Multigraph, n_components: &BigRational) -> Result<BigRational> {
    require_quartic(g)?;
    let j = circuit_partition_polynomial(g)?;
    Ok(j.eval(n_components) / power_of_three(g.vertex_count()))
}

/// Symmetry factor of `G \ v`: `m(G, N + 2) / (3^(n-1) (N + 2))`, with the
/// division by `N + 2` carried out on the polynomial so that `N = -2` is
/// allowed.
pub fn decompleted_symmetry_factor(g: &Multigraph, n_components: &BigRational) -> Result<BigRational> {
    require_quartic(g)?;
    let m = martin_polynomial(g)?;
    let reduced = m
        .div_x()
        .ok_or_else(|| Error::Divisibility("Martin polynomial has a constant term".into()))?;
    let x = n_components + BigRational::from_integer(2.into());
    Ok(reduced.eval(&x) / power_of_three(g.vertex_count() - 1))
}

/// True when `S(1) = 1`, the normalisation every vacuum graph satisfies.
pub fn symmetry_factor_is_normalised(g: &Multigraph) -> Result<bool> {
    Ok(symmetry_factor(g, &BigRational::one())? == BigRational::one()
        && !decompleted_symmetry_factor(g, &BigRational::one())?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::martin::martin_invariant;
    use crate::multigraph::families;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn k5_at_minus_two() {
        let s = decompleted_symmetry_factor(&families::complete(5), &q(-2, 1)).unwrap();
        assert_eq!(s, q(4, 9));
    }

    #[test]
    fn minus_two_gives_martin_invariant() {
        for g in [families::complete(5), families::octahedron(), families::circulant(7, &[1, 2])] {
            let n = g.vertex_count();
            let s = decompleted_symmetry_factor(&g, &q(-2, 1)).unwrap();
            let m = martin_invariant(&g).unwrap();
            let expect = m * q(2, 1) / BigRational::from_integer(num_traits::pow(BigInt::from(3), n - 2));
            assert_eq!(s, expect);
        }
    }

    #[test]
    fn normalised_at_one() {
        assert!(symmetry_factor_is_normalised(&families::octahedron()).unwrap());
        assert!(symmetry_factor_is_normalised(&families::complete(5)).unwrap());
    }

    #[test]
    fn rejects_other_degrees() {
        let g = families::complete(7);
        assert_eq!(symmetry_factor(&g, &q(1, 1)), Err(Error::WrongDegree { expected: 4, found: 6 }));
    }
}
