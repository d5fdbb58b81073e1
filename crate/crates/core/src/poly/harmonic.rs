use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{vf_apply_poly, Monomial, NamedField, Poly, Var};
use crate::error::{Error, Result};
use crate::linalg::solve_rational;
use crate::scalar::{Rational, Scalar};

fn check_indices(m: u32, l: u32, k: u32) -> Result<()> {
    if l > m || k > m + 1 {
        return Err(Error::Range(format!("(m, l, k) = ({m}, {l}, {k})")));
    }
    Ok(())
}

/// `v^k_{(l,m−l)} = e₋^k z1^l z2^{m−l}`; `k = m + 1` gives zero.
pub fn v_poly(m: u32, l: u32, k: u32) -> Result<Poly> {
    check_indices(m, l, k)?;
    let mut p = Poly::monomial(l, m - l, 0, 0);
    for _ in 0..k {
        p = vf_apply_poly(NamedField::EMinus, &p);
    }
    Ok(p)
}

/// `w^k_{(l,m−l)} = ê₋^k z2^l z1~^{m−l}`; `k = m + 1` gives zero.
pub fn w_poly(m: u32, l: u32, k: u32) -> Result<Poly> {
    check_indices(m, l, k)?;
    let mut p = Poly::monomial(0, l, m - l, 0);
    for _ in 0..k {
        p = vf_apply_poly(NamedField::EHatMinus, &p);
    }
    Ok(p)
}

/// `Δ = ∂²/∂z1∂z1~ + ∂²/∂z2∂z2~`.
pub fn laplacian(p: &Poly) -> Poly {
    &p.diff(Var::Z1).diff(Var::Zb1) + &p.diff(Var::Z2).diff(Var::Zb2)
}

/// Splits a bihomogeneous `p` as `Σ_j |z|^{2j} h_j` with every `h_j` harmonic.
pub fn harmonic_decompose(p: &Poly) -> Result<Vec<Poly>> {
    if p.is_zero() {
        return Ok(vec![Poly::zero()]);
    }
    let (hp, hq) = p.bidegree().ok_or(Error::NotHomogeneous)?;
    let top = hp.min(hq);

    // Unknowns: coefficients of h_j on the monomials of bidegree (hp−j, hq−j).
    let mut unknowns: Vec<(u32, Monomial)> = Vec::new();
    for j in 0..=top {
        unknowns.extend(Monomial::of_bidegree(hp - j, hq - j).map(|m| (j, m)));
    }
    let n = unknowns.len();
    let norm = Poly::norm_sqr();

    // Reconstruction rows, one per monomial of bidegree (hp, hq).
    let mut recon: BTreeMap<Monomial, Vec<Rational>> =
        Monomial::of_bidegree(hp, hq).map(|m| (m, vec![Rational::zero(); n])).collect();
    // Harmonicity rows, one per (j, monomial of bidegree (hp−j−1, hq−j−1)).
    let mut harm: BTreeMap<(u32, Monomial), Vec<Rational>> = BTreeMap::new();

    for (col, (j, m)) in unknowns.iter().enumerate() {
        let basis = Poly::term(*m, Scalar::one());
        for (mm, c) in (&basis * &norm.pow(*j)).terms() {
            recon.get_mut(mm).expect("bidegree matches")[col] = c.as_rational().expect("rational");
        }
        for (mm, c) in laplacian(&basis).terms() {
            harm.entry((*j, *mm)).or_insert_with(|| vec![Rational::zero(); n])[col] =
                c.as_rational().expect("rational");
        }
    }

    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (m, row) in recon {
        rows.push(row);
        rhs.push(p.coeff(&m));
    }
    for (_, row) in harm {
        rows.push(row);
        rhs.push(Scalar::zero());
    }
    let sol = solve_rational(&rows, &rhs, n).ok_or(Error::NotHomogeneous)?;

    let mut out = vec![Poly::zero(); top as usize + 1];
    for ((j, m), c) in unknowns.into_iter().zip(sol) {
        out[j as usize].add_term(m, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn z(a: u32, b: u32, c: u32, d: u32) -> Poly {
        Poly::monomial(a, b, c, d)
    }

    #[test]
    fn small_harmonics() {
        assert_eq!(v_poly(1, 0, 0).unwrap(), z(0, 1, 0, 0));
        assert_eq!(v_poly(2, 1, 1).unwrap(), &z(1, 0, 1, 0) - &z(0, 1, 0, 1));
        assert!(v_poly(2, 3, 0).is_err());
        assert!(v_poly(1, 0, 2).unwrap().is_zero());
        assert!(v_poly(1, 0, 3).is_err());
    }

    #[test]
    fn laplacian_values() {
        assert_eq!(laplacian(&z(1, 0, 1, 0)), Poly::one());
        assert_eq!(laplacian(&Poly::norm_sqr()), Poly::constant(Scalar::from_int(2)));
        assert!(laplacian(&v_poly(2, 1, 2).unwrap()).is_zero());
    }

    #[test]
    fn decompose_z1_z1bar() {
        let h = harmonic_decompose(&z(1, 0, 1, 0)).unwrap();
        let half = Scalar::from_rational(rat(1, 2));
        assert_eq!(h, vec![(&z(1, 0, 1, 0) - &z(0, 1, 0, 1)).scale(&half), Poly::constant(half)]);
        assert_eq!(harmonic_decompose(&z(0, 2, 0, 0)).unwrap(), vec![z(0, 2, 0, 0)]);
        assert_eq!(harmonic_decompose(&(&z(1, 0, 0, 0) + &z(1, 1, 0, 0))), Err(Error::NotHomogeneous));
    }

    #[test]
    fn decompose_reconstructs_products() {
        for (m1, l1, k1, m2, l2, k2) in [(1, 0, 1, 1, 0, 0), (2, 1, 1, 2, 0, 2), (2, 2, 0, 1, 1, 1)] {
            let p = &v_poly(m1, l1, k1).unwrap() * &v_poly(m2, l2, k2).unwrap();
            let hs = harmonic_decompose(&p).unwrap();
            let mut back = Poly::zero();
            for (j, h) in hs.iter().enumerate() {
                assert!(laplacian(h).is_zero());
                back += &(h * &Poly::norm_sqr().pow(j as u32));
            }
            assert_eq!(back, p);
        }
    }
}
