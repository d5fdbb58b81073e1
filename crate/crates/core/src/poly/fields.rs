use alloc::vec;
use alloc::vec::Vec;

use super::{Monomial, Poly, StarField, Var};
use crate::scalar::{rat, Scalar};

/// The fixed first-order differential operators on `C²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedField {
    EPlus,
    EMinus,
    Theta,
    EHatPlus,
    EHatMinus,
    ThetaHat,
    Nu,
    NuBar,
    MuVf,
    MuBarVf,
    D0,
}

impl NamedField {
    pub const ALL: [NamedField; 11] = [
        NamedField::EPlus,
        NamedField::EMinus,
        NamedField::Theta,
        NamedField::EHatPlus,
        NamedField::EHatMinus,
        NamedField::ThetaHat,
        NamedField::Nu,
        NamedField::NuBar,
        NamedField::MuVf,
        NamedField::MuBarVf,
        NamedField::D0,
    ];

    /// The operator as `Σ c_v · ∂/∂v`.
    pub fn components(self) -> Vec<(Poly, Var)> {
        use Var::*;
        let x = |a, b, c, d, s: i64| Poly::term(Monomial::new(a, b, c, d), Scalar::from_int(s));
        match self {
            NamedField::EPlus => vec![(x(0, 1, 0, 0, -1), Zb1), (x(1, 0, 0, 0, 1), Zb2)],
            NamedField::EMinus => vec![(x(0, 0, 0, 1, -1), Z1), (x(0, 0, 1, 0, 1), Z2)],
            NamedField::Theta => {
                vec![(x(1, 0, 0, 0, 1), Z1), (x(0, 1, 0, 0, 1), Z2), (x(0, 0, 1, 0, -1), Zb1), (x(0, 0, 0, 1, -1), Zb2)]
            }
            NamedField::EHatPlus => vec![(x(0, 0, 1, 0, -1), Zb2), (x(0, 1, 0, 0, 1), Z1)],
            NamedField::EHatMinus => vec![(x(0, 0, 0, 1, 1), Zb1), (x(1, 0, 0, 0, -1), Z2)],
            NamedField::ThetaHat => {
                vec![(x(0, 1, 0, 0, 1), Z2), (x(0, 0, 1, 0, 1), Zb1), (x(0, 0, 0, 1, -1), Zb2), (x(1, 0, 0, 0, -1), Z1)]
            }
            NamedField::Nu => vec![(x(1, 0, 0, 0, 1), Z1), (x(0, 1, 0, 0, 1), Z2)],
            NamedField::NuBar => vec![(x(0, 0, 1, 0, 1), Zb1), (x(0, 0, 0, 1, 1), Zb2)],
            NamedField::MuVf => vec![(x(0, 1, 0, 0, 1), Z2), (x(0, 0, 1, 0, 1), Zb1)],
            NamedField::MuBarVf => vec![(x(0, 0, 0, 1, 1), Zb2), (x(1, 0, 0, 0, 1), Z1)],
            NamedField::D0 => {
                let half = Scalar::from_rational(rat(1, 2));
                let mut out = NamedField::Nu.components();
                out.extend(NamedField::NuBar.components());
                out.into_iter().map(|(c, v)| (c.scale(&half), v)).collect()
            }
        }
    }

    /// True for the operators tangent to the spheres `|z| = const`.
    pub fn is_tangential(self) -> bool {
        matches!(
            self,
            NamedField::EPlus
                | NamedField::EMinus
                | NamedField::Theta
                | NamedField::EHatPlus
                | NamedField::EHatMinus
                | NamedField::ThetaHat
        )
    }
}

/// Applies a named operator to a polynomial.
pub fn vf_apply_poly(f: NamedField, p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (c, v) in f.components() {
        out += &(&c * &p.diff(v));
    }
    out
}

/// Applies a named operator to `num/|z|^{2k}`.
pub fn vf_apply(f: NamedField, p: &StarField) -> StarField {
    let mut out = StarField::zero();
    for (c, v) in f.components() {
        out = &out + &(&StarField::from(c) * &p.diff(v));
    }
    out
}
