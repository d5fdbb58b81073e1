use proptest::prelude::*;
use qca_core::enveloping::UElement;
use qca_core::ghat::{Ghat, GhatElement};
use qca_core::lie::build_sl;
use qca_core::sphere::{basis_indices, LaurentSpinor};
use qca_core::verify::{generator_relations, named_elements};
use qca_core::Scalar;

#[test]
fn a_is_central_and_commutes_with_d() {
    let g = build_sl(2).unwrap();
    let gh = Ghat::new(&g);
    for (_, x) in named_elements(&g).unwrap() {
        assert!(gh.bracket(&GhatElement::a(), &x).is_zero());
        assert!(gh.bracket(&x, &GhatElement::a()).is_zero());
    }
    assert!(gh.bracket(&GhatElement::d(), &GhatElement::a()).is_zero());
    assert!(gh.bracket(&GhatElement::d(), &GhatElement::d()).is_zero());
}

// The loop part is the commutator in the associative algebra C[φ±] ⊗ U(g),
// so antisymmetry and Jacobi hold there exactly; only the a-coefficient
// depends on the cocycle.
#[test]
fn loop_part_is_a_lie_algebra() {
    let g = build_sl(2).unwrap();
    let gh = Ghat::new(&g);
    let elems: Vec<GhatElement> = named_elements(&g).unwrap().into_iter().map(|(_, x)| x).collect();
    let inner: Vec<Vec<GhatElement>> = elems.iter().map(|x| elems.iter().map(|y| gh.bracket(x, y)).collect()).collect();
    for (a, x) in elems.iter().enumerate() {
        for (b, y) in elems.iter().enumerate() {
            assert!((&inner[a][b] + &inner[b][a]).loop_part().is_zero());
            for (c, z) in elems.iter().enumerate() {
                let s = &(&gh.bracket(x, &inner[b][c]) + &gh.bracket(y, &inner[c][a])) + &gh.bracket(z, &inner[a][b]);
                assert!(s.loop_part().is_zero());
            }
        }
    }
}

#[test]
fn chevalley_relations_hold_for_sl3() {
    let g = build_sl(3).unwrap();
    let gh = Ghat::new(&g);
    let (cases, _) = generator_relations(&gh).unwrap();
    let chevalley: Vec<_> = cases
        .iter()
        .filter(|c| c.name.starts_with("[e_1") || c.name.starts_with("[e_2") || c.name.starts_with("[h_"))
        .collect();
    assert_eq!(chevalley.len(), 12);
    for c in chevalley {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
}

#[test]
fn family_brackets_against_h_theta() {
    let g = build_sl(2).unwrap();
    let gh = Ghat::new(&g);
    let gens = gh.generators().unwrap();
    assert_eq!(gh.bracket(&gens.e_j, &gens.f_j), gens.h_theta);
    // Measured with the convention c = (1/2i)∫tr(θφ·ψ).
    let charge = |e: &GhatElement, f: &GhatElement| &gh.bracket(e, f) - &gens.h_theta;
    assert_eq!(charge(&gens.e_kappa, &gens.f_kappa), GhatElement::central(Scalar::i(), Scalar::zero()));
    assert_eq!(charge(&gens.e_mu, &gens.f_mu), GhatElement::central(Scalar::i(), Scalar::zero()));
}

fn element() -> impl Strategy<Value = GhatElement> {
    let g = build_sl(2).unwrap();
    let dim = g.dim();
    prop::collection::vec((prop::sample::select(basis_indices(2)), 0..dim, -3i64..4), 1..5).prop_map(move |ts| {
        ts.into_iter().fold(GhatElement::zero(), |acc, (a, i, c)| {
            let x = GhatElement::tensor(&LaurentSpinor::basis(a), &UElement::generator(dim, i));
            &acc + &x.scale(&Scalar::from_int(c))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weight_components_are_eigenvectors(x in element()) {
        let g = build_sl(2).unwrap();
        let gh = Ghat::new(&g);
        let (_, _, h) = gh.generators().unwrap().chevalley[0].clone();
        let mut sum = GhatElement::zero();
        for (w, part) in gh.weight_decompose(&x) {
            let dw = Scalar::from_rational(w.delta.clone());
            prop_assert_eq!(gh.bracket(&GhatElement::d(), &part), part.scale(&dw));
            let hw = Scalar::from_int(2 * w.lambda.0[0]);
            prop_assert_eq!(gh.bracket(&h, &part), part.scale(&hw));
            sum = &sum + &part;
        }
        prop_assert_eq!(sum, x);
    }

    #[test]
    fn centralizer_of_d_is_grade_zero(x in element()) {
        let g = build_sl(2).unwrap();
        let gh = Ghat::new(&g);
        let grade_zero = x.terms().all(|(l, _)| l.grade().keys().all(|&n| n == 0));
        prop_assert_eq!(gh.centralizer_of_d(&x), grade_zero);
    }
}
