//! Hand-checked examples for the checkers and constructions.

use std::collections::BTreeMap;

use bihom::algebra::{ActionSlot, Kind, Slot, StructuredAlgebra};
use bihom::check::*;
use bihom::constructions::*;
use bihom::linalg::{Matrix, Scalar, Tensor3};
use bihom::modules::*;
use bihom::seeds;

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from_int(x)).collect()
}

fn with_maps(alg: &StructuredAlgebra, a1: Matrix, a2: Matrix) -> StructuredAlgebra {
    StructuredAlgebra::new(alg.kind(), a1, a2, alg.products().clone()).unwrap()
}

fn family(base: StructuredAlgebra, kind: Kind, m: usize, actions: Vec<(ActionSlot, Vec<Matrix>)>) -> ActionFamily {
    ActionFamily::from_matrices(base, kind, Matrix::identity(m), Matrix::identity(m), actions.into_iter().collect()).unwrap()
}

fn left_mult(alg: &StructuredAlgebra, slot: Slot) -> Vec<Matrix> {
    alg.require(slot).unwrap().action_matrices()
}

#[test]
fn associative_seeds() {
    for alg in [seeds::z1(), seeds::u1(), seeds::a2(), seeds::a2_diag(), seeds::t3(), seeds::m2()] {
        assert!(check_bihom_associative(&alg).unwrap().passed(), "{alg:?}");
    }
}

#[test]
fn n2_fails_at_the_first_triple() {
    let r = check_bihom_associative(&seeds::n2()).unwrap();
    assert!(!r.passed());
    let v = &r.violations[0];
    assert_eq!(v.witness, vec![0, 0, 0]);
    assert_eq!(v.residual, ints(&[1, 0]));
    assert_eq!(v.witness_label(), "(x=e1, y=e1, z=e1)");
}

#[test]
fn swapped_maps_break_multiplicativity() {
    let swap = Matrix::from_int_rows(&[[0, 1], [1, 0]]);
    let alg = with_maps(&seeds::a2(), swap, Matrix::identity(2));
    let r = check_bihom_associative(&alg).unwrap();
    let v = r.violations.iter().find(|v| v.axiom.contains("multiplicative.a1")).expect("multiplicativity witness");
    assert_eq!(v.witness, vec![0, 0]);
}

#[test]
fn plain_diag_maps_on_a2_are_not_a_bihom_structure() {
    // Multiplicative, but a1(e1)(e1 e2) = e2 while (e1 e1) a2(e2) = 2 e2.
    let d = Matrix::diag_ints(&[1, 2]);
    let alg = with_maps(&seeds::a2(), d.clone(), d);
    assert!(!check_bihom_associative(&alg).unwrap().passed());
}

#[test]
fn lie_seeds() {
    assert!(check_bihom_lie(&seeds::l2()).unwrap().passed());
    assert!(check_bihom_lie(&seeds::sl2_twisted()).unwrap().passed());
}

#[test]
fn associative_products_are_pre_lie_and_dendriform() {
    assert!(check_bihom_pre_lie(&seeds::a2_prelie()).unwrap().passed());
    assert!(check_bihom_dendriform(&seeds::a2_dendriform()).unwrap().passed());
    assert!(check_nc_bihom_pre_poisson(&seeds::a2_prepoisson()).unwrap().passed());
}

#[test]
fn poisson_examples() {
    let zero_bracket = StructuredAlgebra::ordinary(
        Kind::NcPoisson,
        2,
        BTreeMap::from([(Slot::Mul, seeds::a2_product()), (Slot::Bracket, Tensor3::cube(2))]),
    )
    .unwrap();
    assert!(check_nc_bihom_poisson(&zero_bracket).unwrap().passed());
    assert!(check_nc_bihom_poisson(&seeds::a2_poisson()).unwrap().passed());
    let mut br = Tensor3::cube(2);
    br.set(0, 1, 0, Scalar::one());
    br.set(1, 0, 0, -Scalar::one());
    let bad = StructuredAlgebra::ordinary(Kind::NcPoisson, 2, BTreeMap::from([(Slot::Mul, seeds::a2_product()), (Slot::Bracket, br)])).unwrap();
    let r = check_nc_bihom_poisson(&bad).unwrap();
    assert!(r.failing_axioms().any(|a| a.starts_with("poisson.")), "{}", r.render(10));
}

#[test]
fn commutator_of_a2() {
    let p = seeds::a2_poisson();
    let br = p.require(Slot::Bracket).unwrap();
    assert_eq!(br.fibre(0, 1), &ints(&[0, 1])[..]);
    assert_eq!(br.fibre(1, 0), &ints(&[0, -1])[..]);
    assert_eq!(br.fibre(0, 0), &ints(&[0, 0])[..]);
    assert!(commutator_poisson(&seeds::u1()).unwrap().require(Slot::Bracket).unwrap().is_zero());
    let twisted = commutator_poisson(&seeds::a2_diag()).unwrap();
    assert!(check_nc_bihom_poisson(&twisted).unwrap().passed());
}

#[test]
fn morphisms_of_a2() {
    let a2 = seeds::a2();
    assert!(check_morphism(&Matrix::diag_ints(&[1, 2]), &a2, &a2).unwrap().passed());
    assert!(!check_morphism(&Matrix::from_int_rows(&[[0, 1], [1, 0]]), &a2, &a2).unwrap().passed());
}

#[test]
fn twist_and_derived() {
    let t = seeds::a2_diag();
    let mul = t.require(Slot::Mul).unwrap();
    assert_eq!(mul.fibre(0, 1), &ints(&[0, 2])[..]);
    assert_eq!(mul.fibre(0, 0), &ints(&[1, 0])[..]);
    assert_eq!(t.alpha1(), &Matrix::diag_ints(&[1, 2]));
    let d = derived_algebra(&t, 2, DerivedVariant::Linear).unwrap();
    let direct = yau_twist(&t, &Matrix::diag_ints(&[1, 4]), &Matrix::diag_ints(&[1, 4])).unwrap();
    assert_eq!(d, direct);
    assert_eq!(d.alpha1(), &Matrix::diag_ints(&[1, 8]));
    for n in 0..=3 {
        for v in [DerivedVariant::Linear, DerivedVariant::Doubling] {
            assert!(check_algebra(&derived_algebra(&t, n, v).unwrap()).unwrap().passed());
        }
    }
}

#[test]
fn regular_bimodule_matrices() {
    let m = regular_bimodule(&seeds::a2()).unwrap();
    assert_eq!(m.action_matrix(ActionSlot::L, 0).unwrap(), Matrix::identity(2));
    assert_eq!(m.action_matrix(ActionSlot::R, 0).unwrap(), Matrix::from_int_rows(&[[1, 0], [0, 0]]));
    let l = regular_bimodule(&seeds::l2()).unwrap();
    assert_eq!(l.action_matrix(ActionSlot::Rho, 0).unwrap(), Matrix::from_int_rows(&[[0, 0], [0, 1]]));
    assert!(regular_bimodule(&seeds::z1()).unwrap().actions().values().all(Tensor3::is_zero));
}

#[test]
fn associative_bimodule_examples() {
    let a2 = seeds::a2();
    let zero = family(a2.clone(), Kind::Associative, 2, vec![
        (ActionSlot::L, vec![Matrix::zeros(2, 2); 2]),
        (ActionSlot::R, vec![Matrix::zeros(2, 2); 2]),
    ]);
    assert!(check_assoc_bimodule(&zero).unwrap().passed());
    assert!(check_assoc_bimodule(&regular_bimodule(&a2).unwrap()).unwrap().passed());
    // L(e1) = id and L(e2) = 0 commute and multiply like A2, so using L on
    // both sides is still a bimodule.
    let l = left_mult(&a2, Slot::Mul);
    let both_left = family(a2.clone(), Kind::Associative, 2, vec![(ActionSlot::L, l.clone()), (ActionSlot::R, l.clone())]);
    assert!(check_assoc_bimodule(&both_left).unwrap().passed());
    // Right multiplication used as the left action is not.
    let r = regular_bimodule(&a2).unwrap().require(ActionSlot::R).unwrap().action_matrices();
    let bad = family(a2, Kind::Associative, 2, vec![(ActionSlot::L, r), (ActionSlot::R, l)]);
    let rep = check_assoc_bimodule(&bad).unwrap();
    assert_eq!(rep.failing_axioms().collect::<Vec<_>>(), ["assocmod.left"]);
    assert_eq!(rep.violations[0].witness_label(), "(x=e1, y=e2, v=e1)");
}

#[test]
fn lie_representation_examples() {
    assert!(check_lie_rep(&regular_bimodule(&seeds::l2()).unwrap()).unwrap().passed());
    assert!(check_lie_rep(&regular_bimodule(&seeds::sl2_twisted()).unwrap()).unwrap().passed());
    let abelian = StructuredAlgebra::ordinary(Kind::Lie, 2, BTreeMap::from([(Slot::Bracket, Tensor3::cube(2))])).unwrap();
    let rho = vec![Matrix::from_int_rows(&[[0, 1], [0, 0]]), Matrix::from_int_rows(&[[0, 0], [1, 0]])];
    let bad = family(abelian, Kind::Lie, 2, vec![(ActionSlot::Rho, rho)]);
    assert!(!check_lie_rep(&bad).unwrap().passed());
}

#[test]
fn pre_lie_bimodule_examples() {
    let p = seeds::a2_prelie();
    assert!(check_prelie_bimodule(&regular_bimodule(&p).unwrap()).unwrap().passed());
    let l = left_mult(&p, Slot::Star);
    let both_left = family(p.clone(), Kind::PreLie, 2, vec![(ActionSlot::LStar, l.clone()), (ActionSlot::RStar, l.clone())]);
    assert!(check_prelie_bimodule(&both_left).unwrap().passed());
    let r = regular_bimodule(&p).unwrap().require(ActionSlot::RStar).unwrap().action_matrices();
    let bad = family(p, Kind::PreLie, 2, vec![(ActionSlot::LStar, r), (ActionSlot::RStar, l)]);
    let rep = check_prelie_bimodule(&bad).unwrap();
    assert_eq!(rep.failing_axioms().collect::<Vec<_>>(), ["prelie_mod.left"]);
}

#[test]
fn poisson_representation_examples() {
    let p = seeds::a2_poisson();
    assert!(check_poisson_rep(&regular_bimodule(&p).unwrap()).unwrap().passed());
    let reg = regular_bimodule(&p).unwrap();
    let mut actions = reg.actions().clone();
    actions.insert(ActionSlot::Rho, Tensor3::cube(2));
    let bad = ActionFamily::new(p, Kind::NcPoisson, Matrix::identity(2), Matrix::identity(2), actions).unwrap();
    assert!(!check_poisson_rep(&bad).unwrap().passed());
}

#[test]
fn pre_poisson_bimodule_examples() {
    let p = seeds::a2_prepoisson();
    let reg = regular_bimodule(&p).unwrap();
    assert!(check_prepoisson_bimodule(&reg).unwrap().passed());
}

#[test]
fn semidirect_products_close() {
    let a2 = seeds::a2();
    let s = semidirect_product(&regular_bimodule(&a2).unwrap()).unwrap();
    assert_eq!(s.dim(), 4);
    assert!(check_bihom_associative(&s).unwrap().passed());
    let p = seeds::a2_poisson();
    let s = semidirect_product(&regular_bimodule(&p).unwrap()).unwrap();
    assert!(check_nc_bihom_poisson(&s).unwrap().passed());
}

#[test]
fn induced_representations() {
    let p = seeds::a2_prelie();
    let rho = induced_lie_rep_from_prelie(&regular_bimodule(&p).unwrap()).unwrap();
    let adj = regular_bimodule(&subadjacent_lie(&p).unwrap()).unwrap();
    assert_eq!(rho.action(ActionSlot::Rho), adj.action(ActionSlot::Rho));
    let d = seeds::a2_dendriform();
    let induced = induced_assoc_bimodule_from_dendriform(&regular_bimodule(&d).unwrap()).unwrap();
    assert_eq!(&induced, &regular_bimodule(&dendriform_sum(&d).unwrap()).unwrap());
    let pp = seeds::a2_prepoisson();
    let rep = induced_poisson_rep_from_prepoisson(&regular_bimodule(&pp).unwrap()).unwrap();
    assert!(check_poisson_rep(&rep).unwrap().passed());
}

#[test]
fn twisting_by_identities_is_a_no_op() {
    let m = regular_bimodule(&seeds::a2_prepoisson()).unwrap();
    let id = Matrix::identity(2);
    assert_eq!(twist_bimodule(&m, &id, &id, &id, &id).unwrap(), m);
}

