//! Small named algebras used as fixtures and examples.

use crate::algebra::{Kind, Slot, StructuredAlgebra};
use crate::constructions::{commutator_poisson, yau_twist};
use crate::linalg::{Matrix, Scalar, Tensor3};

fn int_entries(n: usize, entries: &[(usize, usize, usize, i64)]) -> Tensor3 {
    let e: Vec<_> = entries.iter().map(|&(i, j, k, c)| (i, j, k, Scalar::from_int(c))).collect();
    Tensor3::from_entries(n, &e)
}

fn ordinary(kind: Kind, n: usize, products: Vec<(Slot, Tensor3)>) -> StructuredAlgebra {
    StructuredAlgebra::ordinary(kind, n, products.into_iter().collect()).expect("seed algebra")
}

/// Dimension 1, zero product.
pub fn z1() -> StructuredAlgebra {
    ordinary(Kind::Associative, 1, vec![(Slot::Mul, Tensor3::cube(1))])
}

/// Dimension 1, `e e = e`.
pub fn u1() -> StructuredAlgebra {
    ordinary(Kind::Associative, 1, vec![(Slot::Mul, int_entries(1, &[(0, 0, 0, 1)]))])
}

pub fn a2_product() -> Tensor3 {
    int_entries(2, &[(0, 0, 0, 1), (0, 1, 1, 1)])
}

/// `e1 e1 = e1`, `e1 e2 = e2`, identity maps.
pub fn a2() -> StructuredAlgebra {
    ordinary(Kind::Associative, 2, vec![(Slot::Mul, a2_product())])
}

/// `e1 e1 = e2`, `e1 e2 = e1`; not associative.
pub fn n2() -> StructuredAlgebra {
    ordinary(Kind::Associative, 2, vec![(Slot::Mul, int_entries(2, &[(0, 0, 1, 1), (0, 1, 0, 1)]))])
}

/// `[e1, e2] = e2 = -[e2, e1]`.
pub fn l2() -> StructuredAlgebra {
    ordinary(Kind::Lie, 2, vec![(Slot::Bracket, int_entries(2, &[(0, 1, 1, 1), (1, 0, 1, -1)]))])
}

/// A2 twisted by `diag(1, 2)` in both slots: `e1 e2 = 2 e2`, maps `diag(1, 2)`.
pub fn a2_diag() -> StructuredAlgebra {
    let d = Matrix::diag_ints(&[1, 2]);
    yau_twist(&a2(), &d, &d).expect("diag(1, 2) is an automorphism of A2")
}

/// A2 with its commutator bracket.
pub fn a2_poisson() -> StructuredAlgebra {
    commutator_poisson(&a2()).expect("A2 is regular")
}

/// A2's product read as a pre-Lie product.
pub fn a2_prelie() -> StructuredAlgebra {
    ordinary(Kind::PreLie, 2, vec![(Slot::Star, a2_product())])
}

/// `prec = ` A2's product, `succ = 0`.
pub fn a2_dendriform() -> StructuredAlgebra {
    ordinary(Kind::Dendriform, 2, vec![(Slot::Prec, a2_product()), (Slot::Succ, Tensor3::cube(2))])
}

/// [`a2_dendriform`] with zero star.
pub fn a2_prepoisson() -> StructuredAlgebra {
    ordinary(
        Kind::NcPrePoisson,
        2,
        vec![(Slot::Prec, a2_product()), (Slot::Succ, Tensor3::cube(2)), (Slot::Star, Tensor3::cube(2))],
    )
}

/// Matrix units `E_ij` of size `k`, indexed row-major.
fn matrix_units(k: usize, keep: impl Fn(usize, usize) -> bool) -> (Vec<(usize, usize)>, Tensor3) {
    let units: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).filter(|&(i, j)| keep(i, j)).collect();
    let pos = |u: (usize, usize)| units.iter().position(|&v| v == u);
    let mut t = Tensor3::cube(units.len());
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(j2, l)) in units.iter().enumerate() {
            if j == j2 {
                t.set(a, b, pos((i, l)).expect("closed under products"), Scalar::one());
            }
        }
    }
    (units, t)
}

/// Conjugation `X -> D X D^-1` on the span of `units`, `D = diag(d)`.
fn conjugation(units: &[(usize, usize)], d: &[i64]) -> Matrix {
    Matrix::diagonal(&units.iter().map(|&(i, j)| Scalar::ratio(d[i], d[j])).collect::<Vec<_>>())
}

/// Upper triangular 2x2 matrices twisted by conjugation with `diag(1, 2)`
/// and its square.
pub fn t3() -> StructuredAlgebra {
    let (units, t) = matrix_units(2, |i, j| i <= j);
    let alg = ordinary(Kind::Associative, 3, vec![(Slot::Mul, t)]);
    yau_twist(&alg, &conjugation(&units, &[1, 2]), &conjugation(&units, &[1, 4])).expect("conjugations are automorphisms")
}

/// Full 2x2 matrices twisted by conjugation with `diag(1, 3)` and
/// `diag(2, 1)`.
pub fn m2() -> StructuredAlgebra {
    let (units, t) = matrix_units(2, |_, _| true);
    let alg = ordinary(Kind::Associative, 4, vec![(Slot::Mul, t)]);
    yau_twist(&alg, &conjugation(&units, &[1, 3]), &conjugation(&units, &[2, 1])).expect("conjugations are automorphisms")
}

/// `sl2` in the basis `(e, f, h)` twisted by the automorphisms scaling
/// `e, f` by `2, 1/2` and by `1/3, 3`.
pub fn sl2_twisted() -> StructuredAlgebra {
    // [h, e] = 2e, [h, f] = -2f, [e, f] = h
    let br = int_entries(3, &[(2, 0, 0, 2), (0, 2, 0, -2), (2, 1, 1, -2), (1, 2, 1, 2), (0, 1, 2, 1), (1, 0, 2, -1)]);
    let alg = ordinary(Kind::Lie, 3, vec![(Slot::Bracket, br)]);
    let phi = |a: Scalar| Matrix::diagonal(&[a.clone(), a.recip().expect("nonzero"), Scalar::one()]);
    yau_twist(&alg, &phi(Scalar::from_int(2)), &phi(Scalar::ratio(1, 3))).expect("diagonal automorphisms of sl2")
}

/// Every seed by name, in a fixed order.
pub fn all() -> Vec<(&'static str, StructuredAlgebra)> {
    vec![
        ("z1", z1()),
        ("u1", u1()),
        ("a2", a2()),
        ("n2", n2()),
        ("l2", l2()),
        ("a2_diag", a2_diag()),
        ("a2_poisson", a2_poisson()),
        ("a2_prelie", a2_prelie()),
        ("a2_dendriform", a2_dendriform()),
        ("a2_prepoisson", a2_prepoisson()),
        ("t3", t3()),
        ("m2", m2()),
        ("sl2_twisted", sl2_twisted()),
    ]
}

pub fn by_name(name: &str) -> Option<StructuredAlgebra> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, a)| a)
}

