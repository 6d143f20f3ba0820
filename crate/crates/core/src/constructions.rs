//! Algebra-level constructions: twisting, derived algebras and
//! subadjacent structures.

use std::collections::BTreeMap;

use crate::algebra::{Kind, Slot, StructuredAlgebra};
use crate::check::{check_algebra, check_morphism};
use crate::linalg::{Matrix, Tensor3};
use crate::{Error, Result};

/// Products `(x, y) -> p(a1p x, a2p y)` with maps `alpha1 a1p`,
/// `alpha2 a2p`. Both new maps must be commuting morphisms of `alg`.
pub fn yau_twist(alg: &StructuredAlgebra, a1p: &Matrix, a2p: &Matrix) -> Result<StructuredAlgebra> {
    for m in [a1p, a2p] {
        if m.rows() != alg.dim() || m.cols() != alg.dim() {
            return Err(Error::Dimension(format!("twisting map must be {0}x{0}", alg.dim())));
        }
    }
    if !a1p.commutes_with(a2p) {
        return Err(Error::NoncommutingMaps("twisting maps do not commute".into()));
    }
    for (name, m) in [("first twisting map", a1p), ("second twisting map", a2p)] {
        let r = check_morphism(m, alg, alg)?;
        if !r.passed() {
            return Err(Error::check_failed(name, "morphism", r));
        }
    }
    let products = alg.products().iter().map(|(s, t)| (*s, t.precompose(a1p, a2p))).collect();
    StructuredAlgebra::new(alg.kind(), alg.alpha1() * a1p, alg.alpha2() * a2p, products)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedVariant {
    /// Twist by `alpha^n`; maps become `alpha^(n+1)`.
    Linear,
    /// Twist by `alpha^(2^n - 1)`; maps become `alpha^(2^n)`.
    Doubling,
}

pub fn derived_algebra(alg: &StructuredAlgebra, n: u32, variant: DerivedVariant) -> Result<StructuredAlgebra> {
    let r = check_algebra(alg)?;
    if !r.passed() {
        return Err(Error::check_failed("input algebra", alg.kind().name(), r));
    }
    let e: i64 = match variant {
        DerivedVariant::Linear => n as i64,
        DerivedVariant::Doubling => {
            if n >= 62 {
                return Err(Error::Precondition("exponent 2^n - 1 overflows".into()));
            }
            (1i64 << n) - 1
        }
    };
    yau_twist(alg, &alg.alpha1().pow(e)?, &alg.alpha2().pow(e)?)
}

/// `(x, y) -> p(x, y) - p(alpha1^-1 alpha2 y, alpha1 alpha2^-1 x)`.
pub(crate) fn commutator_tensor(alg: &StructuredAlgebra, p: &Tensor3) -> Result<Tensor3> {
    let (a1i, a2i) = alg.inverse_maps()?;
    let q = alg.alpha1() * &a2i;
    let s = &a1i * alg.alpha2();
    Ok(p.sub(&p.swap_arguments().precompose(&q, &s)))
}

fn expect_kind(alg: &StructuredAlgebra, kind: Kind, what: &str) -> Result<()> {
    if alg.kind() != kind {
        return Err(Error::Kind(format!("{what} needs a {kind} algebra, got {}", alg.kind())));
    }
    Ok(())
}

/// Associative product plus its commutator bracket.
pub fn commutator_poisson(alg: &StructuredAlgebra) -> Result<StructuredAlgebra> {
    expect_kind(alg, Kind::Associative, "the commutator construction")?;
    let mul = alg.require(Slot::Mul)?.clone();
    let bracket = commutator_tensor(alg, &mul)?;
    StructuredAlgebra::new(
        Kind::NcPoisson,
        alg.alpha1().clone(),
        alg.alpha2().clone(),
        BTreeMap::from([(Slot::Mul, mul), (Slot::Bracket, bracket)]),
    )
}

/// Commutator bracket of a pre-Lie product.
pub fn subadjacent_lie(alg: &StructuredAlgebra) -> Result<StructuredAlgebra> {
    expect_kind(alg, Kind::PreLie, "the subadjacent Lie construction")?;
    let bracket = commutator_tensor(alg, alg.require(Slot::Star)?)?;
    StructuredAlgebra::new(
        Kind::Lie,
        alg.alpha1().clone(),
        alg.alpha2().clone(),
        BTreeMap::from([(Slot::Bracket, bracket)]),
    )
}

/// Associative product `prec + succ`.
pub fn dendriform_sum(alg: &StructuredAlgebra) -> Result<StructuredAlgebra> {
    expect_kind(alg, Kind::Dendriform, "the dendriform sum")?;
    let mul = alg.require(Slot::Prec)?.add(alg.require(Slot::Succ)?);
    StructuredAlgebra::new(Kind::Associative, alg.alpha1().clone(), alg.alpha2().clone(), BTreeMap::from([(Slot::Mul, mul)]))
}

/// Product `prec + succ` and the commutator bracket of `star`.
pub fn prepoisson_subadjacent(alg: &StructuredAlgebra) -> Result<StructuredAlgebra> {
    expect_kind(alg, Kind::NcPrePoisson, "the subadjacent Poisson construction")?;
    let mul = alg.require(Slot::Prec)?.add(alg.require(Slot::Succ)?);
    let bracket = commutator_tensor(alg, alg.require(Slot::Star)?)?;
    StructuredAlgebra::new(
        Kind::NcPoisson,
        alg.alpha1().clone(),
        alg.alpha2().clone(),
        BTreeMap::from([(Slot::Mul, mul), (Slot::Bracket, bracket)]),
    )
}
