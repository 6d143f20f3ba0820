//! Structured algebras: a vector space with named bilinear products and
//! two commuting structure maps.

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::{Matrix, Scalar, Tensor3};
use crate::{Error, Result};

/// Algebra classes. The same tags name the matching bimodule classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Associative,
    Lie,
    PreLie,
    Dendriform,
    NcPoisson,
    NcPrePoisson,
    /// Any set of products; no class axioms.
    Raw,
}

impl Kind {
    pub const ALL: [Kind; 7] =
        [Kind::Associative, Kind::Lie, Kind::PreLie, Kind::Dendriform, Kind::NcPoisson, Kind::NcPrePoisson, Kind::Raw];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Associative => "associative",
            Kind::Lie => "lie",
            Kind::PreLie => "pre_lie",
            Kind::Dendriform => "dendriform",
            Kind::NcPoisson => "nc_poisson",
            Kind::NcPrePoisson => "nc_pre_poisson",
            Kind::Raw => "raw",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == s)
    }

    pub fn slots(self) -> &'static [Slot] {
        match self {
            Kind::Associative => &[Slot::Mul],
            Kind::Lie => &[Slot::Bracket],
            Kind::PreLie => &[Slot::Star],
            Kind::Dendriform => &[Slot::Prec, Slot::Succ],
            Kind::NcPoisson => &[Slot::Mul, Slot::Bracket],
            Kind::NcPrePoisson => &[Slot::Prec, Slot::Succ, Slot::Star],
            Kind::Raw => &[],
        }
    }

    pub fn action_slots(self) -> &'static [ActionSlot] {
        use ActionSlot::*;
        match self {
            Kind::Associative => &[L, R],
            Kind::Lie => &[Rho],
            Kind::PreLie => &[LStar, RStar],
            Kind::Dendriform => &[LPrec, RPrec, LSucc, RSucc],
            Kind::NcPoisson => &[L, R, Rho],
            Kind::NcPrePoisson => &[LPrec, RPrec, LSucc, RSucc, LStar, RStar],
            Kind::Raw => &[],
        }
    }

    /// Classes whose axioms are part of this class's axioms, itself included.
    pub fn components(self) -> &'static [Kind] {
        match self {
            Kind::NcPoisson => &[Kind::Associative, Kind::Lie, Kind::NcPoisson],
            Kind::NcPrePoisson => &[Kind::Dendriform, Kind::PreLie, Kind::NcPrePoisson],
            Kind::Associative => &[Kind::Associative],
            Kind::Lie => &[Kind::Lie],
            Kind::PreLie => &[Kind::PreLie],
            Kind::Dendriform => &[Kind::Dendriform],
            Kind::Raw => &[Kind::Raw],
        }
    }

    /// Every axiom of `other` is an axiom of `self`.
    pub fn refines(self, other: Kind) -> bool {
        other == Kind::Raw || self.components().contains(&other)
    }

    /// Whether some axiom of the class involves the inverse of a structure map.
    pub fn uses_inverses(self) -> bool {
        matches!(self, Kind::Lie | Kind::NcPoisson)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Named bilinear products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Mul,
    Bracket,
    Star,
    Prec,
    Succ,
}

impl Slot {
    pub const ALL: [Slot; 5] = [Slot::Mul, Slot::Bracket, Slot::Star, Slot::Prec, Slot::Succ];

    pub fn name(self) -> &'static str {
        match self {
            Slot::Mul => "mul",
            Slot::Bracket => "bracket",
            Slot::Star => "star",
            Slot::Prec => "prec",
            Slot::Succ => "succ",
        }
    }

    pub fn parse(s: &str) -> Option<Slot> {
        Slot::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Left and right action slots induced by the product on a bimodule.
    /// The bracket has the single action `rho`.
    pub fn action_pair(self) -> (ActionSlot, ActionSlot) {
        use ActionSlot::*;
        match self {
            Slot::Mul => (L, R),
            Slot::Star => (LStar, RStar),
            Slot::Prec => (LPrec, RPrec),
            Slot::Succ => (LSucc, RSucc),
            Slot::Bracket => (Rho, Rho),
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Named actions of an algebra on a space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ActionSlot {
    L,
    R,
    Rho,
    LStar,
    RStar,
    LPrec,
    RPrec,
    LSucc,
    RSucc,
}

impl ActionSlot {
    pub const ALL: [ActionSlot; 9] = [
        ActionSlot::L,
        ActionSlot::R,
        ActionSlot::Rho,
        ActionSlot::LStar,
        ActionSlot::RStar,
        ActionSlot::LPrec,
        ActionSlot::RPrec,
        ActionSlot::LSucc,
        ActionSlot::RSucc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ActionSlot::L => "l",
            ActionSlot::R => "r",
            ActionSlot::Rho => "rho",
            ActionSlot::LStar => "l_star",
            ActionSlot::RStar => "r_star",
            ActionSlot::LPrec => "l_prec",
            ActionSlot::RPrec => "r_prec",
            ActionSlot::LSucc => "l_succ",
            ActionSlot::RSucc => "r_succ",
        }
    }

    pub fn parse(s: &str) -> Option<ActionSlot> {
        ActionSlot::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Right actions: `r(x) v` stands for `v x`.
    pub fn is_right(self) -> bool {
        matches!(self, ActionSlot::R | ActionSlot::RStar | ActionSlot::RPrec | ActionSlot::RSucc)
    }
}

impl fmt::Display for ActionSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite-dimensional space with products and commuting maps `alpha1`,
/// `alpha2`.
///
/// Invariants: every product is an `(n, n, n)` tensor, both maps are
/// `n x n` and commute, and unless the kind is [`Kind::Raw`] the product
/// slots are exactly those of the kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredAlgebra {
    dim: usize,
    kind: Kind,
    alpha1: Matrix,
    alpha2: Matrix,
    products: BTreeMap<Slot, Tensor3>,
}

impl StructuredAlgebra {
    pub fn new(kind: Kind, alpha1: Matrix, alpha2: Matrix, products: BTreeMap<Slot, Tensor3>) -> Result<Self> {
        let dim = alpha1.rows();
        for (name, m) in [("alpha1", &alpha1), ("alpha2", &alpha2)] {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Dimension(format!("{name} is {}x{}, expected {dim}x{dim}", m.rows(), m.cols())));
            }
        }
        for (slot, t) in &products {
            if t.dims() != (dim, dim, dim) {
                return Err(Error::Dimension(format!("product {slot} has dimensions {:?}, expected {dim}^3", t.dims())));
            }
        }
        if !alpha1.commutes_with(&alpha2) {
            return Err(Error::NoncommutingMaps("alpha1 alpha2 != alpha2 alpha1".into()));
        }
        if kind != Kind::Raw {
            for slot in kind.slots() {
                if !products.contains_key(slot) {
                    return Err(Error::MissingSlot { slot: slot.name().into(), what: format!("kind {kind}") });
                }
            }
            if let Some(extra) = products.keys().find(|s| !kind.slots().contains(s)) {
                return Err(Error::Kind(format!("slot {extra} is not part of kind {kind}")));
            }
        }
        Ok(StructuredAlgebra { dim, kind, alpha1, alpha2, products })
    }

    /// Both structure maps equal to the identity.
    pub fn ordinary(kind: Kind, dim: usize, products: BTreeMap<Slot, Tensor3>) -> Result<Self> {
        StructuredAlgebra::new(kind, Matrix::identity(dim), Matrix::identity(dim), products)
    }

    /// Single-product algebra with both maps equal to the identity.
    pub fn single(kind: Kind, slot: Slot, product: Tensor3) -> Result<Self> {
        let dim = product.dims().0;
        StructuredAlgebra::ordinary(kind, dim, BTreeMap::from([(slot, product)]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn alpha1(&self) -> &Matrix {
        &self.alpha1
    }

    pub fn alpha2(&self) -> &Matrix {
        &self.alpha2
    }

    pub fn maps(&self) -> [&Matrix; 2] {
        [&self.alpha1, &self.alpha2]
    }

    pub fn products(&self) -> &BTreeMap<Slot, Tensor3> {
        &self.products
    }

    pub fn product(&self, slot: Slot) -> Option<&Tensor3> {
        self.products.get(&slot)
    }

    pub fn require(&self, slot: Slot) -> Result<&Tensor3> {
        self.product(slot)
            .ok_or_else(|| Error::MissingSlot { slot: slot.name().into(), what: format!("a {} algebra", self.kind) })
    }

    pub fn multiply(&self, slot: Slot, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        crate::linalg::apply_bilinear(self.require(slot)?, x, y)
    }

    /// Same data under another kind tag; the slot invariant is re-checked.
    pub fn with_kind(&self, kind: Kind) -> Result<Self> {
        StructuredAlgebra::new(kind, self.alpha1.clone(), self.alpha2.clone(), self.products.clone())
    }

    /// Keep only the given slots, under a new kind tag.
    pub fn restrict(&self, kind: Kind, slots: &[Slot]) -> Result<Self> {
        let products = slots
            .iter()
            .map(|s| Ok((*s, self.require(*s)?.clone())))
            .collect::<Result<BTreeMap<_, _>>>()?;
        StructuredAlgebra::new(kind, self.alpha1.clone(), self.alpha2.clone(), products)
    }

    pub fn is_regular(&self) -> bool {
        is_regular(self)
    }

    /// `(alpha1^-1, alpha2^-1)`; fails unless regular.
    pub fn inverse_maps(&self) -> Result<(Matrix, Matrix)> {
        let a1 = self.alpha1.inverse().map_err(|_| Error::Singular("alpha1 is not invertible".into()))?;
        let a2 = self.alpha2.inverse().map_err(|_| Error::Singular("alpha2 is not invertible".into()))?;
        Ok((a1, a2))
    }
}

/// Both structure maps are invertible.
pub fn is_regular(alg: &StructuredAlgebra) -> bool {
    alg.alpha1.is_invertible() && alg.alpha2.is_invertible()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_noncommuting_maps() {
        let a1 = Matrix::from_int_rows(&[[1, 1], [0, 1]]);
        let a2 = Matrix::from_int_rows(&[[1, 0], [1, 1]]);
        let err = StructuredAlgebra::new(Kind::Associative, a1, a2, BTreeMap::from([(Slot::Mul, Tensor3::cube(2))]));
        assert!(matches!(err, Err(Error::NoncommutingMaps(_))));
    }

    #[test]
    fn kind_fixes_slots() {
        let id = Matrix::identity(1);
        let err = StructuredAlgebra::new(Kind::Lie, id.clone(), id.clone(), BTreeMap::from([(Slot::Mul, Tensor3::cube(1))]));
        assert!(matches!(err, Err(Error::MissingSlot { .. })));
        let raw = StructuredAlgebra::new(Kind::Raw, id.clone(), id, BTreeMap::from([(Slot::Mul, Tensor3::cube(1))]));
        assert!(raw.is_ok());
    }

    #[test]
    fn refinement_order() {
        assert!(Kind::NcPoisson.refines(Kind::Lie));
        assert!(Kind::NcPrePoisson.refines(Kind::PreLie));
        assert!(!Kind::Lie.refines(Kind::Associative));
        assert!(Kind::Lie.refines(Kind::Raw));
    }
}
