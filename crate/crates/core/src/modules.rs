//! Bimodules and representations, together with the constructions that
//! produce, transform and combine them.

use std::collections::BTreeMap;

use crate::algebra::{ActionSlot, Kind, Slot, StructuredAlgebra};
use crate::check::space;
use crate::constructions::{dendriform_sum, prepoisson_subadjacent, subadjacent_lie, yau_twist};
use crate::identity::{catalog, run_catalog, CheckReport, Context, Space};
use crate::linalg::{Matrix, Tensor3};
use crate::matched::sum_products;
use crate::{Error, Result};

/// Actions of `base` on a space of dimension `mdim` with commuting maps
/// `beta1`, `beta2`.
///
/// Invariants: every action is an `(n, mdim, mdim)` tensor, the betas are
/// `mdim x mdim` and commute, the base carries the products of `kind`,
/// and unless the kind is [`Kind::Raw`] the action slots are exactly those
/// of the kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionFamily {
    base: StructuredAlgebra,
    kind: Kind,
    mdim: usize,
    beta1: Matrix,
    beta2: Matrix,
    actions: BTreeMap<ActionSlot, Tensor3>,
}

impl ActionFamily {
    pub fn new(
        base: StructuredAlgebra,
        kind: Kind,
        beta1: Matrix,
        beta2: Matrix,
        actions: BTreeMap<ActionSlot, Tensor3>,
    ) -> Result<Self> {
        let mdim = beta1.rows();
        for (name, m) in [("beta1", &beta1), ("beta2", &beta2)] {
            if m.rows() != mdim || m.cols() != mdim {
                return Err(Error::Dimension(format!("{name} is {}x{}, expected {mdim}x{mdim}", m.rows(), m.cols())));
            }
        }
        if !beta1.commutes_with(&beta2) {
            return Err(Error::NoncommutingMaps("beta1 beta2 != beta2 beta1".into()));
        }
        for (slot, t) in &actions {
            if t.dims() != (base.dim(), mdim, mdim) {
                return Err(Error::Dimension(format!(
                    "action {slot} has dimensions {:?}, expected ({}, {mdim}, {mdim})",
                    t.dims(),
                    base.dim()
                )));
            }
        }
        if kind != Kind::Raw {
            for slot in kind.slots() {
                base.require(*slot)?;
            }
            for slot in kind.action_slots() {
                if !actions.contains_key(slot) {
                    return Err(Error::MissingSlot { slot: slot.name().into(), what: format!("a {kind} module") });
                }
            }
            if let Some(extra) = actions.keys().find(|s| !kind.action_slots().contains(s)) {
                return Err(Error::Kind(format!("action {extra} is not part of a {kind} module")));
            }
        }
        Ok(ActionFamily { base, kind, mdim, beta1, beta2, actions })
    }

    /// Actions given as one `mdim x mdim` matrix per base basis vector.
    pub fn from_matrices(
        base: StructuredAlgebra,
        kind: Kind,
        beta1: Matrix,
        beta2: Matrix,
        actions: BTreeMap<ActionSlot, Vec<Matrix>>,
    ) -> Result<Self> {
        let mdim = beta1.rows();
        let mut tensors = BTreeMap::new();
        for (slot, mats) in actions {
            if mats.len() != base.dim() {
                return Err(Error::Dimension(format!(
                    "action {slot} has {} matrices for a {}-dimensional algebra",
                    mats.len(),
                    base.dim()
                )));
            }
            tensors.insert(slot, Tensor3::from_action_matrices(mdim, &mats)?);
        }
        ActionFamily::new(base, kind, beta1, beta2, tensors)
    }

    pub fn base(&self) -> &StructuredAlgebra {
        &self.base
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn beta1(&self) -> &Matrix {
        &self.beta1
    }

    pub fn beta2(&self) -> &Matrix {
        &self.beta2
    }

    pub fn actions(&self) -> &BTreeMap<ActionSlot, Tensor3> {
        &self.actions
    }

    pub fn action(&self, slot: ActionSlot) -> Option<&Tensor3> {
        self.actions.get(&slot)
    }

    pub fn require(&self, slot: ActionSlot) -> Result<&Tensor3> {
        self.action(slot)
            .ok_or_else(|| Error::MissingSlot { slot: slot.name().into(), what: format!("a {} module", self.kind) })
    }

    /// The operator of `slot` at the basis vector `e_i`.
    pub fn action_matrix(&self, slot: ActionSlot, i: usize) -> Result<Matrix> {
        Ok(self.require(slot)?.action_matrix(i))
    }

    pub(crate) fn module_space(&self) -> Space<'_> {
        Space { dim: self.mdim, maps: [&self.beta1, &self.beta2], products: None, map_name: "beta" }
    }

    pub fn context(&self) -> Context<'_> {
        Context {
            spaces: [space(&self.base), self.module_space()],
            actions: [Some(&self.actions), None],
            operator: None,
        }
    }
}

pub(crate) fn module_catalog(kind: Kind) -> Option<&'static str> {
    Some(match kind {
        Kind::Associative => "assoc_bimodule",
        Kind::Lie => "lie_representation",
        Kind::PreLie => "pre_lie_bimodule",
        Kind::Dendriform => "dendriform_bimodule",
        Kind::NcPoisson => "poisson_representation",
        Kind::NcPrePoisson => "pre_poisson_bimodule",
        Kind::Raw => return None,
    })
}

/// Check the family against the module axioms of `kind`.
pub fn check_module_as(m: &ActionFamily, kind: Kind) -> Result<CheckReport> {
    let Some(name) = module_catalog(kind) else {
        return Ok(CheckReport::default());
    };
    for slot in kind.action_slots() {
        m.require(*slot)?;
    }
    run_catalog(catalog(name), &m.context(), |_| true)
}

pub fn check_module(m: &ActionFamily) -> Result<CheckReport> {
    check_module_as(m, m.kind)
}

pub fn check_assoc_bimodule(m: &ActionFamily) -> Result<CheckReport> {
    check_module_as(m, Kind::Associative)
}

pub fn check_lie_rep(m: &ActionFamily) -> Result<CheckReport> {
    check_module_as(m, Kind::Lie)
}

pub fn check_prelie_bimodule(m: &ActionFamily) -> Result<CheckReport> {
    check_module_as(m, Kind::PreLie)
}

pub fn check_dendriform_bimodule(m: &ActionFamily) -> Result<CheckReport> {
    check_module_as(m, Kind::Dendriform)
}

pub fn check_poisson_rep(m: &ActionFamily) -> Result<CheckReport> {
    check_module_as(m, Kind::NcPoisson)
}

pub fn check_prepoisson_bimodule(m: &ActionFamily) -> Result<CheckReport> {
    check_module_as(m, Kind::NcPrePoisson)
}

fn require_module(m: &ActionFamily, what: &str) -> Result<()> {
    let r = check_module(m)?;
    if r.passed() { Ok(()) } else { Err(Error::check_failed(what, module_catalog(m.kind).unwrap_or("module"), r)) }
}

/// The algebra acting on itself by its own products, with `beta = alpha`.
pub fn regular_bimodule(alg: &StructuredAlgebra) -> Result<ActionFamily> {
    let kind = alg.kind();
    if kind == Kind::Raw {
        return Err(Error::Kind("the regular bimodule needs a classified algebra".into()));
    }
    let mut actions = BTreeMap::new();
    for slot in kind.slots() {
        let t = alg.require(*slot)?;
        let (l, r) = slot.action_pair();
        actions.insert(l, t.clone());
        if *slot != Slot::Bracket {
            actions.insert(r, t.swap_arguments());
        }
    }
    ActionFamily::new(alg.clone(), kind, alg.alpha1().clone(), alg.alpha2().clone(), actions)
}

/// The structure on `A + V` whose restriction to `A` is the base and whose
/// mixed products are the actions. Validates the module first.
pub fn semidirect_product(m: &ActionFamily) -> Result<StructuredAlgebra> {
    require_module(m, "module")?;
    semidirect_product_unchecked(m)
}

/// [`semidirect_product`] without validating the module axioms.
pub fn semidirect_product_unchecked(m: &ActionFamily) -> Result<StructuredAlgebra> {
    if m.kind == Kind::Raw {
        return Err(Error::Kind("the semidirect product needs a classified module".into()));
    }
    let products = sum_products(m.kind, space(&m.base), m.module_space(), Some(&m.actions), None)?;
    StructuredAlgebra::new(
        m.kind,
        Matrix::block_diag(m.base.alpha1(), &m.beta1),
        Matrix::block_diag(m.base.alpha2(), &m.beta2),
        products,
    )
}

fn expect_kind(m: &ActionFamily, kind: Kind, what: &str) -> Result<()> {
    if m.kind != kind {
        return Err(Error::Kind(format!("{what} needs a {kind} module, got {}", m.kind)));
    }
    Ok(())
}

/// `rho(x) = l*(x) - r*(alpha1 alpha2^-1 x) beta1^-1 beta2` over the
/// subadjacent Lie algebra.
pub fn induced_lie_rep_from_prelie(m: &ActionFamily) -> Result<ActionFamily> {
    expect_kind(m, Kind::PreLie, "the induced representation")?;
    require_module(m, "module")?;
    let base = subadjacent_lie(&m.base)?;
    let rho = induced_rho(m)?;
    ActionFamily::new(base, Kind::Lie, m.beta1.clone(), m.beta2.clone(), BTreeMap::from([(ActionSlot::Rho, rho)]))
}

fn induced_rho(m: &ActionFamily) -> Result<Tensor3> {
    let (_, a2i) = m.base.inverse_maps()?;
    let b1i = m.beta1.inverse().map_err(|_| Error::Singular("beta1 is not invertible".into()))?;
    m.beta2.inverse().map_err(|_| Error::Singular("beta2 is not invertible".into()))?;
    let q = m.base.alpha1() * &a2i;
    let s = &b1i * &m.beta2;
    Ok(m.require(ActionSlot::LStar)?.sub(&m.require(ActionSlot::RStar)?.precompose(&q, &s)))
}

fn summed(m: &ActionFamily) -> Result<(Tensor3, Tensor3)> {
    let l = m.require(ActionSlot::LPrec)?.add(m.require(ActionSlot::LSucc)?);
    let r = m.require(ActionSlot::RPrec)?.add(m.require(ActionSlot::RSucc)?);
    Ok((l, r))
}

/// `l = l_prec + l_succ`, `r = r_prec + r_succ` over the dendriform sum.
pub fn induced_assoc_bimodule_from_dendriform(m: &ActionFamily) -> Result<ActionFamily> {
    expect_kind(m, Kind::Dendriform, "the induced bimodule")?;
    require_module(m, "module")?;
    let (l, r) = summed(m)?;
    ActionFamily::new(
        dendriform_sum(&m.base)?,
        Kind::Associative,
        m.beta1.clone(),
        m.beta2.clone(),
        BTreeMap::from([(ActionSlot::L, l), (ActionSlot::R, r)]),
    )
}

/// Both inductions at once over the subadjacent Poisson algebra.
pub fn induced_poisson_rep_from_prepoisson(m: &ActionFamily) -> Result<ActionFamily> {
    expect_kind(m, Kind::NcPrePoisson, "the induced representation")?;
    require_module(m, "module")?;
    let (l, r) = summed(m)?;
    let rho = induced_rho(m)?;
    ActionFamily::new(
        prepoisson_subadjacent(&m.base)?,
        Kind::NcPoisson,
        m.beta1.clone(),
        m.beta2.clone(),
        BTreeMap::from([(ActionSlot::L, l), (ActionSlot::R, r), (ActionSlot::Rho, rho)]),
    )
}

/// Every action operator and both betas replaced by their transposes.
pub fn transpose_family(m: &ActionFamily) -> Result<ActionFamily> {
    let actions = m
        .actions
        .iter()
        .map(|(s, t)| {
            let mats: Vec<Matrix> = t.action_matrices().iter().map(Matrix::transpose).collect();
            Ok((*s, Tensor3::from_action_matrices(m.mdim, &mats)?))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    ActionFamily::new(m.base.clone(), m.kind, m.beta1.transpose(), m.beta2.transpose(), actions)
}

/// The pre-Poisson compatibility conditions evaluated on the transposed
/// family.
pub fn dual_bimodule_report(m: &ActionFamily) -> Result<CheckReport> {
    expect_kind(m, Kind::NcPrePoisson, "the dual bimodule")?;
    let dual = transpose_family(m)?;
    run_catalog(catalog("pre_poisson_bimodule"), &dual.context(), |a| a.name.starts_with("prepoissonmod."))
}

/// The transposed family on the dual space, provided the compatibility
/// conditions hold for it.
pub fn dual_bimodule(m: &ActionFamily) -> Result<ActionFamily> {
    let r = dual_bimodule_report(m)?;
    if !r.passed() {
        return Err(Error::check_failed("dual family", "pre-Poisson compatibility", r));
    }
    transpose_family(m)
}

/// Twist a module by morphisms `a1p`, `a2p` of the base and maps `b1p`,
/// `b2p` of the module: left actions become `s(a1p x) b2p`, right actions
/// `s(a2p x) b1p`, and the module maps `beta_i b_ip`.
pub fn twist_bimodule(m: &ActionFamily, a1p: &Matrix, a2p: &Matrix, b1p: &Matrix, b2p: &Matrix) -> Result<ActionFamily> {
    let base = yau_twist(&m.base, a1p, a2p)?;
    let n = m.mdim;
    for b in [b1p, b2p] {
        if b.rows() != n || b.cols() != n {
            return Err(Error::Dimension(format!("module twisting map must be {n}x{n}")));
        }
    }
    for (x, y, what) in [
        (b1p, b2p, "module twisting maps"),
        (b1p, &m.beta1, "first module twisting map and beta1"),
        (b1p, &m.beta2, "first module twisting map and beta2"),
        (b2p, &m.beta1, "second module twisting map and beta1"),
        (b2p, &m.beta2, "second module twisting map and beta2"),
    ] {
        if !x.commutes_with(y) {
            return Err(Error::NoncommutingMaps(format!("{what} do not commute")));
        }
    }
    let mut report = CheckReport::default();
    for (slot, t) in &m.actions {
        for (k, (ap, bp)) in [(a1p, b1p), (a2p, b2p)].into_iter().enumerate() {
            let name = format!("twist.intertwine.{}.{slot}", k + 1);
            report.mark_checked(&name);
            for i in 0..m.base.dim() {
                let lhs = bp * &t.action_matrix(i);
                let rhs = &t.apply_matrix(&ap.column(i)) * bp;
                let d = &lhs - &rhs;
                if !d.is_zero() {
                    let flat = d.to_rows().into_iter().flatten().collect();
                    report.record_one(&name, &["x"], vec![i], flat);
                }
            }
        }
    }
    if !report.passed() {
        return Err(Error::check_failed("module twisting maps", "intertwining", report));
    }
    let actions = m
        .actions
        .iter()
        .map(|(s, t)| (*s, if s.is_right() { t.precompose(a2p, b1p) } else { t.precompose(a1p, b2p) }))
        .collect();
    ActionFamily::new(base, m.kind, &m.beta1 * b1p, &m.beta2 * b2p, actions)
}
