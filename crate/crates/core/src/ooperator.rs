//! O-operators, Rota-Baxter operators and the structures they induce.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::algebra::{ActionSlot, Kind, Slot, StructuredAlgebra};
use crate::check::check_algebra;
use crate::constructions::prepoisson_subadjacent;
use crate::identity::{catalog, run_catalog, CheckReport, Context};
use crate::linalg::{basis_vector, Matrix, Scalar, Tensor3};
use crate::modules::{regular_bimodule, ActionFamily};
use crate::{Error, Result};

/// Which of the two readings of the dendriform halves an induced structure
/// uses. Under [`Convention::Canonical`] `u > v = l(T u) v` and
/// `u < v = r(T v) u`; [`Convention::Swapped`] exchanges the two products.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    #[default]
    Canonical,
    Swapped,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Canonical => "canonical",
            Convention::Swapped => "swapped",
        }
    }

    pub fn parse(s: &str) -> Option<Convention> {
        [Convention::Canonical, Convention::Swapped].into_iter().find(|c| c.name() == s)
    }

    fn orient(self, prec: Tensor3, succ: Tensor3) -> [(Slot, Tensor3); 2] {
        match self {
            Convention::Canonical => [(Slot::Prec, prec), (Slot::Succ, succ)],
            Convention::Swapped => [(Slot::Prec, succ), (Slot::Succ, prec)],
        }
    }
}

/// A linear map `T: V -> A` from the module space to the base with
/// `alpha_i T = T beta_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperator {
    module: ActionFamily,
    t: Matrix,
}

impl OOperator {
    pub fn new(module: ActionFamily, t: Matrix) -> Result<Self> {
        let (n, m) = (module.base().dim(), module.mdim());
        if t.rows() != n || t.cols() != m {
            return Err(Error::Dimension(format!("T is {}x{}, expected {n}x{m}", t.rows(), t.cols())));
        }
        let mut report = CheckReport::default();
        for (k, (a, b)) in [(module.base().alpha1(), module.beta1()), (module.base().alpha2(), module.beta2())]
            .into_iter()
            .enumerate()
        {
            let name = format!("operator.alpha{}", k + 1);
            report.mark_checked(&name);
            let d = &(a * &t) - &(&t * b);
            for j in 0..m {
                let col = d.column(j);
                if col.iter().any(|e| !e.is_zero()) {
                    report.record_one(&name, &["u"], vec![j], col);
                }
            }
        }
        if !report.passed() {
            return Err(Error::check_failed("operator T", "structure map compatibility", report));
        }
        Ok(OOperator { module, t })
    }

    pub fn module(&self) -> &ActionFamily {
        &self.module
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    pub fn base(&self) -> &StructuredAlgebra {
        self.module.base()
    }

    pub fn context(&self) -> Context<'_> {
        Context { operator: Some(&self.t), ..self.module.context() }
    }
}

fn operator_catalog(kind: Kind) -> Result<&'static str> {
    match kind {
        Kind::Associative => Ok("o_operator_associative"),
        Kind::Lie => Ok("o_operator_lie"),
        Kind::NcPoisson => Ok("o_operator_poisson"),
        other => Err(Error::Kind(format!("no O-operator equation for {other} modules"))),
    }
}

/// The defining equations on every pair of module basis vectors.
pub fn check_o_operator(o: &OOperator) -> Result<CheckReport> {
    let kind = o.module.kind();
    if kind != o.base().kind() {
        return Err(Error::Kind(format!("a {kind} module over a {} algebra", o.base().kind())));
    }
    run_catalog(catalog(operator_catalog(kind)?), &o.context(), |_| true)
}

fn require_o_operator(o: &OOperator, kind: Kind) -> Result<()> {
    if o.module.kind() != kind {
        return Err(Error::Kind(format!("needs an O-operator on a {kind} module, got {}", o.module.kind())));
    }
    let r = check_o_operator(o)?;
    if r.passed() { Ok(()) } else { Err(Error::check_failed("operator T", "O-operator", r)) }
}

/// `(u, v) -> s(T u) v`.
fn left_induced(s: &Tensor3, t: &Matrix) -> Tensor3 {
    s.precompose(t, &Matrix::identity(s.dims().1))
}

/// `(u, v) -> s(T v) u`.
fn right_induced(s: &Tensor3, t: &Matrix) -> Tensor3 {
    left_induced(s, t).swap_arguments()
}

fn on_module(o: &OOperator, kind: Kind, products: BTreeMap<Slot, Tensor3>) -> Result<StructuredAlgebra> {
    StructuredAlgebra::new(kind, o.module.beta1().clone(), o.module.beta2().clone(), products)
}

fn split_halves(o: &OOperator, conv: Convention) -> Result<[(Slot, Tensor3); 2]> {
    let succ = left_induced(o.module.require(ActionSlot::L)?, &o.t);
    let prec = right_induced(o.module.require(ActionSlot::R)?, &o.t);
    Ok(conv.orient(prec, succ))
}

/// Dendriform structure on the module space.
pub fn o_induced_dendriform(o: &OOperator, conv: Convention) -> Result<StructuredAlgebra> {
    require_o_operator(o, Kind::Associative)?;
    on_module(o, Kind::Dendriform, split_halves(o, conv)?.into_iter().collect())
}

/// Pre-Lie structure `u * v = rho(T u) v` on the module space.
pub fn o_induced_prelie(o: &OOperator) -> Result<StructuredAlgebra> {
    require_o_operator(o, Kind::Lie)?;
    let star = left_induced(o.module.require(ActionSlot::Rho)?, &o.t);
    on_module(o, Kind::PreLie, BTreeMap::from([(Slot::Star, star)]))
}

/// A structure transported to the image of `T`.
///
/// `basis` is `n x r` with independent columns spanning the image and
/// `corestriction` is `r x m` with `basis * corestriction = T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageStructure {
    pub basis: Matrix,
    pub algebra: StructuredAlgebra,
    pub corestriction: Matrix,
}

/// The pre-Poisson structure on the module space and its image under `T`.
pub fn o_induced_prepoisson(o: &OOperator, conv: Convention) -> Result<(StructuredAlgebra, ImageStructure)> {
    require_o_operator(o, Kind::NcPoisson)?;
    for (name, b) in [("beta1", o.module.beta1()), ("beta2", o.module.beta2())] {
        if !b.is_invertible() {
            return Err(Error::Singular(format!("{name} is not invertible")));
        }
    }
    let mut products: BTreeMap<Slot, Tensor3> = split_halves(o, conv)?.into_iter().collect();
    products.insert(Slot::Star, left_induced(o.module.require(ActionSlot::Rho)?, &o.t));
    let v = on_module(o, Kind::NcPrePoisson, products)?;
    let image = image_structure(&v, &o.t)?;
    Ok((v, image))
}

/// Transport of `v` along `t` onto its column space. Fails with
/// [`Error::ImageInconsistent`] when some product involving a kernel
/// vector has nonzero image.
pub fn image_structure(v: &StructuredAlgebra, t: &Matrix) -> Result<ImageStructure> {
    let m = v.dim();
    let (_, pivots) = t.rref();
    let basis = Matrix::from_columns(t.rows(), &pivots.iter().map(|&p| t.column(p)).collect::<Vec<_>>());
    let coords = |w: &[Scalar]| -> Result<Vec<Scalar>> {
        basis.solve_independent(w).ok_or_else(|| Error::ImageInconsistent("vector outside the image".into()))
    };
    let corestriction = Matrix::from_columns(pivots.len(), &(0..m).map(|j| coords(&t.column(j))).collect::<Result<Vec<_>>>()?);
    let kernel = t.kernel_basis();
    for (slot, p) in v.products() {
        for k in &kernel {
            for j in 0..m {
                let e = basis_vector(m, j);
                for (w, side) in [(p.apply(k, &e), "left"), (p.apply(&e, k), "right")] {
                    if t.apply(&w).iter().any(|x| !x.is_zero()) {
                        return Err(Error::ImageInconsistent(format!(
                            "{slot} with a kernel vector as {side} argument and e{} has nonzero image",
                            j + 1
                        )));
                    }
                }
            }
        }
    }
    let r = pivots.len();
    let lift = |a: usize| basis_vector(m, pivots[a]);
    let mut products = BTreeMap::new();
    for (slot, p) in v.products() {
        let mut out = Tensor3::cube(r);
        for a in 0..r {
            for b in 0..r {
                for (k, c) in coords(&t.apply(&p.apply(&lift(a), &lift(b))))?.into_iter().enumerate() {
                    out.set(a, b, k, c);
                }
            }
        }
        products.insert(*slot, out);
    }
    let restrict = |beta: &Matrix| -> Result<Matrix> {
        let cols = (0..r).map(|a| coords(&t.apply(&beta.apply(&lift(a))))).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(r, &cols))
    };
    let algebra = StructuredAlgebra::new(v.kind(), restrict(v.alpha1())?, restrict(v.alpha2())?, products)?;
    Ok(ImageStructure { basis, algebra, corestriction })
}

/// Pre-Poisson structure on the base transported along an invertible `T`:
/// `x > y = T(l(x) T^-1 y)`, `x < y = T(r(y) T^-1 x)`, `x * y = T(rho(x) T^-1 y)`
/// in the canonical convention.
pub fn compatible_prepoisson_from_invertible(o: &OOperator, conv: Convention) -> Result<StructuredAlgebra> {
    require_o_operator(o, Kind::NcPoisson)?;
    let ti = o.t.inverse().map_err(|_| Error::Singular("T is not invertible".into()))?;
    let id = Matrix::identity(o.base().dim());
    let conj = |s: &Tensor3| s.precompose(&id, &ti).postcompose(&o.t);
    let succ = conj(o.module.require(ActionSlot::L)?);
    let prec = conj(o.module.require(ActionSlot::R)?).swap_arguments();
    let mut products: BTreeMap<Slot, Tensor3> = conv.orient(prec, succ).into_iter().collect();
    products.insert(Slot::Star, conj(o.module.require(ActionSlot::Rho)?));
    StructuredAlgebra::new(Kind::NcPrePoisson, o.base().alpha1().clone(), o.base().alpha2().clone(), products)
}

/// The subadjacent Poisson algebra acting on a pre-Poisson algebra by
/// `l = L_succ`, `r = R_prec`, `rho = L_star`, for which the identity is
/// an O-operator.
pub fn regular_prestructure_representation(alg: &StructuredAlgebra) -> Result<ActionFamily> {
    if alg.kind() != Kind::NcPrePoisson {
        return Err(Error::Kind(format!("needs a pre-Poisson algebra, got {}", alg.kind())));
    }
    let base = prepoisson_subadjacent(alg)?;
    let actions = BTreeMap::from([
        (ActionSlot::L, alg.require(Slot::Succ)?.clone()),
        (ActionSlot::R, alg.require(Slot::Prec)?.swap_arguments()),
        (ActionSlot::Rho, alg.require(Slot::Star)?.clone()),
    ]);
    ActionFamily::new(base, Kind::NcPoisson, alg.alpha1().clone(), alg.alpha2().clone(), actions)
}

/// `R` as an O-operator on the regular bimodule. `R` must commute with
/// both structure maps.
pub fn check_rota_baxter(alg: &StructuredAlgebra, r: &Matrix) -> Result<CheckReport> {
    let n = alg.dim();
    if r.rows() != n || r.cols() != n {
        return Err(Error::Dimension(format!("R must be {n}x{n}")));
    }
    for (name, a) in [("alpha1", alg.alpha1()), ("alpha2", alg.alpha2())] {
        if !r.commutes_with(a) {
            return Err(Error::Precondition(format!("R does not commute with {name}")));
        }
    }
    check_o_operator(&OOperator::new(regular_bimodule(alg)?, r.clone())?)
}

/// Pre-Poisson structure `x > y = R(x) y`, `x < y = x R(y)`,
/// `x * y = {R(x), y}` in the canonical convention.
pub fn rb_induced_prepoisson(alg: &StructuredAlgebra, r: &Matrix, conv: Convention) -> Result<StructuredAlgebra> {
    if alg.kind() != Kind::NcPoisson {
        return Err(Error::Kind(format!("needs a Poisson algebra, got {}", alg.kind())));
    }
    let ok = check_algebra(alg)?;
    if !ok.passed() {
        return Err(Error::check_failed("input algebra", "nc_poisson", ok));
    }
    let rb = check_rota_baxter(alg, r)?;
    if !rb.passed() {
        return Err(Error::check_failed("operator R", "Rota-Baxter", rb));
    }
    let id = Matrix::identity(alg.dim());
    let mul = alg.require(Slot::Mul)?;
    let succ = mul.precompose(r, &id);
    let prec = mul.precompose(&id, r);
    let mut products: BTreeMap<Slot, Tensor3> = conv.orient(prec, succ).into_iter().collect();
    products.insert(Slot::Star, alg.require(Slot::Bracket)?.precompose(r, &id));
    StructuredAlgebra::new(Kind::NcPrePoisson, alg.alpha1().clone(), alg.alpha2().clone(), products)
}

/// Number of candidates `|entries|^(dim^2)` enumerated by
/// [`search_rota_baxter`].
pub fn rota_baxter_search_size(dim: usize, entries: usize) -> BigUint {
    BigUint::from(entries).pow((dim * dim) as u32)
}

/// Every `R` with entries from `entries` passing [`check_rota_baxter`],
/// in lexicographic order of the row-major entry sequence, where the
/// entries are ordered as sorted values. Candidates failing the
/// commutation precondition are skipped.
///
/// When the search space exceeds `limit`, fails with
/// [`Error::SearchTooLarge`] unless `truncate` is set, in which case only
/// the first `limit` candidates are examined.
pub fn search_rota_baxter(alg: &StructuredAlgebra, entries: &[Scalar], limit: u64, truncate: bool) -> Result<Vec<Matrix>> {
    let mut values = entries.to_vec();
    values.sort();
    values.dedup();
    let n = alg.dim();
    let cells = n * n;
    let size = rota_baxter_search_size(n, values.len());
    let count = if size > BigUint::from(limit) {
        if !truncate {
            return Err(Error::SearchTooLarge { count: size.to_string(), limit });
        }
        limit
    } else {
        u64::try_from(&size).expect("bounded by limit")
    };
    let k = values.len() as u64;
    let candidate = |mut idx: u64| {
        let mut m = Matrix::zeros(n, n);
        for cell in (0..cells).rev() {
            m.set(cell / n, cell % n, values[(idx % k) as usize].clone());
            idx /= k;
        }
        m
    };
    let found: Vec<Option<Matrix>> = (0..count)
        .into_par_iter()
        .map(|idx| {
            let r = candidate(idx);
            match check_rota_baxter(alg, &r) {
                Ok(rep) if rep.passed() => Ok(Some(r)),
                Ok(_) | Err(Error::Precondition(_)) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}
