//! Class checkers for algebras, structure-map compatibility and morphisms.

use crate::algebra::{Kind, StructuredAlgebra};
use crate::identity::{catalog, run_catalog, CheckReport, Context, Space};
use crate::linalg::{basis_vector, Matrix, Scalar};
use crate::{Error, Result};

pub(crate) fn algebra_catalog(kind: Kind) -> Option<&'static str> {
    Some(match kind {
        Kind::Associative => "associative",
        Kind::Lie => "lie",
        Kind::PreLie => "pre_lie",
        Kind::Dendriform => "dendriform",
        Kind::NcPoisson => "nc_poisson",
        Kind::NcPrePoisson => "nc_pre_poisson",
        Kind::Raw => return None,
    })
}

pub(crate) fn space(alg: &StructuredAlgebra) -> Space<'_> {
    Space { dim: alg.dim(), maps: alg.maps(), products: Some(alg.products()), map_name: "alpha" }
}

pub fn algebra_context(alg: &StructuredAlgebra) -> Context<'_> {
    Context { spaces: [space(alg), Space::empty()], actions: [None, None], operator: None }
}

/// Check `alg` against the axioms of `kind`, which may differ from the
/// declared kind as long as the needed products are present.
pub fn check_class(alg: &StructuredAlgebra, kind: Kind) -> Result<CheckReport> {
    let Some(name) = algebra_catalog(kind) else {
        return Ok(CheckReport::default());
    };
    for slot in kind.slots() {
        alg.require(*slot)?;
    }
    run_catalog(catalog(name), &algebra_context(alg), |_| true)
}

/// Check against the declared kind.
pub fn check_algebra(alg: &StructuredAlgebra) -> Result<CheckReport> {
    check_class(alg, alg.kind())
}

/// Check against the stricter of the declared kind and `requested`; when
/// neither refines the other both are checked.
pub fn check_with_kind(alg: &StructuredAlgebra, requested: Kind) -> Result<CheckReport> {
    let declared = alg.kind();
    if declared.refines(requested) {
        check_class(alg, declared)
    } else if requested.refines(declared) {
        check_class(alg, requested)
    } else {
        let mut r = check_class(alg, declared)?;
        r.merge(check_class(alg, requested)?);
        Ok(r)
    }
}

pub fn check_bihom_associative(alg: &StructuredAlgebra) -> Result<CheckReport> {
    check_class(alg, Kind::Associative)
}

pub fn check_bihom_lie(alg: &StructuredAlgebra) -> Result<CheckReport> {
    check_class(alg, Kind::Lie)
}

pub fn check_bihom_pre_lie(alg: &StructuredAlgebra) -> Result<CheckReport> {
    check_class(alg, Kind::PreLie)
}

pub fn check_bihom_dendriform(alg: &StructuredAlgebra) -> Result<CheckReport> {
    check_class(alg, Kind::Dendriform)
}

pub fn check_nc_bihom_poisson(alg: &StructuredAlgebra) -> Result<CheckReport> {
    check_class(alg, Kind::NcPoisson)
}

pub fn check_nc_bihom_pre_poisson(alg: &StructuredAlgebra) -> Result<CheckReport> {
    check_class(alg, Kind::NcPrePoisson)
}

/// `alpha1 alpha2 = alpha2 alpha1`, witnessed column by column.
pub fn check_bihom_module(alpha1: &Matrix, alpha2: &Matrix) -> Result<CheckReport> {
    if !alpha1.is_square() || alpha1.rows() != alpha2.rows() || !alpha2.is_square() {
        return Err(Error::Dimension("structure maps must be square of one size".into()));
    }
    let d = &(alpha1 * alpha2) - &(alpha2 * alpha1);
    let mut report = CheckReport::default();
    const AXIOM: &str = "maps.commute";
    report.mark_checked(AXIOM);
    for j in 0..d.cols() {
        let col = d.column(j);
        if col.iter().any(|e| !e.is_zero()) {
            report.record_one(AXIOM, &["x"], vec![j], col);
        }
    }
    Ok(report)
}

/// `f` intertwines the structure maps and every product shared by `src`
/// and `dst`. `f` is `dst.dim x src.dim`.
pub fn check_morphism(f: &Matrix, src: &StructuredAlgebra, dst: &StructuredAlgebra) -> Result<CheckReport> {
    if f.rows() != dst.dim() || f.cols() != src.dim() {
        return Err(Error::Dimension(format!(
            "morphism is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            dst.dim(),
            src.dim()
        )));
    }
    let src_slots: Vec<_> = src.products().keys().collect();
    let dst_slots: Vec<_> = dst.products().keys().collect();
    if src_slots != dst_slots {
        return Err(Error::Kind(format!("slot sets differ: {src_slots:?} and {dst_slots:?}")));
    }
    let mut report = CheckReport::default();
    for (k, (a, b)) in [(src.alpha1(), dst.alpha1()), (src.alpha2(), dst.alpha2())].into_iter().enumerate() {
        let name = format!("morphism.alpha{}", k + 1);
        report.mark_checked(&name);
        let d = &(f * a) - &(b * f);
        for j in 0..d.cols() {
            let col = d.column(j);
            if col.iter().any(|e| !e.is_zero()) {
                report.record_one(&name, &["x"], vec![j], col);
            }
        }
    }
    let images: Vec<Vec<Scalar>> = (0..src.dim()).map(|j| f.column(j)).collect();
    for (slot, t) in src.products() {
        let name = format!("morphism.{slot}");
        report.mark_checked(&name);
        let u = dst.product(*slot).expect("slot sets agree");
        for i in 0..src.dim() {
            for j in 0..src.dim() {
                let lhs = f.apply(&t.apply(&basis_vector(src.dim(), i), &basis_vector(src.dim(), j)));
                let rhs = u.apply(&images[i], &images[j]);
                let r: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                if r.iter().any(|e| !e.is_zero()) {
                    report.record_one(&name, &["x", "y"], vec![i, j], r);
                }
            }
        }
    }
    Ok(report)
}
