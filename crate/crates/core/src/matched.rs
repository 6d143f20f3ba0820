//! Matched pairs: two algebras of one class acting on each other so that
//! their direct sum carries the class structure.

use std::collections::BTreeMap;

use crate::algebra::{ActionSlot, Kind, Slot, StructuredAlgebra};
use crate::check::{algebra_catalog, check_algebra, space};
use crate::identity::{catalog, run_catalog, CheckReport, Context, Space};
use crate::linalg::{basis_vector, Matrix, Scalar, Tensor3};
use crate::modules::{check_module, ActionFamily};
use crate::{Error, Result};

/// `a_on_b` is a family over `alg_a` on the space of `alg_b` with
/// `beta = (alg_b.alpha1, alg_b.alpha2)`, and symmetrically for `b_on_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    kind: Kind,
    a_on_b: ActionFamily,
    b_on_a: ActionFamily,
}

impl MatchedPair {
    pub fn new(
        kind: Kind,
        alg_a: StructuredAlgebra,
        alg_b: StructuredAlgebra,
        a_on_b: BTreeMap<ActionSlot, Tensor3>,
        b_on_a: BTreeMap<ActionSlot, Tensor3>,
    ) -> Result<Self> {
        if kind == Kind::Raw {
            return Err(Error::Kind("a matched pair needs a classified kind".into()));
        }
        let (b1, b2) = (alg_b.alpha1().clone(), alg_b.alpha2().clone());
        let (a1, a2) = (alg_a.alpha1().clone(), alg_a.alpha2().clone());
        let a_on_b = ActionFamily::new(alg_a.clone(), kind, b1, b2, a_on_b)?;
        let b_on_a = ActionFamily::new(alg_b, kind, a1, a2, b_on_a)?;
        Ok(MatchedPair { kind, a_on_b, b_on_a })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn alg_a(&self) -> &StructuredAlgebra {
        self.a_on_b.base()
    }

    pub fn alg_b(&self) -> &StructuredAlgebra {
        self.b_on_a.base()
    }

    pub fn a_on_b(&self) -> &ActionFamily {
        &self.a_on_b
    }

    pub fn b_on_a(&self) -> &ActionFamily {
        &self.b_on_a
    }

    pub fn context(&self) -> Context<'_> {
        Context {
            spaces: [space(self.alg_a()), space(self.alg_b())],
            actions: [Some(self.a_on_b.actions()), Some(self.b_on_a.actions())],
            operator: None,
        }
    }
}

/// Class checks of both algebras and module checks of both families.
pub fn matched_pair_prerequisites(p: &MatchedPair) -> Result<CheckReport> {
    let mut r = check_algebra(p.alg_a())?.prefixed("prereq.alg_a");
    r.merge(check_algebra(p.alg_b())?.prefixed("prereq.alg_b"));
    r.merge(check_module(&p.a_on_b)?.prefixed("prereq.a_on_b"));
    r.merge(check_module(&p.b_on_a)?.prefixed("prereq.b_on_a"));
    Ok(r)
}

/// The compatibility conditions. A prerequisite failure is returned as
/// [`Error::CheckFailed`] with the prerequisite report.
pub fn check_matched_pair(p: &MatchedPair) -> Result<CheckReport> {
    let pre = matched_pair_prerequisites(p)?;
    if !pre.passed() {
        return Err(Error::check_failed("matched pair", "prerequisite", pre));
    }
    check_matched_compatibility(p)
}

/// The compatibility conditions alone, without prerequisites.
pub fn check_matched_compatibility(p: &MatchedPair) -> Result<CheckReport> {
    let name = format!("matched_{}", algebra_catalog(p.kind).expect("classified kind"));
    run_catalog(catalog(&name), &p.context(), |_| true)
}

/// The direct sum `A + B` with the matched-pair products. Validates the
/// pair first.
pub fn bowtie_sum(p: &MatchedPair) -> Result<StructuredAlgebra> {
    let r = check_matched_pair(p)?;
    if !r.passed() {
        return Err(Error::check_failed("matched pair", "compatibility", r));
    }
    bowtie_sum_unchecked(p)
}

/// [`bowtie_sum`] without validation.
pub fn bowtie_sum_unchecked(p: &MatchedPair) -> Result<StructuredAlgebra> {
    let (a, b) = (p.alg_a(), p.alg_b());
    let products = sum_products(p.kind, space(a), space(b), Some(p.a_on_b.actions()), Some(p.b_on_a.actions()))?;
    StructuredAlgebra::new(
        p.kind,
        Matrix::block_diag(a.alpha1(), b.alpha1()),
        Matrix::block_diag(a.alpha2(), b.alpha2()),
        products,
    )
}

type Actions<'a> = Option<&'a BTreeMap<ActionSlot, Tensor3>>;

fn act(actions: Actions<'_>, slot: ActionSlot, x: &[Scalar], v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    match actions {
        None => Ok(None),
        Some(map) => map
            .get(&slot)
            .map(|t| Some(t.apply(x, v)))
            .ok_or_else(|| Error::MissingSlot { slot: slot.name().into(), what: "a direct-sum product".into() }),
    }
}

fn inv(m: &Matrix, name: &str) -> Result<Matrix> {
    m.inverse().map_err(|_| Error::Singular(format!("{name} is not invertible")))
}

/// Products of `a + b` for `kind`: same-sort pairs use the sort's own
/// product (zero when absent), mixed pairs the actions. Absent action
/// maps count as zero.
pub(crate) fn sum_products(
    kind: Kind,
    a: Space<'_>,
    b: Space<'_>,
    ab: Actions<'_>,
    ba: Actions<'_>,
) -> Result<BTreeMap<Slot, Tensor3>> {
    let (da, db) = (a.dim, b.dim);
    let n = da + db;
    let ea = |i| basis_vector(da, i);
    let eb = |i| basis_vector(db, i);
    let mut out = BTreeMap::new();
    for &slot in kind.slots() {
        let mut t = Tensor3::cube(n);
        let pa = a
            .products
            .and_then(|p| p.get(&slot))
            .ok_or_else(|| Error::MissingSlot { slot: slot.name().into(), what: "the primary summand".into() })?;
        let pb = b.products.and_then(|p| p.get(&slot));
        let mut put = |i: usize, j: usize, off: usize, v: &[Scalar]| {
            for (k, e) in v.iter().enumerate() {
                if !e.is_zero() {
                    let cur = t.get(i, j, off + k) + e;
                    t.set(i, j, off + k, cur);
                }
            }
        };
        for i in 0..da {
            for j in 0..da {
                put(i, j, 0, pa.fibre(i, j));
            }
        }
        if let Some(pb) = pb {
            for i in 0..db {
                for j in 0..db {
                    put(da + i, da + j, da, pb.fibre(i, j));
                }
            }
        }
        if slot == Slot::Bracket {
            // [x, u] = rho(x) u - rho(alpha1^-1 alpha2 u) alpha1 alpha2^-1 x, in both directions
            let rho = ActionSlot::Rho;
            let ab_twist = match ab {
                Some(_) => Some((&inv(a.maps[0], "alpha1")? * a.maps[1], b.maps[0] * &inv(b.maps[1], "beta2")?)),
                None => None,
            };
            let ba_twist = match ba {
                Some(_) => Some((&inv(b.maps[0], "beta1")? * b.maps[1], a.maps[0] * &inv(a.maps[1], "alpha2")?)),
                None => None,
            };
            for i in 0..da {
                for j in 0..db {
                    let (x, u) = (ea(i), eb(j));
                    if let Some(v) = act(ab, rho, &x, &u)? {
                        put(i, da + j, da, &v);
                    }
                    if let Some((p, q)) = &ba_twist {
                        if let Some(v) = act(ba, rho, &p.apply(&u), &q.apply(&x))? {
                            put(i, da + j, 0, &neg(&v));
                        }
                    }
                    // [u, x]
                    if let Some(v) = act(ba, rho, &u, &x)? {
                        put(da + j, i, 0, &v);
                    }
                    if let Some((p, q)) = &ab_twist {
                        if let Some(v) = act(ab, rho, &p.apply(&x), &q.apply(&u))? {
                            put(da + j, i, da, &neg(&v));
                        }
                    }
                }
            }
        } else {
            // x u = l(x) u + r(u) x
            let (ls, rs) = slot.action_pair();
            for i in 0..da {
                for j in 0..db {
                    let (x, u) = (ea(i), eb(j));
                    if let Some(v) = act(ab, ls, &x, &u)? {
                        put(i, da + j, da, &v);
                    }
                    if let Some(v) = act(ba, rs, &u, &x)? {
                        put(i, da + j, 0, &v);
                    }
                    if let Some(v) = act(ba, ls, &u, &x)? {
                        put(da + j, i, 0, &v);
                    }
                    if let Some(v) = act(ab, rs, &x, &u)? {
                        put(da + j, i, da, &v);
                    }
                }
            }
        }
        out.insert(slot, t);
    }
    Ok(out)
}

fn neg(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|e| -e).collect()
}

/// Split an algebra along the coordinate decomposition
/// `span(e_1..e_k) + span(e_k+1..e_n)`. Both spans must be subalgebras
/// and both structure maps block diagonal. The bowtie sum of the result
/// reproduces `c` exactly when `c` is skew-symmetric in its bracket, if
/// it has one.
pub fn split_matched_pair(c: &StructuredAlgebra, k: usize) -> Result<MatchedPair> {
    let kind = c.kind();
    let n = c.dim();
    if kind == Kind::Raw || k > n {
        return Err(Error::Precondition("split needs a classified algebra and k <= dim".into()));
    }
    let block = |m: &Matrix, r0: usize, c0: usize, r: usize, cc: usize| {
        let mut out = Matrix::zeros(r, cc);
        for i in 0..r {
            for j in 0..cc {
                out.set(i, j, m.get(r0 + i, c0 + j).clone());
            }
        }
        out
    };
    for m in c.maps() {
        if !block(m, 0, k, k, n - k).is_zero() || !block(m, k, 0, n - k, k).is_zero() {
            return Err(Error::Precondition("structure maps are not block diagonal".into()));
        }
    }
    let sub = |lo: usize, hi: usize| -> Result<StructuredAlgebra> {
        let d = hi - lo;
        let mut products = BTreeMap::new();
        for (slot, t) in c.products() {
            let mut s = Tensor3::cube(d);
            for i in 0..d {
                for j in 0..d {
                    for (pos, e) in t.fibre(lo + i, lo + j).iter().enumerate() {
                        if (lo..hi).contains(&pos) {
                            s.set(i, j, pos - lo, e.clone());
                        } else if !e.is_zero() {
                            return Err(Error::Precondition("summand is not a subalgebra".into()));
                        }
                    }
                }
            }
            products.insert(*slot, s);
        }
        StructuredAlgebra::new(kind, block(c.alpha1(), lo, lo, d, d), block(c.alpha2(), lo, lo, d, d), products)
    };
    let alg_a = sub(0, k)?;
    let alg_b = sub(k, n)?;
    let (da, db) = (k, n - k);
    let part = |v: &[Scalar], lo: usize, d: usize| v[lo..lo + d].to_vec();
    let mut ab: BTreeMap<ActionSlot, Vec<Vec<Vec<Scalar>>>> = BTreeMap::new();
    let mut ba: BTreeMap<ActionSlot, Vec<Vec<Vec<Scalar>>>> = BTreeMap::new();
    let init = |map: &mut BTreeMap<ActionSlot, Vec<Vec<Vec<Scalar>>>>, s: ActionSlot, d0: usize, d1: usize, d2: usize| {
        map.entry(s).or_insert_with(|| vec![vec![vec![Scalar::zero(); d2]; d1]; d0]);
    };
    for (slot, t) in c.products() {
        let (ls, rs) = slot.action_pair();
        init(&mut ab, ls, da, db, db);
        init(&mut ba, ls, db, da, da);
        init(&mut ab, rs, da, db, db);
        init(&mut ba, rs, db, da, da);
        for i in 0..da {
            for j in 0..db {
                let xu = t.fibre(i, k + j);
                let ux = t.fibre(k + j, i);
                ab.get_mut(&ls).expect("initialised")[i][j] = part(xu, k, db);
                if *slot == Slot::Bracket {
                    ba.get_mut(&ls).expect("initialised")[j][i] = part(ux, 0, da);
                } else {
                    ba.get_mut(&rs).expect("initialised")[j][i] = part(xu, 0, da);
                    ba.get_mut(&ls).expect("initialised")[j][i] = part(ux, 0, da);
                    ab.get_mut(&rs).expect("initialised")[i][j] = part(ux, k, db);
                }
            }
        }
    }
    let to_tensors = |m: BTreeMap<ActionSlot, Vec<Vec<Vec<Scalar>>>>| -> Result<BTreeMap<ActionSlot, Tensor3>> {
        m.into_iter().map(|(s, v)| Ok((s, Tensor3::from_nested(v)?))).collect()
    };
    let mut ab = to_tensors(ab)?;
    let mut ba = to_tensors(ba)?;
    // Empty summands produce tensors with collapsed dimensions.
    for (map, d0, d1) in [(&mut ab, da, db), (&mut ba, db, da)] {
        for t in map.values_mut() {
            if t.dims() != (d0, d1, d1) {
                *t = Tensor3::zeros(d0, d1, d1);
            }
        }
    }
    MatchedPair::new(kind, alg_a, alg_b, ab, ba)
}
