//! Shared test support: direct-expansion oracles and seeded generators.
//!
//! The oracles evaluate each class's defining identities with plain loops
//! over basis vectors. They share no code with the catalog evaluator
//! beyond `Scalar`, `Matrix::get` and `Tensor3::get`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use bihom::algebra::{ActionSlot, Kind, Slot, StructuredAlgebra};
use bihom::constructions::commutator_poisson;
use bihom::linalg::{Matrix, Scalar, Tensor3};
use bihom::matched::{bowtie_sum_unchecked, MatchedPair};
use bihom::modules::{regular_bimodule, ActionFamily};
use bihom::ooperator::{rb_induced_prepoisson, search_rota_baxter, Convention};
use bihom::seeds;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type V = Vec<Scalar>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

// ---------------------------------------------------------------- oracle

fn e(n: usize, i: usize) -> V {
    (0..n).map(|k| if k == i { int(1) } else { int(0) }).collect()
}

fn mat(m: &Matrix, v: &[Scalar]) -> V {
    (0..m.rows())
        .map(|r| {
            let mut acc = int(0);
            for (c, x) in v.iter().enumerate() {
                acc += m.get(r, c) * x;
            }
            acc
        })
        .collect()
}

fn bil(t: &Tensor3, x: &[Scalar], y: &[Scalar]) -> V {
    let mut out = vec![int(0); t.dims().2];
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            let w = xi * yj;
            if w.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += &w * t.get(i, j, k);
            }
        }
    }
    out
}

fn add(a: &[Scalar], b: &[Scalar]) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> V {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg(a: &[Scalar]) -> V {
    a.iter().map(|x| -x).collect()
}

/// Evaluation helpers bound to one algebra.
struct Ev<'a> {
    alg: &'a StructuredAlgebra,
}

impl Ev<'_> {
    fn a1(&self, v: &[Scalar]) -> V {
        mat(self.alg.alpha1(), v)
    }
    fn a2(&self, v: &[Scalar]) -> V {
        mat(self.alg.alpha2(), v)
    }
    fn p(&self, s: Slot, x: &[Scalar], y: &[Scalar]) -> V {
        bil(self.alg.product(s).expect("slot present"), x, y)
    }
    fn dot(&self, x: &[Scalar], y: &[Scalar]) -> V {
        add(&self.p(Slot::Prec, x, y), &self.p(Slot::Succ, x, y))
    }
}

fn all_pairs(n: usize, f: &mut impl FnMut(&V, &V) -> bool) -> bool {
    for i in 0..n {
        for j in 0..n {
            if !f(&e(n, i), &e(n, j)) {
                return false;
            }
        }
    }
    true
}

fn all_triples(n: usize, f: &mut impl FnMut(&V, &V, &V) -> bool) -> bool {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !f(&e(n, i), &e(n, j), &e(n, k)) {
                    return false;
                }
            }
        }
    }
    true
}

fn multiplicative(ev: &Ev<'_>, s: Slot) -> bool {
    all_pairs(ev.alg.dim(), &mut |x, y| {
        ev.a1(&ev.p(s, x, y)) == ev.p(s, &ev.a1(x), &ev.a1(y)) && ev.a2(&ev.p(s, x, y)) == ev.p(s, &ev.a2(x), &ev.a2(y))
    })
}

fn oracle_associative(ev: &Ev<'_>) -> bool {
    let m = Slot::Mul;
    multiplicative(ev, m)
        && all_triples(ev.alg.dim(), &mut |x, y, z| {
            ev.p(m, &ev.a1(x), &ev.p(m, y, z)) == ev.p(m, &ev.p(m, x, y), &ev.a2(z))
        })
}

fn oracle_lie(ev: &Ev<'_>) -> bool {
    let b = Slot::Bracket;
    let jac = |x: &V, y: &V, z: &V| ev.p(b, &ev.a2(&ev.a2(x)), &ev.p(b, &ev.a2(y), &ev.a1(z)));
    multiplicative(ev, b)
        && all_pairs(ev.alg.dim(), &mut |x, y| ev.p(b, &ev.a2(x), &ev.a1(y)) == neg(&ev.p(b, &ev.a2(y), &ev.a1(x))))
        && all_triples(ev.alg.dim(), &mut |x, y, z| {
            add(&add(&jac(x, y, z), &jac(y, z, x)), &jac(z, x, y)).iter().all(Scalar::is_zero)
        })
}

fn oracle_pre_lie(ev: &Ev<'_>) -> bool {
    let s = Slot::Star;
    let assoc = |x: &V, y: &V, z: &V| {
        sub(
            &ev.p(s, &ev.p(s, &ev.a2(x), &ev.a1(y)), &ev.a2(z)),
            &ev.p(s, &ev.a1(&ev.a2(x)), &ev.p(s, &ev.a1(y), z)),
        )
    };
    multiplicative(ev, s) && all_triples(ev.alg.dim(), &mut |x, y, z| assoc(x, y, z) == assoc(y, x, z))
}

fn oracle_dendriform(ev: &Ev<'_>) -> bool {
    let (pr, su) = (Slot::Prec, Slot::Succ);
    multiplicative(ev, pr)
        && multiplicative(ev, su)
        && all_triples(ev.alg.dim(), &mut |x, y, z| {
            ev.p(pr, &ev.p(pr, x, y), &ev.a2(z)) == ev.p(pr, &ev.a1(x), &ev.dot(y, z))
                && ev.p(pr, &ev.p(su, x, y), &ev.a2(z)) == ev.p(su, &ev.a1(x), &ev.p(pr, y, z))
                && ev.p(su, &ev.a1(x), &ev.p(su, y, z)) == ev.p(su, &ev.dot(x, y), &ev.a2(z))
        })
}

fn oracle_poisson(ev: &Ev<'_>) -> bool {
    let (m, b) = (Slot::Mul, Slot::Bracket);
    oracle_associative(ev)
        && oracle_lie(ev)
        && all_triples(ev.alg.dim(), &mut |x, y, z| {
            ev.p(b, &ev.a1(&ev.a2(x)), &ev.p(m, y, z))
                == add(&ev.p(m, &ev.p(b, &ev.a2(x), y), &ev.a2(z)), &ev.p(m, &ev.a2(y), &ev.p(b, &ev.a1(x), z)))
        })
}

fn oracle_pre_poisson(ev: &Ev<'_>) -> bool {
    let (pr, su, st) = (Slot::Prec, Slot::Succ, Slot::Star);
    let a12 = |v: &V| ev.a1(&ev.a2(v));
    oracle_dendriform(ev)
        && oracle_pre_lie(ev)
        && all_triples(ev.alg.dim(), &mut |x, y, z| {
            // (a2 x * a1 y - a2 y * a1 x) > a2 z = a1a2 x * (a1 y > z) - a1a2 y > (a1 x * z)
            let sb = sub(&ev.p(st, &ev.a2(x), &ev.a1(y)), &ev.p(st, &ev.a2(y), &ev.a1(x)));
            let first = ev.p(su, &sb, &ev.a2(z))
                == sub(&ev.p(st, &a12(x), &ev.p(su, &ev.a1(y), z)), &ev.p(su, &a12(y), &ev.p(st, &ev.a1(x), z)));
            // a2 x < (a1a2 y * a1 z - a2 z * a1^2 y) = a1 a2^2 y * (x < a1 z) - (a2^2 y * x) < a1a2 z
            let inner = sub(&ev.p(st, &a12(y), &ev.a1(z)), &ev.p(st, &ev.a2(z), &ev.a1(&ev.a1(y))));
            let second = ev.p(pr, &ev.a2(x), &inner)
                == sub(
                    &ev.p(st, &a12(&ev.a2(y)), &ev.p(pr, x, &ev.a1(z))),
                    &ev.p(pr, &ev.p(st, &ev.a2(&ev.a2(y)), x), &a12(z)),
                );
            // (a2 x . a1 y) * a1a2 z = (a2 x * a2 z) < a1^2 y + a1a2 x > (a1 y * a1 z)
            let third = ev.p(st, &ev.dot(&ev.a2(x), &ev.a1(y)), &a12(z))
                == add(
                    &ev.p(pr, &ev.p(st, &ev.a2(x), &ev.a2(z)), &ev.a1(&ev.a1(y))),
                    &ev.p(su, &a12(x), &ev.p(st, &ev.a1(y), &ev.a1(z))),
                );
            first && second && third
        })
}

/// Verdict of the direct expansion of the class axioms of `kind`.
pub fn oracle(alg: &StructuredAlgebra, kind: Kind) -> bool {
    let ev = Ev { alg };
    match kind {
        Kind::Associative => oracle_associative(&ev),
        Kind::Lie => oracle_lie(&ev),
        Kind::PreLie => oracle_pre_lie(&ev),
        Kind::Dendriform => oracle_dendriform(&ev),
        Kind::NcPoisson => oracle_poisson(&ev),
        Kind::NcPrePoisson => oracle_pre_poisson(&ev),
        Kind::Raw => true,
    }
}

// ---------------------------------------------------------------- generators

pub const CLASSES: [Kind; 6] =
    [Kind::Associative, Kind::Lie, Kind::PreLie, Kind::Dendriform, Kind::NcPoisson, Kind::NcPrePoisson];

fn entries(vals: &[i64]) -> Vec<Scalar> {
    vals.iter().map(|&v| int(v)).collect()
}

/// Products `P^-1 t(P x, P y)`, maps `P^-1 alpha P`.
pub fn transport(alg: &StructuredAlgebra, p: &Matrix) -> StructuredAlgebra {
    let pi = p.inverse().expect("invertible change of basis");
    let products = alg.products().iter().map(|(s, t)| (*s, t.precompose(p, p).postcompose(&pi))).collect();
    StructuredAlgebra::new(alg.kind(), &(&pi * alg.alpha1()) * p, &(&pi * alg.alpha2()) * p, products).expect("transport")
}

pub fn random_invertible(r: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| r.gen_range(-1..=2)).collect()).collect();
        let m = Matrix::from_int_rows(&rows);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Direct sum with zero mixed products.
pub fn direct_sum(a: &StructuredAlgebra, b: &StructuredAlgebra) -> StructuredAlgebra {
    let zero = |n: usize, m: usize| -> BTreeMap<_, _> {
        a.kind().action_slots().iter().map(|s| (*s, Tensor3::zeros(n, m, m))).collect()
    };
    let p = MatchedPair::new(a.kind(), a.clone(), b.clone(), zero(a.dim(), b.dim()), zero(b.dim(), a.dim())).expect("pair");
    bowtie_sum_unchecked(&p).expect("direct sum")
}

fn restrict(alg: &StructuredAlgebra, kind: Kind) -> StructuredAlgebra {
    alg.restrict(kind, kind.slots()).expect("restriction")
}

/// Verified objects of each class, dimension at most 2.
pub fn pool(kind: Kind) -> Vec<StructuredAlgebra> {
    let assoc = vec![seeds::z1(), seeds::u1(), seeds::a2(), seeds::a2_diag()];
    let poisson = || {
        let mut v: Vec<_> = assoc.iter().map(|a| commutator_poisson(a).expect("regular")).collect();
        v.push(seeds::a2_poisson());
        v
    };
    let pre_poisson = || {
        let p = seeds::a2_poisson();
        let rbs = search_rota_baxter(&p, &entries(&[-1, 0, 1]), 100, false).expect("search");
        let mut v: Vec<_> =
            rbs.iter().map(|r| rb_induced_prepoisson(&p, r, Convention::Canonical).expect("Rota-Baxter")).collect();
        v.push(seeds::a2_prepoisson());
        v
    };
    match kind {
        Kind::Associative => assoc,
        Kind::Lie => {
            let mut v: Vec<_> = poisson().iter().map(|p| restrict(p, Kind::Lie)).collect();
            v.push(seeds::l2());
            v
        }
        Kind::PreLie => {
            let mut v: Vec<_> = pre_poisson().iter().map(|p| restrict(p, Kind::PreLie)).collect();
            v.push(seeds::a2_prelie());
            v
        }
        Kind::Dendriform => pre_poisson().iter().map(|p| restrict(p, Kind::Dendriform)).collect(),
        Kind::NcPoisson => poisson(),
        Kind::NcPrePoisson => pre_poisson(),
        Kind::Raw => vec![],
    }
}

/// A random object of `kind` with dimension at most 3. Roughly a third
/// are transported pool members, a third perturbed ones and a third random
/// small-integer structures.
pub fn random_algebra(r: &mut ChaCha8Rng, kind: Kind, pool: &[StructuredAlgebra]) -> StructuredAlgebra {
    let mode = r.gen_range(0..3);
    if mode == 2 {
        let n = r.gen_range(1..=3);
        let products = kind
            .slots()
            .iter()
            .map(|s| {
                let mut t = Tensor3::cube(n);
                for _ in 0..r.gen_range(0..=3) {
                    t.set(r.gen_range(0..n), r.gen_range(0..n), r.gen_range(0..n), int(r.gen_range(-1..=1)));
                }
                (*s, t)
            })
            .collect();
        let d1 = Matrix::diagonal(&(0..n).map(|_| int(*[1, 1, 2, -1].choose(r).unwrap())).collect::<Vec<_>>());
        let d2 = Matrix::diagonal(&(0..n).map(|_| int(*[1, 1, 3].choose(r).unwrap())).collect::<Vec<_>>());
        return StructuredAlgebra::new(kind, d1, d2, products).expect("random algebra");
    }
    let mut base = pool.choose(r).unwrap().clone();
    if base.dim() == 1 && r.gen_bool(0.5) {
        let other = pool.iter().filter(|a| a.dim() == 2).collect::<Vec<_>>();
        if let Some(b) = other.choose(r) {
            base = direct_sum(&base, b);
        }
    }
    let n = base.dim();
    let mut alg = transport(&base, &random_invertible(r, n));
    if mode == 1 {
        let slot = *kind.slots().choose(r).unwrap();
        let mut products = alg.products().clone();
        let t = products.get_mut(&slot).unwrap();
        let (i, j, k) = (r.gen_range(0..n), r.gen_range(0..n), r.gen_range(0..n));
        let bump = int(*[-1, 1, 2].choose(r).unwrap());
        t.set(i, j, k, t.get(i, j, k) + &bump);
        alg = StructuredAlgebra::new(kind, alg.alpha1().clone(), alg.alpha2().clone(), products).unwrap();
    }
    alg
}

pub fn perturb(r: &mut ChaCha8Rng, actions: &mut BTreeMap<ActionSlot, Tensor3>) {
    let slots: Vec<ActionSlot> = actions.keys().copied().collect();
    let t = actions.get_mut(slots.choose(r).unwrap()).unwrap();
    let (d0, d1, d2) = t.dims();
    let (i, j, k) = (r.gen_range(0..d0), r.gen_range(0..d1), r.gen_range(0..d2));
    t.set(i, j, k, t.get(i, j, k) + &int(*[-1, 1].choose(r).unwrap()));
}

pub fn random_module(r: &mut ChaCha8Rng, base: &StructuredAlgebra) -> ActionFamily {
    let kind = base.kind();
    let n = base.dim();
    match r.gen_range(0..3) {
        0 => regular_bimodule(base).unwrap(),
        1 => {
            let reg = regular_bimodule(base).unwrap();
            let mut actions = reg.actions().clone();
            perturb(r, &mut actions);
            ActionFamily::new(base.clone(), kind, reg.beta1().clone(), reg.beta2().clone(), actions).unwrap()
        }
        _ => {
            let m = r.gen_range(1..=2);
            let mut actions: BTreeMap<_, _> = kind.action_slots().iter().map(|s| (*s, Tensor3::zeros(n, m, m))).collect();
            for _ in 0..r.gen_range(0..=2) {
                perturb(r, &mut actions);
            }
            ActionFamily::new(base.clone(), kind, Matrix::identity(m), Matrix::identity(m), actions).unwrap()
        }
    }
}

pub fn random_pair(r: &mut ChaCha8Rng, kind: Kind, pool: &[StructuredAlgebra]) -> MatchedPair {
    let a = pool.choose(r).unwrap().clone();
    let b = pool.choose(r).unwrap().clone();
    let mut make = |x: &StructuredAlgebra, y: &StructuredAlgebra| -> BTreeMap<ActionSlot, Tensor3> {
        let mut actions: BTreeMap<_, _> =
            kind.action_slots().iter().map(|s| (*s, Tensor3::zeros(x.dim(), y.dim(), y.dim()))).collect();
        if x == y && r.gen_bool(0.5) {
            actions = regular_bimodule(x).unwrap().actions().clone();
        }
        if r.gen_bool(0.4) {
            perturb(r, &mut actions);
        }
        actions
    };
    let ab = make(&a, &b);
    let ba = make(&b, &a);
    MatchedPair::new(kind, a, b, ab, ba).unwrap()
}
