use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::{Axiom, Catalog, CheckReport, MapPower, Node, Sort, Violation};
use crate::algebra::{ActionSlot, Slot};
use crate::linalg::{axpy, Matrix, Scalar, Tensor3};
use crate::{Error, Result};

/// One sort of an evaluation context.
#[derive(Clone, Copy, Debug)]
pub struct Space<'a> {
    pub dim: usize,
    pub maps: [&'a Matrix; 2],
    pub products: Option<&'a BTreeMap<Slot, Tensor3>>,
    /// Prefix of the map names in error messages, `alpha` or `beta`.
    pub map_name: &'static str,
}

static EMPTY: Matrix = Matrix::EMPTY;

impl<'a> Space<'a> {
    pub fn empty() -> Space<'static> {
        Space { dim: 0, maps: [&EMPTY, &EMPTY], products: None, map_name: "beta" }
    }
}

/// Data an identity is evaluated against.
///
/// `actions[0]` holds the actions of the primary sort on the secondary
/// sort, `actions[1]` the reverse direction.
#[derive(Clone, Copy, Debug)]
pub struct Context<'a> {
    pub spaces: [Space<'a>; 2],
    pub actions: [Option<&'a BTreeMap<ActionSlot, Tensor3>>; 2],
    pub operator: Option<&'a Matrix>,
}

enum Op<'a> {
    Leaf { map: usize, var: usize },
    Apply { map: usize, child: Box<Op<'a>> },
    Bilinear { t: &'a Tensor3, left: Box<Op<'a>>, right: Box<Op<'a>> },
}

struct Compiled<'a> {
    maps: Vec<Matrix>,
    columns: Vec<Vec<Vec<Scalar>>>,
    lhs: Vec<(Scalar, Op<'a>)>,
    rhs: Vec<(Scalar, Op<'a>)>,
    value_dim: usize,
}

struct Compiler<'c, 'a> {
    ctx: &'c Context<'a>,
    axiom: &'c Axiom,
    maps: Vec<Matrix>,
    index: HashMap<(Sort, MapPower), usize>,
    operator: Option<usize>,
}

impl<'c, 'a> Compiler<'c, 'a> {
    fn missing(&self, what: String) -> Error {
        Error::MissingSlot { slot: what, what: format!("axiom {}", self.axiom.name) }
    }

    fn power(&mut self, sort: Sort, p: MapPower) -> Result<usize> {
        if let Some(&i) = self.index.get(&(sort, p)) {
            return Ok(i);
        }
        let space = &self.ctx.spaces[sort.index()];
        let mut m = Matrix::identity(space.dim);
        for (k, e) in [(0, p.a1), (1, p.a2)] {
            if e != 0 {
                let f = space.maps[k].pow(e as i64).map_err(|_| {
                    Error::Singular(format!(
                        "{}{} is not invertible, required by axiom {}",
                        space.map_name,
                        k + 1,
                        self.axiom.name
                    ))
                })?;
                m = &m * &f;
            }
        }
        let i = self.maps.len();
        self.maps.push(m);
        self.index.insert((sort, p), i);
        Ok(i)
    }

    fn compile(&mut self, node: &Node) -> Result<(Op<'a>, Sort)> {
        let vars = &self.axiom.variables;
        Ok(match node {
            Node::Var { index, power } => {
                let sort = vars[*index].sort;
                (Op::Leaf { map: self.power(sort, *power)?, var: *index }, sort)
            }
            Node::Maps { power, child } => {
                let (c, sort) = self.compile(child)?;
                (Op::Apply { map: self.power(sort, *power)?, child: Box::new(c) }, sort)
            }
            Node::T(child) => {
                let (c, _) = self.compile(child)?;
                let t = self.ctx.operator.ok_or_else(|| self.missing("operator T".into()))?;
                let map = *self.operator.get_or_insert_with(|| {
                    self.maps.push(t.clone());
                    self.maps.len() - 1
                });
                (Op::Apply { map, child: Box::new(c) }, Sort::Primary)
            }
            Node::Product { slot, left, right } => {
                let (l, sort) = self.compile(left)?;
                let (r, _) = self.compile(right)?;
                let t = self.ctx.spaces[sort.index()]
                    .products
                    .and_then(|p| p.get(slot))
                    .ok_or_else(|| self.missing(format!("product {slot}")))?;
                (Op::Bilinear { t, left: Box::new(l), right: Box::new(r) }, sort)
            }
            Node::Action { slot, actor, target } => {
                let (a, sort) = self.compile(actor)?;
                let (v, target_sort) = self.compile(target)?;
                let t = self.ctx.actions[sort.index()]
                    .and_then(|p| p.get(slot))
                    .ok_or_else(|| self.missing(format!("action {slot}")))?;
                (Op::Bilinear { t, left: Box::new(a), right: Box::new(v) }, target_sort)
            }
        })
    }
}

fn compile<'a>(ctx: &Context<'a>, axiom: &Axiom) -> Result<Compiled<'a>> {
    let mut c = Compiler { ctx, axiom, maps: Vec::new(), index: HashMap::new(), operator: None };
    let value_sort = axiom.value_sort()?.unwrap_or(Sort::Primary);
    let mut side = |terms: &[super::Term]| -> Result<Vec<(Scalar, Op<'a>)>> {
        terms.iter().map(|t| Ok((t.coeff.clone(), c.compile(&t.node)?.0))).collect()
    };
    let lhs = side(&axiom.lhs)?;
    let rhs = side(&axiom.rhs)?;
    let columns = c.maps.iter().map(|m| (0..m.cols()).map(|j| m.column(j)).collect()).collect();
    Ok(Compiled { maps: c.maps, columns, lhs, rhs, value_dim: ctx.spaces[value_sort.index()].dim })
}

impl Compiled<'_> {
    fn eval(&self, op: &Op<'_>, binding: &[usize]) -> Vec<Scalar> {
        match op {
            Op::Leaf { map, var } => self.columns[*map][binding[*var]].clone(),
            Op::Apply { map, child } => self.maps[*map].apply(&self.eval(child, binding)),
            Op::Bilinear { t, left, right } => t.apply(&self.eval(left, binding), &self.eval(right, binding)),
        }
    }

    fn residual(&self, binding: &[usize]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.value_dim];
        for (k, op) in &self.lhs {
            axpy(&mut out, k, &self.eval(op, binding));
        }
        for (k, op) in &self.rhs {
            axpy(&mut out, &-k, &self.eval(op, binding));
        }
        out
    }
}

/// Decode a tuple index; the last variable varies fastest.
fn decode(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

/// Evaluate the selected axioms of a catalog on every tuple of basis
/// vectors.
pub fn run_catalog(catalog: &Catalog, ctx: &Context<'_>, select: impl Fn(&Axiom) -> bool) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for axiom in catalog.axioms.iter().filter(|a| select(a)) {
        let compiled = compile(ctx, axiom)?;
        let dims: Vec<usize> = axiom.variables.iter().map(|v| ctx.spaces[v.sort.index()].dim).collect();
        let total: usize = dims.iter().product();
        let names: Vec<String> = axiom.variables.iter().map(|v| v.name.clone()).collect();
        let found: Vec<(Vec<usize>, Vec<Scalar>)> = (0..total)
            .into_par_iter()
            .filter_map(|idx| {
                let binding = decode(idx, &dims);
                let r = compiled.residual(&binding);
                if r.iter().all(Scalar::is_zero) { None } else { Some((binding, r)) }
            })
            .collect();
        report.record(
            &axiom.name,
            found.into_iter().map(|(witness, residual)| Violation {
                axiom: axiom.name.clone(),
                variables: names.clone(),
                witness,
                residual,
            }),
        );
    }
    Ok(report)
}
