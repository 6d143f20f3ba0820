//! Polynomial identities in structure constants and their evaluation.
//!
//! An identity is a list of signed terms on each side. A term is a tree
//! whose leaves are variables decorated by powers of the structure maps
//! and whose internal nodes are products, actions, explicit map powers or
//! the operator `T`. Every identity is multilinear, so checking it on all
//! tuples of basis vectors decides it.

mod catalog;
mod eval;
mod report;

pub use catalog::{catalog, catalog_names, parse_catalog, try_catalog, Catalog};
pub use eval::{run_catalog, Context, Space};
pub use report::{CheckReport, Violation, WITNESS_CAP};

use std::collections::BTreeMap;

use crate::algebra::{ActionSlot, Slot};
use crate::linalg::Scalar;
use crate::{Error, Result};

/// The two sorts of a two-sorted identity: the primary space (an algebra)
/// and the secondary space (a module or a second algebra).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sort {
    Primary,
    Secondary,
}

impl Sort {
    pub fn index(self) -> usize {
        match self {
            Sort::Primary => 0,
            Sort::Secondary => 1,
        }
    }

    pub fn other(self) -> Sort {
        match self {
            Sort::Primary => Sort::Secondary,
            Sort::Secondary => Sort::Primary,
        }
    }
}

/// The map `alpha1^a1 alpha2^a2` of the sort it is applied to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MapPower {
    pub a1: i32,
    pub a2: i32,
}

impl MapPower {
    pub fn new(a1: i32, a2: i32) -> Self {
        MapPower { a1, a2 }
    }

    pub fn is_identity(self) -> bool {
        self.a1 == 0 && self.a2 == 0
    }

    pub fn plus(self, other: MapPower) -> MapPower {
        MapPower { a1: self.a1 + other.a1, a2: self.a2 + other.a2 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Var { index: usize, power: MapPower },
    Maps { power: MapPower, child: Box<Node> },
    /// The operator from the secondary sort to the primary sort.
    T(Box<Node>),
    Product { slot: Slot, left: Box<Node>, right: Box<Node> },
    Action { slot: ActionSlot, actor: Box<Node>, target: Box<Node> },
}

impl Node {
    pub fn sort(&self, vars: &[Variable]) -> Result<Sort> {
        match self {
            Node::Var { index, .. } => Ok(vars[*index].sort),
            Node::Maps { child, .. } => child.sort(vars),
            Node::T(child) => match child.sort(vars)? {
                Sort::Secondary => Ok(Sort::Primary),
                Sort::Primary => Err(ill_sorted("T applied to the primary sort")),
            },
            Node::Product { slot, left, right } => {
                let (l, r) = (left.sort(vars)?, right.sort(vars)?);
                if l != r {
                    return Err(ill_sorted(&format!("product {slot} of different sorts")));
                }
                Ok(l)
            }
            Node::Action { slot, actor, target } => {
                let (a, t) = (actor.sort(vars)?, target.sort(vars)?);
                if a == t {
                    return Err(ill_sorted(&format!("action {slot} within one sort")));
                }
                Ok(t)
            }
        }
    }

    /// Per variable, the map exponents a twist by new maps would attach:
    /// left factors and actors of left actions gain `alpha1`, right factors
    /// gain `alpha2`, and right actions swap the roles.
    pub fn twist_exponents(&self, acc: &mut BTreeMap<usize, Vec<MapPower>>, outer: MapPower) {
        match self {
            Node::Var { index, power } => acc.entry(*index).or_default().push(outer.plus(*power)),
            Node::Maps { power, child } => child.twist_exponents(acc, outer.plus(*power)),
            Node::T(child) => child.twist_exponents(acc, outer),
            Node::Product { left, right, .. } => {
                left.twist_exponents(acc, outer.plus(MapPower::new(1, 0)));
                right.twist_exponents(acc, outer.plus(MapPower::new(0, 1)));
            }
            Node::Action { slot, actor, target } => {
                let (a, t) = if slot.is_right() {
                    (MapPower::new(0, 1), MapPower::new(1, 0))
                } else {
                    (MapPower::new(1, 0), MapPower::new(0, 1))
                };
                actor.twist_exponents(acc, outer.plus(a));
                target.twist_exponents(acc, outer.plus(t));
            }
        }
    }

    /// Pre-order traversal.
    pub fn visit(&self, f: &mut impl FnMut(&Node)) {
        f(self);
        match self {
            Node::Var { .. } => {}
            Node::Maps { child, .. } | Node::T(child) => child.visit(f),
            Node::Product { left, right, .. } => {
                left.visit(f);
                right.visit(f);
            }
            Node::Action { actor, target, .. } => {
                actor.visit(f);
                target.visit(f);
            }
        }
    }
}

fn ill_sorted(msg: &str) -> Error {
    Error::Catalog { catalog: String::new(), message: format!("ill-sorted term: {msg}") }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub node: Node,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub sort: Sort,
}

/// `sum(lhs) = sum(rhs)` for all values of the variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axiom {
    pub name: String,
    pub note: String,
    pub variables: Vec<Variable>,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

impl Axiom {
    pub fn terms(&self) -> impl Iterator<Item = &Term> {
        self.lhs.iter().chain(&self.rhs)
    }

    /// The common sort of all terms, or `None` for an empty identity.
    pub fn value_sort(&self) -> Result<Option<Sort>> {
        let mut sort = None;
        for t in self.terms() {
            let s = t.node.sort(&self.variables)?;
            if sort.is_some_and(|prev| prev != s) {
                return Err(ill_sorted("terms of different sorts"));
            }
            sort = Some(s);
        }
        Ok(sort)
    }

    /// Every variable carries the same twist exponents in every term, so
    /// the identity survives twisting by commuting morphisms.
    pub fn is_twist_balanced(&self) -> bool {
        let mut seen: BTreeMap<usize, MapPower> = BTreeMap::new();
        for t in self.terms() {
            let mut acc = BTreeMap::new();
            t.node.twist_exponents(&mut acc, MapPower::default());
            for (v, powers) in acc {
                for p in powers {
                    if *seen.entry(v).or_insert(p) != p {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn sorts(&self) -> Vec<Sort> {
        self.variables.iter().map(|v| v.sort).collect()
    }
}
