#!/usr/bin/env python3
"""Generate the identity catalogs under crates/core/catalogs.

Axioms are written in a small S-expression notation and expanded
multilinearly into the JSON tree format read by the Rust evaluator.

Notation
  x, y, ...          variables (sort declared per axiom)
  (a1 t) (a2^2 t)    structure maps; on the secondary sort they act as beta
  (a1^-1a2 t)        words in a1, a2 with integer exponents
  (mul s t) (br s t) (star s t) (prec s t) (succ s t)
  (dot s t)          prec + succ
  (l s t) (r s t) (rho s t) (lstar ..) (rstar ..) (lprec ..) (rprec ..)
  (lsucc ..) (rsucc ..) (ldot ..) (rdot ..)
  (sb s t)           a2 s * a1 t - a2 t * a1 s
  (rho2 u w)         lstar(a2 u)(a1 w) - rstar(a1 u)(a2 w)
  (T u)              operator from the secondary sort to the primary sort
  (+ ..) (- s t) (neg s) (* 1/2 s) 0

Every generated entry is checked for twist balance, and the transcribed
bimodule catalogs are checked against the mechanical projection of the
class axioms onto the semidirect sum.
"""

import itertools
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "crates" / "core" / "catalogs"
VERSION = "1"

PRODUCTS = {"mul": "mul", "br": "bracket", "star": "star", "prec": "prec", "succ": "succ"}
ACTIONS = {
    "l": "l", "r": "r", "rho": "rho",
    "lstar": "l_star", "rstar": "r_star",
    "lprec": "l_prec", "rprec": "r_prec",
    "lsucc": "l_succ", "rsucc": "r_succ",
}
LEFT_OF = {"mul": "l", "star": "l_star", "prec": "l_prec", "succ": "l_succ"}
RIGHT_OF = {"mul": "r", "star": "r_star", "prec": "r_prec", "succ": "r_succ"}
RIGHT_ACTIONS = {"r", "r_star", "r_prec", "r_succ"}
MAP_WORD = re.compile(r"^(?:a[12](?:\^-?\d+)?)+$")


# ---------------------------------------------------------------- parsing

def tokenize(src):
    return src.replace("(", " ( ").replace(")", " ) ").split()


def parse(src):
    toks = tokenize(src)
    pos = 0

    def read():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        if tok == "(":
            out = []
            while toks[pos] != ")":
                out.append(read())
            pos += 1
            return out
        if tok == ")":
            raise ValueError("unbalanced parenthesis in %r" % src)
        return tok

    node = read()
    if pos != len(toks):
        raise ValueError("trailing tokens in %r" % src)
    return node


def map_word(word):
    p = q = 0
    for m in re.finditer(r"a([12])(?:\^(-?\d+))?", word):
        e = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "1":
            p += e
        else:
            q += e
    return p, q


# ---------------------------------------------------------------- trees

def leaf(var, p=0, q=0):
    return {"var": var, "a1pow": p, "a2pow": q}


def apply_maps(tree, p, q):
    if p == 0 and q == 0:
        return tree
    if isinstance(tree, dict):
        return leaf(tree["var"], tree["a1pow"] + p, tree["a2pow"] + q)
    if tree[0] == "maps":
        p2 = tree[1]["a1pow"] + p
        q2 = tree[1]["a2pow"] + q
        if p2 == 0 and q2 == 0:
            return tree[2]
        return ["maps", {"a1pow": p2, "a2pow": q2}, tree[2]]
    return ["maps", {"a1pow": p, "a2pow": q}, tree]


def key(tree):
    return json.dumps(tree, sort_keys=True)


def collect(terms):
    """Merge like terms; terms are (coeff, tree, sort)."""
    acc = {}
    order = []
    for c, t, s in terms:
        k = (key(t), s)
        if k not in acc:
            acc[k] = [Fraction(0), t, s]
            order.append(k)
        acc[k][0] += c
    return [(acc[k][0], acc[k][1], acc[k][2]) for k in order if acc[k][0] != 0]


# ---------------------------------------------------------------- expansion

class Expander:
    """Expand notation into (coeff, tree, sort) lists.

    mode "pure": mixed-sort products are errors.
    mode "sum": mixed-sort products expand through the direct-sum formulas.
    mode "semidirect": as "sum" with the secondary sort carrying no
    product and no action on the primary sort.
    """

    def __init__(self, sorts, mode="pure"):
        self.sorts = sorts
        self.mode = mode

    def expand(self, node):
        if isinstance(node, str):
            if node == "0":
                return []
            if node not in self.sorts:
                raise ValueError("unknown variable %r" % node)
            return [(Fraction(1), leaf(node), self.sorts[node])]
        head, args = node[0], node[1:]
        if MAP_WORD.match(head):
            (arg,) = args
            p, q = map_word(head)
            return [(c, apply_maps(t, p, q), s) for c, t, s in self.expand(arg)]
        if head == "+":
            return collect([t for a in args for t in self.expand(a)])
        if head == "-":
            a, b = args
            return collect(self.expand(a) + [(-c, t, s) for c, t, s in self.expand(b)])
        if head == "neg":
            (a,) = args
            return [(-c, t, s) for c, t, s in self.expand(a)]
        if head == "*":
            k, a = args
            k = Fraction(k)
            return collect([(k * c, t, s) for c, t, s in self.expand(a)])
        if head == "dot":
            a, b = args
            return self.expand(["+", ["prec", a, b], ["succ", a, b]])
        if head == "ldot":
            a, b = args
            return self.expand(["+", ["lprec", a, b], ["lsucc", a, b]])
        if head == "rdot":
            a, b = args
            return self.expand(["+", ["rprec", a, b], ["rsucc", a, b]])
        if head == "sb":
            a, b = args
            return self.expand(["-", ["star", ["a2", a], ["a1", b]],
                                ["star", ["a2", b], ["a1", a]]])
        if head == "rho2":
            a, b = args
            return self.expand(["-", ["lstar", ["a2", a], ["a1", b]],
                                ["rstar", ["a1", a], ["a2", b]]])
        if head == "T":
            (a,) = args
            out = []
            for c, t, s in self.expand(a):
                if s != "B":
                    raise ValueError("T applied to sort %s" % s)
                out.append((c, ["T", t], "A"))
            return out
        if head in PRODUCTS:
            a, b = args
            return self.product(PRODUCTS[head], self.expand(a), self.expand(b))
        if head in ACTIONS:
            a, b = args
            out = []
            for (c1, t1, s1), (c2, t2, s2) in itertools.product(self.expand(a), self.expand(b)):
                if s1 == s2:
                    raise ValueError("action %s with both arguments of sort %s" % (head, s1))
                if self.mode == "semidirect" and s1 == "B":
                    continue
                out.append((c1 * c2, [ACTIONS[head], t1, t2], s2))
            return collect(out)
        raise ValueError("unknown head %r" % head)

    def product(self, slot, xs, ys):
        out = []
        for (c1, t1, s1), (c2, t2, s2) in itertools.product(xs, ys):
            c = c1 * c2
            if s1 == s2:
                if self.mode == "semidirect" and s1 == "B":
                    continue
                out.append((c, [slot, t1, t2], s1))
                continue
            if self.mode == "pure":
                raise ValueError("product %s of mixed sorts" % slot)
            keep_a_on_b = True
            keep_b_on_a = self.mode == "sum"
            if slot == "bracket":
                # [s, t] = rho(s) t - rho(a1^-1 a2 t) (a1 a2^-1 s)
                if (s1 == "A" and keep_a_on_b) or (s1 == "B" and keep_b_on_a):
                    out.append((c, ["rho", t1, t2], s2))
                if (s2 == "A" and keep_a_on_b) or (s2 == "B" and keep_b_on_a):
                    out.append((-c, ["rho", apply_maps(t2, -1, 1), apply_maps(t1, 1, -1)], s1))
                continue
            # p(s, t) = left(s) t + right(t) s
            if (s1 == "A" and keep_a_on_b) or (s1 == "B" and keep_b_on_a):
                out.append((c, [LEFT_OF[slot], t1, t2], s2))
            if (s2 == "A" and keep_a_on_b) or (s2 == "B" and keep_b_on_a):
                out.append((c, [RIGHT_OF[slot], t2, t1], s1))
        return collect(out)


# ---------------------------------------------------------------- balance

def exponents(tree, acc, p=0, q=0):
    """Accumulate, per variable, the map exponents a twist would attach."""
    if isinstance(tree, dict):
        v = tree["var"]
        acc.setdefault(v, []).append((p + tree["a1pow"], q + tree["a2pow"]))
        return
    head = tree[0]
    if head == "maps":
        exponents(tree[2], acc, p + tree[1]["a1pow"], q + tree[1]["a2pow"])
    elif head == "T":
        exponents(tree[1], acc, p, q)
    elif head in RIGHT_ACTIONS:
        exponents(tree[1], acc, p, q + 1)
        exponents(tree[2], acc, p + 1, q)
    else:
        exponents(tree[1], acc, p + 1, q)
        exponents(tree[2], acc, p, q + 1)


def balanced(terms):
    seen = {}
    for _, t, _ in terms:
        acc = {}
        exponents(t, acc)
        for v, es in acc.items():
            for e in es:
                if seen.setdefault(v, e) != e:
                    return False
    return True


# ---------------------------------------------------------------- entries

def entry(sorts, lhs_src, rhs_src, note, mode="pure", target=None):
    ex = Expander(sorts, mode)
    lhs = ex.expand(parse(lhs_src))
    rhs = ex.expand(parse(rhs_src))
    if target is not None:
        lhs = [t for t in lhs if t[2] == target]
        rhs = [t for t in rhs if t[2] == target]
    lhs, rhs = cancel(lhs, rhs)
    sides = {t[2] for t in lhs + rhs}
    if len(sides) > 1:
        raise ValueError("mixed result sorts in %s = %s" % (lhs_src, rhs_src))
    if not balanced(lhs + rhs):
        raise ValueError("unbalanced identity: %s = %s" % (lhs_src, rhs_src))
    return {
        "lhs": [term_json(t) for t in lhs],
        "note": note,
        "rhs": [term_json(t) for t in rhs],
        "variables": [{"name": n, "sort": sorts[n]} for n in sorts],
    }


def cancel(lhs, rhs):
    """Move common terms off both sides."""
    merged = collect(lhs + [(-c, t, s) for c, t, s in rhs])
    lkeys = {key(t) for _, t, _ in lhs}
    new_l = [t for t in merged if key(t[1]) in lkeys]
    new_r = [(-c, t, s) for c, t, s in merged if key(t) not in lkeys]
    return new_l, new_r


def term_json(t):
    c, tree, _ = t
    return {"coeff": str(c), "tree": tree}


def residual(e):
    acc = {}
    for t in e["lhs"]:
        acc[key(t["tree"])] = acc.get(key(t["tree"]), 0) + Fraction(t["coeff"])
    for t in e["rhs"]:
        acc[key(t["tree"])] = acc.get(key(t["tree"]), 0) - Fraction(t["coeff"])
    return {k: v for k, v in acc.items() if v != 0}


def rename(tree, m):
    if isinstance(tree, dict):
        return leaf(m[tree["var"]], tree["a1pow"], tree["a2pow"])
    if tree[0] == "maps":
        return ["maps", tree[1], rename(tree[2], m)]
    return [tree[0]] + [rename(c, m) for c in tree[1:]]


def same_identity(e1, e2):
    """Equal residuals up to sign and a sort-preserving renaming."""
    r2 = residual(e2)
    neg2 = {k: -v for k, v in r2.items()}
    names1 = [v["name"] for v in e1["variables"]]
    sorts1 = [v["sort"] for v in e1["variables"]]
    names2 = [v["name"] for v in e2["variables"]]
    for perm in itertools.permutations(names2):
        if len(perm) != len(names1):
            continue
        sorts2 = {v["name"]: v["sort"] for v in e2["variables"]}
        if any(sorts2[p] != s for p, s in zip(perm, sorts1)):
            continue
        m = dict(zip(names1, perm))
        r1 = {}
        for t in e1["lhs"]:
            k = key(rename(t["tree"], m))
            r1[k] = r1.get(k, 0) + Fraction(t["coeff"])
        for t in e1["rhs"]:
            k = key(rename(t["tree"], m))
            r1[k] = r1.get(k, 0) - Fraction(t["coeff"])
        r1 = {k: v for k, v in r1.items() if v != 0}
        if r1 == r2 or r1 == neg2:
            return True
    return False


# ---------------------------------------------------------------- class axioms

A3 = {"x": "A", "y": "A", "z": "A"}
A2S = {"x": "A", "y": "A"}

ALGEBRA_AXIOMS = {
    "associative": {
        "slots": ["mul"],
        "prefix": "assoc",
        "axioms": [
            ("associativity", "(mul (a1 x) (mul y z))", "(mul (mul x y) (a2 z))",
             "a1(x) (y z) = (x y) a2(z)"),
        ],
        "skew": [],
    },
    "lie": {
        "slots": ["br"],
        "prefix": "lie",
        "axioms": [
            ("jacobi",
             "(+ (br (a2^2 x) (br (a2 y) (a1 z))) (br (a2^2 y) (br (a2 z) (a1 x))) (br (a2^2 z) (br (a2 x) (a1 y))))",
             "0",
             "cyclic sum of [a2^2 x, [a2 y, a1 z]] vanishes"),
        ],
        "skew": [
            ("skew_symmetry", "(br (a2 x) (a1 y))", "(neg (br (a2 y) (a1 x)))",
             "[a2 x, a1 y] = -[a2 y, a1 x]"),
        ],
    },
    "pre_lie": {
        "slots": ["star"],
        "prefix": "prelie",
        "axioms": [
            ("left_symmetry",
             "(- (star (star (a2 x) (a1 y)) (a2 z)) (star (a1a2 x) (star (a1 y) z)))",
             "(- (star (star (a2 y) (a1 x)) (a2 z)) (star (a1a2 y) (star (a1 x) z)))",
             "associator (a2 x * a1 y) * a2 z - a1 a2 x * (a1 y * z) is symmetric in x, y"),
        ],
        "skew": [],
    },
    "dendriform": {
        "slots": ["prec", "succ"],
        "prefix": "dend",
        "axioms": [
            ("prec_prec", "(prec (prec x y) (a2 z))", "(prec (a1 x) (dot y z))",
             "(x < y) < a2 z = a1 x < (y . z)"),
            ("succ_prec", "(prec (succ x y) (a2 z))", "(succ (a1 x) (prec y z))",
             "(x > y) < a2 z = a1 x > (y < z)"),
            ("succ_succ", "(succ (a1 x) (succ y z))", "(succ (dot x y) (a2 z))",
             "a1 x > (y > z) = (x . y) > a2 z"),
        ],
        "skew": [],
    },
    "nc_poisson": {
        "slots": [],
        "prefix": "poisson",
        "includes": ["associative", "lie"],
        "axioms": [
            ("leibniz", "(br (a1a2 x) (mul y z))",
             "(+ (mul (br (a2 x) y) (a2 z)) (mul (a2 y) (br (a1 x) z)))",
             "{a1 a2 x, y z} = {a2 x, y} a2 z + a2 y {a1 x, z}"),
        ],
        "skew": [],
    },
    "nc_pre_poisson": {
        "slots": [],
        "prefix": "prepoisson",
        "includes": ["dendriform", "pre_lie"],
        "axioms": [
            ("bracket_succ", "(succ (sb x y) (a2 z))",
             "(- (star (a1a2 x) (succ (a1 y) z)) (succ (a1a2 y) (star (a1 x) z)))",
             "(a2 x * a1 y - a2 y * a1 x) > a2 z = a1 a2 x * (a1 y > z) - a1 a2 y > (a1 x * z)"),
            ("prec_bracket", "(prec (a2 x) (- (star (a1a2 y) (a1 z)) (star (a2 z) (a1^2 y))))",
             "(- (star (a1a2^2 y) (prec x (a1 z))) (prec (star (a2^2 y) x) (a1a2 z)))",
             "a2 x < (a1 a2 y * a1 z - a2 z * a1^2 y) = a1 a2^2 y * (x < a1 z) - (a2^2 y * x) < a1 a2 z"),
            ("dot_star", "(star (dot (a2 x) (a1 y)) (a1a2 z))",
             "(+ (prec (star (a2 x) (a2 z)) (a1^2 y)) (succ (a1a2 x) (star (a1 y) (a1 z))))",
             "(a2 x . a1 y) * a1 a2 z = (a2 x * a2 z) < a1^2 y + a1 a2 x > (a1 y * a1 z)"),
        ],
        "skew": [],
    },
}


def algebra_catalog(name):
    table = ALGEBRA_AXIOMS[name]
    pre = table["prefix"]
    axioms = {}
    for ax, lhs, rhs, note in table["axioms"]:
        axioms["%s.%s" % (pre, ax)] = entry(A3, lhs, rhs, note)
    for ax, lhs, rhs, note in table["skew"]:
        axioms["%s.%s" % (pre, ax)] = entry(A2S, lhs, rhs, note)
    for slot in table["slots"]:
        for m in ("a1", "a2"):
            axioms["%s.multiplicative.%s.%s" % (pre, m, PRODUCTS[slot])] = entry(
                A2S, "(%s (%s x y))" % (m, slot), "(%s (%s x) (%s y))" % (slot, m, m),
                "%s is multiplicative for %s" % (m.replace("a", "alpha"), PRODUCTS[slot]))
    return catalog(name, axioms, table.get("includes", []))


def catalog(name, axioms, includes):
    return {"axioms": axioms, "catalog": name, "includes": includes, "version": VERSION}


# ---------------------------------------------------------------- module axioms

AV = {"x": "A", "y": "A", "v": "B"}
XV = {"x": "A", "v": "B"}
AAV = {"x": "A", "y": "A", "z": "A", "v": "B"}


def equivariance(pre, slots):
    out = {}
    for slot in slots:
        for m in ("a1", "a2"):
            out["%s.equivariant.%s.%s" % (pre, m, ACTIONS[slot])] = entry(
                XV, "(%s (%s x v))" % (m, slot), "(%s (%s x) (%s v))" % (slot, m, m),
                "beta%s %s(x) = %s(alpha%s x) beta%s" % (m[1], ACTIONS[slot], ACTIONS[slot], m[1], m[1]))
    return out


MODULE_AXIOMS = {
    "assoc_bimodule": {
        "prefix": "assocmod",
        "class": "associative",
        "slots": ["l", "r"],
        "axioms": [
            ("left", AV, "(l (mul x y) (a2 v))", "(l (a1 x) (l y v))",
             "l(x y) beta2 = l(alpha1 x) l(y)"),
            ("right", AV, "(r (mul x y) (a1 v))", "(r (a2 y) (r x v))",
             "r(x y) beta1 = r(alpha2 y) r(x)"),
            ("middle", AV, "(l (a1 x) (r y v))", "(r (a2 y) (l x v))",
             "l(alpha1 x) r(y) = r(alpha2 y) l(x)"),
        ],
    },
    "lie_representation": {
        "prefix": "liemod",
        "class": "lie",
        "slots": ["rho"],
        "axioms": [
            ("bracket", AV, "(rho (br (a2 x) y) (a2 v))",
             "(- (rho (a1a2 x) (rho y v)) (rho (a2 y) (rho (a1 x) v)))",
             "rho([a2 x, y]) beta2 = rho(alpha1 alpha2 x) rho(y) - rho(alpha2 y) rho(alpha1 x)"),
        ],
    },
    "pre_lie_bimodule": {
        "prefix": "prelie_mod",
        "class": "pre_lie",
        "slots": ["lstar", "rstar"],
        "axioms": [
            ("left", AV, "(lstar (sb x y) (a2 v))",
             "(- (lstar (a1a2 x) (lstar (a1 y) v)) (lstar (a1a2 y) (lstar (a1 x) v)))",
             "l*( a2 x * a1 y - a2 y * a1 x ) beta2 = l*(a1 a2 x) l*(a1 y) - l*(a1 a2 y) l*(a1 x)"),
            ("right", AV, "(rstar (a2 y) (rho2 x v))",
             "(- (lstar (a1a2 x) (rstar y (a1 v))) (rstar (star (a1 x) y) (a1a2 v)))",
             "r*(a2 y) rho(a2 x) beta1 = l*(a1 a2 x) r*(y) beta1 - r*(a1 x * y) beta1 beta2"),
        ],
    },
    "dendriform_bimodule": {
        "prefix": "dendmod",
        "class": "dendriform",
        "slots": ["lprec", "rprec", "lsucc", "rsucc"],
        "axioms": [
            ("lprec_prec", AV, "(lprec (prec x y) (a2 v))", "(lprec (a1 x) (ldot y v))",
             "l<(x < y) beta2 = l<(a1 x) l.(y)"),
            ("rprec_lprec", AV, "(rprec (a2 x) (lprec y v))", "(lprec (a1 y) (rdot x v))",
             "r<(a2 x) l<(y) = l<(a1 y) r.(x)"),
            ("rprec_rprec", AV, "(rprec (a2 y) (rprec x v))", "(rprec (dot x y) (a1 v))",
             "r<(a2 y) r<(x) = r<(x . y) beta1"),
            ("lprec_succ", AV, "(lprec (succ x y) (a2 v))", "(lsucc (a1 x) (lprec y v))",
             "l<(x > y) beta2 = l>(a1 x) l<(y)"),
            ("rprec_lsucc", AV, "(rprec (a2 x) (lsucc y v))", "(lsucc (a1 y) (rprec x v))",
             "r<(a2 x) l>(y) = l>(a1 y) r<(x)"),
            ("rprec_rsucc", AV, "(rprec (a2 x) (rsucc y v))", "(rsucc (prec y x) (a1 v))",
             "r<(a2 x) r>(y) = r>(y < x) beta1"),
            ("lsucc_dot", AV, "(lsucc (dot x y) (a2 v))", "(lsucc (a1 x) (lsucc y v))",
             "l>(x . y) beta2 = l>(a1 x) l>(y)"),
            ("rsucc_ldot", AV, "(rsucc (a2 x) (ldot y v))", "(lsucc (a1 y) (rsucc x v))",
             "r>(a2 x) l.(y) = l>(a1 y) r>(x)"),
            ("rsucc_rdot", AV, "(rsucc (a2 x) (rdot y v))", "(rsucc (succ y x) (a1 v))",
             "r>(a2 x) r.(y) = r>(y > x) beta1"),
        ],
    },
    "poisson_representation": {
        "prefix": "poissonmod",
        "class": "nc_poisson",
        "includes": ["assoc_bimodule", "lie_representation"],
        "slots": [],
        "axioms": [
            ("left", AV, "(l (br (a2 x) y) (a2 v))",
             "(- (rho (a1a2 x) (l y v)) (l (a2 y) (rho (a1 x) v)))",
             "l({a2 x, y}) beta2 = rho(a1 a2 x) l(y) - l(a2 y) rho(a1 x)"),
            ("right", AV, "(r (br (a1 x) y) (a2 v))",
             "(- (rho (a1a2 x) (r y v)) (r (a2 y) (rho (a2 x) v)))",
             "r({a1 x, y}) beta2 = rho(a1 a2 x) r(y) - r(a2 y) rho(a2 x)"),
            ("rho_mul", AV, "(rho (mul x y) (a1a2 v))",
             "(+ (l (a1 x) (rho y (a1 v))) (r (a1 y) (rho x (a2 v))))",
             "rho(x y) beta1 beta2 = l(a1 x) rho(y) beta1 + r(a1 y) rho(x) beta2"),
        ],
    },
    "pre_poisson_bimodule": {
        "prefix": "prepoissonmod",
        "class": "nc_pre_poisson",
        "includes": ["dendriform_bimodule", "pre_lie_bimodule"],
        "slots": [],
        "axioms": [
            ("lsucc_bracket", AV, "(lsucc (sb x y) (a2 v))",
             "(- (lstar (a1a2 x) (lsucc (a1 y) v)) (lsucc (a1a2 y) (lstar (a1 x) v)))",
             "l>(a2 x * a1 y - a2 y * a1 x) beta2 = l*(a1 a2 x) l>(a1 y) - l>(a1 a2 y) l*(a1 x)"),
            ("rsucc_rho", AV, "(rsucc (a2 x) (rho2 y v))",
             "(- (lstar (a1a2 y) (rsucc x (a1 v))) (rsucc (star (a1 y) x) (a1a2 v)))",
             "r>(a2 x) rho(a2 y) beta1 = l*(a1 a2 y) r>(x) beta1 - r>(a1 y * x) beta1 beta2"),
            ("rstar_succ", AV, "(neg (rsucc (a2 x) (rho2 y v)))",
             "(- (rstar (succ (a1 y) x) (a1a2 v)) (lsucc (a1a2 y) (rstar x (a1 v))))",
             "-r>(a2 x) rho(a2 y) beta1 = r*(a1 y > x) beta1 beta2 - l>(a1 a2 y) r*(x) beta1"),
            ("rprec_bracket", AV, "(rprec (sb (a1 x) y) (a2 v))",
             "(- (lstar (a1a2^2 x) (rprec (a1 y) v)) (rprec (a1a2 y) (lstar (a2^2 x) v)))",
             "r<(a1 a2 x * a1 y - a2 y * a1^2 x) beta2 = l*(a1 a2^2 x) r<(a1 y) - r<(a1 a2 y) l*(a2^2 x)"),
            ("lprec_rho", AV, "(neg (lprec (a2 x) (rho2 y (a1 v))))",
             "(- (rstar (prec x (a1 y)) (a1a2^2 v)) (rprec (a1a2 y) (rstar x (a2^2 v))))",
             "-l<(a2 x) rho(a2 y) beta1^2 = r*(x < a1 y) beta1 beta2^2 - r<(a1 a2 y) r*(x) beta2^2"),
            ("lprec_rho_star", AV, "(lprec (a2 x) (rho2 (a1 y) v))",
             "(- (lstar (a1a2^2 y) (lprec x (a1 v))) (lprec (star (a2^2 y) x) (a1a2 v)))",
             "l<(a2 x) rho(a1 a2 y) beta1 = l*(a1 a2^2 y) l<(x) beta1 - l<(a2^2 y * x) beta1 beta2"),
            ("lstar_dot", AV, "(lstar (dot (a2 x) (a1 y)) (a1a2 v))",
             "(+ (rprec (a1^2 y) (lstar (a2 x) (a2 v))) (lsucc (a1a2 x) (lstar (a1 y) (a1 v))))",
             "l*(a2 x . a1 y) beta1 beta2 = r<(a1^2 y) l*(a2 x) beta2 + l>(a1 a2 x) l*(a1 y) beta1"),
            ("rstar_rdot", {"y": "A", "z": "A", "v": "B"}, "(rstar (a1a2 z) (rdot (a1 y) (a2 v)))",
             "(+ (rprec (a1^2 y) (rstar (a2 z) (a2 v))) (rsucc (star (a1 y) (a1 z)) (a1a2 v)))",
             "r*(a1 a2 z) r.(a1 y) beta2 = r<(a1^2 y) r*(a2 z) beta2 + r>(a1 y * a1 z) beta1 beta2"),
            ("rstar_ldot", {"x": "A", "z": "A", "v": "B"}, "(rstar (a1a2 z) (ldot (a2 x) (a1 v)))",
             "(+ (lprec (star (a2 x) (a2 z)) (a1^2 v)) (lsucc (a1a2 x) (rstar (a1 z) (a1 v))))",
             "r*(a1 a2 z) l.(a2 x) beta1 = l<(a2 x * a2 z) beta1^2 + l>(a1 a2 x) r*(a1 z) beta1"),
        ],
    },
}


def module_catalog(name):
    table = MODULE_AXIOMS[name]
    pre = table["prefix"]
    axioms = {}
    for ax, sorts, lhs, rhs, note in table["axioms"]:
        axioms["%s.%s" % (pre, ax)] = entry(sorts, lhs, rhs, note)
    axioms.update(equivariance(pre, table["slots"]))
    return catalog(name, axioms, table.get("includes", []))


# ---------------------------------------------------------------- projections

def class_axioms(name, with_skew=False):
    """Own axioms of an algebra class as (name, arity, lhs, rhs)."""
    table = ALGEBRA_AXIOMS[name]
    out = [(ax, 3, l, r) for ax, l, r, _ in table["axioms"]]
    if with_skew:
        out += [(ax, 2, l, r) for ax, l, r, _ in table["skew"]]
        for slot in table["slots"]:
            for m in ("a1", "a2"):
                out.append(("multiplicative.%s.%s" % (m, PRODUCTS[slot]), 2,
                            "(%s (%s x y))" % (m, slot), "(%s (%s x) (%s y))" % (slot, m, m)))
    return out


PRIMARY_NAMES = ["x", "y", "z"]
SECONDARY_NAMES = ["a", "b", "c"]


def rename_src(src, m):
    return re.sub(r"\b([xyz])\b", lambda mo: m[mo.group(1)], src)


def matched_catalog(name):
    table = ALGEBRA_AXIOMS[name]
    pre = table["prefix"]
    axioms = {}
    for ax, arity, lhs, rhs in class_axioms(name):
        for minority in range(arity):
            for major in ("A", "B"):
                minor = "B" if major == "A" else "A"
                sorts = {}
                m = {}
                for i, var in enumerate(PRIMARY_NAMES[:arity]):
                    s = minor if i == minority else major
                    nm = PRIMARY_NAMES[i] if s == "A" else SECONDARY_NAMES[i]
                    sorts[nm] = s
                    m[var] = nm
                tag = "_".join(m[v] for v in PRIMARY_NAMES[:arity])
                e = entry(sorts, rename_src(lhs, m), rename_src(rhs, m),
                          "%s-component of %s on arguments (%s) of the direct sum"
                          % ("primary" if major == "A" else "secondary", ax, ", ".join(m[v] for v in PRIMARY_NAMES[:arity])),
                          mode="sum", target=major)
                if e["lhs"] or e["rhs"]:
                    axioms["matched_%s.%s.%s" % (pre, ax, tag)] = e
    includes = ["matched_" + i for i in table.get("includes", [])]
    return catalog("matched_" + name, axioms, includes)


def semidirect_projection(name):
    """Module-sort components of the class axioms on A + V."""
    out = []
    for ax, arity, lhs, rhs in class_axioms(name, with_skew=True):
        for pos in range(arity):
            sorts = {}
            m = {}
            for i, var in enumerate(PRIMARY_NAMES[:arity]):
                nm = "v" if i == pos else var
                sorts[nm] = "B" if i == pos else "A"
                m[var] = nm
            e = entry(sorts, rename_src(lhs, m), rename_src(rhs, m), "", mode="semidirect", target="B")
            if e["lhs"] or e["rhs"]:
                out.append((ax, e))
    return out


def verify_module_catalog(mod_name, cat):
    """Check that a transcribed catalog coincides with the projection."""
    cls = MODULE_AXIOMS[mod_name]["class"]
    own = list(cat["axioms"].values())
    proj = semidirect_projection(cls)
    for ax, p in proj:
        if not any(same_identity(p, e) for e in own):
            raise SystemExit("%s: no transcribed entry matches projection of %s" % (mod_name, ax))
    for e in own:
        if not any(same_identity(e, p) for _, p in proj):
            raise SystemExit("%s: transcribed entry has no projection counterpart: %s" % (mod_name, e["note"]))


# ---------------------------------------------------------------- O-operators

UV = {"u": "B", "v": "B"}


def o_operator_catalogs():
    out = {}
    out["o_operator_associative"] = catalog("o_operator_associative", {
        "oop_assoc.product": entry(UV, "(mul (T u) (T v))", "(T (+ (l (T u) v) (r (T v) u)))",
                                   "T(u) T(v) = T(l(T u) v + r(T v) u)"),
    }, [])
    out["o_operator_lie"] = catalog("o_operator_lie", {
        "oop_lie.bracket": entry(UV, "(br (T u) (T v))",
                                 "(T (- (rho (T u) v) (rho (T (a1^-1a2 v)) (a1a2^-1 u))))",
                                 "{T u, T v} = T(rho(T u) v - rho(T(beta1^-1 beta2 v)) beta1 beta2^-1 u)"),
    }, [])
    out["o_operator_poisson"] = catalog("o_operator_poisson", {},
                                        ["o_operator_associative", "o_operator_lie"])
    return out


# ---------------------------------------------------------------- output

def compact(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def render(cat):
    """Sorted keys; one line per term."""
    lines = ["{", ' "axioms": {']
    names = sorted(cat["axioms"])
    for i, name in enumerate(names):
        e = cat["axioms"][name]
        lines.append("  %s: {" % json.dumps(name))
        lines.append('   "lhs": [')
        lines += ["    " + compact(t) + ("," if j + 1 < len(e["lhs"]) else "") for j, t in enumerate(e["lhs"])]
        lines.append("   ],")
        lines.append('   "note": %s,' % json.dumps(e["note"]))
        lines.append('   "rhs": [')
        lines += ["    " + compact(t) + ("," if j + 1 < len(e["rhs"]) else "") for j, t in enumerate(e["rhs"])]
        lines.append("   ],")
        lines.append('   "variables": %s' % compact(e["variables"]))
        lines.append("  }" + ("," if i + 1 < len(names) else ""))
    lines.append(" },")
    lines.append(' "catalog": %s,' % json.dumps(cat["catalog"]))
    lines.append(' "includes": %s,' % compact(cat["includes"]))
    lines.append(' "version": %s' % json.dumps(cat["version"]))
    lines.append("}")
    text = "\n".join(lines) + "\n"
    assert json.loads(text) == cat
    return text


# ---------------------------------------------------------------- main

def main():
    OUT.mkdir(parents=True, exist_ok=True)
    cats = {}
    for name in ALGEBRA_AXIOMS:
        cats[name] = algebra_catalog(name)
    for name in MODULE_AXIOMS:
        cats[name] = module_catalog(name)
    for name in ("assoc_bimodule", "pre_lie_bimodule", "dendriform_bimodule"):
        verify_module_catalog(name, cats[name])
    # the own entries of the pre-Poisson bimodule catalog are the
    # compatibility components only
    own = {k: v for k, v in cats["pre_poisson_bimodule"]["axioms"].items()}
    proj = [p for ax, p in semidirect_projection("nc_pre_poisson")
            if ax in {a for a, _, _, _ in ALGEBRA_AXIOMS["nc_pre_poisson"]["axioms"]}]
    for p in proj:
        if not any(same_identity(p, e) for e in own.values()):
            raise SystemExit("pre_poisson_bimodule: missing projection")
    if len(proj) != len(own):
        raise SystemExit("pre_poisson_bimodule: entry count mismatch")
    for name in ALGEBRA_AXIOMS:
        cats["matched_" + name] = matched_catalog(name)
    cats.update(o_operator_catalogs())
    check = "--check" in sys.argv
    stale = []
    for name, cat in sorted(cats.items()):
        text = render(cat)
        path = OUT / ("%s.json" % name)
        if check:
            if not path.exists() or path.read_text() != text:
                stale.append(name)
        else:
            path.write_text(text)
    if stale:
        raise SystemExit("stale catalogs: " + ", ".join(stale))
    for name, cat in sorted(cats.items()):
        print("%-28s %3d entries" % (name, len(cat["axioms"])))


if __name__ == "__main__":
    main()
