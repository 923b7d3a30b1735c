"""Homology-level operations of framed little-disks algebras over F2.

A model (:class:`AlgebraModel`) packages the disks dimension n (None for a
stable model), the generators, and finite action tables for the Kudo-Araki
operations Q_j, the higher BV operators Delta_i (the action of the degree-i
generator of the homology of the rotation group), and the Browder bracket.
The functions here extend those tables to arbitrary polynomials using the
structural relations:

* Q_0 is the Pontryagin square; Q_j is additive for j below the top index
  and quadratic at the top, with the Browder bracket as defect.
* Delta_i of a product expands through the Cartan diagonal, with a bracket
  defect at the top index.
* Delta_i of a bracket expands bracketwise.
* Delta_i Q_j expands as a Steenrod-twisted sum of Q's on Delta's plus,
  at the top Q, a sum of brackets of Delta's (``delta_on_q``).

Everything is exact set arithmetic over F2; all functions are pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Optional

from .errors import (
    EvenIndex,
    IndexOutOfRange,
    InhomogeneousPolynomial,
    MissingActionTable,
    UnknownGenerator,
)
from .poly import (
    Generator,
    Monomial,
    Polynomial,
    d_gen,
    degree_of,
    lucas_binom,
    mono_mul,
)
from .report import Record, VerificationReport

ZERO = Polynomial.zero()
ONE = Polynomial.one()


# ---------- expression trees ----------

class Expr:
    """Abstract syntax of operadic expressions."""


@dataclass(frozen=True)
class Gen(Expr):
    name: str


@dataclass(frozen=True)
class Component(Expr):
    i: int


@dataclass(frozen=True)
class Sum(Expr):
    terms: tuple


@dataclass(frozen=True)
class Product(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Bracket(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Q(Expr):
    i: int
    arg: Expr


@dataclass(frozen=True)
class QUpper(Expr):
    i: int
    arg: Expr


@dataclass(frozen=True)
class Delta(Expr):
    i: int
    arg: Expr


@dataclass(frozen=True)
class DeltaP(Expr):
    i: int
    arg: Expr


# ---------- models ----------

# Action tables are keyed by atoms: ('gen', generator) for a single generator,
# ('mark', +1) / ('mark', -1) for the component classes [1] and [-1].

@dataclass(frozen=True, eq=False)
class AlgebraModel:
    """A concrete algebra with finite action tables.

    ``n`` is the disks dimension (>= 2), or None for a stable model where
    all Q and Delta indices are legal and all brackets vanish.  Rule
    callables extend the finite tables for models whose action is given by
    a scheme rather than a list (Kudo-Araki words, theta classes); they take
    the model as first argument and return None to decline.
    """

    name: str
    n: Optional[int]
    generators: Mapping[str, Generator]
    q_table: Mapping[tuple, Polynomial] = field(default_factory=dict)
    delta_table: Mapping[tuple, Polynomial] = field(default_factory=dict)
    bracket_table: Mapping[tuple, Polynomial] = field(default_factory=dict)
    bracket_default_zero: bool = True
    component_support: bool = False
    q_rule: Optional[Callable] = None
    delta_rule: Optional[Callable] = None
    primitive_rule: Optional[Callable] = None
    basis_fn: Optional[Callable] = None

    @property
    def stable(self) -> bool:
        return self.n is None

    @property
    def top(self) -> Optional[int]:
        """Index of the quadratic Q and of the bracket defect; None if stable."""
        return None if self.n is None else self.n - 1

    def check_q_index(self, j: int):
        if j < 0 or (self.top is not None and j > self.top):
            raise IndexOutOfRange("Q", j, self.n)

    def check_delta_index(self, i: int):
        if i < 0 or (self.top is not None and i > self.top):
            raise IndexOutOfRange("Delta", i, self.n)

    def gen_poly(self, name: str) -> Polynomial:
        if name not in self.generators:
            raise UnknownGenerator(f"{name!r} not in model {self.name}")
        return Polynomial.of_gen(self.generators[name])

    def q_on_atom(self, j: int, atom) -> Polynomial:
        val = self.q_table.get((j, atom))
        if val is None and self.q_rule is not None:
            val = self.q_rule(self, j, atom)
        if val is None:
            raise MissingActionTable(f"Q_{j} on {atom} in model {self.name}")
        return val

    def delta_on_atom(self, i: int, atom) -> Polynomial:
        val = self.delta_table.get((i, atom))
        if val is None and self.delta_rule is not None:
            val = self.delta_rule(self, i, atom)
        if val is None:
            raise MissingActionTable(f"Delta_{i} on {atom} in model {self.name}")
        return val

    def bracket_on_atoms(self, a1, a2) -> Polynomial:
        if a1 == a2:
            return ZERO
        key = tuple(sorted((a1, a2)))
        val = self.bracket_table.get(key)
        if val is not None:
            return val
        if self.bracket_default_zero or self.stable:
            return ZERO
        raise MissingActionTable(f"bracket {key} in model {self.name}")

    def basis(self, max_degree: int) -> Iterable[Monomial]:
        if self.basis_fn is None:
            raise MissingActionTable(f"model {self.name} has no basis enumerator")
        return self.basis_fn(self, max_degree)

    def validate(self):
        """Degree bookkeeping of the action tables."""
        def atom_degree(atom):
            return atom[1].degree if atom[0] == "gen" else 0

        for (j, atom), val in self.q_table.items():
            d = degree_of(val)
            if d is not None and d != 2 * atom_degree(atom) + j:
                raise ValueError(f"Q_{j}{atom} has degree {d} in {self.name}")
        for (i, atom), val in self.delta_table.items():
            d = degree_of(val)
            if d is not None and d != atom_degree(atom) + i:
                raise ValueError(f"Delta_{i}{atom} has degree {d} in {self.name}")
        if self.top is not None:
            for (a1, a2), val in self.bracket_table.items():
                d = degree_of(val)
                if d is not None and d != atom_degree(a1) + atom_degree(a2) + self.top:
                    raise ValueError(f"bracket {a1},{a2} degree {d} in {self.name}")
        return self


def atom_poly(atom) -> Polynomial:
    return Polynomial.of_gen(atom[1]) if atom[0] == "gen" else Polynomial.mark(atom[1])


# ---------- brackets ----------

def bracket_eval(x: Polynomial, y: Polynomial, m: AlgebraModel) -> Polynomial:
    """Browder bracket, extended bilinearly and by the Poisson relation."""
    out = ZERO
    for a in x.terms:
        for b in y.terms:
            out = out + _bracket_mono(m, a, b)
    return out


@lru_cache(maxsize=None)
def _bracket_mono(m: AlgebraModel, a: Monomial, b: Monomial) -> Polynomial:
    if m.stable:
        return ZERO
    if a.is_unit or b.is_unit or a == b:
        return ZERO
    head_b, rest_b = b.peel()
    if not rest_b.is_unit:
        # Poisson relation on the second argument
        hp = atom_poly(head_b)
        rp = Polynomial.of_monomial(rest_b)
        ap = Polynomial.of_monomial(a)
        return bracket_eval(ap, hp, m) * rp + hp * bracket_eval(ap, rp, m)
    head_a, rest_a = a.peel()
    if not rest_a.is_unit:
        # symmetric mod 2
        return _bracket_mono(m, b, a)
    return m.bracket_on_atoms(head_a, head_b)


# ---------- higher BV operators ----------

def delta_apply(i: int, p: Polynomial, m: AlgebraModel) -> Polynomial:
    """Delta_i on a polynomial; linear in p, products expand through the
    Cartan diagonal with a bracket defect at the top index."""
    m.check_delta_index(i)
    if i == 0:
        return p
    out = ZERO
    for t in p.terms:
        out = out + _delta_mono(m, i, t)
    return out


@lru_cache(maxsize=None)
def _delta_mono(m: AlgebraModel, i: int, mono: Monomial) -> Polynomial:
    if mono.is_unit:
        return ZERO
    head, rest = mono.peel()
    if rest.is_unit:
        return m.delta_on_atom(i, head)
    x = atom_poly(head)
    y = Polynomial.of_monomial(rest)
    out = ZERO
    if m.top is not None and i == m.top:
        out = out + bracket_eval(x, y, m)
    for eps in range(i + 1):
        out = out + delta_apply(eps, x, m) * delta_apply(i - eps, y, m)
    return out


def delta_on_product(i: int, x: Polynomial, y: Polynomial, m: AlgebraModel) -> Polynomial:
    """Delta_i(x*y) by its product formula: top-index bracket defect plus
    the Cartan sum of Delta_eps x * Delta_gamma y."""
    m.check_delta_index(i)
    out = ZERO
    if m.top is not None and i == m.top:
        out = out + bracket_eval(x, y, m)
    for eps in range(i + 1):
        out = out + delta_apply(eps, x, m) * delta_apply(i - eps, y, m)
    return out


def delta_on_bracket(i: int, x: Polynomial, y: Polynomial, m: AlgebraModel) -> Polynomial:
    """Delta_i{x,y} = sum of {Delta_alpha x, Delta_eps y} over alpha+eps = i."""
    m.check_delta_index(i)
    out = ZERO
    for alpha in range(i + 1):
        out = out + bracket_eval(delta_apply(alpha, x, m), delta_apply(i - alpha, y, m), m)
    return out


def delta_on_q(i: int, j: int, x: Polynomial, m: AlgebraModel) -> Polynomial:
    """Delta_i(Q_j x) without applying Q_j to x directly.

    Expands as sum over k of binom(i-k, k) * Q_{j+2k-i}(Delta_{i-k} x),
    with k limited by 0 <= j+2k-i and, in a finite model, j+2k-i <= n-1,
    plus the bracket defect sum over alpha < beta, alpha+beta = i of
    {Delta_alpha x, Delta_beta x} when j is the top index.
    """
    m.check_delta_index(i)
    m.check_q_index(j)
    degree_of(x)  # reject inhomogeneous input
    out = ZERO
    for k in range(i + 1):
        if lucas_binom(i - k, k) == 0:
            continue
        jq = j + 2 * k - i
        if jq < 0 or (m.top is not None and jq > m.top):
            continue
        out = out + q_lower(jq, delta_apply(i - k, x, m), m)
    if m.top is not None and j == m.top:
        for alpha in range(i + 1):
            beta = i - alpha
            if alpha < beta:
                out = out + bracket_eval(
                    delta_apply(alpha, x, m), delta_apply(beta, x, m), m
                )
    return out


# ---------- Kudo-Araki operations ----------

def q_lower(j: int, p: Polynomial, m: AlgebraModel) -> Polynomial:
    """Q_j on a polynomial.  Q_0 is the Pontryagin square; the top Q is
    quadratic with the bracket as defect, expanded pairwise over the terms
    in canonical order; all other Q_j are additive."""
    m.check_q_index(j)
    if j == 0:
        return p.square()
    terms = p.sorted_terms()
    out = ZERO
    for t in terms:
        out = out + _q_mono(m, j, t)
    if m.top is not None and j == m.top:
        for a, b in itertools.combinations(terms, 2):
            out = out + _bracket_mono(m, a, b)
    return out


def _q_mono(m: AlgebraModel, j: int, mono: Monomial) -> Polynomial:
    if mono.is_unit:
        return ZERO
    head, rest = mono.peel()
    if rest.is_unit:
        return m.q_on_atom(j, head)
    raise MissingActionTable(
        f"Q_{j} on composite monomial {mono} in model {m.name}"
    )


def q_upper(i: int, p: Polynomial, m: AlgebraModel) -> Polynomial:
    """Upper-indexed Kudo-Araki operation: zero below the degree (unstability),
    Q_{i-|p|} otherwise."""
    d = degree_of(p)
    if d is None:
        return ZERO
    if i < d:
        return ZERO
    return q_lower(i - d, p, m)


# ---------- defect and rewrite forms ----------

def bracket_via_bv_defect(x: Polynomial, y: Polynomial, m: AlgebraModel) -> Polynomial:
    """The bracket as the deviation of the top BV operator from being a
    derivation: BV(xy) + BV(x)y + x BV(y)."""
    if m.top is None:
        raise IndexOutOfRange("Delta", -1, m.n)
    bv = m.top
    return (
        delta_apply(bv, x * y, m)
        + delta_apply(bv, x, m) * y
        + x * delta_apply(bv, y, m)
    )


def bracket_with_q1(x: Polynomial, y: Polynomial, m: AlgebraModel) -> Polynomial:
    """Rewrite of {x, Q_1 y} as {{x, y}, y} (two-disks algebras)."""
    return bracket_eval(bracket_eval(x, y, m), y, m)


# ---------- primitives of the rotation-group homology ----------

def exterior_monomials(n: int, degree: int):
    """Exterior monomials in d_1..d_{n-1} of the given degree, as
    descending index tuples."""
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(min(start, remaining), 0, -1):
            acc.append(i)
            rec(i - 1, remaining - i, acc)
            acc.pop()

    rec(n - 1, degree, [])
    return sorted(out)


def exterior_poly(indices) -> Polynomial:
    return Polynomial.of_monomial(
        Monomial.make({d_gen(i): 1 for i in indices})
    )


def _tensor_mul(s1, s2):
    out = set()
    for a1, b1 in s1:
        for a2, b2 in s2:
            left = mono_mul(a1, a2)
            right = mono_mul(b1, b2)
            for lm in left.terms:
                for rm in right.terms:
                    out.symmetric_difference_update(((lm, rm),))
    return frozenset(out)


def cartan_diagonal(mono: Monomial):
    """Full Cartan diagonal of an exterior monomial, as a set of
    (monomial, monomial) pairs over F2."""
    acc = frozenset(((Monomial(), Monomial()),))
    for g, e in mono.powers:
        k = g.indices[0]
        factor = frozenset(
            (
                Monomial.make({d_gen(a): 1} if a else {}),
                Monomial.make({d_gen(k - a): 1} if k - a else {}),
            )
            for a in range(k + 1)
        )
        for _ in range(e):
            acc = _tensor_mul(acc, factor)
    return acc


def primitive_space(degree: int, n: int):
    """Basis of the primitives of the exterior algebra on d_1..d_{n-1}
    under the Cartan diagonal, in the given degree.  Solved by exact F2
    linear algebra on the reduced diagonal."""
    basis = exterior_monomials(n, degree)
    if not basis:
        return []
    pair_index = {}
    columns = []
    for indices in basis:
        mono = Monomial.make({d_gen(i): 1 for i in indices})
        vec = 0
        for a, b in cartan_diagonal(mono):
            if a.is_unit or b.is_unit:
                continue  # reduced diagonal
            key = (a, b)
            if key not in pair_index:
                pair_index[key] = len(pair_index)
            vec ^= 1 << pair_index[key]
        columns.append(vec)
    # kernel of the reduced diagonal via xor-elimination with witnesses
    pivots = {}  # lowest set bit -> (column, witness)
    kernel = []
    for idx, col in enumerate(columns):
        wit = 1 << idx
        while col:
            low = col & -col
            if low not in pivots:
                pivots[low] = (col, wit)
                break
            pcol, pwit = pivots[low]
            col ^= pcol
            wit ^= pwit
        else:
            kernel.append(wit)
    polys = []
    for wit in kernel:
        monos = [
            Monomial.make({d_gen(i): 1 for i in basis[b]})
            for b in range(len(basis))
            if wit >> b & 1
        ]
        polys.append(Polynomial.from_monomials(monos))
    return polys


def compute_primitive(degree: int, n: int) -> Polynomial:
    """The unique nonzero primitive of the exterior algebra on d_1..d_{n-1}
    in the given degree, or zero if none exists."""
    sols = primitive_space(degree, n)
    if not sols:
        return ZERO
    if len(sols) > 1:
        raise ValueError(f"primitive in degree {degree} not unique for n={n}")
    return sols[0]


def primitive_delta(i: int, x: Polynomial, m: AlgebraModel) -> Polynomial:
    """Action of the degree-i primitive: each exterior monomial
    d_{j1}...d_{jr} of the primitive acts as Delta_{j1} o ... o Delta_{jr}."""
    if i % 2 == 0:
        raise EvenIndex(f"primitive operator at even index {i}")
    m.check_delta_index(i)
    if m.primitive_rule is not None:
        val = m.primitive_rule(m, i, x)
        if val is not None:
            return val
    n_eff = m.n if m.n is not None else i + 1
    p = compute_primitive(i, n_eff)
    out = ZERO
    for mono in p.terms:
        val = x
        for g, e in sorted(mono.powers, key=lambda ge: ge[0].indices[0]):
            for _ in range(e):
                val = delta_apply(g.indices[0], val, m)
        out = out + val
    return out


# ---------- expression evaluation ----------

def eval_expr(e: Expr, m: AlgebraModel) -> Polynomial:
    """Canonical polynomial value of an expression in a model."""
    if isinstance(e, Gen):
        return m.gen_poly(e.name)
    if isinstance(e, Component):
        if e.i != 0 and not m.component_support:
            raise UnknownGenerator(f"[{e.i}] in model {m.name} without components")
        return Polynomial.mark(e.i)
    if isinstance(e, Sum):
        out = ZERO
        for t in e.terms:
            out = out + eval_expr(t, m)
        return out
    if isinstance(e, Product):
        return eval_expr(e.left, m) * eval_expr(e.right, m)
    if isinstance(e, Bracket):
        return bracket_eval(eval_expr(e.left, m), eval_expr(e.right, m), m)
    if isinstance(e, Q):
        return q_lower(e.i, eval_expr(e.arg, m), m)
    if isinstance(e, QUpper):
        return q_upper(e.i, eval_expr(e.arg, m), m)
    if isinstance(e, Delta):
        return delta_apply(e.i, eval_expr(e.arg, m), m)
    if isinstance(e, DeltaP):
        return primitive_delta(e.i, eval_expr(e.arg, m), m)
    raise TypeError(f"not an expression: {e!r}")


# ---------- formal scaffolding models ----------

def _word_gen(base: Generator, j: int) -> Generator:
    """Formal Q_j applied to a formal generator: extend the index word."""
    return Generator(base.family, base.indices + (j,), 2 * base.degree + j)


def formal_delta_model(n: Optional[int], x_degree: int = 64) -> AlgebraModel:
    """A formal model with one generator x of large degree, formal values
    Delta_m x, formal Q_j on those, and formal brackets between them.  Used
    to read off the combinatorial structure of ``delta_on_q`` so it can be
    compared against independent computations term by term.
    """
    x = Generator("v", (0,), x_degree)
    top = None if n is None else n - 1
    rng = range(1, 8) if n is None else range(1, n)
    gens = {"v0": x}
    delta_table = {}
    dx = {0: x}
    for mm in rng:
        g = Generator("v", (mm,), x_degree + mm)
        dx[mm] = g
        gens[str(g)] = g
        delta_table[(mm, ("gen", x))] = Polynomial.of_gen(g)

    def q_rule(model, j, atom):
        if atom[0] == "gen" and atom[1].family == "v":
            return Polynomial.of_gen(_word_gen(atom[1], j))
        return None

    bracket_table = {}
    if top is not None:
        for a in range(0, top + 1):
            for b in range(a + 1, top + 1):
                if a in dx and b in dx:
                    br = Generator("b", (a, b), dx[a].degree + dx[b].degree + top)
                    bracket_table[
                        tuple(sorted((("gen", dx[a]), ("gen", dx[b]))))
                    ] = Polynomial.of_gen(br)
    return AlgebraModel(
        name=f"formal(n={n})",
        n=n,
        generators=gens,
        delta_table=delta_table,
        bracket_table=bracket_table,
        bracket_default_zero=False,
        q_rule=q_rule,
    )


def generic_stable_model(x_degree: int = 64) -> AlgebraModel:
    return formal_delta_model(None, x_degree)


# ---------- relation verification ----------

RELATION_IDS = (
    "theo:bat",
    "theo:bat:1",
    "theo:bat:2",
    "higherbv",
    "comm:bv:q",
    "quadratic",
    "poisson",
    "bv-squared-zero",
    "bracket-q1",
    "squares-killed",
    "stable-delta-q",
)


def _record(inp, expected: Polynomial, actual: Polynomial) -> Record:
    return Record(
        input=str(inp),
        expected=str(expected),
        actual=str(actual),
        passed=expected == actual,
    )


def _basis_upto(m: AlgebraModel, bound: int):
    return sorted(m.basis(bound), key=Monomial.sort_key)


def _pairs_upto(m, bound):
    basis = _basis_upto(m, bound)
    for a, b in itertools.combinations_with_replacement(basis, 2):
        if a.degree + b.degree <= bound:
            yield a, b


def verify_relation(relation_id: str, m: AlgebraModel, bound: int, seed: int = 0) -> VerificationReport:
    """Sweep one structural relation over the model basis up to the degree
    bound and report every checked instance.  Failures are report records,
    never exceptions."""
    if relation_id not in RELATION_IDS:
        raise ValueError(f"unknown relation id {relation_id!r}")
    records = []
    params = {"model": m.name, "max_degree": bound}

    if relation_id == "theo:bat":
        for i in range(0, (m.top or 1) + 1):
            for a, b in _pairs_upto(m, bound):
                x, y = Polynomial.of_monomial(a), Polynomial.of_monomial(b)
                lhs = delta_apply(i, x * y, m)
                rhs = delta_on_product(i, x, y, m)
                records.append(_record(f"Delta_{i}({a}*{b})", rhs, lhs))

    elif relation_id == "theo:bat:1":
        tops = [i for i in range(1, (m.top or 2) + 1, 2)] if m.top else [1]
        for i in tops:
            for a, b in _pairs_upto(m, bound):
                x, y = Polynomial.of_monomial(a), Polynomial.of_monomial(b)
                lhs = primitive_delta(i, x * y, m)
                rhs = primitive_delta(i, x, m) * y + x * primitive_delta(i, y, m)
                if m.top is not None and i == m.top:
                    rhs = rhs + bracket_eval(x, y, m)
                records.append(_record(f"DP_{i}({a}*{b})", rhs, lhs))

    elif relation_id == "theo:bat:2":
        for i in range(0, (m.top or 1) + 1):
            for a, b in _pairs_upto(m, bound):
                x, y = Polynomial.of_monomial(a), Polynomial.of_monomial(b)
                lhs = delta_apply(i, bracket_eval(x, y, m), m)
                rhs = delta_on_bracket(i, x, y, m)
                records.append(_record(f"Delta_{i}{{{a},{b}}}", rhs, lhs))

    elif relation_id == "higherbv":
        gens = [g for g in m.generators.values()]
        for i in range(0, (m.top or 1) + 1):
            for j in range(0, (m.top or 1) + 1):
                for g in gens:
                    if 2 * g.degree + j > bound:
                        continue
                    x = Polynomial.of_gen(g)
                    try:
                        lhs = delta_apply(i, q_lower(j, x, m), m)
                    except MissingActionTable:
                        continue
                    rhs = delta_on_q(i, j, x, m)
                    records.append(_record(f"Delta_{i}(Q_{j} {g})", rhs, lhs))

    elif relation_id == "comm:bv:q":
        if m.top != 1:
            raise ValueError("comm:bv:q needs a two-disks model")
        for a in _basis_upto(m, bound):
            x = Polynomial.of_monomial(a)
            dq = delta_on_q(1, 1, x, m)
            dx = delta_apply(1, x, m)
            rhs = bracket_eval(dx, x, m) + dx * dx
            records.append(_record(f"Delta(Q_1 {a}) vs {{Dx,x}}+Dx*Dx", rhs, dq))
            rhs2 = delta_apply(1, x * dx, m)
            records.append(_record(f"Delta(Q_1 {a}) vs Delta({a}*Dx)", rhs2, dq))

    elif relation_id == "quadratic":
        if m.top is None or m.top < 1:
            raise ValueError("quadratic needs a finite model")
        j = m.top
        gens = list(m.generators.values())
        for g1, g2 in itertools.combinations(gens, 2):
            if 2 * max(g1.degree, g2.degree) + j > bound:
                continue
            x, y = Polynomial.of_gen(g1), Polynomial.of_gen(g2)
            try:
                lhs = q_lower(j, x + y, m)
                rhs = q_lower(j, x, m) + q_lower(j, y, m) + bracket_eval(x, y, m)
            except MissingActionTable:
                continue
            records.append(_record(f"Q_{j}({g1}+{g2})", rhs, lhs))

    elif relation_id == "poisson":
        import random

        rng = random.Random(seed)
        params["seed"] = seed
        basis = _basis_upto(m, bound)
        if basis:
            for trial in range(48):
                a, b, c = (rng.choice(basis) for _ in range(3))
                x = Polynomial.of_monomial(a)
                y = Polynomial.of_monomial(b)
                z = Polynomial.of_monomial(c)
                lhs = bracket_eval(x, y * z, m)
                rhs = bracket_eval(x, y, m) * z + y * bracket_eval(x, z, m)
                records.append(_record(f"{{{a},{b}*{c}}}", rhs, lhs))

    elif relation_id == "bv-squared-zero":
        i = m.top if m.top is not None else 1
        for a in _basis_upto(m, bound):
            x = Polynomial.of_monomial(a)
            val = delta_apply(i, delta_apply(i, x, m), m)
            records.append(_record(f"Delta_{i}^2({a})", ZERO, val))

    elif relation_id == "bracket-q1":
        if m.top != 1:
            raise ValueError("bracket-q1 needs a two-disks model")
        for a, b in _pairs_upto(m, bound):
            x, y = Polynomial.of_monomial(a), Polynomial.of_monomial(b)
            try:
                lhs = bracket_eval(x, q_lower(1, y, m), m)
            except MissingActionTable:
                continue
            rhs = bracket_with_q1(x, y, m)
            records.append(_record(f"{{{a},Q_1 {b}}}", rhs, lhs))

    elif relation_id == "squares-killed":
        tops = range(1, (m.top or 2) + 1, 2) if m.top is not None else (1,)
        for i in tops:
            for a in _basis_upto(m, bound // 2):
                x = Polynomial.of_monomial(a)
                val = delta_on_product(i, x, x, m)
                records.append(_record(f"Delta_{i}({a}*{a})", ZERO, val))

    elif relation_id == "stable-delta-q":
        f = generic_stable_model()
        x = f.gen_poly("v0")
        imax = min(bound, 6)
        for i in range(1, imax + 1):
            for j in range(0, imax + 1):
                if 2 * i <= j:
                    continue
                full = delta_on_q(i, j, x, f)
                if i % 2 == 0:
                    claimed = q_lower(j, f.gen_poly(f"v{i // 2}"), f)
                else:
                    claimed = ZERO
                contained = claimed.terms <= full.terms
                residual = full + claimed
                records.append(
                    Record(
                        input=f"Delta_{i} Q_{j} x",
                        expected=f"contains {claimed}",
                        actual=f"{full} (residual {residual})",
                        passed=contained,
                    )
                )

    records.sort(key=lambda r: r.input)
    return VerificationReport(check=relation_id, params=params, records=records)
