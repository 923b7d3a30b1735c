"""Exact mod-2 arithmetic for graded-commutative algebras with exterior parts.

Values are polynomials over F2 in named graded generators, together with an
integer component label modelling the pi0-grading of group-like H-spaces: the
monomial ``u1^2*u2*[-1]`` is a product of generator powers times the class of
the degree ``-1`` component.  Coefficients are implicit (a monomial is either
present or absent), so addition is symmetric difference of term sets and every
element is its own negative.  Exterior generators square to zero: a product
that would raise one to exponent >= 2 collapses to the zero polynomial at
construction time and is never stored.

All values are immutable and hashable; operations are pure functions, so
callers may evaluate disjoint inputs in parallel without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import InhomogeneousPolynomial


def lucas_binom(a: int, b: int) -> int:
    """binomial(a, b) mod 2: 1 iff the bits of b are dominated by those of a."""
    if a < 0 or b < 0:
        return 0
    return 1 if (a & b) == b else 0


@dataclass(frozen=True, order=True)
class Generator:
    """A named graded generator.

    ``family`` and ``indices`` identify the generator (``u``/``d``/``q``/...),
    ``degree`` is its homological degree, ``exterior`` marks square-zero
    generators, and ``pi0`` records the component the class intrinsically
    lives on (nonzero for Kudo-Araki words on [1] and for Theta-image
    classes, zero for everything else).
    """

    family: str
    indices: tuple
    degree: int
    exterior: bool = False
    pi0: int = 0

    def __str__(self):
        return self.family + "_".join(str(i) for i in self.indices)


def u_gen(n: int, k: int = 1) -> Generator:
    """Polynomial generator of a double-loop-space model, |u_n| = 2^(n-1)(k+1)-1."""
    return Generator("u", (n,), (1 << (n - 1)) * (k + 1) - 1)


def d_gen(i: int) -> Generator:
    """Exterior degree-i generator of the homology of a rotation group."""
    return Generator("d", (i,), i, exterior=True)


def theta_gen(d: int) -> Generator:
    """Theta-image class of degree d; lives on the degree-1 component."""
    return Generator("t", (d,), d, pi0=1)


def q_word(letters: Iterable[int]) -> Generator:
    """Upper-indexed Kudo-Araki word applied to [1]; degree is the letter sum."""
    letters = tuple(letters)
    return Generator("q", letters, sum(letters), pi0=1 << len(letters))


def spherical_gen(degree: int, letters: Iterable[int] = ()) -> Generator:
    """Abstract spherical primitive of the given degree, possibly under a
    Kudo-Araki word (upper letters recorded after the base degree)."""
    letters = tuple(letters)
    return Generator("s", (degree,) + letters, degree + sum(letters))


@dataclass(frozen=True)
class Monomial:
    """A product of generator powers times a component mark ``[component]``.

    ``powers`` is sorted by generator and holds strictly positive exponents;
    exterior generators never carry exponent >= 2.
    """

    powers: tuple = ()
    component: int = 0

    @staticmethod
    def make(powers: dict, component: int = 0) -> "Monomial":
        items = tuple(sorted((g, e) for g, e in powers.items() if e != 0))
        for g, e in items:
            if e < 0:
                raise ValueError(f"negative exponent on {g}")
            if g.exterior and e >= 2:
                raise ValueError(f"exterior generator {g} squared")
        return Monomial(items, component)

    @staticmethod
    def of(gen: Generator) -> "Monomial":
        return Monomial(((gen, 1),), 0)

    @staticmethod
    def mark(i: int) -> "Monomial":
        return Monomial((), i)

    @property
    def degree(self) -> int:
        return sum(g.degree * e for g, e in self.powers)

    @property
    def total_component(self) -> int:
        """Component mark plus the intrinsic components of the generators."""
        return self.component + sum(g.pi0 * e for g, e in self.powers)

    @property
    def is_unit(self) -> bool:
        return not self.powers and self.component == 0

    def positive_factor_count(self) -> int:
        return sum(e for g, e in self.powers if g.degree > 0)

    def peel(self):
        """Split off one factor: (('gen', g) | ('mark', +-1), rest).

        Returns None for the unit monomial.  Used to evaluate operations by
        their product rules one factor at a time.
        """
        if self.powers:
            g, e = self.powers[0]
            rest = ((g, e - 1),) + self.powers[1:] if e > 1 else self.powers[1:]
            return ("gen", g), Monomial(rest, self.component)
        if self.component != 0:
            s = 1 if self.component > 0 else -1
            return ("mark", s), Monomial((), self.component - s)
        return None

    def sort_key(self):
        return (
            self.degree,
            self.component,
            tuple((g.family, g.indices, e) for g, e in self.powers),
        )

    def __str__(self):
        parts = []
        for g, e in self.powers:
            parts.append(str(g) if e == 1 else f"{g}^{e}")
        if self.component != 0:
            parts.append(f"[{self.component}]")
        return "*".join(parts) if parts else "1"


UNIT = Monomial()


def mono_mul(a: Monomial, b: Monomial) -> "Polynomial":
    """Product of monomials: exponents and components add; zero polynomial
    when an exterior generator would reach exponent 2."""
    powers = dict(a.powers)
    for g, e in b.powers:
        ne = powers.get(g, 0) + e
        if g.exterior and ne >= 2:
            return Polynomial.zero()
        powers[g] = ne
    return Polynomial.of_monomial(Monomial.make(powers, a.component + b.component))


@dataclass(frozen=True)
class Polynomial:
    """A finite F2-sum of monomials, stored as the set of present terms."""

    terms: frozenset = frozenset()

    @staticmethod
    def zero() -> "Polynomial":
        return _ZERO

    @staticmethod
    def one() -> "Polynomial":
        return _ONE

    @staticmethod
    def of_monomial(m: Monomial) -> "Polynomial":
        return Polynomial(frozenset((m,)))

    @staticmethod
    def of_gen(gen: Generator) -> "Polynomial":
        return Polynomial.of_monomial(Monomial.of(gen))

    @staticmethod
    def mark(i: int) -> "Polynomial":
        return Polynomial.of_monomial(Monomial.mark(i))

    @staticmethod
    def from_monomials(monos: Iterable[Monomial]) -> "Polynomial":
        acc = set()
        for m in monos:
            acc.symmetric_difference_update((m,))
        return Polynomial(frozenset(acc))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(self.terms.symmetric_difference(other.terms))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        acc = set()
        for a in self.terms:
            for b in other.terms:
                acc.symmetric_difference_update(mono_mul(a, b).terms)
        return Polynomial(frozenset(acc))

    def square(self) -> "Polynomial":
        # cross terms cancel mod 2, exterior squares drop out
        acc = set()
        for a in self.terms:
            acc.symmetric_difference_update(mono_mul(a, a).terms)
        return Polynomial(frozenset(acc))

    def __bool__(self):
        return bool(self.terms)

    def shifted(self, i: int) -> "Polynomial":
        """Multiply by the component mark [i]."""
        return self * Polynomial.mark(i)

    def sorted_terms(self):
        return sorted(self.terms, key=Monomial.sort_key)

    def __str__(self):
        if not self.terms:
            return "0"
        return "+".join(str(m) for m in self.sorted_terms())


_ZERO = Polynomial(frozenset())
_ONE = Polynomial(frozenset((UNIT,)))


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def degree_of(p: Polynomial) -> Optional[int]:
    """Common degree of a homogeneous polynomial, None for zero."""
    degs = {m.degree for m in p.terms}
    if not degs:
        return None
    if len(degs) > 1:
        raise InhomogeneousPolynomial(f"degrees {sorted(degs)} in {p}")
    return degs.pop()
