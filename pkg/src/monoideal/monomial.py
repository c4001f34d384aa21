"""Purely combinatorial operations on monomial ideals.

Everything here works on minimal generating sets of exponent vectors:
colons, intersections, radicals, Hilbert data, socles, irreducible
decomposition, the Gorenstein/primary/prime predicates, equal-colon witness
searches, and the socle-coefficient matrix test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import InternalCheckError, PreconditionError
from .linalg import rank
from .orders import TermOrder
from .poly import (
    ev_add,
    ev_degree,
    ev_divides,
    ev_lcm,
    ev_squarefree,
    ev_sub,
    ev_support,
)


def _minimalize(exps):
    """Antichain of divisibility-minimal exponent vectors."""
    out = []
    for e in sorted(set(exps), key=lambda e: (sum(e), e)):
        if not any(ev_divides(k, e) for k in out):
            out.append(e)
    return frozenset(out)


def _degree_exponents(n, d):
    """All exponent vectors of length n and total degree d."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _degree_exponents(n - 1, d - first):
            yield (first,) + rest


def as_exponent(u):
    """Exponent tuple of a monomial given as a Polynomial or a tuple."""
    if hasattr(u, "coeffs"):
        if not u.is_monomial():
            raise PreconditionError(f"{u} is not a monomial")
        (e,) = u.coeffs
        return e
    return tuple(u)


class MonomialIdeal:
    """A monomial ideal held as its unique minimal generating set."""

    __slots__ = ("ring", "min_gens")

    def __init__(self, ring, exponents):
        self.ring = ring
        exps = [tuple(e) for e in exponents]
        for e in exps:
            if len(e) != ring.n or any(v < 0 for v in e):
                raise ValueError(f"bad exponent vector {e}")
        self.min_gens = _minimalize(exps)

    # -- constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    @classmethod
    def maximal(cls, ring):
        eye = []
        for i in range(ring.n):
            e = [0] * ring.n
            e[i] = 1
            eye.append(tuple(e))
        return cls(ring, eye)

    @classmethod
    def pure_powers(cls, ring, b):
        """The ideal generated by x_i^{b_i} for every i (all b_i >= 1)."""
        b = tuple(b)
        if len(b) != ring.n or any(v < 1 for v in b):
            raise ValueError("pure-power exponents must all be positive")
        gens = []
        for i, v in enumerate(b):
            e = [0] * ring.n
            e[i] = v
            gens.append(tuple(e))
        return cls(ring, gens)

    @classmethod
    def from_polys(cls, ring, polys):
        exps = []
        for f in polys:
            if not f.is_monomial():
                raise PreconditionError(f"{f} is not a monomial")
            exps.extend(f.coeffs)
        return cls(ring, exps)

    # -- basic structure -----------------------------------------------------------

    def is_zero(self):
        return not self.min_gens

    def is_unit(self):
        return (0,) * self.ring.n in self.min_gens

    def contains_exp(self, e):
        e = tuple(e)
        return any(ev_divides(g, e) for g in self.min_gens)

    def contains(self, other):
        """Containment of another monomial ideal."""
        return all(self.contains_exp(g) for g in other.min_gens)

    def sorted_gens(self):
        order = TermOrder.grevlex(self.ring.n)
        return sorted(self.min_gens, key=order.key, reverse=True)

    def generators(self):
        """Minimal generators as Polynomial values."""
        return [self.ring.monomial(e) for e in self.sorted_gens()]

    def to_ideal(self):
        from .groebner import Ideal

        return Ideal(self.ring, self.generators())

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.ring == other.ring
            and self.min_gens == other.min_gens
        )

    def __hash__(self):
        return hash((self.ring, self.min_gens))

    def __str__(self):
        if self.is_zero():
            return "(0)"
        from .poly import _monomial_str

        return "(" + ", ".join(
            _monomial_str(self.ring, e) or "1" for e in self.sorted_gens()
        ) + ")"

    __repr__ = __str__

    # -- lattice operations -----------------------------------------------------------

    def colon(self, u):
        """The colon by a single monomial u."""
        u = self._exp_of(u)
        return MonomialIdeal(
            self.ring, [ev_sub(ev_lcm(g, u), u) for g in self.min_gens]
        )

    def colon_ideal(self, other):
        """The colon by another monomial ideal."""
        if other.is_zero():
            return MonomialIdeal(self.ring, [(0,) * self.ring.n])
        out = None
        for u in other.sorted_gens():
            q = self.colon(u)
            out = q if out is None else out.intersect(q)
        return out

    def intersect(self, other):
        return MonomialIdeal(
            self.ring,
            [ev_lcm(a, b) for a in self.min_gens for b in other.min_gens],
        )

    def plus(self, other):
        return MonomialIdeal(self.ring, list(self.min_gens) + list(other.min_gens))

    def times(self, other):
        return MonomialIdeal(
            self.ring,
            [ev_add(a, b) for a in self.min_gens for b in other.min_gens],
        )

    def scaled(self, u):
        """Multiply every generator by the monomial u."""
        u = self._exp_of(u)
        return MonomialIdeal(self.ring, [ev_add(g, u) for g in self.min_gens])

    def radical(self):
        return MonomialIdeal(self.ring, [ev_squarefree(g) for g in self.min_gens])

    def _exp_of(self, u):
        return as_exponent(u)

    # -- Artinian structure -----------------------------------------------------------

    def pure_power_bounds(self):
        """Least pure power of each variable, or None when a variable has none."""
        n = self.ring.n
        bounds = [None] * n
        for g in self.min_gens:
            sup = ev_support(g)
            if len(sup) == 0:
                return [0] * n  # unit ideal
            if len(sup) == 1:
                i = sup[0]
                if bounds[i] is None or g[i] < bounds[i]:
                    bounds[i] = g[i]
        if any(b is None for b in bounds):
            return None
        return bounds

    def is_artinian(self):
        return self.pure_power_bounds() is not None

    def _standard_box(self):
        """All standard monomials (requires Artinian)."""
        bounds = self.pure_power_bounds()
        if bounds is None:
            raise PreconditionError("not an Artinian monomial ideal")
        out = []
        for e in itertools.product(*(range(b) for b in bounds)):
            if not self.contains_exp(e):
                out.append(e)
        return out

    def power_gap(self):
        """Least s with every degree-s monomial in the ideal."""
        std = self._standard_box()
        return 1 + max((ev_degree(e) for e in std), default=-1)

    def standard_monomials(self, d):
        """Degree-d monomials outside the ideal, grevlex descending."""
        order = TermOrder.grevlex(self.ring.n)
        out = [
            e
            for e in _degree_exponents(self.ring.n, d)
            if not self.contains_exp(e)
        ]
        out.sort(key=order.key, reverse=True)
        return out

    def hilbert_function(self, max_degree=None):
        """Counts of standard monomials per degree, 0..max_degree.

        With no bound (Artinian only) the list covers every nonzero value.
        """
        if max_degree is None:
            max_degree = self.power_gap() - 1
        return [len(self.standard_monomials(d)) for d in range(max_degree + 1)]

    def socle_monomials(self):
        """Standard monomials killed by every variable, grevlex descending."""
        if not self.is_artinian():
            raise PreconditionError("socle requires an Artinian monomial ideal")
        n = self.ring.n
        order = TermOrder.grevlex(n)
        out = []
        for e in self._standard_box():
            if all(
                self.contains_exp(e[:i] + (e[i] + 1,) + e[i + 1 :]) for i in range(n)
            ):
                out.append(e)
        out.sort(key=order.key, reverse=True)
        return out

    def irreducible_decomposition(self):
        """Exponents c of the irreducible components (x_1^{c_1}, .., x_n^{c_n}).

        Components correspond to socle monomials shifted by one; the result
        is re-intersected and checked against the ideal.
        """
        comps = [
            tuple(v + 1 for v in b) for b in self.socle_monomials()
        ]
        meet = MonomialIdeal(self.ring, [(0,) * self.ring.n])
        for c in comps:
            meet = meet.intersect(MonomialIdeal.pure_powers(self.ring, c))
        if meet != self:
            raise InternalCheckError("irreducible components do not intersect back")
        return comps

    # -- predicates -----------------------------------------------------------

    def is_gorenstein(self):
        """One-dimensional socle; must agree with the pure-power-form test."""
        via_socle = len(self.socle_monomials()) == 1
        covered = set()
        pure = True
        for g in self.min_gens:
            sup = ev_support(g)
            if len(sup) != 1:
                pure = False
                break
            covered.add(sup[0])
        via_shape = pure and covered == set(range(self.ring.n)) and bool(self.min_gens)
        if via_socle != via_shape:
            raise InternalCheckError(
                "socle count and pure-power form disagree on Gorenstein-ness"
            )
        return via_socle

    def is_primary(self):
        """Every variable touching a generator has a pure power in the ideal."""
        bounds = [False] * self.ring.n
        touched = set()
        for g in self.min_gens:
            sup = ev_support(g)
            touched.update(sup)
            if len(sup) == 1:
                bounds[sup[0]] = True
        return all(bounds[i] for i in touched)

    def is_prime(self):
        return all(ev_degree(g) == 1 for g in self.min_gens)

    # -- equal-colon searches -----------------------------------------------------------

    def equal_colon_classes(self, max_degree=None):
        """Classes of same-degree standard monomials with identical colons.

        Only classes of size >= 2 are returned, as (degree, members) pairs
        with members grevlex descending.  The search is capped at the top
        standard degree by default.
        """
        if max_degree is None:
            max_degree = self.power_gap() - 1
        out = []
        for d in range(1, max_degree + 1):
            groups = {}
            for u in self.standard_monomials(d):
                groups.setdefault(self.colon(u).min_gens, []).append(u)
            for members in groups.values():
                if len(members) > 1:
                    out.append((d, members))
        return out

    def equal_colon_witnesses(self, max_degree=None):
        """All unordered same-degree standard pairs with equal colons."""
        pairs = []
        for _, members in self.equal_colon_classes(max_degree):
            pairs.extend(itertools.combinations(members, 2))
        return pairs


# ------------------------------------------------------------------ socle matrices


@dataclass
class SocleMatrix:
    """Coefficients of polynomials supported on the socle monomials.

    ``columns[j][i]`` is the coefficient of the i-th socle monomial in the
    j-th polynomial.
    """

    ideal: MonomialIdeal
    socle: list
    columns: list = dc_field(default_factory=list)


def socle_matrix(M, polys):
    """Express polynomials in socle-monomial coordinates.

    Every polynomial must be a nonzero combination of socle monomials of M.
    """
    socle = M.socle_monomials()
    index = {u: i for i, u in enumerate(socle)}
    cols = []
    for f in polys:
        if f.is_zero():
            raise PreconditionError("zero column in socle matrix")
        col = [0] * len(socle)
        for e, c in f.coeffs.items():
            if e not in index:
                raise PreconditionError(
                    f"{f} is not supported on the socle monomials"
                )
            col[index[e]] = c
        cols.append(col)
    return SocleMatrix(M, socle, cols)


def socle_matrix_test(S):
    """True when no coordinate vector lies in the column span.

    Equivalently: adjoining the socle combinations to the ideal adds no new
    monomials.  Decided by exact rank comparisons.
    """
    r = len(S.socle)
    s = len(S.columns)
    field = S.ideal.ring.field
    rows = [[S.columns[j][i] for j in range(s)] for i in range(r)]
    base = rank(rows, field)
    for i in range(r):
        aug = [rows[k] + [1 if k == i else 0] for k in range(r)]
        if rank(aug, field) == base:
            return False
    return True


def mono_subideal_criterion(I, M):
    """Is the Artinian monomial subideal M the largest monomial subideal of I?

    Uses the socle test: the answer is yes exactly when I contains no socle
    monomial of M.  M must be contained in I.
    """
    if not M.is_artinian():
        raise PreconditionError("criterion requires an Artinian monomial ideal")
    ring = I.ring
    for g in M.sorted_gens():
        if not I.contains(ring.monomial(g)):
            raise PreconditionError("monomial ideal is not contained in the ideal")
    return not any(I.contains(ring.monomial(u)) for u in M.socle_monomials())
