"""Largest monomial subideal of an ideal, by three routes, plus the smallest
monomial over-ideal and a characteristic scanner.

The saturation route works for arbitrary ideals: multi-homogenize the
generators, saturate by the product of the companion variables, read the
monomials out of a reduced basis for a companion-first elimination order, and
set the companions to one.  The colon-formula route applies to unmixed ideals
carrying a monomial regular sequence, and the brute-force route is an
independent degree-by-degree membership sweep for Artinian input.  Every
result is self-certifying: each reported generator is re-verified as a member
before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalCheckError, ParseError, PreconditionError
from .fields import FieldSpec
from .groebner import Ideal, divide
from .monomial import MonomialIdeal, _degree_exponents, as_exponent
from .orders import TermOrder
from .parse import parse_source
from .poly import ev_degree, ev_support, fresh_names, multi_homogenize

DEFAULT_DEGREE_CEILING = 30


@dataclass
class MonoResult:
    """A computed largest-monomial-subideal with its provenance."""

    mono: MonomialIdeal
    method: str
    field: FieldSpec
    certificate: list | None = None


def _verify_members(I, M, method):
    ring = I.ring
    for e in M.sorted_gens():
        if not I.contains(ring.monomial(e)):
            raise InternalCheckError(
                f"method {method} produced a non-member generator"
            )


def _certificate(I, M):
    """Division records proving each generator's membership."""
    ring = I.ring
    basis = I.groebner_basis()
    cert = []
    for e in M.sorted_gens():
        qs, r = divide(ring.monomial(e), basis)
        if not r.is_zero():
            raise InternalCheckError("certificate division left a remainder")
        cert.append(
            (ring.monomial(e), tuple((q, g) for q, g in zip(qs, basis) if not q.is_zero()))
        )
    return cert


def mono_via_gb(I, certify=False):
    """Largest monomial subideal via saturation and elimination.

    Works for any ideal.  Multi-homogenizes each generator with one companion
    variable per original variable, saturates by the product of all
    companions, and collects the monomial elements of the reduced basis under
    a companions-first block order, specialized at companion = 1.
    """
    ring = I.ring
    n = ring.n
    if I.is_zero():
        result = MonomialIdeal.zero(ring)
        return MonoResult(result, "gb", ring.field)
    ynames = fresh_names(ring, [f"y{i + 1}" for i in range(n)])
    ext = ring.extended(ynames)
    homog = [multi_homogenize(g, ext) for g in I.gens]
    yfirst = TermOrder(ext.n, [(range(n, 2 * n), "grevlex"), (range(n), "grevlex")])
    yprod = (0,) * n + (1,) * n
    sat = Ideal(ext, homog).saturate(yprod, order=yfirst)
    basis = sat.groebner_basis(yfirst)
    exps = []
    for g in basis:
        if g.is_monomial():
            (e,) = g.coeffs
            exps.append(e[:n])
    M = MonomialIdeal(ring, exps)
    _verify_members(I, M, "gb")
    cert = _certificate(I, M) if certify else None
    return MonoResult(M, "gb", ring.field, cert)


def mono_upper(I):
    """Smallest monomial ideal containing I: all terms of the generators."""
    exps = []
    for g in I.gens:
        exps.extend(g.coeffs)
    return MonomialIdeal(I.ring, exps)


def _least_pure_power(I, i, ceiling):
    """Smallest a with x_i^a in I, by doubling then bisection; None if > ceiling."""
    ring = I.ring

    def member(a):
        e = [0] * ring.n
        e[i] = a
        return I.contains(ring.monomial(e))

    hi = 1
    while hi <= ceiling and not member(hi):
        hi *= 2
    if hi > ceiling:
        if hi // 2 < ceiling and member(ceiling):
            hi = ceiling
        else:
            return None
    lo = hi // 2  # member(lo) known False (or lo == 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if member(mid):
            hi = mid
        else:
            lo = mid
    return hi


def _auto_beta(I, ceiling):
    ring = I.ring
    beta = []
    for i in range(ring.n):
        a = _least_pure_power(I, i, ceiling)
        if a is None:
            raise PreconditionError(
                f"no pure power of {ring.variables[i]} found up to degree {ceiling}; "
                "supply the monomial regular sequence explicitly"
            )
        e = [0] * ring.n
        e[i] = a
        beta.append(tuple(e))
    return beta


def mono_via_puv(I, beta=None, ceiling=DEFAULT_DEGREE_CEILING, cross_check=True):
    """Largest monomial subideal via the colon formula.

    Requires an unmixed ideal with a regular sequence ``beta`` of monomials
    in I, one per codimension.  For Artinian input beta defaults to the least
    pure powers of the variables found in I.  The result is cross-checked
    against the saturation route and must agree exactly.
    """
    ring = I.ring
    if beta is None:
        beta = _auto_beta(I, ceiling)
    else:
        beta = [as_exponent(b) for b in beta]
        for e in beta:
            if not I.contains(ring.monomial(e)):
                raise PreconditionError(f"beta element x^{e} is not in the ideal")
        supports = [set(ev_support(e)) for e in beta]
        for i in range(len(beta)):
            for j in range(i + 1, len(beta)):
                if supports[i] & supports[j]:
                    raise PreconditionError(
                        "beta is not a monomial regular sequence "
                        "(variable supports overlap)"
                    )
    B = Ideal(ring, [ring.monomial(e) for e in beta])
    quotient = B.colon_ideal(I)
    upper = mono_upper(quotient)
    Bm = MonomialIdeal(ring, beta)
    M = Bm.colon_ideal(upper)
    _verify_members(I, M, "puv")
    if cross_check:
        ref = mono_via_gb(I)
        if ref.mono != M:
            raise InternalCheckError(
                "colon-formula route disagrees with the saturation route"
            )
    return MonoResult(M, "puv", ring.field)


def mono_oracle(I, ceiling=DEFAULT_DEGREE_CEILING):
    """Brute-force largest monomial subideal for Artinian ideals.

    Finds the least s with every degree-s monomial in I, then collects all
    member monomials of lower degree.  Entirely membership-driven, so it is
    independent of the saturation and colon routes.
    """
    ring = I.ring
    n = ring.n
    if I.contains(ring.one()):
        return MonoResult(
            MonomialIdeal(ring, [(0,) * n]), "oracle", ring.field
        )
    bound = 1
    for i in range(n):
        a = _least_pure_power(I, i, ceiling)
        if a is None:
            raise PreconditionError(
                f"not Artinian within degree ceiling {ceiling}: "
                f"no pure power of {ring.variables[i]}"
            )
        bound += a - 1
    gap = None
    for s in range(1, bound + 1):
        if all(I.contains(ring.monomial(e)) for e in _degree_exponents(n, s)):
            gap = s
            break
    if gap is None:
        # degree `bound` forces some exponent past its pure power
        raise InternalCheckError("membership sweep missed the guaranteed degree")
    exps = list(_degree_exponents(n, gap))
    for d in range(1, gap):
        for e in _degree_exponents(n, d):
            if I.contains(ring.monomial(e)):
                exps.append(e)
    M = MonomialIdeal(ring, exps)
    return MonoResult(M, "oracle", ring.field)


# ------------------------------------------------------------------ char scan


@dataclass
class CharScanResult:
    """Minimal generators of the largest monomial subideal per ground field."""

    ideal_name: str
    fields: list
    generators: dict  # FieldSpec -> tuple of exponent vectors (sorted)
    variables: tuple

    def union(self):
        seen = []
        for f in self.fields:
            for e in self.generators[f]:
                if e not in seen:
                    seen.append(e)
        order = TermOrder.grevlex(len(self.variables))
        return sorted(seen, key=order.key, reverse=True)

    def common(self):
        sets = [set(self.generators[f]) for f in self.fields]
        out = set.intersection(*sets) if sets else set()
        return out

    def field_dependent(self):
        """(exponent, fields-that-have-it) for every non-universal generator."""
        common = self.common()
        out = []
        for e in self.union():
            if e not in common:
                out.append((e, [f for f in self.fields if e in set(self.generators[f])]))
        return out


def char_scan(text, ideal_name, primes, include_char_zero=True):
    """Largest monomial subideal of an integer-coefficient ideal over several
    prime fields (and optionally the rationals), with a difference report.
    """
    fields = []
    if include_char_zero:
        fields.append(FieldSpec(0))
    for p in sorted(set(primes)):
        try:
            fields.append(FieldSpec(p))
        except ValueError as exc:
            raise PreconditionError(str(exc)) from None
    if not fields:
        raise PreconditionError("no fields requested")

    ring0, ideals0 = parse_source(text, field_override=FieldSpec(0))
    if ideal_name not in ideals0:
        raise ParseError(f"no ideal named {ideal_name!r} in the input")
    for g in ideals0[ideal_name].gens:
        if any(c.denominator != 1 for c in g.coeffs.values()):
            raise PreconditionError(
                "characteristic scan requires integer coefficients"
            )

    generators = {}
    for f in fields:
        ring, ideals = parse_source(text, field_override=f)
        res = mono_via_gb(ideals[ideal_name])
        generators[f] = tuple(res.mono.sorted_gens())
    return CharScanResult(ideal_name, fields, generators, ring0.variables)
