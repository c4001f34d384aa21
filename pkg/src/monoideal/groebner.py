"""Groebner engine: division with remainder, Buchberger's algorithm with
reduced bases, elimination, saturation, intersection, and ideal quotients.

Coefficient arithmetic is exact everywhere.  Over the rationals the inner
loops run fraction-free on integer-cleared polynomials, dividing by content
after each reduction; over a prime field everything stays reduced mod p.
Pair pruning uses the coprime-lead and chain criteria in the standard
Gebauer-Moeller bookkeeping, with the normal (smallest lcm first) selection
strategy, so recomputations are bit-for-bit deterministic.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

from .errors import InternalCheckError, PreconditionError
from .orders import TermOrder
from .poly import (
    Polynomial,
    RingContext,
    embed,
    ev_add,
    ev_divides,
    ev_lcm,
    ev_sub,
    fresh_names,
    project,
)

# ------------------------------------------------------------- raw machinery
#
# Inside this module a polynomial is a plain dict {exponent tuple: int}.
# Char 0 basis elements are primitive: integer coefficients, content 1,
# positive leading coefficient.  Char p basis elements are monic mod p.


class _BP:
    __slots__ = ("coeffs", "lead", "lc", "tail")

    def __init__(self, coeffs, order):
        self.coeffs = coeffs
        self.lead = max(coeffs, key=order.key)
        self.lc = coeffs[self.lead]
        self.tail = [(e, c) for e, c in coeffs.items() if e != self.lead]


def _clear_denominators(coeffs):
    """Scale a char-0 coefficient dict to ints; returns (dict, multiplier)."""
    den = 1
    for c in coeffs.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    if den == 1:
        return {e: int(c) for e, c in coeffs.items()}, 1
    return {e: int(c * den) for e, c in coeffs.items()}, den


def _normalized(coeffs, order, char, p):
    """Primitive (char 0) or monic (char p) copy of a nonzero raw dict."""
    if char == 0:
        lead = max(coeffs, key=order.key)
        g = 0
        for c in coeffs.values():
            g = gcd(g, c)
        if coeffs[lead] < 0:
            g = -g
        if g != 1:
            coeffs = {e: c // g for e, c in coeffs.items()}
        return coeffs
    lead = max(coeffs, key=order.key)
    m = pow(coeffs[lead], -1, p)
    if m != 1:
        coeffs = {e: c * m % p for e, c in coeffs.items()}
    return coeffs


def _nf(coeffs, basis, order, char, p, negkeys=None):
    """Fraction-free remainder of ``coeffs`` against ``basis``.

    Returns (remainder, lam) with lam * input == remainder modulo the ideal
    generated by the basis; lam is a positive int (always 1 in char p).  The
    remainder has no term divisible by any basis lead.
    """
    if not coeffs:
        return {}, 1
    if negkeys is None:
        negkeys = {}
    key = order.key
    work = dict(coeffs)
    heap = []
    for e in work:
        nk = negkeys.get(e)
        if nk is None:
            nk = negkeys[e] = tuple(-v for v in key(e))
        heap.append((nk, e))
    heapq.heapify(heap)
    push = heapq.heappush
    r = {}
    lam = 1
    while heap:
        _, u = heapq.heappop(heap)
        c = work.pop(u, 0)
        if not c:
            continue
        red = None
        for b in basis:
            if ev_divides(b.lead, u):
                red = b
                break
        if red is None:
            r[u] = c
            continue
        delta = ev_sub(u, red.lead)
        if char == 0:
            g = gcd(red.lc, c)
            s = red.lc // g
            if s != 1:
                lam *= s
                for k in work:
                    work[k] *= s
                for k in r:
                    r[k] *= s
            m = c // g
            for e, ce in red.tail:
                v = ev_add(e, delta)
                old = work.get(v)
                if old is None:
                    nv = -m * ce
                    if nv:
                        work[v] = nv
                        nk = negkeys.get(v)
                        if nk is None:
                            nk = negkeys[v] = tuple(-x for x in key(v))
                        push(heap, (nk, v))
                else:
                    nv = old - m * ce
                    if nv:
                        work[v] = nv
                    else:
                        del work[v]
        else:
            for e, ce in red.tail:
                v = ev_add(e, delta)
                old = work.get(v)
                if old is None:
                    nv = -c * ce % p
                    if nv:
                        work[v] = nv
                        nk = negkeys.get(v)
                        if nk is None:
                            nk = negkeys[v] = tuple(-x for x in key(v))
                        push(heap, (nk, v))
                else:
                    nv = (old - c * ce) % p
                    if nv:
                        work[v] = nv
                    else:
                        del work[v]
    return r, lam


def _spoly(b1, b2, char, p):
    l = ev_lcm(b1.lead, b2.lead)
    d1 = ev_sub(l, b1.lead)
    d2 = ev_sub(l, b2.lead)
    if char == 0:
        g = gcd(b1.lc, b2.lc)
        m1 = b2.lc // g
        m2 = b1.lc // g
    else:
        m1 = m2 = 1  # both monic
    s = {}
    for e, c in b1.coeffs.items():
        s[ev_add(e, d1)] = m1 * c
    for e, c in b2.coeffs.items():
        v = ev_add(e, d2)
        nv = s.get(v, 0) - m2 * c
        if char:
            nv %= p
        if nv:
            s[v] = nv
        else:
            s.pop(v, None)
    return s


def _update(G, P, f, order):
    """Gebauer-Moeller pair update (chain + coprime-lead pruning)."""
    key = order.key
    lmf = f.lead
    m = len(G)
    retained = set()
    for i, j in P:
        lij = ev_lcm(G[i].lead, G[j].lead)
        if (
            not ev_divides(lmf, lij)
            or lij == ev_lcm(G[i].lead, lmf)
            or lij == ev_lcm(G[j].lead, lmf)
        ):
            retained.add((i, j))
    groups = {}
    for i in range(m):
        groups.setdefault(ev_lcm(G[i].lead, lmf), []).append(i)
    minimal = []
    for L in sorted(groups, key=key):
        if not any(ev_divides(Lk, L) for Lk in minimal):
            minimal.append(L)
    for L in minimal:
        members = groups[L]
        if not any(ev_lcm(G[i].lead, lmf) == ev_add(G[i].lead, lmf) for i in members):
            retained.add((min(members), m))
    G.append(f)
    return G, retained


def _autoreduce(G, order, char, p):
    """Minimalize leads, fully reduce tails, sort descending by lead."""
    key = order.key
    mins = []
    for b in sorted(G, key=lambda b: key(b.lead)):
        if not any(ev_divides(k.lead, b.lead) for k in mins):
            mins.append(b)
    out = []
    for i, b in enumerate(mins):
        others = mins[:i] + mins[i + 1 :]
        r, _ = _nf(dict(b.coeffs), others, order, char, p)
        out.append(_BP(_normalized(r, order, char, p), order))
    out.sort(key=lambda b: key(b.lead), reverse=True)
    return out


def _buchberger(dicts, order, char, p):
    negkeys = {}
    seed = []
    for d in dicts:
        if d:
            seed.append(_BP(_normalized(d, order, char, p), order))
    seed.sort(key=lambda b: (order.key(b.lead), sorted(b.coeffs.items())))
    G, P = [], set()
    for b in seed:
        G, P = _update(G, P, b, order)
    key = order.key
    while P:
        pick = min(
            P, key=lambda ij: (key(ev_lcm(G[ij[0]].lead, G[ij[1]].lead)), ij[1], ij[0])
        )
        P.remove(pick)
        s = _spoly(G[pick[0]], G[pick[1]], char, p)
        if not s:
            continue
        r, _ = _nf(s, G, order, char, p, negkeys)
        if r:
            G, P = _update(G, P, _BP(_normalized(r, order, char, p), order), order)
    return _autoreduce(G, order, char, p)


class _Basis:
    """A cached reduced Groebner basis, in both monic and primitive form."""

    __slots__ = ("order", "bps", "polys")

    def __init__(self, ring, order, bps):
        self.order = order
        self.bps = bps
        field = ring.field
        polys = []
        for b in bps:
            if field.characteristic == 0 and b.lc != 1:
                lc = b.lc
                polys.append(
                    Polynomial._raw(ring, {e: field.of(c, lc) for e, c in b.coeffs.items()})
                )
            else:
                polys.append(Polynomial._raw(ring, dict(b.coeffs)))
        self.polys = tuple(polys)


def _basis_from_reduced(ring, order, polys):
    """Wrap monic polynomials already known to form a reduced basis."""
    char = ring.field.characteristic
    bps = []
    for f in polys:
        if char == 0:
            ints, _ = _clear_denominators(f.coeffs)
            bps.append(_BP(_normalized(ints, order, 0, 0), order))
        else:
            bps.append(_BP(dict(f.coeffs), order))
    return _Basis(ring, order, bps)


# ------------------------------------------------------------------ division


def divide(f, divisors, order=None):
    """Multivariate division: f = sum q_i * divisors_i + r.

    No term of r is divisible by the lead of any divisor.  Exact field
    arithmetic throughout; returns (quotients, remainder).
    """
    ring = f.ring
    order = order or TermOrder.grevlex(ring.n)
    field = ring.field
    leads = [d.lead(order) for d in divisors]
    work = dict(f.coeffs)
    qs = [{} for _ in divisors]
    r = {}
    while work:
        u = max(work, key=order.key)
        c = work.pop(u)
        hit = None
        for i, (le, lc) in enumerate(leads):
            if ev_divides(le, u):
                hit = (i, le, lc)
                break
        if hit is None:
            r[u] = c
            continue
        i, le, lc = hit
        delta = ev_sub(u, le)
        m = field.div(c, lc)
        qs[i][delta] = field.add(qs[i].get(delta, 0), m)
        for e, ce in divisors[i].coeffs.items():
            if e == le:
                continue
            v = ev_add(e, delta)
            nv = field.sub(work.get(v, 0), field.mul(m, ce))
            if nv:
                work[v] = nv
            else:
                work.pop(v, None)
    return [Polynomial(ring, q) for q in qs], Polynomial(ring, r)


def exact_quotient(f, g, order=None):
    """f / g when the division is exact; raises otherwise."""
    qs, r = divide(f, [g], order)
    if not r.is_zero():
        raise InternalCheckError(f"inexact division of {f} by {g}")
    return qs[0]


# ------------------------------------------------------------------ the ideal


class Ideal:
    """An ideal given by generators, with cached reduced Groebner bases."""

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = tuple(g for g in gens if not g.is_zero())
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("generator outside the ambient ring")
        self._cache = {}

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return f"Ideal({inside})"

    # -- bases ------------------------------------------------------------------

    def _basis(self, order=None):
        order = order or TermOrder.grevlex(self.ring.n)
        b = self._cache.get(order)
        if b is None:
            char = self.ring.field.characteristic
            dicts = []
            for g in self.gens:
                if char == 0:
                    ints, _ = _clear_denominators(g.coeffs)
                    dicts.append(ints)
                else:
                    dicts.append(dict(g.coeffs))
            bps = _buchberger(dicts, order, char, char)
            b = self._cache[order] = _Basis(self.ring, order, bps)
        return b

    def groebner_basis(self, order=None):
        """The reduced Groebner basis: monic, tail-reduced, sorted descending."""
        return self._basis(order).polys

    def leading_exponents(self, order=None):
        return tuple(b.lead for b in self._basis(order).bps)

    # -- membership ---------------------------------------------------------------

    def normal_form(self, f, order=None):
        """Remainder of f against the reduced basis; zero iff f is a member."""
        if f.ring != self.ring:
            raise ValueError("polynomial outside the ideal's ring")
        order = order or TermOrder.grevlex(self.ring.n)
        basis = self._basis(order)
        char = self.ring.field.characteristic
        if char == 0:
            ints, den = _clear_denominators(f.coeffs)
            r, lam = _nf(ints, basis.bps, order, 0, 0)
            scale = den * lam
            field = self.ring.field
            return Polynomial._raw(
                self.ring, {e: field.of(c, scale) for e, c in r.items()}
            )
        r, _ = _nf(dict(f.coeffs), basis.bps, order, char, char)
        return Polynomial._raw(self.ring, r)

    def contains(self, f, order=None):
        if f.ring != self.ring:
            raise ValueError("polynomial outside the ideal's ring")
        order = order or TermOrder.grevlex(self.ring.n)
        basis = self._basis(order)
        char = self.ring.field.characteristic
        if char == 0:
            ints, _ = _clear_denominators(f.coeffs)
            r, _ = _nf(ints, basis.bps, order, 0, 0)
        else:
            r, _ = _nf(dict(f.coeffs), basis.bps, order, char, char)
        return not r

    def is_zero(self):
        return not self.gens

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def equals(self, other):
        """Ideal equality via reduced-basis comparison."""
        if self.ring != other.ring:
            return False
        return self.groebner_basis() == other.groebner_basis()

    def plus(self, extra):
        return Ideal(self.ring, self.gens + tuple(extra))

    # -- elimination-based operations ------------------------------------------------

    def eliminate(self, drop):
        """Generators of the contraction to the subring without ``drop``.

        ``drop`` may contain names or indices; the result lives in the ring
        on the remaining variables.
        """
        ring = self.ring
        drop_ix = sorted(
            ring.var_index(d) if isinstance(d, str) else d for d in set(drop)
        )
        if not drop_ix:
            return Ideal(ring, self.gens)
        order = TermOrder.elimination(drop_ix, ring.n)
        basis = self.groebner_basis(order)
        keep = [i for i in range(ring.n) if i not in set(drop_ix)]
        new_ring = ring.dropped(drop_ix)
        out = []
        for g in basis:
            if all(all(e[i] == 0 for i in drop_ix) for e in g.coeffs):
                out.append(project(g, keep, new_ring))
        return Ideal(new_ring, out)

    def _with_tag_variable(self):
        ring = self.ring
        (tname,) = fresh_names(ring, ["t"])
        big = ring.extended([tname])
        t = big.variable(big.n - 1)
        return big, t

    def saturate(self, m, order=None):
        """The saturation of the ideal by the monomial m (colon by all powers).

        Computed with one auxiliary variable and a block elimination order.
        When ``order`` is given, the returned ideal's generators form its
        reduced basis with respect to that order, and the cache is seeded.
        """
        if isinstance(m, Polynomial):
            if not m.is_monomial():
                raise PreconditionError("saturation expects a monomial")
            (mexp,) = m.coeffs
        else:
            mexp = tuple(m)
        ring = self.ring
        inner = order or TermOrder.grevlex(ring.n)
        big, t = self._with_tag_variable()
        shifted = [(ix, kind) for ix, kind in inner.blocks]
        big_order = TermOrder(big.n, [((big.n - 1,), "lex")] + shifted)
        gens = [embed(g, big) for g in self.gens]
        gens.append(t * big.monomial(mexp + (0,)) - big.one())
        basis = Ideal(big, gens).groebner_basis(big_order)
        keep = list(range(ring.n))
        out = [
            project(g, keep, ring)
            for g in basis
            if all(e[-1] == 0 for e in g.coeffs)
        ]
        result = Ideal(ring, out)
        result._cache[inner] = _basis_from_reduced(ring, inner, out)
        return result

    def intersect(self, other):
        """Intersection via a homotopy variable: t*I + (1-t)*J, eliminate t."""
        if other.ring != self.ring:
            raise ValueError("intersection requires a common ring")
        ring = self.ring
        big, t = self._with_tag_variable()
        gens = [t * embed(g, big) for g in self.gens]
        one_minus_t = big.one() - t
        gens += [one_minus_t * embed(g, big) for g in other.gens]
        big_order = TermOrder.elimination([big.n - 1], big.n)
        basis = Ideal(big, gens).groebner_basis(big_order)
        keep = list(range(ring.n))
        out = [
            project(g, keep, ring)
            for g in basis
            if all(e[-1] == 0 for e in g.coeffs)
        ]
        return Ideal(ring, out)

    def colon(self, g):
        """The exact ideal quotient by a single nonzero polynomial."""
        if not isinstance(g, Polynomial):
            g = self.ring.constant(g)
        if g.is_zero():
            raise PreconditionError("colon by the zero polynomial")
        meet = self.intersect(Ideal(self.ring, [g]))
        return Ideal(self.ring, [exact_quotient(h, g) for h in meet.gens])

    def colon_ideal(self, other):
        """Quotient by an ideal: intersect the quotients by its generators."""
        if other.ring != self.ring:
            raise ValueError("colon requires a common ring")
        if other.is_zero():
            return Ideal(self.ring, [self.ring.one()])
        out = None
        for g in other.gens:
            q = self.colon(g)
            out = q if out is None else out.intersect(q)
        return out

    def product(self, other):
        if other.ring != self.ring:
            raise ValueError("product requires a common ring")
        return Ideal(
            self.ring, [a * b for a in self.gens for b in other.gens]
        )
