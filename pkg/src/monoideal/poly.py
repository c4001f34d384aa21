"""Sparse multivariate polynomials with exact coefficients.

Exponent vectors are plain tuples of nonnegative ints, one entry per ring
variable; a polynomial maps exponent vectors to nonzero coefficients.  All
values are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import FieldSpec
from .orders import TermOrder

# ---------------------------------------------------------------- exponents


def ev_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def ev_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def ev_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def ev_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def ev_degree(a):
    return sum(a)


def ev_support(a):
    return tuple(i for i, e in enumerate(a) if e)


def ev_squarefree(a):
    return tuple(1 if e else 0 for e in a)


# ---------------------------------------------------------------- ring


@dataclass(frozen=True)
class RingContext:
    """A polynomial ring: coefficient field plus ordered variable names."""

    field: FieldSpec
    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")

    @property
    def n(self):
        return len(self.variables)

    def var_index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    def zero(self):
        return Polynomial._raw(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field.of(c)
        return Polynomial._raw(self, {(0,) * self.n: c} if c else {})

    def variable(self, i):
        if isinstance(i, str):
            i = self.var_index(i)
        e = [0] * self.n
        e[i] = 1
        return Polynomial._raw(self, {tuple(e): self.field.of(1)})

    def monomial(self, exp, coeff=1):
        exp = tuple(exp)
        if len(exp) != self.n or any(e < 0 for e in exp):
            raise ValueError(f"bad exponent vector {exp} for {self}")
        c = self.field.of(coeff)
        return Polynomial._raw(self, {exp: c} if c else {})

    def extended(self, extra_names):
        return RingContext(self.field, self.variables + tuple(extra_names))

    def dropped(self, indices):
        drop = set(indices)
        keep = [v for i, v in enumerate(self.variables) if i not in drop]
        return RingContext(self.field, tuple(keep))

    def __str__(self):
        return f"{self.field}[{','.join(self.variables)}]"


def fresh_names(ring, bases):
    """Names derived from ``bases`` guaranteed not to clash with ring variables."""
    used = set(ring.variables)
    out = []
    for b in bases:
        name = b
        while name in used:
            name = "_" + name
        used.add(name)
        out.append(name)
    return out


# ---------------------------------------------------------------- polynomial


def _monomial_str(ring, exp):
    parts = []
    for name, e in zip(ring.variables, exp):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Polynomial:
    """Immutable sparse polynomial over a RingContext.

    ``coeffs`` maps exponent tuples to nonzero field elements; the empty dict
    is the zero polynomial.  The dict must not be mutated.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=None):
        self.ring = ring
        out = {}
        for e, c in (coeffs or {}).items():
            if len(e) != ring.n or any(v < 0 for v in e):
                raise ValueError(f"bad exponent vector {e} for {ring}")
            c = ring.field.of(c)
            if c:
                out[tuple(e)] = c
        self.coeffs = out

    @classmethod
    def _raw(cls, ring, coeffs):
        p = object.__new__(cls)
        p.ring = ring
        p.coeffs = coeffs
        return p

    # -- queries --------------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def is_monomial(self):
        """Single power product (the unit coefficient is ignored)."""
        return len(self.coeffs) == 1

    def is_constant(self):
        return all(not any(e) for e in self.coeffs)

    def total_degree(self):
        return max((sum(e) for e in self.coeffs), default=-1)

    def degree_in(self, i):
        return max((e[i] for e in self.coeffs), default=0)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.coeffs}
        return len(degs) <= 1

    def terms(self, order=None):
        """Terms as (exponent, coefficient) pairs, descending in ``order``."""
        order = order or TermOrder.grevlex(self.ring.n)
        return sorted(self.coeffs.items(), key=lambda t: order.key(t[0]), reverse=True)

    def lead(self, order=None):
        """Leading (exponent, coefficient) under ``order`` (grevlex default)."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading term")
        order = order or TermOrder.grevlex(self.ring.n)
        e = max(self.coeffs, key=order.key)
        return e, self.coeffs[e]

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        p = self.ring.field.characteristic
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e, 0) + c
            if p:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.characteristic
        if p:
            return Polynomial._raw(self.ring, {e: -c % p for e, c in self.coeffs.items()})
        return Polynomial._raw(self.ring, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field.of(other)
            if not c:
                return self.ring.zero()
            p = self.ring.field.characteristic
            if p:
                return Polynomial._raw(self.ring, {e: v * c % p for e, v in self.coeffs.items()})
            return Polynomial._raw(self.ring, {e: v * c for e, v in self.coeffs.items()})
        other = self._coerce(other)
        p = self.ring.field.characteristic
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = ev_add(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if p:
                    v %= p
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.coeffs.items())))

    # -- printing ---------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for e, c in self.terms():
            mon = _monomial_str(self.ring, e)
            neg = self.ring.field.characteristic == 0 and c < 0
            mag = -c if neg else c
            if mon and mag == 1:
                body = mon
            elif mon:
                body = f"{mag}*{mon}"
            else:
                body = str(mag)
            if not bits:
                bits.append(f"-{body}" if neg else body)
            else:
                bits.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(bits)

    def __repr__(self):
        return f"<{self} over {self.ring}>"


def display_str(f):
    """Display normalization: integer-cleared, positive leading coefficient.

    A printing convention only; the underlying polynomial is unchanged.
    """
    if f.is_zero():
        return "0"
    if f.ring.field.characteristic:
        return str(f)
    den = 1
    for c in f.coeffs.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // _gcd(den, c.denominator)
    num = 0
    for c in f.coeffs.values():
        num = _gcd(num, int(c * den))
    lead_exp, lead_c = f.lead()
    scale = Fraction(den, num if lead_c > 0 else -num)
    return str(f * scale)


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------- maps


def multi_homogenize(f, ext_ring):
    """Pad each term with companion-variable factors so the i-th original
    variable has constant combined degree across all terms.

    ``ext_ring`` must extend f's ring by one fresh companion variable per
    original variable, in the same position order.
    """
    n = f.ring.n
    if ext_ring.n != 2 * n or ext_ring.variables[:n] != f.ring.variables:
        raise ValueError("extension ring must append one companion per variable")
    if f.is_zero():
        return ext_ring.zero()
    d = [f.degree_in(i) for i in range(n)]
    out = {}
    for e, c in f.coeffs.items():
        out[e + tuple(d[i] - e[i] for i in range(n))] = c
    return Polynomial._raw(ext_ring, out)


def specialize_ones(f, indices):
    """Set the given variables to 1 (merging coefficients exactly)."""
    drop = set(indices)
    p = f.ring.field.characteristic
    out = {}
    for e, c in f.coeffs.items():
        e2 = tuple(0 if i in drop else v for i, v in enumerate(e))
        v = out.get(e2, 0) + c
        if p:
            v %= p
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    return Polynomial._raw(f.ring, out)


def project(f, keep, new_ring):
    """Map f into the subring on the ``keep`` indices.

    Every exponent outside ``keep`` must vanish.
    """
    keep = list(keep)
    out = {}
    keepset = set(keep)
    for e, c in f.coeffs.items():
        if any(v and i not in keepset for i, v in enumerate(e)):
            raise ValueError("polynomial involves a dropped variable")
        out[tuple(e[i] for i in keep)] = c
    return Polynomial._raw(new_ring, out)


def embed(f, big_ring):
    """View f inside a ring that extends f's ring at the end."""
    n = f.ring.n
    if big_ring.variables[:n] != f.ring.variables or big_ring.field != f.ring.field:
        raise ValueError("target ring does not extend the source ring")
    pad = (0,) * (big_ring.n - n)
    return Polynomial._raw(big_ring, {e + pad: c for e, c in f.coeffs.items()})
