"""Monomial orders realized as integer sort keys.

A TermOrder is an ordered sequence of blocks; each block covers a subset of
the variable indices and compares its sub-vector by grevlex or lex.  Earlier
blocks dominate, so multi-block orders are elimination orders: any monomial
involving a front-block variable beats every monomial in later blocks only.

``order.key(exp)`` returns a flat tuple of ints; comparing keys with Python's
tuple comparison realizes the order.  Keys are additive in the exponent
vector, which makes every order here multiplicative (a > b implies ac > bc).
"""

from __future__ import annotations

_KINDS = ("lex", "grevlex")


def _compile_key(arity, blocks):
    if len(blocks) == 1 and blocks[0][0] == tuple(range(arity)):
        if blocks[0][1] == "grevlex":
            def key(exp):
                return (sum(exp), *[-e for e in reversed(exp)])

            return key
        return tuple

    def key(exp):
        out = []
        for ix, kind in blocks:
            sub = [exp[i] for i in ix]
            if kind == "grevlex":
                out.append(sum(sub))
                out.extend(-e for e in reversed(sub))
            else:
                out.extend(sub)
        return tuple(out)

    return key


class TermOrder:
    """A total, multiplicative order on exponent vectors of fixed arity."""

    __slots__ = ("arity", "blocks", "key")

    def __init__(self, arity, blocks):
        blocks = tuple((tuple(ix), kind) for ix, kind in blocks)
        seen = []
        for ix, kind in blocks:
            if kind not in _KINDS:
                raise ValueError(f"unknown block order kind {kind!r}")
            seen.extend(ix)
        if sorted(seen) != list(range(arity)):
            raise ValueError("blocks must partition the variable indices")
        self.arity = arity
        self.blocks = blocks
        self.key = _compile_key(arity, blocks)

    # -- constructors ----------------------------------------------------------

    @classmethod
    def lex(cls, arity):
        return cls(arity, [(range(arity), "lex")])

    @classmethod
    def grevlex(cls, arity):
        return cls(arity, [(range(arity), "grevlex")])

    @classmethod
    def elimination(cls, front, arity, kind="grevlex"):
        """Block order eliminating the ``front`` indices (they come first)."""
        front = tuple(sorted(front))
        rest = tuple(i for i in range(arity) if i not in set(front))
        blocks = [(b, kind) for b in (front, rest) if b]
        return cls(arity, blocks)

    # -- behaviour -------------------------------------------------------------

    @property
    def kind(self):
        return "block" if len(self.blocks) > 1 else self.blocks[0][1]

    def compare(self, a, b):
        """-1, 0, or 1 as a <, =, > b.  Raises on arity mismatch."""
        if len(a) != self.arity or len(b) != self.arity:
            raise ValueError(
                f"exponent length mismatch: order arity {self.arity}, "
                f"got {len(a)} and {len(b)}"
            )
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return (
            isinstance(other, TermOrder)
            and self.arity == other.arity
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.arity, self.blocks))

    def __repr__(self):
        if len(self.blocks) == 1:
            return f"TermOrder.{self.kind}({self.arity})"
        parts = " | ".join(
            f"{kind}{list(ix)}" for ix, kind in self.blocks
        )
        return f"TermOrder({self.arity}, {parts})"
