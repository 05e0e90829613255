"""Rational tangle calculus for generating corpus diagrams.

Development tooling, not part of the installed package.  Builds PD diagrams
for two-bridge links (continued fractions), pretzels, and Montesinos sums
of vertical rational tangles.  Conventions were calibrated against the
classical determinant table: see tools/gen_corpus.py, which asserts every
generated diagram reproduces its published determinant before writing the
corpus.

A tangle holds PD crossing tuples plus the four boundary arc ids at the
compass corners nw, ne, sw, se.  Twists at the bottom act on (sw, se),
twists on the right act on (ne, se); the tangle fraction bookkeeping is

    bottom twist by k:  f -> 1 / (1/f + k)
    right twist by k:   f -> f + k

so a vertical column of k positive twists on the infinity tangle has
fraction 1/k, and the vertical rational tangle of fraction f (0 < |f| <= 1)
is built from the odd-length continued fraction of 1/|f|.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from qalink.diagram import LinkDiagram, _merge_arcs


@dataclass(frozen=True)
class Tangle:
    crossings: tuple[tuple[int, int, int, int], ...]
    nxt: int
    nw: int
    ne: int
    sw: int
    se: int
    pending: tuple[tuple[int, int], ...] = field(default=())


def inf_tangle() -> Tangle:
    """Two vertical strands: nw-sw and ne-se."""
    return Tangle((), 2, 0, 1, 0, 1)


def zero_tangle() -> Tangle:
    """Two horizontal strands: nw-ne and sw-se."""
    return Tangle((), 2, 0, 0, 1, 1)


def _xing(nw: int, ne: int, sw: int, se: int, sign: int):
    # PD tuple counterclockwise from an under-strand slot; positive sign
    # puts the nw-se diagonal on top.
    return (ne, nw, sw, se) if sign > 0 else (nw, sw, se, ne)


def twist_bottom(t: Tangle, sign: int) -> Tangle:
    x, y = t.nxt, t.nxt + 1
    return Tangle(
        t.crossings + (_xing(t.sw, t.se, x, y, sign),),
        t.nxt + 2, t.nw, t.ne, x, y, t.pending,
    )


def twist_right(t: Tangle, sign: int) -> Tangle:
    x, y = t.nxt, t.nxt + 1
    return Tangle(
        t.crossings + (_xing(t.ne, x, t.se, y, sign),),
        t.nxt + 2, t.nw, x, t.sw, y, t.pending,
    )


def tangle_sum(t1: Tangle, t2: Tangle) -> Tangle:
    """Place t2 to the right of t1, joining ne-nw and se-sw."""
    off = t1.nxt
    cr = t1.crossings + tuple(tuple(a + off for a in c) for c in t2.crossings)
    pend = (
        t1.pending
        + tuple((a + off, b + off) for a, b in t2.pending)
        + ((t1.ne, t2.nw + off), (t1.se, t2.sw + off))
    )
    return Tangle(cr, off + t2.nxt, t1.nw, t2.ne + off, t1.sw, t2.se + off, pend)


def closure(t: Tangle, kind: str = "num") -> LinkDiagram:
    """Numerator (join top pair and bottom pair) or denominator closure."""
    if kind == "num":
        merges = [(t.nw, t.ne), (t.sw, t.se)]
    elif kind == "den":
        merges = [(t.nw, t.sw), (t.ne, t.se)]
    else:
        raise ValueError(kind)
    return _merge_arcs(
        [tuple(c) for c in t.crossings], t.nxt, list(t.pending) + merges, 0
    )


def vertical_groups(groups: list[int]) -> Tangle:
    """Alternating bottom/right twist groups starting at the infinity tangle.

    For an odd-length all-positive list [g1, ..., gk] the result has
    fraction 1/(gk + 1/(... + 1/g1)).
    """
    t = inf_tangle()
    op = "b"
    for g in groups:
        for _ in range(abs(g)):
            s = 1 if g > 0 else -1
            t = twist_bottom(t, s) if op == "b" else twist_right(t, s)
        op = "r" if op == "b" else "b"
    return t


def cf_odd(x: Fraction) -> list[int]:
    """Odd-length positive continued fraction [a0; a1, ...] of x >= 1."""
    out = []
    while True:
        a = x.numerator // x.denominator
        out.append(a)
        if x == a:
            break
        x = 1 / (x - a)
    if out[-1] == 1 and len(out) > 1:
        out.pop()
        out[-1] += 1
    if len(out) % 2 == 0:
        out[-1] -= 1
        out.append(1)
        if out[-2] == 0:
            out.pop(-2)
    return out


def vertical_tangle(f: Fraction) -> Tangle:
    """Vertical rational tangle of fraction f, 0 < |f| <= 1."""
    f = Fraction(f)
    if not 0 < abs(f) <= 1:
        raise ValueError(f"vertical tangle needs 0 < |f| <= 1, got {f}")
    groups = list(reversed(cf_odd(1 / abs(f))))
    if f < 0:
        groups = [-g for g in groups]
    return vertical_groups(groups)


def two_bridge(conway: list[int]) -> LinkDiagram:
    """Standard alternating diagram of the two-bridge link C(a1, ..., am).

    The determinant equals the numerator of the continued fraction
    a1 + 1/(a2 + ... ), which tools/gen_corpus.py asserts per entry.
    """
    t = vertical_groups(list(conway))
    return closure(t, "den" if len(conway) % 2 == 1 else "num")


def montesinos(fractions) -> LinkDiagram:
    """Numerator closure of a sum of vertical rational tangles.

    ``montesinos([(1,p), (1,q), (1,r)])`` is the (p, q, r) pretzel.
    """
    tangles = [vertical_tangle(Fraction(*f)) for f in fractions]
    t = tangles[0]
    for u in tangles[1:]:
        t = tangle_sum(t, u)
    return closure(t, "num")


def pretzel(*twists: int) -> LinkDiagram:
    return montesinos([(1 if p > 0 else -1, abs(p)) for p in twists])
