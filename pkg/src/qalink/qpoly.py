"""The Q polynomial of unoriented links by skein recursion.

Q is the Laurent polynomial invariant fixed by the two axioms

    Q(unknot) = 1,
    Q(L+) + Q(L-) = x * (Q(La) + Q(Lb)),

where L+ and L- differ by switching one crossing and La, Lb are the two
smoothings of that crossing.  Solving the relation for the diagram at hand
gives

    Q(D) = x * (Q(smooth A) + Q(smooth B)) - Q(switch D),

which terminates when the crossing is chosen descending-first: switching the
first crossing met under-strand-first along a fixed traversal lowers the
count of such crossings, and smoothing lowers the crossing count.  A diagram
with no badly-met crossing is descending, hence an unlink, and an unlink of
k circles has Q = (2x^-1 - 1)^(k-1), the value forced by applying the axioms
to a clasp between two unknots.  Results are memoized by canonical key.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    LinkDiagram,
    Resolution,
    canonical_key,
    components,
    simplify,
    smooth,
    switch,
)
from .laurent import LaurentPoly, X

__all__ = [
    "SkeinStats",
    "BudgetExceededError",
    "q_polynomial",
    "q_torus2",
    "UNLINK_FACTOR",
    "DEFAULT_NODE_BUDGET",
]

DEFAULT_NODE_BUDGET = 10**7

#: Q of the 2-component unlink; one factor per extra split circle.
UNLINK_FACTOR = LaurentPoly({-1: 2, 0: -1})


class BudgetExceededError(RuntimeError):
    """A search or recursion hit its node budget; not a mathematical failure."""


@dataclass
class SkeinStats:
    nodes_expanded: int = 0
    cache_hits: int = 0
    max_depth: int = 0


def q_polynomial(
    d: LinkDiagram,
    *,
    cache: dict | None = None,
    max_nodes: int = DEFAULT_NODE_BUDGET,
) -> tuple[LaurentPoly, SkeinStats]:
    """Q polynomial of the link presented by ``d``, with search statistics.

    ``cache`` may be any mutable mapping and can be shared across calls to
    reuse subdiagram results within a batch; by default each call gets a
    fresh one.  Exceeding ``max_nodes`` raises BudgetExceededError rather
    than ever returning a wrong value.
    """
    memo: dict = {} if cache is None else cache
    stats = SkeinStats()

    def rec(d: LinkDiagram, depth: int) -> LaurentPoly:
        stats.nodes_expanded += 1
        if stats.nodes_expanded > max_nodes:
            raise BudgetExceededError(
                f"skein recursion exceeded {max_nodes} nodes"
            )
        if depth > stats.max_depth:
            stats.max_depth = depth
        d = simplify(d)
        if not d.crossings:
            return UNLINK_FACTOR ** (d.free_loops - 1)
        key = canonical_key(d)
        val = memo.get(key)
        if val is not None:
            stats.cache_hits += 1
            return val
        c = _first_bad_crossing(d)
        if c is None:
            # Descending diagram: an unlink of components(d) circles.
            val = UNLINK_FACTOR ** (components(d) - 1)
        else:
            qa = rec(smooth(d, c, Resolution.A), depth + 1)
            qb = rec(smooth(d, c, Resolution.B), depth + 1)
            qs = rec(switch(d, c), depth + 1)
            val = X * (qa + qb) - qs
        memo[key] = val
        return val

    return rec(d, 1), stats


def q_torus2(n: int) -> LaurentPoly:
    """Q of the (2, n) torus link in closed form.

    Applying the skein axiom to one crossing of the standard |n|-crossing
    diagram relates consecutive members: switching yields the (2, n-2)
    diagram and the two smoothings yield the (2, n-1) diagram and an
    unknot, so Q_k = x * (Q_{k-1} + 1) - Q_{k-2} with Q_0 the 2-unlink
    value and Q_1 = 1.  Q never separates mirrors, so n and -n agree.
    """
    n = abs(n)
    prev, cur = UNLINK_FACTOR, LaurentPoly.const(1)
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, X * (cur + 1) - prev
    return cur


def _first_bad_crossing(d: LinkDiagram) -> int | None:
    """First crossing met on its under-strand along the canonical traversal.

    Components are walked starting from their smallest arc, heading toward
    the end at the smaller crossing index; these choices depend only on the
    underlying projection, so the diagram and its switch at the reported
    crossing are traversed identically.  Returns None for descending
    diagrams.
    """
    ends = d.arc_ends()
    visited_arc = [False] * d.arc_count
    first_visit: dict[int, int] = {}
    order: list[int] = []
    for a0 in range(d.arc_count):
        if visited_arc[a0]:
            continue
        e1, e2 = ends[a0]
        tgt0 = e1 if (e1[0], e1[1]) <= (e2[0], e2[1]) else e2
        a, tgt = a0, tgt0
        for _ in range(2 * d.arc_count + 1):
            visited_arc[a] = True
            c, p = tgt
            if c not in first_visit:
                first_visit[c] = p
                order.append(c)
            p2 = (p + 2) % 4
            a2 = d.crossings[c][p2]
            u, v = ends[a2]
            tgt2 = v if u == (c, p2) else u
            if a2 == a0 and tgt2 == tgt0:
                break
            a, tgt = a2, tgt2
        else:
            raise AssertionError("strand walk failed to close")
    for c in order:
        if first_visit[c] % 2 == 0:
            return c
    return None
