"""Unoriented link diagrams as PD (planar diagram) crossing lists.

A diagram is a list of crossings, each a 4-tuple of arc identifiers read
counterclockwise around the crossing starting at an end of the under-strand.
The under-strand therefore occupies tuple positions 0 and 2 and the
over-strand positions 1 and 3; a strand passes straight through, pairing
positions 0<->2 and 1<->3.  Every arc identifier appears exactly twice over
the whole crossing list.  Crossing-free circles (which smoothing can create)
are carried separately in ``free_loops``; a diagram with no crossings is the
unlink of ``free_loops`` components.

Diagrams are unoriented, so rotating a crossing tuple by two positions gives
the same crossing; tuples are normalized to the lexicographically smaller of
the two rotations on construction.  PD realizability (planarity) is trusted,
never verified: codes from knot tables are realizable, and a non-realizable
code yields well-defined but meaningless invariants downstream.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "Crossing",
    "LinkDiagram",
    "Resolution",
    "DiagramError",
    "parse_pd",
    "to_pd",
    "from_braid",
    "components",
    "switch",
    "smooth",
    "simplify",
    "is_split",
    "canonical_key",
    "mirror",
]

Crossing = tuple[int, int, int, int]


class DiagramError(ValueError):
    """Malformed PD input or an operation on an invalid diagram."""


class Resolution(Enum):
    """One of the two crossingless reconnections of a crossing.

    ``A`` joins the arcs at tuple positions 0-1 and 2-3, ``B`` joins
    positions 0-3 and 1-2.  The pair is unordered in every identity used
    here (skein relation, determinant additivity), so no claim is made
    about which member is the "0" and which the "infinity" smoothing.
    """

    A = "A"
    B = "B"


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    arc_count: int
    free_loops: int = 0

    def __post_init__(self):
        norm = []
        for t in self.crossings:
            t = tuple(t)
            if len(t) != 4:
                raise DiagramError(f"crossing {t!r} is not a 4-tuple")
            r = (t[2], t[3], t[0], t[1])
            norm.append(t if t <= r else r)
        object.__setattr__(self, "crossings", tuple(norm))
        self._validate()

    def _validate(self):
        seen: dict[int, int] = {}
        for t in self.crossings:
            for a in t:
                if not isinstance(a, int) or a < 0 or a >= self.arc_count:
                    raise DiagramError(f"arc id {a!r} out of range")
                seen[a] = seen.get(a, 0) + 1
        if len(seen) != self.arc_count or any(k != 2 for k in seen.values()):
            bad = sorted(set(range(self.arc_count)) - set(seen)) or sorted(
                a for a, k in seen.items() if k != 2
            )
            raise DiagramError(f"arcs must appear exactly twice, offenders: {bad}")
        if self.free_loops < 0:
            raise DiagramError("free_loops must be nonnegative")
        if not self.crossings and self.free_loops == 0 and self.arc_count == 0:
            raise DiagramError("empty diagram: no crossings and no free loops")
        if not self.crossings and self.arc_count:
            raise DiagramError("arcs present without crossings")

    def __len__(self):
        return len(self.crossings)

    def arc_ends(self) -> list[list[tuple[int, int]]]:
        """For each arc, its two (crossing, position) end slots."""
        ends: list[list[tuple[int, int]]] = [[] for _ in range(self.arc_count)]
        for c, t in enumerate(self.crossings):
            for p, a in enumerate(t):
                ends[a].append((c, p))
        return ends


UNKNOT = LinkDiagram((), 0, free_loops=1)

_PD_TOKEN = re.compile(r"[Xx]?\s*\(([^()]*)\)")


def parse_pd(text: str, free_loops: int = 0) -> LinkDiagram:
    """Parse PD notation like ``"X(1,4,2,5) X(3,8,4,1)"``.

    Tuples may be bare or wrapped in ``X(...)``; separators are whitespace
    and/or commas.  Arc labels may be arbitrary nonnegative integers
    (knot-table exports are 1-based); they are renumbered densely from 0.
    """
    stripped = text.strip()
    tuples: list[Crossing] = []
    pos = 0
    while pos < len(stripped):
        m = _PD_TOKEN.search(stripped, pos)
        if not m:
            if stripped[pos:].strip(" ,;\t\n"):
                raise DiagramError(f"unparsable PD text near {stripped[pos:]!r}")
            break
        if stripped[pos : m.start()].strip(" ,;\t\n"):
            raise DiagramError(f"unparsable PD text near {stripped[pos:m.start()]!r}")
        fields = [f for f in re.split(r"[,\s]+", m.group(1).strip()) if f]
        if len(fields) != 4:
            raise DiagramError(f"crossing {m.group(0)!r} does not have 4 arc labels")
        try:
            tuples.append(tuple(int(f) for f in fields))
        except ValueError:
            raise DiagramError(f"non-integer arc label in {m.group(0)!r}") from None
        pos = m.end()
    if not tuples:
        if free_loops > 0:
            return LinkDiagram((), 0, free_loops=free_loops)
        raise DiagramError("empty PD input and no free loops declared")
    labels = sorted({a for t in tuples for a in t})
    index = {a: i for i, a in enumerate(labels)}
    renamed = tuple(tuple(index[a] for a in t) for t in tuples)
    return LinkDiagram(renamed, len(labels), free_loops=free_loops)


def to_pd(d: LinkDiagram) -> str:
    """PD text for a diagram, with 1-based arc labels as in knot tables."""
    return " ".join(
        "X({},{},{},{})".format(*(a + 1 for a in t)) for t in d.crossings
    )


def from_braid(word: list[int], strand_count: int) -> LinkDiagram:
    """Diagram of the closure of a braid word.

    Letter ``i`` (1 <= |i| < strand_count) crosses strands i-1 and i, the
    sign choosing which one passes over.  The two closures of mirror words
    are mirror diagrams, which no invariant computed here distinguishes.
    """
    if strand_count < 1:
        raise DiagramError("strand_count must be at least 1")
    for letter in word:
        if letter == 0 or abs(letter) >= strand_count:
            raise DiagramError(f"braid letter {letter} out of range for {strand_count} strands")
    fresh = strand_count
    cur = list(range(strand_count))
    start = list(range(strand_count))
    tuples: list[Crossing] = []
    for letter in word:
        i = abs(letter)
        u, v = cur[i - 1], cur[i]
        w, z = fresh, fresh + 1
        fresh += 2
        if letter > 0:
            tuples.append((v, u, w, z))
        else:
            tuples.append((u, w, z, v))
        cur[i - 1], cur[i] = w, z
    # Closure: glue each strand's final arc back onto its initial arc.
    merges = [(cur[j], start[j]) for j in range(strand_count)]
    return _merge_arcs(tuples, fresh, merges, free_loops=0)


def _merge_arcs(
    tuples: list[Crossing], arc_count: int, merges, free_loops: int
) -> LinkDiagram:
    """Rebuild a diagram after identifying arc pairs.

    Each merge pair consumes one endpoint of each named arc (a strand
    passing straight through a removed crossing, or a braid-closure glue).
    Arc classes left with no endpoint among the surviving crossings closed
    up into crossing-free circles and are counted as free loops.
    """
    parent = list(range(arc_count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in merges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    kept: dict[int, int] = {}
    for t in tuples:
        for a in t:
            kept[find(a)] = kept.get(find(a), 0) + 1

    closed = sum(1 for a in range(arc_count) if parent[a] == a and find(a) not in kept)
    dense = {r: i for i, r in enumerate(sorted(kept))}
    out = tuple(tuple(dense[find(a)] for a in t) for t in tuples)
    return LinkDiagram(out, len(dense), free_loops=free_loops + closed)


def components(d: LinkDiagram) -> int:
    """Number of link components, free loops included."""
    parent = list(range(d.arc_count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for t in d.crossings:
        for p in (0, 1):
            ra, rb = find(t[p]), find(t[p + 2])
            if ra != rb:
                parent[ra] = rb
    strands = len({find(a) for a in range(d.arc_count)})
    return strands + d.free_loops


def switch(d: LinkDiagram, c: int) -> LinkDiagram:
    """Exchange over- and under-strand at crossing ``c``."""
    _check_index(d, c)
    t = d.crossings[c]
    rotated = (t[1], t[2], t[3], t[0])
    crossings = d.crossings[:c] + (rotated,) + d.crossings[c + 1 :]
    return LinkDiagram(crossings, d.arc_count, free_loops=d.free_loops)


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Exchange over and under at every crossing."""
    crossings = tuple((t[1], t[2], t[3], t[0]) for t in d.crossings)
    return LinkDiagram(crossings, d.arc_count, free_loops=d.free_loops)


def smooth(d: LinkDiagram, c: int, r: Resolution) -> LinkDiagram:
    """Delete crossing ``c`` and rejoin its arcs according to ``r``."""
    _check_index(d, c)
    t = d.crossings[c]
    if r is Resolution.A:
        merges = [(t[0], t[1]), (t[2], t[3])]
    elif r is Resolution.B:
        merges = [(t[0], t[3]), (t[1], t[2])]
    else:
        raise DiagramError(f"unknown resolution {r!r}")
    rest = [u for i, u in enumerate(d.crossings) if i != c]
    return _merge_arcs(rest, d.arc_count, merges, free_loops=d.free_loops)


def _check_index(d: LinkDiagram, c: int):
    if not 0 <= c < len(d.crossings):
        raise DiagramError(f"crossing index {c} out of range")


def _face_orbits(d: LinkDiagram) -> list[tuple[int, ...]]:
    """Faces of the 4-valent diagram graph as cycles of darts.

    Dart 4*c + p leaves crossing c along the arc in tuple slot p.  The face
    map follows the arc to its far end and turns onto the next slot
    counterclockwise; its orbits are the complementary regions of the
    projection, each dart lying in exactly one.
    """
    n = len(d.crossings)
    alpha = [0] * (4 * n)
    ends = d.arc_ends()
    for slots in ends:
        (c1, p1), (c2, p2) = slots
        alpha[4 * c1 + p1] = 4 * c2 + p2
        alpha[4 * c2 + p2] = 4 * c1 + p1
    orbits = []
    seen = [False] * (4 * n)
    for s in range(4 * n):
        if seen[s]:
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            y = alpha[x]
            x = (y & ~3) | ((y + 1) & 3)
        orbits.append(tuple(cyc))
    return orbits


def simplify(d: LinkDiagram) -> LinkDiagram:
    """Greedy reduction of visible kinks and parallel clasps.

    Repeatedly removes any crossing whose tuple carries the same arc in two
    adjacent slots, and any pair of crossings bounding a bigon face whose
    strands can be pulled apart (the same strand passes over at both
    corners).  The result represents the same link; no move search beyond
    this is attempted, so the output need not be minimal.
    """
    while d.crossings:
        move = _find_kink(d)
        if move is not None:
            d = _merge_arcs(*move)
            continue
        move = _find_bigon(d)
        if move is not None:
            d = _merge_arcs(*move)
            continue
        break
    return d


def _find_kink(d: LinkDiagram):
    for c, t in enumerate(d.crossings):
        for p in range(4):
            if t[p] == t[(p + 1) % 4]:
                a = t[p]
                u = t[(p + 2) % 4]
                v = t[(p + 3) % 4]
                rest = [x for i, x in enumerate(d.crossings) if i != c]
                return rest, d.arc_count, [(u, a), (a, v)], d.free_loops
    return None


def _find_bigon(d: LinkDiagram):
    for orbit in _face_orbits(d):
        if len(orbit) != 2:
            continue
        e1, e2 = orbit
        c1, p1 = divmod(e1, 4)
        c2, p2 = divmod(e2, 4)
        if c1 == c2:
            continue
        t1, t2 = d.crossings[c1], d.crossings[c2]
        a = t1[p1]
        # Far end of a sits one slot clockwise of the dart that continues
        # the face at c2; for a two-dart face that slot is p2 - 1.
        q1 = (p2 - 1) % 4
        b = t2[p2]
        if (p1 - q1) % 2 != 0:
            continue  # clasp: strands alternate, not a reducible bigon
        merges = [
            (t1[(p1 + 2) % 4], a),
            (a, t2[(q1 + 2) % 4]),
            (t1[(p1 - 1 + 2) % 4], b),
            (b, t2[(p2 + 2) % 4]),
        ]
        rest = [x for i, x in enumerate(d.crossings) if i not in (c1, c2)]
        return rest, d.arc_count, merges, d.free_loops
    return None


def is_alternating(d: LinkDiagram) -> bool:
    """True when strands alternate over/under along every component.

    Equivalent to every arc joining an under-strand slot (even tuple
    position) to an over-strand slot (odd position).  Crossing-free
    diagrams count as alternating.
    """
    return all((p1 + p2) % 2 == 1 for (_, p1), (_, p2) in d.arc_ends())


def is_split(d: LinkDiagram) -> bool:
    """True when the diagram visibly splits into separated pieces."""
    n = len(d.crossings)
    if n == 0:
        return d.free_loops >= 2
    if d.free_loops > 0:
        return True
    parent = list(range(n))

    def find(c: int) -> int:
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for slots in d.arc_ends():
        (c1, _), (c2, _) = slots
        r1, r2 = find(c1), find(c2)
        if r1 != r2:
            parent[r1] = r2
    return len({find(c) for c in range(n)}) > 1


def _crossing_components(d: LinkDiagram) -> list[list[int]]:
    n = len(d.crossings)
    adj: list[set[int]] = [set() for _ in range(n)]
    for slots in d.arc_ends():
        (c1, _), (c2, _) = slots
        adj[c1].add(c2)
        adj[c2].add(c1)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            c = stack.pop()
            comp.append(c)
            for w in adj[c]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def canonical_key(d: LinkDiagram) -> bytes:
    """Deterministic encoding invariant under relabeling.

    Two diagrams equal up to arc renaming and crossing reordering (and the
    rotation-by-two tuple ambiguity) get the same key; used to memoize the
    skein recursion and the certificate search.  Each connected piece is
    serialized as a dart traversal minimized over all starting darts on
    under-strands, then the piece keys are sorted and joined.
    """
    if not d.crossings:
        return b"U:%d" % d.free_loops
    n = len(d.crossings)
    alpha = [0] * (4 * n)
    for slots in d.arc_ends():
        (c1, p1), (c2, p2) = slots
        alpha[4 * c1 + p1] = 4 * c2 + p2
        alpha[4 * c2 + p2] = 4 * c1 + p1
    piece_keys = []
    for comp in _crossing_components(d):
        best = None
        for c in comp:
            for p in (0, 2):
                trace = _trace(4 * c + p, alpha)
                if best is None or trace < best:
                    best = trace
        if 4 * len(comp) < 255:
            piece_keys.append(bytes(best))
        else:
            piece_keys.append(",".join(map(str, best)).encode())
    piece_keys.sort()
    return b"L:%d:" % d.free_loops + b"|".join(piece_keys)


def _trace(start: int, alpha: list[int]) -> list[int]:
    """Serialize one connected piece from a starting dart.

    Darts are numbered in discovery order following, for each dart, first
    the counterclockwise rotation then the arc partner; the emitted word
    lists those two numbers plus an under-strand bit per dart, which
    reconstructs the piece up to relabeling.
    """
    number = {start: 0}
    order = [start]
    for x in order:
        for y in ((x & ~3) | ((x + 1) & 3), alpha[x]):
            if y not in number:
                number[y] = len(order)
                order.append(y)
    out = []
    for x in order:
        out.append(number[(x & ~3) | ((x + 1) & 3)])
        out.append(number[alpha[x]])
        out.append(x & 1)
    return out
