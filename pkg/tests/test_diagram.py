import random

import pytest

from qalink import (
    DiagramError,
    LinkDiagram,
    Resolution,
    canonical_key,
    components,
    from_braid,
    is_split,
    mirror,
    parse_pd,
    simplify,
    smooth,
    switch,
    to_pd,
)
from qalink.diagram import UNKNOT, is_alternating

HOPF = "X(1,3,2,4) X(3,1,4,2)"
TREFOIL_BRAID = [1, 1, 1]


def oracle_components(d):
    """Independent count: cycles of the strand permutation on arc ends.

    Walks every arc end through its crossing (positions 0<->2, 1<->3) and
    over to the partner end of the next arc, then counts permutation
    cycles; each link component contributes one cycle per direction.
    """
    ends = {}
    for c, t in enumerate(d.crossings):
        for p, a in enumerate(t):
            ends.setdefault(a, []).append((c, p))
    succ = {}
    for c, t in enumerate(d.crossings):
        for p in range(4):
            q = (p + 2) % 4
            a = t[q]
            e1, e2 = ends[a]
            succ[(c, p)] = e2 if e1 == (c, q) else e1
    seen = set()
    cycles = 0
    for start in succ:
        if start in seen:
            continue
        cycles += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = succ[x]
    assert cycles % 2 == 0
    return cycles // 2 + d.free_loops


def relabeled(d, rng):
    """Same diagram under a random arc permutation and crossing shuffle."""
    perm = list(range(d.arc_count))
    rng.shuffle(perm)
    crossings = [tuple(perm[a] for a in t) for t in d.crossings]
    rng.shuffle(crossings)
    crossings = [
        t if rng.random() < 0.5 else (t[2], t[3], t[0], t[1]) for t in crossings
    ]
    return LinkDiagram(tuple(crossings), d.arc_count, free_loops=d.free_loops)


# -- parse_pd ---------------------------------------------------------------


def test_parse_hopf():
    d = parse_pd(HOPF)
    assert len(d.crossings) == 2
    assert components(d) == 2
    assert oracle_components(d) == 2


def test_parse_empty_with_loops():
    d = parse_pd("", free_loops=1)
    assert d == UNKNOT
    assert components(d) == 1


def test_parse_errors():
    with pytest.raises(DiagramError):
        parse_pd("X(1,2,3)")
    with pytest.raises(DiagramError):
        parse_pd("")
    with pytest.raises(DiagramError):
        parse_pd("X(1,2,3,4) X(1,2,3,5)")  # labels not appearing twice
    with pytest.raises(DiagramError):
        parse_pd("X(1,a,2,4)")
    with pytest.raises(DiagramError):
        parse_pd("X(1,3,2,4) garbage X(3,1,4,2)")


def test_parse_accepts_bare_tuples_and_commas():
    d = parse_pd("(1,4,2,5), (3,6,4,1), (5,2,6,3)")
    assert len(d.crossings) == 3
    assert components(d) == 1


def test_to_pd_round_trip():
    d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
    assert parse_pd(to_pd(d)) == d


# -- from_braid ---------------------------------------------------------------


def test_braid_hopf():
    d = from_braid([1, 1], 2)
    assert len(d.crossings) == 2
    assert components(d) == 2


def test_braid_trefoil():
    d = from_braid(TREFOIL_BRAID, 2)
    assert components(d) == 1
    assert oracle_components(d) == 1


def test_braid_unknot_and_unlink():
    assert from_braid([], 1) == UNKNOT
    assert from_braid([], 3).free_loops == 3


def test_braid_errors():
    with pytest.raises(DiagramError):
        from_braid([2], 2)
    with pytest.raises(DiagramError):
        from_braid([0], 2)
    with pytest.raises(DiagramError):
        from_braid([], 0)
    with pytest.raises(DiagramError):
        from_braid([1], 1)


# -- switch / mirror ----------------------------------------------------------


def test_switch_involution():
    d = parse_pd(HOPF)
    assert switch(switch(d, 0), 0) == d
    with pytest.raises(DiagramError):
        switch(d, 2)


def test_switch_trefoil_gives_unknot():
    d = from_braid(TREFOIL_BRAID, 2)
    s = simplify(switch(d, 0))
    assert not s.crossings and s.free_loops == 1


def test_mirror_involution():
    d = from_braid([1, -2, 1, -2], 3)
    assert mirror(mirror(d)) == d


def test_mirror_hopf_is_opposite_clasp():
    d = parse_pd(HOPF)
    m = mirror(d)
    assert m != d
    assert components(m) == 2


# -- smooth -------------------------------------------------------------------


def test_smooth_trefoil_children():
    d = from_braid(TREFOIL_BRAID, 2)
    kids = [smooth(d, 0, r) for r in Resolution]
    assert sorted(components(k) for k in kids) == [1, 2]
    for k in kids:
        assert len(k.crossings) == 2


def test_smooth_hopf_children():
    # Both strands at a Hopf crossing belong to different components, so
    # either resolution merges them: each child is a one-kink unknot.
    d = parse_pd(HOPF)
    for r in Resolution:
        child = smooth(d, 0, r)
        assert len(child.crossings) == 1
        assert components(child) == 1
        assert simplify(child) == UNKNOT


def test_smooth_kink_splits_loop():
    kink = LinkDiagram(((0, 0, 1, 1),), 2)
    a = smooth(kink, 0, Resolution.A)
    assert not a.crossings and a.free_loops == 2
    b = smooth(kink, 0, Resolution.B)
    assert not b.crossings and b.free_loops == 1


def test_components_change_under_smoothing():
    rng = random.Random(11)
    for word, strands in [(TREFOIL_BRAID, 2), ([1, -2, 1, -2], 3), ([1, 1, 2, 2], 3)]:
        d = from_braid(word, strands)
        base = components(d)
        for c in range(len(d.crossings)):
            for r in Resolution:
                delta = components(smooth(d, c, r)) - base
                assert delta in (-1, 0, 1)


# -- simplify -----------------------------------------------------------------


def test_simplify_kinked_unknot():
    kink = LinkDiagram(((0, 0, 1, 1),), 2)
    assert simplify(kink) == UNKNOT


def test_simplify_trefoil_unchanged():
    d = from_braid(TREFOIL_BRAID, 2)
    assert simplify(d) == d


def test_simplify_r2_unlink():
    d = from_braid([1, -1], 2)
    s = simplify(d)
    assert not s.crossings and s.free_loops == 2


def test_simplify_never_increases_and_preserves_invariant():
    rng = random.Random(7)
    for _ in range(30):
        word = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(1, 8))]
        d = from_braid(word, 3)
        s = simplify(d)
        assert len(s.crossings) <= len(d.crossings)
        s._validate()


# -- is_split -----------------------------------------------------------------


def test_is_split_cases():
    assert not is_split(parse_pd(HOPF))
    assert not is_split(UNKNOT)
    assert is_split(from_braid([], 2))
    two_trefoils = parse_pd(
        "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(7,10,8,11) X(9,12,10,7) X(11,8,12,9)"
    )
    assert is_split(two_trefoils)
    assert components(two_trefoils) == 2


# -- canonical_key ------------------------------------------------------------


def test_canonical_key_relabel_invariance():
    rng = random.Random(13)
    samples = [
        parse_pd(HOPF),
        from_braid(TREFOIL_BRAID, 2),
        from_braid([1, -2, 1, -2], 3),
        from_braid([1, 1, 2, 2], 3),
        from_braid([1, 2, 1, 2, 1, 2, 1, 2], 3),
    ]
    for d in samples:
        key = canonical_key(d)
        for _ in range(20):
            assert canonical_key(relabeled(d, rng)) == key


def test_canonical_key_mirror_distinct():
    d = from_braid(TREFOIL_BRAID, 2)
    assert canonical_key(mirror(d)) != canonical_key(d)


def test_canonical_key_unknot_sentinel():
    assert canonical_key(UNKNOT) == canonical_key(parse_pd("", free_loops=1))
    assert canonical_key(UNKNOT) != canonical_key(from_braid([], 2))


def test_canonical_key_distinguishes_links():
    keys = {
        canonical_key(parse_pd(HOPF)),
        canonical_key(from_braid(TREFOIL_BRAID, 2)),
        canonical_key(from_braid([1, -2, 1, -2], 3)),
        canonical_key(UNKNOT),
    }
    assert len(keys) == 4


# -- invariants under operations ----------------------------------------------


def test_arc_twice_invariant_preserved():
    rng = random.Random(17)
    for _ in range(50):
        word = [rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(rng.randint(1, 9))]
        d = from_braid(word, 4)
        c = rng.randrange(len(d.crossings)) if d.crossings else None
        if c is None:
            continue
        for op in (
            lambda: switch(d, c),
            lambda: smooth(d, c, Resolution.A),
            lambda: smooth(d, c, Resolution.B),
            lambda: mirror(d),
            lambda: simplify(d),
        ):
            op()._validate()


def test_smooth_decreases_switch_preserves():
    d = from_braid([1, -2, 1, -2], 3)
    assert len(smooth(d, 1, Resolution.A).crossings) == 3
    assert len(switch(d, 1).crossings) == 4


def test_is_alternating():
    assert is_alternating(from_braid(TREFOIL_BRAID, 2))
    assert is_alternating(from_braid([1, -2, 1, -2], 3))
    assert not is_alternating(from_braid([1, 2, 1, 2, 1, 2, 1, 2], 3))
    assert is_alternating(UNKNOT)
