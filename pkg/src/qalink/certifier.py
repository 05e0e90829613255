"""Bounded search for quasi-alternating certificates.

The quasi-alternating links form the smallest set containing the unknot and
closed under one rule: a link with a diagram crossing whose two smoothings
both lie in the set, and whose determinants add up to the determinant of
the whole link, lies in the set too.  A certificate is an explicit
derivation tree for that rule: internal nodes name a crossing and carry the
determinant bookkeeping, leaves are crossing-free unknot diagrams.

A returned certificate is sound by re-verification: every equation can be
re-checked independently of the search.  Absence is weaker, since the rule
quantifies over all diagrams of the link and the search only considers the
given one (after greedy simplification): a None result means no certificate
exists over this diagram's resolution tree, not that the link fails to be
quasi-alternating.
"""

from __future__ import annotations

from dataclasses import dataclass

from .determinant import determinant
from .diagram import (
    DiagramError,
    LinkDiagram,
    Resolution,
    canonical_key,
    is_split,
    simplify,
    smooth,
)
from .qpoly import BudgetExceededError, DEFAULT_NODE_BUDGET

__all__ = [
    "CertLeaf",
    "CertNode",
    "Certificate",
    "certify",
    "verify_certificate",
    "certificate_text",
    "certificate_json",
]


@dataclass(frozen=True)
class CertLeaf:
    """A crossing-free one-component diagram: the unknot axiom."""

    diagram: LinkDiagram

    @property
    def det(self) -> int:
        return 1


@dataclass(frozen=True)
class CertNode:
    """One application of the resolution rule at ``crossing``.

    ``child_a`` and ``child_b`` certify the two smoothings (greedily
    simplified); ``det`` is the determinant of ``diagram`` and equals the
    sum of the children's determinants.
    """

    diagram: LinkDiagram
    key: bytes
    crossing: int
    det: int
    child_a: "Certificate"
    child_b: "Certificate"


Certificate = CertNode | CertLeaf


def certify(d: LinkDiagram, max_nodes: int = DEFAULT_NODE_BUDGET) -> Certificate | None:
    """Search the resolution tree of ``d`` for a certificate.

    Depth-first over crossings passing the determinant-additivity test,
    cheapest child first; outcomes are memoized by canonical key, so a
    None return (no budget error raised) is a definitive failure for this
    diagram.  Split diagrams are rejected: their determinant is 0, which
    no quasi-alternating link has.
    """
    if is_split(d):
        raise DiagramError("certify requires a non-split diagram")
    memo: dict[bytes, Certificate | None] = {}
    budget = max_nodes

    def search(d: LinkDiagram) -> Certificate | None:
        nonlocal budget
        budget -= 1
        if budget < 0:
            raise BudgetExceededError(f"certificate search exceeded {max_nodes} nodes")
        d = simplify(d)
        if not d.crossings:
            return CertLeaf(d) if d.free_loops == 1 else None
        key = canonical_key(d)
        if key in memo:
            return memo[key]
        det_d = determinant(d)
        if det_d == 0:
            memo[key] = None
            return None
        candidates = []
        for c in range(len(d.crossings)):
            a = smooth(d, c, Resolution.A)
            b = smooth(d, c, Resolution.B)
            da, db = determinant(a), determinant(b)
            if da >= 1 and db >= 1 and da + db == det_d:
                candidates.append((min(da, db), c, a, b))
        candidates.sort(key=lambda item: item[0])
        result: Certificate | None = None
        for _, c, a, b in candidates:
            cert_a = search(a)
            if cert_a is None:
                continue
            cert_b = search(b)
            if cert_b is None:
                continue
            result = CertNode(d, key, c, det_d, cert_a, cert_b)
            break
        memo[key] = result
        return result

    return search(d)


def verify_certificate(cert: Certificate) -> bool:
    """Re-check a certificate from scratch.

    Every leaf must be a crossing-free unknot, every internal node's
    children must match the recomputed simplified smoothings at the named
    crossing, and the recomputed determinants must satisfy the additivity
    equation with both children positive.  Independent of the search.
    """
    if isinstance(cert, CertLeaf):
        return not cert.diagram.crossings and cert.diagram.free_loops == 1
    if not isinstance(cert, CertNode):
        return False
    d = cert.diagram
    if not 0 <= cert.crossing < len(d.crossings):
        return False
    if determinant(d) != cert.det:
        return False
    for r, child in ((Resolution.A, cert.child_a), (Resolution.B, cert.child_b)):
        expected = simplify(smooth(d, cert.crossing, r))
        got = child.diagram
        if canonical_key(expected) != canonical_key(got):
            return False
        child_det = determinant(got)
        if child_det < 1 or child_det != child.det:
            return False
        if not verify_certificate(child):
            return False
    return cert.child_a.det + cert.child_b.det == cert.det


def certificate_text(cert: Certificate, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(cert, CertLeaf):
        return f"{pad}unknot"
    head = (
        f"{pad}det={cert.det} crossing={cert.crossing} "
        f"key={cert.key.hex()}"
    )
    return "\n".join(
        [
            head,
            certificate_text(cert.child_a, indent + 1),
            certificate_text(cert.child_b, indent + 1),
        ]
    )


def certificate_json(cert: Certificate) -> dict:
    if isinstance(cert, CertLeaf):
        return {"kind": "leaf", "value": "unknot"}
    return {
        "kind": "node",
        "key": cert.key.hex(),
        "crossing": cert.crossing,
        "det": cert.det,
        "children": [
            certificate_json(cert.child_a),
            certificate_json(cert.child_b),
        ],
    }
