"""Ruling out quasi-alternating links from Q-polynomial degree bounds.

Three machine-checkable constraints hold for every quasi-alternating link:

  * det L >= 1 (determinants build up by positive addition from the unknot),
  * deg Q_L <= det L - 1,
  * deg Q_L <= det L - 2 unless L is a (2, n) torus link, and
  * if det L is 1, 2, or 3 then L is the unknot, a Hopf link, or a trefoil.

``classify`` applies them in contrapositive form.  A violated bound is a
proof the link is not quasi-alternating; when the refined bound is met with
equality, exact agreement with the (2, det) torus polynomial is only
evidence of membership in the excluded torus family, so the outcome stays
inconclusive.  No positive claim of quasi-alternating status is ever made
here; that is the certifier's job.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .determinant import det_via_q, determinant
from .diagram import LinkDiagram
from .laurent import LaurentPoly
from .qpoly import q_polynomial, q_torus2, DEFAULT_NODE_BUDGET

__all__ = ["Verdict", "Report", "classify"]


class Verdict(Enum):
    NOT_QA_DET_ZERO = "not-qa:det-zero"
    NOT_QA_DEGREE_BOUND = "not-qa:degree-bound"
    NOT_QA_REFINED_BOUND = "not-qa:refined-bound"
    NOT_QA_SMALL_DET = "not-qa:small-det"
    INCONCLUSIVE_PASSES_BOUNDS = "inconclusive:passes-bounds"
    INCONCLUSIVE_TORUS_CANDIDATE = "inconclusive:torus-candidate"

    @property
    def is_not_qa(self) -> bool:
        return self.value.startswith("not-qa")


_CITATIONS = {
    Verdict.NOT_QA_DET_ZERO: "det >= 1 for quasi-alternating links",
    Verdict.NOT_QA_DEGREE_BOUND: "deg Q <= det - 1 bound",
    Verdict.NOT_QA_REFINED_BOUND: "deg Q <= det - 2 bound off the (2,n) torus family",
    Verdict.NOT_QA_SMALL_DET: "det <= 3 quasi-alternating classification",
    Verdict.INCONCLUSIVE_PASSES_BOUNDS: "",
    Verdict.INCONCLUSIVE_TORUS_CANDIDATE: "",
}

#: Q polynomials of the unknot, the Hopf link, and the trefoils, the only
#: quasi-alternating links of determinant 1, 2, 3 respectively.
_SMALL_DET_Q = {1: q_torus2(1), 2: q_torus2(2), 3: q_torus2(3)}


@dataclass(frozen=True)
class Report:
    name: str
    crossings: int
    det: int
    det_q: int
    q: LaurentPoly
    deg_q: int
    verdict: Verdict
    theorem_cited: str

    def fields(self) -> dict:
        return {
            "name": self.name,
            "crossings": self.crossings,
            "det": self.det,
            "det_q": self.det_q,
            "q": str(self.q),
            "deg_q": self.deg_q,
            "verdict": self.verdict.value,
            "theorem": self.theorem_cited,
        }


def classify(
    d: LinkDiagram,
    *,
    name: str = "",
    cache: dict | None = None,
    max_nodes: int = DEFAULT_NODE_BUDGET,
) -> Report:
    """Decide what the degree bounds say about the link of ``d``.

    Both determinant computations (Goeritz and Q(2)) are run and must
    agree; a mismatch means a bug and raises.
    """
    det = determinant(d)
    q, _ = q_polynomial(d, cache=cache, max_nodes=max_nodes)
    dq = det_via_q(q)
    if det != dq:
        raise AssertionError(
            f"determinant disagreement for {name or 'input'}: "
            f"Goeritz {det} vs Q-based {dq}"
        )
    deg = q.degree() if not q.is_zero() else 0

    if det == 0:
        verdict = Verdict.NOT_QA_DET_ZERO
    elif deg >= det:
        verdict = Verdict.NOT_QA_DEGREE_BOUND
    elif deg == det - 1:
        if q == q_torus2(det):
            verdict = Verdict.INCONCLUSIVE_TORUS_CANDIDATE
        else:
            verdict = Verdict.NOT_QA_REFINED_BOUND
    elif det in _SMALL_DET_Q and q != _SMALL_DET_Q[det]:
        verdict = Verdict.NOT_QA_SMALL_DET
    else:
        verdict = Verdict.INCONCLUSIVE_PASSES_BOUNDS

    return Report(
        name=name,
        crossings=len(d.crossings),
        det=det,
        det_q=dq,
        q=q,
        deg_q=deg,
        verdict=verdict,
        theorem_cited=_CITATIONS[verdict],
    )
