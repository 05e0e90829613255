"""Q polynomials, link determinants, and quasi-alternating obstructions.

The package computes two classical invariants of a link directly from a
planar diagram: the Q polynomial (by skein recursion) and the determinant
(by Goeritz matrix), then applies degree bounds that every quasi-alternating
link satisfies, and searches for explicit resolution-tree certificates of
quasi-alternating membership.
"""

from .diagram import (
    Crossing,
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
from .laurent import LaurentPoly
from .qpoly import (
    BudgetExceededError,
    DEFAULT_NODE_BUDGET,
    SkeinStats,
    UNLINK_FACTOR,
    q_polynomial,
    q_torus2,
)
from .determinant import (
    FaceStructure,
    GoeritzMatrix,
    det_via_q,
    determinant,
    faces,
    goeritz_matrix,
)
from .obstruction import Report, Verdict, classify
from .certifier import (
    CertLeaf,
    CertNode,
    Certificate,
    certificate_json,
    certificate_text,
    certify,
    verify_certificate,
)
from .cli import CorpusEntry, bundled_corpus_path, load_corpus, parse_notation

__version__ = "0.1.0"

__all__ = [
    "Crossing",
    "DiagramError",
    "LinkDiagram",
    "Resolution",
    "canonical_key",
    "components",
    "from_braid",
    "is_split",
    "mirror",
    "parse_pd",
    "simplify",
    "smooth",
    "switch",
    "to_pd",
    "LaurentPoly",
    "BudgetExceededError",
    "DEFAULT_NODE_BUDGET",
    "SkeinStats",
    "UNLINK_FACTOR",
    "q_polynomial",
    "q_torus2",
    "FaceStructure",
    "GoeritzMatrix",
    "det_via_q",
    "determinant",
    "faces",
    "goeritz_matrix",
    "Report",
    "Verdict",
    "classify",
    "CertLeaf",
    "CertNode",
    "Certificate",
    "certificate_json",
    "certificate_text",
    "certify",
    "verify_certificate",
    "CorpusEntry",
    "bundled_corpus_path",
    "load_corpus",
    "parse_notation",
]
