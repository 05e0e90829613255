"""Exact Laurent polynomial arithmetic in one variable over the integers.

Elements of Z[x, x^-1] are stored sparsely as {exponent: coefficient} with
no zero coefficients kept.  All arithmetic is exact; coefficients are
arbitrary-precision Python ints.  The zero polynomial is the empty term map
and has no degree: callers must branch instead of relying on a sentinel.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = ["LaurentPoly", "X", "ONE", "ZERO"]

_TERM_RE = re.compile(
    r"""(?P<sign>[+-]?)\s*
        (?:(?P<coeff>\d+)\s*\*?\s*)?
        (?P<var>x)?
        (?:\^(?P<exp>-?\d+))?\s*""",
    re.VERBOSE,
)


class LaurentPoly:
    """Immutable integer Laurent polynomial in the variable x."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict[int, int] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for e, c in items:
                c = data.get(e, 0) + c
                if c:
                    data[e] = c
                else:
                    data.pop(e, None)
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, k: int) -> "LaurentPoly":
        return cls({0: k})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    # -- structure ---------------------------------------------------------

    def terms(self) -> dict[int, int]:
        """Copy of the {exponent: coefficient} map."""
        return dict(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no minimal degree")
        return min(self._terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            c = out.get(e, 0) + c
            if c:
                out[e] = c
            else:
                del out[e]
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                c = out.get(e, 0) + c1 * c2
                if c:
                    out[e] = c
                else:
                    del out[e]
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in Z[x, x^-1]")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by x^e."""
        return _raw({k + e: c for k, c in self._terms.items()})

    def scale(self, k: int) -> "LaurentPoly":
        if k == 0:
            return ZERO
        return _raw({e: k * c for e, c in self._terms.items()})

    # -- evaluation --------------------------------------------------------

    def __call__(self, x0) -> Fraction:
        """Exact rational evaluation at a nonzero rational point.

        x0 = 0 is rejected whenever a negative exponent is present.
        """
        x0 = Fraction(x0)
        if x0 == 0 and self._terms and min(self._terms) < 0:
            raise ZeroDivisionError("evaluation at 0 with negative exponents")
        return sum((c * x0**e for e, c in self._terms.items()), Fraction(0))

    eval_rational = __call__

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- text form ---------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else ("+" if out else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            out.append(sign + body)
        return "".join(out)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the notation produced by str(), e.g. "2x^3+4x^2-2x-3"."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial string")
        if s == "0":
            return ZERO
        terms: list[tuple[int, int]] = []
        pos = 0
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"bad polynomial syntax at {s[pos:]!r}")
            sign = -1 if m.group("sign") == "-" else 1
            coeff = m.group("coeff")
            var = m.group("var")
            exp = m.group("exp")
            if var is None:
                if coeff is None or exp is not None:
                    raise ValueError(f"bad term in {text!r}")
                terms.append((0, sign * int(coeff)))
            else:
                c = sign * (int(coeff) if coeff else 1)
                e = int(exp) if exp is not None else 1
                terms.append((e, c))
            pos = m.end()
        return cls(terms)


def _coerce(v):
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, int):
        return LaurentPoly.const(v)
    return NotImplemented


def _raw(d: dict[int, int]) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    object.__setattr__(p, "_terms", d)
    return p


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
X = LaurentPoly.monomial(1, 1)
