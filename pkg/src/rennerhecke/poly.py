"""Integer polynomials in one variable ``q``, stored as coefficient tuples."""

from __future__ import annotations

import re
from dataclasses import dataclass


@dataclass(frozen=True)
class IntPolynomial:
    """``coeffs[i]`` is the coefficient of ``q^i``; trailing zeros are trimmed."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scalar(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def scalar(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * x for x in self.coeffs))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``q^k``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def eval_at(self, q0):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = ""
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if d == 0:
                body = str(a)
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if a == 1 else f"{a}{var}"
            out += (sign if out or sign == "-" else "") + body
        return out

    def __repr__(self):
        return f"IntPolynomial({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        s = text.replace(" ", "").replace("*", "")
        if not s:
            raise ValueError("empty polynomial")
        if s == "0":
            return cls()
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        out = cls()
        for t in terms:
            m = re.fullmatch(r"([+-]?)(\d*)(q(?:\^(\d+))?)?", t)
            if not m or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse term {t!r} in {text!r}")
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(1) == "-":
                c = -c
            d = 0 if not m.group(3) else int(m.group(4) or 1)
            out = out + cls.monomial(d, c)
        return out


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


ZERO = IntPolynomial()
ONE = IntPolynomial.const(1)
Q = IntPolynomial.monomial(1)
