"""Integer polynomials in one grading variable ``q`` (q^k sits in cohomological degree 2k)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class QPolynomial:
    """Dense coefficient tuple, index = exponent; trailing zeros never stored."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "QPolynomial":
        return cls((0,) * k + (c,))

    @classmethod
    def from_dict(cls, data: Mapping) -> "QPolynomial":
        if not data:
            return cls()
        top = max(int(k) for k in data)
        c = [0] * (top + 1)
        for k, v in data.items():
            if int(k) < 0:
                raise ValueError(f"negative exponent {k}")
            c[int(k)] += int(v)
        return cls(tuple(c))

    def to_dict(self) -> dict[str, int]:
        return {str(k): c for k, c in enumerate(self.coeffs) if c}

    def to_json(self) -> dict:
        return {"coeffs": self.to_dict()}

    @classmethod
    def from_json(cls, data: Mapping) -> "QPolynomial":
        return cls.from_dict(data["coeffs"])

    # arithmetic
    def __add__(self, other: "QPolynomial | int") -> "QPolynomial":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPolynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "QPolynomial | int") -> "QPolynomial":
        return self + (-_coerce(other))

    def __mul__(self, other: "QPolynomial | int") -> "QPolynomial":
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPolynomial(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return QPolynomial((0,) * k + self.coeffs)

    def __call__(self, q: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * q + c
        return value

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def min_degree(self) -> int | None:
        return next((k for k, c in enumerate(self.coeffs) if c), None)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if abs(c) == 1 else f"{abs(c)} {var}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"QPolynomial({str(self)!r})"


def _coerce(x: "QPolynomial | int") -> QPolynomial:
    if isinstance(x, QPolynomial):
        return x
    return QPolynomial((int(x),))


ZERO = QPolynomial()
ONE = QPolynomial((1,))
Q = QPolynomial((0, 1))
