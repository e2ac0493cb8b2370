"""Finite-type root data for the dual group.

Conventions
-----------
* Cartan entries: ``a[i][j] = <alpha_j, coroot_i>`` (so ``a[i][j] = 2(a_i, a_j)/(a_i, a_i)``),
  Bourbaki numbering for the named types.
* Weights are integer tuples in the fundamental-weight basis.
* Root-lattice vectors are integer tuples in the simple-root basis.
  ``alpha_j`` in fundamental coordinates is column ``j`` of the Cartan matrix.
"""
from __future__ import annotations

import hashlib
import json
import re
import threading
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from pathlib import Path
from typing import Sequence

from .errors import MalformedCartan, NotDominant, NotFiniteType

Weight = tuple[int, ...]
RootVector = tuple[int, ...]

ROOT_BOUND = 10_000
WEYL_ORDER_BOUND = 10**6


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "CartanMatrix":
        try:
            entries = tuple(tuple(int(x) for x in row) for row in rows)
        except (TypeError, ValueError) as exc:
            raise MalformedCartan(f"non-integer Cartan entries: {rows!r}") from exc
        m = cls(entries)
        m.validate()
        return m

    def validate(self) -> None:
        n = self.rank
        if n == 0:
            raise MalformedCartan("empty Cartan matrix")
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise MalformedCartan("Cartan matrix must be square")
            if row[i] != 2:
                raise MalformedCartan(f"diagonal entry a[{i}][{i}] = {row[i]} != 2")
            for j in range(n):
                if i == j:
                    continue
                if row[j] > 0:
                    raise MalformedCartan(f"off-diagonal a[{i}][{j}] = {row[j]} > 0")
                if (row[j] == 0) != (self.entries[j][i] == 0):
                    raise MalformedCartan(f"a[{i}][{j}] and a[{j}][{i}] disagree on vanishing")


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_from_type(symbol: str) -> CartanMatrix:
    """Cartan matrix for a type symbol such as ``"A2"``, ``"C3"``, ``"G2"``."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", symbol)
    if not m:
        raise MalformedCartan(f"unrecognised type symbol {symbol!r}")
    letter, n = m.group(1).upper(), int(m.group(2))
    allowed = {"A": range(1, 9), "B": range(2, 5), "C": range(2, 5), "D": [4], "G": [2], "F": [4]}
    if letter not in allowed or n not in allowed[letter]:
        raise MalformedCartan(f"unsupported type {letter}{n}")
    a = _chain(n)
    if letter == "B":
        a[n - 1][n - 2] = -2
    elif letter == "C":
        a[n - 2][n - 1] = -2
    elif letter == "D":
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif letter == "G":
        a = [[2, -3], [-1, 2]]
    elif letter == "F":
        a = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    return CartanMatrix.from_rows(a)


def load_cartan(source: str) -> tuple[CartanMatrix, str]:
    """Accept a type symbol or a path to a JSON integer matrix; return (matrix, label)."""
    path = Path(source)
    if path.suffix.lower() == ".json" or path.exists():
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise MalformedCartan(f"cannot read {source}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise MalformedCartan(f"{source} is not valid JSON: {exc}") from exc
        if isinstance(data, dict):
            data = data.get("cartan", data.get("matrix"))
        if not isinstance(data, list):
            raise MalformedCartan(f"{source} must hold a matrix (list of rows)")
        return CartanMatrix.from_rows(data), "custom"
    return cartan_from_type(source), source.strip().upper()


def _inverse(a: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise NotFiniteType("singular Cartan matrix")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def _symmetrizer(a: Sequence[Sequence[int]]) -> list[Fraction]:
    """Half squared lengths d_i with d_i a_ij = d_j a_ji, normalised per component."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        todo = [start]
        while todo:
            i = todo.pop()
            for j in range(n):
                if j != i and a[i][j] != 0:
                    dj = d[i] * a[i][j] / a[j][i]
                    if d[j] is None:
                        d[j] = dj
                        todo.append(j)
                    elif d[j] != dj:
                        raise MalformedCartan("Cartan matrix is not symmetrizable")
    return d  # type: ignore[return-value]


@dataclass(frozen=True)
class WeylElement:
    reduced_word: tuple[int, ...]
    action: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return len(self.reduced_word)

    @property
    def sign(self) -> int:
        return -1 if len(self.reduced_word) % 2 else 1

    def __call__(self, lam: Sequence[int]) -> Weight:
        return tuple(sum(r * x for r, x in zip(row, lam)) for row in self.action)


@dataclass(eq=False)
class RootDatum:
    """Immutable root datum. Lazy caches are filled idempotently under a lock."""

    cartan: CartanMatrix
    positive_roots: tuple[RootVector, ...]
    label: str = "custom"
    lattice: str = "weight"
    cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        a = self.cartan.entries
        self._inv = _inverse(a)
        self._det = lcm(*(x.denominator for row in self._inv for x in row))
        self._adj = tuple(tuple(int(x * self._det) for x in row) for row in self._inv)
        self._d = _symmetrizer(a)
        self._lock = threading.Lock()
        self._weyl: list[WeylElement] | None = None
        self._simple_cols = tuple(tuple(a[i][j] for i in range(self.rank)) for j in range(self.rank))

    # ------------------------------------------------------------------ basics
    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    @property
    def fingerprint(self) -> str:
        payload = json.dumps({"cartan": self.cartan.entries, "lattice": self.lattice})
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def simple_root(self, j: int) -> Weight:
        """alpha_j in fundamental coordinates."""
        return self._simple_cols[j]

    def from_root(self, r: Sequence[int]) -> Weight:
        a = self.cartan.entries
        n = self.rank
        return tuple(sum(a[i][j] * r[j] for j in range(n)) for i in range(n))

    def to_root(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        return tuple(sum(row[j] * lam[j] for j in range(self.rank)) for row in self._inv)

    def to_root_int(self, lam: Sequence[int]) -> RootVector | None:
        """Simple-root coordinates if lam lies in the root lattice, else None."""
        det = self._det
        out = []
        for row in self._adj:
            q, r = divmod(sum(c * x for c, x in zip(row, lam)), det)
            if r:
                return None
            out.append(q)
        return tuple(out)

    @staticmethod
    def height(r: Sequence[int]) -> int:
        return sum(r)

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return all(c >= 0 for c in lam)

    def in_lattice(self, lam: Sequence[int]) -> bool:
        return self.lattice == "weight" or self.to_root_int(lam) is not None

    def require_dominant(self, *weights: Sequence[int]) -> None:
        for lam in weights:
            if len(lam) != self.rank:
                raise ValueError(f"weight {tuple(lam)} has wrong length for rank {self.rank}")
            if not self.is_dominant(lam):
                raise NotDominant(f"weight {tuple(lam)} is not dominant")

    def pairing_2rho(self, lam: Sequence[int]) -> int:
        """<lam, 2 rho-check>: twice the height of lam in simple-root coordinates."""
        q, r = divmod(2 * sum(sum(c * x for c, x in zip(row, lam)) for row in self._adj), self._det)
        assert r == 0
        return q

    def form(self, x: Sequence[int], y: Sequence[int]) -> Fraction:
        """W-invariant form on weights, normalised by (alpha_i, alpha_i) = 2 d_i."""
        ry = self.to_root(y)
        return sum((x[i] * self._d[i] * ry[i] for i in range(self.rank)), Fraction(0))

    def reflect(self, i: int, lam: Sequence[int]) -> Weight:
        c = lam[i]
        col = self._simple_cols[i]
        return tuple(x - c * a for x, a in zip(lam, col))

    def reflect_root(self, i: int, r: Sequence[int]) -> RootVector:
        a = self.cartan.entries
        c = sum(a[i][j] * r[j] for j in range(self.rank))
        return tuple(x - c * (j == i) for j, x in enumerate(r))

    def dominant_rep(self, lam: Sequence[int]) -> tuple[Weight, int]:
        """Dominant W-conjugate of lam and the number of reflections used."""
        lam = tuple(lam)
        steps = 0
        while True:
            i = next((k for k, c in enumerate(lam) if c < 0), None)
            if i is None:
                return lam, steps
            lam = self.reflect(i, lam)
            steps += 1

    def dominant_of(self, lam: Weight) -> Weight:
        """Memoized dominant W-conjugate."""
        memo = self.cache.setdefault("dominant", {})
        got = memo.get(lam)
        if got is None:
            got = memo[lam] = self.dominant_rep(lam)[0]
        return got

    def orbit(self, lam: Sequence[int]) -> list[Weight]:
        seen = {tuple(lam)}
        todo = [tuple(lam)]
        while todo:
            x = todo.pop()
            for i in range(self.rank):
                if x[i]:
                    y = self.reflect(i, x)
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
        return sorted(seen)

    # ------------------------------------------------------------- Weyl group
    def weyl_group(self) -> list[WeylElement]:
        """All elements, breadth first, so every stored word is reduced."""
        if self._weyl is None:
            with self._lock:
                if self._weyl is None:
                    self._weyl = self._enumerate_weyl()
        return self._weyl

    def _enumerate_weyl(self) -> list[WeylElement]:
        n = self.rank
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        first = WeylElement((), ident)
        seen = {first(self.rho)}
        out = [first]
        queue = deque([first])
        while queue:
            w = queue.popleft()
            for i in range(n):
                col = self._simple_cols[i]
                wi = w.action[i]
                new = tuple(tuple(w.action[r][c] - col[r] * wi[c] for c in range(n)) for r in range(n))
                cand = WeylElement((i,) + w.reduced_word, new)
                key = cand(self.rho)
                if key not in seen:
                    seen.add(key)
                    out.append(cand)
                    queue.append(cand)
                    if len(out) > WEYL_ORDER_BOUND:
                        raise NotFiniteType(f"Weyl group order exceeds {WEYL_ORDER_BOUND}")
        return out

    @property
    def longest_element(self) -> WeylElement:
        return max(self.weyl_group(), key=lambda w: w.length)

    def inversions(self, w: WeylElement) -> int:
        """Number of positive roots sent to negative roots by w."""
        count = 0
        for beta in self.positive_roots:
            img = self.to_root_int(w(self.from_root(beta)))
            if all(x <= 0 for x in img):
                count += 1
        return count

    def dot_action(self, w: WeylElement, lam: Sequence[int]) -> Weight:
        """w . lam = w(lam + rho) - rho."""
        shifted = w(tuple(x + 1 for x in lam))
        return tuple(x - 1 for x in shifted)

    def summary(self) -> dict:
        return {
            "type": self.label,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan.entries],
            "lattice": self.lattice,
            "positive_roots": len(self.positive_roots),
            "weyl_order": len(self.weyl_group()),
            "fingerprint": self.fingerprint,
        }


def _positive_roots(cartan: CartanMatrix) -> tuple[RootVector, ...]:
    n = cartan.rank
    a = cartan.entries
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    todo = list(simple)
    while todo:
        r = todo.pop()
        for i in range(n):
            c = sum(a[i][j] * r[j] for j in range(n))
            s = tuple(x - c * (j == i) for j, x in enumerate(r))
            if s not in seen:
                if not (all(x >= 0 for x in s) or all(x <= 0 for x in s)):
                    raise NotFiniteType("reflection produced a vector of mixed sign")
                seen.add(s)
                todo.append(s)
                if len(seen) > 2 * ROOT_BOUND:
                    raise NotFiniteType(f"root closure exceeds {ROOT_BOUND} positive roots")
    pos = [r for r in seen if all(x >= 0 for x in r)]
    return tuple(sorted(pos, key=lambda r: (sum(r), tuple(-x for x in r))))


def build_root_datum(cartan: CartanMatrix | Sequence[Sequence[int]], label: str = "custom",
                     lattice: str = "weight") -> RootDatum:
    """Close the simple roots under simple reflections and assemble the datum."""
    if not isinstance(cartan, CartanMatrix):
        cartan = CartanMatrix.from_rows(cartan)
    else:
        cartan.validate()
    if lattice not in ("weight", "root"):
        raise ValueError(f"lattice must be 'weight' or 'root', got {lattice!r}")
    _symmetrizer(cartan.entries)
    roots = _positive_roots(cartan)
    return RootDatum(cartan, roots, label=label, lattice=lattice)


def datum_for(symbol: str, lattice: str = "weight") -> RootDatum:
    cartan, label = load_cartan(symbol)
    return build_root_datum(cartan, label=label, lattice=lattice)


def pairing_2rho(datum: RootDatum, lam: Sequence[int]) -> int:
    return datum.pairing_2rho(lam)


def in_pos_cone(datum: RootDatum, lam: Sequence[int]) -> bool:
    r = datum.to_root_int(lam)
    return r is not None and all(x >= 0 for x in r)


def leq_nonstandard(datum: RootDatum, lam1: Sequence[int], lam2: Sequence[int]) -> bool:
    """lam1 <= lam2 iff lam2 - lam1 is dominant (both arguments dominant)."""
    datum.require_dominant(lam1, lam2)
    return all(b - a >= 0 for a, b in zip(lam1, lam2))


def weyl_group(datum: RootDatum) -> list[WeylElement]:
    return datum.weyl_group()


def dot_action(datum: RootDatum, w: WeylElement, lam: Sequence[int]) -> Weight:
    return datum.dot_action(w, lam)


def dominant_weights_upto(datum: RootDatum, total: int) -> list[Weight]:
    """Dominant weights of the configured lattice with fundamental-coordinate sum <= total."""
    out: list[Weight] = []

    def rec(prefix: list[int], left: int) -> None:
        if len(prefix) == datum.rank:
            lam = tuple(prefix)
            if datum.in_lattice(lam):
                out.append(lam)
            return
        for c in range(left + 1):
            rec(prefix + [c], left - c)

    rec([], total)
    return sorted(out, key=lambda w: (sum(w), tuple(-c for c in w)))
