"""Simply-laced root systems generated from a Cartan matrix.

Roots are dense integer tuples of coefficients over the simple roots.  The
bilinear form is the one with ``(a_i, a_i) = 2``, so every root has norm 2
and the pairing ``<b, g^v>`` is just ``b^T A g``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Root = tuple[int, ...]


class CartanError(ValueError):
    """Raised for a Cartan matrix outside the simply-laced scope."""


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise CartanError("empty Cartan matrix")
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise CartanError(f"row {i + 1} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(n):
                a = self.entries[i][j]
                if i == j:
                    if a != 2:
                        raise CartanError(f"diagonal entry A[{i + 1}][{j + 1}] = {a}, expected 2")
                    continue
                if a not in (0, -1):
                    raise CartanError(
                        f"off-diagonal entry A[{i + 1}][{j + 1}] = {a} is not simply-laced (must be 0 or -1)"
                    )
                if a != self.entries[j][i]:
                    raise CartanError(
                        f"entry A[{i + 1}][{j + 1}] = {a} differs from A[{j + 1}][{i + 1}] = {self.entries[j][i]}"
                    )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], name: str = "") -> "CartanMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows), name)

    @classmethod
    def from_edges(cls, rank: int, edges: Iterable[tuple[int, int]], name: str = "") -> "CartanMatrix":
        """Build from 1-based Dynkin diagram edges."""
        a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        return cls.from_rows(a, name)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]


def e6() -> CartanMatrix:
    """E6 with a2 attached to a4 and the chain a1-a3-a4-a5-a6."""
    return CartanMatrix.from_edges(6, [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)], "E6")


def cartan_matrix(name: str) -> CartanMatrix:
    """Cartan matrix for ``a<n>``, ``d<n>``, ``e6``, ``e7`` or ``e8`` (case-insensitive)."""
    key = name.strip().lower()
    if key == "e6":
        return e6()
    if key in ("e7", "e8"):
        n = int(key[1])
        edges = [(1, 3), (2, 4)] + [(k, k + 1) for k in range(3, n)]
        return CartanMatrix.from_edges(n, edges, key.upper())
    if len(key) > 1 and key[0] in "ad" and key[1:].isdigit():
        n = int(key[1:])
        if key[0] == "a" and n >= 1:
            return CartanMatrix.from_edges(n, [(k, k + 1) for k in range(1, n)], f"A{n}")
        if key[0] == "d" and n >= 4:
            edges = [(k, k + 1) for k in range(1, n - 1)] + [(n - 2, n)]
            return CartanMatrix.from_edges(n, edges, f"D{n}")
    raise CartanError(f"unknown algebra {name!r}")


def form(cartan: CartanMatrix, x: Sequence[int], y: Sequence[int]) -> int:
    """Bilinear form (x, y) in the simple-root basis."""
    a = cartan.entries
    n = cartan.rank
    total = 0
    for i in range(n):
        xi = x[i]
        if xi:
            row = a[i]
            total += xi * sum(row[j] * y[j] for j in range(n))
    return total


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanMatrix
    positive_roots: tuple[Root, ...]
    highest_root: Root
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        idx = {r: k for k, r in enumerate(self.positive_roots)}
        object.__setattr__(self, "_index", idx)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(simple_root(self.rank, i) for i in range(self.rank))

    def is_root(self, v: Sequence[int]) -> bool:
        t = tuple(v)
        return t in self._index or tuple(-x for x in t) in self._index

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._index

    def index(self, root: Sequence[int]) -> int:
        return self._index[tuple(root)]

    def all_roots(self) -> list[Root]:
        return list(self.positive_roots) + [tuple(-x for x in r) for r in self.positive_roots]


def simple_root(rank: int, i: int) -> Root:
    """0-based simple root index."""
    return tuple(1 if j == i else 0 for j in range(rank))


def height(root: Sequence[int]) -> int:
    return sum(root)


def _require_connected(cartan: CartanMatrix) -> None:
    n = cartan.rank
    seen = {0}
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if cartan.entries[i][j] and j not in seen:
                seen.add(j)
                todo.append(j)
    if len(seen) != n:
        raise CartanError("Dynkin diagram is not connected; only simple algebras are supported")


def generate_positive_roots(cartan: CartanMatrix) -> RootSystem:
    """Positive roots by the root-string criterion, grown one height at a time.

    b + a_i is a root iff p - <b, a_i^v> > 0, where p is the length of the
    a_i-string below b.
    """
    n = cartan.rank
    _require_connected(cartan)
    simples = [simple_root(n, i) for i in range(n)]
    known: set[Root] = set(simples)
    layer = list(simples)
    while layer:
        nxt: list[Root] = []
        for b in layer:
            for i in range(n):
                p = 0
                down = list(b)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                # <b, a_i^v> = sum_j b_j A[j][i]
                q = p - sum(b[j] * cartan.entries[j][i] for j in range(n))
                if q > 0:
                    up = list(b)
                    up[i] += 1
                    t = tuple(up)
                    if t not in known:
                        known.add(t)
                        nxt.append(t)
        layer = nxt
    ordered = tuple(sorted(known, key=lambda r: (height(r), r)))
    top = max(height(r) for r in ordered)
    tops = [r for r in ordered if height(r) == top]
    if len(tops) != 1:
        raise RuntimeError(f"expected a unique highest root, found {len(tops)}")
    return RootSystem(cartan, ordered, tops[0])


def pairing(rs: RootSystem, beta: Sequence[int], gamma: Sequence[int]) -> int:
    """<beta, gamma^v> = 2 (beta, gamma) / (gamma, gamma)."""
    gg = form(rs.cartan, gamma, gamma)
    if gg == 0:
        raise ValueError("cannot pair against the zero vector")
    num = 2 * form(rs.cartan, beta, gamma)
    if num % gg:
        raise ValueError(f"pairing {num}/{gg} is not integral")
    return num // gg


def reflect_root(rs: RootSystem, beta: Sequence[int], gamma: Sequence[int]) -> Root:
    """s_gamma(beta) = beta - <beta, gamma^v> gamma."""
    k = pairing(rs, beta, gamma)
    out = tuple(b - k * g for b, g in zip(beta, gamma))
    if not rs.is_root(out):
        raise RuntimeError(f"reflection of {tuple(beta)} in {tuple(gamma)} gave non-root {out}")
    return out


_E6: RootSystem | None = None


def e6_roots() -> RootSystem:
    """Cached E6 root system."""
    global _E6
    if _E6 is None:
        _E6 = generate_positive_roots(e6())
    return _E6
