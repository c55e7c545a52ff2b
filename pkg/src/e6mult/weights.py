"""rho-shifted weights in Dynkin-label coordinates and ER signatures.

A weight is always stored shifted: ``labels[i] = (Lambda + rho, a_i^v)``.
The unshifted weight is only ever needed for display (``labels - 1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .parabolic import ParabolicSplit, compact_simple_positions
from .rootsys import Root, RootSystem


@dataclass(frozen=True, order=True)
class ShiftedWeight:
    labels: tuple[int, ...]

    @classmethod
    def of(cls, labels: Iterable[int]) -> "ShiftedWeight":
        return cls(tuple(int(x) for x in labels))

    @classmethod
    def rho(cls, rank: int) -> "ShiftedWeight":
        return cls((1,) * rank)

    def unshifted(self) -> tuple[int, ...]:
        return tuple(x - 1 for x in self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.labels) + ")"


@dataclass(frozen=True, order=True)
class SignatureChi:
    """ER signature: labels at the compact simple positions plus 2c.

    ``shift`` is d - c (11/2 for E6(-14)), kept doubled so everything stays
    integral.
    """

    n: tuple[int, ...]
    two_c: int
    two_shift: int = 11

    @property
    def c(self) -> Fraction:
        return Fraction(self.two_c, 2)

    @property
    def d(self) -> Fraction:
        return Fraction(self.two_c + self.two_shift, 2)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.n) + f"; c={_frac(self.c)}" + "}"


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fraction_text(q: Fraction) -> str:
    return _frac(q)


def hc_param(w: ShiftedWeight, beta: Sequence[int]) -> int:
    """Harish-Chandra parameter (Lambda + rho, beta) in the simply-laced normalization."""
    return sum(c * m for c, m in zip(beta, w.labels))


def coroot_row(rs: RootSystem, beta: Sequence[int]) -> tuple[int, ...]:
    """<beta, a_j^v> for every simple root a_j."""
    a = rs.cartan.entries
    n = rs.rank
    return tuple(sum(beta[i] * a[i][j] for i in range(n)) for j in range(n))


def shifted_reflect(w: ShiftedWeight, beta: Sequence[int], rs: RootSystem) -> ShiftedWeight:
    """s_beta acting on Lambda + rho: m'_j = m_j - m_beta <beta, a_j^v>."""
    mb = hc_param(w, beta)
    if mb == 0:
        return w
    row = coroot_row(rs, beta)
    return ShiftedWeight(tuple(m - mb * r for m, r in zip(w.labels, row)))


def bgg_reducibilities(w: ShiftedWeight, split: ParabolicSplit) -> list[tuple[Root, int]]:
    """Every noncompact positive root with a positive parameter, in root order."""
    out = []
    for beta in split.noncompact_roots:
        m = hc_param(w, beta)
        if m > 0:
            out.append((beta, m))
    return out


def to_signature(w: ShiftedWeight, split: ParabolicSplit) -> SignatureChi:
    rs = split.roots
    top = rs.highest_root
    n = tuple(w.labels[i] for i in compact_simple_positions(split))
    # d - c = (rho, top) / 2 = height(top) / 2
    return SignatureChi(n, -hc_param(w, top), sum(top))


def is_m_dominant(w: ShiftedWeight, split: ParabolicSplit, strict: bool = True) -> bool:
    if strict:
        return all(w.labels[i] > 0 for i in compact_simple_positions(split))
    return all(w.labels[i] >= 0 for i in compact_simple_positions(split))
