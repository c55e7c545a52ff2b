"""Compact/noncompact split of the positive roots for a maximal parabolic."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .rootsys import Root, RootSystem, e6_roots


@dataclass(frozen=True)
class ParabolicSplit:
    """Positive roots split by a set of marked simple roots (0-based indices).

    A root is noncompact iff every marked coefficient is positive.
    """

    marker: frozenset[int]
    compact_roots: tuple[Root, ...]
    noncompact_roots: tuple[Root, ...]
    rank: int
    roots: RootSystem = field(repr=False, compare=False, hash=False, default=None)

    @property
    def counts(self) -> tuple[int, int]:
        return len(self.compact_roots), len(self.noncompact_roots)

    def is_noncompact(self, root: Iterable[int]) -> bool:
        r = tuple(root)
        return all(r[i] > 0 for i in self.marker)


def split_roots(rs: RootSystem, marker: Iterable[int]) -> ParabolicSplit:
    """Split ``rs`` at the given 0-based simple-root indices."""
    mk = frozenset(int(i) for i in marker)
    if not mk:
        raise ValueError("empty marker: no parabolic selected")
    bad = sorted(i for i in mk if not 0 <= i < rs.rank)
    if bad:
        raise ValueError(f"marker index {bad[0] + 1} out of range for rank {rs.rank}")
    compact: list[Root] = []
    noncompact: list[Root] = []
    for r in rs.positive_roots:
        (noncompact if all(r[i] > 0 for i in mk) else compact).append(r)
    return ParabolicSplit(mk, tuple(compact), tuple(noncompact), rs.rank, rs)


def e6_14_split() -> ParabolicSplit:
    return split_roots(e6_roots(), E6_14_MARKER)


def compact_simple_positions(split: ParabolicSplit) -> tuple[int, ...]:
    """0-based simple-root indices outside the marker, ascending."""
    return tuple(i for i in range(split.rank) if i not in split.marker)


# Display-only metadata for E6(-14) induced from the su(5,1) parabolic.
E6_14_PROFILE: dict[str, str] = {
    "real form": "E6(-14) (EIII)",
    "maximal compact subalgebra K": "so(10) + so(2)",
    "dim_R P": "32",
    "dim_R N0 (each of N0+, N0-)": "30",
    "split rank": "2",
    "M0": "so(6) + so(2)",
    "restricted root system": "B2; long roots multiplicity 6, short roots multiplicity 8, 2*short multiplicity 1",
    "inducing parabolic": "M = su(5,1), dim A = 1, dim N = 21 (cuspidal, maximal)",
    "other maximal parabolic (not used)": "M' = so(7,1) + so(2), dim N' = 24",
    "marker": "alpha_2 (noncompact iff the alpha_2 coefficient is positive)",
    "signature": "{n1, n3, n4, n5, n6; c}, c = d - 11/2",
}

E6_14_MARKER = frozenset({1})
