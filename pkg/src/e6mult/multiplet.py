"""Multiplet graphs: M-dominant Weyl-orbit points linked by noncompact reflections.

Vertices are rho-shifted weights.  An edge ``u -> v`` along a noncompact
root b exists when ``m_b(u) > 0`` and ``v = s_b(u)`` is again a vertex.
Besides the numeric labels every vertex carries its labels as an integer
linear form in the input labels (``labels(v) = F_v . m``), so a single
build answers for the whole family of inputs with the same zero pattern.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .parabolic import ParabolicSplit, compact_simple_positions, e6_14_split
from .rootsys import Root, RootSystem
from .weights import (
    ShiftedWeight,
    SignatureChi,
    coroot_row,
    hc_param,
    shifted_reflect,
    to_signature,
)

DEFAULT_ORBIT_CAP = 10**6

# Reduced multiplet types: 1-based label positions set to zero.
REDUCED_TYPES: dict[str, tuple[int, ...]] = {
    "MAIN": (),
    "R2": (2,),
    "R3": (3,),
    "R4": (4,),
    "R1": (1,),
    "R24": (2, 4),
    "R23": (2, 3),
    "R21": (2, 1),
    "R41": (4, 1),
    "R43": (4, 3),
    "R13": (1, 3),
    "R15": (1, 5),
    "R16": (1, 6),
    "R35": (3, 5),
    "R235": (2, 3, 5),
    "R215": (2, 1, 5),
    "R216": (2, 1, 6),
    "R416": (4, 1, 6),
}

# Diagram automorphism of E6 (1<->6, 3<->5), 0-based.
CONJUGATION = (5, 1, 4, 3, 2, 0)

FINITE_DIM_SUBREP = "FINITE_DIM_SUBREP"
TRIVIAL_IRREP = "TRIVIAL_IRREP"
HOLO_DS = "HOLO_DS"
LIMIT_HOLO_DS = "LIMIT_HOLO_DS"
LIMIT = "LIMIT"
SELF_KS = "SELF_KS"


class OrbitTooLarge(RuntimeError):
    pass


def type_labels(kind: str, base: Sequence[int]) -> tuple[int, ...]:
    """``base`` with the positions of reduced type ``kind`` set to zero."""
    try:
        zeros = REDUCED_TYPES[kind.upper()]
    except KeyError:
        raise ValueError(f"unknown multiplet type {kind!r}") from None
    out = list(base)
    for k in zeros:
        out[k - 1] = 0
    return tuple(out)


def type_of_labels(labels: Sequence[int]) -> str | None:
    zeros = tuple(sorted(i + 1 for i, x in enumerate(labels) if x == 0))
    for name, z in REDUCED_TYPES.items():
        if tuple(sorted(z)) == zeros:
            return name
    return None


def weyl_orbit(w0: ShiftedWeight, rs: RootSystem, cap: int = DEFAULT_ORBIT_CAP) -> set[ShiftedWeight]:
    """Closure of ``w0`` under the simple reflections."""
    a = rs.cartan.entries
    n = rs.rank
    start = tuple(w0.labels)
    seen = {start}
    todo = [start]
    while todo:
        w = todo.pop()
        for i in range(n):
            mi = w[i]
            if mi == 0:
                continue
            row = a[i]
            v = tuple(w[j] - mi * row[j] for j in range(n))
            if v not in seen:
                seen.add(v)
                if len(seen) > cap:
                    raise OrbitTooLarge(f"orbit exceeds cap of {cap} elements")
                todo.append(v)
    return {ShiftedWeight(v) for v in seen}


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    root: Root
    m: int


@dataclass(frozen=True)
class MultipletGraph:
    input_labels: tuple[int, ...]
    vertices: tuple[ShiftedWeight, ...]
    signatures: tuple[SignatureChi, ...]
    forms: tuple[tuple[tuple[int, ...], ...], ...]
    edges: tuple[Edge, ...]
    reduced_edges: tuple[Edge, ...]
    ks_pairs: tuple[tuple[int, int], ...]
    origin: int
    split: ParabolicSplit = field(repr=False)
    dominant_orbit_count: int | None = None
    excluded: tuple[ShiftedWeight, ...] = ()

    @property
    def roots(self) -> RootSystem:
        return self.split.roots

    @property
    def zero_positions(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.input_labels) if x == 0)

    def index(self, w: ShiftedWeight) -> int:
        return self._lookup()[w.labels]

    def _lookup(self) -> dict[tuple[int, ...], int]:
        cache = self.__dict__.get("_idx")
        if cache is None:
            cache = {v.labels: k for k, v in enumerate(self.vertices)}
            object.__setattr__(self, "_idx", cache)
        return cache

    def __len__(self) -> int:
        return len(self.vertices)

    def ks_partner_index(self, k: int) -> int:
        for a, b in self.ks_pairs:
            if a == k:
                return b
            if b == k:
                return a
        raise KeyError(k)

    def self_paired(self) -> list[int]:
        return [a for a, b in self.ks_pairs if a == b]

    def edge_form(self, e: Edge) -> tuple[int, ...]:
        """m_b along the edge as a linear form in the input labels."""
        f = self.forms[e.source]
        n = len(f)
        return tuple(sum(e.root[i] * f[i][j] for i in range(n)) for j in range(n))

    def edge_label_index(self, e: Edge) -> int | None:
        """1-based i with m_b = m_i on this family, if there is one."""
        c = self.edge_form(e)
        nz = [j for j, x in enumerate(c) if x]
        if len(nz) == 1 and c[nz[0]] == 1:
            return nz[0] + 1
        return None

    def signature_form(self, k: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        """(n-slot forms, 2c form) of vertex ``k`` in the input labels."""
        f = self.forms[k]
        top = self.roots.highest_root
        n = len(f)
        slots = tuple(f[i] for i in compact_simple_positions(self.split))
        two_c = tuple(-sum(top[i] * f[i][j] for i in range(n)) for j in range(n))
        return slots, two_c

    def canonical(self) -> tuple:
        """Hashable invariant: equal for identical graphs regardless of construction."""
        verts = tuple(v.labels for v in self.vertices)
        edges = tuple(sorted((e.source, e.target, e.root, e.m) for e in self.edges))
        red = tuple(sorted((e.source, e.target) for e in self.reduced_edges))
        return verts, edges, red, tuple(sorted(self.ks_pairs)), self.origin


def ks_partner(v: ShiftedWeight, rs: RootSystem) -> ShiftedWeight:
    """Reflection in the highest root."""
    return shifted_reflect(v, rs.highest_root, rs)


def transitive_reduction(n: int, edges: Iterable[Edge]) -> list[Edge]:
    """Edges not implied by a longer path.  Raises ValueError on a cycle."""
    edges = list(edges)
    succ: list[set[int]] = [set() for _ in range(n)]
    indeg = [0] * n
    for e in edges:
        if e.target not in succ[e.source]:
            succ[e.source].add(e.target)
            indeg[e.target] += 1
    order = [k for k in range(n) if indeg[k] == 0]
    for k in order:
        for t in succ[k]:
            indeg[t] -= 1
            if indeg[t] == 0:
                order.append(t)
    if len(order) != n:
        raise ValueError("edge relation has a cycle")
    # reach[k]: vertices reachable from k by a path of length >= 1
    reach: list[set[int]] = [set() for _ in range(n)]
    for k in reversed(order):
        r = reach[k]
        for t in succ[k]:
            r.add(t)
            r |= reach[t]
    kept = []
    for e in edges:
        implied = any(e.target in reach[t] for t in succ[e.source] if t != e.target)
        if not implied:
            kept.append(e)
    return kept


def _is_dominant(labels: Sequence[int], compact: Sequence[int], strict: bool) -> bool:
    if strict:
        return all(labels[i] > 0 for i in compact)
    return all(labels[i] >= 0 for i in compact)


def _component_by_reflection(
    w0: tuple[int, ...], rs: RootSystem, split: ParabolicSplit, strict: bool
) -> set[tuple[int, ...]]:
    compact = compact_simple_positions(split)
    rows = [(b, coroot_row(rs, b)) for b in split.noncompact_roots]
    seen = {w0}
    todo = [w0]
    while todo:
        w = todo.pop()
        for b, row in rows:
            mb = sum(x * y for x, y in zip(b, w))
            if mb == 0:
                continue
            v = tuple(x - mb * r for x, r in zip(w, row))
            if v not in seen and _is_dominant(v, compact, strict):
                seen.add(v)
                todo.append(v)
    return seen


def _reflect_form(f: tuple[tuple[int, ...], ...], beta: Root, row: Sequence[int], zeros: Sequence[int]):
    n = len(f)
    mb = [sum(beta[i] * f[i][j] for i in range(n)) for j in range(n)]
    for j in zeros:
        mb[j] = 0
    return tuple(tuple(f[i][j] - row[i] * mb[j] for j in range(n)) for i in range(n))


def build_multiplet(
    labels: Sequence[int],
    rs: RootSystem | None = None,
    split: ParabolicSplit | None = None,
    via_orbit: bool = True,
    cap: int = DEFAULT_ORBIT_CAP,
) -> MultipletGraph:
    """Multiplet containing the dominant weight with the given labels.

    ``via_orbit`` builds the full Weyl orbit first and keeps its M-dominant
    points, which also yields the count of dominant points left outside the
    connected component.  Otherwise the component is grown directly by
    noncompact reflections.
    """
    if split is None:
        if rs is not None and rs.cartan.name != "E6":
            raise ValueError("a parabolic split is required for a non-E6 root system")
        split = e6_14_split()
    rs = split.roots
    w0 = tuple(int(x) for x in labels)
    if len(w0) != rs.rank:
        raise ValueError(f"expected {rs.rank} labels, got {len(w0)}")
    if any(x < 0 for x in w0):
        raise ValueError("labels must be nonnegative")
    if not any(w0):
        raise ValueError("all-zero labels do not define a multiplet")
    strict = all(x > 0 for x in w0)
    compact = compact_simple_positions(split)
    noncompact = split.noncompact_roots
    rows = {b: coroot_row(rs, b) for b in noncompact}

    dominant_count = None
    if via_orbit:
        orbit = weyl_orbit(ShiftedWeight(w0), rs, cap)
        pool = {w.labels for w in orbit if _is_dominant(w.labels, compact, strict)}
        dominant_count = len(pool)
    else:
        pool = _component_by_reflection(w0, rs, split, strict)

    # connected component of the origin, tracking label forms along the way
    zeros = [i for i, x in enumerate(w0) if x == 0]
    n = rs.rank
    ident = tuple(tuple(0 if j in zeros else int(i == j) for j in range(n)) for i in range(n))
    forms = {w0: ident}
    queue = deque([w0])
    while queue:
        w = queue.popleft()
        for b in noncompact:
            mb = sum(x * y for x, y in zip(b, w))
            if mb == 0:
                continue
            row = rows[b]
            v = tuple(x - mb * r for x, r in zip(w, row))
            if v in pool and v not in forms:
                forms[v] = _reflect_form(forms[w], b, row, zeros)
                queue.append(v)
    excluded = tuple(sorted(ShiftedWeight(w) for w in pool if w not in forms))

    verts = [ShiftedWeight(w) for w in forms]
    sigs = {w.labels: to_signature(w, split) for w in verts}
    verts.sort(key=lambda w: (sigs[w.labels].two_c, sigs[w.labels].n))
    idx = {w.labels: k for k, w in enumerate(verts)}
    for w in verts:
        f = forms[w.labels]
        if tuple(sum(f[i][j] * w0[j] for j in range(n)) for i in range(n)) != w.labels:
            raise RuntimeError(f"label form does not reproduce {w}")

    edges = []
    for k, w in enumerate(verts):
        for b in noncompact:
            mb = hc_param(w, b)
            if mb > 0:
                v = tuple(x - mb * r for x, r in zip(w.labels, rows[b]))
                t = idx.get(v)
                if t is not None:
                    edges.append(Edge(k, t, b, mb))

    pairs = []
    for k, w in enumerate(verts):
        p = idx.get(ks_partner(w, rs).labels)
        if p is None:
            raise RuntimeError(f"Knapp-Stein partner of {w} is missing")
        if k <= p:
            pairs.append((k, p))

    return MultipletGraph(
        input_labels=w0,
        vertices=tuple(verts),
        signatures=tuple(sigs[w.labels] for w in verts),
        forms=tuple(forms[w.labels] for w in verts),
        edges=tuple(edges),
        reduced_edges=tuple(transitive_reduction(len(verts), edges)),
        ks_pairs=tuple(pairs),
        origin=idx[w0],
        split=split,
        dominant_orbit_count=dominant_count,
        excluded=excluded,
    )


def build_reduced(kind: str, base: Sequence[int] = (1, 1, 1, 1, 1, 1), **kw) -> MultipletGraph:
    return build_multiplet(type_labels(kind, base), **kw)


def degenerate_ks_edges(g: MultipletGraph) -> list[Edge]:
    top = g.roots.highest_root
    return [e for e in g.reduced_edges if e.root == top]


def _permute(v: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[perm[i]] = x
    return tuple(out)


def conjugate_multiplet(g: MultipletGraph, perm: Sequence[int] = CONJUGATION) -> MultipletGraph:
    """Relabel vertices and roots by a diagram automorphism and re-canonicalize."""
    split = g.split
    n = len(perm)
    verts = [ShiftedWeight(_permute(w.labels, perm)) for w in g.vertices]
    sigs = [to_signature(w, split) for w in verts]
    order = sorted(range(len(verts)), key=lambda k: (sigs[k].two_c, sigs[k].n))
    new_of = {old: new for new, old in enumerate(order)}

    def pform(f):
        # rows follow the labels, columns follow the input labels
        rows = [None] * n
        for i in range(n):
            rows[perm[i]] = _permute(f[i], perm)
        return tuple(rows)

    def pedge(e: Edge) -> Edge:
        return Edge(new_of[e.source], new_of[e.target], _permute(e.root, perm), e.m)

    pairs = tuple(sorted(tuple(sorted((new_of[a], new_of[b]))) for a, b in g.ks_pairs))
    return MultipletGraph(
        input_labels=_permute(g.input_labels, perm),
        vertices=tuple(verts[k] for k in order),
        signatures=tuple(sigs[k] for k in order),
        forms=tuple(pform(g.forms[k]) for k in order),
        edges=tuple(sorted((pedge(e) for e in g.edges), key=lambda e: (e.source, e.target))),
        reduced_edges=tuple(sorted((pedge(e) for e in g.reduced_edges), key=lambda e: (e.source, e.target))),
        ks_pairs=pairs,
        origin=new_of[g.origin],
        split=split,
        dominant_orbit_count=g.dominant_orbit_count,
        excluded=tuple(sorted(ShiftedWeight(_permute(w.labels, perm)) for w in g.excluded)),
    )


def classify_vertex(g: MultipletGraph, k: int) -> frozenset[str]:
    w = g.vertices[k]
    flags = set()
    if k == g.origin and all(x > 0 for x in g.input_labels):
        flags.add(FINITE_DIM_SUBREP)
        if all(x == 1 for x in g.input_labels):
            flags.add(TRIVIAL_IRREP)
    params = [hc_param(w, b) for b in g.split.noncompact_roots]
    if all(p < 0 for p in params):
        flags.add(HOLO_DS)
    elif all(p <= 0 for p in params):
        flags.add(LIMIT_HOLO_DS)
    if any(w.labels[i] == 0 for i in compact_simple_positions(g.split)):
        flags.add(LIMIT)
    if g.signatures[k].two_c == 0:
        flags.add(SELF_KS)
    return frozenset(flags)
