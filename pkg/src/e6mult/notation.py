"""Compact subscript notation for E6 roots and label forms.

A subscript is a comma-separated list of groups.  A one-digit group ``i``
stands for a_i; a two-digit group ``ij`` with i < j stands for the run
a_i + a_(i+1) + ... + a_j in numeric index order.  So ``16,25,4`` is the
highest root (1,2,2,3,2,1) and ``1,35`` is a_1 + a_3 + a_4 + a_5.

The same subscripts name linear forms in the Dynkin labels: ``m_{2,4}`` is
m_2 + m_4.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Sequence

from .rootsys import Root, RootSystem

RANK = 6

# The 21 noncompact E6 roots in the order the tables list them.
NONCOMPACT_SUBSCRIPTS: tuple[str, ...] = (
    "2", "2,4", "24", "2,45", "25", "14", "2,46",
    "15", "26", "25,4", "16", "15,4", "26,4",
    "16,4", "15,34", "26,45", "16,34", "16,45",
    "16,35", "16,35,4", "16,25,4",
)

_GROUP = re.compile(r"^[1-9]{1,2}$")


class NotationError(ValueError):
    pass


def expand(subscript: str, rank: int = RANK) -> tuple[int, ...]:
    """Coefficient vector of a compact subscript such as ``"15,34"``."""
    s = subscript.strip()
    if s.startswith("{") and s.endswith("}"):
        s = s[1:-1]
    if not s:
        raise NotationError("empty subscript")
    v = [0] * rank
    for part in s.split(","):
        part = part.strip()
        if not _GROUP.match(part):
            raise NotationError(f"bad group {part!r} in subscript {subscript!r}")
        if len(part) == 1:
            lo = hi = int(part)
        else:
            lo, hi = int(part[0]), int(part[1])
            if lo >= hi:
                raise NotationError(f"range {part!r} must be increasing")
        if hi > rank:
            raise NotationError(f"index {hi} out of range in {subscript!r}")
        for k in range(lo, hi + 1):
            v[k - 1] += 1
    return tuple(v)


def _compact_subscript(root: Sequence[int]) -> str:
    # sl(6) roots are runs along the chain 1-3-4-5-6
    chain = (1, 3, 4, 5, 6)
    support = [i for i in chain if root[i - 1]]
    if len(support) == 1:
        return str(support[0])
    lo, hi = support[0], support[-1]
    if lo == 1:
        return "1,3" if hi == 3 else f"1,3{hi}"
    return f"{lo}{hi}"


@lru_cache(maxsize=None)
def e6_root_subscripts(rs: RootSystem) -> dict[Root, str]:
    """Subscript for every positive E6 root (compact and noncompact)."""
    names: dict[Root, str] = {}
    for sub in NONCOMPACT_SUBSCRIPTS:
        v = expand(sub)
        if not rs.is_positive_root(v):
            raise NotationError(f"subscript {sub} does not expand to a positive root")
        names[v] = sub
    for r in rs.positive_roots:
        if r not in names:
            if r[1] != 0:
                raise NotationError(f"noncompact root {r} missing from the name list")
            names[r] = _compact_subscript(r)
    return names


def root_name(rs: RootSystem, root: Sequence[int]) -> str:
    """``alpha_{...}`` for an E6 root, else the coefficient vector."""
    r = tuple(root)
    if rs.rank == RANK and rs.cartan.name == "E6":
        if r == rs.highest_root:
            return "alpha~"
        sign = ""
        if not rs.is_positive_root(r) and rs.is_positive_root(tuple(-x for x in r)):
            sign, r = "-", tuple(-x for x in r)
        names = e6_root_subscripts(rs)
        if r in names:
            return f"{sign}alpha_{{{names[r]}}}"
    return "(" + ",".join(str(x) for x in root) + ")"


def form_text(rs: RootSystem, coeffs: Sequence[int], tex: bool = False) -> str:
    """Render a linear form in the labels using compact names where possible."""
    c = tuple(coeffs)
    m = "m"
    hi = r"m_{\tilde\alpha}" if tex else "m~"
    if not any(c):
        return "0"
    names = e6_root_subscripts(rs) if rs.cartan.name == "E6" else {}
    if c == rs.highest_root:
        return hi
    rest = tuple(h - x for h, x in zip(rs.highest_root, c))
    # when both spellings exist, name the lower root
    if rest in names and (c not in names or sum(rest) < sum(c)):
        return f"{hi}-{m}_{{{names[rest]}}}"
    if c in names:
        return f"{m}_{{{names[c]}}}"
    terms = []
    for i, x in enumerate(c):
        if x == 0:
            continue
        sgn = "-" if x < 0 else "+"
        k = abs(x)
        terms.append(f"{sgn}{'' if k == 1 else k}{m}_{i + 1}")
    out = "".join(terms)
    return out[1:] if out.startswith("+") else out
