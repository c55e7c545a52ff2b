"""DOT, JSON, TeX and plain-text output for multiplet graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .multiplet import Edge, MultipletGraph, classify_vertex
from .notation import e6_root_subscripts, form_text, root_name
from .parabolic import split_roots
from .rootsys import e6_roots
from .weights import ShiftedWeight, SignatureChi, fraction_text, to_signature

FORMATS = ("dot", "json", "tex", "text")
LABEL_STYLES = ("compact", "vectors")


@dataclass(frozen=True)
class RenderConfig:
    format: str = "dot"
    reduced_only: bool = True
    label_style: str = "compact"

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; choose one of {', '.join(FORMATS)}")
        if self.label_style not in LABEL_STYLES:
            raise ValueError(f"unknown label style {self.label_style!r}")


def render(g: MultipletGraph, cfg: RenderConfig = RenderConfig(), names: Mapping[int, str] | None = None) -> bytes:
    names = dict(names or {})
    if cfg.format == "dot":
        text = to_dot(g, cfg, names)
    elif cfg.format == "json":
        text = to_json(g, names)
    elif cfg.format == "tex":
        text = to_tex(g, names)
    else:
        text = to_text(g, cfg, names)
    return text.encode("utf-8")


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _subscript(g: MultipletGraph, root) -> str:
    if root == g.roots.highest_root:
        return "16,25,4"
    return e6_root_subscripts(g.roots).get(tuple(root), _vec(root))


def edge_label(g: MultipletGraph, e: Edge, style: str = "compact") -> str:
    """``i_{j..k}``: m along the edge equals m_i, root written in compact form."""
    if style == "vectors":
        return f"{_vec(e.root)} m={e.m}"
    i = g.edge_label_index(e)
    head = str(i) if i is not None else f"[{form_text(g.roots, g.edge_form(e))}]"
    return f"{head}_{{{_subscript(g, e.root)}}}"


def _name(names: Mapping[int, str], k: int) -> str:
    return names.get(k, f"v{k}")


def _sig(s: SignatureChi) -> str:
    return str(s)


def _edges(g: MultipletGraph, reduced_only: bool) -> tuple[Edge, ...]:
    es = g.reduced_edges if reduced_only else g.edges
    return tuple(sorted(es, key=lambda e: (e.source, e.target)))


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g: MultipletGraph, cfg: RenderConfig = RenderConfig(), names: Mapping[int, str] | None = None) -> str:
    names = names or {}
    out = ["digraph multiplet {", "  rankdir=TB;", '  node [shape=box, fontname="Helvetica"];']
    for k, s in enumerate(g.signatures):
        flags = " ".join(sorted(classify_vertex(g, k)))
        parts = [_name(names, k), _sig(s), f"d={fraction_text(s.d)}"]
        if cfg.label_style == "vectors":
            parts.append(_vec(g.vertices[k].labels))
        if flags:
            parts.append(flags)
        label = "\\n".join(_dot_escape(p) for p in parts)
        out.append(f'  v{k} [label="{label}"];')
    for e in _edges(g, cfg.reduced_only):
        out.append(f'  v{e.source} -> v{e.target} [label="{_dot_escape(edge_label(g, e, cfg.label_style))}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def to_json(g: MultipletGraph, names: Mapping[int, str] | None = None) -> str:
    names = names or {}
    reduced = {(e.source, e.target) for e in g.reduced_edges}
    partner = {}
    for a, b in g.ks_pairs:
        partner[a], partner[b] = b, a
    verts = []
    for k, (w, s) in enumerate(zip(g.vertices, g.signatures)):
        verts.append(
            {
                "id": k,
                "name": names.get(k),
                "labels": list(w.labels),
                "form": [list(r) for r in g.forms[k]],
                "signature": {"n": list(s.n), "two_c": s.two_c, "c": fraction_text(s.c), "d": fraction_text(s.d)},
                "flags": sorted(classify_vertex(g, k)),
                "ks_partner": partner[k],
            }
        )
    edges = [
        {
            "source": e.source,
            "target": e.target,
            "root": list(e.root),
            "root_name": root_name(g.roots, e.root),
            "m": e.m,
            "label": edge_label(g, e),
            "reduced": (e.source, e.target) in reduced,
        }
        for e in sorted(g.edges, key=lambda e: (e.source, e.target))
    ]
    doc = {
        "algebra": g.roots.cartan.name,
        "marker": sorted(i + 1 for i in g.split.marker),
        "input_labels": list(g.input_labels),
        "origin": g.origin,
        "vertices": verts,
        "edges": edges,
        "ks_pairs": [list(p) for p in sorted(g.ks_pairs)],
        "counts": {
            "vertices": len(g),
            "edges": len(g.edges),
            "reduced_edges": len(g.reduced_edges),
            "ks_pairs": len(g.ks_pairs),
            "self_paired": len(g.self_paired()),
            "dominant_orbit_points": g.dominant_orbit_count,
        },
        "excluded": [list(w.labels) for w in g.excluded],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def from_json(text: str) -> tuple[MultipletGraph, dict[int, str]]:
    """Inverse of :func:`to_json` for the E6 graphs this package builds."""
    doc = json.loads(text)
    if doc.get("algebra") != "E6":
        raise ValueError("only E6 graphs can be read back")
    split = split_roots(e6_roots(), [i - 1 for i in doc["marker"]])
    verts = [ShiftedWeight(tuple(v["labels"])) for v in doc["vertices"]]
    edges = [Edge(e["source"], e["target"], tuple(e["root"]), e["m"]) for e in doc["edges"]]
    g = MultipletGraph(
        input_labels=tuple(doc["input_labels"]),
        vertices=tuple(verts),
        signatures=tuple(to_signature(w, split) for w in verts),
        forms=tuple(tuple(tuple(r) for r in v["form"]) for v in doc["vertices"]),
        edges=tuple(edges),
        reduced_edges=tuple(e for e, raw in zip(edges, doc["edges"]) if raw["reduced"]),
        ks_pairs=tuple(tuple(p) for p in doc["ks_pairs"]),
        origin=doc["origin"],
        split=split,
        dominant_orbit_count=doc["counts"]["dominant_orbit_points"],
        excluded=tuple(ShiftedWeight(tuple(w)) for w in doc["excluded"]),
    )
    names = {v["id"]: v["name"] for v in doc["vertices"] if v["name"]}
    return g, names


def _tex_name(name: str) -> str:
    base = name[4:] if name.startswith("chi_") else name
    if base.endswith(("^+", "^-")):
        base = base[:-2]
    if base.endswith("~"):
        base = r"{\tilde " + base[:-1] + "}"
    elif base.endswith("^"):
        base = r"{\hat " + base[:-1] + "}"
    return r"\chi_{" + base + "}"


def _tex_c(g: MultipletGraph, form) -> str:
    if not any(form):
        return "0"
    body = form_text(g.roots, form, tex=True)
    simple = "+" not in body and "-" not in body
    return r"\pm\tfrac12 " + body if simple else r"\pm\tfrac12(" + body + ")"


def to_tex(g: MultipletGraph, names: Mapping[int, str] | None = None) -> str:
    """One row per Knapp-Stein pair, in the layout of a signature table."""
    names = names or {}
    out = [r"\begin{align*}"]
    pairs = []
    for a, b in g.ks_pairs:
        minus, plus = (a, b) if g.signatures[a].two_c <= g.signatures[b].two_c else (b, a)
        pairs.append((minus, plus))
    rows = []
    for minus, plus in sorted(pairs):
        slots, _ = g.signature_form(minus)
        _, two_c_plus = g.signature_form(plus)
        name = _tex_name(names[minus]) if minus in names else r"\chi_{v" + str(minus) + "}"
        sign = "" if minus == plus else r"^\pm"
        entries = ", ".join(form_text(g.roots, v, tex=True) for v in slots)
        rows.append(rf"{name}{sign} &= \{{\, {entries} ;\ {_tex_c(g, two_c_plus)} \,\}}")
    out.append(" \\\\\n".join(rows))
    out.append(r"\end{align*}")
    return "\n".join(out) + "\n"


def to_text(g: MultipletGraph, cfg: RenderConfig = RenderConfig(), names: Mapping[int, str] | None = None) -> str:
    names = names or {}
    out = [
        f"multiplet of {_vec(g.input_labels)}: {len(g)} vertices, {len(g.ks_pairs)} Knapp-Stein pairs, "
        f"{len(g.self_paired())} self-paired, {len(g.edges)} edges ({len(g.reduced_edges)} non-composite)"
    ]
    if g.dominant_orbit_count is not None:
        out.append(f"M-dominant orbit points: {g.dominant_orbit_count}, outside the component: {len(g.excluded)}")
    for k, (w, s) in enumerate(zip(g.vertices, g.signatures)):
        flags = " ".join(sorted(classify_vertex(g, k)))
        out.append(f"{k:3d} {_name(names, k):10s} {_sig(s):28s} d={fraction_text(s.d):6s} {_vec(w.labels)} {flags}".rstrip())
    out.append("edges:" if not cfg.reduced_only else "non-composite edges:")
    for e in _edges(g, cfg.reduced_only):
        out.append(f"  {e.source} -> {e.target}  {edge_label(g, e, cfg.label_style)}  m={e.m}")
    return "\n".join(out) + "\n"
