"""Signature tables as data, and the comparison against computed multiplets.

Two file formats live in ``data/``:

``<TYPE>.tab``
    hand transcription in compact subscripts, one line per name::

        c' 1 35 2 4 56 ; ~-2,45

    (n1 n3 n4 n5 n6 ; 2c form of the + member).  ``~`` is the highest-root
    form, ``0`` an empty slot.

``<TYPE>.corpus``
    the same content as explicit coefficient vectors, one line per member::

        MAIN chi_c' + n1=<1,0,0,0,0,0> n3=<...> ... twoc=<...>

    preceded by a header ``TYPE COUNT=<k> SOURCE=<tag>``.

Coefficient vectors are stored restricted to the type's label subspace:
columns of the zeroed labels are always 0.
"""

from __future__ import annotations

import os
import re
from collections import Counter
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .multiplet import REDUCED_TYPES, MultipletGraph, build_multiplet, type_labels
from .notation import NotationError, expand

SLOTS = ("n1", "n3", "n4", "n5", "n6")
RANK = 6
ENV_DIR = "E6MULT_CORPUS_DIR"
DEFAULT_SAMPLES = ((1, 1, 1, 1, 1, 1), (1, 2, 3, 4, 5, 6), (2, 3, 5, 7, 11, 13))

Vec = tuple[int, ...]


class CorpusError(ValueError):
    def __init__(self, msg: str, line: int | None = None, path: str | None = None):
        where = ""
        if path:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {msg}" if where else msg)
        self.line = line


@dataclass(frozen=True)
class CorpusRow:
    kind: str
    name: str
    sign: str
    n: tuple[Vec, ...]
    two_c: Vec

    def evaluate(self, labels: Sequence[int]) -> tuple[tuple[int, ...], int]:
        ev = lambda v: sum(a * b for a, b in zip(v, labels))  # noqa: E731
        return tuple(ev(v) for v in self.n), ev(self.two_c)

    def to_line(self) -> str:
        slots = " ".join(f"{s}={_vec(v)}" for s, v in zip(SLOTS, self.n))
        return f"{self.kind} {self.name} {self.sign} {slots} twoc={_vec(self.two_c)}"


@dataclass(frozen=True)
class CorpusTable:
    kind: str
    count: int
    source: str
    rows: tuple[CorpusRow, ...]
    comments: tuple[str, ...] = field(default=(), compare=False)

    @property
    def names(self) -> list[str]:
        seen: dict[str, None] = {}
        for r in self.rows:
            seen.setdefault(r.name, None)
        return list(seen)

    def zero_c_names(self) -> list[str]:
        zeros = _zero_cols(self.kind)
        return [r.name for r in self.rows if r.sign == "+" and not any(_restrict(r.two_c, zeros))]

    def derived_count(self) -> int:
        return 2 * len(self.names) - len(self.zero_c_names())

    def members(self) -> list[CorpusRow]:
        """One row per distinct member: both signs, or one when 2c vanishes."""
        zero = set(self.zero_c_names())
        return [r for r in self.rows if not (r.name in zero and r.sign == "-")]

    def serialize(self) -> str:
        out = list(self.comments)
        out.append(f"{self.kind} COUNT={self.count} SOURCE={self.source}")
        out.extend(r.to_line() for r in self.rows)
        return "\n".join(out) + "\n"


def _vec(v: Vec) -> str:
    return "<" + ",".join(str(x) for x in v) + ">"


def _zero_cols(kind: str) -> tuple[int, ...]:
    try:
        return tuple(k - 1 for k in REDUCED_TYPES[kind])
    except KeyError:
        raise CorpusError(f"unknown multiplet type {kind!r}") from None


def _restrict(v: Sequence[int], zeros: Iterable[int]) -> Vec:
    out = list(v)
    for j in zeros:
        out[j] = 0
    return tuple(out)


# ---------------------------------------------------------------- corpus files

_HEADER = re.compile(r"^(\S+) COUNT=(\d+) SOURCE=(\S+)$")
_ROW = re.compile(
    r"^(\S+) (\S+) ([+-]) "
    + " ".join(rf"{s}=<(-?\d+(?:,-?\d+){{5}})>" for s in SLOTS)
    + r" twoc=<(-?\d+(?:,-?\d+){5})>$"
)


def parse_corpus(text: str, path: str | None = None) -> CorpusTable:
    comments: list[str] = []
    header = None
    rows: list[CorpusRow] = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        if line.startswith("#"):
            if header is None:
                comments.append(line)
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise CorpusError("expected header 'TYPE COUNT=<k> SOURCE=<tag>'", no, path)
            kind = m.group(1)
            if kind not in REDUCED_TYPES:
                raise CorpusError(f"unknown multiplet type {kind!r}", no, path)
            header = (kind, int(m.group(2)), m.group(3))
            continue
        m = _ROW.match(line)
        if not m:
            raise CorpusError(f"malformed row: {line!r}", no, path)
        if m.group(1) != header[0]:
            raise CorpusError(f"row type {m.group(1)} under header {header[0]}", no, path)
        vecs = [tuple(int(x) for x in g.split(",")) for g in m.groups()[3:]]
        rows.append(CorpusRow(m.group(1), m.group(2), m.group(3), tuple(vecs[:5]), vecs[5]))
        _check_row(rows, no, path)
    if header is None:
        raise CorpusError("empty corpus file", None, path)
    table = CorpusTable(header[0], header[1], header[2], tuple(rows), tuple(comments))
    _check_table(table, path)
    return table


def _check_row(rows: list[CorpusRow], no: int, path: str | None) -> None:
    r = rows[-1]
    same = [x for x in rows[:-1] if x.name == r.name]
    if any(x.sign == r.sign for x in same):
        raise CorpusError(f"duplicate member {r.name}{r.sign}", no, path)
    if same:
        other = same[0]
        if other.n != r.n or other.two_c != tuple(-x for x in r.two_c):
            raise CorpusError(f"members of {r.name} disagree (slots must match, 2c must be negated)", no, path)


def _check_table(t: CorpusTable, path: str | None) -> None:
    for name in t.names:
        signs = sorted(r.sign for r in t.rows if r.name == name)
        if signs != ["+", "-"]:
            raise CorpusError(f"{name} needs both a + and a - member", None, path)
    if t.derived_count() != t.count:
        raise CorpusError(
            f"header COUNT={t.count} but {len(t.names)} names with "
            f"{len(t.zero_c_names())} vanishing 2c give {t.derived_count()}",
            None,
            path,
        )


def load_corpus(path: str | os.PathLike) -> CorpusTable:
    p = Path(path)
    return parse_corpus(p.read_text(encoding="utf-8"), str(p))


# ------------------------------------------------------------- transcriptions

_TOP = (1, 2, 2, 3, 2, 1)


def _entry(s: str) -> Vec:
    if s == "0":
        return (0,) * RANK
    if s == "~":
        return _TOP
    if s.startswith("~-"):
        return tuple(a - b for a, b in zip(_TOP, expand(s[2:])))
    return expand(s)


@dataclass(frozen=True)
class TabRow:
    name: str
    slots: tuple[str, ...]
    cform: str

    def line(self) -> str:
        return " ".join((self.name,) + self.slots) + " ; " + self.cform


@dataclass(frozen=True)
class Transcription:
    kind: str
    count: int
    source: str
    rows: tuple[TabRow, ...]


def parse_tab_row(text: str, no: int | None = None, path: str | None = None) -> TabRow:
    left, sep, right = text.partition(";")
    parts = left.split()
    if not sep or len(parts) != 6 or not right.strip():
        raise CorpusError(f"expected 'name n1 n3 n4 n5 n6 ; form', got {text.strip()!r}", no, path)
    row = TabRow(parts[0], tuple(parts[1:]), right.strip())
    try:
        for s in row.slots + (row.cform,):
            _entry(s)
    except NotationError as exc:
        raise CorpusError(str(exc), no, path) from None
    return row


def parse_tab(text: str, path: str | None = None) -> Transcription:
    header = None
    rows = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise CorpusError("expected header 'TYPE COUNT=<k> SOURCE=<tag>'", no, path)
            header = (m.group(1), int(m.group(2)), m.group(3))
            continue
        rows.append(parse_tab_row(line, no, path))
    if header is None:
        raise CorpusError("empty transcription", None, path)
    return Transcription(header[0], header[1], header[2], tuple(rows))


def compile_transcription(t: Transcription, comments: Sequence[str] = ()) -> CorpusTable:
    zeros = _zero_cols(t.kind)
    rows = []
    for r in t.rows:
        n = tuple(_restrict(_entry(s), zeros) for s in r.slots)
        c = _restrict(_entry(r.cform), zeros)
        rows.append(CorpusRow(t.kind, f"chi_{r.name}", "+", n, c))
        rows.append(CorpusRow(t.kind, f"chi_{r.name}", "-", n, tuple(-x for x in c)))
    table = CorpusTable(t.kind, t.count, t.source, tuple(rows), tuple(comments))
    return table


# -------------------------------------------------------------------- errata

@dataclass(frozen=True)
class Erratum:
    op: str
    kind: str
    arg: str

    def apply(self, t: Transcription) -> Transcription:
        rows = list(t.rows)
        if self.op == "ADD":
            row = parse_tab_row(self.arg)
            if any(r.name == row.name for r in rows):
                raise CorpusError(f"{self.kind} already has a row {row.name}")
            rows.append(row)
        elif self.op == "DROP":
            keep = [r for r in rows if r.name != self.arg]
            if len(keep) == len(rows):
                raise CorpusError(f"{self.kind} has no row {self.arg}")
            rows = keep
        elif self.op == "FIX":
            name, _, fix = self.arg.partition(" ")
            slot, _, entry = fix.partition("=")
            if slot not in SLOTS:
                raise CorpusError(f"unknown slot {slot!r}")
            k = next((i for i, r in enumerate(rows) if r.name == name), None)
            if k is None:
                raise CorpusError(f"{self.kind} has no row {name}")
            slots = list(rows[k].slots)
            slots[SLOTS.index(slot)] = entry
            rows[k] = parse_tab_row(" ".join([name] + slots) + " ; " + rows[k].cform)
        else:
            raise CorpusError(f"unknown erratum op {self.op!r}")
        return replace(t, rows=tuple(rows))


def parse_errata(text: str) -> list[Erratum]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 2)
        if len(parts) != 3 or parts[0] not in ("ADD", "FIX", "DROP"):
            raise CorpusError(f"malformed erratum {line!r}", no)
        out.append(Erratum(*parts))
    return out


def apply_errata(t: Transcription, errata: Iterable[Erratum]) -> Transcription:
    for e in errata:
        if e.kind == t.kind:
            t = e.apply(t)
    names = len(t.rows)
    zeros = _zero_cols(t.kind)
    vanishing = sum(1 for r in t.rows if not any(_restrict(_entry(r.cform), zeros)))
    return replace(t, count=2 * names - vanishing, source=t.source + "+errata")


# ------------------------------------------------------------------- lookup

def data_dir() -> Path:
    env = os.environ.get(ENV_DIR)
    if env:
        return Path(env)
    return Path(str(resources.files("e6mult") / "data"))


def table(kind: str, errata: bool = False, directory: str | os.PathLike | None = None) -> CorpusTable:
    """Corpus for ``kind``; with ``errata`` rebuilt from the transcription plus corrections."""
    d = Path(directory) if directory else data_dir()
    kind = kind.upper()
    if not errata:
        return load_corpus(d / f"{kind}.corpus")
    tab = parse_tab((d / f"{kind}.tab").read_text(encoding="utf-8"), str(d / f"{kind}.tab"))
    fixed = apply_errata(tab, parse_errata((d / "errata.txt").read_text(encoding="utf-8")))
    return compile_transcription(fixed)


# -------------------------------------------------------------- verification

@dataclass
class SampleResult:
    labels: tuple[int, ...]
    expected: int
    computed: int
    matched: int
    missing: list[tuple[str, tuple[int, ...], int]]
    extra: list[tuple[tuple[int, ...], int]]

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra


@dataclass
class VerifyReport:
    kind: str
    header_count: int
    corpus_count: int
    computed_count: int
    dominant_orbit_count: int | None
    samples: list[SampleResult]
    symbolic_missing: list[CorpusRow]
    symbolic_extra: list[int]
    names: dict[int, str]
    graph: MultipletGraph = field(repr=False)

    @property
    def passed(self) -> bool:
        return (
            all(s.ok for s in self.samples)
            and not self.symbolic_missing
            and not self.symbolic_extra
            and self.computed_count == self.header_count
        )

    def summary(self) -> str:
        first = self.samples[0]
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.kind}: {status} {first.matched}/{self.header_count} matched, "
            f"computed {self.computed_count}"
        )

    def lines(self) -> list[str]:
        from .notation import form_text

        rs = self.graph.roots
        out = [self.summary()]
        out.append(
            f"  counts: table header {self.header_count}, table rows {self.corpus_count}, "
            f"connected multiplet {self.computed_count}, M-dominant orbit points "
            f"{'-' if self.dominant_orbit_count is None else self.dominant_orbit_count}"
        )
        for s in self.samples:
            out.append(
                f"  sample {','.join(map(str, s.labels))}: {s.matched} matched, "
                f"{len(s.missing)} missing, {len(s.extra)} extra"
            )
            for name, n, tc in s.missing:
                out.append(f"    missing {name} {{{','.join(map(str, n))}; 2c={tc}}}")
            for n, tc in s.extra:
                out.append(f"    extra   {{{','.join(map(str, n))}; 2c={tc}}}")
        for r in self.symbolic_missing:
            slots = ", ".join(form_text(rs, v) for v in r.n)
            out.append(f"  symbolic missing {r.name}{r.sign}: {{{slots}; 2c={form_text(rs, r.two_c)}}}")
        for k in self.symbolic_extra:
            slots, tc = self.graph.signature_form(k)
            body = ", ".join(form_text(rs, v) for v in slots)
            out.append(f"  symbolic extra vertex {k}: {{{body}; 2c={form_text(rs, tc)}}}")
        return out


def check_samples(kind: str, samples: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Zero the type's positions and insist the remaining labels are positive."""
    zeros = REDUCED_TYPES[kind]
    out = []
    for s in samples:
        lab = type_labels(kind, s)
        for i, x in enumerate(lab):
            if (i + 1) not in zeros and x <= 0:
                raise ValueError(f"sample {tuple(s)} has a nonpositive label at position {i + 1}")
        out.append(lab)
    return out


def vertex_names(g: MultipletGraph, t: CorpusTable) -> dict[int, str]:
    """Match vertices to table members by exact label forms."""
    zeros = g.zero_positions
    by_form: dict[tuple, str] = {}
    for r in t.members():
        key = (r.n, r.two_c)
        by_form.setdefault(key, r.name + ("^" + r.sign if any(_restrict(r.two_c, zeros)) else ""))
    out = {}
    for k in range(len(g)):
        slots, tc = g.signature_form(k)
        key = (tuple(_restrict(v, zeros) for v in slots), _restrict(tc, zeros))
        if key in by_form:
            out[k] = by_form[key]
    return out


def verify_multiplet(
    g: MultipletGraph,
    t: CorpusTable,
    samples: Sequence[Sequence[int]] = DEFAULT_SAMPLES,
) -> VerifyReport:
    kind = t.kind
    zeros = g.zero_positions
    if tuple(sorted(k - 1 for k in REDUCED_TYPES[kind])) != zeros:
        raise ValueError(f"graph zero pattern does not match type {kind}")
    results = []
    for lab in check_samples(kind, samples):
        h = g if lab == g.input_labels else build_multiplet(lab, split=g.split, via_orbit=False)
        want = Counter()
        owner = {}
        for r in t.members():
            key = r.evaluate(lab)
            want[key] += 1
            owner.setdefault(key, r.name + r.sign)
        have = Counter((s.n, s.two_c) for s in h.signatures)
        missing = [(owner[k], k[0], k[1]) for k in sorted((want - have).elements())]
        extra = sorted((have - want).elements())
        matched = sum((want & have).values())
        results.append(SampleResult(lab, sum(want.values()), len(h), matched, missing, extra))

    # exact comparison of the label forms
    want_forms = Counter()
    rows_by_key: dict[tuple, list[CorpusRow]] = {}
    for r in t.members():
        key = (tuple(_restrict(v, zeros) for v in r.n), _restrict(r.two_c, zeros))
        want_forms[key] += 1
        rows_by_key.setdefault(key, []).append(r)
    have_forms: dict[tuple, list[int]] = {}
    for k in range(len(g)):
        slots, tc = g.signature_form(k)
        have_forms.setdefault((slots, tc), []).append(k)
    sym_missing, sym_extra = [], []
    for key, rows in rows_by_key.items():
        got = len(have_forms.get(key, []))
        if got < len(rows):
            sym_missing.extend(rows[got:])
    for key, ks in have_forms.items():
        want_n = want_forms.get(key, 0)
        if len(ks) > want_n:
            sym_extra.extend(ks[want_n:])

    return VerifyReport(
        kind=kind,
        header_count=t.count,
        corpus_count=t.derived_count(),
        computed_count=len(g),
        dominant_orbit_count=g.dominant_orbit_count,
        samples=results,
        symbolic_missing=sym_missing,
        symbolic_extra=sorted(sym_extra),
        names=vertex_names(g, t),
        graph=g,
    )


def verify_type(kind: str, errata: bool = False, samples=DEFAULT_SAMPLES) -> VerifyReport:
    kind = kind.upper()
    t = table(kind, errata=errata)
    first = check_samples(kind, samples[:1])[0]
    g = build_multiplet(first)
    return verify_multiplet(g, t, samples)
