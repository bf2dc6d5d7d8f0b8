"""Database of maximal connected subgroups, by group type.

For a classical simple group the candidates are generated from the parameter
families (reducible stabilizers, the half-rank Levi, tensor product
subgroups, and the symplectic/orthogonal subgroups of SU_n), plus a small
curated list of irreducible simple subgroups.  The exceptional groups carry
their fixed subgroup tables.  Everything is produced as canonical group
types and deduplicated, so e.g. the SO_4 subgroup of SU_4 and the 2x2 tensor
subgroup collapse into one SU_2 x SU_2 entry.

Completeness is only claimed on a curated coverage set (the types whose
entire downward closure is certified); queries outside it still return
correct entries, flagged incomplete.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import TrivialGroupError
from .groups import (
    GroupType,
    SimpleType,
    canonicalize,
    parse_group,
    simple,
    torus,
)

YES, NO, UNKNOWN = "yes", "no", "unknown"

_KINDS = frozenset({
    "reducible", "levi", "classical-in-su", "tensor", "exceptional",
    "irreducible", "diagonal", "factor", "torus-drop", "terminal",
})


@dataclass(frozen=True, slots=True)
class EmbeddingKind:
    """Why a subgroup is maximal: one tagged case plus its parameters."""

    kind: str
    params: tuple[tuple[str, object], ...] = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown embedding kind {self.kind!r}")

    def get(self, name: str):
        for key, value in self.params:
            if key == name:
                return value
        return None

    def to_json(self) -> dict:
        params = {
            key: (value.to_json() if isinstance(value, EmbeddingKind) else value)
            for key, value in self.params
        }
        return {"kind": self.kind, "params": params}

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}({inner})"

    # constructors for the individual cases
    @classmethod
    def reducible(cls, k: int) -> "EmbeddingKind":
        return cls("reducible", (("k", k),))

    @classmethod
    def levi(cls) -> "EmbeddingKind":
        return cls("levi")

    @classmethod
    def classical_in_su(cls, family: str) -> "EmbeddingKind":
        return cls("classical-in-su", (("family", family),))

    @classmethod
    def tensor(cls, a: int, b: int) -> "EmbeddingKind":
        params: tuple = (("a", a), ("b", b))
        if a == b:
            params += (("symmetric", True),)
        return cls("tensor", params)

    @classmethod
    def exceptional(cls, row: str) -> "EmbeddingKind":
        return cls("exceptional", (("row", row),))

    @classmethod
    def irreducible(cls, source: str) -> "EmbeddingKind":
        return cls("irreducible", (("source", source),))

    @classmethod
    def diagonal(cls, factor: SimpleType) -> "EmbeddingKind":
        return cls("diagonal", (("factor", str(factor)),))

    @classmethod
    def factor(cls, index: int, via: "EmbeddingKind") -> "EmbeddingKind":
        return cls("factor", (("index", index), ("via", via)))

    @classmethod
    def torus_drop(cls) -> "EmbeddingKind":
        return cls("torus-drop")


@dataclass(frozen=True, slots=True)
class MaximalEntry:
    subgroup: GroupType
    kind: EmbeddingKind

    def to_json(self) -> dict:
        return {"subgroup": str(self.subgroup), **self.kind.to_json()}


@dataclass(frozen=True, slots=True)
class CompletenessFlag:
    complete: bool
    reason: str


# the types whose downward closure is fully certified
CURATED_SIMPLE = frozenset({
    SimpleType("SU", 2), SimpleType("SU", 3), SimpleType("SU", 4),
    SimpleType("SU", 5), SimpleType("SU", 6),
    SimpleType("Sp", 4), SimpleType("Sp", 6),
    SimpleType("SO", 7), SimpleType("SO", 8),
    SimpleType("G2"),
})


def is_curated(g: GroupType) -> bool:
    """True when every simple factor lies in the curated coverage set."""
    return all(s in CURATED_SIMPLE for s in g.factors)


# maximal connected subgroups of the exceptional groups, one row per entry
_EXCEPTIONAL_TABLE = {
    "G2": ("SU(3)", "SU(2)^2", "SU(2)"),
    "F4": ("SO(9)", "Sp(6) x SU(2)", "SU(3)^2", "SU(2) x G2", "SU(2)"),
    "E6": ("SO(10) x T", "SU(6) x SU(2)", "SU(3)^3", "F4", "Sp(8)",
           "SU(3) x G2", "G2", "SU(3)"),
    "E7": ("SO(12) x SU(2)", "SU(6) x SU(3)", "SU(8)", "E6 x T",
           "G2 x Sp(6)", "F4 x SU(2)", "SU(2)^2", "SU(3)", "SU(2)"),
    "E8": ("E7 x SU(2)", "E6 x SU(3)", "SO(16)", "SU(9)", "SU(5)^2",
           "G2 x F4", "SU(3) x SU(2)", "SO(5)", "SU(2)"),
}


def _divisor_pairs(n: int) -> Iterable[tuple[int, int]]:
    d = 2
    while d * d <= n:
        if n % d == 0:
            yield d, n // d
        d += 1


def _candidates_su(n: int):
    for k in range(1, n // 2 + 1):
        child = canonicalize("SU", k) * canonicalize("SU", n - k) * torus(1)
        yield child, EmbeddingKind.reducible(k)
    # symplectic/orthogonal forms preserved inside SU_n
    if n >= 4 and n % 2 == 0:
        yield canonicalize("Sp", n), EmbeddingKind.classical_in_su("Sp")
    yield canonicalize("SO", n), EmbeddingKind.classical_in_su("SO")
    for a, b in _divisor_pairs(n):
        yield canonicalize("SU", a) * canonicalize("SU", b), EmbeddingKind.tensor(a, b)
    if n == 6:
        # SU_3 on the 6-dimensional symmetric square of its natural module
        yield simple("SU", 3), EmbeddingKind.irreducible("su3-sym2")


def _candidates_sp(n: int):
    for k in range(2, n // 2 + 1, 2):
        child = canonicalize("Sp", k) * canonicalize("Sp", n - k)
        yield child, EmbeddingKind.reducible(k)
    yield canonicalize("SU", n // 2) * torus(1), EmbeddingKind.levi()
    for a in range(2, n, 2):
        if n % a == 0:
            b = n // a
            if b >= 3 and b != 4:
                yield canonicalize("Sp", a) * canonicalize("SO", b), EmbeddingKind.tensor(a, b)
    # the irreducible SU_2 on the n-dimensional symplectic module
    yield simple("SU", 2), EmbeddingKind.irreducible("principal-su2")


def _candidates_so(n: int):
    for k in range(1, n // 2 + 1):
        child = canonicalize("SO", k) * canonicalize("SO", n - k)
        yield child, EmbeddingKind.reducible(k)
    if n % 2 == 0:
        yield canonicalize("SU", n // 2) * torus(1), EmbeddingKind.levi()
    for a, b in _divisor_pairs(n):
        if a >= 3 and a != 4 and b != 4:
            yield canonicalize("SO", a) * canonicalize("SO", b), EmbeddingKind.tensor(a, b)
        if a % 2 == 0 and b % 2 == 0:
            yield canonicalize("Sp", a) * canonicalize("Sp", b), EmbeddingKind.tensor(a, b)
    if n == 7:
        # G2 on its 7-dimensional natural module
        yield simple("G2"), EmbeddingKind.irreducible("g2-natural")
    if n == 8:
        # SU_3 on its 8-dimensional adjoint module
        yield simple("SU", 3), EmbeddingKind.irreducible("su3-adjoint")
    if n >= 9 and n % 2:
        # the irreducible SU_2 on the n-dimensional orthogonal module
        yield simple("SU", 2), EmbeddingKind.irreducible("principal-su2")


def _simple_flag(s: SimpleType) -> CompletenessFlag:
    if s in CURATED_SIMPLE:
        return CompletenessFlag(True, "curated coverage set")
    return CompletenessFlag(False, f"outside curated coverage set: {s}")


def _finish(parent_dim: int, candidates) -> tuple[MaximalEntry, ...]:
    """Deduplicate by subgroup type (first kind wins) and order by size."""
    seen: dict[GroupType, EmbeddingKind] = {}
    for child, kind in candidates:
        assert child.dim < parent_dim, f"non-descending entry {child}"
        seen.setdefault(child, kind)
    entries = [MaximalEntry(child, kind) for child, kind in seen.items()]
    entries.sort(key=lambda e: (-e.subgroup.dim, e.subgroup.sort_key))
    return tuple(entries)


@lru_cache(maxsize=None)
def maximal_connected_simple(s: SimpleType) -> tuple[tuple[MaximalEntry, ...], CompletenessFlag]:
    """All known maximal connected subgroups of the simple group ``s``.

    The returned list is always a subset of the truth; the flag tells whether
    it is certified exhaustive.
    """
    if s.family == "SU":
        candidates = _candidates_su(s.degree)
    elif s.family == "Sp":
        candidates = _candidates_sp(s.degree)
    elif s.family == "SO":
        candidates = _candidates_so(s.degree)
    else:
        candidates = (
            (parse_group(spec), EmbeddingKind.exceptional(f"{s.family}.{i}"))
            for i, spec in enumerate(_EXCEPTIONAL_TABLE[s.family])
        )
    return _finish(s.dim, candidates), _simple_flag(s)


@lru_cache(maxsize=None)
def maximal_connected(g: GroupType) -> tuple[tuple[MaximalEntry, ...], CompletenessFlag]:
    """All known maximal connected subgroups of an arbitrary canonical group.

    Entries are factor-wise steps, diagonal collapses of repeated factors,
    and a one-dimensional drop of the central torus; bare simple groups
    return their table entries directly.
    """
    if g.is_trivial:
        raise TrivialGroupError("the trivial group has no maximal subgroups")
    if g.is_simple:
        return maximal_connected_simple(g.simple_factor)

    candidates: list[tuple[GroupType, EmbeddingKind]] = []
    if g.torus_rank > 0:
        candidates.append((GroupType(g.torus_rank - 1, g.factors), EmbeddingKind.torus_drop()))
    for index, (s, count) in enumerate(g.counts()):
        entries, _ = maximal_connected_simple(s)
        for entry in entries:
            candidates.append(
                (g.replace_one(s, entry.subgroup), EmbeddingKind.factor(index, entry.kind))
            )
        if count >= 2:
            candidates.append((g.drop_one(s), EmbeddingKind.diagonal(s)))

    flags = [_simple_flag(s) for s, _ in g.counts()]
    bad = [f.reason for f in flags if not f.complete]
    flag = CompletenessFlag(False, "; ".join(bad)) if bad else CompletenessFlag(True, "curated coverage set")
    return _finish(g.dim, candidates), flag


@lru_cache(maxsize=None)
def _children(g: GroupType) -> frozenset[GroupType]:
    entries, _ = maximal_connected(g)
    return frozenset(e.subgroup for e in entries)


def is_maximal_step(parent: GroupType, child: GroupType) -> str:
    """YES if ``child`` is a known maximal connected subgroup type of
    ``parent``, NO if absent from a certified-complete list, UNKNOWN if
    absent from an incomplete one."""
    if parent.is_trivial:
        return NO  # the trivial group has no proper subgroups
    if child in _children(parent):
        return YES
    _, flag = maximal_connected(parent)
    return NO if flag.complete else UNKNOWN


def min_irrep_dim(s: SimpleType) -> int:
    """Smallest dimension of a faithful-target nontrivial irreducible complex
    representation used by the length comparison tables: for classical types
    the smallest one exceeding the natural degree and avoiding classical
    coincidences, for exceptional types the minimal nontrivial one."""
    if s.family == "SU":
        if s.degree <= 4:
            return {2: 4, 3: 6, 4: 10}[s.degree]
        return s.degree * (s.degree - 1) // 2
    if s.family == "Sp":
        if s.degree == 4:
            return 10
        return s.degree * (s.degree - 1) // 2 - 1
    if s.family == "SO":
        if 7 <= s.degree <= 14 and s.degree != 8:
            return 2 ** ((s.degree - 1) // 2)
        return s.degree * (s.degree - 1) // 2
    return {"G2": 7, "F4": 26, "E6": 27, "E7": 56, "E8": 248}[s.family]


def query_json(g: GroupType) -> dict:
    """JSON payload for a maximal-subgroup query."""
    entries, flag = maximal_connected(g)
    return {
        "parent": str(g),
        "entries": [e.to_json() for e in entries],
        "complete": flag.complete,
        "reason": flag.reason,
    }
