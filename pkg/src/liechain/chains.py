"""Explicit witness chains: longest chains for every canonical group,
shortest chains where the depth is known exactly, and verification of
arbitrary user-supplied chains against the subgroup database."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import MalformedTypeError
from .groups import TRIVIAL, GroupType, SimpleType, canonicalize, parse_group, simple, torus
from .oracle import oracle_depth
from .subgroups import (
    NO,
    UNKNOWN,
    EmbeddingKind,
    is_curated,
    is_maximal_step,
    maximal_connected,
)


@dataclass(frozen=True, slots=True)
class Chain:
    """An unrefinable chain: nodes from the top group down to the trivial
    group, one embedding kind per step."""

    nodes: tuple[GroupType, ...]
    steps: tuple[EmbeddingKind, ...]

    def __post_init__(self):
        if not self.nodes or not self.nodes[-1].is_trivial:
            raise MalformedTypeError("chain must end at the trivial group")
        if len(self.steps) != len(self.nodes) - 1:
            raise MalformedTypeError("need exactly one step per adjacent pair")
        for parent, child in zip(self.nodes, self.nodes[1:]):
            if child.dim >= parent.dim:
                raise MalformedTypeError(
                    f"chain not strictly descending at {parent} > {child}")

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def top(self) -> GroupType:
        return self.nodes[0]

    def to_json(self) -> dict:
        return {
            "nodes": [str(g) for g in self.nodes],
            "steps": [k.to_json() for k in self.steps],
            "length": len(self),
        }

    def __str__(self) -> str:
        return " > ".join(str(g) for g in self.nodes)


def _annotate(nodes: Sequence[GroupType]) -> Chain:
    """Attach the database embedding kind to each adjacent pair."""
    steps = []
    for parent, child in zip(nodes, nodes[1:]):
        entries, _ = maximal_connected(parent)
        kind = next((e.kind for e in entries if e.subgroup == child), None)
        assert kind is not None, f"constructed step {parent} > {child} not in database"
        steps.append(kind)
    return Chain(tuple(nodes), tuple(steps))


# -- longest chains ------------------------------------------------------------

def _max_step_simple(s: SimpleType) -> GroupType:
    """The maximal subgroup chosen for the longest-chain descent of one
    simple factor; each choice satisfies l(child) = l(s) - 1."""
    if s.family == "SU":
        if s.degree == 2:
            return torus(1)
        return canonicalize("SU", s.degree - 1) * torus(1)
    if s.family == "Sp":
        return canonicalize("Sp", 2) * canonicalize("Sp", s.degree - 2)
    if s.family == "SO":
        return canonicalize("SO", 4) * canonicalize("SO", s.degree - 4)
    entry = {
        "G2": simple("SU", 3),
        "F4": simple("SO", 9),
        "E6": simple("SO", 10) * torus(1),
        "E7": simple("SO", 12) * simple("SU", 2),
        "E8": simple("SO", 16),
    }
    return entry[s.family]


def max_chain(g: GroupType) -> Chain:
    """A longest unrefinable chain from ``g`` down to the trivial group;
    its length equals ``length(g)``.  Factors descend one at a time in
    canonical order; any torus present (central, or introduced by a Levi
    step) drops before the next factor step."""
    nodes = [g]
    current = g
    while not current.is_trivial:
        if current.torus_rank > 0:
            current = GroupType(current.torus_rank - 1, current.factors)
        else:
            s = current.factors[0]
            current = current.replace_one(s, _max_step_simple(s))
        nodes.append(current)
    return _annotate(nodes)


# -- shortest chains -----------------------------------------------------------

def _min_descent_simple(s: SimpleType) -> tuple[GroupType, ...]:
    """Successor nodes of the shortest known descent of one simple group;
    realizes depth_simple(s) steps, ending at the trivial group."""
    tail = (simple("SU", 2), torus(1), TRIVIAL)
    if s.family == "SU":
        n = s.degree
        if n == 2:
            return (torus(1), TRIVIAL)
        if n == 3:
            return tail
        if n == 7:
            return (simple("SO", 7), simple("G2")) + tail
        if n % 2 == 0:
            return (simple("Sp", n),) + tail
        return (canonicalize("SO", n),) + tail
    if s.family == "Sp":
        return tail
    if s.family == "SO":
        n = s.degree
        if n == 7:
            return (simple("G2"),) + tail
        if n == 8:
            return (simple("SU", 3),) + tail
        if n % 2:
            return tail
        return (simple("SO", n - 1),) + tail
    if s.family == "E6":
        return (simple("F4"),) + tail
    return tail  # G2, F4, E7, E8 all contain a maximal SU_2


def min_chain(g: GroupType) -> Optional[Chain]:
    """A shortest unrefinable chain, of length exactly ``depth(g)``, when the
    depth is known exactly: tori, homogeneous powers of one simple type (plus
    torus), and groups inside the curated coverage set (where the brute force
    pins the depth).  Returns None otherwise."""
    z = g.torus_rank
    counts = g.counts()
    if not counts:
        nodes = [torus(k) for k in range(z, -1, -1)]
        return _annotate(nodes)
    if len(counts) == 1:
        s, k = counts[0]
        nodes = [GroupType(z, (s,) * j) for j in range(k, 0, -1)]
        nodes += [step.with_torus(z) for step in _min_descent_simple(s)]
        # the descent's own terminal torus keeps dropping to the trivial group
        nodes += [torus(j) for j in range(z - 1, -1, -1)]
        return _annotate(nodes)
    if not is_curated(g):
        return None
    nodes = [g]
    current = g
    while not current.is_trivial:
        want = oracle_depth(current) - 1
        entries, _ = maximal_connected(current)
        current = next(e.subgroup for e in entries
                       if oracle_depth(e.subgroup) == want)
        nodes.append(current)
    return _annotate(nodes)


# -- verification --------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class VerifyReport:
    """Step-by-step maximality verdicts for a chain."""

    verdicts: tuple[str, ...]
    overall: str  # "valid" | "invalid" | "valid-modulo-unknown"
    failed_step: Optional[int] = None
    unknown_steps: tuple[int, ...] = ()
    reason: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.overall != "invalid"

    def to_json(self) -> dict:
        out: dict = {"verdicts": list(self.verdicts), "overall": self.overall}
        if self.failed_step is not None:
            out["failed_step"] = self.failed_step
        if self.unknown_steps:
            out["unknown_steps"] = list(self.unknown_steps)
        if self.reason:
            out["reason"] = self.reason
        return out


def _invalid(verdicts: Iterable[str], step: Optional[int], reason: str) -> VerifyReport:
    return VerifyReport(tuple(verdicts), "invalid", failed_step=step, reason=reason)


def verify_chain(chain: Union[Chain, Sequence[GroupType]]) -> VerifyReport:
    """Check that every adjacent pair is a known maximal step.  Accepts a
    Chain or a bare node sequence (e.g. parsed from a chain file)."""
    nodes = tuple(chain.nodes if isinstance(chain, Chain) else chain)
    if len(nodes) < 1:
        return _invalid((), None, "empty chain")
    if not nodes[-1].is_trivial:
        return _invalid((), None, "chain must end at the trivial group")
    for i, (parent, child) in enumerate(zip(nodes, nodes[1:])):
        if child.dim >= parent.dim:
            return _invalid((), i, f"not strictly descending at step {i}")
    verdicts = []
    for parent, child in zip(nodes, nodes[1:]):
        verdicts.append(is_maximal_step(parent, child))
    failed = next((i for i, v in enumerate(verdicts) if v == NO), None)
    if failed is not None:
        return _invalid(verdicts, failed, f"step {failed} is not a maximal inclusion")
    unknown = tuple(i for i, v in enumerate(verdicts) if v == UNKNOWN)
    if unknown:
        return VerifyReport(tuple(verdicts), "valid-modulo-unknown", unknown_steps=unknown)
    return VerifyReport(tuple(verdicts), "valid")


def parse_chain_text(text: str) -> list[GroupType]:
    """One group spec per line, descending, trivial group ("1") last."""
    nodes = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            nodes.append(parse_group(line))
    return nodes
