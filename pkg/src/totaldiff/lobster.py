"""Greedy tertiary-label analysis for maximal lobsters.

m_value(delta1, delta2, r, s) is the largest label the greedy rule needs when
labeling the delta2-1 tertiary neighbors of an s-labeled secondary vertex
whose remaining neighbor is an r-labeled primary vertex. The module also
renders the full (r, s) table, locates stabilization points, and produces a
complete verifier-clean labeling of a maximal lobster.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import ConstructionError, ConstructionResult
from .families import MaximalLobsterSpec, build, validate
from .solver import BoundsResult
from .verifier import find_violations


class LobsterError(ValueError):
    """Parameters outside the valid lobster analysis domain."""


@dataclass(frozen=True)
class LobsterContext:
    delta1: int
    delta2: int

    def __post_init__(self):
        if self.delta1 < 3:
            raise LobsterError(f"delta1 must be >= 3, got {self.delta1}")
        if self.delta2 < 2:
            raise LobsterError(f"delta2 must be >= 2, got {self.delta2}")

    @property
    def primary_labels(self) -> tuple[int, int, int]:
        return (1, self.delta1 + 2, self.delta1 + 3)

    @property
    def secondary_labels(self) -> range:
        return range(2, self.delta1 + 2)


def pair_valid(ctx: LobsterContext, r: int, s: int) -> tuple[bool, str | None]:
    """Whether an r-labeled primary may carry an s-labeled secondary.

    Returns (False, "double") when one label doubles the other, and
    (False, "triple") for the one spine-triple case r = delta1+2,
    s = delta1+1.
    """
    if r not in ctx.primary_labels:
        raise LobsterError(f"r must be one of {ctx.primary_labels}, got {r}")
    if s not in ctx.secondary_labels:
        raise LobsterError(
            f"s must lie in [2, {ctx.delta1 + 1}], got {s}")
    if s == 2 * r or r == 2 * s:
        return False, "double"
    if r == ctx.delta1 + 2 and s == ctx.delta1 + 1:
        return False, "triple"
    return True, None


def _greedy_tertiary_labels(count: int, r: int, s: int) -> list[int]:
    """Ascending labels for the tertiary neighbors of an s-labeled secondary
    under an r-labeled primary: skip s, r, labels doubling with s, and any
    label whose difference from s is already an edge label at the secondary
    (the difference |s-r| is burned from the start)."""
    used = {abs(s - r)}
    out: list[int] = []
    x = 1
    while len(out) < count:
        d = abs(s - x)
        if x != s and x != r and x != 2 * s and 2 * x != s and d not in used:
            out.append(x)
            used.add(d)
        x += 1
    return out


def m_value(delta1: int, delta2: int, r: int, s: int) -> int:
    ctx = LobsterContext(delta1, delta2)
    ok, reason = pair_valid(ctx, r, s)
    if not ok:
        raise LobsterError(f"pair (r={r}, s={s}) is invalid: {reason}")
    labels = _greedy_tertiary_labels(delta2 - 1, r, s)
    return max(labels)


@dataclass(frozen=True)
class MTable:
    delta1: int
    delta2: int
    # (r, s) -> value for valid pairs, or the invalidity reason string.
    entries: dict[tuple[int, int], int | str]

    def rows(self) -> tuple[int, int, int]:
        return (1, self.delta1 + 2, self.delta1 + 3)

    def cols(self) -> range:
        return range(2, self.delta1 + 2)

    def to_text(self) -> str:
        width = max(len(str(v)) for v in self.entries.values()
                    if isinstance(v, int))
        width = max(width, len(str(self.delta1 + 3)))
        header = "r\\s " + " ".join(f"{s:>{width}}" for s in self.cols())
        lines = [header]
        for r in self.rows():
            cells = []
            for s in self.cols():
                v = self.entries[(r, s)]
                cells.append(f"{v:>{width}}" if isinstance(v, int)
                             else " " * width)
            lines.append(f"{r:<4}" + " ".join(cells))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        lines = ["r," + ",".join(str(s) for s in self.cols())]
        for r in self.rows():
            cells = [str(self.entries[(r, s)])
                     if isinstance(self.entries[(r, s)], int) else ""
                     for s in self.cols()]
            lines.append(f"{r}," + ",".join(cells))
        return "\n".join(lines) + "\n"


def m_table(delta1: int, delta2: int) -> MTable:
    ctx = LobsterContext(delta1, delta2)
    entries: dict[tuple[int, int], int | str] = {}
    for r in ctx.primary_labels:
        for s in ctx.secondary_labels:
            ok, reason = pair_valid(ctx, r, s)
            entries[(r, s)] = m_value(delta1, delta2, r, s) if ok else reason
    return MTable(delta1, delta2, entries)


def stabilization_point(delta1: int, r: int, s: int) -> int:
    """Least delta2 from which m grows by exactly 1 per unit of delta2.

    Once the greedy maximum passes max(2s, r, delta1+4) every further label
    is a fresh integer above all skipped values, so each increment adds
    exactly 1; the scan stops there. Capped at 2*delta1+4 defensively.
    """
    ctx = LobsterContext(delta1, 2)
    ok, reason = pair_valid(ctx, r, s)
    if not ok:
        raise LobsterError(f"pair (r={r}, s={s}) is invalid: {reason}")
    threshold = max(2 * s, r, delta1 + 4)
    cap = 2 * delta1 + 4
    values = {d2: m_value(delta1, d2, r, s) for d2 in range(2, cap + 2)}
    if values[cap] <= threshold:
        raise LobsterError(
            f"stabilization not provable by delta2 = {cap} for (r={r}, s={s})")
    stable_from = 2
    for d2 in range(2, cap + 1):
        if values[d2 + 1] != values[d2] + 1:
            stable_from = d2 + 1
    return stable_from


def lobster_bounds(delta1: int, delta2: int) -> BoundsResult:
    LobsterContext(delta1, delta2)
    return BoundsResult(max(delta1, delta2) + 1, delta1 + delta2 + 1,
                        provenance="lobster bound")


def label_maximal_lobster(n: int, delta1: int, delta2: int) -> ConstructionResult:
    """Full labeling of the maximal lobster: spine by the repeating
    (1, delta1+3, delta1+2) pattern, secondaries per interior primary from the
    least delta1-2 valid s values in [2, delta1], tertiaries by the greedy
    rule. Max label stays within delta1+delta2+1."""
    spec = MaximalLobsterSpec(n, delta1, delta2)
    validate(spec)
    ctx = LobsterContext(delta1, delta2)
    g, roles = build(spec)
    labels = [0] * g.n
    for i in range(n):
        labels[i] = {1: 1, 2: delta1 + 3, 0: delta1 + 2}[(i + 1) % 3]
    secondary_of: list[tuple[int, int]] = []   # (r, s) in vertex order
    nxt = n
    for i in range(1, n - 1):
        r = labels[i]
        svals = [s for s in range(2, delta1 + 1)
                 if pair_valid(ctx, r, s)[0]][:delta1 - 2]
        if len(svals) < delta1 - 2:
            raise ConstructionError(
                f"not enough secondary labels under primary label {r}")
        for s in svals:
            labels[nxt] = s
            secondary_of.append((r, s))
            nxt += 1
    for r, s in secondary_of:
        for t in _greedy_tertiary_labels(delta2 - 1, r, s):
            labels[nxt] = t
            nxt += 1
    claimed_k = delta1 + delta2 + 1
    report = find_violations(g, labels)
    if not report.ok or max(labels) > claimed_k:
        raise ConstructionError(
            f"internal error: lobster labeling not clean for {spec!r}")
    return ConstructionResult(g, roles, tuple(labels), claimed_k,
                              "lobster: spine pattern plus greedy tertiaries",
                              False)
