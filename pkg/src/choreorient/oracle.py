"""Ground-truth fairness checks and exhaustive orientation search.

The checkers apply the envy definitions literally to arbitrary allocations.
The enumerator scores every orientation of a small (multi)graph at once with
numpy, using the additive closed forms: for EF1 the agent drops its worst
chore, for EFX0 its least costly one.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .instance import ChoreInstance, Orientation

MAX_ENUMERATED_EDGES = 25
_CHUNK = 1 << 16


class Criterion(str, enum.Enum):
    EF1 = "ef1"
    EFX0 = "efx0"


class OracleBoundError(ValueError):
    """The instance has too many free edges to enumerate."""


@dataclass(frozen=True)
class Allocation:
    """``bundles[i]`` is the set of edge ids held by agent ``i``."""

    bundles: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "bundles", tuple(frozenset(b) for b in self.bundles))

    @classmethod
    def from_orientation(cls, instance: ChoreInstance, orientation: Orientation) -> "Allocation":
        orientation.validate(instance)
        return cls(tuple(frozenset(b) for b in orientation.bundles(instance.vertex_count)))

    def validate(self, instance: ChoreInstance) -> None:
        if len(self.bundles) != instance.vertex_count:
            raise ValueError(
                f"allocation has {len(self.bundles)} bundles for {instance.vertex_count} agents"
            )
        total = sum(len(b) for b in self.bundles)
        union = frozenset().union(*self.bundles)
        if total != len(union):
            raise ValueError("bundles overlap")
        if union != frozenset(range(instance.edge_count)):
            raise ValueError("bundles do not cover exactly the edge set")


def _as_allocation(instance: ChoreInstance, allocation) -> Allocation:
    if isinstance(allocation, Orientation):
        return Allocation.from_orientation(instance, allocation)
    allocation.validate(instance)
    return allocation


def _views(instance: ChoreInstance, alloc: Allocation) -> tuple[list[int], list[list[int]]]:
    """Each agent's own utility, and the distinct values it sees in others' bundles.

    Agent ``i`` values bundle ``j`` only through edges shared with ``i``;
    every other agent's bundle is worth 0 to it.
    """
    n = instance.vertex_count
    seen: list[dict[int, int]] = [{} for _ in range(n)]
    for j, bundle in enumerate(alloc.bundles):
        for eid in bundle:
            e = instance.edges[eid]
            for x, w in ((e.u, e.util_u), (e.v, e.util_v)):
                seen[x][j] = seen[x].get(j, 0) + w
                if e.u == e.v:
                    break
    own = [seen[i].pop(i, 0) for i in range(n)]
    views = []
    for i in range(n):
        vals = list(seen[i].values())
        if len(vals) < n - 1:
            vals.append(0)
        views.append(vals)
    return own, views


def check_ef1(instance: ChoreInstance, allocation) -> bool:
    """EF1: for every pair i != j, either i does not envy j or dropping some
    single chore of i removes the envy.

    Accepts an :class:`Allocation` or an :class:`Orientation`.
    """
    alloc = _as_allocation(instance, allocation)
    own, views = _views(instance, alloc)
    for i, others in enumerate(views):
        mine = [instance.edges[eid].utility_to(i) for eid in alloc.bundles[i]]
        for theirs in others:
            if own[i] >= theirs:
                continue
            if not any(own[i] - u >= theirs for u in mine):
                return False
    return True


def check_efx0(instance: ChoreInstance, allocation) -> bool:
    """EFX0: no agent i, after dropping any one of its chores (zero-cost
    chores included), is still worse off than with some j's bundle."""
    alloc = _as_allocation(instance, allocation)
    own, views = _views(instance, alloc)
    for i, others in enumerate(views):
        mine = [instance.edges[eid].utility_to(i) for eid in alloc.bundles[i]]
        for theirs in others:
            if any(own[i] - u < theirs for u in mine):
                return False
    return True


def checker(criterion: Criterion):
    return check_ef1 if Criterion(criterion) is Criterion.EF1 else check_efx0


def free_edges(instance: ChoreInstance) -> list[int]:
    """Ids of non-loop edges; self-loops have only one possible direction."""
    return [eid for eid, e in enumerate(instance.edges) if not e.is_loop]


def orientation_count(instance: ChoreInstance) -> int:
    return 1 << len(free_edges(instance))


def orientation_at(instance: ChoreInstance, index: int) -> Orientation:
    """The ``index``-th orientation in lexicographic order.

    Free edges are read in id order, most significant first; bit 0 sends an
    edge to ``u`` and bit 1 to ``v``.
    """
    free = free_edges(instance)
    m = len(free)
    recv = [e.u for e in instance.edges]
    for t, eid in enumerate(free):
        if (index >> (m - 1 - t)) & 1:
            recv[eid] = instance.edges[eid].v
    return Orientation(recv)


def orientation_verdicts(
    instance: ChoreInstance, criterion: Criterion, start: int = 0, stop: int | None = None
) -> np.ndarray:
    """Boolean verdict for each orientation index in ``[start, stop)``."""
    criterion = Criterion(criterion)
    free = free_edges(instance)
    m = len(free)
    total = 1 << m
    stop = total if stop is None else min(stop, total)
    n = instance.vertex_count
    count = max(stop - start, 0)
    if n == 1 or count == 0:
        return np.ones(count, dtype=bool)

    big = 1 + sum(abs(e.util_u) + abs(e.util_v) for e in instance.edges)
    ks = np.arange(start, stop, dtype=np.int64)
    own = np.zeros((n, count), dtype=np.int64)
    worst = np.zeros((n, count), dtype=np.int64)
    mildest = np.full((n, count), -big, dtype=np.int64)
    pair: dict[tuple[int, int], np.ndarray] = {}

    for e in instance.edges:
        if e.is_loop:
            own[e.u] += e.util_u
            worst[e.u] = np.minimum(worst[e.u], e.util_u)
            mildest[e.u] = np.maximum(mildest[e.u], e.util_u)

    for t, eid in enumerate(free):
        e = instance.edges[eid]
        to_v = ((ks >> (m - 1 - t)) & 1).astype(bool)
        to_u = ~to_v
        u, v = e.u, e.v
        own[u] += np.where(to_u, e.util_u, 0)
        own[v] += np.where(to_v, e.util_v, 0)
        worst[u] = np.where(to_u, np.minimum(worst[u], e.util_u), worst[u])
        worst[v] = np.where(to_v, np.minimum(worst[v], e.util_v), worst[v])
        mildest[u] = np.where(to_u, np.maximum(mildest[u], e.util_u), mildest[u])
        mildest[v] = np.where(to_v, np.maximum(mildest[v], e.util_v), mildest[v])
        if (u, v) not in pair:
            pair[(u, v)] = np.zeros(count, dtype=np.int64)
            pair[(v, u)] = np.zeros(count, dtype=np.int64)
        pair[(u, v)] += np.where(to_v, e.util_u, 0)
        pair[(v, u)] += np.where(to_u, e.util_v, 0)

    neighbours: list[list[int]] = [[] for _ in range(n)]
    for i, j in pair:
        neighbours[i].append(j)

    ok = np.ones(count, dtype=bool)
    for i in range(n):
        # best bundle of another agent, as seen by i; untouched agents give 0
        if len(neighbours[i]) < n - 1:
            best = np.zeros(count, dtype=np.int64)
        else:
            best = np.full(count, -big, dtype=np.int64)
        for j in neighbours[i]:
            best = np.maximum(best, pair[(i, j)])
        if criterion is Criterion.EF1:
            ok &= own[i] - worst[i] >= best
        else:
            ok &= own[i] - mildest[i] >= best
    return ok


def _check_bound(instance: ChoreInstance) -> None:
    m = len(free_edges(instance))
    if m > MAX_ENUMERATED_EDGES:
        raise OracleBoundError(
            f"{m} non-loop edges exceeds the enumeration bound of {MAX_ENUMERATED_EDGES}"
        )


def enumerate_orientations(instance: ChoreInstance, criterion: Criterion) -> Orientation | None:
    """First orientation (lexicographic order) passing ``criterion``, else None.

    Accepts multigraphs and self-loops.
    """
    _check_bound(instance)
    total = orientation_count(instance)
    for start in range(0, total, _CHUNK):
        hits = np.flatnonzero(orientation_verdicts(instance, criterion, start, start + _CHUNK))
        if hits.size:
            return orientation_at(instance, start + int(hits[0]))
    return None


def count_orientations(instance: ChoreInstance, criterion: Criterion) -> int:
    """Number of orientations passing ``criterion``."""
    _check_bound(instance)
    total = orientation_count(instance)
    return sum(
        int(orientation_verdicts(instance, criterion, s, s + _CHUNK).sum())
        for s in range(0, total, _CHUNK)
    )


def all_orientations(instance: ChoreInstance) -> Sequence[Orientation]:
    """Every orientation in lexicographic order (small instances only)."""
    _check_bound(instance)
    return [orientation_at(instance, k) for k in range(orientation_count(instance))]
