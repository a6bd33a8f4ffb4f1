"""Instance generators: Partition reductions and seeded random graphs.

The two Partition reductions produce multigraphs whose fair orientations
correspond to equal-sum splits of a multiset of positive integers.  They are
only meant for the exhaustive oracle; the polynomial solvers reject
parallel edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .instance import ChoreInstance, Edge
from .oracle import Criterion

MAX_PARTITION_SIZE = 30


@dataclass(frozen=True)
class PartitionInstance:
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        if not self.values:
            raise ValueError("a partition instance needs at least one value")
        if any(x < 1 for x in self.values):
            raise ValueError("partition values must be positive integers")

    @property
    def total(self) -> int:
        return sum(self.values)


def _as_partition(partition) -> PartitionInstance:
    return partition if isinstance(partition, PartitionInstance) else PartitionInstance(partition)


def has_equipartition(partition: PartitionInstance | Sequence[int]) -> bool:
    """Whether the values split into two parts of equal sum."""
    partition = _as_partition(partition)
    if len(partition.values) > MAX_PARTITION_SIZE:
        raise ValueError(f"at most {MAX_PARTITION_SIZE} values supported")
    total = partition.total
    if total % 2:
        return False
    reachable = 1  # bit s set <=> some subset sums to s
    for x in partition.values:
        reachable |= reachable << x
    return bool((reachable >> (total // 2)) & 1)


def gen_two_vertex(partition: PartitionInstance | Sequence[int], criterion: Criterion) -> ChoreInstance:
    """Two agents joined by one edge per value, each with a self-loop.

    Edge ``i`` costs ``values[i]`` to both agents.  The self-loops cost
    ``max(values) + 1`` for EF1 and nothing for EFX0; they come last.
    """
    partition = _as_partition(partition)
    alpha = -(max(partition.values) + 1) if Criterion(criterion) is Criterion.EF1 else 0
    edges = [Edge(0, 1, -s, -s) for s in partition.values]
    edges += [Edge(0, 0, alpha, alpha), Edge(1, 1, alpha, alpha)]
    return ChoreInstance(2, tuple(edges), allow_multi=True)


def gen_three_vertex(partition: PartitionInstance | Sequence[int]) -> ChoreInstance:
    """Loop-free three-agent multigraph on a=0, b=1, c=2.

    One a-b edge per value, then two a-c and two b-c edges that each cost
    the sum of all values.
    """
    partition = _as_partition(partition)
    t = partition.total
    edges = [Edge(0, 1, -s, -s) for s in partition.values]
    edges += [Edge(0, 2, -t, -t), Edge(0, 2, -t, -t), Edge(1, 2, -t, -t), Edge(1, 2, -t, -t)]
    return ChoreInstance(3, tuple(edges), allow_multi=True)


@dataclass(frozen=True)
class RandomParams:
    """Knobs for :func:`gen_random`.

    ``utility_range`` is an inclusive ``(low, high)`` pair with
    ``low <= high <= 0``.  An objective edge draws one utility from the
    range: zero makes it a dummy edge, otherwise the other end draws a
    negative utility too.  A non-objective edge is free to one random
    endpoint and costs a negative draw to the other.  Self-loops are always
    objective.
    """

    vertices: int
    edges: int
    utility_range: tuple[int, int] = (-3, 0)
    objective_fraction: float = 0.5
    self_loop_fraction: float = 0.0
    multigraph: bool = False


def _sample_pairs(rng, n: int, count: int, taken: set) -> list[tuple[int, int]]:
    out = []
    while len(out) < count:
        batch = rng.integers(0, n, size=(2 * (count - len(out)) + 8, 2))
        for u, v in batch.tolist():
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            if key in taken:
                continue
            taken.add(key)
            out.append((u, v))
            if len(out) == count:
                break
    return out


def gen_random(params: RandomParams, seed: int) -> ChoreInstance:
    """Seeded random instance; the same seed always gives the same instance."""
    p = params
    n, m = p.vertices, p.edges
    lo, hi = p.utility_range
    if n < 1 or m < 0:
        raise ValueError("need at least one vertex and a non-negative edge count")
    if not lo <= hi <= 0:
        raise ValueError("utility_range must satisfy low <= high <= 0")
    if not (0.0 <= p.objective_fraction <= 1.0 and 0.0 <= p.self_loop_fraction <= 1.0):
        raise ValueError("fractions must lie in [0, 1]")
    if lo == 0 and p.objective_fraction < 1.0:
        raise ValueError("non-objective edges need a negative utility in range")
    rng = np.random.default_rng(seed)

    loops = int(rng.binomial(m, p.self_loop_fraction)) if m else 0
    if n == 1:
        loops = m
    if not p.multigraph:
        pairs_cap = n * (n - 1) // 2
        if m > n + pairs_cap:
            raise ValueError(f"a simple graph on {n} vertices has at most {n + pairs_cap} edges")
        loops = min(max(loops, m - pairs_cap), n)
    plain = m - loops

    if p.multigraph:
        loop_at = rng.integers(0, n, size=loops).tolist()
        pairs = []
        while len(pairs) < plain:
            u, v = rng.integers(0, n, size=2).tolist()
            if u != v:
                pairs.append((u, v))
    else:
        loop_at = rng.choice(n, size=loops, replace=False).tolist() if loops else []
        pairs_cap = n * (n - 1) // 2
        if plain > pairs_cap // 2:
            all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            pick = rng.choice(len(all_pairs), size=plain, replace=False).tolist()
            pairs = [all_pairs[k] for k in pick]
        else:
            pairs = _sample_pairs(rng, n, plain, set())

    neg_lo, neg_hi = lo, min(hi, -1)

    def negative() -> int:
        return int(rng.integers(neg_lo, neg_hi + 1))

    edges = []
    for x in loop_at:
        w = int(rng.integers(lo, hi + 1))
        edges.append(Edge(x, x, w, w))
    for u, v in pairs:
        if rng.random() < p.objective_fraction:
            w = int(rng.integers(lo, hi + 1))
            edges.append(Edge(u, v, 0, 0) if w == 0 else Edge(u, v, w, negative()))
        elif rng.random() < 0.5:
            edges.append(Edge(u, v, 0, negative()))
        else:
            edges.append(Edge(u, v, negative(), 0))
    order = rng.permutation(len(edges)).tolist()
    return ChoreInstance(n, tuple(edges[k] for k in order), allow_multi=p.multigraph)


def gen_planted(
    vertices: int,
    edges: int,
    seed: int,
    max_block: int = 6,
    objective_fraction: float = 0.5,
    utility_range: tuple[int, int] = (-3, -1),
) -> ChoreInstance:
    """Seeded simple instance that is guaranteed to have EF1 and EFX0 orientations.

    Vertices are split into small blocks, each wired with negative edges as
    a random tree or a tree plus one extra edge.  Every remaining edge has a
    tree root as an endpoint; dummy edges are worthless to both ends and
    non-objective ones are worthless to the root end.  Sending those edges
    to the roots and the negative edges away from them is EFX0.
    """
    lo, hi = utility_range
    if not lo <= hi < 0:
        raise ValueError("utility_range must be negative")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(vertices).tolist()
    out: list[Edge] = []
    taken: set[tuple[int, int]] = set()
    roots = []
    closers = []  # (block, position in out) of each cycle-closing edge

    def add(u, v, wu, wv):
        taken.add((u, v) if u < v else (v, u))
        out.append(Edge(u, v, wu, wv))

    def weight() -> int:
        return int(rng.integers(lo, hi + 1))

    pos = 0
    while pos < vertices:
        size = min(int(rng.integers(1, max_block + 1)), vertices - pos)
        block = perm[pos:pos + size]
        pos += size
        for k in range(1, size):
            add(block[k], block[int(rng.integers(0, k))], weight(), weight())
        extra = size != 2 and rng.random() < 0.5
        if extra:
            closers.append((block, len(out)))
        if extra and size == 1:
            w = weight()
            add(block[0], block[0], w, w)
        elif extra:
            candidates = [
                (block[a], block[b])
                for a in range(size)
                for b in range(a + 1, size)
                if (min(block[a], block[b]), max(block[a], block[b])) not in taken
            ]
            u, v = candidates[int(rng.integers(0, len(candidates)))]
            add(u, v, weight(), weight())
        else:
            roots.append(block[int(rng.integers(0, size))])

    if edges > len(out) and not roots:
        # the remaining edges need a tree root: reopen the last cycle
        block, at = closers.pop()
        e = out.pop(at)
        taken.discard((e.u, e.v) if e.u < e.v else (e.v, e.u))
        roots.append(block[int(rng.integers(0, len(block)))])
    rest = edges - len(out)
    if rest < 0:
        raise ValueError(f"the negative blocks already use {len(out)} edges")
    attached = 0
    attempts = 0
    while attached < rest:
        attempts += 1
        if attempts > 50 * (rest + 10):
            raise ValueError("could not place the requested number of edges")
        r = roots[int(rng.integers(0, len(roots)))]
        y = int(rng.integers(0, vertices))
        key = (r, y) if r < y else (y, r)
        if y == r or key in taken:
            continue
        if rng.random() < objective_fraction:
            add(r, y, 0, 0)
        else:
            add(r, y, 0, weight())
        attached += 1
    order = rng.permutation(len(out)).tolist()
    return ChoreInstance(vertices, tuple(out[k] for k in order))
