"""Flat-array graph helpers shared by the solvers.

Graphs are given as parallel endpoint lists ``us[k], vs[k]``; adjacency is
stored in CSR form as edge indices so the hot loops touch only ints.
"""
from __future__ import annotations

from collections import deque
from itertools import accumulate
from typing import Iterable, Sequence


def csr(n: int, us: Sequence[int], vs: Sequence[int]) -> tuple[list[int], list[int]]:
    """Incidence lists: ``slots[heads[x]:heads[x + 1]]`` are edges at ``x``.

    A self-loop is listed once at its vertex.
    """
    deg = [0] * n
    for u, v in zip(us, vs):
        deg[u] += 1
        if u != v:
            deg[v] += 1
    heads = [0, *accumulate(deg)]
    fill = heads[:n]
    slots = [0] * heads[n]
    for k, (u, v) in enumerate(zip(us, vs)):
        slots[fill[u]] = k
        fill[u] += 1
        if u != v:
            slots[fill[v]] = k
            fill[v] += 1
    return heads, slots


def components(
    n: int, us: Sequence[int], vs: Sequence[int], heads: list[int], slots: list[int]
) -> tuple[list[int], int]:
    """Connected components by breadth-first search; returns (label per vertex, count)."""
    label = [-1] * n
    count = 0
    for s in range(n):
        if label[s] != -1:
            continue
        label[s] = count
        queue = deque((s,))
        while queue:
            x = queue.popleft()
            for k in slots[heads[x]:heads[x + 1]]:
                y = us[k] + vs[k] - x
                if label[y] == -1:
                    label[y] = count
                    queue.append(y)
        count += 1
    return label, count


def orient_pseudoforest(
    n: int,
    us: Sequence[int],
    vs: Sequence[int],
    roots: Iterable[int],
    heads: list[int] | None = None,
    slots: list[int] | None = None,
) -> list[int]:
    """Receiver of every edge so that each vertex gets at most one edge.

    Every component must be either a tree containing exactly one vertex of
    ``roots`` or a unicyclic graph containing none.  Leaves other than roots
    are peeled repeatedly and each takes the edge it hangs from, so trees
    end up pointing away from their root.  What survives peeling is a
    disjoint union of cycles, each oriented around itself.
    """
    if heads is None or slots is None:
        heads, slots = csr(n, us, vs)
    m = len(us)
    receiver = [-1] * m
    degree = [0] * n
    for u, v in zip(us, vs):
        degree[u] += 1
        degree[v] += 1
    protected = [False] * n
    for r in roots:
        protected[r] = True

    leaves = deque(x for x in range(n) if degree[x] == 1 and not protected[x])
    while leaves:
        x = leaves.popleft()
        if degree[x] != 1:
            continue
        for k in slots[heads[x]:heads[x + 1]]:
            if receiver[k] == -1:
                break
        receiver[k] = x
        degree[x] = 0
        y = us[k] + vs[k] - x
        degree[y] -= 1
        if degree[y] == 1 and not protected[y]:
            leaves.append(y)

    for start in range(n):
        if degree[start] == 0 or protected[start]:
            continue
        x = start
        while True:
            for k in slots[heads[x]:heads[x + 1]]:
                if receiver[k] == -1:
                    break
            else:
                break
            y = us[k] + vs[k] - x
            receiver[k] = y
            degree[x] = 0
            x = y
    return receiver
