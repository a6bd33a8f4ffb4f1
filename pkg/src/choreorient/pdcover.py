"""Vertex covers with group and forbidden-vertex constraints, solved by 2SAT.

A (P, D)-vertex cover of a graph H touches every edge, takes at most one
vertex from each group in P, and avoids every vertex in D.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .instance import ChoreInstance
from .twosat import TwoSatFormula, neg, pos, solve


@dataclass(frozen=True)
class PdInstance:
    """``graph_h`` is read as a plain undirected graph; utilities are ignored."""

    graph_h: ChoreInstance
    groups_p: tuple[frozenset[int], ...] = ()
    forbidden_d: frozenset[int] = frozenset()

    def __post_init__(self):
        groups = tuple(frozenset(g) for g in self.groups_p)
        object.__setattr__(self, "groups_p", groups)
        object.__setattr__(self, "forbidden_d", frozenset(self.forbidden_d))
        n = self.graph_h.vertex_count
        seen: set[int] = set()
        for g in groups:
            if seen & g:
                raise ValueError("groups in P must be pairwise disjoint")
            seen |= g
        for x in seen | self.forbidden_d:
            if not 0 <= x < n:
                raise ValueError(f"vertex {x} outside 0..{n - 1}")

    @property
    def vertex_count(self) -> int:
        return self.graph_h.vertex_count


def build_formula(instance: PdInstance) -> TwoSatFormula:
    """One variable per vertex of H (true = in the cover).

    Clauses are added in three blocks: an edge clause per edge of H, a
    pairwise exclusion clause per pair inside each group, and a negative
    unit clause per forbidden vertex.
    """
    formula = TwoSatFormula(instance.vertex_count)
    for e in instance.graph_h.edges:
        formula.add_clause(pos(e.u), pos(e.v))
    for group in instance.groups_p:
        for i, j in combinations(sorted(group), 2):
            formula.add_clause(neg(i), neg(j))
    for i in sorted(instance.forbidden_d):
        formula.add_clause(neg(i), neg(i))
    return formula


def expected_clause_count(instance: PdInstance) -> int:
    return (
        instance.graph_h.edge_count
        + sum(len(g) * (len(g) - 1) // 2 for g in instance.groups_p)
        + len(instance.forbidden_d)
    )


def find_cover(instance: PdInstance) -> frozenset[int] | None:
    values = solve(build_formula(instance))
    if values is None:
        return None
    return frozenset(i for i, on in enumerate(values) if on)


def verify_cover(instance: PdInstance, cover: Iterable[int]) -> bool:
    cover = frozenset(cover)
    if any(e.u not in cover and e.v not in cover for e in instance.graph_h.edges):
        return False
    if any(len(cover & g) > 1 for g in instance.groups_p):
        return False
    return not (cover & instance.forbidden_d)
