"""EFX0 orientations of simple graphs of chores.

General instances are first made objective by subdividing every edge that
is worthless to one endpoint and costly to the other.  On an objective
instance an orientation is EFX0 iff every vertex receives a single edge or
only dummy edges, which turns the search into a constrained vertex cover
over the dummy edges, decided with 2SAT.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ._graph import components, csr, orient_pseudoforest
from .instance import (
    ChoreInstance,
    Edge,
    EdgeClass,
    NegativeComponentReport,
    Orientation,
    negative_components,
    subdivide,
)
from .pdcover import PdInstance, find_cover


def orient_in_degree_one(
    vertices: Iterable[int],
    edges: Sequence[tuple[int, int, int]],
    root: int | None = None,
) -> dict[int, int]:
    """Orient a connected tree or unicyclic graph so no vertex gets two edges.

    ``edges`` holds ``(edge_id, u, v)`` triples; the result maps each edge id
    to the vertex it points at.  A tree (one edge fewer than vertices) is
    oriented away from ``root``, defaulting to the smallest vertex.  A
    unicyclic graph (as many edges as vertices) has its cycle oriented
    around and every other edge pointing away from the cycle, so every
    vertex ends up with in-degree exactly one.  A self-loop counts as a
    cycle of length one.
    """
    vertices = sorted(set(vertices))
    if not vertices:
        raise ValueError("empty component")
    local = {x: k for k, x in enumerate(vertices)}
    n, m = len(vertices), len(edges)
    if m not in (n - 1, n):
        raise ValueError(f"component with {n} vertices has {m} edges, need {n - 1} or {n}")
    try:
        us = [local[u] for _, u, _ in edges]
        vs = [local[v] for _, _, v in edges]
    except KeyError as exc:
        raise ValueError(f"edge endpoint {exc} outside the component") from None
    heads, slots = csr(n, us, vs)
    if components(n, us, vs, heads, slots)[1] != 1:
        raise ValueError("component is not connected")
    if m == n:
        if root is not None:
            raise ValueError("a unicyclic component takes no root")
        roots = []
    else:
        if root is None:
            root = vertices[0]
        if root not in local:
            raise ValueError(f"root {root} not in component")
        roots = [local[root]]
    receiver = orient_pseudoforest(n, us, vs, roots, heads, slots)
    return {eid: vertices[r] for (eid, _, _), r in zip(edges, receiver)}


@dataclass(frozen=True)
class EfxObjectivePlan:
    """Intermediate state of the objective solver.

    ``overfull`` lists components with more negative edges than vertices;
    when it is non-empty no cover problem is built and ``pd`` is None.
    """

    report: NegativeComponentReport
    pd: PdInstance | None
    cover: frozenset[int] | None
    overfull: tuple[int, ...] = ()


def _require_objective_simple(instance: ChoreInstance) -> None:
    if instance.has_parallel_edges():
        raise ValueError("EFX0 solver needs a simple graph; use the oracle for multigraphs")
    if not instance.is_objective():
        raise ValueError("instance has non-objective edges")


def plan_objective(instance: ChoreInstance) -> EfxObjectivePlan:
    _require_objective_simple(instance)
    report = negative_components(instance)
    overfull = tuple(
        cid for cid, c in enumerate(report.components) if c.negative_edges > len(c.vertices)
    )
    if overfull:
        return EfxObjectivePlan(report, None, None, overfull)

    dummies = tuple(Edge(e.u, e.v, 0, 0) for e in instance.edges if e.edge_class is EdgeClass.DUMMY)
    graph_h = ChoreInstance(instance.vertex_count, dummies)
    groups = tuple(c.vertices for c in report.components if c.negative_edges == len(c.vertices) - 1)
    forbidden = frozenset(
        x for c in report.components if c.negative_edges == len(c.vertices) for x in c.vertices
    )
    pd = PdInstance(graph_h, groups, forbidden)
    return EfxObjectivePlan(report, pd, find_cover(pd))


def solve_objective(instance: ChoreInstance) -> Orientation | None:
    """EFX0 orientation of an objective simple instance, or None if none exists."""
    plan = plan_objective(instance)
    if plan.cover is None:
        return None
    cover = plan.cover
    report = plan.report
    receiver = [-1] * instance.edge_count
    neg_ids, us, vs = [], [], []
    for eid, e in enumerate(instance.edges):
        if e.util_u == 0:
            if e.u in cover and (e.v not in cover or e.u <= e.v):
                receiver[eid] = e.u
            else:
                receiver[eid] = e.v
        else:
            neg_ids.append(eid)
            us.append(e.u)
            vs.append(e.v)

    roots = []
    for comp in report.components:
        if comp.negative_edges == len(comp.vertices) - 1 and len(comp.vertices) > 1:
            in_cover = comp.vertices & cover
            roots.append(min(in_cover) if in_cover else min(comp.vertices))
    for eid, r in zip(neg_ids, orient_pseudoforest(instance.vertex_count, us, vs, roots)):
        receiver[eid] = r
    return Orientation(receiver)


def solve(instance: ChoreInstance) -> Orientation | None:
    """EFX0 orientation of any simple instance, or None if none exists."""
    if instance.has_parallel_edges():
        raise ValueError("EFX0 solver needs a simple graph; use the oracle for multigraphs")
    split = subdivide(instance)
    objective = solve_objective(split.objective_instance)
    if objective is None:
        return None
    return split.lift(objective)


def structural_efx_condition(instance: ChoreInstance, orientation: Orientation) -> bool:
    """True iff each vertex receives exactly one edge or only dummy edges.

    On objective simple instances this is equivalent to EFX0.
    """
    if not instance.is_objective():
        raise ValueError("instance has non-objective edges")
    orientation.validate(instance)
    n = instance.vertex_count
    indeg = [0] * n
    negative_in = [0] * n
    for e, r in zip(instance.edges, orientation.receiver):
        indeg[r] += 1
        if e.edge_class is EdgeClass.NEGATIVE:
            negative_in[r] += 1
    return all(d == 1 or k == 0 for d, k in zip(indeg, negative_in))
