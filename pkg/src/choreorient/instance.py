"""Chore instances on graphs, orientations, and the objective subdivision.

An instance is a graph whose vertices are agents and whose edges are chores.
Every edge carries one non-positive integer utility for each endpoint; an
edge is worth nothing to agents it does not touch.  Edge ids are positions
in ``ChoreInstance.edges``.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from ._graph import components, csr


class InstanceFormatError(ValueError):
    """Raised for malformed instance or orientation data."""


class EdgeClass(enum.Enum):
    DUMMY = "dummy"
    NEGATIVE = "negative"
    NON_OBJECTIVE = "non_objective"


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    util_u: int
    util_v: int

    def __post_init__(self):
        if self.util_u > 0 or self.util_v > 0:
            raise ValueError(f"chores must have non-positive utility, got {self}")
        if self.u == self.v and self.util_u != self.util_v:
            raise ValueError(f"self-loop at {self.u} has two different utilities")

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)

    def utility_to(self, agent: int) -> int:
        if agent == self.u:
            return self.util_u
        if agent == self.v:
            return self.util_v
        return 0

    def other(self, agent: int) -> int:
        return self.v if agent == self.u else self.u

    @property
    def edge_class(self) -> EdgeClass:
        if self.util_u == 0 and self.util_v == 0:
            return EdgeClass.DUMMY
        if self.util_u < 0 and self.util_v < 0:
            return EdgeClass.NEGATIVE
        return EdgeClass.NON_OBJECTIVE


@dataclass(frozen=True)
class ChoreInstance:
    """A graph of chores with additive, per-edge, non-positive utilities.

    Parallel edges (including two self-loops at one vertex) are rejected
    unless ``allow_multi`` is set.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = ()
    allow_multi: bool = False

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.vertex_count < 1:
            raise ValueError("an instance needs at least one vertex")
        n = self.vertex_count
        for eid, e in enumerate(self.edges):
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise ValueError(f"edge {eid} has an endpoint outside 0..{n - 1}")
        if not self.allow_multi and self.has_parallel_edges():
            raise ValueError("parallel edges require allow_multi=True")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_parallel_edges(self) -> bool:
        return self._parallel

    @cached_property
    def _parallel(self) -> bool:
        keys = {(e.u, e.v) if e.u <= e.v else (e.v, e.u) for e in self.edges}
        return len(keys) != len(self.edges)

    def edge(self, edge_id: int) -> Edge:
        if not 0 <= edge_id < len(self.edges):
            raise IndexError(f"edge id {edge_id} out of range 0..{len(self.edges) - 1}")
        return self.edges[edge_id]

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex; a self-loop is listed once."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for eid, e in enumerate(self.edges):
            inc[e.u].append(eid)
            if e.v != e.u:
                inc[e.v].append(eid)
        return tuple(tuple(x) for x in inc)

    def is_objective(self) -> bool:
        return all(e.edge_class is not EdgeClass.NON_OBJECTIVE for e in self.edges)


def classify_edge(instance: ChoreInstance, edge_id: int) -> EdgeClass:
    return instance.edge(edge_id).edge_class


def bundle_utility(instance: ChoreInstance, agent: int, bundle: Iterable[int]) -> int:
    """Additive utility of ``bundle`` (edge ids) to ``agent``.

    Edges not touching ``agent`` contribute zero.
    """
    return sum(instance.edges[eid].utility_to(agent) for eid in bundle)


@dataclass(frozen=True)
class Orientation:
    """``receiver[e]`` is the endpoint that edge ``e`` is directed toward."""

    receiver: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "receiver", tuple(self.receiver))

    def __len__(self):
        return len(self.receiver)

    def validate(self, instance: ChoreInstance) -> None:
        if len(self.receiver) != instance.edge_count:
            raise ValueError(
                f"orientation covers {len(self.receiver)} edges, instance has {instance.edge_count}"
            )
        for eid, (e, r) in enumerate(zip(instance.edges, self.receiver)):
            if r != e.u and r != e.v:
                raise ValueError(f"edge {eid} directed to non-endpoint {r}")

    def bundles(self, vertex_count: int) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(vertex_count)]
        for eid, r in enumerate(self.receiver):
            out[r].append(eid)
        return out

    def in_degrees(self, vertex_count: int) -> list[int]:
        deg = [0] * vertex_count
        for r in self.receiver:
            deg[r] += 1
        return deg


class NegativeComponent(NamedTuple):
    vertices: frozenset[int]
    negative_edges: int


@dataclass(frozen=True)
class NegativeComponentReport:
    component_of: tuple[int, ...]
    components: tuple[NegativeComponent, ...]

    def __len__(self):
        return len(self.components)


def negative_components(instance: ChoreInstance) -> NegativeComponentReport:
    """Split the vertices into classes joined by paths of negative edges.

    Components are numbered in order of their smallest vertex.
    """
    n = instance.vertex_count
    us, vs = [], []
    for e in instance.edges:
        if e.util_u < 0 and e.util_v < 0:
            us.append(e.u)
            vs.append(e.v)
    heads, slots = csr(n, us, vs)
    label, count = components(n, us, vs, heads, slots)
    members: list[list[int]] = [[] for _ in range(count)]
    for x, c in enumerate(label):
        members[c].append(x)
    counts = [0] * count
    for u in us:
        counts[label[u]] += 1
    comps = tuple(NegativeComponent(frozenset(g), k) for g, k in zip(members, counts))
    return NegativeComponentReport(tuple(label), comps)


class EdgeOrigin(NamedTuple):
    """Where an edge of the objective instance came from.

    ``role`` is ``"original"`` for copied edges, otherwise ``"zero_side"`` or
    ``"negative_side"`` for the two halves of a split edge.
    """

    source_edge: int
    role: str


class SplitEdge(NamedTuple):
    source_edge: int
    zero_end: int
    negative_end: int
    fake: int
    zero_side: int
    negative_side: int


@dataclass(frozen=True)
class SubdivisionMap:
    source: ChoreInstance
    objective_instance: ChoreInstance
    origin: tuple[EdgeOrigin, ...]
    fake_vertices: frozenset[int]
    splits: tuple[SplitEdge, ...] = field(default=())

    def lift(self, objective_orientation: Orientation) -> Orientation:
        """Map an orientation of the objective instance back to the source.

        A split edge goes to its zero-utility end exactly when its zero-side
        half does; every other edge keeps its direction.
        """
        recv = list(objective_orientation.receiver[: self.source.edge_count])
        for s in self.splits:
            if objective_orientation.receiver[s.zero_side] == s.zero_end:
                recv[s.source_edge] = s.zero_end
            else:
                recv[s.source_edge] = s.negative_end
        return Orientation(recv)


def subdivide(instance: ChoreInstance) -> SubdivisionMap:
    """Replace every non-objective edge by a dummy and a negative edge.

    The zero-side half keeps the source edge id; negative-side halves are
    appended after the last source edge, and fake vertices after the last
    source vertex.
    """
    if instance.has_parallel_edges():
        raise ValueError("subdivision requires a simple graph")
    n = instance.vertex_count
    m = instance.edge_count
    edges = list(instance.edges)
    origin = [EdgeOrigin(eid, "original") for eid in range(m)]
    splits = []
    appended = []
    next_vertex = n
    for eid, e in enumerate(instance.edges):
        if e.edge_class is not EdgeClass.NON_OBJECTIVE:
            continue
        if e.util_u == 0:
            i, j, beta = e.u, e.v, e.util_v
        else:
            i, j, beta = e.v, e.u, e.util_u
        k = next_vertex
        next_vertex += 1
        edges[eid] = Edge(i, k, 0, 0)
        origin[eid] = EdgeOrigin(eid, "zero_side")
        neg_id = m + len(appended)
        appended.append(Edge(j, k, beta, beta))
        origin.append(EdgeOrigin(eid, "negative_side"))
        splits.append(SplitEdge(eid, i, j, k, eid, neg_id))

    objective = ChoreInstance(next_vertex, tuple(edges) + tuple(appended))
    return SubdivisionMap(
        source=instance,
        objective_instance=objective,
        origin=tuple(origin),
        fake_vertices=frozenset(range(n, next_vertex)),
        splits=tuple(splits),
    )


# -- file formats ---------------------------------------------------------


def instance_to_dict(instance: ChoreInstance) -> dict:
    return {
        "vertex_count": instance.vertex_count,
        "allow_multi": instance.allow_multi,
        "edges": [
            {"u": e.u, "v": e.v, "util_u": e.util_u, "util_v": e.util_v}
            for e in instance.edges
        ],
    }


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InstanceFormatError(f"{what} must be an integer, got {value!r}")
    return value


def instance_from_dict(data) -> ChoreInstance:
    if not isinstance(data, dict):
        raise InstanceFormatError("instance must be a JSON object")
    try:
        n = _as_int(data["vertex_count"], "vertex_count")
        raw_edges = data.get("edges", [])
        allow_multi = data.get("allow_multi", False)
        if not isinstance(allow_multi, bool):
            raise InstanceFormatError("allow_multi must be a boolean")
        if not isinstance(raw_edges, list):
            raise InstanceFormatError("edges must be an array")
        edges = []
        for k, item in enumerate(raw_edges):
            if not isinstance(item, dict):
                raise InstanceFormatError(f"edge {k} must be an object")
            edges.append(
                Edge(
                    _as_int(item["u"], f"edges[{k}].u"),
                    _as_int(item["v"], f"edges[{k}].v"),
                    _as_int(item["util_u"], f"edges[{k}].util_u"),
                    _as_int(item["util_v"], f"edges[{k}].util_v"),
                )
            )
        return ChoreInstance(n, tuple(edges), allow_multi)
    except KeyError as exc:
        raise InstanceFormatError(f"missing field {exc}") from None
    except InstanceFormatError:
        raise
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from None


def dumps_instance(instance: ChoreInstance) -> str:
    return json.dumps(instance_to_dict(instance), indent=1) + "\n"


def loads_instance(text: str) -> ChoreInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from None
    return instance_from_dict(data)


def load_instance(path: str | Path) -> ChoreInstance:
    return loads_instance(Path(path).read_text())


def orientation_to_list(orientation: Orientation) -> list[dict]:
    return [{"edge": eid, "to": r} for eid, r in enumerate(orientation.receiver)]


def orientation_from_list(data, instance: ChoreInstance | None = None) -> Orientation:
    """Parse ``[{"edge": e, "to": v}, ...]`` listed in edge-id order."""
    if not isinstance(data, list):
        raise InstanceFormatError("orientation must be a JSON array")
    recv = []
    for k, item in enumerate(data):
        if not isinstance(item, dict) or "edge" not in item or "to" not in item:
            raise InstanceFormatError(f"orientation entry {k} must be an object with edge and to")
        if _as_int(item["edge"], "edge") != k:
            raise InstanceFormatError(f"orientation entry {k} names edge {item['edge']}")
        recv.append(_as_int(item["to"], "to"))
    orientation = Orientation(recv)
    if instance is not None:
        try:
            orientation.validate(instance)
        except ValueError as exc:
            raise InstanceFormatError(str(exc)) from None
    return orientation


def dumps_orientation(orientation: Orientation) -> str:
    return json.dumps(orientation_to_list(orientation)) + "\n"


def loads_orientation(text: str, instance: ChoreInstance | None = None) -> Orientation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from None
    return orientation_from_list(data, instance)


def figure1_instance() -> ChoreInstance:
    """The eight-vertex objective instance with two negative components.

    Vertices 0-3 form a negative tree and 4-7 a negative triangle with a
    pendant edge; five dummy edges run between and within them.
    """
    text = resources.files("choreorient.data").joinpath("figure1.json").read_text()
    return loads_instance(text)


def make_instance(
    vertex_count: int,
    edges: Sequence[tuple[int, int, int, int]],
    allow_multi: bool = False,
) -> ChoreInstance:
    """Shorthand: ``edges`` are ``(u, v, util_u, util_v)`` tuples."""
    return ChoreInstance(vertex_count, tuple(Edge(*t) for t in edges), allow_multi)
