"""Linear-time EF1 orientations of simple graphs of chores."""
from __future__ import annotations

from ._graph import components, csr, orient_pseudoforest
from .instance import ChoreInstance, Orientation


def solve_ef1(instance: ChoreInstance) -> Orientation | None:
    """Return an EF1 orientation, or None when no orientation is EF1.

    Edges worthless to some endpoint go to that endpoint (the smaller one
    when both qualify).  The remaining edges, costly to both ends, must be
    spread so that no vertex gets two of them; that is possible iff every
    connected component they form has at most as many edges as vertices.
    """
    if instance.has_parallel_edges():
        raise ValueError("EF1 solver needs a simple graph; use the oracle for multigraphs")
    n = instance.vertex_count
    receiver = [-1] * instance.edge_count
    costly, us, vs = [], [], []
    for eid, e in enumerate(instance.edges):
        if e.util_u == 0 and (e.util_v != 0 or e.u <= e.v):
            receiver[eid] = e.u
        elif e.util_v == 0:
            receiver[eid] = e.v
        else:
            costly.append(eid)
            us.append(e.u)
            vs.append(e.v)

    heads, slots = csr(n, us, vs)
    label, count = components(n, us, vs, heads, slots)
    size = [0] * count
    for c in label:
        size[c] += 1
    load = [0] * count
    for u in us:
        load[label[u]] += 1
    if any(k > s for k, s in zip(load, size)):
        return None

    roots = [-1] * count
    for x in range(n - 1, -1, -1):
        roots[label[x]] = x
    tree_roots = [roots[c] for c in range(count) if load[c] == size[c] - 1]
    for eid, r in zip(costly, orient_pseudoforest(n, us, vs, tree_roots, heads, slots)):
        receiver[eid] = r
    return Orientation(receiver)


def ef1_structural_condition(instance: ChoreInstance, orientation: Orientation) -> bool:
    """True iff no vertex receives two edges that cost it something."""
    orientation.validate(instance)
    costly_in = [0] * instance.vertex_count
    for e, r in zip(instance.edges, orientation.receiver):
        if e.utility_to(r) < 0:
            costly_in[r] += 1
    return all(k <= 1 for k in costly_in)
