"""2-CNF satisfiability via the implication graph.

Each clause (a or b) contributes the implications not-a -> b and not-b -> a.
The formula is unsatisfiable exactly when a variable and its negation share
a strongly connected component; otherwise each variable takes the value of
whichever of its two literals lies later in topological order.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence


class Literal(NamedTuple):
    variable: int
    negated: bool = False

    def __invert__(self) -> "Literal":
        return Literal(self.variable, not self.negated)

    @property
    def node(self) -> int:
        return 2 * self.variable + self.negated


def pos(variable: int) -> Literal:
    return Literal(variable, False)


def neg(variable: int) -> Literal:
    return Literal(variable, True)


class TwoSatFormula:
    """Clauses of one or two literals; a unit clause repeats its literal."""

    def __init__(self, variable_count: int, clauses: Iterable[tuple[Literal, Literal]] = ()):
        if variable_count < 0:
            raise ValueError("variable_count must be non-negative")
        self.variable_count = variable_count
        self.clauses: list[tuple[Literal, Literal]] = []
        for a, b in clauses:
            self.add_clause(a, b)

    def _check(self, lit: Literal) -> None:
        if not 0 <= lit.variable < self.variable_count:
            raise ValueError(
                f"literal on variable {lit.variable} outside 0..{self.variable_count - 1}"
            )

    def add_clause(self, a: Literal, b: Literal | None = None) -> "TwoSatFormula":
        if b is None:
            b = a
        self._check(a)
        self._check(b)
        self.clauses.append((a, b))
        return self

    def __len__(self):
        return len(self.clauses)

    def __repr__(self):
        return f"TwoSatFormula({self.variable_count} vars, {len(self.clauses)} clauses)"

    def satisfied_by(self, values: Sequence[bool]) -> bool:
        return all(
            values[a.variable] != a.negated or values[b.variable] != b.negated
            for a, b in self.clauses
        )


def add_clause(formula: TwoSatFormula, a: Literal, b: Literal | None = None) -> TwoSatFormula:
    return formula.add_clause(a, b)


def from_dimacs(text: str, variable_count: int | None = None) -> TwoSatFormula:
    """Parse one clause per line of signed 1-based variable indices.

    Blank lines and lines starting with ``c`` or ``p`` are skipped; a
    trailing ``0`` is optional.
    """
    rows = []
    top = 0
    for line in text.splitlines():
        line = line.strip()
        if not line or line[0] in "cp":
            continue
        ints = [int(t) for t in line.split()]
        if ints and ints[-1] == 0:
            ints.pop()
        if not 1 <= len(ints) <= 2 or 0 in ints:
            raise ValueError(f"not a 2-CNF clause: {line!r}")
        lits = [Literal(abs(x) - 1, x < 0) for x in ints]
        top = max(top, *(lit.variable + 1 for lit in lits))
        rows.append(lits)
    formula = TwoSatFormula(top if variable_count is None else variable_count)
    for lits in rows:
        formula.add_clause(*lits)
    return formula


def strongly_connected_components(node_count: int, heads: list[int], targets: list[int]) -> list[int]:
    """Tarjan's algorithm on a CSR graph, without recursion.

    ``targets[heads[v]:heads[v + 1]]`` are the successors of ``v``.  Returns
    the component index of every node; components are numbered in the order
    they are completed, which is a reverse topological order.
    """
    index = [-1] * node_count
    low = [0] * node_count
    comp = [-1] * node_count
    on_stack = [False] * node_count
    stack: list[int] = []
    counter = 0
    n_comp = 0

    for root in range(node_count):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, heads[root])]
        while work:
            v, pos_ = work[-1]
            end = heads[v + 1]
            descended = False
            while pos_ < end:
                w = targets[pos_]
                pos_ += 1
                if index[w] == -1:
                    work[-1] = (v, pos_)
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, heads[w]))
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
    return comp


def implication_graph(formula: TwoSatFormula) -> tuple[list[int], list[int]]:
    """CSR adjacency over literal nodes ``2*x`` (x) and ``2*x + 1`` (not x)."""
    n = 2 * formula.variable_count
    degree = [0] * (n + 1)
    for a, b in formula.clauses:
        degree[a.node ^ 1] += 1
        degree[b.node ^ 1] += 1
    heads = [0] * (n + 1)
    total = 0
    for v in range(n):
        heads[v] = total
        total += degree[v]
    heads[n] = total
    fill = heads[:n]
    targets = [0] * total
    for a, b in formula.clauses:
        na, nb = a.node, b.node
        targets[fill[na ^ 1]] = nb
        fill[na ^ 1] += 1
        targets[fill[nb ^ 1]] = na
        fill[nb ^ 1] += 1
    return heads, targets


def solve(formula: TwoSatFormula) -> list[bool] | None:
    """Return a satisfying assignment, or ``None`` if there is none.

    Runs in time linear in variables plus clauses.  The assignment is a
    deterministic function of the formula.
    """
    heads, targets = implication_graph(formula)
    comp = strongly_connected_components(2 * formula.variable_count, heads, targets)
    values = []
    for x in range(formula.variable_count):
        cp, cn = comp[2 * x], comp[2 * x + 1]
        if cp == cn:
            return None
        # lower completion index = later in topological order
        values.append(cp < cn)
    return values
