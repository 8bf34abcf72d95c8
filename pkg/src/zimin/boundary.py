"""Boundary flags for pattern junctions.

When a valuation is refined from one letter level to the next, each
variable x needs two booleans: does val(x) start with the new letter,
does it end with it.  Every adjacent occurrence pair x y in the pattern
demands exactly one new letter at the junction, i.e. last(x) != first(y).

Those inequations live on a graph whose vertices are (variable, side)
and whose edges join an end side to a start side, so the graph is
bipartite and conflicts can only come from forced variables.  Each
connected component carries a single free bit.
"""

from __future__ import annotations

from dataclasses import dataclass

END = "end"
START = "start"

# variable -> (first, last)
BoundaryAssignment = dict


@dataclass(frozen=True)
class ConstraintSystem:
    """Declarative form of a junction system, for checking and for the
    reference solver."""

    variables: tuple
    xor_edges: tuple  # ((x, END), (y, START)): the two flags must differ
    forced: tuple  # vertices pinned to True

    def satisfied_by(self, flags) -> bool:
        def value(vertex):
            var, side = vertex
            first, last = flags[var]
            return first if side == START else last

        for a, b in self.xor_edges:
            if value(a) == value(b):
                return False
        return all(value(v) for v in self.forced)


def build_constraints(pattern, forced=()) -> ConstraintSystem:
    variables = tuple(dict.fromkeys(pattern))
    known = set(variables)
    for var in forced:
        if var not in known:
            raise ValueError(f"forced variable {var!r} does not occur in the pattern")
    edges = dict.fromkeys(
        ((x, END), (y, START)) for x, y in zip(pattern, pattern[1:])
    )
    pins = []
    for var in dict.fromkeys(forced):
        pins.append((var, START))
        pins.append((var, END))
    return ConstraintSystem(variables, tuple(edges), tuple(pins))


class AdjacencyGraph:
    """Junction graph over (variable, side) vertices.

    Values are stored per component as the bit carried by its end-side
    vertices; start sides hold the complement.  ``valuate`` is
    idempotent and reports clashes instead of raising.
    """

    def __init__(self, variables, pairs):
        self._vars = list(dict.fromkeys(variables))
        self._index = {}
        for i, var in enumerate(self._vars):
            self._index[(var, END)] = 2 * i
            self._index[(var, START)] = 2 * i + 1
        n = 2 * len(self._vars)
        adj: list[list[int]] = [[] for _ in range(n)]
        for x, y in pairs:
            a = self._index[(x, END)]
            b = self._index[(y, START)]
            adj[a].append(b)
            adj[b].append(a)
        self._comp = [-1] * n
        self._has_end: list[bool] = []
        for start in range(n):
            if self._comp[start] >= 0:
                continue
            cid = len(self._has_end)
            self._has_end.append(False)
            queue = [start]
            self._comp[start] = cid
            while queue:
                v = queue.pop()
                if v % 2 == 0:
                    self._has_end[cid] = True
                for u in adj[v]:
                    if self._comp[u] < 0:
                        self._comp[u] = cid
                        queue.append(u)
        # end-side bit per component, None while free
        self._bit: list = [None] * len(self._has_end)

    @property
    def variables(self):
        return tuple(self._vars)

    def component_of(self, vertex) -> int:
        return self._comp[self._index[vertex]]

    def _implied_bit(self, vertex, value: bool) -> bool:
        # start sides store the complement of the component bit
        if self._index[vertex] % 2 == 0:
            return value
        return not value

    def valuate(self, vertex, value: bool) -> bool:
        """Pin a flag; False means it clashes with an earlier decision."""
        cid = self._comp[self._index[vertex]]
        bit = self._implied_bit(vertex, value)
        if self._bit[cid] is None:
            self._bit[cid] = bit
            return True
        return self._bit[cid] == bit

    def value_of(self, vertex):
        cid = self._comp[self._index[vertex]]
        if self._bit[cid] is None:
            return None
        return self._bit[cid] if self._index[vertex] % 2 == 0 else not self._bit[cid]

    def unvalued_components(self) -> tuple:
        return tuple(cid for cid, bit in enumerate(self._bit) if bit is None)

    def set_anchor(self, cid: int, anchor: bool):
        """Anchor is the end-side bit when the component has end vertices,
        otherwise the start-side bit.  False is the canonical choice."""
        self._bit[cid] = anchor if self._has_end[cid] else not anchor

    def flags(self) -> BoundaryAssignment:
        return self.flags_with({})

    def flags_with(self, overrides) -> BoundaryAssignment:
        """Flags under per-component anchor overrides, without mutating
        the stored bits."""
        bits = list(self._bit)
        for cid, anchor in overrides.items():
            bits[cid] = anchor if self._has_end[cid] else not anchor
        out: BoundaryAssignment = {}
        for i, var in enumerate(self._vars):
            end_bit = bits[self._comp[2 * i]]
            start_bit = bits[self._comp[2 * i + 1]]
            if end_bit is None or start_bit is None:
                raise ValueError("component left unvalued")
            out[var] = (not start_bit, end_bit)
        return out


def _graph_for(pattern, forced):
    variables = dict.fromkeys(pattern)
    for var in forced:
        if var not in variables:
            raise ValueError(f"forced variable {var!r} does not occur in the pattern")
    graph = AdjacencyGraph(variables, dict.fromkeys(zip(pattern, pattern[1:])))
    for var in forced:
        if not graph.valuate((var, END), True) or not graph.valuate((var, START), True):
            return None
    return graph


def first_last(pattern, forced=()):
    """Canonical solution of the junction system, or None when the forced
    variables clash.  Free components take anchor False."""
    if not pattern:
        return {}
    graph = _graph_for(pattern, forced)
    if graph is None:
        return None
    for cid in graph.unvalued_components():
        graph.set_anchor(cid, False)
    return graph.flags()


def shortest_first_last(pattern, forced=()):
    """Like first_last, but spends the slack at the two pattern ends on
    suppressing boundary letters, which minimizes the matched length."""
    if not pattern:
        return {}
    graph = _graph_for(pattern, forced)
    if graph is None:
        return None
    if graph.value_of((pattern[0], START)) is None:
        graph.valuate((pattern[0], START), False)
    if graph.value_of((pattern[-1], END)) is None:
        graph.valuate((pattern[-1], END), False)
    for cid in graph.unvalued_components():
        graph.set_anchor(cid, False)
    return graph.flags()


def count_free_components(pattern, forced=(), boundary_minimize: bool = False):
    """Number of free bits left after forcing; None on a clash.

    With boundary_minimize the two pattern-end flags are pinned first,
    matching what shortest_first_last does.
    """
    if not pattern:
        return 0
    graph = _graph_for(pattern, forced)
    if graph is None:
        return None
    if boundary_minimize:
        if graph.value_of((pattern[0], START)) is None:
            graph.valuate((pattern[0], START), False)
        if graph.value_of((pattern[-1], END)) is None:
            graph.valuate((pattern[-1], END), False)
    return len(graph.unvalued_components())


def solve_by_implication_graph(system: ConstraintSystem):
    """Reference 2-SAT solver over the same systems.

    Each flag becomes a boolean; every xor edge contributes the clauses
    (a or b) and (not a or not b).  Kept independent of AdjacencyGraph
    so the two can be tested against each other.
    """
    bools: dict = {}
    for var in system.variables:
        for side in (END, START):
            bools[(var, side)] = len(bools)
    m = len(bools)

    def lit(vertex, positive: bool) -> int:
        return 2 * bools[vertex] + (0 if positive else 1)

    imp: list[list[int]] = [[] for _ in range(2 * m)]

    def clause(a: int, b: int):
        imp[a ^ 1].append(b)
        imp[b ^ 1].append(a)

    for a, b in system.xor_edges:
        clause(lit(a, True), lit(b, True))
        clause(lit(a, False), lit(b, False))
    for v in system.forced:
        pos = lit(v, True)
        clause(pos, pos)

    total = 2 * m
    comp = [-1] * total
    low = [0] * total
    num = [-1] * total
    counter = 0
    ncomp = 0
    stack: list[int] = []
    on_stack = [False] * total
    for root in range(total):
        if num[root] >= 0:
            continue
        work = [(root, 0)]
        while work:
            v, ptr = work[-1]
            if ptr == 0:
                num[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            if ptr < len(imp[v]):
                work[-1] = (v, ptr + 1)
                u = imp[v][ptr]
                if num[u] < 0:
                    work.append((u, 0))
                elif on_stack[u]:
                    low[v] = min(low[v], num[u])
            else:
                work.pop()
                if work:
                    pv = work[-1][0]
                    low[pv] = min(low[pv], low[v])
                if low[v] == num[v]:
                    while True:
                        u = stack.pop()
                        on_stack[u] = False
                        comp[u] = ncomp
                        if u == v:
                            break
                    ncomp += 1

    for vertex, b in bools.items():
        if comp[2 * b] == comp[2 * b + 1]:
            return None
    flags: BoundaryAssignment = {}
    for var in system.variables:
        # Tarjan pops sink components first, so the smaller id wins
        first = comp[lit((var, START), True)] < comp[lit((var, START), False)]
        last = comp[lit((var, END), True)] < comp[lit((var, END), False)]
        flags[var] = (first, last)
    return flags
