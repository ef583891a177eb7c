"""Ground-truth cycle analysis by exhaustive search.

girth() is polynomial (per-root BFS) and exempt from the budget;
cycle_spectrum() and circumference() enumerate all simple cycles and
are guarded by a SearchBudget.  These are the independent verifiers
for the structural decision procedure.
"""

from collections import deque
from dataclasses import dataclass, field

from .errors import BudgetExceededError, OverBudgetError


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = 14
    max_visited_states: int = 5_000_000

    def validate(self):
        if self.max_vertices <= 0 or self.max_visited_states <= 0:
            raise ValueError("budget fields must be positive")


@dataclass(frozen=True)
class CycleReport:
    """girth/circumference are None for acyclic graphs.  witnesses maps
    each length to the lexicographically least vertex sequence realizing
    a cycle of that length."""

    girth: int | None
    circumference: int | None
    lengths: tuple
    witnesses: dict = field(default_factory=dict)

    @property
    def is_acyclic(self):
        return not self.lengths


def girth(g):
    """Exact girth via per-root BFS, or None if g is a forest.

    For each root, any non-tree edge (x, y) met during BFS closes a
    walk of length dist[x]+dist[y]+1 through the root; every such walk
    contains a cycle no longer than it, and a root on a shortest cycle
    realizes its length exactly, so the minimum over roots is the girth.
    """
    best = None
    adj = g.adjacency
    for root in range(g.vertex_count):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if best is not None and 2 * dx >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dx + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cand = dx + dist[y] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def cycle_spectrum(g, budget=None):
    """Enumerate every simple cycle length with one canonical witness.

    Cycles are deduplicated by rooting each at its least vertex and
    fixing orientation toward the smaller of the two neighbors on the
    cycle; the retained witness per length is the lexicographically
    least one.  Deterministic.
    """
    if budget is None:
        budget = SearchBudget()
    budget.validate()
    n = g.vertex_count
    if n > budget.max_vertices:
        raise OverBudgetError(n, budget.max_vertices)
    adj = g.adjacency
    max_states = budget.max_visited_states
    states = 0
    witnesses = {}

    for root in range(n):
        # DFS over simple paths from root using only vertices > root
        path = [root]
        on_path = {root}
        stack = [iter(adj[root])]
        while stack:
            it = stack[-1]
            advanced = False
            for y in it:
                if y == root:
                    if len(path) >= 3 and path[1] < path[-1]:
                        w = tuple(path)
                        k = len(w)
                        if k not in witnesses or w < witnesses[k]:
                            witnesses[k] = w
                    continue
                if y < root or y in on_path:
                    continue
                states += 1
                if states > max_states:
                    raise BudgetExceededError(states)
                path.append(y)
                on_path.add(y)
                stack.append(iter(adj[y]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                on_path.discard(path.pop())

    lengths = tuple(sorted(witnesses))
    return CycleReport(
        girth=lengths[0] if lengths else None,
        circumference=lengths[-1] if lengths else None,
        lengths=lengths,
        witnesses=witnesses,
    )


def circumference(g, budget=None):
    """Length of the longest cycle, or None if acyclic."""
    return cycle_spectrum(g, budget).circumference
