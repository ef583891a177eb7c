"""Sharp edge-count bounds for graphs whose cycles all share one
length, the extremal constructions achieving them, and arithmetic
certificates that a graph must contain two distinct cycle lengths.

The bounds apply to simple, connected, planar graphs; with a target
cycle length r given they additionally presume some cycle of length r
exists.  certify_distinct is pure arithmetic over (n, m, r);
certify_graph keeps those premises honest for a concrete graph.
"""

from dataclasses import dataclass

from .errors import BadRangeError
from .generators import BookParams, WedgeSpec, book, cycle, path, wedge
from .graph import is_connected
from .oracle import cycle_spectrum

RULE_WITH_R = "single-cycle-length edge bound for known r"
RULE_ANY_R = "single-cycle-length edge bound 2n-4 (any r)"


@dataclass(frozen=True)
class BoundReport:
    """Maximum edge count over connected n-vertex graphs whose cycle
    spectrum is {r} (r = None: maximum over all r, which is 2n-4).

    For even r, p and c are the extremal book page count and tail path
    length; for odd r they are the cycle count and tail path length."""

    n: int
    r: int | None
    bound: int
    p: int | None = None
    c: int | None = None


@dataclass(frozen=True)
class Certificate:
    n: int
    m: int
    r: int | None
    verdict: str  # "must_contain_distinct_lengths" | "inconclusive"
    cited_bound: int
    rule: str


def max_edges(n, r):
    """Edge bound for vertex count n and common cycle length r."""
    if r < 3:
        raise BadRangeError(f"cycle length {r} < 3")
    if n < r:
        raise BadRangeError(f"an {r}-cycle does not fit in {n} vertices")
    if r % 2 == 0:
        if n < 4:
            raise BadRangeError(f"even-r bound needs n >= 4, got {n}")
        half = r // 2
        p = (n - half - 1) // (half - 1)
        c = n - 2 - (half - 1) * (p + 1)
        return BoundReport(n, r, n - 1 + p, p, c)
    if n < 3:
        raise BadRangeError(f"odd-r bound needs n >= 3, got {n}")
    p = (n - 1) // (r - 1)
    c = n - 1 - p * (r - 1)
    return BoundReport(n, r, n - 1 + p, p, c)


def max_edges_any_r(n):
    """Edge bound 2n-4, independent of the common cycle length."""
    if n < 4:
        raise BadRangeError(f"bound needs n >= 4, got {n}")
    return BoundReport(n, None, 2 * n - 4)


def extremal(n, r):
    """A connected n-vertex graph with max_edges(n, r).bound edges and
    every cycle of length r.

    Even r: B(r/2, r, p) wedged with a path of length c.  Odd r: p
    copies of C_r and a path of length c, all wedged at one vertex.
    c = 0 wedges a single vertex, a no-op.
    """
    rep = max_edges(n, r)
    if r % 2 == 0:
        summands = (book(BookParams(r // 2, r, rep.p)), path(rep.c))
    else:
        summands = tuple([cycle(r)] * rep.p) + (path(rep.c),)
    return wedge(WedgeSpec(summands))


def certify_distinct(n, m, r=None):
    """Arithmetic certificate: a simple, connected, planar n-vertex
    graph with m edges (and, if r is given, a cycle of length r) must
    contain two cycles of different lengths whenever m exceeds the
    applicable bound."""
    if m < 0:
        raise BadRangeError(f"negative edge count {m}")
    if r is None:
        rep = max_edges_any_r(n)
        rule = RULE_ANY_R
    else:
        rep = max_edges(n, r)
        rule = RULE_WITH_R
    verdict = (
        "must_contain_distinct_lengths" if m > rep.bound else "inconclusive"
    )
    return Certificate(n, m, r, verdict, rep.bound, rule)


def certify_graph(g, r=None, budget=None):
    """Certificate for a concrete graph, with premises checked: the
    graph must be connected, and when r is given some cycle of length r
    must exist (verified via the oracle)."""
    if not is_connected(g):
        raise BadRangeError("certificate premises require a connected graph")
    if r is not None:
        report = cycle_spectrum(g, budget)
        if r not in report.lengths:
            raise BadRangeError(f"graph has no cycle of length {r}")
    return certify_distinct(g.vertex_count, g.edge_count, r)
