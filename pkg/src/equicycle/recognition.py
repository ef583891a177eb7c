"""Decide whether every cycle of a graph has the same length.

Each cycle block must be a single cycle C_r, or (for even r) a
generalized book B(r/2, r, p): p+1 internally disjoint paths of equal
length r/2 between two hub vertices.  Any other block shape, or two
blocks implying different r, forces two distinct cycle lengths.  The
decision itself is polynomial; explicit witness cycles are produced on
request, falling back to the exhaustive oracle only for blocks it can
afford.
"""

from dataclasses import dataclass, field

from .decomposition import decompose
from .errors import NotABlockError, NotRejectedError, OverBudgetError
from .graph import connected_components
from .oracle import SearchBudget, cycle_spectrum


@dataclass(frozen=True)
class CycleShape:
    """Block is the plain cycle C_r."""

    r: int


@dataclass(frozen=True)
class BookShape:
    """Block is B(k, 2k, p): p+1 disjoint length-k paths between two
    hubs; every cycle in it has length 2k."""

    k: int
    p: int

    @property
    def r(self):
        return 2 * self.k


@dataclass(frozen=True)
class OtherShape:
    """Block matches neither accepted shape; reason is one of
    degree-profile, unequal-path-lengths, endpoints-adjacent-structure,
    count-mismatch."""

    reason: str

    r = None


@dataclass(frozen=True)
class AllCyclesEqual:
    r: int
    shapes: tuple
    notes: tuple = ()


@dataclass(frozen=True)
class DistinctLengths:
    """witness_status is 'exact' when two concrete cycles of distinct
    lengths are attached, 'decision-only' otherwise."""

    witness_a: tuple | None = None
    witness_b: tuple | None = None
    witness_status: str = "decision-only"
    shapes: tuple = ()
    notes: tuple = ()


@dataclass(frozen=True)
class Acyclic:
    notes: tuple = ()


def _hub_chains(block, adj, a, b):
    """Walk every maximal degree-2 chain leaving hub a.  Returns a list
    of vertex sequences a..endpoint, or None if some chain misbehaves
    (does not end at b, or revisits)."""
    chains = []
    for w in adj[a]:
        chain = [a, w]
        prev, cur = a, w
        while len(adj[cur]) == 2:
            x, y = adj[cur]
            nxt = y if x == prev else x
            chain.append(nxt)
            prev, cur = cur, nxt
            if len(chain) > len(block.vertices) + 1:
                return None
        if cur != b:
            return None
        chains.append(chain)
    return chains


def _classify(block, check=False):
    adj = block.adjacency()
    if check:
        _require_block(block, adj)
    m = len(block.vertices)
    degs = [len(adj[v]) for v in block.vertices]
    if all(d == 2 for d in degs):
        # connected 2-regular block: a single cycle
        return CycleShape(m)
    hubs = [v for v in block.vertices if len(adj[v]) > 2]
    if len(hubs) != 2:
        return OtherShape("degree-profile")
    a, b = hubs
    if len(adj[a]) != len(adj[b]) or any(d not in (2, len(adj[a])) for d in degs):
        return OtherShape("degree-profile")
    chains = _hub_chains(block, adj, a, b)
    if chains is None:
        return OtherShape("count-mismatch")
    lens = [len(c) - 1 for c in chains]
    interior = sum(k - 1 for k in lens)
    if interior + 2 != m:
        return OtherShape("count-mismatch")
    if len(set(lens)) > 1:
        if 1 in lens:
            return OtherShape("endpoints-adjacent-structure")
        return OtherShape("unequal-path-lengths")
    k = lens[0]
    # equal lengths with k = 1 would need parallel edges; unreachable in
    # a simple graph, kept as a guard
    if k < 2:
        return OtherShape("endpoints-adjacent-structure")
    return BookShape(k, len(adj[a]) - 1)


def _require_block(block, adj):
    """Defensive 2-connectivity check for externally supplied blocks."""
    if len(block.vertices) < 3:
        raise NotABlockError("cycle blocks have at least 3 vertices")
    if any(len(adj[v]) < 2 for v in block.vertices):
        raise NotABlockError("vertex of degree < 2 in block")
    # connectivity + no cut vertex, checked by vertex deletion; blocks
    # are small enough that the quadratic cost does not matter here
    verts = block.vertices
    for skip in (None, *verts):
        remaining = [v for v in verts if v != skip]
        seen = {remaining[0]}
        stack = [remaining[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y != skip and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(remaining):
            raise NotABlockError(
                "block is disconnected" if skip is None
                else f"block has cut vertex {skip}"
            )


def classify_block(block):
    """Classify one cycle block as CycleShape, BookShape or OtherShape.

    Raises NotABlockError when the argument is not 2-connected.
    """
    return _classify(block, check=True)


def _cycle_witness(block):
    """Vertex sequence of a CycleShape block, canonical start/direction."""
    adj = block.adjacency()
    start = block.vertices[0]
    seq = [start, min(adj[start])]
    while True:
        x, y = adj[seq[-1]]
        nxt = y if x == seq[-2] else x
        if nxt == start:
            return tuple(seq)
        seq.append(nxt)


def _chain_pair_cycle(c1, c2):
    """Simple cycle from two hub-to-hub chains (shared endpoints only)."""
    return tuple(c1[:-1] + list(reversed(c2[1:])))


def _book_witness(block):
    adj = block.adjacency()
    a, b = [v for v in block.vertices if len(adj[v]) > 2][:2]
    chains = _hub_chains(block, adj, a, b)
    return _chain_pair_cycle(chains[0], chains[1])


def _theta_witness_pair(block):
    """Two cycles of distinct lengths from a two-hub block with unequal
    chain lengths, or None if the block has no such structure."""
    adj = block.adjacency()
    hubs = [v for v in block.vertices if len(adj[v]) > 2]
    if len(hubs) != 2:
        return None
    chains = _hub_chains(block, adj, hubs[0], hubs[1])
    if chains is None or sum(len(c) - 2 for c in chains) + 2 != len(block.vertices):
        return None
    chains.sort(key=len)
    if len(chains[0]) == len(chains[-1]):
        return None
    shortest, longest = chains[0], chains[-1]
    third = next(c for c in chains if c is not shortest and c is not longest)
    return (
        _chain_pair_cycle(shortest, third),
        _chain_pair_cycle(longest, third),
    )


def _oracle_witness_pair(block, budget):
    try:
        sub, mapping = block.to_graph()
        report = cycle_spectrum(sub, budget)
    except OverBudgetError:
        return None
    if len(report.lengths) < 2:
        return None
    lo = report.witnesses[report.lengths[0]]
    hi = report.witnesses[report.lengths[-1]]
    return (
        tuple(mapping[v] for v in lo),
        tuple(mapping[v] for v in hi),
    )


def _shape_cycle(block, shape):
    if isinstance(shape, CycleShape):
        return _cycle_witness(block)
    if isinstance(shape, BookShape):
        return _book_witness(block)
    return None


def _witness_pair(blocks, shapes, budget):
    """Find two simple cycles of distinct lengths, or None."""
    # a single misshapen block always contains both lengths
    for block, shape in zip(blocks, shapes):
        if not isinstance(shape, OtherShape):
            continue
        pair = _theta_witness_pair(block)
        if pair is None:
            pair = _oracle_witness_pair(block, budget)
        if pair is not None:
            return pair
    # otherwise two well-shaped blocks disagree on r
    by_r = {}
    for block, shape in zip(blocks, shapes):
        if shape.r is not None and shape.r not in by_r:
            by_r[shape.r] = _shape_cycle(block, shape)
    if len(by_r) >= 2:
        rs = sorted(by_r)
        return by_r[rs[0]], by_r[rs[-1]]
    return None


def decide(g, budget=None, witnesses=False, decomposition=None):
    """The main decision procedure.

    Returns AllCyclesEqual(r, ...) iff every cycle block is C_r or
    B(r/2, r, p) for one common r, Acyclic when there are no cycle
    blocks, and DistinctLengths otherwise.  The decision never
    enumerates cycles; pass witnesses=True to also extract a concrete
    pair of unequal cycles on rejection (oracle fallback is budgeted,
    status 'decision-only' if it cannot afford one).
    """
    decomp = decomposition if decomposition is not None else decompose(g)
    notes = ()
    if len(connected_components(g)) > 1:
        notes = ("input is disconnected; decided over all components",)
    blocks = decomp.cycle_blocks
    if not blocks:
        return Acyclic(notes)
    shapes = tuple(_classify(b) for b in blocks)
    rs = {s.r for s in shapes}
    if None not in rs and len(rs) == 1:
        return AllCyclesEqual(rs.pop(), shapes, notes)
    if witnesses:
        pair = _witness_pair(blocks, shapes, budget or SearchBudget())
        if pair is not None:
            a, b = pair
            if len(a) > len(b):
                a, b = b, a
            return DistinctLengths(a, b, "exact", shapes, notes)
    return DistinctLengths(None, None, "decision-only", shapes, notes)


def extract_witnesses(g, shapes=None, budget=None, decomposition=None):
    """Two simple cycles of distinct lengths for a rejected graph.

    Returns ((cycle_a, cycle_b), status).  Raises NotRejectedError when
    the graph is accepted or acyclic.
    """
    decomp = decomposition if decomposition is not None else decompose(g)
    blocks = decomp.cycle_blocks
    if shapes is None:
        shapes = tuple(_classify(b) for b in blocks)
    rs = {s.r for s in shapes}
    if not blocks or (None not in rs and len(rs) == 1):
        raise NotRejectedError("graph does not contain two distinct cycle lengths")
    pair = _witness_pair(blocks, shapes, budget or SearchBudget())
    if pair is None:
        return None, "decision-only"
    a, b = pair
    if len(a) > len(b):
        a, b = b, a
    return (a, b), "exact"
