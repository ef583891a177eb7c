"""Bridges, cut vertices, and cycle blocks.

A cycle block is a biconnected component with at least 3 vertices,
i.e. a block of the graph left after deleting all bridges and then all
isolated vertices.  Disconnected inputs are handled per component and
the results concatenated.
"""

from dataclasses import dataclass

from .graph import Graph
from .oracle import cycle_spectrum


@dataclass(frozen=True)
class Block:
    """One cycle block as an induced-on-its-edges subgraph, in the
    parent graph's vertex ids."""

    vertices: tuple
    edges: tuple

    def adjacency(self):
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def to_graph(self):
        """Dense relabeling of the block; returns (graph, dense->parent
        id mapping)."""
        mapping = list(self.vertices)
        index = {v: i for i, v in enumerate(mapping)}
        edges = []
        for u, v in self.edges:
            a, b = index[u], index[v]
            edges.append((a, b) if a < b else (b, a))
        return Graph(len(mapping), edges), mapping


@dataclass(frozen=True)
class BlockDecomposition:
    bridges: tuple
    cut_vertices: tuple
    cycle_blocks: tuple


def _biconnected_components(vertex_count, adjacency):
    """Iterative Hopcroft-Tarjan.  Returns (edge lists per component,
    articulation points)."""
    disc = [0] * vertex_count  # 0 = unvisited, else 1-based time
    low = [0] * vertex_count
    cuts = set()
    comps = []
    timer = 1
    for root in range(vertex_count):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        frames = [(root, -1, iter(adjacency[root]))]
        estack = []
        root_children = 0
        while frames:
            v, parent, it = frames[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == 0:
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    frames.append((w, v, iter(adjacency[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            frames.pop()
            if frames:
                u = frames[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    comp = []
                    while True:
                        e = estack.pop()
                        comp.append(e)
                        if e == (u, v):
                            break
                    comps.append(comp)
                    if u == root:
                        root_children += 1
                    else:
                        cuts.add(u)
        if root_children > 1:
            cuts.add(root)
    return comps, cuts


def decompose(g):
    """Full decomposition: bridges, cut vertices, and cycle blocks
    ordered by least contained vertex."""
    comps, cuts = _biconnected_components(g.vertex_count, g.adjacency)
    bridges_ = []
    blocks = []
    for comp in comps:
        if len(comp) == 1:
            u, v = comp[0]
            bridges_.append((u, v) if u < v else (v, u))
            continue
        verts = set()
        edges = []
        for u, v in comp:
            verts.add(u)
            verts.add(v)
            edges.append((u, v) if u < v else (v, u))
        blocks.append(Block(tuple(sorted(verts)), tuple(sorted(edges))))
    blocks.sort(key=lambda b: b.vertices[0])
    return BlockDecomposition(
        bridges=tuple(sorted(bridges_)),
        cut_vertices=tuple(sorted(cuts)),
        cycle_blocks=tuple(blocks),
    )


def bridges(g):
    """Edges contained in no cycle."""
    return decompose(g).bridges


def blockwise_spectrum_check(g, budget=None):
    """Test utility: whole-graph cycle spectrum equals the union of the
    per-block spectra."""
    whole = set(cycle_spectrum(g, budget).lengths)
    union = set()
    for block in decompose(g).cycle_blocks:
        sub, _ = block.to_graph()
        union.update(cycle_spectrum(sub, budget).lengths)
    return whole == union
