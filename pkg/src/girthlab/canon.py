"""Canonical labelling by equitable-partition refinement with backtracking
over cells.

The certificate is the lexicographically minimal adjacency bitstring over
all labellings consistent with the refinement tree; equal certificates
characterise isomorphic graphs because the certificate reconstructs the
graph.  Discovered automorphisms prune branches that fix the current
individualisation prefix.
"""
from __future__ import annotations

from typing import Sequence

from .core import Graph, bits, graph_from_rows


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts into every
    cell until stable.  Cell order is invariant under isomorphism (new
    cells sort by their count signature within the parent position)."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((rows[v] & m).bit_count() for m in masks)
                buckets.setdefault(key, []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(buckets):
                    new_cells.append(buckets[key])
        cells = new_cells
        if not changed:
            return cells


def _certificate(rows: Sequence[int], order: Sequence[int]) -> int:
    """Upper-triangle adjacency bits (column-major) of the relabelled
    graph, packed into one int."""
    acc = 0
    for j in range(1, len(order)):
        row_j = rows[order[j]]
        for i in range(j):
            acc = acc << 1 | (row_j >> order[i] & 1)
    return acc


_MAX_STORED_AUTS = 256


def canonize(
    rows: Sequence[int], colors: Sequence[object] | None = None
) -> tuple[tuple[int, ...], int]:
    """Return (order, certificate) minimising the adjacency bitstring.

    ``order[p]`` is the original vertex placed at position p.  `colors`
    is an optional isomorphism-invariant per-vertex value (for example
    girth-cycle counts); vertices are pre-partitioned by it, which keeps
    the backtracking tree small on rigid graphs.
    """
    n = len(rows)
    if n == 0:
        return (), 0
    if colors is None:
        colors = [rows[v].bit_count() for v in range(n)]
    groups: dict[object, list[int]] = {}
    for v in range(n):
        groups.setdefault(colors[v], []).append(v)
    cells = [groups[c] for c in sorted(groups)]

    best_cert: int | None = None
    best_order: tuple[int, ...] | None = None
    auts: list[tuple[int, ...]] = []

    def descend(cells: list[list[int]], prefix: tuple[int, ...]) -> None:
        nonlocal best_cert, best_order
        cells = _refine(rows, cells)
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = idx
        if target is None:
            order = tuple(c[0] for c in cells)
            cert = _certificate(rows, order)
            if best_cert is None or cert < best_cert:
                best_cert, best_order = cert, order
            elif cert == best_cert and order != best_order:
                gamma = [0] * n
                for p in range(n):
                    gamma[best_order[p]] = order[p]
                gamma = tuple(gamma)
                if len(auts) < _MAX_STORED_AUTS and gamma not in auts:
                    auts.append(gamma)
            return
        cell = cells[target]
        tried: list[int] = []
        reached: set[int] = set()
        for v in cell:
            # Orbit pruning: v equivalent to an already-tried candidate
            # under automorphisms that fix the individualisation prefix.
            if v in reached:
                continue
            child = (
                cells[:target]
                + [[v], [w for w in cell if w != v]]
                + cells[target + 1:]
            )
            descend(child, prefix + (v,))
            tried.append(v)
            fixers = [gamma for gamma in auts if all(gamma[x] == x for x in prefix)]
            reached = set(tried)
            grew = True
            while grew:
                grew = False
                for gamma in fixers:
                    for u in list(reached):
                        if gamma[u] not in reached:
                            reached.add(gamma[u])
                            grew = True

    descend(cells, ())
    assert best_order is not None
    return best_order, best_cert


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph with original vertex ``order[p]`` renamed to p."""
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    new_rows = [0] * g.n
    for i in range(g.n):
        r = 0
        for j in bits(g.rows[order[i]]):
            r |= 1 << pos[j]
        new_rows[i] = r
    return graph_from_rows(new_rows)


def canonical_graph6(g: Graph, colors: Sequence[object] | None = None) -> str:
    """graph6 line of the canonically relabelled graph: the dedup key for
    isomorphism classes."""
    from .formats import write_graph6

    order, _ = canonize(g.rows, colors=colors)
    return write_graph6(relabel(g, order))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    return canonical_graph6(g1) == canonical_graph6(g2)
