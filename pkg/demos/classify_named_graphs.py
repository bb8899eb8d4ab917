"""Tour of the classification layer on the named test graphs.

For each graph: order, degree, girth, the three regularity classes
(uniform per-vertex count, uniform signature, uniform per-edge count),
the deficit against the per-vertex maximum, and the counting bounds.
"""
from girthlab import (
    check_bounds,
    classify,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    dodecahedron_graph,
    heawood_graph,
    petersen_graph,
)

GRAPHS = [
    ("petersen", petersen_graph()),
    ("dodecahedron", dodecahedron_graph()),
    ("heawood", heawood_graph()),
    ("complete(4)", complete_graph(4)),
    ("complete_bipartite(3,3)", complete_bipartite_graph(3, 3)),
    ("cycle(7)", cycle_graph(7)),
]


def main():
    for name, g in GRAPHS:
        rep = classify(g)
        print(f"== {name}: n={rep.n}, k={rep.k}, girth={rep.girth}")
        print(f"   vertex-girth-regular: {rep.is_vgr}"
              + (f" with every vertex on {rep.lambda_vertex} girth cycles"
                 if rep.is_vgr else ""))
        if rep.is_gr:
            print(f"   girth-regular with signature {rep.common_signature}")
        if rep.is_egr:
            print(f"   edge-girth-regular with every edge on {rep.lambda_edge} cycles")
        print(f"   per-vertex maximum {rep.vertex_bound}, per-edge maximum "
              f"{rep.edge_bound}, deficit epsilon = {rep.epsilon}")
        print(f"   order exceeds the breadth-first floor by {rep.moore_deficit}")
        for b in check_bounds(g, rep):
            print(f"   bound {b.name}: {b.lhs} {b.relation} {b.rhs} "
                  f"(slack {b.slack}, {'ok' if b.holds else 'VIOLATED'})")
        print()


if __name__ == "__main__":
    main()
