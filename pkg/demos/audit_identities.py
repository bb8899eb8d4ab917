"""Walk through the girth-5 counting-identity audit on the dodecahedron.

The dodecahedron is vertex-girth-regular with 3 shortest cycles through
every vertex, so the deficit quantity is 2e = k(k-1)^2 - 2*3 = 6: exactly
6 edges must leave every vertex's second shell.  The audit measures that,
scans for common-neighbour containment violations, partitions the second
shell of every distance-3 vertex, and evaluates each relation with exact
numbers.  Forging the count shifts the expected values and flips records.
"""
from girthlab import audit_case_b, audit_gprime_degree, audit_graph, dodecahedron_graph


def main():
    g = dodecahedron_graph()

    report = audit_graph(g)
    print(f"audit with the true count 3: all_passed = {report.all_passed}")
    print(f"  outer-edge audits: {len(report.outer)} roots, "
          f"all found {report.outer[0].outer_edges_found} boundary edges")
    print(f"  containment property holds at every root: "
          f"{all(m.holds for m in report.main_property)}")
    print(f"  second-stage pairs audited: {len(report.case_b)}; "
          f"pairs beyond distance 3 skipped: {report.far_pairs}")

    print("\none pair in detail (root 0, vertex 3):")
    part = audit_case_b(g, 0, 3, 3)
    print(f"  distinguished second-shell neighbour v' = {part.v_prime}, "
          f"its first-shell contact u1 = {part.u1}")
    print(f"  V_B = {part.v_b}  (through v': {part.v_b_prime}, other: {part.v_b_second})")
    print(f"  V_C = {part.v_c}  (through v': {part.v_c_prime}, other: {part.v_c_second})")
    print(f"  leaf sets of the remaining branches: {part.leaf_sets}")
    print(f"  5-cycles through vertex 3: Y = {part.y}")
    for rec in part.records:
        ctx = f"  [{rec.context}]" if rec.context else ""
        print(f"    {rec.name:<16} {rec.lhs} {rec.relation} {rec.rhs}"
              f"  {'ok' if rec.holds else 'FAILS'}{ctx}")

    print("\nbranch-pair multiplicities at root 0:")
    gp = audit_gprime_degree(g, 0, 1, 3)
    for row in gp.matrix:
        print("   ", row)
    for rec in gp.records:
        print(f"    {rec.name:<16} {rec.lhs} {rec.relation} {rec.rhs}"
              f"  {'ok' if rec.holds else 'FAILS'}")

    print("\nforging the count to 4 (deficit would be 4, not 6):")
    forged = audit_graph(g, lam=4)
    print(f"  all_passed = {forged.all_passed}")
    print(f"  first failure: {forged.first_failure}")


if __name__ == "__main__":
    main()
