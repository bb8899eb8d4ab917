"""Verdict table of the known-nonexistence oracle.

For odd girth, a uniform per-vertex count within (k-1)/2 of the maximum
k(k-1)^floor(g/2)/2 is impossible; at the maximum itself only a short list
of degree/girth pairs admits a graph.
"""
from girthlab import known_nonexistence, vertex_cycle_bound


def main():
    print(f"{'k':>3} {'g':>3} {'lambda':>8} {'bound':>7}  verdict")
    print("-" * 60)
    for k in (3, 4, 5, 7):
        for g in (3, 5, 7):
            bound = vertex_cycle_bound(k, g)
            lams = sorted({bound, bound - 1, bound - (k - 1) // 2, max(0, bound - k)})
            for lam in lams:
                v = known_nonexistence(k, g, lam)
                rule = "" if v.rule.value == "None" else f" [{v.rule.value}]"
                print(f"{k:>3} {g:>3} {lam:>8} {bound:>7}  {v.status.value}{rule}")
        print()

    print("the famous open maximum-count case:")
    v = known_nonexistence(57, 5, vertex_cycle_bound(57, 5))
    print(f"  k=57 g=5 lambda={vertex_cycle_bound(57, 5)}: {v.status.value} ({v.detail})")


if __name__ == "__main__":
    main()
