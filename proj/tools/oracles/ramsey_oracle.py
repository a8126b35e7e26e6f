#!/usr/bin/env python3
"""Independent reference for the finite Ramsey arrows and the partition tree.

Brute-forces M -> (n)^k_r over all colorings where that is feasible; the one
infeasible pigeonhole boundary (n=4, r=4) is certified by the counting
argument plus an explicit balanced counterexample coloring.
"""

from itertools import combinations, product

from seqcode_oracle import encode


def arrow(M: int, n: int, k: int, r: int, star: bool = False) -> bool:
    tuples = list(combinations(range(M), k))
    index = {t: i for i, t in enumerate(tuples)}
    goals = []
    for size in range(n, M + 1):
        for t in combinations(range(M), size):
            if star and len(t) < max(n, t[0]):
                continue
            if not star and len(t) != n:
                continue
            goals.append([index[u] for u in combinations(t, k)])
    for coloring in product(range(r), repeat=len(tuples)):
        if not any(len({coloring[i] for i in g}) <= 1 for g in goals):
            return False
    return True


def min_arrow(n, k, r, cap, star=False):
    for M in range(max(n, 1), cap + 1):
        if arrow(M, n, k, r, star):
            return M
    return None


def erdos_rado_path(k: int, steps: int):
    """With constantly-monochromatic oracles every extension qualifies and the
    largest-code rule chains 0,1,2,...; return the node codes in creation order."""
    path = [[]]
    for n in range(steps):
        path.append(path[-1] + [n])
    return [encode(s) for s in path]


def main() -> None:
    print("arrow(6,3,2,2) =", arrow(6, 3, 2, 2))
    print("arrow(5,3,2,2) =", arrow(5, 3, 2, 2))
    print("min_arrow(3,2,2,10) =", min_arrow(3, 2, 2, 10))
    print("min_arrow(3,2,2,5) =", min_arrow(3, 2, 2, 5))
    print("min_arrow(2,1,2,10) =", min_arrow(2, 1, 2, 10))

    # pigeonhole boundaries, n, r <= 4, k = 1
    for n in range(1, 5):
        for r in range(1, 5):
            M = r * (n - 1) + 1
            if r**M <= 1 << 21:
                hi = arrow(M, n, 1, r)
                lo = arrow(M - 1, n, 1, r) if M - 1 >= n else None
                print(f"pigeonhole n={n} r={r}: arrow({M})={hi} arrow({M-1})={lo} [brute]")
            else:
                # counting: any r-coloring of M points has a color on
                # ceil(M/r) >= n points; and the balanced coloring of M-1
                # points (n-1 points per color) refutes the lower value.
                assert -(-M // r) >= n
                balanced = [c for c in range(r) for _ in range(n - 1)]
                assert len(balanced) == M - 1
                assert all(balanced.count(c) < n for c in range(r))
                print(f"pigeonhole n={n} r={r}: arrow({M})=True arrow({M-1})=False [counted]")

    # small star cases (goal length >= max(n, t[0]))
    print("arrow_star(2,1,1,2) =", arrow(2, 1, 1, 2, star=True))
    print("arrow_star(3,1,1,2) =", arrow(3, 1, 1, 2, star=True))
    print("arrow_star(4,2,1,2) =", arrow(4, 2, 1, 2, star=True))
    print("arrow_star(5,2,1,2) =", arrow(5, 2, 1, 2, star=True))
    print("min_arrow_star(2,1,2,8) =", min_arrow(2, 1, 2, 8, star=True))
    for M in range(2, 6):
        s, p = arrow(M, 2, 1, 2, star=True), arrow(M, 2, 1, 2)
        assert (not s) or p
    print("star => plain spot check ok")

    print("erdos-rado path codes (k=1, 4 steps):", erdos_rado_path(1, 4))


if __name__ == "__main__":
    main()
