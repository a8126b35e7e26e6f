#!/usr/bin/env python3
"""Independent reference for spread-law operations.

Implements the retract / bar-bound / sub-bar semantics directly on Python
lists so the C++ expectations can be frozen from a second route.
"""

from seqcode_oracle import encode


def kary_admit(k: int):
    return lambda s: all(x < k for x in s)


def retract(admit, child, alpha, n):
    """Image of alpha under the spread retraction, first n values.

    Copies alpha(i) while the *original* prefix (alpha(0..i)) stays admitted;
    after the first failure, inadmissibility is hereditary, so every later
    position takes the least admitted child of the retained prefix.
    """
    out = []
    orig = []
    for i in range(n):
        orig.append(alpha(i))
        if admit(orig):
            out.append(alpha(i))
        else:
            m = 0
            while not admit(out + [m]):
                m += 1
                assert m < 10000
            out.append(m)
    return out


def bar_bound_brute(k: int, in_bar, max_depth: int):
    """Least N such that every admitted length-N node has a barred prefix."""
    for N in range(max_depth + 1):
        seqs = [[]]
        for _ in range(N):
            seqs = [s + [c] for s in seqs for c in range(k)]
        if all(any(in_bar(s[:i]) for i in range(len(s) + 1)) for s in seqs):
            return N
    return None


def finite_subbar(k: int, in_bar, max_depth: int):
    """First barred node along each branch, as a set of sequences."""
    out = []

    def walk(s):
        if in_bar(s):
            out.append(s)
            return
        assert len(s) < max_depth, "not barred within depth"
        for c in range(k):
            walk(s + [c])

    walk([])
    return sorted(out, key=encode)


def main() -> None:
    # bar on the binary fan: length >= 3 or a 1 appears
    bar = lambda s: len(s) >= 3 or 1 in s
    print("bar bound (len>=3 or contains 1, binary) =", bar_bound_brute(2, bar, 10))
    sub = finite_subbar(2, bar, 10)
    print("finite subbar =", sub, "codes:", [encode(s) for s in sub])

    # retract of 0,5,1,... into the binary fan
    alpha = lambda i: [0, 5, 1][i] if i < 3 else 0
    print("retract cantor (0,5,1) =", retract(kary_admit(2), None, alpha, 3))

    # identity on members
    beta = lambda i: [1, 0, 1, 1][i % 4]
    print("retract cantor member =", retract(kary_admit(2), None, beta, 8))

    # enumerate counts
    def count_nodes(k, depth):
        return k ** depth

    print("binary depth2 count =", count_nodes(2, 2))
    print("ternary depth3 count =", count_nodes(3, 3))
    # codes of the binary depth-2 level
    lvl = [[a, b] for a in range(2) for b in range(2)]
    print("binary depth2 codes =", sorted(encode(s) for s in lvl))

    # even-only law: admits sequences of even numbers; retract pulls odd -> 0
    even_admit = lambda s: all(x % 2 == 0 for x in s)
    gamma = lambda i: [3, 4, 7][i] if i < 3 else 0
    print("retract even (3,4,7) =", retract(even_admit, None, gamma, 3))

    # singleton spread (only the zero sequence) barred exactly at depth 7
    single_admit = lambda s: all(x == 0 for x in s)
    bar7 = lambda s: len(s) >= 7
    sb = finite_subbar(1, bar7, 10)
    print("singleton subbar codes =", [encode(s) for s in sb])
    print("singleton bar bound =", bar_bound_brute(1, bar7, 10))


if __name__ == "__main__":
    main()
