#!/usr/bin/env python3
"""Independent reference for the interval-measure operations.

Open-interval semantics throughout: degenerate segments vanish, touching
segments stay separate (their shared endpoint is in neither open set).
"""

from fractions import Fraction as F


def neaten(pairs):
    ps = sorted((p for p in pairs if p[0] < p[1]))
    out = []
    for lo, hi in ps:
        if out and lo < out[-1][1]:  # strict overlap only
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return out


def mu(pairs):
    return sum((hi - lo for lo, hi in neaten(pairs)), F(0))


def intersect(p1, p2):
    lo, hi = max(p1[0], p2[0]), min(p1[1], p2[1])
    return (lo, hi) if lo < hi else (F(0), F(0))


def localize(pairs, q, r):
    return [intersect(p, (q, r)) for p in pairs]


def cover_decision(pairs, q, r, n):
    # exact mu here; the artifact uses a modulus-backed approximant
    approx = mu(localize(pairs, q, r))
    return "CoversMoreThan" if approx > (1 - F(1, n)) * (r - q) else "NeverCovers"


def level_cut(values, m, q, r, n):
    span = r - q
    l = 0
    while not (F(1, 2**l) < span / 2 ** (n + 1)):
        l += 1
    w = F(1, 2**l)
    j0 = 0
    while not (r < q + (j0 + 1) * w):
        j0 += 1
    classes = [[] for _ in range(j0)]
    for i, u in enumerate(values):
        off = (u - q) / w
        if off < 0:
            continue
        cls = off.numerator // off.denominator
        if cls >= j0:
            continue
        classes[cls].append(i)
    j1 = min(range(j0), key=lambda j: (len(classes[j]), j))
    s = q + j1 * w + w / 4
    t = q + (j1 + 1) * w - w / 4
    return l, j0, j1, s, t, classes[j1]


def main() -> None:
    print("neaten [(0,1/2),(1/4,3/4)] =", neaten([(F(0), F(1, 2)), (F(1, 4), F(3, 4))]))
    print("neaten [(0,1/2),(1/2,1)] =", neaten([(F(0), F(1, 2)), (F(1, 2), F(1))]))
    print("mu [(0,1/2),(1/4,3/4)] =", mu([(F(0), F(1, 2)), (F(1, 4), F(3, 4))]))
    print("mu dup [(0,1),(0,1)] =", mu([(F(0), F(1)), (F(0), F(1))]))
    print("intersect (0,1/2)x(1/4,3/4) =", intersect((F(0), F(1, 2)), (F(1, 4), F(3, 4))))
    print("intersect (0,1/4)x(1/2,1) =", intersect((F(0), F(1, 4)), (F(1, 2), F(1))))

    # localization additivity spot check
    a = [(F(0), F(1, 3)), (F(1, 4), F(2, 3)), (F(3, 4), F(7, 8))]
    q, p, r = F(1, 8), F(1, 2), F(13, 16)
    lhs = mu(localize(a, q, r))
    rhs = mu(localize(a, q, p)) + mu(localize(a, p, r))
    print("localize additivity:", lhs, "=", rhs, lhs == rhs)
    print("localize (0,1)->(0,1/2) mu =", mu(localize([(F(0), F(1))], F(0), F(1, 2))))

    print("cover full/2 =", cover_decision([(F(0), F(1))], F(0), F(1), 2))
    print("cover empty =", cover_decision([], F(0), F(1), 2))

    # splitting: NeverCovers on (q,r) -> NeverCovers on one half
    half = [(F(0), F(1, 3))]
    whole = cover_decision(half, F(0), F(1), 3)
    left = cover_decision(half, F(0), F(1, 2), 3)
    right = cover_decision(half, F(1, 2), F(1), 3)
    print("split:", whole, left, right)

    # integral estimate consistency arithmetic
    print("|0.5-0.8| =", abs(F(1, 2) - F(4, 5)), "; acc2 bound", F(1, 4) + F(1, 4), "; acc3 bound",
          F(1, 8) + F(1, 8))

    # level cut: f == 0 on (1/4, 3/4), n = 2
    print("level_cut f=0:", level_cut([F(0), F(0)], 1, F(1, 4), F(3, 4), 2))
    # f two-valued -1/2, 1/2 on halves, window (-1/4, 1/4), n = 2
    print("level_cut two-valued:", level_cut([F(-1, 2), F(1, 2)], 1, F(-1, 4), F(1, 4), 2))
    # a crowded case where the pigeonhole has to pick a nonzero class:
    # 8 cells, values packed into slab 0 except two in slab 1
    vals = [F(1, 4) + F(1, 1024) * i for i in range(8)]
    print("level_cut crowded:", level_cut(vals, 3, F(1, 4), F(3, 4), 2))

    # complement-fan cover arithmetic: widths of the rational shrink cover
    n = 2
    widths = [2 * F(1, 2 ** (n + a + 3)) for a in range(10)]
    print("shrink cover total (n=2, 10 terms) =", sum(widths), "< 2^-(n+1) =", F(1, 2 ** (n + 1)))


if __name__ == "__main__":
    main()
