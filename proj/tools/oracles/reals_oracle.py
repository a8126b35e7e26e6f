#!/usr/bin/env python3
"""Independent reference for the exact-real constructions.

Recomputes the rational enumeration, the convergence-forcing transform, the
binary-cell map and the trisection from their definitions using Fraction.
"""

from fractions import Fraction


_CW = [Fraction(1)]


def calkin_wilf(k: int) -> Fraction:
    """k-th positive rational (k >= 1) in Calkin-Wilf order."""
    while len(_CW) < k:
        q = _CW[-1]
        _CW.append(1 / (2 * (q.numerator // q.denominator) - q + 1))
    return _CW[k - 1]


def rat_enum(i: int) -> Fraction:
    """0 first, then sign-interleaved Calkin-Wilf: +cw(k) at 2k-1, -cw(k) at 2k."""
    if i == 0:
        return Fraction(0)
    k, pos = (i + 1) // 2, i % 2 == 1
    q = calkin_wilf(k)
    return q if pos else -q


def index_of(q: Fraction) -> int:
    i = 0
    while rat_enum(i) != q:
        i += 1
        assert i < 1000000
    return i


def converge_force(alpha, steps: int):
    """Indices (phi|alpha)(0..steps-1): start at index 0, accept alpha(n+1)
    iff |q_alpha(n+1) - q_current| <= 2^-n, else repeat the current index."""
    phi = [0]
    for n in range(steps - 1):
        cand = alpha(n + 1)
        if abs(rat_enum(cand) - rat_enum(phi[n])) <= Fraction(1, 2**n):
            phi.append(cand)
        else:
            phi.append(phi[n])
    return phi


def binary_cell(s):
    lo, hi = Fraction(0), Fraction(1)
    for b in s:
        mid = (lo + hi) / 2
        lo, hi = (lo, mid) if b == 0 else (mid, hi)
    return lo, hi


def trisect(s):
    lo, hi = Fraction(0), Fraction(1)
    for b in s:
        if b == 0:
            hi = lo / 3 + 2 * hi / 3
        else:
            lo = 2 * lo / 3 + hi / 3
    return lo, hi


def main() -> None:
    print("rat_enum 0..12:", [str(rat_enum(i)) for i in range(13)])
    # no repetitions over a sizeable prefix
    seen = set()
    for i in range(5000):
        q = rat_enum(i)
        assert q not in seen
        seen.add(q)
    print("rat_enum injective on 0..4999 ok")
    print("index_of(0) =", index_of(Fraction(0)))
    print("index_of(2) =", index_of(Fraction(2)))
    print("index_of(1/2) =", index_of(Fraction(1, 2)))
    print("index_of(3/4) =", index_of(Fraction(3, 4)))
    print("index_of(7/8) =", index_of(Fraction(7, 8)))
    print("index_of(1) =", index_of(Fraction(1)))

    # converge_force traces
    a1 = lambda n: index_of(Fraction(2)) if n == 1 else 0
    print("force (0,2,0,0,...):", converge_force(a1, 6))

    halves = [Fraction(0), Fraction(1, 2), Fraction(3, 4), Fraction(7, 8), Fraction(15, 16)]
    a2 = lambda n: index_of(halves[min(n, 4)])
    t = converge_force(a2, 5)
    print("force geometric:", t, "->", [str(rat_enum(i)) for i in t])

    # an already-Cauchy index stream is fixed pointwise: 0, 1/2, 3/4, 3/4, ...
    cauchy = [Fraction(0), Fraction(1, 2), Fraction(3, 4)]
    a3 = lambda n: index_of(cauchy[min(n, 2)])
    assert converge_force(a3, 8) == [a3(n) for n in range(8)]
    print("cauchy stream fixed ok:", [a3(n) for n in range(4)])

    # binary cells
    print("B(<>) =", binary_cell([]))
    print("B(<1>) =", binary_cell([1]))
    print("B(<1,0>) =", binary_cell([1, 0]))
    print("B(<0,1>) =", binary_cell([0, 1]))

    # trisection
    print("trisect(<>) =", trisect([]))
    print("trisect(<0>) =", trisect([0]))
    print("trisect(<1>) =", trisect([1]))
    print("trisect(<1,1>) =", trisect([1, 1]))
    from itertools import product

    for k in range(7):
        for s in product((0, 1), repeat=k):
            lo, hi = trisect(s)
            assert hi - lo == Fraction(2, 3) ** k
            if s:
                plo, phi_ = trisect(s[:-1])
                assert plo <= lo and hi <= phi_
    print("trisect widths (2/3)^len and nesting ok to depth 6")
    # sibling overlap: upper of 0-cell > lower of 1-cell
    for k in range(6):
        for s in product((0, 1), repeat=k):
            assert trisect(s + (0,))[1] > trisect(s + (1,))[0]
    print("trisect sibling middle-third overlap ok")


if __name__ == "__main__":
    main()
