#!/usr/bin/env python3
"""Independent reference for the rational well-order decomposition and probes."""

from fractions import Fraction as F

from reals_oracle import rat_enum, index_of


def decompose_blocks(elems, order):
    """Blocks of the record-keeping decomposition: enumerate elems in the given
    order; an element joins the block of the least running record that
    dominates it (records are the running maxima of the enumeration)."""
    seq = [elems[i] for i in order]
    records = []
    for x in seq:
        if not records or x > records[-1]:
            records.append(x)
    blocks = [[] for _ in records]
    for x in seq:
        j = min(i for i, rec in enumerate(records) if x <= rec)
        blocks[j].append(x)
    return [sorted(b) for b in blocks]


def wf_probe(alpha, gamma):
    vals = [alpha(g) for g in gamma]
    for pos, v in enumerate(vals):
        if v == 0:
            return 0 if pos == 0 else pos - 1
        if pos >= 1 and not (rat_enum(v - 1) < rat_enum(vals[pos - 1] - 1)):
            return pos - 1
    return None


def bar_hit(alpha, steps):
    """First length at which the emitted prefix enters the bar."""
    vals = []
    for i in range(steps):
        vals.append(alpha(i))
        if vals[-1] == 0:
            return len(vals)
        if len(vals) >= 2 and vals[-2] > 0 and not (
            rat_enum(vals[-1] - 1) < rat_enum(vals[-2] - 1)
        ):
            return len(vals)
    return None


def main() -> None:
    print("blocks {1/2,1/3,2} order (1/2,1/3,2):",
          decompose_blocks([F(1, 2), F(1, 3), F(2)], [0, 1, 2]))
    print("blocks {1/2,1/3,2} order (1/3,1/2,2):",
          decompose_blocks([F(1, 2), F(1, 3), F(2)], [1, 0, 2]))
    print("blocks {1/2,1/3,2} order (2,1/2,1/3):",
          decompose_blocks([F(1, 2), F(1, 3), F(2)], [2, 0, 1]))
    fixed = [F(0), F(1), F(-1), F(1, 2), F(-1, 2), F(2), F(-2), F(1, 3)]
    print("fixed 8-element set:", [str(x) for x in fixed])
    print("blocks fixed set, identity order:",
          [[str(x) for x in b] for b in decompose_blocks(fixed, list(range(8)))])

    # wf probes: alpha emits values; value v > 0 denotes rat_enum(v-1)
    a1 = {0: 0}
    print("wf zero at gamma(0):", wf_probe(lambda g: a1.get(g, 1), [0, 1, 2]))
    # emitted 3,5 -> q_2 = -1, q_4 = -1/2: -1 <= -1/2 at n=0
    print("rat_enum(2) =", rat_enum(2), "rat_enum(4) =", rat_enum(4))
    a2 = {0: 3, 1: 5}
    print("wf emitted 3,5:", wf_probe(lambda g: a2.get(g, 0), [0, 1]))
    # strictly descending positive: 1/2 (idx 3), -1/2 (idx 4), -1 (idx 2) -> values 4,5,3
    a3 = {0: 4, 1: 5, 2: 3}
    print("wf descending:", wf_probe(lambda g: a3.get(g, 0), [0, 1, 2]))

    # bar hit: descending then a zero
    a4 = {0: 4, 1: 5, 2: 3}
    print("bar hit (descending then zero):", bar_hit(lambda i: a4.get(i, 0), 10))
    # immediate non-descent: 3 then 5
    a5 = {0: 3, 1: 5}
    print("bar hit (3 then 5):", bar_hit(lambda i: a5.get(i, 9999) if i < 2 else 0, 10))

    print("index_of(1/3) =", index_of(F(1, 3)), "index_of(2) =", index_of(F(2)))


if __name__ == "__main__":
    main()
