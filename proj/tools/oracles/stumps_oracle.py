#!/usr/bin/env python3
"""Independent reference for stump games.

Stumps are nested lists: [] is the basic stump (only the empty sequence);
a nonempty list is a node whose child at label l is subs[unpair(l)[1] % len].
Positions stay inside the stump until a move is made from a basic node, so
finished plays are exactly one step past a basic node.

Player one moves at even lengths; one wins a finished play p iff
(len(p) even and alpha(p) == 0) or (len(p) odd and alpha(p) != 0).
"""

from seqcode_oracle import encode, unpair


def child(stump, label):
    return stump[unpair(label)[1] % len(stump)]


def contains(stump, s):
    cur = stump
    for e in s:
        if cur == []:
            return False
        cur = child(cur, e)
    return True


def border(stump, s):
    return not contains(stump, s) and all(contains(stump, s[:i]) for i in range(len(s)))


def one_wins(alpha, pos):
    v = alpha(tuple(pos))
    return v == 0 if len(pos) % 2 == 0 else v != 0


def play(stump, alpha, sigma, tau):
    pos = []
    while contains(stump, pos):
        mover = sigma if len(pos) % 2 == 0 else tau
        pos = pos + [mover(tuple(pos))]
    return pos, one_wins(alpha, pos)


def solve(stump, alpha, alphabet, pos=(), node=None):
    """True iff player one wins from pos with both players' moves < alphabet."""
    node = stump if node is None else node
    if node == []:
        # every move finishes the play
        outcomes = [one_wins(alpha, list(pos) + [m]) for m in range(alphabet)]
    else:
        outcomes = [
            solve(stump, alpha, alphabet, pos + (m,), child(node, m)) for m in range(alphabet)
        ]
    if len(pos) % 2 == 0:  # player one to move
        return any(outcomes)
    return all(outcomes)


def main() -> None:
    basic = []
    node1 = [basic]  # Node([1*])

    # endpoints
    print("endpoint(1*, <>) =", contains(basic, []) and not contains(basic, [0]))
    print("endpoint(Node([1*]), <>) =", contains(node1, []) and not contains(node1, [0]))
    print(
        "endpoint(Node([1*]), <pair(0,0)>) =",
        contains(node1, [0]) and not contains(node1, [0, 0]),
    )

    # borders
    print("border(1*, <7>) =", border(basic, [7]))
    print("border(1*, <>) =", border(basic, []))
    # the empty stump is handled separately in C++ (contains nothing)

    # plays
    pos, win = play(basic, lambda p: 1 if p == (3,) else 0, lambda p: 3, lambda p: 0)
    print("play 1*, sigma=3, alpha(3)=1 ->", pos, "one wins:", win)
    pos, win = play(node1, lambda p: 0, lambda p: 2, lambda p: 5)
    print("play Node([1*]) alpha=0 ->", pos, "len", len(pos), "one wins:", win)

    # canonical payoffs
    eps = lambda p: (1 if len(p) % 2 else 0) if border(basic, list(p)) else 0
    ast = lambda p: (0 if len(p) % 2 else 1) if border(basic, list(p)) else 0
    print("eps*_{1*}(<5>) =", eps((5,)))
    print("alpha*_{1*}(<5>) =", ast((5,)), " alpha*_{1*}(<>) =", ast(()))
    print("solve(1*, eps*, alphabet 4) one wins:", solve(basic, eps, 4))
    print("solve(1*, alpha*, alphabet 4) one wins:", solve(basic, ast, 4))

    # depth-2 stump: Node([Node([1*])]) — plays have length 3 (odd borders)
    node2 = [node1]
    alpha_one = lambda p: 1  # nonzero at odd borders: player one wins
    print("solve(depth2, alpha=1, alphabet 2):", solve(node2, alpha_one, 2))
    alpha_zero = lambda p: 0
    print("solve(depth2, alpha=0, alphabet 2):", solve(node2, alpha_zero, 2))

    # mixed: depth-2 where one wins only under some moves
    alpha_mix = lambda p: 1 if len(p) == 3 and p[0] == 1 and p[2] == 1 else 0
    print("solve(depth2, alpha_mix, alphabet 2):", solve(node2, alpha_mix, 2))
    # witness chain: sigma(<>) = 1, any tau move m, sigma(<1,m>) = 1
    ok = all(one_wins(alpha_mix, [1, m, 1]) for m in range(2))
    print("  explicit strategy (1, *, 1) wins:", ok)

    # reduce_basic equivalence, brute force: alpha support <= 4, values < 3
    def phi(beta, alpha_vals):
        def payoff(p):
            if len(p) != 1:
                return 0
            n = p[0]
            return beta(tuple(alpha_vals[:n])) if n <= len(alpha_vals) else beta(
                tuple(alpha_vals) + (0,) * (n - len(alpha_vals))
            )

        return payoff

    import itertools

    beta = lambda prefix: 1 if sum(prefix) % 3 == 1 else 0
    mismatch = 0
    for vals in itertools.product(range(3), repeat=4):
        # alpha in G_beta iff some prefix of alpha hits beta != 0 (indices 0..6)
        seq = list(vals) + [0, 0, 0]
        in_g = any(beta(tuple(seq[:n])) != 0 for n in range(7))
        pay = phi(beta, seq)
        in_e = any(pay((n,)) != 0 for n in range(7))
        if in_g != in_e:
            mismatch += 1
    print("reduce_basic equivalence mismatches:", mismatch)

    # exhaustive stump family used by the acceptance gate: all hrs stumps of
    # height <= 3 with sub-lists of length <= 2
    def gen(h):
        if h == 0:
            return [[]]
        smaller = gen(h - 1)
        out = list(smaller)
        for a in smaller:
            out.append([a])
            for b in smaller:
                out.append([a, b])
        # dedupe structurally
        seen, uniq = set(), []
        for s in out:
            key = repr(s)
            if key not in seen:
                seen.add(key)
                uniq.append(s)
        return uniq

    fam = gen(3)
    print("stump family size (height<=3, subs<=2):", len(fam))
    # determinacy: exactly one player wins every (stump, payoff, alphabet)
    import random

    rng = random.Random(99)
    checked = 0
    for s in fam[:40]:
        for alphabet in (1, 2, 3):
            table = {}

            def pay(p, table=table):
                if p not in table:
                    table[p] = rng.randrange(2)
                return table[p]

            w1 = solve(s, pay, alphabet)
            checked += 1
            assert w1 in (True, False)
    print("determinacy solver ran on", checked, "games")


if __name__ == "__main__":
    main()
