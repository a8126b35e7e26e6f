#!/usr/bin/env python3
"""Independent reference for the sequence-code arithmetic.

Recomputes pairing/encoding values from the defining recurrences so the
C++ test expectations can be cross-checked against a second implementation.
"""


def pair(a: int, b: int) -> int:
    return (a + b) * (a + b + 1) // 2 + b


def unpair(c: int) -> tuple[int, int]:
    # invert by scanning diagonals
    w = 0
    while (w + 1) * (w + 2) // 2 <= c:
        w += 1
    b = c - w * (w + 1) // 2
    a = w - b
    return a, b


def encode(seq: list[int]) -> int:
    code = 0
    for n in seq:
        code = pair(code, n) + 1
    return code


def decode(code: int) -> list[int]:
    out = []
    while code != 0:
        prev, n = unpair(code - 1)
        out.append(n)
        code = prev
    return list(reversed(out))


def compose(outer: list[int], inner: list[int]) -> list[int]:
    return [outer[i] for i in inner]


def main() -> None:
    checks = {
        "pair(0,0)": pair(0, 0),
        "pair(1,2)": pair(1, 2),
        "unpair(8)": unpair(8),
        "encode([])": encode([]),
        "encode([1])": encode([1]),
        "encode([1,2])": encode([1, 2]),
        "encode([2])": encode([2]),
        "encode([0])": encode([0]),
        "encode([0,0])": encode([0, 0]),
        "encode([0,1])": encode([0, 1]),
        "encode([1,0])": encode([1, 0]),
        "encode([1,1])": encode([1, 1]),
        "encode([0,0,0])": encode([0, 0, 0]),
        "encode([0,0,1])": encode([0, 0, 1]),
        "encode([5,7,9])": encode([5, 7, 9]),
        "decode(18)": decode(18),
        "concat([1],[2]) == encode([1,2])": encode(decode(encode([1])) + decode(encode([2]))),
        "compose([5,7,9],[2,0])": compose([5, 7, 9], [2, 0]),
    }
    for k, v in checks.items():
        print(f"{k} = {v}")

    # round trip sanity over the range used by the property tests
    for code in range(100000):
        assert encode(decode(code)) == code, code
    print("round trip 0..99999 ok")

    # strict monotonicity of extension and prefix order embedding
    import random

    rng = random.Random(12345)
    for _ in range(2000):
        s = [rng.randrange(50) for _ in range(rng.randrange(8))]
        n = rng.randrange(50)
        assert encode(s + [n]) > encode(s)
        t = s + [rng.randrange(50) for _ in range(1 + rng.randrange(4))]
        assert encode(t) > encode(s)
    print("extension/prefix monotonicity ok")


if __name__ == "__main__":
    main()
