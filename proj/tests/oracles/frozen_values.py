#!/usr/bin/env python3
"""Independent reference values for the C++ unit tests.

Uses only Python's Fraction and float arithmetic. Tiling totals are checked
against a direct count of plane partitions in a box, which shares no code
or geometry with the C++ lozenge enumerator. Run it and compare its output
with the constants in test_formulas.cpp and test_asympt.cpp.
"""

from fractions import Fraction as Fr
from functools import lru_cache
from itertools import product
from math import asin, atan, factorial as fact, lgamma, exp, pi, sqrt


def T(a, b, c):
    r = Fr(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                r *= Fr(i + j + k - 1, i + j + k - 2)
    assert r.denominator == 1
    return r.numerator


def plane_partitions(a, b, c):
    """Monotone a x b arrays with entries in 0..c, counted row by row."""
    rows = [r for r in product(range(c + 1), repeat=b)
            if all(r[j] >= r[j + 1] for j in range(b - 1))]

    @lru_cache(maxsize=None)
    def count(i, above):
        if i == a:
            return 1
        return sum(count(i + 1, r) for r in rows
                   if all(r[j] <= above[j] for j in range(b)))

    return count(0, tuple([c] * b))


def ST(a, b):
    r = Fr(1)
    for i in range(1, a + 1):
        r *= Fr(2 * i + b - 1, 2 * i - 1)
        for j in range(i + 1, a + 1):
            r *= Fr(i + j + b - 1, i + j - 1)
    assert r.denominator == 1
    return r.numerator


def poch(a, k):
    r = Fr(1)
    for i in range(k):
        r *= a + i
    return r


def dfact(k):
    r = 1
    while k > 1:
        r *= k
        k -= 2
    return r


def Q(n, x):
    pre = Fr(fact(2 * n) ** 2 * fact(2 * x) * fact(x + 2 * n - 1),
             2 * fact(n) ** 2 * fact(x) * fact(2 * x + 4 * n - 2))
    return pre * sum(Fr((-1) ** (n - i - 1), 2 * n - 2 * i - 1)
                     * poch(Fr(x + n - i), 2 * i) / fact(i) ** 2
                     for i in range(n))


def U(n, x):
    s = Fr(0)
    for i in range(1, n + 1):
        w = (dfact(2 * n - 1) + (-1) ** (i + 1) * dfact(2 * n)) \
            * poch(Fr(3, 2) - i, 2 * n - 1) / (fact(i - 1) * fact(2 * n - i))
        s += w * (poch(x + 1, i - 1) * poch(x + i + 1, 2 * n - i)
                  - poch(x + 1, 2 * n - i) * poch(x + 2 * n + 2 - i, i - 1))
    return s


def R(n, x):
    return Fr(2 ** (3 * n - 2) * fact(2 * x + 2) * fact(x + 2 * n),
              fact(n) * fact(x + 1) * fact(2 * x + 4 * n)) * U(n, x)


def F(n, k, b, r):
    return (b * n + r) / (b * n + r + k) * exp(
        lgamma(n + k + .5) - lgamma(n + .5) + lgamma(n + 1) - lgamma(n + k + 1)
        + lgamma(n - k - .5) - lgamma(n - .5) + lgamma(n) - lgamma(n - k))


def closed_rhs(b):
    return 2 * b / (b + 1) * sqrt((b + 1) / (b - 1)) * atan(sqrt((b - 1) / (b + 1)))


def main():
    for a, b, c in [(1, 1, 1), (2, 2, 2), (3, 2, 3), (2, 3, 2), (3, 4, 3), (4, 4, 4),
                    (5, 2, 5), (2, 3, 4)]:
        t = T(a, b, c)
        if a * b * c <= 40:
            assert t == plane_partitions(a, b, c), (a, b, c)
        print(f"T{(a, b, c)} = {t}")
    print("T(5,4,5) =", T(5, 4, 5))
    for a, b in [(2, 1), (3, 2), (3, 4), (4, 3), (5, 4)]:
        print(f"ST{(a, b)} = {ST(a, b)}")
    for n, x in [(1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (3, 3), (3, 1)]:
        print(f"Q{(n, x)} = {Q(n, x)}")
    for n, x in [(1, 0), (2, 0), (1, 1), (2, 3), (3, 2)]:
        print(f"R{(n, x)} = {R(n, x)}")
    print("U(1,0) =", U(1, 0))
    for a, b in [(1, 2), (3, 2), (2, 3), (3, 4), (5, 4), (4, 3)]:
        if a % 2:
            n, x = (a - 1) // 2, b // 2
            cen, csym = Q(n + 1, x) * T(a, b, a), Q(n + 1, x) * ST(a, b)
        else:
            n, x = a // 2, (b - 1) // 2
            cen, csym = Q(n, x + 1) * T(a, b, a), R(n, x) * ST(a, b)
        print(f"centered{(a, b)} = {cen}  centered_sym = {csym}")
    for ratio in (1, 2):
        target = 2 / pi * asin(1 / (ratio + 1))
        errs = [abs(float(R(n, ratio * n)) - target) for n in (20, 40, 80)]
        print(f"arcsin ratio={ratio} target={target:.12f} errors={errs}")
    for b, r in [(3, 0), (3, 2), (2, 1)]:
        lhs = sum(F(200, k, b, r) for k in range(200)) / 200
        print(f"limit b={b} r={r}: lhs={lhs:.6f} rhs={closed_rhs(b):.6f}")


if __name__ == "__main__":
    main()
