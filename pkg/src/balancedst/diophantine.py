"""Exact integer solutions of ``m_1 c_1 + ... + m_r c_r = k`` with small multipliers.

``reduce_coefficients`` takes any solution and folds every multiplier but the
last into its residue modulo ``c_r``, moving the excess onto the last one::

    a_i = m_i // c_r,   b_i = m_i - a_i c_r   (0 <= b_i < c_r)
    m'_i = b_i                  for i < r
    m'_r = m_r + sum_{i<r} a_i c_i

The result satisfies

    sum_{i<r} |m'_i| <= (r - 1)(c_r - 1)
    |m'_r|          <= sum_{i<r} c_i + ceil(|k| / c_r)

Python integers are arbitrary precision, so nothing here can overflow.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


class ContractViolation(ValueError):
    pass


@dataclass(frozen=True)
class ReductionProblem:
    c: tuple[int, ...]
    k: int
    m: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        object.__setattr__(self, "k", int(self.k))
        _check_coefficients(self.c)
        if len(self.m) != len(self.c):
            raise ContractViolation(f"{len(self.c)} coefficients but {len(self.m)} multipliers")
        total = dot(self.m, self.c)
        if total != self.k:
            raise ContractViolation(f"sum m_i c_i = {total}, expected k = {self.k}")


@dataclass(frozen=True)
class ReducedSolution:
    c: tuple[int, ...]
    k: int
    m: tuple[int, ...]
    quotients: tuple[int, ...]
    remainders: tuple[int, ...]

    def check(self) -> None:
        """Assert the sum identity and both magnitude bounds."""
        assert dot(self.m, self.c) == self.k
        if not self.c:
            return
        r, cr = len(self.c), self.c[-1]
        assert sum(abs(x) for x in self.m[:-1]) <= (r - 1) * (cr - 1)
        assert abs(self.m[-1]) <= sum(self.c[:-1]) + -(-abs(self.k) // cr)


def dot(m: Sequence[int], c: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(m, c))


def _check_coefficients(c: Sequence[int]) -> None:
    for i, x in enumerate(c):
        if x < 1:
            raise ContractViolation(f"coefficient c[{i}] = {x} is not positive")
        if i and x <= c[i - 1]:
            raise ContractViolation("coefficients must be strictly increasing")


def reduce_coefficients(problem: ReductionProblem) -> ReducedSolution:
    c, m = problem.c, problem.m
    if not c:
        raise ContractViolation("need at least one coefficient")
    cr = c[-1]
    # divmod with a positive divisor is Euclidean: remainder in [0, cr)
    quotients, remainders = zip(*(divmod(mi, cr) for mi in m[:-1])) if len(c) > 1 else ((), ())
    last = m[-1] + dot(quotients, c[:-1])
    return ReducedSolution(c, problem.k, tuple(remainders) + (last,), tuple(quotients), tuple(remainders))


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y = g = gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def bezout(c: Sequence[int]) -> tuple[int, list[int]]:
    """Return ``g = gcd(c)`` and integers ``x`` with ``sum x_i c_i = g``."""
    g, coeffs = 0, []
    for ci in c:
        g_new, x, y = ext_gcd(g, ci)
        coeffs = [v * x for v in coeffs] + [y]
        g = g_new
    return g, coeffs


def solve_bounded(c: Sequence[int], k: int) -> tuple[int, ...] | None:
    """Multipliers ``m`` with ``sum m_i c_i = k`` within the reduction bounds, or ``None``.

    ``None`` exactly when ``gcd(c)`` does not divide ``k`` (``gcd(()) = 0``).
    """
    c = tuple(int(x) for x in c)
    _check_coefficients(c)
    k = int(k)
    if k == 0:
        return (0,) * len(c)
    g, x = bezout(c)
    if g == 0 or k % g:
        return None
    scale = k // g
    return reduce_coefficients(ReductionProblem(c, k, tuple(v * scale for v in x))).m
