"""Closed-form counts for wheels, Moebius-ladder cones and prism cones.

All Chebyshev values at half-integer arguments are handled through the
integer sequence a_n = 2 T_n(x/2) (a_0 = 2, a_1 = x, a_n = x a_{n-1} -
a_{n-2}), so everything stays in exact integer arithmetic.
"""

from __future__ import annotations

from .exact_linalg import AbelianGroup


def cheb2(x: int, n: int) -> int:
    """a_n = 2 T_n(x/2): a_0 = 2, a_1 = x, a_n = x*a_{n-1} - a_{n-2}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b = 2, x  # a_0, a_1
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, x * b - a
    return b


def fibonacci(n: int) -> int:
    """F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    """L_0 = 2, L_1 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def wheel_tree_count(n: int) -> int:
    """Spanning trees of the wheel W(n) (cone over the n-cycle): 2T_n(3/2) - 2."""
    if n < 3:
        raise ValueError("wheel W(n) needs n >= 3")
    return cheb2(3, n) - 2


def wheel_jacobian(n: int) -> AbelianGroup:
    """Jacobian of W(n): Z_Fn + Z_5Fn for even n, Z_Ln + Z_Ln for odd n."""
    if n < 3:
        raise ValueError("wheel W(n) needs n >= 3")
    if n % 2 == 0:
        f = fibonacci(n)
        return AbelianGroup((f, 5 * f))
    l = lucas(n)
    return AbelianGroup((l, l))


def mobius_cone_tree_count(n: int) -> int:
    """Spanning trees of the cone over the Moebius ladder M(n) = C_2n(1, n).

    Equals 4 (T_n(3/2) - 1)(T_n(5/2) + 1), computed in integers as
    (2T_n(3/2) - 2)(2T_n(5/2) + 2).
    """
    if n < 2:
        raise ValueError("Moebius ladder M(n) needs n >= 2")
    return (cheb2(3, n) - 2) * (cheb2(5, n) + 2)


def prism_cone_tree_count(n: int) -> int:
    """Spanning trees of the cone over the prism Pr(n).

    Equals 4 (T_n(3/2) - 1)(T_n(5/2) - 1), computed in integers as
    (2T_n(3/2) - 2)(2T_n(5/2) - 2).
    """
    if n < 3:
        raise ValueError("prism Pr(n) needs n >= 3")
    return (cheb2(3, n) - 2) * (cheb2(5, n) - 2)
