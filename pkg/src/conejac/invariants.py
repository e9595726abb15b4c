"""Graph invariants: spanning-tree counts, rooted-forest counts, Jacobian
and forest groups, and the cone identities relating them.

The key identities: the number of spanning trees of the cone over G equals
the number of rooted spanning forests of G, which is det(I + L(G)); and the
Jacobian of the cone is isomorphic to coker(I + L(G)), the forest group.
"""

from __future__ import annotations

from .exact_linalg import (
    AbelianGroup,
    IntMatrix,
    IntPoly,
    char_poly,
    cokernel,
    determinant,
    eval_poly,
)
from .graph_core import Multigraph, laplacian


def tree_count(g: Multigraph) -> int:
    """Number of spanning trees, via the reduced-Laplacian determinant.

    Row and column 0 of the Laplacian are deleted (the choice does not
    affect the value); returns 0 for disconnected graphs.
    """
    n = g.n_vertices
    if n == 1:
        return 1
    lap = laplacian(g)
    reduced = [[lap[i, j] for j in range(1, n)] for i in range(1, n)]
    return determinant(IntMatrix(reduced))


def tree_count_via_charpoly(g: Multigraph) -> int:
    """Spanning trees from the Laplacian characteristic polynomial.

    tau(G) = (-1)^(n-1)/n * chi'(0); an independent cross-check path for
    :func:`tree_count`.
    """
    n = g.n_vertices
    chi = char_poly(laplacian(g))
    num = (-1) ** (n - 1) * chi.coeff(1)
    if num % n:
        raise ArithmeticError(f"chi'(0) = {chi.coeff(1)} not divisible by n = {n}")
    return num // n


def forest_count(g: Multigraph) -> int:
    """Number of rooted spanning forests: det(I + L(G)); always >= 1."""
    n = g.n_vertices
    return determinant(IntMatrix.identity(n) + laplacian(g))


def jacobian(g: Multigraph) -> AbelianGroup:
    """Torsion part of coker(L(G)).

    For connected g this is the Jacobian (critical group) and its order is
    tree_count(g).  For disconnected g the torsion is still returned, with
    the excess free rank (components beyond the first) reported.
    """
    ck = cokernel(laplacian(g))
    return AbelianGroup(ck.torsion, ck.free_rank - 1)


def forest_group(g: Multigraph) -> AbelianGroup:
    """coker(I + L(G)); finite of order forest_count(g) since I+L is nonsingular."""
    n = g.n_vertices
    grp = cokernel(IntMatrix.identity(n) + laplacian(g))
    assert grp.free_rank == 0
    return grp


def cone_tree_count(g: Multigraph) -> int:
    """Spanning trees of the cone over g, computed as forest_count(g)."""
    return forest_count(g)


def cone_tree_count_via_charpoly(g: Multigraph) -> int:
    """Spanning trees of the cone over g as |chi_g(-1)|."""
    return abs(eval_poly(char_poly(laplacian(g)), -1))


def cone_jacobian(g: Multigraph) -> AbelianGroup:
    """Jacobian of the cone over g, computed as the forest group of g."""
    return forest_group(g)


def joint_char_poly(chi1: IntPoly, m: int, chi2: IntPoly, n: int) -> IntPoly:
    """Laplacian characteristic polynomial of the join of two graphs.

    Given the Laplacian characteristic polynomials of graphs of orders m
    and n, returns  x*(x-n-m) / ((x-n)*(x-m)) * chi1(x-n) * chi2(x-m),
    carried out as exact integer polynomial division.  A nonzero remainder
    means the inputs were not Laplacian characteristic polynomials.
    """
    x = IntPoly([0, 1])
    num = x * IntPoly([-(n + m), 1]) * chi1.taylor_shift(-n) * chi2.taylor_shift(-m)
    q1, r1 = num.div_linear(n)
    if r1:
        raise ValueError(f"(x - {n}) does not divide the joint numerator (remainder {r1})")
    q2, r2 = q1.div_linear(m)
    if r2:
        raise ValueError(f"(x - {m}) does not divide the joint numerator (remainder {r2})")
    return q2
