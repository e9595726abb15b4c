"""Companion-matrix fast paths for cones over circulant graphs.

The cokernel of a circulant operator P(T_n) equals the cokernel of
A^n - I for the s x s companion matrix A of the bimonic Laurent
polynomial P, so Jacobians of cones over circulant graphs (even or odd
valency) and over cobordisms of two circulant layers can be computed
from small matrices instead of n x n Laplacians.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .exact_linalg import AbelianGroup, IntMatrix, cokernel, mat_pow
from .graph_core import CirculantSpec, CobordismSpec


class LaurentPoly:
    """Integer Laurent polynomial, stored as exponent -> nonzero coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int]):
        self.coeffs: dict[int, int] = {
            int(e): int(c) for e, c in coeffs.items() if c != 0
        }

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lowest(self) -> int:
        return min(self.coeffs)

    @property
    def highest(self) -> int:
        return max(self.coeffs)

    @property
    def span(self) -> int:
        """Highest minus lowest exponent."""
        if self.is_zero:
            raise ValueError("zero polynomial has no span")
        return self.highest - self.lowest

    def coefficient(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    @property
    def is_bimonic(self) -> bool:
        """Both extreme coefficients equal 1 and the span is positive."""
        return (
            not self.is_zero
            and self.span >= 1
            and self.coeffs[self.lowest] == 1
            and self.coeffs[self.highest] == 1
        )

    def bimonic_normalized(self) -> "LaurentPoly":
        """Flip the global sign if both extreme coefficients are -1.

        Negation is unimodular, so cokernels built from the polynomial are
        unaffected.  Raises if the result is still not bimonic.
        """
        if self.is_zero or self.span < 1:
            raise ValueError("polynomial must have span >= 1")
        p = self
        if self.coeffs[self.lowest] == -1 and self.coeffs[self.highest] == -1:
            p = -self
        if not p.is_bimonic:
            raise ValueError(f"polynomial is not bimonic: {self}")
        return p

    def window_coeffs(self) -> list[int]:
        """Dense coefficient list from the lowest to the highest exponent."""
        lo = self.lowest
        return [self.coefficient(lo + i) for i in range(self.span + 1)]

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.constant(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: other * c for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self) -> str:
        terms = [f"{c}*z^{e}" for e, c in sorted(self.coeffs.items())]
        return "LaurentPoly(" + " + ".join(terms) + ")" if terms else "LaurentPoly(0)"


def _jump_polynomial(constant: int, jumps: Sequence[int]) -> LaurentPoly:
    """constant - sum_l (z^s_l + z^-s_l)."""
    coeffs = {0: constant}
    for s in jumps:
        coeffs[s] = coeffs.get(s, 0) - 1
        coeffs[-s] = coeffs.get(-s, 0) - 1
    return LaurentPoly(coeffs)


def laurent_from_jumps_even(jumps: Iterable[int]) -> LaurentPoly:
    """Bimonic form of 2k+1 - sum_l (z^s_l + z^-s_l) for k jumps.

    The raw polynomial has extreme coefficients -1; the returned value is
    sign-flipped so the companion construction applies.
    """
    jumps = tuple(jumps)
    if not jumps:
        raise ValueError("at least one jump required")
    return _jump_polynomial(2 * len(jumps) + 1, jumps).bimonic_normalized()


def companion(p: LaurentPoly) -> IntMatrix:
    """Companion matrix of a bimonic Laurent polynomial.

    For P(z) = z^p (1 + a_1 z + ... + a_{s-1} z^{s-1} + z^s), the s x s
    matrix has the identity block in the upper right and last row
    (-1, -a_1, ..., -a_{s-1}); its determinant is +-1, so it is invertible
    over the integers.  The exponent window p is irrelevant and discarded.
    """
    if p.is_zero or p.span < 1 or not p.is_bimonic:
        raise ValueError(f"companion matrix needs a bimonic polynomial, got {p!r}")
    cs = p.window_coeffs()
    s = len(cs) - 1
    rows = [[1 if j == i + 1 else 0 for j in range(s)] for i in range(s - 1)]
    rows.append([-c for c in cs[:-1]])
    return IntMatrix(rows)


def laurent_at_shift(p: LaurentPoly, n: int) -> IntMatrix:
    """Evaluate p at the n x n cyclic-shift matrix T_n = circ(0,1,0,...,0)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a = [[0] * n for _ in range(n)]
    for e, c in p.coeffs.items():
        for i in range(n):
            a[i][(i + e) % n] += c
    return IntMatrix(a)


def prop1_cokernel(p: LaurentPoly, n: int) -> AbelianGroup:
    """coker(A^n - I) for the companion matrix A of p.

    Isomorphic to the cokernel of the n x n circulant matrix P(T_n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a = companion(p)
    return cokernel(mat_pow(a, n) - IntMatrix.identity(a.nrows))


def even_cone_jacobian(spec: CirculantSpec) -> AbelianGroup:
    """Jacobian of the cone over C_n(s_1,...,s_k) with all jumps < n/2."""
    if spec.has_half_jump:
        raise ValueError(f"{spec} has a half jump; use odd_cone_jacobian")
    p = laurent_from_jumps_even(spec.jumps)
    return prop1_cokernel(p, spec.n)


def odd_cone_jacobian(spec: CirculantSpec) -> AbelianGroup:
    """Jacobian of the cone over the odd-valency circulant C_2n(s_1,...,s_k, n).

    Uses the companion matrix A of (2k+2 - sum_j (z^s_j + z^-s_j))^2 - 1 and
    computes coker(A^n - (2k+2) I + sum_j (A^s_j + A^-s_j)).
    """
    if not spec.has_half_jump:
        raise ValueError(f"{spec} has no half jump; use even_cone_jacobian")
    jumps = spec.jumps[:-1]
    if not jumps:
        raise ValueError("odd-valency fast path needs at least one jump besides n/2")
    n = spec.n // 2
    k = len(jumps)
    q = _jump_polynomial(2 * k + 2, jumps)
    a = companion(q * q - 1)
    s = a.nrows
    m = mat_pow(a, n) - (2 * k + 2) * IntMatrix.identity(s)
    for sj in jumps:
        m = m + mat_pow(a, sj) + mat_pow(a, -sj)
    return cokernel(m)


def cobordism_cone_jacobian(spec: CobordismSpec) -> AbelianGroup:
    """Jacobian of the cone over a cobordism of two circulant layers.

    Uses the companion matrix A of
    (2k+2 - sum_r (z^s_1r + z^-s_1r)) * (2l+2 - sum_r (z^s_2r + z^-s_2r)) - 1
    and computes coker(A^n - I).
    """
    q1 = _jump_polynomial(2 * len(spec.jumps1) + 2, spec.jumps1)
    q2 = _jump_polynomial(2 * len(spec.jumps2) + 2, spec.jumps2)
    a = companion(q1 * q2 - 1)
    return cokernel(mat_pow(a, spec.n) - IntMatrix.identity(a.nrows))


@dataclass(frozen=True)
class FastPathResult:
    """A fast-path cone Jacobian plus the theorem path that produced it."""

    group: AbelianGroup
    theorem: str  # "even-circulant", "odd-circulant", or "cobordism"


def cone_jacobian_fastpath(spec: CirculantSpec | CobordismSpec) -> FastPathResult:
    """Dispatch to the appropriate structural theorem for the given spec."""
    if isinstance(spec, CobordismSpec):
        return FastPathResult(cobordism_cone_jacobian(spec), "cobordism")
    if spec.has_half_jump:
        return FastPathResult(odd_cone_jacobian(spec), "odd-circulant")
    return FastPathResult(even_cone_jacobian(spec), "even-circulant")
