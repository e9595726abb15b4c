"""Arbitrary-precision integer matrix algebra.

Everything here is exact: determinants via Bareiss fraction-free
elimination, characteristic polynomials via integer-node interpolation,
Smith normal form via minimal-pivot reduction, and cokernels of
Z-linear operators as canonical abelian group decompositions.
No floating point, no precision loss.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable dense matrix of Python (arbitrary-precision) integers."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence[int]]):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if not data:
            raise ValueError("matrix must have at least one row")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows in matrix")
        self._rows = data
        self.nrows = len(data)
        self.ncols = width

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._rows))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in r] for r in self._rows])

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)]
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix([[other * x for x in r] for r in self._rows])
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise ValueError(
                    f"cannot multiply {self.nrows}x{self.ncols} by "
                    f"{other.nrows}x{other.ncols}"
                )
            cols = list(zip(*other._rows))
            return IntMatrix(
                [[sum(a * b for a, b in zip(row, col)) for col in cols]
                 for row in self._rows]
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def _check_same_shape(self, other: "IntMatrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def _check_square(self) -> None:
        if not self.is_square:
            raise ValueError(f"matrix is {self.nrows}x{self.ncols}, not square")

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self._rows]})"


class IntPoly:
    """Integer-coefficient polynomial; coefficient index equals degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(
            [self.coeff(i) + other.coeff(i) for i in range(n)]
        )

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(
            [self.coeff(i) - other.coeff(i) for i in range(n)]
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        if isinstance(other, IntPoly):
            if not self.coeffs or not other.coeffs:
                return IntPoly([])
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return IntPoly(out)
        return NotImplemented

    __rmul__ = __mul__

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def taylor_shift(self, c: int) -> "IntPoly":
        """Return p(x + c), computed exactly via repeated Horner steps."""
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n):
            for j in range(n - 1 - i, n - 1):
                cs[j] += c * cs[j + 1]
        return IntPoly(cs)

    def div_linear(self, r: int) -> tuple["IntPoly", int]:
        """Synthetic division by (x - r); returns (quotient, remainder)."""
        if not self.coeffs:
            return IntPoly([]), 0
        q: list[int] = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * r + c
            q.append(acc)
        rem = q.pop()
        return IntPoly(reversed(q)), rem

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in invariant-factor form.

    ``torsion`` lists the invariant factors d_1 | d_2 | ... with every
    d_i >= 2 (unit factors are dropped); ``free_rank`` counts Z summands.
    """

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free_rank must be nonnegative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2 (units must be dropped)")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"divisibility chain violated: {a} does not divide {b}")

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    @property
    def order(self) -> int:
        """Order of the group; defined only when free_rank is 0."""
        if self.free_rank:
            raise ValueError("infinite group has no order")
        return math.prod(self.torsion)

    def describe(self) -> str:
        """Render as e.g. ``Z_4 + Z_4`` or ``Z_3 + Z``; trivial group -> ``trivial``."""
        parts = [f"Z_{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "trivial"

    def to_dict(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}

    def __str__(self) -> str:
        return self.describe()


def determinant(m: IntMatrix) -> int:
    """Exact determinant via Bareiss fraction-free elimination."""
    m._check_square()
    n = m.nrows
    if n == 0:
        return 1
    a = m.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by the Bareiss identity
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def eval_poly(p: IntPoly, x: int) -> int:
    """Exact evaluation of an integer polynomial at an integer point."""
    return p(x)


def char_poly(m: IntMatrix) -> IntPoly:
    """Characteristic polynomial det(x*I - m) with exact integer coefficients.

    Evaluates the determinant at the integer nodes x = 0..n and interpolates
    with Newton divided differences over the rationals; the result is asserted
    integral before being returned.
    """
    m._check_square()
    n = m.nrows
    ident = IntMatrix.identity(n)
    values = [determinant(x * ident - m) for x in range(n + 1)]
    # Newton divided differences on nodes 0..n; denominators divide n!.
    dd = [Fraction(v) for v in values]
    for level in range(1, n + 1):
        for i in range(n, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / level
    # expand sum_k dd[k] * prod_{i<k} (x - i)
    coeffs = [Fraction(0)] * (n + 1)
    basis = [Fraction(1)]  # running product, lowest degree first
    for k in range(n + 1):
        for i, b in enumerate(basis):
            coeffs[i] += dd[k] * b
        if k < n:
            # multiply basis by (x - k)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for i, b in enumerate(basis):
                nxt[i] -= k * b
                nxt[i + 1] += b
            basis = nxt
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("characteristic polynomial interpolation went non-integral")
    poly = IntPoly([c.numerator for c in coeffs])
    assert poly.degree == n and poly.coeffs[-1] == 1
    return poly


def _adjugate(m: IntMatrix) -> IntMatrix:
    n = m.nrows
    if n == 1:
        return IntMatrix([[1]])
    rows = m.tolist()
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [rows[r][c] for c in range(n) if c != j]
                for r in range(n) if r != i
            ]
            cof = determinant(IntMatrix(minor))
            adj[j][i] = -cof if (i + j) % 2 else cof
    return IntMatrix(adj)


def mat_pow(m: IntMatrix, e: int) -> IntMatrix:
    """Exact matrix power by binary exponentiation.

    Negative exponents require the matrix to be invertible over Z
    (|det| = 1); the integer inverse is built from the adjugate.
    """
    m._check_square()
    if e < 0:
        d = determinant(m)
        if abs(d) != 1:
            raise ValueError(f"negative power needs |det| = 1, got det = {d}")
        m = _adjugate(m) * d
        e = -e
    result = IntMatrix.identity(m.nrows)
    base = m
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _balanced(v: int, mod: int) -> int:
    """Representative of v modulo mod in (-mod/2, mod/2]."""
    v %= mod
    if 2 * v > mod:
        v -= mod
    return v


def _diagonalize(a: list[list[int]], nrows: int, ncols: int, mod: int | None) -> list[int]:
    """Reduce a to diagonal form by unimodular row/column operations.

    Returns the absolute pivot values, each dividing all entries that remain
    after its step.  With mod set, every entry is kept as a balanced residue
    modulo mod; this is legitimate whenever mod * Z^nrows is contained in the
    column span (e.g. mod = |det| for a nonsingular square matrix), and it
    bounds coefficient growth that would otherwise be exponential.
    """
    limit = min(nrows, ncols)
    pivots: list[int] = []
    t = 0
    while t < limit:
        # pivot: nonzero entry of minimal absolute value in the submatrix
        piv = None
        best = 0
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = a[i][j]
                if v != 0 and (piv is None or abs(v) < best):
                    piv = (i, j)
                    best = abs(v)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            # clear column t: Bezout row combination when the pivot does not
            # divide, exact subtraction when it does
            for i in range(t + 1, nrows):
                v = a[i][t]
                if not v:
                    continue
                p = a[t][t]
                if v % p == 0:
                    q = v // p
                    for j in range(t, ncols):
                        a[i][j] -= q * a[t][j]
                        if mod:
                            a[i][j] = _balanced(a[i][j], mod)
                else:
                    g, x, y = _ext_gcd(p, v)
                    pg, vg = p // g, v // g
                    for j in range(t, ncols):
                        rt, ri = a[t][j], a[i][j]
                        a[t][j] = x * rt + y * ri
                        a[i][j] = pg * ri - vg * rt
                        if mod:
                            if j > t:
                                a[t][j] = _balanced(a[t][j], mod)
                            a[i][j] = _balanced(a[i][j], mod)
            # clear row t the same way with column operations
            for j in range(t + 1, ncols):
                v = a[t][j]
                if not v:
                    continue
                p = a[t][t]
                if v % p == 0:
                    q = v // p
                    for i in range(t, nrows):
                        a[i][j] -= q * a[i][t]
                        if mod:
                            a[i][j] = _balanced(a[i][j], mod)
                else:
                    g, x, y = _ext_gcd(p, v)
                    pg, vg = p // g, v // g
                    for i in range(t, nrows):
                        ct, cj = a[i][t], a[i][j]
                        a[i][t] = x * ct + y * cj
                        a[i][j] = pg * cj - vg * ct
                        if mod:
                            if i > t:
                                a[i][t] = _balanced(a[i][t], mod)
                            a[i][j] = _balanced(a[i][j], mod)
            # the row-side Bezout combinations can disturb column t
            if any(a[i][t] for i in range(t + 1, nrows)):
                continue
            # pivot must divide every remaining entry for the chain to hold
            p = a[t][t]
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, ncols):
                a[t][j] += a[offender][j]
                if mod and j > t:
                    a[t][j] = _balanced(a[t][j], mod)
        pivots.append(abs(a[t][t]))
        t += 1
    return pivots


def smith_normal_form(m: IntMatrix) -> tuple[list[int], AbelianGroup]:
    """Smith normal form diagonal and the cokernel of m: Z^cols -> Z^rows.

    The diagonal d_1, ..., d_min(r,c) is nonnegative with d_i | d_{i+1}.
    The group collects the torsion factors d_i >= 2 together with
    free rank = rows - rank(m).
    """
    nrows, ncols = m.nrows, m.ncols
    limit = min(nrows, ncols)
    mod = None
    if m.is_square:
        d = abs(determinant(m))
        if d:
            mod = d
    a = m.tolist()
    if mod:
        for row in a:
            for j in range(ncols):
                row[j] = _balanced(row[j], mod)
    pivots = _diagonalize(a, nrows, ncols, mod)
    if mod:
        # residues only determine entries up to multiples of det, which lie
        # in the column span; fold them back in via gcds
        diag = [math.gcd(p, mod) for p in pivots]
        diag += [mod] * (limit - len(diag))
        assert math.prod(diag) == mod, f"SNF lost the determinant: {diag}"
    else:
        diag = pivots + [0] * (limit - len(pivots))
    for x, y in zip(diag, diag[1:]):
        assert y == 0 or (x != 0 and y % x == 0), f"SNF divisibility broken: {diag}"
    torsion = tuple(d for d in diag if d >= 2)
    rank = sum(1 for d in diag if d != 0)
    return diag, AbelianGroup(torsion, nrows - rank)


def cokernel(m: IntMatrix) -> AbelianGroup:
    """Cokernel Z^rows / im(m) in canonical invariant-factor form."""
    return smith_normal_form(m)[1]
