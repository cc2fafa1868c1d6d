"""Exact integer and rational linear algebra.

Dense arbitrary-precision arithmetic only; no floating point anywhere in this
module. Smith normal form is computed with explicit elementary row/column
operations so the unimodular transforms come out alongside the diagonal, and
the decomposition identity is rechecked before returning. Desk-scale sizes
(a few hundred rows/columns) are the target; nothing here is tuned beyond
smallest-pivot selection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class IntMatrix:
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(row) for row in self.data}
        if len(widths) > 1:
            raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(tuple((0,) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0]) if self.data else 0

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.data))) if self.data else IntMatrix(())

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        ot = other.transpose().data
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in ot)
                for row in self.data
            )
        )

    def mulvec(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.data)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.data)


@dataclass(frozen=True)
class SmithDecomposition:
    """U·A·V = D with U, V unimodular and D diagonal, d1 | d2 | ..."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        n = min(self.d.rows, self.d.cols)
        return tuple(self.d.data[i][i] for i in range(n))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def _find_pivot(m, t, rows, cols):
    best = None
    for i in range(t, rows):
        for j in range(t, cols):
            x = m[i][j]
            if x != 0 and (best is None or abs(x) < abs(m[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    rows, cols = a.rows, a.cols
    m = [list(row) for row in a.data]
    u = [list(row) for row in IntMatrix.identity(rows).data]
    v = [list(row) for row in IntMatrix.identity(cols).data]

    def row_op(i, k, q):  # R_i -= q * R_k, mirrored in U
        m[i] = [x - q * y for x, y in zip(m[i], m[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    def col_op(j, k, q):  # C_j -= q * C_k, mirrored in V
        for r in m:
            r[j] -= q * r[k]
        for r in v:
            r[j] -= q * r[k]

    def swap_rows(i, k):
        m[i], m[k] = m[k], m[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for r in m:
            r[j], r[k] = r[k], r[j]
        for r in v:
            r[j], r[k] = r[k], r[j]

    for t in range(min(rows, cols)):
        while True:
            pivot = _find_pivot(m, t, rows, cols)
            if pivot is None:
                break
            if pivot != (t, t):
                if pivot[0] != t:
                    swap_rows(t, pivot[0])
                if pivot[1] != t:
                    swap_cols(t, pivot[1])
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    row_op(i, t, q)
                    dirty = dirty or m[i][t] != 0
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    col_op(j, t, q)
                    dirty = dirty or m[t][j] != 0
            if dirty:
                continue
            # Pivot must divide the rest of the submatrix for the chain.
            fixup = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % m[t][t] != 0:
                        fixup = (i, j)
                        break
                if fixup:
                    break
            if fixup is None:
                break
            # Fold the offending row into row t, then reduce again.
            m[t] = [x + y for x, y in zip(m[t], m[fixup[0]])]
            u[t] = [x + y for x, y in zip(u[t], u[fixup[0]])]
        if _find_pivot(m, t, rows, cols) is None:
            break

    for t in range(min(rows, cols)):
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]

    dec = SmithDecomposition(
        u=IntMatrix.from_rows(u), d=IntMatrix.from_rows(m), v=IntMatrix.from_rows(v)
    )
    _check_decomposition(a, dec)
    return dec


def _check_decomposition(a: IntMatrix, dec: SmithDecomposition):
    prod = dec.u.mul(a).mul(dec.v)
    if prod != dec.d:
        raise AssertionError("Smith decomposition identity U*A*V == D failed")
    diag = dec.diagonal
    for i in range(dec.d.rows):
        for j in range(dec.d.cols):
            if i != j and dec.d.data[i][j] != 0:
                raise AssertionError("D not diagonal")
    for x, y in zip(diag, diag[1:]):
        if x == 0 and y != 0:
            raise AssertionError("zero before nonzero on the diagonal")
        if x != 0 and y % x != 0:
            raise AssertionError("divisibility chain broken")
    for i, x in enumerate(diag):
        if x < 0:
            raise AssertionError("negative invariant factor")


def _primitive(vec):
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    if g > 1:
        vec = tuple(x // g for x in vec)
    for x in vec:
        if x != 0:
            return vec if x > 0 else tuple(-y for y in vec)
    return tuple(vec)


def integer_kernel_basis(a: IntMatrix):
    """Basis of the lattice { z : a·z = 0 }, one vector per free column."""
    dec = smith_normal_form(a)
    r = dec.rank
    basis = []
    for j in range(r, a.cols):
        vec = _primitive(dec.v.column(j))
        if a.mulvec(vec) != (0,) * a.rows:
            raise AssertionError("kernel vector fails a·v = 0")
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class Mod2Outcome:
    """Exactly one of solution / obstruction is set.

    solution: rational phi with b·phi = s componentwise modulo 2 (the
    difference is an even integer vector), entries reduced into [0, 2).
    obstruction: primitive integer u with u·b = 0 exactly and u·s odd.
    """

    solution: tuple[Fraction, ...] | None = None
    obstruction: tuple[int, ...] | None = None


def _zero_free_directions(phi, kernel):
    """Subtract rational multiples of kernel vectors so the solution is zero
    on the kernel's echelon pivot coordinates; leaves b·phi untouched."""
    phi = list(phi)
    rows = [[Fraction(x) for x in vec] for vec in kernel]
    pivots = []
    for row in rows:
        for prev_pivot, prev_row in pivots:
            if row[prev_pivot]:
                t = row[prev_pivot] / prev_row[prev_pivot]
                row[:] = [x - t * y for x, y in zip(row, prev_row)]
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is not None:
            pivots.append((lead, row))
    for pivot, row in pivots:
        if phi[pivot]:
            t = phi[pivot] / row[pivot]
            phi = [x - t * y for x, y in zip(phi, row)]
    return phi


def solve_mod2_over_rationals(b: IntMatrix, s) -> Mod2Outcome:
    """Solve b·phi = s (mod 2) over the rationals, or certify impossibility.

    Via the Smith decomposition U·b·V = D: a zero row i of D forces
    (U·s)_i to be even, else row i of U is the obstruction; otherwise
    back-substitute psi_i = (U·s)_i / d_i and take phi = V·psi. The free
    directions (the rational kernel of b) are zeroed out of phi so the
    returned solution is the canonical one.
    """
    s = tuple(int(x) for x in s)
    if len(s) != b.rows:
        raise ValueError(f"rhs length {len(s)} != rows {b.rows}")
    dec = smith_normal_form(b)
    us = dec.u.mulvec(s)
    r = dec.rank
    for i in range(r, b.rows):
        if us[i] % 2 == 1:
            u = _primitive(dec.u.data[i])
            if b.transpose().mulvec(u) != (0,) * b.cols:
                raise AssertionError("obstruction fails u·b = 0")
            return Mod2Outcome(obstruction=u)
    diag = dec.diagonal
    psi = [Fraction(0)] * b.cols
    for i in range(r):
        psi[i] = Fraction(us[i] % (2 * diag[i]), diag[i])
    phi = [
        sum((Fraction(vij) * pj for vij, pj in zip(vrow, psi)), Fraction(0))
        for vrow in dec.v.data
    ]
    phi = _zero_free_directions(phi, [dec.v.column(j) for j in range(r, b.cols)])
    phi = tuple(x % 2 for x in phi)
    for lhs, rhs in zip(b.mulvec(phi), s):
        diff = lhs - rhs
        if diff.denominator != 1 or diff.numerator % 2 != 0:
            raise AssertionError("solution fails b·phi = s (mod 2)")
    return Mod2Outcome(solution=phi)
