"""Exact rational linear algebra: rank, null spaces and LP feasibility.

Everything works over Fraction; no floating point enters at any stage.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


class RationalMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries: Iterable[Iterable]):
        grid = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if grid and any(len(r) != len(grid[0]) for r in grid):
            raise ValueError("rows have unequal lengths")
        self.rows = len(grid)
        self.cols = len(grid[0]) if grid else 0
        self._entries = grid

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(
            [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        )

    def entry(self, i: int, j: int) -> Fraction:
        return self._entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._entries[i]

    def to_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._entries

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self._entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def matvec(self, v: Sequence) -> tuple[Fraction, ...]:
        vec = [Fraction(x) for x in v]
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != cols {self.cols}")
        return tuple(
            sum((a * x for a, x in zip(row, vec)), Fraction(0))
            for row in self._entries
        )

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols = other.transpose().to_rows()
        return RationalMatrix(
            [
                [sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols]
                for row in self._entries
            ]
        )

    def _rref(self) -> tuple[list[list[Fraction]], list[int]]:
        work = [list(row) for row in self._entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if work[i][c] != 0), None)
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            inv = 1 / work[r][c]
            work[r] = [x * inv for x in work[r]]
            for i in range(self.rows):
                if i != r and work[i][c] != 0:
                    f = work[i][c]
                    work[i] = [x - f * y for x, y in zip(work[i], work[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return work, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def kernel_basis(self) -> tuple[tuple[Fraction, ...], ...]:
        """Basis of the right null space, one vector per free column."""
        reduced, pivots = self._rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            vec = [Fraction(0)] * self.cols
            vec[f] = Fraction(1)
            for k, p in enumerate(pivots):
                vec[p] = -reduced[k][f]
            basis.append(tuple(vec))
        return tuple(basis)

    def inverse(self) -> "RationalMatrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices invert")
        n = self.rows
        aug = RationalMatrix(
            [
                list(self._entries[i]) + [Fraction(int(i == j)) for j in range(n)]
                for i in range(n)
            ]
        )
        reduced, pivots = aug._rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return RationalMatrix([row[n:] for row in reduced[:n]])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"


def rank(m: RationalMatrix) -> int:
    """Exact rank by rational Gaussian elimination."""
    return m.rank()


def kernel_basis(m: RationalMatrix) -> tuple[tuple[Fraction, ...], ...]:
    """Exact basis of the right null space; m . v = 0 for every vector."""
    return m.kernel_basis()


@dataclass(frozen=True)
class LPResult:
    """Feasibility verdict with its exact certificate.

    Feasible systems carry a point with eq . point = rhs and point >= 0;
    infeasible ones carry a Farkas vector y with y . eq >= 0 componentwise
    and y . rhs < 0.
    """

    feasible: bool
    point: tuple | None
    farkas: tuple | None

    def __bool__(self) -> bool:
        return self.feasible


def lp_feasible(eq: RationalMatrix, rhs: Sequence) -> LPResult:
    """Exact feasibility of {eq . x = rhs, x >= 0} by phase-one simplex.

    Bland's rule (least-index entering and leaving) guarantees termination.
    Both kinds of certificate are re-verified before returning.
    """
    m, n = eq.rows, eq.cols
    b = [Fraction(x) for x in rhs]
    if len(b) != m:
        raise ValueError(f"rhs length {len(b)} != rows {m}")
    flip = [-1 if bi < 0 else 1 for bi in b]
    tableau = [
        [flip[i] * x for x in eq.row(i)]
        + [Fraction(int(i == k)) for k in range(m)]
        + [flip[i] * b[i]]
        for i in range(m)
    ]
    basis = [n + i for i in range(m)]
    # reduced costs of minimising the artificial sum; artificial columns start at 0
    reduced = [
        -sum((tableau[i][j] for i in range(m)), Fraction(0)) for j in range(n)
    ] + [Fraction(0)] * m

    while True:
        entering = next((j for j in range(n + m) if reduced[j] < 0), None)
        if entering is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tableau[i][entering] > 0:
                ratio = tableau[i][-1] / tableau[i][entering]
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave is None:
            raise ArithmeticError("phase-one objective cannot be unbounded")
        # the reduced-cost row ignores the rhs column; trim it for the update
        rhs_col = [tableau[i][-1] for i in range(m)]
        body = [tableau[i][:-1] for i in range(m)]
        inv = 1 / body[leave][entering]
        rhs_col[leave] *= inv
        body[leave] = [x * inv for x in body[leave]]
        for k in range(m):
            if k != leave and body[k][entering] != 0:
                f = body[k][entering]
                body[k] = [x - f * y for x, y in zip(body[k], body[leave])]
                rhs_col[k] -= f * rhs_col[leave]
        f = reduced[entering]
        if f != 0:
            reduced = [x - f * y for x, y in zip(reduced, body[leave])]
        tableau = [body[i] + [rhs_col[i]] for i in range(m)]
        basis[leave] = entering

    residual = sum(
        (tableau[i][-1] for i in range(m) if basis[i] >= n), Fraction(0)
    )
    if residual == 0:
        x = [Fraction(0)] * n
        for i, bv in enumerate(basis):
            if bv < n:
                x[bv] = tableau[i][-1]
        if any(v < 0 for v in x) or eq.matvec(x) != tuple(b):
            raise ArithmeticError("simplex produced an invalid feasible point")
        return LPResult(True, tuple(x), None)

    y = [(1 - reduced[n + i]) * flip[i] for i in range(m)]
    farkas = tuple(-yi for yi in y)
    cols = eq.transpose().to_rows()
    products = [sum((fi * a for fi, a in zip(farkas, col)), Fraction(0)) for col in cols]
    against = sum((fi * bi for fi, bi in zip(farkas, b)), Fraction(0))
    if any(p < 0 for p in products) or against >= 0:
        raise ArithmeticError("simplex produced an invalid Farkas certificate")
    return LPResult(False, None, farkas)
