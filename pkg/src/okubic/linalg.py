"""Exact dense linear algebra: 3×3 matrices over Q(√3, i) and
arbitrary-shape matrices over Q(√3) with RREF/nullspace/rank.

Pivoting picks the first nonzero entry in column order; arithmetic is
exact, so no magnitude considerations apply and results are
deterministic across platforms.
"""

from __future__ import annotations

from .field import C3, F3

Flavor = str  # "compact" | "split"

COMPACT = "compact"
SPLIT = "split"


def _check_flavor(flavor: Flavor) -> None:
    if flavor not in (COMPACT, SPLIT):
        raise ValueError(f"unknown flavor {flavor!r}")


class Mat3:
    """Dense 3×3 matrix over C3."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(C3.coerce(x) for x in r) for r in rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Mat3 requires a 3x3 array")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Mat3 values are immutable")

    @classmethod
    def zero(cls) -> Mat3:
        return cls([[0, 0, 0]] * 3)

    @classmethod
    def identity(cls) -> Mat3:
        return cls([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    @classmethod
    def diag(cls, a, b, c) -> Mat3:
        return cls([[a, 0, 0], [0, b, 0], [0, 0, c]])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __repr__(self):
        return f"Mat3({[[str(x) for x in r] for r in self.rows]})"

    def __eq__(self, other):
        if not isinstance(other, Mat3):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __bool__(self):
        return any(any(x for x in r) for r in self.rows)

    def __add__(self, other):
        return Mat3(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        return Mat3(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return Mat3([[-a for a in r] for r in self.rows])

    def scale(self, c) -> Mat3:
        c = C3.coerce(c)
        return Mat3([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other) -> Mat3:
        a, b = self.rows, other.rows
        return Mat3(
            [
                [sum((a[i][k] * b[k][j] for k in range(3)), C3()) for j in range(3)]
                for i in range(3)
            ]
        )

    def trace(self) -> C3:
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def transpose(self) -> Mat3:
        r = self.rows
        return Mat3([[r[j][i] for j in range(3)] for i in range(3)])

    def dagger(self) -> Mat3:
        """Conjugate transpose."""
        r = self.rows
        return Mat3([[r[j][i].conj() for j in range(3)] for i in range(3)])

    def det(self) -> C3:
        r = self.rows
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def inverse(self) -> Mat3:
        d = self.det()
        if not d:
            raise ZeroDivisionError("singular Mat3")
        r = self.rows
        cof = [
            [
                r[(i + 1) % 3][(j + 1) % 3] * r[(i + 2) % 3][(j + 2) % 3]
                - r[(i + 1) % 3][(j + 2) % 3] * r[(i + 2) % 3][(j + 1) % 3]
                for i in range(3)
            ]
            for j in range(3)
        ]
        dinv = d.inverse()
        return Mat3([[dinv * x for x in row] for row in cof])

    def to_json(self):
        return [[x.to_json() for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, obj) -> Mat3:
        return cls([[C3.from_json(x) for x in r] for r in obj])


def eta_matrix(flavor: Flavor) -> Mat3:
    _check_flavor(flavor)
    return Mat3.identity() if flavor == COMPACT else Mat3.diag(-1, 1, 1)


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    return a @ b


def eta_dagger(x: Mat3, flavor: Flavor) -> Mat3:
    """η x† η for η = Id (compact) or diag(-1,1,1) (split); an involution."""
    eta = eta_matrix(flavor)
    return eta @ x.dagger() @ eta


def is_eta_hermitian(x: Mat3, flavor: Flavor) -> bool:
    return eta_dagger(x, flavor) == x


class ExactMatrix:
    """Dense matrix over F3 of arbitrary shape."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(F3.coerce(x) for x in r) for r in entries)
        cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix values are immutable")

    @classmethod
    def zero(cls, rows: int, cols: int) -> ExactMatrix:
        z = F3()
        return cls([[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[F3(1) if i == j else F3() for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"

    def row(self, i):
        return self.entries[i]

    def mul_vec(self, v):
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return [
            sum((a * x for a, x in zip(r, v) if a), F3()) for r in self.entries
        ]

    def to_json(self):
        return [[x.to_json() for x in r] for r in self.entries]


def rref(m: ExactMatrix):
    """Reduced row echelon form over Q(√3); returns (rref, pivot columns)."""
    a = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots = []
    prow = 0
    for col in range(ncols):
        if prow >= nrows:
            break
        sel = next((r for r in range(prow, nrows) if a[r][col]), None)
        if sel is None:
            continue
        a[prow], a[sel] = a[sel], a[prow]
        inv = a[prow][col].inverse()
        a[prow] = [inv * x for x in a[prow]]
        for r in range(nrows):
            if r != prow and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[prow])]
        pivots.append(col)
        prow += 1
    return ExactMatrix(a), pivots


def rank(m: ExactMatrix) -> int:
    return len(rref(m)[1])


def nullspace(m: ExactMatrix):
    """Exact basis of {v : m·v = 0}; one vector per free column."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [F3()] * m.cols
        v[fc] = F3(1)
        for prow, pcol in enumerate(pivots):
            v[pcol] = -red.entries[prow][fc]
        basis.append(v)
    return basis


def determinant(m: ExactMatrix) -> F3:
    """Exact determinant over F3 by Gaussian elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of non-square matrix")
    a = [list(r) for r in m.entries]
    n = m.rows
    det = F3(1)
    for col in range(n):
        sel = next((r for r in range(col, n) if a[r][col]), None)
        if sel is None:
            return F3()
        if sel != col:
            a[col], a[sel] = a[sel], a[col]
            det = -det
        det = det * a[col][col]
        inv = a[col][col].inverse()
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def symmetric_signature(m: ExactMatrix):
    """Signature (pos, neg, zero) of a symmetric F3 matrix.

    Diagonalizes by exact congruence transformations; valid because the
    real embedding of Q(√3) orders the field.
    """
    if m.rows != m.cols:
        raise ValueError("signature of non-square matrix")
    n = m.rows
    a = [list(r) for r in m.entries]
    pos = neg = zero = 0
    for step in range(n):
        # find a nonzero diagonal entry
        sel = next((k for k in range(step, n) if a[k][k]), None)
        if sel is None:
            offd = next(
                (
                    (i, j)
                    for i in range(step, n)
                    for j in range(i + 1, n)
                    if a[i][j]
                ),
                None,
            )
            if offd is None:
                zero += n - step
                break
            i, j = offd
            # a[i][i] = a[j][j] = 0, a[i][j] ≠ 0: row/col addition makes
            # a new nonzero diagonal entry 2*a[i][j]
            for k in range(n):
                a[i][k] = a[i][k] + a[j][k]
            for k in range(n):
                a[k][i] = a[k][i] + a[k][j]
            sel = i
        if sel != step:
            a[step], a[sel] = a[sel], a[step]
            for k in range(n):
                a[k][step], a[k][sel] = a[k][sel], a[k][step]
        d = a[step][step]
        if d.is_positive():
            pos += 1
        else:
            neg += 1
        dinv = d.inverse()
        for r in range(step + 1, n):
            if a[r][step]:
                f = a[r][step] * dinv
                for k in range(n):
                    a[r][k] = a[r][k] - f * a[step][k]
        for c in range(step + 1, n):
            if a[step][c]:
                f = a[step][c] * dinv
                for k in range(n):
                    a[k][c] = a[k][c] - f * a[k][step]
    return pos, neg, zero
