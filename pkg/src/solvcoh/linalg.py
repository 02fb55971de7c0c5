"""Exact linear algebra over Q(i) and integer normal forms.

Matrices are stored as sparse rows (``dict`` column -> Scalar).  Every
elimination is Gauss-Jordan with lexicographic pivoting, so kernels, images
and particular solutions are reproducible.  A second, fraction-free
(Bareiss) rank routine exists as an independent check; setting
``CROSS_CHECK = True`` makes every elimination compare the two.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, Scalar, ScalarLike

Vector = tuple  # tuple[Scalar, ...]

CROSS_CHECK = False
cross_check_count = 0
_count_lock = threading.Lock()


class EliminationMismatch(AssertionError):
    """The two elimination strategies disagreed on a rank."""


class ScalarMatrix:
    """Immutable ``rows x cols`` matrix with sparse row storage."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable[dict] | None = None):
        self.rows = rows
        self.cols = cols
        stored = []
        for r in data if data is not None else [{} for _ in range(rows)]:
            row = {}
            for j, v in r.items():
                if not 0 <= j < cols:
                    raise ValueError(f"column index {j} outside 0..{cols - 1}")
                v = Scalar.coerce(v)
                if v:
                    row[j] = v
            stored.append(row)
        if len(stored) != rows:
            raise ValueError(f"expected {rows} rows, got {len(stored)}")
        self._data = tuple(stored)

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[ScalarLike]], cols: int | None = None) -> ScalarMatrix:
        entries = [list(r) for r in entries]
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise ValueError("ragged matrix")
        return cls(len(entries), cols, ({j: v for j, v in enumerate(r) if v} for r in entries))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]], rows: int) -> ScalarMatrix:
        data = [{} for _ in range(rows)]
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError("column length mismatch")
            for i, v in enumerate(col):
                if v:
                    data[i][j] = v
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ScalarMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> ScalarMatrix:
        return cls(n, n, ({i: ONE} for i in range(n)))

    def row(self, i: int) -> dict:
        return dict(self._data[i])

    def sparse_rows(self) -> tuple:
        return self._data

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self._data[i].get(j, ZERO)

    def to_dense(self) -> list[list[Scalar]]:
        return [[r.get(j, ZERO) for j in range(self.cols)] for r in self._data]

    def transpose(self) -> ScalarMatrix:
        data = [{} for _ in range(self.cols)]
        for i, r in enumerate(self._data):
            for j, v in r.items():
                data[j][i] = v
        return ScalarMatrix(self.cols, self.rows, data)

    def apply(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for r in self._data:
            s = ZERO
            for j, a in r.items():
                if v[j]:
                    s = s + a * v[j]
            out.append(s)
        return tuple(out)

    def __matmul__(self, other: ScalarMatrix) -> ScalarMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        data = []
        for r in self._data:
            acc: dict = {}
            for k, a in r.items():
                for j, b in other._data[k].items():
                    acc[j] = acc.get(j, ZERO) + a * b
            data.append(acc)
        return ScalarMatrix(self.rows, other.cols, data)

    def is_zero(self) -> bool:
        return not any(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._data) == (other.rows, other.cols, other._data)

    def __repr__(self) -> str:
        return f"ScalarMatrix({self.rows}x{self.cols}, nnz={sum(map(len, self._data))})"


# --------------------------------------------------------------------------
# Gauss-Jordan core

def _axpy(target: dict, factor: Scalar, src: dict) -> None:
    """target -= factor * src, in place, dropping zeros."""
    for j, v in src.items():
        nv = target.get(j, ZERO) - factor * v
        if nv:
            target[j] = nv
        else:
            target.pop(j, None)


def _rref(rows: Iterable[dict], col_order: Sequence[int], leftovers: list | None = None) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form restricted to pivots in ``col_order``.

    Returns the pivot rows (normalised, fully reduced) and their pivot
    columns, both in pivoting order.  Rows still nonzero after elimination
    but without a pivot in ``col_order`` are appended to ``leftovers``.
    """
    pending = [dict(r) for r in rows if r]
    pivot_rows: list[dict] = []
    pivot_cols: list[int] = []
    for c in col_order:
        idx = next((k for k, r in enumerate(pending) if c in r), None)
        if idx is None:
            continue
        prow = pending.pop(idx)
        inv = prow[c].inverse()
        prow = {j: v * inv for j, v in prow.items()}
        for r in pending:
            if c in r:
                _axpy(r, r[c], prow)
        for r in pivot_rows:
            if c in r:
                _axpy(r, r[c], prow)
        pending = [r for r in pending if r]
        pivot_rows.append(prow)
        pivot_cols.append(c)
    if leftovers is not None:
        leftovers.extend(pending)
    return pivot_rows, pivot_cols


def _checked_rref(m: ScalarMatrix, reverse: bool = False) -> tuple[list[dict], list[int]]:
    order = range(m.cols - 1, -1, -1) if reverse else range(m.cols)
    prows, pcols = _rref(m.sparse_rows(), order)
    if CROSS_CHECK:
        global cross_check_count
        with _count_lock:
            cross_check_count += 1
        ff = rank_fraction_free(m)
        if ff != len(pcols):
            raise EliminationMismatch(f"Gauss-Jordan rank {len(pcols)} != Bareiss rank {ff} for {m!r}")
    return prows, pcols


def rank(m: ScalarMatrix) -> int:
    return len(_checked_rref(m)[1])


def kernel_basis(m: ScalarMatrix, reverse: bool = False) -> list[Vector]:
    """Echelon basis of the null space; ``reverse`` pivots from the last column."""
    prows, pcols = _checked_rref(m, reverse)
    pivots = set(pcols)
    free = [j for j in (range(m.cols - 1, -1, -1) if reverse else range(m.cols)) if j not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * m.cols
        x[f] = ONE
        for prow, c in zip(prows, pcols):
            v = prow.get(f)
            if v:
                x[c] = -v
        basis.append(tuple(x))
    return basis


def image_basis(m: ScalarMatrix) -> list[Vector]:
    """Echelon basis of the column space (vectors of length ``m.rows``)."""
    prows, _ = _checked_rref(m.transpose())
    return [tuple(r.get(i, ZERO) for i in range(m.rows)) for r in prows]


def span_basis(vectors: Sequence[Sequence[Scalar]], length: int) -> list[Vector]:
    """Echelon basis of the span of ``vectors``."""
    m = ScalarMatrix(len(vectors), length, ({j: v for j, v in enumerate(vec) if v} for vec in vectors))
    prows, _ = _checked_rref(m)
    return [tuple(r.get(j, ZERO) for j in range(length)) for r in prows]


def span_dim(vectors: Sequence[Sequence[Scalar]], length: int) -> int:
    m = ScalarMatrix(len(vectors), length, ({j: v for j, v in enumerate(vec) if v} for vec in vectors))
    return rank(m)


def solve(m: ScalarMatrix, b: Sequence[Scalar], reverse: bool = False) -> Vector | None:
    """A particular solution of ``m x = b`` (free variables zero), or None."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    aug = m.cols
    rows = []
    for i, r in enumerate(m.sparse_rows()):
        row = dict(r)
        if b[i]:
            row[aug] = Scalar.coerce(b[i])
        rows.append(row)
    order = range(m.cols - 1, -1, -1) if reverse else range(m.cols)
    # a row left over (only the augmented entry survives) is inconsistent
    rest: list = []
    prows, pcols = _rref(rows, order, rest)
    if rest:
        return None
    x = [ZERO] * m.cols
    for prow, c in zip(prows, pcols):
        x[c] = prow.get(aug, ZERO)
    if CROSS_CHECK:
        _checked_rref(m)
    return tuple(x)


def membership(v: Sequence[Scalar], span: Sequence[Sequence[Scalar]], reverse: bool = False) -> Vector | None:
    """Coefficients expressing ``v`` in terms of ``span``, or None if outside."""
    n = len(v)
    if any(len(s) != n for s in span):
        raise ValueError("all vectors must have the same length")
    m = ScalarMatrix.from_columns(span, n)
    return solve(m, v, reverse=reverse)


# --------------------------------------------------------------------------
# fraction-free elimination (independent rank)

def _gauss_int_row(row: dict) -> dict:
    den = 1
    for v in row.values():
        den = lcm(den, v.re.denominator, v.im.denominator)
    return {j: (int(v.re * den), int(v.im * den)) for j, v in row.items()}


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gdiv_exact(a, b):
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    if re % n or im % n:
        raise EliminationMismatch("Bareiss division was not exact")
    return (re // n, im // n)


def rank_fraction_free(m: ScalarMatrix) -> int:
    """Rank by Bareiss elimination over the Gaussian integers."""
    rows = [_gauss_int_row(r) for r in m.sparse_rows() if r]
    dense = [[r.get(j, (0, 0)) for j in range(m.cols)] for r in rows]
    nrows = len(dense)
    prev = (1, 0)
    r = 0
    for c in range(m.cols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if dense[i][c] != (0, 0)), None)
        if piv is None:
            continue
        dense[r], dense[piv] = dense[piv], dense[r]
        p = dense[r][c]
        for i in range(r + 1, nrows):
            a = dense[i][c]
            for j in range(c + 1, m.cols):
                dense[i][j] = _gdiv_exact(_gsub(_gmul(p, dense[i][j]), _gmul(a, dense[r][j])), prev)
            dense[i][c] = (0, 0)
        prev = p
        r += 1
    return r


# --------------------------------------------------------------------------
# integer normal forms

IntMatrix = list  # list[list[int]]


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ a @ V == D`` and U, V unimodular.

    D is diagonal, non-negative, and each diagonal entry divides the next.
    """
    A = [[int(x) for x in row] for row in a]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        for M in (A, U):
            M[dst] = [x + q * y for x, y in zip(M[dst], M[src])]

    def add_col(dst, src, q):
        for M in (A, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            nonzero = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return U, A, V


def int_matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)] for i in range(len(a))]


@dataclass(frozen=True)
class IntegerLattice:
    """Subgroup of Z^ambient_rank generated by integer vectors."""

    ambient_rank: int
    generators: tuple = ()

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        for g in gens:
            if len(g) != self.ambient_rank:
                raise ValueError(f"generator {g} has length {len(g)}, expected {self.ambient_rank}")
        object.__setattr__(self, "generators", gens)
        m = self.ambient_rank
        k = len(gens)
        if k:
            cols = [[gens[j][i] for j in range(k)] for i in range(m)]
            U, D, _ = smith_normal_form(cols)
            diag = [D[i][i] if i < k else 0 for i in range(m)]
        else:
            U, diag = _identity(m), [0] * m
        object.__setattr__(self, "_U", U)
        object.__setattr__(self, "_diag", tuple(diag))

    @property
    def invariant_factors(self) -> tuple:
        return tuple(d for d in self._diag if d)

    def _transform(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.ambient_rank:
            raise ValueError(f"vector of length {len(v)} for lattice of ambient rank {self.ambient_rank}")
        return [sum(u * int(x) for u, x in zip(row, v)) for row in self._U]

    def contains(self, v: Sequence[int]) -> bool:
        w = self._transform(v)
        return all((x % d == 0) if d else x == 0 for x, d in zip(w, self._diag))

    def reduce_key(self, v: Sequence[int]) -> tuple:
        """Invariant of the coset ``v + L``: equal keys iff equal cosets."""
        w = self._transform(v)
        return tuple((x % d) if d else x for x, d in zip(w, self._diag))


def lattice_contains(lattice: IntegerLattice, v: Sequence[int]) -> bool:
    return lattice.contains(v)


def as_fraction_vector(values: Iterable) -> tuple:
    return tuple(Fraction(x) for x in values)
