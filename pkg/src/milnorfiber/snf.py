"""Exact integer linear algebra for homology computations.

Smith normal form over the integers, ranks over prime fields, and the
quotient (kernel modulo image) of a pair of integer boundary matrices.
All arithmetic uses Python's arbitrary-precision integers; nothing here
is probabilistic, modular-shortcut based, or floating point.

Matrices use the column-vector convention: an ``m x n`` matrix maps
column vectors of length ``n`` to column vectors of length ``m``.

>>> smith_normal_form([[2, 4], [6, 8]]).diagonal
(2, 4)
>>> quotient(IntMatrix.zeros(1, 2), IntMatrix([[2], [0]]))
AbelianGroup(free_rank=1, torsion=(2,))
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class IntMatrix:
    """A dense integer matrix stored as a list of row lists.

    >>> m = IntMatrix([[1, 2], [3, 4]])
    >>> m.shape
    (2, 2)
    >>> m * IntMatrix.identity(2) == m
    True
    >>> IntMatrix([], ncols=3).shape
    (0, 3)
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows, ncols=None):
        rows = [[int(v) for v in row] for row in rows]
        if ncols is None:
            if not rows:
                raise ValueError("need an explicit column count for a matrix with no rows")
            ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged rows in matrix input")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = int(ncols)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)], ncols=n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def copy_rows(self):
        return [row[:] for row in self.rows]

    def transpose(self):
        return IntMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def is_zero(self):
        return all(v == 0 for row in self.rows for v in row)

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.shape} * {other.shape}")
        ot = other.transpose().rows
        prod = [
            [sum(a * b for a, b in zip(row, col)) for col in ot]
            for row in self.rows
        ]
        return IntMatrix(prod, ncols=other.ncols)

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.shape, tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        if self.nrows <= 6 and self.ncols <= 6:
            return f"IntMatrix({self.rows!r})"
        return f"IntMatrix(<{self.nrows} x {self.ncols}>)"


def as_matrix(m, ncols=None):
    """Coerce a list of rows (or an IntMatrix) to an IntMatrix."""
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix(m, ncols=ncols)


@dataclass(frozen=True)
class SmithForm:
    """Diagonal of a Smith normal form: positive, each entry divides the next.

    >>> SmithForm((2, 4)).rank
    2
    """

    diagonal: tuple

    def __post_init__(self):
        object.__setattr__(self, "diagonal", tuple(int(d) for d in self.diagonal))
        for d in self.diagonal:
            if d <= 0:
                raise ValueError("Smith diagonal entries must be positive")
        for a, b in zip(self.diagonal, self.diagonal[1:]):
            if b % a:
                raise ValueError("Smith diagonal must form a divisibility chain")

    @property
    def rank(self):
        return len(self.diagonal)


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group: free rank plus invariant factors.

    The torsion entries are the invariant factors greater than 1, each
    dividing the next.

    >>> str(AbelianGroup(2))
    'Z^2'
    >>> str(AbelianGroup(1, (2, 6)))
    'Z + Z/2 + Z/6'
    >>> str(AbelianGroup(0))
    '0'
    """

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for t in self.torsion:
            if t <= 1:
                raise ValueError("torsion invariant factors must exceed 1")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion invariant factors must form a divisibility chain")

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    @property
    def is_free(self):
        return not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Core Smith reduction engine.
#
# Reduces A in place by unimodular row and column operations.  When W is
# given it is kept equal to V^{-1}, where V is the accumulated column
# transform (A_final = U * A_input * V): every column operation on A is
# paired with the inverse row operation on W.  Rows r..n-1 of W (r = rank)
# then form a basis of the integer kernel coordinates: for y in ker(A_input),
# the coordinate vector of y in the kernel basis (columns r.. of V) is
# (W @ y)[r:].
# ---------------------------------------------------------------------------


def _min_abs_pivot(A, t, m, n):
    best = None
    for i in range(t, m):
        row = A[i]
        for j in range(t, n):
            v = row[j]
            if v:
                a = -v if v < 0 else v
                if best is None or a < best[0]:
                    best = (a, i, j)
                    if a == 1:
                        return best
    return best


def _clear_at(A, t, m, n, W):
    """Clear row t and column t outside the pivot at (t, t)."""
    while True:
        piv = A[t][t]
        restart = False
        for i in range(t + 1, m):
            if A[i][t]:
                q = A[i][t] // piv
                if q:
                    At = A[t]
                    A[i] = [a - q * b for a, b in zip(A[i], At)]
                if A[i][t]:  # positive remainder < piv: smaller pivot found
                    A[t], A[i] = A[i], A[t]
                    restart = True
                    break
        if restart:
            continue
        for j in range(t + 1, n):
            if A[t][j]:
                q = A[t][j] // piv
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                    if W is not None:
                        Wj = W[j]
                        W[t] = [a + q * b for a, b in zip(W[t], Wj)]
                if A[t][j]:
                    for row in A:
                        row[t], row[j] = row[j], row[t]
                    if W is not None:
                        W[t], W[j] = W[j], W[t]
                    restart = True
                    break
        if restart:
            continue
        return


def _smith(A, m, n, W=None):
    """In-place Smith reduction; returns the list of diagonal entries."""
    t = 0
    while True:
        found = _min_abs_pivot(A, t, m, n)
        if found is None:
            break
        _, pi, pj = found
        if pi != t:
            A[t], A[pi] = A[pi], A[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            if W is not None:
                W[t], W[pj] = W[pj], W[t]
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]
        _clear_at(A, t, m, n, W)
        t += 1
    rank = t
    # Divisibility fix-up: repair the chain, re-clearing locally each time.
    while True:
        ok = True
        for i in range(rank - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if b % a:
                ok = False
                # fold column i+1 into column i, then re-reduce the block
                for row in A:
                    row[i] += row[i + 1]
                if W is not None:
                    Wi = W[i]
                    W[i + 1] = [x - y for x, y in zip(W[i + 1], Wi)]
                if A[i][i] < 0:
                    A[i] = [-v for v in A[i]]
                _clear_at(A, i, m, n, W)
        if ok:
            break
    for i in range(rank):
        if A[i][i] < 0:
            A[i] = [-v for v in A[i]]
    return [A[i][i] for i in range(rank)]


def smith_normal_form(m, ncols=None):
    """Smith normal form of an integer matrix.

    Deterministic: the pivot is always the nonzero entry of least absolute
    value (ties broken by lowest row, then lowest column).

    >>> smith_normal_form([[2, 4], [6, 8]]).diagonal
    (2, 4)
    >>> smith_normal_form(IntMatrix.identity(3)).diagonal
    (1, 1, 1)
    >>> smith_normal_form(IntMatrix.zeros(2, 5)).diagonal
    ()
    """
    mat = as_matrix(m, ncols=ncols)
    A = mat.copy_rows()
    diag = _smith(A, mat.nrows, mat.ncols)
    return SmithForm(tuple(diag))


def _require_prime(p):
    if p < 2:
        raise ValueError(f"{p} is not prime")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"{p} is not prime")
        d += 1


def rank_mod_p(m, p, ncols=None):
    """Rank of an integer matrix over the field with p elements.

    >>> rank_mod_p([[2]], 2)
    0
    >>> rank_mod_p([[2, 4], [6, 8]], 2), rank_mod_p([[2, 4], [6, 8]], 3)
    (0, 2)
    """
    _require_prime(p)
    mat = as_matrix(m, ncols=ncols)
    A = [[v % p for v in row] for row in mat.rows]
    nrows, ncols = mat.nrows, mat.ncols
    rank = 0
    for j in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if A[i][j]:
                piv = i
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][j], -1, p)
        A[rank] = [(v * inv) % p for v in A[rank]]
        for i in range(nrows):
            if i != rank and A[i][j]:
                f = A[i][j]
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def quotient_with_ranks(d1, d2):
    """Homology of C2 --d2--> C1 --d1--> C0, plus the ranks of d1 and d2.

    Returns ``(ker d1 / im d2, rank d1, rank d2)``.  The quotient is
    computed integrally: a basis of the kernel lattice of d1 is extracted
    from the inverse column transform of d1's Smith reduction, the columns
    of d2 are rewritten in that basis (exactly, no division needed), and a
    second Smith reduction reads off the invariant factors.
    """
    d1m = as_matrix(d1)
    d2m = as_matrix(d2)
    if d1m.ncols != d2m.nrows:
        raise ValueError(f"shape mismatch: d1 is {d1m.shape}, d2 is {d2m.shape}")
    if not (d1m * d2m).is_zero():
        raise ValueError("chain condition violated: d1 * d2 != 0")
    m1 = d1m.ncols
    A = d1m.copy_rows()
    W = IntMatrix.identity(m1).copy_rows()
    diag1 = _smith(A, d1m.nrows, m1, W)
    r = len(diag1)
    # image of d2 in kernel coordinates: rows r.. of W @ d2
    d2rows = d2m.rows
    m2 = d2m.ncols
    X = []
    for i in range(r, m1):
        Wi = W[i]
        X.append([sum(Wi[k] * d2rows[k][j] for k in range(m1) if Wi[k]) for j in range(m2)])
    diag2 = _smith(X, m1 - r, m2)
    torsion = tuple(d for d in diag2 if d != 1)
    free = (m1 - r) - len(diag2)
    return AbelianGroup(free, torsion), r, len(diag2)


def quotient(d1, d2):
    """ker d1 / im d2 as an AbelianGroup (requires d1 * d2 = 0).

    >>> quotient(IntMatrix.zeros(1, 3), IntMatrix.zeros(3, 2))
    AbelianGroup(free_rank=3, torsion=())
    >>> quotient(IntMatrix.zeros(1, 2), IntMatrix([[2], [0]]))
    AbelianGroup(free_rank=1, torsion=(2,))
    """
    group, _, _ = quotient_with_ranks(d1, d2)
    return group


def prime_factors(n):
    """Sorted distinct prime factors of |n| (empty for n in {-1, 0, 1}).

    >>> prime_factors(12)
    [2, 3]
    >>> prime_factors(1)
    []
    """
    n = abs(int(n))
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def write_triplets(m):
    """Serialize a matrix in sparse triplet text: header 'nrows ncols', then
    one 'row col value' line per nonzero entry (row-major order)."""
    mat = as_matrix(m)
    lines = [f"{mat.nrows} {mat.ncols}"]
    for i, row in enumerate(mat.rows):
        for j, v in enumerate(row):
            if v:
                lines.append(f"{i} {j} {v}")
    return "\n".join(lines) + "\n"


def read_triplets(text):
    """Parse the sparse triplet text format back into an IntMatrix."""
    rows = None
    for raw in text.splitlines():
        line = raw.split("#")[0].strip()
        if not line:
            continue
        parts = line.split()
        if rows is None:
            if len(parts) != 2:
                raise ValueError("triplet header must be 'nrows ncols'")
            nrows, ncols = int(parts[0]), int(parts[1])
            rows = [[0] * ncols for _ in range(nrows)]
            continue
        if len(parts) != 3:
            raise ValueError(f"bad triplet line: {raw!r}")
        i, j, v = int(parts[0]), int(parts[1]), int(parts[2])
        rows[i][j] = v
    if rows is None:
        raise ValueError("empty triplet input")
    return IntMatrix(rows, ncols=ncols)
