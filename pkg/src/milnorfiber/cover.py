"""Chain complex of the n-fold cyclic cover of a presentation complex.

The covering map sends every generator to 1 in Z/n.  Group-ring elements
over Z/n are integer tuples of length n (entry i = coefficient of x^i);
multiplying by x^k rotates a tuple k places to the right:

>>> cyc_shift((1, 2, 3, 0), 2)
(3, 0, 1, 2)

The cover has n vertices x^i v, n edges x^i g_j per generator (oriented
from x^i v to x^{i+1} v), and n 2-cells per relator (the x^i-shifts of its
lift).  Boundaries are stored row-per-cell: d2 has one row per 2-cell and
one column per edge; d1 has one row per edge and one column per vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import snf
from .snf import AbelianGroup, IntMatrix
from .presentation import Word


def phi_degree(word, n):
    """Exponent sum of a word, reduced mod n (the class of its image loop).

    >>> phi_degree(Word([1, 2, -1, -2]), 3)
    0
    >>> phi_degree(Word([1, 2]), 3)
    2
    """
    return word.exponent_sum() % n


def cyc_shift(t, k):
    """Rotate a tuple: the action of x^k on Z[x]/(x^n - 1)."""
    n = len(t)
    k %= n
    if k == 0:
        return tuple(t)
    return tuple(t[(i - k) % n] for i in range(n))


def cyc_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def cyc_mul(a, b):
    """Cyclic convolution: the group-ring product."""
    n = len(a)
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[(i + j) % n] += x * y
    return tuple(out)


def cyc_unit(n, k=0):
    """The tuple of x^k."""
    out = [0] * n
    out[k % n] = 1
    return tuple(out)


def fox_derivative(word, gen, n):
    """Fox derivative of a word with respect to generator ``gen``, pushed
    into the group ring of Z/n (every generator maps to x).

    Satisfies d(uv) = du + x^{phi(u)} dv, d(g)/dg = 1, d(g^-1)/dg = -x^-1.

    >>> fox_derivative(Word([1, 2, -1, -2]), 1, 3)
    (1, -1, 0)
    >>> fox_derivative(Word([1, 2, -1, -2]), 2, 3)
    (-1, 1, 0)
    >>> fox_derivative(Word([1]), 2, 3)
    (0, 0, 0)
    """
    coeffs = [0] * n
    deg = 0
    for letter in word:
        if letter > 0:
            if letter == gen:
                coeffs[deg % n] += 1
            deg += 1
        else:
            deg -= 1
            if -letter == gen:
                coeffs[deg % n] -= 1
    return tuple(coeffs)


@dataclass(frozen=True)
class CoverComplex:
    """Boundary data of the n-fold cyclic cover of a presentation complex."""

    n: int
    generator_count: int
    relator_count: int
    fox_rows: tuple  # one row per relator: tuple of group-ring tuples
    d2: IntMatrix  # (n * relators) x (n * generators)
    d1: IntMatrix  # (n * generators) x n

    def chain_ok(self):
        """d1 after d2 is zero (rows are chains, so the product is d2 * d1)."""
        return (self.d2 * self.d1).is_zero()

    def euler_characteristic(self):
        return self.n * (1 - self.generator_count + self.relator_count)


def build_cover_complex(pres, modulus=None):
    """Assemble the cover's boundary matrices from a presentation.

    ``modulus`` overrides the presentation's cover degree (for studying
    the auxiliary covers with every generator sent to 1 in Z/m); every
    relator must still map to 0 mod the chosen modulus.

    >>> from . import geometry, presentation
    >>> aff = geometry.shear_to_generic(geometry.parse_arrangement("affine\\n1 0 0\\n0 1 0"))
    >>> c = build_cover_complex(presentation.arvola_randell(aff))
    >>> c.n, c.d2.shape, c.d1.shape
    (3, (3, 6), (6, 3))
    >>> c.chain_ok()
    True
    """
    n = pres.phi_modulus if modulus is None else int(modulus)
    if n < 1:
        raise ValueError("cover degree must be >= 1")
    for r in pres.relators:
        if phi_degree(r.word, n) != 0:
            raise ValueError(
                f"relator {r.word.format()!r} has exponent sum {r.word.exponent_sum()}, "
                f"not divisible by modulus {n}; no such cover exists"
            )
    G = pres.generator_count
    fox_rows = tuple(
        tuple(fox_derivative(r.word, j + 1, n) for j in range(G)) for r in pres.relators
    )
    d2_rows = []
    for row in fox_rows:
        for i in range(n):
            flat = []
            for t in row:
                flat.extend(cyc_shift(t, i))
            d2_rows.append(flat)
    d2 = IntMatrix(d2_rows, ncols=n * G)
    d1_rows = []
    for _ in range(G):
        for i in range(n):
            row = [0] * n
            row[(i + 1) % n] += 1
            row[i] -= 1
            d1_rows.append(row)
    d1 = IntMatrix(d1_rows, ncols=n)
    return CoverComplex(n, G, len(pres.relators), fox_rows, d2, d1)


@dataclass(frozen=True)
class CoverHomology:
    """H1 of the cover plus the Betti numbers used for cross-checks."""

    group: AbelianGroup
    b0: int
    b1: int
    b2: int
    betti_mod: dict  # prime -> dim of H1 over F_p
    euler: int

    def euler_ok(self):
        return self.b0 - self.b1 + self.b2 == self.euler


def h1_of_cover(complex_, primes=()):
    """H1 = ker d1 / im d2 by integer Smith reduction, plus Betti numbers
    over Q and over each requested prime field."""
    del1 = complex_.d1.transpose()  # vertices x edges, column convention
    del2 = complex_.d2.transpose()  # edges x cells
    group, rank_d1, rank_d2 = snf.quotient_with_ranks(del1, del2)
    edges = complex_.n * complex_.generator_count
    cells = complex_.n * complex_.relator_count
    b0 = complex_.n - rank_d1
    b2 = cells - rank_d2
    betti_mod = {}
    for p in sorted(set(primes)):
        rp1 = snf.rank_mod_p(complex_.d1, p)
        rp2 = snf.rank_mod_p(complex_.d2, p)
        betti_mod[p] = edges - rp1 - rp2
    return CoverHomology(
        group=group,
        b0=b0,
        b1=group.free_rank,
        b2=b2,
        betti_mod=betti_mod,
        euler=complex_.euler_characteristic(),
    )
